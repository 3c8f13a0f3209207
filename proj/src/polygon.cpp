#include "polyaxis/polygon.hpp"

#include <algorithm>
#include <numeric>

namespace polyaxis {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw invalid_polygon(msg);
}

}  // namespace

EdgeWord EdgeWord::from_steps(int n, std::vector<int> steps) {
  require(n >= 3, "n must be at least 3");
  require(static_cast<int>(steps.size()) == n, "word length must equal n");
  for (int e : steps) require(e >= 1 && e <= n - 1, "bad step range");

  // Partial sums mod n must hit n distinct residues, with 0 reached
  // exactly at the end.
  std::vector<bool> seen(n, false);
  seen[0] = true;
  int s = 0;
  for (int i = 0; i < n - 1; ++i) {
    s = (s + steps[i]) % n;
    require(!seen[s], "premature closure");
    seen[s] = true;
  }
  s = (s + steps[n - 1]) % n;
  require(s == 0, "no closure");

  EdgeWord w;
  w.n = n;
  w.steps = std::move(steps);
  return w;
}

VertexCycle VertexCycle::from_order(int n, std::vector<int> order) {
  require(n >= 3, "n must be at least 3");
  require(static_cast<int>(order.size()) == n, "cycle length must equal n");
  std::vector<bool> seen(n, false);
  for (int v : order) {
    require(v >= 0 && v < n, "vertex out of range");
    require(!seen[v], "repeated vertex");
    seen[v] = true;
  }
  auto zero = std::find(order.begin(), order.end(), 0);
  std::rotate(order.begin(), zero, order.end());

  VertexCycle c;
  c.n = n;
  c.order = std::move(order);
  return c;
}

ChordSet ChordSet::from_chords(int n, std::vector<std::pair<int, int>> chords) {
  require(n >= 3, "n must be at least 3");
  require(static_cast<int>(chords.size()) == n, "chord count must equal n");

  std::vector<std::vector<int>> adj(n);
  for (auto& [p, q] : chords) {
    if (p > q) std::swap(p, q);
    require(p >= 0 && q < n && p != q, "bad chord");
    adj[p].push_back(q);
    adj[q].push_back(p);
  }
  for (int v = 0; v < n; ++v)
    require(adj[v].size() == 2, "vertex degree must be 2");

  // Single cycle: walking from 0 must visit all n vertices.
  int prev = 0, cur = adj[0][0], visited = 1;
  while (cur != 0) {
    int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
    prev = cur;
    cur = next;
    ++visited;
    require(visited <= n, "chords do not form a single cycle");
  }
  require(visited == n, "chords do not form a single cycle");

  std::sort(chords.begin(), chords.end());
  require(std::adjacent_find(chords.begin(), chords.end()) == chords.end(),
          "duplicate chord");

  ChordSet x;
  x.n = n;
  x.chords = std::move(chords);
  return x;
}

VertexCycle vertex_cycle_from_edge_word(const EdgeWord& w) {
  std::vector<int> order(w.n);
  int s = 0;
  for (int i = 1; i < w.n; ++i) {
    s = (s + w.steps[i - 1]) % w.n;
    order[i] = s;
  }
  return VertexCycle::from_order(w.n, std::move(order));
}

EdgeWord edge_word_from_vertex_cycle(const VertexCycle& c) {
  std::vector<int> steps(c.n);
  for (int i = 0; i < c.n; ++i) {
    int from = c.order[i];
    int to = c.order[(i + 1) % c.n];
    steps[i] = ((to - from) % c.n + c.n) % c.n;
  }
  return EdgeWord::from_steps(c.n, std::move(steps));
}

ChordSet chord_set(const VertexCycle& c) {
  std::vector<std::pair<int, int>> chords(c.n);
  for (int i = 0; i < c.n; ++i) {
    int p = c.order[i];
    int q = c.order[(i + 1) % c.n];
    chords[i] = {std::min(p, q), std::max(p, q)};
  }
  return ChordSet::from_chords(c.n, std::move(chords));
}

VertexCycle walk_cycle(const ChordSet& x) {
  std::vector<std::vector<int>> adj(x.n);
  for (auto& [p, q] : x.chords) {
    adj[p].push_back(q);
    adj[q].push_back(p);
  }
  std::vector<int> order;
  order.reserve(x.n);
  order.push_back(0);
  int prev = 0, cur = std::min(adj[0][0], adj[0][1]);
  while (cur != 0) {
    order.push_back(cur);
    int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
    prev = cur;
    cur = next;
  }
  return VertexCycle::from_order(x.n, std::move(order));
}

}  // namespace polyaxis
