#include "polyaxis/validity.hpp"

#include <cassert>
#include <numeric>

namespace polyaxis {

CandidateWord CandidateWord::make(int n, std::vector<int> steps) {
  if (n < 3) throw invalid_polygon("n must be at least 3");
  if (static_cast<int>(steps.size()) != n)
    throw invalid_polygon("word length must equal n");
  for (int e : steps)
    if (e < 1 || e > n - 1) throw invalid_polygon("bad step range");
  return CandidateWord{n, std::move(steps)};
}

AlternatingPair AlternatingPair::make(int n, int a, int b) {
  if (n <= 3 || n % 2 != 0) throw invalid_polygon("n must be even and > 3");
  if (!(1 <= a && a < b && b <= n - 1))
    throw invalid_polygon("need 1 <= a < b <= n-1");
  return AlternatingPair{n, a, b};
}

std::vector<std::int64_t> partial_sums(const CandidateWord& w) {
  std::vector<std::int64_t> sums(w.n);
  std::int64_t s = 0;
  for (int i = 0; i < w.n; ++i) {
    s += w.steps[i];
    sums[i] = s;
  }
  return sums;
}

bool is_valid_edge_word(const CandidateWord& w) {
  std::vector<bool> seen(w.n, false);
  seen[0] = true;
  int s = 0;
  for (int i = 0; i < w.n - 1; ++i) {
    s = (s + w.steps[i]) % w.n;
    if (seen[s]) return false;  // zero or repeated residue: closes early
    seen[s] = true;
  }
  return (s + w.steps[w.n - 1]) % w.n == 0;
}

CandidateWord alternating_word(const AlternatingPair& p) {
  std::vector<int> steps(p.n);
  for (int i = 0; i < p.n; ++i) steps[i] = i % 2 == 0 ? p.a : p.b;
  return CandidateWord{p.n, std::move(steps)};
}

bool induces_polygon(const AlternatingPair& p) {
  bool admissible = p.a % 2 == 1 && p.b % 2 == 1 &&
                    std::gcd(p.a + p.b, p.n) == 2;
  assert(admissible == is_valid_edge_word(alternating_word(p)));
  return admissible;
}

int revolutions(const EdgeWord& w) {
  std::int64_t total = 0;
  for (int e : w.steps) total += e;
  assert(total % w.n == 0);
  return static_cast<int>(total / w.n);
}

}  // namespace polyaxis
