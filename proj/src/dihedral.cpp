#include "polyaxis/dihedral.hpp"

#include <algorithm>
#include <cassert>

namespace polyaxis {

std::vector<DihedralElement> all_dihedral_elements(int n) {
  std::vector<DihedralElement> out;
  out.reserve(2 * n);
  for (int c = 0; c < n; ++c) out.push_back(DihedralElement::rotation(c));
  for (int j = 0; j < n; ++j) out.push_back(DihedralElement::reflection(j));
  return out;
}

namespace {

std::vector<std::pair<int, int>> apply_sorted(const DihedralElement& g,
                                              const ChordSet& x) {
  std::vector<std::pair<int, int>> mapped(x.chords.size());
  for (size_t i = 0; i < x.chords.size(); ++i) {
    int p = g.apply(x.chords[i].first, x.n);
    int q = g.apply(x.chords[i].second, x.n);
    mapped[i] = {std::min(p, q), std::max(p, q)};
  }
  std::sort(mapped.begin(), mapped.end());
  return mapped;
}

}  // namespace

ChordSet act(const DihedralElement& g, const ChordSet& x) {
  return ChordSet::from_chords(x.n, apply_sorted(g, x));
}

SymmetryProfile symmetry_profile(const ChordSet& x) {
  SymmetryProfile p;
  p.axes = 0;
  p.rotation_order = 0;
  for (int c = 0; c < x.n; ++c) {
    if (apply_sorted(DihedralElement::rotation(c), x) == x.chords)
      ++p.rotation_order;
  }
  for (int j = 0; j < x.n; ++j) {
    if (apply_sorted(DihedralElement::reflection(j), x) == x.chords)
      ++p.axes;
  }
  return p;
}

namespace {

// The orbit readings of a word under start shifts and the two symmetries:
// reverse-complement (direction reversal) and complement (reflection).
constexpr int kMaxPacked = 16;

void reverse_complement(const std::uint8_t* w, int n, std::uint8_t* out) {
  for (int i = 0; i < n; ++i) out[i] = static_cast<std::uint8_t>(n - w[n - 1 - i]);
}

void complement(const std::uint8_t* w, int n, std::uint8_t* out) {
  for (int i = 0; i < n; ++i) out[i] = static_cast<std::uint8_t>(n - w[i]);
}

void reverse_copy(const std::uint8_t* w, int n, std::uint8_t* out) {
  for (int i = 0; i < n; ++i) out[i] = w[n - 1 - i];
}

// Folds every rotation of v into the running minimum.
void min_over_starts(const std::uint8_t* v, int n, std::uint8_t* best,
                     bool& have_best) {
  for (int s = 0; s < n; ++s) {
    if (!have_best) {
      for (int i = 0; i < n; ++i) best[i] = v[(s + i) % n];
      have_best = true;
      continue;
    }
    int cmp = 0;
    for (int i = 0; i < n; ++i) {
      std::uint8_t c = v[s + i >= n ? s + i - n : s + i];
      if (c != best[i]) {
        cmp = c < best[i] ? -1 : 1;
        break;
      }
    }
    if (cmp < 0) {
      for (int i = 0; i < n; ++i) best[i] = v[s + i >= n ? s + i - n : s + i];
    }
  }
}

void canonical_into(const std::uint8_t* steps, int n, Relation relation,
                    std::uint8_t* best) {
  std::uint8_t buf[kMaxPacked];
  bool have_best = false;
  min_over_starts(steps, n, best, have_best);
  reverse_complement(steps, n, buf);
  min_over_starts(buf, n, best, have_best);
  if (relation == Relation::Similar) {
    complement(steps, n, buf);
    min_over_starts(buf, n, best, have_best);
    reverse_copy(steps, n, buf);
    min_over_starts(buf, n, best, have_best);
  }
}

std::vector<int> canonical_word(const std::vector<int>& steps, int n,
                                Relation relation) {
  // Same orbit enumeration as the packed path but on plain vectors,
  // with no size cap.
  auto fold = [&](const std::vector<int>& v, std::vector<int>& best) {
    for (int s = 0; s < n; ++s) {
      bool smaller = best.empty();
      for (int i = 0; i < n && !smaller; ++i) {
        int c = v[(s + i) % n];
        if (c != best[i]) {
          if (c > best[i]) break;
          smaller = true;
        }
      }
      if (smaller) {
        best.resize(n);
        for (int i = 0; i < n; ++i) best[i] = v[(s + i) % n];
      }
    }
  };

  std::vector<int> best;
  std::vector<int> buf(n);
  fold(steps, best);
  for (int i = 0; i < n; ++i) buf[i] = n - steps[n - 1 - i];  // revcomp
  fold(buf, best);
  if (relation == Relation::Similar) {
    for (int i = 0; i < n; ++i) buf[i] = n - steps[i];  // complement
    fold(buf, best);
    for (int i = 0; i < n; ++i) buf[i] = steps[n - 1 - i];  // reverse
    fold(buf, best);
  }
  return best;
}

}  // namespace

CanonicalKey canonical_key(const EdgeWord& w, Relation relation) {
  CanonicalKey key;
  key.relation = relation;
  key.word = canonical_word(w.steps, w.n, relation);
  return key;
}

CanonicalKey canonical_key(const ChordSet& x, Relation relation) {
  return canonical_key(edge_word_from_vertex_cycle(walk_cycle(x)), relation);
}

std::uint64_t canonical_key_packed(const std::uint8_t* steps, int n,
                                   Relation relation) {
  assert(n >= 3 && n <= kMaxPacked);
  std::uint8_t best[kMaxPacked];
  canonical_into(steps, n, relation, best);
  std::uint64_t key = 0;
  for (int i = n - 1; i >= 0; --i) key = (key << 4) | (best[i] & 0xF);
  return key;
}

std::uint64_t pack_word(const std::vector<int>& word) {
  assert(word.size() <= kMaxPacked);
  std::uint64_t key = 0;
  for (int i = static_cast<int>(word.size()) - 1; i >= 0; --i)
    key = (key << 4) | (static_cast<std::uint64_t>(word[i]) & 0xF);
  return key;
}

std::vector<int> unpack_word(std::uint64_t key, int n) {
  // Letters are in [1, n-1] with n <= 16, so each fits a nibble exactly.
  std::vector<int> word(n);
  for (int i = 0; i < n; ++i)
    word[i] = static_cast<int>((key >> (4 * i)) & 0xF);
  return word;
}

}  // namespace polyaxis
