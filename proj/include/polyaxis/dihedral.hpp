#pragma once

#include <cstdint>
#include <vector>

#include "polyaxis/polygon.hpp"

// Dihedral group of order 2n acting on the vertex set {0..n-1}:
// rotations k -> k+c and reflections k -> j-k (mod n). Polygons are
// unoriented, unbased figures, so on edge words the group shows up as
//
//   rotation            : same cyclic word, shifted reading start
//   direction reversal  : reversal plus termwise complement (e -> n-e)
//   reflection          : termwise complement, order preserved
//
// Canonical keys take the lexicographic minimum over the whole reading
// orbit: 2n words (n starts x 2 directions) for Equivalent, those plus
// their termwise complements for Similar.

namespace polyaxis {

struct DihedralElement {
  int shift = 0;        // k -> shift + k, or shift - k when reflect
  bool reflect = false;

  int apply(int k, int n) const {
    int v = reflect ? shift - k : shift + k;
    return ((v % n) + n) % n;
  }

  static DihedralElement identity() { return {}; }
  static DihedralElement rotation(int c) { return {c, false}; }
  static DihedralElement reflection(int j) { return {j, true}; }

  // Function composition: (this o rhs)(k) = this(rhs(k)).
  DihedralElement compose(const DihedralElement& rhs, int n) const {
    DihedralElement g;
    g.reflect = reflect != rhs.reflect;
    int s = reflect ? shift - rhs.shift : shift + rhs.shift;
    g.shift = ((s % n) + n) % n;
    return g;
  }

  bool operator==(const DihedralElement&) const = default;
};

std::vector<DihedralElement> all_dihedral_elements(int n);

ChordSet act(const DihedralElement& g, const ChordSet& x);

struct SymmetryProfile {
  int axes = 0;            // number of reflections fixing the figure
  int rotation_order = 1;  // number of rotations fixing it; divides n

  bool operator==(const SymmetryProfile&) const = default;
};

SymmetryProfile symmetry_profile(const ChordSet& x);

struct CanonicalKey {
  Relation relation = Relation::Equivalent;
  std::vector<int> word;  // lexicographically least edge word of the orbit

  bool operator==(const CanonicalKey&) const = default;
  bool operator<(const CanonicalKey& rhs) const { return word < rhs.word; }
};

CanonicalKey canonical_key(const ChordSet& x, Relation relation);
CanonicalKey canonical_key(const EdgeWord& w, Relation relation);

// Allocation-free variant for enumeration loops, n <= 16: returns the
// canonical word packed 4 bits per letter, letter i at bits [4i, 4i+4).
// Agrees with canonical_key by construction (same orbit enumeration);
// the property tests check that anyway.
std::uint64_t canonical_key_packed(const std::uint8_t* steps, int n,
                                   Relation relation);

std::uint64_t pack_word(const std::vector<int>& word);
std::vector<int> unpack_word(std::uint64_t key, int n);

}  // namespace polyaxis
