#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

// Core representations of an n-polygon: a Hamiltonian cycle through n
// equally spaced circle vertices 0..n-1. Three interchangeable views:
//
//   EdgeWord    - the n counterclockwise step lengths read along the cycle
//   VertexCycle - the visiting order of the vertices, based at vertex 0
//   ChordSet    - the set of n chords, the polygon as a plain figure
//
// Step length e means "advance e vertices counterclockwise", so a word is a
// genuine polygon exactly when its partial sums visit n distinct residues
// and return to 0 only at the end.

namespace polyaxis {

enum class Relation {
  Equivalent,  // same figure up to rotation
  Similar,     // same figure up to rotation or reflection
};

class invalid_polygon : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct EdgeWord {
  int n = 0;
  std::vector<int> steps;  // length n, each in [1, n-1]

  // Validates the full edge-word contract: step range, distinct nonzero
  // partial sums mod n, closure exactly at step n. Throws invalid_polygon
  // with "bad step range" / "premature closure" / "no closure".
  static EdgeWord from_steps(int n, std::vector<int> steps);

  bool operator==(const EdgeWord&) const = default;
};

struct VertexCycle {
  int n = 0;
  std::vector<int> order;  // permutation of 0..n-1 with order[0] == 0

  // Accepts any rotation of a permutation cycle and normalizes it to start
  // at vertex 0. Throws invalid_polygon if not a permutation.
  static VertexCycle from_order(int n, std::vector<int> order);

  bool operator==(const VertexCycle&) const = default;
};

struct ChordSet {
  int n = 0;
  // Sorted list of (low, high) vertex pairs; structural comparison.
  std::vector<std::pair<int, int>> chords;

  // Validates 2-regularity and single-cycle connectivity.
  static ChordSet from_chords(int n, std::vector<std::pair<int, int>> chords);

  bool operator==(const ChordSet&) const = default;
  bool operator<(const ChordSet& rhs) const { return chords < rhs.chords; }
};

VertexCycle vertex_cycle_from_edge_word(const EdgeWord& w);
EdgeWord edge_word_from_vertex_cycle(const VertexCycle& c);

ChordSet chord_set(const VertexCycle& c);

// Reads a ChordSet back into a based cycle: starts at vertex 0 and walks
// toward the smaller neighbor. Any reading is equivalent for key purposes.
VertexCycle walk_cycle(const ChordSet& x);

}  // namespace polyaxis
