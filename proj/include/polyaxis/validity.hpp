#pragma once

#include <cstdint>
#include <vector>

#include "polyaxis/polygon.hpp"

// Which step patterns close into a genuine n-polygon. A candidate word is
// valid exactly when its partial sums s_1..s_{n-1} are distinct and nonzero
// mod n while s_n is a multiple of n; the quotient s_n / n is the number of
// revolutions the closed path makes around the circle.
//
// For alternating words (a, b, a, b, ...) of even length this reduces to an
// arithmetic test: both steps odd and gcd(a+b, n) = 2.

namespace polyaxis {

struct CandidateWord {
  int n = 0;
  std::vector<int> steps;  // length n, each in [1, n-1]; not yet validated

  static CandidateWord make(int n, std::vector<int> steps);
};

struct AlternatingPair {
  int n = 0;  // even, > 3
  int a = 0;
  int b = 0;  // 1 <= a < b <= n-1

  static AlternatingPair make(int n, int a, int b);

  int m() const { return n / 2; }
  bool sum_even() const { return (a + b) % 2 == 0; }
  // Revolutions of the induced word; meaningful only when a+b is even.
  int u() const { return (a + b) / 2; }
};

// Plain cumulative sums s_1..s_n, no modular reduction.
std::vector<std::int64_t> partial_sums(const CandidateWord& w);

bool is_valid_edge_word(const CandidateWord& w);

CandidateWord alternating_word(const AlternatingPair& p);

// Arithmetic admissibility test: a, b odd and gcd(a+b, n) = 2
// (equivalently gcd(u, n/2) = 1). Agrees with the direct partial-sum
// check of the alternating word on every input.
bool induces_polygon(const AlternatingPair& p);

int revolutions(const EdgeWord& w);

}  // namespace polyaxis
