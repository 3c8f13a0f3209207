#pragma once

#include <cstdint>
#include <vector>

#include "polyaxis/polygon.hpp"
#include "polyaxis/validity.hpp"

// The half-turn-symmetric families: for even n = 2m, the polygons with
// exactly m reflection axes are exactly the alternating words (a, b, a, b,
// ...) with a < b both odd and u = (a+b)/2 coprime to m. Counting pairs per
// admissible u gives the closed-form class counts, including the
// perfect-number family at n = 2^k.
//
// Only u < m is enumerated: pairs with u' = n - u produce the termwise
// complement (mirror) figures of pairs with u, hence the same classes.

namespace polyaxis {

struct FamilyEntry {
  int u = 0;
  int a = 0;
  int b = 0;
  EdgeWord word;  // the alternating representative (a, b, a, b, ...)
};

struct PairFamily {
  int n = 0;
  int m = 0;  // n / 2
  std::vector<FamilyEntry> entries;  // sorted by (u, a); no duplicates
};

// All u in [1, m-1] coprime to m, ascending.
std::vector<int> admissible_u_values(int m);

// All odd pairs a < b with a + b = 2u and b <= n - 1:
// (1, 2u-1), (3, 2u-3), ... - u/2 pairs for even u, (u-1)/2 for odd u.
std::vector<std::pair<int, int>> pairs_for_u(int n, int u);

// Number of classes of n-polygons with exactly n/2 axes, for even n >= 4.
// The n = 4 case is the documented formula blind spot: this returns 0
// while brute force finds one class (the crossed square, which is not an
// alternating word).
std::int64_t count_m_symmetric(int n);

// One entry per class, each carrying its alternating edge word.
PairFamily enumerate_representatives(int n);

struct PowerOfTwoCount {
  std::int64_t count = 0;     // 2^{k-3} * (2^{k-2} - 1)
  std::int64_t mersenne = 0;  // 2^{k-2} - 1
  bool is_perfect = false;    // count is a perfect number
};

// Closed form for n = 2^k, k >= 3. The count is perfect exactly when the
// mersenne factor is prime.
PowerOfTwoCount closed_form_power_of_two(int k);

// Closed form ((p-1)/2)^2 for n = 2p, p an odd prime.
std::int64_t closed_form_twice_prime(int p);

// Closed form (n-4)(n-2^k)/32 for n = 2^k * p, k > 1, p an odd prime.
std::int64_t closed_form_2k_p(int k, int p);

// Divisor-sum test: sigma(N) == 2N, by trial division.
bool is_perfect(std::int64_t N);

bool is_prime(std::int64_t N);

}  // namespace polyaxis
