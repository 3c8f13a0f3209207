#include "polyaxis/families.hpp"

#include <cassert>
#include <numeric>
#include <stdexcept>

namespace polyaxis {

std::vector<int> admissible_u_values(int m) {
  if (m < 2) throw std::invalid_argument("admissible_u_values: m must be >= 2");
  std::vector<int> out;
  for (int u = 1; u < m; ++u)
    if (std::gcd(u, m) == 1) out.push_back(u);
  return out;
}

std::vector<std::pair<int, int>> pairs_for_u(int n, int u) {
  if (n <= 3 || n % 2 != 0)
    throw std::invalid_argument("pairs_for_u: n must be even and > 3");
  if (u < 1 || u >= n / 2)
    throw std::invalid_argument("pairs_for_u: need 1 <= u < n/2");
  std::vector<std::pair<int, int>> pairs;
  for (int a = 1; a < u; a += 2) {
    int b = 2 * u - a;
    if (b > n - 1) continue;  // b shrinks as a grows, so only a prefix fails
    pairs.emplace_back(a, b);
  }
  return pairs;
}

std::int64_t count_m_symmetric(int n) {
  if (n < 4 || n % 2 != 0)
    throw std::invalid_argument("count_m_symmetric: n must be even and >= 4");
  std::int64_t total = 0;
  int m = n / 2;
  for (int u = 1; u < m; ++u) {
    if (std::gcd(u, m) != 1) continue;
    total += u % 2 == 0 ? u / 2 : (u - 1) / 2;
  }
  return total;
}

PairFamily enumerate_representatives(int n) {
  if (n < 4 || n % 2 != 0)
    throw std::invalid_argument(
        "enumerate_representatives: n must be even and >= 4");
  PairFamily family;
  family.n = n;
  family.m = n / 2;
  for (int u : admissible_u_values(family.m)) {
    for (auto [a, b] : pairs_for_u(n, u)) {
      auto word = alternating_word(AlternatingPair::make(n, a, b));
      assert(is_valid_edge_word(word));
      family.entries.push_back(
          {u, a, b, EdgeWord::from_steps(n, std::move(word.steps))});
    }
  }
  assert(static_cast<std::int64_t>(family.entries.size()) ==
         count_m_symmetric(n));
  return family;
}

bool is_prime(std::int64_t N) {
  if (N < 2) return false;
  for (std::int64_t d = 2; d * d <= N; ++d)
    if (N % d == 0) return false;
  return true;
}

bool is_perfect(std::int64_t N) {
  if (N < 1) throw std::invalid_argument("is_perfect: N must be positive");
  std::int64_t sigma = 0;
  for (std::int64_t d = 1; d * d <= N; ++d) {
    if (N % d != 0) continue;
    sigma += d;
    if (d != N / d) sigma += N / d;
  }
  return sigma == 2 * N;
}

PowerOfTwoCount closed_form_power_of_two(int k) {
  if (k < 3) throw std::invalid_argument("closed_form_power_of_two: k >= 3");
  if (k > 33) throw std::invalid_argument("closed_form_power_of_two: k too large");
  PowerOfTwoCount r;
  r.mersenne = (std::int64_t{1} << (k - 2)) - 1;
  r.count = (std::int64_t{1} << (k - 3)) * r.mersenne;
  r.is_perfect = is_prime(r.mersenne);
  return r;
}

std::int64_t closed_form_twice_prime(int p) {
  if (p < 3 || !is_prime(p))
    throw std::invalid_argument("closed_form_twice_prime: p must be an odd prime");
  std::int64_t half = (p - 1) / 2;
  return half * half;
}

std::int64_t closed_form_2k_p(int k, int p) {
  if (k <= 1) throw std::invalid_argument("closed_form_2k_p: k must be > 1");
  if (p < 3 || !is_prime(p))
    throw std::invalid_argument("closed_form_2k_p: p must be an odd prime");
  std::int64_t n = (std::int64_t{1} << k) * p;
  return (n - 4) * (n - (std::int64_t{1} << k)) / 32;
}

}  // namespace polyaxis
