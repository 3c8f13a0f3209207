#include "polyaxis/census.hpp"

#include <stdexcept>

namespace polyaxis {

int euler_phi(int n) {
  if (n < 1) throw std::invalid_argument("euler_phi: n must be positive");
  int result = n;
  int rest = n;
  for (int p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    result -= result / p;
  }
  if (rest > 1) result -= result / rest;
  return result;
}

std::vector<int> divisors(int n) {
  if (n < 1) throw std::invalid_argument("divisors: n must be positive");
  std::vector<int> small, large;
  for (int d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

namespace {

// Shared divisor sum: sum over d | n of phi(n/d)^2 * d! * (n/d)^d.
BigCount divisor_sum_term(int n) {
  BigCount sum = 0;
  for (int d : divisors(n)) {
    BigCount fact, pw;
    mpz_fac_ui(fact.get_mpz_t(), d);
    mpz_ui_pow_ui(pw.get_mpz_t(), n / d, d);
    long phi = euler_phi(n / d);
    sum += phi * phi * fact * pw;
  }
  return sum;
}

BigCount exact_divide(const BigCount& numerator, long denominator) {
  BigCount q, r;
  mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), numerator.get_mpz_t(),
                 denominator);
  if (r != 0)
    throw std::logic_error("class-count formula produced a non-integer");
  return q;
}

BigCount two_pow_half(int n) {
  BigCount p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, n / 2);
  return p;
}

BigCount half_factorial(int half) {
  BigCount f;
  mpz_fac_ui(f.get_mpz_t(), half);
  return f;
}

}  // namespace

BigCount count_equivalence_classes(int n) {
  if (n < 3) throw std::invalid_argument("class counts need n >= 3");
  BigCount total = divisor_sum_term(n);
  if (n % 2 == 0)
    total += two_pow_half(n) * (n / 2) * half_factorial(n / 2);
  return exact_divide(total, 2L * n * n);
}

BigCount count_similarity_classes(int n) {
  if (n < 3) throw std::invalid_argument("class counts need n >= 3");
  BigCount total = divisor_sum_term(n);
  if (n % 2 == 0) {
    // n(n+6)/4 is integral for even n.
    total += two_pow_half(n) * (static_cast<long>(n) * (n + 6) / 4) *
             half_factorial(n / 2);
  } else {
    BigCount p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, (n - 1) / 2);
    total += p * (static_cast<long>(n) * n) * half_factorial((n - 1) / 2);
  }
  return exact_divide(total, 4L * n * n);
}

}  // namespace polyaxis
