#pragma once

#include <gmpxx.h>

#include <vector>

// Exact class counts over all n-polygons: the number of rotation classes
// and of rotation-or-reflection classes, via the divisor-sum formulas with
// an enforced exact-division check. Everything is arbitrary precision;
// factorials dominate and overflow fixed width already around n = 20.

namespace polyaxis {

using BigCount = mpz_class;

int euler_phi(int n);

std::vector<int> divisors(int n);

// Rotation classes of all n-polygons, n >= 3.
BigCount count_equivalence_classes(int n);

// Rotation-or-reflection classes of all n-polygons, n >= 3.
BigCount count_similarity_classes(int n);

}  // namespace polyaxis
