#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <numeric>
#include <vector>

#include "polyaxis/polygon.hpp"
#include "polyaxis/validity.hpp"

using namespace polyaxis;

TEST_CASE("partial sums") {
  CHECK(partial_sums(CandidateWord::make(6, {1, 3, 1, 3, 1, 3})) ==
        std::vector<std::int64_t>{1, 4, 5, 8, 9, 12});
  CHECK(partial_sums(CandidateWord::make(4, {1, 1, 1, 1})) ==
        std::vector<std::int64_t>{1, 2, 3, 4});
  // The alternating word always sums to (n/2)(a+b).
  for (int n : {6, 10, 16, 30}) {
    for (int a = 1; a + 2 <= n - 1; a += 2) {
      auto p = AlternatingPair::make(n, a, a + 2);
      CHECK(partial_sums(alternating_word(p)).back() ==
            std::int64_t{n} / 2 * (p.a + p.b));
    }
  }
}

TEST_CASE("direct edge-word validity") {
  CHECK(is_valid_edge_word(CandidateWord::make(6, {1, 3, 1, 3, 1, 3})));
  CHECK_FALSE(is_valid_edge_word(CandidateWord::make(6, {2, 4, 2, 4, 2, 4})));
  CHECK_FALSE(is_valid_edge_word(CandidateWord::make(6, {1, 5, 1, 5, 1, 5})));
  CHECK(is_valid_edge_word(CandidateWord::make(6, {1, 2, 1, 4, 3, 1})));
  CHECK_FALSE(is_valid_edge_word(CandidateWord::make(6, {1, 1, 1, 1, 1, 2})));
}

TEST_CASE("validity agrees with edge-word construction") {
  // Exhaustive over every step tuple for small n.
  for (int n = 3; n <= 6; ++n) {
    std::vector<int> steps(n, 1);
    while (true) {
      bool constructed = true;
      try {
        EdgeWord::from_steps(n, steps);
      } catch (const invalid_polygon&) {
        constructed = false;
      }
      CHECK(is_valid_edge_word(CandidateWord::make(n, steps)) == constructed);

      int i = n - 1;
      while (i >= 0 && steps[i] == n - 1) steps[i--] = 1;
      if (i < 0) break;
      ++steps[i];
    }
  }
}

TEST_CASE("alternating word construction") {
  auto w30 = alternating_word(AlternatingPair::make(30, 1, 3));
  REQUIRE(w30.steps.size() == 30);
  for (int i = 0; i < 30; ++i) CHECK(w30.steps[i] == (i % 2 ? 3 : 1));

  CHECK(alternating_word(AlternatingPair::make(4, 1, 3)).steps ==
        std::vector<int>{1, 3, 1, 3});

  auto w16 = alternating_word(AlternatingPair::make(16, 3, 13));
  REQUIRE(w16.steps.size() == 16);
  CHECK(w16.steps[14] == 3);
  CHECK(w16.steps[15] == 13);
  // Well-formed as a word, but u = 8 shares a factor with m = 8.
  CHECK_FALSE(induces_polygon(AlternatingPair::make(16, 3, 13)));
}

TEST_CASE("pair validation") {
  CHECK_THROWS_AS(AlternatingPair::make(5, 1, 3), std::invalid_argument);
  CHECK_THROWS_AS(AlternatingPair::make(2, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(AlternatingPair::make(6, 3, 3), std::invalid_argument);
  CHECK_THROWS_AS(AlternatingPair::make(6, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(AlternatingPair::make(6, 0, 3), std::invalid_argument);
  CHECK_THROWS_AS(AlternatingPair::make(6, 1, 6), std::invalid_argument);
}

TEST_CASE("admissibility predicate") {
  CHECK(induces_polygon(AlternatingPair::make(30, 1, 13)));
  CHECK_FALSE(induces_polygon(AlternatingPair::make(6, 2, 4)));
  CHECK_FALSE(induces_polygon(AlternatingPair::make(6, 1, 5)));
}

TEST_CASE("admissibility biconditional sweep") {
  // The arithmetic predicate must equal the partial-sum check everywhere.
  long long cases = 0;
  for (int n = 6; n <= 200; n += 2) {
    for (int a = 1; a < n - 1; ++a) {
      for (int b = a + 1; b <= n - 1; ++b) {
        auto p = AlternatingPair::make(n, a, b);
        bool direct = is_valid_edge_word(alternating_word(p));
        if (induces_polygon(p) != direct) {
          CAPTURE(n);
          CAPTURE(a);
          CAPTURE(b);
          REQUIRE(induces_polygon(p) == direct);
        }
        ++cases;
      }
    }
  }
  CHECK(cases > 600000);
}

TEST_CASE("revolutions") {
  auto reps30 = EdgeWord::from_steps(
      30, alternating_word(AlternatingPair::make(30, 1, 3)).steps);
  CHECK(revolutions(reps30) == 2);

  CHECK(revolutions(EdgeWord::from_steps(8, std::vector<int>(8, 1))) == 1);

  auto r14 = EdgeWord::from_steps(
      30, alternating_word(AlternatingPair::make(30, 13, 15)).steps);
  CHECK(revolutions(r14) == 14);
}

TEST_CASE("revolutions of valid alternating words stay within bounds") {
  for (int n = 6; n <= 100; n += 2) {
    for (int a = 1; a < n - 1; ++a) {
      for (int b = a + 1; b <= n - 1; ++b) {
        auto p = AlternatingPair::make(n, a, b);
        if (!induces_polygon(p)) continue;
        auto w = EdgeWord::from_steps(n, alternating_word(p).steps);
        int u = revolutions(w);
        CHECK(u == p.u());
        CHECK(u >= 2);
        CHECK(u <= n - 2);
      }
    }
  }
}

TEST_CASE("parity facts behind the pair counting") {
  // For odd a < b, exactly one of (a+b)/2 and (b-a)/2 is even.
  for (int a = 1; a < 1000; a += 2) {
    for (int b = a + 2; b < 1000; b += 2) {
      bool sum_half_even = ((a + b) / 2) % 2 == 0;
      bool diff_half_even = ((b - a) / 2) % 2 == 0;
      CHECK(sum_half_even != diff_half_even);
    }
  }
}

TEST_CASE("even-sides reduction") {
  // For a = 2f, b = 2g with gcd(a+b, n) = 2, the half-sum f+g has
  // gcd(f+g, n) = 1 when odd and 2 when even.
  for (int n = 4; n <= 100; n += 2) {
    for (int f = 1; 2 * f < n - 1; ++f) {
      for (int g = f + 1; 2 * g <= n - 1; ++g) {
        if (std::gcd(2 * f + 2 * g, n) != 2) continue;
        int h = std::gcd(f + g, n);
        CHECK(h == ((f + g) % 2 == 0 ? 2 : 1));
      }
    }
  }
}
