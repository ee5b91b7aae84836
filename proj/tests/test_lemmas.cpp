#include <doctest.h>

#include <algorithm>
#include <array>
#include <set>
#include <vector>

#include "akbk/lemmas.hpp"

using namespace akbk;

namespace {

// Literal-loop oracles, independent of the enumerators they check.
std::set<std::array<long, 4>> nl_oracle(long xmax, unsigned mmax, unsigned nmax) {
  std::set<std::array<long, 4>> out;
  for (long x = 2; x <= xmax; ++x) {
    for (unsigned m = 3; m <= mmax; ++m) {
      const Int value = repunit(x, m);
      for (unsigned n = 2; n <= nmax; n += 2) {
        Int y = 2;
        while (pow_int(y, n) < value) ++y;
        if (pow_int(y, n) == value) out.insert({x, y.convert_to<long>(), (long)m, (long)n});
      }
    }
  }
  return out;
}

std::set<std::array<long, 4>> catalan_oracle(long vmax, unsigned emax) {
  std::set<std::array<long, 4>> out;
  for (long x = 2; x <= vmax; ++x) {
    for (unsigned m = 2; m <= emax; ++m) {
      const Int xm = pow_int(x, m);
      for (long y = 2; y <= vmax; ++y) {
        for (unsigned n = 2; n <= emax; ++n) {
          if (xm - pow_int(y, n) == 1) out.insert({x, y, (long)m, (long)n});
        }
      }
    }
  }
  return out;
}

std::set<std::array<long, 4>> as_tuples(const std::vector<NLSolution>& v) {
  std::set<std::array<long, 4>> out;
  for (const auto& s : v) {
    out.insert({s.x.convert_to<long>(), s.y.convert_to<long>(), (long)s.m, (long)s.n});
  }
  return out;
}

std::set<std::array<long, 4>> as_tuples(const std::vector<CatalanSolution>& v) {
  std::set<std::array<long, 4>> out;
  for (const auto& s : v) {
    out.insert({s.x.convert_to<long>(), s.y.convert_to<long>(), (long)s.m, (long)s.n});
  }
  return out;
}

}  // namespace

TEST_CASE("repunit fixed values and defining identity") {
  CHECK(repunit(3, 5) == 121);
  CHECK(repunit(2, 11) == 2047);
  for (int x = 2; x <= 8; ++x) CHECK(repunit(x, 1) == 1);
  CHECK_THROWS_AS(repunit(1, 3), std::domain_error);
  CHECK_THROWS_AS(repunit(3, 0), std::domain_error);

  for (int x = 2; x <= 30; ++x) {
    for (unsigned len = 1; len <= 12; ++len) {
      CHECK(repunit(x, len) * (x - 1) + 1 == pow_int(x, len));
    }
  }
  const RepunitInstance inst = make_repunit(3, 5);
  CHECK(inst.value == 121);
  CHECK(inst.length == 5);
}

TEST_CASE("power_plus_one_divisibility fixed records") {
  auto r = power_plus_one_divisibility(2, 2, 6);
  CHECK(r.divides);
  CHECK(r.m_divides_n);
  CHECK(r.quotient_odd);

  r = power_plus_one_divisibility(2, 2, 4);
  CHECK_FALSE(r.divides);
  CHECK(r.m_divides_n);
  CHECK_FALSE(r.quotient_odd);

  r = power_plus_one_divisibility(3, 1, 3);
  CHECK(r.divides);
  CHECK(r.m_divides_n);
  CHECK(r.quotient_odd);
}

TEST_CASE("power_plus_one_divisibility biconditional over the box") {
  // The check itself raises on any violation; sweeping the box is the test.
  for (int x = 2; x <= 20; ++x) {
    for (unsigned m = 1; m <= 10; ++m) {
      for (unsigned n = 1; n <= 30; ++n) {
        CHECK_NOTHROW(power_plus_one_divisibility(x, m, n));
      }
    }
  }
}

TEST_CASE("repunit_divisor_check fixed records") {
  auto r = repunit_divisor_check(2, 5);
  CHECK(r.adjusted_value == 31);
  CHECK(r.all_divisors_congruent);
  CHECK_FALSE(r.exact_ell_division.has_value());

  r = repunit_divisor_check(3, 5);
  CHECK(r.adjusted_value == 121);
  CHECK(r.all_divisors_congruent);
  REQUIRE(r.prime_divisors.size() == 1);
  CHECK(r.prime_divisors[0].prime == 11);
  CHECK(r.prime_divisors[0].exponent == 2);

  r = repunit_divisor_check(7, 3);  // 7 = 1 (mod 3), repunit 57 = 3*19
  CHECK(r.adjusted_value == 19);
  REQUIRE(r.exact_ell_division.has_value());
  CHECK(*r.exact_ell_division);
  CHECK(r.all_divisors_congruent);

  CHECK_THROWS_AS(repunit_divisor_check(5, 4), std::domain_error);
  CHECK_THROWS_AS(repunit_divisor_check(5, 9), std::domain_error);
  CHECK_THROWS_AS(repunit_divisor_check(5, 2), std::domain_error);
}

TEST_CASE("repunit_valuation_check fixed records and preconditions") {
  auto r = repunit_valuation_check(3, 4, 6);
  CHECK(r.lhs == 1);
  CHECK(r.rhs == 1);
  CHECK(r.agree);

  r = repunit_valuation_check(3, 4, 9);
  CHECK(r.lhs == 2);
  CHECK(r.rhs == 2);
  CHECK(r.agree);

  r = repunit_valuation_check(5, 6, 5);
  CHECK(r.lhs == 1);
  CHECK(r.rhs == 1);
  CHECK(r.agree);

  CHECK_THROWS_AS(repunit_valuation_check(3, 5, 4), std::invalid_argument);
  CHECK_THROWS_AS(repunit_valuation_check(4, 5, 4), std::domain_error);
  CHECK_THROWS_AS(repunit_valuation_check(2, 5, 4), std::domain_error);
}

TEST_CASE("prime_power_repunit_check fixed records and preconditions") {
  auto r = prime_power_repunit_check(3, 5, 11, 2);
  CHECK(r.holds);
  CHECK(r.ell_is_odd_prime);
  CHECK(r.congruence);

  CHECK(prime_power_repunit_check(3, 3, 13, 1).holds);
  CHECK(prime_power_repunit_check(5, 3, 31, 1).holds);

  CHECK_THROWS_AS(prime_power_repunit_check(3, 4, 11, 2), std::invalid_argument);
  CHECK_THROWS_AS(prime_power_repunit_check(3, 3, 11, 1), std::invalid_argument);
}

TEST_CASE("nagell-ljunggren enumeration matches the literal oracle") {
  const auto found = nagell_ljunggren_enumerate(20, 8, 4);
  CHECK(as_tuples(found) == nl_oracle(20, 8, 4));
}

TEST_CASE("nagell-ljunggren frozen boxes") {
  const std::set<std::array<long, 4>> expected = {{3, 11, 5, 2}, {7, 20, 4, 2}};
  CHECK(as_tuples(nagell_ljunggren_enumerate(50, 10, 6)) == expected);
  CHECK(as_tuples(nagell_ljunggren_enumerate(10, 6, 2)) == expected);
  CHECK(nagell_ljunggren_enumerate(2, 3, 2).empty());
  CHECK_THROWS_AS(nagell_ljunggren_enumerate(1, 3, 2), std::domain_error);
}

TEST_CASE("nagell-ljunggren reference list and discrepancies") {
  const auto found = nagell_ljunggren_enumerate(50, 10, 6);
  const auto extra = nagell_ljunggren_discrepancies(found);
  REQUIRE(extra.size() == 1);
  CHECK(extra[0].x == 7);
  CHECK(extra[0].y == 20);
  CHECK(extra[0].m == 4);
  CHECK(extra[0].n == 2);
  CHECK(nagell_ljunggren_reference().size() == 1);
}

TEST_CASE("nagell-ljunggren range sharding merges to the full box") {
  auto full = nagell_ljunggren_enumerate(50, 10, 6);
  auto lo = nagell_ljunggren_enumerate_range(2, 25, 10, 6);
  auto hi = nagell_ljunggren_enumerate_range(26, 50, 10, 6);
  lo.insert(lo.end(), hi.begin(), hi.end());
  std::sort(lo.begin(), lo.end());
  CHECK(lo == full);
}

TEST_CASE("catalan enumeration matches the literal oracle and frozen boxes") {
  CHECK(as_tuples(catalan_enumerate(30, 6)) == catalan_oracle(30, 6));

  const std::set<std::array<long, 4>> expected = {{3, 2, 2, 3}};
  CHECK(as_tuples(catalan_enumerate(10, 3)) == expected);
  CHECK(catalan_enumerate(2, 10).empty());
  CHECK_THROWS_AS(catalan_enumerate(1, 5), std::domain_error);
}
