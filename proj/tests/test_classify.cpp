#include <doctest.h>

#include <algorithm>
#include <variant>
#include <vector>

#include "akbk/classify.hpp"
#include "akbk/lemmas.hpp"

using namespace akbk;

namespace {

bool contains(const std::vector<TwoPrimeSolution>& v, const TwoPrimeSolution& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

bool contains(const std::vector<PQSolution>& v, const PQSolution& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

}  // namespace

TEST_CASE("sporadic list satisfies the defining equation") {
  for (const TwoPrimeSolution& s : sporadic_two_prime_solutions()) {
    CHECK(pow_int(s.x, s.ell) - 1 == pow_int(2, s.m) * pow_int(s.p, s.n));
  }
}

TEST_CASE("enum_2p finds the fixed examples") {
  const auto box = enum_2p(17, 4);
  CHECK(box.skipped.empty());
  for (const TwoPrimeSolution& s : sporadic_two_prime_solutions()) {
    CHECK(contains(box.solutions, s));
  }
  CHECK(contains(enum_2p(33, 2).solutions, {Int(17), Int(33), 2, 6, 1}));
  CHECK(contains(enum_2p(5, 3).solutions, {Int(31), Int(5), 3, 2, 1}));
  CHECK_THROWS_AS(enum_2p(1, 4), std::domain_error);
}

TEST_CASE("every enumerated solution satisfies the two-prime invariant") {
  for (const TwoPrimeSolution& s : enum_2p(60, 5).solutions) {
    CHECK(pow_int(s.x, s.ell) - 1 == pow_int(2, s.m) * pow_int(s.p, s.n));
    CHECK(is_prime(s.p));
    CHECK(s.p % 2 == 1);
    CHECK(s.m >= 1);
    CHECK(s.n >= 1);
  }
}

TEST_CASE("classify_2p fixed outcomes") {
  const auto sporadic = classify_2p({Int(3), Int(5), 2, 3, 1});
  REQUIRE(std::holds_alternative<SporadicMatch>(sporadic));
  CHECK(std::get<SporadicMatch>(sporadic).index == 0);

  const auto family = classify_2p({Int(17), Int(33), 2, 6, 1});
  REQUIRE(std::holds_alternative<TwoPowerFamilyMatch>(family));
  CHECK(std::get<TwoPowerFamilyMatch>(family).zeta == 1);

  const auto family_minus = classify_2p({Int(31), Int(63), 2, 7, 1});
  REQUIRE(std::holds_alternative<TwoPowerFamilyMatch>(family_minus));
  CHECK(std::get<TwoPowerFamilyMatch>(family_minus).zeta == -1);

  const auto repunit_shape = classify_2p({Int(13), Int(3), 3, 1, 1});
  REQUIRE(std::holds_alternative<OddPrimeRepunitMatch>(repunit_shape));
  CHECK(std::get<OddPrimeRepunitMatch>(repunit_shape).repunit_value == 13);

  CHECK(outcome_name(sporadic) == "sporadic");
  CHECK(outcome_name(family) == "two-power-family");
  CHECK(outcome_name(repunit_shape) == "odd-prime-repunit");
}

TEST_CASE("classify_2p rejects tuples that match no shape") {
  // 3^3 - 1 = 26 = 2 * 13, so p = 7 here is simply wrong.
  CHECK_THROWS_AS(classify_2p({Int(7), Int(3), 3, 1, 1}), LemmaFalsification);
}

TEST_CASE("classification is exactly-one across an enumeration box") {
  const auto box = enum_2p(100, 6);
  CHECK(box.skipped.empty());
  CHECK(!box.solutions.empty());
  for (const TwoPrimeSolution& s : box.solutions) {
    const TwoPrimeOutcome outcome = classify_2p(s);  // throws unless exactly one
    // Shape boundaries: sporadic tuples have even ell and m <= 5, the
    // two-power family has ell = 2 and m >= 6, the repunit shape odd ell.
    if (std::holds_alternative<SporadicMatch>(outcome)) {
      CHECK(s.ell % 2 == 0);
      CHECK(s.m <= 5);
    } else if (std::holds_alternative<TwoPowerFamilyMatch>(outcome)) {
      CHECK(s.ell == 2);
      CHECK(s.m >= 6);
    } else {
      CHECK(s.ell % 2 == 1);
    }
  }
}

TEST_CASE("odd-prime-repunit outcomes pass the prime-power repunit check") {
  for (const TwoPrimeSolution& s : enum_2p(100, 6).solutions) {
    const TwoPrimeOutcome outcome = classify_2p(s);
    if (std::holds_alternative<OddPrimeRepunitMatch>(outcome)) {
      CHECK(prime_power_repunit_check(s.x, s.ell, s.p, s.n).holds);
    }
  }
}

TEST_CASE("enum_2p sharding is deterministic") {
  const auto full = enum_2p(80, 5);
  Enum2pResult merged;
  for (const auto& [lo, hi] : std::vector<std::pair<int, int>>{{2, 20}, {21, 55}, {56, 80}}) {
    const auto part = enum_2p_range(lo, hi, 5);
    merged.solutions.insert(merged.solutions.end(), part.solutions.begin(), part.solutions.end());
  }
  std::sort(merged.solutions.begin(), merged.solutions.end());
  CHECK(merged.solutions == full.solutions);
}

TEST_CASE("enum_pq finds the fixed examples") {
  CHECK(contains(enum_pq(4, 2).solutions, {Int(3), Int(5), Int(4), 2, 1, 1}));
  CHECK(contains(enum_pq(2, 11).solutions, {Int(23), Int(89), Int(2), 11, 1, 1}));
  CHECK(contains(enum_pq(8, 3).solutions, {Int(7), Int(73), Int(8), 3, 1, 1}));
}

TEST_CASE("every enumerated pq solution satisfies its invariant") {
  for (const PQSolution& s : enum_pq(60, 5).solutions) {
    CHECK(pow_int(s.x, s.ell) - 1 == pow_int(s.p, s.m) * pow_int(s.q, s.n));
    CHECK(s.p < s.q);
    CHECK(s.p % 2 == 1);
    CHECK(s.q % 2 == 1);
    CHECK(is_prime(s.p));
    CHECK(is_prime(s.q));
    CHECK(s.x % 2 == 0);  // forced: an odd x would put a factor 2 in x^ell - 1
  }
}

TEST_CASE("classify_pq fixed outcomes") {
  // 4^2 - 1 = 15 = 3 * 5
  const PQSolution s15{Int(3), Int(5), Int(4), 2, 1, 1};
  const auto swapped = classify_pq(s15, PQLabeling::Swapped);  // first role = 5
  REQUIRE(swapped.has_value());
  REQUIRE(std::holds_alternative<EvenSplitMatch>(*swapped));
  CHECK(std::get<EvenSplitMatch>(*swapped).zeta == 1);
  const auto canonical = classify_pq(s15, PQLabeling::Canonical);  // first role = 3
  REQUIRE(canonical.has_value());
  CHECK(std::get<EvenSplitMatch>(*canonical).zeta == -1);

  // 2^11 - 1 = 2047 = 23 * 89
  const PQSolution s2047{Int(23), Int(89), Int(2), 11, 1, 1};
  const auto mersenne = classify_pq(s2047, PQLabeling::Canonical);
  REQUIRE(mersenne.has_value());
  CHECK(std::holds_alternative<MersenneMatch>(*mersenne));

  // 4^3 - 1 = 63 = 3^2 * 7
  const PQSolution s63{Int(3), Int(7), Int(4), 3, 2, 1};
  const auto ell_p = classify_pq(s63, PQLabeling::Canonical);
  REQUIRE(ell_p.has_value());
  CHECK(std::holds_alternative<EllEqualsPMatch>(*ell_p));
  // Exchanging the labels turns the same split into the mirrored shape.
  const auto ell_q = classify_pq(s63, PQLabeling::Swapped);
  REQUIRE(ell_q.has_value());
  CHECK(std::holds_alternative<EllEqualsQMatch>(*ell_q));

  CHECK(outcome_name(*mersenne) == "mersenne");
  CHECK(outcome_name(*ell_p) == "ell-equals-p");
}

TEST_CASE("classify_pq_full covers an enumeration box") {
  const auto box = enum_pq(60, 6);
  CHECK(!box.solutions.empty());
  for (const PQSolution& s : box.solutions) {
    const PQClassification c = classify_pq_full(s);  // throws when nothing matches
    CHECK((c.canonical.has_value() || c.swapped.has_value()));
    CHECK(c.notes.empty());  // no double matches observed on this box
  }
}

TEST_CASE("prime-power repunit parts harvested from pq outcomes pass the check") {
  for (const PQSolution& s : enum_pq(100, 6).solutions) {
    if (s.ell % 2 == 0 || s.x == 2) continue;
    const PQClassification c = classify_pq_full(s);
    for (const auto& [labeled, first_prime, first_exp] :
         {std::tuple{c.canonical, s.p, s.m}, std::tuple{c.swapped, s.q, s.n}}) {
      if (!labeled) continue;
      // repunit-p: the repunit equals (first role)^(its exponent)
      if (std::holds_alternative<RepunitPMatch>(*labeled)) {
        CHECK(prime_power_repunit_check(s.x, s.ell, first_prime, first_exp).holds);
      }
    }
  }
}

TEST_CASE("classify_pq_full rejects a doctored tuple") {
  // 2047 = 23 * 89, so claiming exponents (2, 1) breaks the invariant and
  // no shape can match.
  CHECK_THROWS_AS(classify_pq_full({Int(23), Int(89), Int(2), 11, 2, 1}), LemmaFalsification);
}

TEST_CASE("enum_pq sharding is deterministic") {
  const auto full = enum_pq(60, 5);
  EnumPqResult merged;
  for (const auto& [lo, hi] : std::vector<std::pair<int, int>>{{2, 30}, {31, 60}}) {
    const auto part = enum_pq_range(lo, hi, 5);
    merged.solutions.insert(merged.solutions.end(), part.solutions.begin(), part.solutions.end());
  }
  std::sort(merged.solutions.begin(), merged.solutions.end());
  CHECK(merged.solutions == full.solutions);
}

TEST_CASE("ceiling events are reported as skips, not dropped") {
  const unsigned saved = ceiling_bits();
  set_ceiling_bits(32);
  const auto box = enum_2p_range(80000, 80002, 2);  // x^2 - 1 ~ 2^32.6
  set_ceiling_bits(saved);
  CHECK(!box.skipped.empty());
}
