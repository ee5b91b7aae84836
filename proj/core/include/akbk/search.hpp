#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "akbk/bigarith.hpp"
#include "akbk/integer.hpp"

namespace akbk {

// The equation (a k)^x + (b k)^y = ((a+b) k)^z, with a, b coprime and both
// greater than 1, k >= 1. Always has (x,y,z) = (1,1,1); any other solution
// is called exceptional.
struct EquationInstance {
  Int a, b, k;

  // Validates coprimality and minimum sizes; domain error otherwise.
  static EquationInstance create(Int a, Int b, Int k);

  Int sum() const { return a + b; }

 private:
  EquationInstance(Int a_, Int b_, Int k_) : a(std::move(a_)), b(std::move(b_)), k(std::move(k_)) {}
};

struct ExponentTriple {
  unsigned x = 0, y = 0, z = 0;

  bool exceptional() const { return !(x == 1 && y == 1 && z == 1); }

  friend bool operator==(const ExponentTriple& a, const ExponentTriple& b) {
    return a.x == b.x && a.y == b.y && a.z == b.z;
  }
  friend bool operator<(const ExponentTriple& a, const ExponentTriple& b);
};

// The two strict exponent orderings an exceptional solution must satisfy
// when k > 1 and min(a,b) > 2.
enum class OrderingClass { XZY, YZX, Other };
OrderingClass ordering_of(const ExponentTriple& t);

// All solutions with z <= zmax (x and y are implicitly bounded by magnitude).
// For each z and each x with (ak)^x below ((a+b)k)^z the remainder is tested
// by exact root extraction; completeness within the box is a hard contract.
std::vector<ExponentTriple> solve_instance(const EquationInstance& inst, unsigned zmax);
// z-range shard for batch drivers.
std::vector<ExponentTriple> solve_instance_range(const EquationInstance& inst, unsigned zlo,
                                                 unsigned zhi);

// Candidate (y, z) pairs with b^y = k^{z-y}, for prime-power b. Solved on
// prime exponents only; empty when rad(k) differs from the base of b.
// k must exceed 1.
std::vector<std::pair<unsigned, unsigned>> candidate_yz(const PrimePower& b, const Int& k,
                                                        unsigned zmax);

// All solutions with ordering x > z > y and z <= zmax, via the reduction
// b^y = k^{z-y}, a^x k^{x-z} + 1 = (a+b)^z. Requires k > 1 and prime-power b
// (std::invalid_argument otherwise). Must equal the XZY-filtered output of
// solve_instance on the same box.
std::vector<ExponentTriple> pruned_search_xzy(const EquationInstance& inst, unsigned zmax);
// z-range shard for batch drivers.
std::vector<ExponentTriple> pruned_search_xzy_range(const EquationInstance& inst, unsigned zlo,
                                                    unsigned zhi);

// Witness record for the reduction that any x > z > y solution with k > 1
// admits: rad(k) | b and a coprime split b = b1 b2, b1 > 1, with
// b1^y = k^{z-y} and a^x k^{x-z} + b2^y = (a+b)^z. All valid splits are
// returned. Precondition failures raise std::invalid_argument; a failing
// witness raises LemmaFalsification.
struct CoprimeSplitWitness {
  Int b1, b2;
  bool power_equation_holds = false;     // b1^y = k^{z-y}
  bool residual_equation_holds = false;  // a^x k^{x-z} + b2^y = (a+b)^z
};
struct ReductionWitness {
  Int rad_k;
  bool rad_divides_b = false;
  std::vector<CoprimeSplitWitness> witnesses;
};
ReductionWitness reduction_witness(const EquationInstance& inst, const ExponentTriple& t);

// ---------------------------------------------------------------------------
// Coverage guard: which published result settles an instance.
// ---------------------------------------------------------------------------

enum class Exclusion { NoXZY, NoYZX, NoExceptional };

enum class Justification {
  SunTangPair,         // (a,b) one of {3,5},{5,8},{8,13},{13,21}
  YuanHanSquareB4,     // one of a,b = 4, the other a coprime square
  YuanHanSquaresMod8,  // a,b squares, the second = 4 (mod 8): no y>z>x
  LeSoydanSquares,     // a,b squares, the first > 64*(second)^3: no x>z>y
  PrimePowerEvenOdd,   // (a,b) = (2^r, p^s), r > 1: no x>z>y
  PrimePowerOddEven,   // (a,b) = (p^r, 2^s), s > 1: no x>z>y
  PrimePowerOddOdd,    // (a,b) = (p^r, q^s), p != q odd: no x>z>y
  PrimePowerPair,      // both prime powers, min > 2: no exceptional solution
};

const char* to_string(Exclusion e);
const char* to_string(Justification j);

struct Verdict {
  EquationInstance instance;
  std::set<Exclusion> exclusions;
  std::set<Justification> justifications;
  std::vector<std::string> notes;

  bool proven() const { return exclusions.count(Exclusion::NoExceptional) > 0; }
};

// Evaluates every covered result in both orientations. Instances with k = 1
// are never Proven (every covered result assumes k > 1) and carry a note.
Verdict guard(const EquationInstance& inst);

// ---------------------------------------------------------------------------
// Census of covered coprime pairs up to N.
// ---------------------------------------------------------------------------

struct CensusClass {
  std::string name;
  std::vector<std::pair<Int, Int>> pairs;  // a < b
};

struct CensusReport {
  Int n;
  std::vector<CensusClass> classes;  // sun_tang, yuan_han, le_soydan, prime_power
  std::size_t covered_total = 0;     // exact cardinality of the union
  std::string convention;            // counting convention, stated explicitly
};

// Materializes, for unordered coprime pairs {a,b} with 1 < a < b <= n, the
// pairs settled by each coverage class, and the exact union count. n >= 4.
CensusReport census(const Int& n);

// Oriented pair predicates shared by guard and census.
namespace coverage {
bool sun_tang_pair(const Int& a, const Int& b);
bool yuan_han_square_b4(const Int& a, const Int& b);
bool yuan_han_squares_mod8(const Int& a, const Int& b);
bool le_soydan_squares(const Int& a, const Int& b);
bool prime_power_pair(const Int& a, const Int& b);
}  // namespace coverage

}  // namespace akbk
