#pragma once

#include <optional>
#include <vector>

#include "akbk/bigarith.hpp"
#include "akbk/integer.hpp"

namespace akbk {

// (x^len - 1)/(x - 1) = x^{len-1} + ... + x + 1, exact. x >= 2, len >= 1.
Int repunit(const Int& x, unsigned len);

// A repunit together with its defining parameters, used in evidence records.
struct RepunitInstance {
  Int base;
  unsigned length = 0;
  Int value;
};
RepunitInstance make_repunit(const Int& x, unsigned len);

// Divisibility of x^n + 1 by x^m + 1. Classically this holds exactly when
// m | n with odd quotient; the check computes both sides independently and
// raises LemmaFalsification if they ever disagree.
struct PowerPlusOneDivisibility {
  bool divides = false;       // (x^m + 1) | (x^n + 1), by exact division
  bool m_divides_n = false;   // m | n
  bool quotient_odd = false;  // m | n and (n/m) odd
};
PowerPlusOneDivisibility power_plus_one_divisibility(const Int& x, unsigned m, unsigned n);

// Prime divisors of the repunit with odd prime length ell are congruent to
// 1 mod 2*ell, after dividing out a single factor ell when x = 1 (mod ell).
// ell must be an odd prime (domain error otherwise).
struct RepunitDivisorReport {
  Int adjusted_value;                        // repunit, divided by ell when applicable
  bool all_divisors_congruent = false;       // every prime divisor = 1 (mod 2 ell)
  std::optional<bool> exact_ell_division;    // set iff x = 1 (mod ell): ell || repunit
  std::vector<PrimeFactor> prime_divisors;   // of adjusted_value, evidence
};
RepunitDivisorReport repunit_divisor_check(const Int& x, unsigned ell);

// When x = 1 (mod p) for an odd prime p, the p-adic valuation of the repunit
// equals the p-adic valuation of its length. Precondition x = 1 (mod p)
// raises std::invalid_argument; non-prime or even p is a domain error.
struct RepunitValuationReport {
  unsigned lhs = 0;  // valuation(p, repunit(x, len))
  unsigned rhs = 0;  // valuation(p, len)
  bool agree = false;
};
RepunitValuationReport repunit_valuation_check(const Int& p, const Int& x, unsigned len);

// If the repunit of odd length ell > 1 is the prime power p^n, then ell is
// an odd prime and p = 1 (mod 2 ell). The precondition (repunit(x,ell) ==
// p^n, ell odd > 1) raises std::invalid_argument when violated; a failing
// conclusion raises LemmaFalsification with the full instance.
struct PrimePowerRepunitReport {
  bool holds = false;
  bool ell_is_odd_prime = false;
  bool congruence = false;  // p = 1 (mod 2 ell)
};
PrimePowerRepunitReport prime_power_repunit_check(const Int& x, unsigned ell, const Int& p,
                                                  unsigned n);

// Solutions of (x^m - 1)/(x - 1) = y^n with x,y > 1, m > 2, n > 1 even.
struct NLSolution {
  Int x, y;
  unsigned m = 0, n = 0;

  friend bool operator==(const NLSolution& a, const NLSolution& b) {
    return a.x == b.x && a.y == b.y && a.m == b.m && a.n == b.n;
  }
  friend bool operator<(const NLSolution& a, const NLSolution& b);
};

// Exhaustive enumeration over x <= xmax, 2 < m <= mmax, 1 < n <= nmax with
// n even; y is recovered by exact integer root extraction. Bounds below the
// minimal legal box (xmax < 2, mmax < 3, nmax < 2) are a domain error.
std::vector<NLSolution> nagell_ljunggren_enumerate(const Int& xmax, unsigned mmax, unsigned nmax);
// Range-sharded form over x in [xlo, xhi] for batch drivers.
std::vector<NLSolution> nagell_ljunggren_enumerate_range(const Int& xlo, const Int& xhi,
                                                         unsigned mmax, unsigned nmax);

// The even-exponent solution list as commonly quoted: {(3,11,5,2)}.
// Exhaustive search also finds (7,20,4,2); discrepancies against the
// reference list are surfaced, never silently reconciled in either direction.
const std::vector<NLSolution>& nagell_ljunggren_reference();
std::vector<NLSolution> nagell_ljunggren_discrepancies(const std::vector<NLSolution>& found);

// Solutions of x^m - y^n = 1 with all of x, y, m, n >= 2.
struct CatalanSolution {
  Int x, y;
  unsigned m = 0, n = 0;

  friend bool operator==(const CatalanSolution& a, const CatalanSolution& b) {
    return a.x == b.x && a.y == b.y && a.m == b.m && a.n == b.n;
  }
  friend bool operator<(const CatalanSolution& a, const CatalanSolution& b);
};

// Exhaustive over 2 <= x,y <= vmax, 2 <= m,n <= emax (bounds apply to bases
// and exponents separately; the powers themselves may exceed vmax).
std::vector<CatalanSolution> catalan_enumerate(const Int& vmax, unsigned emax);
std::vector<CatalanSolution> catalan_enumerate_range(const Int& xlo, const Int& xhi,
                                                     const Int& vmax, unsigned emax);

}  // namespace akbk
