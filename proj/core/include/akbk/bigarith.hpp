#pragma once

#include <optional>
#include <vector>

#include "akbk/integer.hpp"

namespace akbk {

struct PrimeFactor {
  Int prime;
  unsigned exponent = 0;

  friend bool operator==(const PrimeFactor& a, const PrimeFactor& b) {
    return a.prime == b.prime && a.exponent == b.exponent;
  }
};

// Unique prime factorization; primes strictly increasing, every exponent
// >= 1, empty exactly for value 1.
struct Factorization {
  Int value;
  std::vector<PrimeFactor> factors;

  bool single_prime() const { return factors.size() == 1; }
  Int reconstruct() const;
};

struct PrimePower {
  Int base;             // prime
  unsigned exponent = 0;  // >= 1
  Int value;            // base^exponent
};

// Exact factorization by trial division plus Brent-rho splitting.
// Throws CeilingExceeded for n >= magnitude_ceiling(), std::domain_error
// for n < 1. Never returns an uncertified factorization.
Factorization factorize(const Int& n);

// Deterministic primality: Miller-Rabin with proven witness sets below
// 3317044064679887385961981, a Pocklington-style N-1 certificate above.
// Throws CeilingExceeded at or above the ceiling, std::domain_error for n < 1.
bool is_prime(const Int& n);

// (p, e) with n = p^e and p prime, if n is a prime power; nullopt otherwise.
// n < 2 is a domain error.
std::optional<PrimePower> as_prime_power(const Int& n);

// Largest squarefree divisor; radical(1) = 1.
Int radical(const Int& n);

// Largest m with p^m | n. p must be prime (domain error otherwise), n >= 1.
unsigned valuation(const Int& p, const Int& n);

// e with base^e = n exactly, if one exists (exact integer logarithm).
// exact_root(1, base) = 0. base < 2 is a domain error.
std::optional<unsigned> exact_root(const Int& n, const Int& base);

// r with r^k = n exactly, if one exists. n >= 1, k >= 1.
std::optional<Int> exact_nth_root(const Int& n, unsigned k);

// Convenience exact power on Int.
Int pow_int(const Int& base, unsigned exp);

bool is_perfect_square(const Int& n);

}  // namespace akbk
