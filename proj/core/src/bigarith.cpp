#include "akbk/bigarith.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace akbk {

namespace {

namespace mp = boost::multiprecision;
using u32 = std::uint32_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;
using u256 = mp::uint256_t;

std::vector<u32> sieve_primes(u32 limit) {
  std::vector<bool> composite(limit + 1, false);
  std::vector<u32> out;
  for (u32 i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (u64 j = static_cast<u64>(i) * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

const std::vector<u32>& small_primes() {
  static const std::vector<u32> primes = sieve_primes(100000);
  return primes;
}

// Modular arithmetic backends. Residues stay below the modulus, so the
// 256-bit backend is exact for moduli below 2^128 and the Int backend covers
// anything a raised ceiling lets through.
struct Ops64 {
  using U = u64;
  static U mulmod(U a, U b, U n) { return static_cast<u64>(static_cast<u128>(a) * b % n); }
  static U addmod(U a, u64 c, U n) { return static_cast<u64>((static_cast<u128>(a) + c) % n); }
  static U gcd(U a, U b) { return std::gcd(a, b); }
};

struct Ops256 {
  using U = u256;
  static U mulmod(const U& a, const U& b, const U& n) { return a * b % n; }
  static U addmod(const U& a, u64 c, const U& n) { return (a + c) % n; }
  static U gcd(const U& a, const U& b) { return mp::gcd(a, b); }
};

struct OpsInt {
  using U = Int;
  static U mulmod(const U& a, const U& b, const U& n) { return a * b % n; }
  static U addmod(const U& a, u64 c, const U& n) { return (a + c) % n; }
  static U gcd(const U& a, const U& b) { return mp::gcd(a, b); }
};

template <class Ops>
typename Ops::U powmod(typename Ops::U base, typename Ops::U exp, const typename Ops::U& n) {
  using U = typename Ops::U;
  U result = 1;
  base %= n;
  while (exp != 0) {
    if ((exp & 1) != 0) result = Ops::mulmod(result, base, n);
    base = Ops::mulmod(base, base, n);
    exp >>= 1;
  }
  return result;
}

// Strong probable-prime test to base a; n odd, n > 2.
template <class Ops>
bool sprp(const typename Ops::U& n, u64 base) {
  using U = typename Ops::U;
  U a = U(base) % n;
  if (a == 0) return true;
  U d = n - 1;
  unsigned r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  U x = powmod<Ops>(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned i = 1; i < r; ++i) {
    x = Ops::mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

// First 12 primes: a proven deterministic witness set for all n < 2^64.
constexpr u64 kWitnesses64[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
// First 13 primes: proven deterministic below 3317044064679887385961981.
constexpr u64 kWitnesses13[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

const Int& mr13_bound() {
  static const Int bound("3317044064679887385961981");
  return bound;
}

const Int& u64_max_int() {
  static const Int m(std::numeric_limits<u64>::max());
  return m;
}

const Int& two_pow_128() {
  static const Int m = Int(1) << 128;
  return m;
}

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : kWitnesses64) {
    if (n % p == 0) return n == p;
  }
  if (n < 41 * 41) return true;  // no factor <= 37 and below 41^2
  for (u64 a : kWitnesses64) {
    if (!sprp<Ops64>(n, a)) return false;
  }
  return true;
}

template <class Ops>
bool mr13(const typename Ops::U& n) {
  for (u64 a : kWitnesses13) {
    if (!sprp<Ops>(n, a)) return false;
  }
  return true;
}

// Brent's cycle variant of Pollard rho with batched gcds. Returns a
// nontrivial factor of composite odd n, or 0 when this c fails.
template <class Ops>
typename Ops::U brent_rho(const typename Ops::U& n, u64 c_seed) {
  using U = typename Ops::U;
  U y = 2 % n, q = 1, g = 1, x = 0, ys = 0;
  u64 r = 1;
  const u64 batch = 128;
  while (g == 1) {
    x = y;
    for (u64 i = 0; i < r; ++i) y = Ops::addmod(Ops::mulmod(y, y, n), c_seed, n);
    u64 k = 0;
    while (k < r && g == 1) {
      ys = y;
      const u64 lim = std::min(batch, r - k);
      for (u64 i = 0; i < lim; ++i) {
        y = Ops::addmod(Ops::mulmod(y, y, n), c_seed, n);
        q = Ops::mulmod(q, x > y ? x - y : y - x, n);
      }
      g = Ops::gcd(q, n);
      k += batch;
    }
    r <<= 1;
    if (r > (u64(1) << 40)) return 0;
  }
  if (g == n) {
    // The batch overshot; replay one step at a time from the saved point.
    u64 guard = 0;
    do {
      ys = Ops::addmod(Ops::mulmod(ys, ys, n), c_seed, n);
      g = Ops::gcd(x > ys ? x - ys : ys - x, n);
      if (++guard > (u64(1) << 26)) return 0;
    } while (g == 1);
  }
  return (g == n) ? U(0) : g;
}

template <class Ops>
Int rho_split(const Int& n) {
  const typename Ops::U m(n);
  for (u64 c = 1; c < 64; ++c) {
    const typename Ops::U d = brent_rho<Ops>(m, c);
    if (d != 0 && d != m) return Int(d);
  }
  throw CeilingExceeded("factor search exhausted its retry budget", n);
}

Int split_composite(const Int& n) {
  if (n <= u64_max_int()) return rho_split<Ops64>(n);
  if (n < two_pow_128()) return rho_split<Ops256>(n);
  return rho_split<OpsInt>(n);
}

// Smallest-prime-exponent perfect-power decomposition, if any.
std::optional<std::pair<Int, unsigned>> perfect_power(const Int& n) {
  const unsigned bits = static_cast<unsigned>(mp::msb(n)) + 1;
  for (u32 k : small_primes()) {
    if (k > bits) break;
    if (auto root = exact_nth_root(n, k)) {
      if (*root > 1) return std::make_pair(*root, static_cast<unsigned>(k));
    }
  }
  return std::nullopt;
}

// Pocklington-style N-1 certificate with per-factor witnesses: for every
// prime q | N-1 find a with a^{N-1} = 1 (mod N) and gcd(a^{(N-1)/q}-1, N) = 1.
// Any Fermat failure proves compositeness. Recursion through factorize
// terminates because every factor of N-1 is smaller than N.
bool bls_certify(const Int& n) {
  const Factorization f = factorize(n - 1);
  for (const PrimeFactor& pf : f.factors) {
    const Int cofactor_exp = (n - 1) / pf.prime;
    bool witnessed = false;
    for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
                  73, 79, 83, 89, 97, 101}) {
      if (mp::powm(Int(a), n - 1, n) != 1) return false;
      const Int t = mp::powm(Int(a), cofactor_exp, n);
      const Int g = mp::gcd(t - 1, n);
      if (g == 1) {
        witnessed = true;
        break;
      }
      if (g != n) return false;  // nontrivial gcd exposes a factor
    }
    if (!witnessed) {
      throw CeilingExceeded("primality certificate not found at desk scale", n);
    }
  }
  return true;
}

bool is_prime_big(const Int& n) {
  for (u32 p : small_primes()) {
    if (p > 1000) break;
    if (n % p == 0) return false;  // n > 2^64, so n is never p itself
  }
  const bool probable = (n < two_pow_128()) ? mr13<Ops256>(u256(n)) : mr13<OpsInt>(n);
  if (!probable) return false;
  if (n < mr13_bound()) return true;
  return bls_certify(n);
}

}  // namespace

Int Factorization::reconstruct() const {
  Int out = 1;
  for (const PrimeFactor& pf : factors) out *= pow_int(pf.prime, pf.exponent);
  return out;
}

bool is_prime(const Int& n) {
  if (n < 1) throw std::domain_error("is_prime: n must be >= 1");
  if (n >= magnitude_ceiling()) {
    throw CeilingExceeded("is_prime: value exceeds the magnitude ceiling", n);
  }
  if (n < 2) return false;
  if (n <= u64_max_int()) return is_prime_u64(n.convert_to<u64>());
  return is_prime_big(n);
}

Factorization factorize(const Int& n) {
  if (n < 1) throw std::domain_error("factorize: n must be >= 1");
  if (n >= magnitude_ceiling()) {
    throw CeilingExceeded("factorize: value exceeds the magnitude ceiling", n);
  }
  Factorization out;
  out.value = n;
  if (n == 1) return out;

  std::map<Int, unsigned> acc;
  Int m = n;
  for (u32 p : small_primes()) {
    if (Int(p) * p > m) break;
    while (m % p == 0) {
      ++acc[Int(p)];
      m /= p;
    }
  }
  if (m > 1) {
    std::vector<Int> work{m};
    while (!work.empty()) {
      Int c = work.back();
      work.pop_back();
      if (c == 1) continue;
      if (is_prime(c)) {
        ++acc[c];
        continue;
      }
      if (auto pp = perfect_power(c)) {
        for (unsigned i = 0; i < pp->second; ++i) work.push_back(pp->first);
        continue;
      }
      const Int d = split_composite(c);
      work.push_back(d);
      work.push_back(c / d);
    }
  }
  out.factors.reserve(acc.size());
  for (const auto& [prime, exponent] : acc) out.factors.push_back({prime, exponent});
  return out;
}

std::optional<PrimePower> as_prime_power(const Int& n) {
  if (n < 2) throw std::domain_error("as_prime_power: n must be >= 2");
  const Factorization f = factorize(n);
  if (!f.single_prime()) return std::nullopt;
  return PrimePower{f.factors[0].prime, f.factors[0].exponent, n};
}

Int radical(const Int& n) {
  if (n < 1) throw std::domain_error("radical: n must be >= 1");
  Int out = 1;
  for (const PrimeFactor& pf : factorize(n).factors) out *= pf.prime;
  return out;
}

unsigned valuation(const Int& p, const Int& n) {
  if (n < 1) throw std::domain_error("valuation: n must be >= 1");
  if (p < 2 || !is_prime(p)) throw std::domain_error("valuation: p must be prime");
  unsigned v = 0;
  Int m = n;
  while (m % p == 0) {
    m /= p;
    ++v;
  }
  return v;
}

std::optional<unsigned> exact_root(const Int& n, const Int& base) {
  if (base < 2) throw std::domain_error("exact_root: base must be >= 2");
  if (n < 1) throw std::domain_error("exact_root: n must be >= 1");
  unsigned e = 0;
  Int m = n;
  while (m % base == 0) {
    m /= base;
    ++e;
  }
  if (m != 1) return std::nullopt;
  return e;
}

std::optional<Int> exact_nth_root(const Int& n, unsigned k) {
  if (k == 0) throw std::domain_error("exact_nth_root: k must be >= 1");
  if (n < 1) throw std::domain_error("exact_nth_root: n must be >= 1");
  if (k == 1) return n;
  if (n == 1) return Int(1);
  const unsigned bits = static_cast<unsigned>(mp::msb(n)) + 1;
  if (k > bits) return std::nullopt;  // root would have to be 1, and n > 1
  Int lo = 1;
  Int hi = Int(1) << (bits / k + 1);
  while (lo < hi) {
    const Int mid = (lo + hi + 1) >> 1;
    if (pow_int(mid, k) <= n) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  if (pow_int(lo, k) == n) return lo;
  return std::nullopt;
}

Int pow_int(const Int& base, unsigned exp) { return mp::pow(base, exp); }

bool is_perfect_square(const Int& n) {
  if (n < 0) throw std::domain_error("is_perfect_square: n must be >= 0");
  const Int r = mp::sqrt(n);
  return r * r == n;
}

}  // namespace akbk
