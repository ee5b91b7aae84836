#include "akbk/lemmas.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace akbk {

namespace {

bool is_odd_prime(const Int& n) { return n > 2 && is_prime(n); }

std::string tuple_str(const Int& x, unsigned a, unsigned b) {
  std::ostringstream os;
  os << "(x=" << x << ", " << a << ", " << b << ")";
  return os.str();
}

}  // namespace

Int repunit(const Int& x, unsigned len) {
  if (x < 2) throw std::domain_error("repunit: base must be >= 2");
  if (len == 0) throw std::domain_error("repunit: length must be >= 1");
  return (pow_int(x, len) - 1) / (x - 1);
}

RepunitInstance make_repunit(const Int& x, unsigned len) { return {x, len, repunit(x, len)}; }

PowerPlusOneDivisibility power_plus_one_divisibility(const Int& x, unsigned m, unsigned n) {
  if (x < 2) throw std::domain_error("power_plus_one_divisibility: base must be >= 2");
  if (m == 0 || n == 0) {
    throw std::domain_error("power_plus_one_divisibility: exponents must be >= 1");
  }
  PowerPlusOneDivisibility out;
  out.divides = (pow_int(x, n) + 1) % (pow_int(x, m) + 1) == 0;
  out.m_divides_n = n % m == 0;
  out.quotient_odd = out.m_divides_n && (n / m) % 2 == 1;
  const bool rhs = out.m_divides_n && out.quotient_odd;
  if (out.divides != rhs) {
    throw LemmaFalsification("power-plus-one divisibility",
                             "at " + tuple_str(x, m, n) + ": divides=" +
                                 (out.divides ? "true" : "false") + " but m|n with odd quotient=" +
                                 (rhs ? "true" : "false"));
  }
  return out;
}

RepunitDivisorReport repunit_divisor_check(const Int& x, unsigned ell) {
  if (x < 2) throw std::domain_error("repunit_divisor_check: base must be >= 2");
  if (ell < 3 || ell % 2 == 0 || !is_prime(Int(ell))) {
    throw std::domain_error("repunit_divisor_check: ell must be an odd prime");
  }
  RepunitDivisorReport out;
  const Int value = repunit(x, ell);
  if (x % ell == 1) {
    out.exact_ell_division = (valuation(Int(ell), value) == 1);
    out.adjusted_value = value / ell;
  } else {
    out.adjusted_value = value;
  }
  out.prime_divisors = factorize(out.adjusted_value).factors;
  out.all_divisors_congruent = true;
  for (const PrimeFactor& pf : out.prime_divisors) {
    if (pf.prime % (2 * ell) != 1) out.all_divisors_congruent = false;
  }
  return out;
}

RepunitValuationReport repunit_valuation_check(const Int& p, const Int& x, unsigned len) {
  if (!is_odd_prime(p)) throw std::domain_error("repunit_valuation_check: p must be an odd prime");
  if (x < 2) throw std::domain_error("repunit_valuation_check: base must be >= 2");
  if (len == 0) throw std::domain_error("repunit_valuation_check: length must be >= 1");
  if (x % p != 1) {
    throw std::invalid_argument("repunit_valuation_check: requires x = 1 (mod p)");
  }
  RepunitValuationReport out;
  out.lhs = valuation(p, repunit(x, len));
  out.rhs = valuation(p, Int(len));
  out.agree = out.lhs == out.rhs;
  return out;
}

PrimePowerRepunitReport prime_power_repunit_check(const Int& x, unsigned ell, const Int& p,
                                                  unsigned n) {
  if (x < 2) throw std::domain_error("prime_power_repunit_check: base must be >= 2");
  if (ell < 3 || ell % 2 == 0) {
    throw std::invalid_argument("prime_power_repunit_check: ell must be odd and > 1");
  }
  if (n == 0 || !is_odd_prime(p) || repunit(x, ell) != pow_int(p, n)) {
    throw std::invalid_argument(
        "prime_power_repunit_check: requires repunit(x, ell) = p^n with p an odd prime");
  }
  PrimePowerRepunitReport out;
  out.ell_is_odd_prime = is_prime(Int(ell));
  out.congruence = p % (2 * ell) == 1;
  out.holds = out.ell_is_odd_prime && out.congruence;
  if (!out.holds) {
    std::ostringstream os;
    os << "at (x=" << x << ", ell=" << ell << ", p=" << p << ", n=" << n
       << "): ell_is_odd_prime=" << (out.ell_is_odd_prime ? "true" : "false")
       << ", p = 1 (mod 2 ell)=" << (out.congruence ? "true" : "false");
    throw LemmaFalsification("prime-power repunit shape", os.str());
  }
  return out;
}

bool operator<(const NLSolution& a, const NLSolution& b) {
  if (a.x != b.x) return a.x < b.x;
  if (a.y != b.y) return a.y < b.y;
  return std::tie(a.m, a.n) < std::tie(b.m, b.n);
}

bool operator<(const CatalanSolution& a, const CatalanSolution& b) {
  if (a.x != b.x) return a.x < b.x;
  if (a.y != b.y) return a.y < b.y;
  return std::tie(a.m, a.n) < std::tie(b.m, b.n);
}

std::vector<NLSolution> nagell_ljunggren_enumerate_range(const Int& xlo, const Int& xhi,
                                                         unsigned mmax, unsigned nmax) {
  std::vector<NLSolution> out;
  for (Int x = xlo < 2 ? Int(2) : xlo; x <= xhi; ++x) {
    for (unsigned m = 3; m <= mmax; ++m) {
      const Int value = repunit(x, m);
      for (unsigned n = 2; n <= nmax; n += 2) {
        if (auto y = exact_nth_root(value, n); y && *y > 1) {
          out.push_back({x, *y, m, n});
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<NLSolution> nagell_ljunggren_enumerate(const Int& xmax, unsigned mmax, unsigned nmax) {
  if (xmax < 2 || mmax < 3 || nmax < 2) {
    throw std::domain_error("nagell_ljunggren_enumerate: box below the minimal legal bounds");
  }
  return nagell_ljunggren_enumerate_range(2, xmax, mmax, nmax);
}

const std::vector<NLSolution>& nagell_ljunggren_reference() {
  static const std::vector<NLSolution> ref = {{Int(3), Int(11), 5, 2}};
  return ref;
}

std::vector<NLSolution> nagell_ljunggren_discrepancies(const std::vector<NLSolution>& found) {
  std::vector<NLSolution> out;
  const auto& ref = nagell_ljunggren_reference();
  for (const NLSolution& s : found) {
    if (std::find(ref.begin(), ref.end(), s) == ref.end()) out.push_back(s);
  }
  return out;
}

std::vector<CatalanSolution> catalan_enumerate_range(const Int& xlo, const Int& xhi,
                                                     const Int& vmax, unsigned emax) {
  std::vector<CatalanSolution> out;
  for (Int x = xlo < 2 ? Int(2) : xlo; x <= xhi; ++x) {
    for (unsigned m = 2; m <= emax; ++m) {
      const Int d = pow_int(x, m) - 1;
      for (unsigned n = 2; n <= emax; ++n) {
        if (auto y = exact_nth_root(d, n); y && *y >= 2 && *y <= vmax) {
          out.push_back({x, *y, m, n});
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CatalanSolution> catalan_enumerate(const Int& vmax, unsigned emax) {
  if (vmax < 2 || emax < 2) {
    throw std::domain_error("catalan_enumerate: bounds must be >= 2");
  }
  return catalan_enumerate_range(2, vmax, vmax, emax);
}

}  // namespace akbk
