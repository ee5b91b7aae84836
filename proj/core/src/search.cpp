#include "akbk/search.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <tuple>
#include <vector>

namespace akbk {

namespace mp = boost::multiprecision;

EquationInstance EquationInstance::create(Int a, Int b, Int k) {
  if (a < 2 || b < 2) throw std::domain_error("instance: a and b must both exceed 1");
  if (k < 1) throw std::domain_error("instance: k must be >= 1");
  if (mp::gcd(a, b) != 1) throw std::domain_error("instance: a and b must be coprime");
  return EquationInstance(std::move(a), std::move(b), std::move(k));
}

bool operator<(const ExponentTriple& a, const ExponentTriple& b) {
  return std::tie(a.x, a.y, a.z) < std::tie(b.x, b.y, b.z);
}

OrderingClass ordering_of(const ExponentTriple& t) {
  if (t.x > t.z && t.z > t.y) return OrderingClass::XZY;
  if (t.y > t.z && t.z > t.x) return OrderingClass::YZX;
  return OrderingClass::Other;
}

std::vector<ExponentTriple> solve_instance_range(const EquationInstance& inst, unsigned zlo,
                                                 unsigned zhi) {
  std::vector<ExponentTriple> out;
  const Int ak = inst.a * inst.k;
  const Int bk = inst.b * inst.k;
  const Int ck = inst.sum() * inst.k;
  for (unsigned z = zlo; z <= zhi; ++z) {
    const Int target = pow_int(ck, z);
    Int apow = ak;
    for (unsigned x = 1; apow < target; ++x, apow *= ak) {
      const Int rest = target - apow;
      if (auto y = exact_root(rest, bk); y && *y >= 1) {
        out.push_back({x, *y, z});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ExponentTriple> solve_instance(const EquationInstance& inst, unsigned zmax) {
  if (zmax < 1) throw std::domain_error("solve_instance: zmax must be >= 1");
  return solve_instance_range(inst, 1, zmax);
}

std::vector<std::pair<unsigned, unsigned>> candidate_yz(const PrimePower& b, const Int& k,
                                                        unsigned zmax) {
  if (k < 2) throw std::invalid_argument("candidate_yz: k must exceed 1");
  std::vector<std::pair<unsigned, unsigned>> out;
  if (radical(k) != b.base) return out;  // k must be a power of the prime of b
  const unsigned j = *exact_root(k, b.base);
  const unsigned s = b.exponent;
  // b^y = k^{z-y} compared on exponents of the shared prime: s*y = j*(z-y).
  for (unsigned y = 1;; ++y) {
    const unsigned long long num = static_cast<unsigned long long>(y) * (s + j);
    if (num % j == 0) {
      const unsigned long long z = num / j;
      if (z > zmax) break;
      if (z > y) out.emplace_back(y, static_cast<unsigned>(z));
    }
    if (static_cast<unsigned long long>(y) * (s + j) / j > zmax) break;
  }
  return out;
}

std::vector<ExponentTriple> pruned_search_xzy_range(const EquationInstance& inst, unsigned zlo,
                                                    unsigned zhi) {
  if (inst.k < 2) throw std::invalid_argument("pruned_search_xzy: k must exceed 1");
  const auto bp = as_prime_power(inst.b);
  if (!bp) throw std::invalid_argument("pruned_search_xzy: b must be a prime power");
  std::vector<ExponentTriple> out;
  const Int sum = inst.sum();
  for (const auto& [y, z] : candidate_yz(*bp, inst.k, zhi)) {
    if (z < zlo) continue;
    const Int target = pow_int(sum, z);
    // a^x k^{x-z} + 1 = (a+b)^z, scanning x > z; the left side grows by a*k
    // per step, so the scan is exact and self-terminating.
    Int lhs = pow_int(inst.a, z + 1) * inst.k;
    for (unsigned x = z + 1;; ++x) {
      if (lhs + 1 == target) {
        out.push_back({x, y, z});
        break;
      }
      if (lhs + 1 > target) break;
      lhs *= inst.a * inst.k;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ExponentTriple> pruned_search_xzy(const EquationInstance& inst, unsigned zmax) {
  return pruned_search_xzy_range(inst, 1, zmax);
}

ReductionWitness reduction_witness(const EquationInstance& inst, const ExponentTriple& t) {
  if (inst.k < 2) throw std::invalid_argument("reduction_witness: k must exceed 1");
  const Int lhs = pow_int(inst.a * inst.k, t.x) + pow_int(inst.b * inst.k, t.y);
  if (lhs != pow_int(inst.sum() * inst.k, t.z)) {
    throw std::invalid_argument("reduction_witness: the triple does not solve the instance");
  }
  if (ordering_of(t) != OrderingClass::XZY) {
    throw std::invalid_argument("reduction_witness: ordering must be x > z > y");
  }

  ReductionWitness out;
  out.rad_k = radical(inst.k);
  out.rad_divides_b = inst.b % out.rad_k == 0;
  std::ostringstream ev;
  ev << "(a=" << inst.a << ", b=" << inst.b << ", k=" << inst.k << "), (x=" << t.x
     << ", y=" << t.y << ", z=" << t.z << ")";
  if (!out.rad_divides_b) {
    throw LemmaFalsification("reduction of an x>z>y solution",
                             "rad(k) does not divide b at " + ev.str());
  }

  // Every coprime split b = b1*b2 with b1 > 1 and b1^y = k^{z-y}.
  const Factorization fb = factorize(inst.b);
  const std::size_t parts = fb.factors.size();
  const Int k_power = pow_int(inst.k, t.z - t.y);
  for (std::size_t mask = 1; mask < (std::size_t(1) << parts); ++mask) {
    Int b1 = 1;
    for (std::size_t i = 0; i < parts; ++i) {
      if (mask & (std::size_t(1) << i)) b1 *= pow_int(fb.factors[i].prime, fb.factors[i].exponent);
    }
    if (pow_int(b1, t.y) != k_power) continue;
    CoprimeSplitWitness w;
    w.b1 = b1;
    w.b2 = inst.b / b1;
    w.power_equation_holds = true;
    w.residual_equation_holds = pow_int(inst.a, t.x) * pow_int(inst.k, t.x - t.z) +
                                    pow_int(w.b2, t.y) ==
                                pow_int(inst.sum(), t.z);
    if (!w.residual_equation_holds) {
      throw LemmaFalsification("reduction of an x>z>y solution",
                               "residual equation failed for split b1=" + w.b1.str() +
                                   ", b2=" + w.b2.str() + " at " + ev.str());
    }
    out.witnesses.push_back(std::move(w));
  }
  if (out.witnesses.empty()) {
    throw LemmaFalsification("reduction of an x>z>y solution",
                             "no coprime split b = b1*b2 with b1^y = k^(z-y) at " + ev.str());
  }
  return out;
}

namespace coverage {

bool sun_tang_pair(const Int& a, const Int& b) {
  static const std::pair<int, int> pairs[] = {{3, 5}, {5, 8}, {8, 13}, {13, 21}};
  for (const auto& [u, v] : pairs) {
    if ((a == u && b == v) || (a == v && b == u)) return true;
  }
  return false;
}

bool yuan_han_square_b4(const Int& a, const Int& b) { return b == 4 && is_perfect_square(a); }

bool yuan_han_squares_mod8(const Int& a, const Int& b) {
  return is_perfect_square(a) && is_perfect_square(b) && b % 8 == 4;
}

bool le_soydan_squares(const Int& a, const Int& b) {
  return is_perfect_square(a) && is_perfect_square(b) && a > 64 * b * b * b;
}

bool prime_power_pair(const Int& a, const Int& b) {
  if (a < 3 || b < 3) return false;  // the ordering step needs min(a,b) > 2
  return as_prime_power(a).has_value() && as_prime_power(b).has_value();
}

}  // namespace coverage

namespace {

// The three prime-power shapes that exclude x > z > y for the oriented pair
// (first, second): (2^r, p^s) with r > 1; (p^r, 2^s) with s > 1; (p^r, q^s).
std::optional<Justification> prime_power_case(const Int& first, const Int& second) {
  const auto fp = as_prime_power(first);
  const auto sp = as_prime_power(second);
  if (!fp || !sp) return std::nullopt;
  const bool first_even = fp->base == 2;
  const bool second_even = sp->base == 2;
  if (first_even && !second_even && fp->exponent > 1) return Justification::PrimePowerEvenOdd;
  if (!first_even && second_even && sp->exponent > 1) return Justification::PrimePowerOddEven;
  if (!first_even && !second_even) return Justification::PrimePowerOddOdd;
  return std::nullopt;
}

}  // namespace

const char* to_string(Exclusion e) {
  switch (e) {
    case Exclusion::NoXZY: return "no-xzy";
    case Exclusion::NoYZX: return "no-yzx";
    case Exclusion::NoExceptional: return "no-exceptional";
  }
  return "?";
}

const char* to_string(Justification j) {
  switch (j) {
    case Justification::SunTangPair: return "sun-tang-pair";
    case Justification::YuanHanSquareB4: return "yuan-han-square-b4";
    case Justification::YuanHanSquaresMod8: return "yuan-han-squares-mod8";
    case Justification::LeSoydanSquares: return "le-soydan-squares";
    case Justification::PrimePowerEvenOdd: return "prime-power-even-odd";
    case Justification::PrimePowerOddEven: return "prime-power-odd-even";
    case Justification::PrimePowerOddOdd: return "prime-power-odd-odd";
    case Justification::PrimePowerPair: return "prime-power-pair";
  }
  return "?";
}

Verdict guard(const EquationInstance& inst) {
  Verdict v{inst, {}, {}, {}};
  if (inst.k < 2) {
    v.notes.push_back("k = 1: every covered result assumes k > 1");
    return v;
  }

  const auto oriented = [&](const Int& first, const Int& second, bool swapped) {
    const Exclusion ordering = swapped ? Exclusion::NoYZX : Exclusion::NoXZY;
    if (const auto j = prime_power_case(first, second)) {
      v.exclusions.insert(ordering);
      v.justifications.insert(*j);
    }
    if (coverage::le_soydan_squares(first, second)) {
      v.exclusions.insert(ordering);
      v.justifications.insert(Justification::LeSoydanSquares);
    }
    if (coverage::yuan_han_squares_mod8(first, second)) {
      v.exclusions.insert(swapped ? Exclusion::NoXZY : Exclusion::NoYZX);
      v.justifications.insert(Justification::YuanHanSquaresMod8);
    }
  };
  oriented(inst.a, inst.b, false);
  oriented(inst.b, inst.a, true);

  if (coverage::sun_tang_pair(inst.a, inst.b)) {
    v.exclusions.insert(Exclusion::NoExceptional);
    v.justifications.insert(Justification::SunTangPair);
  }
  if (coverage::yuan_han_square_b4(inst.a, inst.b) || coverage::yuan_han_square_b4(inst.b, inst.a)) {
    v.exclusions.insert(Exclusion::NoExceptional);
    v.justifications.insert(Justification::YuanHanSquareB4);
  }
  if (coverage::prime_power_pair(inst.a, inst.b)) {
    v.exclusions.insert(Exclusion::NoExceptional);
    v.justifications.insert(Justification::PrimePowerPair);
  }
  // An exceptional solution with k > 1 and min(a,b) > 2 must order as x>z>y
  // or y>z>x; excluding both orderings settles the instance.
  if (v.exclusions.count(Exclusion::NoXZY) && v.exclusions.count(Exclusion::NoYZX) &&
      std::min(inst.a, inst.b) > 2) {
    if (v.exclusions.insert(Exclusion::NoExceptional).second) {
      v.notes.push_back("both orderings excluded with min(a,b) > 2 and k > 1");
    }
  }
  return v;
}

CensusReport census(const Int& n) {
  if (n < 4) throw std::domain_error("census: n must be >= 4");
  if (n > 50000) throw std::domain_error("census: N beyond the desk-scale pair loop");
  CensusReport report;
  report.n = n;
  report.convention = "unordered pairs {a,b}, gcd(a,b)=1, 1 < a < b <= N";

  // One pass of per-value attributes, so the pair loop is gcd + lookups.
  const std::size_t limit = n.convert_to<std::size_t>();
  std::vector<bool> pp(limit + 1, false), sq(limit + 1, false);
  for (std::size_t v = 2; v <= limit; ++v) {
    pp[v] = as_prime_power(Int(v)).has_value();
    sq[v] = is_perfect_square(Int(v));
  }

  CensusClass sun_tang{"sun_tang", {}};
  CensusClass yuan_han{"yuan_han", {}};
  CensusClass le_soydan{"le_soydan", {}};
  CensusClass prime_power{"prime_power", {}};
  std::size_t covered = 0;

  const std::pair<std::size_t, std::size_t> sun_tang_pairs[] = {
      {3, 5}, {5, 8}, {8, 13}, {13, 21}};
  for (std::size_t a = 2; a <= limit; ++a) {
    for (std::size_t b = a + 1; b <= limit; ++b) {
      if (std::gcd(a, b) != 1) continue;
      bool any = false;
      if (std::find(std::begin(sun_tang_pairs), std::end(sun_tang_pairs),
                    std::make_pair(a, b)) != std::end(sun_tang_pairs)) {
        sun_tang.pairs.emplace_back(a, b);
        any = true;
      }
      if ((sq[a] && b == 4) || (sq[b] && a == 4)) {
        yuan_han.pairs.emplace_back(a, b);
        any = true;
      }
      // Full coverage by the square-based results needs both orderings:
      // the larger square beyond 64*(smaller)^3 and the smaller = 4 (mod 8).
      if (sq[a] && sq[b]) {
        const auto cube_gap = [](std::size_t big, std::size_t small) {
          return Int(big) > 64 * Int(small) * small * small;
        };
        if ((cube_gap(a, b) && b % 8 == 4) || (cube_gap(b, a) && a % 8 == 4)) {
          le_soydan.pairs.emplace_back(a, b);
          any = true;
        }
      }
      if (pp[a] && pp[b] && a > 2) {
        prime_power.pairs.emplace_back(a, b);
        any = true;
      }
      if (any) ++covered;
    }
  }
  report.classes = {std::move(sun_tang), std::move(yuan_han), std::move(le_soydan),
                    std::move(prime_power)};
  report.covered_total = covered;
  return report;
}

}  // namespace akbk
