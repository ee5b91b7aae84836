#include "akbk/classify.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "akbk/bigarith.hpp"
#include "akbk/lemmas.hpp"

namespace akbk {

namespace {

std::string two_prime_str(const TwoPrimeSolution& s) {
  std::ostringstream os;
  os << "(p=" << s.p << ", x=" << s.x << ", ell=" << s.ell << ", m=" << s.m << ", n=" << s.n
     << ")";
  return os.str();
}

std::string pq_str(const PQSolution& s) {
  std::ostringstream os;
  os << "(p=" << s.p << ", q=" << s.q << ", x=" << s.x << ", ell=" << s.ell << ", m=" << s.m
     << ", n=" << s.n << ")";
  return os.str();
}

}  // namespace

bool operator<(const TwoPrimeSolution& a, const TwoPrimeSolution& b) {
  if (a.p != b.p) return a.p < b.p;
  if (a.x != b.x) return a.x < b.x;
  return std::tie(a.ell, a.m, a.n) < std::tie(b.ell, b.m, b.n);
}

bool operator<(const PQSolution& a, const PQSolution& b) {
  if (a.p != b.p) return a.p < b.p;
  if (a.q != b.q) return a.q < b.q;
  if (a.x != b.x) return a.x < b.x;
  return std::tie(a.ell, a.m, a.n) < std::tie(b.ell, b.m, b.n);
}

const std::array<TwoPrimeSolution, 6>& sporadic_two_prime_solutions() {
  static const std::array<TwoPrimeSolution, 6> list = {{
      {Int(3), Int(5), 2, 3, 1},
      {Int(3), Int(7), 2, 4, 1},
      {Int(5), Int(9), 2, 4, 1},
      {Int(5), Int(3), 4, 4, 1},
      {Int(3), Int(17), 2, 5, 2},
      {Int(7), Int(15), 2, 5, 1},
  }};
  return list;
}

Enum2pResult enum_2p_range(const Int& xlo, const Int& xhi, unsigned ellmax) {
  Enum2pResult out;
  for (Int x = xlo < 2 ? Int(2) : xlo; x <= xhi; ++x) {
    for (unsigned ell = 2; ell <= ellmax; ++ell) {
      const Int value = pow_int(x, ell) - 1;
      try {
        const Factorization f = factorize(value);
        if (f.factors.size() == 2 && f.factors[0].prime == 2) {
          out.solutions.push_back(
              {f.factors[1].prime, x, ell, f.factors[0].exponent, f.factors[1].exponent});
        }
      } catch (const CeilingExceeded& e) {
        out.skipped.push_back({x, ell, e.what()});
      }
    }
  }
  std::sort(out.solutions.begin(), out.solutions.end());
  return out;
}

Enum2pResult enum_2p(const Int& xmax, unsigned ellmax) {
  if (xmax < 2 || ellmax < 2) throw std::domain_error("enum_2p: bounds must be >= 2");
  return enum_2p_range(2, xmax, ellmax);
}

TwoPrimeOutcome classify_2p(const TwoPrimeSolution& s) {
  std::vector<TwoPrimeOutcome> matches;

  const auto& sporadic = sporadic_two_prime_solutions();
  for (std::size_t i = 0; i < sporadic.size(); ++i) {
    if (sporadic[i] == s) matches.push_back(SporadicMatch{i});
  }

  if (s.ell == 2 && s.n == 1 && s.m >= 6) {
    for (int zeta : {1, -1}) {
      if (s.x == (Int(1) << (s.m - 1)) + zeta && s.p == (Int(1) << (s.m - 2)) + zeta) {
        matches.push_back(TwoPowerFamilyMatch{zeta});
      }
    }
  }

  if (s.ell % 2 == 1 && is_prime(Int(s.ell)) && s.x - 1 == Int(1) << s.m) {
    const Int rep = repunit(s.x, s.ell);
    if (rep == pow_int(s.p, s.n) && s.p % (2 * s.ell) == 1) {
      matches.push_back(OddPrimeRepunitMatch{rep});
    }
  }

  if (matches.size() != 1) {
    std::ostringstream os;
    os << two_prime_str(s) << " matched " << matches.size() << " of the three shapes";
    throw LemmaFalsification("two-prime classification", os.str());
  }
  return matches.front();
}

std::string outcome_name(const TwoPrimeOutcome& o) {
  struct Visitor {
    std::string operator()(const SporadicMatch&) const { return "sporadic"; }
    std::string operator()(const TwoPowerFamilyMatch&) const { return "two-power-family"; }
    std::string operator()(const OddPrimeRepunitMatch&) const { return "odd-prime-repunit"; }
  };
  return std::visit(Visitor{}, o);
}

EnumPqResult enum_pq_range(const Int& xlo, const Int& xhi, unsigned ellmax) {
  EnumPqResult out;
  for (Int x = xlo < 2 ? Int(2) : xlo; x <= xhi; ++x) {
    for (unsigned ell = 2; ell <= ellmax; ++ell) {
      const Int value = pow_int(x, ell) - 1;
      try {
        const Factorization f = factorize(value);
        if (f.factors.size() == 2 && f.factors[0].prime != 2) {
          out.solutions.push_back({f.factors[0].prime, f.factors[1].prime, x, ell,
                                   f.factors[0].exponent, f.factors[1].exponent});
        }
      } catch (const CeilingExceeded& e) {
        out.skipped.push_back({x, ell, e.what()});
      }
    }
  }
  std::sort(out.solutions.begin(), out.solutions.end());
  return out;
}

EnumPqResult enum_pq(const Int& xmax, unsigned ellmax) {
  if (xmax < 2 || ellmax < 2) throw std::domain_error("enum_pq: bounds must be >= 2");
  return enum_pq_range(2, xmax, ellmax);
}

std::vector<PQOutcome> pq_conclusion_matches(const PQSolution& s, PQLabeling labeling) {
  // Under the labeling, the first role is (fp, fm) and the second (sp, sn).
  const bool canonical = labeling == PQLabeling::Canonical;
  const Int& fp = canonical ? s.p : s.q;
  const Int& sp = canonical ? s.q : s.p;
  const unsigned fm = canonical ? s.m : s.n;
  const unsigned sn = canonical ? s.n : s.m;

  std::vector<PQOutcome> matches;
  if (s.ell % 2 == 0) {
    const Int h = pow_int(s.x, s.ell / 2);
    for (int zeta : {1, -1}) {
      if (h + zeta == pow_int(fp, fm) && h - zeta == pow_int(sp, sn)) {
        matches.push_back(EvenSplitMatch{zeta});
      }
    }
    return matches;
  }

  if (s.x == 2) {
    if (pow_int(2, s.ell) - 1 == pow_int(fp, fm) * pow_int(sp, sn)) {
      matches.push_back(MersenneMatch{});
    }
    return matches;
  }

  const Int rep = repunit(s.x, s.ell);
  const bool ell_odd_prime = is_prime(Int(s.ell));

  if (Int(s.ell) == fp && fm > 1 && s.x - 1 == pow_int(fp, fm - 1) &&
      rep == fp * pow_int(sp, sn) && sp % (2 * fp) == 1) {
    matches.push_back(EllEqualsPMatch{});
  }
  if (Int(s.ell) == sp && sn > 1 && s.x - 1 == pow_int(sp, sn - 1) &&
      rep == pow_int(fp, fm) * sp && fp % (2 * sp) == 1) {
    matches.push_back(EllEqualsQMatch{});
  }
  if (ell_odd_prime && s.x - 1 == pow_int(fp, fm) && rep == pow_int(sp, sn) &&
      sp % (2 * s.ell) == 1) {
    matches.push_back(RepunitQMatch{});
  }
  if (ell_odd_prime && s.x - 1 == pow_int(sp, sn) && rep == pow_int(fp, fm) &&
      fp % (2 * s.ell) == 1) {
    matches.push_back(RepunitPMatch{});
  }
  return matches;
}

std::optional<PQOutcome> classify_pq(const PQSolution& s, PQLabeling labeling) {
  const auto matches = pq_conclusion_matches(s, labeling);
  if (matches.empty()) return std::nullopt;
  return matches.front();
}

PQClassification classify_pq_full(const PQSolution& s) {
  PQClassification out;
  const auto canonical = pq_conclusion_matches(s, PQLabeling::Canonical);
  const auto swapped = pq_conclusion_matches(s, PQLabeling::Swapped);
  if (!canonical.empty()) out.canonical = canonical.front();
  if (!swapped.empty()) out.swapped = swapped.front();
  for (const auto* matched : {&canonical, &swapped}) {
    if (matched->size() > 1) {
      std::ostringstream os;
      os << pq_str(s) << " matched " << matched->size() << " shapes under the "
         << (matched == &canonical ? "canonical" : "swapped") << " labeling";
      out.notes.push_back(os.str());
    }
  }
  if (canonical.empty() && swapped.empty()) {
    throw LemmaFalsification("two-odd-prime classification",
                             pq_str(s) + " matched no shape under either labeling");
  }
  return out;
}

std::string outcome_name(const PQOutcome& o) {
  struct Visitor {
    std::string operator()(const EvenSplitMatch&) const { return "even-split"; }
    std::string operator()(const MersenneMatch&) const { return "mersenne"; }
    std::string operator()(const EllEqualsPMatch&) const { return "ell-equals-p"; }
    std::string operator()(const EllEqualsQMatch&) const { return "ell-equals-q"; }
    std::string operator()(const RepunitQMatch&) const { return "repunit-q"; }
    std::string operator()(const RepunitPMatch&) const { return "repunit-p"; }
  };
  return std::visit(Visitor{}, o);
}

}  // namespace akbk
