// Acceptance suite: runs every reproduction and property gate at full scale
// and prints one PASS/FAIL line per criterion. Exits nonzero if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "akbk/classify.hpp"
#include "akbk/driver.hpp"
#include "akbk/lemmas.hpp"
#include "akbk/search.hpp"

using namespace akbk;

namespace {

std::vector<int> prime_powers_up_to_20() {
  std::vector<int> out;
  for (int v = 3; v <= 20; ++v) {
    if (as_prime_power(v).has_value()) out.push_back(v);
  }
  return out;
}

struct GridInstance {
  int a, b, k;
};

std::vector<GridInstance> theorem_grid(bool ordered) {
  std::vector<GridInstance> out;
  const auto pps = prime_powers_up_to_20();
  for (int a : pps) {
    for (int b : pps) {
      if (a == b || std::gcd(a, b) != 1) continue;
      if (!ordered && a > b) continue;
      for (int k = 2; k <= 12; ++k) out.push_back({a, b, k});
    }
  }
  return out;
}

bool criterion1(std::string& detail) {
  const Enum2pResult box = enum_2p(300, 6);
  if (!box.skipped.empty()) {
    detail = "enumeration skipped cells under the ceiling";
    return false;
  }
  std::vector<TwoPrimeSolution> sporadic_classified;
  std::vector<TwoPrimeSolution> even_small_m;
  for (const TwoPrimeSolution& s : box.solutions) {
    const TwoPrimeOutcome outcome = classify_2p(s);  // throws unless exactly one shape
    if (std::holds_alternative<SporadicMatch>(outcome)) sporadic_classified.push_back(s);
    if (s.ell % 2 == 0 && s.m <= 5) even_small_m.push_back(s);
  }
  std::vector<TwoPrimeSolution> expected(sporadic_two_prime_solutions().begin(),
                                         sporadic_two_prime_solutions().end());
  std::sort(expected.begin(), expected.end());
  std::sort(sporadic_classified.begin(), sporadic_classified.end());
  std::sort(even_small_m.begin(), even_small_m.end());
  std::ostringstream os;
  os << box.solutions.size() << " solutions in the box, all uniquely classified";
  detail = os.str();
  return sporadic_classified == expected && even_small_m == expected;
}

bool criterion2(std::string& detail) {
  const auto found = nagell_ljunggren_enumerate(100, 12, 10);
  const std::vector<NLSolution> expected = {{Int(3), Int(11), 5, 2}, {Int(7), Int(20), 4, 2}};
  if (found != expected) {
    detail = "enumerated set differs from {(3,11,5,2), (7,20,4,2)}";
    return false;
  }
  const ReportEnvelope env = execute(parse_plan(
      {"lemma", "--name", "nagell-ljunggren", "--xmax", "100", "--mmax", "12", "--nmax", "10"}));
  for (const Finding& f : env.findings) {
    if (f.kind == "discrepancy" && f.subject == "nagell-ljunggren-reference-list") {
      detail = "both solutions found; report flags the reference-list discrepancy";
      return true;
    }
  }
  detail = "report did not flag the reference-list discrepancy";
  return false;
}

bool criterion3(std::string& detail) {
  const auto found = catalan_enumerate(300, 10);
  detail = "box (vmax=300, emax=10)";
  return found == std::vector<CatalanSolution>{{Int(3), Int(2), 2, 3}};
}

bool criterion4(std::string& detail) {
  const auto grid = theorem_grid(/*ordered=*/true);
  std::size_t checked = 0;
  for (const GridInstance& g : grid) {
    const auto sols = solve_instance(EquationInstance::create(g.a, g.b, g.k), 12);
    if (sols.size() != 1 || sols[0] != ExponentTriple{1, 1, 1}) {
      std::ostringstream os;
      os << "unexpected solution set at (a=" << g.a << ", b=" << g.b << ", k=" << g.k << ")";
      detail = os.str();
      return false;
    }
    ++checked;
  }
  std::ostringstream os;
  os << checked << " instances, each exactly {(1,1,1)}";
  detail = os.str();
  return true;
}

bool criterion5(std::string& detail) {
  const auto sols = solve_instance(EquationInstance::create(2, 7, 1), 6);
  detail = "2^5 + 7^2 = 9^2 recovered";
  return sols == std::vector<ExponentTriple>{{1, 1, 1}, {5, 2, 2}};
}

bool criterion6(std::string& detail) {
  const auto grid = theorem_grid(/*ordered=*/true);
  std::size_t checked = 0;
  for (const GridInstance& g : grid) {
    const auto inst = EquationInstance::create(g.a, g.b, g.k);
    std::vector<ExponentTriple> filtered;
    for (const ExponentTriple& t : solve_instance(inst, 12)) {
      if (ordering_of(t) == OrderingClass::XZY) filtered.push_back(t);
    }
    if (pruned_search_xzy(inst, 12) != filtered) {
      std::ostringstream os;
      os << "pruned/naive mismatch at (a=" << g.a << ", b=" << g.b << ", k=" << g.k << ")";
      detail = os.str();
      return false;
    }
    ++checked;
  }
  std::ostringstream os;
  os << checked << " instances, pruned == xzy-filtered naive (all empty)";
  detail = os.str();
  return true;
}

bool criterion7(std::string& detail) {
  std::size_t checked = 0;
  for (int x = 2; x <= 20; ++x) {
    for (unsigned m = 1; m <= 10; ++m) {
      for (unsigned n = 1; n <= 30; ++n) {
        try {
          power_plus_one_divisibility(x, m, n);
        } catch (const LemmaFalsification&) {
          detail = "power-plus-one divisibility biconditional failed";
          return false;
        }
        ++checked;
      }
    }
  }
  for (unsigned ell : {3u, 5u, 7u, 11u, 13u}) {
    for (int x = 2; x <= 200; ++x) {
      const RepunitDivisorReport r = repunit_divisor_check(x, ell);
      if (!r.all_divisors_congruent || (r.exact_ell_division && !*r.exact_ell_division)) {
        std::ostringstream os;
        os << "repunit divisor condition failed at (x=" << x << ", ell=" << ell << ")";
        detail = os.str();
        return false;
      }
      ++checked;
    }
  }
  for (int p : {3, 5, 7}) {
    for (int x = p + 1; x <= 200; x += p) {
      if (x % p != 1) continue;
      for (unsigned len = 1; len <= 30; ++len) {
        if (!repunit_valuation_check(p, x, len).agree) {
          std::ostringstream os;
          os << "valuation agreement failed at (p=" << p << ", x=" << x << ", ell=" << len << ")";
          detail = os.str();
          return false;
        }
        ++checked;
      }
    }
  }
  std::ostringstream os;
  os << checked << " cells across the three sweeps, zero violations";
  detail = os.str();
  return true;
}

bool criterion8(std::string& detail) {
  const EnumPqResult box = enum_pq(100, 6);
  if (!box.skipped.empty()) {
    detail = "enumeration skipped cells under the ceiling";
    return false;
  }
  for (const PQSolution& s : box.solutions) {
    try {
      const PQClassification c = classify_pq_full(s);
      if (!c.canonical && !c.swapped) {
        detail = "classification returned no outcome";
        return false;
      }
    } catch (const LemmaFalsification& e) {
      detail = std::string("falsification: ") + e.what();
      return false;
    }
  }
  std::ostringstream os;
  os << box.solutions.size() << " solutions, every one matched under some labeling";
  detail = os.str();
  return true;
}

bool criterion9(std::string& detail) {
  const CensusReport ten = census(10);
  const CensusReport five = census(5);
  std::size_t pp_count = 0, st_count = 0;
  for (const CensusClass& c : ten.classes) {
    if (c.name == "prime_power") pp_count = c.pairs.size();
  }
  for (const CensusClass& c : five.classes) {
    if (c.name == "sun_tang") st_count = c.pairs.size();
  }
  std::ostringstream os;
  os << "census(10) prime-power class " << pp_count << ", census(5) sun-tang class " << st_count;
  detail = os.str();
  return pp_count == 13 && st_count == 1 &&
         ten.convention.find("unordered") != std::string::npos;
}

bool criterion10(std::string& detail) {
  const auto grid = theorem_grid(/*ordered=*/false);
  std::size_t compared = 0;
  for (const GridInstance& g : grid) {
    const std::vector<std::string> args = {
        "search",  "--a", std::to_string(g.a), "--b", std::to_string(g.b),
        "--k",     std::to_string(g.k),        "--zmax", "12"};
    RunPlan one = parse_plan(args);
    RunPlan eight = parse_plan(args);
    one.workers = 1;
    eight.workers = 8;
    const ReportEnvelope env1 = execute(one);
    const ReportEnvelope env8 = execute(eight);
    if (render_json(env1, false) != render_json(env8, false)) {
      std::ostringstream os;
      os << "canonical reports differ at (a=" << g.a << ", b=" << g.b << ", k=" << g.k << ")";
      detail = os.str();
      return false;
    }
    if (exit_status(env1) != 0) {
      detail = "sweep run was not clean";
      return false;
    }
    ++compared;
  }
  std::ostringstream os;
  os << compared << " sweep reports byte-identical with 1 and 8 workers";
  detail = os.str();
  return true;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* description;
    std::function<bool(std::string&)> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "sporadic list reproduction and unique classification", criterion1},
      {2, "nagell-ljunggren box with reference-list discrepancy flagged", criterion2},
      {3, "catalan box reproduces the single solution", criterion3},
      {4, "prime-power grid finds only the trivial solution", criterion4},
      {5, "positive control: exceptional solution recovered", criterion5},
      {6, "pruned search equals the xzy-filtered full search", criterion6},
      {7, "divisibility, divisor-congruence, and valuation sweeps", criterion7},
      {8, "two-odd-prime classification covers the enumeration box", criterion8},
      {9, "census counts with stated convention", criterion9},
      {10, "deterministic reports across worker counts", criterion10},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %2d: %s  %s (%s; %.1fs)\n", c.id, ok ? "PASS" : "FAIL", c.description,
                detail.c_str(), secs);
    std::fflush(stdout);
    if (!ok) ++failures;
  }
  if (failures != 0) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
