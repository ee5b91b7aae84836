#include "akbk/driver.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "akbk/bigarith.hpp"
#include "akbk/classify.hpp"
#include "akbk/lemmas.hpp"
#include "akbk/search.hpp"
#include "akbk/version.hpp"

namespace akbk {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr const char* kSubcommands[] = {"search",      "pruned-search", "classify-2p",
                                        "classify-pq", "lemma",         "census",
                                        "guard"};

constexpr const char* kLemmaNames[] = {"nagell-ljunggren", "catalan", "power-divisibility",
                                       "repunit-divisors", "repunit-valuation",
                                       "prime-power-repunit"};

struct BoundSpec {
  const char* flag;
  long min;
  const char* requirement;
  long max = 0;  // 0 = unbounded; exponent-like bounds stay desk-scale
};

std::vector<BoundSpec> required_bounds(const std::string& subcommand,
                                       const std::string& lemma_name) {
  constexpr long kExpCap = 100000;
  if (subcommand == "search") {
    return {{"a", 2, "must exceed 1"},
            {"b", 2, "must exceed 1"},
            {"k", 1, "must be >= 1"},
            {"zmax", 1, "must be between 1 and 100000", kExpCap}};
  }
  if (subcommand == "pruned-search") {
    return {{"a", 2, "must exceed 1"},
            {"b", 2, "must exceed 1"},
            {"k", 2, "must exceed 1 for the pruned pipeline"},
            {"zmax", 1, "must be between 1 and 100000", kExpCap}};
  }
  if (subcommand == "classify-2p" || subcommand == "classify-pq") {
    return {{"xmax", 2, "must be >= 2"},
            {"lmax", 2, "must be between 2 and 100000", kExpCap}};
  }
  if (subcommand == "census") {
    return {{"n", 4, "must be >= 4"}};
  }
  if (subcommand == "guard") {
    return {{"a", 2, "must exceed 1"}, {"b", 2, "must exceed 1"}, {"k", 1, "must be >= 1"}};
  }
  if (subcommand == "lemma") {
    if (lemma_name == "nagell-ljunggren") {
      return {{"xmax", 2, "must be >= 2"},
              {"mmax", 3, "must be between 3 and 100000", kExpCap},
              {"nmax", 2, "must be between 2 and 100000", kExpCap}};
    }
    if (lemma_name == "catalan") {
      return {{"vmax", 2, "must be >= 2"},
              {"emax", 2, "must be between 2 and 100000", kExpCap}};
    }
    if (lemma_name == "power-divisibility") {
      return {{"xmax", 2, "must be >= 2"},
              {"mmax", 1, "must be between 1 and 100000", kExpCap},
              {"nmax", 1, "must be between 1 and 100000", kExpCap}};
    }
    if (lemma_name == "repunit-divisors") {
      return {{"xmax", 2, "must be >= 2"},
              {"lmax", 3, "must be between 3 and 100000", kExpCap}};
    }
    if (lemma_name == "repunit-valuation") {
      return {{"pmax", 3, "must be between 3 and 100000", kExpCap},
              {"xmax", 2, "must be >= 2"},
              {"lmax", 1, "must be between 1 and 100000", kExpCap}};
    }
    if (lemma_name == "prime-power-repunit") {
      return {{"xmax", 2, "must be >= 2"},
              {"lmax", 3, "must be between 3 and 100000", kExpCap}};
    }
  }
  return {};
}

Int parse_int_flag(const std::string& flag, const std::string& text) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    throw UsageError("flag --" + flag + ": not a nonnegative integer: '" + text + "'");
  }
  return Int(text);
}

// Splits [lo, hi] into up to `workers` contiguous chunks and runs fn on each
// in its own task; results come back in shard order, so merging is
// deterministic for any worker count.
template <class R, class Fn>
std::vector<R> shard_range(const Int& lo, const Int& hi, unsigned workers, Fn fn) {
  std::vector<R> results;
  if (hi < lo) return results;
  const Int total = hi - lo + 1;
  unsigned w = workers == 0 ? 1 : workers;
  if (total < w) w = total.convert_to<unsigned>();
  if (w <= 1) {
    results.push_back(fn(lo, hi));
    return results;
  }
  const Int chunk = (total + w - 1) / w;
  std::vector<std::future<R>> futures;
  Int start = lo;
  for (unsigned i = 0; i < w && start <= hi; ++i) {
    Int end = start + chunk - 1;
    if (end > hi) end = hi;
    futures.push_back(std::async(std::launch::async, fn, start, end));
    start = end + 1;
  }
  results.reserve(futures.size());
  for (auto& f : futures) results.push_back(f.get());
  return results;
}

std::string fmt_bool(bool b) { return b ? "true" : "false"; }

// ---------------------------------------------------------------------------
// Per-subcommand payload builders. Payloads hold every integer as a decimal
// string and are canonically sorted before rendering.
// ---------------------------------------------------------------------------

struct Payload {
  ordered_json json;
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;
  std::vector<Finding> findings;
};

void add_skip_findings(Payload& p, const std::vector<SkippedCell>& skipped,
                       const std::string& subject) {
  for (const SkippedCell& cell : skipped) {
    p.findings.push_back({"ceiling", subject,
                          "cell (x=" + cell.x.str() + ", ell=" + std::to_string(cell.ell) +
                              ") skipped: " + cell.reason});
  }
}

Payload run_search(const RunPlan& plan) {
  Payload p;
  EquationInstance inst =
      EquationInstance::create(plan.bound("a"), plan.bound("b"), plan.bound("k"));
  const unsigned zmax = plan.bound("zmax").convert_to<unsigned>();

  std::vector<ExponentTriple> all;
  const auto shards = shard_range<std::vector<ExponentTriple>>(
      1, zmax, plan.workers, [&inst](const Int& zlo, const Int& zhi) {
        return solve_instance_range(inst, zlo.convert_to<unsigned>(),
                                    zhi.convert_to<unsigned>());
      });
  for (const auto& shard : shards) all.insert(all.end(), shard.begin(), shard.end());
  std::sort(all.begin(), all.end());

  p.csv_header = {"x", "y", "z", "exceptional"};
  p.json = ordered_json::array();
  for (const ExponentTriple& t : all) {
    ordered_json row;
    row["x"] = std::to_string(t.x);
    row["y"] = std::to_string(t.y);
    row["z"] = std::to_string(t.z);
    row["exceptional"] = t.exceptional();
    p.json.push_back(row);
    p.csv_rows.push_back(
        {std::to_string(t.x), std::to_string(t.y), std::to_string(t.z), fmt_bool(t.exceptional())});
    // Exceptional solutions with k > 1 and min(a,b) > 2 must order strictly;
    // anything else would falsify the ordering step.
    if (t.exceptional() && inst.k > 1 && std::min(inst.a, inst.b) > 2 &&
        ordering_of(t) == OrderingClass::Other) {
      p.findings.push_back({"lemma-falsification", "exceptional-solution-ordering",
                            "triple (" + std::to_string(t.x) + "," + std::to_string(t.y) + "," +
                                std::to_string(t.z) + ") has no strict ordering"});
    }
  }
  return p;
}

Payload run_pruned_search(const RunPlan& plan) {
  Payload p;
  EquationInstance inst =
      EquationInstance::create(plan.bound("a"), plan.bound("b"), plan.bound("k"));
  const unsigned zmax = plan.bound("zmax").convert_to<unsigned>();
  std::vector<ExponentTriple> found;
  try {
    const auto shards = shard_range<std::vector<ExponentTriple>>(
        1, zmax, plan.workers, [&inst](const Int& zlo, const Int& zhi) {
          return pruned_search_xzy_range(inst, zlo.convert_to<unsigned>(),
                                         zhi.convert_to<unsigned>());
        });
    for (const auto& shard : shards) found.insert(found.end(), shard.begin(), shard.end());
    std::sort(found.begin(), found.end());
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("pruned-search: ") + e.what());
  }
  p.csv_header = {"x", "y", "z", "exceptional"};
  p.json = ordered_json::array();
  for (const ExponentTriple& t : found) {
    ordered_json row;
    row["x"] = std::to_string(t.x);
    row["y"] = std::to_string(t.y);
    row["z"] = std::to_string(t.z);
    row["exceptional"] = t.exceptional();
    p.json.push_back(row);
    p.csv_rows.push_back(
        {std::to_string(t.x), std::to_string(t.y), std::to_string(t.z), fmt_bool(t.exceptional())});
  }
  return p;
}

Payload run_classify_2p(const RunPlan& plan) {
  Payload p;
  const Int xmax = plan.bound("xmax");
  const unsigned ellmax = plan.bound("lmax").convert_to<unsigned>();

  Enum2pResult merged;
  const auto shards = shard_range<Enum2pResult>(
      2, xmax, plan.workers,
      [ellmax](const Int& lo, const Int& hi) { return enum_2p_range(lo, hi, ellmax); });
  for (const auto& shard : shards) {
    merged.solutions.insert(merged.solutions.end(), shard.solutions.begin(),
                            shard.solutions.end());
    merged.skipped.insert(merged.skipped.end(), shard.skipped.begin(), shard.skipped.end());
  }
  std::sort(merged.solutions.begin(), merged.solutions.end());
  add_skip_findings(p, merged.skipped, "classify-2p");

  bool family_seen = false;
  p.csv_header = {"p", "x", "ell", "m", "n", "outcome", "detail"};
  p.json = ordered_json::array();
  for (const TwoPrimeSolution& s : merged.solutions) {
    std::string name = "unclassified";
    std::string detail;
    try {
      const TwoPrimeOutcome outcome = classify_2p(s);
      name = outcome_name(outcome);
      if (const auto* sp = std::get_if<SporadicMatch>(&outcome)) {
        detail = "index " + std::to_string(sp->index);
      } else if (const auto* fam = std::get_if<TwoPowerFamilyMatch>(&outcome)) {
        detail = "zeta " + std::string(fam->zeta > 0 ? "+1" : "-1");
        family_seen = true;
      } else if (const auto* rep = std::get_if<OddPrimeRepunitMatch>(&outcome)) {
        detail = "repunit " + rep->repunit_value.str();
      }
    } catch (const LemmaFalsification& e) {
      p.findings.push_back({"lemma-falsification", e.subject(), e.evidence()});
    }
    ordered_json row;
    row["p"] = s.p.str();
    row["x"] = s.x.str();
    row["ell"] = std::to_string(s.ell);
    row["m"] = std::to_string(s.m);
    row["n"] = std::to_string(s.n);
    row["outcome"] = name;
    row["detail"] = detail;
    p.json.push_back(row);
    p.csv_rows.push_back({s.p.str(), s.x.str(), std::to_string(s.ell), std::to_string(s.m),
                          std::to_string(s.n), name, detail});
  }
  if (family_seen) {
    p.findings.push_back(
        {"note", "two-power-family-sign",
         "family matches use p = 2^(m-2)+zeta; the reference statement prints -zeta, but its "
         "own derivation and all enumerated data give +zeta"});
  }
  return p;
}

Payload run_classify_pq(const RunPlan& plan) {
  Payload p;
  const Int xmax = plan.bound("xmax");
  const unsigned ellmax = plan.bound("lmax").convert_to<unsigned>();

  EnumPqResult merged;
  const auto shards = shard_range<EnumPqResult>(
      2, xmax, plan.workers,
      [ellmax](const Int& lo, const Int& hi) { return enum_pq_range(lo, hi, ellmax); });
  for (const auto& shard : shards) {
    merged.solutions.insert(merged.solutions.end(), shard.solutions.begin(),
                            shard.solutions.end());
    merged.skipped.insert(merged.skipped.end(), shard.skipped.begin(), shard.skipped.end());
  }
  std::sort(merged.solutions.begin(), merged.solutions.end());
  add_skip_findings(p, merged.skipped, "classify-pq");

  p.csv_header = {"p", "q", "x", "ell", "m", "n", "outcome_canonical", "outcome_swapped"};
  p.json = ordered_json::array();
  for (const PQSolution& s : merged.solutions) {
    std::string canonical = "none";
    std::string swapped = "none";
    try {
      const PQClassification c = classify_pq_full(s);
      if (c.canonical) canonical = outcome_name(*c.canonical);
      if (c.swapped) swapped = outcome_name(*c.swapped);
      for (const std::string& note : c.notes) {
        p.findings.push_back({"note", "classify-pq-double-match", note});
      }
    } catch (const LemmaFalsification& e) {
      p.findings.push_back({"lemma-falsification", e.subject(), e.evidence()});
    }
    ordered_json row;
    row["p"] = s.p.str();
    row["q"] = s.q.str();
    row["x"] = s.x.str();
    row["ell"] = std::to_string(s.ell);
    row["m"] = std::to_string(s.m);
    row["n"] = std::to_string(s.n);
    row["outcome_canonical"] = canonical;
    row["outcome_swapped"] = swapped;
    p.json.push_back(row);
    p.csv_rows.push_back({s.p.str(), s.q.str(), s.x.str(), std::to_string(s.ell),
                          std::to_string(s.m), std::to_string(s.n), canonical, swapped});
  }
  return p;
}

Payload run_lemma_nl(const RunPlan& plan) {
  Payload p;
  const Int xmax = plan.bound("xmax");
  const unsigned mmax = plan.bound("mmax").convert_to<unsigned>();
  const unsigned nmax = plan.bound("nmax").convert_to<unsigned>();

  std::vector<NLSolution> all;
  const auto shards = shard_range<std::vector<NLSolution>>(
      2, xmax, plan.workers, [mmax, nmax](const Int& lo, const Int& hi) {
        return nagell_ljunggren_enumerate_range(lo, hi, mmax, nmax);
      });
  for (const auto& shard : shards) all.insert(all.end(), shard.begin(), shard.end());
  std::sort(all.begin(), all.end());

  p.csv_header = {"x", "y", "m", "n"};
  p.json = ordered_json::array();
  for (const NLSolution& s : all) {
    ordered_json row;
    row["x"] = s.x.str();
    row["y"] = s.y.str();
    row["m"] = std::to_string(s.m);
    row["n"] = std::to_string(s.n);
    p.json.push_back(row);
    p.csv_rows.push_back({s.x.str(), s.y.str(), std::to_string(s.m), std::to_string(s.n)});
  }
  for (const NLSolution& s : nagell_ljunggren_discrepancies(all)) {
    p.findings.push_back(
        {"discrepancy", "nagell-ljunggren-reference-list",
         "found (" + s.x.str() + "," + s.y.str() + "," + std::to_string(s.m) + "," +
             std::to_string(s.n) + ") outside the reference list [(3,11,5,2)]"});
  }
  return p;
}

Payload run_lemma_catalan(const RunPlan& plan) {
  Payload p;
  const Int vmax = plan.bound("vmax");
  const unsigned emax = plan.bound("emax").convert_to<unsigned>();

  std::vector<CatalanSolution> all;
  const auto shards = shard_range<std::vector<CatalanSolution>>(
      2, vmax, plan.workers, [&vmax, emax](const Int& lo, const Int& hi) {
        return catalan_enumerate_range(lo, hi, vmax, emax);
      });
  for (const auto& shard : shards) all.insert(all.end(), shard.begin(), shard.end());
  std::sort(all.begin(), all.end());

  p.csv_header = {"x", "y", "m", "n"};
  p.json = ordered_json::array();
  for (const CatalanSolution& s : all) {
    ordered_json row;
    row["x"] = s.x.str();
    row["y"] = s.y.str();
    row["m"] = std::to_string(s.m);
    row["n"] = std::to_string(s.n);
    p.json.push_back(row);
    p.csv_rows.push_back({s.x.str(), s.y.str(), std::to_string(s.m), std::to_string(s.n)});
  }
  return p;
}

struct SweepResult {
  std::uint64_t checked = 0;
  std::vector<std::string> violations;
  std::vector<std::string> ceiling_events;
};

SweepResult merge_sweeps(std::vector<SweepResult> shards) {
  SweepResult out;
  for (auto& s : shards) {
    out.checked += s.checked;
    out.violations.insert(out.violations.end(), s.violations.begin(), s.violations.end());
    out.ceiling_events.insert(out.ceiling_events.end(), s.ceiling_events.begin(),
                              s.ceiling_events.end());
  }
  std::sort(out.violations.begin(), out.violations.end());
  std::sort(out.ceiling_events.begin(), out.ceiling_events.end());
  return out;
}

Payload sweep_payload(const std::string& name, const SweepResult& merged) {
  Payload p;
  p.json = ordered_json::object();
  p.json["sweep"] = name;
  p.json["checked"] = std::to_string(merged.checked);
  p.json["violations"] = merged.violations;
  p.csv_header = {"sweep", "checked", "violations"};
  p.csv_rows.push_back({name, std::to_string(merged.checked),
                        std::to_string(merged.violations.size())});
  for (const std::string& v : merged.violations) {
    p.findings.push_back({"lemma-falsification", name, v});
  }
  for (const std::string& c : merged.ceiling_events) {
    p.findings.push_back({"ceiling", name, c});
  }
  return p;
}

Payload run_lemma_power_divisibility(const RunPlan& plan) {
  const unsigned mmax = plan.bound("mmax").convert_to<unsigned>();
  const unsigned nmax = plan.bound("nmax").convert_to<unsigned>();
  const auto shards = shard_range<SweepResult>(
      2, plan.bound("xmax"), plan.workers, [mmax, nmax](const Int& lo, const Int& hi) {
        SweepResult r;
        for (Int x = lo; x <= hi; ++x) {
          for (unsigned m = 1; m <= mmax; ++m) {
            for (unsigned n = 1; n <= nmax; ++n) {
              try {
                power_plus_one_divisibility(x, m, n);
              } catch (const LemmaFalsification& e) {
                r.violations.push_back(e.evidence());
              }
              ++r.checked;
            }
          }
        }
        return r;
      });
  return sweep_payload("power-divisibility", merge_sweeps(shards));
}

Payload run_lemma_repunit_divisors(const RunPlan& plan) {
  const unsigned lmax = plan.bound("lmax").convert_to<unsigned>();
  std::vector<unsigned> ells;
  for (unsigned ell = 3; ell <= lmax; ell += 2) {
    if (is_prime(Int(ell))) ells.push_back(ell);
  }
  const auto shards = shard_range<SweepResult>(
      2, plan.bound("xmax"), plan.workers, [&ells](const Int& lo, const Int& hi) {
        SweepResult r;
        for (Int x = lo; x <= hi; ++x) {
          for (unsigned ell : ells) {
            try {
              const RepunitDivisorReport report = repunit_divisor_check(x, ell);
              if (!report.all_divisors_congruent ||
                  (report.exact_ell_division && !*report.exact_ell_division)) {
                r.violations.push_back("at (x=" + x.str() + ", ell=" + std::to_string(ell) + ")");
              }
            } catch (const CeilingExceeded& e) {
              r.ceiling_events.push_back(e.what());
            }
            ++r.checked;
          }
        }
        return r;
      });
  return sweep_payload("repunit-divisors", merge_sweeps(shards));
}

Payload run_lemma_repunit_valuation(const RunPlan& plan) {
  const unsigned pmax = plan.bound("pmax").convert_to<unsigned>();
  const unsigned lmax = plan.bound("lmax").convert_to<unsigned>();
  std::vector<unsigned> ps;
  for (unsigned q = 3; q <= pmax; q += 2) {
    if (is_prime(Int(q))) ps.push_back(q);
  }
  const auto shards = shard_range<SweepResult>(
      2, plan.bound("xmax"), plan.workers, [&ps, lmax](const Int& lo, const Int& hi) {
        SweepResult r;
        for (Int x = lo; x <= hi; ++x) {
          for (unsigned q : ps) {
            if (x % q != 1) continue;
            for (unsigned len = 1; len <= lmax; ++len) {
              const RepunitValuationReport report = repunit_valuation_check(Int(q), x, len);
              if (!report.agree) {
                r.violations.push_back("at (p=" + std::to_string(q) + ", x=" + x.str() +
                                       ", ell=" + std::to_string(len) + ")");
              }
              ++r.checked;
            }
          }
        }
        return r;
      });
  return sweep_payload("repunit-valuation", merge_sweeps(shards));
}

Payload run_lemma_prime_power_repunit(const RunPlan& plan) {
  // Harvest every enumerated solution whose repunit part is a prime power
  // with odd ell and check the shape conclusions on it.
  const unsigned lmax = plan.bound("lmax").convert_to<unsigned>();
  const auto shards = shard_range<SweepResult>(
      2, plan.bound("xmax"), plan.workers, [lmax](const Int& lo, const Int& hi) {
        SweepResult r;
        const Enum2pResult two = enum_2p_range(lo, hi, lmax);
        for (const SkippedCell& cell : two.skipped) r.ceiling_events.push_back(cell.reason);
        for (const TwoPrimeSolution& s : two.solutions) {
          try {
            const TwoPrimeOutcome outcome = classify_2p(s);
            if (std::holds_alternative<OddPrimeRepunitMatch>(outcome)) {
              prime_power_repunit_check(s.x, s.ell, s.p, s.n);
              ++r.checked;
            }
          } catch (const LemmaFalsification& e) {
            r.violations.push_back(e.evidence());
          }
        }
        const EnumPqResult pq = enum_pq_range(lo, hi, lmax);
        for (const SkippedCell& cell : pq.skipped) r.ceiling_events.push_back(cell.reason);
        for (const PQSolution& s : pq.solutions) {
          if (s.ell % 2 == 0 || s.x == 2) continue;
          try {
            const PQClassification c = classify_pq_full(s);
            if (c.canonical && std::holds_alternative<RepunitPMatch>(*c.canonical)) {
              prime_power_repunit_check(s.x, s.ell, s.p, s.m);
              ++r.checked;
            }
            if (c.swapped && std::holds_alternative<RepunitPMatch>(*c.swapped)) {
              prime_power_repunit_check(s.x, s.ell, s.q, s.n);
              ++r.checked;
            }
          } catch (const LemmaFalsification& e) {
            r.violations.push_back(e.evidence());
          }
        }
        return r;
      });
  return sweep_payload("prime-power-repunit", merge_sweeps(shards));
}

Payload run_census(const RunPlan& plan) {
  Payload p;
  const CensusReport report = census(plan.bound("n"));
  p.json = ordered_json::object();
  p.json["n"] = report.n.str();
  p.json["convention"] = report.convention;
  ordered_json classes = ordered_json::array();
  p.csv_header = {"class", "a", "b"};
  for (const CensusClass& c : report.classes) {
    ordered_json cls;
    cls["name"] = c.name;
    cls["count"] = std::to_string(c.pairs.size());
    ordered_json pairs = ordered_json::array();
    for (const auto& [a, b] : c.pairs) {
      pairs.push_back(ordered_json::array({a.str(), b.str()}));
      p.csv_rows.push_back({c.name, a.str(), b.str()});
    }
    cls["pairs"] = pairs;
    classes.push_back(cls);
  }
  p.json["classes"] = classes;
  p.json["covered_total"] = std::to_string(report.covered_total);
  return p;
}

Payload run_guard(const RunPlan& plan) {
  Payload p;
  EquationInstance inst =
      EquationInstance::create(plan.bound("a"), plan.bound("b"), plan.bound("k"));
  Verdict v{inst, {}, {}, {}};
  try {
    v = guard(inst);
  } catch (const CeilingExceeded& e) {
    v.notes.push_back("coverage predicates not evaluable under the ceiling");
    p.findings.push_back({"ceiling", "guard", e.what()});
  }
  p.json = ordered_json::object();
  p.json["a"] = inst.a.str();
  p.json["b"] = inst.b.str();
  p.json["k"] = inst.k.str();
  p.json["overall"] = v.proven() ? "proven" : "unknown";
  ordered_json excl = ordered_json::array();
  std::string excl_csv;
  for (Exclusion e : v.exclusions) {
    excl.push_back(to_string(e));
    excl_csv += excl_csv.empty() ? to_string(e) : ";" + std::string(to_string(e));
  }
  ordered_json just = ordered_json::array();
  std::string just_csv;
  for (Justification j : v.justifications) {
    just.push_back(to_string(j));
    just_csv += just_csv.empty() ? to_string(j) : ";" + std::string(to_string(j));
  }
  p.json["exclusions"] = excl;
  p.json["justifications"] = just;
  p.json["notes"] = v.notes;
  p.csv_header = {"a", "b", "k", "overall", "exclusions", "justifications"};
  p.csv_rows.push_back({inst.a.str(), inst.b.str(), inst.k.str(),
                        v.proven() ? "proven" : "unknown", excl_csv, just_csv});
  return p;
}

Payload dispatch(const RunPlan& plan) {
  if (plan.subcommand == "search") return run_search(plan);
  if (plan.subcommand == "pruned-search") return run_pruned_search(plan);
  if (plan.subcommand == "classify-2p") return run_classify_2p(plan);
  if (plan.subcommand == "classify-pq") return run_classify_pq(plan);
  if (plan.subcommand == "census") return run_census(plan);
  if (plan.subcommand == "guard") return run_guard(plan);
  if (plan.subcommand == "lemma") {
    if (plan.lemma_name == "nagell-ljunggren") return run_lemma_nl(plan);
    if (plan.lemma_name == "catalan") return run_lemma_catalan(plan);
    if (plan.lemma_name == "power-divisibility") return run_lemma_power_divisibility(plan);
    if (plan.lemma_name == "repunit-divisors") return run_lemma_repunit_divisors(plan);
    if (plan.lemma_name == "repunit-valuation") return run_lemma_repunit_valuation(plan);
    if (plan.lemma_name == "prime-power-repunit") return run_lemma_prime_power_repunit(plan);
  }
  throw UsageError("unknown subcommand '" + plan.subcommand + "'");
}

}  // namespace

const Int& RunPlan::bound(const std::string& name) const {
  for (const auto& [key, value] : bounds) {
    if (key == name) return value;
  }
  throw std::out_of_range("plan has no bound '" + name + "'");
}

bool RunPlan::has_bound(const std::string& name) const {
  return std::any_of(bounds.begin(), bounds.end(),
                     [&](const auto& kv) { return kv.first == name; });
}

std::string usage_text() {
  std::ostringstream os;
  os << "usage: akbk <subcommand> [flags]\n"
     << "\n"
     << "subcommands:\n"
     << "  search        --a A --b B --k K --zmax Z      all solutions with z <= Z\n"
     << "  pruned-search --a A --b B --k K --zmax Z      x>z>y solutions via the reduction\n"
     << "  classify-2p   --xmax X --lmax L               x^l-1 = 2^m p^n, enumerated+classified\n"
     << "  classify-pq   --xmax X --lmax L               x^l-1 = p^m q^n, enumerated+classified\n"
     << "  lemma --name NAME [bounds]                    checker sweeps and enumerations\n"
     << "        nagell-ljunggren --xmax --mmax --nmax\n"
     << "        catalan          --vmax --emax\n"
     << "        power-divisibility --xmax --mmax --nmax\n"
     << "        repunit-divisors --xmax --lmax\n"
     << "        repunit-valuation --pmax --xmax --lmax\n"
     << "        prime-power-repunit --xmax --lmax\n"
     << "  census        --n N                           covered coprime pairs up to N\n"
     << "  guard         --a A --b B --k K               which covered result settles (a,b,k)\n"
     << "\n"
     << "common flags: --workers W (default 1), --format json|csv (default json),\n"
     << "              --out PATH (default stdout), --canonical (omit volatile meta)\n"
     << "\n"
     << "exit status: 0 clean, 1 usage error, 2 falsification finding, 3 ceiling exceeded\n"
     << "environment: AKBK_CEILING_BITS overrides the factorization ceiling (default 128)\n";
  return os.str();
}

RunPlan parse_plan(const std::vector<std::string>& args) {
  if (args.empty()) throw UsageError("missing subcommand");
  RunPlan plan;
  plan.subcommand = args[0];
  if (std::find(std::begin(kSubcommands), std::end(kSubcommands), plan.subcommand) ==
      std::end(kSubcommands)) {
    throw UsageError("unknown subcommand '" + plan.subcommand + "'");
  }

  std::map<std::string, std::string> raw;
  for (std::size_t i = 1; i < args.size(); ++i) {
    const std::string& arg = args[i];
    if (arg.rfind("--", 0) != 0) {
      throw UsageError("unexpected argument '" + arg + "'");
    }
    const std::string key = arg.substr(2);
    if (key == "canonical") {
      plan.canonical_only = true;
      continue;
    }
    if (i + 1 >= args.size()) {
      throw UsageError("flag --" + key + ": missing value");
    }
    if (!raw.emplace(key, args[++i]).second) {
      throw UsageError("flag --" + key + ": given twice");
    }
  }

  if (plan.subcommand == "lemma") {
    auto it = raw.find("name");
    if (it == raw.end()) throw UsageError("flag --name: required for subcommand lemma");
    plan.lemma_name = it->second;
    if (plan.lemma_name == "nl") plan.lemma_name = "nagell-ljunggren";
    if (std::find(std::begin(kLemmaNames), std::end(kLemmaNames), plan.lemma_name) ==
        std::end(kLemmaNames)) {
      throw UsageError("flag --name: unknown lemma '" + it->second + "'");
    }
    raw.erase(it);
  }

  if (auto it = raw.find("workers"); it != raw.end()) {
    const Int w = parse_int_flag("workers", it->second);
    if (w < 1 || w > 1024) throw UsageError("flag --workers: must be between 1 and 1024");
    plan.workers = w.convert_to<unsigned>();
    raw.erase(it);
  }
  if (auto it = raw.find("format"); it != raw.end()) {
    if (it->second == "json") {
      plan.format = OutputFormat::Json;
    } else if (it->second == "csv") {
      plan.format = OutputFormat::Csv;
    } else {
      throw UsageError("flag --format: expected json or csv, got '" + it->second + "'");
    }
    raw.erase(it);
  }
  if (auto it = raw.find("out"); it != raw.end()) {
    plan.out_path = it->second;
    raw.erase(it);
  }

  for (const BoundSpec& spec : required_bounds(plan.subcommand, plan.lemma_name)) {
    auto it = raw.find(spec.flag);
    if (it == raw.end()) {
      throw UsageError("flag --" + std::string(spec.flag) + ": required for subcommand " +
                       plan.subcommand +
                       (plan.lemma_name.empty() ? "" : " (" + plan.lemma_name + ")"));
    }
    Int value = parse_int_flag(spec.flag, it->second);
    if (value < spec.min || (spec.max != 0 && value > spec.max)) {
      throw UsageError("flag --" + std::string(spec.flag) + ": " + spec.requirement);
    }
    plan.bounds.emplace_back(spec.flag, std::move(value));
    raw.erase(it);
  }
  if (!raw.empty()) {
    throw UsageError("flag --" + raw.begin()->first + ": not recognized for subcommand " +
                     plan.subcommand);
  }
  return plan;
}

ReportEnvelope execute(const RunPlan& plan) {
  const auto start = std::chrono::steady_clock::now();
  ReportEnvelope env;
  env.tool = kToolName;
  env.version = kVersion;
  env.plan = plan;
  env.workers_used = plan.workers;

  Payload payload;
  try {
    payload = dispatch(plan);
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }
  env.payload_json = payload.json.dump(2);
  env.csv_header = std::move(payload.csv_header);
  env.csv_rows = std::move(payload.csv_rows);
  env.findings = std::move(payload.findings);

  const auto stop = std::chrono::steady_clock::now();
  env.duration_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  return env;
}

std::string render_json(const ReportEnvelope& env, bool include_meta) {
  ordered_json doc;
  doc["tool"] = env.tool;
  doc["version"] = env.version;
  ordered_json plan;
  plan["subcommand"] = env.plan.subcommand;
  if (!env.plan.lemma_name.empty()) plan["lemma"] = env.plan.lemma_name;
  ordered_json bounds = ordered_json::object();
  for (const auto& [key, value] : env.plan.bounds) bounds[key] = value.str();
  plan["bounds"] = bounds;
  plan["format"] = env.plan.format == OutputFormat::Json ? "json" : "csv";
  doc["plan"] = plan;
  doc["payload"] = ordered_json::parse(env.payload_json);
  ordered_json findings = ordered_json::array();
  for (const Finding& f : env.findings) {
    ordered_json rec;
    rec["kind"] = f.kind;
    rec["subject"] = f.subject;
    rec["detail"] = f.detail;
    findings.push_back(rec);
  }
  doc["findings"] = findings;
  if (include_meta) {
    ordered_json meta;
    meta["workers"] = std::to_string(env.workers_used);
    std::ostringstream ms;
    ms << env.duration_ms;
    meta["duration_ms"] = ms.str();
    doc["meta"] = meta;
  }
  return doc.dump(2) + "\n";
}

std::string render_csv(const ReportEnvelope& env) {
  std::ostringstream os;
  for (std::size_t i = 0; i < env.csv_header.size(); ++i) {
    os << (i ? "," : "") << env.csv_header[i];
  }
  os << "\n";
  for (const auto& row : env.csv_rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      os << (i ? "," : "") << row[i];
    }
    os << "\n";
  }
  return os.str();
}

int exit_status(const ReportEnvelope& env) {
  bool ceiling = false;
  for (const Finding& f : env.findings) {
    if (f.kind == "lemma-falsification") return 2;
    if (f.kind == "ceiling") ceiling = true;
  }
  return ceiling ? 3 : 0;
}

}  // namespace akbk
