#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "akbk/integer.hpp"

namespace akbk {

// Batch driver behind the CLI: plan parsing, sharded execution across
// workers, deterministic merging, and report rendering. Reports are
// reproducible: the same plan yields byte-identical canonical output for any
// worker count.

class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

enum class OutputFormat { Json, Csv };

struct RunPlan {
  std::string subcommand;  // search, pruned-search, classify-2p, classify-pq,
                           // lemma, census, guard
  std::string lemma_name;  // lemma only: nagell-ljunggren, catalan,
                           // power-divisibility, repunit-divisors,
                           // repunit-valuation
  std::vector<std::pair<std::string, Int>> bounds;  // canonical flag order
  unsigned workers = 1;
  OutputFormat format = OutputFormat::Json;
  std::optional<std::string> out_path;
  bool canonical_only = false;  // omit the volatile meta section

  const Int& bound(const std::string& name) const;
  bool has_bound(const std::string& name) const;
};

// Parses a full argument vector (without argv[0]). Unknown subcommands,
// missing or malformed bounds throw UsageError naming the offending flag.
RunPlan parse_plan(const std::vector<std::string>& args);

std::string usage_text();

// A discrepancy, falsification, or ceiling event surfaced by a run.
// kind: "lemma-falsification" | "ceiling" | "discrepancy" | "note"
struct Finding {
  std::string kind;
  std::string subject;
  std::string detail;
};

struct ReportEnvelope {
  std::string tool;
  std::string version;
  RunPlan plan;
  std::string payload_json;  // canonical JSON value, pre-rendered
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;
  std::vector<Finding> findings;
  double duration_ms = 0.0;
  unsigned workers_used = 1;
};

// Runs the plan: shards boxes across the requested workers (z-ranges for
// searches, x-ranges for enumerations), merges deterministically, and
// collects findings. Ceiling events inside enumerators become findings,
// not crashes.
ReportEnvelope execute(const RunPlan& plan);

// Full JSON document. With include_meta the volatile section (workers,
// wall-clock duration) is appended; the canonical portion is byte-identical
// across worker counts. All integers are serialized as decimal strings.
std::string render_json(const ReportEnvelope& env, bool include_meta);

// Flat projection of the payload rows with a header line.
std::string render_csv(const ReportEnvelope& env);

// 0 clean, 2 when any lemma-falsification finding is present, 3 when any
// ceiling finding is present (falsification wins). Usage errors exit 1 at
// the CLI boundary before an envelope exists.
int exit_status(const ReportEnvelope& env);

}  // namespace akbk
