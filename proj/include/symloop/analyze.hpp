#pragma once
// The analysis pipeline behind the CLI: build the cover, cap homology,
// compute the deck action, fold the simple-loop subspaces, run the isotypic
// decomposition, probe finite-orbit candidates, and assemble a JSON report.
//
// Determinism contract: the report bytes are a pure function of the
// canonical config (which covers budgets, seed, and the full flag), so a
// cache hit can replay them verbatim. The human-readable table is rendered
// from the report JSON alone for the same reason.
//
// Exit-code semantics carried by Outcome::exit_code:
//   0  analysis completed (including "no candidates" and budget-truncated
//      partial results, which are flagged in the report);
//   3  a theorem-level alarm fired: an enforced invariant failed on data
//      the hypotheses cover, or a search found a simple-loop gap.
// Invalid input throws cfg::ConfigError (the CLI maps it to exit 2);
// internal bugs throw InvariantError (mapped to exit 3).

#include <string>

#include <json.hpp>

#include "symloop/config.hpp"

namespace symloop::pipeline {

struct Options {
  std::string cache_dir;  // empty: no cache
  bool no_cache = false;
  int jobs = 1;           // worker cap for search
};

struct Outcome {
  std::string json_bytes;  // serialized report, newline terminated
  std::string table;       // human-readable summary
  int exit_code = 0;
  bool cache_hit = false;
};

// Single cover / tower analysis (kind = cover | tower).
Outcome analyze(const cfg::JobConfig& c, const Options& o);

// The raw report for a cover/tower job, no cache involvement. Building
// block for analyze() and for each search job.
nlohmann::json analyze_report(const cfg::JobConfig& c);

// Honors config `output = path` (best effort, warns on failure).
void write_output_file(const cfg::JobConfig& c, const std::string& bytes);

// Epimorphism search (kind = search).
Outcome search(const cfg::JobConfig& c, const Options& o);

// Report -> aligned text table (pure).
std::string render_table(const nlohmann::json& report);

// Re-runs the structural invariant suite on the matrices serialized under
// report["full"] and compares against the recorded pass bits. Returns a
// {check name -> agrees} map; absent matrices yield an empty map. Used by
// tests to certify that reports self-validate.
nlohmann::json revalidate_full(const nlohmann::json& report);

// Named small groups for searches: z2..z12, z2xz2, s3, s4, a4, a5, d4, q8.
// Throws cfg::ConfigError for an unknown name.
perm::Group named_group(const std::string& name);

}  // namespace symloop::pipeline
