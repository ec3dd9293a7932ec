#pragma once
// Job configuration: a small human-writable key-value format (schema 1).
//
//   # comment
//   schema = 1
//   kind = cover | tower | search
//   genus = 2
//   punctures = 0          # cover: base punctures (0 = closed base)
//   extra = 0              # tower: extra marked points on the sphere
//   degree = 3
//   voltage.a1 = (1 2 3)   # one key per base generator, 1-based cycles
//   ...
//   groups = z2, z3        # search: named small groups
//   base_genus = 2         # search: closed base surface genus
//   budget_curves = 200
//   budget_wordlen = 4096
//   orbit_cap = 20000
//   stab_window = 3
//   class_cap = 100000
//   seed = 0
//   output = report.json   # optional: also write the JSON report here
//
// Unknown keys are rejected. Parsing problems throw ConfigError (invalid
// input, not an internal bug).

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "symloop/covering.hpp"
#include "symloop/surface.hpp"

namespace symloop::cfg {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct JobConfig {
  int schema = 1;
  std::string kind;  // "cover" | "tower" | "search"

  // cover / tower geometry
  int genus = 0;
  int punctures = 0;  // cover only
  int extra = 0;      // tower only
  int degree = 1;
  std::map<std::string, std::string> voltage;  // generator name -> cycles

  // search
  std::vector<std::string> groups;
  int base_genus = 2;
  long class_cap = 100000;

  // budgets (all positive)
  int budget_curves = 200;
  int budget_wordlen = 4096;
  long orbit_cap = 20000;
  int stab_window = 3;

  long seed = 0;
  bool full = false;  // emit matrices in the report (CLI flag)
  std::string output;
};

// Parse and validate; throws ConfigError with a line reference.
JobConfig parse_config(const std::string& text);
JobConfig load_config(const std::string& path);

// The base surface model a cover config describes.
surface::Model base_model(const JobConfig& c);
// Voltages in generator order; throws ConfigError on missing/extra names
// or unparsable cycles.
cover::CoverSpec cover_spec(const JobConfig& c,
                            const std::vector<std::string>& gen_names);

// Normalized one-line-per-key dump. This is the cache identity: it covers
// every field that affects the report bytes (budgets, seed, full).
std::string canonical(const JobConfig& c);

}  // namespace symloop::cfg
