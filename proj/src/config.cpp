#include "symloop/config.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace symloop::cfg {
namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

[[noreturn]] void fail(int line, const std::string& msg) {
  throw ConfigError("config line " + std::to_string(line) + ": " + msg);
}

long to_long(const std::string& v, int line) {
  try {
    size_t pos = 0;
    long x = std::stol(v, &pos);
    if (pos != v.size()) fail(line, "trailing junk in number '" + v + "'");
    return x;
  } catch (const ConfigError&) {
    throw;
  } catch (...) {
    fail(line, "not a number: '" + v + "'");
  }
}

int to_int(const std::string& v, int line) {
  long x = to_long(v, line);
  if (x < -1000000000L || x > 1000000000L) fail(line, "out of range: " + v);
  return (int)x;
}

std::vector<std::string> split_list(const std::string& v) {
  std::vector<std::string> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

JobConfig parse_config(const std::string& text) {
  JobConfig c;
  bool saw_schema = false, saw_kind = false;
  std::set<std::string> seen;
  std::stringstream ss(text);
  std::string raw;
  int line = 0;
  while (std::getline(ss, raw)) {
    ++line;
    size_t hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    raw = trim(raw);
    if (raw.empty()) continue;
    size_t eq = raw.find('=');
    if (eq == std::string::npos) fail(line, "expected 'key = value'");
    std::string key = trim(raw.substr(0, eq));
    std::string val = trim(raw.substr(eq + 1));
    if (key.empty()) fail(line, "empty key");
    if (!seen.insert(key).second) fail(line, "duplicate key '" + key + "'");

    if (key.rfind("voltage.", 0) == 0) {
      std::string gen = key.substr(8);
      if (gen.empty()) fail(line, "empty generator name in voltage key");
      c.voltage[gen] = val;
      continue;
    }
    if (key == "schema") {
      c.schema = to_int(val, line);
      saw_schema = true;
      if (c.schema != 1) fail(line, "unsupported schema " + val);
    } else if (key == "kind") {
      c.kind = val;
      saw_kind = true;
    } else if (key == "genus") {
      c.genus = to_int(val, line);
    } else if (key == "punctures") {
      c.punctures = to_int(val, line);
    } else if (key == "extra") {
      c.extra = to_int(val, line);
    } else if (key == "degree") {
      c.degree = to_int(val, line);
    } else if (key == "groups") {
      c.groups = split_list(val);
    } else if (key == "base_genus") {
      c.base_genus = to_int(val, line);
    } else if (key == "class_cap") {
      c.class_cap = to_long(val, line);
    } else if (key == "budget_curves") {
      c.budget_curves = to_int(val, line);
    } else if (key == "budget_wordlen") {
      c.budget_wordlen = to_int(val, line);
    } else if (key == "orbit_cap") {
      c.orbit_cap = to_long(val, line);
    } else if (key == "stab_window") {
      c.stab_window = to_int(val, line);
    } else if (key == "seed") {
      c.seed = to_long(val, line);
    } else if (key == "full") {
      if (val != "0" && val != "1") fail(line, "full must be 0 or 1");
      c.full = val == "1";
    } else if (key == "output") {
      c.output = val;
    } else {
      fail(line, "unknown key '" + key + "'");
    }
  }
  if (!saw_schema) throw ConfigError("config: missing 'schema = 1'");
  if (!saw_kind) throw ConfigError("config: missing 'kind'");
  if (c.kind != "cover" && c.kind != "tower" && c.kind != "search")
    throw ConfigError("config: kind must be cover, tower, or search");

  if (c.budget_curves <= 0 || c.budget_wordlen <= 0 || c.orbit_cap <= 0 ||
      c.stab_window <= 0 || c.class_cap <= 0)
    throw ConfigError("config: budgets must be positive");

  if (c.kind == "cover") {
    if (c.genus < 0 || c.punctures < 0)
      throw ConfigError("config: genus/punctures must be >= 0");
    if (c.genus == 0 && c.punctures < 2)
      throw ConfigError("config: a genus-0 base needs punctures >= 2");
    if (c.degree < 1) throw ConfigError("config: degree must be >= 1");
  } else if (c.kind == "tower") {
    if (c.genus < 1) throw ConfigError("config: tower genus must be >= 1");
    if (c.extra < 0) throw ConfigError("config: extra must be >= 0");
    if (c.degree < 2)
      throw ConfigError("config: tower degree must be >= 2 (the parity double cover is the smallest)");
  } else {
    if (c.base_genus < 1)
      throw ConfigError("config: base_genus must be >= 1");
    if (c.groups.empty())
      throw ConfigError("config: search needs a nonempty 'groups' list");
    if (!c.voltage.empty())
      throw ConfigError("config: search takes no voltage keys");
  }
  return c;
}

JobConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

surface::Model base_model(const JobConfig& c) {
  if (c.kind == "tower") return surface::punctured_model(0, 2 * c.genus + 2 + c.extra);
  if (c.punctures == 0) return surface::closed_model(c.genus);
  return surface::punctured_model(c.genus, c.punctures);
}

cover::CoverSpec cover_spec(const JobConfig& c,
                            const std::vector<std::string>& gen_names) {
  cover::CoverSpec spec;
  spec.degree = c.degree;
  for (const auto& name : gen_names) {
    auto it = c.voltage.find(name);
    if (it == c.voltage.end())
      throw ConfigError("config: missing voltage for generator '" + name + "'");
    auto p = perm::Perm::parse_cycles(it->second, c.degree);
    if (!p)
      throw ConfigError("config: bad cycle notation for '" + name + "': " +
                        it->second);
    spec.rho.push_back(*p);
  }
  if (c.voltage.size() != gen_names.size()) {
    for (const auto& [k, v] : c.voltage)
      if (std::find(gen_names.begin(), gen_names.end(), k) == gen_names.end())
        throw ConfigError("config: voltage for unknown generator '" + k + "'");
  }
  return spec;
}

std::string canonical(const JobConfig& c) {
  std::ostringstream out;
  out << "schema = " << c.schema << "\n";
  out << "kind = " << c.kind << "\n";
  if (c.kind == "search") {
    out << "base_genus = " << c.base_genus << "\n";
    out << "class_cap = " << c.class_cap << "\n";
    out << "groups =";
    for (size_t i = 0; i < c.groups.size(); ++i)
      out << (i ? "," : " ") << c.groups[i];
    out << "\n";
  } else {
    out << "genus = " << c.genus << "\n";
    if (c.kind == "cover") out << "punctures = " << c.punctures << "\n";
    if (c.kind == "tower") out << "extra = " << c.extra << "\n";
    out << "degree = " << c.degree << "\n";
    // Normalize permutations through a parse/print round trip so formats
    // with the same meaning share a cache entry.
    for (const auto& [k, v] : c.voltage) {
      auto p = perm::Perm::parse_cycles(v, c.degree);
      out << "voltage." << k << " = " << (p ? p->cycle_string() : v) << "\n";
    }
  }
  out << "budget_curves = " << c.budget_curves << "\n";
  out << "budget_wordlen = " << c.budget_wordlen << "\n";
  out << "orbit_cap = " << c.orbit_cap << "\n";
  out << "stab_window = " << c.stab_window << "\n";
  out << "seed = " << c.seed << "\n";
  out << "full = " << (c.full ? 1 : 0) << "\n";
  return out.str();
}

}  // namespace symloop::cfg
