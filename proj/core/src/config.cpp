#include "hyct/config.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "hyct/csv.hpp"

namespace hyct {

namespace {

struct RawEntry {
  std::string value;
  int line = 0;
  bool used = false;
};

using Section = std::map<std::string, RawEntry>;

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool parse_double(const std::string& text, double& out) {
  const char* begin = text.c_str();
  char* end = nullptr;
  out = std::strtod(begin, &end);
  return end != begin && *end == '\0';
}

bool parse_int(const std::string& text, long long& out) {
  const char* begin = text.c_str();
  char* end = nullptr;
  out = std::strtoll(begin, &end, 10);
  return end != begin && *end == '\0';
}

bool parse_list(const std::string& text, std::vector<double>& out) {
  const std::string t = trim(text);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']') return false;
  out.clear();
  std::string body = t.substr(1, t.size() - 2);
  for (char& c : body)
    if (c == ',' || c == ';') c = ' ';
  std::istringstream is(body);
  std::string tok;
  while (is >> tok) {
    double v;
    if (!parse_double(tok, v)) return false;
    out.push_back(v);
  }
  return true;
}

class ConfigReader {
public:
  explicit ConfigReader(std::vector<ParseError>& errors) : errors_(errors) {}

  std::map<std::string, Section> sections;
  std::map<std::string, int> section_lines;

  void load(const std::string& text) {
    std::istringstream is(text);
    std::string raw;
    std::string current;
    int line = 0;
    while (std::getline(is, raw)) {
      ++line;
      const size_t hash = raw.find('#');
      if (hash != std::string::npos) raw.erase(hash);
      const std::string s = trim(raw);
      if (s.empty()) continue;
      if (s.front() == '[') {
        if (s.back() != ']') {
          fail(line, "malformed section header '" + s + "'");
          continue;
        }
        current = trim(s.substr(1, s.size() - 2));
        section_lines.emplace(current, line);
        sections[current];
        continue;
      }
      const size_t eq = s.find('=');
      if (eq == std::string::npos) {
        fail(line, "expected key = value, got '" + s + "'");
        continue;
      }
      if (current.empty()) {
        fail(line, "key outside of any section");
        continue;
      }
      const std::string key = trim(s.substr(0, eq));
      const std::string value = trim(s.substr(eq + 1));
      if (key.empty() || value.empty()) {
        fail(line, "empty key or value");
        continue;
      }
      if (!sections[current].emplace(key, RawEntry{value, line, false}).second)
        fail(line, "duplicate key '" + key + "' in section [" + current + "]");
    }
  }

  void fail(int line, const std::string& msg) { errors_.push_back({line, msg}); }

  Section* section(const std::string& name) {
    auto it = sections.find(name);
    return it == sections.end() ? nullptr : &it->second;
  }

  RawEntry* entry(const std::string& section_name, const std::string& key) {
    Section* sec = section(section_name);
    if (!sec) return nullptr;
    auto it = sec->find(key);
    if (it == sec->end()) return nullptr;
    it->second.used = true;
    return &it->second;
  }

  bool get_double(const std::string& sec, const std::string& key, double& out) {
    RawEntry* e = entry(sec, key);
    if (!e) return false;
    if (!parse_double(e->value, out)) {
      fail(e->line, "value of '" + key + "' is not a number: '" + e->value + "'");
      return false;
    }
    return true;
  }

  bool get_int(const std::string& sec, const std::string& key, long long& out) {
    RawEntry* e = entry(sec, key);
    if (!e) return false;
    if (!parse_int(e->value, out)) {
      fail(e->line, "value of '" + key + "' is not an integer: '" + e->value + "'");
      return false;
    }
    return true;
  }

  bool get_bool(const std::string& sec, const std::string& key, bool& out) {
    RawEntry* e = entry(sec, key);
    if (!e) return false;
    if (e->value == "true" || e->value == "1") {
      out = true;
    } else if (e->value == "false" || e->value == "0") {
      out = false;
    } else {
      fail(e->line, "value of '" + key + "' is not a boolean: '" + e->value + "'");
      return false;
    }
    return true;
  }

  bool get_string(const std::string& sec, const std::string& key, std::string& out) {
    RawEntry* e = entry(sec, key);
    if (!e) return false;
    out = e->value;
    return true;
  }

  // Accepts a scalar or a bracketed list; scalars become constants.
  bool get_fn(const std::string& sec, const std::string& key, SampledFn& out) {
    RawEntry* e = entry(sec, key);
    if (!e) return false;
    double scalar;
    std::vector<double> list;
    if (parse_double(e->value, scalar)) {
      out = SampledFn(scalar);
      return true;
    }
    if (parse_list(e->value, list)) {
      if (list.size() == 1) {
        out = SampledFn(list.front());
        return true;
      }
      if (list.size() >= 2) {
        out = SampledFn(std::move(list));
        return true;
      }
    }
    fail(e->line, "value of '" + key + "' must be a number or a bracketed sample list");
    return false;
  }

  bool get_matrix(const std::string& sec, const std::string& key, int rows, int cols,
                  std::vector<double>& out, bool& present) {
    RawEntry* e = entry(sec, key);
    present = e != nullptr;
    if (!e) return false;
    if (!parse_list(e->value, out)) {
      fail(e->line, "value of '" + key + "' must be a bracketed row-major matrix literal");
      return false;
    }
    if (static_cast<int>(out.size()) != rows * cols) {
      fail(e->line, "'" + key + "' needs " + std::to_string(rows) + "x" + std::to_string(cols) +
                        " = " + std::to_string(rows * cols) + " entries, got " +
                        std::to_string(out.size()));
      return false;
    }
    return true;
  }

  void check_unknown(const std::vector<std::string>& known_sections) {
    for (auto& [name, sec] : sections) {
      bool known = false;
      for (const auto& ks : known_sections) known = known || ks == name;
      if (!known) {
        fail(section_lines[name], "unknown section [" + name + "]");
        continue;
      }
      for (auto& [key, e] : sec)
        if (!e.used) fail(e.line, "unknown key '" + key + "' in section [" + name + "]");
    }
  }

private:
  std::vector<ParseError>& errors_;
};

}  // namespace

ParsedConfig parse_config(const std::string& text) {
  ParsedConfig out;
  ConfigReader rd(out.errors);
  rd.load(text);

  const int system_line = rd.section_lines.count("system") ? rd.section_lines["system"] : 0;
  if (!rd.section("system")) {
    rd.fail(0, "missing required section [system]");
    return out;
  }

  long long n = 0, k = 0, m = 0;
  const bool have_n = rd.get_int("system", "n", n);
  const bool have_k = rd.get_int("system", "k", k);
  const bool have_m = rd.get_int("system", "m", m);
  if (!have_n || !have_k || !have_m) {
    rd.fail(system_line, "section [system] requires integer keys n, k and m");
    return out;
  }
  if (n != k + m || k < 1 || m < 1) {
    rd.fail(system_line, "need n = k + m with k, m >= 1 (got n=" + std::to_string(n) +
                             ", k=" + std::to_string(k) + ", m=" + std::to_string(m) + ")");
    return out;
  }

  SpeedProfile speeds;
  speeds.n = static_cast<int>(n);
  speeds.k = static_cast<int>(k);
  speeds.lambda.assign(speeds.n, SampledFn(1.0));
  for (int i = 0; i < speeds.n; ++i) {
    const std::string key = "lambda" + std::to_string(i + 1);
    SampledFn fn;
    if (rd.get_fn("system", key, fn))
      speeds.lambda[i] = fn;
    else
      rd.fail(system_line, "missing speed '" + key + "'");
  }

  std::string form = "w";
  rd.get_string("system", "coupling", form);
  CouplingField coupling;
  const int ni = speeds.n, ki = speeds.k, mi = speeds.m();
  if (form == "w") {
    coupling = CouplingField::zero_w(ni, ki);
    std::vector<double> c;
    bool present = false;
    if (rd.get_matrix("system", "C", ni, ni, c, present))
      coupling = CouplingField::w_constant(ni, ki, c);
  } else if (form == "u") {
    coupling = CouplingField::zero_u(ni, ki);
    std::vector<double> smp, spp;
    bool p1 = false, p2 = false;
    const bool ok1 = rd.get_matrix("system", "S_mp", ki, mi, smp, p1);
    const bool ok2 = rd.get_matrix("system", "S_pp", mi, mi, spp, p2);
    if (ok1)
      for (int i = 0; i < ki * mi; ++i) coupling.s_mp[i] = SampledFn(smp[i]);
    if (ok2)
      for (int i = 0; i < mi * mi; ++i) coupling.s_pp[i] = SampledFn(spp[i]);
  } else {
    coupling = CouplingField::zero_w(ni, ki);
    rd.fail(system_line, "coupling form must be 'w' or 'u', got '" + form + "'");
  }
  // The other form's matrix keys are errors, handled by unknown-key reporting.

  Mat boundary(ki, mi);
  {
    std::vector<double> b;
    bool present = false;
    if (rd.get_matrix("system", "B", ki, mi, b, present)) {
      for (int i = 0; i < ki; ++i)
        for (int j = 0; j < mi; ++j) boundary.at(i, j) = b[i * mi + j];
    } else if (!present) {
      rd.fail(system_line, "missing boundary matrix 'B'");
    }
  }

  out.system.speeds = std::move(speeds);
  out.system.coupling = std::move(coupling);
  out.system.boundary = std::move(boundary);

  long long nx = 0, cg_maxit = 0, seed = 0;
  if (rd.get_int("grid", "nx", nx)) out.run.grid.nx = static_cast<int>(nx);
  rd.get_double("grid", "cfl", out.run.grid.cfl);
  rd.get_double("hum", "eps", out.run.hum.eps);
  rd.get_bool("hum", "eps_relative", out.run.hum.eps_relative);
  rd.get_double("hum", "cg_tol", out.run.hum.cg_tol);
  if (rd.get_int("hum", "cg_maxit", cg_maxit)) out.run.hum.cg_maxit = static_cast<int>(cg_maxit);
  rd.get_double("run", "T", out.run.horizon);
  if (rd.get_int("run", "seed", seed)) out.run.seed = static_cast<std::uint64_t>(seed);
  rd.get_string("run", "out", out.run.out_dir);
  rd.get_string("run", "mode", out.run.mode);
  rd.get_bool("run", "store_trajectory", out.run.store_trajectory);
  rd.get_string("run", "initial", out.run.initial_spec);
  rd.get_string("run", "target", out.run.target_spec);

  rd.check_unknown({"system", "grid", "hum", "run"});

  if (out.run.grid.nx < 8) rd.fail(rd.section_lines.count("grid") ? rd.section_lines["grid"] : 0,
                                   "grid nx must be at least 8");
  if (!(out.run.grid.cfl > 0.0) || out.run.grid.cfl > 1.0)
    rd.fail(rd.section_lines.count("grid") ? rd.section_lines["grid"] : 0,
            "grid cfl must lie in (0, 1]");
  if (out.run.mode != "null" && out.run.mode != "exact")
    rd.fail(rd.section_lines.count("run") ? rd.section_lines["run"] : 0,
            "run mode must be 'null' or 'exact'");

  for (const Diagnostic& d : validate(out.system))
    rd.fail(system_line, "[" + d.code + "] " + d.message);
  return out;
}

ParsedConfig parse_config_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) {
    ParsedConfig out;
    out.errors.push_back({0, "cannot open config file: " + path});
    return out;
  }
  std::ostringstream buf;
  buf << is.rdbuf();
  ParsedConfig out = parse_config(buf.str());
  out.run.system_path = path;
  return out;
}

namespace {

std::string fn_to_string(const SampledFn& fn) {
  if (fn.is_constant()) return format_g17(fn.constant_value());
  std::string out = "[";
  const auto& s = fn.samples();
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += ", ";
    out += format_g17(s[i]);
  }
  out += "]";
  return out;
}

std::string matrix_to_string(const std::vector<const SampledFn*>& fns) {
  std::string out = "[";
  for (size_t i = 0; i < fns.size(); ++i) {
    if (i) out += ", ";
    // Constant matrices only in the config format; sampled coupling entries
    // are an API-level feature.
    out += format_g17(fns[i]->is_constant() ? fns[i]->constant_value() : (*fns[i])(0.0));
  }
  out += "]";
  return out;
}

}  // namespace

std::string serialize_system_section(const HyperbolicSystem& system) {
  std::ostringstream os;
  const int n = system.n(), k = system.k(), m = system.m();
  os << "[system]\n";
  os << "n = " << n << "\n";
  os << "k = " << k << "\n";
  os << "m = " << m << "\n";
  for (int i = 0; i < n; ++i)
    os << "lambda" << (i + 1) << " = " << fn_to_string(system.speeds.lambda[i]) << "\n";
  if (system.coupling.form == CouplingForm::WForm) {
    os << "coupling = w\n";
    std::vector<const SampledFn*> fns;
    for (const auto& fn : system.coupling.c) fns.push_back(&fn);
    os << "C = " << matrix_to_string(fns) << "\n";
  } else {
    os << "coupling = u\n";
    std::vector<const SampledFn*> mp, pp;
    for (const auto& fn : system.coupling.s_mp) mp.push_back(&fn);
    for (const auto& fn : system.coupling.s_pp) pp.push_back(&fn);
    os << "S_mp = " << matrix_to_string(mp) << "\n";
    os << "S_pp = " << matrix_to_string(pp) << "\n";
  }
  os << "B = [";
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < m; ++j) {
      if (i || j) os << ", ";
      os << format_g17(system.boundary.at(i, j));
    }
  os << "]\n";
  return os.str();
}

std::string serialize_config(const RunConfig& run, const HyperbolicSystem& system) {
  std::ostringstream os;
  os << serialize_system_section(system);
  os << "\n[grid]\n";
  os << "nx = " << run.grid.nx << "\n";
  os << "cfl = " << format_g17(run.grid.cfl) << "\n";
  os << "\n[hum]\n";
  os << "eps = " << format_g17(run.hum.eps) << "\n";
  os << "eps_relative = " << (run.hum.eps_relative ? "true" : "false") << "\n";
  os << "cg_tol = " << format_g17(run.hum.cg_tol) << "\n";
  os << "cg_maxit = " << run.hum.cg_maxit << "\n";
  os << "\n[run]\n";
  os << "T = " << format_g17(run.horizon) << "\n";
  os << "seed = " << run.seed << "\n";
  os << "out = " << run.out_dir << "\n";
  os << "mode = " << run.mode << "\n";
  os << "store_trajectory = " << (run.store_trajectory ? "true" : "false") << "\n";
  if (!run.initial_spec.empty()) os << "initial = " << run.initial_spec << "\n";
  if (!run.target_spec.empty()) os << "target = " << run.target_spec << "\n";
  return os.str();
}

}  // namespace hyct
