#include "cmcstab/config.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "cmcstab/errors.hpp"

namespace cmcstab {

std::uint64_t fnv1a_hash(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

namespace {

struct Node {
  std::vector<std::pair<std::string, std::string>> values;
  std::vector<std::pair<std::string, Node>> blocks;

  const Node* block(const std::string& name) const {
    for (const auto& [k, b] : blocks)
      if (k == name) return &b;
    return nullptr;
  }
};

struct Parser {
  const std::string& text;
  size_t pos = 0;
  int line = 1;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ConfigError("config parse error at line " + std::to_string(line) + ": " + msg);
  }

  void skip_ws(bool stop_at_newline = false) {
    while (pos < text.size()) {
      char c = text[pos];
      if (c == '#') {
        while (pos < text.size() && text[pos] != '\n') ++pos;
      } else if (c == '\n') {
        if (stop_at_newline) return;
        ++line;
        ++pos;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos;
      } else {
        return;
      }
    }
  }

  std::string ident() {
    size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    if (pos == start) fail("expected an identifier");
    return text.substr(start, pos - start);
  }

  // value = rest of line (trimmed, comment stripped)
  std::string value() {
    size_t start = pos;
    while (pos < text.size() && text[pos] != '\n' && text[pos] != '#' && text[pos] != '}') ++pos;
    std::string v = text.substr(start, pos - start);
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.pop_back();
    if (v.empty()) fail("empty value");
    return v;
  }

  Node block_body(bool top_level) {
    Node n;
    while (true) {
      skip_ws();
      if (pos >= text.size()) {
        if (!top_level) fail("unexpected end of input inside a block");
        return n;
      }
      if (text[pos] == '}') {
        if (top_level) fail("unmatched '}'");
        ++pos;
        return n;
      }
      std::string name = ident();
      skip_ws(true);
      if (pos < text.size() && text[pos] == '{') {
        ++pos;
        n.blocks.emplace_back(name, block_body(false));
      } else if (pos < text.size() && text[pos] == '=') {
        ++pos;
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
        n.values.emplace_back(name, value());
      } else {
        fail("expected '{' or '=' after '" + name + "'");
      }
    }
  }
};

double to_double(const std::string& path, const std::string& v) {
  try {
    size_t idx = 0;
    double x = std::stod(v, &idx);
    if (idx != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ConfigError(path + ": expected a number, got '" + v + "'");
  }
}

int to_int(const std::string& path, const std::string& v) {
  double x = to_double(path, v);
  int i = static_cast<int>(x);
  if (static_cast<double>(i) != x) throw ConfigError(path + ": expected an integer, got '" + v + "'");
  return i;
}

// Wraps a node and enforces that every key/block is consumed.
struct Reader {
  const Node& node;
  std::string path;
  std::set<std::string> used_values, used_blocks;

  std::optional<std::string> get(const std::string& key) {
    std::optional<std::string> out;
    for (const auto& [k, v] : node.values)
      if (k == key) out = v;  // last occurrence wins
    if (out) used_values.insert(key);
    return out;
  }
  std::optional<double> get_double(const std::string& key) {
    auto v = get(key);
    if (!v) return std::nullopt;
    return to_double(path + "." + key, *v);
  }
  std::optional<int> get_int(const std::string& key) {
    auto v = get(key);
    if (!v) return std::nullopt;
    return to_int(path + "." + key, *v);
  }

  void finish() const {
    for (const auto& [k, v] : node.values)
      if (!used_values.count(k)) throw ConfigError("unknown key: " + path + "." + k);
    for (const auto& [k, b] : node.blocks)
      if (!used_blocks.count(k)) throw ConfigError("unknown block: " + path + "." + k);
  }
};

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

}  // namespace

RunConfig parse_run_config(const std::string& text) {
  Parser p{text};
  Node root = p.block_body(true);

  RunConfig cfg;
  cfg.config_hash = fnv1a_hash(text);

  std::set<std::string> known_blocks{"space", "surface", "solver", "verify", "sweep", "output"};
  for (const auto& [k, b] : root.blocks)
    if (!known_blocks.count(k)) throw ConfigError("unknown block: " + k);
  for (const auto& [k, v] : root.values) throw ConfigError("unknown key: " + k);

  if (const Node* n = root.block("space")) {
    Reader r{*n, "space"};
    auto kind = r.get("kind");
    if (!kind) throw ConfigError("space.kind is required");
    cfg.space.kind = *kind;
    cfg.space.c = r.get_double("c");
    cfg.space.kappa = r.get_double("kappa");
    cfg.space.tau = r.get_double("tau");
    cfg.space.circle_length = r.get_double("circle_length");
    r.finish();
  }
  if (const Node* n = root.block("surface")) {
    Reader r{*n, "surface"};
    auto ctor = r.get("constructor");
    if (!ctor) throw ConfigError("surface.constructor is required");
    cfg.surface.constructor = *ctor;
    cfg.surface.H = r.get_double("H");
    cfg.surface.c_gamma = r.get_double("c_gamma");
    cfg.surface.t = r.get_double("t");
    cfg.surface.chart_radius = r.get_double("chart_radius");
    cfg.surface.eps = r.get_double("eps");
    cfg.surface.resolution = r.get_int("resolution");
    if (auto rs = r.get("resolutions")) {
      for (const auto& tok : split_ws(*rs)) {
        int v = to_int("surface.resolutions", tok);
        if (v <= 0) throw ConfigError("surface.resolutions: entries must be positive");
        cfg.surface.resolutions.push_back(v);
      }
    }
    if (cfg.surface.resolution && *cfg.surface.resolution <= 0)
      throw ConfigError("surface.resolution: must be positive");
    r.finish();
  }
  if (const Node* n = root.block("solver")) {
    Reader r{*n, "solver"};
    cfg.solver.k = r.get_int("k").value_or(cfg.solver.k);
    cfg.solver.tol = r.get_double("tol").value_or(cfg.solver.tol);
    cfg.solver.max_iter = r.get_int("max_iter").value_or(cfg.solver.max_iter);
    if (auto s = r.get("shift_policy")) cfg.solver.shift_policy = *s;
    if (cfg.solver.shift_policy != "auto")
      to_double("solver.shift_policy", cfg.solver.shift_policy);  // must be numeric
    r.finish();
  }
  if (const Node* n = root.block("verify")) {
    Reader r{*n, "verify"};
    cfg.verify.tol_eq = r.get_double("tol_eq").value_or(cfg.verify.tol_eq);
    cfg.verify.tol_verify = r.get_double("tol_verify").value_or(cfg.verify.tol_verify);
    r.finish();
  }
  if (const Node* n = root.block("sweep")) {
    Reader r{*n, "sweep"};
    cfg.sweep.parameter = r.get("parameter").value_or("");
    cfg.sweep.from = r.get_double("from").value_or(0.0);
    cfg.sweep.to = r.get_double("to").value_or(0.0);
    cfg.sweep.steps = r.get_int("steps").value_or(0);
    cfg.sweep.max_jobs = r.get_int("max_jobs").value_or(cfg.sweep.max_jobs);
    r.finish();
  }
  if (const Node* n = root.block("output")) {
    Reader r{*n, "output"};
    if (auto d = r.get("directory")) cfg.output.directory = *d;
    if (auto f = r.get("formats")) {
      cfg.output.formats = split_ws(*f);
      for (const auto& fmt : cfg.output.formats)
        if (fmt != "json" && fmt != "csv" && fmt != "off")
          throw ConfigError("output.formats: unknown format '" + fmt + "'");
    }
    r.finish();
  }
  return cfg;
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_run_config(ss.str());
}

AmbientSpace space_from_config(const SpaceConfig& cfg) {
  auto need = [&](const std::optional<double>& v, const char* key) {
    if (!v) throw ConfigError(std::string("space.") + key + " is required for kind " + cfg.kind);
    return *v;
  };
  SpaceKind kind;
  try {
    kind = space_kind_from_string(cfg.kind);
  } catch (const InvalidSpace& e) {
    throw ConfigError(std::string("space.kind: ") + e.what());
  }
  try {
    switch (kind) {
      case SpaceKind::SpaceForm: return AmbientSpace::space_form(need(cfg.c, "c"));
      case SpaceKind::ProductS2R: return AmbientSpace::product_s2r(need(cfg.kappa, "kappa"));
      case SpaceKind::ProductS2S1:
        return AmbientSpace::product_s2s1(need(cfg.kappa, "kappa"),
                                          need(cfg.circle_length, "circle_length"));
      case SpaceKind::ProductH2R: return AmbientSpace::product_h2r(need(cfg.kappa, "kappa"));
      case SpaceKind::BergerSphere:
        return AmbientSpace::berger_sphere(need(cfg.kappa, "kappa"), need(cfg.tau, "tau"));
      case SpaceKind::Heisenberg: return AmbientSpace::heisenberg(need(cfg.tau, "tau"));
      case SpaceKind::Sl2Universal:
        return AmbientSpace::sl2_universal(need(cfg.kappa, "kappa"), need(cfg.tau, "tau"));
    }
  } catch (const InvalidSpace& e) {
    throw ConfigError(std::string("space: ") + e.what());
  }
  throw ConfigError("space.kind: unreachable");
}

SurfaceModel surface_from_config(const RunConfig& cfg) {
  AmbientSpace space = space_from_config(cfg.space);
  const SurfaceConfig& s = cfg.surface;
  auto need = [&](const std::optional<double>& v, const char* key) {
    if (!v) throw ConfigError(std::string("surface.") + key + " is required for constructor " +
                              s.constructor);
    return *v;
  };
  try {
    if (s.constructor == "clifford_torus") {
      if (space.kind != SpaceKind::SpaceForm || !(space.c > 0.0))
        throw ConfigError("surface.constructor: clifford_torus needs a SpaceForm with c > 0");
      return make_clifford_torus(space.c, need(s.H, "H"));
    }
    if (s.constructor == "hopf_torus") {
      if (space.kind != SpaceKind::BergerSphere && space.kind != SpaceKind::ProductS2S1)
        throw ConfigError(
            "surface.constructor: hopf_torus needs a BergerSphere or ProductS2S1 space");
      return make_hopf_torus({space, need(s.c_gamma, "c_gamma")});
    }
    if (s.constructor == "slice_sphere") {
      if (space.kind != SpaceKind::ProductS2R && space.kind != SpaceKind::ProductS2S1)
        throw ConfigError(
            "surface.constructor: slice_sphere needs a ProductS2R or ProductS2S1 space");
      return make_slice_sphere(space, s.t.value_or(0.0));
    }
    if (s.constructor == "round_sphere") {
      if (space.kind != SpaceKind::SpaceForm)
        throw ConfigError("surface.constructor: round_sphere needs a SpaceForm space");
      return make_round_sphere(space, need(s.chart_radius, "chart_radius"));
    }
    if (s.constructor == "perturbed_sphere") {
      if (space.kind != SpaceKind::SpaceForm)
        throw ConfigError("surface.constructor: perturbed_sphere needs a SpaceForm space");
      return make_perturbed_sphere(space, need(s.chart_radius, "chart_radius"),
                                   need(s.eps, "eps"));
    }
  } catch (const UnsupportedSpace& e) {
    throw ConfigError(std::string("surface: ") + e.what());
  }
  throw ConfigError("surface.constructor: unknown constructor '" + s.constructor + "'");
}

}  // namespace cmcstab
