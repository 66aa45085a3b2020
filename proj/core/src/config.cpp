#include "fracplast/config.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace fracplast {

using nlohmann::json;

namespace {

ConfigError constraint(const std::string& what) {
  return ConfigError(ConfigError::Kind::constraint, what);
}

double as_number(const json& v, const std::string& key) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s == "inf" || s == "infinity") return std::numeric_limits<double>::infinity();
  }
  throw ConfigError(ConfigError::Kind::parse, "key '" + key + "' must be a number");
}

int as_int(const json& v, const std::string& key) {
  const double d = as_number(v, key);
  if (!std::isfinite(d) || d != std::floor(d)) {
    throw ConfigError(ConfigError::Kind::parse, "key '" + key + "' must be an integer");
  }
  return static_cast<int>(d);
}

std::string as_string(const json& v, const std::string& key) {
  if (!v.is_string()) {
    throw ConfigError(ConfigError::Kind::parse, "key '" + key + "' must be a string");
  }
  return v.get<std::string>();
}

EndConvention parse_ends(const std::string& s) {
  if (s == "outward") return EndConvention::outward;
  if (s == "both_positive" || s == "both-positive") return EndConvention::both_positive;
  throw ConfigError(ConfigError::Kind::parse,
                    "end_convention must be 'outward' or 'both_positive', got '" + s + "'");
}

BodyForceProfile::Kind parse_profile(const std::string& s) {
  if (s == "uniform") return BodyForceProfile::Kind::uniform;
  if (s == "central_segment") return BodyForceProfile::Kind::central_segment;
  if (s == "table") return BodyForceProfile::Kind::table;
  throw ConfigError(ConfigError::Kind::parse,
                    "body_force must be 'uniform', 'central_segment' or 'table', got '" + s + "'");
}

void set_key(RunConfig& c, const std::string& key, const json& v) {
  if (key == "alpha") {
    c.alpha = as_number(v, key);
  } else if (key == "ell_fraction") {
    c.ell_fraction = as_number(v, key);
  } else if (key == "m") {
    c.m = as_int(v, key);
  } else if (key == "l") {
    c.l = as_number(v, key);
  } else if (key == "E") {
    c.E = as_number(v, key);
  } else if (key == "sigma_Y") {
    c.sigma_Y = as_number(v, key);
  } else if (key == "u_bar_fraction") {
    c.u_bar_fraction = as_number(v, key);
  } else if (key == "body_force") {
    c.body_force.kind = parse_profile(as_string(v, key));
  } else if (key == "body_force_magnitude") {
    c.body_force.magnitude = as_number(v, key);
  } else if (key == "body_force_fraction") {
    c.body_force.fraction = as_number(v, key);
  } else if (key == "body_force_table") {
    if (!v.is_array()) {
      throw ConfigError(ConfigError::Kind::parse, "body_force_table must be an array of pairs");
    }
    c.body_force.table.clear();
    for (const auto& row : v) {
      if (!row.is_array() || row.size() != 2) {
        throw ConfigError(ConfigError::Kind::parse, "body_force_table rows must be [x/l, b]");
      }
      c.body_force.table.emplace_back(as_number(row[0], key), as_number(row[1], key));
    }
  } else if (key == "n_steps") {
    c.n_steps = as_int(v, key);
  } else if (key == "end_convention") {
    c.end_convention = parse_ends(as_string(v, key));
  } else if (key == "n") {
    c.n = as_int(v, key);
  } else if (key == "output") {
    c.output = as_string(v, key);
  } else {
    throw ConfigError(ConfigError::Kind::unknown_key, "unknown configuration key '" + key + "'");
  }
}

}  // namespace

void RunConfig::validate() const {
  if (!alpha) throw constraint("missing required key 'alpha'");
  if (!ell_fraction) throw constraint("missing required key 'ell_fraction'");
  if (!m) throw constraint("missing required key 'm'");
  if (!(*alpha > 0.0 && *alpha <= 1.0)) throw constraint("alpha must lie in (0,1]");
  if (*m < 2) throw constraint("m must be >= 2");
  if (!(l > 0.0) || !std::isfinite(l)) throw constraint("l must be positive");
  if (!(*ell_fraction > 0.0 && *ell_fraction <= 1.0)) {
    throw constraint("ell_fraction must lie in (0,1]");
  }
  if (!(E > 0.0) || !std::isfinite(E)) throw constraint("E must be positive");
  if (!(sigma_Y > 0.0)) throw constraint("sigma_Y must be positive");
  if (!std::isfinite(u_bar_fraction)) throw constraint("u_bar_fraction must be finite");
  if (n_steps < 1) throw constraint("n_steps must be >= 1");
  if (!std::isfinite(body_force.magnitude)) throw constraint("body_force_magnitude must be finite");
  if (body_force.kind == BodyForceProfile::Kind::central_segment &&
      !(body_force.fraction > 0.0 && body_force.fraction <= 1.0)) {
    throw constraint("body_force_fraction must lie in (0,1]");
  }
  if (body_force.kind == BodyForceProfile::Kind::table) {
    if (body_force.table.empty()) throw constraint("body_force_table must not be empty");
    for (std::size_t i = 1; i < body_force.table.size(); ++i) {
      if (!(body_force.table[i].first > body_force.table[i - 1].first)) {
        throw constraint("body_force_table x/l values must be strictly increasing");
      }
    }
  }

  const Grid1D g = Grid1D::make(spec(), l);
  if (n && *n != g.n_intervals) {
    throw constraint("grid constraint dx = ell/m violated: n = " + std::to_string(*n) +
                     " but l/(ell/m) = " + std::to_string(g.n_intervals));
  }
}

FractionalOperatorSpec RunConfig::spec() const {
  if (!alpha || !ell_fraction || !m) throw constraint("alpha, ell_fraction and m are required");
  try {
    return FractionalOperatorSpec(*alpha, *ell_fraction * l, *m);
  } catch (const std::domain_error& e) {
    throw constraint(e.what());
  }
}

Grid1D RunConfig::grid() const { return Grid1D::make(spec(), l); }

Problem RunConfig::problem() const {
  validate();
  const Grid1D g = grid();
  LoadProgram prog;
  prog.u_bar = u_bar_fraction * l;
  prog.n_steps = n_steps;
  prog.ends = end_convention;
  prog.body_force = sample_body_force(body_force, g);
  return Problem{spec(), l, MaterialParams{E, sigma_Y}, std::move(prog)};
}

std::string RunConfig::to_json() const {
  json j;
  if (alpha) j["alpha"] = *alpha;
  if (ell_fraction) j["ell_fraction"] = *ell_fraction;
  if (m) j["m"] = *m;
  j["l"] = l;
  j["E"] = E;
  if (std::isfinite(sigma_Y)) {
    j["sigma_Y"] = sigma_Y;
  } else {
    j["sigma_Y"] = "inf";
  }
  j["u_bar_fraction"] = u_bar_fraction;
  j["body_force"] = to_string(body_force.kind);
  j["body_force_magnitude"] = body_force.magnitude;
  if (body_force.kind == BodyForceProfile::Kind::central_segment) {
    j["body_force_fraction"] = body_force.fraction;
  }
  if (body_force.kind == BodyForceProfile::Kind::table) {
    json t = json::array();
    for (const auto& [x, b] : body_force.table) t.push_back({x, b});
    j["body_force_table"] = t;
  }
  j["n_steps"] = n_steps;
  j["end_convention"] = to_string(end_convention);
  if (alpha && ell_fraction && m) {
    try {
      j["n"] = grid().n_intervals;
    } catch (const ConfigError&) {
    }
  }
  return j.dump(2);
}

RunConfig parse_config_text(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(ConfigError::Kind::parse, std::string("malformed configuration: ") + e.what());
  }
  if (!j.is_object()) {
    throw ConfigError(ConfigError::Kind::parse, "configuration must be a flat JSON object");
  }
  RunConfig c;
  for (const auto& [key, value] : j.items()) set_key(c, key, value);
  return c;
}

RunConfig parse_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError(ConfigError::Kind::missing_file,
                      "cannot open configuration file '" + path.string() + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

void apply_override(RunConfig& config, std::string_view key, std::string_view value) {
  json v;
  try {
    v = json::parse(value);
  } catch (const json::parse_error&) {
    v = std::string(value);
  }
  set_key(config, std::string(key), v);
}

RunConfig baseline_config(double alpha, double ell_fraction, int m) {
  RunConfig c;
  c.alpha = alpha;
  c.ell_fraction = ell_fraction;
  c.m = m;
  return c;
}

std::string to_string(EndConvention ends) {
  return ends == EndConvention::outward ? "outward" : "both_positive";
}

std::string to_string(BodyForceProfile::Kind kind) {
  switch (kind) {
    case BodyForceProfile::Kind::uniform:
      return "uniform";
    case BodyForceProfile::Kind::central_segment:
      return "central_segment";
    case BodyForceProfile::Kind::table:
      return "table";
  }
  return "uniform";
}

}  // namespace fracplast
