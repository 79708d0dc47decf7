#include "twopath/config.hpp"

#include <cmath>
#include <map>
#include <numbers>

#include <json.hpp>

namespace twopath {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ConfigError(path + ": " + what);
}

double get_number(const json& obj, const std::string& path,
                  const std::string& key) {
  if (!obj.contains(key)) fail(path + "." + key, "missing required field");
  const json& v = obj.at(key);
  if (!v.is_number()) fail(path + "." + key, "expected a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) fail(path + "." + key, "must be finite");
  return d;
}

int get_integer(const json& obj, const std::string& path,
                const std::string& key) {
  if (!obj.contains(key)) fail(path + "." + key, "missing required field");
  const json& v = obj.at(key);
  if (!v.is_number_integer()) fail(path + "." + key, "expected an integer");
  return v.get<int>();
}

void reject_unknown_keys(const json& obj, const std::string& path,
                         std::initializer_list<const char*> known) {
  for (const auto& item : obj.items()) {
    bool ok = false;
    for (const char* k : known)
      if (item.key() == k) ok = true;
    if (!ok) fail(path + "." + item.key(), "unknown field");
  }
}

BartellSetup parse_bartell(const json& p, const std::string& path) {
  reject_unknown_keys(p, path, {"k", "x0", "d", "l", "f"});
  BartellSetup s;
  s.wavenumber = get_number(p, path, "k");
  s.slit_width = get_number(p, path, "x0");
  s.slit_separation = get_number(p, path, "d");
  s.screen_distance = get_number(p, path, "l");
  s.focal_length = get_number(p, path, "f");
  try {
    s.validate();
  } catch (const std::invalid_argument& e) {
    fail(path, e.what());
  }
  return s;
}

BeamSplitterSetup parse_beamsplitter(const json& p, const std::string& path) {
  reject_unknown_keys(p, path, {"k", "x0", "theta", "L"});
  BeamSplitterSetup s;
  s.wavenumber = get_number(p, path, "k");
  s.beam_width = get_number(p, path, "x0");
  s.half_angle = get_number(p, path, "theta");
  s.displacement = get_number(p, path, "L");
  try {
    s.validate();
  } catch (const std::invalid_argument& e) {
    fail(path, e.what());
  }
  return s;
}

MesonParams parse_meson(const json& p, const std::string& path) {
  reject_unknown_keys(p, path, {"delta_m", "gamma_S", "gamma_L"});
  MesonParams m;
  m.mass_splitting = get_number(p, path, "delta_m");
  m.width_short = get_number(p, path, "gamma_S");
  m.width_long = get_number(p, path, "gamma_L");
  try {
    m.validate();
  } catch (const std::invalid_argument& e) {
    fail(path, e.what());
  }
  return m;
}

MottParams parse_mott(const json& p, const std::string& path) {
  reject_unknown_keys(p, path,
                      {"Z", "mass_energy", "nuclide", "E", "spin2",
                       "polarized"});
  MottParams m;
  const bool has_mass = p.contains("mass_energy");
  const bool has_nuclide = p.contains("nuclide");
  if (has_mass == has_nuclide)
    fail(path, "exactly one of mass_energy and nuclide is required");
  if (has_nuclide) {
    const json& v = p.at("nuclide");
    if (!v.is_string()) fail(path + ".nuclide", "expected a string");
    try {
      m.mass_energy = nuclear_mass_energy(v.get<std::string>());
      m.charge = nuclear_charge(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
      fail(path + ".nuclide", e.what());
    }
    if (p.contains("Z") && get_integer(p, path, "Z") != m.charge)
      fail(path + ".Z", "contradicts the nuclide's proton number");
  } else {
    m.mass_energy = get_number(p, path, "mass_energy");
    m.charge = get_integer(p, path, "Z");
  }
  m.energy = get_number(p, path, "E");
  m.spin_twice = p.contains("spin2") ? get_integer(p, path, "spin2") : 0;
  if (p.contains("polarized")) {
    const json& v = p.at("polarized");
    if (!v.is_boolean()) fail(path + ".polarized", "expected a boolean");
    m.polarized = v.get<bool>();
  }
  try {
    m.validate();
  } catch (const std::invalid_argument& e) {
    fail(path, e.what());
  }
  return m;
}

GridSpec parse_grid(const json& g, const std::string& path) {
  reject_unknown_keys(g, path, {"min", "max", "points"});
  GridSpec spec;
  spec.min = get_number(g, path, "min");
  spec.max = get_number(g, path, "max");
  const int points = get_integer(g, path, "points");
  if (points < 2) fail(path + ".points", "must be >= 2");
  spec.points = static_cast<std::size_t>(points);
  try {
    spec.validate();
  } catch (const std::invalid_argument& e) {
    fail(path, e.what());
  }
  return spec;
}

const std::map<std::string, SetupConfig, std::less<>>& preset_table() {
  static const auto* table = [] {
    auto* t = new std::map<std::string, SetupConfig, std::less<>>;
    const auto add = [&](const char* name, SetupKind kind, auto params) {
      SetupConfig c;
      c.kind = kind;
      c.preset = name;
      c.parameters = params;
      (*t)[name] = c;
    };
    add("bartell-paper", SetupKind::bartell,
        BartellSetup{1e7, 1e-4, 3e-3, 0.1, 0.11});
    // theta is a free choice here (R does not depend on it)
    add("beamsplitter-paper", SetupKind::beamsplitter,
        BeamSplitterSetup{1e7, 1e-4, 0.01, 0.01});
    add("kaon", SetupKind::meson, kaon_params());

    const auto mott = [](const char* nuclide, double energy_mev,
                         int spin_twice) {
      return MottParams{nuclear_charge(nuclide),
                        nuclear_mass_energy(nuclide), energy_mev, spin_twice,
                        false};
    };
    add("alpha-75keV", SetupKind::mott, mott("He-4", 0.075, 0));
    add("alpha-150keV", SetupKind::mott, mott("He-4", 0.150, 0));
    add("alpha-200keV", SetupKind::mott, mott("He-4", 0.200, 0));
    add("C12-3MeV", SetupKind::mott, mott("C-12", 3.0, 0));
    add("C12-5MeV", SetupKind::mott, mott("C-12", 5.0, 0));
    add("O16-7MeV", SetupKind::mott, mott("O-16", 7.0, 0));
    add("O16-8.8MeV", SetupKind::mott, mott("O-16", 8.8, 0));
    add("O16-10MeV", SetupKind::mott, mott("O-16", 10.0, 0));
    add("C13-75keV", SetupKind::mott, mott("C-13", 0.075, 1));
    return t;
  }();
  return *table;
}

}  // namespace

void GridSpec::validate() const {
  if (!(std::isfinite(min) && std::isfinite(max) && min < max))
    throw std::invalid_argument("grid: min must be < max and both finite");
  if (points < 2) throw std::invalid_argument("grid.points: must be >= 2");
}

double GridSpec::at(std::size_t i) const {
  return min + (max - min) * static_cast<double>(i) /
                   static_cast<double>(points - 1);
}

std::vector<double> GridSpec::samples() const {
  validate();
  std::vector<double> out;
  out.reserve(points);
  for (std::size_t i = 0; i < points; ++i) out.push_back(at(i));
  return out;
}

std::string_view to_string(SetupKind k) {
  switch (k) {
    case SetupKind::bartell: return "bartell";
    case SetupKind::beamsplitter: return "beamsplitter";
    case SetupKind::meson: return "meson";
    case SetupKind::mott: return "mott";
  }
  return "?";
}

SetupConfig parse_config(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config: not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("config", "top level must be a JSON object");
  reject_unknown_keys(doc, "config", {"kind", "preset", "parameters", "grid"});

  if (!doc.contains("kind")) fail("config.kind", "missing required field");
  if (!doc.at("kind").is_string()) fail("config.kind", "expected a string");
  const std::string kind_name = doc.at("kind").get<std::string>();

  SetupKind kind;
  if (kind_name == "bartell") kind = SetupKind::bartell;
  else if (kind_name == "beamsplitter") kind = SetupKind::beamsplitter;
  else if (kind_name == "meson") kind = SetupKind::meson;
  else if (kind_name == "mott") kind = SetupKind::mott;
  else
    fail("config.kind", "unknown kind \"" + kind_name +
                            "\" (expected bartell|beamsplitter|meson|mott)");

  const bool has_preset = doc.contains("preset");
  const bool has_params = doc.contains("parameters");
  if (has_preset && has_params)
    fail("config", "preset and parameters are mutually exclusive");
  if (!has_preset && !has_params)
    fail("config", "one of preset or parameters is required");

  SetupConfig cfg;
  cfg.kind = kind;
  if (has_preset) {
    if (!doc.at("preset").is_string())
      fail("config.preset", "expected a string");
    const std::string name = doc.at("preset").get<std::string>();
    const auto it = preset_table().find(name);
    if (it == preset_table().end())
      fail("config.preset", "unknown preset \"" + name + "\"");
    if (it->second.kind != kind)
      fail("config.preset", "preset \"" + name + "\" belongs to kind \"" +
                                std::string(to_string(it->second.kind)) +
                                "\"");
    cfg.parameters = it->second.parameters;
    cfg.preset = name;
  } else {
    const json& p = doc.at("parameters");
    if (!p.is_object()) fail("config.parameters", "expected an object");
    switch (kind) {
      case SetupKind::bartell:
        cfg.parameters = parse_bartell(p, "config.parameters");
        break;
      case SetupKind::beamsplitter:
        cfg.parameters = parse_beamsplitter(p, "config.parameters");
        break;
      case SetupKind::meson:
        cfg.parameters = parse_meson(p, "config.parameters");
        break;
      case SetupKind::mott:
        cfg.parameters = parse_mott(p, "config.parameters");
        break;
    }
  }

  if (doc.contains("grid")) {
    if (!doc.at("grid").is_object()) fail("config.grid", "expected an object");
    cfg.grid = parse_grid(doc.at("grid"), "config.grid");
  }
  return cfg;
}

SetupConfig preset_config(std::string_view name) {
  const auto it = preset_table().find(name);
  if (it == preset_table().end())
    throw ConfigError("preset: unknown preset \"" + std::string(name) + "\"");
  return it->second;
}

const std::vector<std::string>& preset_names() {
  static const auto* names = [] {
    auto* v = new std::vector<std::string>;
    for (const auto& [name, cfg] : preset_table()) v->push_back(name);
    return v;
  }();
  return *names;
}

GridSpec default_grid(const SetupConfig& c) {
  constexpr std::size_t points = 2001;
  switch (c.kind) {
    case SetupKind::bartell: {
      const double sigma =
          std::sqrt(bartell_sigma_squared(std::get<BartellSetup>(c.parameters)));
      return GridSpec{-5.0 * sigma, 5.0 * sigma, points};
    }
    case SetupKind::beamsplitter: {
      const double sigma = std::get<BeamSplitterSetup>(c.parameters).beam_width;
      return GridSpec{-5.0 * sigma, 5.0 * sigma, points};
    }
    case SetupKind::meson: {
      const double tau_s = 1.0 / std::get<MesonParams>(c.parameters).width_short;
      return GridSpec{0.0, 12.0 * tau_s, points};
    }
    case SetupKind::mott:
      return GridSpec{0.02 * std::numbers::pi, 0.98 * std::numbers::pi,
                      points};
  }
  throw std::logic_error("default_grid: unreachable");
}

GridSpec effective_grid(const SetupConfig& c) {
  return c.grid ? *c.grid : default_grid(c);
}

GridSpec parse_grid_spec(const std::string& text) {
  const auto first = text.find(':');
  const auto second = text.find(':', first == std::string::npos ? first : first + 1);
  if (first == std::string::npos || second == std::string::npos ||
      text.find(':', second + 1) != std::string::npos)
    throw ConfigError("grid: expected min:max:points, got \"" + text + "\"");
  GridSpec g;
  try {
    std::size_t used = 0;
    const std::string smin = text.substr(0, first);
    const std::string smax = text.substr(first + 1, second - first - 1);
    const std::string spts = text.substr(second + 1);
    g.min = std::stod(smin, &used);
    if (used != smin.size()) throw std::invalid_argument(smin);
    g.max = std::stod(smax, &used);
    if (used != smax.size()) throw std::invalid_argument(smax);
    const long pts = std::stol(spts, &used);
    if (used != spts.size() || pts < 2) throw std::invalid_argument(spts);
    g.points = static_cast<std::size_t>(pts);
  } catch (const std::exception&) {
    throw ConfigError("grid: expected min:max:points, got \"" + text + "\"");
  }
  try {
    g.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("grid: ") + e.what());
  }
  return g;
}

}  // namespace twopath
