#include "torsion/config.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "torsion/error.hpp"

namespace torsion {

using nlohmann::json;

namespace {

class Validator {
 public:
  void fail(const std::string& path, const std::string& message) {
    violations_.push_back(path + ": " + message);
  }
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  std::vector<std::string> violations_;
};

std::optional<std::int64_t> as_int(const json& j) {
  if (j.is_number_integer()) return j.get<std::int64_t>();
  if (j.is_number_unsigned() && j.get<std::uint64_t>() <=
                                    static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
    return static_cast<std::int64_t>(j.get<std::uint64_t>());
  return std::nullopt;
}

/// Accepts an integer, a float (exact binary value, marked inexact), "p/q", or {num, den}.
std::optional<Rational> as_rational(const json& j, const std::string& path, Validator& v,
                                    bool* exact = nullptr) {
  if (exact) *exact = true;
  try {
    if (auto i = as_int(j)) return Rational(static_cast<long>(*i));
    if (j.is_number_float()) {
      if (exact) *exact = false;
      return Rational(j.get<double>());
    }
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_object()) {
      if (!j.contains("num") || !j.contains("den")) {
        v.fail(path, "rational object needs num and den");
        return std::nullopt;
      }
      auto part = [&](const json& x) -> std::optional<BigInt> {
        if (auto i = as_int(x)) return BigInt(static_cast<long>(*i));
        if (x.is_string()) return BigInt(x.get<std::string>());
        return std::nullopt;
      };
      auto num = part(j["num"]);
      auto den = part(j["den"]);
      if (!num || !den) {
        v.fail(path, "num and den must be integers");
        return std::nullopt;
      }
      if (*den == 0) {
        v.fail(path, "zero denominator");
        return std::nullopt;
      }
      Rational r(*num, *den);
      r.canonicalize();
      return r;
    }
  } catch (const std::exception& e) {
    v.fail(path, e.what());
    return std::nullopt;
  }
  v.fail(path, "expected a rational (integer, \"p/q\" or {num, den})");
  return std::nullopt;
}

json rational_json(const Rational& r) {
  const BigInt& num = r.get_num();
  const BigInt& den = r.get_den();
  auto part = [](const BigInt& z) -> json {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
  };
  return json{{"num", part(num)}, {"den", part(den)}};
}

const std::vector<std::string> kTopLevelKeys = {"n",       "tau",        "volume", "classes",
                                                "plancherel", "conventions"};

}  // namespace

RunConfig parse_config_text(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError({std::string("$: parse error: ") + e.what()});
  }
  Validator v;
  if (!root.is_object()) throw ConfigError({"$: configuration must be a JSON object"});
  for (const auto& [key, value] : root.items())
    if (std::find(kTopLevelKeys.begin(), kTopLevelKeys.end(), key) == kTopLevelKeys.end())
      v.fail(key, "unknown key");

  RunConfig cfg;

  // conventions first: angles depend on the unit.
  if (root.contains("conventions")) {
    const json& conv = root["conventions"];
    if (!conv.is_object()) {
      v.fail("conventions", "must be an object");
    } else if (conv.contains("angle_unit")) {
      if (!conv["angle_unit"].is_string()) {
        v.fail("conventions.angle_unit", "must be \"two_pi\" or \"pi\"");
      } else {
        try {
          cfg.angle_unit = parse_angle_unit(conv["angle_unit"].get<std::string>());
        } catch (const InvalidArgument& e) {
          v.fail("conventions.angle_unit", e.what());
        }
      }
    }
  }

  bool n_ok = false;
  if (!root.contains("n")) {
    v.fail("n", "missing");
  } else if (auto n = as_int(root["n"]); !n || *n < 1 || *n > 64) {
    v.fail("n", "must be an integer >= 1");
  } else {
    cfg.n = static_cast<int>(*n);
    n_ok = true;
  }

  if (!root.contains("tau")) {
    v.fail("tau", "missing");
  } else if (!root["tau"].is_array()) {
    v.fail("tau", "must be an array of integers");
  } else {
    bool entries_ok = true;
    for (std::size_t i = 0; i < root["tau"].size(); ++i) {
      auto x = as_int(root["tau"][i]);
      if (!x || *x < 0) {
        v.fail("tau[" + std::to_string(i) + "]", "must be a non-negative integer");
        entries_ok = false;
      } else {
        cfg.tau.push_back(*x);
      }
    }
    if (entries_ok) {
      if (n_ok && cfg.tau.size() != static_cast<std::size_t>(cfg.n) + 1)
        v.fail("tau", "must have n+1 = " + std::to_string(cfg.n + 1) + " entries");
      for (std::size_t i = 1; i < cfg.tau.size(); ++i)
        if (cfg.tau[i] > cfg.tau[i - 1]) {
          v.fail("tau", "tau not non-increasing");
          break;
        }
    }
  }

  cfg.orbifold.n = cfg.n;
  if (!root.contains("volume")) {
    v.fail("volume", "missing");
  } else if (auto vol = as_rational(root["volume"], "volume", v, &cfg.orbifold.volume_exact)) {
    if (*vol <= 0) v.fail("volume", "must be positive");
    cfg.orbifold.volume = *vol;
  }

  if (root.contains("classes")) {
    const json& classes = root["classes"];
    if (!classes.is_array()) {
      v.fail("classes", "must be an array");
    } else {
      for (std::size_t c = 0; c < classes.size(); ++c) {
        const std::string path = "classes[" + std::to_string(c) + "]";
        const json& jc = classes[c];
        if (!jc.is_object()) {
          v.fail(path, "must be an object");
          continue;
        }
        EllipticClass cls;
        bool ok = true;
        for (const auto& [key, value] : jc.items())
          if (key != "d" && key != "angles" && key != "weight") v.fail(path + "." + key, "unknown key");
        auto d = jc.contains("d") ? as_int(jc["d"]) : std::nullopt;
        if (!d) {
          v.fail(path + ".d", "must be an integer");
          ok = false;
        } else if (n_ok && (*d < 1 || *d > cfg.n)) {
          v.fail(path + ".d", "d out of range [1, n] (d = n+1 is the identity, not elliptic)");
          ok = false;
        } else {
          cls.d = static_cast<int>(*d);
        }
        if (!jc.contains("angles") || !jc["angles"].is_array()) {
          v.fail(path + ".angles", "must be an array of {p, q}");
          ok = false;
        } else {
          const json& angles = jc["angles"];
          for (std::size_t a = 0; a < angles.size(); ++a) {
            const std::string apath = path + ".angles[" + std::to_string(a) + "]";
            const json& ja = angles[a];
            auto p = ja.is_object() && ja.contains("p") ? as_int(ja["p"]) : std::nullopt;
            auto q = ja.is_object() && ja.contains("q") ? as_int(ja["q"]) : std::nullopt;
            if (!p || !q || *q == 0) {
              v.fail(apath, "angle must be {p, q} with integer p and nonzero integer q");
              ok = false;
              continue;
            }
            Angle angle(*p, *q, cfg.angle_unit);
            if (angle.is_trivial()) {
              v.fail(apath, "angle must be nonzero mod 2pi");
              ok = false;
            }
            cls.angles.push_back(angle);
          }
          for (std::size_t i = 0; i < cls.angles.size(); ++i)
            for (std::size_t j = 0; j < i; ++j)
              if (cls.angles[i].same_rotation(cls.angles[j])) {
                v.fail(path + ".angles", "angles must be distinct");
                ok = false;
                i = cls.angles.size();
                break;
              }
          if (ok && n_ok && d && cls.angles.size() != static_cast<std::size_t>(cfg.n + 1 - *d)) {
            v.fail(path + ".angles", "expected n+1-d = " + std::to_string(cfg.n + 1 - *d) + " angles");
            ok = false;
          }
        }
        if (jc.contains("weight")) {
          if (auto w = as_rational(jc["weight"], path + ".weight", v)) {
            if (*w <= 0) {
              v.fail(path + ".weight", "must be positive");
              ok = false;
            }
            cls.weight = *w;
          } else {
            ok = false;
          }
        }
        if (ok) cfg.orbifold.classes.push_back(std::move(cls));
      }
    }
  }

  if (root.contains("plancherel") && !root["plancherel"].is_null()) {
    const json& pl = root["plancherel"];
    if (!pl.is_array()) {
      v.fail("plancherel", "must be an array of n+1 coefficient arrays");
    } else {
      if (n_ok && pl.size() != static_cast<std::size_t>(cfg.n) + 1)
        v.fail("plancherel", "must have n+1 = " + std::to_string(cfg.n + 1) + " coefficient arrays");
      std::vector<std::vector<Rational>> table;
      for (std::size_t k = 0; k < pl.size(); ++k) {
        const std::string path = "plancherel[" + std::to_string(k) + "]";
        std::vector<Rational> coeffs;
        if (!pl[k].is_array()) {
          v.fail(path, "must be an array of rationals (coefficients of nu^0, nu^2, ...)");
        } else {
          for (std::size_t i = 0; i < pl[k].size(); ++i)
            if (auto r = as_rational(pl[k][i], path + "[" + std::to_string(i) + "]", v))
              coeffs.push_back(*r);
        }
        table.push_back(std::move(coeffs));
      }
      cfg.orbifold.plancherel = std::move(table);
    }
  }

  if (!v.violations().empty()) throw ConfigError(v.violations());
  cfg.q = cfg.orbifold.period();
  return cfg;
}

RunConfig parse_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError({path.string() + ": cannot open file"});
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config_text(buffer.str());
}

json to_json(const RunConfig& cfg) {
  json root;
  root["n"] = cfg.n;
  root["tau"] = cfg.tau;
  root["volume"] = cfg.orbifold.volume_exact ? rational_json(cfg.orbifold.volume)
                                             : json(to_double(cfg.orbifold.volume));
  json classes = json::array();
  for (const auto& cls : cfg.orbifold.classes) {
    json angles = json::array();
    for (const auto& a : cls.angles) angles.push_back({{"p", a.numerator()}, {"q", a.denominator()}});
    classes.push_back({{"d", cls.d}, {"angles", angles}, {"weight", rational_json(cls.weight)}});
  }
  root["classes"] = classes;
  if (cfg.orbifold.plancherel) {
    json table = json::array();
    for (const auto& row : *cfg.orbifold.plancherel) {
      json coeffs = json::array();
      for (const auto& c : row) coeffs.push_back(rational_json(c));
      table.push_back(coeffs);
    }
    root["plancherel"] = table;
  }
  root["conventions"] = {{"angle_unit", std::string(to_string(cfg.angle_unit))}};
  return root;
}

std::string canonical_config(const RunConfig& cfg) { return to_json(cfg).dump(2) + "\n"; }

const json& config_schema() {
  static const json schema = json::parse(R"({
  "$schema": "http://json-schema.org/draft-07/schema#",
  "title": "torsion ray configuration",
  "type": "object",
  "additionalProperties": false,
  "required": ["n", "tau", "volume"],
  "definitions": {
    "integer_like": {"oneOf": [{"type": "integer"}, {"type": "string", "pattern": "^-?[0-9]+$"}]},
    "rational": {
      "oneOf": [
        {"type": "number"},
        {"type": "string", "pattern": "^[+-]?[0-9]+(/[0-9]+)?$"},
        {"type": "object", "required": ["num", "den"], "additionalProperties": false,
         "properties": {"num": {"$ref": "#/definitions/integer_like"},
                        "den": {"$ref": "#/definitions/integer_like"}}}
      ]
    },
    "angle": {
      "type": "object", "required": ["p", "q"], "additionalProperties": false,
      "properties": {"p": {"type": "integer"}, "q": {"type": "integer", "not": {"const": 0}}}
    }
  },
  "properties": {
    "n": {"type": "integer", "minimum": 1, "description": "orbifold dimension is 2n+1"},
    "tau": {"type": "array", "items": {"type": "integer", "minimum": 0},
            "description": "base highest weight, n+1 non-increasing entries"},
    "volume": {"$ref": "#/definitions/rational", "description": "vol(O) > 0"},
    "classes": {
      "type": "array",
      "items": {
        "type": "object", "required": ["d", "angles"], "additionalProperties": false,
        "properties": {
          "d": {"type": "integer", "minimum": 1, "description": "identity blocks, 1 <= d <= n"},
          "angles": {"type": "array", "items": {"$ref": "#/definitions/angle"},
                     "description": "n+1-d distinct nonzero rotation angles"},
          "weight": {"$ref": "#/definitions/rational", "description": "centralizer volume > 0"}
        }
      }
    },
    "plancherel": {
      "type": "array",
      "items": {"type": "array", "items": {"$ref": "#/definitions/rational"}},
      "description": "n+1 lists of coefficients of nu^0, nu^2, ... replacing the built-in identity polynomial"
    },
    "conventions": {
      "type": "object", "additionalProperties": false,
      "properties": {"angle_unit": {"enum": ["two_pi", "pi"], "default": "two_pi"}}
    }
  }
})");
  return schema;
}

RunConfig pinned_config() {
  return parse_config_text(R"({
    "n": 2, "tau": [0, 0, 0], "volume": 1,
    "classes": [{"d": 2, "angles": [{"p": 1, "q": 4}], "weight": {"num": 1, "den": 1}}],
    "conventions": {"angle_unit": "two_pi"}
  })");
}

}  // namespace torsion
