#pragma once

// JSON and CSV forms of verdicts, search reports, search configs and
// projective linear set specs. Field elements always appear as integer
// codecs; rationals appear as strings ("3", "7/2").

#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "redei/analysis.hpp"
#include "redei/field.hpp"
#include "redei/geometry.hpp"
#include "redei/linsets.hpp"
#include "redei/pointset_io.hpp"
#include "redei/search.hpp"

namespace redei {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolName = "redei";
inline constexpr const char* kVersion = "1.0.0";

inline Json field_json(const Field& f) {
  return Json{{"p", f.p()}, {"h", f.h()}, {"q", f.q()}, {"modulus", modulus_string(f)}};
}

inline Json points_json(const AffinePointSet& u) {
  Json arr = Json::array();
  for (const auto& pt : u.points()) arr.push_back({pt.a.v, pt.b.v});
  return arr;
}

inline Json points_json(const Field& f, const std::vector<std::uint32_t>& codes) {
  return points_json(AffinePointSet::from_codes(f, codes));
}

inline Json directions_json(const DirectionSet& d) {
  Json arr = Json::array();
  for (const auto& y : d.directions()) {
    if (y.is_infinity()) arr.push_back("inf");
    else arr.push_back(y.slope().v);
  }
  return arr;
}

inline Json verdict_json(const Verdict& v) {
  Json checks = Json::array();
  for (const auto& c : v.checks)
    checks.push_back({{"label", c.label}, {"lhs", c.lhs.to_string()}, {"rel", to_string(c.rel)}, {"rhs", c.rhs.to_string()}, {"holds", c.holds}});
  Json values = Json::object();
  for (const auto& [k, x] : v.values) values[k] = x;
  return Json{{"statement", v.statement}, {"applicable", v.applicable}, {"case", v.case_matched},
              {"checks", checks},          {"notes", v.notes},           {"values", values}};
}

inline Json config_json(const SearchConfig& c) {
  Json j{{"q", c.q},
         {"n_min", c.n_min},
         {"n_max", c.effective_n_max()},
         {"mode", to_string(c.mode)},
         {"seed", c.seed ? Json(*c.seed) : Json(nullptr)},
         {"budget", c.budget},
         {"symmetry", c.symmetry ? "on" : "off"},
         {"workers", c.workers},
         {"statements", c.statements},
         {"replay_dir", c.replay_dir},
         {"maximal_only", c.maximal_only}};
  return j;
}

/// Reads a search config; unknown keys are rejected.
inline SearchConfig config_from_json(const Json& j) {
  if (!j.is_object()) throw FormatError("search config must be a JSON object");
  static const std::vector<std::string> known = {"q", "n_min", "n_max", "mode", "seed", "budget", "symmetry", "workers", "statements", "replay_dir", "maximal_only"};
  for (const auto& [k, v] : j.items())
    if (std::find(known.begin(), known.end(), k) == known.end()) throw FormatError("unknown config key '" + k + "'");
  SearchConfig c;
  try {
    c.q = j.at("q").get<std::uint32_t>();
    if (j.contains("n_min")) c.n_min = j["n_min"].get<std::uint32_t>();
    if (j.contains("n_max")) c.n_max = j["n_max"].get<std::uint32_t>();
    if (j.contains("mode")) {
      const auto m = j["mode"].get<std::string>();
      if (m == "exhaustive") c.mode = SearchMode::kExhaustive;
      else if (m == "random") c.mode = SearchMode::kRandom;
      else throw FormatError("mode must be 'exhaustive' or 'random'");
    }
    if (j.contains("seed") && !j["seed"].is_null()) c.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("budget")) c.budget = j["budget"].get<std::uint64_t>();
    if (j.contains("symmetry")) {
      const auto& s = j["symmetry"];
      if (s.is_boolean()) c.symmetry = s.get<bool>();
      else if (s == "on") c.symmetry = true;
      else if (s == "off") c.symmetry = false;
      else throw FormatError("symmetry must be 'on' or 'off'");
    }
    if (j.contains("workers")) c.workers = j["workers"].get<unsigned>();
    if (j.contains("statements")) c.statements = j["statements"].get<std::vector<std::string>>();
    if (j.contains("replay_dir")) c.replay_dir = j["replay_dir"].get<std::string>();
    if (j.contains("maximal_only")) c.maximal_only = j["maximal_only"].get<bool>();
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("bad search config: ") + e.what());
  }
  return c;
}

inline SearchConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  try {
    return config_from_json(Json::parse(in));
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

inline Json report_json(const SearchReport& r, bool timing = false) {
  const Field f = make_field_of_order(r.config.q);
  Json tallies = Json::array();
  for (const auto& [id, t] : r.tallies)
    tallies.push_back({{"statement", id}, {"pass", t.pass}, {"fail", t.fail}, {"inapplicable", t.inapplicable}});
  Json ces = Json::array();
  for (const auto& ce : r.counterexamples)
    ces.push_back({{"set_id", ce.set_id}, {"statement", ce.statement}, {"points", points_json(f, ce.codes)}, {"replay", ce.replay_path}, {"verdict", verdict_json(ce.verdict)}});
  Json sharp = Json::array();
  for (const auto& [n, codes] : r.sharp_by_size) sharp.push_back({{"n", n}, {"points", points_json(f, codes)}});
  Json j{{"sets_examined", r.sets_examined}};
  if (r.config.symmetry) j["canonical_representatives"] = r.canonical_representatives;
  if (r.config.maximal_only) j["maximal_sets"] = r.maximal_sets;
  j["tallies"] = tallies;
  j["counterexamples"] = ces;
  if (!sharp.empty()) j["sharp_sets"] = sharp;
  j["alarms"] = r.alarms;
  if (timing) j["wall_seconds"] = r.wall_seconds;
  return j;
}

inline const char* kCsvHeader = "set_id,n,D_size,s,t,degXH,case,holds";

/// One row per (set, statement). With several statements the case column is
/// prefixed by the statement id.
inline void write_csv_rows(std::ostream& out, const SearchReport& r) {
  out << kCsvHeader << '\n';
  const bool prefix = r.config.statements.size() > 1;
  auto opt = [](const std::optional<std::int64_t>& x) { return x ? std::to_string(*x) : std::string(); };
  for (const auto& row : r.rows) {
    std::string c = prefix ? row.statement + ":" + row.case_matched : row.case_matched;
    out << row.set_id << ',' << row.n << ',' << row.d_size << ',' << opt(row.s) << ',' << opt(row.t) << ',' << opt(row.deg_x_h) << ','
        << c << ',' << row.holds << '\n';
  }
}

inline ProjectiveLinearSpec linear_spec_from_json(const Json& j, Vec* translate = nullptr) {
  try {
    const Field f = make_field(j.at("p").get<std::uint32_t>(), j.at("h").get<std::uint32_t>());
    ProjectiveLinearSpec spec{f, j.at("s").get<std::uint32_t>(), j.at("d").get<std::uint32_t>(), j.at("n").get<std::uint32_t>(), {}};
    for (const auto& row : j.at("projection_matrix")) {
      Vec r;
      for (const auto& e : row) r.push_back(Elem{e.get<std::uint32_t>()});
      spec.projection.push_back(std::move(r));
    }
    validate(spec);
    if (translate) {
      translate->assign(spec.n + 1, Field::zero());
      if (j.contains("translate") && !j["translate"].is_null()) {
        const auto& t = j["translate"];
        if (t.size() != spec.n + 1) throw FormatError("translate must have n+1 entries");
        for (std::size_t i = 0; i < t.size(); ++i) {
          const auto v = t[i].get<std::uint32_t>();
          if (v >= f.q()) throw FormatError("translate entry outside field");
          (*translate)[i] = Elem{v};
        }
      }
    }
    return spec;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("bad linear set spec: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("invalid linear set spec: ") + e.what());
  } catch (const std::out_of_range& e) {
    throw FormatError(std::string("invalid linear set spec: ") + e.what());
  }
}

inline Json linear_spec_json(const ProjectiveLinearSpec& spec, const Vec& translate = {}) {
  Json rows = Json::array();
  for (const auto& row : spec.projection) {
    Json r = Json::array();
    for (Elem e : row) r.push_back(e.v);
    rows.push_back(r);
  }
  Json t = Json::array();
  for (Elem e : translate) t.push_back(e.v);
  return Json{{"p", spec.field.p()}, {"h", spec.field.h()}, {"s", spec.s}, {"d", spec.d}, {"n", spec.n}, {"projection_matrix", rows}, {"translate", t}};
}

inline ProjectiveLinearSpec load_linear_spec(const std::string& path, Vec* translate = nullptr) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  try {
    return linear_spec_from_json(Json::parse(in), translate);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

}  // namespace redei
