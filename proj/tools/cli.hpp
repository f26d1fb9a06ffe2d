#pragma once

// Command-line front end. Exit codes: 0 success, 1 usage or I/O error,
// 2 an applicable verdict failed, 3 internal soundness alarm.

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "redei/analysis.hpp"
#include "redei/field.hpp"
#include "redei/geometry.hpp"
#include "redei/io.hpp"
#include "redei/linsets.hpp"
#include "redei/pointset_io.hpp"
#include "redei/redei.hpp"
#include "redei/search.hpp"

namespace redei::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kFailed = 2, kAlarm = 3 };

enum class Format { kText, kJson, kCsv };

struct Output {
  std::ostream& out;
  Format format;
  std::string verb;
  Json config;

  void header(const Field* f) const {
    out << "# " << kToolName << ' ' << kVersion << '\n';
    out << "# command: " << verb << ' ' << config.dump() << '\n';
    if (f) out << "# field: GF(" << f->q() << ") p=" << f->p() << " h=" << f->h() << " modulus " << modulus_string(*f) << '\n';
  }

  void json(const Field* f, Json result) const {
    Json doc{{"tool", {{"name", kToolName}, {"version", kVersion}}}, {"command", verb}, {"config", config}};
    if (f) doc["field"] = field_json(*f);
    doc["result"] = std::move(result);
    out << doc.dump(2) << '\n';
  }
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string join_dirs(const DirectionSet& d) {
  std::string s = "{";
  for (std::size_t i = 0; i < d.directions().size(); ++i) s += (i ? ", " : "") + d.directions()[i].to_string();
  return s + "}";
}

inline std::string opt_str(const std::optional<std::int64_t>& x) { return x ? std::to_string(*x) : ""; }

inline Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      const auto n = std::stoll(text, &used);
      if (used != text.size()) throw UsageError("bad rational '" + text + "'");
      return Rational(n);
    }
    const std::string a = text.substr(0, slash), b = text.substr(slash + 1);
    const auto n = std::stoll(a, &used);
    if (used != a.size()) throw UsageError("bad rational '" + text + "'");
    const auto d = std::stoll(b, &used);
    if (used != b.size() || d == 0) throw UsageError("bad rational '" + text + "'");
    return Rational(n, d);
  } catch (const std::logic_error&) {
    throw UsageError("bad rational '" + text + "'");
  }
}

// ---- verbs ----

inline int cmd_directions(const Output& o, const std::string& path) {
  const auto u = load_point_set(path);
  const auto d = directions_of(u);
  const Field& f = u.field();
  switch (o.format) {
    case Format::kJson:
      o.json(&f, {{"n", u.size()}, {"points", points_json(u)}, {"directions", directions_json(d)}, {"D_size", d.size()}});
      break;
    case Format::kCsv:
      o.header(&f);
      o.out << "direction\n";
      for (const auto& y : d.directions()) o.out << y.to_string() << '\n';
      break;
    case Format::kText:
      o.header(&f);
      o.out << "D = " << join_dirs(d) << '\n' << "|D| = " << d.size() << '\n';
      break;
  }
  return kOk;
}

inline int cmd_invariants(const Output& o, const std::string& path) {
  const auto u = load_point_set(path);
  const Field& f = u.field();
  const auto gi = geometric_invariants(u);
  std::optional<AlgebraicInvariants> ai;
  std::string t_note;
  if (gi.determined.empty()) t_note = "undefined: U determines no direction";
  else if (u.size() > f.q()) t_note = "undefined: |U| > q";
  else ai = t_of_set(divide_xq(u));

  struct Row {
    std::string y;
    std::uint32_t s;
    std::optional<std::int64_t> t, kappa, deg;
    std::string fy;
    Json fy_coeffs;
  };
  std::vector<Row> rows;
  for (const auto& y : gi.determined.directions()) {
    Row r{y.to_string(), gi.per_direction[y.index(f.q())], {}, {}, {}, "", nullptr};
    if (ai && !y.is_infinity())
      for (const auto& di : ai->per_direction)
        if (di.y == y) {
          r.t = di.t;
          r.kappa = di.kappa;
          r.deg = di.deg_x_h_y;
          if (di.f) {
            r.fy = di.f->to_string("X");
            r.fy_coeffs = Json::array();
            for (Elem e : di.f->coeffs()) r.fy_coeffs.push_back(e.v);
          }
        }
    rows.push_back(std::move(r));
  }

  switch (o.format) {
    case Format::kJson: {
      Json per = Json::array();
      for (const auto& r : rows) {
        Json j{{"y", r.y}, {"s", r.s}};
        if (r.t) j["t"] = *r.t;
        if (r.kappa) j["kappa"] = *r.kappa;
        if (r.deg) j["degXH_y"] = *r.deg;
        if (!r.fy_coeffs.is_null()) j["f_y"] = r.fy_coeffs;
        per.push_back(j);
      }
      Json res{{"n", u.size()}, {"D_size", gi.determined.size()}, {"directions", directions_json(gi.determined)}};
      res["s"] = gi.s ? Json(*gi.s) : Json(nullptr);
      res["t"] = ai ? Json(ai->t) : Json(nullptr);
      res["degXH"] = ai ? Json(ai->deg_x_h) : Json(nullptr);
      if (!t_note.empty()) res["t_note"] = t_note;
      if (ai && ai->infinity_determined) res["t_scope"] = "affine directions";
      res["per_direction"] = per;
      o.json(&f, res);
      break;
    }
    case Format::kCsv:
      o.header(&f);
      o.out << "y,s,t,kappa,degXH_y\n";
      for (const auto& r : rows) o.out << r.y << ',' << r.s << ',' << opt_str(r.t) << ',' << opt_str(r.kappa) << ',' << opt_str(r.deg) << '\n';
      break;
    case Format::kText:
      o.header(&f);
      o.out << "n = " << u.size() << '\n' << "|D| = " << gi.determined.size() << '\n';
      o.out << "s = " << (gi.s ? std::to_string(*gi.s) : "undefined") << '\n';
      o.out << "t = " << (ai ? std::to_string(ai->t) : t_note) << '\n';
      if (ai) o.out << "deg_X H = " << ai->deg_x_h << '\n';
      o.out << std::left << std::setw(6) << "y" << std::setw(6) << "s(y)" << std::setw(6) << "t(y)" << std::setw(10) << "kappa(y)" << std::setw(14)
            << "deg_X H(X,y)" << "f_y\n";
      for (const auto& r : rows)
        o.out << std::setw(6) << r.y << std::setw(6) << r.s << std::setw(6) << (r.t ? std::to_string(*r.t) : "-") << std::setw(10)
              << (r.kappa ? std::to_string(*r.kappa) : "-") << std::setw(14) << (r.deg ? std::to_string(*r.deg) : "-") << (r.fy.empty() ? "-" : r.fy)
              << '\n';
      break;
  }
  return kOk;
}

inline Json bipoly_json(const BiPoly& p) {
  Json arr = Json::array();
  for (const auto& c : p.coeffs()) {
    Json row = Json::array();
    for (Elem e : c.coeffs()) row.push_back(e.v);
    arr.push_back(row);
  }
  return arr;
}

inline int cmd_redei(const Output& o, const std::string& path) {
  const auto u = load_point_set(path);
  const Field& f = u.field();
  const auto sys = divide_xq(u);
  const auto failures = check_division(sys);
  if (o.format == Format::kCsv) throw UsageError("csv output is not available for 'redei'");
  if (o.format == Format::kJson) {
    o.json(&f, {{"n", sys.n},
                {"note", "coefficient arrays indexed [X-degree][Y-degree]"},
                {"R", bipoly_json(sys.r)},
                {"Q", bipoly_json(sys.quotient)},
                {"H", bipoly_json(sys.h)},
                {"degXH", sys.h.degree_x()},
                {"division_checks", failures}});
  } else {
    o.header(&f);
    o.out << "R = " << sys.r.to_string() << '\n';
    o.out << "Q = " << sys.quotient.to_string() << '\n';
    o.out << "H = " << sys.h.to_string() << '\n';
    o.out << "deg_X H = " << sys.h.degree_x() << '\n';
    o.out << "division checks: " << (failures.empty() ? "ok" : std::to_string(failures.size()) + " failed") << '\n';
    for (const auto& s : failures) o.out << "  " << s << '\n';
  }
  return failures.empty() ? kOk : kAlarm;
}

inline void print_verdict(std::ostream& out, const Verdict& v) {
  out << v.statement << ": ";
  if (!v.applicable) out << "not applicable";
  else out << "applicable, case " << (v.case_matched.empty() ? "-" : v.case_matched) << ", " << (v.conclusion_holds() ? "holds" : "FAILS");
  out << '\n';
  for (const auto& c : v.checks)
    out << "  [" << (c.holds ? "ok" : "FAIL") << "] " << c.label << ": " << c.lhs.to_string() << ' ' << to_string(c.rel) << ' ' << c.rhs.to_string() << '\n';
  for (const auto& n : v.notes) out << "  note: " << n << '\n';
}

inline int cmd_verify(const Output& o, const std::string& path, const std::vector<std::string>& statements) {
  const auto u = load_point_set(path);
  const Field& f = u.field();
  std::vector<Verdict> vs;
  for (const auto& s : statements) vs.push_back(evaluate(s, u));
  bool failed = false;
  for (const auto& v : vs) failed = failed || v.failed();
  switch (o.format) {
    case Format::kJson: {
      Json arr = Json::array();
      for (const auto& v : vs) arr.push_back(verdict_json(v));
      o.json(&f, {{"points", points_json(u)}, {"verdicts", arr}});
      break;
    }
    case Format::kCsv: {
      o.header(&f);
      const auto gi = geometric_invariants(u);
      o.out << kCsvHeader << '\n';
      for (const auto& v : vs) {
        auto val = [&](const char* k) { return opt_str(detail::value_of(v, k)); };
        const std::string c = vs.size() > 1 ? v.statement + ":" + v.case_matched : v.case_matched;
        o.out << 0 << ',' << u.size() << ',' << gi.determined.size() << ',' << (gi.s ? std::to_string(*gi.s) : "") << ',' << val("t") << ','
              << val("degXH") << ',' << c << ',' << (!v.applicable ? "n/a" : v.failed() ? "false" : "true") << '\n';
      }
      break;
    }
    case Format::kText:
      o.header(&f);
      for (const auto& v : vs) print_verdict(o.out, v);
      break;
  }
  return failed ? kFailed : kOk;
}

inline int cmd_realize(const Output& o, const std::string& path) {
  Vec translate;
  const auto spec = load_linear_spec(path, &translate);
  const Field& f = spec.field;
  auto pts = realize_direction_set(spec);
  for (auto& p : pts) p = vec::add(f, p, translate);
  std::sort(pts.begin(), pts.end());
  const auto img = project_subgeometry(spec);
  const auto dirs = directions_in_space(f, pts);
  const bool match = dirs == img.support();
  const auto expected = projective_point_count(spec.s, spec.d + 1);
  auto vjson = [](const Vec& v) {
    Json a = Json::array();
    for (Elem e : v) a.push_back(e.v);
    return a;
  };
  switch (o.format) {
    case Format::kJson: {
      Json jp = Json::array(), jd = Json::array();
      for (const auto& p : pts) jp.push_back(vjson(p));
      for (const auto& [pt, w] : img.weights) jd.push_back({{"point", vjson(pt)}, {"weight", w}});
      Json res{{"spec", linear_spec_json(spec, translate)}, {"points", jp}, {"projected", jd}, {"total_weight", img.total()},
               {"expected_weight", expected}, {"directions_match", match}};
      if (spec.n == 1) res["directions"] = directions_json(to_direction_set(f, dirs));
      o.json(&f, res);
      break;
    }
    case Format::kCsv:
      throw UsageError("csv output is not available for 'realize'");
    case Format::kText: {
      o.header(&f);
      o.out << "points of AG(" << spec.n + 1 << "," << f.q() << "): " << pts.size() << '\n';
      for (const auto& p : pts) {
        for (std::size_t i = 0; i < p.size(); ++i) o.out << (i ? " " : "") << p[i].v;
        o.out << '\n';
      }
      o.out << "projected points (weight):\n";
      for (const auto& [pt, w] : img.weights) {
        o.out << " ";
        for (Elem e : pt) o.out << ' ' << e.v;
        o.out << "  (" << w << ")\n";
      }
      if (spec.n == 1) o.out << "D = " << join_dirs(to_direction_set(f, dirs)) << '\n';
      o.out << "total weight = " << img.total() << " (expected " << expected << ")\n";
      o.out << "directions match projection: " << (match ? "yes" : "no") << '\n';
      break;
    }
  }
  return match && img.total() == expected ? kOk : kAlarm;
}

inline int emit_report(const Output& o, const SearchReport& rep, bool timing) {
  const Field f = make_field_of_order(rep.config.q);
  switch (o.format) {
    case Format::kJson:
      o.json(&f, report_json(rep, timing));
      break;
    case Format::kCsv:
      o.header(&f);
      write_csv_rows(o.out, rep);
      break;
    case Format::kText:
      o.header(&f);
      o.out << "sets examined: " << rep.sets_examined << '\n';
      if (rep.config.symmetry) o.out << "canonical representatives: " << rep.canonical_representatives << '\n';
      if (rep.config.maximal_only) o.out << "maximal sets: " << rep.maximal_sets << '\n';
      for (const auto& [id, t] : rep.tallies)
        o.out << id << ": pass " << t.pass << ", fail " << t.fail << ", inapplicable " << t.inapplicable << '\n';
      for (const auto& [n, codes] : rep.sharp_by_size) {
        o.out << "sharp set |U|=" << n << ":";
        for (auto c : codes) o.out << " (" << c / f.q() << "," << c % f.q() << ")";
        o.out << '\n';
      }
      o.out << "counterexamples: " << rep.counterexamples.size() << '\n';
      for (const auto& ce : rep.counterexamples) {
        o.out << "  set " << ce.set_id << " " << ce.statement;
        if (!ce.replay_path.empty()) o.out << " -> " << ce.replay_path;
        o.out << '\n';
      }
      for (const auto& a : rep.alarms) o.out << "ALARM: " << a << '\n';
      if (timing) o.out << "wall time: " << std::fixed << std::setprecision(3) << rep.wall_seconds << " s\n";
      break;
  }
  return rep.exit_code();
}

inline int cmd_complete(const Output& o, const std::string& path, const std::string& alpha_text, std::size_t cap, bool strict) {
  const auto u = load_point_set(path);
  const Field& f = u.field();
  const Rational alpha = parse_rational(alpha_text);
  if (!(Rational(1, 2) < alpha && alpha < Rational(1))) throw UsageError("--alpha must lie strictly between 1/2 and 1");
  CompletionQuery query{u, alpha, !strict, cap};
  const auto res = complete_to_q(query);
  switch (o.format) {
    case Format::kJson: {
      Json comps = Json::array();
      for (const auto& c : res.completions) comps.push_back(points_json(c));
      o.json(&f, {{"n", u.size()},
                  {"epsilon", res.epsilon},
                  {"directions", directions_json(directions_of(u))},
                  {"hypotheses_hold", res.hypotheses_hold},
                  {"hypothesis_notes", res.hypothesis_notes},
                  {"ran", res.ran},
                  {"completions", comps},
                  {"truncated", res.truncated},
                  {"alarm", res.alarm}});
      break;
    }
    case Format::kCsv:
      throw UsageError("csv output is not available for 'complete'");
    case Format::kText:
      o.header(&f);
      o.out << "epsilon = " << res.epsilon << ", D = " << join_dirs(directions_of(u)) << '\n';
      o.out << "hypotheses: " << (res.hypotheses_hold ? "hold" : "not met") << '\n';
      for (const auto& n : res.hypothesis_notes) o.out << "  " << n << '\n';
      if (!res.ran) {
        o.out << "not run (strict mode)\n";
        break;
      }
      o.out << "completions: " << res.completions.size() << (res.truncated ? " (truncated)" : "") << '\n';
      for (const auto& c : res.completions) {
        o.out << " ";
        for (const auto& pt : c.points()) o.out << " (" << pt.a.v << "," << pt.b.v << ")";
        o.out << '\n';
      }
      if (res.alarm) o.out << "ALARM: hypotheses hold but no completion exists\n";
      break;
  }
  return res.alarm ? kAlarm : kOk;
}

inline int cmd_examples(const Output& o) {
  const auto rep = reproduce_maximality_examples();
  switch (o.format) {
    case Format::kJson: {
      Json arr = Json::array();
      for (const auto& e : rep.examples) {
        Json j{{"name", e.name}, {"verdict", verdict_json(e.verdict)}};
        if (!e.set.empty()) {
          j["field"] = field_json(e.set.field());
          j["points"] = points_json(e.set);
        }
        arr.push_back(j);
      }
      o.json(nullptr, {{"examples", arr}, {"holds", rep.holds()}});
      break;
    }
    case Format::kCsv:
      throw UsageError("csv output is not available for 'examples'");
    case Format::kText:
      o.header(nullptr);
      for (const auto& e : rep.examples) {
        o.out << e.name << '\n';
        if (!e.set.empty()) {
          o.out << "  field GF(" << e.set.field().q() << ") modulus " << modulus_string(e.set.field()) << "\n  U =";
          for (const auto& pt : e.set.points()) o.out << " (" << pt.a.v << "," << pt.b.v << ")";
          o.out << '\n';
        }
        std::ostringstream v;
        print_verdict(v, e.verdict);
        std::istringstream lines(v.str());
        for (std::string line; std::getline(lines, line);) o.out << "  " << line << '\n';
      }
      break;
  }
  return rep.holds() ? kOk : kFailed;
}

// ---- argument parsing ----

struct SearchFlags {
  std::string config;
  std::optional<std::uint32_t> q, n_min, n_max;
  std::optional<std::string> mode, symmetry, replay_dir;
  std::optional<std::uint64_t> seed, budget;
  std::optional<unsigned> workers;
  std::vector<std::string> statements;

  void attach(CLI::App* app, bool with_statements) {
    app->add_option("--config", config, "search config (JSON)")->check(CLI::ExistingFile);
    app->add_option("--q", q, "field order");
    app->add_option("--n-min", n_min, "smallest set size");
    app->add_option("--n-max", n_max, "largest set size");
    app->add_option("--mode", mode, "exhaustive or random")->check(CLI::IsMember({"exhaustive", "random"}));
    app->add_option("--seed", seed, "random seed");
    app->add_option("--budget", budget, "number of random samples");
    app->add_option("--symmetry", symmetry, "AGL(2,q) isomorph rejection")->check(CLI::IsMember({"on", "off"}));
    app->add_option("--workers", workers, "worker threads");
    app->add_option("--replay-dir", replay_dir, "directory for counterexample files");
    if (with_statements) app->add_option("--statement", statements, "statement id (repeatable)");
  }

  SearchConfig resolve() const {
    SearchConfig c = config.empty() ? SearchConfig{} : load_config(config);
    if (q) c.q = *q;
    if (n_min) c.n_min = *n_min;
    if (n_max) c.n_max = *n_max;
    if (mode) c.mode = *mode == "random" ? SearchMode::kRandom : SearchMode::kExhaustive;
    if (seed) c.seed = *seed;
    if (budget) c.budget = *budget;
    if (symmetry) c.symmetry = *symmetry == "on";
    if (workers) c.workers = *workers;
    if (replay_dir) c.replay_dir = *replay_dir;
    if (!statements.empty()) c.statements = statements;
    if (c.q == 0) throw UsageError("--q (or a config file) is required");
    return c;
  }
};

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Direction sets of affine point sets and their Redei polynomials"};
  app.set_version_flag("--version", std::string(kToolName) + " " + kVersion);
  app.require_subcommand(1);
  std::string format = "text";
  bool timing = false;
  app.add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_flag("--timing", timing, "include wall time in search reports");

  std::string set_path, spec_path, alpha = "3/4", conjecture = "conj-1";
  std::vector<std::string> statements;
  std::size_t cap = 64;
  bool strict = false;
  SearchFlags sflags, hflags;

  auto* directions = app.add_subcommand("directions", "direction set of a point set");
  directions->add_option("--set", set_path, "point-set file")->required();
  auto* invariants = app.add_subcommand("invariants", "s, t, deg_X H and per-direction values");
  invariants->add_option("--set", set_path, "point-set file")->required();
  auto* redei = app.add_subcommand("redei", "R, Q and H of a point set");
  redei->add_option("--set", set_path, "point-set file")->required();
  auto* verify = app.add_subcommand("verify", "evaluate statements on a point set");
  verify->add_option("--set", set_path, "point-set file")->required();
  verify->add_option("--statement", statements, "statement id (repeatable); default all");
  auto* realize = app.add_subcommand("realize", "affine set realizing a projective linear set");
  realize->add_option("--spec", spec_path, "linear set spec (JSON)")->required();
  auto* search = app.add_subcommand("search", "sweep statements over enumerated sets");
  sflags.attach(search, true);
  auto* huntc = app.add_subcommand("hunt", "look for counterexamples to a conjecture among maximal sets");
  hflags.attach(huntc, false);
  huntc->add_option("--conjecture", conjecture, "conj-1 or conj-2")->check(CLI::IsMember({"conj-1", "conj-2"}));
  auto* complete = app.add_subcommand("complete", "extend a set to q points with the same directions");
  complete->add_option("--set", set_path, "point-set file")->required();
  complete->add_option("--alpha", alpha, "hypothesis parameter in (1/2, 1)");
  complete->add_option("--cap", cap, "maximum number of completions");
  complete->add_flag("--strict", strict, "skip the search when the hypotheses fail");
  auto* examples = app.add_subcommand("examples", "reproduce the maximality examples");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  const Format fmt = format == "json" ? Format::kJson : format == "csv" ? Format::kCsv : Format::kText;
  try {
    if (*directions) return cmd_directions({out, fmt, "directions", {{"set", set_path}, {"format", format}}}, set_path);
    if (*invariants) return cmd_invariants({out, fmt, "invariants", {{"set", set_path}, {"format", format}}}, set_path);
    if (*redei) return cmd_redei({out, fmt, "redei", {{"set", set_path}, {"format", format}}}, set_path);
    if (*verify) {
      if (statements.empty()) statements = statement_ids();
      for (const auto& s : statements)
        if (std::find(statement_ids().begin(), statement_ids().end(), s) == statement_ids().end()) throw UsageError("unknown statement '" + s + "'");
      return cmd_verify({out, fmt, "verify", {{"set", set_path}, {"statements", statements}, {"format", format}}}, set_path, statements);
    }
    if (*realize) return cmd_realize({out, fmt, "realize", {{"spec", spec_path}, {"format", format}}}, spec_path);
    if (*search) {
      auto cfg = sflags.resolve();
      if (cfg.statements.empty()) cfg.statements = {"thm-m"};
      auto j = config_json(cfg);
      j["format"] = format;
      return emit_report({out, fmt, "search", j}, sweep(cfg), timing);
    }
    if (*huntc) {
      auto cfg = hflags.resolve();
      cfg.statements = {conjecture};
      cfg.maximal_only = true;
      if (cfg.n_min < 2) cfg.n_min = 2;
      auto j = config_json(cfg);
      j["conjecture"] = conjecture;
      j["format"] = format;
      return emit_report({out, fmt, "hunt", j}, hunt(cfg, conjecture), timing);
    }
    if (*complete) {
      return cmd_complete({out, fmt, "complete", {{"set", set_path}, {"alpha", alpha}, {"cap", cap}, {"strict", strict}, {"format", format}}}, set_path, alpha,
                          cap, strict);
    }
    if (*examples) return cmd_examples({out, fmt, "examples", {{"format", format}}});
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kAlarm;
  }
  return kUsage;
}

}  // namespace redei::cli
