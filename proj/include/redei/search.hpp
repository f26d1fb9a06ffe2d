#pragma once

// Enumeration of point sets of AG(2,q) (exhaustive or seeded random, with
// optional AGL(2,q) isomorph rejection), verdict sweeps over the stream,
// completion of near-q sets and conjecture hunts.
//
// Results are merged in stream order, so reports do not depend on the number
// of worker threads.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "redei/analysis.hpp"
#include "redei/field.hpp"
#include "redei/geometry.hpp"
#include "redei/maximal.hpp"
#include "redei/pointset_io.hpp"
#include "redei/random.hpp"
#include "redei/rational.hpp"

namespace redei {

enum class SearchMode { kExhaustive, kRandom };

inline const char* to_string(SearchMode m) { return m == SearchMode::kExhaustive ? "exhaustive" : "random"; }

struct SearchConfig {
  std::uint32_t q = 0;
  std::uint32_t n_min = 1;
  std::uint32_t n_max = 0;  // 0 means q
  SearchMode mode = SearchMode::kExhaustive;
  std::optional<std::uint64_t> seed;
  std::uint64_t budget = 0;  // random mode sample count
  bool symmetry = false;
  unsigned workers = 1;
  std::vector<std::string> statements;
  std::string replay_dir;     // where counterexample files go; empty disables them
  bool maximal_only = false;  // skip sets that are not maximal
  bool keep_rows = true;

  std::uint32_t effective_n_max() const { return n_max == 0 ? q : n_max; }
};

/// Largest q for which symmetry reduction is offered.
inline constexpr std::uint32_t kSymmetryMaxOrder = 9;
inline constexpr std::uint64_t kExhaustiveLimit = 1'000'000'000ULL;

inline std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > cap) return cap + 1;
  }
  return static_cast<std::uint64_t>(r);
}

inline void validate(const SearchConfig& cfg) {
  const Field f = make_field_of_order(cfg.q);
  const std::uint64_t plane = std::uint64_t{f.q()} * f.q();
  const auto hi = cfg.effective_n_max();
  if (hi > plane) throw std::invalid_argument("n_max exceeds q^2");
  if (cfg.n_min > hi) throw std::invalid_argument("empty size range");
  if (cfg.workers == 0) throw std::invalid_argument("workers must be positive");
  if (cfg.symmetry && cfg.q > kSymmetryMaxOrder)
    throw std::invalid_argument("symmetry reduction is limited to q <= " + std::to_string(kSymmetryMaxOrder));
  for (const auto& s : cfg.statements) {
    const auto& ids = statement_ids();
    if (std::find(ids.begin(), ids.end(), s) == ids.end()) throw std::invalid_argument("unknown statement '" + s + "'");
  }
  if (cfg.mode == SearchMode::kRandom) {
    if (!cfg.seed) throw std::invalid_argument("random mode requires an explicit seed");
  } else {
    std::uint64_t total = 0;
    for (std::uint64_t k = cfg.n_min; k <= hi; ++k) {
      total += binomial_capped(plane, k, kExhaustiveLimit);
      if (total > kExhaustiveLimit) throw std::invalid_argument("exhaustive size range is infeasible (more than 10^9 sets)");
    }
  }
}

/// AGL(2,q) acting on point codecs: every linear part as a permutation, and
/// the translation table. The canonical form of U is the lexicographically
/// least sorted codec vector among its images.
class AffineGroup {
 public:
  explicit AffineGroup(const Field& f) : f_(f), q_(f.q()), plane_(f.q() * f.q()) {
    if (q_ > kSymmetryMaxOrder) throw std::invalid_argument("group tables are limited to small q");
    for (std::uint32_t m00 = 0; m00 < q_; ++m00)
      for (std::uint32_t m01 = 0; m01 < q_; ++m01)
        for (std::uint32_t m10 = 0; m10 < q_; ++m10)
          for (std::uint32_t m11 = 0; m11 < q_; ++m11) {
            Collineation c{Elem{m00}, Elem{m01}, Elem{m10}, Elem{m11}, Elem{0}, Elem{0}};
            if (c.determinant(f_) == Field::zero()) continue;
            std::vector<std::uint32_t> perm(plane_);
            for (std::uint32_t code = 0; code < plane_; ++code) {
              const Point img = c.apply(f_, Point{Elem{code / q_}, Elem{code % q_}});
              perm[code] = img.a.v * q_ + img.b.v;
            }
            linear_.push_back(std::move(perm));
          }
    minus_.assign(std::size_t{plane_} * plane_, 0);
    for (std::uint32_t p = 0; p < plane_; ++p)
      for (std::uint32_t x = 0; x < plane_; ++x) {
        const Elem a = f_.sub(Elem{x / q_}, Elem{p / q_});
        const Elem b = f_.sub(Elem{x % q_}, Elem{p % q_});
        minus_[std::size_t{p} * plane_ + x] = a.v * q_ + b.v;
      }
  }

  std::size_t order() const { return linear_.size() * plane_; }

  std::vector<std::uint32_t> canonical_form(const std::vector<std::uint32_t>& codes) const {
    if (codes.empty()) return {};
    std::vector<std::uint32_t> best, img(codes.size()), cur(codes.size());
    for (const auto& perm : linear_) {
      for (std::size_t i = 0; i < codes.size(); ++i) img[i] = perm[codes[i]];
      for (auto p : img) {
        const auto* row = &minus_[std::size_t{p} * plane_];
        for (std::size_t i = 0; i < img.size(); ++i) cur[i] = row[img[i]];
        std::sort(cur.begin(), cur.end());
        if (best.empty() || cur < best) best = cur;
      }
    }
    return best;
  }

  /// Whether the sorted codec vector equals its canonical form; stops at the
  /// first smaller image.
  bool is_canonical(const std::vector<std::uint32_t>& codes) const {
    if (codes.empty()) return true;
    if (codes.front() != 0) return false;
    std::vector<std::uint32_t> img(codes.size()), cur(codes.size());
    for (const auto& perm : linear_) {
      for (std::size_t i = 0; i < codes.size(); ++i) img[i] = perm[codes[i]];
      for (auto p : img) {
        const auto* row = &minus_[std::size_t{p} * plane_];
        for (std::size_t i = 0; i < img.size(); ++i) cur[i] = row[img[i]];
        std::sort(cur.begin(), cur.end());
        if (cur < codes) return false;
      }
    }
    return true;
  }

 private:
  Field f_;
  std::uint32_t q_, plane_;
  std::vector<std::vector<std::uint32_t>> linear_;
  std::vector<std::uint32_t> minus_;
};

namespace detail {

/// Advances a sorted k-combination of [0, n), keeping the first entries fixed; false after the last one.
inline bool next_combination(std::vector<std::uint32_t>& idx, std::uint32_t n, std::size_t first = 0) {
  const std::size_t k = idx.size();
  std::size_t i = k;
  while (i > first) {
    --i;
    if (idx[i] < n - (k - i)) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

/// Produces candidate codec vectors in stream order. With symmetry on in
/// exhaustive mode only sets containing the origin are produced (every orbit
/// has such a member); the canonical test happens in the workers.
class CandidateSource {
 public:
  explicit CandidateSource(const SearchConfig& cfg) : cfg_(cfg), plane_(cfg.q * cfg.q), k_(cfg.n_min) {
    if (cfg.mode == SearchMode::kRandom) rng_ = std::make_unique<Rng>(*cfg.seed);
    start_size();
  }

  bool next(std::vector<std::uint32_t>& out) {
    if (cfg_.mode == SearchMode::kRandom) {
      if (drawn_ >= cfg_.budget) return false;
      ++drawn_;
      const auto k = static_cast<std::uint32_t>(rng_->between(cfg_.n_min, cfg_.effective_n_max()));
      out = rng_->sample(plane_, k);
      std::sort(out.begin(), out.end());
      return true;
    }
    while (k_ <= cfg_.effective_n_max()) {
      if (fresh_) {
        fresh_ = false;
        if (valid_) {
          out = cur_;
          return true;
        }
      } else if (valid_ && next_combination(cur_, plane_, pinned())) {
        out = cur_;
        return true;
      }
      ++k_;
      start_size();
    }
    return false;
  }

 private:
  std::size_t pinned() const { return cfg_.symmetry && k_ > 0 ? 1 : 0; }

  void start_size() {
    fresh_ = true;
    cur_.resize(k_);
    for (std::uint32_t i = 0; i < k_; ++i) cur_[i] = i;
    valid_ = k_ <= plane_;
  }

  const SearchConfig& cfg_;
  std::uint32_t plane_;
  std::uint32_t k_;
  std::vector<std::uint32_t> cur_;
  bool fresh_ = true, valid_ = true;
  std::unique_ptr<Rng> rng_;
  std::uint64_t drawn_ = 0;
};

/// Runs work(i, candidate) on batches of candidates across threads and hands
/// the results to sink in stream order. Work returns nullopt to drop a candidate.
template <typename R>
void run_stream(const SearchConfig& cfg, const std::function<std::optional<R>(const std::vector<std::uint32_t>&)>& work,
                const std::function<void(R&&)>& sink) {
  CandidateSource src(cfg);
  const std::size_t batch = 2048;
  std::vector<std::vector<std::uint32_t>> cands;
  std::vector<std::optional<R>> results;
  std::vector<std::string> errors;
  bool more = true;
  while (more) {
    cands.clear();
    std::vector<std::uint32_t> c;
    while (cands.size() < batch && (more = src.next(c))) cands.push_back(c);
    if (cands.empty()) break;
    results.assign(cands.size(), std::nullopt);
    errors.assign(cands.size(), {});
    auto job = [&](unsigned w) {
      for (std::size_t i = w; i < cands.size(); i += cfg.workers) {
        try {
          results[i] = work(cands[i]);
        } catch (const std::exception& e) {
          errors[i] = e.what();
        }
      }
    };
    if (cfg.workers == 1) {
      job(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < cfg.workers; ++w) pool.emplace_back(job, w);
      for (auto& t : pool) t.join();
    }
    for (std::size_t i = 0; i < cands.size(); ++i) {
      if (!errors[i].empty()) throw std::runtime_error(errors[i]);
      if (results[i]) sink(std::move(*results[i]));
    }
  }
}

}  // namespace detail

/// Streams the sets selected by cfg to visit; visit returns false to stop early.
inline void enumerate_sets(const SearchConfig& cfg, const std::function<bool(const AffinePointSet&)>& visit) {
  validate(cfg);
  const Field f = make_field_of_order(cfg.q);
  std::optional<AffineGroup> group;
  if (cfg.symmetry) group.emplace(f);
  detail::CandidateSource src(cfg);
  std::vector<std::uint32_t> c;
  while (src.next(c)) {
    if (group) {
      if (cfg.mode == SearchMode::kExhaustive) {
        if (!group->is_canonical(c)) continue;
      } else {
        c = group->canonical_form(c);
      }
    }
    if (!visit(AffinePointSet::from_codes(f, c))) return;
  }
}

inline std::vector<AffinePointSet> collect_sets(const SearchConfig& cfg) {
  std::vector<AffinePointSet> out;
  enumerate_sets(cfg, [&](const AffinePointSet& u) {
    out.push_back(u);
    return true;
  });
  return out;
}

struct Tally {
  std::uint64_t pass = 0, fail = 0, inapplicable = 0;
};

struct ReportRow {
  std::uint64_t set_id = 0;
  std::string statement;
  std::uint32_t n = 0;
  std::uint32_t d_size = 0;
  std::optional<std::int64_t> s, t, deg_x_h;
  std::string case_matched;
  std::string holds;  // "true", "false" or "n/a"
};

struct Counterexample {
  std::uint64_t set_id = 0;
  std::string statement;
  std::vector<std::uint32_t> codes;
  std::string replay_path;
  Verdict verdict;
};

struct SearchReport {
  SearchConfig config;
  std::string modulus;
  std::uint64_t sets_examined = 0;          // sets that reached the verdicts
  std::uint64_t canonical_representatives = 0;  // distinct orbit representatives (symmetry on)
  std::uint64_t maximal_sets = 0;           // when maximal_only
  std::vector<std::pair<std::string, Tally>> tallies;  // config statement order
  std::vector<Counterexample> counterexamples;
  std::map<std::uint32_t, std::vector<std::uint32_t>> sharp_by_size;  // first sharp set per |U|
  std::vector<ReportRow> rows;
  std::vector<std::string> alarms;
  double wall_seconds = 0;

  Tally& tally(const std::string& id) {
    for (auto& [k, t] : tallies)
      if (k == id) return t;
    tallies.emplace_back(id, Tally{});
    return tallies.back().second;
  }
  std::uint64_t failures() const {
    std::uint64_t n = 0;
    for (const auto& [k, t] : tallies) n += t.fail;
    return n;
  }
  /// 0 clean, 2 counterexample, 3 soundness alarm.
  int exit_code() const { return !alarms.empty() ? 3 : !counterexamples.empty() ? 2 : 0; }
};

namespace detail {

struct SetOutcome {
  std::vector<std::uint32_t> codes;
  bool maximal = false;
  std::uint32_t d_size = 0;
  std::optional<std::int64_t> s;
  std::vector<Verdict> verdicts;
};

inline std::optional<std::int64_t> value_of(const Verdict& v, const std::string& key) {
  auto it = v.values.find(key);
  if (it == v.values.end()) return std::nullopt;
  return it->second;
}

}  // namespace detail

/// Applies the configured verdicts to every streamed set.
inline SearchReport sweep(const SearchConfig& cfg) {
  validate(cfg);
  const auto start = std::chrono::steady_clock::now();
  const Field f = make_field_of_order(cfg.q);
  std::optional<AffineGroup> group;
  if (cfg.symmetry) group.emplace(f);
  SearchReport rep;
  rep.config = cfg;
  rep.modulus = modulus_string(f);
  for (const auto& s : cfg.statements) rep.tally(s);
  std::set<std::vector<std::uint32_t>> reps;
  if (!cfg.replay_dir.empty()) std::filesystem::create_directories(cfg.replay_dir);

  std::function<std::optional<detail::SetOutcome>(const std::vector<std::uint32_t>&)> work =
      [&](const std::vector<std::uint32_t>& cand) -> std::optional<detail::SetOutcome> {
    detail::SetOutcome out;
    out.codes = cand;
    if (group) {
      if (cfg.mode == SearchMode::kExhaustive) {
        if (!group->is_canonical(cand)) return std::nullopt;
      } else {
        out.codes = group->canonical_form(cand);
      }
    }
    const auto u = AffinePointSet::from_codes(f, out.codes);
    if (cfg.maximal_only) {
      if (u.size() < 2 || !is_maximal(u)) return out;
      out.maximal = true;
    }
    const auto gi = geometric_invariants(u);
    out.d_size = static_cast<std::uint32_t>(gi.determined.size());
    if (gi.s) out.s = *gi.s;
    for (const auto& id : cfg.statements) out.verdicts.push_back(evaluate(id, u));
    return out;
  };

  std::uint64_t next_id = 0;
  std::function<void(detail::SetOutcome&&)> sink = [&](detail::SetOutcome&& o) {
    const std::uint64_t id = next_id++;
    if (cfg.symmetry) reps.insert(o.codes);
    if (cfg.maximal_only && !o.maximal) return;
    if (cfg.maximal_only) ++rep.maximal_sets;
    ++rep.sets_examined;
    const auto n = static_cast<std::uint32_t>(o.codes.size());
    for (auto& v : o.verdicts) {
      auto& t = rep.tally(v.statement);
      const bool failed = v.failed();
      if (!v.applicable) ++t.inapplicable;
      else if (failed) ++t.fail;
      else ++t.pass;
      if (v.applicable && v.statement == "thm-sztaab" &&
          std::find(v.notes.begin(), v.notes.end(), "sharp") != v.notes.end() && !rep.sharp_by_size.count(n))
        rep.sharp_by_size[n] = o.codes;
      if (cfg.keep_rows) {
        ReportRow row;
        row.set_id = id;
        row.statement = v.statement;
        row.n = n;
        row.d_size = o.d_size;
        row.s = o.s;
        row.t = detail::value_of(v, "t");
        row.deg_x_h = detail::value_of(v, "degXH");
        row.case_matched = v.case_matched;
        row.holds = !v.applicable ? "n/a" : failed ? "false" : "true";
        rep.rows.push_back(std::move(row));
      }
      if (failed) {
        Counterexample ce{id, v.statement, o.codes, {}, v};
        if (!cfg.replay_dir.empty()) {
          ce.replay_path = (std::filesystem::path(cfg.replay_dir) / (v.statement + "-" + std::to_string(id) + ".pts")).string();
          save_point_set(ce.replay_path, AffinePointSet::from_codes(f, o.codes), "counterexample to " + v.statement);
        }
        rep.counterexamples.push_back(std::move(ce));
      }
    }
  };

  try {
    detail::run_stream<detail::SetOutcome>(cfg, work, sink);
  } catch (const std::exception& e) {
    rep.alarms.push_back(std::string("internal error during sweep: ") + e.what());
  }
  rep.canonical_representatives = cfg.symmetry ? reps.size() : 0;
  rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

/// Streams sets, keeps the maximal ones and applies one conjecture report.
inline SearchReport hunt(SearchConfig cfg, const std::string& conjecture) {
  if (conjecture != "conj-1" && conjecture != "conj-2") throw std::invalid_argument("unknown conjecture '" + conjecture + "'");
  cfg.statements = {conjecture};
  cfg.maximal_only = true;
  if (cfg.n_min < 2) cfg.n_min = 2;
  return sweep(cfg);
}

struct CompletionQuery {
  AffinePointSet u;
  Rational alpha{3, 4};
  bool attempt = true;   // run even when the hypotheses fail
  std::size_t cap = 64;  // stop after this many completions
};

struct CompletionResult {
  std::uint32_t q = 0;
  std::uint32_t epsilon = 0;
  bool hypotheses_hold = false;
  std::vector<std::string> hypothesis_notes;
  std::vector<AffinePointSet> completions;
  bool truncated = false;
  bool alarm = false;  // hypotheses hold and nothing was found
  bool ran = false;
};

/// ε < α√q and |D| < (q+1)(1-α) with 1/2 < α < 1, in exact arithmetic.
inline bool completion_hypotheses(const AffinePointSet& u, Rational alpha, std::vector<std::string>* notes = nullptr) {
  const std::int64_t q = u.field().q();
  const std::int64_t eps = q - static_cast<std::int64_t>(u.size());
  const std::int64_t nd = static_cast<std::int64_t>(directions_of(u).size());
  bool ok = true;
  auto note = [&](const std::string& s) {
    ok = false;
    if (notes) notes->push_back(s);
  };
  if (!(Rational(1, 2) < alpha && alpha < Rational(1))) note("alpha must lie in (1/2, 1)");
  // eps < alpha sqrt(q)  <=>  eps^2 < alpha^2 q  (eps >= 0)
  if (!(Rational(eps * eps) < alpha * alpha * Rational(q))) note("epsilon >= alpha sqrt(q)");
  if (!(Rational(nd) < Rational(q + 1) * (Rational(1) - alpha))) note("|D| >= (q+1)(1-alpha)");
  return ok;
}

/// All sets U' ⊇ U with |U'| = q and the same direction set (up to the cap),
/// by adding points in increasing codec order whose directions to the current
/// set lie in D.
inline CompletionResult complete_to_q(const CompletionQuery& query) {
  const AffinePointSet& u = query.u;
  const Field& f = u.field();
  if (u.size() > f.q()) throw std::invalid_argument("complete_to_q needs |U| <= q");
  CompletionResult res;
  res.q = f.q();
  res.epsilon = f.q() - static_cast<std::uint32_t>(u.size());
  res.hypotheses_hold = completion_hypotheses(u, query.alpha, &res.hypothesis_notes);
  if (!res.hypotheses_hold && !query.attempt) return res;
  res.ran = true;
  const auto mask = direction_mask(u);
  std::vector<Point> current = u.points();
  std::vector<Point> pool;
  for (const auto& cand : all_points(f)) {
    if (u.contains(cand)) continue;
    bool inside = true;
    for (const auto& pt : current)
      if (!mask[direction_of(f, cand, pt).index(f.q())]) {
        inside = false;
        break;
      }
    if (inside) pool.push_back(cand);
  }
  std::function<void(std::size_t, std::vector<Point>&)> extend = [&](std::size_t from, std::vector<Point>& cands) {
    if (res.completions.size() >= query.cap) {
      res.truncated = true;
      return;
    }
    if (current.size() == f.q()) {
      res.completions.push_back(AffinePointSet(f, current));
      return;
    }
    if (cands.size() - from < f.q() - current.size()) return;
    for (std::size_t i = from; i < cands.size(); ++i) {
      const Point p = cands[i];
      std::vector<Point> next;
      for (std::size_t j = i + 1; j < cands.size(); ++j)
        if (mask[direction_of(f, p, cands[j]).index(f.q())]) next.push_back(cands[j]);
      current.push_back(p);
      extend(0, next);
      current.pop_back();
      if (res.truncated) return;
    }
  };
  extend(0, pool);
  res.alarm = res.hypotheses_hold && res.completions.empty();
  return res;
}

}  // namespace redei
