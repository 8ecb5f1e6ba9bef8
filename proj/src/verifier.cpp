#include "cdg/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <functional>
#include <mutex>
#include <set>
#include <thread>

#include "cdg/errors.hpp"
#include "cdg/generators.hpp"
#include "cdg/gvd.hpp"
#include "cdg/report_json.hpp"

namespace cdg {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::vector<TermOrder> parse_orders(const std::vector<std::string>& specs) {
  std::vector<TermOrder> out;
  out.reserve(specs.size());
  for (const std::string& s : specs) out.push_back(TermOrder::parse(s));
  return out;
}

// Runs fn(k) for k in [0, count) on `jobs` threads. Exceptions escape from
// the lowest failing index.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& fn) {
  jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (jobs == 1) {
    for (std::size_t k = 0; k < count; ++k) fn(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::exception_ptr error;
  std::size_t error_at = count;
  {
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < jobs; ++t) {
      workers.emplace_back([&] {
        for (std::size_t k = next.fetch_add(1); k < count; k = next.fetch_add(1)) {
          try {
            fn(k);
          } catch (...) {
            std::lock_guard lock(mu);
            if (k < error_at) {
              error_at = k;
              error = std::current_exception();
            }
          }
        }
      });
    }
  }
  if (error) std::rethrow_exception(error);
}

Permutation direct_sum(int before, const Permutation& p, int after) {
  std::vector<int> images;
  for (int k = 1; k <= before; ++k) images.push_back(k);
  for (int v : p.images()) images.push_back(v + before);
  for (int k = 1; k <= after; ++k) images.push_back(before + p.size() + k);
  return Permutation(std::move(images));
}

bool contains_any(const Permutation& w, const std::vector<Permutation>& patterns) {
  return std::any_of(patterns.begin(), patterns.end(), [&](const Permutation& p) {
    return p.size() <= w.size() && contains_pattern(w, p).has_value();
  });
}

std::vector<Permutation> parse_all(std::initializer_list<const char*> list) {
  std::vector<Permutation> out;
  for (const char* s : list) out.push_back(Permutation::parse(s));
  return out;
}

std::string cells_text(const std::vector<Cell>& cs) {
  std::string out;
  for (const Cell& c : cs) out += c.to_string();
  return out;
}

class Suite {
 public:
  explicit Suite(std::string name) { result_.name = std::move(name); }

  void check(bool ok, const std::function<std::string()>& witness) {
    std::lock_guard lock(mu_);
    ++result_.checked;
    if (ok) return;
    ++result_.violations;
    if (result_.witnesses.size() < kMaxWitnesses) result_.witnesses.push_back(witness());
  }

  void note(std::string text) {
    std::lock_guard lock(mu_);
    result_.notes.push_back(std::move(text));
  }

  SuiteResult take() {
    std::sort(result_.witnesses.begin(), result_.witnesses.end());
    std::sort(result_.notes.begin(), result_.notes.end());
    return std::move(result_);
  }

 private:
  static constexpr std::size_t kMaxWitnesses = 10;
  std::mutex mu_;
  SuiteResult result_;
};

}  // namespace

bool ClassificationRecord::cdg() const {
  return !verdicts.empty() && std::all_of(verdicts.begin(), verdicts.end(), [](const OrderVerdict& v) {
    return v.is_groebner.value_or(false);
  });
}

ClassificationRecord classify(const Permutation& w, const std::vector<TermOrder>& orders, std::size_t budget) {
  const auto start = Clock::now();
  ClassificationRecord rec;
  rec.w = w;
  const PatternScan scan = avoids_all_eight(w);
  rec.avoids_all = scan.avoids_all;
  rec.patterns_contained = scan.contained;
  for (auto kind : {ObstructionKind::Type1, ObstructionKind::Type2, ObstructionKind::Type3}) {
    rec.obstructions[static_cast<std::size_t>(kind) - 1] = obstruction(w, kind);
  }
  for (const TermOrder& order : orders) {
    OrderVerdict v;
    v.order = order.spec();
    const auto t0 = Clock::now();
    try {
      GroebnerOptions opts;
      opts.budget = budget;
      const GroebnerReport rep = is_groebner(cdg_generators(w, order), order, opts);
      v.is_groebner = rep.is_groebner;
      v.pairs_checked = rep.pairs_checked;
      v.pairs_skipped = rep.pairs_skipped;
      if (rep.failing_pair) {
        v.failing_pair = rep.failing_pair->first.to_string() + " | " + rep.failing_pair->second.to_string();
        v.remainder = rep.failing_pair->remainder.to_string(order);
      }
    } catch (const BudgetExceeded& e) {
      v.error = e.what();
      rec.has_error = true;
    }
    v.elapsed_ms = ms_since(t0);
    if (v.is_groebner && *v.is_groebner != rec.avoids_all) rec.agreement = false;
    rec.verdicts.push_back(std::move(v));
  }
  rec.elapsed_ms = ms_since(start);
  return rec;
}

std::vector<Permutation> default_s7_list() {
  std::set<Permutation> out;
  for (const Permutation& p : forbidden_patterns()) {
    const int pad = 7 - p.size();
    for (int before = 0; before <= pad; ++before) out.insert(direct_sum(before, p, pad - before));
  }
  return {out.begin(), out.end()};
}

std::vector<Permutation> sweep_permutations(const SweepConfig& cfg) {
  if (cfg.n < 1) throw Error("sweep needs n >= 1");
  if (cfg.orders.empty()) throw Error("sweep needs at least one order");
  std::vector<Permutation> base;
  if (!cfg.permutations.empty()) {
    for (const Permutation& w : cfg.permutations) {
      if (w.size() != cfg.n) throw Error("permutation " + w.to_string() + " is not in S_" + std::to_string(cfg.n));
    }
    base = cfg.permutations;
  } else if (cfg.n <= 5 || cfg.allow_full) {
    if (cfg.n > kMaxGrid) throw GridTooLarge("sweeps are limited to n <= " + std::to_string(kMaxGrid));
    base = all_permutations(cfg.n);
  } else if (cfg.n == 7) {
    base = default_s7_list();
  } else {
    throw Error("a full sweep of S_" + std::to_string(cfg.n) + " must be requested explicitly");
  }
  std::vector<Permutation> out;
  for (const Permutation& w : base) {
    const bool avoids = avoids_all_eight(w).avoids_all;
    if (cfg.filter == SweepFilter::ContainsPattern && avoids) continue;
    if (cfg.filter == SweepFilter::AvoidsAll && !avoids) continue;
    out.push_back(w);
  }
  return out;
}

SweepSummary sweep(const SweepConfig& cfg, std::ostream* out) {
  const auto start = Clock::now();
  const std::vector<TermOrder> orders = parse_orders(cfg.orders);
  const std::vector<Permutation> perms = sweep_permutations(cfg);

  if (out != nullptr) {
    Json header;
    header["schema"] = kSweepSchema;
    header["n"] = cfg.n;
    header["orders"] = cfg.orders;
    header["filter"] = cfg.filter == SweepFilter::All ? "all"
                       : cfg.filter == SweepFilter::ContainsPattern ? "contains-pattern"
                                                                    : "avoids-all";
    header["budget"] = cfg.budget;
    header["count"] = perms.size();
    *out << header.dump() << '\n' << std::flush;
  }

  // Workers fill slots; this thread writes them back in order.
  std::vector<std::optional<ClassificationRecord>> slots(perms.size());
  std::mutex mu;
  std::condition_variable ready;
  std::atomic<std::size_t> next{0};
  const unsigned jobs = std::max(1U, cfg.jobs);

  SweepSummary summary;
  summary.total = perms.size();
  auto consume = [&](const ClassificationRecord& rec) {
    if (out != nullptr) *out << to_json(rec, cfg.timing).dump() << '\n' << std::flush;
    if (rec.has_error) ++summary.errors;
    if (rec.cdg()) {
      ++summary.cdg;
    } else if (!rec.has_error) {
      ++summary.non_cdg;
      summary.non_cdg_list.push_back(rec.w.to_string());
    }
    if (!rec.agreement) {
      ++summary.disagreements;
      summary.disagreement_list.push_back(rec.w.to_string());
    }
  };

  {
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < jobs && t < perms.size(); ++t) {
      workers.emplace_back([&] {
        for (std::size_t k = next.fetch_add(1); k < perms.size(); k = next.fetch_add(1)) {
          ClassificationRecord rec = classify(perms[k], orders, cfg.budget);
          {
            std::lock_guard lock(mu);
            slots[k] = std::move(rec);
          }
          ready.notify_all();
        }
      });
    }
    for (std::size_t k = 0; k < perms.size(); ++k) {
      std::unique_lock lock(mu);
      ready.wait(lock, [&] { return slots[k].has_value(); });
      ClassificationRecord rec = std::move(*slots[k]);
      slots[k].reset();
      lock.unlock();
      consume(rec);
    }
  }

  summary.elapsed_ms = ms_since(start);
  if (out != nullptr) {
    Json tail;
    tail["summary"] = to_json(summary, cfg.timing);
    *out << tail.dump() << '\n' << std::flush;
  }
  return summary;
}

std::vector<SuiteResult> verify_lemmas(int n, const LemmaOptions& options) {
  const std::vector<Permutation> type1_list = parse_all({"21543", "215634", "214635", "215364", "13254"});
  const std::vector<Permutation> type2_list = parse_all({"21543", "214635", "241635", "215364", "315264"});
  const std::vector<Permutation> all_eight(forbidden_patterns().begin(), forbidden_patterns().end());

  Suite t1("obstruction-type1");
  Suite t2("obstruction-type2");
  Suite t3("obstruction-type3");
  Suite avoid("avoidance-excludes-obstructions");
  Suite deletion("deletion-ideal");
  Suite new_ess("new-essential-cells");
  Suite preserve("deletion-preserves-avoidance");
  Suite link("link-hypotheses");
  Suite qsuite("q-ideal");
  Suite heights("height-equals-length");

  const std::vector<TermOrder> bases = parse_orders(options.base_orders);

  for (int m = 1; m <= n; ++m) {
    const std::vector<Permutation> perms = all_permutations(m);
    parallel_for(perms.size(), options.jobs, [&](std::size_t k) {
      const Permutation& w = perms[k];
      const bool avoids = avoids_all_eight(w).avoids_all;
      const auto o1 = obstruction(w, ObstructionKind::Type1);
      const auto o2 = obstruction(w, ObstructionKind::Type2);
      const auto o3 = obstruction(w, ObstructionKind::Type3);
      auto obs_witness = [&](const std::optional<ObstructionWitness>& o) {
        return [&w, &o] { return w.to_string() + " " + cells_text(o->cells); };
      };
      if (o1) t1.check(contains_any(w, type1_list), obs_witness(o1));
      if (o2) t2.check(contains_any(w, type2_list), obs_witness(o2));
      if (o3) t3.check(contains_any(w, all_eight), obs_witness(o3));
      if (avoids) avoid.check(!o1 && !o2 && !o3, [&] { return w.to_string(); });
    });

    if (m > options.gvd_max_n) continue;
    parallel_for(perms.size(), options.jobs, [&](std::size_t k) {
      const Permutation& w = perms[k];
      const Diagram d = rothe_diagram(w);
      if (d.empty()) return;
      const bool avoids = avoids_all_eight(w).avoids_all;
      const Diagram ess = essential_set(w);

      bool cdg = true;
      for (const TermOrder& base : bases) {
        GroebnerOptions opts;
        opts.budget = options.budget;
        cdg = cdg && is_groebner(cdg_generators(w, base), base, opts).is_groebner;
      }

      std::vector<std::string> q_ok;
      for (const Cell& corner : lower_outside_corners(w)) {
        const std::string tag = w.to_string() + " " + corner.to_string();
        const Permutation wp = delete_corner_permutation(w, corner);
        const Diagram dp = rothe_diagram(wp);
        std::vector<Cell> expected;
        for (const Cell& c : d) {
          if (c != corner) expected.push_back(c);
        }
        const Split s = split_on_corner(w, corner);
        const bool same_ideal = ideals_equal(s.n_generators(), fulton_generators(wp), TermOrder::row_lex(),
                                             options.budget);
        deletion.check(same_ideal && dp.cells() == expected && coxeter_length(wp) < coxeter_length(w),
                       [&] { return tag + " -> " + wp.to_string(); });

        const Diagram ess_p = essential_set(wp);
        bool within = true;
        for (const Cell& c : ess_p) {
          if (ess.contains(c)) continue;
          within = within && (c == Cell{corner.row - 1, corner.col} || c == Cell{corner.row, corner.col - 1});
        }
        new_ess.check(within, [&] { return tag + " -> " + wp.to_string() + " Ess " + ess_p.to_string(); });

        if (avoids) {
          const bool clean = avoids_all_eight(wp).avoids_all && !obstruction(wp, ObstructionKind::Type1) &&
                             !obstruction(wp, ObstructionKind::Type2) && !obstruction(wp, ObstructionKind::Type3);
          preserve.check(clean, [&] { return tag + " -> " + wp.to_string(); });
        }

        if (cdg) {
          for (const TermOrder& base : bases) {
            const KRReport kr = check_kr_hypotheses(w, corner, base, options.budget);
            link.check(kr.all_pass(), [&] { return tag + " " + to_json(kr).dump(); });
          }
          bool q_groebner = true;
          for (const TermOrder& base : bases) {
            GroebnerOptions opts;
            opts.budget = options.budget;
            q_groebner = q_groebner && is_groebner(q_ideal(w, corner, base).generators, base, opts).is_groebner;
          }
          if (q_groebner) q_ok.push_back(corner.to_string());
        }
      }

      if (cdg) {
        qsuite.check(!q_ok.empty(), [&] { return w.to_string(); });
        if (!lower_outside_corners(w).empty()) {
          std::string joined;
          for (const std::string& c : q_ok) joined += c;
          qsuite.note(w.to_string() + ": " + (joined.empty() ? "none" : joined));
        }
        const int vars = m * m;
        const int ht = vars - quotient_dimension(cdg_generators(w), TermOrder::row_lex(), vars, options.budget);
        heights.check(ht == coxeter_length(w),
                      [&] { return w.to_string() + " height " + std::to_string(ht); });
      }
    });
  }

  std::vector<SuiteResult> out;
  for (Suite* s : {&t1, &t2, &t3, &avoid, &deletion, &new_ess, &preserve, &link, &qsuite, &heights}) {
    out.push_back(s->take());
  }
  return out;
}

std::vector<FixtureResult> verify_rank_fixtures(const std::filesystem::path& dir) {
  std::vector<FixtureResult> out;
  for (const char* name : {"N1", "N2"}) {
    const std::filesystem::path file = dir / (std::string(name) + ".txt");
    if (!std::filesystem::exists(file)) throw Error("missing rank fixture " + file.string());
    FixtureResult f;
    f.name = name;
    f.matrix = RankMatrix::load(file.string());
    const GeneratorSet g = rank_matrix_generators(f.matrix);
    f.generator_count = g.size();
    f.report = is_groebner(g, TermOrder::row_lex());
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace cdg
