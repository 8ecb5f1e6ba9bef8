// cdgtool: command-line front end for the CDG library.
//
// Exit status: 0 on success, 1 when a sweep reports disagreements or budget
// errors or a property suite reports violations, 2 on bad input.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "cdg/combinatorics.hpp"
#include "cdg/errors.hpp"
#include "cdg/generators.hpp"
#include "cdg/groebner.hpp"
#include "cdg/gvd.hpp"
#include "cdg/report_json.hpp"
#include "cdg/verifier.hpp"

#ifndef CDG_FIXTURE_DIR
#define CDG_FIXTURE_DIR "fixtures"
#endif

using namespace cdg;

namespace {

enum class Format { Text, Json, Csv };

struct Globals {
  bool json = false;
  bool csv = false;
  std::size_t budget = kDefaultBudget;

  Format format() const { return json ? Format::Json : csv ? Format::Csv : Format::Text; }
};

Json cells_json(const std::vector<Cell>& cells) {
  Json out = Json::array();
  for (const Cell& c : cells) out.push_back({c.row, c.col});
  return out;
}

std::string cells_text(const std::vector<Cell>& cells) {
  std::string out;
  for (const Cell& c : cells) out += (out.empty() ? "" : " ") + c.to_string();
  return out.empty() ? "-" : out;
}

Cell parse_cell(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw Error("corner must look like i,j: '" + text + "'");
  try {
    return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
  } catch (const std::logic_error&) {
    throw Error("corner must look like i,j: '" + text + "'");
  }
}

std::vector<std::string> split_list(const std::vector<std::string>& items) {
  std::vector<std::string> out;
  for (const std::string& item : items) {
    std::stringstream ss(item);
    for (std::string part; std::getline(ss, part, ',');) {
      if (!part.empty()) out.push_back(part);
    }
  }
  return out;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

int cmd_diagram(const Globals& g, const Permutation& w) {
  const Diagram d = rothe_diagram(w);
  const Diagram ess = essential_set(w);
  const Diagram dom = dominant_part(w);
  const std::vector<Cell> corners = lower_outside_corners(w);
  if (g.format() == Format::Json) {
    Json j;
    j["permutation"] = w.to_string();
    j["length"] = coxeter_length(w);
    j["diagram"] = cells_json(d.cells());
    j["essential"] = cells_json(ess.cells());
    j["dominant"] = cells_json(dom.cells());
    j["lower_outside_corners"] = cells_json(corners);
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  // Grid: 'x' marks w(i), '#' dominant, 'e' essential, 'o' other diagram cells.
  const int n = w.size();
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const Cell c{i, j};
      char ch = '.';
      if (w(i) == j) {
        ch = 'x';
      } else if (dom.contains(c)) {
        ch = '#';
      } else if (ess.contains(c)) {
        ch = 'e';
      } else if (d.contains(c)) {
        ch = 'o';
      }
      std::cout << ch << (j < n ? " " : "\n");
    }
  }
  std::cout << "length     " << coxeter_length(w) << '\n'
            << "essential  " << cells_text(ess.cells()) << '\n'
            << "dominant   " << cells_text(dom.cells()) << '\n'
            << "corners    " << cells_text(corners) << '\n';
  return 0;
}

int cmd_rank(const Globals& g, const Permutation& w) {
  const RankMatrix r = rank_matrix(w);
  if (g.format() == Format::Json) {
    Json rows = Json::array();
    for (int i = 1; i <= r.rows(); ++i) {
      Json row = Json::array();
      for (int j = 1; j <= r.cols(); ++j) row.push_back(r.at(i, j));
      rows.push_back(row);
    }
    std::cout << Json{{"permutation", w.to_string()}, {"rank", rows}}.dump(2) << '\n';
    return 0;
  }
  const char sep = g.format() == Format::Csv ? ',' : ' ';
  for (int i = 1; i <= r.rows(); ++i) {
    for (int j = 1; j <= r.cols(); ++j) std::cout << r.at(i, j) << (j < r.cols() ? sep : '\n');
  }
  return 0;
}

int cmd_generators(const Globals& g, const Permutation& w, const std::string& style, const TermOrder& order) {
  GeneratorSet gens;
  if (style == "fulton") {
    gens = fulton_generators(w, order);
  } else if (style == "cdg") {
    gens = cdg_generators(w, order);
  } else {
    gens = naive_generators(w, order);
  }
  switch (g.format()) {
    case Format::Json: {
      Json list = Json::array();
      for (const Generator& gen : gens.generators()) {
        list.push_back({{"label", gen.label.to_string()},
                        {"degree", gen.poly.degree()},
                        {"lead", gen.poly.lead_monomial(order).to_string()},
                        {"poly", gen.poly.to_string(order)}});
      }
      std::cout << Json{{"permutation", w.to_string()}, {"style", style}, {"order", order.spec()},
                        {"count", gens.size()}, {"generators", list}}
                       .dump(2)
                << '\n';
      break;
    }
    case Format::Csv:
      std::cout << "label,degree,poly\n";
      for (const Generator& gen : gens.generators()) {
        std::cout << csv_quote(gen.label.to_string()) << ',' << gen.poly.degree() << ','
                  << csv_quote(gen.poly.to_string(order)) << '\n';
      }
      break;
    case Format::Text:
      std::cout << gens.size() << " " << style << " generators of " << w << " under " << order.spec() << '\n';
      for (const Generator& gen : gens.generators()) {
        std::cout << "  " << gen.label.to_string() << "  " << gen.poly.to_string(order) << '\n';
      }
      break;
  }
  return 0;
}

int cmd_patterns(const Globals& g, const Permutation& w) {
  const PatternScan scan = avoids_all_eight(w);
  if (g.format() == Format::Json) {
    Json list = Json::array();
    for (const Permutation& p : forbidden_patterns()) {
      Json entry{{"pattern", p.to_string()}};
      const auto hit = p.size() <= w.size() ? contains_pattern(w, p) : std::nullopt;
      entry["positions"] = hit ? Json(*hit) : Json(nullptr);
      list.push_back(entry);
    }
    std::cout << Json{{"permutation", w.to_string()}, {"avoids_all", scan.avoids_all}, {"patterns", list}}.dump(2)
              << '\n';
    return 0;
  }
  for (const Permutation& p : forbidden_patterns()) {
    const auto hit = p.size() <= w.size() ? contains_pattern(w, p) : std::nullopt;
    std::cout << p << (g.format() == Format::Csv ? "," : "  ");
    if (!hit) {
      std::cout << "avoided\n";
      continue;
    }
    std::cout << "at";
    for (int pos : *hit) std::cout << ' ' << pos;
    std::cout << '\n';
  }
  if (g.format() == Format::Text) std::cout << (scan.avoids_all ? "avoids all eight\n" : "contains a pattern\n");
  return 0;
}

int cmd_obstructions(const Globals& g, const Permutation& w) {
  Json list = Json::array();
  for (auto kind : {ObstructionKind::Type1, ObstructionKind::Type2, ObstructionKind::Type3}) {
    const auto witness = obstruction(w, kind);
    if (g.format() == Format::Json) {
      list.push_back(witness ? to_json(*witness) : Json{{"type", to_string(kind)}, {"cells", nullptr}});
    } else {
      std::cout << to_string(kind) << (g.format() == Format::Csv ? "," : "  ")
                << (witness ? cells_text(witness->cells) : "none") << '\n';
    }
  }
  if (g.format() == Format::Json) {
    std::cout << Json{{"permutation", w.to_string()}, {"obstructions", list}}.dump(2) << '\n';
  }
  return 0;
}

int cmd_check(const Globals& g, const Permutation& w, const std::vector<std::string>& order_specs, unsigned jobs) {
  Json reports = Json::array();
  if (g.format() == Format::Csv) std::cout << "order,is_groebner,pairs_checked,pairs_skipped,failing_pair\n";
  for (const std::string& spec : split_list(order_specs)) {
    const TermOrder order = TermOrder::parse(spec);
    GroebnerOptions opts;
    opts.budget = g.budget;
    opts.jobs = jobs;
    const GroebnerReport r = is_groebner(cdg_generators(w, order), order, opts);
    switch (g.format()) {
      case Format::Json:
        reports.push_back(to_json(r));
        break;
      case Format::Csv:
        std::cout << r.order << ',' << (r.is_groebner ? "true" : "false") << ',' << r.pairs_checked << ','
                  << r.pairs_skipped << ','
                  << (r.failing_pair ? csv_quote(r.failing_pair->first.to_string() + " | " +
                                                 r.failing_pair->second.to_string())
                                     : "")
                  << '\n';
        break;
      case Format::Text:
        std::cout << w << " under " << r.order << ": " << (r.is_groebner ? "Gröbner" : "not Gröbner") << " ("
                  << r.pairs_checked << " pairs checked, " << r.pairs_skipped << " skipped)\n";
        if (r.failing_pair) {
          const SPairVerdict& v = *r.failing_pair;
          std::cout << "  S(" << v.first.to_string() << ", " << v.second.to_string() << ") = "
                    << v.s_polynomial.to_string(order) << '\n'
                    << "  remainder " << v.remainder.to_string(order) << '\n';
        }
        break;
    }
  }
  if (g.format() == Format::Json) {
    std::cout << Json{{"permutation", w.to_string()}, {"reports", reports}}.dump(2) << '\n';
  }
  return 0;
}

int cmd_gvd(const Globals& g, const Permutation& w, const std::string& corner_text, const std::string& base_spec) {
  const Cell corner = parse_cell(corner_text);
  const TermOrder base = TermOrder::parse(base_spec);
  const KRReport kr = check_kr_hypotheses(w, corner, base, g.budget);
  const Permutation wp = delete_corner_permutation(w, corner);
  const QIdeal q = q_ideal(w, corner, base);
  if (g.format() == Format::Json) {
    Json j = to_json(kr);
    j["deleted_permutation"] = wp.to_string();
    j["q_ideal"] = {{"m1", q.m1},
                    {"m2", q.m2},
                    {"rank", q.rank},
                    {"maximal_minors", q.maximal_minors},
                    {"generators", q.generators.size()}};
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  auto flag = [](bool b) { return b ? "pass" : "FAIL"; };
  std::cout << w << " at " << corner.to_string() << " under " << kr.order << '\n'
            << "  w' = " << wp << '\n'
            << "  " << kr.pairs << " generators involve y, " << kr.h_count << " do not\n";
  if (kr.degenerate) {
    std::cout << "  degenerate corner (dominant): C is the unit ideal\n";
    return 0;
  }
  std::cout << "  C Gröbner           " << flag(kr.c_groebner) << '\n'
            << "  N Gröbner           " << flag(kr.n_groebner) << '\n'
            << "  2-minors in N       " << flag(kr.two_minors_in_N) << " (" << kr.two_minor_count << ")\n"
            << "  heights             " << flag(kr.heights_ok) << " (I " << kr.height_I << ", C " << kr.height_C
            << ", N " << kr.height_N << ")\n"
            << "  y-compatible order  " << flag(kr.order_y_compatible) << '\n'
            << "  Q: m1 " << q.m1 << ", m2 " << q.m2 << ", rank " << q.rank << ", "
            << (q.maximal_minors ? "maximal minors" : "with y-free generators") << ", " << q.generators.size()
            << " generators\n";
  if (!kr.c_failure.empty()) std::cout << "  C witness " << kr.c_failure << '\n';
  if (!kr.n_failure.empty()) std::cout << "  N witness " << kr.n_failure << '\n';
  if (!kr.two_minor_witness.empty()) std::cout << "  2-minor outside N: " << kr.two_minor_witness << '\n';
  return 0;
}

int cmd_sweep(const Globals& g, SweepConfig cfg, const std::string& out_path, const std::string& filter) {
  cfg.orders = split_list(cfg.orders);
  cfg.budget = g.budget;
  if (filter == "contains") {
    cfg.filter = SweepFilter::ContainsPattern;
  } else if (filter == "avoids") {
    cfg.filter = SweepFilter::AvoidsAll;
  }
  std::ofstream file;
  std::ostream* records = nullptr;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) throw Error("cannot write " + out_path);
    records = &file;
  } else if (g.format() == Format::Json) {
    records = &std::cout;
  }
  const SweepSummary s = sweep(cfg, records);
  switch (g.format()) {
    case Format::Json:
      if (records != &std::cout) std::cout << to_json(s, cfg.timing).dump(2) << '\n';
      break;
    case Format::Csv:
      std::cout << "n,orders,total,cdg,non_cdg,disagreements,errors,elapsed_ms\n"
                << cfg.n << ',' << csv_quote([&] {
                     std::string o;
                     for (const std::string& spec : cfg.orders) o += (o.empty() ? "" : ";") + spec;
                     return o;
                   }())
                << ',' << s.total << ',' << s.cdg << ',' << s.non_cdg << ',' << s.disagreements << ',' << s.errors
                << ',' << (cfg.timing ? s.elapsed_ms : 0.0) << '\n';
      break;
    case Format::Text:
      std::cout << "S_" << cfg.n << ": " << s.total << " permutations, " << s.cdg << " CDG, " << s.non_cdg
                << " not, " << s.disagreements << " disagreements, " << s.errors << " errors";
      if (cfg.timing) std::cout << " (" << s.elapsed_ms / 1000.0 << " s)";
      std::cout << '\n';
      if (!s.non_cdg_list.empty()) {
        std::cout << "not CDG:";
        for (const std::string& w : s.non_cdg_list) std::cout << ' ' << w;
        std::cout << '\n';
      }
      if (!s.disagreement_list.empty()) {
        std::cout << "disagreements:";
        for (const std::string& w : s.disagreement_list) std::cout << ' ' << w;
        std::cout << '\n';
      }
      break;
  }
  return s.ok() ? 0 : 1;
}

int cmd_verify_lemmas(const Globals& g, int n, LemmaOptions opts) {
  opts.budget = g.budget;
  opts.base_orders = split_list(opts.base_orders);
  const std::vector<SuiteResult> results = verify_lemmas(n, opts);
  bool ok = true;
  Json list = Json::array();
  if (g.format() == Format::Csv) std::cout << "suite,checked,violations\n";
  for (const SuiteResult& r : results) {
    ok = ok && r.ok();
    switch (g.format()) {
      case Format::Json:
        list.push_back(to_json(r));
        break;
      case Format::Csv:
        std::cout << r.name << ',' << r.checked << ',' << r.violations << '\n';
        break;
      case Format::Text:
        std::cout << (r.ok() ? "ok    " : "FAIL  ") << r.name << ": " << r.checked << " checked, " << r.violations
                  << " violations\n";
        for (const std::string& w : r.witnesses) std::cout << "      " << w << '\n';
        break;
    }
  }
  if (g.format() == Format::Json) std::cout << Json{{"n", n}, {"suites", list}}.dump(2) << '\n';
  return ok ? 0 : 1;
}

int cmd_verify_fixtures(const Globals& g, const std::string& dir) {
  const std::vector<FixtureResult> results = verify_rank_fixtures(dir);
  Json list = Json::array();
  if (g.format() == Format::Csv) std::cout << "fixture,generators,is_groebner\n";
  for (const FixtureResult& f : results) {
    switch (g.format()) {
      case Format::Json:
        list.push_back(to_json(f));
        break;
      case Format::Csv:
        std::cout << f.name << ',' << f.generator_count << ',' << (f.report.is_groebner ? "true" : "false") << '\n';
        break;
      case Format::Text:
        std::cout << f.name << ": " << f.generator_count << " generators, "
                  << (f.report.is_groebner ? "Gröbner" : "not Gröbner") << " under " << f.report.order << '\n';
        if (f.report.failing_pair) {
          std::cout << "  S(" << f.report.failing_pair->first.to_string() << ", "
                    << f.report.failing_pair->second.to_string() << ") leaves "
                    << f.report.failing_pair->remainder.to_string() << '\n';
        }
        break;
    }
  }
  if (g.format() == Format::Json) std::cout << Json{{"fixtures", list}}.dump(2) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schubert determinantal ideals: CDG generators, Gröbner checks and pattern avoidance"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "Machine-readable JSON output");
  app.add_flag("--csv", g.csv, "CSV output where it applies");
  app.add_option("--budget", g.budget, "Reduction step budget per Gröbner check");

  std::string w_text;
  auto add_perm = [&](CLI::App* sub) { sub->add_option("w", w_text, "Permutation in one-line notation")->required(); };

  auto* diagram = app.add_subcommand("diagram", "Rothe diagram, essential set, dominant part, corners");
  add_perm(diagram);
  auto* rank = app.add_subcommand("rank", "Rank matrix");
  add_perm(rank);

  auto* generators = app.add_subcommand("generators", "Ideal generators");
  add_perm(generators);
  std::string style = "cdg";
  std::string gen_order = "rowlex";
  generators->add_option("--style", style, "fulton, cdg or naive")
      ->check(CLI::IsMember({"fulton", "cdg", "naive"}))
      ->capture_default_str();
  generators->add_option("--order", gen_order, "Term order for leads and sorting")->capture_default_str();

  auto* patterns = app.add_subcommand("patterns", "Containment of the eight forbidden patterns");
  add_perm(patterns);
  auto* obstructions = app.add_subcommand("obstructions", "Diagram obstructions of types 1 to 3");
  add_perm(obstructions);

  auto* check = app.add_subcommand("check", "Is the CDG generating set a Gröbner basis?");
  add_perm(check);
  std::vector<std::string> check_orders{"rowlex"};
  unsigned check_jobs = 1;
  check->add_option("--order", check_orders, "Term order(s); comma separated or repeated")->capture_default_str();
  check->add_option("--jobs", check_jobs, "Worker threads for the S-pair scan")->capture_default_str();

  auto* gvd = app.add_subcommand("gvd", "Decomposition at a lower outside corner");
  add_perm(gvd);
  std::string corner;
  std::string gvd_order = "rowlex";
  gvd->add_option("--corner", corner, "Corner as i,j")->required();
  gvd->add_option("--order", gvd_order, "Base order refined to be y-compatible")->capture_default_str();

  auto* sweep_cmd = app.add_subcommand("sweep", "Classify every permutation of S_n");
  SweepConfig cfg;
  cfg.jobs = std::max(1U, std::thread::hardware_concurrency());
  std::string out_path;
  std::string filter = "all";
  bool no_timing = false;
  sweep_cmd->add_option("--n", cfg.n, "Permutation size")->required();
  sweep_cmd->add_option("--orders", cfg.orders, "Term orders; comma separated or repeated")->capture_default_str();
  sweep_cmd->add_option("--jobs", cfg.jobs, "Worker threads")->capture_default_str();
  sweep_cmd->add_option("--out", out_path, "Write JSONL records to this file");
  sweep_cmd->add_option("--filter", filter, "all, contains or avoids")
      ->check(CLI::IsMember({"all", "contains", "avoids"}))
      ->capture_default_str();
  sweep_cmd->add_flag("--full", cfg.allow_full, "Enumerate all of S_n even for n >= 6");
  sweep_cmd->add_flag("--no-timing", no_timing, "Omit timing fields for reproducible output");

  auto* lemmas = app.add_subcommand("verify-lemmas", "Run the diagram and decomposition property suites");
  int lemma_n = 5;
  LemmaOptions lemma_opts;
  lemma_opts.jobs = std::max(1U, std::thread::hardware_concurrency());
  lemmas->add_option("--n", lemma_n, "Largest permutation size")->required();
  lemmas->add_option("--gvd-max-n", lemma_opts.gvd_max_n, "Largest size for the ideal suites")->capture_default_str();
  lemmas->add_option("--orders", lemma_opts.base_orders, "Base orders")->capture_default_str();
  lemmas->add_option("--jobs", lemma_opts.jobs, "Worker threads")->capture_default_str();

  auto* fixtures = app.add_subcommand("verify-fixtures", "Check the bundled rank-matrix fixtures");
  std::string fixture_dir = CDG_FIXTURE_DIR;
  fixtures->add_option("--dir", fixture_dir, "Fixture directory")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const auto perm = [&] { return Permutation::parse(w_text); };
    if (diagram->parsed()) return cmd_diagram(g, perm());
    if (rank->parsed()) return cmd_rank(g, perm());
    if (generators->parsed()) return cmd_generators(g, perm(), style, TermOrder::parse(gen_order));
    if (patterns->parsed()) return cmd_patterns(g, perm());
    if (obstructions->parsed()) return cmd_obstructions(g, perm());
    if (check->parsed()) return cmd_check(g, perm(), check_orders, check_jobs);
    if (gvd->parsed()) return cmd_gvd(g, perm(), corner, gvd_order);
    if (sweep_cmd->parsed()) {
      cfg.timing = !no_timing;
      return cmd_sweep(g, cfg, out_path, filter);
    }
    if (lemmas->parsed()) return cmd_verify_lemmas(g, lemma_n, lemma_opts);
    if (fixtures->parsed()) return cmd_verify_fixtures(g, fixture_dir);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
