#include "cdg/report_json.hpp"

namespace cdg {

namespace {

Json cells(const std::vector<Cell>& cs) {
  Json out = Json::array();
  for (const Cell& c : cs) out.push_back({c.row, c.col});
  return out;
}

}  // namespace

Json to_json(const SPairVerdict& v) {
  Json j;
  j["pair"] = {v.first.to_string(), v.second.to_string()};
  j["indices"] = {v.first_index, v.second_index};
  if (v.skipped_by) j["skipped_by"] = "product";
  j["remainder"] = v.remainder.to_string();
  return j;
}

Json to_json(const GroebnerReport& r, bool timing) {
  Json j;
  j["order"] = r.order;
  j["is_groebner"] = r.is_groebner;
  j["failing_pair"] = r.failing_pair ? to_json(*r.failing_pair) : Json(nullptr);
  j["pairs_checked"] = r.pairs_checked;
  j["pairs_skipped"] = r.pairs_skipped;
  j["reduction_steps"] = r.reduction_steps;
  if (timing) j["elapsed_ms"] = r.elapsed.count();
  return j;
}

Json to_json(const KRReport& r) {
  Json j;
  j["w"] = r.permutation;
  j["corner"] = {r.corner.row, r.corner.col};
  j["order"] = r.order;
  j["degenerate"] = r.degenerate;
  j["c_groebner"] = r.c_groebner;
  j["n_groebner"] = r.n_groebner;
  j["two_minors_in_N"] = r.two_minors_in_N;
  j["heights_ok"] = r.heights_ok;
  j["order_y_compatible"] = r.order_y_compatible;
  j["all_pass"] = r.all_pass();
  Json d;
  d["pairs"] = r.pairs;
  d["h_count"] = r.h_count;
  d["two_minor_count"] = r.two_minor_count;
  d["height_I"] = r.height_I;
  d["height_C"] = r.height_C;
  d["height_N"] = r.height_N;
  if (!r.c_failure.empty()) d["c_failure"] = r.c_failure;
  if (!r.n_failure.empty()) d["n_failure"] = r.n_failure;
  if (!r.two_minor_witness.empty()) d["two_minor_witness"] = r.two_minor_witness;
  j["details"] = d;
  return j;
}

Json to_json(const ObstructionWitness& w) {
  Json j;
  j["type"] = std::string(to_string(w.kind));
  j["cells"] = cells(w.cells);
  return j;
}

Json to_json(const ClassificationRecord& r, bool timing) {
  Json j;
  j["w"] = r.w.to_string();
  Json pats = Json::array();
  for (const Permutation& p : r.patterns_contained) pats.push_back(p.to_string());
  j["patterns_contained"] = pats;
  j["avoids_all"] = r.avoids_all;
  Json obs;
  for (std::size_t k = 0; k < r.obstructions.size(); ++k) {
    const std::string key = "type" + std::to_string(k + 1);
    obs[key] = r.obstructions[k] ? Json(cells(r.obstructions[k]->cells)) : Json(nullptr);
  }
  j["obstructions"] = obs;
  Json verdicts = Json::object();
  for (const OrderVerdict& v : r.verdicts) {
    Json e;
    e["is_groebner"] = v.is_groebner ? Json(*v.is_groebner) : Json(nullptr);
    if (v.error) e["error"] = *v.error;
    if (!v.failing_pair.empty()) {
      e["failing_pair"] = v.failing_pair;
      e["remainder"] = v.remainder;
    }
    e["pairs_checked"] = v.pairs_checked;
    e["pairs_skipped"] = v.pairs_skipped;
    if (timing) e["elapsed_ms"] = v.elapsed_ms;
    verdicts[v.order] = e;
  }
  j["cdg_verdicts"] = verdicts;
  j["cdg"] = r.cdg();
  j["agreement"] = r.agreement;
  if (timing) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

Json to_json(const SweepSummary& s, bool timing) {
  Json j;
  j["total"] = s.total;
  j["cdg"] = s.cdg;
  j["non_cdg"] = s.non_cdg;
  j["disagreements"] = s.disagreements;
  j["errors"] = s.errors;
  j["non_cdg_list"] = s.non_cdg_list;
  j["disagreement_list"] = s.disagreement_list;
  if (timing) j["elapsed_ms"] = s.elapsed_ms;
  return j;
}

Json to_json(const SuiteResult& s) {
  Json j;
  j["suite"] = s.name;
  j["checked"] = s.checked;
  j["violations"] = s.violations;
  j["witnesses"] = s.witnesses;
  if (!s.notes.empty()) j["notes"] = s.notes;
  return j;
}

Json to_json(const FixtureResult& f, bool timing) {
  Json j;
  j["name"] = f.name;
  Json rows = Json::array();
  for (int i = 1; i <= f.matrix.rows(); ++i) {
    Json row = Json::array();
    for (int c = 1; c <= f.matrix.cols(); ++c) row.push_back(f.matrix.at(i, c));
    rows.push_back(row);
  }
  j["matrix"] = rows;
  j["generators"] = f.generator_count;
  j["report"] = to_json(f.report, timing);
  return j;
}

}  // namespace cdg
