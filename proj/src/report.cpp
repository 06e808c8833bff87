#include "artinian/report.hpp"

namespace artinian {

namespace {

Json pair_list(const std::vector<std::pair<std::size_t, std::size_t>>& v) {
  Json out = Json::array();
  for (const auto& [a, b] : v) out.push_back(Json::array({a, b}));
  return out;
}

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

}  // namespace

Json presentation_json(const Presentation& p) {
  Json rels = Json::array();
  for (const auto& r : p.relations) rels.push_back(r.to_string(p.variables));
  return Json{{"field", p.field.name()},
              {"variables", p.variables},
              {"relations", std::move(rels)},
              {"truncation_degree", p.truncation_degree},
              {"text", p.to_text()}};
}

Json to_json(const KoszulProfile& p) { return Json{{"label", p.label}, {"h", p.h}}; }

Json to_json(const CheckReport& r) {
  return Json{{"name", r.name}, {"passed", r.passed()}, {"checked", r.checked.size()}, {"violations", r.violations}};
}

Json to_json(const DualSequenceReport& r) {
  return Json{{"n", r.n},
              {"precondition", r.precondition},
              {"first_nonvanishing_ext", optional_json(r.first_nonvanishing_ext)},
              {"ext", r.ext_dims},
              {"beta", r.beta},
              {"alpha", r.alpha},
              {"rho", r.rho},
              {"beta0_prime", r.beta0_prime},
              {"alpha0_prime", r.alpha0_prime},
              {"dual_syzygy_betti", r.dual_syzygy_betti},
              {"dual_minimal", r.dual_minimal},
              {"passed", r.passed()},
              {"violations", r.violations}};
}

Json to_json(const SerreReport& r) {
  return Json{{"n_max", r.n_max}, {"betti", r.betti}, {"bound", r.bound}, {"slack", r.slack}};
}

Json to_json(const GolodReport& r) {
  return Json{{"n_max", r.n_max},
              {"verdict", r.verdict()},
              {"golod_to_precision", r.golod_to_precision},
              {"first_failure", optional_json(r.first_failure)},
              {"serre", to_json(r.serre)}};
}

Json to_json(const ConditionTable& t) {
  Json eq = Json::array();
  for (const auto& row : t.equivalences)
    eq.push_back(Json{{"n", row.n}, {"a", row.a}, {"b", row.b}, {"c", row.c}});
  auto implications = [](const std::vector<ImplicationCheck>& v) {
    Json out = Json::array();
    for (const auto& c : v)
      out.push_back(Json{{"a", c.a}, {"b", c.b}, {"applicable", c.applicable}, {"conclusion", c.conclusion}});
    return out;
  };
  Json bn = Json::array();
  for (bool b : t.bn) bn.push_back(b);
  Json hml = Json::array();
  for (const auto& row : t.hml) {
    Json r = Json::array();
    for (bool b : row) r.push_back(b);
    hml.push_back(std::move(r));
  }
  return Json{{"e", t.e},
              {"n_max", t.n_max},
              {"l_max", t.l_max},
              {"B", std::move(bn)},
              {"H", std::move(hml)},
              {"equivalences", std::move(eq)},
              {"h_from_b", implications(t.h_from_b)},
              {"b_from_h", implications(t.b_from_h)},
              {"passed", t.passed()},
              {"violations", t.violations}};
}

Json to_json(const StarScanReport& r) {
  Json pairs = Json::array();
  for (const auto& p : r.pairs) pairs.push_back(Json{{"a", p.a}, {"b", p.b}, {"method", p.method}});
  return Json{{"bound", r.bound},
              {"pairs", std::move(pairs)},
              {"undecided", pair_list(r.undecided)},
              {"refuted_by_search", pair_list(r.refuted_by_search)},
              {"refuted_by_proof", pair_list(r.refuted_by_proof)},
              {"monte_carlo", r.monte_carlo()},
              {"seed", r.seed}};
}

Json to_json(const ExceptionalReport& r) {
  return Json{{"bound", r.bound},
              {"exceptional", r.exceptional},
              {"first_simple_summand", optional_json(r.first_simple_summand)}};
}

Json to_json(const GolodDecompositionReport& r) {
  Json shifts = Json::array();
  for (const auto& s : r.shifts)
    shifts.push_back(Json{{"shift", s.shift},
                          {"left_betti", s.left_betti},
                          {"right_betti", s.right_betti},
                          {"left_h", s.left_h},
                          {"right_h", s.right_h},
                          {"numeric_match", s.numeric_match},
                          {"certified", optional_json(s.certified)},
                          {"note", s.note}});
  return Json{{"max_shift", r.max_shift},
              {"precision", r.precision},
              {"mode", r.mode == DecompositionMode::Numeric ? "numeric" : "structural"},
              {"numeric_passed", r.numeric_passed},
              {"structural_passed", optional_json(r.structural_passed)},
              {"golod_verdict", r.golod_verdict},
              {"seed", r.seed},
              {"shifts", std::move(shifts)}};
}

Json to_json(const MonotonicityReport& r) {
  Json steps = Json::array();
  for (const auto& s : r.steps)
    steps.push_back(Json{{"p", s.p},
                         {"q", s.q},
                         {"n", s.n},
                         {"lower", s.lower},
                         {"upper", s.upper},
                         {"tor", s.tor},
                         {"monotone", s.monotone},
                         {"identity", s.identity}});
  return Json{{"a", r.a},
              {"b", r.b},
              {"module", r.module_label},
              {"dichotomy_branch", r.dichotomy_branch},
              {"hypersurface", r.hypersurface},
              {"betti", r.betti},
              {"steps", std::move(steps)},
              {"passed", r.passed()},
              {"violations", r.violations}};
}

Json to_json(const TachikawaReport& r) {
  return Json{{"n_max", r.n_max},
              {"ext", r.ext},
              {"first_nonvanishing", optional_json(r.first_nonvanishing)},
              {"gorenstein", r.gorenstein},
              {"hypersurface", r.hypersurface},
              {"canonical_free", r.canonical_free},
              {"star", optional_json(r.star)},
              {"witness_expected", r.witness_expected},
              {"consistent", r.consistent},
              {"summary", r.summary}};
}

Json to_json(const BoundednessReport& r) {
  return Json{{"module", r.module_label},
              {"betti", r.betti},
              {"min", r.min},
              {"max", r.max},
              {"constant", r.constant},
              {"nondecreasing", r.nondecreasing},
              {"strictly_increasing_from", optional_json(r.strictly_increasing_from)},
              {"tail_growing", r.tail_growing},
              {"trend", r.trend}};
}

}  // namespace artinian
