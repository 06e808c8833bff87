#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "artinian/structure.hpp"

namespace artinian {

using Json = nlohmann::ordered_json;

template <class F>
Json scalar_json(const F& field, const typename F::Elem& v) {
  if constexpr (F::kIsPrime)
    return v;
  else
    return field.to_string(v);
}

// Sparse triplets [row, col, value].
template <class F>
Json matrix_json(const ExactMatrix<F>& m) {
  Json entries = Json::array();
  for (Index c = 0; c < m.cols(); ++c)
    for (const auto& e : m.column(c)) entries.push_back(Json::array({e.index, c, scalar_json(m.field(), e.value)}));
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

template <class T>
Json values_record(const std::string& label, const std::string& algebra_hash, const std::vector<T>& values) {
  return Json{{"label", label}, {"algebra_hash", algebra_hash}, {"values", values}};
}

Json presentation_json(const Presentation& p);
Json to_json(const KoszulProfile& p);
Json to_json(const CheckReport& r);
Json to_json(const DualSequenceReport& r);
Json to_json(const SerreReport& r);
Json to_json(const GolodReport& r);
Json to_json(const ConditionTable& t);
Json to_json(const StarScanReport& r);
Json to_json(const ExceptionalReport& r);
Json to_json(const GolodDecompositionReport& r);
Json to_json(const MonotonicityReport& r);
Json to_json(const TachikawaReport& r);
Json to_json(const BoundednessReport& r);

template <class F>
Json algebra_json(const Algebra<F>& a) {
  Json basis = Json::array();
  for (const auto& b : a.basis()) basis.push_back(b);
  return Json{{"hash", a.hash()},
              {"presentation", presentation_json(a.presentation())},
              {"dim", a.dim()},
              {"embedding_dimension", a.embedding_dimension()},
              {"hilbert", a.hilbert().dims},
              {"socle_dim", a.socle_basis().size()},
              {"basis", std::move(basis)}};
}

template <class F>
Json to_json(const SummandCertificate<F>& c, bool with_maps = true) {
  Json j{{"split", c.split},
         {"refutation", refutation_name(c.refutation)},
         {"proof", c.proof},
         {"method", c.method},
         {"seed", c.seed},
         {"trials", c.trials}};
  if (with_maps && c.f) j["f"] = matrix_json(*c.f);
  if (with_maps && c.g) j["g"] = matrix_json(*c.g);
  return j;
}

template <class F>
Json to_json(const DecompositionReport<F>& r, bool with_maps = false) {
  Json classes = Json::array();
  for (std::size_t c = 0; c < r.num_classes(); ++c) {
    const auto& rep = r.summands[r.class_representative[c]];
    classes.push_back(Json{{"class", c},
                           {"dim", rep.module.dim},
                           {"multiplicity", r.class_multiplicity[c]},
                           {"proven_indecomposable", rep.proven_indecomposable}});
  }
  Json j{{"label", r.label},     {"dim", r.dim},
         {"classes", classes},   {"summands", r.summands.size()},
         {"seed", r.seed},       {"trials", r.trials},
         {"monte_carlo", r.monte_carlo}, {"verified", r.verified}};
  if (with_maps) {
    Json idem = Json::array();
    for (const auto& s : r.summands)
      idem.push_back(Json{{"class", s.iso_class},
                          {"inclusion", matrix_json(s.inclusion)},
                          {"projection", matrix_json(s.projection)}});
    j["certificates"] = std::move(idem);
  }
  return j;
}

}  // namespace artinian
