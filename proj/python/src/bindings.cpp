#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "artinian/corpus.hpp"
#include "artinian/scan.hpp"
#include "artinian/session.hpp"

namespace py = pybind11;
using namespace artinian;

namespace {

std::optional<FieldSpec> field_of(const std::optional<std::string>& name) {
  if (!name) return std::nullopt;
  return FieldSpec::parse(*name);
}

DecompositionOptions options(std::uint64_t seed) {
  DecompositionOptions o;
  o.seed = seed;
  return o;
}

DecompositionMode mode_of(const std::string& name) {
  if (name == "numeric") return DecompositionMode::Numeric;
  if (name == "structural") return DecompositionMode::Structural;
  throw Error("mode must be 'numeric' or 'structural'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Homological invariants of Artinian local algebras";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", base);
  py::register_exception<UnsupportedField>(m, "UnsupportedField", base);
  py::register_exception<InvariantViolation>(m, "InvariantViolation", base);

  py::class_<Session>(m, "Session")
      .def_static(
          "from_text",
          [](const std::string& text, std::optional<std::string> field, std::uint64_t seed) {
            return Session::from_text(text, field_of(field), options(seed));
          },
          py::arg("text"), py::arg("field") = py::none(), py::arg("seed") = DecompositionOptions{}.seed)
      .def_static(
          "from_file",
          [](const std::string& path, std::optional<std::string> field, std::uint64_t seed) {
            return Session::from_file(path, field_of(field), options(seed));
          },
          py::arg("path"), py::arg("field") = py::none(), py::arg("seed") = DecompositionOptions{}.seed)
      .def_property_readonly("field", [](const Session& s) { return s.field().name(); })
      .def_property_readonly("presentation", [](const Session& s) { return s.presentation().to_text(); })
      .def_property_readonly("hash", &Session::hash)
      .def_property_readonly("e", &Session::e)
      .def_property_readonly("dim", &Session::dim)
      .def_property_readonly("gorenstein", &Session::gorenstein)
      .def_property_readonly("hypersurface", &Session::hypersurface)
      .def_property_readonly("fibre_product", &Session::fibre_product)
      .def("algebra_json", [](const Session& s) { return s.algebra_json().dump(); })
      .def("betti", &Session::betti, py::arg("n"), py::call_guard<py::gil_scoped_release>())
      .def("ring_profile", [](const Session& s) { return s.ring_profile().h; })
      .def("syzygy_profile", [](Session& s, std::size_t n) { return s.syzygy_profile(n).h; }, py::arg("n"))
      .def(
          "golod_json", [](Session& s, std::optional<std::size_t> n) { return to_json(s.golod(n)).dump(); },
          py::arg("n_max") = py::none())
      .def(
          "table_json",
          [](Session& s, std::size_t n, std::size_t l) { return to_json(s.table(n, l)).dump(); },
          py::arg("n_max"), py::arg("l_max"))
      .def(
          "star_scan_json", [](Session& s, std::size_t bound) { return to_json(s.star_scan(bound)).dump(); },
          py::arg("bound"))
      .def("burch", &Session::burch)
      .def("simple_summand", &Session::simple_summand, py::arg("n"))
      .def(
          "exceptional_json", [](Session& s, std::size_t bound) { return to_json(s.exceptional(bound)).dump(); },
          py::arg("bound"))
      .def(
          "summand_json",
          [](Session& s, std::size_t a, std::size_t b, bool maps) { return s.syzygy_summand_json(a, b, maps).dump(); },
          py::arg("a"), py::arg("b"), py::arg("maps") = false)
      .def(
          "decompose_json", [](Session& s, std::size_t n, bool maps) { return s.decompose_syzygy_json(n, maps).dump(); },
          py::arg("n"), py::arg("maps") = false)
      .def(
          "golod_decomposition_json",
          [](Session& s, std::size_t shifts, const std::string& mode) {
            return to_json(s.golod_decomposition(shifts, mode_of(mode))).dump();
          },
          py::arg("shifts"), py::arg("mode") = "numeric")
      .def(
          "monotonicity_json",
          [](Session& s, const std::string& module, std::size_t a, std::size_t b, std::size_t bound) {
            return to_json(s.monotonicity(module, a, b, bound)).dump();
          },
          py::arg("module"), py::arg("a"), py::arg("b"), py::arg("bound"))
      .def(
          "tachikawa_json", [](Session& s, std::size_t n) { return to_json(s.tachikawa(n)).dump(); },
          py::arg("n_max"))
      .def(
          "formulas_json",
          [](Session& s, std::size_t n) {
            Json out = Json::array();
            for (const auto& r : s.formulas(n)) out.push_back(to_json(r));
            return out.dump();
          },
          py::arg("n_max"));

  m.def(
      "reproduce_json",
      []() {
        Json out = Json::array();
        for (const auto& entry : builtin_corpus())
          for (const auto& field : entry.fields)
            for (const auto& o : run_corpus_entry(entry, field)) out.push_back(to_json(o));
        return out.dump();
      },
      py::call_guard<py::gil_scoped_release>());

  m.def(
      "scan_json",
      [](const std::string& config, std::size_t jobs, std::optional<std::string> where) {
        ScanOptions opts;
        opts.jobs = jobs;
        opts.ordered = true;
        if (where) opts.where.emplace(*where);
        Json out = Json::array();
        run_scan(ScanConfig::from_json(Json::parse(config)), opts, [&](const Json& r) { out.push_back(r); });
        return out.dump();
      },
      py::arg("config"), py::arg("jobs") = 1, py::arg("where") = py::none(),
      py::call_guard<py::gil_scoped_release>());

  m.def(
      "fibre_product_text",
      [](const std::string& s, const std::string& t) {
        return fibre_product_presentation(parse_presentation(s), parse_presentation(t)).to_text();
      },
      py::arg("s"), py::arg("t"));
}
