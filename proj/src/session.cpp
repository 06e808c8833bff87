#include "artinian/session.hpp"

#include <random>
#include <variant>

#include "artinian/sampler.hpp"

namespace artinian {

struct Session::Impl {
  Presentation presentation;
  DecompositionOptions options;
  std::variant<std::unique_ptr<ResidueTower<PrimeField>>, std::unique_ptr<ResidueTower<RationalField>>> tower;

  template <class Fn>
  decltype(auto) visit(Fn&& fn) {
    return std::visit([&](auto& t) -> decltype(auto) { return fn(*t); }, tower);
  }
  template <class Fn>
  decltype(auto) visit(Fn&& fn) const {
    return std::visit([&](const auto& t) -> decltype(auto) { return fn(*t); }, tower);
  }
};

Session::Session(Presentation p, DecompositionOptions opts) : impl_(std::make_shared<Impl>()) {
  impl_->presentation = std::move(p);
  impl_->options = opts;
  const auto& spec = impl_->presentation.field;
  if (spec.is_prime_field())
    impl_->tower = std::make_unique<ResidueTower<PrimeField>>(
        build_algebra(PrimeField(spec.characteristic), impl_->presentation), opts);
  else
    impl_->tower =
        std::make_unique<ResidueTower<RationalField>>(build_algebra(RationalField{}, impl_->presentation), opts);
}

namespace {

Presentation with_field(Presentation p, std::optional<FieldSpec> field) {
  if (!field || *field == p.field) return p;
  p.field = *field;
  std::vector<Polynomial> rels;
  for (auto& r : p.relations) {
    r.normalize(p.field);
    if (!r.is_zero()) rels.push_back(std::move(r));
  }
  p.relations = std::move(rels);
  return p;
}

}  // namespace

Session Session::from_text(std::string_view text, std::optional<FieldSpec> field, DecompositionOptions opts) {
  return Session(with_field(parse_presentation(text), field), opts);
}

Session Session::from_file(const std::string& path, std::optional<FieldSpec> field, DecompositionOptions opts) {
  return Session(with_field(load_presentation(path), field), opts);
}

const Presentation& Session::presentation() const { return impl_->presentation; }
FieldSpec Session::field() const { return impl_->presentation.field; }
const DecompositionOptions& Session::options() const { return impl_->options; }
std::string Session::hash() const {
  return impl_->visit([](const auto& t) { return t.algebra()->hash(); });
}
std::size_t Session::e() const {
  return impl_->visit([](const auto& t) { return t.e(); });
}
std::size_t Session::dim() const {
  return impl_->visit([](const auto& t) { return t.algebra()->dim(); });
}
bool Session::gorenstein() const {
  return impl_->visit([](const auto& t) { return gorenstein_test(*t.algebra()); });
}
bool Session::hypersurface() const {
  return impl_->visit([](const auto& t) { return t.ring().at(1) <= 1; });
}
bool Session::fibre_product() const { return monomial_fibre_split(impl_->presentation).has_value(); }

Json Session::algebra_json() const {
  return impl_->visit([&](const auto& t) {
    Json j = artinian::algebra_json(*t.algebra());
    j["gorenstein"] = gorenstein_test(*t.algebra());
    j["hypersurface"] = t.ring().at(1) <= 1;
    j["koszul"] = to_json(t.ring());
    auto split = monomial_fibre_split(impl_->presentation);
    j["fibre_product"] = split ? Json::array({split->first, split->second}) : Json(nullptr);
    return j;
  });
}

std::vector<std::int64_t> Session::betti(std::size_t n) {
  return impl_->visit([&](auto& t) {
    std::vector<std::int64_t> out;
    for (std::size_t i = 0; i <= n; ++i) out.push_back(t.betti(static_cast<std::int64_t>(i)));
    return out;
  });
}

KoszulProfile Session::ring_profile() const {
  return impl_->visit([](const auto& t) { return t.ring(); });
}

KoszulProfile Session::syzygy_profile(std::size_t n) {
  return impl_->visit([&](auto& t) {
    KoszulProfile p = t.profile(n);
    p.label = "syz_" + std::to_string(n) + "(k)";
    return p;
  });
}

SerreReport Session::serre(std::size_t n_max) {
  return impl_->visit([&](auto& t) { return serre_bound_check(t, n_max); });
}
GolodReport Session::golod(std::optional<std::size_t> n_max) {
  return impl_->visit([&](auto& t) { return golod_check(t, n_max); });
}
ConditionTable Session::table(std::size_t n_max, std::size_t l_max) {
  return impl_->visit([&](auto& t) { return bn_hml_table(t, n_max, l_max); });
}
StarScanReport Session::star_scan(std::size_t bound) {
  return impl_->visit([&](auto& t) { return star_property_scan(t, bound); });
}
bool Session::burch() {
  return impl_->visit([&](auto& t) { return burch_depth_zero_test(t); });
}
bool Session::simple_summand(std::size_t n) {
  return impl_->visit([&](auto& t) { return t.simple_summand(n).split; });
}
ExceptionalReport Session::exceptional(std::size_t bound) {
  return impl_->visit([&](auto& t) { return exceptional_test(t, bound); });
}
GolodDecompositionReport Session::golod_decomposition(std::size_t max_shift, DecompositionMode mode,
                                                      std::optional<std::size_t> precision) {
  return impl_->visit([&](auto& t) { return verify_golod_decomposition(t, max_shift, mode, precision); });
}
TachikawaReport Session::tachikawa(std::size_t n_max, const StarScanReport* star) {
  return impl_->visit([&](auto& t) { return tachikawa_probe(t, n_max, star); });
}
BoundednessReport Session::boundedness(std::size_t n_max) {
  return impl_->visit([&](auto& t) { return betti_boundedness_probe(t, n_max); });
}
std::vector<CheckReport> Session::formulas(std::size_t n_max) {
  return impl_->visit([&](auto& t) { return formula_suite(t, n_max); });
}
DualSequenceReport Session::dual_sequence(std::size_t n) {
  return impl_->visit([&](auto& t) { return dual_sequence_check(canonical_module(t.algebra()), n); });
}

namespace {

template <class F>
ActionModule<F> named_module(ResidueTower<F>& t, const std::string& name, std::uint64_t seed) {
  auto a = t.algebra();
  if (name == "k") return residue_field(a);
  if (name == "m") return maximal_ideal(a);
  if (name == "R") return free_module(a, 1);
  if (name == "K") return canonical_module(a);
  if (name == "cyclic") {
    const F& field = a->field();
    std::mt19937_64 rng(seed);
    SparseVector<F> elem;
    if (a->dim() > 1) {
      std::uniform_int_distribution<Index> pick(1, static_cast<Index>(a->dim() - 1));
      std::uniform_int_distribution<long long> coeff(1, 9);
      std::map<Index, long long> terms;
      for (int k = 0; k < 2; ++k) terms[pick(rng)] = coeff(rng);
      for (const auto& [i, c] : terms) elem.push_back({i, field.from_int(c)});
    }
    auto m = cyclic_module(a, {elem});
    return m;
  }
  throw Error("unknown module '" + name + "' (use k, m, R, K or cyclic)");
}

}  // namespace

MonotonicityReport Session::monotonicity(const std::string& module, std::size_t a, std::size_t b, std::size_t bound) {
  return impl_->visit([&](auto& t) {
    auto m = named_module(t, module, impl_->options.seed);
    return monotonicity_check(t, m, a, b, bound);
  });
}

Json Session::simple_summand_json(std::size_t n, bool with_maps) {
  return impl_->visit([&](auto& t) {
    Json j = to_json(t.simple_summand(n), with_maps);
    j["syzygy"] = n;
    return j;
  });
}

Json Session::syzygy_summand_json(std::size_t a, std::size_t b, bool with_maps) {
  return impl_->visit([&](auto& t) {
    Json j = to_json(syzygy_summand_test(t, a, b), with_maps);
    j["a"] = a;
    j["b"] = b;
    return j;
  });
}

Json Session::decompose_syzygy_json(std::size_t n, bool with_maps) {
  return impl_->visit([&](auto& t) -> Json {
    using F = typename std::decay_t<decltype(t)>::Field;
    if constexpr (!F::kIsPrime) {
      throw UnsupportedField("decomposition needs a prime field");
    } else {
      Json j = to_json(t.decomposition(n), with_maps);
      j["label"] = "syz_" + std::to_string(n) + "(k)";
      return j;
    }
  });
}

}  // namespace artinian
