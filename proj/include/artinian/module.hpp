#pragma once

#include <memory>
#include <string>
#include <vector>

#include "artinian/algebra.hpp"

namespace artinian {

template <class F>
struct ActionModule {
  std::shared_ptr<const Algebra<F>> algebra;
  Index dim = 0;
  std::vector<ExactMatrix<F>> action;
  bool graded = false;
  std::vector<Degree> degrees;  // meaningful when graded
  std::string label;

  const F& field() const { return algebra->field(); }
  std::size_t num_variables() const { return algebra->embedding_dimension(); }
};

// A subspace stored by a basis in reduced echelon form: basis[t] has coordinate 1 at
// positions[t] and 0 at every other position.
template <class F>
struct Subspace {
  Index ambient = 0;
  std::vector<SparseVector<F>> basis;
  std::vector<Index> positions;

  Index dim() const { return static_cast<Index>(basis.size()); }
  std::vector<std::int32_t> slot_map() const {
    std::vector<std::int32_t> slot(ambient, -1);
    for (Index t = 0; t < positions.size(); ++t) slot[positions[t]] = static_cast<std::int32_t>(t);
    return slot;
  }
};

template <class F>
SparseVector<F> coordinates_in(const std::vector<std::int32_t>& slot, const SparseVector<F>& v) {
  SparseVector<F> out;
  for (const auto& e : v)
    if (slot[e.index] >= 0) out.push_back({static_cast<Index>(slot[e.index]), e.value});
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.index < b.index; });
  return out;
}

// Block labels for a module's basis; all zero when ungraded.
template <class F>
std::vector<Key> module_keys(const ActionModule<F>& m, DegreeInterner& keys, const Degree& shift = {}) {
  std::vector<Key> out(m.dim, 0);
  if (m.graded)
    for (Index i = 0; i < m.dim; ++i) out[i] = keys.id(m.degrees[i] + shift);
  return out;
}

template <class F>
bool both_graded(const ActionModule<F>& a, const ActionModule<F>& b) {
  return a.graded && b.graded;
}

// Module whose basis is a submodule of an ambient space; apply(i, v, acc) is the
// ambient action of variable i.
template <class F, class ApplyFn>
ActionModule<F> restrict_action(std::shared_ptr<const Algebra<F>> algebra, const Subspace<F>& s, ApplyFn&& apply,
                                bool graded, const std::vector<Degree>& ambient_degrees, std::string label) {
  const F& field = algebra->field();
  ActionModule<F> out;
  out.algebra = algebra;
  out.dim = s.dim();
  out.graded = graded;
  out.label = std::move(label);
  if (graded)
    for (Index p : s.positions) out.degrees.push_back(ambient_degrees[p]);
  auto slot = s.slot_map();
  Accumulator<F> acc(field, s.ambient);
  for (std::size_t i = 0; i < algebra->embedding_dimension(); ++i) {
    ExactMatrix<F> x(field, out.dim, out.dim);
    for (Index t = 0; t < out.dim; ++t) x.set_column(t, coordinates_in<F>(slot, apply(i, s.basis[t], acc)));
    out.action.push_back(std::move(x));
  }
  return out;
}

template <class F>
ActionModule<F> residue_field(std::shared_ptr<const Algebra<F>> a);
template <class F>
ActionModule<F> zero_module(std::shared_ptr<const Algebra<F>> a);
template <class F>
ActionModule<F> free_module(std::shared_ptr<const Algebra<F>> a, Index rank,
                            const std::vector<Degree>& generator_degrees = {});
template <class F>
ActionModule<F> maximal_ideal(std::shared_ptr<const Algebra<F>> a);
template <class F>
ActionModule<F> canonical_module(std::shared_ptr<const Algebra<F>> a);
template <class F>
ActionModule<F> direct_sum(const std::vector<const ActionModule<F>*>& parts, std::string label = "");

// R-submodule generated by the given vectors, and the quotient by it.
template <class F>
Subspace<F> generated_submodule(const ActionModule<F>& m, const std::vector<SparseVector<F>>& gens);
template <class F>
ActionModule<F> submodule(const ActionModule<F>& m, const Subspace<F>& s, std::string label = "");
template <class F>
ActionModule<F> quotient_module(const ActionModule<F>& m, const std::vector<SparseVector<F>>& gens,
                                std::string label = "");
// R / (elements); elements are vectors on the algebra basis.
template <class F>
ActionModule<F> cyclic_module(std::shared_ptr<const Algebra<F>> a, const std::vector<SparseVector<F>>& elements);

// Span of homogeneous vectors as a reduced echelon subspace, eliminating per block.
template <class F>
Subspace<F> span_of(const F& field, Index ambient, const std::vector<SparseVector<F>>& vectors,
                    const std::vector<Key>& keys);

template <class F>
void validate_module(const ActionModule<F>& m);

// E_u v for every algebra basis element u.
template <class F>
std::vector<SparseVector<F>> orbit(const ActionModule<F>& m, const SparseVector<F>& v, Accumulator<F>& acc);

// Matrix of the action of an algebra element.
template <class F>
ExactMatrix<F> element_action(const ActionModule<F>& m, const SparseVector<F>& a);

// Basis indices whose unit vectors lift a basis of M / mM.
template <class F>
std::vector<Index> generator_indices(const ActionModule<F>& m);
template <class F>
std::vector<SparseVector<F>> minimal_generators(const ActionModule<F>& m);
// Basis of mM.
template <class F>
Subspace<F> radical(const ActionModule<F>& m);
template <class F>
Subspace<F> module_socle(const ActionModule<F>& m);

template <class F>
bool is_zero_action(const ActionModule<F>& m) {
  for (const auto& x : m.action)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace artinian
