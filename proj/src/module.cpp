#include "artinian/module.hpp"

namespace artinian {

namespace {

template <class F>
Key vector_key(const SparseVector<F>& v, const std::vector<Key>& keys) {
  Key k = keys[v.front().index];
  for (const auto& e : v)
    if (keys[e.index] != k) throw InvariantViolation("vector is not homogeneous");
  return k;
}

}  // namespace

template <class F>
ActionModule<F> residue_field(std::shared_ptr<const Algebra<F>> a) {
  ActionModule<F> m;
  m.algebra = a;
  m.dim = 1;
  m.graded = a->graded();
  m.degrees = {Degree{}};
  m.label = "k";
  for (std::size_t i = 0; i < a->embedding_dimension(); ++i) m.action.emplace_back(a->field(), 1, 1);
  return m;
}

template <class F>
ActionModule<F> zero_module(std::shared_ptr<const Algebra<F>> a) {
  ActionModule<F> m;
  m.algebra = a;
  m.graded = a->graded();
  m.label = "0";
  for (std::size_t i = 0; i < a->embedding_dimension(); ++i) m.action.emplace_back(a->field(), 0, 0);
  return m;
}

template <class F>
ActionModule<F> free_module(std::shared_ptr<const Algebra<F>> a, Index rank,
                            const std::vector<Degree>& generator_degrees) {
  const Index d = static_cast<Index>(a->dim());
  ActionModule<F> m;
  m.algebra = a;
  m.dim = rank * d;
  m.graded = a->graded();
  m.label = rank == 1 ? "R" : "R^" + std::to_string(rank);
  for (Index j = 0; j < rank; ++j)
    for (Index u = 0; u < d; ++u)
      m.degrees.push_back((generator_degrees.empty() ? Degree{} : generator_degrees[j]) + a->basis_degrees()[u]);
  for (std::size_t i = 0; i < a->embedding_dimension(); ++i) {
    ExactMatrix<F> x(a->field(), m.dim, m.dim);
    for (Index j = 0; j < rank; ++j)
      for (Index u = 0; u < d; ++u) {
        auto col = a->action(i).column(u);
        for (auto& e : col) e.index += j * d;
        x.set_column(j * d + u, std::move(col));
      }
    m.action.push_back(std::move(x));
  }
  return m;
}

template <class F>
ActionModule<F> maximal_ideal(std::shared_ptr<const Algebra<F>> a) {
  const Index d = static_cast<Index>(a->dim());
  Subspace<F> s;
  s.ambient = d;
  for (Index u = 1; u < d; ++u) {
    s.basis.push_back(unit_vector(a->field(), u));
    s.positions.push_back(u);
  }
  auto apply = [&](std::size_t i, const SparseVector<F>& v, Accumulator<F>& acc) {
    return a->action(i).apply(v, acc);
  };
  return restrict_action(a, s, apply, a->graded(), a->basis_degrees(), "m");
}

template <class F>
ActionModule<F> canonical_module(std::shared_ptr<const Algebra<F>> a) {
  ActionModule<F> m;
  m.algebra = a;
  m.dim = static_cast<Index>(a->dim());
  m.graded = a->graded();
  m.label = "K_R";
  for (const auto& d : a->basis_degrees()) m.degrees.push_back(Degree{} - d);
  for (const auto& x : a->actions()) m.action.push_back(x.transpose());
  return m;
}

template <class F>
ActionModule<F> direct_sum(const std::vector<const ActionModule<F>*>& parts, std::string label) {
  if (parts.empty()) throw Error("direct sum of no modules");
  auto a = parts[0]->algebra;
  ActionModule<F> m;
  m.algebra = a;
  m.graded = true;
  for (const auto* p : parts) {
    if (p->algebra->hash() != a->hash()) throw Error("direct sum of modules over different algebras");
    m.graded = m.graded && p->graded;
    m.dim += p->dim;
  }
  if (label.empty())
    for (std::size_t k = 0; k < parts.size(); ++k) label += (k ? " + " : "") + parts[k]->label;
  m.label = label;
  for (const auto* p : parts)
    for (Index v = 0; v < p->dim; ++v) m.degrees.push_back(p->graded ? p->degrees[v] : Degree{});
  for (std::size_t i = 0; i < a->embedding_dimension(); ++i) {
    ExactMatrix<F> x(a->field(), m.dim, m.dim);
    Index off = 0;
    for (const auto* p : parts) {
      for (Index c = 0; c < p->dim; ++c) {
        auto col = p->action[i].column(c);
        for (auto& e : col) e.index += off;
        x.set_column(off + c, std::move(col));
      }
      off += p->dim;
    }
    m.action.push_back(std::move(x));
  }
  return m;
}

template <class F>
Subspace<F> span_of(const F& field, Index ambient, const std::vector<SparseVector<F>>& vectors,
                    const std::vector<Key>& keys_in) {
  std::vector<Key> keys = keys_in.empty() ? std::vector<Key>(ambient, 0) : keys_in;
  Key nk = key_count(keys, {});
  BlockPartition blocks(keys, nk);
  std::vector<std::vector<SparseVector<F>>> local(nk);
  for (const auto& v : vectors) {
    if (v.empty()) continue;
    Key k = vector_key<F>(v, keys);
    SparseVector<F> w;
    for (const auto& e : v) w.push_back({blocks.local[e.index], e.value});
    local[k].push_back(std::move(w));
  }
  std::vector<std::pair<Index, SparseVector<F>>> rows;
  for (Key k = 0; k < nk; ++k) {
    if (local[k].empty()) continue;
    Echelon<F> ech(field, static_cast<Index>(blocks.members[k].size()));
    for (const auto& w : local[k]) ech.insert(w);
    ech.fully_reduce();
    for (auto row : ech.rows()) {
      for (auto& e : row) e.index = blocks.members[k][e.index];
      Index p = row.front().index;
      rows.emplace_back(p, std::move(row));
    }
  }
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  Subspace<F> s;
  s.ambient = ambient;
  for (auto& [p, row] : rows) {
    s.positions.push_back(p);
    s.basis.push_back(std::move(row));
  }
  return s;
}

template <class F>
Subspace<F> generated_submodule(const ActionModule<F>& m, const std::vector<SparseVector<F>>& gens) {
  DegreeInterner interner;
  std::vector<Key> keys = module_keys(m, interner);
  bool homogeneous = m.graded;
  for (const auto& g : gens)
    for (const auto& e : g)
      if (keys[e.index] != keys[g.front().index]) homogeneous = false;
  if (!homogeneous) keys.clear();
  Accumulator<F> acc(m.field(), m.dim);
  std::vector<SparseVector<F>> all;
  for (const auto& g : gens) {
    auto orb = orbit(m, g, acc);
    for (auto& v : orb)
      if (!v.empty()) all.push_back(std::move(v));
  }
  return span_of(m.field(), m.dim, all, keys);
}

template <class F>
ActionModule<F> submodule(const ActionModule<F>& m, const Subspace<F>& s, std::string label) {
  auto apply = [&](std::size_t i, const SparseVector<F>& v, Accumulator<F>& acc) {
    return m.action[i].apply(v, acc);
  };
  return restrict_action(m.algebra, s, apply, m.graded, m.degrees, std::move(label));
}

template <class F>
ActionModule<F> quotient_module(const ActionModule<F>& m, const std::vector<SparseVector<F>>& gens,
                                std::string label) {
  const F& field = m.field();
  Subspace<F> s = generated_submodule(m, gens);
  bool graded = m.graded;
  if (graded) {
    DegreeInterner interner;
    auto keys = module_keys(m, interner);
    for (const auto& b : s.basis)
      for (const auto& e : b)
        if (keys[e.index] != keys[b.front().index]) graded = false;
  }
  auto slot = s.slot_map();
  std::vector<std::int32_t> qslot(m.dim, -1);
  std::vector<Index> kept;
  for (Index c = 0; c < m.dim; ++c)
    if (slot[c] < 0) {
      qslot[c] = static_cast<std::int32_t>(kept.size());
      kept.push_back(c);
    }
  ActionModule<F> q;
  q.algebra = m.algebra;
  q.dim = static_cast<Index>(kept.size());
  q.graded = graded;
  q.label = std::move(label);
  if (graded)
    for (Index c : kept) q.degrees.push_back(m.degrees[c]);
  Accumulator<F> acc(field, m.dim);
  for (std::size_t i = 0; i < m.num_variables(); ++i) {
    ExactMatrix<F> x(field, q.dim, q.dim);
    for (Index t = 0; t < q.dim; ++t) {
      const auto& v = m.action[i].column(kept[t]);
      acc.add_scaled(v, field.one());
      for (const auto& e : v)
        if (slot[e.index] >= 0) acc.add_scaled(s.basis[slot[e.index]], field.neg(e.value));
      SparseVector<F> col;
      for (const auto& e : acc.take()) {
        if (qslot[e.index] < 0) throw InvariantViolation("quotient reduction left a pivot entry");
        col.push_back({static_cast<Index>(qslot[e.index]), e.value});
      }
      x.set_column(t, std::move(col));
    }
    q.action.push_back(std::move(x));
  }
  return q;
}

template <class F>
ActionModule<F> cyclic_module(std::shared_ptr<const Algebra<F>> a, const std::vector<SparseVector<F>>& elements) {
  std::string label = "R/(";
  for (std::size_t k = 0; k < elements.size(); ++k) label += (k ? ", " : "") + a->element_to_string(elements[k]);
  label += ")";
  return quotient_module(free_module(a, 1), elements, label);
}

template <class F>
void validate_module(const ActionModule<F>& m) {
  const std::size_t e = m.num_variables();
  if (m.action.size() != e) throw InvariantViolation("module has the wrong number of action matrices");
  for (const auto& x : m.action)
    if (x.rows() != m.dim || x.cols() != m.dim) throw InvariantViolation("action matrix has the wrong shape");
  for (std::size_t i = 0; i < e; ++i)
    for (std::size_t j = i + 1; j < e; ++j)
      if (!(matmul(m.action[i], m.action[j]) == matmul(m.action[j], m.action[i])))
        throw InvariantViolation("module action matrices do not commute");
  const F& field = m.field();
  Accumulator<F> acc(field, m.dim);
  for (const auto& rel : m.algebra->presentation().relations)
    for (Index v = 0; v < m.dim; ++v) {
      Accumulator<F> total(field, m.dim);
      for (const auto& t : rel.terms) {
        SparseVector<F> w = unit_vector(field, v);
        for (std::size_t i = 0; i < e; ++i)
          for (int k = 0; k < t.exponent[i]; ++k) w = m.action[i].apply(w, acc);
        total.add_scaled(w, field.from_rational(t.coeff));
      }
      if (!total.take().empty()) throw InvariantViolation("module action violates a defining relation");
    }
  if (m.graded) {
    for (std::size_t i = 0; i < e; ++i)
      for (Index c = 0; c < m.dim; ++c)
        for (const auto& en : m.action[i].column(c))
          if (m.degrees[en.index] != m.degrees[c] + m.algebra->variable_degree(i))
            throw InvariantViolation("module action does not respect the grading");
  }
}

template <class F>
std::vector<SparseVector<F>> orbit(const ActionModule<F>& m, const SparseVector<F>& v, Accumulator<F>& acc) {
  const auto& a = *m.algebra;
  std::vector<SparseVector<F>> out(a.dim());
  out[0] = v;
  for (Index u = 1; u < a.dim(); ++u) out[u] = m.action[a.parent_variable(u)].apply(out[a.parent(u)], acc);
  return out;
}

template <class F>
ExactMatrix<F> element_action(const ActionModule<F>& m, const SparseVector<F>& a) {
  const F& field = m.field();
  ExactMatrix<F> out(field, m.dim, m.dim);
  Accumulator<F> acc(field, m.dim);
  for (Index v = 0; v < m.dim; ++v) {
    auto orb = orbit(m, unit_vector(field, v), acc);
    for (const auto& t : a) acc.add_scaled(orb[t.index], t.value);
    out.set_column(v, acc.take());
  }
  return out;
}

template <class F>
Subspace<F> radical(const ActionModule<F>& m) {
  DegreeInterner interner;
  std::vector<Key> keys = module_keys(m, interner);
  std::vector<SparseVector<F>> vecs;
  for (const auto& x : m.action)
    for (const auto& c : x.columns())
      if (!c.empty()) vecs.push_back(c);
  return span_of(m.field(), m.dim, vecs, keys);
}

template <class F>
std::vector<Index> generator_indices(const ActionModule<F>& m) {
  Subspace<F> r = radical(m);
  std::vector<char> piv(m.dim, 0);
  for (Index p : r.positions) piv[p] = 1;
  std::vector<Index> out;
  for (Index v = 0; v < m.dim; ++v)
    if (!piv[v]) out.push_back(v);
  return out;
}

template <class F>
std::vector<SparseVector<F>> minimal_generators(const ActionModule<F>& m) {
  std::vector<SparseVector<F>> out;
  for (Index v : generator_indices(m)) out.push_back(unit_vector(m.field(), v));
  return out;
}

template <class F>
Subspace<F> module_socle(const ActionModule<F>& m) {
  const std::size_t e = m.num_variables();
  DegreeInterner interner;
  std::vector<Key> cols = module_keys(m, interner), rows;
  std::vector<const ExactMatrix<F>*> parts;
  for (std::size_t i = 0; i < e; ++i) {
    parts.push_back(&m.action[i]);
    for (Index v = 0; v < m.dim; ++v)
      rows.push_back(m.graded ? interner.id(m.degrees[v] - m.algebra->variable_degree(i)) : 0);
  }
  Subspace<F> s;
  s.ambient = m.dim;
  if (e == 0) {
    for (Index v = 0; v < m.dim; ++v) {
      s.basis.push_back(unit_vector(m.field(), v));
      s.positions.push_back(v);
    }
    return s;
  }
  auto ker = graded_kernel(vstack(m.field(), m.dim, parts), rows, cols);
  s.basis = std::move(ker.basis);
  s.positions = std::move(ker.free_columns);
  return s;
}

#define ARTINIAN_INSTANTIATE(F)                                                                              \
  template ActionModule<F> residue_field(std::shared_ptr<const Algebra<F>>);                                \
  template ActionModule<F> zero_module(std::shared_ptr<const Algebra<F>>);                                  \
  template ActionModule<F> free_module(std::shared_ptr<const Algebra<F>>, Index, const std::vector<Degree>&); \
  template ActionModule<F> maximal_ideal(std::shared_ptr<const Algebra<F>>);                                \
  template ActionModule<F> canonical_module(std::shared_ptr<const Algebra<F>>);                             \
  template ActionModule<F> direct_sum(const std::vector<const ActionModule<F>*>&, std::string);             \
  template Subspace<F> span_of(const F&, Index, const std::vector<SparseVector<F>>&, const std::vector<Key>&); \
  template Subspace<F> generated_submodule(const ActionModule<F>&, const std::vector<SparseVector<F>>&);     \
  template ActionModule<F> submodule(const ActionModule<F>&, const Subspace<F>&, std::string);              \
  template ActionModule<F> quotient_module(const ActionModule<F>&, const std::vector<SparseVector<F>>&,     \
                                           std::string);                                                    \
  template ActionModule<F> cyclic_module(std::shared_ptr<const Algebra<F>>, const std::vector<SparseVector<F>>&); \
  template void validate_module(const ActionModule<F>&);                                                    \
  template std::vector<SparseVector<F>> orbit(const ActionModule<F>&, const SparseVector<F>&, Accumulator<F>&); \
  template ExactMatrix<F> element_action(const ActionModule<F>&, const SparseVector<F>&);                   \
  template Subspace<F> radical(const ActionModule<F>&);                                                     \
  template std::vector<Index> generator_indices(const ActionModule<F>&);                                    \
  template std::vector<SparseVector<F>> minimal_generators(const ActionModule<F>&);                         \
  template Subspace<F> module_socle(const ActionModule<F>&);

ARTINIAN_INSTANTIATE(PrimeField)
ARTINIAN_INSTANTIATE(RationalField)

}  // namespace artinian
