#include "artinian/resolution.hpp"

#include <algorithm>

namespace artinian {

namespace {

template <class F>
std::vector<Degree> degrees_of(const ActionModule<F>& m, const std::vector<Index>& idx) {
  std::vector<Degree> out;
  for (Index v : idx) out.push_back(m.graded ? m.degrees[v] : Degree{});
  return out;
}

template <class F>
std::vector<Degree> free_degrees(const Algebra<F>& a, const std::vector<Degree>& gens, bool negate = false) {
  std::vector<Degree> out;
  out.reserve(gens.size() * a.dim());
  for (const auto& g : gens)
    for (const auto& d : a.basis_degrees()) out.push_back(negate ? d - g : g + d);
  return out;
}

// Action of variable i on R^r in the basis (j, u) -> j*dim(R) + u.
template <class F>
struct FreeApply {
  const Algebra<F>* a;
  SparseVector<F> operator()(std::size_t i, const SparseVector<F>& v, Accumulator<F>& acc) const {
    const Index d = static_cast<Index>(a->dim());
    const auto& x = a->action(i);
    for (const auto& e : v) {
      Index base = e.index - e.index % d;
      acc.add_scaled(x.column(e.index % d), e.value, base);
    }
    return acc.take();
  }
};

// Block-diagonal action of a module on N^r.
template <class F>
struct SumApply {
  const ActionModule<F>* n;
  SparseVector<F> operator()(std::size_t i, const SparseVector<F>& v, Accumulator<F>& acc) const {
    const Index d = n->dim;
    for (const auto& e : v) acc.add_scaled(n->action[i].column(e.index % d), e.value, e.index - e.index % d);
    return acc.take();
  }
};

template <class F>
SyzygyStep<F> syzygy_step_with(const ActionModule<F>& m, std::vector<Index> gens) {
  const auto& a = *m.algebra;
  const Index d = static_cast<Index>(a.dim());
  SyzygyStep<F> step;
  step.generators = std::move(gens);
  step.generator_degrees = degrees_of(m, step.generators);
  const Index r = static_cast<Index>(step.generators.size());
  ExactMatrix<F> cover = cover_matrix(m, step.generators);
  std::vector<Key> row_keys, col_keys;
  std::vector<Degree> ambient;
  if (m.graded) {
    DegreeInterner interner;
    row_keys = module_keys(m, interner);
    ambient = free_degrees(a, step.generator_degrees);
    col_keys = interner.ids(ambient);
  }
  auto ker = graded_kernel(cover, row_keys, col_keys);
  Subspace<F> s;
  s.ambient = r * d;
  s.basis = std::move(ker.basis);
  s.positions = std::move(ker.free_columns);
  step.syzygy = restrict_action(m.algebra, s, FreeApply<F>{&a}, m.graded, ambient, "syz(" + m.label + ")");
  step.embedding = std::move(s.basis);
  return step;
}

// Columns (j, v) -> j*dimN + v of d tensor N, where d has columns indexed by j.
template <class F>
ExactMatrix<F> tensor_with(const ExactMatrix<F>& dmat, Index dim_r, const ActionModule<F>& n, Index target_rank) {
  const F& field = n.field();
  const Index src = dmat.cols();
  ExactMatrix<F> out(field, target_rank * n.dim, src * n.dim);
  Accumulator<F> acc(field, std::max<Index>(target_rank * n.dim, n.dim));
  Accumulator<F> oacc(field, n.dim);
  for (Index v = 0; v < n.dim; ++v) {
    auto orb = orbit(n, unit_vector(field, v), oacc);
    for (Index j = 0; j < src; ++j) {
      for (const auto& e : dmat.column(j)) {
        Index jp = e.index / dim_r, u = e.index % dim_r;
        acc.add_scaled(orb[u], e.value, jp * n.dim);
      }
      out.set_column(j * n.dim + v, acc.take());
    }
  }
  return out;
}

// phi -> phi o d for Hom(F_i, N) -> Hom(F_{i+1}, N), where F_i has rank hom_rank.
template <class F>
ExactMatrix<F> dual_with(const ExactMatrix<F>& dmat, Index dim_r, const ActionModule<F>& n, Index hom_rank) {
  const F& field = n.field();
  const Index src = dmat.cols();
  std::vector<SparseVector<F>> cols(std::size_t(hom_rank) * n.dim);
  Accumulator<F> oacc(field, n.dim);
  for (Index v = 0; v < n.dim; ++v) {
    auto orb = orbit(n, unit_vector(field, v), oacc);
    for (Index j = 0; j < src; ++j)
      for (const auto& e : dmat.column(j)) {
        Index jp = e.index / dim_r, u = e.index % dim_r;
        auto& col = cols[jp * n.dim + v];
        for (const auto& w : orb[u]) col.push_back({j * n.dim + w.index, field.mul(e.value, w.value)});
      }
  }
  Accumulator<F> acc(field, std::max<Index>(src * n.dim, 1));
  for (auto& col : cols) {
    bool sorted = true;
    for (std::size_t k = 1; k < col.size(); ++k)
      if (col[k - 1].index >= col[k].index) sorted = false;
    if (sorted) continue;
    for (const auto& e : col) acc.add(e.index, e.value);
    col = acc.take();
  }
  return ExactMatrix<F>::from_columns(field, src * n.dim, std::move(cols));
}

}  // namespace

template <class F>
ExactMatrix<F> cover_matrix(const ActionModule<F>& m, const std::vector<Index>& generators) {
  const Index d = static_cast<Index>(m.algebra->dim());
  const F& field = m.field();
  ExactMatrix<F> c(field, m.dim, static_cast<Index>(generators.size()) * d);
  Accumulator<F> acc(field, m.dim);
  for (Index j = 0; j < generators.size(); ++j) {
    auto orb = orbit(m, unit_vector(field, generators[j]), acc);
    for (Index u = 0; u < d; ++u) c.set_column(j * d + u, std::move(orb[u]));
  }
  return c;
}

template <class F>
SyzygyStep<F> syzygy_step(const ActionModule<F>& m) {
  return syzygy_step_with(m, generator_indices(m));
}

template <class F>
FreeResolution<F>::FreeResolution(ActionModule<F> m) {
  syzygies_.push_back(std::move(m));
  embeddings_.emplace_back();
  differentials_.emplace_back();
}

template <class F>
void FreeResolution<F>::ensure_generators(std::size_t n) {
  while (generators_.size() <= n) {
    std::size_t k = generators_.size();
    ensure_syzygy(k);
    generators_.push_back(generator_indices(syzygies_[k]));
    generator_degrees_.push_back(degrees_of(syzygies_[k], generators_[k]));
  }
}

template <class F>
void FreeResolution<F>::ensure_syzygy(std::size_t n) {
  while (syzygies_.size() <= n) {
    std::size_t k = syzygies_.size() - 1;
    ensure_generators(k);
    auto step = syzygy_step_with(syzygies_[k], generators_[k]);
    step.syzygy.label = "syz_" + std::to_string(k + 1) + "(" + syzygies_[0].label + ")";
    syzygies_.push_back(std::move(step.syzygy));
    embeddings_.push_back(std::move(step.embedding));
    differentials_.emplace_back();
  }
}

template <class F>
void FreeResolution<F>::extend_to(std::size_t n) {
  ensure_generators(n);
  for (std::size_t k = 1; k <= n; ++k) differential(k);
}

template <class F>
const ActionModule<F>& FreeResolution<F>::syzygy(std::size_t n) {
  ensure_syzygy(n);
  return syzygies_[n];
}

template <class F>
std::size_t FreeResolution<F>::betti(std::size_t n) {
  ensure_generators(n);
  return generators_[n].size();
}

template <class F>
std::vector<std::size_t> FreeResolution<F>::betti_numbers(std::size_t n) {
  std::vector<std::size_t> b;
  for (std::size_t k = 0; k <= n; ++k) b.push_back(betti(k));
  return b;
}

template <class F>
const std::vector<Index>& FreeResolution<F>::generators(std::size_t n) {
  ensure_generators(n);
  return generators_[n];
}

template <class F>
const std::vector<Degree>& FreeResolution<F>::generator_degrees(std::size_t n) {
  ensure_generators(n);
  return generator_degrees_[n];
}

template <class F>
const ExactMatrix<F>& FreeResolution<F>::differential(std::size_t n) {
  if (n == 0) throw Error("differential index starts at 1");
  ensure_generators(n);
  ensure_generators(n - 1);
  auto& slot = differentials_[n];
  if (!slot) {
    const Index d = static_cast<Index>(algebra()->dim());
    std::vector<SparseVector<F>> cols;
    for (Index g : generators_[n]) cols.push_back(embeddings_[n][g]);
    slot = ExactMatrix<F>::from_columns(algebra()->field(), static_cast<Index>(generators_[n - 1].size()) * d,
                                        std::move(cols));
  }
  return *slot;
}

template <class F>
bool FreeResolution<F>::is_minimal(std::size_t n) {
  const Index d = static_cast<Index>(algebra()->dim());
  for (const auto& col : differential(n).columns())
    for (const auto& e : col)
      if (e.index % d == 0) return false;
  return true;
}

template <class F>
HomSpace<F>::HomSpace(const ActionModule<F>& m, const ActionModule<F>& n, std::optional<Degree> degree)
    : m_(&m), n_(&n), section_(m.field(), 0, 0) {
  if (m.algebra->hash() != n.algebra->hash()) throw Error("Hom between modules over different algebras");
  const auto& a = *m.algebra;
  const F& field = m.field();
  const Index d = static_cast<Index>(a.dim());
  graded_ = m.graded && n.graded;
  full_ = !degree.has_value();
  if (degree && !graded_) throw Error("a degree-restricted Hom needs graded modules");
  auto step = syzygy_step(m);
  generators_ = step.generators;
  generator_degrees_ = step.generator_degrees;
  const Index r = static_cast<Index>(generators_.size());
  auto rel_idx = generator_indices(step.syzygy);
  const Index s = static_cast<Index>(rel_idx.size());

  std::vector<SparseVector<F>> cols(std::size_t(r) * n.dim);
  Accumulator<F> oacc(field, n.dim);
  for (Index v = 0; v < n.dim; ++v) {
    auto orb = orbit(n, unit_vector(field, v), oacc);
    for (Index t = 0; t < s; ++t)
      for (const auto& e : step.embedding[rel_idx[t]]) {
        Index j = e.index / d, u = e.index % d;
        auto& col = cols[j * n.dim + v];
        for (const auto& w : orb[u]) col.push_back({t * n.dim + w.index, field.mul(e.value, w.value)});
      }
  }
  Accumulator<F> acc(field, std::max<Index>(s * n.dim, 1));
  for (auto& col : cols) {
    for (const auto& e : col) acc.add(e.index, e.value);
    col = acc.take();
  }
  ExactMatrix<F> constraint = ExactMatrix<F>::from_columns(field, s * n.dim, std::move(cols));

  std::vector<Key> row_keys, col_keys;
  std::int64_t only = -1;
  DegreeInterner interner;
  if (graded_) {
    for (Index j = 0; j < r; ++j)
      for (Index v = 0; v < n.dim; ++v) {
        ambient_degrees_.push_back(n.degrees[v] - generator_degrees_[j]);
        col_keys.push_back(interner.id(ambient_degrees_.back()));
      }
    for (Index t = 0; t < s; ++t)
      for (Index v = 0; v < n.dim; ++v)
        row_keys.push_back(interner.id(n.degrees[v] - step.syzygy.degrees[rel_idx[t]]));
    if (degree) only = interner.id(*degree);
  }
  auto ker = graded_kernel(constraint, row_keys, col_keys, true, only);
  basis_ = std::move(ker.basis);
  free_columns_ = std::move(ker.free_columns);

  // Section of the cover, block by block.
  ExactMatrix<F> cover = cover_matrix(m, generators_);
  std::vector<Key> mk(m.dim, 0), ck(cover.cols(), 0);
  if (m.graded) {
    DegreeInterner ki;
    mk = module_keys(m, ki);
    ck = ki.ids(free_degrees(a, generator_degrees_));
  }
  Key nk = key_count(mk, ck);
  BlockPartition rows(mk, nk), cs(ck, nk);
  std::vector<SparseVector<F>> sec(m.dim);
  for (Key k = 0; k < nk; ++k) {
    const auto& rk = rows.members[k];
    if (rk.empty()) continue;
    const Index nr = static_cast<Index>(rk.size());
    Echelon<F> ech(field, nr);
    std::vector<Index> chosen;
    std::vector<SparseVector<F>> chosen_cols;
    for (Index c : cs.members[k]) {
      SparseVector<F> w;
      for (const auto& e : cover.column(c)) w.push_back({rows.local[e.index], e.value});
      if (ech.insert(w)) {
        chosen.push_back(c);
        chosen_cols.push_back(std::move(w));
        if (ech.rank() == nr) break;
      }
    }
    if (ech.rank() != nr) throw InvariantViolation("cover is not surjective");
    DenseMatrix<F> block(field, nr, nr);
    for (Index c = 0; c < nr; ++c)
      for (const auto& e : chosen_cols[c]) block(e.index, c) = e.value;
    auto inv = block.inverse();
    if (!inv) throw InvariantViolation("chosen cover columns are dependent");
    for (Index lv = 0; lv < nr; ++lv) {
      SparseVector<F> col;
      for (Index c = 0; c < nr; ++c)
        if (!field.is_zero((*inv)(c, lv))) col.push_back({chosen[c], (*inv)(c, lv)});
      std::sort(col.begin(), col.end(), [](const auto& x, const auto& y) { return x.index < y.index; });
      sec[rk[lv]] = std::move(col);
    }
  }
  section_ = ExactMatrix<F>::from_columns(field, r * d, std::move(sec));
}

template <class F>
ExactMatrix<F> HomSpace<F>::to_matrix(const SparseVector<F>& images) const {
  const auto& n = *n_;
  const F& field = n.field();
  const Index d = static_cast<Index>(n.algebra->dim());
  const Index r = static_cast<Index>(generators_.size());
  std::vector<SparseVector<F>> seg(r);
  for (const auto& e : images) seg[e.index / n.dim].push_back({e.index % n.dim, e.value});
  std::vector<std::vector<SparseVector<F>>> orbs(r);
  Accumulator<F> acc(field, n.dim);
  for (Index j = 0; j < r; ++j)
    if (!seg[j].empty()) orbs[j] = orbit(n, seg[j], acc);
  ExactMatrix<F> out(field, n.dim, m_->dim);
  for (Index v = 0; v < m_->dim; ++v) {
    for (const auto& e : section_.column(v)) {
      Index j = e.index / d, u = e.index % d;
      if (!orbs[j].empty()) acc.add_scaled(orbs[j][u], e.value);
    }
    out.set_column(v, acc.take());
  }
  return out;
}

template <class F>
SparseVector<F> HomSpace<F>::from_matrix(const ExactMatrix<F>& f) const {
  SparseVector<F> out;
  for (Index j = 0; j < generators_.size(); ++j)
    for (const auto& e : f.column(generators_[j])) out.push_back({j * n_->dim + e.index, e.value});
  return out;
}

template <class F>
ActionModule<F> HomSpace<F>::as_module(std::string label) const {
  if (!full_) throw Error("only the full Hom space carries a module structure");
  Subspace<F> s;
  s.ambient = static_cast<Index>(generators_.size()) * n_->dim;
  s.basis = basis_;
  s.positions = free_columns_;
  return restrict_action(n_->algebra, s, SumApply<F>{n_}, graded_, ambient_degrees_, std::move(label));
}

template <class F>
std::vector<std::size_t> tor_dimensions(FreeResolution<F>& res, const ActionModule<F>& n, std::size_t top) {
  const Index d = static_cast<Index>(res.algebra()->dim());
  const bool graded = res.graded() && n.graded;
  res.extend_to(top + 1);
  std::vector<std::size_t> ranks(top + 3, 0);
  for (std::size_t i = 1; i <= top + 1; ++i) {
    const auto& dm = res.differential(i);
    Index tgt = static_cast<Index>(res.betti(i - 1));
    auto t = tensor_with(dm, d, n, tgt);
    std::vector<Key> rk, ck;
    if (graded) {
      DegreeInterner interner;
      for (const auto& g : res.generator_degrees(i - 1))
        for (Index v = 0; v < n.dim; ++v) rk.push_back(interner.id(g + n.degrees[v]));
      for (const auto& g : res.generator_degrees(i))
        for (Index v = 0; v < n.dim; ++v) ck.push_back(interner.id(g + n.degrees[v]));
    }
    ranks[i] = graded_rank(t, rk, ck);
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i <= top; ++i) out.push_back(res.betti(i) * n.dim - ranks[i] - ranks[i + 1]);
  return out;
}

template <class F>
std::vector<std::size_t> ext_dimensions(FreeResolution<F>& res, const ActionModule<F>& n, std::size_t top,
                                        bool stop_at_nonzero, std::size_t from) {
  const Index d = static_cast<Index>(res.algebra()->dim());
  const bool graded = res.graded() && n.graded;
  auto delta_rank = [&](std::size_t i) -> std::size_t {
    auto t = dual_with(res.differential(i + 1), d, n, static_cast<Index>(res.betti(i)));
    std::vector<Key> rk, ck;
    if (graded) {
      DegreeInterner interner;
      for (const auto& g : res.generator_degrees(i + 1))
        for (Index v = 0; v < n.dim; ++v) rk.push_back(interner.id(n.degrees[v] - g));
      for (const auto& g : res.generator_degrees(i))
        for (Index v = 0; v < n.dim; ++v) ck.push_back(interner.id(n.degrees[v] - g));
    }
    return graded_rank(t, rk, ck);
  };
  std::vector<std::size_t> out(from, 0);
  std::size_t prev = from == 0 ? 0 : delta_rank(from - 1);
  for (std::size_t i = from; i <= top; ++i) {
    std::size_t cur = delta_rank(i);
    std::size_t dim = res.betti(i) * n.dim - cur - prev;
    out.push_back(dim);
    prev = cur;
    if (stop_at_nonzero && dim != 0) break;
  }
  return out;
}

template <class F>
DualSequenceReport dual_sequence_check(const ActionModule<F>& nm, std::size_t n, std::size_t extra) {
  DualSequenceReport rep;
  rep.n = n;
  auto a = nm.algebra;
  const F& field = nm.field();
  const Index d = static_cast<Index>(a->dim());
  ActionModule<F> ring = free_module(a, 1);
  FreeResolution<F> res(nm);
  auto ext = ext_dimensions(res, ring, n, true, 1);
  rep.ext_dims = ext;
  for (std::size_t i = 1; i < ext.size(); ++i)
    if (ext[i] != 0) {
      rep.precondition = false;
      rep.first_nonvanishing_ext = i;
      return rep;
    }
  rep.beta = res.betti_numbers(n);
  for (std::size_t i = 1; i <= n; ++i)
    if (!res.is_minimal(i)) rep.dual_minimal = false;
  if (!rep.dual_minimal) rep.violations.push_back("dual differential leaves the maximal ideal");

  // Hom(N, R) as the kernel of the first dual differential inside R^{beta_0}.
  const Index b0 = static_cast<Index>(res.betti(0));
  ExactMatrix<F> delta0 = dual_with(res.differential(1), d, ring, b0);
  std::vector<Key> rk, ck;
  std::vector<Degree> hdeg;
  if (res.graded()) {
    DegreeInterner interner;
    for (const auto& g : res.generator_degrees(1))
      for (Index v = 0; v < d; ++v) rk.push_back(interner.id(a->basis_degrees()[v] - g));
    hdeg = free_degrees(*a, res.generator_degrees(0), true);
    ck = interner.ids(hdeg);
  }
  auto ker = graded_kernel(delta0, rk, ck);
  Subspace<F> hs;
  hs.ambient = b0 * d;
  hs.basis = ker.basis;
  hs.positions = ker.free_columns;
  ActionModule<F> hom_nr = restrict_action(a, hs, FreeApply<F>{a.get()}, res.graded(), hdeg, "Hom(N,R)");
  auto hgens = generator_indices(hom_nr);
  std::vector<SparseVector<F>> rows;
  for (Index g : hgens) {
    SparseVector<F> row;
    for (const auto& e : hs.basis[g])
      if (e.index % d == 0) row.push_back({e.index / d, e.value});
    rows.push_back(std::move(row));
  }
  Echelon<F> ech(field, std::max<Index>(b0, 1));
  for (const auto& row : rows) ech.insert(row);
  rep.rho = ech.rank();
  FreeResolution<F> hres(hom_nr);
  rep.alpha = hres.betti_numbers(extra + 1);
  rep.beta0_prime = rep.beta[0] - rep.rho;
  rep.alpha0_prime = rep.alpha[0] - rep.rho;

  const ActionModule<F>& syz = res.syzygy(n + 1);
  HomSpace<F> dual_space(syz, ring);
  ActionModule<F> dual = dual_space.as_module("Hom(syz,R)");
  std::size_t rank_n = 0;
  {
    ExactMatrix<F> deltan = dual_with(res.differential(n + 1), d, ring, static_cast<Index>(res.betti(n)));
    rank_n = rank(deltan);
  }
  if (rank_n != dual.dim) rep.violations.push_back("image of the dual differential differs from Hom(syz, R)");
  FreeResolution<F> dres(dual);
  rep.dual_syzygy_betti = dres.betti_numbers(n + 1 + extra);
  const auto& db = rep.dual_syzygy_betti;
  for (std::size_t i = 1; i <= n; ++i)
    if (rep.beta[i] != db[n - i])
      rep.violations.push_back("beta_" + std::to_string(i) + " differs from the dual Betti number");
  if (rep.beta0_prime < db[n]) rep.violations.push_back("beta_0' bound fails");
  if (rep.alpha0_prime < db[n + 1]) rep.violations.push_back("alpha_0' bound fails");
  for (std::size_t i = 1; i <= extra; ++i)
    if (rep.alpha[i] < db[n + i + 1])
      rep.violations.push_back("alpha_" + std::to_string(i) + " bound fails");
  return rep;
}

#define ARTINIAN_INSTANTIATE(F)                                                                               \
  template class FreeResolution<F>;                                                                          \
  template class HomSpace<F>;                                                                                \
  template SyzygyStep<F> syzygy_step(const ActionModule<F>&);                                                \
  template ExactMatrix<F> cover_matrix(const ActionModule<F>&, const std::vector<Index>&);                   \
  template std::vector<std::size_t> tor_dimensions(FreeResolution<F>&, const ActionModule<F>&, std::size_t); \
  template std::vector<std::size_t> ext_dimensions(FreeResolution<F>&, const ActionModule<F>&, std::size_t,  \
                                                   bool, std::size_t);                                      \
  template DualSequenceReport dual_sequence_check(const ActionModule<F>&, std::size_t, std::size_t);

ARTINIAN_INSTANTIATE(PrimeField)
ARTINIAN_INSTANTIATE(RationalField)

}  // namespace artinian
