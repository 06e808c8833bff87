#include "artinian/decomposition.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <random>

namespace artinian {

namespace {

// Univariate polynomials over F_p, coefficients from low to high degree, no trailing zeros.
class PolyArith {
 public:
  using Poly = std::vector<std::uint32_t>;

  explicit PolyArith(const PrimeField& f) : f_(f) {}

  void trim(Poly& a) const {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  int degree(const Poly& a) const { return static_cast<int>(a.size()) - 1; }
  Poly monic(Poly a) const {
    trim(a);
    if (a.empty()) return a;
    auto inv = f_.inv(a.back());
    for (auto& c : a) c = f_.mul(c, inv);
    return a;
  }
  Poly sub(Poly a, const Poly& b) const {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = f_.sub(a[i], b[i]);
    trim(a);
    return a;
  }
  Poly mul(const Poly& a, const Poly& b) const {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = f_.add(out[i + j], f_.mul(a[i], b[j]));
    }
    trim(out);
    return out;
  }
  // Quotient and remainder by a nonzero divisor.
  std::pair<Poly, Poly> divmod(Poly a, const Poly& m) const {
    trim(a);
    int dm = degree(m);
    if (degree(a) < dm) return {{}, a};
    auto lead_inv = f_.inv(m.back());
    Poly q(a.size() - m.size() + 1, 0);
    for (int k = degree(a); k >= dm; --k) {
      auto c = f_.mul(a[k], lead_inv);
      q[k - dm] = c;
      if (c == 0) continue;
      for (int j = 0; j <= dm; ++j) f_.sub_mul(a[k - dm + j], c, m[j]);
    }
    a.resize(dm);
    trim(a);
    trim(q);
    return {q, a};
  }
  Poly mod(const Poly& a, const Poly& m) const { return divmod(a, m).second; }
  Poly gcd(Poly a, Poly b) const {
    trim(a);
    trim(b);
    while (!b.empty()) {
      Poly r = mod(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }
  Poly derivative(const Poly& a) const {
    Poly out;
    for (std::size_t i = 1; i < a.size(); ++i) out.push_back(f_.mul(a[i], f_.from_int(static_cast<long long>(i))));
    trim(out);
    return out;
  }
  Poly powmod(Poly base, mpz_class e, const Poly& m) const {
    Poly result{1};
    result = mod(result, m);
    base = mod(base, m);
    while (e > 0) {
      if (mpz_odd_p(e.get_mpz_t())) result = mod(mul(result, base), m);
      base = mod(mul(base, base), m);
      e >>= 1;
    }
    return result;
  }
  // Product of the distinct monic irreducible factors.
  Poly radical(const Poly& a) const {
    Poly m = monic(a);
    if (degree(m) <= 0) return m;
    Poly d = derivative(m);
    if (d.empty()) {
      std::uint32_t p = f_.characteristic();
      Poly root;
      for (std::size_t i = 0; i < m.size(); i += p) root.push_back(m[i]);
      return radical(root);
    }
    Poly g = gcd(m, d);
    Poly w = monic(divmod(m, g).first);
    if (degree(g) <= 0) return w;
    Poly rg = radical(g);
    Poly common = gcd(w, rg);
    return monic(mul(w, divmod(rg, common).first));
  }
  Poly lcm(const Poly& a, const Poly& b) const {
    if (degree(a) <= 0) return monic(b);
    if (degree(b) <= 0) return monic(a);
    return monic(mul(a, divmod(b, gcd(a, b)).first));
  }

  // A proper monic factor of a squarefree monic polynomial, if it is reducible.
  template <class Rng>
  std::optional<Poly> proper_factor(const Poly& s, Rng& rng) const {
    const int n = degree(s);
    if (n <= 1) return std::nullopt;
    const std::uint32_t p = f_.characteristic();
    Poly x{0, 1};
    Poly h = mod(x, s);
    for (int d = 1; d <= n; ++d) {
      h = powmod(h, p, s);
      Poly g = gcd(s, sub(h, x));
      if (degree(g) <= 0) continue;
      if (degree(g) < n) return g;
      if (n == d) return std::nullopt;
      return split_equal_degree(s, d, rng);
    }
    return std::nullopt;
  }

 private:
  template <class Rng>
  std::optional<Poly> split_equal_degree(const Poly& s, int d, Rng& rng) const {
    const int n = degree(s);
    const std::uint32_t p = f_.characteristic();
    std::uniform_int_distribution<std::uint32_t> coef(0, p - 1);
    mpz_class q;
    mpz_ui_pow_ui(q.get_mpz_t(), p, static_cast<unsigned long>(d));
    for (int attempt = 0; attempt < 256; ++attempt) {
      Poly a(n);
      for (auto& c : a) c = coef(rng);
      trim(a);
      if (degree(a) <= 0) continue;
      Poly b;
      if (p == 2) {
        Poly t = mod(a, s);
        b = t;
        for (int i = 1; i < d; ++i) {
          t = mod(mul(t, t), s);
          Poly sum = b;
          if (sum.size() < t.size()) sum.resize(t.size(), 0);
          for (std::size_t k = 0; k < t.size(); ++k) sum[k] = f_.add(sum[k], t[k]);
          trim(sum);
          b = sum;
        }
      } else {
        b = sub(powmod(a, (q - 1) / 2, s), Poly{1});
      }
      Poly g = gcd(s, b);
      if (degree(g) > 0 && degree(g) < n) return g;
    }
    return std::nullopt;
  }

  PrimeField f_;
};

template <class F>
typename F::Elem random_elem(const F& field, std::mt19937_64& rng) {
  if constexpr (F::kIsPrime) {
    std::uniform_int_distribution<std::uint32_t> d(0, field.characteristic() - 1);
    return d(rng);
  } else {
    std::uniform_int_distribution<long long> d(-50, 50);
    return field.from_int(d(rng));
  }
}

template <class F>
SparseVector<F> random_combination(const F& field, const std::vector<SparseVector<F>>& basis, Index ambient,
                                   std::mt19937_64& rng) {
  Accumulator<F> acc(field, std::max<Index>(ambient, 1));
  for (const auto& b : basis) acc.add_scaled(b, random_elem(field, rng));
  return acc.take();
}

template <class F>
std::vector<Key> block_keys(const ActionModule<F>& m, DegreeInterner& interner, const Degree& shift = {}) {
  return module_keys(m, interner, shift);
}

// Dense copy of the diagonal block of a degree-preserving endomorphism.
template <class F>
DenseMatrix<F> diagonal_block(const ExactMatrix<F>& f, const BlockPartition& blocks, const std::vector<Key>& keys,
                              Key k) {
  const auto& mem = blocks.members[k];
  DenseMatrix<F> d(f.field(), static_cast<Index>(mem.size()), static_cast<Index>(mem.size()));
  for (Index c = 0; c < mem.size(); ++c)
    for (const auto& e : f.column(mem[c])) {
      if (keys[e.index] != k) throw InvariantViolation("endomorphism does not preserve degrees");
      d(blocks.local[e.index], c) = e.value;
    }
  return d;
}

template <class F>
DenseMatrix<F> poly_at(const PolyArith::Poly& u, const DenseMatrix<F>& a) {
  const F& f = a.field();
  const Index n = a.rows();
  DenseMatrix<F> out(f, n, n);
  for (std::size_t k = u.size(); k-- > 0;) {
    out = out * a;
    for (Index i = 0; i < n; ++i) out(i, i) = f.add(out(i, i), f.from_int(u[k]));
  }
  return out;
}

template <class F>
ExactMatrix<F> columns_matrix(const F& field, Index rows, const std::vector<SparseVector<F>>& cols) {
  return ExactMatrix<F>::from_columns(field, rows, cols);
}

template <class F>
struct Piece {
  ActionModule<F> module;
  ExactMatrix<F> inclusion;
  ExactMatrix<F> projection;
};

// Tries random degree-0 endomorphisms; returns the two Fitting components when one splits.
template <class F>
std::optional<std::pair<Piece<F>, Piece<F>>> try_split(const Piece<F>& piece, const HomSpace<F>& end,
                                                       std::size_t trials, std::mt19937_64& rng,
                                                       std::size_t& used) {
  const auto& p = piece.module;
  const F& field = p.field();
  DegreeInterner interner;
  std::vector<Key> keys = block_keys(p, interner);
  Key nk = key_count(keys, {});
  BlockPartition blocks(keys, nk);
  PolyArith pa{PrimeField(field.characteristic())};
  const Index ambient = static_cast<Index>(end.generators().size()) * p.dim;
  for (std::size_t t = 0; t < trials; ++t) {
    ++used;
    ExactMatrix<F> fm = end.to_matrix(random_combination(field, end.basis(), ambient, rng));
    std::vector<DenseMatrix<F>> dense;
    PolyArith::Poly s{1};
    for (Key k = 0; k < nk; ++k) {
      dense.push_back(diagonal_block(fm, blocks, keys, k));
      if (blocks.members[k].empty()) continue;
      auto cp = dense.back().charpoly();
      s = pa.lcm(s, pa.radical(PolyArith::Poly(cp.begin(), cp.end())));
    }
    auto u = pa.proper_factor(s, rng);
    if (!u) continue;
    std::vector<SparseVector<F>> kvecs, ivecs;
    std::vector<std::vector<std::vector<typename F::Elem>>> kloc(nk), iloc(nk);
    for (Key k = 0; k < nk; ++k) {
      const auto& mem = blocks.members[k];
      if (mem.empty()) continue;
      DenseMatrix<F> power = poly_at(*u, dense[k]);
      for (std::size_t e = 1; e < mem.size(); e *= 2) power = power * power;
      kloc[k] = power.kernel();
      iloc[k] = power.column_basis();
      for (auto* group : {&kloc[k], &iloc[k]})
        for (const auto& v : *group) {
          SparseVector<F> w;
          for (Index i = 0; i < mem.size(); ++i)
            if (!field.is_zero(v[i])) w.push_back({mem[i], v[i]});
          (group == &kloc[k] ? kvecs : ivecs).push_back(std::move(w));
        }
    }
    if (kvecs.empty() || ivecs.empty()) continue;
    if (kvecs.size() + ivecs.size() != p.dim) throw InvariantViolation("Fitting components do not fill the module");
    // Projections from the per-block change of basis [K | I].
    std::vector<SparseVector<F>> proj_k(p.dim), proj_i(p.dim);
    Index koff = 0, ioff = 0;
    std::vector<SparseVector<F>> kcols, icols;
    for (Key k = 0; k < nk; ++k) {
      const auto& mem = blocks.members[k];
      if (mem.empty()) continue;
      const Index n = static_cast<Index>(mem.size());
      const Index nkk = static_cast<Index>(kloc[k].size());
      DenseMatrix<F> basis(field, n, n);
      for (Index c = 0; c < n; ++c) {
        const auto& v = c < nkk ? kloc[k][c] : iloc[k][c - nkk];
        for (Index i = 0; i < n; ++i) basis(i, c) = v[i];
      }
      auto inv = basis.inverse();
      if (!inv) throw InvariantViolation("Fitting components are not complementary");
      for (Index i = 0; i < n; ++i) {
        SparseVector<F> ck, ci;
        for (Index c = 0; c < n; ++c) {
          const auto& x = (*inv)(c, i);
          if (field.is_zero(x)) continue;
          if (c < nkk)
            ck.push_back({koff + c, x});
          else
            ci.push_back({ioff + c - nkk, x});
        }
        proj_k[mem[i]] = std::move(ck);
        proj_i[mem[i]] = std::move(ci);
      }
      koff += nkk;
      ioff += n - nkk;
    }
    // Submodules in the same (block-major) order as the projection coordinates.
    auto make = [&](std::vector<SparseVector<F>>& vecs, std::vector<SparseVector<F>>& proj, Index dim,
                    const char* tag) {
      Piece<F> out{ActionModule<F>{}, ExactMatrix<F>(field, 0, 0), ExactMatrix<F>(field, 0, 0)};
      ExactMatrix<F> inc = columns_matrix(field, p.dim, vecs);
      ExactMatrix<F> pr = ExactMatrix<F>::from_columns(field, dim, proj);
      ActionModule<F> sub;
      sub.algebra = p.algebra;
      sub.dim = dim;
      sub.graded = p.graded;
      sub.label = p.label + tag;
      if (p.graded)
        for (const auto& v : vecs) sub.degrees.push_back(p.degrees[v.front().index]);
      for (std::size_t i = 0; i < p.action.size(); ++i) sub.action.push_back(matmul(pr, matmul(p.action[i], inc)));
      out.module = std::move(sub);
      out.inclusion = matmul(piece.inclusion, inc);
      out.projection = matmul(pr, piece.projection);
      return out;
    };
    Piece<F> a = make(kvecs, proj_k, static_cast<Index>(kvecs.size()), "/0");
    Piece<F> b = make(ivecs, proj_i, static_cast<Index>(ivecs.size()), "/1");
    return std::make_pair(std::move(a), std::move(b));
  }
  return std::nullopt;
}

template <class F>
HomSpace<F> endomorphisms(const ActionModule<F>& m) {
  return m.graded ? HomSpace<F>(m, m, Degree{}) : HomSpace<F>(m, m);
}

// Shift d with B = A(d) on degree multisets, if one exists.
template <class F>
std::optional<Degree> degree_shift(const ActionModule<F>& a, const ActionModule<F>& b) {
  if (!both_graded(a, b)) return Degree{};
  auto da = a.degrees, db = b.degrees;
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da.empty()) return Degree{};
  Degree d = db.front() - da.front();
  for (std::size_t i = 0; i < da.size(); ++i)
    if (da[i] + d != db[i]) return std::nullopt;
  return d;
}

template <class F>
ExactMatrix<F> dense_to_exact(const DenseMatrix<F>& d) {
  ExactMatrix<F> out(d.field(), d.rows(), d.cols());
  for (Index c = 0; c < d.cols(); ++c) {
    SparseVector<F> col;
    for (Index r = 0; r < d.rows(); ++r)
      if (!d.field().is_zero(d(r, c))) col.push_back({r, d(r, c)});
    out.set_column(c, std::move(col));
  }
  return out;
}

template <class F>
DenseMatrix<F> exact_to_dense(const ExactMatrix<F>& m) {
  DenseMatrix<F> d(m.field(), m.rows(), m.cols());
  for (Index c = 0; c < m.cols(); ++c)
    for (const auto& e : m.column(c)) d(e.index, c) = e.value;
  return d;
}

template <class F>
bool find_iso_impl(const ActionModule<F>& a, const ActionModule<F>& b, std::uint64_t seed, std::size_t trials,
                   bool& definitive, std::optional<std::pair<ExactMatrix<F>, ExactMatrix<F>>>& out) {
  definitive = false;
  if (a.dim != b.dim) {
    definitive = true;
    return false;
  }
  auto shift = degree_shift(a, b);
  if (!shift) {
    definitive = true;
    return false;
  }
  const bool graded = both_graded(a, b);
  HomSpace<F> hom = graded ? HomSpace<F>(a, b, *shift) : HomSpace<F>(a, b);
  if (hom.dim() == 0) {
    definitive = true;
    return false;
  }
  std::mt19937_64 rng(seed);
  const Index ambient = static_cast<Index>(hom.generators().size()) * b.dim;
  for (std::size_t t = 0; t < trials; ++t) {
    SparseVector<F> images = hom.dim() == 1 && t == 0 ? hom.basis()[0]
                                                       : random_combination(a.field(), hom.basis(), ambient, rng);
    ExactMatrix<F> f = hom.to_matrix(images);
    auto inv = invert_map(f, a, b, *shift);
    if (inv) {
      out = std::make_pair(std::move(f), std::move(*inv));
      return true;
    }
    if (hom.dim() == 1) {
      definitive = true;
      return false;
    }
  }
  return false;
}

}  // namespace

std::string refutation_name(Refutation r) {
  switch (r) {
    case Refutation::None:
      return "none";
    case Refutation::Dimension:
      return "Dimension";
    case Refutation::Invariants:
      return "Invariants";
    case Refutation::SocleCriterion:
      return "SocleCriterion";
    case Refutation::FreeRank:
      return "FreeRank";
    case Refutation::DecompositionMismatch:
      return "DecompositionMismatch";
    case Refutation::SearchExhausted:
      return "SearchExhausted";
  }
  return "unknown";
}

template <class F>
bool is_equivariant(const ExactMatrix<F>& f, const ActionModule<F>& source, const ActionModule<F>& target) {
  if (f.rows() != target.dim || f.cols() != source.dim) return false;
  for (std::size_t i = 0; i < source.action.size(); ++i)
    if (!(matmul(target.action[i], f) == matmul(f, source.action[i]))) return false;
  return true;
}

template <class F>
std::optional<ExactMatrix<F>> invert_map(const ExactMatrix<F>& f, const ActionModule<F>& source,
                                         const ActionModule<F>& target, const Degree& shift) {
  if (f.rows() != f.cols() || source.dim != target.dim || f.cols() != source.dim) return std::nullopt;
  const F& field = f.field();
  const Index n = source.dim;
  std::vector<Key> ck(n, 0), rk(n, 0);
  if (both_graded(source, target)) {
    DegreeInterner interner;
    ck = module_keys(source, interner, shift);
    rk = module_keys(target, interner);
  }
  Key nk = key_count(rk, ck);
  BlockPartition rows(rk, nk), cols(ck, nk);
  std::vector<SparseVector<F>> inv_cols(n);
  for (Key k = 0; k < nk; ++k) {
    const auto& cm = cols.members[k];
    const auto& rm = rows.members[k];
    if (cm.size() != rm.size()) return std::nullopt;
    if (cm.empty()) continue;
    const Index m = static_cast<Index>(cm.size());
    DenseMatrix<F> block(field, m, m);
    for (Index c = 0; c < m; ++c)
      for (const auto& e : f.column(cm[c])) {
        if (rk[e.index] != k) return std::nullopt;
        block(rows.local[e.index], c) = e.value;
      }
    auto inv = block.inverse();
    if (!inv) return std::nullopt;
    for (Index r = 0; r < m; ++r) {
      SparseVector<F> col;
      for (Index c = 0; c < m; ++c)
        if (!field.is_zero((*inv)(c, r))) col.push_back({cm[c], (*inv)(c, r)});
      std::sort(col.begin(), col.end(), [](const auto& x, const auto& y) { return x.index < y.index; });
      inv_cols[rm[r]] = std::move(col);
    }
  }
  return ExactMatrix<F>::from_columns(field, n, std::move(inv_cols));
}

template <class F>
std::optional<std::pair<ExactMatrix<F>, ExactMatrix<F>>> find_isomorphism(const ActionModule<F>& a,
                                                                          const ActionModule<F>& b,
                                                                          std::uint64_t seed, std::size_t trials) {
  bool definitive = false;
  std::optional<std::pair<ExactMatrix<F>, ExactMatrix<F>>> out;
  find_iso_impl(a, b, seed, trials, definitive, out);
  return out;
}

template <class F>
DecompositionReport<F> decompose(const ActionModule<F>& m, const DecompositionOptions& opts) {
  if constexpr (!F::kIsPrime) {
    throw UnsupportedField("module decomposition needs a prime field");
  } else {
    DecompositionReport<F> rep;
    rep.label = m.label;
    rep.dim = m.dim;
    rep.seed = opts.seed;
    if (m.dim == 0) {
      rep.verified = true;
      return rep;
    }
    const F& field = m.field();
    std::mt19937_64 rng(opts.seed);
    std::vector<Piece<F>> pending;
    pending.push_back({m, ExactMatrix<F>::identity(field, m.dim), ExactMatrix<F>::identity(field, m.dim)});
    while (!pending.empty()) {
      Piece<F> piece = std::move(pending.back());
      pending.pop_back();
      HomSpace<F> end = endomorphisms(piece.module);
      bool proven = end.dim() <= 1;
      if (!proven) {
        auto split = try_split(piece, end, opts.trials, rng, rep.trials);
        if (split) {
          pending.push_back(std::move(split->second));
          pending.push_back(std::move(split->first));
          continue;
        }
        rep.monte_carlo = true;
      }
      Summand<F> s{std::move(piece.module), std::move(piece.inclusion), std::move(piece.projection), proven, 0};
      rep.summands.push_back(std::move(s));
    }
    // Isomorphism classes, in order of first appearance.
    for (std::size_t i = 0; i < rep.summands.size(); ++i) {
      auto& si = rep.summands[i];
      si.module.label = m.label + "[" + std::to_string(i) + "]";
      bool placed = false;
      for (std::size_t c = 0; c < rep.class_representative.size() && !placed; ++c) {
        const auto& rmod = rep.summands[rep.class_representative[c]].module;
        if (rmod.dim != si.module.dim) continue;
        if (find_isomorphism(si.module, rmod, opts.seed + i * 7919 + c, opts.iso_trials)) {
          si.iso_class = c;
          ++rep.class_multiplicity[c];
          placed = true;
        }
      }
      if (!placed) {
        si.iso_class = rep.class_representative.size();
        rep.class_representative.push_back(i);
        rep.class_multiplicity.push_back(1);
      }
    }
    rep.verified = verify_decomposition(m, rep);
    if (!rep.verified) throw InvariantViolation("decomposition certificate failed verification");
    return rep;
  }
}

template <class F>
bool verify_decomposition(const ActionModule<F>& m, const DecompositionReport<F>& rep) {
  const F& field = m.field();
  ExactMatrix<F> total(field, m.dim, m.dim);
  std::size_t dims = 0;
  for (std::size_t i = 0; i < rep.summands.size(); ++i) {
    const auto& s = rep.summands[i];
    dims += s.module.dim;
    if (!is_equivariant(s.inclusion, s.module, m) || !is_equivariant(s.projection, m, s.module)) return false;
    for (std::size_t j = 0; j < rep.summands.size(); ++j) {
      ExactMatrix<F> pij = matmul(s.projection, rep.summands[j].inclusion);
      if (i == j ? !pij.is_identity() : !pij.is_zero()) return false;
    }
    total = add(total, matmul(s.inclusion, s.projection));
  }
  return dims == m.dim && total.is_identity();
}

template <class F>
bool SummandCertificate<F>::verify(const ActionModule<F>& a, const ActionModule<F>& b) const {
  if (!split || !f || !g) return false;
  if (f->rows() != b.dim || f->cols() != a.dim || g->rows() != a.dim || g->cols() != b.dim) return false;
  if (!is_equivariant(*f, a, b) || !is_equivariant(*g, b, a)) return false;
  ExactMatrix<F> gf = matmul(*g, *f);
  return a.dim == 0 ? true : gf.is_identity();
}

template <class F>
SummandCertificate<F> simple_summand_test(const ActionModule<F>& m) {
  SummandCertificate<F> cert;
  cert.method = "socle criterion";
  cert.proof = true;
  const F& field = m.field();
  if (m.dim == 0) {
    cert.refutation = Refutation::Dimension;
    return cert;
  }
  Subspace<F> rad = radical(m);
  Echelon<F> ech(field, m.dim);
  for (const auto& v : rad.basis) ech.insert(v);
  for (const auto& v : module_socle(m).basis) {
    SparseVector<F> r = ech.reduce(v);
    if (r.empty()) continue;
    // A functional vanishing on mM with value 1 at v.
    const Index c = r.front().index;
    const auto scale = field.inv(r.front().value);
    ExactMatrix<F> g(field, 1, m.dim);
    for (Index j = 0; j < m.dim; ++j) {
      SparseVector<F> rj = ech.reduce(unit_vector(field, j));
      for (const auto& e : rj)
        if (e.index == c) g.set_column(j, {{0, field.mul(e.value, scale)}});
    }
    ExactMatrix<F> f(field, m.dim, 1);
    f.set_column(0, v);
    cert.split = true;
    cert.f = std::move(f);
    cert.g = std::move(g);
    return cert;
  }
  cert.refutation = Refutation::SocleCriterion;
  return cert;
}

namespace {

// Functionals and elements realising the free rank, as k-matrices of Hom(M, R) members.
template <class F>
struct FreePairing {
  std::size_t rank = 0;
  std::vector<ExactMatrix<F>> maps;  // phi_t : M -> R
  std::vector<Index> elements;       // basis indices of M
};

template <class F>
FreePairing<F> free_pairing(const ActionModule<F>& m) {
  const F& field = m.field();
  FreePairing<F> out;
  if (m.dim == 0) return out;
  ActionModule<F> ring = free_module(m.algebra, 1);
  HomSpace<F> hom(m, ring);
  // Row t: v -> coefficient of 1 in phi_t(v).
  Echelon<F> ech(field, m.dim);
  for (Index t = 0; t < hom.dim(); ++t) {
    ExactMatrix<F> phi = hom.basis_matrix(t);
    SparseVector<F> row;
    for (Index v = 0; v < m.dim; ++v) {
      const auto& col = phi.column(v);
      if (!col.empty() && col.front().index == 0) row.push_back({v, col.front().value});
    }
    SparseVector<F> red = ech.reduce(row);
    if (red.empty()) continue;
    out.elements.push_back(red.front().index);
    ech.insert(row);
    out.maps.push_back(std::move(phi));
  }
  out.rank = out.maps.size();
  return out;
}

}  // namespace

template <class F>
std::size_t free_rank(const ActionModule<F>& m) {
  return free_pairing(m).rank;
}

namespace {

template <class F>
SummandCertificate<F> free_summand_certificate(const ActionModule<F>& a, const ActionModule<F>& b) {
  SummandCertificate<F> cert;
  cert.method = "free rank pairing";
  cert.proof = true;
  const F& field = a.field();
  auto gens = generator_indices(a);
  const Index r = static_cast<Index>(gens.size());
  auto pairing = free_pairing(b);
  if (pairing.rank < r) {
    cert.refutation = Refutation::FreeRank;
    return cert;
  }
  // f0 : R^r -> B sends e_j to the chosen element; g0 : B -> R^r stacks the functionals.
  ExactMatrix<F> cover_b = cover_matrix(b, std::vector<Index>(pairing.elements.begin(), pairing.elements.begin() + r));
  std::vector<const ExactMatrix<F>*> parts;
  for (Index j = 0; j < r; ++j) parts.push_back(&pairing.maps[j]);
  ExactMatrix<F> g0 = vstack(field, b.dim, parts);
  DenseMatrix<F> gf = exact_to_dense(matmul(g0, cover_b));
  auto gf_inv = gf.inverse();
  if (!gf_inv) throw InvariantViolation("free pairing minor is singular");
  ExactMatrix<F> cover_a = cover_matrix(a, gens);
  auto cover_a_inv = exact_to_dense(cover_a).inverse();
  if (!cover_a_inv) throw InvariantViolation("free module cover is not invertible");
  cert.f = matmul(cover_b, dense_to_exact(*cover_a_inv));
  cert.g = matmul(cover_a, matmul(dense_to_exact(*gf_inv), g0));
  cert.split = true;
  return cert;
}

template <class F>
SummandCertificate<F> match_decompositions(const ActionModule<F>& a, const DecompositionReport<F>& da,
                                           const ActionModule<F>& b, const DecompositionReport<F>& db,
                                           const DecompositionOptions& opts) {
  SummandCertificate<F> cert;
  cert.method = "decomposition matching";
  cert.seed = opts.seed;
  cert.trials = da.trials + db.trials;
  const F& field = a.field();
  std::vector<char> used(db.summands.size(), 0);
  ExactMatrix<F> f(field, b.dim, a.dim), g(field, a.dim, b.dim);
  bool certain = !da.monte_carlo && !db.monte_carlo;
  std::map<std::pair<std::size_t, std::size_t>, bool> class_iso;  // (class in A, class in B)
  for (std::size_t i = 0; i < da.summands.size(); ++i) {
    const auto& si = da.summands[i];
    bool matched = false;
    for (std::size_t j = 0; j < db.summands.size() && !matched; ++j) {
      if (used[j]) continue;
      const auto& sj = db.summands[j];
      if (sj.module.dim != si.module.dim) continue;
      auto key = std::make_pair(si.iso_class, sj.iso_class);
      auto known = class_iso.find(key);
      if (known != class_iso.end() && !known->second) continue;
      bool definitive = false;
      std::optional<std::pair<ExactMatrix<F>, ExactMatrix<F>>> iso;
      find_iso_impl(si.module, sj.module, opts.seed + 104729 * (i + 1) + j, opts.iso_trials, definitive, iso);
      if (!iso) {
        if (!definitive) certain = false;
        if (known == class_iso.end()) class_iso[key] = false;
        continue;
      }
      class_iso[key] = true;
      used[j] = 1;
      matched = true;
      f = add(f, matmul(sj.inclusion, matmul(iso->first, si.projection)));
      g = add(g, matmul(si.inclusion, matmul(iso->second, sj.projection)));
    }
    if (!matched) {
      cert.refutation = certain ? Refutation::DecompositionMismatch : Refutation::SearchExhausted;
      cert.proof = certain;
      return cert;
    }
  }
  cert.split = true;
  cert.proof = true;
  cert.f = std::move(f);
  cert.g = std::move(g);
  if (!cert.verify(a, b)) throw InvariantViolation("assembled summand certificate failed verification");
  return cert;
}

template <class F>
std::optional<SummandCertificate<F>> special_cases(const ActionModule<F>& a, const ActionModule<F>& b) {
  if (a.algebra->hash() != b.algebra->hash()) throw Error("summand test between modules over different algebras");
  const F& field = a.field();
  if (a.dim == 0) {
    SummandCertificate<F> cert;
    cert.method = "zero module";
    cert.split = cert.proof = true;
    cert.f = ExactMatrix<F>(field, b.dim, 0);
    cert.g = ExactMatrix<F>(field, 0, b.dim);
    return cert;
  }
  if (a.dim > b.dim) {
    SummandCertificate<F> cert;
    cert.method = "dimension";
    cert.proof = true;
    cert.refutation = Refutation::Dimension;
    return cert;
  }
  if (a.dim == 1) {
    auto cert = simple_summand_test(b);
    if (cert.split) {
      // a is k with basis vector e_0; reuse the maps directly.
      if (!cert.verify(a, b)) throw InvariantViolation("simple summand certificate failed verification");
    }
    return cert;
  }
  const Index d = static_cast<Index>(a.algebra->dim());
  if (generator_indices(a).size() * d == a.dim) {
    auto cert = free_summand_certificate(a, b);
    if (cert.split && !cert.verify(a, b)) throw InvariantViolation("free summand certificate failed verification");
    return cert;
  }
  return std::nullopt;
}

}  // namespace

template <class F>
SummandCertificate<F> summand_test(const ActionModule<F>& a, const ActionModule<F>& b,
                                   const DecompositionOptions& opts) {
  if (auto c = special_cases(a, b)) return *c;
  if constexpr (!F::kIsPrime) {
    throw UnsupportedField("general summand tests need a prime field");
  } else {
    auto da = decompose(a, opts);
    auto db = decompose(b, opts);
    return match_decompositions(a, da, b, db, opts);
  }
}

template <class F>
SummandCertificate<F> summand_test(const ActionModule<F>& a, const DecompositionReport<F>& da,
                                   const ActionModule<F>& b, const DecompositionReport<F>& db,
                                   const DecompositionOptions& opts) {
  if (auto c = special_cases(a, b)) return *c;
  if constexpr (!F::kIsPrime) {
    throw UnsupportedField("general summand tests need a prime field");
  } else {
    return match_decompositions(a, da, b, db, opts);
  }
}

#define ARTINIAN_INSTANTIATE(F)                                                                               \
  template DecompositionReport<F> decompose(const ActionModule<F>&, const DecompositionOptions&);            \
  template bool verify_decomposition(const ActionModule<F>&, const DecompositionReport<F>&);                 \
  template bool is_equivariant(const ExactMatrix<F>&, const ActionModule<F>&, const ActionModule<F>&);       \
  template std::optional<ExactMatrix<F>> invert_map(const ExactMatrix<F>&, const ActionModule<F>&,           \
                                                    const ActionModule<F>&, const Degree&);                 \
  template std::optional<std::pair<ExactMatrix<F>, ExactMatrix<F>>> find_isomorphism(                        \
      const ActionModule<F>&, const ActionModule<F>&, std::uint64_t, std::size_t);                           \
  template struct SummandCertificate<F>;                                                                     \
  template SummandCertificate<F> simple_summand_test(const ActionModule<F>&);                                \
  template std::size_t free_rank(const ActionModule<F>&);                                                    \
  template SummandCertificate<F> summand_test(const ActionModule<F>&, const ActionModule<F>&,                \
                                              const DecompositionOptions&);                                  \
  template SummandCertificate<F> summand_test(const ActionModule<F>&, const DecompositionReport<F>&,         \
                                              const ActionModule<F>&, const DecompositionReport<F>&,         \
                                              const DecompositionOptions&);

ARTINIAN_INSTANTIATE(PrimeField)
ARTINIAN_INSTANTIATE(RationalField)

}  // namespace artinian
