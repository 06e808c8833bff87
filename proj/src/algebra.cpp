#include "artinian/algebra.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace artinian {

std::string fnv1a_hex(const std::string& text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

std::string Degree::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

PrimeField prime_field_of(const Presentation& p) {
  if (!p.field.is_prime_field()) throw FieldMismatch("presentation is over Q, not a prime field");
  return PrimeField(p.field.characteristic);
}

namespace {

const char* kNotArtinian = "increase truncation_degree or ideal not Artinian";

std::vector<Exponent> monomials_up_to(std::size_t nvars, int max_degree) {
  std::vector<Exponent> out;
  Exponent cur(nvars, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == nvars) {
      out.push_back(cur);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      cur[i] = static_cast<std::uint16_t>(k);
      rec(i + 1, left - k);
    }
    cur[i] = 0;
  };
  rec(0, max_degree);
  return out;
}

bool ascending(const Exponent& a, const Exponent& b) { return monomial_order_greater(b, a); }

}  // namespace

template <class F>
std::shared_ptr<const Algebra<F>> build_algebra(const F& field, const Presentation& input) {
  if (!(field.spec() == input.field))
    throw FieldMismatch("presentation field " + input.field.name() + " differs from requested " +
                        field.spec().name());
  std::shared_ptr<Algebra<F>> a(new Algebra<F>(field));
  Presentation& p = a->presentation_;
  p = input;
  const std::size_t e = p.variables.size();
  const int D = p.truncation_degree;
  for (auto& r : p.relations) r.normalize(p.field);
  std::erase_if(p.relations, [](const Polynomial& r) { return r.is_zero(); });
  for (const auto& r : p.relations) {
    if (r.min_degree() < 2) throw Error("relations must lie in the square of the maximal ideal");
    if (r.max_degree() > D) throw Error("truncation degree smaller than a relation degree");
  }
  std::map<Exponent, Index> index_of;

  if (p.is_monomial()) {
    a->monomial_path_ = true;
    std::vector<Exponent> gens;
    for (const auto& r : p.relations) gens.push_back(r.terms[0].exponent);
    std::sort(gens.begin(), gens.end(), ascending);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Exponent> minimal;
    for (const auto& g : gens)
      if (std::none_of(minimal.begin(), minimal.end(), [&](const Exponent& m) { return divides(m, g); }))
        minimal.push_back(g);
    std::vector<int> bound(e, -1);
    for (const auto& g : minimal)
      for (std::size_t i = 0; i < e; ++i)
        if (g[i] == total_degree(g)) bound[i] = g[i];
    if (std::any_of(bound.begin(), bound.end(), [](int b) { return b < 0; })) throw NotArtinian(kNotArtinian);
    auto standard = [&](const Exponent& m) {
      return std::none_of(minimal.begin(), minimal.end(), [&](const Exponent& g) { return divides(g, m); });
    };
    Exponent cur(e, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == e) {
        a->basis_.push_back(cur);
        return;
      }
      for (int k = 0; k < bound[i]; ++k) {
        cur[i] = static_cast<std::uint16_t>(k);
        if (!standard(cur)) break;
        rec(i + 1);
      }
      cur[i] = 0;
    };
    rec(0);
    std::sort(a->basis_.begin(), a->basis_.end(), ascending);
    for (const auto& b : a->basis_)
      if (total_degree(b) >= D) throw NotArtinian(kNotArtinian);
    for (Index u = 0; u < a->basis_.size(); ++u) index_of[a->basis_[u]] = u;
    p.relations.clear();
    for (const auto& g : minimal) p.relations.push_back(Polynomial{{Term{mpq_class(1), g}}});
    for (std::size_t i = 0; i < e; ++i) {
      ExactMatrix<F> x(field, static_cast<Index>(a->dim()), static_cast<Index>(a->dim()));
      for (Index u = 0; u < a->dim(); ++u) {
        Exponent m = a->basis_[u];
        ++m[i];
        auto it = index_of.find(m);
        if (it != index_of.end()) x.column(u).push_back({it->second, field.one()});
      }
      a->actions_.push_back(std::move(x));
    }
  } else {
    std::vector<Exponent> monos = monomials_up_to(e, D);
    std::sort(monos.begin(), monos.end(), monomial_order_greater);
    std::map<Exponent, Index> col;
    for (Index c = 0; c < monos.size(); ++c) col[monos[c]] = c;
    const Index n = static_cast<Index>(monos.size());
    auto shifted = [&](const Polynomial& r, const Exponent& mu) {
      SparseVector<F> v;
      for (const auto& t : r.terms) {
        Exponent m = t.exponent;
        for (std::size_t i = 0; i < e; ++i) m[i] = static_cast<std::uint16_t>(m[i] + mu[i]);
        if (total_degree(m) > D) continue;
        auto c = field.from_rational(t.coeff);
        if (!field.is_zero(c)) v.push_back({col[m], c});
      }
      std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.index < y.index; });
      return v;
    };
    Echelon<F> ech(field, n);
    for (const auto& r : p.relations)
      for (const auto& mu : monos) {
        int d = total_degree(mu);
        if (d >= 1 && d + r.min_degree() <= D) ech.insert(shifted(r, mu));
      }
    std::vector<Polynomial> kept;
    Exponent one(e, 0);
    for (const auto& r : p.relations)
      if (ech.insert(shifted(r, one))) kept.push_back(r);
    p.relations = kept;
    ech.fully_reduce();
    std::vector<std::int32_t> row_of(n, -1);
    for (Index r = 0; r < ech.rank(); ++r) row_of[ech.pivot_of_row(r)] = static_cast<std::int32_t>(r);
    for (Index c = 0; c < n; ++c)
      if (total_degree(monos[c]) == D && (row_of[c] < 0 || ech.rows()[row_of[c]].size() != 1))
        throw NotArtinian(kNotArtinian);
    for (Index c = n; c-- > 0;)
      if (row_of[c] < 0) a->basis_.push_back(monos[c]);
    for (Index u = 0; u < a->basis_.size(); ++u) index_of[a->basis_[u]] = u;
    auto normal_form = [&](const Exponent& m) {
      SparseVector<F> v;
      if (total_degree(m) > D) return v;
      Index c = col[m];
      if (row_of[c] < 0) {
        v.push_back({index_of[m], field.one()});
      } else {
        const auto& row = ech.rows()[row_of[c]];
        for (std::size_t k = 1; k < row.size(); ++k)
          v.push_back({index_of[monos[row[k].index]], field.neg(row[k].value)});
        std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.index < y.index; });
      }
      return v;
    };
    for (std::size_t i = 0; i < e; ++i) {
      ExactMatrix<F> x(field, static_cast<Index>(a->dim()), static_cast<Index>(a->dim()));
      for (Index u = 0; u < a->dim(); ++u) {
        Exponent m = a->basis_[u];
        ++m[i];
        x.set_column(u, normal_form(m));
      }
      a->actions_.push_back(std::move(x));
    }
  }

  bool homogeneous = std::all_of(p.relations.begin(), p.relations.end(),
                                 [](const Polynomial& r) { return r.is_homogeneous(); });
  if (p.is_monomial() && e <= kMaxGradedVariables) a->grading_ = GradingKind::Multi;
  else if (homogeneous) a->grading_ = GradingKind::Standard;
  else a->grading_ = GradingKind::None;
  for (std::size_t i = 0; i < e; ++i) {
    Degree d;
    if (a->grading_ == GradingKind::Multi) d.v[i] = 1;
    else if (a->grading_ == GradingKind::Standard) d.v[0] = 1;
    a->variable_degrees_.push_back(d);
  }
  for (const auto& b : a->basis_) {
    Degree d;
    if (a->grading_ == GradingKind::Multi)
      for (std::size_t i = 0; i < e; ++i) d.v[i] = static_cast<std::int16_t>(b[i]);
    else if (a->grading_ == GradingKind::Standard)
      d.v[0] = static_cast<std::int16_t>(total_degree(b));
    a->basis_degrees_.push_back(d);
  }
  a->parent_.assign(a->dim(), 0);
  a->parent_var_.assign(a->dim(), 0);
  for (Index u = 1; u < a->dim(); ++u) {
    Exponent m = a->basis_[u];
    std::size_t i = 0;
    while (m[i] == 0) ++i;
    --m[i];
    auto it = index_of.find(m);
    if (it == index_of.end()) throw InvariantViolation("standard monomials are not closed under division");
    a->parent_[u] = it->second;
    a->parent_var_[u] = i;
  }
  a->finish();
  return a;
}

template <class F>
void Algebra<F>::finish() {
  const std::size_t e = embedding_dimension();
  const Index n = static_cast<Index>(dim());
  for (std::size_t i = 0; i < e; ++i)
    for (std::size_t j = i + 1; j < e; ++j)
      if (!(matmul(actions_[i], actions_[j]) == matmul(actions_[j], actions_[i])))
        throw InvariantViolation("action matrices do not commute");
  for (std::size_t i = 0; i < e; ++i) {
    ExactMatrix<F> pw = actions_[i];
    std::size_t steps = 1;
    while (!pw.is_zero()) {
      if (++steps > n + 1) throw NotArtinian(kNotArtinian);
      pw = matmul(actions_[i], pw);
    }
  }
  // Socle: joint kernel of all variable actions.
  {
    DegreeInterner keys;
    std::vector<Key> row_keys, col_keys = keys.ids(basis_degrees_);
    std::vector<const ExactMatrix<F>*> parts;
    for (std::size_t i = 0; i < e; ++i) {
      parts.push_back(&actions_[i]);
      for (Index b = 0; b < n; ++b) row_keys.push_back(keys.id(basis_degrees_[b] - variable_degrees_[i]));
    }
    ExactMatrix<F> stacked = vstack(field_, n, parts);
    if (e == 0) row_keys.clear();
    socle_ = graded_kernel(stacked, row_keys, col_keys).basis;
  }
  {
    std::vector<SparseVector<F>> power;
    for (Index u = 1; u < n; ++u) power.push_back(unit_vector(field_, u));
    std::size_t prev = n;
    Accumulator<F> acc(field_, n);
    while (true) {
      hilbert_.dims.push_back(prev - power.size());
      if (power.empty()) break;
      prev = power.size();
      Echelon<F> ech(field_, n);
      std::vector<SparseVector<F>> next;
      for (const auto& v : power)
        for (std::size_t i = 0; i < e; ++i) {
          auto w = actions_[i].apply(v, acc);
          if (ech.insert(w)) next.push_back(std::move(w));
        }
      power = std::move(next);
    }
    while (hilbert_.dims.size() < static_cast<std::size_t>(presentation_.truncation_degree) + 1)
      hilbert_.dims.push_back(0);
  }
  hash_ = fnv1a_hex(presentation_.to_text());
}

template <class F>
ExactMatrix<F> Algebra<F>::multiplication_matrix(const SparseVector<F>& a) const {
  const Index n = static_cast<Index>(dim());
  ExactMatrix<F> out(field_, n, n);
  Accumulator<F> acc(field_, n);
  std::vector<SparseVector<F>> orbit(n);
  for (Index b = 0; b < n; ++b) {
    orbit[0] = unit_vector(field_, b);
    for (Index u = 1; u < n; ++u) orbit[u] = actions_[parent_var_[u]].apply(orbit[parent_[u]], acc);
    for (const auto& t : a) acc.add_scaled(orbit[t.index], t.value);
    out.set_column(b, acc.take());
  }
  return out;
}

template <class F>
SparseVector<F> Algebra<F>::multiply(const SparseVector<F>& a, const SparseVector<F>& b) const {
  return multiplication_matrix(a).apply(b);
}

template <class F>
std::string Algebra<F>::element_to_string(const SparseVector<F>& a) const {
  if (a.empty()) return "0";
  std::string out;
  for (const auto& t : a) {
    if (!out.empty()) out += " + ";
    std::string mono;
    const auto& m = basis_[t.index];
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!m[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += presentation_.variables[i];
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    std::string c = field_.to_string(t.value);
    if (mono.empty()) out += c;
    else if (field_.is_one(t.value)) out += mono;
    else out += c + "*" + mono;
  }
  return out;
}

Presentation fibre_product_presentation(const Presentation& s, const Presentation& t) {
  if (!(s.field == t.field)) throw FieldMismatch("fibre product factors live over different fields");
  if (s.variables.empty() || t.variables.empty())
    throw Error("fibre product factors must both differ from the residue field");
  Presentation r;
  r.field = s.field;
  r.variables = s.variables;
  const std::size_t es = s.variables.size(), et = t.variables.size();
  for (const auto& v : t.variables) {
    std::string name = v;
    while (std::find(r.variables.begin(), r.variables.end(), name) != r.variables.end()) name += "_t";
    r.variables.push_back(name);
  }
  auto lift = [&](const Polynomial& poly, std::size_t offset, std::size_t n) {
    Polynomial out;
    for (const auto& term : poly.terms) {
      Exponent x(es + et, 0);
      for (std::size_t i = 0; i < n; ++i) x[offset + i] = term.exponent[i];
      out.terms.push_back({term.coeff, x});
    }
    out.normalize(r.field);
    return out;
  };
  for (const auto& rel : s.relations) r.relations.push_back(lift(rel, 0, es));
  for (const auto& rel : t.relations) r.relations.push_back(lift(rel, es, et));
  for (std::size_t i = 0; i < es; ++i)
    for (std::size_t j = 0; j < et; ++j) {
      Exponent x(es + et, 0);
      x[i] = 1;
      x[es + j] = 1;
      r.relations.push_back(Polynomial{{Term{mpq_class(1), x}}});
    }
  r.truncation_degree = std::max(s.truncation_degree, t.truncation_degree);
  return r;
}

template <class F>
std::shared_ptr<const Algebra<F>> fibre_product(const Algebra<F>& s, const Algebra<F>& t) {
  require_same_field(s.field(), t.field());
  if (s.dim() <= 1 || t.dim() <= 1) throw Error("fibre product factors must both differ from the residue field");
  auto r = build_algebra(s.field(), fibre_product_presentation(s.presentation(), t.presentation()));
  if (r->dim() != s.dim() + t.dim() - 1) throw InvariantViolation("fibre product has the wrong dimension");
  return r;
}

template class Algebra<PrimeField>;
template class Algebra<RationalField>;
template std::shared_ptr<const Algebra<PrimeField>> build_algebra(const PrimeField&, const Presentation&);
template std::shared_ptr<const Algebra<RationalField>> build_algebra(const RationalField&, const Presentation&);
template std::shared_ptr<const Algebra<PrimeField>> fibre_product(const Algebra<PrimeField>&,
                                                                  const Algebra<PrimeField>&);
template std::shared_ptr<const Algebra<RationalField>> fibre_product(const Algebra<RationalField>&,
                                                                     const Algebra<RationalField>&);

}  // namespace artinian
