#include "artinian/koszul.hpp"

#include <algorithm>
#include <bit>

namespace artinian {

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

template <class F>
KoszulProfile koszul_profile(const ActionModule<F>& m) {
  const std::size_t e = m.num_variables();
  if (e > 20) throw Error("Koszul complexes are limited to 20 variables");
  const F& field = m.field();
  const auto& alg = *m.algebra;
  const Index dim = m.dim;

  // Subsets of each size in lexicographic order of their element lists.
  std::vector<std::vector<std::uint32_t>> subsets(e + 1);
  for (std::uint32_t mask = 0; mask < (1u << e); ++mask) subsets[std::popcount(mask)].push_back(mask);
  auto lex_less = [](std::uint32_t a, std::uint32_t b) {
    while (a && b) {
      int x = std::countr_zero(a), y = std::countr_zero(b);
      if (x != y) return x < y;
      a &= a - 1;
      b &= b - 1;
    }
    return b != 0;
  };
  std::vector<Index> position(1u << e, 0);
  for (auto& s : subsets) {
    std::sort(s.begin(), s.end(), lex_less);
    for (Index k = 0; k < s.size(); ++k) position[s[k]] = k;
  }
  auto subset_degree = [&](std::uint32_t mask) {
    Degree d;
    for (std::size_t j = 0; j < e; ++j)
      if (mask >> j & 1) d += alg.variable_degree(j);
    return d;
  };

  DegreeInterner interner;
  auto keys_for = [&](std::size_t i) {
    std::vector<Key> keys;
    if (!m.graded) return keys;
    keys.reserve(subsets[i].size() * dim);
    for (auto mask : subsets[i]) {
      Degree sd = subset_degree(mask);
      for (Index v = 0; v < dim; ++v) keys.push_back(interner.id(m.degrees[v] + sd));
    }
    return keys;
  };
  std::vector<std::vector<Key>> keys(e + 1);
  for (std::size_t i = 0; i <= e; ++i) keys[i] = keys_for(i);

  std::vector<std::size_t> ranks(e + 2, 0);
  for (std::size_t i = 1; i <= e; ++i) {
    const auto& src = subsets[i];
    ExactMatrix<F> d(field, static_cast<Index>(subsets[i - 1].size()) * dim, static_cast<Index>(src.size()) * dim);
    for (Index s = 0; s < src.size(); ++s) {
      std::uint32_t mask = src[s];
      std::vector<std::pair<std::uint32_t, std::size_t>> faces;  // (target mask, removed variable)
      for (std::size_t j = 0; j < e; ++j)
        if (mask >> j & 1) faces.emplace_back(mask & ~(1u << j), j);
      // Faces ordered by target position so that columns come out sorted.
      std::vector<int> sign(faces.size());
      for (std::size_t k = 0; k < faces.size(); ++k) sign[k] = (k % 2 == 0) ? 1 : -1;
      std::vector<std::size_t> order(faces.size());
      for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
      std::sort(order.begin(), order.end(),
                [&](std::size_t a, std::size_t b) { return position[faces[a].first] < position[faces[b].first]; });
      for (Index v = 0; v < dim; ++v) {
        SparseVector<F> col;
        for (std::size_t k : order) {
          Index base = position[faces[k].first] * dim;
          for (const auto& en : m.action[faces[k].second].column(v))
            col.push_back({base + en.index, sign[k] > 0 ? en.value : field.neg(en.value)});
        }
        d.set_column(s * dim + v, std::move(col));
      }
    }
    ranks[i] = graded_rank(d, keys[i - 1], keys[i]);
  }
  KoszulProfile p;
  p.label = m.label;
  for (std::size_t i = 0; i <= e; ++i)
    p.h.push_back(static_cast<std::int64_t>(subsets[i].size() * dim) - static_cast<std::int64_t>(ranks[i]) -
                  static_cast<std::int64_t>(ranks[i + 1]));
  return p;
}

template <class F>
int depth_from_koszul(const ActionModule<F>& m) {
  if (m.dim == 0) throw Error("depth of the zero module is undefined");
  auto p = koszul_profile(m);
  int top = -1;
  for (std::size_t i = 0; i < p.h.size(); ++i)
    if (p.h[i] != 0) top = static_cast<int>(i);
  return static_cast<int>(m.num_variables()) - top;
}

template <class F>
CheckReport check_syzygy_koszul_bounds(SyzygyProfiles<F>& m, const KoszulProfile& ring, std::size_t n) {
  CheckReport rep;
  rep.name = "syzygy Koszul bounds (n=" + std::to_string(n) + ")";
  if (n < 1) return rep;
  const std::int64_t e = static_cast<std::int64_t>(ring.h.size()) - 1;
  const auto& hn = m.profile(n);
  const auto& hp = m.profile(n - 1);
  const std::int64_t b_prev = m.betti_or_zero(static_cast<std::int64_t>(n) - 1);
  const std::int64_t b_n = m.betti_or_zero(static_cast<std::int64_t>(n));
  auto s = [](std::int64_t x) { return std::to_string(x); };
  for (std::int64_t i = 1; i <= e; ++i) {
    std::int64_t rhs = b_prev * ring.at(i) + hp.at(i + 1);
    rep.expect(hn.at(i) <= rhs, "h_" + s(i) + "(syz_" + s(n) + ") = " + s(hn.at(i)) + " <= " + s(rhs));
  }
  rep.expect(hn.at(0) <= hp.at(1), "h_0(syz_" + s(n) + ") = " + s(hn.at(0)) + " <= h_1(syz_" + s(n - 1) +
                                       ") = " + s(hp.at(1)));
  rep.expect(hn.at(0) == b_n, "h_0(syz_" + s(n) + ") = " + s(hn.at(0)) + " == beta_" + s(n) + " = " + s(b_n));
  if (n >= 2) {
    std::int64_t rhs = b_prev * ring.at(e);
    rep.expect(hn.at(e) == rhs, "h_e(syz_" + s(n) + ") = " + s(hn.at(e)) + " == beta_" + s(n - 1) + "*h_e(R) = " +
                                    s(rhs));
  }
  return rep;
}

template <class F>
CheckReport check_low_syzygy_formulas(SyzygyProfiles<F>& k, const KoszulProfile& ring) {
  CheckReport rep;
  rep.name = "low syzygy Koszul formulas";
  const std::int64_t e = static_cast<std::int64_t>(ring.h.size()) - 1;
  auto ht = [&](std::int64_t i) { return i <= 0 ? 0 : ring.at(i); };
  auto s = [](std::int64_t x) { return std::to_string(x); };
  const auto& h0 = k.profile(0);
  const auto& h1 = k.profile(1);
  const auto& h2 = k.profile(2);
  for (std::int64_t i = 0; i <= e; ++i) {
    rep.expect(h0.at(i) == binomial(e, i), "h_" + s(i) + "(k) = " + s(h0.at(i)) + " == C(e," + s(i) + ")");
    std::int64_t f1 = binomial(e, i + 1) + ht(i);
    rep.expect(h1.at(i) == f1, "h_" + s(i) + "(syz_1 k) = " + s(h1.at(i)) + " == " + s(f1));
    std::int64_t f2 = binomial(e, i + 2) + ht(i + 1) + e * ht(i);
    rep.expect(h2.at(i) == f2, "h_" + s(i) + "(syz_2 k) = " + s(h2.at(i)) + " == " + s(f2));
  }
  return rep;
}

template <class F>
CheckReport check_top_degree_formula(SyzygyProfiles<F>& k, const KoszulProfile& ring, std::size_t n_max) {
  CheckReport rep;
  rep.name = "top-degree Koszul formula";
  const std::int64_t e = static_cast<std::int64_t>(ring.h.size()) - 1;
  auto s = [](std::int64_t x) { return std::to_string(x); };
  std::int64_t he = e > 0 ? ring.at(e) : 0;
  for (std::size_t n = 0; n <= n_max; ++n) {
    std::int64_t rhs = k.betti_or_zero(static_cast<std::int64_t>(n) - 1) * he + binomial(e, n + e);
    std::int64_t lhs = k.profile(n).at(e);
    rep.expect(lhs == rhs, "h_e(syz_" + s(n) + " k) = " + s(lhs) + " == " + s(rhs));
  }
  return rep;
}

#define ARTINIAN_INSTANTIATE(F)                                                                        \
  template KoszulProfile koszul_profile(const ActionModule<F>&);                                      \
  template int depth_from_koszul(const ActionModule<F>&);                                             \
  template CheckReport check_syzygy_koszul_bounds(SyzygyProfiles<F>&, const KoszulProfile&, std::size_t); \
  template CheckReport check_low_syzygy_formulas(SyzygyProfiles<F>&, const KoszulProfile&);          \
  template CheckReport check_top_degree_formula(SyzygyProfiles<F>&, const KoszulProfile&, std::size_t);

ARTINIAN_INSTANTIATE(PrimeField)
ARTINIAN_INSTANTIATE(RationalField)

}  // namespace artinian
