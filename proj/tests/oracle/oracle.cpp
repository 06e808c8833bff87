#include "oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace oracle {

long long Fp::inv(long long a) const {
  long long r = 1, b = norm(a), k = p - 2;
  while (k) {
    if (k & 1) r = r * b % p;
    b = b * b % p;
    k >>= 1;
  }
  return r;
}

Mat zeros(std::size_t r, std::size_t c) { return Mat(r, Vec(c, 0)); }

Mat identity(std::size_t n) {
  Mat m = zeros(n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Mat multiply(const Fp& f, const Mat& a, const Mat& b) {
  std::size_t r = a.size(), k = b.size(), c = b.empty() ? 0 : b[0].size();
  Mat out = zeros(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t t = 0; t < k; ++t)
      if (a[i][t])
        for (std::size_t j = 0; j < c; ++j) out[i][j] = f.norm(out[i][j] + a[i][t] * b[t][j]);
  return out;
}

namespace {

// Row-reduces in place; returns pivot columns.
std::vector<std::size_t> eliminate(const Fp& f, Mat& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t sel = row;
    while (sel < m.size() && f.norm(m[sel][c]) == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    long long iv = f.inv(m[row][c]);
    for (auto& x : m[row]) x = f.norm(x * iv);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || f.norm(m[r][c]) == 0) continue;
      long long s = m[r][c];
      for (std::size_t j = 0; j < cols; ++j) m[r][j] = f.norm(m[r][j] - s * m[row][j]);
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

// Columns of m as rows.
Mat transpose(const Mat& m, std::size_t cols) {
  Mat t = zeros(cols, m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) t[j][i] = m[i][j];
  return t;
}

Mat monomial_action(const Fp& f, const Module& m, const std::vector<int>& exponent) {
  Mat out = identity(m.dim);
  for (std::size_t i = 0; i < exponent.size(); ++i)
    for (int k = 0; k < exponent[i]; ++k) out = multiply(f, m.act[i], out);
  return out;
}

}  // namespace

std::size_t rank(const Fp& f, Mat m) {
  if (m.empty()) return 0;
  return eliminate(f, m, m[0].size()).size();
}

std::vector<Vec> kernel(const Fp& f, Mat m, std::size_t cols) {
  auto pivots = eliminate(f, m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vec> out;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.norm(-m[r][free]);
    out.push_back(v);
  }
  return out;
}

namespace {

bool divides(const std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

std::vector<std::vector<int>> standard(std::size_t e, const std::vector<std::vector<int>>& gens) {
  std::vector<int> cap(e, 0);
  for (const auto& g : gens)
    for (std::size_t i = 0; i < e; ++i) cap[i] = std::max(cap[i], g[i] + 1);
  std::vector<std::vector<int>> out;
  std::vector<int> cur(e, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == e) {
      if (std::none_of(gens.begin(), gens.end(), [&](const auto& g) { return divides(g, cur); }))
        out.push_back(cur);
      return;
    }
    for (int k = 0; k < cap[i]; ++k) {
      cur[i] = k;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace

std::size_t standard_monomial_count(std::size_t e, const std::vector<std::vector<int>>& generators) {
  return standard(e, generators).size();
}

Algebra monomial_algebra(std::size_t e, const std::vector<std::vector<int>>& generators, const Fp&) {
  Algebra a;
  a.e = e;
  a.basis = standard(e, generators);
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t u = 0; u < a.basis.size(); ++u) index[a.basis[u]] = u;
  for (std::size_t i = 0; i < e; ++i) {
    Mat x = zeros(a.basis.size(), a.basis.size());
    for (std::size_t u = 0; u < a.basis.size(); ++u) {
      auto m = a.basis[u];
      ++m[i];
      auto it = index.find(m);
      if (it != index.end()) x[it->second][u] = 1;
    }
    a.act.push_back(x);
  }
  return a;
}

Module residue(const Algebra& a) {
  Module m;
  m.dim = 1;
  for (std::size_t i = 0; i < a.e; ++i) m.act.push_back(zeros(1, 1));
  return m;
}

Module ring(const Algebra& a) { return Module{a.basis.size(), a.act}; }

Module direct_sum(const Module& a, const Module& b) {
  Module m;
  m.dim = a.dim + b.dim;
  for (std::size_t i = 0; i < a.act.size(); ++i) {
    Mat x = zeros(m.dim, m.dim);
    for (std::size_t r = 0; r < a.dim; ++r)
      for (std::size_t c = 0; c < a.dim; ++c) x[r][c] = a.act[i][r][c];
    for (std::size_t r = 0; r < b.dim; ++r)
      for (std::size_t c = 0; c < b.dim; ++c) x[a.dim + r][a.dim + c] = b.act[i][r][c];
    m.act.push_back(x);
  }
  return m;
}

namespace {

// Columns spanning mM.
Mat radical_columns(const Module& m) {
  Mat cols;
  for (const auto& x : m.act) {
    auto t = transpose(x, m.dim);
    cols.insert(cols.end(), t.begin(), t.end());
  }
  return cols;
}

}  // namespace

std::size_t minimal_generator_count(const Fp& f, const Module& m) {
  return m.dim - rank(f, radical_columns(m));
}

Module syzygy(const Fp& f, const Algebra& a, const Module& m) {
  const std::size_t d = a.basis.size();
  // Generators: unit vectors completing a basis of mM.
  Mat span = radical_columns(m);
  std::size_t r0 = rank(f, span);
  std::vector<std::size_t> gens;
  for (std::size_t j = 0; j < m.dim; ++j) {
    Vec u(m.dim, 0);
    u[j] = 1;
    span.push_back(u);
    std::size_t r1 = rank(f, span);
    if (r1 > r0) {
      gens.push_back(j);
      r0 = r1;
    } else {
      span.pop_back();
    }
  }
  // Cover matrix: column j*d+u is basis monomial u applied to generator j.
  const std::size_t n = gens.size() * d;
  Mat cover = zeros(m.dim, n);
  for (std::size_t u = 0; u < d; ++u) {
    Mat act = monomial_action(f, m, a.basis[u]);
    for (std::size_t j = 0; j < gens.size(); ++j)
      for (std::size_t r = 0; r < m.dim; ++r) cover[r][j * d + u] = act[r][gens[j]];
  }
  auto ker = kernel(f, cover, n);
  Module s;
  s.dim = ker.size();
  if (s.dim == 0) {
    s.act.assign(a.e, Mat{});
    return s;
  }
  // Coordinates in the kernel basis: solve B c = v through the augmented system.
  const Mat& basis_rows = ker;
  for (std::size_t i = 0; i < a.e; ++i) {
    Mat x = zeros(s.dim, s.dim);
    for (std::size_t t = 0; t < s.dim; ++t) {
      Vec v(n, 0);
      for (std::size_t j = 0; j < gens.size(); ++j)
        for (std::size_t u = 0; u < d; ++u)
          for (std::size_t w = 0; w < d; ++w) v[j * d + w] = f.norm(v[j * d + w] + a.act[i][w][u] * ker[t][j * d + u]);
      // Solve sum_c coef_c ker[c] = v.
      Mat sys = zeros(n, s.dim + 1);
      for (std::size_t row = 0; row < n; ++row) {
        for (std::size_t c = 0; c < s.dim; ++c) sys[row][c] = basis_rows[c][row];
        sys[row][s.dim] = v[row];
      }
      auto piv = eliminate(f, sys, s.dim + 1);
      if (!piv.empty() && piv.back() == s.dim) throw std::logic_error("kernel not stable under the action");
      for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]][t] = sys[r][s.dim];
    }
    s.act.push_back(x);
  }
  return s;
}

std::vector<std::size_t> betti(const Fp& f, const Algebra& a, Module m, std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i <= n; ++i) {
    out.push_back(m.dim ? minimal_generator_count(f, m) : 0);
    if (i < n) m = m.dim ? syzygy(f, a, m) : m;
  }
  return out;
}

std::vector<long long> koszul(const Fp& f, const Module& m) {
  const std::size_t e = m.act.size();
  std::vector<std::vector<std::size_t>> subsets(e + 1);
  for (std::size_t mask = 0; mask < (1u << e); ++mask) subsets[__builtin_popcount(mask)].push_back(mask);
  auto position = [&](std::size_t mask) {
    auto& v = subsets[__builtin_popcount(mask)];
    return static_cast<std::size_t>(std::find(v.begin(), v.end(), mask) - v.begin());
  };
  // d_i : K_i -> K_{i-1}, e_S (x) v -> sum_t (-1)^t e_{S - s_t} (x) x_{s_t} v.
  std::vector<std::size_t> ranks(e + 2, 0);
  for (std::size_t i = 1; i <= e; ++i) {
    const std::size_t rows = subsets[i - 1].size() * m.dim, cols = subsets[i].size() * m.dim;
    Mat d = zeros(rows, cols);
    for (std::size_t sc = 0; sc < subsets[i].size(); ++sc) {
      std::size_t mask = subsets[i][sc];
      std::size_t t = 0;
      for (std::size_t var = 0; var < e; ++var) {
        if (!(mask >> var & 1)) continue;
        long long sign = (t % 2) ? -1 : 1;
        std::size_t target = position(mask & ~(std::size_t{1} << var));
        for (std::size_t c = 0; c < m.dim; ++c)
          for (std::size_t r = 0; r < m.dim; ++r)
            d[target * m.dim + r][sc * m.dim + c] = f.norm(d[target * m.dim + r][sc * m.dim + c] + sign * m.act[var][r][c]);
        ++t;
      }
    }
    ranks[i] = rank(f, d);
  }
  std::vector<long long> h(e + 1);
  for (std::size_t i = 0; i <= e; ++i) {
    long long chain = static_cast<long long>(subsets[i].size() * m.dim);
    h[i] = chain - static_cast<long long>(ranks[i]) - static_cast<long long>(ranks[i + 1]);
  }
  return h;
}

std::size_t socle_dim(const Fp& f, const Module& m) {
  Mat stacked;
  for (const auto& x : m.act) stacked.insert(stacked.end(), x.begin(), x.end());
  if (stacked.empty()) return m.dim;
  return m.dim - rank(f, stacked);
}

}  // namespace oracle
