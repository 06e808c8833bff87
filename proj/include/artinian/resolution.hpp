#pragma once

#include <deque>

#include <optional>
#include <string>
#include <vector>

#include "artinian/dense.hpp"
#include "artinian/module.hpp"

namespace artinian {

template <class F>
struct SyzygyStep {
  std::vector<Index> generators;  // basis indices of M
  std::vector<Degree> generator_degrees;
  ActionModule<F> syzygy;
  std::vector<SparseVector<F>> embedding;  // syzygy basis inside R^{beta_0}, index j*dim(R)+u
};

template <class F>
SyzygyStep<F> syzygy_step(const ActionModule<F>& m);

// Matrix of the minimal cover R^{r} -> M; column j*dim(R)+u is E_u g_j.
template <class F>
ExactMatrix<F> cover_matrix(const ActionModule<F>& m, const std::vector<Index>& generators);

template <class F>
class FreeResolution {
 public:
  explicit FreeResolution(ActionModule<F> m);

  const ActionModule<F>& module() const { return syzygies_[0]; }
  std::shared_ptr<const Algebra<F>> algebra() const { return syzygies_[0].algebra; }
  bool graded() const { return syzygies_[0].graded; }

  // Ensures beta_0..beta_n, syz_0..syz_n and d_1..d_n.
  void extend_to(std::size_t n);
  std::size_t computed() const { return generators_.size() ? generators_.size() - 1 : 0; }

  const ActionModule<F>& syzygy(std::size_t n);
  std::size_t betti(std::size_t n);
  std::vector<std::size_t> betti_numbers(std::size_t n);
  const std::vector<Index>& generators(std::size_t n);
  const std::vector<Degree>& generator_degrees(std::size_t n);
  // d_n : F_n -> F_{n-1}; rows beta_{n-1}*dim(R), column j is the image of generator j.
  const ExactMatrix<F>& differential(std::size_t n);
  // Every entry of d_n lies in the maximal ideal.
  bool is_minimal(std::size_t n);

 private:
  void ensure_syzygy(std::size_t n);
  void ensure_generators(std::size_t n);

  // Deques keep returned references valid while the resolution grows.
  std::deque<ActionModule<F>> syzygies_;
  std::deque<std::vector<SparseVector<F>>> embeddings_;  // embeddings_[n]: syz_n inside F_{n-1}
  std::deque<std::vector<Index>> generators_;
  std::deque<std::vector<Degree>> generator_degrees_;
  std::deque<std::optional<ExactMatrix<F>>> differentials_;
};

template <class F>
FreeResolution<F> resolve(const ActionModule<F>& m, std::size_t n) {
  FreeResolution<F> r(m);
  r.extend_to(n);
  return r;
}

// Hom_R(M, N) realised inside N^{beta_0(M)} (images of the minimal generators).
template <class F>
class HomSpace {
 public:
  // With a degree, only maps of that degree are computed (graded modules only).
  HomSpace(const ActionModule<F>& m, const ActionModule<F>& n, std::optional<Degree> degree = std::nullopt);

  Index dim() const { return static_cast<Index>(basis_.size()); }
  const std::vector<SparseVector<F>>& basis() const { return basis_; }
  const std::vector<Index>& generators() const { return generators_; }
  // k-matrix (dim N x dim M) of the map with the given generator images.
  ExactMatrix<F> to_matrix(const SparseVector<F>& images) const;
  ExactMatrix<F> basis_matrix(Index t) const { return to_matrix(basis_[t]); }
  // Generator images of an equivariant k-matrix M -> N.
  SparseVector<F> from_matrix(const ExactMatrix<F>& f) const;
  // Hom(M, N) as an R-module (requires the full space).
  ActionModule<F> as_module(std::string label = "") const;

 private:
  const ActionModule<F>* m_;
  const ActionModule<F>* n_;
  std::vector<Index> generators_;
  std::vector<Degree> generator_degrees_;
  ExactMatrix<F> section_;  // dim(R)*r x dim M
  std::vector<SparseVector<F>> basis_;
  std::vector<Index> free_columns_;
  std::vector<Degree> ambient_degrees_;
  bool graded_ = false;
  bool full_ = true;
};

template <class F>
ActionModule<F> hom_module(const ActionModule<F>& m, const ActionModule<F>& n) {
  return HomSpace<F>(m, n).as_module("Hom(" + m.label + ", " + n.label + ")");
}

// dim Tor_i(M, N) for i = 0..n using a resolution of M.
template <class F>
std::vector<std::size_t> tor_dimensions(FreeResolution<F>& res, const ActionModule<F>& n, std::size_t top);
template <class F>
std::vector<std::size_t> tor_dimensions(const ActionModule<F>& m, const ActionModule<F>& n, std::size_t top) {
  FreeResolution<F> r(m);
  return tor_dimensions(r, n, top);
}

// dim Ext^i(M, N) for i = from..top using a resolution of M; stops early at the first
// nonzero value when stop_at_nonzero is set.
template <class F>
std::vector<std::size_t> ext_dimensions(FreeResolution<F>& res, const ActionModule<F>& n, std::size_t top,
                                        bool stop_at_nonzero = false, std::size_t from = 0);
template <class F>
std::vector<std::size_t> ext_dimensions(const ActionModule<F>& m, const ActionModule<F>& n, std::size_t top) {
  FreeResolution<F> r(m);
  return ext_dimensions(r, n, top);
}

struct DualSequenceReport {
  std::size_t n = 0;
  bool precondition = true;
  std::optional<std::size_t> first_nonvanishing_ext;
  std::vector<std::size_t> ext_dims;  // index i for 0 < i <= n (entry 0 unused)
  std::vector<std::size_t> beta;      // beta_i(N)
  std::vector<std::size_t> alpha;     // beta_i(Hom(N, R))
  std::size_t rho = 0;                // rank of delta tensor k
  std::size_t beta0_prime = 0, alpha0_prime = 0;
  std::vector<std::size_t> dual_syzygy_betti;  // betti of Hom(syz_{n+1} N, R)
  bool dual_minimal = true;
  std::vector<std::string> violations;
  bool passed() const { return precondition && violations.empty(); }
};

template <class F>
DualSequenceReport dual_sequence_check(const ActionModule<F>& n_module, std::size_t n, std::size_t extra = 1);

extern template class FreeResolution<PrimeField>;
extern template class FreeResolution<RationalField>;
extern template class HomSpace<PrimeField>;
extern template class HomSpace<RationalField>;

}  // namespace artinian
