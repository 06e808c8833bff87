#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "artinian/decomposition.hpp"
#include "artinian/koszul.hpp"

namespace artinian {

// Resolution of k with cached Koszul profiles, decompositions and simple-summand tests.
template <class F>
class ResidueTower {
 public:
  using Field = F;

  explicit ResidueTower(std::shared_ptr<const Algebra<F>> a, DecompositionOptions opts = {});

  const std::shared_ptr<const Algebra<F>>& algebra() const { return algebra_; }
  std::size_t e() const { return algebra_->embedding_dimension(); }
  const KoszulProfile& ring() const { return ring_; }
  const DecompositionOptions& options() const { return options_; }
  SyzygyProfiles<F>& residue() { return residue_; }
  FreeResolution<F>& resolution() { return residue_.resolution(); }

  const ActionModule<F>& syzygy(std::size_t n) { return residue_.resolution().syzygy(n); }
  // beta_n(k), zero for negative n.
  std::int64_t betti(std::int64_t n) { return residue_.betti_or_zero(n); }
  const KoszulProfile& profile(std::size_t n) { return residue_.profile(n); }
  // h_m(syz_n k), zero for negative n.
  std::int64_t h(std::int64_t m, std::int64_t n) { return n < 0 ? 0 : profile(static_cast<std::size_t>(n)).at(m); }
  // h~_j(R): zero at j = 0.
  std::int64_t ring_tilde(std::int64_t j) const { return j <= 0 ? 0 : ring_.at(j); }

  const DecompositionReport<F>& decomposition(std::size_t n);
  const SummandCertificate<F>& simple_summand(std::size_t n);

 private:
  std::shared_ptr<const Algebra<F>> algebra_;
  DecompositionOptions options_;
  KoszulProfile ring_;
  SyzygyProfiles<F> residue_;
  std::map<std::size_t, DecompositionReport<F>> decompositions_;
  std::map<std::size_t, SummandCertificate<F>> simple_;
};

struct SerreReport {
  std::size_t n_max = 0;
  std::vector<std::int64_t> betti;  // beta_n(k)
  std::vector<std::int64_t> bound;  // sum_j beta_{n-j-1} h_j + C(e, n)
  std::vector<std::int64_t> slack;  // bound - betti
};

// Throws InvariantViolation on a negative slack.
template <class F>
SerreReport serre_bound_check(ResidueTower<F>& t, std::size_t n_max);

struct GolodReport {
  std::size_t n_max = 0;
  SerreReport serre;
  bool golod_to_precision = false;
  std::optional<std::size_t> first_failure;
  std::string verdict() const {
    return golod_to_precision ? "GolodToPrecision" : "NotGolod(" + std::to_string(*first_failure) + ")";
  }
};

template <class F>
GolodReport golod_check(ResidueTower<F>& t, std::optional<std::size_t> n_max = std::nullopt);

struct EquivalenceRow {
  std::size_t n = 0;
  bool a = false, b = false, c = false;
  bool consistent() const { return a == b && b == c; }
};

struct ImplicationCheck {
  std::size_t a = 0, b = 0;
  bool applicable = false;  // hypothesis holds inside the computed range
  bool conclusion = false;
};

struct ConditionTable {
  std::size_t e = 0, n_max = 0, l_max = 0;
  std::vector<bool> bn;                          // (B_n), n = 0..n_max
  std::vector<std::vector<bool>> hml;            // (H_{m,l}), m = 0..e, l = 0..l_max
  std::vector<EquivalenceRow> equivalences;      // three forms of the equality at each n
  std::vector<ImplicationCheck> h_from_b;        // B_n on [a+b, a+b+e+1] => H_{a,b}
  std::vector<ImplicationCheck> b_from_h;        // B_n on [a+1, a+e+1] and H_{a,0} => B_a
  std::vector<std::string> violations;
  bool passed() const { return violations.empty(); }
};

template <class F>
ConditionTable bn_hml_table(ResidueTower<F>& t, std::size_t n_max, std::size_t l_max);

struct StarPair {
  std::size_t a = 0, b = 0;
  std::string method;
};

struct StarScanReport {
  std::size_t bound = 0;
  std::vector<StarPair> pairs;
  std::vector<std::pair<std::size_t, std::size_t>> undecided;  // not attempted (field limits)
  std::vector<std::pair<std::size_t, std::size_t>> refuted_by_search;
  std::vector<std::pair<std::size_t, std::size_t>> refuted_by_proof;
  std::uint64_t seed = 0;
  bool monte_carlo() const { return !refuted_by_search.empty(); }
  bool contains(std::size_t a, std::size_t b) const {
    for (const auto& p : pairs)
      if (p.a == a && p.b == b) return true;
    return false;
  }
};

template <class F>
StarScanReport star_property_scan(ResidueTower<F>& t, std::size_t bound);

// Certificate for syz_a k | syz_b k using the tower's caches.
template <class F>
SummandCertificate<F> syzygy_summand_test(ResidueTower<F>& t, std::size_t a, std::size_t b);

template <class F>
bool burch_depth_zero_test(ResidueTower<F>& t);

struct ExceptionalReport {
  std::size_t bound = 0;
  bool exceptional = false;
  std::optional<std::size_t> first_simple_summand;
};

template <class F>
ExceptionalReport exceptional_test(ResidueTower<F>& t, std::size_t bound);

enum class DecompositionMode { Numeric, Structural };

struct ShiftComparison {
  std::size_t shift = 0;
  std::vector<std::int64_t> left_betti, right_betti;
  std::vector<std::int64_t> left_h, right_h;
  bool numeric_match = false;
  std::optional<bool> certified;  // structural mode
  std::string note;
};

struct GolodDecompositionReport {
  std::size_t max_shift = 0;
  std::size_t precision = 0;
  DecompositionMode mode = DecompositionMode::Numeric;
  std::vector<ShiftComparison> shifts;
  bool numeric_passed = false;
  std::optional<bool> structural_passed;
  std::string golod_verdict;
  std::uint64_t seed = 0;
};

// Compares syz_{e+1+s} k with the sum over j of syz_{e-j+s}(k)^{h_j} for s = 0..max_shift.
template <class F>
GolodDecompositionReport verify_golod_decomposition(ResidueTower<F>& t, std::size_t max_shift, DecompositionMode mode,
                                                    std::optional<std::size_t> precision = std::nullopt);

struct MonotonicityReport {
  std::size_t a = 0, b = 0;
  std::string module_label;
  bool dichotomy_branch = false;  // a > b
  bool hypersurface = false;
  std::vector<std::int64_t> betti;
  struct Step {
    std::size_t p = 0, q = 0, n = 0;
    std::int64_t lower = 0, upper = 0, tor = 0;
    bool monotone = false, identity = false;
  };
  std::vector<Step> steps;
  std::vector<std::string> violations;
  bool passed() const { return violations.empty(); }
};

template <class F>
MonotonicityReport monotonicity_check(ResidueTower<F>& t, const ActionModule<F>& m, std::size_t a, std::size_t b,
                                      std::size_t bound);

struct TachikawaReport {
  std::size_t n_max = 0;
  std::vector<std::size_t> ext;  // ext[i] = dim Ext^i(K_R, R), entry 0 unused
  std::optional<std::size_t> first_nonvanishing;
  bool gorenstein = false;
  bool hypersurface = false;
  bool canonical_free = false;
  std::optional<bool> star;  // whether a (*) pair was certified, when known
  bool witness_expected = false;
  bool consistent = true;
  std::string summary;
};

template <class F>
TachikawaReport tachikawa_probe(ResidueTower<F>& t, std::size_t n_max, const StarScanReport* star = nullptr);

struct BoundednessReport {
  std::string module_label;
  std::vector<std::int64_t> betti;
  std::int64_t min = 0, max = 0;
  bool constant = false;
  bool nondecreasing = false;
  std::optional<std::size_t> strictly_increasing_from;
  bool tail_growing = false;  // last value exceeds the one before
  std::string trend;
};

// Betti numbers of M (the canonical module when M is null) for i <= n_max.
template <class F>
BoundednessReport betti_boundedness_probe(ResidueTower<F>& t, std::size_t n_max,
                                          const ActionModule<F>* m = nullptr);

// Koszul homology identities of the formula suite at one algebra.
template <class F>
std::vector<CheckReport> formula_suite(ResidueTower<F>& t, std::size_t n_max);

}  // namespace artinian
