#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "artinian/resolution.hpp"

namespace artinian {

struct KoszulProfile {
  std::string label;
  std::vector<std::int64_t> h;  // h_0 .. h_e

  std::int64_t at(std::int64_t i) const { return i < 0 || i >= static_cast<std::int64_t>(h.size()) ? 0 : h[i]; }
};

std::int64_t binomial(std::int64_t n, std::int64_t k);

template <class F>
KoszulProfile koszul_profile(const ActionModule<F>& m);

// e - max{i : h_i(M) != 0}; rejects the zero module.
template <class F>
int depth_from_koszul(const ActionModule<F>& m);

template <class F>
KoszulProfile ring_profile(std::shared_ptr<const Algebra<F>> a) {
  auto p = koszul_profile(free_module(a, 1));
  p.label = "R";
  return p;
}

template <class F>
bool hypersurface_test(std::shared_ptr<const Algebra<F>> a) {
  return ring_profile(a).at(1) <= 1;
}

// A resolution together with cached Koszul profiles of its syzygies.
template <class F>
class SyzygyProfiles {
 public:
  explicit SyzygyProfiles(ActionModule<F> m) : resolution_(std::move(m)) {}

  FreeResolution<F>& resolution() { return resolution_; }
  std::size_t betti(std::size_t n) { return resolution_.betti(n); }
  std::int64_t betti_or_zero(std::int64_t n) { return n < 0 ? 0 : static_cast<std::int64_t>(betti(n)); }
  const KoszulProfile& profile(std::size_t n) {
    auto it = cache_.find(n);
    if (it == cache_.end()) it = cache_.emplace(n, koszul_profile(resolution_.syzygy(n))).first;
    return it->second;
  }

 private:
  FreeResolution<F> resolution_;
  std::map<std::size_t, KoszulProfile> cache_;
};

struct CheckReport {
  std::string name;
  std::vector<std::string> checked;
  std::vector<std::string> violations;
  bool passed() const { return violations.empty(); }
  void expect(bool ok, const std::string& what) {
    checked.push_back(what);
    if (!ok) violations.push_back(what);
  }
};

// Inequalities and equalities relating the Koszul homology of consecutive syzygies of M.
template <class F>
CheckReport check_syzygy_koszul_bounds(SyzygyProfiles<F>& m, const KoszulProfile& ring, std::size_t n);

// Closed formulas for the Koszul homology of k, syz_1 k and syz_2 k.
template <class F>
CheckReport check_low_syzygy_formulas(SyzygyProfiles<F>& residue, const KoszulProfile& ring);

// h_e(syz_n k) = beta_{n-1}(k) h_e(R) + C(e, n+e) for 0 <= n <= n_max.
template <class F>
CheckReport check_top_degree_formula(SyzygyProfiles<F>& residue, const KoszulProfile& ring, std::size_t n_max);

}  // namespace artinian
