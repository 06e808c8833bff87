#include <doctest.h>

#include "support.hpp"

using namespace artinian;
using namespace testing_support;

namespace {

const std::vector<std::pair<const char*, std::vector<std::vector<int>>>>& rings() {
  static const std::vector<std::pair<const char*, std::vector<std::vector<int>>>> r = {
      {kHyper, {{2}}},
      {kCI, {{2, 0}, {0, 2}}},
      {kSquareMax, {{2, 0}, {1, 1}, {0, 2}}},
      {kR3, {{4, 0}, {2, 2}, {0, 4}}},
      {kR1, {{3, 0, 0}, {0, 3, 0}, {0, 0, 3}, {1, 1, 0}, {1, 0, 2}}},
      {kR2, {{3, 0, 0}, {0, 3, 0}, {0, 0, 3}, {2, 1, 0}, {0, 1, 2}}},
      {kR4, {{2, 0, 0, 0}, {0, 2, 0, 0}, {1, 0, 1, 0}, {1, 0, 0, 1}, {0, 1, 1, 0}, {0, 1, 0, 1}, {0, 0, 2, 0}, {0, 0, 0, 2}}},
  };
  return r;
}

}  // namespace

TEST_CASE("koszul_profile examples") {
  CHECK(koszul_profile(residue_field(fp(kR1))).h == std::vector<std::int64_t>{1, 3, 3, 1});
  CHECK(koszul_profile(free_module(fp(kSquareMax), 1)).h == std::vector<std::int64_t>{1, 3, 2});
  CHECK(koszul_profile(free_module(fp(kCI), 1)).h == std::vector<std::int64_t>{1, 2, 1});
}

TEST_CASE("koszul profiles agree with the oracle") {
  oracle::Fp of{101};
  for (const auto& [text, gens] : rings()) {
    CAPTURE(text);
    auto a = fp(text);
    auto o = oracle_algebra(a->embedding_dimension(), gens);
    CHECK(koszul_profile(free_module(a, 1)).h == as_i64(oracle::koszul(of, oracle::ring(o))));
    CHECK(koszul_profile(maximal_ideal(a)).h ==
          as_i64(oracle::koszul(of, oracle::syzygy(of, o, oracle::residue(o)))));
    if (a->dim() <= 8) {
      auto s2 = oracle::syzygy(of, o, oracle::syzygy(of, o, oracle::residue(o)));
      auto res = resolve(residue_field(a), 2);
      CHECK(koszul_profile(res.syzygy(2)).h == as_i64(oracle::koszul(of, s2)));
    }
  }
}

TEST_CASE("koszul profile invariants") {
  for (const auto& [text, gens] : rings()) {
    CAPTURE(text);
    auto a = fp(text);
    FreeResolution<PrimeField> res(residue_field(a));
    for (std::size_t n = 0; n <= 3; ++n) {
      const auto& m = res.syzygy(n);
      auto p = koszul_profile(m);
      CHECK(p.at(0) == static_cast<std::int64_t>(minimal_generators(m).size()));
      CHECK(p.at(static_cast<std::int64_t>(a->embedding_dimension())) == static_cast<std::int64_t>(module_socle(m).dim()));
      std::int64_t euler = 0;
      for (std::size_t i = 0; i < p.h.size(); ++i) euler += (i % 2 ? -1 : 1) * p.h[i];
      CHECK(euler == 0);
      CHECK(p.at(0) == static_cast<std::int64_t>(res.betti(n)));
    }
    CHECK(ring_profile(a).at(static_cast<std::int64_t>(a->embedding_dimension())) != 0);
  }
}

TEST_CASE("depth_from_koszul") {
  auto m2 = fp(kSquareMax);
  CHECK(depth_from_koszul(free_module(m2, 1)) == 0);
  CHECK(depth_from_koszul(residue_field(m2)) == 0);
  CHECK(depth_from_koszul(maximal_ideal(m2)) == 0);
  CHECK_THROWS(depth_from_koszul(zero_module(m2)));
}

TEST_CASE("syzygy Koszul bounds") {
  auto m2 = fp(kSquareMax);
  SyzygyProfiles<PrimeField> k(residue_field(m2));
  auto ring = ring_profile(m2);
  CHECK(k.profile(2).at(2) == 4);
  CHECK(k.betti(1) * ring.at(2) == 4);
  CHECK(check_syzygy_koszul_bounds(k, ring, 2).passed());

  auto h = fp(kHyper);
  SyzygyProfiles<PrimeField> kh(residue_field(h));
  CHECK(kh.profile(2).at(1) == 1);
  CHECK(check_syzygy_koszul_bounds(kh, ring_profile(h), 2).passed());

  SyzygyProfiles<PrimeField> free(free_module(m2, 2));
  for (std::size_t n = 1; n <= 3; ++n) CHECK(check_syzygy_koszul_bounds(free, ring, n).passed());
}

TEST_CASE("syzygy Koszul bounds on the corpus for n <= 4") {
  for (const auto& [text, gens] : rings()) {
    CAPTURE(text);
    auto a = fp(text);
    auto ring = ring_profile(a);
    SyzygyProfiles<PrimeField> k(residue_field(a));
    SyzygyProfiles<PrimeField> m(maximal_ideal(a));
    for (std::size_t n = 1; n <= 4; ++n) {
      auto rk = check_syzygy_koszul_bounds(k, ring, n);
      for (const auto& v : rk.violations) MESSAGE(v);
      CHECK(rk.passed());
      if (a->dim() <= 13) CHECK(check_syzygy_koszul_bounds(m, ring, n).passed());
    }
  }
}

TEST_CASE("low syzygy formulas") {
  auto m2 = fp(kSquareMax);
  SyzygyProfiles<PrimeField> k(residue_field(m2));
  CHECK(k.profile(1).h == std::vector<std::int64_t>{2, 4, 2});
  CHECK(check_low_syzygy_formulas(k, ring_profile(m2)).passed());

  auto ci = fp(kCI);
  SyzygyProfiles<PrimeField> kc(residue_field(ci));
  CHECK(kc.profile(1).h == std::vector<std::int64_t>{2, 3, 1});
  CHECK(check_low_syzygy_formulas(kc, ring_profile(ci)).passed());

  for (const auto& [text, gens] : rings()) {
    auto a = fp(text);
    SyzygyProfiles<PrimeField> r(residue_field(a));
    CHECK(r.profile(2).at(0) == static_cast<std::int64_t>(r.betti(2)));
    CHECK(check_low_syzygy_formulas(r, ring_profile(a)).passed());
  }
}

TEST_CASE("top degree formula") {
  auto m2 = fp(kSquareMax);
  SyzygyProfiles<PrimeField> k(residue_field(m2));
  CHECK(k.profile(0).at(2) == 1);
  CHECK(k.profile(1).at(2) == 2);
  CHECK(k.profile(3).at(2) == 8);
  CHECK(check_top_degree_formula(k, ring_profile(m2), 4).passed());
  for (const auto& [text, gens] : rings()) {
    auto a = fp(text);
    SyzygyProfiles<PrimeField> r(residue_field(a));
    CHECK(check_top_degree_formula(r, ring_profile(a), 4).passed());
  }
}

TEST_CASE("binomial") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(3, -1) == 0);
  CHECK(binomial(0, 0) == 1);
}
