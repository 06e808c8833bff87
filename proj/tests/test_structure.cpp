#include <doctest.h>

#include "artinian/decomposition.hpp"
#include "artinian/structure.hpp"
#include "support.hpp"

using namespace artinian;
using namespace testing_support;

namespace {

using Tower = ResidueTower<PrimeField>;
using QTower = ResidueTower<RationalField>;

Tower tower(const char* text) { return Tower(fp(text)); }

// Serre bound from oracle Betti numbers and ring Koszul homology.
std::vector<std::int64_t> oracle_slacks(std::size_t e, const std::vector<std::vector<int>>& gens, std::size_t n_max) {
  oracle::Fp of{101};
  auto o = oracle_algebra(e, gens);
  auto beta = as_i64(oracle::betti(of, o, oracle::residue(o), n_max));
  auto h = oracle::koszul(of, oracle::ring(o));
  std::vector<std::int64_t> slack;
  for (std::size_t n = 0; n <= n_max; ++n) {
    std::int64_t bound = binomial(static_cast<std::int64_t>(e), static_cast<std::int64_t>(n));
    for (std::size_t j = 1; j <= e; ++j) {
      std::int64_t idx = static_cast<std::int64_t>(n) - static_cast<std::int64_t>(j) - 1;
      if (idx >= 0) bound += beta[idx] * h[j];
    }
    slack.push_back(bound - beta[n]);
  }
  return slack;
}

}  // namespace

TEST_CASE("serre_bound_check") {
  auto t = tower(kSquareMax);
  auto s = serre_bound_check(t, 6);
  CHECK(s.slack == std::vector<std::int64_t>(7, 0));
  CHECK(s.slack == oracle_slacks(2, {{2, 0}, {1, 1}, {0, 2}}, 6));

  auto c = tower(kCI);
  auto sc = serre_bound_check(c, 4);
  CHECK(sc.slack[0] == 0);
  CHECK(sc.slack[2] == 0);
  CHECK(sc.slack[3] == 1);
  CHECK(sc.bound[3] == 5);
  CHECK(sc.betti[3] == 4);
  CHECK(sc.slack == oracle_slacks(2, {{2, 0}, {0, 2}}, 4));

  auto r3 = tower(kR3);
  CHECK(serre_bound_check(r3, 5).slack == oracle_slacks(2, {{4, 0}, {2, 2}, {0, 4}}, 5));
}

TEST_CASE("golod_check") {
  auto t = tower(kSquareMax);
  auto g = golod_check(t, 8);
  CHECK(g.golod_to_precision);
  CHECK(g.verdict() == "GolodToPrecision");
  for (auto s : g.serre.slack) CHECK(s == 0);

  auto c = tower(kCI);
  auto gc = golod_check(c);
  CHECK(!gc.golod_to_precision);
  CHECK(gc.verdict() == "NotGolod(3)");
  CHECK(gc.n_max == 2 + 6);

  auto h = tower(kHyper);
  CHECK(golod_check(h).golod_to_precision);
}

TEST_CASE("bn_hml_table") {
  auto t = tower(kSquareMax);
  auto table = bn_hml_table(t, 6, 2);
  for (bool b : table.bn) CHECK(b);
  for (const auto& row : table.hml)
    for (bool v : row) CHECK(v);
  for (const auto& eq : table.equivalences) CHECK(eq.consistent());
  CHECK(table.passed());

  auto c = tower(kCI);
  auto tc = bn_hml_table(c, 7, 2);
  CHECK(tc.bn[0]);
  CHECK(!tc.bn[3]);
  bool some_h_false = false;
  for (const auto& row : tc.hml)
    for (bool v : row) some_h_false = some_h_false || !v;
  CHECK(some_h_false);
  CHECK(tc.passed());
  for (const auto& eq : tc.equivalences) CHECK(eq.consistent());

  for (const char* text : {kR1, kR3, kHyper}) {
    auto r = tower(text);
    auto tr = bn_hml_table(r, r.e() + 4, 1);
    CHECK(tr.bn[0]);
    CHECK(tr.passed());
  }
}

TEST_CASE("simple_summand_test") {
  QTower r1(q(kR1));
  CHECK(!r1.simple_summand(2).split);
  CHECK(r1.simple_summand(2).refutation == Refutation::SocleCriterion);
  CHECK(r1.simple_summand(2).proof);
  CHECK(r1.simple_summand(3).split);
  CHECK(r1.simple_summand(3).verify(residue_field(r1.algebra()), r1.syzygy(3)));

  QTower r3(q(kR3));
  CHECK(!r3.simple_summand(2).split);
  CHECK(r3.simple_summand(3).split);

  auto a = fp(kSquareMax);
  auto k = residue_field(a);
  auto r = free_module(a, 1);
  auto sum = direct_sum<PrimeField>({&k, &r});
  auto cert = simple_summand_test(sum);
  CHECK(cert.split);
  CHECK(cert.verify(k, sum));
  CHECK(!simple_summand_test(r).split);
}

TEST_CASE("decompose") {
  auto a = fp(kSquareMax);
  auto m = maximal_ideal(a);
  auto d = decompose(m);
  CHECK(d.summands.size() == 2);
  CHECK(d.num_classes() == 1);
  for (const auto& s : d.summands) CHECK(s.module.dim == 1);
  CHECK(verify_decomposition(m, d));

  Tower c(fp(kCI));
  const auto& d2 = c.decomposition(2);
  CHECK(d2.summands.size() == 1);
  CHECK(d2.seed != 0);

  auto r2 = free_module(a, 2);
  auto dr = decompose(r2);
  CHECK(dr.summands.size() == 2);
  CHECK(dr.num_classes() == 1);
  CHECK(dr.summands[0].module.dim == a->dim());
  CHECK(verify_decomposition(r2, dr));

  CHECK_THROWS_AS(decompose(maximal_ideal(q(kSquareMax))), UnsupportedField);
}

TEST_CASE("decomposition certificates are sound") {
  Tower r4(fp(kR4));
  for (std::size_t n = 0; n <= 3; ++n) {
    const auto& d = r4.decomposition(n);
    CHECK(verify_decomposition(r4.syzygy(n), d));
    std::size_t total = 0;
    for (const auto& s : d.summands) total += s.module.dim;
    CHECK(total == r4.syzygy(n).dim);
  }
}

TEST_CASE("summand_test") {
  Tower r4(fp(kR4));
  auto cert = syzygy_summand_test(r4, 1, 2);
  CHECK(cert.split);
  CHECK(cert.verify(r4.syzygy(1), r4.syzygy(2)));

  auto a = fp(kSquareMax);
  auto dim = summand_test(free_module(a, 1), residue_field(a));
  CHECK(!dim.split);
  CHECK(dim.refutation == Refutation::Dimension);
  CHECK(dim.proof);

  auto km = summand_test(residue_field(a), maximal_ideal(a));
  CHECK(km.split);
  CHECK(km.verify(residue_field(a), maximal_ideal(a)));

  QTower rq(q(kR4));
  CHECK_THROWS_AS(syzygy_summand_test(rq, 1, 2), UnsupportedField);
}

TEST_CASE("star_property_scan") {
  Tower h(fp(kHyper));
  auto sh = star_property_scan(h, 3);
  CHECK(sh.contains(0, 1));

  Tower r4(fp(kR4));
  CHECK(star_property_scan(r4, 3).contains(1, 2));

  Tower c(fp(kCI));
  auto sc = star_property_scan(c, 4);
  CHECK(sc.pairs.empty());
  CHECK(sc.undecided.empty());
  CHECK(sc.seed == c.options().seed);
  for (const auto& p : sc.pairs) CHECK(p.a < p.b);
}

TEST_CASE("burch_depth_zero_test") {
  QTower r3(q(kR3));
  CHECK(!burch_depth_zero_test(r3));
  Tower m2(fp(kSquareMax));
  CHECK(burch_depth_zero_test(m2));
  Tower c(fp(kCI));
  CHECK(!burch_depth_zero_test(c));
}

TEST_CASE("exceptional_test") {
  Tower r4(fp(kR4));
  CHECK(exceptional_test(r4, 4).exceptional);
  QTower r1(q(kR1));
  auto e1 = exceptional_test(r1, 3);
  CHECK(!e1.exceptional);
  CHECK(e1.first_simple_summand == 3u);
  Tower m2(fp(kSquareMax));
  auto e2 = exceptional_test(m2, 2);
  CHECK(!e2.exceptional);
  CHECK(e2.first_simple_summand == 1u);
}

TEST_CASE("verify_golod_decomposition") {
  Tower m2(fp(kSquareMax));
  auto rep = verify_golod_decomposition(m2, 0, DecompositionMode::Structural);
  CHECK(rep.numeric_passed);
  REQUIRE(rep.structural_passed.has_value());
  CHECK(*rep.structural_passed);
  CHECK(rep.shifts[0].left_betti[0] == 8);
  CHECK(m2.syzygy(3).dim == 8);

  Tower c(fp(kCI));
  auto rc = verify_golod_decomposition(c, 0, DecompositionMode::Numeric);
  CHECK(!rc.numeric_passed);
  CHECK(rc.shifts[0].left_betti[0] == 4);
  CHECK(rc.shifts[0].right_betti[0] == 5);
  CHECK(rc.golod_verdict == "NotGolod(3)");

  Tower h(fp(kHyper));
  auto rh = verify_golod_decomposition(h, 2, DecompositionMode::Structural);
  CHECK(rh.numeric_passed);
  CHECK(rh.structural_passed.value_or(false));
  CHECK(rh.golod_verdict == "GolodToPrecision");
}

TEST_CASE("monotonicity_check") {
  Tower m2(fp(kSquareMax));
  auto rep = monotonicity_check(m2, residue_field(m2.algebra()), 0, 1, 6);
  CHECK(rep.passed());
  CHECK(!rep.steps.empty());
  for (const auto& s : rep.steps) {
    CHECK(s.monotone);
    CHECK(s.identity);
    CHECK(s.tor == s.lower);
  }

  Tower r4(fp(kR4));
  auto r4rep = monotonicity_check(r4, residue_field(r4.algebra()), 1, 2, 6);
  CHECK(r4rep.passed());
  for (std::size_t n = 2; n + 1 < r4rep.betti.size(); ++n) CHECK(r4rep.betti[n + 1] >= r4rep.betti[n]);

  Tower h(fp(kHyper));
  auto hrep = monotonicity_check(h, residue_field(h.algebra()), 1, 0, 4);
  CHECK(hrep.dichotomy_branch);
  CHECK(hrep.hypersurface);
  CHECK(hrep.passed());

  Tower c(fp(kCI));
  CHECK_THROWS(monotonicity_check(c, residue_field(c.algebra()), 1, 2, 4));
  CHECK_THROWS(monotonicity_check(c, residue_field(c.algebra()), 1, 0, 4));
}

TEST_CASE("tachikawa_probe") {
  Tower c(fp(kCI));
  auto rc = tachikawa_probe(c, 8);
  CHECK(rc.gorenstein);
  CHECK(rc.canonical_free);
  CHECK(!rc.first_nonvanishing.has_value());
  CHECK(rc.consistent);

  Tower m2(fp(kSquareMax));
  auto star = star_property_scan(m2, 2);
  auto rm = tachikawa_probe(m2, 8, &star);
  CHECK(rm.witness_expected);
  REQUIRE(rm.first_nonvanishing.has_value());
  CHECK(*rm.first_nonvanishing <= 8);
  CHECK(rm.consistent);
  // Reported index against a direct computation.
  auto km = canonical_module(m2.algebra());
  auto ext = ext_dimensions(km, free_module(m2.algebra(), 1), *rm.first_nonvanishing);
  CHECK(ext.back() != 0);

  Tower h(fp(kHyper));
  auto rh = tachikawa_probe(h, 7);
  CHECK(rh.hypersurface);
  CHECK(!rh.first_nonvanishing.has_value());
  CHECK(rh.consistent);
}

TEST_CASE("betti_boundedness_probe") {
  Tower m2(fp(kSquareMax));
  auto r = betti_boundedness_probe(m2, 6);
  for (std::size_t i = 1; i + 1 < r.betti.size(); ++i) CHECK(r.betti[i + 1] > r.betti[i]);
  CHECK(r.tail_growing);

  Tower h(fp(kHyper));
  auto rh = betti_boundedness_probe(h, 6);
  // K_R is free: beta_0 = 1 and nothing after.
  CHECK(rh.betti[0] == 1);
  CHECK(rh.max == 1);
  for (std::size_t i = 1; i < rh.betti.size(); ++i) CHECK(rh.betti[i] == 0);
  CHECK(!rh.tail_growing);

  Tower c(fp(kCI));
  auto rc = betti_boundedness_probe(c, 6);
  CHECK(rc.betti[0] == 1);
  CHECK(rc.max == 1);
  CHECK(!rc.tail_growing);
}

TEST_CASE("formula suite over both fields") {
  for (const char* text : {kR1, kR3, kSquareMax, kCI, kHyper}) {
    CAPTURE(text);
    Tower t(fp(text));
    for (const auto& r : formula_suite(t, 4)) {
      for (const auto& v : r.violations) MESSAGE(r.name << ": " << v);
      CHECK(r.passed());
    }
    QTower tq(q(text));
    for (const auto& r : formula_suite(tq, 3)) CHECK(r.passed());
  }
}
