// Acceptance harness: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "artinian/corpus.hpp"
#include "artinian/decomposition.hpp"
#include "artinian/sampler.hpp"
#include "artinian/session.hpp"
#include "artinian/structure.hpp"
#include "support.hpp"

using namespace artinian;
using namespace testing_support;

namespace {

using Tower = ResidueTower<PrimeField>;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  std::vector<std::string> failures;
  void fail(const std::string& why) {
    pass = false;
    if (failures.size() < 8) failures.push_back(why);
  }
};

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::vector<MonomialSample> random_corpus(std::size_t count, std::uint64_t seed, std::size_t max_dim = 20) {
  SamplerConfig c;
  c.field = FieldSpec::prime(101);
  c.e_min = 1;
  c.e_max = 3;
  c.max_dim = max_dim;
  c.seed = seed;
  std::vector<MonomialSample> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(sample_monomial_algebra(c, i));
  return out;
}

// Corpus presentations (over F_101) followed by random samples.
std::vector<std::pair<std::string, Presentation>> property_corpus(std::size_t samples, std::size_t max_dim) {
  std::vector<std::pair<std::string, Presentation>> out;
  for (const auto& e : builtin_corpus()) {
    Presentation p = parse_presentation(e.presentation);
    p.field = FieldSpec::prime(101);
    for (auto& r : p.relations) r.normalize(p.field);
    out.emplace_back(e.id, p);
  }
  for (const auto& s : random_corpus(samples, 77, max_dim))
    out.emplace_back("sample " + std::to_string(s.index), s.presentation);
  return out;
}

Outcome criterion1() {
  Outcome o;
  auto start = Clock::now();
  std::size_t checks = 0;
  for (const char* id : {"R1", "R2", "R3"}) {
    CorpusEntry entry = corpus_entry(id);
    std::erase_if(entry.expectations, [](const Expectation& e) {
      return e.kind != ExpectKind::SimpleSummand && e.kind != ExpectKind::Burch;
    });
    for (const auto& field : {FieldSpec::rationals(), FieldSpec::prime(101)})
      for (const auto& r : run_corpus_entry(entry, field)) {
        ++checks;
        if (!r.passed) o.fail(r.entry + " " + r.field + ": " + r.expectation + " (observed " + r.observed + ")");
      }
  }
  double secs = since(start);
  if (secs >= 60) o.fail("took " + std::to_string(secs) + " s");
  o.detail << checks << " checks over Q and F101 in " << secs << " s";
  return o;
}

Outcome criterion2() {
  Outcome o;
  oracle::Fp of{101};
  Tower m2(fp(kSquareMax));
  auto g = golod_check(m2, 8);
  if (!g.golod_to_precision) o.fail("(x,y)^2 verdict " + g.verdict());
  for (std::size_t n = 0; n <= 8; ++n)
    if (g.serre.slack[n] != 0) o.fail("(x,y)^2 slack at " + std::to_string(n));
  auto om2 = oracle_algebra(2, {{2, 0}, {1, 1}, {0, 2}});
  auto b1 = oracle::betti(of, om2, oracle::residue(om2), 8);
  for (std::size_t n = 0; n <= 8; ++n)
    if (static_cast<std::int64_t>(b1[n]) != g.serre.betti[n]) o.fail("(x,y)^2 beta_" + std::to_string(n) + " vs oracle");

  Tower ci(fp(kCI));
  auto gc = golod_check(ci, 8);
  if (gc.verdict() != "NotGolod(3)") o.fail("(x^2,y^2) verdict " + gc.verdict());
  if (gc.serre.slack[3] != 1) o.fail("(x^2,y^2) slack_3 = " + std::to_string(gc.serre.slack[3]));
  auto oci = oracle_algebra(2, {{2, 0}, {0, 2}});
  auto b2 = oracle::betti(of, oci, oracle::residue(oci), 8);
  for (std::size_t n = 0; n <= 8; ++n)
    if (static_cast<std::int64_t>(b2[n]) != gc.serre.betti[n]) o.fail("(x^2,y^2) beta_" + std::to_string(n) + " vs oracle");
  o.detail << g.verdict() << " / " << gc.verdict() << ", slack_3 = " << gc.serre.slack[3]
           << ", Betti tables match the oracle to n = 8";
  return o;
}

Outcome criterion3() {
  Outcome o;
  auto start = Clock::now();
  auto samples = random_corpus(200, 2024);
  std::size_t golod = 0, agree = 0;
  std::vector<std::size_t> golod_idx;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    Tower t(build_algebra(f101(), samples[i].presentation));
    const std::size_t e = t.e(), precision = e + 4;
    auto g = golod_check(t, precision);
    auto rep = verify_golod_decomposition(t, 2, DecompositionMode::Numeric, precision);
    if (g.golod_to_precision == rep.numeric_passed)
      ++agree;
    else
      o.fail("sample " + std::to_string(i) + " (" + samples[i].presentation.to_text() + "): " + g.verdict() +
             " but numeric decomposition " + (rep.numeric_passed ? "matches" : "differs"));
    if (g.golod_to_precision) {
      ++golod;
      golod_idx.push_back(i);
    }
  }
  std::sort(golod_idx.begin(), golod_idx.end(), [&](std::size_t a, std::size_t b) {
    return std::make_pair(samples[a].dim, a) < std::make_pair(samples[b].dim, b);
  });
  std::size_t certified = 0, attempted = 0;
  for (std::size_t i : golod_idx) {
    if (certified >= 10) break;
    ++attempted;
    Tower t(build_algebra(f101(), samples[i].presentation));
    auto rep = verify_golod_decomposition(t, 0, DecompositionMode::Structural, t.e() + 4);
    if (rep.structural_passed.value_or(false)) ++certified;
  }
  if (certified < 10) o.fail("only " + std::to_string(certified) + " structural certificates");
  o.detail << agree << "/200 numeric verdicts agree, " << golod << " Golod samples, " << certified << "/"
           << attempted << " structural certificates, " << since(start) << " s";
  return o;
}

Outcome criterion4() {
  Outcome o;
  std::size_t algebras = 0, reports = 0;
  for (const auto& [name, p] : property_corpus(60, 20)) {
    ++algebras;
    Tower t(build_algebra(f101(), p));
    try {
      for (const auto& r : formula_suite(t, 4)) {
        ++reports;
        for (const auto& v : r.violations) o.fail(name + ": " + r.name + ": " + v);
      }
    } catch (const InvariantViolation& ex) {
      o.fail(name + ": " + ex.what());
    }
  }
  for (const auto& entry : builtin_corpus()) {
    ResidueTower<RationalField> t(q(entry.presentation));
    for (const auto& r : formula_suite(t, 4))
      for (const auto& v : r.violations) o.fail(entry.id + " over Q: " + r.name + ": " + v);
  }
  o.detail << reports << " reports on " << algebras << " algebras over F101 plus the corpus over Q";
  return o;
}

// First certified (*) pair with a < b <= bound.
std::optional<StarPair> first_pair(Tower& t, std::size_t bound) {
  auto scan = star_property_scan(t, bound);
  if (scan.pairs.empty()) return std::nullopt;
  return scan.pairs.front();
}

Outcome criterion5() {
  Outcome o;
  std::size_t pairs = 0, checks = 0, steps = 0;
  for (const auto& [name, p] : property_corpus(40, 12)) {
    Session s(p);
    Tower t(build_algebra(f101(), p));
    auto pair = first_pair(t, 3);
    if (!pair) continue;
    ++pairs;
    const std::size_t bound = std::max<std::size_t>(pair->b + 2 * (pair->b - pair->a), 5);
    for (const char* module : {"k", "m", "cyclic"}) {
      try {
        auto rep = s.monotonicity(module, pair->a, pair->b, bound);
        ++checks;
        steps += rep.steps.size();
        for (const auto& v : rep.violations) o.fail(name + " M=" + module + ": " + v);
      } catch (const std::exception& ex) {
        o.fail(name + " M=" + module + ": " + ex.what());
      }
    }
  }
  if (checks == 0) o.fail("no certified pairs found");
  o.detail << pairs << " algebras with a certified pair, " << checks << " modules, " << steps << " identity steps";
  return o;
}

Outcome criterion6() {
  Outcome o;
  std::size_t witnesses = 0, gorenstein = 0, examined = 0;
  for (const auto& [name, p] : property_corpus(60, 16)) {
    Tower t(build_algebra(f101(), p));
    const std::size_t n_max = t.e() + 6;
    bool hyper = t.ring().at(1) <= 1;
    bool gor = gorenstein_test(*t.algebra());
    std::optional<StarPair> pair;
    if (!hyper) pair = first_pair(t, 3);
    if (!gor && !pair) continue;
    ++examined;
    StarScanReport star;
    if (pair) star.pairs.push_back(*pair);
    auto rep = tachikawa_probe(t, n_max, pair ? &star : nullptr);
    if (gor) {
      ++gorenstein;
      if (rep.first_nonvanishing) o.fail(name + ": Gorenstein but Ext^" + std::to_string(*rep.first_nonvanishing) + " != 0");
      if (!rep.canonical_free) o.fail(name + ": Gorenstein but K_R not free");
    }
    if (pair && !hyper) {
      if (rep.first_nonvanishing)
        ++witnesses;
      else
        o.fail(name + ": no Ext witness within e+6 (reported, not passed)");
    }
  }
  o.detail << examined << " algebras: " << witnesses << " Ext witnesses found, " << gorenstein
           << " Gorenstein with vanishing Ext";
  return o;
}

// m_S as an R-module through R -> S; variables outside `vars` act by zero.
ActionModule<PrimeField> pulled_back_maximal_ideal(std::shared_ptr<const Algebra<PrimeField>> r,
                                                   std::shared_ptr<const Algebra<PrimeField>> s,
                                                   std::size_t offset) {
  ActionModule<PrimeField> m = maximal_ideal(s);
  ActionModule<PrimeField> out;
  out.algebra = r;
  out.dim = m.dim;
  out.label = "m_factor";
  for (std::size_t i = 0; i < r->embedding_dimension(); ++i) {
    if (i >= offset && i < offset + s->embedding_dimension())
      out.action.push_back(m.action[i - offset]);
    else
      out.action.push_back(ExactMatrix<PrimeField>(f101(), m.dim, m.dim));
  }
  return out;
}

Outcome criterion7() {
  Outcome o;
  SamplerConfig c;
  c.field = FieldSpec::prime(101);
  c.e_min = 1;
  c.e_max = 3;
  c.max_dim = 9;
  c.min_generators = 0;
  c.max_generators = 2;
  c.seed = 31;
  std::size_t iso = 0, star12 = 0, exc_match = 0, exceptional = 0, exceptional_factors = 0;
  for (std::size_t i = 0; i < 20; ++i) {
    auto ps = sample_monomial_algebra(c, 2 * i).presentation;
    auto pt = sample_monomial_algebra(c, 2 * i + 1).presentation;
    auto s = build_algebra(f101(), ps), t = build_algebra(f101(), pt);
    auto r = fibre_product(*s, *t);
    std::string name = "pair " + std::to_string(i);
    auto ms = pulled_back_maximal_ideal(r, s, 0);
    auto mt = pulled_back_maximal_ideal(r, t, s->embedding_dimension());
    auto sum = direct_sum<PrimeField>({&ms, &mt});
    auto mr = maximal_ideal(r);
    bool certified = false;
    if (mr.dim == sum.dim) {
      auto found = find_isomorphism(mr, sum, 1000 + i);
      if (found) {
        auto& [f, g] = *found;
        certified = is_equivariant(f, mr, sum) && is_equivariant(g, sum, mr) &&
                    matmul(g, f).is_identity() && matmul(f, g).is_identity();
      }
    }
    if (certified)
      ++iso;
    else
      o.fail(name + ": no certified isomorphism m_R = m_S + m_T");

    Tower tr(r);
    if (tr.betti(1) != static_cast<std::int64_t>(s->embedding_dimension() + t->embedding_dimension()))
      o.fail(name + ": beta_1 mismatch");
    if (star_property_scan(tr, 2).contains(1, 2))
      ++star12;
    else
      o.fail(name + ": (1,2) not found");

    Tower ts(s), tt(t);
    bool er = exceptional_test(tr, 4).exceptional;
    bool es = exceptional_test(ts, 4).exceptional, et = exceptional_test(tt, 4).exceptional;
    exceptional_factors += es + et;
    bool both = es && et;
    if (er) ++exceptional;
    if (er == both)
      ++exc_match;
    else
      o.fail(name + " (" + ps.to_text() + " x " + pt.to_text() + "): R exceptional " + (er ? "yes" : "no") +
             ", factors both exceptional " + (both ? "yes" : "no"));
  }
  o.detail << iso << "/20 isomorphisms certified, (1,2) in " << star12 << "/20 scans, exceptional equivalence "
           << exc_match << "/20 (" << exceptional << " exceptional products, " << exceptional_factors
           << " exceptional factors)";
  return o;
}

Outcome criterion8() {
  Outcome o;
  Tower t(fp(kCI));
  for (std::size_t n = 0; n <= 4; ++n) {
    const auto& d = t.decomposition(n);
    if (d.summands.size() != 1) o.fail("syz_" + std::to_string(n) + " has " + std::to_string(d.summands.size()) + " summands");
    if (!verify_decomposition(t.syzygy(n), d)) o.fail("syz_" + std::to_string(n) + " certificate failed");
  }
  auto scan = star_property_scan(t, 4);
  if (!scan.pairs.empty()) o.fail("star scan found a pair");
  if (!scan.undecided.empty()) o.fail("star scan left pairs undecided");
  o.detail << "syz_0..syz_4 indecomposable, star scan empty (" << scan.refuted_by_proof.size() << " proofs, "
           << scan.refuted_by_search.size() << " Monte Carlo refutations, seed " << scan.seed << ")";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 paper examples over Q and F101", criterion1},
      {"2 Golod detection against the oracle", criterion2},
      {"3 Golod decomposition round-trip on 200 samples", criterion3},
      {"4 formula suite", criterion4},
      {"5 monotonicity with the Tor identity", criterion5},
      {"6 Tachikawa probe", criterion6},
      {"7 fibre products", criterion7},
      {"8 Gorenstein contrast", criterion8},
  };
  bool all = true;
  for (const auto& [name, run] : criteria) {
    auto start = Clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& ex) {
      o.fail(std::string("exception: ") + ex.what());
    }
    all = all && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << name << ": " << o.detail.str() << " [" << since(start)
              << " s]\n";
    for (const auto& f : o.failures) std::cout << "      " << f << "\n";
    std::cout.flush();
  }
  return all ? 0 : 1;
}
