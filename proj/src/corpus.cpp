#include "artinian/corpus.hpp"

#include <chrono>

namespace artinian {

namespace {

Expectation simple(std::size_t n, bool holds) {
  return {ExpectKind::SimpleSummand, holds, n, 0,
          std::string(holds ? "k is" : "k is not") + " a summand of syz_" + std::to_string(n) + "(k)"};
}

std::vector<CorpusEntry> make_corpus() {
  const FieldSpec q = FieldSpec::rationals(), f101 = FieldSpec::prime(101);
  std::vector<CorpusEntry> c;
  c.push_back({"R1",
               "vars x,y,z; rels x^3,y^3,z^3,x*y,x*z^2;",
               "published example: simple summand first appears at syz_3",
               {q, f101},
               {simple(2, false), simple(3, true),
                {ExpectKind::Golod, false, 0, 0, "not Golod"},
                {ExpectKind::FibreProduct, false, 0, 0, "not a nontrivial fibre product"},
                {ExpectKind::Exceptional, false, 3, 0, "not exceptional at precision 3"},
                {ExpectKind::Dimension, true, 13, 0, "dim R = 13 (standard monomial count)"}}});
  c.push_back({"R2",
               "vars x,y,z; rels x^3,y^3,z^3,x^2*y,y*z^2;",
               "published example: simple summand first appears at syz_4",
               {q, f101},
               {simple(2, false), simple(3, false), simple(4, true),
                {ExpectKind::Golod, false, 0, 0, "not Golod"},
                {ExpectKind::FibreProduct, false, 0, 0, "not a nontrivial fibre product"}}});
  c.push_back({"R3",
               "vars x,z; rels x^4,x^2*z^2,z^4;",
               "published example: satisfies the summand condition without being Burch",
               {q, f101},
               {simple(2, false), simple(3, true), {ExpectKind::Burch, false, 0, 0, "not Burch"}}});
  c.push_back({"R4",
               "vars x,y,z,w; rels x^2,y^2,x*z,x*w,y*z,y*w,z^2,w^2;",
               "published example: fibre product of two Gorenstein non-hypersurfaces",
               {f101},
               {{ExpectKind::FibreProduct, true, 0, 0, "nontrivial fibre product"},
                {ExpectKind::Dimension, true, 7, 0, "dim R = 4 + 4 - 1"},
                {ExpectKind::Exceptional, true, 4, 0, "exceptional at precision 4"},
                {ExpectKind::StarPair, true, 1, 2, "syz_1(k) is a summand of syz_2(k)"}}});
  c.push_back({"CI2",
               "vars x,y; rels x^2,y^2;",
               "derived: Gorenstein complete intersection",
               {f101},
               {{ExpectKind::Gorenstein, true, 0, 0, "Gorenstein"},
                {ExpectKind::Hypersurface, false, 0, 0, "not a hypersurface"},
                {ExpectKind::Golod, false, 0, 3, "NotGolod(3)"},
                {ExpectKind::Burch, false, 0, 0, "not Burch"},
                {ExpectKind::StarEmpty, true, 4, 0, "no summand pair up to syz_4"}}});
  c.push_back({"M2",
               "vars x,y; rels x^2,x*y,y^2;",
               "derived: square of the maximal ideal",
               {q, f101},
               {{ExpectKind::Golod, true, 0, 0, "Golod to precision"},
                {ExpectKind::Burch, true, 0, 0, "Burch"},
                {ExpectKind::StarPair, true, 0, 1, "k is a summand of syz_1(k)"},
                {ExpectKind::Exceptional, false, 2, 0, "not exceptional at precision 2"}}});
  c.push_back({"H1",
               "vars x; rels x^2;",
               "derived: hypersurface",
               {q, f101},
               {{ExpectKind::Hypersurface, true, 0, 0, "hypersurface"},
                {ExpectKind::Golod, true, 0, 0, "Golod to precision"},
                {ExpectKind::StarPair, true, 0, 1, "k is a summand of syz_1(k)"}}});
  return c;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

const std::vector<CorpusEntry>& builtin_corpus() {
  static const std::vector<CorpusEntry> corpus = make_corpus();
  return corpus;
}

const CorpusEntry& corpus_entry(const std::string& id) {
  for (const auto& e : builtin_corpus())
    if (e.id == id) return e;
  throw Error("unknown corpus entry '" + id + "'");
}

std::vector<ExpectationOutcome> run_corpus_entry(const CorpusEntry& entry, const FieldSpec& field,
                                                 const DecompositionOptions& opts) {
  Session s = Session::from_text(entry.presentation, field, opts);
  std::vector<ExpectationOutcome> out;
  for (const auto& ex : entry.expectations) {
    ExpectationOutcome o{entry.id, field.name(), ex.text, false, "", 0};
    auto start = std::chrono::steady_clock::now();
    try {
      switch (ex.kind) {
        case ExpectKind::SimpleSummand: {
          bool got = s.simple_summand(ex.a);
          o.passed = got == ex.holds;
          o.observed = "simple summand at syz_" + std::to_string(ex.a) + ": " + yes_no(got);
          break;
        }
        case ExpectKind::Burch: {
          bool got = s.burch();
          o.passed = got == ex.holds;
          o.observed = "Burch: " + yes_no(got);
          break;
        }
        case ExpectKind::Golod: {
          auto g = s.golod();
          o.passed = g.golod_to_precision == ex.holds;
          if (!ex.holds && ex.b > 0) o.passed = o.passed && g.first_failure == ex.b;
          o.observed = g.verdict();
          break;
        }
        case ExpectKind::Exceptional: {
          auto r = s.exceptional(ex.a);
          o.passed = r.exceptional == ex.holds;
          o.observed = r.exceptional ? "exceptional"
                                     : "simple summand at syz_" + std::to_string(*r.first_simple_summand);
          break;
        }
        case ExpectKind::StarPair: {
          if (ex.a == 0) {
            bool got = s.simple_summand(ex.b);
            o.passed = got == ex.holds;
            o.observed = "certificate: " + yes_no(got);
          } else {
            Json c = s.syzygy_summand_json(ex.a, ex.b, false);
            o.passed = c["split"].get<bool>() == ex.holds;
            o.observed = c["split"].get<bool>() ? "certificate: " + c["method"].get<std::string>()
                                                : "refuted: " + c["refutation"].get<std::string>();
          }
          break;
        }
        case ExpectKind::StarEmpty: {
          auto r = s.star_scan(ex.a);
          o.passed = r.pairs.empty() == ex.holds && r.undecided.empty();
          o.observed = std::to_string(r.pairs.size()) + " pairs, " + std::to_string(r.refuted_by_search.size()) +
                       " refuted by search, seed " + std::to_string(r.seed);
          break;
        }
        case ExpectKind::FibreProduct: {
          bool got = s.fibre_product();
          o.passed = got == ex.holds;
          o.observed = "fibre product: " + yes_no(got);
          break;
        }
        case ExpectKind::Gorenstein: {
          bool got = s.gorenstein();
          o.passed = got == ex.holds;
          o.observed = "Gorenstein: " + yes_no(got);
          break;
        }
        case ExpectKind::Hypersurface: {
          bool got = s.hypersurface();
          o.passed = got == ex.holds;
          o.observed = "hypersurface: " + yes_no(got);
          break;
        }
        case ExpectKind::Dimension: {
          o.passed = s.dim() == ex.a;
          o.observed = "dim " + std::to_string(s.dim());
          break;
        }
      }
    } catch (const Error& err) {
      o.passed = false;
      o.observed = std::string("error: ") + err.what();
    }
    o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.push_back(std::move(o));
  }
  return out;
}

Json to_json(const ExpectationOutcome& o) {
  return Json{{"entry", o.entry},       {"field", o.field},       {"expectation", o.expectation},
              {"passed", o.passed},     {"observed", o.observed}, {"seconds", o.seconds}};
}

}  // namespace artinian
