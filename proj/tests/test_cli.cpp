#include <doctest.h>

#include <set>

#include "artinian/corpus.hpp"
#include "artinian/sampler.hpp"
#include "artinian/scan.hpp"
#include "artinian/session.hpp"
#include "support.hpp"

using namespace artinian;
using namespace testing_support;

namespace {

ScanConfig small_config(std::size_t samples, std::uint64_t seed) {
  return ScanConfig::from_json(Json::parse(R"({"field":"F101","e":[1,3],"max_degree":3,"generators":[0,3],
    "max_dim":16,"samples":)" + std::to_string(samples) + R"(,"seed":)" + std::to_string(seed) +
                                           R"(,"checks":["betti","golod","star","burch","exceptional"]})"));
}

std::vector<std::string> scan_lines(const ScanConfig& c, const ScanOptions& o) {
  std::vector<std::string> out;
  run_scan(c, o, [&](const Json& r) { out.push_back(r.dump()); });
  return out;
}

}  // namespace

TEST_CASE("corpus entries parse and match their annotations") {
  for (const auto& entry : builtin_corpus()) {
    CAPTURE(entry.id);
    CHECK_NOTHROW(parse_presentation(entry.presentation));
    CHECK(!entry.expectations.empty());
    for (const auto& field : entry.fields)
      for (const auto& o : run_corpus_entry(entry, field)) {
        CAPTURE(o.expectation);
        CAPTURE(o.observed);
        CHECK(o.passed);
      }
  }
  CHECK_THROWS(corpus_entry("nope"));
}

TEST_CASE("report JSON round-trips") {
  Session s = Session::from_text(kCI, FieldSpec::prime(101));
  std::vector<Json> records = {to_json(s.golod()),         to_json(s.serre(5)),
                               to_json(s.table(6, 1)),     to_json(s.star_scan(3)),
                               to_json(s.exceptional(3)),  to_json(s.tachikawa(6)),
                               to_json(s.boundedness(5)),  to_json(s.dual_sequence(2)),
                               s.algebra_json(),           s.decompose_syzygy_json(2, true),
                               s.syzygy_summand_json(1, 2, true),
                               to_json(s.golod_decomposition(1, DecompositionMode::Structural))};
  for (const auto& r : s.formulas(3)) records.push_back(to_json(r));
  for (const auto& j : records) {
    auto again = Json::parse(j.dump());
    CHECK(again == j);
    CHECK(Json::parse(again.dump()).dump() == j.dump());
  }
  auto vr = values_record("betti", s.hash(), s.betti(4));
  CHECK(vr["label"] == "betti");
  CHECK(vr["algebra_hash"] == s.hash());
  CHECK(vr["values"].size() == 5);
}

TEST_CASE("session basics") {
  Session s = Session::from_text(kR1);
  CHECK(s.field() == FieldSpec::rationals());
  CHECK(s.dim() == 13);
  CHECK(s.e() == 3);
  CHECK(!s.gorenstein());
  CHECK(!s.fibre_product());
  CHECK(s.golod().verdict().find("NotGolod") == 0);
  CHECK_THROWS_AS(s.decompose_syzygy_json(1), UnsupportedField);

  Session over = Session::from_text(kR1, FieldSpec::prime(101));
  CHECK(over.field() == FieldSpec::prime(101));
  CHECK(over.betti(4) == s.betti(4));

  CHECK(Session::from_text(kR4, FieldSpec::prime(101)).fibre_product());
  CHECK_THROWS(Session::from_file("/nonexistent/ring.txt"));
}

TEST_CASE("sampler") {
  SamplerConfig c;
  c.seed = 3;
  c.max_dim = 12;
  std::set<std::string> distinct;
  for (std::size_t i = 0; i < 40; ++i) {
    auto s = sample_monomial_algebra(c, i);
    auto again = sample_monomial_algebra(c, i);
    CHECK(s.presentation.to_text() == again.presentation.to_text());
    CHECK(s.dim <= c.max_dim);
    CHECK(s.presentation.variables.size() >= c.e_min);
    CHECK(s.presentation.variables.size() <= c.e_max);
    auto a = build_algebra(f101(), s.presentation);
    CHECK(a->dim() == s.dim);
    distinct.insert(s.presentation.to_text());
  }
  CHECK(distinct.size() > 5);
  SamplerConfig bad;
  bad.e_min = 3;
  bad.e_max = 2;
  CHECK_THROWS(bad.validate());
}

TEST_CASE("standard monomials and antichains") {
  std::vector<Exponent> gens = {{3, 0, 0}, {0, 3, 0}, {0, 0, 3}, {1, 1, 0}, {1, 0, 2}, {2, 1, 0}};
  auto minimal = minimalize_antichain(gens);
  CHECK(minimal.size() == 5);
  CHECK(standard_monomials(minimal, 3).size() ==
        oracle::standard_monomial_count(3, {{3, 0, 0}, {0, 3, 0}, {0, 0, 3}, {1, 1, 0}, {1, 0, 2}}));
}

TEST_CASE("monomial fibre split") {
  auto split = monomial_fibre_split(parse_presentation(kR4));
  REQUIRE(split.has_value());
  CHECK(split->first.size() + split->second.size() == 4);
  CHECK(!monomial_fibre_split(parse_presentation(kR1)).has_value());
  CHECK(!monomial_fibre_split(parse_presentation(kHyper)).has_value());
}

TEST_CASE("scan determinism") {
  auto c = small_config(12, 9);
  auto a = scan_lines(c, {1, false, std::nullopt});
  auto b = scan_lines(c, {1, false, std::nullopt});
  auto par = scan_lines(c, {4, true, std::nullopt});
  CHECK(a.size() == 12);
  CHECK(a == b);
  CHECK(a == par);
  auto unordered = scan_lines(c, {4, false, std::nullopt});
  std::multiset<std::string> x(a.begin(), a.end()), y(unordered.begin(), unordered.end());
  CHECK(x == y);
  auto other = scan_lines(small_config(12, 10), {1, false, std::nullopt});
  CHECK(other != a);
  for (const auto& line : a) {
    auto j = Json::parse(line);
    CHECK(j["seed"] == 9);
    CHECK(Json::parse(j.dump()) == j);
  }
}

TEST_CASE("scan where-filter membership is re-verified") {
  auto c = small_config(30, 4);
  ScanOptions o{2, true, WhereFilter("star && !golod && !fibre")};
  std::size_t n = run_scan(c, o, [&](const Json& r) {
    CHECK(r["star"].get<bool>());
    CHECK(!r["golod"].get<bool>());
    CHECK(!r["fibre"].get<bool>());
    Session s(parse_presentation(r["presentation"].get<std::string>()));
    CHECK(!s.golod().golod_to_precision);
    CHECK(!s.fibre_product());
    CHECK(!s.star_scan(c.star_bound).pairs.empty());
  });
  CHECK(n <= 30);
}

TEST_CASE("where-expressions") {
  Json r = {{"star", true}, {"golod", false}, {"e", 3}, {"dim", 12}};
  CHECK(WhereFilter("star && !golod")(r));
  CHECK(!WhereFilter("golod || !star")(r));
  CHECK(WhereFilter("e == 3 && dim >= 10")(r));
  CHECK(WhereFilter("(golod || e < 4) && true")(r));
  CHECK(!WhereFilter("dim != 12")(r));
  CHECK_THROWS(WhereFilter("star &&"));
  CHECK_THROWS(WhereFilter("(star"));
  Json err = {{"error", "boom"}, {"star", true}};
  CHECK(!WhereFilter("star")(err));
}

TEST_CASE("scan config validation") {
  CHECK_THROWS(ScanConfig::from_json(Json::parse(R"({"bogus": 1})")));
  CHECK_THROWS(ScanConfig::from_json(Json::parse(R"({"checks": ["nonsense"]})")));
  CHECK_THROWS(ScanConfig::from_json(Json::parse(R"({"samples": 0})")));
  CHECK_THROWS(ScanConfig::from_json(Json::parse(R"({"field": "F100"})")));
  auto c = ScanConfig::from_json(Json::parse(R"({"e": 2, "samples": 5})"));
  CHECK(c.sampler.e_min == 2);
  CHECK(c.sampler.e_max == 2);
  auto again = ScanConfig::from_json(c.to_json());
  CHECK(again.to_json() == c.to_json());
}
