#include <doctest.h>

#include "support.hpp"

using namespace artinian;
using namespace testing_support;

namespace {

template <class F>
void check_structure(const Algebra<F>& a) {
  const auto& x = a.actions();
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) CHECK(matmul(x[i], x[j]) == matmul(x[j], x[i]));
    auto p = x[i];
    for (std::size_t k = 0; k < a.dim(); ++k) p = matmul(p, x[i]);
    CHECK(p.is_zero());
  }
  std::size_t total = 0;
  for (auto d : a.hilbert().dims) total += d;
  CHECK(total == a.dim());
  if (a.hilbert().dims.size() > 1) CHECK(a.hilbert().dims[1] == a.embedding_dimension());
  CHECK(a.basis()[0] == Exponent(a.embedding_dimension(), 0));
}

}  // namespace

TEST_CASE("parse_presentation") {
  auto p = parse_presentation("field Q; vars x,y,z; rels x^3,y^3,z^3,x*y,x*z^2;");
  CHECK(p.variables.size() == 3);
  CHECK(p.relations.size() == 5);
  CHECK(p.field == FieldSpec::rationals());

  auto h = parse_presentation("field F 101; vars x; rels x^2;");
  CHECK(h.field == FieldSpec::prime(101));
  CHECK(h.variables == std::vector<std::string>{"x"});
  CHECK(h.relations.size() == 1);

  CHECK_THROWS_AS(parse_presentation("vars x; rels 1+x;"), Error);
  CHECK_THROWS_AS(parse_presentation("vars x; rels x^2"), ParseError);
  CHECK_THROWS_AS(parse_presentation("rels x^2;"), ParseError);
  CHECK_THROWS_AS(parse_presentation("vars x; rels y^2;"), ParseError);
}

TEST_CASE("field line defaults to Q") {
  CHECK(parse_presentation("vars x; rels x^2;").field == FieldSpec::rationals());
}

TEST_CASE("presentation text round-trips") {
  auto p = parse_presentation("field F 101; vars x,y; rels x^2 - 3*x*y, y^3; trunc 5;");
  auto again = parse_presentation(p.to_text());
  CHECK(again.to_text() == p.to_text());
  CHECK(again.truncation_degree == 5);
}

TEST_CASE("build_algebra examples") {
  auto r1 = q(kR1);
  CHECK(r1->embedding_dimension() == 3);
  // Independent count of standard monomials.
  std::size_t count = oracle::standard_monomial_count(3, {{3, 0, 0}, {0, 3, 0}, {0, 0, 3}, {1, 1, 0}, {1, 0, 2}});
  CHECK(r1->dim() == count);
  CHECK(r1->dim() == 13);
  check_structure(*r1);

  auto h = fp(kHyper);
  CHECK(h->dim() == 2);
  CHECK(h->basis() == std::vector<Exponent>{{0}, {1}});

  auto m2 = fp(kSquareMax);
  CHECK(m2->dim() == 3);
  CHECK(m2->embedding_dimension() == 2);
  CHECK(socle(*m2).size() == 2);
  check_structure(*m2);
}

TEST_CASE("non-monomial relations use the truncated path") {
  auto a = q("vars x,y; rels x^2-y^2, x*y; trunc 4;");
  CHECK(!a->used_monomial_path());
  CHECK(a->dim() == 4);  // 1, x, y, x^2 = y^2
  CHECK(gorenstein_test(*a));
  check_structure(*a);
  auto same = fp("vars x,y; rels x^2-y^2, x*y; trunc 4;");
  CHECK(same->dim() == 4);
}

TEST_CASE("build_algebra errors") {
  CHECK_THROWS_AS(q("vars x,y; rels x^2;"), NotArtinian);
  CHECK_THROWS_AS(q("vars x,y; rels x^2, x*y, y^3; trunc 2;"), Error);
  CHECK_THROWS_AS(q("vars x,y; rels x + y^2, y^3;"), Error);
}

TEST_CASE("socle") {
  CHECK(socle(*fp(kSquareMax)).size() == 2);
  auto ci = fp(kCI);
  auto s = socle(*ci);
  REQUIRE(s.size() == 1);
  CHECK(ci->element_to_string(s[0]).find("x*y") != std::string::npos);
  CHECK(socle(*fp(kHyper)).size() == 1);
}

TEST_CASE("gorenstein_test") {
  CHECK(gorenstein_test(*fp(kCI)));
  CHECK(!gorenstein_test(*fp(kSquareMax)));
  CHECK(gorenstein_test(*fp(kHyper)));
}

TEST_CASE("hypersurface_test") {
  CHECK(hypersurface_test(fp(kHyper)));
  CHECK(!hypersurface_test(fp(kCI)));
  CHECK(ring_profile(fp(kCI)).at(1) == 2);
  CHECK(!hypersurface_test(fp(kSquareMax)));
  CHECK(ring_profile(fp(kSquareMax)).at(1) == 3);
}

TEST_CASE("fibre_product") {
  auto s = fp(kCI);
  auto t = fp("vars z,w; rels z^2,w^2;");
  auto r = fibre_product(*s, *t);
  CHECK(r->dim() == 7);
  CHECK(r->embedding_dimension() == 4);
  auto expected = fp(kR4);
  CHECK(r->dim() == expected->dim());
  CHECK(r->presentation().relations.size() == expected->presentation().relations.size());
  // Same ideal: every relation of the expected ring is a relation of the product.
  auto names = r->presentation().variables;
  CHECK(names == std::vector<std::string>{"x", "y", "z", "w"});

  Presentation k;
  k.field = FieldSpec::prime(101);
  CHECK_THROWS_AS(fibre_product_presentation(k, t->presentation()), Error);
  auto clash = fibre_product_presentation(s->presentation(), s->presentation());
  CHECK(clash.variables.size() == 4);
  CHECK(clash.variables[2] != "x");
}

TEST_CASE("mixed fields are rejected") {
  auto p = parse_presentation("field F 7; vars x; rels x^2;");
  CHECK_THROWS_AS(build_algebra(f101(), p), FieldMismatch);
}
