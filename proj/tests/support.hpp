#pragma once

#include <memory>
#include <string>

#include "artinian/algebra.hpp"
#include "artinian/koszul.hpp"
#include "artinian/module.hpp"
#include "artinian/presentation.hpp"
#include "artinian/resolution.hpp"
#include "oracle/oracle.hpp"

namespace testing_support {

using namespace artinian;

inline const PrimeField& f101() {
  static const PrimeField f(101);
  return f;
}

template <class F>
std::shared_ptr<const Algebra<F>> algebra(const F& field, const std::string& text) {
  Presentation p = parse_presentation(text);
  p.field = field.spec();
  for (auto& r : p.relations) r.normalize(p.field);
  return build_algebra(field, p);
}

inline std::shared_ptr<const Algebra<PrimeField>> fp(const std::string& text) { return algebra(f101(), text); }
inline std::shared_ptr<const Algebra<RationalField>> q(const std::string& text) {
  return algebra(RationalField{}, text);
}

inline const char* kSquareMax = "vars x,y; rels x^2,x*y,y^2;";
inline const char* kCI = "vars x,y; rels x^2,y^2;";
inline const char* kHyper = "vars x; rels x^2;";
inline const char* kR1 = "vars x,y,z; rels x^3,y^3,z^3,x*y,x*z^2;";
inline const char* kR2 = "vars x,y,z; rels x^3,y^3,z^3,x^2*y,y*z^2;";
inline const char* kR3 = "vars x,z; rels x^4,x^2*z^2,z^4;";
inline const char* kR4 = "vars x,y,z,w; rels x^2,y^2,x*z,x*w,y*z,y*w,z^2,w^2;";

// Oracle algebra from monomial generators given as exponent vectors.
inline oracle::Algebra oracle_algebra(std::size_t e, const std::vector<std::vector<int>>& gens) {
  return oracle::monomial_algebra(e, gens, oracle::Fp{101});
}

inline std::vector<std::int64_t> as_i64(const std::vector<std::size_t>& v) {
  return {v.begin(), v.end()};
}
inline std::vector<std::int64_t> as_i64(const std::vector<long long>& v) { return {v.begin(), v.end()}; }

}  // namespace testing_support
