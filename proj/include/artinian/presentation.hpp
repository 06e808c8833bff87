#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "artinian/field.hpp"

namespace artinian {

using Exponent = std::vector<std::uint16_t>;

int total_degree(const Exponent& e);
bool divides(const Exponent& a, const Exponent& b);
// Degree-descending, then lexicographically descending.
bool monomial_order_greater(const Exponent& a, const Exponent& b);

struct Term {
  mpq_class coeff;
  Exponent exponent;
  friend bool operator==(const Term& a, const Term& b) {
    return a.coeff == b.coeff && a.exponent == b.exponent;
  }
};

// Terms sorted by monomial_order_greater, combined, no zero coefficients.
struct Polynomial {
  std::vector<Term> terms;

  bool is_zero() const { return terms.empty(); }
  bool is_monomial() const { return terms.size() == 1; }
  bool is_homogeneous() const;
  int max_degree() const;
  int min_degree() const;
  void normalize(const FieldSpec& field);
  std::string to_string(const std::vector<std::string>& vars) const;
  friend bool operator==(const Polynomial&, const Polynomial&) = default;
};

struct Presentation {
  FieldSpec field;
  std::vector<std::string> variables;
  std::vector<Polynomial> relations;
  int truncation_degree = 2;

  std::size_t embedding_dimension() const { return variables.size(); }
  bool is_monomial() const;
  std::string to_text() const;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, int line, int column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_, column_;
};

Presentation parse_presentation(std::string_view text);
Presentation load_presentation(const std::string& path);

}  // namespace artinian
