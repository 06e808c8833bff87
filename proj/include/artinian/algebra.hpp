#pragma once

#include <memory>
#include <string>
#include <vector>

#include "artinian/degree.hpp"
#include "artinian/matrix.hpp"
#include "artinian/presentation.hpp"

namespace artinian {

enum class GradingKind { Multi, Standard, None };

struct HilbertData {
  std::vector<std::size_t> dims;  // dim m^j / m^(j+1)
};

class NotArtinian : public Error {
 public:
  using Error::Error;
};

template <class F>
class Algebra {
 public:
  using Elem = typename F::Elem;

  const F& field() const { return field_; }
  const Presentation& presentation() const { return presentation_; }
  std::size_t dim() const { return basis_.size(); }
  std::size_t embedding_dimension() const { return presentation_.variables.size(); }
  const std::vector<Exponent>& basis() const { return basis_; }
  const ExactMatrix<F>& action(std::size_t i) const { return actions_[i]; }
  const std::vector<ExactMatrix<F>>& actions() const { return actions_; }

  // basis[u] = x_{parent_variable(u)} * basis[parent(u)] for u > 0.
  Index parent(Index u) const { return parent_[u]; }
  std::size_t parent_variable(Index u) const { return parent_var_[u]; }

  GradingKind grading() const { return grading_; }
  bool graded() const { return grading_ != GradingKind::None; }
  const std::vector<Degree>& basis_degrees() const { return basis_degrees_; }
  const Degree& variable_degree(std::size_t i) const { return variable_degrees_[i]; }

  const std::vector<SparseVector<F>>& socle_basis() const { return socle_; }
  const HilbertData& hilbert() const { return hilbert_; }
  const std::string& hash() const { return hash_; }
  bool used_monomial_path() const { return monomial_path_; }

  // Matrix of multiplication by an algebra element.
  ExactMatrix<F> multiplication_matrix(const SparseVector<F>& a) const;
  SparseVector<F> multiply(const SparseVector<F>& a, const SparseVector<F>& b) const;
  std::string element_to_string(const SparseVector<F>& a) const;

  template <class G>
  friend std::shared_ptr<const Algebra<G>> build_algebra(const G& field, const Presentation& p);

 private:
  explicit Algebra(F field) : field_(std::move(field)) {}
  void finish();

  F field_;
  Presentation presentation_;
  std::vector<Exponent> basis_;
  std::vector<ExactMatrix<F>> actions_;
  std::vector<Index> parent_;
  std::vector<std::size_t> parent_var_;
  GradingKind grading_ = GradingKind::None;
  std::vector<Degree> basis_degrees_;
  std::vector<Degree> variable_degrees_;
  std::vector<SparseVector<F>> socle_;
  HilbertData hilbert_;
  std::string hash_;
  bool monomial_path_ = false;
};

template <class F>
std::shared_ptr<const Algebra<F>> build_algebra(const F& field, const Presentation& p);

// Field object matching a presentation's field line.
PrimeField prime_field_of(const Presentation& p);

template <class F>
std::vector<SparseVector<F>> socle(const Algebra<F>& a) {
  return a.socle_basis();
}

template <class F>
bool gorenstein_test(const Algebra<F>& a) {
  return a.socle_basis().size() == 1;
}

// Presentation of S x_k T; variables of T are renamed on clashes.
Presentation fibre_product_presentation(const Presentation& s, const Presentation& t);

template <class F>
std::shared_ptr<const Algebra<F>> fibre_product(const Algebra<F>& s, const Algebra<F>& t);

std::string fnv1a_hex(const std::string& text);

extern template class Algebra<PrimeField>;
extern template class Algebra<RationalField>;

}  // namespace artinian
