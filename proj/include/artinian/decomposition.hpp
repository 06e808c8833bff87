#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "artinian/resolution.hpp"

namespace artinian {

struct DecompositionOptions {
  std::uint64_t seed = 20240601;
  std::size_t trials = 64;       // random endomorphisms per undecided piece
  std::size_t iso_trials = 32;   // random maps per isomorphism test
};

template <class F>
struct Summand {
  ActionModule<F> module;
  ExactMatrix<F> inclusion;   // dim M x dim P
  ExactMatrix<F> projection;  // dim P x dim M
  bool proven_indecomposable = false;  // degree-0 endomorphism ring is the field
  std::size_t iso_class = 0;
};

template <class F>
struct DecompositionReport {
  std::string label;
  std::size_t dim = 0;
  std::vector<Summand<F>> summands;
  std::vector<std::size_t> class_multiplicity;  // indexed by iso_class
  std::vector<std::size_t> class_representative;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  bool monte_carlo = false;  // some indecomposability verdict rests on the random search
  bool verified = false;     // idempotent certificate checked exactly

  std::size_t num_classes() const { return class_multiplicity.size(); }
};

// Splits M into indecomposable summands with random Fitting decompositions. Prime fields only.
template <class F>
DecompositionReport<F> decompose(const ActionModule<F>& m, const DecompositionOptions& opts = {});

// Checks sum of iota_i pi_i = id, pi_i iota_j = delta_ij and equivariance of every map.
template <class F>
bool verify_decomposition(const ActionModule<F>& m, const DecompositionReport<F>& rep);

template <class F>
bool is_equivariant(const ExactMatrix<F>& f, const ActionModule<F>& source, const ActionModule<F>& target);

// Inverse of an equivariant map that is compatible with the gradings, or nullopt when singular.
template <class F>
std::optional<ExactMatrix<F>> invert_map(const ExactMatrix<F>& f, const ActionModule<F>& source,
                                         const ActionModule<F>& target, const Degree& shift = {});

// Random search for an isomorphism A -> B; returns the map and its inverse.
template <class F>
std::optional<std::pair<ExactMatrix<F>, ExactMatrix<F>>> find_isomorphism(const ActionModule<F>& a,
                                                                          const ActionModule<F>& b,
                                                                          std::uint64_t seed,
                                                                          std::size_t trials = 32);

enum class Refutation { None, Dimension, Invariants, SocleCriterion, FreeRank, DecompositionMismatch, SearchExhausted };

std::string refutation_name(Refutation r);

template <class F>
struct SummandCertificate {
  bool split = false;
  std::optional<ExactMatrix<F>> f;  // A -> B
  std::optional<ExactMatrix<F>> g;  // B -> A
  Refutation refutation = Refutation::None;
  bool proof = false;  // a certificate, or a refutation that does not depend on random choices
  std::string method;
  std::uint64_t seed = 0;
  std::size_t trials = 0;

  // g o f = id_A and both maps equivariant.
  bool verify(const ActionModule<F>& a, const ActionModule<F>& b) const;
};

// k is a summand of M iff some socle vector lies outside mM.
template <class F>
SummandCertificate<F> simple_summand_test(const ActionModule<F>& m);

// Largest r with R^r a summand of M.
template <class F>
std::size_t free_rank(const ActionModule<F>& m);

template <class F>
SummandCertificate<F> summand_test(const ActionModule<F>& a, const ActionModule<F>& b,
                                   const DecompositionOptions& opts = {});

// Variant reusing decompositions that were already computed.
template <class F>
SummandCertificate<F> summand_test(const ActionModule<F>& a, const DecompositionReport<F>& da,
                                   const ActionModule<F>& b, const DecompositionReport<F>& db,
                                   const DecompositionOptions& opts = {});

}  // namespace artinian
