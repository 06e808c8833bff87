#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "artinian/presentation.hpp"

namespace artinian {

struct SamplerConfig {
  FieldSpec field = FieldSpec::prime(101);
  std::size_t e_min = 1, e_max = 3;
  int max_degree = 3;  // pure powers and extra generators have degree in [2, max_degree]
  std::size_t min_generators = 0, max_generators = 4;  // extra generators beyond the pure powers
  std::size_t max_dim = 20;
  std::uint64_t seed = 1;
  std::size_t max_attempts = 1000;

  void validate() const;
};

struct MonomialSample {
  std::size_t index = 0;
  std::size_t attempts = 0;
  std::size_t dim = 0;  // number of standard monomials
  Presentation presentation;
};

std::vector<std::string> variable_names(std::size_t e);

// Deterministic in (config.seed, index).
MonomialSample sample_monomial_algebra(const SamplerConfig& config, std::size_t index);

// Standard monomials of a monomial ideal containing a power of every variable.
std::vector<Exponent> standard_monomials(const std::vector<Exponent>& generators, std::size_t e);

// Removes generators divisible by another one; sorted output.
std::vector<Exponent> minimalize_antichain(std::vector<Exponent> gens);

// Variable partition (A, B) with every product x_a x_b in the ideal, when the presentation is a
// nontrivial fibre product of monomial algebras. Nullopt when none exists or relations are not monomial.
std::optional<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> monomial_fibre_split(
    const Presentation& p);

}  // namespace artinian
