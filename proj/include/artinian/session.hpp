#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "artinian/report.hpp"

namespace artinian {

// An algebra with its residue-field tower, independent of the coefficient field.
class Session {
 public:
  explicit Session(Presentation p, DecompositionOptions opts = {});
  static Session from_text(std::string_view text, std::optional<FieldSpec> field = std::nullopt,
                           DecompositionOptions opts = {});
  static Session from_file(const std::string& path, std::optional<FieldSpec> field = std::nullopt,
                           DecompositionOptions opts = {});

  const Presentation& presentation() const;
  FieldSpec field() const;
  const DecompositionOptions& options() const;
  std::string hash() const;
  std::size_t e() const;
  std::size_t dim() const;
  bool gorenstein() const;
  bool hypersurface() const;
  bool fibre_product() const;  // nontrivial splitting of a monomial presentation
  Json algebra_json() const;

  std::vector<std::int64_t> betti(std::size_t n);
  KoszulProfile ring_profile() const;
  KoszulProfile syzygy_profile(std::size_t n);

  SerreReport serre(std::size_t n_max);
  GolodReport golod(std::optional<std::size_t> n_max = std::nullopt);
  ConditionTable table(std::size_t n_max, std::size_t l_max);
  StarScanReport star_scan(std::size_t bound);
  bool burch();
  bool simple_summand(std::size_t n);
  ExceptionalReport exceptional(std::size_t bound);
  GolodDecompositionReport golod_decomposition(std::size_t max_shift, DecompositionMode mode,
                                               std::optional<std::size_t> precision = std::nullopt);
  TachikawaReport tachikawa(std::size_t n_max, const StarScanReport* star = nullptr);
  BoundednessReport boundedness(std::size_t n_max);
  std::vector<CheckReport> formulas(std::size_t n_max);
  DualSequenceReport dual_sequence(std::size_t n);

  // module: "k", "m", "R", "K" or "cyclic" (R modulo random elements of m drawn from the seed).
  MonotonicityReport monotonicity(const std::string& module, std::size_t a, std::size_t b, std::size_t bound);

  Json simple_summand_json(std::size_t n, bool with_maps = true);
  Json syzygy_summand_json(std::size_t a, std::size_t b, bool with_maps = true);
  Json decompose_syzygy_json(std::size_t n, bool with_maps = false);

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

}  // namespace artinian
