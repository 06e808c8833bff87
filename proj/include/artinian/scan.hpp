#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "artinian/report.hpp"
#include "artinian/sampler.hpp"

namespace artinian {

struct ScanConfig {
  SamplerConfig sampler;
  std::size_t samples = 100;
  std::vector<std::string> checks = {"betti", "golod", "star", "burch", "exceptional"};
  std::optional<std::size_t> precision;  // Golod precision; default e + 6
  std::size_t star_bound = 4;
  std::uint64_t decomposition_seed = DecompositionOptions{}.seed;

  static ScanConfig from_json(const Json& j);
  Json to_json() const;
  void validate() const;
};

const std::vector<std::string>& scan_check_names();

// Verdicts for sample `index`; deterministic in (config, index).
Json scan_record(const ScanConfig& config, std::size_t index);

// Boolean filter over record fields: identifiers, !, &&, ||, parentheses and integer comparisons.
class WhereFilter {
 public:
  explicit WhereFilter(const std::string& expression);
  bool operator()(const Json& record) const;
  const std::string& text() const { return text_; }

  struct Node;

 private:
  std::string text_;
  std::shared_ptr<const Node> root_;
};

struct ScanOptions {
  std::size_t jobs = 1;
  bool ordered = false;  // emit in sample order regardless of completion order
  std::optional<WhereFilter> where;
};

// Returns the number of emitted records.
std::size_t run_scan(const ScanConfig& config, const ScanOptions& options,
                     const std::function<void(const Json&)>& emit);

}  // namespace artinian
