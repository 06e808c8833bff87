#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

namespace artinian {

constexpr std::size_t kMaxGradedVariables = 8;

// Multidegree (or a standard degree stored in slot 0).
struct Degree {
  std::array<std::int16_t, kMaxGradedVariables> v{};

  Degree& operator+=(const Degree& o) {
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<std::int16_t>(v[i] + o.v[i]);
    return *this;
  }
  Degree& operator-=(const Degree& o) {
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<std::int16_t>(v[i] - o.v[i]);
    return *this;
  }
  friend Degree operator+(Degree a, const Degree& b) { return a += b; }
  friend Degree operator-(Degree a, const Degree& b) { return a -= b; }
  friend auto operator<=>(const Degree&, const Degree&) = default;
  friend bool operator==(const Degree&, const Degree&) = default;

  int total() const {
    int t = 0;
    for (auto x : v) t += x;
    return t;
  }
  std::string to_string() const;
};

struct DegreeHash {
  std::size_t operator()(const Degree& d) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (auto x : d.v) {
      h ^= static_cast<std::uint16_t>(x);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

using Key = std::uint32_t;

// Maps degrees to dense block ids shared by the rows and columns of one map.
class DegreeInterner {
 public:
  Key id(const Degree& d) {
    auto [it, inserted] = ids_.try_emplace(d, static_cast<Key>(ids_.size()));
    return it->second;
  }
  std::vector<Key> ids(const std::vector<Degree>& ds) {
    std::vector<Key> out;
    out.reserve(ds.size());
    for (const auto& d : ds) out.push_back(id(d));
    return out;
  }
  Key size() const { return static_cast<Key>(ids_.size()); }

 private:
  std::unordered_map<Degree, Key, DegreeHash> ids_;
};

}  // namespace artinian
