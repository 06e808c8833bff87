#include "artinian/sampler.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace artinian {

void SamplerConfig::validate() const {
  if (e_min < 1 || e_max < e_min) throw Error("sampler needs 1 <= e_min <= e_max");
  if (e_max > 8) throw Error("sampler supports at most 8 variables");
  if (max_degree < 2) throw Error("sampler needs max_degree >= 2");
  if (max_generators < min_generators) throw Error("sampler needs min_generators <= max_generators");
  if (max_dim < 1) throw Error("sampler needs max_dim >= 1");
  if (max_attempts < 1) throw Error("sampler needs max_attempts >= 1");
}

std::vector<std::string> variable_names(std::size_t e) {
  static const char* letters[] = {"x", "y", "z", "w"};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < e; ++i) out.push_back(e <= 4 ? letters[i] : "x" + std::to_string(i + 1));
  return out;
}

std::vector<Exponent> minimalize_antichain(std::vector<Exponent> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Exponent> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
      redundant = j != i && divides(gens[j], gens[i]);
    if (!redundant) out.push_back(gens[i]);
  }
  return out;
}

std::vector<Exponent> standard_monomials(const std::vector<Exponent>& generators, std::size_t e) {
  std::vector<std::uint16_t> caps(e, 0);
  for (std::size_t i = 0; i < e; ++i) {
    for (const auto& g : generators) {
      bool pure = g[i] > 0;
      for (std::size_t j = 0; j < e && pure; ++j) pure = j == i || g[j] == 0;
      if (pure && (caps[i] == 0 || g[i] < caps[i])) caps[i] = g[i];
    }
    if (caps[i] == 0) throw Error("monomial ideal is missing a pure power");
  }
  std::vector<Exponent> out;
  Exponent cur(e, 0);
  while (true) {
    bool in_ideal = false;
    for (const auto& g : generators)
      if (divides(g, cur)) {
        in_ideal = true;
        break;
      }
    if (!in_ideal) out.push_back(cur);
    std::size_t i = 0;
    while (i < e && ++cur[i] == caps[i]) cur[i++] = 0;
    if (i == e) break;
  }
  return out;
}

namespace {

void all_monomials(std::size_t e, int degree, Exponent& cur, std::size_t pos, std::vector<Exponent>& out) {
  if (pos + 1 == e) {
    cur[pos] = static_cast<std::uint16_t>(degree);
    out.push_back(cur);
    return;
  }
  for (int d = degree; d >= 0; --d) {
    cur[pos] = static_cast<std::uint16_t>(d);
    all_monomials(e, degree - d, cur, pos + 1, out);
  }
}

std::string monomial_text(const Exponent& m, const std::vector<std::string>& vars) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += vars[i];
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s;
}

}  // namespace

MonomialSample sample_monomial_algebra(const SamplerConfig& config, std::size_t index) {
  config.validate();
  std::seed_seq seq{static_cast<std::uint32_t>(config.seed), static_cast<std::uint32_t>(config.seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(seq);
  auto uniform = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  for (std::size_t attempt = 1; attempt <= config.max_attempts; ++attempt) {
    const std::size_t e = uniform(config.e_min, config.e_max);
    std::vector<Exponent> gens;
    for (std::size_t i = 0; i < e; ++i) {
      Exponent p(e, 0);
      p[i] = static_cast<std::uint16_t>(uniform(2, static_cast<std::size_t>(config.max_degree)));
      gens.push_back(p);
    }
    // Mixed monomials not already in the ideal of pure powers.
    std::vector<Exponent> candidates;
    for (int d = 2; d <= config.max_degree; ++d) {
      std::vector<Exponent> level;
      Exponent cur(e, 0);
      all_monomials(e, d, cur, 0, level);
      for (const auto& m : level) {
        bool fresh = true;
        for (const auto& g : gens) fresh = fresh && !divides(g, m);
        if (fresh) candidates.push_back(m);
      }
    }
    std::size_t extra = std::min(uniform(config.min_generators, config.max_generators), candidates.size());
    std::shuffle(candidates.begin(), candidates.end(), rng);
    gens.insert(gens.end(), candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(extra));
    gens = minimalize_antichain(std::move(gens));
    std::size_t dim = standard_monomials(gens, e).size();
    if (dim > config.max_dim) continue;

    auto vars = variable_names(e);
    std::sort(gens.begin(), gens.end(), monomial_order_greater);
    std::ostringstream text;
    text << "field " << (config.field.is_prime_field() ? "F " + std::to_string(config.field.characteristic) : "Q")
         << "; vars ";
    for (std::size_t i = 0; i < e; ++i) text << (i ? "," : "") << vars[i];
    text << "; rels ";
    for (std::size_t i = 0; i < gens.size(); ++i) text << (i ? "," : "") << monomial_text(gens[i], vars);
    text << ";";
    MonomialSample s;
    s.index = index;
    s.attempts = attempt;
    s.dim = dim;
    s.presentation = parse_presentation(text.str());
    return s;
  }
  throw Error("sampler found no algebra with dim <= " + std::to_string(config.max_dim) + " in " +
              std::to_string(config.max_attempts) + " attempts");
}

std::optional<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> monomial_fibre_split(
    const Presentation& p) {
  const std::size_t e = p.variables.size();
  if (e < 2 || !p.is_monomial()) return std::nullopt;
  auto in_ideal = [&](const Exponent& m) {
    for (const auto& r : p.relations)
      if (divides(r.terms[0].exponent, m)) return true;
    return false;
  };
  // Connected components of the graph joining i, j when x_i x_j is not in the ideal.
  std::vector<std::size_t> comp(e, e);
  std::size_t ncomp = 0;
  for (std::size_t s = 0; s < e; ++s) {
    if (comp[s] != e) continue;
    std::vector<std::size_t> stack{s};
    comp[s] = ncomp;
    while (!stack.empty()) {
      std::size_t i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < e; ++j) {
        if (comp[j] != e || j == i) continue;
        Exponent m(e, 0);
        m[i] = m[j] = 1;
        if (!in_ideal(m)) {
          comp[j] = ncomp;
          stack.push_back(j);
        }
      }
    }
    ++ncomp;
  }
  if (ncomp < 2) return std::nullopt;
  std::pair<std::vector<std::size_t>, std::vector<std::size_t>> out;
  for (std::size_t i = 0; i < e; ++i) (comp[i] == 0 ? out.first : out.second).push_back(i);
  return out;
}

}  // namespace artinian
