#include "artinian/scan.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <map>
#include <mutex>
#include <thread>

#include "artinian/session.hpp"

namespace artinian {

const std::vector<std::string>& scan_check_names() {
  static const std::vector<std::string> names = {"betti",       "koszul",    "golod",
                                                 "star",        "burch",     "exceptional",
                                                 "tachikawa",   "golod_decomposition", "formulas"};
  return names;
}

void ScanConfig::validate() const {
  sampler.validate();
  if (samples == 0) throw Error("scan needs at least one sample");
  if (star_bound == 0) throw Error("star_bound must be positive");
  for (const auto& c : checks)
    if (std::find(scan_check_names().begin(), scan_check_names().end(), c) == scan_check_names().end())
      throw Error("unknown check '" + c + "'");
}

ScanConfig ScanConfig::from_json(const Json& j) {
  if (!j.is_object()) throw Error("scan config must be a JSON object");
  static const std::vector<std::string> known = {"field",   "e",          "max_degree", "generators", "max_dim",
                                                 "samples", "seed",       "checks",     "precision",  "star_bound",
                                                 "decomposition_seed", "max_attempts"};
  for (const auto& [key, value] : j.items())
    if (std::find(known.begin(), known.end(), key) == known.end()) throw Error("unknown config key '" + key + "'");
  ScanConfig c;
  try {
    if (j.contains("field")) c.sampler.field = FieldSpec::parse(j["field"].get<std::string>());
    if (j.contains("e")) {
      const auto& e = j["e"];
      if (e.is_array()) {
        if (e.size() != 2) throw Error("'e' must be an integer or a [min, max] pair");
        c.sampler.e_min = e[0].get<std::size_t>();
        c.sampler.e_max = e[1].get<std::size_t>();
      } else {
        c.sampler.e_min = c.sampler.e_max = e.get<std::size_t>();
      }
    }
    if (j.contains("max_degree")) c.sampler.max_degree = j["max_degree"].get<int>();
    if (j.contains("generators")) {
      const auto& g = j["generators"];
      if (!g.is_array() || g.size() != 2) throw Error("'generators' must be a [min, max] pair");
      c.sampler.min_generators = g[0].get<std::size_t>();
      c.sampler.max_generators = g[1].get<std::size_t>();
    }
    if (j.contains("max_dim")) c.sampler.max_dim = j["max_dim"].get<std::size_t>();
    if (j.contains("max_attempts")) c.sampler.max_attempts = j["max_attempts"].get<std::size_t>();
    if (j.contains("samples")) c.samples = j["samples"].get<std::size_t>();
    if (j.contains("seed")) c.sampler.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("checks")) c.checks = j["checks"].get<std::vector<std::string>>();
    if (j.contains("precision") && !j["precision"].is_null()) c.precision = j["precision"].get<std::size_t>();
    if (j.contains("star_bound")) c.star_bound = j["star_bound"].get<std::size_t>();
    if (j.contains("decomposition_seed")) c.decomposition_seed = j["decomposition_seed"].get<std::uint64_t>();
  } catch (const Json::exception& ex) {
    throw Error(std::string("invalid scan config: ") + ex.what());
  }
  c.validate();
  return c;
}

Json ScanConfig::to_json() const {
  return Json{{"field", sampler.field.name()},
              {"e", Json::array({sampler.e_min, sampler.e_max})},
              {"max_degree", sampler.max_degree},
              {"generators", Json::array({sampler.min_generators, sampler.max_generators})},
              {"max_dim", sampler.max_dim},
              {"max_attempts", sampler.max_attempts},
              {"samples", samples},
              {"seed", sampler.seed},
              {"checks", checks},
              {"precision", precision ? Json(*precision) : Json(nullptr)},
              {"star_bound", star_bound},
              {"decomposition_seed", decomposition_seed}};
}

Json scan_record(const ScanConfig& config, std::size_t index) {
  Json r;
  r["index"] = index;
  r["seed"] = config.sampler.seed;
  try {
    auto sample = sample_monomial_algebra(config.sampler, index);
    DecompositionOptions opts;
    opts.seed = config.decomposition_seed + index;
    Session s(sample.presentation, opts);
    auto has = [&](const char* c) { return std::find(config.checks.begin(), config.checks.end(), c) != config.checks.end(); };
    const std::size_t n_max = config.precision.value_or(s.e() + 6);
    r["presentation"] = s.presentation().to_text();
    r["algebra_hash"] = s.hash();
    r["field"] = s.field().name();
    r["e"] = s.e();
    r["dim"] = s.dim();
    r["gorenstein"] = s.gorenstein();
    r["hypersurface"] = s.hypersurface();
    r["fibre"] = s.fibre_product();
    r["decomposition_seed"] = opts.seed;
    if (has("betti")) r["betti"] = s.betti(n_max);
    if (has("koszul")) r["koszul"] = s.ring_profile().h;
    std::optional<GolodReport> golod;
    if (has("golod") || has("golod_decomposition")) golod = s.golod(n_max);
    if (has("golod")) {
      r["golod"] = golod->golod_to_precision;
      r["golod_verdict"] = golod->verdict();
      r["slack"] = golod->serre.slack;
    }
    std::optional<StarScanReport> star;
    if (has("star") || has("tachikawa")) star = s.star_scan(config.star_bound);
    if (has("star")) {
      Json pairs = Json::array();
      for (const auto& p : star->pairs) pairs.push_back(Json::array({p.a, p.b}));
      r["star"] = !star->pairs.empty();
      r["star_pairs"] = std::move(pairs);
      r["star_monte_carlo"] = star->monte_carlo();
      r["star_undecided"] = star->undecided.size();
    }
    if (has("burch")) r["burch"] = s.burch();
    if (has("exceptional")) r["exceptional"] = s.exceptional(config.star_bound).exceptional;
    if (has("tachikawa")) {
      auto t = s.tachikawa(n_max, &*star);
      r["tachikawa_consistent"] = t.consistent;
      r["tachikawa_first_nonvanishing"] = t.first_nonvanishing ? Json(*t.first_nonvanishing) : Json(nullptr);
    }
    if (has("golod_decomposition")) {
      const std::size_t precision = config.precision.value_or(s.e() + 4);
      const std::size_t shifts = precision >= s.e() + 1 ? std::min<std::size_t>(2, precision - s.e() - 1) : 0;
      auto d = s.golod_decomposition(shifts, DecompositionMode::Numeric, precision);
      auto g = s.golod(precision);
      r["golod_decomposition"] = d.numeric_passed;
      r["golod_decomposition_agrees"] = d.numeric_passed == g.golod_to_precision;
    }
    if (has("formulas")) {
      bool ok = true;
      for (const auto& rep : s.formulas(std::min<std::size_t>(n_max, 4))) ok = ok && rep.passed();
      r["formulas"] = ok;
    }
  } catch (const std::exception& ex) {
    r["error"] = ex.what();
  }
  return r;
}

// ---- where-expressions ----

struct WhereFilter::Node {
  enum Kind { Ident, Not, And, Or, Compare, Const } kind;
  std::string name, op;
  long long value = 0;
  bool constant = false;
  std::shared_ptr<const Node> left, right;
};

namespace {

using NodePtr = std::shared_ptr<const WhereFilter::Node>;

class WhereParser {
 public:
  explicit WhereParser(const std::string& text) : s_(text) {}

  NodePtr parse() {
    auto n = parse_or();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + s_.substr(pos_, 1) + "'");
    return n;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(const std::string& tok) {
    skip();
    if (s_.compare(pos_, tok.size(), tok) == 0) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error("where-expression, column " + std::to_string(pos_ + 1) + ": " + msg);
  }
  NodePtr make(WhereFilter::Node n) { return std::make_shared<const WhereFilter::Node>(std::move(n)); }

  NodePtr parse_or() {
    auto l = parse_and();
    while (accept("||")) l = make({WhereFilter::Node::Or, "", "", 0, false, l, parse_and()});
    return l;
  }
  NodePtr parse_and() {
    auto l = parse_unary();
    while (accept("&&")) l = make({WhereFilter::Node::And, "", "", 0, false, l, parse_unary()});
    return l;
  }
  NodePtr parse_unary() {
    skip();
    if (pos_ < s_.size() && s_[pos_] == '!' && (pos_ + 1 >= s_.size() || s_[pos_ + 1] != '=')) {
      ++pos_;
      return make({WhereFilter::Node::Not, "", "", 0, false, parse_unary(), nullptr});
    }
    if (accept("(")) {
      auto n = parse_or();
      if (!accept(")")) fail("expected ')'");
      return n;
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    if (start == pos_) fail("expected an identifier");
    std::string name = s_.substr(start, pos_ - start);
    if (name == "true" || name == "false") return make({WhereFilter::Node::Const, "", "", 0, name == "true", nullptr, nullptr});
    for (const char* op : {"==", "!=", "<=", ">=", "<", ">"}) {
      if (accept(op)) {
        skip();
        std::size_t vs = pos_;
        if (pos_ < s_.size() && s_[pos_] == '-') ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (vs == pos_) fail("expected an integer");
        return make({WhereFilter::Node::Compare, name, op, std::stoll(s_.substr(vs, pos_ - vs)), false, nullptr, nullptr});
      }
    }
    return make({WhereFilter::Node::Ident, name, "", 0, false, nullptr, nullptr});
  }

  std::string s_;
  std::size_t pos_ = 0;
};

bool evaluate(const WhereFilter::Node& n, const Json& r) {
  switch (n.kind) {
    case WhereFilter::Node::Const:
      return n.constant;
    case WhereFilter::Node::Not:
      return !evaluate(*n.left, r);
    case WhereFilter::Node::And:
      return evaluate(*n.left, r) && evaluate(*n.right, r);
    case WhereFilter::Node::Or:
      return evaluate(*n.left, r) || evaluate(*n.right, r);
    case WhereFilter::Node::Ident: {
      if (!r.contains(n.name)) throw Error("record has no field '" + n.name + "'");
      const auto& v = r[n.name];
      if (!v.is_boolean()) throw Error("field '" + n.name + "' is not boolean");
      return v.get<bool>();
    }
    case WhereFilter::Node::Compare: {
      if (!r.contains(n.name)) throw Error("record has no field '" + n.name + "'");
      const auto& v = r[n.name];
      if (!v.is_number_integer()) throw Error("field '" + n.name + "' is not an integer");
      long long x = v.get<long long>();
      if (n.op == "==") return x == n.value;
      if (n.op == "!=") return x != n.value;
      if (n.op == "<=") return x <= n.value;
      if (n.op == ">=") return x >= n.value;
      if (n.op == "<") return x < n.value;
      return x > n.value;
    }
  }
  return false;
}

}  // namespace

WhereFilter::WhereFilter(const std::string& expression) : text_(expression), root_(WhereParser(expression).parse()) {}

bool WhereFilter::operator()(const Json& record) const {
  if (record.contains("error")) return false;
  return evaluate(*root_, record);
}

std::size_t run_scan(const ScanConfig& config, const ScanOptions& options,
                     const std::function<void(const Json&)>& emit) {
  config.validate();
  const std::size_t jobs = std::max<std::size_t>(1, std::min(options.jobs, config.samples));
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::map<std::size_t, std::optional<Json>> pending;
  std::size_t next_to_emit = 0, emitted = 0;
  std::exception_ptr failure;

  auto deliver = [&](std::size_t index, Json record) {
    std::optional<Json> keep;
    if (!options.where || (*options.where)(record)) keep = std::move(record);
    std::lock_guard<std::mutex> lock(mu);
    if (!options.ordered) {
      if (keep) {
        emit(*keep);
        ++emitted;
      }
      return;
    }
    pending[index] = std::move(keep);
    while (!pending.empty() && pending.begin()->first == next_to_emit) {
      if (pending.begin()->second) {
        emit(*pending.begin()->second);
        ++emitted;
      }
      pending.erase(pending.begin());
      ++next_to_emit;
    }
  };
  auto worker = [&] {
    try {
      for (std::size_t i; (i = next.fetch_add(1)) < config.samples;) deliver(i, scan_record(config, i));
    } catch (...) {
      std::lock_guard<std::mutex> lock(mu);
      if (!failure) failure = std::current_exception();
      next = config.samples;
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return emitted;
}

}  // namespace artinian
