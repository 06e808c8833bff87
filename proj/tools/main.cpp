#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "artinian/corpus.hpp"
#include "artinian/scan.hpp"
#include "artinian/session.hpp"

using namespace artinian;

namespace {

constexpr int kOk = 0, kInputError = 1, kMismatch = 2;

struct Global {
  std::string field;
  std::optional<std::size_t> precision;
  std::uint64_t seed = DecompositionOptions{}.seed;
  bool json = false;
  std::string out;
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw Error("cannot write '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

std::optional<FieldSpec> field_override(const Global& g) {
  if (g.field.empty()) return std::nullopt;
  return FieldSpec::parse(g.field);
}

DecompositionOptions decomposition_options(const Global& g) {
  DecompositionOptions o;
  o.seed = g.seed;
  return o;
}

template <class T>
std::string join(const std::vector<T>& v, const std::string& sep = " ") {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

std::string pairs_text(const Json& pairs) {
  std::vector<std::string> out;
  for (const auto& p : pairs) {
    if (p.is_object())
      out.push_back("(" + std::to_string(p["a"].get<std::size_t>()) + "," + std::to_string(p["b"].get<std::size_t>()) +
                    ")");
    else
      out.push_back("(" + std::to_string(p[0].get<std::size_t>()) + "," + std::to_string(p[1].get<std::size_t>()) +
                    ")");
  }
  return out.empty() ? "none" : join(out);
}

// ---- report ----

struct ReportFlags {
  std::string file;
  std::optional<std::size_t> betti;
  bool koszul = false, golod = false, table = false, burch = false, tachikawa = false, boundedness = false;
  bool formulas = false, all = false, structural = false, maps = false;
  std::optional<std::size_t> star, exceptional, golod_decomposition, dual;
  std::vector<std::string> expect;
};

bool verdict_of(const Json& report, const std::string& key, bool& value) {
  static const std::map<std::string, std::vector<std::string>> paths = {
      {"golod", {"golod", "golod_to_precision"}},
      {"burch", {"burch"}},
      {"exceptional", {"exceptional", "exceptional"}},
      {"gorenstein", {"algebra", "gorenstein"}},
      {"hypersurface", {"algebra", "hypersurface"}},
      {"formulas", {"formulas_passed"}},
      {"tachikawa", {"tachikawa", "consistent"}},
      {"golod_decomposition", {"golod_decomposition", "numeric_passed"}},
  };
  if (key == "star") {
    if (!report.contains("star")) return false;
    value = !report["star"]["pairs"].empty();
    return true;
  }
  if (key == "fibre") {
    value = !report["algebra"]["fibre_product"].is_null();
    return true;
  }
  auto it = paths.find(key);
  if (it == paths.end()) throw Error("unknown expectation key '" + key + "'");
  const Json* cur = &report;
  for (const auto& p : it->second) {
    if (!cur->contains(p)) return false;
    cur = &(*cur)[p];
  }
  value = cur->get<bool>();
  return true;
}

void print_report_text(std::ostream& os, const Json& r) {
  const auto& a = r["algebra"];
  os << "algebra   " << a["presentation"]["text"].get<std::string>().substr(0, std::string::npos);
  os << "hash      " << a["hash"].get<std::string>() << "\n";
  os << "dim " << a["dim"] << ", e = " << a["embedding_dimension"] << ", socle dim " << a["socle_dim"]
     << ", Hilbert " << join(a["hilbert"].get<std::vector<std::size_t>>()) << "\n";
  os << "Gorenstein " << (a["gorenstein"].get<bool>() ? "yes" : "no") << ", hypersurface "
     << (a["hypersurface"].get<bool>() ? "yes" : "no") << ", fibre product "
     << (a["fibre_product"].is_null() ? "no" : "yes") << "\n";
  os << "h(R)      " << join(a["koszul"]["h"].get<std::vector<std::int64_t>>()) << "\n";
  if (r.contains("betti")) os << "betti(k)  " << join(r["betti"]["values"].get<std::vector<std::int64_t>>()) << "\n";
  if (r.contains("koszul")) {
    for (const auto& p : r["koszul"])
      os << "h(" << p["label"].get<std::string>() << ") " << join(p["h"].get<std::vector<std::int64_t>>()) << "\n";
  }
  if (r.contains("golod")) {
    const auto& g = r["golod"];
    os << "golod     " << g["verdict"].get<std::string>() << " (n <= " << g["n_max"] << ")\n";
    os << "slack     " << join(g["serre"]["slack"].get<std::vector<std::int64_t>>()) << "\n";
  }
  if (r.contains("table")) {
    const auto& t = r["table"];
    std::string b;
    for (const auto& x : t["B"]) b += x.get<bool>() ? "1" : "0";
    os << "B_n       " << b << "\n";
    for (std::size_t m = 0; m < t["H"].size(); ++m) {
      std::string h;
      for (const auto& x : t["H"][m]) h += x.get<bool>() ? "1" : "0";
      os << "H_{" << m << ",l}   " << h << "\n";
    }
    os << "table     " << (t["passed"].get<bool>() ? "consistent" : "VIOLATIONS: " + join(t["violations"].get<std::vector<std::string>>(), "; ")) << "\n";
  }
  if (r.contains("star")) {
    const auto& s = r["star"];
    os << "star      pairs " << pairs_text(s["pairs"]) << " (bound " << s["bound"] << ", seed " << s["seed"]
       << (s["monte_carlo"].get<bool>() ? ", Monte Carlo" : "") << ")\n";
    if (!s["undecided"].empty()) os << "          undecided " << pairs_text(s["undecided"]) << "\n";
  }
  if (r.contains("burch")) os << "burch     " << (r["burch"].get<bool>() ? "yes" : "no") << "\n";
  if (r.contains("exceptional")) {
    const auto& x = r["exceptional"];
    os << "exceptional " << (x["exceptional"].get<bool>() ? "yes" : "no");
    if (!x["first_simple_summand"].is_null()) os << " (k | syz_" << x["first_simple_summand"] << ")";
    os << " at precision " << x["bound"] << "\n";
  }
  if (r.contains("golod_decomposition")) {
    const auto& d = r["golod_decomposition"];
    os << "decomposition numeric " << (d["numeric_passed"].get<bool>() ? "match" : "mismatch");
    if (!d["structural_passed"].is_null())
      os << ", structural " << (d["structural_passed"].get<bool>() ? "certified" : "not certified");
    os << " (precision " << d["precision"] << ", " << d["golod_verdict"].get<std::string>() << ")\n";
    for (const auto& s : d["shifts"])
      os << "  shift " << s["shift"] << ": betti " << join(s["left_betti"].get<std::vector<std::int64_t>>()) << " vs "
         << join(s["right_betti"].get<std::vector<std::int64_t>>()) << "\n";
  }
  if (r.contains("tachikawa")) {
    const auto& t = r["tachikawa"];
    os << "tachikawa " << t["summary"].get<std::string>() << (t["consistent"].get<bool>() ? "" : " INCONSISTENT")
       << "\n";
  }
  if (r.contains("boundedness")) {
    const auto& b = r["boundedness"];
    os << "betti(K)  " << join(b["betti"].get<std::vector<std::int64_t>>()) << " (" << b["trend"].get<std::string>()
       << ")\n";
  }
  if (r.contains("dual_sequence")) {
    const auto& d = r["dual_sequence"];
    os << "dual seq  " << (d["passed"].get<bool>() ? "passed" : "failed");
    if (!d["first_nonvanishing_ext"].is_null()) os << " (Ext^" << d["first_nonvanishing_ext"] << "(K_R, R) != 0)";
    os << "\n";
  }
  if (r.contains("formulas")) {
    for (const auto& f : r["formulas"])
      os << "formula   " << f["name"].get<std::string>() << ": "
         << (f["passed"].get<bool>() ? "ok" : "FAILED " + join(f["violations"].get<std::vector<std::string>>(), "; "))
         << "\n";
  }
  if (r.contains("expectations"))
    for (const auto& e : r["expectations"])
      os << (e["passed"].get<bool>() ? "PASS " : "FAIL ") << e["key"].get<std::string>() << " expected "
         << e["expected"] << ", observed " << e["observed"] << "\n";
}

int cmd_report(const Global& g, const ReportFlags& f) {
  Session s = Session::from_file(f.file, field_override(g), decomposition_options(g));
  const std::size_t n_max = g.precision.value_or(s.e() + 6);
  const bool all = f.all;
  Json r;
  r["algebra"] = s.algebra_json();
  r["field"] = s.field().name();
  r["seed"] = g.seed;
  r["precision"] = n_max;
  bool problems = false;
  if (f.betti || all) r["betti"] = values_record("k", s.hash(), s.betti(f.betti.value_or(n_max)));
  if (f.koszul || all) {
    Json profiles = Json::array();
    for (std::size_t n = 0; n <= std::min<std::size_t>(n_max, 4); ++n) profiles.push_back(to_json(s.syzygy_profile(n)));
    r["koszul"] = std::move(profiles);
  }
  if (f.golod || all) r["golod"] = to_json(s.golod(n_max));
  if (f.table || all) {
    auto t = s.table(n_max, n_max > s.e() + 1 ? n_max - s.e() - 1 : 0);
    problems = problems || !t.passed();
    r["table"] = to_json(t);
  }
  std::optional<StarScanReport> star;
  if (f.star || f.tachikawa || all) star = s.star_scan(f.star.value_or(4));
  if (f.star || all) r["star"] = to_json(*star);
  if (f.burch || all) r["burch"] = s.burch();
  if (f.exceptional || all) r["exceptional"] = to_json(s.exceptional(f.exceptional.value_or(4)));
  if (f.golod_decomposition || all) {
    auto mode = f.structural ? DecompositionMode::Structural : DecompositionMode::Numeric;
    r["golod_decomposition"] = to_json(s.golod_decomposition(f.golod_decomposition.value_or(2), mode, g.precision));
  }
  if (f.tachikawa || all) {
    auto t = s.tachikawa(n_max, &*star);
    problems = problems || !t.consistent;
    r["tachikawa"] = to_json(t);
  }
  if (f.boundedness || all) r["boundedness"] = to_json(s.boundedness(n_max));
  if (f.dual) r["dual_sequence"] = to_json(s.dual_sequence(*f.dual));
  if (f.formulas || all) {
    Json reports = Json::array();
    bool ok = true;
    for (const auto& rep : s.formulas(std::min<std::size_t>(n_max, 4))) {
      ok = ok && rep.passed();
      reports.push_back(to_json(rep));
    }
    problems = problems || !ok;
    r["formulas"] = std::move(reports);
    r["formulas_passed"] = ok;
  }
  if (!f.expect.empty()) {
    Json outcomes = Json::array();
    for (const auto& e : f.expect) {
      auto eq = e.find('=');
      if (eq == std::string::npos) throw Error("--expect takes KEY=yes|no, got '" + e + "'");
      std::string key = e.substr(0, eq), want = e.substr(eq + 1);
      if (want != "yes" && want != "no") throw Error("--expect value must be yes or no, got '" + want + "'");
      bool value = false;
      bool known = verdict_of(r, key, value);
      bool pass = known && value == (want == "yes");
      problems = problems || !pass;
      outcomes.push_back(Json{{"key", key}, {"expected", want}, {"observed", known ? (value ? "yes" : "no") : "not computed"}, {"passed", pass}});
    }
    r["expectations"] = std::move(outcomes);
  }
  r["passed"] = !problems;
  Output out(g.out);
  if (g.json)
    out.stream() << r.dump(2) << "\n";
  else
    print_report_text(out.stream(), r);
  return problems ? kMismatch : kOk;
}

// ---- reproduce-paper ----

int cmd_reproduce(const Global& g, const std::vector<std::string>& ids) {
  std::vector<const CorpusEntry*> entries;
  if (ids.empty())
    for (const auto& e : builtin_corpus()) entries.push_back(&e);
  else
    for (const auto& id : ids) entries.push_back(&corpus_entry(id));
  auto override = field_override(g);
  Json results = Json::array();
  bool all_ok = true;
  for (const auto* e : entries) {
    std::vector<FieldSpec> fields = override ? std::vector<FieldSpec>{*override} : e->fields;
    for (const auto& f : fields)
      for (const auto& o : run_corpus_entry(*e, f, decomposition_options(g))) {
        all_ok = all_ok && o.passed;
        results.push_back(to_json(o));
      }
  }
  Output out(g.out);
  auto& os = out.stream();
  if (g.json) {
    os << Json{{"passed", all_ok}, {"seed", g.seed}, {"results", results}}.dump(2) << "\n";
  } else {
    os << std::left << std::setw(5) << "" << std::setw(6) << "entry" << std::setw(6) << "field" << std::setw(48)
       << "expectation"
       << "observed\n";
    for (const auto& r : results)
      os << std::setw(5) << (r["passed"].get<bool>() ? "PASS" : "FAIL") << std::setw(6)
         << r["entry"].get<std::string>() << std::setw(6) << r["field"].get<std::string>() << std::setw(48)
         << r["expectation"].get<std::string>() << r["observed"].get<std::string>() << "\n";
    os << (all_ok ? "all expectations reproduced" : "MISMATCH") << "\n";
  }
  return all_ok ? kOk : kMismatch;
}

// ---- scan ----

struct ScanFlags {
  std::string config;
  std::size_t jobs = 1;
  bool ordered = false;
  std::string where;
  std::optional<std::size_t> samples;
};

int cmd_scan(const Global& g, const ScanFlags& f, bool seed_given) {
  std::ifstream in(f.config);
  if (!in) throw Error("cannot open scan config '" + f.config + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& ex) {
    throw Error(std::string("scan config is not valid JSON: ") + ex.what());
  }
  auto config = ScanConfig::from_json(j);
  if (seed_given) config.sampler.seed = g.seed;
  if (f.samples) config.samples = *f.samples;
  if (g.precision) config.precision = g.precision;
  if (!g.field.empty()) config.sampler.field = FieldSpec::parse(g.field);
  config.validate();
  ScanOptions opts;
  opts.jobs = f.jobs;
  opts.ordered = f.ordered;
  if (!f.where.empty()) opts.where.emplace(f.where);
  Output out(g.out);
  auto& os = out.stream();
  run_scan(config, opts, [&](const Json& r) { os << r.dump() << "\n" << std::flush; });
  return kOk;
}

// ---- decompose / summand / monotonicity ----

int cmd_decompose(const Global& g, const std::string& file, std::size_t n, bool maps) {
  Session s = Session::from_file(file, field_override(g), decomposition_options(g));
  Json d = s.decompose_syzygy_json(n, maps);
  Output out(g.out);
  auto& os = out.stream();
  if (g.json) {
    os << d.dump(2) << "\n";
  } else {
    os << d["label"].get<std::string>() << ": dim " << d["dim"] << ", " << d["summands"] << " summands ("
       << (d["monte_carlo"].get<bool>() ? "Monte Carlo" : "proven") << ", seed " << d["seed"] << ")\n";
    for (const auto& c : d["classes"])
      os << "  class " << c["class"] << ": dim " << c["dim"] << " x " << c["multiplicity"]
         << (c["proven_indecomposable"].get<bool>() ? " (End = k)" : "") << "\n";
  }
  return kOk;
}

int cmd_summand(const Global& g, const std::string& file, std::size_t a, std::size_t b, bool maps) {
  Session s = Session::from_file(file, field_override(g), decomposition_options(g));
  Json c = s.syzygy_summand_json(a, b, maps || g.json);
  Output out(g.out);
  auto& os = out.stream();
  if (g.json) {
    os << c.dump(2) << "\n";
  } else {
    os << "syz_" << a << "(k) | syz_" << b << "(k): ";
    if (c["split"].get<bool>())
      os << "certified (" << c["method"].get<std::string>() << ")\n";
    else
      os << "refuted (" << c["refutation"].get<std::string>() << (c["proof"].get<bool>() ? ", proof" : ", Monte Carlo")
         << ")\n";
  }
  return kOk;
}

int cmd_monotonicity(const Global& g, const std::string& file, std::size_t a, std::size_t b, const std::string& module) {
  Session s = Session::from_file(file, field_override(g), decomposition_options(g));
  auto r = s.monotonicity(module, a, b, g.precision.value_or(s.e() + 6));
  Output out(g.out);
  auto& os = out.stream();
  if (g.json) {
    os << to_json(r).dump(2) << "\n";
  } else {
    os << "module " << r.module_label << ", pair (" << a << "," << b << ")\n";
    if (r.dichotomy_branch)
      os << "a > b: hypersurface " << (r.hypersurface ? "confirmed" : "NOT confirmed") << "\n";
    else
      os << "betti " << join(r.betti) << "\n";
    for (const auto& st : r.steps)
      os << "  beta_" << st.p * (st.n + 1) + st.q << " = " << st.upper << " = beta_" << st.p * st.n + st.q << " + Tor = "
         << st.lower << " + " << st.tor << (st.identity ? "" : "  MISMATCH") << "\n";
    os << (r.passed() ? "passed" : "FAILED: " + join(r.violations, "; ")) << "\n";
  }
  return r.passed() ? kOk : kMismatch;
}

int cmd_fibre(const Global& g, const std::string& s_file, const std::string& t_file, const std::string& out_path) {
  auto s = load_presentation(s_file);
  auto t = load_presentation(t_file);
  if (auto f = field_override(g)) {
    s.field = *f;
    t.field = *f;
  }
  Presentation r = fibre_product_presentation(s, t);
  Session check(r);  // builds and validates the algebra
  Output out(out_path.empty() ? g.out : out_path);
  out.stream() << r.to_text();
  if (!out_path.empty() || !g.out.empty())
    std::cerr << "fibre product: dim " << check.dim() << ", e = " << check.e() << ", hash " << check.hash() << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact homological computations over Artinian local algebras"};
  app.require_subcommand(1);
  Global g;
  app.add_option("--field", g.field, "Override the coefficient field (Q or F<p>)");
  app.add_option("--precision", g.precision, "Homological degree bound");
  auto* seed_opt = app.add_option("--seed", g.seed, "Seed for randomized decompositions and scans");
  app.add_flag("--json", g.json, "Emit JSON");
  app.add_option("--out", g.out, "Write output to a file");

  ReportFlags rf;
  auto* report = app.add_subcommand("report", "Analyse one ring file");
  report->fallthrough();
  report->add_option("ring", rf.file, "Ring file")->required();
  report->add_option("--betti", rf.betti, "Betti numbers of k up to this degree");
  report->add_flag("--koszul", rf.koszul, "Koszul profiles of low syzygies of k");
  report->add_flag("--golod", rf.golod, "Serre slacks and Golod verdict");
  report->add_flag("--table", rf.table, "Truth table of the B and H conditions");
  report->add_option("--star", rf.star, "Syzygy summand scan up to this bound");
  report->add_flag("--burch", rf.burch, "Burch test (k | syz_2 k)");
  report->add_option("--exceptional", rf.exceptional, "Exceptional test up to this bound");
  report->add_option("--golod-decomposition", rf.golod_decomposition, "Golod decomposition check for shifts 0..N")
      ;
  report->add_flag("--structural", rf.structural, "Certify the Golod decomposition by explicit isomorphisms");
  report->add_flag("--tachikawa", rf.tachikawa, "Ext^i(K_R, R) probe");
  report->add_flag("--boundedness", rf.boundedness, "Betti numbers of the canonical module");
  report->add_option("--dual", rf.dual, "Dual sequence check for K_R to this degree");
  report->add_flag("--formulas", rf.formulas, "Koszul homology identities");
  report->add_flag("--all", rf.all, "Run every analysis");
  report->add_option("--expect", rf.expect, "Expected verdict KEY=yes|no (exit 2 on mismatch)");

  std::vector<std::string> ids;
  auto* reproduce = app.add_subcommand("reproduce-paper", "Run the bundled example corpus");
  reproduce->fallthrough();
  reproduce->add_option("--entry", ids, "Restrict to these entry ids");

  ScanFlags sf;
  auto* scan = app.add_subcommand("scan", "Sample random monomial algebras");
  scan->fallthrough();
  scan->add_option("config", sf.config, "JSON scan configuration")->required();
  scan->add_option("--jobs", sf.jobs, "Worker threads");
  scan->add_flag("--ordered", sf.ordered, "Emit records in sample order");
  scan->add_option("--where", sf.where, "Filter expression, e.g. \"star && !golod && !fibre\"");
  scan->add_option("--samples", sf.samples, "Override the sample count");

  std::string file;
  std::size_t syz = 2;
  bool maps = false;
  auto* decompose = app.add_subcommand("decompose", "Decompose a syzygy of k into indecomposables");
  decompose->fallthrough();
  decompose->add_option("ring", file, "Ring file")->required();
  decompose->add_option("--syzygy", syz, "Syzygy index");
  decompose->add_flag("--maps", maps, "Include idempotent certificates");

  std::vector<std::size_t> ab;
  auto* summand = app.add_subcommand("summand", "Decide whether syz_a k is a summand of syz_b k");
  summand->fallthrough();
  summand->add_option("ring", file, "Ring file")->required();
  summand->add_option("--syzygy", ab, "Indices a b")->required()->expected(2);
  summand->add_flag("--maps", maps, "Include the certificate maps");

  std::string module = "k";
  auto* mono = app.add_subcommand("monotonicity", "Check Betti monotonicity from a summand pair");
  mono->fallthrough();
  mono->add_option("ring", file, "Ring file")->required();
  mono->add_option("--syzygy", ab, "Indices a b")->required()->expected(2);
  mono->add_option("--module", module, "k, m, R, K or cyclic");

  std::vector<std::string> factors;
  std::string fibre_out;
  auto* fibre = app.add_subcommand("fibre-product", "Write the fibre product of two ring files");
  fibre->fallthrough();
  fibre->add_option("factors", factors, "Two ring files")->required()->expected(2);
  fibre->add_option("-o", fibre_out, "Output ring file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInputError;
  }

  try {
    if (*report) return cmd_report(g, rf);
    if (*reproduce) return cmd_reproduce(g, ids);
    if (*scan) return cmd_scan(g, sf, seed_opt->count() > 0);
    if (*decompose) return cmd_decompose(g, file, syz, maps);
    if (*summand) return cmd_summand(g, file, ab[0], ab[1], maps);
    if (*mono) return cmd_monotonicity(g, file, ab[0], ab[1], module);
    if (*fibre) return cmd_fibre(g, factors[0], factors[1], fibre_out);
  } catch (const InvariantViolation& e) {
    std::cerr << "internal invariant violated: " << e.what() << "\n";
    return kMismatch;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kOk;
}
