#include "artinian/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace artinian {

int total_degree(const Exponent& e) {
  int d = 0;
  for (auto x : e) d += x;
  return d;
}

bool divides(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool monomial_order_greater(const Exponent& a, const Exponent& b) {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  return a > b;
}

bool Polynomial::is_homogeneous() const { return terms.empty() || min_degree() == max_degree(); }

int Polynomial::max_degree() const {
  int d = 0;
  for (const auto& t : terms) d = std::max(d, total_degree(t.exponent));
  return d;
}

int Polynomial::min_degree() const {
  int d = terms.empty() ? 0 : total_degree(terms.front().exponent);
  for (const auto& t : terms) d = std::min(d, total_degree(t.exponent));
  return d;
}

void Polynomial::normalize(const FieldSpec& field) {
  std::map<Exponent, mpq_class> acc;
  for (auto& t : terms) acc[t.exponent] += t.coeff;
  terms.clear();
  for (auto& [e, c] : acc) {
    mpq_class v = c;
    v.canonicalize();
    if (field.is_prime_field()) {
      mpz_class p = field.characteristic;
      mpz_class num = v.get_num() % p, den = v.get_den() % p;
      if (den == 0) throw Error("coefficient denominator divisible by the characteristic");
      if (num < 0) num += p;
      mpz_class inv;
      mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
      v = mpq_class(mpz_class(num * inv % p));
    }
    if (v != 0) terms.push_back({v, e});
  }
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return monomial_order_greater(a.exponent, b.exponent); });
}

std::string Polynomial::to_string(const std::vector<std::string>& vars) const {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const auto& t = terms[k];
    mpq_class c = t.coeff;
    if (k == 0) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    mpq_class a = abs(c);
    std::string mono;
    for (std::size_t i = 0; i < t.exponent.size(); ++i) {
      if (!t.exponent[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += vars[i];
      if (t.exponent[i] > 1) mono += "^" + std::to_string(t.exponent[i]);
    }
    if (a != 1 || mono.empty()) {
      out += a.get_str();
      if (!mono.empty()) out += "*";
    }
    out += mono;
  }
  return out;
}

bool Presentation::is_monomial() const {
  for (const auto& r : relations)
    if (!r.is_monomial()) return false;
  return true;
}

std::string Presentation::to_text() const {
  std::ostringstream os;
  os << "field " << (field.is_prime_field() ? "F " + std::to_string(field.characteristic) : "Q") << ";\n";
  os << "vars ";
  for (std::size_t i = 0; i < variables.size(); ++i) os << (i ? ", " : "") << variables[i];
  os << ";\nrels ";
  for (std::size_t i = 0; i < relations.size(); ++i) os << (i ? ", " : "") << relations[i].to_string(variables);
  os << ";\ntrunc " << truncation_degree << ";\n";
  return os.str();
}

namespace {

enum class Tok { Ident, Int, Sym, End };

struct Token {
  Tok kind;
  std::string text;
  int line, col;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < s.size()) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (std::isspace(c)) {
      advance(1);
    } else if (c == '#') {
      while (i < s.size() && s[i] != '\n') advance(1);
    } else if (std::isalpha(c) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Tok::Ident, std::string(s.substr(i, j - i)), line, col});
      advance(j - i);
    } else if (std::isdigit(c)) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::Int, std::string(s.substr(i, j - i)), line, col});
      advance(j - i);
    } else if (std::string_view(",;+-*^").find(static_cast<char>(c)) != std::string_view::npos) {
      out.push_back({Tok::Sym, std::string(1, static_cast<char>(c)), line, col});
      advance(1);
    } else {
      throw ParseError(std::string("unexpected character '") + static_cast<char>(c) + "'", line, col);
    }
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Presentation run() {
    Presentation p;
    bool have_vars = false, have_rels = false, have_trunc = false, have_field = false;
    while (peek().kind != Tok::End) {
      const Token& kw = next();
      if (kw.kind != Tok::Ident) fail("expected a keyword (field, vars, rels, trunc)", kw);
      if (kw.text == "field") {
        if (have_field || have_vars) fail("'field' must appear once, before 'vars'", kw);
        p.field = parse_field();
        have_field = true;
      } else if (kw.text == "vars") {
        if (have_vars) fail("duplicate 'vars' section", kw);
        parse_vars(p);
        have_vars = true;
      } else if (kw.text == "rels") {
        if (!have_vars) fail("'rels' before 'vars'", kw);
        if (have_rels) fail("duplicate 'rels' section", kw);
        parse_rels(p);
        have_rels = true;
      } else if (kw.text == "trunc") {
        const Token& t = expect(Tok::Int, "an integer truncation degree");
        if (t.text.size() > 4) fail("truncation degree too large", t);
        p.truncation_degree = std::stoi(t.text);
        if (p.truncation_degree < 2) fail("truncation degree must be at least 2", t);
        trunc_tok_ = t;
        have_trunc = true;
      } else {
        fail("unknown keyword '" + kw.text + "'", kw);
      }
      expect_sym(";");
    }
    if (!have_vars) fail("missing 'vars' section", peek());
    if (!have_rels) fail("missing 'rels' section", peek());
    int maxdeg = 0;
    for (const auto& r : p.relations) maxdeg = std::max(maxdeg, r.max_degree());
    if (have_trunc) {
      if (maxdeg > p.truncation_degree)
        fail("truncation degree " + std::to_string(p.truncation_degree) +
                 " is smaller than a relation degree (" + std::to_string(maxdeg) + ")",
             trunc_tok_);
    } else {
      p.truncation_degree = std::max(2, 2 + maxdeg);
      // Pure powers x_i^{d_i} bound the socle degree by sum(d_i - 1).
      std::vector<int> power(p.variables.size(), 0);
      for (const auto& r : p.relations) {
        if (r.terms.size() != 1) continue;
        const auto& ex = r.terms[0].exponent;
        int deg = r.max_degree();
        for (std::size_t i = 0; i < ex.size(); ++i)
          if (ex[i] == deg && (power[i] == 0 || deg < power[i])) power[i] = deg;
      }
      if (std::none_of(power.begin(), power.end(), [](int d) { return d == 0; })) {
        int socle = 0;
        for (int d : power) socle += d - 1;
        p.truncation_degree = std::max(p.truncation_degree, socle + 1);
      }
    }
    return p;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  [[noreturn]] void fail(const std::string& msg, const Token& t) const { throw ParseError(msg, t.line, t.col); }
  const Token& expect(Tok kind, const std::string& what) {
    const Token& t = next();
    if (t.kind != kind) fail("expected " + what + (t.text.empty() ? "" : ", found '" + t.text + "'"), t);
    return t;
  }
  void expect_sym(const std::string& s) {
    const Token& t = next();
    if (t.kind != Tok::Sym || t.text != s) fail("expected '" + s + "'", t);
  }
  bool accept_sym(const std::string& s) {
    if (peek().kind == Tok::Sym && peek().text == s) {
      ++pos_;
      return true;
    }
    return false;
  }

  FieldSpec parse_field() {
    const Token& t = expect(Tok::Ident, "Q or F <prime>");
    try {
      if (t.text == "Q") return FieldSpec::rationals();
      if (t.text == "F" && peek().kind == Tok::Int) return FieldSpec::parse("F" + next().text);
      return FieldSpec::parse(t.text);
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      fail(e.what(), t);
    }
  }

  void parse_vars(Presentation& p) {
    do {
      const Token& t = expect(Tok::Ident, "a variable name");
      if (t.text == "field" || t.text == "vars" || t.text == "rels" || t.text == "trunc")
        fail("reserved word used as a variable", t);
      if (std::find(p.variables.begin(), p.variables.end(), t.text) == p.variables.end())
        p.variables.push_back(t.text);
    } while (accept_sym(","));
  }

  void parse_rels(Presentation& p) {
    do {
      const Token& start = peek();
      Polynomial poly = parse_poly(p);
      poly.normalize(p.field);
      for (const auto& term : poly.terms) {
        int d = total_degree(term.exponent);
        if (d == 0) fail("constant-term relation (the ideal would not be proper)", start);
        if (d == 1) fail("relation has a nonzero linear term; eliminate that variable first", start);
      }
      if (!poly.is_zero()) p.relations.push_back(std::move(poly));
    } while (accept_sym(","));
  }

  Polynomial parse_poly(const Presentation& p) {
    Polynomial poly;
    bool negative = false;
    if (accept_sym("-")) negative = true;
    else accept_sym("+");
    while (true) {
      Term t = parse_term(p);
      if (negative) t.coeff = -t.coeff;
      poly.terms.push_back(std::move(t));
      if (accept_sym("+")) negative = false;
      else if (accept_sym("-")) negative = true;
      else break;
    }
    return poly;
  }

  Term parse_term(const Presentation& p) {
    Term term{mpq_class(1), Exponent(p.variables.size(), 0)};
    bool need_factor = true;
    if (peek().kind == Tok::Int) {
      term.coeff = mpq_class(mpz_class(next().text));
      if (!accept_sym("*")) return term;
    }
    while (need_factor) {
      const Token& v = expect(Tok::Ident, "a variable");
      auto it = std::find(p.variables.begin(), p.variables.end(), v.text);
      if (it == p.variables.end()) fail("unknown variable '" + v.text + "'", v);
      long exp = 1;
      if (accept_sym("^")) {
        const Token& e = expect(Tok::Int, "an exponent");
        if (e.text.size() > 4 || std::stol(e.text) > 1000) fail("exponent too large", e);
        exp = std::stol(e.text);
      }
      auto& slot = term.exponent[static_cast<std::size_t>(it - p.variables.begin())];
      if (slot + exp > 1000) fail("exponent too large", v);
      slot = static_cast<std::uint16_t>(slot + exp);
      need_factor = accept_sym("*");
    }
    return term;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  Token trunc_tok_{Tok::End, "", 0, 0};
};

}  // namespace

Presentation parse_presentation(std::string_view text) { return Parser(tokenize(text)).run(); }

Presentation load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open ring file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_presentation(ss.str());
}

}  // namespace artinian
