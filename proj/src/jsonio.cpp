#include "zk/jsonio.hpp"

#include <algorithm>
#include <cctype>

namespace zk {

json poly_to_json(const MultiPoly& p, const TermOrder& ord) {
  json doc;
  doc["field"] = p.ring()->field.str();
  doc["vars"] = p.ring()->vars;
  std::vector<std::pair<Monomial, Scalar>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(),
            [&](const auto& a, const auto& b) { return ord.greater(a.first, b.first); });
  json arr = json::array();
  for (const auto& [m, c] : terms) {
    json t;
    t["coeff"] = c.str();
    t["exps"] = m;
    arr.push_back(std::move(t));
  }
  doc["terms"] = std::move(arr);
  return doc;
}

MultiPoly poly_from_json(const json& doc) {
  if (!doc.contains("field") || !doc.contains("vars"))
    fail(errc::usage, "polynomial JSON needs \"field\" and \"vars\"");
  Field f = Field::parse(doc["field"].get<std::string>());
  std::vector<std::string> vars = doc["vars"].get<std::vector<std::string>>();
  std::vector<bool> inv;
  if (doc.contains("invertible")) inv = doc["invertible"].get<std::vector<bool>>();
  return poly_from_json(doc, make_ring(f, std::move(vars), std::move(inv)));
}

MultiPoly poly_from_json(const json& doc, const RingPtr& ring) {
  if (!doc.contains("terms") || !doc["terms"].is_array())
    fail(errc::usage, "polynomial JSON needs a \"terms\" array");
  MultiPoly p(ring);
  for (const auto& t : doc["terms"]) {
    if (!t.contains("coeff") || !t.contains("exps"))
      fail(errc::usage, "polynomial term needs \"coeff\" and \"exps\"");
    std::string coeff = t["coeff"].is_string() ? t["coeff"].get<std::string>()
                                               : t["coeff"].dump();
    std::vector<std::int32_t> exps = t["exps"].get<std::vector<std::int32_t>>();
    if (exps.size() != ring->nvars()) fail(errc::usage, "term exponent arity mismatch");
    for (std::size_t i = 0; i < exps.size(); ++i)
      if (exps[i] < 0 && !ring->invertible[i])
        fail(errc::usage, "negative exponent on non-invertible variable");
    p.add_term(exps, Scalar::parse(ring->field, coeff));
  }
  return p;
}

json algebra_to_json(const FPAlgebra& A, const TermOrder& ord) {
  json doc;
  doc["field"] = A.ring()->field.str();
  doc["n"] = A.ngens();
  doc["names"] = A.ring()->vars;
  json rels = json::array();
  for (const auto& r : A.relations()) {
    json rj = poly_to_json(r, ord);
    rj.erase("field");
    rj.erase("vars");
    rels.push_back(std::move(rj));
  }
  doc["relations"] = std::move(rels);
  return doc;
}

FPAlgebra algebra_from_json(const json& doc) {
  if (!doc.contains("field")) fail(errc::usage, "algebra JSON needs \"field\"");
  Field f = Field::parse(doc["field"].get<std::string>());
  std::vector<std::string> names;
  if (doc.contains("names")) names = doc["names"].get<std::vector<std::string>>();
  std::size_t n = doc.contains("n") ? doc["n"].get<std::size_t>() : names.size();
  if (names.empty())
    for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  if (names.size() != n) fail(errc::usage, "algebra JSON: n and names disagree");
  RingPtr ring = make_ring(f, std::move(names));
  std::vector<MultiPoly> rels;
  if (doc.contains("relations"))
    for (const auto& r : doc["relations"]) rels.push_back(poly_from_json(r, ring));
  return FPAlgebra(ring, std::move(rels));
}

json fraction_to_json(const LaurentFraction& f, const TermOrder& ord) {
  json doc;
  json num = json::array();
  for (const auto& c : f.numerator()) {
    json nj = poly_to_json(c, ord);
    nj.erase("field");
    nj.erase("vars");
    num.push_back(std::move(nj));
  }
  doc["num"] = std::move(num);
  json den = poly_to_json(f.den_base(), ord);
  den.erase("field");
  den.erase("vars");
  doc["den"] = std::move(den);
  doc["k"] = f.den_exp();
  return doc;
}

LaurentFraction fraction_from_json(const json& doc, const RingPtr& ring) {
  if (!doc.contains("num") || !doc.contains("den"))
    fail(errc::usage, "fraction JSON needs \"num\" and \"den\"");
  std::vector<MultiPoly> num;
  for (const auto& c : doc["num"]) num.push_back(poly_from_json(c, ring));
  MultiPoly den = poly_from_json(doc["den"], ring);
  unsigned k = doc.contains("k") ? doc["k"].get<unsigned>() : 1;
  return LaurentFraction(std::move(num), std::move(den), k);
}

json scalar_to_json(const Scalar& s) { return s.str(); }

Scalar scalar_from_json(const json& doc, const Field& F) {
  if (doc.is_number_integer()) return Scalar(F, doc.get<long>());
  return Scalar::parse(F, doc.get<std::string>());
}

// ---- tiny infix parser (flag sugar) ----------------------------------------

namespace {

struct Lexer {
  std::string s;
  std::size_t pos = 0;
  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip();
    return pos >= s.size();
  }
  char peek() {
    skip();
    return pos < s.size() ? s[pos] : '\0';
  }
  char take() {
    skip();
    return s[pos++];
  }
};

class InfixParser {
 public:
  InfixParser(const std::string& text, RingPtr ring) : lex_{text}, ring_(std::move(ring)) {}

  MultiPoly parse() {
    MultiPoly p = expr();
    if (!lex_.eof()) fail(errc::usage, "trailing input in polynomial expression");
    return p;
  }

 private:
  MultiPoly expr() {
    MultiPoly acc = term();
    while (!lex_.eof()) {
      char c = lex_.peek();
      if (c == '+') { lex_.take(); acc = acc + term(); }
      else if (c == '-') { lex_.take(); acc = acc - term(); }
      else break;
    }
    return acc;
  }

  MultiPoly term() {
    MultiPoly acc = factor();
    while (!lex_.eof()) {
      char c = lex_.peek();
      if (c == '*') { lex_.take(); acc = acc * factor(); }
      else if (std::isalpha(static_cast<unsigned char>(c)) || c == '(') acc = acc * factor();
      else break;
    }
    return acc;
  }

  MultiPoly factor() {
    MultiPoly base = atom();
    if (!lex_.eof() && lex_.peek() == '^') {
      lex_.take();
      bool neg = false;
      if (lex_.peek() == '-') { lex_.take(); neg = true; }
      long e = integer();
      if (neg) {
        // Laurent monomial: only single-variable bases can invert
        std::size_t var = 0;
        if (base.term_count() != 1 || !base.is_univariate(&var) ||
            !base.terms().begin()->second.is_one())
          fail(errc::usage, "negative exponents only on plain variables");
        return MultiPoly::variable(ring_, var, static_cast<std::int32_t>(-e));
      }
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  MultiPoly atom() {
    char c = lex_.peek();
    if (c == '(') {
      lex_.take();
      MultiPoly p = expr();
      if (lex_.peek() != ')') fail(errc::usage, "missing ')' in polynomial expression");
      lex_.take();
      return p;
    }
    if (c == '-') {
      lex_.take();
      return -atom();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long num = integer();
      if (!lex_.eof() && lex_.peek() == '/') {
        lex_.take();
        long den = integer();
        return MultiPoly::constant(ring_, Scalar(ring_->field, num, den));
      }
      return MultiPoly::constant(ring_, num);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name;
      while (!lex_.eof() && (std::isalnum(static_cast<unsigned char>(lex_.peek())) ||
                             lex_.peek() == '_'))
        name += lex_.take();
      auto it = std::find(ring_->vars.begin(), ring_->vars.end(), name);
      if (it == ring_->vars.end()) fail(errc::usage, "unknown variable '" + name + "'");
      return MultiPoly::variable(ring_, static_cast<std::size_t>(it - ring_->vars.begin()));
    }
    fail(errc::usage, std::string("unexpected character '") + c + "' in polynomial expression");
  }

  long integer() {
    std::string digits;
    while (!lex_.eof() && std::isdigit(static_cast<unsigned char>(lex_.peek())))
      digits += lex_.take();
    if (digits.empty()) fail(errc::usage, "expected an integer");
    return std::strtol(digits.c_str(), nullptr, 10);
  }

  Lexer lex_;
  RingPtr ring_;
};

}  // namespace

MultiPoly parse_infix(const std::string& text, const RingPtr& ring) {
  return InfixParser(text, ring).parse();
}

MultiPoly poly_from_arg(const std::string& arg, const RingPtr& ring) {
  std::size_t i = 0;
  while (i < arg.size() && std::isspace(static_cast<unsigned char>(arg[i]))) ++i;
  if (i < arg.size() && arg[i] == '{') {
    json doc = json::parse(arg);
    return poly_from_json(doc, ring);
  }
  return parse_infix(arg, ring);
}

}  // namespace zk
