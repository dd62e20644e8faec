#include "multideg/expr.hpp"

#include "multideg/errors.hpp"

#include <algorithm>
#include <sstream>

namespace multideg {

MultiPoly LinearForm::to_poly(const RingPtr& ring) const {
  MultiPoly p(ring, constant);
  for (const auto& [var, c] : coefficients) p += MultiPoly::variable(ring, var) * c;
  return p;
}

MultiPoly LinearForm::homogenized(const RingPtr& ring, std::size_t h, std::size_t t) const {
  MultiPoly linear(ring);
  for (const auto& [var, c] : coefficients) linear += MultiPoly::variable(ring, var) * c;
  return MultiPoly::variable(ring, h) * constant + linear * MultiPoly::variable(ring, t);
}

std::pair<Rational, std::vector<DenomFactor>> normalize_factor(const MultiPoly& p) {
  if (p.is_zero()) throw DivisionByZeroForm("zero denominator factor");
  const RingPtr& ring = p.ring();
  std::vector<DenomFactor> factors;

  // Monomial content.
  Exponent content(ring->size(), 0);
  for (std::size_t v = 0; v < ring->size(); ++v) {
    content[v] = p.min_degree_in(v);
    if (content[v] > 0) factors.push_back({MultiPoly::variable(ring, v), content[v]});
  }
  MultiPoly rest(ring);
  for (const auto& [e, c] : p.terms()) {
    Exponent f = e;
    for (std::size_t v = 0; v < f.size(); ++v) f[v] -= content[v];
    rest += MultiPoly::monomial(ring, std::move(f), c);
  }

  // Rational content and sign.
  Integer num_gcd = 0, den_lcm = 1;
  for (const auto& [e, c] : rest.terms()) {
    num_gcd = gcd(num_gcd, numerator_of(c));
    den_lcm = lcm(den_lcm, denominator_of(c));
  }
  Rational scalar(num_gcd, den_lcm);
  if (rest.leading_term().second < 0) scalar = -scalar;
  if (rest.is_constant()) {
    return {rest.constant_term(), std::move(factors)};
  }
  rest *= Rational(1) / scalar;
  factors.push_back({std::move(rest), 1});
  return {scalar, std::move(factors)};
}

namespace {

bool factor_less(const DenomFactor& a, const DenomFactor& b) {
  return compare(a.poly, b.poly) < 0;
}

// Merge equal factors by adding multiplicities; input need not be sorted.
std::vector<DenomFactor> canonical_factors(std::vector<DenomFactor> fs) {
  std::sort(fs.begin(), fs.end(), factor_less);
  std::vector<DenomFactor> out;
  for (auto& f : fs) {
    if (f.multiplicity == 0) continue;
    if (!out.empty() && out.back().poly == f.poly) {
      out.back().multiplicity += f.multiplicity;
    } else {
      out.push_back(std::move(f));
    }
  }
  return out;
}

}  // namespace

RationalExpression::RationalExpression(MultiPoly numerator)
    : numerator_(std::move(numerator)) {}

RationalExpression::RationalExpression(MultiPoly numerator,
                                       const std::vector<MultiPoly>& denominators)
    : numerator_(std::move(numerator)) {
  std::vector<DenomFactor> all;
  Rational scalar = 1;
  for (const auto& d : denominators) {
    auto [s, fs] = normalize_factor(d);
    scalar *= s;
    for (auto& f : fs) all.push_back(std::move(f));
  }
  numerator_ *= Rational(1) / scalar;
  denominator_ = canonical_factors(std::move(all));
  simplify();
}

RationalExpression::RationalExpression(MultiPoly numerator, std::vector<DenomFactor> factors,
                                       bool)
    : numerator_(std::move(numerator)), denominator_(canonical_factors(std::move(factors))) {
  simplify();
}

void RationalExpression::simplify() {
  if (numerator_.is_zero()) {
    denominator_.clear();
    return;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& f : denominator_) {
      while (f.multiplicity > 0) {
        auto q = numerator_.divide_exact(f.poly);
        if (!q) break;
        numerator_ = std::move(*q);
        --f.multiplicity;
        changed = true;
      }
    }
  }
  std::erase_if(denominator_, [](const DenomFactor& f) { return f.multiplicity == 0; });
}

MultiPoly RationalExpression::expanded_denominator() const {
  MultiPoly d(ring(), Rational(1));
  for (const auto& f : denominator_) d = d * f.poly.pow(static_cast<unsigned>(f.multiplicity));
  return d;
}

bool RationalExpression::denominator_is_monomial() const {
  return std::all_of(denominator_.begin(), denominator_.end(), [](const DenomFactor& f) {
    return f.poly.term_count() == 1;
  });
}

RationalExpression RationalExpression::operator*(const RationalExpression& other) const {
  std::vector<DenomFactor> fs = denominator_;
  fs.insert(fs.end(), other.denominator_.begin(), other.denominator_.end());
  return RationalExpression(numerator_ * other.numerator_, std::move(fs), true);
}

RationalExpression RationalExpression::substitute(
    const std::map<std::size_t, MultiPoly>& assignment) const {
  MultiPoly num = numerator_.substitute(assignment);
  std::vector<DenomFactor> fs;
  Rational scalar = 1;
  for (const auto& f : denominator_) {
    MultiPoly image = f.poly.substitute(assignment);
    if (image.is_zero()) {
      throw DivisionByZeroForm("substitution sends denominator factor (" + f.poly.to_string() +
                               ") to zero");
    }
    auto [s, parts] = normalize_factor(image);
    for (int k = 0; k < f.multiplicity; ++k) scalar *= s;
    for (auto& p : parts) {
      p.multiplicity *= f.multiplicity;
      fs.push_back(std::move(p));
    }
  }
  num *= Rational(1) / scalar;
  return RationalExpression(std::move(num), std::move(fs), true);
}

Rational RationalExpression::evaluate(const std::vector<Rational>& point) const {
  Rational den = 1;
  for (const auto& f : denominator_) {
    Rational v = f.poly.evaluate(point);
    for (int k = 0; k < f.multiplicity; ++k) den *= v;
  }
  if (den == 0) throw DivisionByZeroForm("denominator vanishes at evaluation point");
  return numerator_.evaluate(point) / den;
}

std::string RationalExpression::to_string() const {
  if (denominator_.empty()) return numerator_.to_string();
  std::ostringstream os;
  os << "(" << numerator_.to_string() << ")/(";
  bool first = true;
  for (const auto& f : denominator_) {
    if (!first) os << "*";
    first = false;
    os << "(" << f.poly.to_string() << ")";
    if (f.multiplicity > 1) os << "^" << f.multiplicity;
  }
  os << ")";
  return os.str();
}

bool operator==(const RationalExpression& a, const RationalExpression& b) {
  if (!(a.numerator_ == b.numerator_)) return false;
  if (a.denominator_.size() != b.denominator_.size()) return false;
  for (std::size_t i = 0; i < a.denominator_.size(); ++i) {
    if (a.denominator_[i].multiplicity != b.denominator_[i].multiplicity) return false;
    if (!(a.denominator_[i].poly == b.denominator_[i].poly)) return false;
  }
  return true;
}

RationalExpression expr_sum(const std::vector<RationalExpression>& terms) {
  if (terms.empty()) throw ValidationError("expr_sum of an empty list");
  const RingPtr& ring = terms.front().ring();

  // Least common denominator: maximum multiplicity per distinct factor.
  std::vector<DenomFactor> lcd;
  for (const auto& term : terms) {
    if (term.ring()->names() != ring->names()) {
      throw ValidationError("expr_sum over different variable sets");
    }
    for (const auto& f : term.denominator()) {
      auto it = std::find_if(lcd.begin(), lcd.end(),
                             [&](const DenomFactor& g) { return g.poly == f.poly; });
      if (it == lcd.end()) {
        lcd.push_back(f);
      } else {
        it->multiplicity = std::max(it->multiplicity, f.multiplicity);
      }
    }
  }

  MultiPoly num(ring);
  for (const auto& term : terms) {
    MultiPoly scaled = term.numerator();
    for (const auto& g : lcd) {
      int have = 0;
      for (const auto& f : term.denominator()) {
        if (f.poly == g.poly) have = f.multiplicity;
      }
      if (g.multiplicity > have) {
        scaled = scaled * g.poly.pow(static_cast<unsigned>(g.multiplicity - have));
      }
    }
    num += scaled;
  }

  std::vector<MultiPoly> expanded;
  for (const auto& g : lcd) {
    for (int k = 0; k < g.multiplicity; ++k) expanded.push_back(g.poly);
  }
  return RationalExpression(std::move(num), expanded);
}

namespace {

// Split at a top-level '/' that is followed by '(' or a letter (a constant
// divisor such as "5/2" belongs to the numerator).
std::size_t find_fraction_bar(const std::string& s) {
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == '/' && depth == 0) {
      std::size_t j = i + 1;
      while (j < s.size() && s[j] == ' ') ++j;
      if (j < s.size() && (s[j] == '(' || std::isalpha(static_cast<unsigned char>(s[j])))) {
        return i;
      }
    }
  }
  return std::string::npos;
}

std::string strip_outer_parens(std::string s) {
  auto trim = [](std::string& x) {
    auto b = x.find_first_not_of(' ');
    auto e = x.find_last_not_of(' ');
    x = b == std::string::npos ? "" : x.substr(b, e - b + 1);
  };
  trim(s);
  while (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
    int depth = 0;
    bool wraps = true;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '(') ++depth;
      if (s[i] == ')') --depth;
      if (depth == 0 && i + 1 < s.size()) {
        wraps = false;
        break;
      }
    }
    if (!wraps) break;
    s = s.substr(1, s.size() - 2);
    trim(s);
  }
  return s;
}

}  // namespace

RationalExpression parse_expression(const RingPtr& ring, const std::string& text) {
  std::size_t bar = find_fraction_bar(text);
  if (bar == std::string::npos) return RationalExpression(parse_poly(ring, text));
  MultiPoly num = parse_poly(ring, text.substr(0, bar));
  std::string den = strip_outer_parens(text.substr(bar + 1));

  // Denominator: '*'-separated items, each "(poly)" or "(poly)^k" or "var[^k]".
  std::vector<MultiPoly> factors;
  std::size_t i = 0;
  while (i < den.size()) {
    while (i < den.size() && (den[i] == ' ' || den[i] == '*')) ++i;
    if (i >= den.size()) break;
    std::string item;
    if (den[i] == '(') {
      int depth = 0;
      std::size_t start = i;
      for (; i < den.size(); ++i) {
        if (den[i] == '(') ++depth;
        if (den[i] == ')' && --depth == 0) {
          ++i;
          break;
        }
      }
      item = den.substr(start, i - start);
    } else {
      std::size_t start = i;
      while (i < den.size() && den[i] != '*' && den[i] != '^') ++i;
      item = den.substr(start, i - start);
    }
    int power = 1;
    if (i < den.size() && den[i] == '^') {
      std::size_t start = ++i;
      while (i < den.size() && std::isdigit(static_cast<unsigned char>(den[i]))) ++i;
      if (start == i) throw ValidationError("expected exponent in denominator '" + den + "'");
      power = std::stoi(den.substr(start, i - start));
    }
    MultiPoly f = parse_poly(ring, item);
    for (int k = 0; k < power; ++k) factors.push_back(f);
  }
  return RationalExpression(std::move(num), factors);
}

}  // namespace multideg
