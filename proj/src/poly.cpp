#include "multideg/poly.hpp"

#include "multideg/errors.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

namespace multideg {

Ring::Ring(std::vector<std::string> names) : names_(std::move(names)) {}

std::optional<std::size_t> Ring::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

RingPtr make_problem_ring(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t j = 1; j <= n; ++j) names.push_back("X" + std::to_string(j));
  names.push_back("h");
  names.push_back("t");
  return std::make_shared<const Ring>(std::move(names));
}

int total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool GrlexLess::operator()(const Exponent& a, const Exponent& b) const {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

MultiPoly::MultiPoly(RingPtr ring) : ring_(std::move(ring)) {}

MultiPoly::MultiPoly(RingPtr ring, const Rational& constant) : ring_(std::move(ring)) {
  if (constant != 0) terms_.emplace(Exponent(ring_->size(), 0), constant);
}

MultiPoly MultiPoly::variable(RingPtr ring, std::size_t var, int power) {
  Exponent e(ring->size(), 0);
  e[var] = power;
  return monomial(std::move(ring), std::move(e), Rational(1));
}

MultiPoly MultiPoly::monomial(RingPtr ring, Exponent exponent, const Rational& coeff) {
  MultiPoly p(std::move(ring));
  if (coeff != 0) p.terms_.emplace(std::move(exponent), coeff);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && multideg::total_degree(terms_.begin()->first) == 0);
}

Rational MultiPoly::constant_term() const { return coefficient(Exponent(ring_->size(), 0)); }

Rational MultiPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

const std::pair<const Exponent, Rational>& MultiPoly::leading_term() const {
  if (terms_.empty()) throw InvariantBreach("leading term of zero polynomial");
  return *terms_.rbegin();
}

int MultiPoly::total_degree() const {
  return terms_.empty() ? -1 : multideg::total_degree(terms_.rbegin()->first);
}

int MultiPoly::degree_in(std::size_t var) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

int MultiPoly::min_degree_in(std::size_t var) const {
  if (terms_.empty()) return 0;
  int d = terms_.begin()->first[var];
  for (const auto& [e, c] : terms_) d = std::min(d, e[var]);
  return d;
}

MultiPoly MultiPoly::coefficient_of(std::size_t var, int k) const {
  MultiPoly out(ring_);
  for (const auto& [e, c] : terms_) {
    if (e[var] != k) continue;
    Exponent f = e;
    f[var] = 0;
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

void MultiPoly::add_term(const Exponent& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out(a.ring_);
  Exponent e(a.ring_->size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly result(ring_, Rational(1));
  MultiPoly base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& divisor) const {
  if (divisor.is_zero()) throw DivisionByZeroForm("division by the zero polynomial");
  MultiPoly quotient(ring_);
  MultiPoly rest = *this;
  const auto& [lead_e, lead_c] = divisor.leading_term();
  Exponent shift(ring_->size());
  while (!rest.is_zero()) {
    const auto& [re, rc] = rest.leading_term();
    for (std::size_t i = 0; i < shift.size(); ++i) {
      shift[i] = re[i] - lead_e[i];
      if (shift[i] < 0) return std::nullopt;
    }
    MultiPoly step = monomial(ring_, shift, rc / lead_c);
    rest -= step * divisor;
    quotient += step;
  }
  return quotient;
}

MultiPoly MultiPoly::substitute(const std::map<std::size_t, MultiPoly>& assignment) const {
  MultiPoly out(ring_);
  for (const auto& [e, c] : terms_) {
    Exponent kept = e;
    MultiPoly factor(ring_, c);
    for (const auto& [var, value] : assignment) {
      if (e[var] == 0) continue;
      kept[var] = 0;
      factor = factor * value.pow(static_cast<unsigned>(e[var]));
    }
    out += factor * monomial(ring_, kept, Rational(1));
  }
  return out;
}

Rational MultiPoly::evaluate(const std::vector<Rational>& point) const {
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (int k = 0; k < e[i]; ++k) term *= point[i];
    }
    sum += term;
  }
  return sum;
}

MultiPoly MultiPoly::truncated(int max_degree, const std::vector<std::size_t>& vars) const {
  MultiPoly out(ring_);
  for (const auto& [e, c] : terms_) {
    int d = 0;
    if (vars.empty()) {
      d = multideg::total_degree(e);
    } else {
      for (auto v : vars) d += e[v];
    }
    if (d <= max_degree) out.terms_.emplace(e, c);
  }
  return out;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool is_one = mag == 1;
    bool wrote = false;
    if (!is_one || multideg::total_degree(e) == 0) {
      os << multideg::to_string(mag);
      wrote = true;
    }
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      if (wrote) os << "*";
      os << ring_->name(v);
      if (e[v] > 1) os << "^" << e[v];
      wrote = true;
    }
  }
  return os.str();
}

int compare(const MultiPoly& a, const MultiPoly& b) {
  // Compare from the leading term down; a missing term sorts first.
  auto ia = a.terms().rbegin(), ib = b.terms().rbegin();
  GrlexLess less;
  for (; ia != a.terms().rend() && ib != b.terms().rend(); ++ia, ++ib) {
    if (less(ia->first, ib->first)) return -1;
    if (less(ib->first, ia->first)) return 1;
    if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
  }
  if (ia == a.terms().rend() && ib == b.terms().rend()) return 0;
  return ia == a.terms().rend() ? -1 : 1;
}

MultiPoly poly_arith(const MultiPoly& a, const MultiPoly& b, PolyOp op) {
  if (a.ring() != b.ring() && a.ring()->names() != b.ring()->names()) {
    throw ValidationError("polynomials over different variable sets");
  }
  switch (op) {
    case PolyOp::Add: return a + b;
    case PolyOp::Sub: return a - b;
    case PolyOp::Mul: return a * b;
  }
  return a;
}

namespace {

class PolyParser {
 public:
  PolyParser(const RingPtr& ring, const std::string& text) : ring_(ring), s_(text) {}

  MultiPoly parse() {
    MultiPoly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    throw ValidationError("polynomial parse error at offset " + std::to_string(pos_) + ": " +
                          what + " in '" + s_ + "'");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly expr() {
    MultiPoly acc(ring_);
    bool negate = false;
    if (eat('-')) {
      negate = true;
    } else {
      eat('+');
    }
    MultiPoly first = term();
    acc = negate ? -first : first;
    for (;;) {
      if (eat('+')) {
        acc += term();
      } else if (eat('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  MultiPoly term() {
    MultiPoly acc = factor();
    for (;;) {
      if (eat('*')) {
        acc = acc * factor();
      } else if (eat('/')) {
        skip();
        Integer den = integer();
        if (den == 0) fail("division by zero");
        acc *= Rational(1) / Rational(den);
      } else {
        return acc;
      }
    }
  }

  MultiPoly factor() {
    MultiPoly base = primary();
    if (eat('^')) {
      skip();
      Integer k = integer();
      if (k < 0 || k > 10000) fail("bad exponent");
      base = base.pow(static_cast<unsigned>(k));
    }
    return base;
  }

  Integer integer() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return Integer(s_.substr(start, pos_ - start));
  }

  MultiPoly primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly inner = expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return MultiPoly(ring_, Rational(integer()));
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
        ++pos_;
      }
      std::string name = s_.substr(start, pos_ - start);
      auto idx = ring_->index_of(name);
      if (!idx) fail("unknown variable '" + name + "'");
      return MultiPoly::variable(ring_, *idx);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  RingPtr ring_;
  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(const RingPtr& ring, const std::string& text) {
  return PolyParser(ring, text).parse();
}

}  // namespace multideg
