#include "hconf/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace hconf {

int VarTable::add(const std::string& name, const std::string& tag) {
  if (find(name) >= 0) throw ParseError("duplicate variable " + name);
  names_.push_back(name);
  tags_.push_back(tag);
  return static_cast<int>(names_.size()) - 1;
}

int VarTable::index(const std::string& name) const {
  int i = find(name);
  if (i < 0) throw ParseError("unknown variable " + name);
  return i;
}

int VarTable::find(const std::string& name) const {
  for (size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

int total_degree(const Monomial& m) {
  return std::accumulate(m.begin(), m.end(), 0);
}

bool divides(const Monomial& a, const Monomial& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool MonomialOrder::less(const Monomial& a, const Monomial& b) const {
  if (kind == OrderKind::GrLex) {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
  }
  auto at = [&](size_t pos, const Monomial& m) {
    int var = precedence.empty() ? static_cast<int>(pos) : precedence[pos];
    return m[var];
  };
  size_t count = precedence.empty() ? a.size() : precedence.size();
  for (size_t pos = 0; pos < count; ++pos) {
    if (at(pos, a) != at(pos, b)) return at(pos, a) < at(pos, b);
  }
  // Variables omitted from an explicit precedence rank lowest, in index
  // order, so the comparison stays a total order.
  if (!precedence.empty()) {
    std::vector<bool> listed(a.size(), false);
    for (int var : precedence) listed[var] = true;
    for (size_t var = 0; var < a.size(); ++var)
      if (!listed[var] && a[var] != b[var]) return a[var] < b[var];
  }
  return false;
}

PolyLimits& Polynomial::limits() {
  static PolyLimits instance;
  return instance;
}

void Polynomial::check_limits() const {
  if (terms_.size() > limits().max_monomials)
    throw ResourceBudgetExceeded("polynomial with too many monomials");
  for (const auto& [m, c] : terms_)
    if (total_degree(m) > limits().max_total_degree)
      throw ResourceBudgetExceeded("polynomial degree above cap");
}

Polynomial Polynomial::constant(const VarTable* table, const Rational& c) {
  Polynomial p(table);
  if (c != 0) p.terms_[Monomial(table->size(), 0)] = c;
  return p;
}

Polynomial Polynomial::variable(const VarTable* table, int var) {
  Monomial m(table->size(), 0);
  m[var] = 1;
  return monomial(table, m, 1);
}

Polynomial Polynomial::monomial(const VarTable* table, const Monomial& m,
                                const Rational& c) {
  Polynomial p(table);
  if (c != 0) p.terms_[m] = c;
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

Rational Polynomial::constant_value() const {
  if (terms_.empty()) return 0;
  if (!is_constant()) throw DomainError("NotAConstant", to_string());
  return terms_.begin()->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    if (c != 0) terms_[m] = c;
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial out = *this;
  if (out.table_ == nullptr) out.table_ = o.table_;
  for (const auto& [m, c] : o.terms_) out.add_term(m, c);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  return *this + (-o);
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial out(table_ ? table_ : o.table_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m = ma;
      for (size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
      out.add_term(m, ca * cb);
    }
  out.check_limits();
  return out;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  Polynomial out(table_);
  if (c == 0) return out;
  out.terms_ = terms_;
  for (auto& [m, coeff] : out.terms_) coeff *= c;
  return out;
}

Polynomial Polynomial::pow(int e) const {
  if (e < 0) throw OutOfRange("negative exponent");
  Polynomial out = constant(table_, 1);
  for (int i = 0; i < e; ++i) out = out * *this;
  return out;
}

Polynomial Polynomial::substitute(
    const std::map<int, Polynomial>& values) const {
  Polynomial out(table_);
  for (const auto& [m, c] : terms_) {
    Monomial kept = m;
    Polynomial factor = constant(table_, c);
    for (const auto& [var, value] : values) {
      if (kept[var] == 0) continue;
      factor = factor * value.pow(kept[var]);
      kept[var] = 0;
    }
    out = out + factor * monomial(table_, kept, 1);
  }
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    bool has_vars = total_degree(m) > 0;
    if (mag != 1 || !has_vars) os << mag;
    bool printed = mag != 1 || !has_vars;
    for (size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (printed) os << "*";
      os << table_->name(static_cast<int>(i));
      if (m[i] > 1) os << "^" << m[i];
      printed = true;
    }
  }
  return os.str();
}

namespace {

struct Parser {
  const VarTable* table;
  const std::string& text;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) { ++pos; return true; }
    return false;
  }

  Polynomial parse_expr() {
    Polynomial out = eat('-') ? -parse_term() : parse_term();
    for (;;) {
      if (eat('+')) out = out + parse_term();
      else if (eat('-')) out = out - parse_term();
      else return out;
    }
  }

  Polynomial parse_term() {
    Polynomial out = parse_power();
    while (eat('*')) out = out * parse_power();
    return out;
  }

  Polynomial parse_power() {
    Polynomial base = parse_atom();
    if (eat('^')) {
      skip_ws();
      size_t start = pos;
      while (pos < text.size() &&
             isdigit(static_cast<unsigned char>(text[pos])))
        ++pos;
      if (start == pos) throw ParseError("exponent expected in " + text);
      return base.pow(std::stoi(text.substr(start, pos - start)));
    }
    return base;
  }

  Polynomial parse_atom() {
    skip_ws();
    if (pos >= text.size()) throw ParseError("unexpected end of " + text);
    char c = text[pos];
    if (c == '(') {
      ++pos;
      Polynomial inner = parse_expr();
      if (!eat(')')) throw ParseError("missing ) in " + text);
      return inner;
    }
    if (isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos;
      while (pos < text.size() &&
             isdigit(static_cast<unsigned char>(text[pos])))
        ++pos;
      Rational value(text.substr(start, pos - start));
      if (eat('/')) {
        skip_ws();
        size_t dstart = pos;
        while (pos < text.size() &&
               isdigit(static_cast<unsigned char>(text[pos])))
          ++pos;
        if (dstart == pos) throw ParseError("denominator expected in " + text);
        value /= Rational(text.substr(dstart, pos - dstart));
      }
      return Polynomial::constant(table, value);
    }
    if (isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos;
      while (pos < text.size() &&
             (isalnum(static_cast<unsigned char>(text[pos])) ||
              text[pos] == '_' || text[pos] == '\''))
        ++pos;
      return Polynomial::variable(table,
                                  table->index(text.substr(start, pos - start)));
    }
    throw ParseError(std::string("unexpected character '") + c + "' in " +
                     text);
  }
};

}  // namespace

Polynomial Polynomial::parse(const VarTable* table, const std::string& text) {
  Parser parser{table, text};
  Polynomial out = parser.parse_expr();
  parser.skip_ws();
  if (parser.pos != text.size())
    throw ParseError("trailing input in " + text);
  if (out.table_ == nullptr) out.table_ = table;
  return out;
}

}  // namespace hconf
