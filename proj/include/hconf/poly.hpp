#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <vector>

#include "hconf/errors.hpp"

namespace hconf {

using Rational = boost::multiprecision::cpp_rational;

// Named variables with an optional namespace tag (chart name). Precedence
// defaults to declaration order, highest first.
class VarTable {
 public:
  int add(const std::string& name, const std::string& tag = "");
  int index(const std::string& name) const;       // throws ParseError
  int find(const std::string& name) const;        // -1 when absent
  size_t size() const { return names_.size(); }
  const std::string& name(int i) const { return names_[i]; }
  const std::string& tag(int i) const { return tags_[i]; }

 private:
  std::vector<std::string> names_;
  std::vector<std::string> tags_;
};

using Monomial = std::vector<int>;  // exponents, indexed by variable

int total_degree(const Monomial& m);
bool divides(const Monomial& a, const Monomial& b);  // a | b

enum class OrderKind { Lex, GrLex };

// Monomial order: lex or graded-lex over a variable precedence (highest
// first); empty precedence means declaration order of the table.
struct MonomialOrder {
  OrderKind kind = OrderKind::GrLex;
  std::vector<int> precedence;

  static MonomialOrder lex(std::vector<int> precedence = {}) {
    return {OrderKind::Lex, std::move(precedence)};
  }
  static MonomialOrder grlex(std::vector<int> precedence = {}) {
    return {OrderKind::GrLex, std::move(precedence)};
  }

  // true when a < b
  bool less(const Monomial& a, const Monomial& b) const;
};

struct PolyLimits {
  int max_total_degree = 12;
  size_t max_monomials = 5000;
};

// Exact multivariate polynomial over the rationals, tied to a VarTable.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(const VarTable* table) : table_(table) {}

  static Polynomial constant(const VarTable* table, const Rational& c);
  static Polynomial variable(const VarTable* table, int var);
  static Polynomial monomial(const VarTable* table, const Monomial& m,
                             const Rational& c);

  const VarTable* table() const { return table_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_value() const;  // 0 for the zero polynomial

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& c) const;
  Polynomial pow(int e) const;

  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

  // Replace each listed variable by a polynomial (simultaneously).
  Polynomial substitute(const std::map<int, Polynomial>& values) const;

  void add_term(const Monomial& m, const Rational& c);

  std::string to_string() const;

  // Text syntax: identifiers (primes allowed, e.g. u', v''), integers,
  // + - * ^ and parentheses.
  static Polynomial parse(const VarTable* table, const std::string& text);

  static PolyLimits& limits();

 private:
  void check_limits() const;
  const VarTable* table_ = nullptr;
  std::map<Monomial, Rational> terms_;
};

}  // namespace hconf
