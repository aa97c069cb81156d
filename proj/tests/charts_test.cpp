#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hconf/charts.hpp"

using namespace hconf;

TEST_CASE("target and mode names") {
  CHECK(parse_chart_target("R1_123") == ChartTarget::R1_123);
  CHECK(to_string(ChartTarget::R_12_123) == "R_12_123");
  CHECK_THROWS_AS(parse_chart_target("R2_123"), ParseError);
  CHECK(parse_wmode("symbolic-w") == WMode::SymbolicW);
  CHECK_THROWS_AS(parse_wmode("exact"), ParseError);
}

TEST_CASE("syzygy solution") {
  SyzygySolution s = solve_w();
  const VarTable* t = s.table.get();
  auto P = [t](const std::string& text) {
    return Polynomial::parse(t, text);
  };
  CHECK(s.w == P("u*v' + v*v'' - v'^2 - u'*v"));
  CHECK(s.w1 == P("u'*v' - u''*v"));
  CHECK(s.w2 == P("u*u'' + u'*v'' - u'^2 - u''*v'"));

  // Both syzygies vanish identically modulo the family.
  std::map<int, Polynomial> sub{{t->index("w"), s.w},
                                {t->index("w'"), s.w1},
                                {t->index("w''"), s.w2}};
  Polynomial F1 = P("x^2 + u*x + v*y + w").substitute(sub);
  Polynomial F2 = P("x*y + u'*x + v'*y + w'").substitute(sub);
  Polynomial F3 = P("y^2 + u''*x + v''*y + w''").substitute(sub);
  std::vector<int> inner{t->index("x"), t->index("y")};
  MonomialOrder order = MonomialOrder::grlex();
  Polynomial X = Polynomial::variable(t, inner[0]);
  Polynomial Y = Polynomial::variable(t, inner[1]);
  CHECK(normal_form(Y * F1 - X * F2, {F1, F2, F3}, inner, order).is_zero());
  CHECK(normal_form(Y * F2 - X * F3, {F1, F2, F3}, inner, order).is_zero());
  // The same membership through a full Groebner basis.
  CHECK(ideal_member(Y * F1 - X * F2, {{F1, F2, F3}}, order));
}

TEST_CASE("incidence locus generator counts") {
  // Six coefficient conditions arise at ambient dimension two: two per
  // quadric generator, on the inner monomials x and 1.
  ChartReport r = verify_chart(ChartTarget::R_12_123);
  CHECK(r.computed_generators.size() == 6);
  CHECK(r.reference_generators.size() == 4);
  ChartReport r1 = verify_chart(ChartTarget::R1_123);
  CHECK(r1.computed_generators.size() == 8);
  CHECK(r1.reference_generators.size() == 8);
  ChartReport r123 = verify_chart(ChartTarget::R123_123);
  CHECK(r123.computed_generators.size() == 12);
  CHECK(r123.reference_generators.size() == 12);
}

TEST_CASE("chart verification reports") {
  for (WMode mode : {WMode::Substituted, WMode::SymbolicW}) {
    ChartReport r = verify_chart(ChartTarget::R_12_123, 2, mode);
    CHECK(r.paper_generators_contained);
    CHECK(r.extra_generators_absorbed);
    CHECK(r.jacobian_rank == 4);
    CHECK(r.num_variables == 10);
    CHECK(r.smooth_dimension == 6);
    CHECK(r.expected_dimension == 6);
    CHECK(r.free_variable_check);

    ChartReport r1 = verify_chart(ChartTarget::R1_123, 2, mode);
    CHECK(r1.ideal_equal);
    CHECK(r1.jacobian_rank == 8);
    CHECK(r1.num_variables == 14);
    CHECK(r1.smooth_dimension == 6);
    CHECK(r1.free_variable_check);
    CHECK(r1.free_variables ==
          std::vector<std::string>{"u'", "v'", "e", "f", "i", "j"});

    ChartReport r123 = verify_chart(ChartTarget::R123_123, 2, mode);
    CHECK(r123.ideal_equal);
    CHECK(r123.jacobian_rank == 12);
    CHECK(r123.num_variables == 18);
    CHECK(r123.smooth_dimension == 6);
    CHECK(r123.free_variable_check);
    CHECK(r123.free_variables ==
          std::vector<std::string>{"l", "m", "n", "o", "p", "q"});
  }
}

TEST_CASE("higher ambient dimension") {
  ChartReport r = verify_chart(ChartTarget::R_12_123, 4);
  CHECK(r.ideal_equal);
  CHECK(r.jacobian_rank == 8);
  CHECK(r.num_variables == 20);
  CHECK(r.smooth_dimension == 12);
  CHECK(r.free_variable_check);
  CHECK_THROWS_AS(verify_chart(ChartTarget::R1_123, 3), OutOfRange);
  CHECK_THROWS_AS(verify_chart(ChartTarget::R_12_123, 1), OutOfRange);
}

TEST_CASE("division replay identity") {
  // dv + w - b reduces to lcv + mv + w - gc - h over the inner chart:
  // the difference is v*(d - lc - m) - (b - gc - h).
  VarTable t;
  for (const char* n : {"a", "b", "c", "d", "v", "w", "g", "h", "l", "m"})
    t.add(n);
  auto P = [&t](const std::string& s) { return Polynomial::parse(&t, s); };
  std::vector<Polynomial> relations{P("b - g*c - h"), P("d - l*c - m")};
  Polynomial lhs = P("d*v + w - b");
  Polynomial rhs = P("l*c*v + m*v + w - g*c - h");
  std::vector<int> inner{t.index("a"), t.index("b"), t.index("c"),
                         t.index("d")};
  MonomialOrder order = MonomialOrder::grlex(
      {t.index("a"), t.index("b"), t.index("d"), t.index("c")});
  CHECK(normal_form(lhs - rhs, relations, inner, order).is_zero());
  CHECK(normal_form(lhs, relations, inner, order) ==
        normal_form(rhs, relations, inner, order));
}

TEST_CASE("colength probes") {
  CHECK(colength_probe({0, 0, 0, 0, 0, 0}) == 3);
  CHECK(colength_probe({1, 2, 3, 4, 5, 6}) == 3);
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Rational> params;
    for (int i = 0; i < 6; ++i)
      params.push_back(Rational(num(rng)) / den(rng));
    CHECK(colength_probe(params) == 3);
  }
  CHECK_THROWS_AS(colength_probe({1, 2}), OutOfRange);
}
