#pragma once

#include <memory>

#include "hconf/groebner.hpp"

namespace hconf {

enum class ChartTarget { R_12_123, R1_123, R123_123 };
enum class WMode { Substituted, SymbolicW };

ChartTarget parse_chart_target(const std::string& name);  // throws ParseError
std::string to_string(ChartTarget target);
WMode parse_wmode(const std::string& name);
std::string to_string(WMode mode);

// A universal-ideal chart: point variables, parameter variables (with
// indexed families for ambient dimension > 2), and the ideal generators.
struct Chart {
  std::string name;
  int dim = 2;
  std::shared_ptr<VarTable> table;
  std::vector<int> point_vars;
  std::vector<Polynomial> gens;
};

// The three quadric generators x^2+ux+vy+w, xy+u'x+v'y+w', y^2+u''x+v''y+w''
// only cut out a flat family when w, w', w'' satisfy the two syzygies
// y*F1 - x*F2 and y*F2 - x*F3 modulo (F1,F2,F3). Solving the resulting
// linear conditions gives them as explicit quadrics in the six parameters.
struct SyzygySolution {
  std::shared_ptr<VarTable> table;  // x, y, u, u', u'', v, v', v'', w, w', w''
  Polynomial w, w1, w2;
};

SyzygySolution solve_w();  // throws InconsistentSyzygy if no unique solution

// Coefficient conditions of the outer generators reduced modulo the inner
// marked basis, one ideal generator per inner monomial.
Ideal incidence_locus(const Ideal& outer, const Ideal& inner_basis,
                      const std::vector<int>& inner_vars,
                      const MonomialOrder& order);

struct ChartReport {
  std::string target;
  int dim = 2;
  std::string mode;
  bool paper_generators_contained = false;
  bool extra_generators_absorbed = false;
  bool ideal_equal = false;
  int num_variables = 0;
  int jacobian_rank = 0;
  int smooth_dimension = 0;
  int expected_dimension = 0;
  bool free_variable_check = false;
  std::vector<std::string> free_variables;
  std::vector<std::string> computed_generators;
  std::vector<std::string> reference_generators;
};

ChartReport verify_chart(ChartTarget target, int dim = 2,
                         WMode mode = WMode::Substituted);

// Colength of the fiber of the Hilb^3 universal family at the parameter
// point (u, u', u'', v, v', v'') — always 3 when the chart is correct.
int colength_probe(const std::vector<Rational>& params);

}  // namespace hconf
