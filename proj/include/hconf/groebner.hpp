#pragma once

#include <optional>

#include "hconf/poly.hpp"

namespace hconf {

struct Ideal {
  std::vector<Polynomial> gens;
};

// Reduction of f relative to a marked basis, treating only the variables in
// `inner` as reduction variables; coefficients live in the outer ring. Each
// basis element must have a constant (unit) leading coefficient w.r.t. the
// order restricted to the inner variables.
Polynomial normal_form(const Polynomial& f,
                        const std::vector<Polynomial>& basis,
                        const std::vector<int>& inner,
                        const MonomialOrder& order);

// Same, also returning the cofactors q_i with f = sum q_i b_i + remainder.
std::pair<Polynomial, std::vector<Polynomial>> normal_form_with_cofactors(
    const Polynomial& f, const std::vector<Polynomial>& basis,
    const std::vector<int>& inner, const MonomialOrder& order);

// The coefficients of f seen as a polynomial in the inner variables, as
// polynomials in the outer variables, in decreasing inner-monomial order.
std::vector<Polynomial> coeff_conditions(const Polynomial& f,
                                         const std::vector<int>& inner,
                                         const MonomialOrder& order);

std::vector<int> all_vars(const VarTable& table);

// Reduced Groebner basis (all variables inner).
std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens,
                                   const MonomialOrder& order);

bool ideal_member(const Polynomial& f, const Ideal& I,
                  const MonomialOrder& order);
bool ideal_equal(const Ideal& I, const Ideal& J, const MonomialOrder& order);

// Intersection and quotient, via the usual single-variable elimination
// trick in a temporarily extended ring.
Ideal ideal_intersect(const Ideal& I, const Ideal& J,
                      const MonomialOrder& order);
Ideal colon_ideal(const Ideal& I, const Ideal& J, const MonomialOrder& order);

struct JacobianReport {
  int rank = 0;
  std::vector<int> pivot_vars;
  std::vector<int> free_vars;
};

JacobianReport jacobian_rank_at_origin(const std::vector<Polynomial>& gens,
                                       const VarTable& table);

// Rank of the linear-part matrix restricted to the given columns.
int jacobian_rank_on(const std::vector<Polynomial>& gens,
                     const VarTable& table, const std::vector<int>& columns);

// Vector-space dimension of the quotient by a zero-dimensional ideal,
// counted through the Groebner staircase.
int colength(const Ideal& I, const MonomialOrder& order);

}  // namespace hconf
