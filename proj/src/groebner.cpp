#include "hconf/groebner.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

namespace hconf {

namespace {

Monomial inner_part(const Monomial& m, const std::vector<bool>& mask) {
  Monomial out(m.size(), 0);
  for (size_t i = 0; i < m.size(); ++i)
    if (mask[i]) out[i] = m[i];
  return out;
}

std::vector<bool> make_mask(size_t nvars, const std::vector<int>& inner) {
  std::vector<bool> mask(nvars, false);
  for (int v : inner) mask[v] = true;
  return mask;
}

struct Marked {
  Monomial lead;      // inner leading monomial
  Rational lc;        // its (constant) coefficient
  const Polynomial* poly;
};

// The order-maximal inner monomial of p, with its coefficient polynomial.
std::pair<Monomial, Polynomial> lead_inner(const Polynomial& p,
                                           const std::vector<bool>& mask,
                                           const MonomialOrder& order) {
  std::optional<Monomial> best;
  for (const auto& [m, c] : p.terms()) {
    Monomial im = inner_part(m, mask);
    if (!best || order.less(*best, im)) best = im;
  }
  Polynomial coeff(p.table());
  for (const auto& [m, c] : p.terms()) {
    if (inner_part(m, mask) != *best) continue;
    Monomial outer = m;
    for (size_t i = 0; i < outer.size(); ++i)
      if (mask[i]) outer[i] = 0;
    coeff.add_term(outer, c);
  }
  return {*best, coeff};
}

std::vector<Marked> mark_basis(const std::vector<Polynomial>& basis,
                               const std::vector<bool>& mask,
                               const MonomialOrder& order) {
  std::vector<Marked> marked;
  for (const auto& b : basis) {
    if (b.is_zero()) continue;
    auto [lead, coeff] = lead_inner(b, mask, order);
    if (!coeff.is_constant())
      throw NonUnitLeadingCoefficient(b.to_string());
    marked.push_back({lead, coeff.constant_value(), &b});
  }
  return marked;
}

}  // namespace

std::pair<Polynomial, std::vector<Polynomial>> normal_form_with_cofactors(
    const Polynomial& f, const std::vector<Polynomial>& basis,
    const std::vector<int>& inner, const MonomialOrder& order) {
  const VarTable* table = f.table();
  for (const auto& b : basis)
    if (!table && b.table()) table = b.table();
  std::vector<bool> mask = make_mask(table->size(), inner);
  std::vector<Marked> marked = mark_basis(basis, mask, order);
  std::vector<Polynomial> cofactors(basis.size(), Polynomial(table));

  Polynomial rem = f;
  for (;;) {
    // The largest reducible inner monomial of the remainder.
    std::optional<Monomial> target;
    size_t which = 0;
    for (const auto& [m, c] : rem.terms()) {
      Monomial im = inner_part(m, mask);
      if (target && !order.less(*target, im)) continue;
      for (size_t k = 0; k < marked.size(); ++k)
        if (divides(marked[k].lead, im)) {
          target = im;
          which = k;
          break;
        }
    }
    if (!target) break;
    // Coefficient polynomial of that inner monomial.
    Polynomial coeff(table);
    for (const auto& [m, c] : rem.terms()) {
      if (inner_part(m, mask) != *target) continue;
      Monomial rest = m;
      for (size_t i = 0; i < rest.size(); ++i)
        if (mask[i]) rest[i] = 0;
      coeff.add_term(rest, c);
    }
    Monomial shift = *target;
    for (size_t i = 0; i < shift.size(); ++i) shift[i] -= marked[which].lead[i];
    Polynomial factor =
        coeff * Polynomial::monomial(table, shift,
                                     Rational(1) / marked[which].lc);
    rem = rem - factor * *marked[which].poly;
    // Map the marked index back to the basis position.
    size_t pos = 0;
    for (size_t b = 0, seen = 0; b < basis.size(); ++b) {
      if (basis[b].is_zero()) continue;
      if (seen++ == which) { pos = b; break; }
    }
    cofactors[pos] = cofactors[pos] + factor;
  }
  return {rem, cofactors};
}

Polynomial normal_form(const Polynomial& f,
                        const std::vector<Polynomial>& basis,
                        const std::vector<int>& inner,
                        const MonomialOrder& order) {
  return normal_form_with_cofactors(f, basis, inner, order).first;
}

std::vector<Polynomial> coeff_conditions(const Polynomial& f,
                                         const std::vector<int>& inner,
                                         const MonomialOrder& order) {
  if (f.is_zero()) return {};
  const VarTable* table = f.table();
  std::vector<bool> mask = make_mask(table->size(), inner);
  std::map<Monomial, Polynomial> grouped;
  for (const auto& [m, c] : f.terms()) {
    Monomial im = inner_part(m, mask);
    Monomial outer = m;
    for (size_t i = 0; i < outer.size(); ++i)
      if (mask[i]) outer[i] = 0;
    auto it = grouped.find(im);
    if (it == grouped.end())
      it = grouped.emplace(im, Polynomial(table)).first;
    it->second.add_term(outer, c);
  }
  std::vector<std::pair<Monomial, Polynomial>> list(grouped.begin(),
                                                    grouped.end());
  std::sort(list.begin(), list.end(),
            [&order](const auto& a, const auto& b) {
              return order.less(b.first, a.first);
            });
  std::vector<Polynomial> out;
  for (auto& [m, p] : list)
    if (!p.is_zero()) out.push_back(std::move(p));
  return out;
}

std::vector<int> all_vars(const VarTable& table) {
  std::vector<int> out(table.size());
  for (size_t i = 0; i < out.size(); ++i) out[i] = static_cast<int>(i);
  return out;
}

namespace {

std::pair<Monomial, Rational> lead_term(const Polynomial& p,
                                        const MonomialOrder& order) {
  auto it = p.terms().begin();
  auto best = it;
  for (++it; it != p.terms().end(); ++it)
    if (order.less(best->first, it->first)) best = it;
  return {best->first, best->second};
}

Polynomial make_monic(const Polynomial& p, const MonomialOrder& order) {
  if (p.is_zero()) return p;
  return p * (Rational(1) / lead_term(p, order).second);
}

}  // namespace

std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens,
                                   const MonomialOrder& order) {
  const VarTable* table = nullptr;
  for (const auto& g : gens)
    if (g.table()) { table = g.table(); break; }
  std::vector<Polynomial> basis;
  for (const auto& g : gens)
    if (!g.is_zero()) basis.push_back(make_monic(g, order));
  if (basis.empty()) return basis;
  std::vector<int> inner = all_vars(*table);

  std::deque<std::pair<size_t, size_t>> pairs;
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j) pairs.push_back({i, j});

  size_t steps = 0;
  while (!pairs.empty()) {
    if (++steps > 20000 || basis.size() > 200)
      throw ResourceBudgetExceeded("Buchberger run too large");
    auto [i, j] = pairs.front();
    pairs.pop_front();
    Monomial mi = lead_term(basis[i], order).first;
    Monomial mj = lead_term(basis[j], order).first;
    Monomial lcm(mi.size());
    bool coprime = true;
    for (size_t k = 0; k < mi.size(); ++k) {
      lcm[k] = std::max(mi[k], mj[k]);
      if (mi[k] > 0 && mj[k] > 0) coprime = false;
    }
    if (coprime) continue;  // first Buchberger criterion
    Monomial si = lcm, sj = lcm;
    for (size_t k = 0; k < lcm.size(); ++k) {
      si[k] -= mi[k];
      sj[k] -= mj[k];
    }
    Polynomial spoly =
        basis[i] * Polynomial::monomial(table, si, 1) -
        basis[j] * Polynomial::monomial(table, sj, 1);
    Polynomial rem = normal_form(spoly, basis, inner, order);
    if (rem.is_zero()) continue;
    basis.push_back(make_monic(rem, order));
    for (size_t k = 0; k + 1 < basis.size(); ++k)
      pairs.push_back({k, basis.size() - 1});
  }

  // Minimalize, then tail-reduce, for a unique reduced basis.
  std::vector<Polynomial> minimal;
  for (size_t i = 0; i < basis.size(); ++i) {
    Monomial mi = lead_term(basis[i], order).first;
    bool redundant = false;
    for (size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      Monomial mj = lead_term(basis[j], order).first;
      if (divides(mj, mi) && (mj != mi || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  std::vector<Polynomial> reduced;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> rest;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) rest.push_back(minimal[j]);
    Polynomial r = normal_form(minimal[i], rest, inner, order);
    if (!r.is_zero()) reduced.push_back(make_monic(r, order));
  }
  std::sort(reduced.begin(), reduced.end(),
            [&order](const Polynomial& a, const Polynomial& b) {
              return order.less(lead_term(a, order).first,
                                lead_term(b, order).first);
            });
  return reduced;
}

bool ideal_member(const Polynomial& f, const Ideal& I,
                  const MonomialOrder& order) {
  if (f.is_zero()) return true;
  auto gb = buchberger(I.gens, order);
  if (gb.empty()) return false;
  return normal_form(f, gb, all_vars(*f.table()), order).is_zero();
}

bool ideal_equal(const Ideal& I, const Ideal& J, const MonomialOrder& order) {
  for (const auto& f : I.gens)
    if (!ideal_member(f, J, order)) return false;
  for (const auto& f : J.gens)
    if (!ideal_member(f, I, order)) return false;
  return true;
}

namespace {

// Rebuild a polynomial over an extended table (same variables first).
Polynomial extend_poly(const Polynomial& p, const VarTable* ext) {
  Polynomial out(ext);
  for (const auto& [m, c] : p.terms()) {
    Monomial mm = m;
    mm.resize(ext->size(), 0);
    out.add_term(mm, c);
  }
  return out;
}

// Restrict back, dropping the trailing helper variable (exponent must be 0).
Polynomial restrict_poly(const Polynomial& p, const VarTable* base) {
  Polynomial out(base);
  for (const auto& [m, c] : p.terms()) {
    Monomial mm(m.begin(), m.begin() + base->size());
    out.add_term(mm, c);
  }
  return out;
}

}  // namespace

Ideal ideal_intersect(const Ideal& I, const Ideal& J,
                      const MonomialOrder& order) {
  const VarTable* table = nullptr;
  for (const auto& g : I.gens)
    if (g.table()) { table = g.table(); break; }
  for (const auto& g : J.gens)
    if (!table && g.table()) table = g.table();
  if (!table) return {};

  VarTable ext_table;
  for (size_t i = 0; i < table->size(); ++i)
    ext_table.add(table->name(static_cast<int>(i)),
                  table->tag(static_cast<int>(i)));
  int t = ext_table.add("@t");

  Polynomial tvar = Polynomial::variable(&ext_table, t);
  Polynomial one_minus_t = Polynomial::constant(&ext_table, 1) - tvar;
  std::vector<Polynomial> gens;
  for (const auto& g : I.gens)
    if (!g.is_zero()) gens.push_back(tvar * extend_poly(g, &ext_table));
  for (const auto& g : J.gens)
    if (!g.is_zero())
      gens.push_back(one_minus_t * extend_poly(g, &ext_table));

  // Lex with @t first is an elimination order for @t.
  std::vector<int> precedence{t};
  if (order.precedence.empty()) {
    for (size_t i = 0; i < table->size(); ++i)
      precedence.push_back(static_cast<int>(i));
  } else {
    for (int v : order.precedence) precedence.push_back(v);
  }
  auto gb = buchberger(gens, MonomialOrder::lex(precedence));

  Ideal out;
  for (const auto& g : gb) {
    bool has_t = false;
    for (const auto& [m, c] : g.terms())
      if (m[t] > 0) { has_t = true; break; }
    if (!has_t) out.gens.push_back(restrict_poly(g, table));
  }
  return out;
}

namespace {

Ideal colon_single(const Ideal& I, const Polynomial& f,
                   const MonomialOrder& order) {
  Ideal f_ideal{{f}};
  Ideal meet = ideal_intersect(I, f_ideal, order);
  Ideal out;
  for (const auto& g : meet.gens) {
    auto [rem, cof] =
        normal_form_with_cofactors(g, {f}, all_vars(*f.table()), order);
    if (!rem.is_zero())
      throw VerificationMismatch("inexact division in colon ideal");
    out.gens.push_back(cof[0]);
  }
  return out;
}

}  // namespace

Ideal colon_ideal(const Ideal& I, const Ideal& J, const MonomialOrder& order) {
  std::optional<Ideal> out;
  for (const auto& f : J.gens) {
    if (f.is_zero()) continue;
    if (f.is_constant()) {
      // (I : c) = I for a unit.
      Ideal copy = I;
      out = out ? ideal_intersect(*out, copy, order) : copy;
      continue;
    }
    Ideal q = colon_single(I, f, order);
    out = out ? ideal_intersect(*out, q, order) : q;
  }
  if (!out) throw EmptySet("colon by the zero ideal");
  return *out;
}

JacobianReport jacobian_rank_at_origin(const std::vector<Polynomial>& gens,
                                       const VarTable& table) {
  JacobianReport report;
  report.rank = jacobian_rank_on(gens, table, all_vars(table));
  // Greedy pivots in variable order determine a maximal invertible block.
  std::vector<int> pivots;
  for (size_t v = 0; v < table.size(); ++v) {
    std::vector<int> trial = pivots;
    trial.push_back(static_cast<int>(v));
    if (jacobian_rank_on(gens, table, trial) ==
        static_cast<int>(trial.size()))
      pivots = trial;
    if (static_cast<int>(pivots.size()) == report.rank) break;
  }
  report.pivot_vars = pivots;
  std::set<int> pivot_set(pivots.begin(), pivots.end());
  for (size_t v = 0; v < table.size(); ++v)
    if (!pivot_set.count(static_cast<int>(v)))
      report.free_vars.push_back(static_cast<int>(v));
  return report;
}

int jacobian_rank_on(const std::vector<Polynomial>& gens,
                     const VarTable& table, const std::vector<int>& columns) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& g : gens) {
    std::vector<Rational> row(columns.size(), 0);
    bool nonzero = false;
    for (size_t k = 0; k < columns.size(); ++k) {
      Monomial m(table.size(), 0);
      m[columns[k]] = 1;
      auto it = g.terms().find(m);
      if (it != g.terms().end()) {
        row[k] = it->second;
        nonzero = true;
      }
    }
    if (nonzero) rows.push_back(std::move(row));
  }
  int rank = 0;
  size_t ncols = columns.size();
  for (size_t col = 0; col < ncols && rank < static_cast<int>(rows.size());
       ++col) {
    size_t pivot = rows.size();
    for (size_t r = rank; r < rows.size(); ++r)
      if (rows[r][col] != 0) { pivot = r; break; }
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == static_cast<size_t>(rank) || rows[r][col] == 0) continue;
      Rational factor = rows[r][col] / rows[rank][col];
      for (size_t c = col; c < ncols; ++c)
        rows[r][c] -= factor * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

int colength(const Ideal& I, const MonomialOrder& order) {
  auto gb = buchberger(I.gens, order);
  if (gb.empty()) throw NotZeroDimensional("zero ideal");
  const VarTable* table = gb.front().table();
  std::vector<Monomial> leads;
  for (const auto& g : gb) leads.push_back(lead_term(g, order).first);
  // Zero-dimensionality: every variable needs a pure-power leading monomial.
  std::vector<int> bounds(table->size(), -1);
  for (const auto& m : leads) {
    int var = -1, deg = 0;
    bool pure = true;
    for (size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (var >= 0) { pure = false; break; }
      var = static_cast<int>(i);
      deg = m[i];
    }
    if (!pure) continue;
    if (var < 0) return 0;  // the ideal contains a unit
    if (bounds[var] < 0 || deg < bounds[var]) bounds[var] = deg;
  }
  for (size_t i = 0; i < bounds.size(); ++i)
    if (bounds[i] < 0)
      throw NotZeroDimensional("no pure power in " + table->name(i));
  // Count the staircase inside the bounding box.
  int count = 0;
  Monomial current(table->size(), 0);
  std::function<void(size_t)> walk = [&](size_t var) {
    if (var == current.size()) {
      for (const auto& m : leads)
        if (divides(m, current)) return;
      ++count;
      return;
    }
    for (int e = 0; e < bounds[var]; ++e) {
      current[var] = e;
      walk(var + 1);
    }
    current[var] = 0;
  };
  walk(0);
  return count;
}

}  // namespace hconf
