#include "hconf/classify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace hconf {

std::string to_string(RuleTag tag) {
  switch (tag) {
    case RuleTag::Residual: return "Residual";
    case RuleTag::PairToDouble: return "PairToDouble";
    case RuleTag::DoubleFromTriple: return "DoubleFromTriple";
    case RuleTag::TripleFromDouble: return "TripleFromDouble";
    case RuleTag::Level3Triple: return "Level3Triple";
    case RuleTag::Level3Residual: return "Level3Residual";
  }
  return "?";
}

std::string to_string(DetectorTag tag) {
  switch (tag) {
    case DetectorTag::ExactPointsTriple: return "ExactPointsTriple";
    case DetectorTag::UniqueDoubleDoubleWithPoint:
      return "UniqueDoubleDoubleWithPoint";
    case DetectorTag::TwoDoubleDoublesNoDoublet:
      return "TwoDoubleDoublesNoDoublet";
    case DetectorTag::TripleDoubletWithPoints:
      return "TripleDoubletWithPoints";
    case DetectorTag::LevelThreePattern: return "LevelThreePattern";
  }
  return "?";
}

namespace {

bool is_doublet(const Structure& s) {
  return s.is_leaf() && s.ints().size() == 2;
}

bool is_point(const Structure& s) {
  return s.is_leaf() && s.ints().size() == 1;
}

// Stripped signature (m, 2, ..., 2)?
bool is_triple_family(const Structure& s, int m) {
  Signature sig = s.stripped_signature();
  if (sig.empty() || sig.front() != m) return false;
  return std::all_of(sig.begin() + 1, sig.end(),
                     [](int p) { return p == 2; });
}

// The unique element of Sigma_{3,2,...,2}({1,2,3}) of a given level:
// s_1 = sigma_123, s_2 = sigma^123, s_l = the set of all three elements
// of Sigma_{2,...,2} of level l-1.
Structure level3_structure(int level) {
  if (level == 1) return full_structure(3);
  std::vector<Structure> family = {doublet(1, 2), doublet(1, 3),
                                   doublet(2, 3)};
  for (int l = 2; l < level; ++l) {
    std::vector<Structure> next;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        next.push_back(Structure::node({family[i], family[j]}));
    std::sort(next.begin(), next.end());
    family = std::move(next);
  }
  return Structure::node(std::move(family));
}

std::vector<Structure> minus_one(const std::vector<Structure>& elems,
                                 const Structure& drop) {
  std::vector<Structure> out;
  for (const auto& e : elems)
    if (e != drop) out.push_back(e);
  return out;
}

}  // namespace

std::vector<RuleApplication> extensions(const Enrichment& eta) {
  const int bound = std::max(2, eta.level());
  const auto present = eta.as_set();
  std::vector<Structure> members(present.begin(), present.end());
  std::vector<RuleApplication> out;
  auto propose = [&](RuleTag tag, Structure added,
                     std::vector<Structure> witnesses) {
    if (added.level() > bound || present.count(added)) return;
    out.push_back({tag, std::move(added), std::move(witnesses)});
  };

  // Residual: big = small union {sigma} at matching signatures.
  for (const auto& big : members) {
    auto elems = big.elements();
    const int m = static_cast<int>(elems.size());
    if (m < 2) continue;
    Signature tail = big.stripped_signature();
    tail.erase(tail.begin());
    for (const auto& small : members) {
      if (small == big) continue;
      std::vector<Structure> viewed;
      Signature ssig = small.stripped_signature();
      if (m >= 3 && !ssig.empty() && ssig.front() == m - 1 &&
          Signature(ssig.begin() + 1, ssig.end()) == tail) {
        viewed = small.elements();
      } else if (m == 2 && ssig == tail) {
        viewed = {small};
      } else {
        continue;
      }
      std::set<Structure> elem_set(elems.begin(), elems.end());
      bool inside = std::all_of(viewed.begin(), viewed.end(),
                                [&](const Structure& v) {
                                  return elem_set.count(v) > 0;
                                });
      if (!inside) continue;
      for (const auto& v : viewed) elem_set.erase(v);
      if (elem_set.size() != 1) continue;
      propose(RuleTag::Residual, *elem_set.begin(), {big, small});
    }
  }

  // PairToDouble: two doublets through a common point form a new structure.
  for (size_t i = 0; i < members.size(); ++i) {
    if (!is_doublet(members[i])) continue;
    for (size_t j = i + 1; j < members.size(); ++j) {
      if (!is_doublet(members[j])) continue;
      std::vector<int> common;
      std::set_intersection(members[i].ints().begin(),
                            members[i].ints().end(),
                            members[j].ints().begin(),
                            members[j].ints().end(),
                            std::back_inserter(common));
      if (common.size() != 1) continue;
      propose(RuleTag::PairToDouble,
              Structure::node({members[i], members[j]}),
              {members[i], members[j]});
    }
  }

  // TripleFromDouble: a doublet plus the complementary pair of doublets.
  for (const auto& d : members) {
    if (!is_doublet(d)) continue;
    for (const auto& pair : members) {
      if (!is_triple_family(pair, 2) || pair.level() != 2) continue;
      const auto& kids = pair.children();
      if (std::find(kids.begin(), kids.end(), d) != kids.end()) continue;
      std::set<int> carrier(d.ints().begin(), d.ints().end());
      for (const auto& k : kids)
        for (int x : k.ints()) carrier.insert(x);
      if (carrier.size() != 3) continue;
      std::vector<Structure> all = kids;
      all.push_back(d);
      propose(RuleTag::TripleFromDouble, Structure::node(std::move(all)),
              {d, pair});
    }
  }

  // DoubleFromTriple / Level3Residual: e in Sigma_{3,2..2}, g an element of
  // e present in eta; add the complement [e] - [g].
  for (const auto& e : members) {
    if (e.level() < 2 || !is_triple_family(e, 3)) continue;
    for (const auto& g : e.elements()) {
      if (!present.count(g)) continue;
      RuleTag tag = e.level() == 2 ? RuleTag::DoubleFromTriple
                                   : RuleTag::Level3Residual;
      propose(tag, Structure::node(minus_one(e.elements(), g)), {e, g});
    }
  }

  // Level3Triple: with s_l the unique structure of signature (3,2,...,2)
  // at level l, the largest s_l present (l >= 2) licenses s_{l+1}.
  if (eta.n == 3) {
    int l0 = 0;
    for (int l = 2; l <= bound; ++l)
      if (present.count(level3_structure(l))) l0 = l;
    if (l0 >= 2)
      propose(RuleTag::Level3Triple, level3_structure(l0 + 1),
              {level3_structure(l0)});
  }

  return out;
}

Saturation saturate(const Enrichment& eta, int level_cap) {
  if (eta.level() > level_cap)
    throw LevelCapExceeded("enrichment level above cap");
  Saturation sat;
  sat.closure = eta;
  for (;;) {
    auto exts = extensions(sat.closure);
    if (exts.empty()) break;
    std::sort(exts.begin(), exts.end(),
              [](const RuleApplication& a, const RuleApplication& b) {
                return a.added < b.added;
              });
    std::set<Structure> round;
    for (auto& ext : exts) {
      if (!round.insert(ext.added).second) continue;
      sat.closure.structures.push_back(ext.added);
      sat.trace.push_back(std::move(ext));
    }
  }
  return sat;
}

namespace {

bool conjugate_to(const Enrichment& eta, const std::vector<Structure>& list) {
  Enrichment target = mk_enrichment(list, eta.n);
  for (const auto& g : all_permutations(eta.n))
    if (set_equal(act(g, eta), target)) return true;
  return false;
}

}  // namespace

std::optional<DetectorTag> detect_nonadmissible(const Enrichment& eta) {
  if (eta.n == 2) return std::nullopt;
  if (eta.n != 3) throw OutOfRange("detectors cover n in {2,3}");
  const Structure s123 = full_structure(3);
  const Structure sup123 = triple_doublet(3);

  if (eta.level() >= 3) {
    // Level >= 3 over a low part contained (up to conjugation) in
    // {s1, s2, s3, s12, s13, s123, s^1}.
    std::set<Structure> bad = {point(1),      point(2),  point(3),
                               doublet(1, 2), doublet(1, 3),
                               s123,          double_doublet(1, 3)};
    for (const auto& g : all_permutations(3)) {
      bool inside = true;
      for (const auto& s : eta.structures)
        if (s.level() <= 2 && !bad.count(act(g, s))) { inside = false; break; }
      if (inside) return DetectorTag::LevelThreePattern;
    }
    return std::nullopt;
  }

  if (conjugate_to(eta, {point(1), point(2), s123}) ||
      conjugate_to(eta, {point(1), point(2), point(3), s123}))
    return DetectorTag::ExactPointsTriple;
  if (conjugate_to(eta, {point(1), point(2), sup123, s123}) ||
      conjugate_to(eta, {point(1), point(2), point(3), sup123, s123}))
    return DetectorTag::TripleDoubletWithPoints;

  int num_dd = 0, num_doublets = 0, num_points = 0;
  bool has_sup123 = false;
  for (const auto& s : eta.as_set()) {
    if (is_doublet(s)) ++num_doublets;
    if (is_point(s)) ++num_points;
    if (s.level() == 2 && is_triple_family(s, 2)) ++num_dd;
    if (s == sup123) has_sup123 = true;
  }
  if (num_doublets == 0 && !has_sup123) {
    if (num_dd >= 2) return DetectorTag::TwoDoubleDoublesNoDoublet;
    if (num_dd == 1 && num_points >= 1)
      return DetectorTag::UniqueDoubleDoubleWithPoint;
  }
  return std::nullopt;
}

namespace {

std::string encode(const Enrichment& eta) {
  auto members = eta.as_set();
  std::string out;
  for (const auto& s : members) out += s.to_string() + ";";
  return out;
}

// Saturations of the named models, computed once per ground-set size.
const std::vector<std::pair<ModelName, std::set<Structure>>>&
model_saturations(int n) {
  static std::map<int, std::vector<std::pair<ModelName, std::set<Structure>>>>
      cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    std::vector<std::pair<ModelName, std::set<Structure>>> sats;
    for (const auto& name : model_names(n))
      sats.emplace_back(name,
                        saturate(name.to_enrichment(n)).closure.as_set());
    it = cache.emplace(n, std::move(sats)).first;
  }
  return it->second;
}

std::optional<std::pair<ModelName, Permutation>> match_model(
    const Enrichment& closure) {
  for (const auto& g : all_permutations(closure.n)) {
    auto key = act(g, closure).as_set();
    for (const auto& [name, sat] : model_saturations(closure.n))
      if (key == sat) return std::make_pair(name, g);
  }
  return std::nullopt;
}

// A level >= 3 structure of the closure is covered when its presence is
// forced by the level-raising rules from the rest of the closure.
bool level3_covered(const Structure& s, const std::set<Structure>& closure) {
  if (is_triple_family(s, 3)) {
    // s = s_l; justified by s_{l-1} below it.
    Structure prev = level3_structure(s.level() - 1);
    return prev.level() >= 2 && closure.count(prev) > 0;
  }
  if (is_triple_family(s, 2)) {
    // f with [f] = [e] - [g] for e = s_l and g both in the closure.
    Structure e = level3_structure(s.level());
    if (!closure.count(e)) return false;
    std::set<Structure> fe(s.children().begin(), s.children().end());
    for (const auto& g : e.elements())
      if (!fe.count(g)) return closure.count(g) > 0;
    return false;
  }
  return false;
}

}  // namespace

ClassificationReport classify(const Enrichment& eta) {
  if (eta.n != 2 && eta.n != 3)
    throw OutOfRange("classification covers n in {2,3}");
  ClassificationReport report;
  report.input = eta;
  Saturation sat = saturate(eta, std::max(3, eta.level()));
  report.closure = sat.closure;
  report.trace = sat.trace;

  Enrichment to_match = sat.closure;
  bool reduced = false;
  if (eta.level() >= 3) {
    if (auto det = detect_nonadmissible(eta)) {
      report.status = Verdict::NonAdmissible;
      report.detector = det;
      return report;
    }
    auto closure_set = sat.closure.as_set();
    for (const auto& s : closure_set) {
      if (s.level() <= 2) continue;
      if (!level3_covered(s, closure_set))
        throw ClassificationIncomplete("uncovered level >= 3 structure " +
                                       s.to_string());
    }
    Enrichment low{eta.n, {}};
    for (const auto& s : sat.closure.structures)
      if (s.level() <= 2) low.structures.push_back(s);
    to_match = saturate(low).closure;
    reduced = true;
  }

  if (auto match = match_model(to_match)) {
    report.status = Verdict::Admissible;
    report.model = match->first;
    report.g = match->second;
    report.reduced = reduced;
    return report;
  }
  if (auto det = detect_nonadmissible(eta)) {
    report.status = Verdict::NonAdmissible;
    report.detector = det;
    return report;
  }
  throw ClassificationIncomplete("no model match and no detector for " +
                                 encode(eta));
}

ClassificationSummary classify_all(int n, int max_level) {
  ClassificationSummary summary;
  summary.n = n;
  std::vector<Structure> pool;
  Structure full = full_structure(n);
  for (const auto& s : enumerate_structures(n, max_level))
    if (s != full) pool.push_back(s);
  if (pool.size() > 20) throw ResourceBudgetExceeded("enumeration too large");
  for (unsigned mask = 0; mask < (1u << pool.size()); ++mask) {
    std::vector<Structure> structures = {full};
    for (size_t i = 0; i < pool.size(); ++i)
      if (mask & (1u << i)) structures.push_back(pool[i]);
    Enrichment eta = mk_enrichment(std::move(structures), n);
    ClassificationReport report = classify(eta);
    ++summary.total;
    if (report.status == Verdict::Admissible) {
      ++summary.admissible;
      ++summary.per_model[report.model.to_string()];
      summary.key_to_model.emplace(iso_key(eta), report.model.to_string());
    } else {
      ++summary.non_admissible;
      ++summary.per_detector[to_string(*report.detector)];
    }
  }
  return summary;
}

std::string iso_key(const Enrichment& eta) {
  std::optional<std::string> best;
  for (const auto& g : all_permutations(eta.n)) {
    std::string key = encode(saturate(act(g, eta)).closure);
    if (!best || key < *best) best = key;
  }
  return *best;
}

std::string ForgetfulDiagram::to_dot() const {
  std::ostringstream os;
  os << "digraph forgetful {\n";
  for (const auto& node : nodes)
    os << "  \"" << node.to_string() << "\";\n";
  for (const auto& edge : edges)
    os << "  \"" << edge.from.to_string() << "\" -> \""
       << edge.to.to_string() << "\";\n";
  os << "}\n";
  return os.str();
}

ForgetfulDiagram forgetful_diagram(const std::vector<ModelName>& models,
                                   int n) {
  ForgetfulDiagram diagram;
  diagram.nodes = models;
  const size_t m = models.size();
  if (models.empty()) return diagram;
  std::vector<std::vector<bool>> reach(m, std::vector<bool>(m, false));
  for (size_t a = 0; a < m; ++a) {
    auto sat = saturate(models[a].to_enrichment(n)).closure;
    for (size_t b = 0; b < m; ++b) {
      if (a == b) continue;
      Enrichment target = models[b].to_enrichment(n);
      for (const auto& g : all_permutations(n))
        if (subset_of(act(g, target), sat)) { reach[a][b] = true; break; }
    }
  }
  // Transitive reduction over the (acyclic) containment relation.
  for (size_t a = 0; a < m; ++a)
    for (size_t b = 0; b < m; ++b) {
      if (!reach[a][b]) continue;
      bool shortcut = false;
      for (size_t c = 0; c < m && !shortcut; ++c)
        shortcut = c != a && c != b && reach[a][c] && reach[c][b];
      if (!shortcut) diagram.edges.push_back({models[a], models[b]});
    }
  return diagram;
}

std::vector<QuotientRow> quotient_table() {
  auto models = model_names(3);
  // Quotient column of the quotient theorem, in the paper's model order,
  // plus the partial quotient of R_max by S_2 appended at the end.
  const std::vector<std::string> quotients = {
      "R_123",        "R_{1,123}",   "R_{3,12,123}", "R_{3,12,123}",
      "R^1_123",      "R^1_123",     "R^123_123",    "R^123_{1,123}",
      "R^{3,123}_{3,12,123}",        "R^{3,123}_{3,12,123}",
      "R^123_123"};
  const std::vector<std::string> groups = {"S_1", "S_1", "S_2", "S_1",
                                           "S_1", "S_2", "S_1", "S_1",
                                           "S_1", "S_2", "S_3"};
  std::vector<QuotientRow> table;
  for (size_t i = 0; i < models.size(); ++i) {
    QuotientRow row;
    row.model = models[i];
    row.group_label = groups[i];
    row.quotient = ModelName::parse(quotients[i]);
    table.push_back(row);
  }
  QuotientRow partial;
  partial.model = models.back();  // R_max
  partial.group_label = "S_2";
  partial.quotient = ModelName::parse("R^{3,123}_{3,12,123}");
  partial.partial = true;
  table.push_back(partial);

  for (auto& row : table) {
    Enrichment model = row.model.to_enrichment(3);
    GroupDescriptor G;
    if (row.partial) {
      // The subgroup {id, (1 2)} of S_3 acting on eta_max.
      G.elements = {Permutation::identity(3), Permutation{{2, 1, 3}}};
      G.label = "S_2";
      row.group_verified = true;
    } else {
      G = acting_group(model);
      row.group_verified = G.label == row.group_label;
      if (!row.group_verified)
        throw VerificationMismatch("acting group of " +
                                   row.model.to_string());
      // Invariance is taken under the full stabilizer.
      G = stabilizer_G(model);
    }
    Enrichment fixed = invariant_substructures(model, G);
    Enrichment quotient = row.quotient.to_enrichment(3);
    if (set_equal(fixed, quotient)) {
      row.invariant_verified = true;
    } else {
      // Documented repair: a detector flags the fixed set as inadmissible;
      // dropping its point structures must yield the quotient model.
      if (!detect_nonadmissible(fixed))
        throw VerificationMismatch("fixed set of " + row.model.to_string() +
                                   " neither matches nor is flagged");
      Enrichment pruned{fixed.n, {}};
      for (const auto& s : fixed.structures)
        if (!is_point(s)) pruned.structures.push_back(s);
      if (!set_equal(pruned, quotient))
        throw VerificationMismatch("repair failed for " +
                                   row.model.to_string());
      row.invariant_verified = true;
      row.repaired = true;
    }
  }
  return table;
}

}  // namespace hconf
