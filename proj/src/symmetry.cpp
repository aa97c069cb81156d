#include "hconf/symmetry.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace hconf {

Permutation Permutation::identity(int n) {
  Permutation g;
  g.img.resize(n);
  std::iota(g.img.begin(), g.img.end(), 1);
  return g;
}

Permutation compose(const Permutation& g, const Permutation& h) {
  Permutation out;
  out.img.resize(g.img.size());
  for (int i = 1; i <= g.n(); ++i) out.img[i - 1] = g(h(i));
  return out;
}

Permutation inverse(const Permutation& g) {
  Permutation out;
  out.img.resize(g.img.size());
  for (int i = 1; i <= g.n(); ++i) out.img[g(i) - 1] = i;
  return out;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation{img});
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

Structure act(const Permutation& g, const Structure& s) {
  if (s.is_leaf()) {
    std::vector<int> elems;
    for (int i : s.ints()) elems.push_back(g(i));
    return Structure::leaf(std::move(elems));
  }
  std::vector<Structure> kids;
  for (const auto& c : s.children()) kids.push_back(act(g, c));
  return Structure::node(std::move(kids));
}

Enrichment act(const Permutation& g, const Enrichment& e) {
  Enrichment out;
  out.n = e.n;
  for (const auto& s : e.structures) out.structures.push_back(act(g, s));
  return out;
}

std::vector<Enrichment> orbit(const Enrichment& e) {
  std::set<std::set<Structure>> seen;
  std::vector<Enrichment> out;
  for (const auto& g : all_permutations(e.n)) {
    Enrichment img = act(g, e);
    if (seen.insert(img.as_set()).second) out.push_back(std::move(img));
  }
  std::sort(out.begin(), out.end(), [](const Enrichment& a, const Enrichment& b) {
    return a.as_set() < b.as_set();
  });
  return out;
}

namespace {

std::string order_label(size_t order) {
  switch (order) {
    case 1: return "S_1";
    case 2: return "S_2";
    case 3: return "C_3";
    case 6: return "S_3";
    default: return "order " + std::to_string(order);
  }
}

}  // namespace

GroupDescriptor stabilizer_G(const Enrichment& e) {
  GroupDescriptor G;
  for (const auto& g : all_permutations(e.n))
    if (set_equal(act(g, e), e)) G.elements.push_back(g);
  G.label = order_label(G.elements.size());
  return G;
}

GroupDescriptor pointwise_stabilizer_H(const Enrichment& e) {
  GroupDescriptor H;
  for (const auto& g : all_permutations(e.n)) {
    bool fixes = true;
    for (const auto& s : e.structures)
      if (act(g, s) != s) { fixes = false; break; }
    if (fixes) H.elements.push_back(g);
  }
  H.label = order_label(H.elements.size());
  return H;
}

GroupDescriptor acting_group(const Enrichment& e) {
  GroupDescriptor G = stabilizer_G(e);
  GroupDescriptor H = pointwise_stabilizer_H(e);
  GroupDescriptor quot;
  std::set<Permutation> covered;
  for (const auto& g : G.elements) {
    if (covered.count(g)) continue;
    quot.elements.push_back(g);
    for (const auto& h : H.elements) covered.insert(compose(g, h));
  }
  quot.label = order_label(quot.elements.size());
  return quot;
}

Enrichment invariant_substructures(const Enrichment& e,
                                   const GroupDescriptor& G) {
  auto key = e.as_set();
  for (const auto& g : G.elements)
    if (act(g, e).as_set() != key)
      throw NotASubgroupOfStabilizer("group element moves the enrichment");
  Enrichment out;
  out.n = e.n;
  for (const auto& s : e.structures) {
    bool fixed = true;
    for (const auto& g : G.elements)
      if (act(g, s) != s) { fixed = false; break; }
    if (fixed) out.structures.push_back(s);
  }
  return out;
}

}  // namespace hconf
