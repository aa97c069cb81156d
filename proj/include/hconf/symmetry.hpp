#pragma once

#include "hconf/enrichment.hpp"

namespace hconf {

// Permutation of {1..n}, stored by images: img[i-1] = g(i).
struct Permutation {
  std::vector<int> img;

  static Permutation identity(int n);
  int n() const { return static_cast<int>(img.size()); }
  int operator()(int i) const { return img[i - 1]; }

  auto operator<=>(const Permutation& o) const = default;
};

Permutation compose(const Permutation& g, const Permutation& h);  // g after h
Permutation inverse(const Permutation& g);
std::vector<Permutation> all_permutations(int n);

Structure act(const Permutation& g, const Structure& s);
Enrichment act(const Permutation& g, const Enrichment& e);

// Set-equality classes of the S_n orbit, in canonical order.
std::vector<Enrichment> orbit(const Enrichment& e);

struct GroupDescriptor {
  std::vector<Permutation> elements;
  std::string label;  // "S_1", "S_2", "S_3" (or "C_3" should it arise)
};

GroupDescriptor stabilizer_G(const Enrichment& e);
GroupDescriptor pointwise_stabilizer_H(const Enrichment& e);
// G_eta / H_eta via coset representatives, labeled by order.
GroupDescriptor acting_group(const Enrichment& e);

// The sub-sequence of structures fixed by every element of G.
Enrichment invariant_substructures(const Enrichment& e,
                                   const GroupDescriptor& G);

}  // namespace hconf
