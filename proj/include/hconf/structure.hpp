#pragma once

#include <compare>
#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include "hconf/errors.hpp"

namespace hconf {

// Signature (p_l,...,p_1), outermost first. Canonical form has no entry 1,
// except for the singleton leaf whose signature is (1).
using Signature = std::vector<int>;

// A canonical nested set over {1..n}: either a sorted set of integers (leaf)
// or a sorted set of pairwise distinct children sharing one signature.
// Canonicalization strips singleton levels: a node with one child collapses
// to that child, and a node whose children are all singleton leaves collapses
// to the leaf of their union.
class Structure {
 public:
  static Structure leaf(std::vector<int> elems);
  static Structure node(std::vector<Structure> children);

  bool is_leaf() const { return kids_.empty(); }
  const std::vector<int>& ints() const { return leaf_; }
  const std::vector<Structure>& children() const { return kids_; }

  int level() const;
  Signature signature() const;
  // Signature with every 1 removed; empty for a singleton leaf.
  Signature stripped_signature() const;
  std::vector<int> carrier() const;

  // Elements of the structure one level down, as structures. For a leaf,
  // its integers as singleton leaves; for a node, its children.
  std::vector<Structure> elements() const;

  std::strong_ordering operator<=>(const Structure& o) const;
  bool operator==(const Structure& o) const = default;

  std::string to_string() const;

 private:
  Structure() = default;
  std::vector<int> leaf_;        // nonempty iff leaf
  std::vector<Structure> kids_;  // nonempty iff node
};

std::ostream& operator<<(std::ostream& os, const Structure& s);

// All canonical structures over {1..n} of level <= max_level, sorted.
std::vector<Structure> enumerate_structures(int n, int max_level);

// Convenience builders for the ground set {1,2,3}.
Structure point(int i);                 // sigma_i
Structure doublet(int i, int j);        // sigma_ij
Structure full_structure(int n);        // sigma_{1..n}
Structure double_doublet(int k, int n); // sigma^k = the two doublets through k
Structure triple_doublet(int n);        // sigma^{123} = all three doublets

}  // namespace hconf
