#include "hconf/structure.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <ostream>
#include <sstream>

namespace hconf {

Structure Structure::leaf(std::vector<int> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  if (elems.empty()) throw EmptySet("leaf with no elements");
  Structure s;
  s.leaf_ = std::move(elems);
  return s;
}

Structure Structure::node(std::vector<Structure> children) {
  if (children.empty()) throw EmptySet("node with no children");
  std::sort(children.begin(), children.end());
  children.erase(std::unique(children.begin(), children.end()), children.end());
  if (children.size() == 1) return children.front();  // singleton level stripped
  Signature sig = children.front().signature();
  for (const auto& c : children)
    if (c.signature() != sig)
      throw MixedSignature("siblings with signatures differing");
  // A set of singleton leaves is identified with the leaf of their union.
  if (children.front().is_leaf() && children.front().ints().size() == 1) {
    std::vector<int> elems;
    for (const auto& c : children) elems.push_back(c.ints().front());
    return leaf(std::move(elems));
  }
  Structure s;
  s.kids_ = std::move(children);
  return s;
}

int Structure::level() const {
  return is_leaf() ? 1 : 1 + kids_.front().level();
}

Signature Structure::signature() const {
  if (is_leaf()) return {static_cast<int>(leaf_.size())};
  Signature sig = kids_.front().signature();
  sig.insert(sig.begin(), static_cast<int>(kids_.size()));
  return sig;
}

Signature Structure::stripped_signature() const {
  Signature sig = signature();
  std::erase(sig, 1);
  return sig;
}

std::vector<int> Structure::carrier() const {
  if (is_leaf()) return leaf_;
  std::set<int> acc;
  for (const auto& c : kids_) {
    auto sub = c.carrier();
    acc.insert(sub.begin(), sub.end());
  }
  return {acc.begin(), acc.end()};
}

std::vector<Structure> Structure::elements() const {
  if (!is_leaf()) return kids_;
  std::vector<Structure> out;
  for (int i : leaf_) out.push_back(leaf({i}));
  return out;
}

std::strong_ordering Structure::operator<=>(const Structure& o) const {
  if (auto c = level() <=> o.level(); c != 0) return c;
  if (auto c = signature() <=> o.signature(); c != 0) return c;
  if (is_leaf()) return leaf_ <=> o.leaf_;
  return kids_ <=> o.kids_;
}

std::string Structure::to_string() const {
  std::ostringstream os;
  os << '{';
  if (is_leaf()) {
    for (size_t i = 0; i < leaf_.size(); ++i)
      os << (i ? "," : "") << leaf_[i];
  } else {
    for (size_t i = 0; i < kids_.size(); ++i)
      os << (i ? "," : "") << kids_[i].to_string();
  }
  os << '}';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Structure& s) {
  return os << s.to_string();
}

std::vector<Structure> enumerate_structures(int n, int max_level) {
  if (n < 1 || max_level < 1) throw OutOfRange("need n >= 1, max_level >= 1");
  std::set<Structure> all;
  // Level 1: nonempty subsets of {1..n}.
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> elems;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) elems.push_back(i + 1);
    all.insert(Structure::leaf(std::move(elems)));
  }
  std::vector<Structure> prev(all.begin(), all.end());
  for (int lvl = 2; lvl <= max_level; ++lvl) {
    // Level lvl: sets of >= 2 equal-signature structures of level lvl-1.
    std::map<Signature, std::vector<Structure>> groups;
    for (const auto& s : prev)
      if (s.level() == lvl - 1) groups[s.signature()].push_back(s);
    std::vector<Structure> cur;
    for (const auto& [sig, grp] : groups) {
      size_t m = grp.size();
      if (m > 20) throw ResourceBudgetExceeded("structure group too large");
      for (unsigned mask = 1; mask < (1u << m); ++mask) {
        if (std::popcount(mask) < 2) continue;
        std::vector<Structure> kids;
        for (size_t i = 0; i < m; ++i)
          if (mask & (1u << i)) kids.push_back(grp[i]);
        Structure s = Structure::node(std::move(kids));
        if (s.level() == lvl && all.insert(s).second) cur.push_back(s);
      }
    }
    prev = std::move(cur);
  }
  return {all.begin(), all.end()};
}

Structure point(int i) { return Structure::leaf({i}); }

Structure doublet(int i, int j) { return Structure::leaf({i, j}); }

Structure full_structure(int n) {
  std::vector<int> elems(n);
  for (int i = 0; i < n; ++i) elems[i] = i + 1;
  return Structure::leaf(std::move(elems));
}

Structure double_doublet(int k, int n) {
  if (n != 3) throw OutOfRange("double_doublet needs n = 3");
  std::vector<Structure> kids;
  for (int i = 1; i <= 3; ++i)
    if (i != k) kids.push_back(doublet(std::min(i, k), std::max(i, k)));
  return Structure::node(std::move(kids));
}

Structure triple_doublet(int n) {
  if (n != 3) throw OutOfRange("triple_doublet needs n = 3");
  return Structure::node({doublet(1, 2), doublet(1, 3), doublet(2, 3)});
}

}  // namespace hconf
