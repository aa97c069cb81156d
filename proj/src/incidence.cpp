#include "hconf/incidence.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace hconf {

namespace {

bool is_suffix(const Signature& suffix, const Signature& sig) {
  return suffix.size() <= sig.size() &&
         std::equal(suffix.rbegin(), suffix.rend(), sig.rbegin());
}

// Elements of the targets at depth |p| = k: a target whose stripped
// signature already has length k counts whole, one of length k+1
// contributes its elements.
std::set<Structure> target_elements(const std::vector<Structure>& targets,
                                    size_t k) {
  std::set<Structure> out;
  for (const auto& t : targets) {
    if (t.stripped_signature().size() == k) {
      out.insert(t);
    } else {
      auto elems = t.elements();
      out.insert(elems.begin(), elems.end());
    }
  }
  return out;
}

// Evaluate the recursion for the split with common tail of length k.
bool eval_split(const Structure& sigma, const std::vector<Structure>& targets,
                size_t k) {
  size_t depth = sigma.stripped_signature().size();
  auto covered = target_elements(targets, k);
  if (depth == k) return covered.count(sigma) > 0;
  if (depth == k + 1) {
    for (const auto& e : sigma.elements())
      if (!covered.count(e)) return false;
    return true;
  }
  for (const auto& tau : sigma.elements())
    if (!eval_split(tau, targets, k)) return false;
  return true;
}

}  // namespace

std::vector<SignatureSplit> signature_splits(
    const Structure& sigma, const std::vector<Structure>& targets) {
  std::vector<SignatureSplit> out;
  if (targets.empty()) return out;
  Signature cs = sigma.stripped_signature();
  for (size_t k = 0; k <= cs.size(); ++k) {
    Signature p(cs.end() - k, cs.end());
    bool ok = true;
    std::vector<int> n;
    for (const auto& t : targets) {
      Signature ct = t.stripped_signature();
      if (ct == p) {
        n.push_back(1);
      } else if (ct.size() == k + 1 && is_suffix(p, ct)) {
        n.push_back(ct.front());
      } else {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    SignatureSplit split;
    split.p = p;
    split.q.assign(cs.begin(), cs.end() - k);
    if (split.q.empty()) split.q = {1};  // sigma read in Sigma_{1,p_l..p_1}
    split.r = static_cast<int>(split.q.size());
    split.n = std::move(n);
    out.push_back(std::move(split));
  }
  return out;
}

bool incidence(const Structure& sigma, const std::vector<Structure>& targets) {
  for (const auto& split : signature_splits(sigma, targets)) {
    size_t k = split.p.size();
    if (eval_split(sigma, targets, k)) return true;
  }
  return false;
}

std::vector<IncidenceRelation> incidence_closure(const Enrichment& eta,
                                                 int max_arity) {
  if (max_arity < 1) throw OutOfRange("max_arity must be >= 1");
  auto member_set = eta.as_set();
  std::vector<Structure> members(member_set.begin(), member_set.end());
  std::vector<IncidenceRelation> out;
  std::set<std::pair<Structure, std::set<Structure>>> seen;
  for (const auto& sigma : members) {
    std::vector<Structure> pool;
    for (const auto& s : members)
      if (s != sigma) pool.push_back(s);
    size_t m = pool.size();
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
      if (std::popcount(mask) + 1 > max_arity) continue;
      std::vector<Structure> targets;
      for (size_t i = 0; i < m; ++i)
        if (mask & (1u << i)) targets.push_back(pool[i]);
      if (!incidence(sigma, targets)) continue;
      std::set<Structure> key(targets.begin(), targets.end());
      if (seen.insert({sigma, key}).second)
        out.push_back({sigma, std::move(targets)});
    }
  }
  return out;
}

}  // namespace hconf
