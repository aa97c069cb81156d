#include "hconf/strata.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace hconf {

std::string to_string(FShape s) {
  switch (s) {
    case FShape::Three: return "3";
    case FShape::Two: return "2";
    case FShape::Curvilinear: return "c";
    case FShape::Fat: return "g";
  }
  return "?";
}

std::string to_string(GShape s) {
  switch (s) {
    case GShape::Two: return "2";
    case GShape::One: return "1";
  }
  return "?";
}

namespace {

bool has_shape(const Structure& s, int head) {
  Signature sig = s.stripped_signature();
  if (sig.empty() || sig.front() != head) return false;
  return std::all_of(sig.begin() + 1, sig.end(),
                     [](int p) { return p == 2; });
}

std::set<Structure> canonical_subset(std::set<Structure> subset) {
  if (subset.size() < 2) subset.clear();
  return subset;
}

}  // namespace

std::vector<Structure> triple_members(const Enrichment& eta) {
  std::vector<Structure> out;
  for (const auto& s : eta.as_set())
    if (has_shape(s, 3)) out.push_back(s);
  return out;
}

std::vector<Structure> doublet_members(const Enrichment& eta) {
  std::vector<Structure> out;
  for (const auto& s : eta.as_set())
    if (has_shape(s, 2)) out.push_back(s);
  return out;
}

std::map<Signature, std::set<Structure>> signature_classes(
    const Enrichment& eta) {
  std::map<Signature, std::set<Structure>> classes;
  for (const auto& s : eta.as_set()) classes[s.signature()].insert(s);
  return classes;
}

std::vector<StratumConfig> conf_space(const Enrichment& eta) {
  const auto e3 = triple_members(eta);
  const auto e2 = doublet_members(eta);
  const auto classes = signature_classes(eta);

  std::vector<StratumConfig> configs{StratumConfig{}};
  auto grow = [&configs](auto&& options) {
    std::vector<StratumConfig> next;
    for (const auto& c : configs)
      for (const auto& extend : options) {
        StratumConfig cc = c;
        extend(cc);
        next.push_back(std::move(cc));
      }
    configs = std::move(next);
  };

  for (const auto& s : e3) {
    std::vector<std::function<void(StratumConfig&)>> options;
    for (FShape shape : {FShape::Three, FShape::Two, FShape::Curvilinear,
                         FShape::Fat})
      options.push_back([s, shape](StratumConfig& c) { c.f[s] = shape; });
    grow(options);
  }
  for (const auto& s : e2) {
    std::vector<std::function<void(StratumConfig&)>> options;
    for (GShape shape : {GShape::Two, GShape::One})
      options.push_back([s, shape](StratumConfig& c) { c.g[s] = shape; });
    grow(options);
  }
  for (const auto& [sig, members] : classes) {
    std::vector<Structure> list(members.begin(), members.end());
    std::vector<std::function<void(StratumConfig&)>> options;
    for (unsigned mask = 0; mask < (1u << list.size()); ++mask) {
      if (std::popcount(mask) == 1) continue;  // canonicalized away
      std::set<Structure> subset;
      for (size_t i = 0; i < list.size(); ++i)
        if (mask & (1u << i)) subset.insert(list[i]);
      options.push_back([sig = sig, subset](StratumConfig& c) {
        c.P[sig] = subset;
      });
    }
    grow(options);
  }
  std::sort(configs.begin(), configs.end());
  return configs;
}

StratumConfig restrict_config(const StratumConfig& c, const Enrichment& sub,
                              const Enrichment& super) {
  if (!subset_of(sub, super))
    throw NotASubEnrichment("restriction target is not a sub-enrichment");
  StratumConfig out;
  for (const auto& s : triple_members(sub)) out.f[s] = c.f.at(s);
  for (const auto& s : doublet_members(sub)) out.g[s] = c.g.at(s);
  for (const auto& [sig, members] : signature_classes(sub)) {
    std::set<Structure> subset;
    auto it = c.P.find(sig);
    if (it != c.P.end())
      for (const auto& s : it->second)
        if (members.count(s)) subset.insert(s);
    out.P[sig] = canonical_subset(std::move(subset));
  }
  return out;
}

std::vector<StratumConfig> preimage_strata(const StratumConfig& c,
                                           const Enrichment& sub,
                                           const Enrichment& super) {
  std::vector<StratumConfig> out;
  for (const auto& cc : conf_space(super))
    if (restrict_config(cc, sub, super) == c) out.push_back(cc);
  return out;
}

StratumConfig general_stratum(const Enrichment& eta) {
  StratumConfig c;
  for (const auto& s : triple_members(eta)) c.f[s] = FShape::Three;
  for (const auto& s : doublet_members(eta)) c.g[s] = GShape::Two;
  for (const auto& [sig, members] : signature_classes(eta)) c.P[sig] = {};
  return c;
}

StratumConfig special_stratum(const Enrichment& eta) {
  StratumConfig c;
  for (const auto& s : triple_members(eta)) c.f[s] = FShape::Fat;
  for (const auto& s : doublet_members(eta)) c.g[s] = GShape::One;
  for (const auto& [sig, members] : signature_classes(eta))
    c.P[sig] = canonical_subset(members);
  return c;
}

}  // namespace hconf
