#pragma once

#include <map>

#include "hconf/enrichment.hpp"

namespace hconf {

// Shape of a triple-type structure: three distinct points, a doublet plus a
// point, a curvilinear triple, or a two-fat point.
enum class FShape { Three, Two, Curvilinear, Fat };
// Shape of a doublet-type structure: two points or one.
enum class GShape { Two, One };

std::string to_string(FShape s);
std::string to_string(GShape s);

// An element of Conf(eta): shape labels on the triple-type members E_3 and
// the doublet-type members E_2, plus a coincidence subset per occupied
// signature class (canonicalized: subsets of size <= 1 become empty).
struct StratumConfig {
  std::map<Structure, FShape> f;
  std::map<Structure, GShape> g;
  std::map<Signature, std::set<Structure>> P;

  auto operator<=>(const StratumConfig& o) const = default;
};

// Members of eta with stripped signature (3,2,...,2) resp. (2,...,2).
std::vector<Structure> triple_members(const Enrichment& eta);
std::vector<Structure> doublet_members(const Enrichment& eta);
// Members grouped by signature (the classes indexing the P components).
std::map<Signature, std::set<Structure>> signature_classes(
    const Enrichment& eta);

std::vector<StratumConfig> conf_space(const Enrichment& eta);

StratumConfig restrict_config(const StratumConfig& c, const Enrichment& sub,
                              const Enrichment& super);

std::vector<StratumConfig> preimage_strata(const StratumConfig& c,
                                           const Enrichment& sub,
                                           const Enrichment& super);

StratumConfig general_stratum(const Enrichment& eta);
StratumConfig special_stratum(const Enrichment& eta);

}  // namespace hconf
