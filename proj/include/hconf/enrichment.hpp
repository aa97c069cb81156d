#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hconf/structure.hpp"

namespace hconf {

// A sequence of structures over {1..n} containing the full structure.
// Sequence order is kept; set_equal compares modulo order and repetition.
struct Enrichment {
  int n = 0;
  std::vector<Structure> structures;

  std::set<Structure> as_set() const {
    return {structures.begin(), structures.end()};
  }
  int level() const;
  bool contains(const Structure& s) const;
};

Enrichment mk_enrichment(std::vector<Structure> structures, int n);

bool set_equal(const Enrichment& a, const Enrichment& b);
bool subset_of(const Enrichment& a, const Enrichment& b);

// R-notation name: superscripts, subscripts, or the token max.
// Printed as e.g. "R_123", "R^1_123", "R^{3,123}_{3,12,123}", "R_max".
struct ModelName {
  bool is_max = false;
  std::vector<std::string> supers;
  std::vector<std::string> subs;

  std::string to_string() const;
  static ModelName parse(const std::string& text);
  Enrichment to_enrichment(int n) const;

  bool operator==(const ModelName& o) const = default;
};

// The canonical model enrichments of the classification, in the paper's
// order for n = 3; for n = 2 the two models R_12 and R_{1,12}.
std::vector<ModelName> model_names(int n);

// Exact set-equality lookup against the named model enrichments.
std::optional<ModelName> model_name(const Enrichment& e);

}  // namespace hconf
