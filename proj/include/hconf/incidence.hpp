#pragma once

#include "hconf/enrichment.hpp"

namespace hconf {

// A way of reading sigma in Sigma_{q_r..q_1,p_l..p_1} and each target in
// Sigma_{n_i,p_l..p_1}, up to inserting 1s into signatures. Signatures are
// matched in stripped form (all 1 entries removed).
struct SignatureSplit {
  int r = 0;
  Signature q;          // (q_r,...,q_1)
  Signature p;          // (p_l,...,p_1), possibly empty
  std::vector<int> n;   // n_i per target (1 when the target is read whole)
};

std::vector<SignatureSplit> signature_splits(
    const Structure& sigma, const std::vector<Structure>& targets);

// The recursive incidence predicate: true iff some signature split makes
// sigma set-theoretically covered by the union of the targets' elements at
// the matching depth.
bool incidence(const Structure& sigma, const std::vector<Structure>& targets);

struct IncidenceRelation {
  Structure sigma;
  std::vector<Structure> targets;  // sorted, deduplicated
};

// All incident sub-tuples (sigma in eta, targets from eta minus sigma) of
// arity <= max_arity, deduplicated up to target-set equality.
std::vector<IncidenceRelation> incidence_closure(const Enrichment& eta,
                                                 int max_arity = 4);

}  // namespace hconf
