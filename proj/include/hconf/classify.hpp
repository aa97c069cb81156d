#pragma once

#include <map>
#include <optional>

#include "hconf/symmetry.hpp"

namespace hconf {

enum class RuleTag {
  Residual,         // sigma_1 = sigma_2 union {sigma}: add the residual sigma
  PairToDouble,     // two doublets through a common point: add their pair
  DoubleFromTriple, // doublet + triple-of-doublets: add the complementary pair
  TripleFromDouble, // doublet + complementary pair of doublets: add the triple
  Level3Triple,     // top Sigma_{3,2..2} structure present: add the next one
  Level3Residual,   // level >= 3 instance of [f] = [e] - [g]
};

std::string to_string(RuleTag tag);

struct RuleApplication {
  RuleTag tag;
  Structure added;
  std::vector<Structure> witnesses;
};

// Every structure addable to eta by one rule instance (rules closed under
// S_n conjugation); additions are capped at max(2, level(eta)) so the
// level-raising rule never leaves the input's level band.
std::vector<RuleApplication> extensions(const Enrichment& eta);

struct Saturation {
  Enrichment closure;
  std::vector<RuleApplication> trace;
};

// Least fixpoint of the rules. level(eta) must be <= level_cap.
Saturation saturate(const Enrichment& eta, int level_cap = 3);

enum class DetectorTag {
  ExactPointsTriple,           // conjugate of {s1,s2,s123} or {s1,s2,s3,s123}
  UniqueDoubleDoubleWithPoint, // one pair-of-doublets, a point, no doublet
  TwoDoubleDoublesNoDoublet,   // >= 2 pairs-of-doublets, no doublet
  TripleDoubletWithPoints,     // conjugate of the two bad sigma^123 lists
  LevelThreePattern,           // level >= 3 over an inadmissible low part
};

std::string to_string(DetectorTag tag);

std::optional<DetectorTag> detect_nonadmissible(const Enrichment& eta);

enum class Verdict { Admissible, NonAdmissible };

struct ClassificationReport {
  Enrichment input;
  Verdict status = Verdict::Admissible;
  // Admissible fields:
  ModelName model;
  Permutation g;        // saturate(act(g, input)) set-equals saturate(model)
  Enrichment closure;   // saturation of the input itself
  std::vector<RuleApplication> trace;
  bool reduced = false; // level >= 3 verdict obtained through reduction
  // NonAdmissible field:
  std::optional<DetectorTag> detector;
};

ClassificationReport classify(const Enrichment& eta);

struct ClassificationSummary {
  int n = 0;
  int total = 0;
  int admissible = 0;
  int non_admissible = 0;
  std::map<std::string, int> per_model;     // model name -> count
  std::map<std::string, int> per_detector;  // detector tag -> count
  std::map<std::string, std::string> key_to_model;  // iso_key -> model name
};

ClassificationSummary classify_all(int n, int max_level = 2);

// Canonical byte string: minimum over g in S_n of the encoding of
// saturate(act(g, eta)). Defined for admissible enrichments.
std::string iso_key(const Enrichment& eta);

struct DiagramEdge {
  ModelName from, to;
};

struct ForgetfulDiagram {
  std::vector<ModelName> nodes;
  std::vector<DiagramEdge> edges;  // transitively reduced
  std::string to_dot() const;
};

ForgetfulDiagram forgetful_diagram(const std::vector<ModelName>& models,
                                   int n = 3);

struct QuotientRow {
  ModelName model;
  std::string group_label;
  ModelName quotient;
  bool partial = false;    // the extra R_max / S_2 row
  bool repaired = false;   // invariant set fixed by dropping point structures
  bool group_verified = false;
  bool invariant_verified = false;
};

// The quotient table (11 rows plus the partial R_max/S_2 row), each row
// machine-verified against acting_group and invariant_substructures.
std::vector<QuotientRow> quotient_table();

}  // namespace hconf
