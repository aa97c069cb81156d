#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hconf/symmetry.hpp"

using namespace hconf;

TEST_CASE("group laws") {
  auto id = Permutation::identity(4);
  for (const auto& g : all_permutations(4)) {
    CHECK(compose(g, inverse(g)) == id);
    CHECK(compose(inverse(g), g) == id);
    CHECK(compose(g, id) == g);
  }
  CHECK(all_permutations(4).size() == 24);
  Permutation g{{2, 3, 1}};  // (123)
  Permutation h{{2, 1, 3}};  // (12)
  CHECK(compose(g, h).img == std::vector<int>{3, 2, 1});  // g after h
  CHECK(compose(h, g).img == std::vector<int>{1, 3, 2});
}

TEST_CASE("action relabels and re-canonicalizes") {
  Permutation swap12{{2, 1, 3}};
  CHECK(act(swap12, point(1)) == point(2));
  CHECK(act(swap12, doublet(1, 3)) == doublet(2, 3));
  CHECK(act(swap12, full_structure(3)) == full_structure(3));
  CHECK(act(swap12, double_doublet(1, 3)) == double_doublet(2, 3));
  CHECK(act(swap12, triple_doublet(3)) == triple_doublet(3));
  for (const auto& g : all_permutations(3))
    for (const auto& s : enumerate_structures(3, 2))
      CHECK(act(inverse(g), act(g, s)) == s);
}

TEST_CASE("orbits") {
  Enrichment e = ModelName::parse("R^1_123").to_enrichment(3);
  CHECK(orbit(e).size() == 3);
  CHECK(orbit(ModelName::parse("R_max").to_enrichment(3)).size() == 1);
  CHECK(orbit(ModelName::parse("R_123").to_enrichment(3)).size() == 1);
  // Stabilized by the transposition (12), so three conjugates.
  CHECK(orbit(ModelName::parse("R^{3,123}_{3,12,123}").to_enrichment(3))
            .size() == 3);
}

TEST_CASE("stabilizers and acting groups of the models") {
  const std::vector<std::string> expected{"S_1", "S_1", "S_2", "S_1",
                                          "S_1", "S_2", "S_1", "S_1",
                                          "S_1", "S_2", "S_3"};
  auto names = model_names(3);
  REQUIRE(names.size() == expected.size());
  for (size_t i = 0; i < names.size(); ++i) {
    Enrichment e = names[i].to_enrichment(3);
    CHECK(acting_group(e).label == expected[i]);
    // H fixes every structure individually, G the whole set; the acting
    // group is the quotient.
    auto G = stabilizer_G(e);
    auto H = pointwise_stabilizer_H(e);
    CHECK(G.elements.size() ==
          acting_group(e).elements.size() * H.elements.size());
    for (const auto& h : H.elements)
      for (const auto& s : e.structures) CHECK(act(h, s) == s);
  }
  Enrichment mx = ModelName::parse("R_max").to_enrichment(3);
  CHECK(stabilizer_G(mx).elements.size() == 6);
}

TEST_CASE("invariant substructures") {
  Enrichment mx = ModelName::parse("R_max").to_enrichment(3);
  auto G = stabilizer_G(mx);
  Enrichment fixed = invariant_substructures(mx, G);
  CHECK(set_equal(fixed,
                  mk_enrichment({full_structure(3), triple_doublet(3)}, 3)));
  // A non-subgroup of the stabilizer is rejected.
  Enrichment e = ModelName::parse("R^1_123").to_enrichment(3);
  GroupDescriptor full{all_permutations(3), "S_3"};
  CHECK_THROWS_AS(invariant_substructures(e, full),
                  NotASubgroupOfStabilizer);
}
