#include "hconf/jsonio.hpp"

namespace hconf {

nlohmann::json structure_to_json(const Structure& s) {
  nlohmann::json arr = nlohmann::json::array();
  if (s.is_leaf()) {
    for (int i : s.ints()) arr.push_back(i);
  } else {
    for (const auto& c : s.children()) arr.push_back(structure_to_json(c));
  }
  return arr;
}

Structure structure_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty())
    throw EmptySet("structure literal must be a nonempty array");
  if (j.front().is_number_integer()) {
    std::vector<int> elems;
    for (const auto& item : j) {
      if (!item.is_number_integer())
        throw MixedSignature("mixed integers and arrays in one set");
      elems.push_back(item.get<int>());
    }
    return Structure::leaf(std::move(elems));
  }
  std::vector<Structure> kids;
  for (const auto& item : j) {
    if (item.is_number_integer())
      throw MixedSignature("mixed integers and arrays in one set");
    kids.push_back(structure_from_json(item));
  }
  return Structure::node(std::move(kids));
}

Structure mk_structure(const nlohmann::json& literal, int n) {
  Structure s = structure_from_json(literal);
  auto carrier = s.carrier();
  if (carrier.front() < 1 || carrier.back() > n)
    throw OutOfRange("structure not over {1..n}");
  return s;
}

nlohmann::json enrichment_to_json(const Enrichment& e) {
  nlohmann::json j;
  j["n"] = e.n;
  j["structures"] = nlohmann::json::array();
  for (const auto& s : e.structures)
    j["structures"].push_back(structure_to_json(s));
  return j;
}

Enrichment enrichment_from_json(const nlohmann::json& j) {
  if (!j.contains("n") || !j.contains("structures"))
    throw ParseError("enrichment JSON needs \"n\" and \"structures\"");
  int n = j["n"].get<int>();
  std::vector<Structure> structures;
  for (const auto& item : j["structures"])
    structures.push_back(structure_from_json(item));
  return mk_enrichment(std::move(structures), n);
}

}  // namespace hconf
