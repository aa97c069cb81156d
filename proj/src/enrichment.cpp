#include "hconf/enrichment.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace hconf {

int Enrichment::level() const {
  int lvl = 0;
  for (const auto& s : structures) lvl = std::max(lvl, s.level());
  return lvl;
}

bool Enrichment::contains(const Structure& s) const {
  return std::find(structures.begin(), structures.end(), s) !=
         structures.end();
}

Enrichment mk_enrichment(std::vector<Structure> structures, int n) {
  Enrichment e{n, std::move(structures)};
  if (!e.contains(full_structure(n)))
    throw MissingFullStructure("enrichment lacks the full structure");
  for (const auto& s : e.structures) {
    auto c = s.carrier();
    if (c.front() < 1 || c.back() > n)
      throw OutOfRange("structure not over {1..n}");
  }
  return e;
}

bool set_equal(const Enrichment& a, const Enrichment& b) {
  return a.n == b.n && a.as_set() == b.as_set();
}

bool subset_of(const Enrichment& a, const Enrichment& b) {
  if (a.n != b.n) return false;
  auto bs = b.as_set();
  for (const auto& s : a.structures)
    if (!bs.count(s)) return false;
  return true;
}

namespace {

std::string group_to_string(const std::vector<std::string>& tokens) {
  std::string joined;
  for (size_t i = 0; i < tokens.size(); ++i)
    joined += (i ? "," : "") + tokens[i];
  return tokens.size() > 1 ? "{" + joined + "}" : joined;
}

std::vector<std::string> parse_group(const std::string& s, size_t& pos) {
  std::vector<std::string> tokens;
  if (pos < s.size() && s[pos] == '{') {
    ++pos;
    std::string tok;
    while (pos < s.size() && s[pos] != '}') {
      if (s[pos] == ',') {
        if (tok.empty()) throw ParseError("empty token in " + s);
        tokens.push_back(tok);
        tok.clear();
      } else {
        tok += s[pos];
      }
      ++pos;
    }
    if (pos == s.size()) throw ParseError("unterminated brace in " + s);
    ++pos;
    if (tok.empty()) throw ParseError("empty token in " + s);
    tokens.push_back(tok);
  } else {
    std::string tok;
    while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos])))
      tok += s[pos++];
    if (tok.empty()) throw ParseError("expected index token in " + s);
    tokens.push_back(tok);
  }
  return tokens;
}

Structure super_structure(const std::string& token, int n) {
  if (n != 3) throw OutOfRange("superscript names need n = 3");
  if (token == "123") return triple_doublet(n);
  if (token.size() == 1 && token[0] >= '1' && token[0] <= '3')
    return double_doublet(token[0] - '0', n);
  throw ParseError("unknown superscript token " + token);
}

Structure sub_structure(const std::string& token, int n) {
  std::vector<int> elems;
  for (char c : token) {
    if (!isdigit(static_cast<unsigned char>(c)))
      throw ParseError("bad subscript token " + token);
    elems.push_back(c - '0');
  }
  Structure s = Structure::leaf(std::move(elems));
  auto carrier = s.carrier();
  if (carrier.front() < 1 || carrier.back() > n)
    throw OutOfRange("subscript token outside {1..n}: " + token);
  return s;
}

}  // namespace

std::string ModelName::to_string() const {
  if (is_max) return "R_max";
  std::string out = "R";
  if (!supers.empty()) out += "^" + group_to_string(supers);
  out += "_" + group_to_string(subs);
  return out;
}

ModelName ModelName::parse(const std::string& text) {
  std::string s = text;
  if (s == "max" || s == "R_max") return ModelName{true, {}, {}};
  size_t pos = 0;
  if (pos < s.size() && s[pos] == 'R') ++pos;
  ModelName name;
  if (pos < s.size() && s[pos] == '^') {
    ++pos;
    name.supers = parse_group(s, pos);
  }
  if (pos >= s.size() || s[pos] != '_')
    throw ParseError("expected subscript in " + text);
  ++pos;
  name.subs = parse_group(s, pos);
  if (pos != s.size()) throw ParseError("trailing characters in " + text);
  return name;
}

Enrichment ModelName::to_enrichment(int n) const {
  std::vector<Structure> structures;
  if (is_max) {
    if (n != 3) throw OutOfRange("R_max is a name over {1,2,3}");
    structures = enumerate_structures(3, 2);
  } else {
    for (const auto& tok : subs) structures.push_back(sub_structure(tok, n));
    for (const auto& tok : supers) structures.push_back(super_structure(tok, n));
    std::sort(structures.begin(), structures.end());
  }
  return mk_enrichment(std::move(structures), n);
}

std::vector<ModelName> model_names(int n) {
  auto mk = [](std::vector<std::string> sup, std::vector<std::string> sub) {
    return ModelName{false, std::move(sup), std::move(sub)};
  };
  if (n == 2) return {mk({}, {"12"}), mk({}, {"1", "12"})};
  if (n != 3) throw OutOfRange("named models exist for n = 2 and n = 3");
  return {
      mk({}, {"123"}),
      mk({}, {"1", "123"}),
      mk({}, {"1", "2", "3", "12", "123"}),
      mk({}, {"3", "12", "123"}),
      mk({"1"}, {"123"}),
      mk({"1"}, {"1", "2", "3", "12", "13", "123"}),
      mk({"123"}, {"123"}),
      mk({"123"}, {"1", "123"}),
      mk({"3", "123"}, {"3", "12", "123"}),
      mk({"3", "123"}, {"1", "2", "3", "12", "123"}),
      ModelName{true, {}, {}},
  };
}

std::optional<ModelName> model_name(const Enrichment& e) {
  if (e.n != 2 && e.n != 3) return std::nullopt;
  auto key = e.as_set();
  for (const auto& name : model_names(e.n))
    if (name.to_enrichment(e.n).as_set() == key) return name;
  return std::nullopt;
}

}  // namespace hconf
