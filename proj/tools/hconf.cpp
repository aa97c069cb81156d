#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <random>

#include "hconf/charts.hpp"
#include "hconf/classify.hpp"
#include "hconf/incidence.hpp"
#include "hconf/jsonio.hpp"
#include "hconf/strata.hpp"

using nlohmann::json;
using namespace hconf;

namespace {

std::string output_path;
std::string format = "text";

void emit(const std::string& text) {
  if (output_path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(output_path);
  if (!out) throw ParseError("cannot open output file " + output_path);
  out << text << "\n";
}

void emit_json(const json& j) { emit(j.dump(2)); }

Enrichment parse_enrichment_arg(const std::string& text, int n) {
  if (!text.empty() && (text[0] == '{' || text[0] == '[')) {
    json j = json::parse(text);
    if (j.is_object() && j.contains("structures"))
      return enrichment_from_json(j);
    // bare array of structure literals
    std::vector<Structure> structures;
    for (const auto& lit : j) structures.push_back(mk_structure(lit, n));
    return mk_enrichment(std::move(structures), n);
  }
  std::string name = text;
  if (name.rfind('R', 0) != 0) name = "R_" + name;
  return ModelName::parse(name).to_enrichment(n);
}

json structure_entry(const Structure& s) {
  return json{{"literal", structure_to_json(s)}, {"rendered", s.to_string()}};
}

json config_to_json(const StratumConfig& c) {
  json f = json::array(), g = json::array(), P = json::array();
  for (const auto& [s, shape] : c.f)
    f.push_back({structure_to_json(s), to_string(shape)});
  for (const auto& [s, shape] : c.g)
    g.push_back({structure_to_json(s), to_string(shape)});
  for (const auto& [sig, subset] : c.P) {
    json members = json::array();
    for (const auto& s : subset) members.push_back(structure_to_json(s));
    P.push_back({json(sig), members});
  }
  return json{{"f", f}, {"g", g}, {"P", P}};
}

StratumConfig config_from_json(const json& j, int n) {
  StratumConfig c;
  for (const auto& entry : j.at("f")) {
    Structure s = mk_structure(entry.at(0), n);
    std::string shape = entry.at(1).get<std::string>();
    c.f[s] = shape == "3"   ? FShape::Three
             : shape == "2" ? FShape::Two
             : shape == "c" ? FShape::Curvilinear
                            : FShape::Fat;
  }
  for (const auto& entry : j.at("g")) {
    Structure s = mk_structure(entry.at(0), n);
    c.g[s] = entry.at(1).get<std::string>() == "2" ? GShape::Two : GShape::One;
  }
  for (const auto& entry : j.at("P")) {
    Signature sig = entry.at(0).get<Signature>();
    std::set<Structure> subset;
    for (const auto& lit : entry.at(1)) subset.insert(mk_structure(lit, n));
    c.P[sig] = subset;
  }
  return c;
}

std::string config_text(const StratumConfig& c) {
  std::string out;
  for (const auto& [s, shape] : c.f)
    out += "f(" + s.to_string() + ")=" + to_string(shape) + " ";
  for (const auto& [s, shape] : c.g)
    out += "g(" + s.to_string() + ")=" + to_string(shape) + " ";
  for (const auto& [sig, subset] : c.P) {
    out += "P[";
    for (size_t i = 0; i < sig.size(); ++i)
      out += (i ? "," : "") + std::to_string(sig[i]);
    out += "]={";
    bool first = true;
    for (const auto& s : subset) {
      if (!first) out += ",";
      out += s.to_string();
      first = false;
    }
    out += "} ";
  }
  if (!out.empty()) out.pop_back();
  return out;
}

json report_to_json(const ClassificationReport& r) {
  json j;
  j["input"] = enrichment_to_json(r.input);
  j["status"] =
      r.status == Verdict::Admissible ? "admissible" : "non-admissible";
  if (r.status == Verdict::Admissible) {
    j["model"] = r.model.to_string();
    j["permutation"] = r.g.img;
    json closure = json::array();
    for (const auto& s : r.closure.as_set()) closure.push_back(s.to_string());
    j["closure"] = closure;
    j["reduced"] = r.reduced;
    json trace = json::array();
    for (const auto& step : r.trace) {
      json witnesses = json::array();
      for (const auto& w : step.witnesses) witnesses.push_back(w.to_string());
      trace.push_back({{"rule", to_string(step.tag)},
                       {"added", step.added.to_string()},
                       {"witnesses", witnesses}});
    }
    j["trace"] = trace;
  } else {
    j["detector"] = to_string(*r.detector);
  }
  return j;
}

json chart_report_json(const ChartReport& r, unsigned seed) {
  json j;
  j["target"] = r.target;
  j["dim"] = r.dim;
  j["mode"] = r.mode;
  j["paper_contained"] = r.paper_generators_contained;
  j["extra_absorbed"] = r.extra_generators_absorbed;
  j["ideal_equal"] = r.ideal_equal;
  j["rank"] = r.jacobian_rank;
  j["num_variables"] = r.num_variables;
  j["dimension"] = r.smooth_dimension;
  j["expected_dimension"] = r.expected_dimension;
  j["free_variable_check"] = r.free_variable_check;
  j["free_variables"] = r.free_variables;
  j["computed_generators"] = r.computed_generators;
  j["reference_generators"] = r.reference_generators;
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
  json probes = json::array();
  for (int k = 0; k < 10; ++k) {
    std::vector<Rational> params;
    for (int i = 0; i < 6; ++i)
      params.push_back(Rational(num(rng)) / den(rng));
    probes.push_back(colength_probe(params));
  }
  j["colength_probes"] = probes;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for nested-structure enrichments, their "
               "classification, and incidence-ideal verification"};
  app.require_subcommand(1);

  int n = 3, max_level = 2, dim = 2;
  unsigned seed = 12345;
  std::string enrichment_arg, model_arg, sigma_arg, targets_arg;
  std::string sub_arg, super_arg, config_arg;
  std::string target_arg, mode_arg = "substituted";
  std::string vars_arg, ideal_arg, by_arg;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "text, json, or dot")
        ->check(CLI::IsMember({"text", "json", "dot"}));
    cmd->add_option("--output", output_path, "write to a file instead");
    return cmd;
  };

  auto* cmd_structures = add_common(app.add_subcommand(
      "structures", "enumerate canonical structures over {1..n}"));
  cmd_structures->add_option("--n", n);
  cmd_structures->add_option("--max-level", max_level);

  auto* cmd_incidence = add_common(app.add_subcommand(
      "incidence", "evaluate the incidence predicate"));
  cmd_incidence->add_option("--n", n);
  cmd_incidence->add_option("--sigma", sigma_arg, "structure literal (JSON)")
      ->required();
  cmd_incidence
      ->add_option("--targets", targets_arg, "array of structure literals")
      ->required();

  auto* cmd_orbit = add_common(
      app.add_subcommand("orbit", "S_n orbit of an enrichment"));
  cmd_orbit->add_option("--n", n);
  cmd_orbit->add_option("enrichment", enrichment_arg)->required();

  auto* cmd_groups = add_common(app.add_subcommand(
      "groups", "stabilizer, pointwise stabilizer, and acting group"));
  cmd_groups->add_option("--n", n);
  cmd_groups->add_option("--model", model_arg, "model name, e.g. max");
  cmd_groups->add_option("enrichment", enrichment_arg);

  auto* cmd_classify = add_common(
      app.add_subcommand("classify", "classify one enrichment"));
  cmd_classify->add_option("--n", n);
  cmd_classify->add_option("enrichment", enrichment_arg)->required();

  auto* cmd_classify_all = add_common(app.add_subcommand(
      "classify-all", "classify every enrichment up to the level cap"));
  cmd_classify_all->add_option("--n", n);
  cmd_classify_all->add_option("--max-level", max_level);

  auto* cmd_quotients = add_common(app.add_subcommand(
      "quotients", "machine-verified model quotient table"));

  auto* cmd_strata = add_common(app.add_subcommand(
      "strata", "stratification index set Conf of an enrichment"));
  cmd_strata->add_option("--n", n);
  cmd_strata->add_option("enrichment", enrichment_arg)->required();

  auto* cmd_preimage = add_common(app.add_subcommand(
      "preimage", "fiber of a stratum under a forgetful restriction"));
  cmd_preimage->add_option("--n", n);
  cmd_preimage->add_option("--sub", sub_arg)->required();
  cmd_preimage->add_option("--super", super_arg)->required();
  cmd_preimage->add_option("--config", config_arg,
                           "stratum of the sub-enrichment (JSON); default "
                           "general stratum");

  auto* cmd_diagram = add_common(app.add_subcommand(
      "diagram", "forgetful-morphism diagram of the models"));
  cmd_diagram->add_option("--n", n);

  auto* cmd_verify = add_common(app.add_subcommand(
      "verify-charts", "verify the three incidence-ideal charts"));
  cmd_verify->add_option("--target", target_arg,
                         "R_12_123, R1_123, or R123_123; default all");
  cmd_verify->add_option("--dim", dim);
  cmd_verify->add_option("--mode", mode_arg)
      ->check(CLI::IsMember({"substituted", "symbolic-w"}));
  cmd_verify->add_option("--seed", seed, "seed for the colength probes");

  auto* cmd_residual = add_common(app.add_subcommand(
      "residual", "colon ideal (I : J) over the rationals"));
  cmd_residual->add_option("--vars", vars_arg, "comma-separated variables")
      ->required();
  cmd_residual->add_option("--ideal", ideal_arg, "comma-separated generators")
      ->required();
  cmd_residual->add_option("--by", by_arg, "comma-separated generators")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cmd_structures->parsed()) {
      auto list = enumerate_structures(n, max_level);
      if (format == "json") {
        json structures = json::array();
        for (const auto& s : list) structures.push_back(structure_entry(s));
        emit_json({{"n", n},
                   {"max_level", max_level},
                   {"count", list.size()},
                   {"structures", structures}});
      } else {
        std::string out;
        for (const auto& s : list) out += s.to_string() + "\n";
        out += "count: " + std::to_string(list.size());
        emit(out);
      }
    } else if (cmd_incidence->parsed()) {
      Structure sigma = mk_structure(json::parse(sigma_arg), n);
      std::vector<Structure> targets;
      for (const auto& lit : json::parse(targets_arg))
        targets.push_back(mk_structure(lit, n));
      bool value = incidence(sigma, targets);
      if (format == "json") {
        json t = json::array();
        for (const auto& s : targets) t.push_back(s.to_string());
        emit_json({{"sigma", sigma.to_string()},
                   {"targets", t},
                   {"incidence", value}});
      } else {
        emit(value ? "true" : "false");
      }
    } else if (cmd_orbit->parsed()) {
      Enrichment e = parse_enrichment_arg(enrichment_arg, n);
      auto members = orbit(e);
      if (format == "json") {
        json list = json::array();
        for (const auto& m : members) list.push_back(enrichment_to_json(m));
        emit_json({{"size", members.size()}, {"orbit", list}});
      } else {
        std::string out;
        for (const auto& m : members) {
          for (const auto& s : m.structures) out += s.to_string() + " ";
          out += "\n";
        }
        out += "size: " + std::to_string(members.size());
        emit(out);
      }
    } else if (cmd_groups->parsed()) {
      if (model_arg.empty() == enrichment_arg.empty())
        throw ParseError("give exactly one of --model or an enrichment");
      Enrichment e = parse_enrichment_arg(
          model_arg.empty() ? enrichment_arg : model_arg, n);
      auto G = stabilizer_G(e);
      auto H = pointwise_stabilizer_H(e);
      auto A = acting_group(e);
      if (format == "json") {
        emit_json({{"G", G.label},
                   {"G_order", G.elements.size()},
                   {"H", H.label},
                   {"H_order", H.elements.size()},
                   {"acting", A.label}});
      } else {
        emit("G = " + G.label + ", H = " + H.label + ", acting = " + A.label);
      }
    } else if (cmd_classify->parsed()) {
      Enrichment e = parse_enrichment_arg(enrichment_arg, n);
      auto r = classify(e);
      if (format == "json") {
        emit_json(report_to_json(r));
      } else if (r.status == Verdict::Admissible) {
        emit("admissible: " + r.model.to_string() +
             (r.reduced ? " (via level reduction)" : ""));
      } else {
        emit("non-admissible: " + to_string(*r.detector));
      }
    } else if (cmd_classify_all->parsed()) {
      auto s = classify_all(n, max_level);
      if (format == "json") {
        emit_json({{"n", s.n},
                   {"total", s.total},
                   {"admissible", s.admissible},
                   {"non_admissible", s.non_admissible},
                   {"classes", s.key_to_model.size()},
                   {"per_model", s.per_model},
                   {"per_detector", s.per_detector}});
      } else {
        std::string out = "total: " + std::to_string(s.total) +
                          ", admissible: " + std::to_string(s.admissible) +
                          ", classes: " +
                          std::to_string(s.key_to_model.size()) + "\n";
        for (const auto& [name, count] : s.per_model)
          out += "  " + name + ": " + std::to_string(count) + "\n";
        for (const auto& [name, count] : s.per_detector)
          out += "  [" + name + "]: " + std::to_string(count) + "\n";
        out.pop_back();
        emit(out);
      }
    } else if (cmd_quotients->parsed()) {
      auto rows = quotient_table();
      if (format == "json") {
        json list = json::array();
        for (const auto& r : rows)
          list.push_back({{"model", r.model.to_string()},
                          {"group", r.group_label},
                          {"quotient", r.quotient.to_string()},
                          {"partial", r.partial},
                          {"repaired", r.repaired},
                          {"group_verified", r.group_verified},
                          {"invariant_verified", r.invariant_verified}});
        emit_json({{"rows", list}});
      } else {
        std::string out;
        for (const auto& r : rows) {
          out += r.model.to_string() + " / " + r.group_label + " = " +
                 r.quotient.to_string();
          if (r.partial) out += "  [partial]";
          if (r.repaired) out += "  [repaired]";
          out += "\n";
        }
        out.pop_back();
        emit(out);
      }
    } else if (cmd_strata->parsed()) {
      Enrichment e = parse_enrichment_arg(enrichment_arg, n);
      auto configs = conf_space(e);
      if (format == "json") {
        json list = json::array();
        for (const auto& c : configs) list.push_back(config_to_json(c));
        emit_json({{"count", configs.size()}, {"strata", list}});
      } else {
        std::string out;
        for (const auto& c : configs) out += config_text(c) + "\n";
        out += "count: " + std::to_string(configs.size());
        emit(out);
      }
    } else if (cmd_preimage->parsed()) {
      Enrichment sub = parse_enrichment_arg(sub_arg, n);
      Enrichment super = parse_enrichment_arg(super_arg, n);
      StratumConfig c = config_arg.empty()
                            ? general_stratum(sub)
                            : config_from_json(json::parse(config_arg), n);
      auto fibers = preimage_strata(c, sub, super);
      if (format == "json") {
        json list = json::array();
        for (const auto& f : fibers) list.push_back(config_to_json(f));
        emit_json({{"config", config_to_json(c)},
                   {"count", fibers.size()},
                   {"preimage", list}});
      } else {
        std::string out;
        for (const auto& f : fibers) out += config_text(f) + "\n";
        out += "count: " + std::to_string(fibers.size());
        emit(out);
      }
    } else if (cmd_diagram->parsed()) {
      auto diagram = forgetful_diagram(model_names(n), n);
      if (format == "dot") {
        emit(diagram.to_dot());
      } else if (format == "json") {
        json nodes = json::array(), edges = json::array();
        for (const auto& m : diagram.nodes) nodes.push_back(m.to_string());
        for (const auto& e : diagram.edges)
          edges.push_back({e.from.to_string(), e.to.to_string()});
        emit_json({{"nodes", nodes}, {"edges", edges}});
      } else {
        std::string out;
        for (const auto& e : diagram.edges)
          out += e.from.to_string() + " -> " + e.to.to_string() + "\n";
        out.pop_back();
        emit(out);
      }
    } else if (cmd_verify->parsed()) {
      std::vector<ChartTarget> targets;
      if (target_arg.empty())
        targets = {ChartTarget::R_12_123, ChartTarget::R1_123,
                   ChartTarget::R123_123};
      else
        targets = {parse_chart_target(target_arg)};
      WMode mode = parse_wmode(mode_arg);
      json reports = json::array();
      std::string text;
      for (ChartTarget t : targets) {
        ChartReport r = verify_chart(t, dim, mode);
        reports.push_back(chart_report_json(r, seed));
        text += r.target + ": rank " + std::to_string(r.jacobian_rank) +
                "/" + std::to_string(r.num_variables) + ", dimension " +
                std::to_string(r.smooth_dimension) +
                (r.ideal_equal ? ", ideal verified" : ", MISMATCH") + "\n";
        if (!r.ideal_equal)
          throw VerificationMismatch("chart " + r.target);
      }
      if (format == "json") {
        emit_json(reports.size() == 1 ? reports[0]
                                      : json{{"reports", reports}});
      } else {
        text.pop_back();
        emit(text);
      }
    } else if (cmd_residual->parsed()) {
      VarTable table;
      std::string current;
      for (char ch : vars_arg + ",") {
        if (ch == ',') {
          if (!current.empty()) table.add(current);
          current.clear();
        } else if (!isspace(static_cast<unsigned char>(ch))) {
          current += ch;
        }
      }
      auto parse_list = [&table](const std::string& text) {
        Ideal ideal;
        size_t start = 0;
        while (start <= text.size()) {
          size_t comma = text.find(',', start);
          if (comma == std::string::npos) comma = text.size();
          std::string piece = text.substr(start, comma - start);
          if (piece.find_first_not_of(" \t") != std::string::npos)
            ideal.gens.push_back(Polynomial::parse(&table, piece));
          start = comma + 1;
        }
        return ideal;
      };
      Ideal I = parse_list(ideal_arg), J = parse_list(by_arg);
      MonomialOrder order = MonomialOrder::grlex();
      Ideal quotient = colon_ideal(I, J, order);
      auto gb = buchberger(quotient.gens, order);
      if (format == "json") {
        json gens = json::array();
        for (const auto& g : gb) gens.push_back(g.to_string());
        emit_json({{"generators", gens}});
      } else {
        std::string out;
        for (const auto& g : gb) out += g.to_string() + "\n";
        if (out.empty()) out = "0\n";
        out.pop_back();
        emit(out);
      }
    }
  } catch (const DomainError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "ParseError: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
