#pragma once

#include <chrono>
#include <cstddef>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "particat.hpp"

namespace particat::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* schema = "particat/1";

enum ExitCode : int { ok = 0, parse_error = 2, bounds_exceeded = 3, undecidable = 4 };

struct Command {
  std::string name;
  std::string category = "nc";
  std::optional<unsigned> N;
  std::optional<std::size_t> max_points;
  std::string left;
  std::string right;
  std::string partition;
  std::string suite = "all";
  std::optional<std::size_t> power;
  std::size_t max_label = 3;
  Limits limits;
  bool timing = false;
};

struct Outcome {
  int exit_code = ok;
  Json document;
  std::vector<std::string> warnings;
};

// Size caps from a JSON config file; keys mirror the Limits fields.
inline std::vector<std::string> apply_config(const std::string& path, Limits& limits) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config file '" + path + "'", 0);
  Json cfg;
  try {
    cfg = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("config: ") + e.what(), e.byte);
  }
  std::vector<std::string> warnings;
  const Limits defaults;
  auto field = [&](const char* key, std::size_t& slot, std::size_t base) {
    if (!cfg.contains(key)) return;
    slot = cfg.at(key).get<std::size_t>();
    if (slot > base)
      warnings.push_back(std::string("config raises ") + key + " above its default of " + std::to_string(base));
  };
  field("max_enumeration_points", limits.max_enumeration_points, defaults.max_enumeration_points);
  field("max_projective_arity", limits.max_projective_arity, defaults.max_projective_arity);
  field("max_closure_points", limits.max_closure_points, defaults.max_closure_points);
  field("max_symmetric_degree", limits.max_symmetric_degree, defaults.max_symmetric_degree);
  field("max_matrix_rows", limits.max_matrix_rows, defaults.max_matrix_rows);
  field("max_rational_entries", limits.max_rational_entries, defaults.max_rational_entries);
  for (const auto& [key, value] : cfg.items()) {
    static const std::vector<std::string> known = {
        "max_enumeration_points", "max_projective_arity", "max_closure_points",
        "max_symmetric_degree", "max_matrix_rows", "max_rational_entries"};
    if (std::find(known.begin(), known.end(), key) == known.end())
      throw ParseError("config: unknown key '" + key + "'", 0);
  }
  return warnings;
}

inline CategorySpec resolve_category(const Command& cmd) {
  if (cmd.category.rfind("gen:", 0) == 0) {
    const auto gens = read_partition_file(cmd.category.substr(4));
    return CategorySpec::generated(gens, cmd.max_points.value_or(8), cmd.limits);
  }
  if (auto id = builtin_from_name(cmd.category)) return CategorySpec::builtin(*id);
  throw ParseError("unknown category '" + cmd.category + "'", 0);
}

inline bool looks_like_partition(const std::string& s) { return s.find(':') != std::string::npos; }

inline Json permutation_json(const Permutation& s) {
  Json a = Json::array();
  for (auto x : s.images()) a.push_back(x + 1);
  return a;
}

inline Json report_json(const CheckReport& r) {
  Json j;
  j["passed"] = r.passed();
  j["checks"] = r.checks;
  j["failures"] = r.failures;
  return j;
}

namespace detail {

inline Json fuse(const Command& cmd, const CategorySpec& C, std::size_t& checks) {
  const auto kind = label_kind(C);
  Json result;
  if (looks_like_partition(cmd.left) || looks_like_partition(cmd.right) || !kind) {
    const Partition p = parse_partition(cmd.left), q = parse_partition(cmd.right);
    const auto r = fusion(C, p, q);
    Json parts = Json::array();
    for (const auto& e : r.entries) {
      Json x;
      x["partition"] = e.partition.text();
      x["t"] = e.t;
      if (kind) x["label"] = to_string(label_of(*kind, e.partition));
      parts.push_back(x);
    }
    result["result"] = Json::array();
    for (const auto& e : r.entries)
      result["result"].push_back(kind ? to_string(label_of(*kind, e.partition)) : e.partition.text());
    result["partitions"] = parts;
    checks = r.entries.size();
    return result;
  }
  const FusionLabel a = parse_label(*kind, cmd.left), b = parse_label(*kind, cmd.right);
  const auto formula = labelled_fusion(*kind, a, b);
  const Partition p = canonical_representative(*kind, a), q = canonical_representative(*kind, b);
  const auto r = fusion(C, p, q);
  Json labels = Json::array();
  for (const auto& l : formula) labels.push_back(to_string(l));
  Json parts = Json::array();
  std::vector<FusionLabel> observed;
  for (const auto& e : r.entries) {
    observed.push_back(label_of(*kind, e.partition));
    Json x;
    x["partition"] = e.partition.text();
    x["t"] = e.t;
    x["label"] = to_string(observed.back());
    parts.push_back(x);
  }
  auto sorted_formula = formula;
  std::sort(sorted_formula.begin(), sorted_formula.end());
  std::sort(observed.begin(), observed.end());
  result["result"] = labels;
  result["representatives"] = {p.text(), q.text()};
  result["partitions"] = parts;
  result["agrees"] = sorted_formula == observed;
  checks = 1;
  return result;
}

inline Json decompose(const Command& cmd, const CategorySpec& C, std::size_t& checks) {
  if (!cmd.power) throw ParseError("decompose needs --power", 0);
  const auto classes = decompose_power(C, *cmd.power, cmd.limits);
  std::optional<ClassDecomposition> ranks;
  if (cmd.N) ranks = class_projection(C, *cmd.power, *cmd.N, cmd.limits);
  Json list = Json::array();
  for (std::size_t i = 0; i < classes.size(); ++i) {
    Json x;
    x["representative"] = classes[i].representative.text();
    x["t"] = classes[i].t;
    x["label"] = to_string(classes[i].label);
    x["class_size"] = classes[i].size;
    if (ranks) {
      const auto& c = ranks->classes.at(i);
      x["rank_class"] = c.rank_class;
      x["rank_p"] = c.rank_p;
      x["multiplicity"] = c.multiplicity;
    }
    list.push_back(x);
  }
  Json result;
  result["result"] = list;
  if (ranks) {
    result["total_rank"] = ranks->total_rank;
    result["orthogonal"] = ranks->orthogonal;
  }
  checks = classes.size();
  return result;
}

inline Json verify(const Command& cmd, std::size_t& checks) {
  const std::size_t mp = cmd.max_points.value_or(6);
  const unsigned N = cmd.N.value_or(2);
  CheckReport total;
  Json suites;
  auto run = [&](const std::string& name, auto&& fn) {
    if (cmd.suite != "all" && cmd.suite != name) return;
    const CheckReport r = fn();
    suites[name] = report_json(r);
    total.merge(r);
  };
  run("functor", [&] { return functor_suite(mp, N); });
  run("structure", [&] { return structure_suite(mp); });
  run("categories", [&] { return category_suite(mp); });
  run("fusion", [&] { return fusion_suite(3); });
  if (suites.is_null()) throw ParseError("unknown suite '" + cmd.suite + "'", 0);
  checks = total.checks;
  Json result;
  result["result"] = report_json(total);
  result["suites"] = suites;
  return result;
}

inline Json table(const Command& cmd, const CategorySpec& C, std::size_t& checks) {
  const auto kind = label_kind(C);
  if (!kind) throw PreconditionError("table needs one of nc, nc2, ncb, nceven, ucol");
  std::vector<FusionLabel> labels;
  if (*kind == LabelKind::H || *kind == LabelKind::U) {
    const std::string alphabet = *kind == LabelKind::H ? "01" : "wb";
    std::vector<std::string> words{""};
    for (std::size_t i = 0; i < words.size(); ++i)
      if (words[i].size() < cmd.max_label)
        for (char c : alphabet) words.push_back(words[i] + c);
    for (auto& w : words) labels.push_back(*kind == LabelKind::H ? FusionLabel{Z2Word{w}} : FusionLabel{AltWord{w}});
  } else {
    for (std::size_t n = 0; n <= cmd.max_label; ++n) labels.push_back(Nat{n});
  }
  Json rows = Json::array();
  for (const auto& a : labels)
    for (const auto& b : labels) {
      auto formula = labelled_fusion(*kind, a, b);
      auto observed = partition_level_fusion(C, a, b);
      Json row;
      row["left"] = to_string(a);
      row["right"] = to_string(b);
      row["labels"] = Json::array();
      for (const auto& l : formula) row["labels"].push_back(to_string(l));
      std::sort(formula.begin(), formula.end());
      std::sort(observed.begin(), observed.end());
      row["agrees"] = formula == observed;
      rows.push_back(row);
      ++checks;
    }
  Json result;
  result["result"] = rows;
  return result;
}

}  // namespace detail

inline Json inputs_json(const Command& cmd) {
  Json in;
  in["category"] = cmd.category;
  if (!cmd.left.empty() || cmd.name == "fuse") in["left"] = cmd.left;
  if (!cmd.right.empty() || cmd.name == "fuse") in["right"] = cmd.right;
  if (!cmd.partition.empty()) in["partition"] = cmd.partition;
  if (cmd.power) in["power"] = *cmd.power;
  if (cmd.N) in["N"] = *cmd.N;
  if (cmd.max_points) in["max_points"] = *cmd.max_points;
  if (cmd.name == "verify") in["suite"] = cmd.suite;
  if (cmd.name == "table") in["max_label"] = cmd.max_label;
  return in;
}

inline Outcome run(const Command& cmd) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  Json& doc = out.document;
  doc["schema"] = schema;
  doc["command"] = cmd.name;
  doc["inputs"] = inputs_json(cmd);
  std::size_t checks = 0;
  try {
    Json body;
    if (cmd.name == "verify") {
      body = detail::verify(cmd, checks);
    } else {
      const CategorySpec C = resolve_category(cmd);
      if (cmd.name == "fuse") {
        body = detail::fuse(cmd, C, checks);
      } else if (cmd.name == "decompose") {
        body = detail::decompose(cmd, C, checks);
      } else if (cmd.name == "member") {
        const auto m = C.membership(parse_partition(cmd.partition));
        body["result"] = m == Membership::yes ? "yes" : m == Membership::no ? "no" : "unknown";
        if (m == Membership::unknown) out.exit_code = undecidable;
        checks = 1;
      } else if (cmd.name == "sym") {
        const auto g = sym_group(C, parse_partition(cmd.partition), cmd.limits);
        Json perms = Json::array();
        for (const auto& s : g) perms.push_back(permutation_json(s));
        body["result"] = perms;
        body["order"] = g.size();
        body["is_group"] = is_group(g);
        checks = g.size();
      } else if (cmd.name == "brauer") {
        if (!cmd.power || !cmd.N) throw ParseError("brauer needs --power and --N", 0);
        const auto r = independent(C, *cmd.power, *cmd.N, cmd.limits);
        Json x;
        x["size"] = r.size;
        x["rank"] = r.rank;
        x["kernel_dim"] = r.size - r.rank;
        body["result"] = x;
        checks = 1;
      } else if (cmd.name == "table") {
        body = detail::table(cmd, C, checks);
      } else {
        throw ParseError("unknown command '" + cmd.name + "'", 0);
      }
    }
    for (auto& [key, value] : body.items()) doc[key] = value;
  } catch (const UndecidableError& e) {
    out.exit_code = undecidable;
    doc["error"] = {{"kind", "undecidable"}, {"message", e.what()}};
  } catch (const BoundsError& e) {
    out.exit_code = bounds_exceeded;
    doc["error"] = {{"kind", "bounds"}, {"message", e.what()}};
  } catch (const ParseError& e) {
    out.exit_code = parse_error;
    doc["error"] = {{"kind", "parse"}, {"message", e.what()}};
  } catch (const std::invalid_argument& e) {
    out.exit_code = parse_error;
    doc["error"] = {{"kind", "invalid-input"}, {"message", e.what()}};
  }
  const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  doc["stats"] = {{"elapsed_ms", cmd.timing ? Json(ms) : Json(nullptr)}, {"checks", checks}};
  return out;
}

}  // namespace particat::cli
