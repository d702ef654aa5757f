#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "clopen/compactification.hpp"
#include "clopen/function_algebra.hpp"
#include "clopen/topology.hpp"
#include "clopen/ultrafilter_space.hpp"
#include "clopen/valued_field.hpp"
#include "clopen/verify.hpp"

namespace clopen {

using Json = nlohmann::json;

inline Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw Error("invalid JSON in " + path + ": " + e.what());
  }
  return j;
}

// Space format: {"points": ["a","b"], "opens": [[], ["b"], ["a","b"]]}.
inline FiniteSpace space_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("points") || !j.contains("opens"))
    throw Error("space JSON needs \"points\" and \"opens\"");
  std::vector<std::string> points =
      j.at("points").get<std::vector<std::string>>();
  std::vector<std::vector<std::string>> opens =
      j.at("opens").get<std::vector<std::vector<std::string>>>();
  return FiniteSpace::from_point_sets(points, opens);
}

inline Json space_to_json(const FiniteSpace& x) {
  Json j;
  j["points"] = x.points;
  Json opens = Json::array();
  for (Mask o : x.opens) {
    Json names = Json::array();
    for (std::size_t i : mask_indices(o)) names.push_back(x.points[i]);
    opens.push_back(std::move(names));
  }
  j["opens"] = std::move(opens);
  return j;
}

// Field formats: {"kind":"p-adic","p":2}, {"kind":"trivial-Fq","q":4}
// (optional "modulus"), {"kind":"trivial-Q"}, {"kind":"trivial-Qi"}, or a
// shorthand string: "F4", "Q", "Qi", "2-adic".
inline ValuedField field_from_json(const Json& j) {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s == "Q") return ValuedField::trivial_q();
    if (s == "Qi" || s == "Q(i)") return ValuedField::trivial_qi();
    if (s.size() > 1 && s[0] == 'F')
      return ValuedField::trivial_fq(std::stoi(s.substr(1)));
    auto dash = s.find("-adic");
    if (dash != std::string::npos)
      return ValuedField::padic(std::stoi(s.substr(0, dash)));
    throw Error("unknown field shorthand '" + s + "'");
  }
  if (!j.is_object() || !j.contains("kind"))
    throw Error("field JSON needs a \"kind\"");
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "p-adic") return ValuedField::padic(j.at("p").get<int>());
  if (kind == "trivial-Fq") {
    int q = j.at("q").get<int>();
    if (j.contains("modulus")) {
      auto [p, n] = ValuedField::factor_prime_power(q);
      std::vector<int> modulus =
          detail::poly_from_string(j.at("modulus").get<std::string>(), p);
      if (modulus.size() != static_cast<std::size_t>(n) + 1)
        throw Error("modulus degree does not match the field order");
      return ValuedField::trivial_fq(p, modulus);
    }
    return ValuedField::trivial_fq(q);
  }
  if (kind == "trivial-Q") return ValuedField::trivial_q();
  if (kind == "trivial-Qi") return ValuedField::trivial_qi();
  throw Error("unknown field kind '" + kind + "'");
}

inline Json field_to_json(const ValuedField& k) {
  Json j;
  switch (k.kind) {
    case FieldKind::PadicQ:
      j["kind"] = "p-adic";
      j["p"] = k.p;
      break;
    case FieldKind::TrivialFq:
      j["kind"] = "trivial-Fq";
      j["q"] = k.order();
      if (k.extension_degree() > 1)
        j["modulus"] = detail::poly_to_string(k.modulus);
      break;
    case FieldKind::TrivialQ:
      j["kind"] = "trivial-Q";
      break;
    case FieldKind::TrivialQi:
      j["kind"] = "trivial-Qi";
      break;
  }
  return j;
}

// Function format: {"space": <path-or-inline>, "field": ...,
//                   "values": {"a":"1","b":"2","c":"4"}}.
inline FiniteSpace space_from_json_or_path(const Json& j) {
  if (j.is_string()) return space_from_json(load_json_file(j.get<std::string>()));
  return space_from_json(j);
}

inline BoundedFunction function_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("space") || !j.contains("field") ||
      !j.contains("values"))
    throw Error("function JSON needs \"space\", \"field\", and \"values\"");
  FiniteSpace x = space_from_json_or_path(j.at("space"));
  ValuedField k = field_from_json(j.at("field"));
  std::vector<Scalar> values(x.size(), Scalar::zero(k));
  std::vector<bool> given(x.size(), false);
  for (const auto& [name, text] : j.at("values").items()) {
    std::size_t i = x.point_index(name);
    values[i] = parse_scalar(k, text.get<std::string>());
    given[i] = true;
  }
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!given[i]) throw Error("no value given for point '" + x.points[i] + "'");
  return BoundedFunction(std::move(x), k, std::move(values));
}

inline Json function_to_json(const BoundedFunction& f) {
  Json values = Json::object();
  for (std::size_t i = 0; i < f.space.size(); ++i)
    values[f.space.points[i]] = scalar_to_string(f.values[i]);
  Json j;
  j["space"] = space_to_json(f.space);
  j["field"] = field_to_json(f.field);
  j["values"] = std::move(values);
  return j;
}

// Partition format: blocks separated by '|', members by ','. "a,b|c".
inline Partition partition_from_string(const FiniteSpace& x,
                                       const std::string& text) {
  std::vector<Mask> blocks;
  std::stringstream block_stream(text);
  std::string block_text;
  while (std::getline(block_stream, block_text, '|')) {
    Mask block = 0;
    std::stringstream member_stream(block_text);
    std::string name;
    while (std::getline(member_stream, name, ',')) {
      auto first = name.find_first_not_of(" \t");
      auto last = name.find_last_not_of(" \t");
      if (first == std::string::npos) throw Error("empty partition member");
      block |= Mask{1} << x.point_index(name.substr(first, last - first + 1));
    }
    blocks.push_back(block);
  }
  return Partition(x.size(), std::move(blocks));
}

inline Json partition_to_json(const FiniteSpace& x, const Partition& p) {
  Json blocks = Json::array();
  for (Mask b : p.blocks) {
    Json names = Json::array();
    for (std::size_t i : mask_indices(b)) names.push_back(x.points[i]);
    blocks.push_back(std::move(names));
  }
  return blocks;
}

// Tensor element format: {"extension":"F4/F2", "space": <path-or-inline>,
//   "summands": [{"coefficient":"x+1 mod x^2+x+1", "values":{"a":"1",...}}]}.
inline TensorElement tensor_element_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("space") || !j.contains("summands"))
    throw Error("tensor JSON needs \"space\" and \"summands\"");
  TensorExtension ext =
      j.contains("extension")
          ? TensorExtension::named(j.at("extension").get<std::string>())
          : TensorExtension::f4_over_f2();
  FiniteSpace x = space_from_json_or_path(j.at("space"));
  std::vector<std::pair<Scalar, BoundedFunction>> summands;
  for (const Json& s : j.at("summands")) {
    Scalar c = parse_scalar(ext.field, s.at("coefficient").get<std::string>());
    std::vector<Scalar> values(x.size(), Scalar::zero(ext.base));
    std::vector<bool> given(x.size(), false);
    for (const auto& [name, text] : s.at("values").items()) {
      std::size_t i = x.point_index(name);
      values[i] = parse_scalar(ext.base, text.get<std::string>());
      given[i] = true;
    }
    for (std::size_t i = 0; i < x.size(); ++i)
      if (!given[i])
        throw Error("no value given for point '" + x.points[i] + "'");
    summands.emplace_back(std::move(c),
                          BoundedFunction(x, ext.base, std::move(values)));
  }
  return TensorElement(std::move(ext), std::move(x), std::move(summands));
}

inline Json ultrafilter_to_json(const ClopenAlgebra& co,
                                const Ultrafilter& uf) {
  Json members = Json::array();
  for (Element a : uf.filter.elements)
    members.push_back(set_to_string(co.space.points, co.to_points(a)));
  Json j;
  j["members"] = std::move(members);
  j["concentrated_on"] =
      set_to_string(co.space.points, co.to_points(uf.minimum));
  return j;
}

inline Json criterion_to_json(const CriterionReport& r) {
  Json j;
  j["clopen_basis"] = r.applicable;
  j["compact"] = r.compact;
  j["hausdorff"] = r.hausdorff;
  j["totally_disconnected_compact_hausdorff"] = r.td_compact_hausdorff;
  j["principal_map_surjective"] = r.principal_surjective;
  j["principal_map_injective"] = r.principal_injective;
  j["principal_map_homeomorphism"] = r.principal_homeomorphism;
  Json counts = Json::array();
  for (std::size_t c : r.cluster_counts) counts.push_back(c);
  j["cluster_point_counts"] = std::move(counts);
  return j;
}

inline Json report_to_json(const VerificationReport& report) {
  Json j;
  j["suite"] = report.suite;
  j["seed"] = report.config.seed;
  j["max_points"] = report.config.max_points;
  j["random_cases"] = report.config.random_cases;
  j["passed"] = report.passed();
  j["seconds"] = report.seconds();
  Json checks = Json::array();
  for (const CheckResult& c : report.checks) {
    Json entry;
    entry["name"] = c.name;
    entry["status"] = c.passed() ? "pass" : "fail";
    entry["cases"] = c.cases;
    entry["failures"] = c.failure_count;
    if (!c.failures.empty()) entry["failure_details"] = c.failures;
    entry["seconds"] = c.seconds;
    checks.push_back(std::move(entry));
  }
  j["checks"] = std::move(checks);
  return j;
}

inline Json uf_space_to_json(const UltrafilterSpace& u) {
  Json j;
  Json ufs = Json::array();
  for (const Ultrafilter& uf : u.ultrafilters)
    ufs.push_back(ultrafilter_to_json(u.co, uf));
  j["ultrafilters"] = std::move(ufs);
  Json basis = Json::object();
  for (Element a = 0; a <= u.co.algebra.top(); ++a) {
    Json names = Json::array();
    for (std::size_t i : mask_indices(u.basis[a]))
      names.push_back(u.realized.points[i]);
    basis[set_to_string(u.co.space.points, u.co.to_points(a))] =
        std::move(names);
    if (a == u.co.algebra.top()) break;
  }
  j["basis"] = std::move(basis);
  j["space"] = space_to_json(u.realized);
  Json principal = Json::object();
  for (std::size_t i = 0; i < u.co.space.size(); ++i)
    principal[u.co.space.points[i]] =
        u.realized.points[u.principal_assignment[i]];
  j["principal_map"] = std::move(principal);
  return j;
}

}  // namespace clopen
