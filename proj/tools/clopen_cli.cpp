// Command-line surface: load spaces and functions, run the individual
// constructions, and execute named verification suites as JSON reports.
#include <clopen/clopen.hpp>
#include <clopen/json_io.hpp>

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace clopen;

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

ValuedField field_from_arg(const std::string& text) {
  if (!text.empty() && text.front() == '{')
    return field_from_json(Json::parse(text));
  return field_from_json(Json(text));
}

Json names_of(const FiniteSpace& x, Mask m) {
  Json out = Json::array();
  for (std::size_t i : mask_indices(m)) out.push_back(x.points[i]);
  return out;
}

void cmd_space_check(const std::string& path) {
  FiniteSpace x = space_from_json(load_json_file(path));
  Json j;
  j["ok"] = true;
  j["points"] = x.size();
  j["open_sets"] = x.opens.size();
  print(j);
}

void cmd_space_describe(const std::string& path) {
  FiniteSpace x = space_from_json(load_json_file(path));
  Json j = space_to_json(x);
  j["discrete"] = x.is_discrete();
  Json comps = Json::array();
  for (Mask c : x.component_masks()) comps.push_back(names_of(x, c));
  j["components"] = std::move(comps);
  Json clopens = Json::array();
  for (Mask c : x.clopen_masks()) clopens.push_back(names_of(x, c));
  j["clopens"] = std::move(clopens);
  print(j);
}

void cmd_clopen(const std::string& path) {
  FiniteSpace x = space_from_json(load_json_file(path));
  ClopenAlgebra co = ClopenAlgebra::of(x);
  Json j;
  Json atoms = Json::array();
  for (Mask m : co.atom_masks) atoms.push_back(names_of(x, m));
  j["atoms"] = std::move(atoms);
  j["atom_count"] = co.algebra.atom_count();
  Json elements = Json::array();
  for (Element a : co.algebra.carrier())
    elements.push_back(x.set_name(co.to_points(a)));
  j["elements"] = std::move(elements);
  j["trivial"] = co.algebra.is_trivial();
  print(j);
}

void cmd_uf_build(const std::string& path) {
  FiniteSpace x = space_from_json(load_json_file(path));
  Json j = uf_space_to_json(build_uf(x));
  j["criterion"] = criterion_to_json(criterion_report(x));
  print(j);
}

void cmd_seminorm(const std::string& function_path, const std::string& point) {
  BoundedFunction f = function_from_json(load_json_file(function_path));
  Json j;
  j["sup_norm"] = sup_norm(f).to_string();
  if (!point.empty()) {
    Ultrafilter uf = principal(f.space, point);
    j["point"] = point;
    j["seminorm"] = uf_seminorm(f, uf).to_string();
  } else {
    j["algebraic_norm"] = algebraic_norm(f).to_string();
    UltrafilterSpace u = build_uf(f.space);
    Json per_uf = Json::object();
    for (const Ultrafilter& uf : u.ultrafilters) {
      std::string key = u.co.algebra.atoms[uf.atom_index()];
      per_uf[key] = uf_seminorm(f, uf).to_string();
    }
    j["seminorms"] = std::move(per_uf);
  }
  print(j);
}

void cmd_ideal(const std::string& space_path, const std::string& field_text) {
  FiniteSpace x = space_from_json(load_json_file(space_path));
  ValuedField k = field_from_arg(field_text);
  Json ideals = Json::array();
  for (const Ideal& m : enumerate_max_ideals(x, k)) {
    Json entry;
    entry["zero_set"] = names_of(x, m.zero_mask);
    entry["maximal"] = m.is_maximal();
    entry["prime"] = m.is_prime();
    Json members = Json::array();
    ClopenAlgebra co = ClopenAlgebra::of(x);
    for (Element a : clopens_outside(m))
      members.push_back(x.set_name(co.to_points(a)));
    entry["ultrafilter"] = std::move(members);
    ideals.push_back(std::move(entry));
  }
  Json j;
  j["field"] = field_to_json(k);
  j["maximal_ideals"] = std::move(ideals);
  print(j);
}

void cmd_spectrum(const std::string& space_path, const std::string& field_text,
                  const std::string& function_path) {
  FiniteSpace x = space_from_json(load_json_file(space_path));
  ValuedField k = field_from_arg(field_text);
  std::vector<BerkovichPoint> pts = spectrum(x, k);
  Json j;
  j["field"] = field_to_json(k);
  Json points = Json::array();
  ClopenAlgebra co = ClopenAlgebra::of(x);
  for (const BerkovichPoint& pt : pts) {
    Json entry;
    entry["concentrated_on"] = names_of(x, co.to_points(pt.uf.minimum));
    points.push_back(std::move(entry));
  }
  if (!function_path.empty()) {
    BoundedFunction f = function_from_json(load_json_file(function_path));
    if (!(f.space == x)) throw Error("function lives on a different space");
    if (!(f.field == k)) throw Error("function lives over a different field");
    for (std::size_t i = 0; i < pts.size(); ++i)
      points[i]["value"] = pts[i].evaluate(f).to_string();
    j["sup_norm"] = sup_norm(f).to_string();
  }
  j["points"] = std::move(points);
  print(j);
}

void cmd_gelfand(const std::string& space_path, const std::string& partition_text,
                 const std::string& field_text) {
  FiniteSpace x = space_from_json(load_json_file(space_path));
  ValuedField k = field_from_arg(field_text);
  Partition p = partition_from_string(x, partition_text);
  GelfandRoundtrip r = gelfand_roundtrip(x, p, k);
  Json j;
  j["partition"] = partition_to_json(x, p);
  j["recovered"] = partition_to_json(x, r.recovered);
  j["generator_count"] = r.generators.size();
  j["ok"] = r.ok;
  print(j);
}

void cmd_approx(const std::string& function_path, const std::string& eps_text) {
  BoundedFunction f = function_from_json(load_json_file(function_path));
  AbsValue eps = parse_abs_value(eps_text);
  ApproxResult res = locally_constant_approx(f, eps);
  AbsValue err = sup_norm(f - res.g);
  Json j;
  j["epsilon"] = eps.to_string();
  Json blocks = Json::array();
  for (Mask b : res.blocks.blocks) blocks.push_back(names_of(f.space, b));
  j["blocks"] = std::move(blocks);
  j["approximation"] = function_to_json(res.g)["values"];
  j["error_norm"] = err.to_string();
  j["within_epsilon"] = err <= eps;
  print(j);
}

void cmd_tensor_check(const std::string& extension_name,
                      const std::string& element_path) {
  Json j = load_json_file(element_path);
  j["extension"] = extension_name;
  TensorElement t = tensor_element_from_json(j);
  Json out;
  out["extension"] = t.extension.name;
  out["tensor_norm"] = tensor_norm(t).to_string();
  out["naive_bound"] = tensor_naive_bound(t).to_string();
  out["pointwise_sup"] = sup_norm(apply_extension(t)).to_string();
  out["isometry"] = tensor_isometry_check(t);
  print(out);
}

int cmd_verify(const std::string& suite, std::uint64_t seed,
               std::size_t max_points, std::size_t cases,
               const std::string& out_path) {
  Config cfg;
  cfg.seed = seed;
  cfg.max_points = max_points;
  cfg.random_cases = cases;
  VerificationReport rep = run_suite(suite, cfg);
  Json j = report_to_json(rep);
  print(j);
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw Error("cannot write report to '" + out_path + "'");
    out << j.dump(2) << "\n";
  }
  return rep.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact finite-scale toolkit for clopen algebras, ultrafilter spaces, "
      "and non-Archimedean function algebras"};
  app.require_subcommand(1);

  std::string space_path, function_path, field_text = "F2", point;
  std::string partition_text, eps_text, extension_name, element_path;
  std::string suite, out_path;
  std::uint64_t seed = 0;
  std::size_t max_points = 6, cases = 1000;
  int exit_code = 0;

  CLI::App* space = app.add_subcommand("space", "inspect a space file");
  space->require_subcommand(1);
  CLI::App* check = space->add_subcommand("check", "validate the open family");
  check->add_option("file", space_path, "space JSON file")->required();
  check->callback([&] { cmd_space_check(space_path); });
  CLI::App* describe =
      space->add_subcommand("describe", "points, opens, components, clopens");
  describe->add_option("file", space_path, "space JSON file")->required();
  describe->callback([&] { cmd_space_describe(space_path); });

  CLI::App* clopen_cmd =
      app.add_subcommand("clopen", "the Boolean algebra of clopen sets");
  clopen_cmd->add_option("file", space_path, "space JSON file")->required();
  clopen_cmd->callback([&] { cmd_clopen(space_path); });

  CLI::App* uf = app.add_subcommand("uf", "ultrafilter space constructions");
  uf->require_subcommand(1);
  CLI::App* uf_build = uf->add_subcommand(
      "build", "ultrafilters, basis, principal map, and verdicts");
  uf_build->add_option("file", space_path, "space JSON file")->required();
  uf_build->callback([&] { cmd_uf_build(space_path); });

  CLI::App* seminorm =
      app.add_subcommand("seminorm", "sup norm and ultrafilter seminorms");
  seminorm->add_option("--function", function_path, "function JSON file")
      ->required();
  seminorm->add_option("--point", point, "evaluate at this point's ultrafilter");
  seminorm->callback([&] { cmd_seminorm(function_path, point); });

  CLI::App* ideal =
      app.add_subcommand("ideal", "maximal ideals of the function algebra");
  ideal->add_option("--space", space_path, "space JSON file")->required();
  ideal->add_option("--field", field_text, "field, e.g. F4, Q, Qi, 2-adic")
      ->required();
  ideal->callback([&] { cmd_ideal(space_path, field_text); });

  CLI::App* spec =
      app.add_subcommand("spectrum", "bounded multiplicative seminorms");
  spec->add_option("--space", space_path, "space JSON file")->required();
  spec->add_option("--field", field_text, "field, e.g. F4, Q, Qi, 2-adic")
      ->required();
  spec->add_option("--function", function_path, "evaluate this function");
  spec->callback([&] { cmd_spectrum(space_path, field_text, function_path); });

  CLI::App* gelfand =
      app.add_subcommand("gelfand", "partition to indicator algebra and back");
  gelfand->add_option("--space", space_path, "space JSON file")->required();
  gelfand->add_option("--partition", partition_text, "blocks, e.g. \"a,b|c\"")
      ->required();
  gelfand->add_option("--field", field_text, "field for the indicators");
  gelfand->callback(
      [&] { cmd_gelfand(space_path, partition_text, field_text); });

  CLI::App* approx =
      app.add_subcommand("approx", "locally constant approximation");
  approx->add_option("--function", function_path, "function JSON file")
      ->required();
  approx->add_option("--epsilon", eps_text, "radius, e.g. \"2^-1\" or \"1\"")
      ->required();
  approx->callback([&] { cmd_approx(function_path, eps_text); });

  CLI::App* tensor =
      app.add_subcommand("tensor-check", "extension of scalars is an isometry");
  tensor->add_option("--extension", extension_name, "F4/F2 or Qi/Q")
      ->required();
  tensor->add_option("--element", element_path, "tensor element JSON file")
      ->required();
  tensor->callback([&] { cmd_tensor_check(extension_name, element_path); });

  CLI::App* verify =
      app.add_subcommand("verify", "run a named verification suite");
  verify->add_option("--suite", suite,
                     "boolean-laws, filters, uf-universality, ideal-bijection, "
                     "seminorm-identities, orthogonality, gelfand, "
                     "approximation, tensor-isometry, or all")
      ->required();
  verify->add_option("--seed", seed, "seed for randomized instances");
  verify->add_option("--max-points", max_points, "largest space size");
  verify->add_option("--cases", cases, "randomized cases per check");
  verify->add_option("--out", out_path, "also write the JSON report here");
  verify->callback(
      [&] { exit_code = cmd_verify(suite, seed, max_points, cases, out_path); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
