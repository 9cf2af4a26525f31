// Command-line front end: reads structures, groups, heaps and algebras as JSON and
// prints canonical results. Exit codes: 0 computed, 1 invalid input, 2 negative answer.

#include <metstruct/json_io.hpp>
#include <metstruct/metstruct.hpp>
#include <metstruct/random.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace metstruct;
using nlohmann::json;

constexpr int kComputed = 0;
constexpr int kInvalid = 1;
constexpr int kNegative = 2;

bool g_json = false;

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidInput("'" + path + "' is not valid JSON: " + e.what());
  }
}

void print_report(const ValidationReport& report) {
  if (g_json) {
    std::cout << io::report_to_json(report).dump() << "\n";
    return;
  }
  if (report.ok()) std::cout << "ok\n";
  for (const auto& v : report.violations) {
    std::cout << v.axiom;
    for (int w : v.witness) std::cout << ' ' << w;
    std::cout << "\n";
  }
}

/// Loads and validates a structure; prints the report and throws on failure.
MetricStructure load_structure(const std::string& path) {
  MetricStructure s = io::structure_from_json(read_json(path));
  const ValidationReport report = validate_structure(s);
  if (!report.ok()) {
    print_report(report);
    throw InvalidInput("'" + path + "' is not a valid metric structure");
  }
  return s;
}

HeapTable load_heap(const std::string& path) {
  const HeapOpTable op = io::heap_table_from_json(read_json(path));
  const ValidationReport report = validate_heap(op);
  if (!report.ok()) {
    print_report(report);
    throw InvalidInput("'" + path + "' is not a valid heap");
  }
  return HeapTable(op);
}

std::vector<int> parse_index_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InvalidInput("malformed index '" + item + "'");
    }
  }
  return out;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(parse_rational(item));
  return out;
}

WeightedGenerators parse_generators(const std::string& gens, const std::string& weights) {
  const auto g = parse_index_list(gens);
  const auto w = parse_rational_list(weights);
  if (g.size() != w.size()) throw InvalidInput("--gens and --weights differ in length");
  WeightedGenerators out;
  for (std::size_t i = 0; i < g.size(); ++i) out.weights[g[i]] = w[i];
  return out;
}

void print_json(const json& j) { std::cout << j.dump() << "\n"; }

void print_ints(const std::vector<int>& values) {
  for (std::size_t i = 0; i < values.size(); ++i) std::cout << (i ? " " : "") << values[i];
  std::cout << "\n";
}

int print_optional_map(const std::optional<Bijection>& f) {
  if (g_json) {
    print_json(f ? json(*f) : json(nullptr));
  } else if (f) {
    print_ints(*f);
  } else {
    std::cout << "none\n";
  }
  return f ? kComputed : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite metric structures: isometry and bi-Lipschitz invariants, group encodings, heaps, Stone duality"};
  app.require_subcommand(1);
  app.add_flag("--json", g_json, "JSON output");

  int code = kComputed;
  std::string x_path, y_path;

  auto* validate = app.add_subcommand("validate", "check the metric structure axioms");
  validate->add_option("X", x_path)->required();
  validate->callback([&] {
    const ValidationReport report = validate_structure(io::structure_from_json(read_json(x_path)));
    print_report(report);
    code = report.ok() ? kComputed : kInvalid;
  });

  bool use_oracle = false;
  auto* isometry = app.add_subcommand("isometry", "least isometric isomorphism X -> Y");
  isometry->add_option("X", x_path)->required();
  isometry->add_option("Y", y_path)->required();
  isometry->add_flag("--oracle", use_oracle, "exhaustive search over all bijections");
  isometry->callback([&] {
    const MetricStructure s = load_structure(x_path), t = load_structure(y_path);
    code = print_optional_map(use_oracle ? brute_force_isometric_iso(s, t) : decide_isometric_iso(s, t));
  });

  auto* signature = app.add_subcommand("signature", "canonical ordering signature");
  signature->add_option("X", x_path)->required();
  signature->callback([&] {
    const json sig = io::signature_to_json(full_signature(load_structure(x_path)));
    if (g_json) {
      print_json(sig);
      return;
    }
    for (const auto& e : sig.at("entries")) std::cout << e.at("matrix").dump() << ' ' << e.at("patterns").dump() << "\n";
  });

  auto* distortion = app.add_subcommand("distortion", "optimal bi-Lipschitz constant");
  distortion->add_option("X", x_path)->required();
  distortion->add_option("Y", y_path)->required();
  distortion->callback([&] {
    const Distortion d = optimal_distortion(load_structure(x_path), load_structure(y_path));
    if (g_json)
      print_json(d.is_none() ? json(nullptr) : io::rational_to_json(*d.value));
    else
      std::cout << format_distortion(d) << "\n";
    code = d.is_none() ? kNegative : kComputed;
  });

  std::string c_text, patterns_path;
  bool canonical = false;
  auto* dominates_cmd = app.add_subcommand("dominates", "perturbation containment of X in Y at constant c");
  dominates_cmd->add_option("X", x_path)->required();
  dominates_cmd->add_option("Y", y_path)->required();
  dominates_cmd->add_option("--c", c_text, "constant >= 1")->required();
  auto* patterns_opt = dominates_cmd->add_option("--patterns", patterns_path, "pattern JSON file");
  auto* canonical_opt = dominates_cmd->add_flag("--canonical", canonical, "use the canonical pattern of X");
  patterns_opt->excludes(canonical_opt);
  dominates_cmd->callback([&] {
    const MetricStructure s = load_structure(x_path), t = load_structure(y_path);
    std::vector<LipZetaPattern> patterns;
    if (canonical)
      patterns.push_back(canonical_pattern(s));
    else if (!patterns_path.empty())
      patterns = io::lip_patterns_from_json(read_json(patterns_path));
    else
      throw InvalidInput("dominates needs --patterns or --canonical");
    const bool holds = dominates(s, t, parse_rational(c_text), patterns);
    if (g_json)
      print_json(holds);
    else
      std::cout << (holds ? "true" : "false") << "\n";
    code = holds ? kComputed : kNegative;
  });

  // group ...
  auto* group = app.add_subcommand("group", "group encodings");
  group->require_subcommand(1);
  std::string gens_text, weights_text;
  auto* roelcke = group->add_subcommand("roelcke", "Roelcke structure of a weighted word metric");
  roelcke->add_option("G", x_path)->required();
  roelcke->add_option("--gens", gens_text, "generator indices, comma separated")->required();
  roelcke->add_option("--weights", weights_text, "generator weights, comma separated")->required();
  roelcke->callback([&] {
    const FiniteGroup g = io::group_from_json(read_json(x_path));
    print_json(io::structure_to_json(roelcke_structure(g, weighted_word_metric(g, parse_generators(gens_text, weights_text)))));
  });

  auto* wordmetric = group->add_subcommand("wordmetric", "lengths of the weighted word metric");
  wordmetric->add_option("G", x_path)->required();
  wordmetric->add_option("--gens", gens_text)->required();
  wordmetric->add_option("--weights", weights_text)->required();
  wordmetric->callback([&] {
    const FiniteGroup g = io::group_from_json(read_json(x_path));
    const LeftInvariantMetric rho = weighted_word_metric(g, parse_generators(gens_text, weights_text));
    if (g_json) {
      json lengths = json::array();
      for (const auto& r : rho.length) lengths.push_back(io::rational_to_json(r));
      print_json(lengths);
      return;
    }
    for (std::size_t i = 0; i < rho.length.size(); ++i) std::cout << i << ' ' << format_rational(rho.length[i]) << "\n";
  });

  int base = 0;
  auto* alexandrov = group->add_subcommand("alexandrov", "one-point compactification of a pointed space");
  alexandrov->add_option("P", x_path)->required();
  alexandrov->add_option("--base", base, "base point index")->required();
  alexandrov->callback([&] { print_json(io::structure_to_json(alexandrov_structure(load_structure(x_path), base))); });

  int a_elem = 0, b_elem = 0;
  std::string first_text, second_text;
  auto* translate_cmd = group->add_subcommand("translate", "least g with gA = B via translation structures");
  translate_cmd->add_option("G", x_path)->required();
  translate_cmd->add_option("--a", a_elem)->required();
  translate_cmd->add_option("--b", b_elem)->required();
  translate_cmd->add_option("--A", first_text)->required();
  translate_cmd->add_option("--B", second_text)->required();
  translate_cmd->callback([&] {
    const FiniteGroup g = io::group_from_json(read_json(x_path));
    const auto first = parse_index_list(first_text), second = parse_index_list(second_text);
    const TranslationEquivalence r = decide_translation_equiv(g, a_elem, b_elem, {first.begin(), first.end()},
                                                              {second.begin(), second.end()});
    if (g_json)
      print_json(r.element ? json(*r.element) : json(nullptr));
    else
      std::cout << (r.element ? std::to_string(*r.element) : "none") << "\n";
    code = r.element ? kComputed : kNegative;
  });

  // heap ...
  auto* heap = app.add_subcommand("heap", "heap operations");
  heap->require_subcommand(1);
  auto* heap_validate = heap->add_subcommand("validate", "check para-associativity and the identity law");
  heap_validate->add_option("H", x_path)->required();
  heap_validate->callback([&] {
    const ValidationReport report = validate_heap(io::heap_table_from_json(read_json(x_path)));
    print_report(report);
    code = report.ok() ? kComputed : kInvalid;
  });
  auto* from_group = heap->add_subcommand("from-group", "[x,y,z] = x y^-1 z");
  from_group->add_option("G", x_path)->required();
  from_group->callback([&] { print_json(io::heap_to_json(heap_from_group(io::group_from_json(read_json(x_path))))); });
  int identity = 0;
  auto* to_group = heap->add_subcommand("to-group", "group with identity e");
  to_group->add_option("H", x_path)->required();
  to_group->add_option("--e", identity)->required();
  to_group->callback([&] { print_json(io::group_to_json(group_from_heap(load_heap(x_path), identity))); });
  auto* subheaps_cmd = heap->add_subcommand("subheaps", "all subheaps");
  subheaps_cmd->add_option("H", x_path)->required();
  subheaps_cmd->callback([&] {
    const auto subs = subheaps(load_heap(x_path));
    if (g_json) {
      print_json(subs);
      return;
    }
    for (const auto& s : subs) print_ints(s);
  });

  // stone ...
  auto* stone = app.add_subcommand("stone", "clopen algebra encoding");
  stone->require_subcommand(1);
  auto* encode = stone->add_subcommand("encode", "structure -> Boolean structure");
  encode->add_option("X", x_path)->required();
  encode->callback([&] { print_json(io::boolean_to_json(clopen_algebra(load_structure(x_path)))); });
  auto* decode = stone->add_subcommand("decode", "Boolean structure -> discrete structure on atoms");
  decode->add_option("A", x_path)->required();
  decode->callback([&] { print_json(io::structure_to_json(stone_decode(io::boolean_from_json(read_json(x_path))))); });

  std::size_t dims = 0;
  auto* embed = app.add_subcommand("embed", "distance-to-enumeration embedding into the cube");
  embed->add_option("X", x_path)->required();
  embed->add_option("--dims", dims, "truncation length")->required();
  embed->callback([&] {
    const json points = io::cube_points_to_json(kuratowski_embed(load_structure(x_path), dims));
    if (g_json) {
      print_json(points);
      return;
    }
    for (const auto& p : points) {
      for (std::size_t i = 0; i < p.size(); ++i) std::cout << (i ? " " : "") << p[i].get<std::string>();
      std::cout << "\n";
    }
  });

  std::uint64_t seed = 0;
  RandomStructureOptions gen_opt;
  std::vector<std::string> gen_relations;
  auto* generate = app.add_subcommand("generate", "random valid structure for test corpora");
  generate->add_option("--seed", seed)->required();
  generate->add_option("--points", gen_opt.points)->check(CLI::Range(1, 64));
  generate->add_option("--max-distance", gen_opt.max_distance)->check(CLI::Range(1, 1000));
  generate->add_option("--relation", gen_relations, "NAME:ARITY, repeatable");
  generate->add_option("--density", gen_opt.density)->check(CLI::Range(0.0, 1.0));
  generate->callback([&] {
    for (const auto& rel_arg : gen_relations) {
      const auto colon = rel_arg.find(':');
      if (colon == std::string::npos) throw InvalidInput("--relation expects NAME:ARITY");
      const auto arity = parse_index_list(rel_arg.substr(colon + 1));
      if (arity.size() != 1 || arity[0] < 1) throw InvalidInput("--relation arity must be positive");
      gen_opt.relations[rel_arg.substr(0, colon)] = arity[0];
    }
    std::mt19937_64 rng(seed);
    print_json(io::structure_to_json(random_structure(rng, gen_opt)));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e);
    return status == 0 ? kComputed : kInvalid;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const json::exception& e) {
    std::cerr << "error: malformed input: " << e.what() << "\n";
    return kInvalid;
  }
  return code;
}
