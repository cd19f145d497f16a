// Command-line front end for the cyclo library.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cyclo/cyclo.hpp"

namespace {

using cyclo::Json;

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw cyclo::ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& err) {
    throw cyclo::ParseError(path + ": " + err.what());
  }
}

bool is_signed_json(const Json& j) { return j.is_object() && (j.contains("pos") || j.contains("neg")); }

cyclo::Digraph read_digraph(const std::string& path) { return cyclo::digraph_from_json(read_json(path)); }

/// "Delta1" with params {4} and "Delta1(4)" name the same family.
cyclo::CatalogRef family_ref(const std::string& name, const std::vector<std::string>& params) {
  if (params.empty()) return cyclo::CatalogRef::parse(name);
  std::string s = name + "(";
  for (std::size_t j = 0; j < params.size(); ++j) s += (j ? "," : "") + params[j];
  return cyclo::CatalogRef::parse(s + ")");
}

void emit(const Json& j, bool pretty) { std::cout << (pretty ? j.dump(2) : j.dump()) << "\n"; }

int cmd_gen(const std::string& family, const std::vector<std::string>& params, const std::string& format) {
  const auto ref = family_ref(family, params);
  if (ref.is_signed()) {
    const auto s = cyclo::signed_family(ref);
    if (format == "dot") std::cout << cyclo::to_dot(s);
    else emit(cyclo::to_json(s), false);
  } else {
    const auto d = cyclo::small_family(ref);
    if (format == "dot") std::cout << cyclo::to_dot(d);
    else emit(cyclo::to_json(d), false);
  }
  return 0;
}

int cmd_spectrum(const std::string& path, bool text) {
  const auto d = read_digraph(path);
  const auto h = d.hermitian_adjacency();
  const auto p = cyclo::char_poly(h);
  const auto r = cyclo::radius_class(p);
  const bool above = d.size() > 0 && cyclo::min_eigen_exceeds(h);
  if (text) {
    std::cout << "char_poly: " << p.to_string() << "\n"
              << "radius: " << cyclo::to_string(r) << "\n"
              << "min_eigenvalue_above_minus_sqrt2: " << (above ? "yes" : "no") << "\n";
    return 0;
  }
  Json j{{"n", d.size()},
         {"char_poly", cyclo::to_json(p)},
         {"radius", std::string(cyclo::to_string(r))},
         {"min_eigenvalue_above_minus_sqrt2", above}};
  if (r != cyclo::RadiusClass::GreaterThan2) j["displaced_rank"] = cyclo::displaced_rank(h).rank;
  emit(j, true);
  return 0;
}

int cmd_classify(const std::string& path, bool text) {
  const auto d = read_digraph(path);
  const auto r = cyclo::classify(d);
  if (!text) {
    emit(cyclo::to_json(r), true);
    return 0;
  }
  std::cout << "radius: " << cyclo::to_string(r.radius) << "\n";
  if (r.container) {
    std::cout << "container: " << r.container->ref.to_string() << " (item " << cyclo::theorem_item(r.container->ref)
              << ")\n";
  } else {
    std::cout << "container: none\n";
  }
  if (r.lattice) std::cout << "lattice: " << *r.lattice << "\n";
  return 0;
}

int cmd_equiv(const std::string& a, const std::string& b, bool strong) {
  const auto ha = read_digraph(a).hermitian_adjacency();
  const auto hb = read_digraph(b).hermitian_adjacency();
  const auto w = strong ? cyclo::strong_equiv(ha, hb) : cyclo::equiv(ha, hb);
  if (!w) {
    emit(Json{{"equivalent", false}}, false);
    return 1;
  }
  emit(Json{{"equivalent", true}, {"witness", cyclo::to_json(*w)}}, false);
  return 0;
}

cyclo::SpectralFilter radius_filter(const std::string& radius) {
  if (radius == "le2") return cyclo::SpectralFilter::RadiusAtMost2;
  if (radius == "lt2") return cyclo::SpectralFilter::RadiusLessThan2;
  if (radius == "any") return cyclo::SpectralFilter::None;
  throw cyclo::ParseError("--radius must be le2, lt2 or any");
}

int cmd_enumerate(int n, const std::string& radius, bool dedup, bool list) {
  const auto e = cyclo::enumerate({n, radius_filter(radius), dedup, true, 0});
  Json j{{"n", e.n},         {"total", e.total},         {"scanned", e.scanned}, {"pruned", e.pruned},
         {"passed", e.passed}, {"connected", e.connected}, {"emitted", e.digraphs.size()}};
  if (dedup) j["class_sizes"] = e.class_sizes;
  if (list) {
    Json ds = Json::array();
    for (const auto& d : e.digraphs) ds.push_back(cyclo::to_json(d));
    j["digraphs"] = ds;
  }
  emit(j, false);
  return 0;
}

int cmd_verify(const std::string& what, int n) {
  if (what == "theorem") {
    const auto rep = cyclo::verify_theorem(n);
    Json radius = Json::object();
    for (auto [r, c] : rep.radius_counts) radius[std::string(cyclo::to_string(r))] = c;
    Json items = Json::object();
    for (auto [i, c] : rep.item_counts) items[std::to_string(i)] = c;
    emit(Json{{"n", rep.n},
              {"total", rep.total},
              {"scanned", rep.scanned},
              {"pruned", rep.pruned},
              {"connected", rep.connected},
              {"classes", rep.classes},
              {"radius_counts", radius},
              {"item_counts", items},
              {"failures", rep.failures}},
         true);
    return rep.ok() ? 0 : 1;
  }
  if (what == "sqrt2") {
    const auto rep = cyclo::verify_sqrt2(n);
    emit(Json{{"n", rep.n},
              {"scanned", rep.scanned},
              {"pruned", rep.pruned},
              {"checked", rep.checked},
              {"witnesses", rep.witnesses},
              {"violations", rep.violations}},
         true);
    return rep.ok() ? 0 : 1;
  }
  if (what == "gm2") {
    const auto rep = cyclo::verify_gm2_table();
    for (const auto& row : rep.rows) {
      std::cout << row.gm2_item << "\t" << row.gm2_name << "\t" << row.ours << "\t" << row.lattice << "\t"
                << cyclo::to_string(row.status) << "\n";
      for (const auto& d : row.details) std::cout << "\t" << d << "\n";
    }
    std::cout << rep.failures() << " failure(s)\n";
    return rep.ok() ? 0 : 1;
  }
  throw cyclo::ParseError("verify target must be theorem, sqrt2 or gm2");
}

int cmd_export(const std::string& path, const std::string& format) {
  const Json j = read_json(path);
  if (is_signed_json(j)) {
    const auto s = cyclo::signed_graph_from_json(j);
    if (format == "dot") std::cout << cyclo::to_dot(s);
    else emit(cyclo::to_json(s), false);
  } else {
    const auto d = cyclo::digraph_from_json(j);
    if (format == "dot") std::cout << cyclo::to_dot(d);
    else emit(cyclo::to_json(d), false);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact spectral classification of digraphs by Hermitian adjacency matrices"};
  app.require_subcommand(1);

  std::string family, format = "json", file, file2, radius = "le2", what;
  std::vector<std::string> params;
  bool text = false, json_out = false, strong = false, dedup = false, list = false;
  int n = 0;

  auto* gen = app.add_subcommand("gen", "Emit a catalog digraph or signed graph");
  gen->add_option("family", family, "Family name, e.g. Delta1 or \"Square(3,1,0,0)\"")->required();
  gen->add_option("params", params, "Integer parameters");
  gen->add_option("--format", format, "json or dot")->check(CLI::IsMember({"json", "dot"}));

  auto* spectrum = app.add_subcommand("spectrum", "Characteristic polynomial and radius class");
  spectrum->add_option("file", file, "Digraph JSON")->required();
  spectrum->add_flag("--text", text, "Plain text output");

  auto* classify = app.add_subcommand("classify", "Radius class, container and lattice label");
  classify->add_option("file", file, "Digraph JSON")->required();
  classify->add_flag("--text", text, "Plain text output");
  classify->add_flag("--json", json_out, "JSON output (default)");

  auto* equiv = app.add_subcommand("equiv", "Equivalence witness between two digraphs");
  equiv->add_option("a", file, "First digraph JSON")->required();
  equiv->add_option("b", file2, "Second digraph JSON")->required();
  equiv->add_flag("--strong", strong, "Require strong equivalence (switching equivalence)");

  auto* enumerate = app.add_subcommand("enumerate", "Exhaustive enumeration of connected digraphs");
  enumerate->add_option("--n", n, "Vertex count")->required();
  enumerate->add_option("--radius", radius, "le2, lt2 or any")->check(CLI::IsMember({"le2", "lt2", "any"}));
  enumerate->add_flag("--dedup", dedup, "One representative per switching class");
  enumerate->add_flag("--list", list, "Include the digraphs in the output");

  auto* verify = app.add_subcommand("verify", "Exhaustive verification runs");
  verify->add_option("target", what, "theorem, sqrt2 or gm2")->required()->check(
      CLI::IsMember({"theorem", "sqrt2", "gm2"}));
  verify->add_option("--n", n, "Vertex count (theorem, sqrt2)");

  auto* exp = app.add_subcommand("export", "Convert a digraph or signed-graph JSON file");
  exp->add_option("file", file, "Input JSON")->required();
  exp->add_option("--format", format, "json or dot")->check(CLI::IsMember({"json", "dot"}));

  CLI11_PARSE(app, argc, argv);

  if (text && json_out) {
    std::cerr << "error: --text and --json are exclusive\n";
    return 2;
  }
  try {
    if (*gen) return cmd_gen(family, params, format);
    if (*spectrum) return cmd_spectrum(file, text);
    if (*classify) return cmd_classify(file, text);
    if (*equiv) return cmd_equiv(file, file2, strong);
    if (*enumerate) return cmd_enumerate(n, radius, dedup, list);
    if (*verify) {
      if (what != "gm2" && n <= 0) throw cyclo::ParseError("verify " + what + " needs --n");
      return cmd_verify(what, n);
    }
    if (*exp) return cmd_export(file, format);
  } catch (const cyclo::Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
  return 2;
}
