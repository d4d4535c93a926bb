// trigraph: command-line front end for the tri library.
//
// Exit status: 0 success / property holds / pattern absent, 1 witness or
// counterexample found (or the requested structure is absent), 2 usage or
// input error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tri/cutsets.hpp"
#include "tri/decomposer.hpp"
#include "tri/freeness.hpp"
#include "tri/generators.hpp"
#include "tri/io.hpp"
#include "tri/structure.hpp"
#include "tri/verifier.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFound = 1;
constexpr int kUsage = 2;

tri::Trigraph read_input(const std::string& path) {
  if (path.empty() || path == "-") return tri::read_tri(std::cin);
  return tri::load_tri(path);
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw tri::InputError("cannot write " + out_path);
  out << text;
}

std::string list(tri::VertexSet s) {
  std::string out;
  for (int v : s) out += ' ' + std::to_string(v);
  return out;
}

std::vector<tri::Pair> parse_pairs(const std::string& text) {
  std::vector<tri::Pair> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto colon = item.find(':');
    if (colon == std::string::npos) throw tri::InputError("pair '" + item + "' is not of the form u:v");
    try {
      out.push_back({std::stoi(item.substr(0, colon)), std::stoi(item.substr(colon + 1))});
    } catch (const std::exception&) {
      throw tri::InputError("pair '" + item + "' is not of the form u:v");
    }
  }
  return out;
}

int cmd_classify(const std::string& path) {
  auto c = tri::classify(read_input(path));
  for (auto l : c.labels) std::cout << tri::label_name(l) << '\n';
  return kOk;
}

int cmd_decompose(const std::string& path, const std::string& out) {
  emit(tri::format_tree(tri::decompose(read_input(path))), out);
  return kOk;
}

int cmd_free_check(const std::string& path, const std::string& pattern, bool triangle_rims) {
  tri::Pattern p = tri::parse_pattern(pattern);
  auto w = tri::trigraph_is_free(read_input(path), p, tri::WheelOptions{triangle_rims ? 3 : 4});
  if (!w) {
    std::cout << "free\n";
    return kOk;
  }
  std::cout << tri::format_witness(*w);
  return kFound;
}

int cmd_cutset(const std::string& path, const std::string& kind) {
  tri::Trigraph g = read_input(path);
  std::optional<tri::CutsetReport> r;
  if (kind == "clique") {
    r = tri::find_clique_cutset(g);
  } else if (kind == "stable2") {
    r = tri::find_stable_2_cutset(g);
  } else {
    throw tri::InputError("--kind must be clique or stable2");
  }
  if (!r) {
    std::cout << "none\n";
    return kFound;
  }
  std::cout << tri::format_cutset(*r);
  return kOk;
}

int cmd_recognize(const std::string& path, const std::string& cls) {
  tri::Trigraph g = read_input(path);
  auto yes_no = [](bool b) { return b ? "yes" : "no"; };
  if (cls == "sp") {
    bool sp = tri::is_series_parallel(g);
    std::cout << (sp ? "series-parallel\n" : "not series-parallel\n");
    return sp ? kOk : kFound;
  }
  if (cls == "bipartite") {
    auto cb = tri::as_complete_bipartite(g);
    if (!cb) {
      std::cout << "none\n";
      return kFound;
    }
    std::cout << "complete-bipartite " << (cb->thick ? "thick" : "thin") << '\n'
              << "a" << list(cb->parts.a) << "\nb" << list(cb->parts.b) << '\n';
    return kOk;
  }
  if (cls == "prism") {
    auto p = tri::as_prism(g);
    if (!p) {
      std::cout << "none\n";
      return kFound;
    }
    std::cout << "prism\n";
    std::cout << "t1 " << p->t1[0] << ' ' << p->t1[1] << ' ' << p->t1[2] << '\n';
    std::cout << "t2 " << p->t2[0] << ' ' << p->t2[1] << ' ' << p->t2[2] << '\n';
    for (const auto& b : p->branches) {
      std::cout << "branch";
      for (int v : b.order) std::cout << ' ' << v;
      std::cout << '\n';
    }
    return kOk;
  }
  if (cls == "linetrigraph") {
    auto root = tri::as_line_trigraph(g);
    if (!root) {
      std::cout << "none\n";
      return kFound;
    }
    auto q = tri::qualify_root(root->h);
    std::cout << "line-trigraph\n"
              << "root " << tri::format_root(*root) << '\n'
              << "chordless " << yes_no(q.chordless) << '\n'
              << "cyclically-3-connected " << yes_no(q.cyclically_3_connected) << '\n'
              << "max-degree-3 " << yes_no(q.max_degree_3) << '\n';
    return kOk;
  }
  if (cls == "cyc3conn") {
    tri::SimpleGraph h(g);
    bool c3 = tri::is_cyclically_3_connected(h);
    std::cout << (c3 ? "cyclically-3-connected\n" : "not cyclically-3-connected\n")
              << "theta " << yes_no(tri::is_theta(h)) << '\n'
              << "subdivision-of-3-connected " << yes_no(tri::is_subdivision_of_3connected(h)) << '\n';
    return c3 ? kOk : kFound;
  }
  throw tri::InputError("--class must be one of sp, bipartite, prism, linetrigraph, cyc3conn");
}

struct GenerateArgs {
  std::string family;
  std::vector<double> params;
  std::string orient;
  std::string semi;
  std::uint64_t seed = 1;
  std::string out;
};

int as_int(double x) {
  if (x != static_cast<int>(x)) throw tri::InputError("parameter " + std::to_string(x) + " must be an integer");
  return static_cast<int>(x);
}

int cmd_generate(const GenerateArgs& a) {
  tri::Trigraph g;
  if (a.family == "random") {
    if (a.params.size() != 3) throw tri::InputError("random: expected n p_plus p_zero");
    g = tri::random_trigraph(as_int(a.params[0]), a.params[1], a.params[2], a.seed);
  } else if (a.family == "random-free") {
    if (a.params.size() != 1) throw tri::InputError("random-free: expected n");
    auto r = tri::random_free_trigraph(as_int(a.params[0]), {tri::Pattern::ISK4, tri::Pattern::Wheel}, a.seed);
    if (!r) throw tri::InputError("random-free: no free trigraph within the attempt budget");
    g = *r;
  } else if (a.family == "qualified-line") {
    if (!a.params.empty()) throw tri::InputError("qualified-line: takes no parameters");
    std::mt19937_64 rng(a.seed);
    g = tri::line_trigraph_of(tri::random_qualified_root(rng));
  } else {
    tri::FamilyParams p;
    for (double x : a.params) p.values.push_back(as_int(x));
    for (char c : a.orient) {
      if (c == ',') continue;
      if (c != '0' && c != '1') throw tri::InputError("--orient takes 0/1 values");
      p.orient.push_back(c - '0');
    }
    if (!a.semi.empty()) p.semi = parse_pairs(a.semi);
    g = tri::make_family(a.family, p);
  }
  emit(tri::format_tri(g), a.out);
  return kOk;
}

struct VerifyArgs {
  std::string id;
  int n = 0;
  int samples = tri::kDefaultSamples;
  std::uint64_t seed = 1;
  bool iso = false;
  bool labeled = false;
  bool triangle_rims = false;
};

int cmd_verify(const VerifyArgs& a) {
  tri::VerifyOptions o;
  if (a.n > 0) o.n = a.n;
  o.samples = a.samples;
  o.seed = a.seed;
  if (a.iso && a.labeled) throw tri::InputError("--iso and --labeled are exclusive");
  if (a.iso) o.modulo_iso = true;
  if (a.labeled) o.modulo_iso = false;
  o.triangle_rims = a.triangle_rims;
  auto r = tri::verify(a.id, o);
  std::cout << tri::format_report(r);
  return r.pass() ? kOk : kFound;
}

std::string families_help() {
  std::string s = "families:";
  for (const auto& f : tri::family_names()) s += ' ' + f;
  return s + " random random-free qualified-line";
}

std::string properties_help() {
  std::string s = "properties:";
  for (const auto& id : tri::property_ids()) s += ' ' + id;
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Trigraphs and the decomposition of {ISK4,wheel}-free trigraphs"};
  app.require_subcommand(1);

  std::string input;
  std::string out;

  auto* classify = app.add_subcommand("classify", "outcome labels, one per line");
  classify->add_option("file", input, ".tri file (stdin if omitted or -)");

  auto* decompose = app.add_subcommand("decompose", "decomposition tree as JSON");
  decompose->add_option("file", input, ".tri file (stdin if omitted or -)");
  decompose->add_option("--out", out, "output file");

  std::string pattern;
  bool triangle_rims = false;
  auto* free_check = app.add_subcommand("free-check", "witness or \"free\"");
  free_check->add_option("file", input, ".tri file (stdin if omitted or -)");
  free_check->add_option("--pattern", pattern, "isk4|wheel|diamond|k4|k33")->required();
  free_check->add_flag("--triangle-rims", triangle_rims, "wheels may have a rim of length 3");

  std::string kind;
  auto* cutset = app.add_subcommand("cutset", "clique-cutset or stable 2-cutset");
  cutset->add_option("file", input, ".tri file (stdin if omitted or -)");
  cutset->add_option("--kind", kind, "clique|stable2")->required();

  std::string cls;
  auto* recognize = app.add_subcommand("recognize", "run one recognizer");
  recognize->add_option("file", input, ".tri file (stdin if omitted or -)");
  recognize->add_option("--class", cls, "sp|bipartite|prism|linetrigraph|cyc3conn")->required();

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "write a named trigraph in .tri format");
  generate->footer(families_help());
  generate->add_option("family", gen.family, "family name")->required();
  generate->add_option("params", gen.params, "family parameters");
  generate->add_option("--orient", gen.orient, "long-rich-square link orientations, e.g. 0,1");
  generate->add_option("--semi", gen.semi, "semi-adjacent pairs, e.g. 0:1,2:5");
  generate->add_option("--seed", gen.seed, "seed for random families");
  generate->add_option("--out", gen.out, "output file");

  VerifyArgs ver;
  auto* verify = app.add_subcommand("verify", "machine-check one property");
  verify->footer(properties_help());
  verify->add_option("property", ver.id, "property id")->required();
  verify->add_option("--n", ver.n, "size bound");
  verify->add_option("--samples", ver.samples, "trials for sampled properties");
  verify->add_option("--seed", ver.seed, "base seed; trial i uses seed + i");
  verify->add_flag("--iso", ver.iso, "enumerate modulo isomorphism");
  verify->add_flag("--labeled", ver.labeled, "enumerate labeled trigraphs");
  verify->add_flag("--triangle-rims", ver.triangle_rims, "wheels may have a rim of length 3");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*classify) return cmd_classify(input);
    if (*decompose) return cmd_decompose(input, out);
    if (*free_check) return cmd_free_check(input, pattern, triangle_rims);
    if (*cutset) return cmd_cutset(input, kind);
    if (*recognize) return cmd_recognize(input, cls);
    if (*generate) return cmd_generate(gen);
    if (*verify) return cmd_verify(ver);
  } catch (const tri::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const tri::ConsistencyError& e) {
    std::cerr << "internal consistency error: " << e.what() << '\n';
    return 3;
  }
  return kUsage;
}
