#include "transversal/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "json.hpp"
#include "transversal/analysis.hpp"
#include "transversal/engine.hpp"
#include "transversal/instance_io.hpp"

namespace transversal::cli {

namespace {

// Carries an exit code out of a command body.
struct CommandFailure {
  int code;
  std::string message;
};

struct Settings {
  std::uint64_t budget = kDefaultTransversalBudget;
  bool serial = false;
  int threads = 0;
  bool stats = false;
};

Execution execution(const Settings& s) { return s.serial ? Execution::serial : Execution::parallel; }

BruteOptions brute_options(const Settings& s) { return {s.budget, execution(s)}; }
DcOptions dc_options(const Settings& s) {
  DcOptions o;
  o.execution = execution(s);
  return o;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string describe(const InstanceDocument& doc, const std::string& path) {
  std::ostringstream os;
  os << "instance: " << doc.name.value_or(path) << " (n=" << doc.instance.vertex_count()
     << ", r=" << doc.instance.r() << ", edges=" << doc.instance.edge_count()
     << ", loops=" << doc.instance.base().loop_count() << ")";
  return os.str();
}

void print_stats(std::ostream& out, const XiResult& res) {
  const auto& s = res.stats();
  out << "stats." << to_string(res.method()) << ": nodes=" << s.nodes << " leaves=" << s.leaves
      << " max_depth=" << s.max_depth << " wall_seconds=" << s.wall_seconds << "\n";
}

void print_poly(std::ostream& out, const IntPolynomial& p) {
  out << "coefficients: " << p.to_list_string() << "\n";
  out << "polynomial: " << p.to_human_string() << "\n";
  out << "degree: " << p.degree() << "\n";
  out << "constant_term: " << p.coeff(0) << "\n";
}

// Brute force when r^n fits the budget, otherwise contraction-deletion.
IntPolynomial oracle_or_dc(const CoverInstance& c, const Settings& s) {
  if (transversal_count(c) <= s.budget) return xi_brute(c, brute_options(s)).poly();
  return xi_dc(c, dc_options(s)).poly();
}

int cmd_xi(const std::string& path, const std::string& method, const Settings& s,
           std::ostream& out) {
  const auto doc = load_instance(path);
  const auto& c = doc.instance;
  out << describe(doc, path) << "\n";
  out << "method: " << method << "\n";
  std::optional<XiResult> brute;
  std::optional<XiResult> dc;
  if (method == "brute" || method == "both") brute = xi_brute(c, brute_options(s));
  if (method == "dc" || method == "both") dc = xi_dc(c, dc_options(s));

  int code = kOk;
  if (brute && dc && brute->poly() != dc->poly()) {
    out << "coefficients[brute]: " << brute->poly().to_list_string() << "\n";
    out << "coefficients[dc]: " << dc->poly().to_list_string() << "\n";
    out << "agreement: no\n";
    code = kCheckFailed;
  } else {
    print_poly(out, brute ? brute->poly() : dc->poly());
    if (brute && dc) out << "agreement: yes\n";
  }
  if (s.stats) {
    if (brute) print_stats(out, *brute);
    if (dc) print_stats(out, *dc);
  }
  return code;
}

int cmd_zeta(const std::string& path, const Settings& s, std::ostream& out) {
  const auto doc = load_instance(path);
  const auto z = zeta_brute(doc.instance, brute_options(s));
  out << describe(doc, path) << "\n";
  out << "zeta: " << z.to_human_string() << "\n";
  out << "terms:";
  for (const auto& [key, c] : z.terms()) out << " (" << key.first << "," << key.second << "):" << c;
  out << "\n";
  out << "zeta(t,1): " << z.specialize_s(1).to_list_string() << "\n";
  return kOk;
}

int cmd_eval(const std::string& path, const std::string& at, const Settings& s, std::ostream& out) {
  BigInt x;
  try {
    x = BigInt(at);
  } catch (const std::exception&) {
    throw CommandFailure{kUsage, "--at expects an integer, got '" + at + "'"};
  }
  const auto doc = load_instance(path);
  const auto xi = xi_dc(doc.instance, dc_options(s));
  out << describe(doc, path) << "\n";
  out << "xi(" << x << ") = " << xi.poly().eval(x) << "\n";
  return kOk;
}

bool verify_congruence(const CoverInstance& c, const IntPolynomial& xi, std::ostream& out) {
  const auto rep = check_congruence(c, xi);
  out << "congruence: xi(" << -BigInt(c.r() - 1) << ") = " << rep.value << ", r^n = " << rep.modulus
      << ", quotient " << rep.quotient << ": " << (rep.holds ? "PASS" : "FAIL") << "\n";
  if (rep.extended_applies) {
    out << "congruence.extended: constant term 0, modulus r^n(r-1) = " << rep.extended_modulus
        << ": " << (rep.extended_modulus_holds ? "PASS" : "FAIL") << "\n";
    return rep.holds && rep.extended_modulus_holds;
  }
  out << "congruence.extended: skipped (constant term nonzero)\n";
  return rep.holds;
}

bool verify_twofold(const CoverInstance& c, const IntPolynomial& xi, std::ostream& out) {
  const auto rep = check_two_fold(c, xi);
  out << "twofold: xi(-1) = " << rep.value << ", 2^n = " << rep.power
      << ", all valencies even: " << yes_no(rep.eulerian) << ", sign " << to_string(rep.sign)
      << ": " << (rep.consistent ? "PASS" : "FAIL") << "\n";
  return rep.consistent;
}

bool verify_tree(const CoverInstance& c, const IntPolynomial& xi, std::ostream& out) {
  if (!c.base().is_tree()) {
    out << "tree: skipped (base is not a tree)\n";
    return true;
  }
  const auto expected = tree_closed_form(c.vertex_count(), c.r());
  const bool ok = expected == xi;
  out << "tree: closed form " << expected.to_list_string() << ": " << (ok ? "PASS" : "FAIL") << "\n";
  return ok;
}

bool verify_recurrence(const CoverInstance& c, const IntPolynomial& xi, const Settings& s,
                       std::ostream& out) {
  bool all = true;
  std::size_t checked = 0;
  for (const auto& e : c.base().edges()) {
    if (e.is_loop()) continue;
    const auto rhs = t_minus_one() * oracle_or_dc(contract_edge(c, e.id), s) +
                     oracle_or_dc(delete_edge(c, e.id), s);
    const bool ok = rhs == xi;
    all = all && ok;
    ++checked;
    out << "recurrence: edge " << e.id << ": " << (ok ? "PASS" : "FAIL") << "\n";
  }
  if (checked == 0) out << "recurrence: skipped (no non-loop edge)\n";
  return all;
}

int cmd_verify(const std::string& path, const std::string& suite, const Settings& s,
               std::ostream& out) {
  const auto doc = load_instance(path);
  const auto& c = doc.instance;
  if (suite == "twofold" && c.r() != 2) {
    throw CommandFailure{kPrecondition, "the twofold suite requires r = 2, instance has r = " +
                                            std::to_string(c.r())};
  }
  out << describe(doc, path) << "\n";
  const IntPolynomial xi = oracle_or_dc(c, s);
  out << "xi: " << xi.to_list_string() << "\n";
  bool ok = true;
  if (suite == "congruence" || suite == "all") ok = verify_congruence(c, xi, out) && ok;
  if (suite == "twofold" || suite == "all") {
    if (c.r() == 2) {
      ok = verify_twofold(c, xi, out) && ok;
    } else {
      out << "twofold: skipped (r != 2)\n";
    }
  }
  if (suite == "tree" || suite == "all") ok = verify_tree(c, xi, out) && ok;
  if (suite == "recurrence" || suite == "all") ok = verify_recurrence(c, xi, s, out) && ok;
  out << "verdict: " << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? kOk : kCheckFailed;
}

void emit(const std::string& text, const std::string& output, std::ostream& out) {
  if (output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(output, std::ios::binary);
  if (!file) throw CommandFailure{kInputError, output + ": cannot write file"};
  file << text;
}

int cmd_expand(const std::string& path, const std::string& output, std::ostream& out) {
  const auto doc = load_instance(path);
  const auto x = expand(doc.instance);
  emit(serialize_expansion(doc, x), output, out);
  if (!output.empty()) {
    out << "expanded: " << x.graph.vertex_count() << " vertices, " << x.graph.edge_count()
        << " edges -> " << output << "\n";
  }
  return kOk;
}

int cmd_check_cover(const std::string& cover_path, const std::string& base_path,
                    const std::string& map_path, std::ostream& out) {
  const auto cover = load_graph(cover_path);
  const auto base = load_graph(base_path);
  const auto h = load_vertex_map(map_path, cover, base);
  const auto rep = validate_covering_map(cover.graph, base.graph, h);
  out << "covering_map: " << (rep.valid ? "valid" : "invalid") << "\n";
  if (!rep.valid) {
    out << "diagnostic: " << rep.diagnostic << "\n";
    return kCheckFailed;
  }
  const auto fibres = fibre_sizes(cover.graph, base.graph, h);
  for (const auto& [v, size] : fibres.sizes) {
    out << "fibre " << base.labels[base.graph.vertex_index(v)] << ": " << size << "\n";
  }
  out << "fibres_uniform_on_components: " << yes_no(fibres.uniform_on_components) << "\n";
  return kOk;
}

int cmd_gen(const GeneratorParams& p, bool tree, const std::string& output, std::ostream& out) {
  CoverInstance c;
  try {
    c = tree ? generate_random_tree(p.n, p.r, p.seed) : generate_random(p);
  } catch (const std::invalid_argument& e) {
    throw CommandFailure{kUsage, e.what()};
  }
  InstanceDocument doc = with_default_labels(c);
  nlohmann::json prov = {{"generator", tree ? "random-tree" : "random"},
                         {"n", p.n},
                         {"r", p.r},
                         {"seed", p.seed}};
  if (!tree) {
    prov["edges"] = p.edges;
    prov["loops"] = p.loops;
  }
  doc.provenance_json = prov.dump();
  doc.name = std::string(tree ? "tree" : "gen") + "-n" + std::to_string(p.n) + "-r" +
             std::to_string(p.r) + "-seed" + std::to_string(p.seed);
  emit(serialize(doc), output, out);
  return kOk;
}

int cmd_ug(const std::string& path, const std::string& eps_text, const std::string& delta_text,
           const Settings& s, std::ostream& out) {
  Rational eps;
  Rational delta;
  try {
    eps = Rational::parse(eps_text);
    delta = Rational::parse(delta_text);
  } catch (const std::invalid_argument& e) {
    throw CommandFailure{kUsage, e.what()};
  }
  const auto doc = load_instance(path);
  const auto xi = xi_dc(doc.instance, dc_options(s));
  UGReport rep;
  try {
    rep = ug_classify(doc.instance, xi.poly(), eps, delta);
  } catch (const std::invalid_argument& e) {
    throw CommandFailure{kUsage, e.what()};
  }
  out << describe(doc, path) << "\n";
  out << "max_satisfied: " << rep.max_satisfied << "\n";
  out << "total_edges: " << rep.total_edges << "\n";
  out << "case_a: " << yes_no(rep.case_a) << " (deg >= (1 - " << eps.to_string() << ") |E|)\n";
  out << "case_b: " << yes_no(rep.case_b) << " (deg <= " << delta.to_string() << " |E|)\n";
  const char* cls = rep.case_a ? (rep.case_b ? "both" : "a") : (rep.case_b ? "b" : "neither");
  out << "classification: " << cls << "\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Transversal polynomials of graph covers"};
  app.name("transversal");
  app.require_subcommand(1);
  app.fallthrough();

  Settings settings;
  app.add_option("--budget", settings.budget, "Maximum transversals for brute-force enumeration");
  app.add_flag("--serial", settings.serial, "Run kernels without OpenMP");
  app.add_option("--threads", settings.threads, "OpenMP thread count (0 = runtime default)");

  std::string file;
  std::string method = "dc";
  auto* xi = app.add_subcommand("xi", "Transversal polynomial of an instance");
  xi->add_option("file", file, "Instance document")->required();
  xi->add_option("--method", method, "brute, dc or both")
      ->check(CLI::IsMember({"brute", "dc", "both"}));
  xi->add_flag("--stats", settings.stats, "Print engine counters");

  auto* zeta = app.add_subcommand("zeta", "Bivariate edge/component polynomial");
  zeta->add_option("file", file)->required();

  std::string at;
  auto* eval = app.add_subcommand("eval", "Evaluate xi at an integer");
  eval->add_option("file", file)->required();
  eval->add_option("--at", at, "Integer point")->required();

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "Check the identities xi must satisfy");
  verify->add_option("file", file)->required();
  verify->add_option("--suite", suite)
      ->check(CLI::IsMember({"congruence", "twofold", "tree", "recurrence", "all"}));

  std::string output;
  auto* expand_cmd = app.add_subcommand("expand", "Emit the explicit cover with fibre annotations");
  expand_cmd->add_option("file", file)->required();
  expand_cmd->add_option("-o,--output", output, "Output file (default stdout)");

  std::string cover_path;
  std::string base_path;
  std::string map_path;
  auto* check = app.add_subcommand("check-cover", "Validate a covering map");
  check->add_option("coverfile", cover_path)->required();
  check->add_option("basefile", base_path)->required();
  check->add_option("mapfile", map_path)->required();

  GeneratorParams params;
  bool tree = false;
  auto* gen = app.add_subcommand("gen", "Generate a seeded random instance");
  gen->add_option("--n", params.n)->required();
  gen->add_option("--r", params.r)->required();
  gen->add_option("--edges", params.edges);
  gen->add_option("--loops", params.loops);
  gen->add_option("--seed", params.seed)->required();
  gen->add_flag("--tree", tree, "Random labelled tree on n vertices (ignores --edges/--loops)");
  gen->add_option("-o,--output", output);

  std::string eps;
  std::string delta;
  auto* ug = app.add_subcommand("ug", "Unique Games view: optimum and gap classification");
  ug->add_option("file", file)->required();
  ug->add_option("--eps", eps, "p/q in (0,1)")->required();
  ug->add_option("--delta", delta, "p/q in (0,1)")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

#ifdef _OPENMP
  if (settings.threads > 0) omp_set_num_threads(settings.threads);
#endif

  try {
    if (*xi) return cmd_xi(file, method, settings, out);
    if (*zeta) return cmd_zeta(file, settings, out);
    if (*eval) return cmd_eval(file, at, settings, out);
    if (*verify) return cmd_verify(file, suite, settings, out);
    if (*expand_cmd) return cmd_expand(file, output, out);
    if (*check) return cmd_check_cover(cover_path, base_path, map_path, out);
    if (*gen) return cmd_gen(params, tree, output, out);
    if (*ug) return cmd_ug(file, eps, delta, settings, out);
  } catch (const CommandFailure& f) {
    err << "error: " << f.message << "\n";
    return f.code;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << " (raise --budget or use --method dc)\n";
    return kBudgetExceeded;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kUsage;
}

}  // namespace transversal::cli
