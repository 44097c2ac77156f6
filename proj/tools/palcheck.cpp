// palcheck: command-line front end for the palette-certificate toolkit.
//
// Exit codes (uniform across subcommands):
//   0  verified / witness found
//   1  definitive negative
//   2  unknown / budget exhausted / refused enumeration
//   3  input error
// A JSON report (envelope: tool, version, command, config, result) is
// written to --report PATH for every run that exits 0, 1, or 2; --json
// additionally prints the same report to stdout. Identical inputs and
// seeds produce byte-identical reports.

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "palcheck/certify.hpp"
#include "palcheck/colorability.hpp"
#include "palcheck/errors.hpp"
#include "palcheck/families.hpp"
#include "palcheck/hom.hpp"
#include "palcheck/json_io.hpp"
#include "palcheck/kgraph.hpp"
#include "palcheck/oracles.hpp"
#include "palcheck/palette.hpp"
#include "palcheck/rational.hpp"
#include "palcheck/reduced.hpp"
#include "palcheck/report.hpp"
#include "palcheck/uniform.hpp"
#include "palcheck/version.hpp"

namespace {

using namespace palcheck;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitInput = 3;

constexpr uint64_t kDefaultBudget = 50'000'000;
constexpr uint64_t kDefaultSeed = 20260815;

struct Common {
  std::string report_path;
  bool json = false;
  uint64_t seed = kDefaultSeed;
  uint64_t budget = kDefaultBudget;
};

// Writes the report file (when requested) and prints either the full
// JSON report (--json) or the human line.
void emit(const Common& c, const std::string& command, const Json& config,
          const Json& result, const std::string& human) {
  const Json rep = report_envelope(command, config, result);
  if (!c.report_path.empty()) write_report_file(c.report_path, rep);
  if (c.json) {
    std::cout << render_report(rep);
  } else if (!human.empty()) {
    std::cout << human << "\n";
  }
}

// Prints a palette either to --out (as a bare palette document) or, with
// neither --out nor --json, to stdout.
void emit_palette(const Common& c, const std::string& command,
                  const Json& config, const Palette& p,
                  const std::string& out_path) {
  const Json doc = palette_to_json(p);
  Json result;
  result["palette"] = doc;
  result["density"] = rational_str(density(p));
  if (!out_path.empty()) {
    save_text_file(out_path, doc.dump(2) + "\n");
    emit(c, command, config, result, "wrote " + out_path);
  } else {
    emit(c, command, config, result, c.json ? "" : doc.dump(2));
  }
}

uint64_t env_default_budget() {
  const char* env = std::getenv("PALCHECK_BUDGET");
  if (env == nullptr || *env == '\0') return kDefaultBudget;
  const std::string text(env);
  if (text.find_first_not_of("0123456789") != std::string::npos) {
    throw InputError("PALCHECK_BUDGET: expected a nonnegative integer, got '" +
                     text + "'");
  }
  return std::stoull(text);
}

int decision_exit(Decision d) {
  switch (d) {
    case Decision::witness: return kExitOk;
    case Decision::none: return kExitNegative;
    case Decision::unknown: return kExitUnknown;
  }
  return kExitUnknown;
}

struct PaletteCmd {
  std::string input;
  std::vector<std::string> inputs;  // product only
  std::string out;
  std::string action;
};

int run_palette(const Common& c, const PaletteCmd& cmd) {
  Json config;
  config["action"] = cmd.action;
  if (cmd.action == "density") {
    const Palette p = palette_from_json(load_json_file(cmd.input));
    config["input"] = cmd.input;
    Json result;
    result["density"] = rational_str(density(p));
    result["num_colors"] = p.num_colors;
    result["num_tuples"] = p.tuples.size();
    emit(c, "palette density", config, result, rational_str(density(p)));
    return kExitOk;
  }
  if (cmd.action == "product") {
    config["inputs"] = cmd.inputs;
    if (!cmd.out.empty()) config["out"] = cmd.out;
    std::vector<Palette> factors;
    for (const std::string& path : cmd.inputs) {
      factors.push_back(palette_from_json(load_json_file(path)));
    }
    emit_palette(c, "palette product", config, product(factors), cmd.out);
    return kExitOk;
  }
  const Palette p = palette_from_json(load_json_file(cmd.input));
  config["input"] = cmd.input;
  if (!cmd.out.empty()) config["out"] = cmd.out;
  if (cmd.action == "reverse") {
    emit_palette(c, "palette reverse", config, reverse_palette(p), cmd.out);
    return kExitOk;
  }
  if (cmd.action == "symmetrize") {
    emit_palette(c, "palette symmetrize", config, symmetrize(p), cmd.out);
    return kExitOk;
  }
  // canon
  emit_palette(c, "palette canon", config, canonical_form(p).palette,
               cmd.out);
  return kExitOk;
}

struct HomCmd {
  std::string src, dst;
};

int run_hom(const Common& c, const HomCmd& cmd) {
  const Palette src = palette_from_json(load_json_file(cmd.src));
  const Palette dst = palette_from_json(load_json_file(cmd.dst));
  const HomResult h = hom_exists(src, dst, c.budget);
  Json config;
  config["src"] = cmd.src;
  config["dst"] = cmd.dst;
  config["budget"] = c.budget;
  std::string human;
  switch (h.status) {
    case HomStatus::witness: {
      human = "witness:";
      for (size_t i = 0; i < h.map.size(); ++i) {
        human += " " + src.labels[i] + "->" +
                 dst.labels[static_cast<size_t>(h.map[i])];
      }
      break;
    }
    case HomStatus::none: human = "none"; break;
    case HomStatus::unknown: human = "unknown (budget exhausted)"; break;
  }
  emit(c, "hom", config, hom_result_json(src, dst, h), human);
  switch (h.status) {
    case HomStatus::witness: return kExitOk;
    case HomStatus::none: return kExitNegative;
    case HomStatus::unknown: return kExitUnknown;
  }
  return kExitUnknown;
}

struct ColorableCmd {
  std::string graph, palette;
};

int run_colorable(const Common& c, const ColorableCmd& cmd) {
  const KGraphDoc doc = kgraph_from_json(load_json_file(cmd.graph));
  const Palette p = palette_from_json(load_json_file(cmd.palette));
  Json config;
  config["graph"] = cmd.graph;
  config["palette"] = cmd.palette;
  config["budget"] = c.budget;
  if (doc.order.has_value()) {
    const OrderedColorResult res =
        is_ordered_colorable(doc.graph, *doc.order, p, c.budget);
    const std::string human =
        res.decision == Decision::witness
            ? "colorable under the given order"
            : res.decision == Decision::none ? "not colorable under the given order"
                                             : "unknown (budget exhausted)";
    emit(c, "colorable", config, ordered_color_result_json(p, res), human);
    return decision_exit(res.decision);
  }
  const std::optional<uint64_t> budget =
      c.budget == 0 ? std::nullopt : std::optional<uint64_t>(c.budget);
  const ColorResult res = is_colorable(doc.graph, p, budget);
  std::string human;
  if (res.decision == Decision::witness) {
    human = "colorable; order:";
    for (int v : res.order) human += " " + std::to_string(v);
  } else {
    human = res.decision == Decision::none ? "not colorable"
                                           : "unknown (budget exhausted)";
  }
  emit(c, "colorable", config, color_result_json(p, res), human);
  return decision_exit(res.decision);
}

struct ReducedCmd {
  std::string action;
  std::string palette, reduced, graph, out;
  int m = 0, s = 0;
  std::string d = "0/1", epsilon = "0/1";
};

int run_reduced(const Common& c, const ReducedCmd& cmd) {
  Json config;
  config["action"] = cmd.action;
  if (cmd.action == "build") {
    const Palette p = palette_from_json(load_json_file(cmd.palette));
    config["palette"] = cmd.palette;
    config["m"] = cmd.m;
    const ReducedKGraph a = from_palette(p, cmd.m);
    const Json doc = reduced_to_json(a);
    Json result;
    result["reduced"] = doc;
    result["min_constituent_density"] =
        rational_str(min_constituent_density(a));
    if (!cmd.out.empty()) {
      config["out"] = cmd.out;
      save_text_file(cmd.out, doc.dump(2) + "\n");
      emit(c, "reduced build", config, result, "wrote " + cmd.out);
    } else {
      emit(c, "reduced build", config, result, c.json ? "" : doc.dump(2));
    }
    return kExitOk;
  }
  if (cmd.action == "embed") {
    const ReducedKGraph a = reduced_from_json(load_json_file(cmd.reduced));
    const KGraphDoc doc = kgraph_from_json(load_json_file(cmd.graph));
    config["reduced"] = cmd.reduced;
    config["graph"] = cmd.graph;
    const std::optional<ReducedMap> m = embeds(a, doc.graph);
    Json result;
    result["embedded"] = m.has_value();
    if (m.has_value()) {
      if (!check_reduced_map(a, doc.graph, *m)) {
        throw std::logic_error("embeds returned an invalid reduced map");
      }
      result["map"] = reduced_map_json(*m);
    } else {
      result["map"] = nullptr;
    }
    emit(c, "reduced embed", config, result,
         m.has_value() ? "embeddable" : "no reduced map exists");
    return m.has_value() ? kExitOk : kExitNegative;
  }
  if (cmd.action == "dense") {
    const ReducedKGraph a = reduced_from_json(load_json_file(cmd.reduced));
    const Rational d = parse_rational(cmd.d);
    config["reduced"] = cmd.reduced;
    config["d"] = rational_str(d);
    const DenseCheck check = is_d_dense(a, d);
    emit(c, "reduced dense", config, dense_check_json(check),
         check.dense ? "dense" : "not dense");
    return check.dense ? kExitOk : kExitNegative;
  }
  // contract
  const ReducedKGraph a = reduced_from_json(load_json_file(cmd.reduced));
  const Rational eps = parse_rational(cmd.epsilon);
  config["reduced"] = cmd.reduced;
  config["m"] = cmd.m;
  config["s"] = cmd.s;
  config["epsilon"] = rational_str(eps);
  config["seed"] = c.seed;
  config["budget"] = c.budget;
  const ContractResult res = contract(a, cmd.m, cmd.s, eps, c.seed, c.budget);
  emit(c, "reduced contract", config, contract_result_json(res),
       res.found ? "selection found (min density " +
                       rational_str(res.achieved_min) + ")"
                 : "no selection found within budget");
  return res.found ? kExitOk : kExitUnknown;
}

struct SampleCmd {
  std::string palette, out;
  int n = 0;
};

int run_sample(const Common& c, const SampleCmd& cmd) {
  const Palette p = palette_from_json(load_json_file(cmd.palette));
  const SampledHypergraph s = sample_hypergraph(p, cmd.n, c.seed);
  Json doc = kgraph_to_json(s.graph);
  doc["coloring"] = shadow_coloring_json(p, s.coloring);
  save_text_file(cmd.out, doc.dump(2) + "\n");
  Json config;
  config["palette"] = cmd.palette;
  config["n"] = cmd.n;
  config["seed"] = c.seed;
  config["out"] = cmd.out;
  Json result;
  result["n"] = s.graph.n;
  result["edges"] = s.graph.edges.size();
  emit(c, "sample", config, result,
       "sampled " + std::to_string(s.graph.edges.size()) + " edges -> " +
           cmd.out);
  return kExitOk;
}

struct UdenseCmd {
  std::string graph, d, mu;
  std::string mode = "exhaustive";
};

int run_udense(const Common& c, const UdenseCmd& cmd) {
  const KGraphDoc doc = kgraph_from_json(load_json_file(cmd.graph));
  const Rational d = parse_rational(cmd.d);
  const Rational mu = parse_rational(cmd.mu);
  DensityMode mode;
  if (cmd.mode == "exhaustive") {
    mode = DensityMode::exhaustive;
  } else if (cmd.mode == "sampled") {
    mode = DensityMode::sampled;
  } else if (cmd.mode == "adversarial") {
    mode = DensityMode::adversarial;
  } else {
    throw InputError("--mode: expected exhaustive|sampled|adversarial, got '" +
                     cmd.mode + "'");
  }
  Json config;
  config["graph"] = cmd.graph;
  config["d"] = rational_str(d);
  config["mu"] = rational_str(mu);
  config["mode"] = cmd.mode;
  config["seed"] = c.seed;
  config["budget"] = c.budget;
  const DensityReport rep =
      check_uniform_density(doc.graph, d, mu, mode, c.seed, c.budget);
  std::string human;
  int code;
  if (!rep.ok) {
    human = "violated (" + std::to_string(rep.violations.size()) +
            " violating test graph(s))";
    code = kExitNegative;
  } else if (rep.exhaustive) {
    human = "dense (all " + std::to_string(rep.checked) +
            " test graphs verified)";
    code = kExitOk;
  } else {
    human = "no violation found (" + std::to_string(rep.checked) +
            " test graphs; not exhaustive, cannot certify)";
    code = kExitUnknown;
  }
  emit(c, "udense", config, density_report_json(rep), human);
  return code;
}

struct CertifyCmd {
  std::string theorem;
  int k = 0, r = 0, max_colors = 2;
};

int run_certify(const Common& c, const CertifyCmd& cmd) {
  const CertificateReport rep =
      verify_theorem(cmd.theorem, cmd.k, cmd.r, cmd.max_colors);
  Json config;
  config["theorem"] = cmd.theorem;
  config["k"] = cmd.k;
  config["r"] = cmd.r;
  config["max_colors"] = cmd.max_colors;
  std::string human;
  for (const CheckResult& check : rep.checks) {
    human += verdict_string(check.verdict) + "  " + check.condition + ": " +
             check.subject + "\n";
  }
  human += "bundle " + rep.theorem + ": " + verdict_string(rep.verdict);
  emit(c, "certify", config, certificate_report_json(rep), human);
  switch (rep.verdict) {
    case Verdict::pass: return kExitOk;
    case Verdict::fail: return kExitNegative;
    case Verdict::unknown: return kExitUnknown;
  }
  return kExitUnknown;
}

struct OracleCmd {
  std::string action;
  int n = 0, r = 2, len = 5;
};

int run_oracle(const Common& c, const OracleCmd& cmd) {
  Json config;
  config["action"] = cmd.action;
  if (cmd.action == "es") {
    if (cmd.len < 1 || cmd.len > 8) {
      throw InputError("--len: supported range is 1..8");
    }
    config["len"] = cmd.len;
    std::vector<Rational> seq;
    for (int i = 1; i <= cmd.len; ++i) seq.push_back(i);
    uint64_t count = 0;
    long long min_product = -1;
    bool all_hold = true;
    std::vector<int> order(static_cast<size_t>(cmd.len));
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    do {
      std::vector<Rational> cur;
      for (int i : order) cur.push_back(seq[static_cast<size_t>(i)]);
      const auto [inc, dec] = longest_monotone(cur);
      const long long product = 1LL * inc * dec;
      if (min_product < 0 || product < min_product) min_product = product;
      if (product < cmd.len) all_hold = false;
      ++count;
    } while (std::next_permutation(order.begin(), order.end()));
    Json result;
    result["length"] = cmd.len;
    result["permutations"] = count;
    result["min_product"] = min_product;
    result["all_hold"] = all_hold;
    emit(c, "oracle es", config, result,
         all_hold ? "guarantee holds for all " + std::to_string(count) +
                        " permutations (min inc*dec = " +
                        std::to_string(min_product) + ")"
                  : "GUARANTEE VIOLATED");
    return all_hold ? kExitOk : kExitNegative;
  }
  config["n"] = cmd.n;
  config["r"] = cmd.r;
  const ArcOracleResult res = cmd.action == "tt"
                                  ? oracle_max_arcs_no_TT(cmd.n, cmd.r)
                                  : oracle_max_arcs_no_walk(cmd.n, cmd.r);
  const bool holds = Rational(res.max_arcs) <= res.bound;
  Json result = arc_oracle_json(res);
  result["holds"] = holds;
  emit(c, std::string("oracle ") + cmd.action, config, result,
       "max arcs " + std::to_string(res.max_arcs) + " <= bound " +
           rational_str(res.bound) + (holds ? "" : "  VIOLATED"));
  return holds ? kExitOk : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
  Common common;
  try {
    common.budget = env_default_budget();
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  }

  CLI::App app{"exact verification toolkit for k-palette certificates"};
  app.require_subcommand(1);
  app.set_version_flag("--version",
                       std::string(kToolName) + " " + kToolVersion);
  app.add_option("--report", common.report_path,
                 "write the JSON report to this path");
  app.add_flag("--json", common.json, "print the JSON report to stdout");
  app.add_option("--seed", common.seed,
                 "seed for randomized operations (default 20260815)");
  app.add_option("--budget", common.budget,
                 "node/evaluation budget, 0 = unlimited (default "
                 "50000000; env PALCHECK_BUDGET overrides)");

  PaletteCmd pal_cmd;
  CLI::App* pal = app.add_subcommand("palette", "palette algebra");
  pal->require_subcommand(1);
  pal->fallthrough();
  const auto add_pal_sub = [&](const std::string& name,
                               const std::string& desc, bool with_out) {
    CLI::App* sub = pal->add_subcommand(name, desc);
    sub->fallthrough();
    sub->add_option("input", pal_cmd.input, "palette JSON file")
        ->required()
        ->check(CLI::ExistingFile);
    if (with_out) {
      sub->add_option("--out", pal_cmd.out, "output palette JSON file");
    }
    return sub;
  };
  add_pal_sub("density", "exact density |T| / |C|^k", false);
  add_pal_sub("reverse", "reverse every tuple", true);
  add_pal_sub("symmetrize", "pattern-tagged symmetrization", true);
  add_pal_sub("canon", "canonical relabeling (|C| <= 8)", true);
  CLI::App* pal_product =
      pal->add_subcommand("product", "coordinatewise product");
  pal_product->fallthrough();
  pal_product->add_option("inputs", pal_cmd.inputs, "palette JSON files")
      ->required()
      ->expected(1, -1)
      ->check(CLI::ExistingFile);
  pal_product->add_option("--out", pal_cmd.out, "output palette JSON file");

  HomCmd hom_cmd;
  CLI::App* hom = app.add_subcommand(
      "hom", "search for a palette homomorphism src -> dst");
  hom->fallthrough();
  hom->add_option("--src", hom_cmd.src, "source palette JSON")
      ->required()
      ->check(CLI::ExistingFile);
  hom->add_option("--dst", hom_cmd.dst, "target palette JSON")
      ->required()
      ->check(CLI::ExistingFile);

  ColorableCmd col_cmd;
  CLI::App* col = app.add_subcommand(
      "colorable",
      "decide palette colorability of a k-graph (ordered when the "
      "document carries an order)");
  col->fallthrough();
  col->add_option("--graph", col_cmd.graph, "k-graph JSON")
      ->required()
      ->check(CLI::ExistingFile);
  col->add_option("--palette", col_cmd.palette, "palette JSON")
      ->required()
      ->check(CLI::ExistingFile);

  ReducedCmd red_cmd;
  CLI::App* red = app.add_subcommand("reduced", "reduced k-graphs");
  red->require_subcommand(1);
  red->fallthrough();
  CLI::App* red_build =
      red->add_subcommand("build", "canonical reduced graph of a palette");
  red_build->fallthrough();
  red_build->add_option("--palette", red_cmd.palette, "palette JSON")
      ->required()
      ->check(CLI::ExistingFile);
  red_build->add_option("--m", red_cmd.m, "index set size")->required();
  red_build->add_option("--out", red_cmd.out, "output reduced-graph JSON");
  CLI::App* red_embed =
      red->add_subcommand("embed", "reduced-map embedding of a k-graph");
  red_embed->fallthrough();
  red_embed->add_option("--reduced", red_cmd.reduced, "reduced-graph JSON")
      ->required()
      ->check(CLI::ExistingFile);
  red_embed->add_option("--graph", red_cmd.graph, "k-graph JSON")
      ->required()
      ->check(CLI::ExistingFile);
  CLI::App* red_dense =
      red->add_subcommand("dense", "exact d-density check");
  red_dense->fallthrough();
  red_dense->add_option("--reduced", red_cmd.reduced, "reduced-graph JSON")
      ->required()
      ->check(CLI::ExistingFile);
  red_dense->add_option("--d", red_cmd.d, "density threshold num/den")
      ->required();
  CLI::App* red_contract = red->add_subcommand(
      "contract", "search a density-preserving contraction");
  red_contract->fallthrough();
  red_contract
      ->add_option("--reduced", red_cmd.reduced, "reduced-graph JSON")
      ->required()
      ->check(CLI::ExistingFile);
  red_contract->add_option("--m", red_cmd.m, "sub-index-set size")
      ->required();
  red_contract->add_option("--s", red_cmd.s, "multiset size per class")
      ->required();
  red_contract->add_option("--epsilon", red_cmd.epsilon,
                           "allowed density loss num/den");

  SampleCmd sample_cmd;
  CLI::App* sample = app.add_subcommand(
      "sample", "draw a colorable k-graph from a palette");
  sample->fallthrough();
  sample->add_option("--palette", sample_cmd.palette, "palette JSON")
      ->required()
      ->check(CLI::ExistingFile);
  sample->add_option("--n", sample_cmd.n, "vertex count")->required();
  sample->add_option("--out", sample_cmd.out, "output k-graph JSON")
      ->required();

  UdenseCmd udense_cmd;
  CLI::App* udense = app.add_subcommand(
      "udense", "uniform-density check against (k-2)-uniform test graphs");
  udense->fallthrough();
  udense->add_option("--graph", udense_cmd.graph, "k-graph JSON")
      ->required()
      ->check(CLI::ExistingFile);
  udense->add_option("--d", udense_cmd.d, "density d as num/den")
      ->required();
  udense->add_option("--mu", udense_cmd.mu, "slack mu as num/den")
      ->required();
  udense->add_option("--mode", udense_cmd.mode,
                     "exhaustive|sampled|adversarial");

  CertifyCmd certify_cmd;
  CLI::App* certify = app.add_subcommand(
      "certify", "re-verify a certified density value end to end");
  certify->fallthrough();
  certify
      ->add_option("--theorem", certify_cmd.theorem,
                   "bundle id (thm1_4_case1..thm1_4_case6, thm1_5_k3, "
                   "thm1_5_k4)")
      ->required();
  certify->add_option("--k", certify_cmd.k, "tuple arity");
  certify->add_option("--r", certify_cmd.r, "family parameter r");
  certify->add_option("--max-colors", certify_cmd.max_colors,
                      "bounded (A2) sweep color cap (default 2)");

  OracleCmd oracle_cmd;
  CLI::App* oracle =
      app.add_subcommand("oracle", "brute-force extremal oracles");
  oracle->require_subcommand(1);
  oracle->fallthrough();
  CLI::App* oracle_tt = oracle->add_subcommand(
      "tt", "max arcs without a transitive tournament on r+1 vertices");
  oracle_tt->fallthrough();
  oracle_tt->add_option("--n", oracle_cmd.n, "vertex count (<= 5)")
      ->required();
  oracle_tt->add_option("--r", oracle_cmd.r, "tournament parameter");
  CLI::App* oracle_walk = oracle->add_subcommand(
      "walk", "max arcs without a directed walk of length r");
  oracle_walk->fallthrough();
  oracle_walk->add_option("--n", oracle_cmd.n, "vertex count (<= 5)")
      ->required();
  oracle_walk->add_option("--r", oracle_cmd.r, "walk length");
  CLI::App* oracle_es = oracle->add_subcommand(
      "es", "longest-monotone guarantee over all permutations");
  oracle_es->fallthrough();
  oracle_es->add_option("--len", oracle_cmd.len,
                        "permutation length (<= 8, default 5)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return kExitInput;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (pal->parsed()) {
      pal_cmd.action = pal->get_subcommands().front()->get_name();
      return run_palette(common, pal_cmd);
    }
    if (hom->parsed()) return run_hom(common, hom_cmd);
    if (col->parsed()) return run_colorable(common, col_cmd);
    if (red->parsed()) {
      red_cmd.action = red->get_subcommands().front()->get_name();
      return run_reduced(common, red_cmd);
    }
    if (sample->parsed()) return run_sample(common, sample_cmd);
    if (udense->parsed()) return run_udense(common, udense_cmd);
    if (certify->parsed()) return run_certify(common, certify_cmd);
    if (oracle->parsed()) {
      oracle_cmd.action = oracle->get_subcommands().front()->get_name();
      return run_oracle(common, oracle_cmd);
    }
    std::cerr << "input error: unhandled subcommand\n";
    return kExitInput;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const InfeasibleError& e) {
    // A refusal is an inconclusive outcome, not an input error: the
    // report records why nothing was decided.
    Json result;
    result["refused"] = e.what();
    emit(common, command, Json::object(), result,
         std::string("refused: ") + e.what());
    return kExitUnknown;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInput;
  }
}
