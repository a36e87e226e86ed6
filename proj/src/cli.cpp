#include "ordstat/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "ordstat/corpus.hpp"
#include "ordstat/error.hpp"
#include "ordstat/groupdoc.hpp"
#include "ordstat/lattice.hpp"
#include "ordstat/order_stats.hpp"
#include "ordstat/scan.hpp"

namespace ordstat {

namespace {

struct CommonOptions {
  std::string output = "table";
  std::optional<uint64_t> enum_cap;
  std::optional<uint64_t> class_cap;
};

struct GroupSelection {
  std::string named;
  std::string group_path;
  std::optional<uint64_t> n, p, s, r, order;
};

void add_common(CLI::App* cmd, CommonOptions& common) {
  cmd->add_option("--output", common.output, "report format: table or json")
      ->check(CLI::IsMember({"table", "json"}));
  cmd->add_option("--enum-cap", common.enum_cap, "override the enumeration cap");
  cmd->add_option("--class-cap", common.class_cap, "override the class-count cap");
}

void add_group_selection(CLI::App* cmd, GroupSelection& sel) {
  cmd->add_option("--named", sel.named, "built-in group name");
  cmd->add_option("--group", sel.group_path, "path to a group description document");
  cmd->add_option("--n", sel.n, "size parameter (cyclic, dihedral, symmetric, alternating)");
  cmd->add_option("--p", sel.p, "prime parameter");
  cmd->add_option("--s", sel.s, "exponent parameter");
  cmd->add_option("--r", sel.r, "rank parameter");
  cmd->add_option("--order", sel.order, "order parameter (generalized-quaternion)");
}

FiniteGroup select_group(const GroupSelection& sel) {
  if (!sel.named.empty() && !sel.group_path.empty())
    throw ParameterError("give either --named or --group, not both");
  if (!sel.named.empty()) {
    NamedParams params{sel.n, sel.p, sel.s, sel.r, sel.order};
    return make_named_group(sel.named, params);
  }
  if (!sel.group_path.empty()) return load_group_document(sel.group_path);
  throw ParameterError("a group is required: --named <name> or --group <file>");
}

RepresentationDoc resolve_representation(const std::string& rep) {
  if (rep.empty() || rep == "builtin:q8") return builtin_q8_representation();
  return load_representation_doc(rep);
}

Report stats_report(const FiniteGroup& g, std::optional<uint64_t> class_cap) {
  Report r;
  r.claim = "stats";
  r.params["group"] = g.name().empty() ? "<document>" : g.name();
  OrderSpectrum spec = order_spectrum(g);
  r.quantities["order"] = std::to_string(g.order());
  r.quantities["spectrum"] = spec.to_string();
  r.quantities["psi"] = psi(spec).get_str();
  r.quantities["o"] = rational_str(average_order(spec));
  r.quantities["exponent"] = std::to_string(exponent(spec));
  r.quantities["max_order"] = std::to_string(max_order(spec));
  uint64_t cap = class_cap.value_or(default_caps().class_count);
  if (g.order() <= cap) {
    r.quantities["k"] = std::to_string(conjugacy_class_count(g, cap));
  } else {
    r.notes.push_back("class count skipped: group order exceeds the class-count cap of " +
                      std::to_string(cap));
  }
  return r;
}

Report construct_report(const ConstructionResult& cr) {
  Report r;
  r.claim = "construct";
  r.params["p"] = std::to_string(cr.doc.p);
  r.params["s"] = std::to_string(cr.semidirect.s());
  r.quantities["dim"] = std::to_string(cr.doc.dim);
  r.quantities["rank"] = std::to_string(cr.semidirect.rank());
  r.quantities["basis"] = cr.basis.to_string();
  r.quantities["acting_group_order"] = std::to_string(cr.semidirect.context->actor->order());
  r.quantities["frattini_order"] = std::to_string(cr.semidirect.actor_frattini.size());
  r.quantities["group_order"] = std::to_string(cr.semidirect.order());
  r.quantities["shell_order"] =
      std::to_string(to_u64(int_pow(BigInt(static_cast<unsigned long>(cr.semidirect.modulus())),
                                    cr.semidirect.rank()) *
                            BigInt(static_cast<unsigned long>(cr.semidirect.actor_frattini.size()))));
  for (size_t i = 0; i < cr.restricted.size(); ++i)
    r.quantities["action_matrix_" + std::to_string(i)] = cr.restricted[i].to_string();
  for (auto& c : cr.central.as_checks()) r.checks.push_back(c);
  return r;
}

Report secretive_to_report(const SecretiveReport& s, const std::string& label) {
  Report r;
  r.claim = "secretive-check";
  r.params["group"] = label;
  r.params["p"] = std::to_string(s.p);
  r.quantities["group_order"] = std::to_string(s.group_order);
  r.quantities["frattini_order"] = std::to_string(s.frattini_order);
  r.quantities["rank"] = std::to_string(s.rank);
  if (s.z) r.quantities["z"] = s.z->to_string();
  r.add_check("frattini-exponent-p", s.frattini_exponent_ok,
              "the Frattini subgroup has exponent p (or is trivial)");
  r.add_check("rank-equals-p", s.rank_equals_p,
              "rank " + std::to_string(s.rank) + " vs p = " + std::to_string(s.p));
  r.add_check("outside-orders-p2", s.outside_orders_ok,
              "every element outside the Frattini subgroup has order exactly p^2");
  r.add_check("powers-central-cyclic", s.powers_central_cyclic_ok,
              "p-th powers fill one central cyclic subgroup of order p equal to the "
              "subgroup generated by all p-th powers");
  return r;
}

int emit(const Report& r, const CommonOptions& common, std::ostream& out) {
  if (common.output == "json") {
    out << report_json(r).dump(2) << "\n";
  } else {
    out << report_table(r);
  }
  return r.passed() ? 0 : 1;
}

uint64_t env_cap(const char* name, uint64_t fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  char* end = nullptr;
  unsigned long long parsed = std::strtoull(v, &end, 10);
  if (end == v || *end != '\0' || parsed == 0) return fallback;
  return parsed;
}

void apply_caps(const CommonOptions& common) {
  Caps caps;
  caps.enumeration = env_cap("ORDSTAT_ENUM_CAP", caps.enumeration);
  caps.class_count = env_cap("ORDSTAT_CLASS_CAP", caps.class_count);
  if (common.enum_cap) caps.enumeration = *common.enum_cap;    // flags win
  if (common.class_cap) caps.class_count = *common.class_cap;
  default_caps() = caps;
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
  CliResult result;
  std::ostringstream out, err;

  CLI::App app{"exact element-order statistics and constructions for finite groups"};
  app.require_subcommand(1);

  CommonOptions common;
  GroupSelection sel;
  std::string rep = "builtin:q8";
  std::string c_text = "3/2";
  uint64_t p_param = 2;
  uint64_t s_param = 1;
  uint64_t n_param = 2;
  uint64_t max_order = 200;
  uint64_t s_from = 1, s_to = 3, shell_from = 4;
  bool shell = false, symbolic = false;
  std::string suite;

  auto* stats = app.add_subcommand("stats", "order statistics of a described group");
  add_group_selection(stats, sel);
  add_common(stats, common);

  auto* construct = app.add_subcommand(
      "construct", "build U_s x| P from an integer representation document");
  construct->add_option("--rep", rep, "representation document path or builtin:q8");
  construct->add_option("--s", s_param, "exponent of the homocyclic part")->required();
  add_common(construct, common);

  auto* lemma = app.add_subcommand(
      "verify-lemma43", "check the order structure of the built semidirect product");
  lemma->add_option("--rep", rep, "representation document path or builtin:q8");
  lemma->add_option("--s", s_param, "exponent of the homocyclic part")->required();
  lemma->add_flag("--shell", shell, "use shell counting instead of full enumeration");
  add_common(lemma, common);

  auto* theorem = app.add_subcommand(
      "verify-theorem", "check the average-order inequality chain o(G) < o(N)^c");
  theorem->add_option("--p", p_param, "prime")->required();
  theorem->add_option("--s", s_param, "exponent of the homocyclic part")->required();
  theorem->add_option("--c", c_text, "rational exponent, e.g. 3/2")->required();
  theorem->add_option("--rep", rep, "representation document path or builtin:q8");
  theorem->add_flag("--symbolic", symbolic, "compare exact proof bounds only");
  add_common(theorem, common);

  auto* hughes = app.add_subcommand("anti-hughes-bound",
                                    "evaluate the anti-Hughes average-order bound");
  hughes->add_option("--p", p_param, "prime (>= 5)")->required();
  hughes->add_option("--n", n_param, "group order exponent")->required();
  add_common(hughes, common);

  auto* secretive = app.add_subcommand("secretive-check",
                                       "verify the Wall properties of a p-group");
  add_group_selection(secretive, sel);
  add_common(secretive, common);

  auto* scan = app.add_subcommand("scan", "run a corpus scan suite");
  scan->add_option("--suite", suite, "a5 | psi-max | k-exp")
      ->required()
      ->check(CLI::IsMember({"a5", "psi-max", "k-exp"}));
  scan->add_option("--max-order", max_order, "largest corpus group order");
  add_common(scan, common);

  auto* family = app.add_subcommand("family",
                                    "exact (o, mo) decay along the built family");
  family->add_option("--p", p_param, "prime (built-in acting group exists for 2)")->required();
  family->add_option("--s-from", s_from, "first exponent")->required();
  family->add_option("--s-to", s_to, "last exponent")->required();
  family->add_option("--shell-from", shell_from, "use shell counting from this s on");
  add_common(family, common);

  auto* kd = app.add_subcommand("kd", "class count over divisor count");
  add_group_selection(kd, sel);
  add_common(kd, common);

  std::vector<const char*> argv;
  argv.push_back("ordstat");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      result.out = app.help();
      result.exit_code = 0;
      return result;
    }
    result.err = std::string(e.what()) + "\n";
    result.exit_code = 2;
    return result;
  }

  try {
    apply_caps(common);
    if (stats->parsed()) {
      FiniteGroup g = select_group(sel);
      result.exit_code = emit(stats_report(g, common.class_cap), common, out);
    } else if (construct->parsed()) {
      ConstructionResult cr = construct_semidirect(resolve_representation(rep), s_param);
      result.exit_code = emit(construct_report(cr), common, out);
    } else if (lemma->parsed()) {
      ConstructionResult cr = construct_semidirect(resolve_representation(rep), s_param);
      result.exit_code = emit(verify_lemma43(cr.semidirect, shell), common, out);
    } else if (theorem->parsed()) {
      Rational c = parse_rational(c_text);
      if (symbolic) {
        result.exit_code = emit(verify_theorem_symbolic(p_param, c, s_param), common, out);
      } else {
        RepresentationDoc doc = resolve_representation(rep);
        if (doc.p != p_param)
          throw ParameterError(
              "--p = " + std::to_string(p_param) + " does not match the representation's p = " +
              std::to_string(doc.p) + "; use --symbolic for parameters without a built instance");
        ConstructionResult cr = construct_semidirect(doc, s_param);
        Subgroup n = cr.semidirect.translation_subgroup();
        result.exit_code = emit(verify_theorem(p_param, c, cr.semidirect, n), common, out);
      }
    } else if (hughes->parsed()) {
      result.exit_code = emit(anti_hughes_bound(p_param, n_param), common, out);
    } else if (secretive->parsed()) {
      FiniteGroup g = select_group(sel);
      auto prime = sel.p ? *sel.p : p_group_prime(g).value_or(0);
      if (prime == 0)
        throw ParameterError("cannot infer p for the secretive check; pass --p");
      Report r = secretive_to_report(secretive_report(g, prime),
                                     g.name().empty() ? "<document>" : g.name());
      result.exit_code = emit(r, common, out);
    } else if (scan->parsed()) {
      Report r;
      if (suite == "a5") r = scan_conjecture_a5(max_order);
      if (suite == "psi-max") r = scan_psi_max(max_order);
      if (suite == "k-exp") r = scan_k_exp(max_order, common.class_cap);
      result.exit_code = emit(r, common, out);
    } else if (family->parsed()) {
      result.exit_code =
          emit(family_ratio_report(p_param, s_from, s_to, shell_from), common, out);
    } else if (kd->parsed()) {
      FiniteGroup g = select_group(sel);
      result.exit_code = emit(kd_report(g, common.class_cap), common, out);
    }
  } catch (const ConstructionError& e) {
    err << "construction failed: " << e.what() << "\n";
    result.exit_code = 1;
  } catch (const ValidationError& e) {
    err << "validation failed: " << e.what() << "\n";
    result.exit_code = 1;
  } catch (const ResourceError& e) {
    err << "resource error: " << e.what() << "\n";
    result.exit_code = 2;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    result.exit_code = 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    result.exit_code = 2;
  }

  result.out = out.str();
  result.err = err.str();
  return result;
}

int main_cli(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  CliResult r = run_cli(args);
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}

}  // namespace ordstat
