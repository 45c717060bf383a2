#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>

#include "elco/elusive.hpp"
#include "elco/families.hpp"
#include "elco/fullcheck.hpp"
#include "elco/kernels.hpp"
#include "elco/report_json.hpp"
#include "elco/selectors.hpp"
#include "elco/transitivity.hpp"

namespace {

using elco::report::Json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string format = "text";
  std::string output;
  std::uint64_t bound_vertices = elco::kDefaultEnumBound;
  int threads = 0;
  std::string modulus_table;
  std::string seed_order = "lex";
};

std::optional<elco::gf::ModulusTable> load_moduli(const Options& opt) {
  if (opt.modulus_table.empty()) return std::nullopt;
  std::ifstream in(opt.modulus_table);
  if (!in) elco::raise(elco::Errc::io_error, "cannot open modulus table " + opt.modulus_table);
  return elco::gf::parse_modulus_table(in);
}

void emit(const Options& opt, const Json& report) {
  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!opt.output.empty()) {
    file.open(opt.output);
    if (!file) elco::raise(elco::Errc::io_error, "cannot open output file " + opt.output);
    out = &file;
  }
  if (opt.format == "json")
    *out << report.dump(2) << '\n';
  else
    *out << elco::report::render_text(report);
}

elco::Selection select(const std::string& selector, const Options& opt) {
  const auto moduli = load_moduli(opt);
  return elco::parse_selector(selector, elco::families::kDefaultCodeBound,
                              moduli ? &*moduli : nullptr);
}

elco::Automorphism parse_aut(const elco::Selection& sel, const std::string& script) {
  return elco::parse_aut_script(script, sel.code.m(), sel.code.q(),
                                sel.field ? &*sel.field : nullptr);
}

elco::Vertex parse_alpha(const elco::Selection& sel, const std::string& text) {
  if (text.empty()) {
    if (sel.code.empty())
      elco::raise(elco::Errc::ambient_mismatch, "empty code has no default alpha");
    return sel.code.words().front();  // lexicographic minimum
  }
  return elco::parse_vertex(text, sel.code.m(), sel.code.q());
}

std::vector<elco::Automorphism> preset_gens(const elco::Selection& sel,
                                            const std::string& gens_opt,
                                            const std::string& gens_script) {
  if (!gens_script.empty()) {
    std::vector<elco::Automorphism> out;
    out.push_back(parse_aut(sel, gens_script));
    return out;
  }
  if (sel.rm) {
    const elco::families::RMAutGens g = elco::families::aut_gens_rm(*sel.rm);
    return gens_opt == "x1" ? g.x1_gens : g.x_gens;
  }
  const std::string& s = sel.selector;
  if (s.rfind("perm:", 0) == 0) {
    const char t = s[5];
    const auto comma1 = s.find(',', 5);
    const auto comma2 = s.find(',', comma1 + 1);
    const int q = std::stoi(s.substr(comma1 + 1, comma2 - comma1 - 1));
    const int l = std::stoi(s.substr(comma2 + 1));
    return elco::families::aut_gens_perm_code(
        q, l,
        t == 'S' ? elco::families::PermSel::symmetric : elco::families::PermSel::alternating);
  }
  elco::raise(elco::Errc::parse_error,
              "no generator preset for this selector; pass --gens-script");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"elco: codes in Hamming graphs, their automorphisms and elusive structure"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--format", opt.format, "Output format: text|json|dot")
      ->check(CLI::IsMember({"text", "json", "dot"}));
  app.add_option("-o,--output", opt.output, "Write the report to a file");
  app.add_option("--bound-vertices", opt.bound_vertices,
                 "Vertex-space bound for distance partitions");
  app.add_option("--threads", opt.threads, "Worker threads (1 = serial reference)");
  app.add_option("--modulus-table", opt.modulus_table,
                 "Override the field modulus table (lines: p k c0 ... ck)");
  app.add_option("--seed-order", opt.seed_order, "Orbit seed order (fixed: lex)")
      ->check(CLI::IsMember({"lex"}));

  std::string selector, alpha_text, aut_text, gens_opt = "x", gens_script, profile = "quick";
  std::string dot_file;
  bool add_transposition = false;
  std::uint64_t image_bound = 4096;

  CLI::App* construct = app.add_subcommand("construct", "Construct a code and print it");
  construct->add_option("selector", selector)->required();

  CLI::App* stats = app.add_subcommand("stats", "m, q, |C|, delta, rho and cell sizes");
  stats->add_option("selector", selector)->required();

  CLI::App* elusive_cmd =
      app.add_subcommand("elusive", "Verify a triple and report its full structure");
  elusive_cmd->add_option("selector", selector)->required();
  elusive_cmd->add_option("--alpha", alpha_text, "Codeword (space-separated symbols)");
  elusive_cmd->add_option("--aut", aut_text, "Automorphism script")->required();
  elusive_cmd->add_option("--dot", dot_file, "Write the associate graph as DOT");

  CLI::App* census = app.add_subcommand("census", "Distance-3 MC census of a triple");
  census->add_option("selector", selector)->required();
  census->add_option("--alpha", alpha_text, "Codeword (space-separated symbols)");
  census->add_option("--aut", aut_text, "Automorphism script")->required();

  CLI::App* trans = app.add_subcommand("transitivity", "Orbit structure of the cells");
  trans->add_option("selector", selector)->required();
  trans->add_option("--gens", gens_opt, "Generator preset: x|x1")
      ->check(CLI::IsMember({"x", "x1"}));
  trans->add_option("--gens-script", gens_script, "Explicit generator (automorphism script)");

  CLI::App* images = app.add_subcommand("images", "Closure of the code under generators");
  images->add_option("selector", selector)->required();
  images->add_option("--gens-script", gens_script,
                     "Generator script (default: one non-code translation)");
  images->add_flag("--add-transposition", add_transposition,
                   "Also apply the entry transposition (0, m-1)");
  images->add_option("--bound", image_bound, "Image-closure bound");

  CLI::App* depth = app.add_subcommand("c2depth", "C_2 -> C_3 adjacency check");
  depth->add_option("selector", selector)->required();

  CLI::App* fullcheck_cmd = app.add_subcommand("fullcheck", "Run the verification suite");
  fullcheck_cmd->add_option("profile", profile, "quick|full")
      ->check(CLI::IsMember({"quick", "full"}));

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (opt.threads > 0) elco::kernels::set_worker_threads(opt.threads);

    if (*construct) {
      const elco::Selection sel = select(selector, opt);
      if (!opt.output.empty()) {
        std::ofstream file(opt.output);
        if (!file) elco::raise(elco::Errc::io_error, "cannot open " + opt.output);
        elco::write_code(file, sel.code);
      } else {
        elco::write_code(std::cout, sel.code);
      }
      return kExitOk;
    }

    if (*stats) {
      const elco::Selection sel = select(selector, opt);
      const elco::CodeStats st = elco::code_stats(sel.code, opt.bound_vertices);
      emit(opt, elco::report::stats_json(sel.selector, sel.code, st));
      return kExitOk;
    }

    if (*elusive_cmd || *census) {
      const elco::Selection sel = select(selector, opt);
      const elco::Vertex alpha = parse_alpha(sel, alpha_text);
      const elco::Automorphism x = parse_aut(sel, aut_text);
      const elco::elusive::TripleAnalysis t(sel.code, alpha, x, /*allow_unverified=*/true);
      const elco::elusive::Distance3Census cs = elco::elusive::distance3_census(t);
      if (*census) {
        emit(opt, elco::report::census_json(t, cs));
        const bool healthy = t.report().is_elusive && cs.all_bounds_ok &&
                             cs.d3_counts_equal_2q_minus_4;
        return healthy ? kExitOk : kExitViolation;
      }
      const elco::elusive::PartitionCheck pc =
          t.report().is_elusive ? elco::elusive::neighbour_partition_check(t)
                                : elco::elusive::PartitionCheck{};
      const elco::elusive::AssociateGraph graph = elco::elusive::associate_graph(t);
      const elco::elusive::GraphDiagnostics diag = elco::elusive::graph_diagnostics(graph);
      const elco::elusive::TheoremCheck theorem = elco::elusive::theorem_maximum_check(t);
      if (!dot_file.empty()) {
        std::ofstream dot(dot_file);
        if (!dot) elco::raise(elco::Errc::io_error, "cannot open " + dot_file);
        dot << elco::elusive::to_dot(graph);
      }
      if (opt.format == "dot") {
        std::cout << elco::elusive::to_dot(graph);
        return t.report().is_elusive ? kExitOk : kExitViolation;
      }
      emit(opt, elco::report::elusive_json(t, pc, cs, graph, diag, theorem));
      if (!t.report().is_elusive) {
        std::cerr << "not elusive: verification failed\n";
        return kExitViolation;
      }
      const bool healthy = t.report().associate_count_matches && pc.alpha_side_ok &&
                           pc.dual_side_ok && cs.all_bounds_ok && theorem.conclusion_ok;
      return healthy ? kExitOk : kExitViolation;
    }

    if (*trans) {
      const elco::Selection sel = select(selector, opt);
      const std::vector<elco::Automorphism> gens = preset_gens(sel, gens_opt, gens_script);
      const elco::transitivity::TransitivityReport r =
          elco::transitivity::is_completely_transitive(sel.code, gens, opt.bound_vertices);
      emit(opt, elco::report::transitivity_json(r));
      return r.completely_transitive ? kExitOk : kExitViolation;
    }

    if (*images) {
      const elco::Selection sel = select(selector, opt);
      std::vector<elco::Automorphism> gens;
      if (!gens_script.empty()) {
        gens.push_back(parse_aut(sel, gens_script));
      } else {
        if (!sel.rm)
          elco::raise(elco::Errc::parse_error,
                      "default images generators exist for rm selectors only");
        elco::Vertex beta(sel.code.m(), 0);
        beta[0] = 1;
        beta[1] = static_cast<elco::Sym>(sel.field->neg(1));
        gens.push_back(elco::translation(beta, *sel.field));
      }
      if (add_transposition) {
        std::vector<int> t = elco::perm_identity<int>(sel.code.m());
        std::swap(t[0], t[sel.code.m() - 1]);
        gens.push_back(elco::entry_perm(t, sel.code.q()));
      }
      const elco::transitivity::ImagesReport r =
          elco::transitivity::code_images_under(sel.code, gens, image_bound);
      emit(opt, elco::report::images_json(r));
      return kExitOk;
    }

    if (*depth) {
      const elco::Selection sel = select(selector, opt);
      const elco::elusive::C2DepthReport r =
          elco::elusive::c2_depth_check(sel.code, opt.bound_vertices);
      emit(opt, elco::report::c2_depth_json(r));
      return kExitOk;
    }

    if (*fullcheck_cmd) {
      const elco::fullcheck::Profile p = profile == "full" ? elco::fullcheck::Profile::full
                                                           : elco::fullcheck::Profile::quick;
      const elco::fullcheck::Result result = elco::fullcheck::run(p);
      for (const elco::fullcheck::CriterionResult& c : result.criteria) {
        std::cout << "criterion " << c.id << ": " << (c.pass ? "PASS" : "FAIL") << " - "
                  << c.name;
        if (!c.detail.empty()) std::cout << " [" << c.detail << "]";
        std::cout << '\n';
      }
      if (opt.format == "json") emit(opt, elco::fullcheck::to_json(result));
      return result.all_pass ? kExitOk : kExitViolation;
    }
  } catch (const elco::Error& e) {
    std::cerr << elco::errc_name(e.kind()) << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
