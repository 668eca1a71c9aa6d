#include "sgc/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <ostream>

#include "sgc/circular.hpp"
#include "sgc/error.hpp"
#include "sgc/families.hpp"
#include "sgc/girth.hpp"
#include "sgc/io.hpp"
#include "sgc/lemmas.hpp"
#include "sgc/winding.hpp"

namespace sgc {

namespace {

using nlohmann::ordered_json;

ordered_json girth_json(const GirthResult& r) {
  ordered_json j;
  j["negative_girth"] = r.length ? ordered_json(*r.length) : ordered_json(nullptr);
  j["witness"] = r.witness ? ordered_json(r.witness->vertices()) : ordered_json(nullptr);
  return j;
}

ChiCOptions chic_options(int q_max, const std::string& upper) {
  ChiCOptions o;
  if (q_max > 0) o.q_max = q_max;
  if (!upper.empty()) o.upper = parse_rational(upper);
  return o;
}

struct Args {
  // gen
  std::string family;
  int ell = 1;
  int k = 3;
  std::string sgf_out;
  std::string dot_out;
  // shared inputs
  std::string graph;
  std::string cert;
  std::string map;
  int q_max = 0;
  std::string upper;
  std::string cert_out;
  std::string extension = "csh";
  // lemmas
  std::string lemma;
  int trials = 0;
  std::uint64_t seed = 0;
  std::vector<int> params;
  std::string oracle;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"signed graph circular coloring toolkit", "sgc"};
  app.require_subcommand(1);
  Args a;

  auto* gen = app.add_subcommand("gen", "generate a graph family as SGF");
  gen->add_option("--family", a.family, "cylinder|mycielski|bq-odd|bq-even|bm|mobius|s-of")->required();
  gen->add_option("--ell", a.ell, "number of layers");
  gen->add_option("--k", a.k, "family parameter");
  gen->add_option("-o,--output", a.sgf_out, "write SGF here instead of stdout");
  gen->add_option("--dot", a.dot_out, "also write Graphviz DOT");

  auto* girth = app.add_subcommand("girth", "negative girth with a witness cycle");
  girth->add_option("graph", a.graph)->required();

  auto* chic = app.add_subcommand("chic", "circular chromatic number over a rational grid");
  chic->add_option("graph", a.graph)->required();
  chic->add_option("--qmax", a.q_max, "largest denominator (default: n)")->check(CLI::PositiveNumber);
  chic->add_option("--upper", a.upper, "largest candidate, as P/Q");
  chic->add_option("--certificate", a.cert_out, "write the coloring JSON here");

  auto* verify = app.add_subcommand("verify", "check a coloring certificate");
  verify->add_option("graph", a.graph)->required();
  verify->add_option("certificate", a.cert)->required();

  auto* winding = app.add_subcommand("winding", "winding number of a cycle mapping");
  winding->add_option("map", a.map)->required();
  winding->add_option("--extension", a.extension)->check(CLI::IsMember({"cD", "csh"}));

  auto* lemmas = app.add_subcommand("lemmas", "randomized lemma suite");
  lemmas->add_option("--name", a.lemma)->required();
  lemmas->add_option("--trials", a.trials)->required()->check(CLI::PositiveNumber);
  lemmas->add_option("--seed", a.seed)->required();
  lemmas->add_option("--params", a.params)->delimiter(',');

  auto* oracle = app.add_subcommand("oracle", "exhaustive cross-check");
  oracle->add_option("kind", a.oracle)->required()->check(CLI::IsMember({"girth", "chic"}));
  oracle->add_option("graph", a.graph)->required();
  oracle->add_option("--qmax", a.q_max)->check(CLI::PositiveNumber);
  oracle->add_option("--upper", a.upper);

  std::vector<std::string> rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage: " << e.what() << "\n";
    return 2;
  }

  try {
    if (gen->parsed()) {
      FamilyParams p{parse_family(a.family), a.ell, a.k};
      const SignedGraph g = make_family(p);
      const std::string sgf = write_sgf(g);
      if (!a.dot_out.empty()) write_text_file(a.dot_out, write_dot(g, to_string(p.family)));
      if (a.sgf_out.empty()) {
        out << sgf;
      } else {
        write_text_file(a.sgf_out, sgf);
        ordered_json j{{"file", a.sgf_out}, {"order", g.order()}, {"size", g.size()}};
        out << j.dump() << "\n";
      }
    } else if (girth->parsed()) {
      out << girth_json(negative_girth(read_sgf_file(a.graph))).dump() << "\n";
    } else if (chic->parsed()) {
      const SignedGraph g = read_sgf_file(a.graph);
      const ChiCResult r = chi_c(g, chic_options(a.q_max, a.upper));
      if (!a.cert_out.empty()) write_text_file(a.cert_out, coloring_to_json(r.certificate) + "\n");
      ordered_json j;
      j["value"] = format_rational(r.value);
      j["certificate"] = a.cert_out.empty() ? ordered_json(nullptr) : ordered_json(a.cert_out);
      j["refuted"] = r.refuted.size();
      j["q_max"] = r.q_max;
      j["upper"] = format_rational(r.upper);
      out << j.dump() << "\n";
    } else if (verify->parsed()) {
      const SignedGraph g = read_sgf_file(a.graph);
      const Coloring c = coloring_from_json(read_text_file(a.cert));
      out << (verify_coloring(g, c) ? "true" : "false") << "\n";
    } else if (winding->parsed()) {
      const CycleMap m = cycle_map_from_json(read_text_file(a.map));
      const ArcWalk w = a.extension == "cD" ? extend_cD(m) : extend_csh(m);
      out << winding_number(w, pick_interval(m)) << "\n";
    } else if (lemmas->parsed()) {
      const Lemma l = parse_lemma(a.lemma);
      const auto params = a.params.empty() ? default_lemma_params(l) : a.params;
      out << lemma_report_to_json(lemma_suite(l, params, a.trials, a.seed)) << "\n";
    } else if (oracle->parsed()) {
      const SignedGraph g = read_sgf_file(a.graph);
      if (a.oracle == "girth") {
        out << girth_json(brute_force_negative_girth(g)).dump() << "\n";
      } else {
        const int q_max = a.q_max > 0 ? a.q_max : g.order();
        const Rational upper = a.upper.empty() ? Rational(4) : parse_rational(a.upper);
        const auto v = brute_force_chi_c(g, q_max, upper);
        ordered_json j;
        j["value"] = v ? ordered_json(format_rational(*v)) : ordered_json(nullptr);
        j["q_max"] = q_max;
        j["upper"] = format_rational(upper);
        out << j.dump() << "\n";
      }
    }
  } catch (const Error& e) {
    out << ordered_json{{"error", e.what()}, {"code", std::string(to_string(e.code()))}}.dump() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace sgc
