#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "elco/elusive.hpp"
#include "elco/families.hpp"
#include "elco/jsonschema.hpp"
#include "elco/kernels.hpp"
#include "elco/report_json.hpp"
#include "elco/selectors.hpp"
#include "elco/transitivity.hpp"

using namespace elco;

namespace {

nlohmann::json load_schema(const std::string& name) {
  std::ifstream in(std::string(ELCO_SOURCE_DIR) + "/schemas/" + name);
  REQUIRE(in.good());
  return nlohmann::json::parse(in);
}

elusive::TripleAnalysis a3_analysis() {
  Automorphism x = identity_automorphism(3, 3);
  x.diag[1] = {1, 2, 0};
  x.diag[2] = {2, 0, 1};
  return elusive::TripleAnalysis(families::perm_code(3, 1, families::PermSel::alternating),
                                 {0, 1, 2}, x);
}

}  // namespace

TEST_CASE("selectors") {
  CHECK(parse_selector("perm:A,3,1").code.size() == 3);
  CHECK(parse_selector("perm:S,3,2").code.size() == 36);
  CHECK(parse_selector("perm:odd,3,1").code.size() == 3);
  CHECK(parse_selector("rep:3,3").code.size() == 3);
  CHECK(parse_selector("rm:2,3").code.size() == 16);
  CHECK(parse_selector("rmtop:2,3").code.size() == 128);
  CHECK(parse_selector("rm:4,1").code.size() == 16);  // GF(4) via the modulus table

  const Selection rm = parse_selector("rm:2,3");
  CHECK(rm.rm.has_value());
  CHECK(rm.field.has_value());

  CHECK_THROWS_AS(parse_selector("perm:B,3,1"), Error);
  CHECK_THROWS_AS(parse_selector("nonsense:1"), Error);
  CHECK_THROWS_AS(parse_selector("rm:6,1"), Error);  // q = 6 is not a prime power
  CHECK_THROWS_AS(parse_selector("perm:A,3"), Error);
  CHECK_THROWS_AS(parse_selector("file:/no/such/file"), Error);
}

TEST_CASE("file selector round trip") {
  const std::string path = "/tmp/elco_test_code.txt";
  {
    std::ofstream out(path);
    write_code(out, families::repetition_code(3, 4));
  }
  const Selection sel = parse_selector("file:" + path);
  CHECK(sel.code.words() == families::repetition_code(3, 4).words());
  std::remove(path.c_str());
}

TEST_CASE("reports validate against the shipped schemas") {
  std::string err;

  const Selection sel = parse_selector("rm:2,3");
  const report::Json stats = report::stats_json(sel.selector, sel.code, code_stats(sel.code));
  CHECK(schema::validate(stats, load_schema("stats.schema.json"), err));
  INFO(err);
  CHECK(err.empty());

  const elusive::TripleAnalysis t = a3_analysis();
  const elusive::PartitionCheck pc = elusive::neighbour_partition_check(t);
  const elusive::Distance3Census cs = elusive::distance3_census(t);
  const elusive::AssociateGraph g = elusive::associate_graph(t);
  const elusive::GraphDiagnostics gd = elusive::graph_diagnostics(g);
  const elusive::TheoremCheck th = elusive::theorem_maximum_check(t);
  const report::Json ej = report::elusive_json(t, pc, cs, g, gd, th);
  CHECK(schema::validate(ej, load_schema("elusive.schema.json"), err));
  INFO(err);
  CHECK(err.empty());

  CHECK(schema::validate(report::census_json(t, cs), load_schema("census.schema.json"), err));

  const families::RMAutGens gens = families::aut_gens_rm(*sel.rm);
  const report::Json tj = report::transitivity_json(
      transitivity::is_completely_transitive(sel.code, gens.x_gens));
  CHECK(schema::validate(tj, load_schema("transitivity.schema.json"), err));

  Vertex beta(8, 0);
  beta[0] = beta[1] = 1;
  const std::vector<Automorphism> tg{translation(beta, *sel.field)};
  const report::Json ij =
      report::images_json(transitivity::code_images_under(sel.code, tg));
  CHECK(schema::validate(ij, load_schema("images.schema.json"), err));

  const report::Json cj = report::c2_depth_json(
      elusive::c2_depth_check(families::perm_code(4, 1, families::PermSel::symmetric)));
  CHECK(schema::validate(cj, load_schema("c2depth.schema.json"), err));
}

TEST_CASE("schema validation catches shape errors") {
  std::string err;
  nlohmann::json bad = {{"selector", 7}};
  CHECK(!schema::validate(bad, load_schema("stats.schema.json"), err));
  CHECK(!err.empty());
}

TEST_CASE("reports are byte-identical across worker-thread settings") {
  const int saved = kernels::worker_threads();
  auto render = [] {
    const elusive::TripleAnalysis t = a3_analysis();
    const elusive::PartitionCheck pc = elusive::neighbour_partition_check(t);
    const elusive::Distance3Census cs = elusive::distance3_census(t);
    const elusive::AssociateGraph g = elusive::associate_graph(t);
    return report::elusive_json(t, pc, cs, g, elusive::graph_diagnostics(g),
                                elusive::theorem_maximum_check(t))
        .dump(2);
  };
  kernels::set_worker_threads(1);
  const std::string serial = render();
  kernels::set_worker_threads(4);
  const std::string parallel = render();
  kernels::set_worker_threads(saved);
  CHECK(serial == parallel);
}

TEST_CASE("text rendering") {
  const Selection sel = parse_selector("rep:3,3");
  const std::string text =
      report::render_text(report::stats_json(sel.selector, sel.code, code_stats(sel.code)));
  CHECK(text.find("delta: 3") != std::string::npos);
  CHECK(text.find("rho: 2") != std::string::npos);
}

#ifdef ELCO_BIN
TEST_CASE("command-line exit codes") {
  const std::string bin = ELCO_BIN;
  auto run = [&](const std::string& args) {
    const int status = std::system((bin + " " + args + " >/dev/null 2>&1").c_str());
    return WEXITSTATUS(status);
  };
  CHECK(run("stats rep:3,3") == 0);
  CHECK(run("construct perm:A,3,1") == 0);
  CHECK(run("elusive perm:A,3,1 --aut \"DIAG 1: (0 1 2); DIAG 2: (0 2 1)\" --format json") == 0);
  CHECK(run("elusive perm:A,3,1 --aut \"PERM: id\"") == 1);  // identity is not a witness
  CHECK(run("stats nonsense:1") == 2);
  CHECK(run("stats perm:A,3") == 2);
  CHECK(run("transitivity rm:2,3") == 0);
  CHECK(run("c2depth perm:S,4,1") == 0);
  CHECK(run("fullcheck quick") == 0);
  CHECK(run("fullcheck bogus") == 2);
}

TEST_CASE("command-line output is byte-identical across thread counts") {
  const std::string bin = ELCO_BIN;
  auto capture = [&](const std::string& args, const std::string& path) {
    const int status = std::system((bin + " " + args + " -o " + path + " 2>/dev/null").c_str());
    REQUIRE(WEXITSTATUS(status) == 0);
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::remove(path.c_str());
    return buf.str();
  };
  const std::string args =
      "elusive rm:2,3 --aut \"TRANSLATE: 0 1 0 0 0 0 0 1; PERM: (0 7)\" --format json";
  const std::string one = capture(args + " --threads 1", "/tmp/elco_t1.json");
  const std::string four = capture(args + " --threads 4", "/tmp/elco_t4.json");
  CHECK(one == four);
  CHECK(!one.empty());
}
#endif
