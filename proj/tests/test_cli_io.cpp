#include "multideg/io.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

using namespace multideg;
using namespace multideg::io;

namespace {

std::string data_path(const std::string& name) {
  const char* dir = std::getenv("MULTIDEG_TEST_DATA");
  return std::string(dir ? dir : "tests/data") + "/" + name;
}

ProblemInput fixture(const std::string& name) { return parse_input_file(data_path(name)); }

std::string validation_message(const std::string& text) {
  try {
    parse_input(text);
  } catch (const ValidationError& e) {
    return e.what();
  }
  return "";
}

Json run_json(const std::string& command, const ProblemInput& in, int expected_exit = 0) {
  auto r = run(command, in);
  EXPECT_EQ(r.exit_code, expected_exit) << r.output;
  return Json::parse(r.output);
}

const char* kTriaText = R"({"variety":{"kind":"Pn","dim":2},"degrees":[1,2,3],
                            "rows":[[0,1,2],[2,0,2],[3,1,1]]})";

}  // namespace

TEST(ParseInput, TriaFixture) {
  auto in = fixture("tria.json");
  EXPECT_EQ(in.variety.kind, VarietyKind::ProjectiveSpace);
  EXPECT_EQ(in.variety.dim, 2u);
  EXPECT_EQ(in.degrees, (std::vector<Integer>{1, 2, 3}));
  ASSERT_TRUE(in.rows.has_value());
  EXPECT_EQ(*in.rows, (std::vector<std::vector<std::int64_t>>{{0, 1, 2}, {2, 0, 2}, {3, 1, 1}}));
  EXPECT_FALSE(in.torus.has_value());
  EXPECT_EQ(in.method, Method::Triangulation);
  EXPECT_EQ(in, parse_input(kTriaText));
}

TEST(ParseInput, TorusFixture) {
  auto in = fixture("torus_example.json");
  ASSERT_TRUE(in.torus.has_value());
  EXPECT_EQ(in.torus->a, (std::vector<std::vector<std::int64_t>>{{-1, 0, 1}, {0, -2, 0}, {0, 1, 1}}));
  EXPECT_EQ(in.variety.dim, 3u);
  EXPECT_EQ(in.degrees, (std::vector<Integer>(4, 1)));
  EXPECT_EQ(exponent_matrix(in).rows()[1], (std::vector<std::int64_t>{1, 0, 0, 4}));
}

TEST(ParseInput, ErrorsNameJsonPaths) {
  EXPECT_NE(validation_message(
                R"({"variety":{"kind":"Pn","dim":2},"degrees":[1,1,1],"rows":[]})")
                .find("$.rows: must be a nonempty array"),
            std::string::npos);
  EXPECT_THROW(fixture("empty_rows.json"), ValidationError);
  EXPECT_NE(validation_message(
                R"({"variety":{"kind":"Pn","dim":1},"degrees":[1,1],"rows":[[1,0],[2,-1]]})")
                .find("$.rows[1][1]: negative exponent -1"),
            std::string::npos);
  EXPECT_NE(validation_message(
                R"({"variety":{"kind":"Pn","dim":1},"degrees":[1,1],"rows":[[1,0],[1]]})")
                .find("$.rows[1]"),
            std::string::npos);
  EXPECT_NE(validation_message(
                R"({"variety":{"kind":"Pn","dim":1},"degrees":[1],"rows":[[1,0],[0,1]]})")
                .find("$.degrees"),
            std::string::npos);
  EXPECT_NE(validation_message(
                R"({"variety":{"kind":"Pn","dim":1},"degrees":[1,1],"rows":[[1,0]],"colour":1})")
                .find("$.colour: unknown key"),
            std::string::npos);
  EXPECT_NE(validation_message(R"({"variety":{"kind":"Pn","dim":1},"degrees":[1,1],
                                   "rows":[[1,0]],"torus":{"A":[[1]]}})")
                .find("exactly one of"),
            std::string::npos);
  EXPECT_NE(validation_message(R"({"variety":{"kind":"Pn","dim":1},"degrees":[1,1],
                                   "rows":[[1,0],[0,1]],"pivot":3})")
                .find("$.pivot"),
            std::string::npos);
  EXPECT_NE(validation_message(R"({"variety":{"kind":"Pn","dim":1},"degrees":[1,1],
                                   "rows":[[1,0],[0,1]],"method":"magic"})")
                .find("$.method"),
            std::string::npos);
  EXPECT_NE(validation_message("{not json").find("invalid JSON"), std::string::npos);
  EXPECT_THROW(parse_input_file(data_path("no_such_file.json")), ValidationError);
}

TEST(ParseInput, TableVariety) {
  auto in = parse_input(R"({"variety":{"kind":"table","dim":2,"degV":2,
                                       "entries":[{"S":[1,2],"value":2}]},
                            "degrees":[2,2],"rows":[[1,0],[0,1]]})");
  EXPECT_EQ(in.variety.kind, VarietyKind::Table);
  EXPECT_EQ(in.variety.degree, 2);
  ASSERT_EQ(in.variety.entries.size(), 1u);
  EXPECT_EQ(in.variety.entries[0].indices, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(geometric_setup(in).intersection(SubsetMask{3}), 2);
}

TEST(RoundTrip, ProblemInput) {
  for (const char* name : {"tria.json", "torus_example.json", "identity.json", "cremona_torus.json"}) {
    auto in = fixture(name);
    EXPECT_EQ(problem_from_json(to_json(in)), in) << name;
    EXPECT_EQ(parse_input(to_json(in).dump()), in) << name;
  }
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> e(0, 5);
  for (int trial = 0; trial < 20; ++trial) {
    ProblemInput in;
    const std::size_t n = 2 + trial % 3;
    in.variety.dim = n - 1;
    in.degrees.assign(n, 1);
    in.rows = std::vector<std::vector<std::int64_t>>(n, std::vector<std::int64_t>(n));
    for (auto& r : *in.rows) {
      for (auto& x : r) x = e(rng);
    }
    in.pivot = trial % n;
    in.method = static_cast<Method>(trial % 4);
    in.force = trial % 2;
    in.symbolic = trial % 3 == 0;
    in.dump_triangulation = trial % 5 == 0;
    in.seed = rng();
    EXPECT_EQ(problem_from_json(to_json(in)), in);
  }
}

TEST(RoundTrip, Reports) {
  auto in = fixture("tria.json");
  auto r = report(exponent_matrix(in), geometric_setup(in));
  auto j = to_json(r);
  auto back = report_from_json(j);
  EXPECT_EQ(to_json(back), j);
  EXPECT_EQ(back.gamma, r.gamma);
  EXPECT_EQ(back.simplices.size(), r.simplices.size());
  EXPECT_EQ(back.pivot, r.pivot);

  auto wp = check_well_presented(exponent_matrix(fixture("identity.json")));
  EXPECT_EQ(to_json(well_presented_from_json(to_json(wp))), to_json(wp));

  auto cc = cross_check(in, true);
  EXPECT_FALSE(cc.timing_ms.empty());
  EXPECT_EQ(to_json(cross_check_from_json(to_json(cc))), to_json(cc));

  MultidegreePolynomial big(std::vector<Integer>{1, Integer("123456789012345678901234567890")});
  EXPECT_EQ(gamma_from_json(to_json(big)), big);
}

TEST(Run, ComputeAllOnTria) {
  auto in = fixture("tria.json");
  in.method = Method::All;
  auto j = run_json("compute", in);
  EXPECT_TRUE(j["agreement"].get<bool>());
  for (const char* route : {"triangulation", "symbolic", "charpoly", "prechar"}) {
    EXPECT_EQ(j["routes"][route], Json::parse("[1,5,6]")) << route;
  }
  EXPECT_TRUE(j["identity_check"]["ok"].get<bool>());
  EXPECT_FALSE(j.contains("timing_ms"));
}

TEST(Run, ComputeTriangulationReport) {
  auto j = run_json("compute", fixture("tria.json"));
  EXPECT_EQ(j["gamma"], Json::parse("[1,5,6]"));
  EXPECT_EQ(j["gamma_text"], "1 + 5*t + 6*t^2");
  EXPECT_EQ(j["base_locus_contribution"], 58);
  EXPECT_EQ(j["pivot"], 3);
  EXPECT_FALSE(j.contains("timing_ms"));

  auto timed = run("compute", fixture("tria.json"), RunOptions{OutputFormat::Json, true});
  EXPECT_TRUE(Json::parse(timed.output).contains("timing_ms"));

  auto text = run("compute", fixture("tria.json"), RunOptions{OutputFormat::Text, false});
  EXPECT_EQ(text.exit_code, 0);
  EXPECT_NE(text.output.find("gamma_text: 1 + 5*t + 6*t^2"), std::string::npos);
}

TEST(Run, Deterministic) {
  auto in = fixture("tria.json");
  in.method = Method::All;
  in.symbolic = true;
  for (const char* command : {"compute", "check-wp", "segre", "symbolic"}) {
    EXPECT_EQ(run(command, in).output, run(command, in).output) << command;
  }
}

TEST(Run, WellPresentednessDiagnosisAndExitCodes) {
  auto id = fixture("identity.json");
  auto wp = run_json("check-wp", id);
  EXPECT_FALSE(wp["ok"].get<bool>());

  id.method = Method::Charpoly;
  auto err = run_json("compute", id, 2);
  EXPECT_EQ(err["error"]["kind"], "NotWellPresented");
  EXPECT_FALSE(err["error"]["detail"]["well_presented"]["ok"].get<bool>());

  id.force = true;
  auto forced = run_json("compute", id);
  EXPECT_EQ(forced["forced"], true);

  auto tria = fixture("tria.json");
  tria.degrees = {1, 1, 1};
  EXPECT_EQ(run_json("compute", tria, 1)["error"]["kind"], "IsobaricError");

  auto rect = parse_input(R"({"variety":{"kind":"Pn","dim":1},"degrees":[1,1],
                              "rows":[[1,0],[0,1],[1,0]],"method":"charpoly"})");
  EXPECT_EQ(run_json("compute", rect, 2)["error"]["kind"], "NonSquareError");

  EXPECT_EQ(run_json("frobnicate", fixture("tria.json"), 1)["error"]["kind"], "ValidationError");
  EXPECT_EQ(run_json("homogenize", fixture("tria.json"), 1)["error"]["kind"], "ValidationError");
}

TEST(Run, ExitCodeMapping) {
  EXPECT_EQ(exit_code_for(ErrorKind::Validation), 1);
  EXPECT_EQ(exit_code_for(ErrorKind::Isobaric), 1);
  EXPECT_EQ(exit_code_for(ErrorKind::DivisionByZero), 1);
  EXPECT_EQ(exit_code_for(ErrorKind::NonSquare), 2);
  EXPECT_EQ(exit_code_for(ErrorKind::NotWellPresented), 2);
  EXPECT_EQ(exit_code_for(ErrorKind::MethodInapplicable), 2);
  EXPECT_EQ(exit_code_for(ErrorKind::InvariantBreach), 3);
  auto env = error_envelope(ValidationError("bad"));
  EXPECT_EQ(env, Json::parse(R"({"error":{"kind":"ValidationError","message":"bad"}})"));
}

TEST(Run, HomogenizeThenCompute) {
  auto h = run("homogenize", fixture("cremona_torus.json"));
  ASSERT_EQ(h.exit_code, 0) << h.output;
  auto in = parse_input(h.output);
  EXPECT_EQ(in.rows->front(), (std::vector<std::int64_t>{0, 1, 1, 1}));
  in.method = Method::All;
  auto j = run_json("compute", in);
  EXPECT_TRUE(j["agreement"].get<bool>());
  EXPECT_EQ(j["routes"]["triangulation"], Json::parse("[1,3,3,1]"));

  auto torus = fixture("cremona_torus.json");
  torus.method = Method::All;
  auto direct = run_json("compute", torus);
  EXPECT_EQ(direct["routes"]["torus"], Json::parse("[1,3,3,1]"));
  EXPECT_TRUE(direct["agreement"].get<bool>());
}

TEST(Run, SegreAndSymbolic) {
  auto segre = run_json("segre", parse_input(R"({"variety":{"kind":"Pn","dim":2},"degrees":[1,1],
                                                 "rows":[[2,0],[0,2]]})"));
  EXPECT_EQ(segre["segre"], "4*X1*X2");
  EXPECT_EQ(segre["complement"], "-4*X1*X2 + 1");
  auto sym = run_json("symbolic", fixture("tria.json"));
  EXPECT_EQ(sym["gamma"], Json::parse("[1,5,6]"));
}

TEST(Run, MaxNCap) {
  EXPECT_EQ(max_n(), 10u);
  ::setenv("MULTIDEG_MAX_N", "2", 1);
  EXPECT_EQ(max_n(), 2u);
  try {
    fixture("tria.json");
    ADD_FAILURE() << "expected the size cap to reject n = 3";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("exceeds MULTIDEG_MAX_N = 2"), std::string::npos);
  }
  ::unsetenv("MULTIDEG_MAX_N");
  EXPECT_EQ(run("compute", fixture("tria.json")).exit_code, 0);
}
