#pragma once

#include "multideg/charpoly_route.hpp"
#include "multideg/engine.hpp"
#include "multideg/errors.hpp"
#include "multideg/intersection.hpp"

#include <json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace multideg::io {

using Json = nlohmann::json;

enum class Method { Triangulation, Charpoly, Prechar, All };

const char* to_string(Method m);
/// Throws ValidationError on an unknown name.
Method parse_method(const std::string& name);

struct VarietySpec {
  VarietyKind kind = VarietyKind::ProjectiveSpace;
  std::size_t dim = 0;
  Integer degree = 1;  // deg V; always 1 for P^r
  std::vector<TableEntry> entries;

  bool operator==(const VarietySpec& o) const;
};

/// Exactly one of rows / torus is set. Indices are 0-based here and 1-based
/// in JSON.
struct ProblemInput {
  VarietySpec variety;
  std::vector<Integer> degrees;
  std::optional<std::vector<std::vector<std::int64_t>>> rows;
  std::optional<TorusMap> torus;
  std::optional<std::size_t> pivot;
  Method method = Method::Triangulation;
  bool force = false;
  bool symbolic = false;
  bool dump_triangulation = false;
  std::uint64_t seed = 0;

  bool operator==(const ProblemInput& o) const;
};

/// Parses and validates UTF-8 JSON. Errors name the offending JSON path.
ProblemInput parse_input(const std::string& text);
/// Reads a file, or stdin for "-".
ProblemInput parse_input_file(const std::string& path);

/// Exponent rows of the input (homogenized for torus input) with the pivot.
ExponentMatrix exponent_matrix(const ProblemInput& in);
GeometricSetup geometric_setup(const ProblemInput& in);

struct CrossCheckResult {
  std::map<std::string, MultidegreePolynomial> routes;
  std::map<std::string, std::string> skipped;  // route -> reason
  bool agreement = false;
  std::optional<WellPresentedReport> well_presented;
  std::vector<std::string> discrepancies;
  std::map<std::string, double> timing_ms;  // filled only when timing is requested
};

/// Runs every applicable route; agreement holds iff all computed gammas match.
CrossCheckResult cross_check(const ProblemInput& in, bool timing = false);

Json to_json(const ProblemInput& in);
ProblemInput problem_from_json(const Json& j);
Json to_json(const MultidegreeReport& r);
MultidegreeReport report_from_json(const Json& j);
Json to_json(const WellPresentedReport& r);
WellPresentedReport well_presented_from_json(const Json& j);
Json to_json(const CrossCheckResult& r);
CrossCheckResult cross_check_from_json(const Json& j);
Json to_json(const MultidegreePolynomial& p);
MultidegreePolynomial gamma_from_json(const Json& j);

enum class OutputFormat { Json, Text };

struct RunOptions {
  OutputFormat format = OutputFormat::Json;
  bool timing = false;
};

struct RunResult {
  int exit_code = 0;
  std::string output;
};

/// Exit code for a domain error: 1 input, 2 method inapplicable, 3 invariant.
int exit_code_for(ErrorKind kind);
/// {"error":{"kind":..,"message":..}} plus optional detail.
Json error_envelope(const Error& e, const Json& detail = nullptr);

/// Commands: compute, check-wp, homogenize, segre, symbolic. Never throws;
/// failures come back as an error envelope with a nonzero exit code.
RunResult run(const std::string& command, const ProblemInput& input,
              const RunOptions& options = {});

/// Cap on n, from MULTIDEG_MAX_N (default 10).
std::size_t max_n();

}  // namespace multideg::io
