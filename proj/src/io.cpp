#include "multideg/io.hpp"

#include "multideg/errors.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <limits>
#include <set>
#include <sstream>

namespace multideg::io {

using multideg::to_string;

const char* to_string(Method m) {
  switch (m) {
    case Method::Triangulation: return "triangulation";
    case Method::Charpoly: return "charpoly";
    case Method::Prechar: return "prechar";
    case Method::All: return "all";
  }
  return "triangulation";
}

Method parse_method(const std::string& name) {
  if (name == "triangulation") return Method::Triangulation;
  if (name == "charpoly") return Method::Charpoly;
  if (name == "prechar") return Method::Prechar;
  if (name == "all") return Method::All;
  throw ValidationError("unknown method \"" + name +
                        "\" (expected triangulation, charpoly, prechar or all)");
}

bool VarietySpec::operator==(const VarietySpec& o) const {
  if (kind != o.kind || dim != o.dim || degree != o.degree) return false;
  if (entries.size() != o.entries.size()) return false;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].indices != o.entries[i].indices || entries[i].value != o.entries[i].value) {
      return false;
    }
  }
  return true;
}

bool ProblemInput::operator==(const ProblemInput& o) const {
  auto torus_eq = [](const std::optional<TorusMap>& a, const std::optional<TorusMap>& b) {
    if (a.has_value() != b.has_value()) return false;
    return !a || a->a == b->a;
  };
  return variety == o.variety && degrees == o.degrees && rows == o.rows &&
         torus_eq(torus, o.torus) && pivot == o.pivot && method == o.method &&
         force == o.force && symbolic == o.symbolic &&
         dump_triangulation == o.dump_triangulation && seed == o.seed;
}

std::size_t max_n() {
  const char* env = std::getenv("MULTIDEG_MAX_N");
  if (!env) return 10;
  char* end = nullptr;
  unsigned long v = std::strtoul(env, &end, 10);
  if (end == env || *end != '\0' || v == 0) return 10;
  return static_cast<std::size_t>(v);
}

namespace {

// ---- scalar helpers -------------------------------------------------------

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw ValidationError(path + ": " + message);
}

Json integer_json(const Integer& z) {
  if (z >= std::numeric_limits<std::int64_t>::min() &&
      z <= std::numeric_limits<std::int64_t>::max()) {
    return z.convert_to<std::int64_t>();
  }
  return z.str();
}

Json rational_json(const Rational& q) {
  if (is_integer(q)) return integer_json(numerator_of(q));
  return to_string(q);
}

Integer integer_from(const Json& j, const std::string& path) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(j.get<std::uint64_t>());
    return Integer(j.get<std::int64_t>());
  }
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    bool digits = s.size() > start;
    for (std::size_t i = start; i < s.size(); ++i) digits = digits && std::isdigit(s[i]);
    if (digits) return Integer(s);
  }
  fail(path, "expected an integer");
}

std::int64_t int64_from(const Json& j, const std::string& path) {
  Integer z = integer_from(j, path);
  if (z < std::numeric_limits<std::int64_t>::min() ||
      z > std::numeric_limits<std::int64_t>::max()) {
    fail(path, "integer out of range");
  }
  return z.convert_to<std::int64_t>();
}

Rational rational_from(const Json& j, const std::string& path) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const Error&) {
      fail(path, "expected a rational number");
    }
  }
  return Rational(integer_from(j, path));
}

std::size_t index_from(const Json& j, const std::string& path, std::size_t upper) {
  std::int64_t v = int64_from(j, path);
  if (v < 1 || static_cast<std::uint64_t>(v) > upper) {
    fail(path, "index " + std::to_string(v) + " out of range 1.." + std::to_string(upper));
  }
  return static_cast<std::size_t>(v - 1);
}

bool bool_from(const Json& j, const std::string& path) {
  if (!j.is_boolean()) fail(path, "expected true or false");
  return j.get<bool>();
}

const Json& require(const Json& obj, const char* key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(path, std::string("missing required key \"") + key + "\"");
  return *it;
}

void check_keys(const Json& obj, const std::string& path, std::initializer_list<const char*> keys) {
  if (!obj.is_object()) fail(path, "expected an object");
  std::set<std::string> allowed(keys.begin(), keys.end());
  for (const auto& [k, v] : obj.items()) {
    if (!allowed.count(k)) fail(path + "." + k, "unknown key");
  }
}

std::string at(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

std::vector<std::vector<std::int64_t>> matrix_from(const Json& j, const std::string& path,
                                                   bool allow_negative) {
  if (!j.is_array() || j.empty()) fail(path, "must be a nonempty array of rows");
  std::vector<std::vector<std::int64_t>> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const Json& row = j[i];
    if (!row.is_array() || row.empty()) fail(at(path, i), "must be a nonempty array of integers");
    if (i > 0 && row.size() != out.front().size()) {
      fail(at(path, i), "has " + std::to_string(row.size()) + " entries, expected " +
                            std::to_string(out.front().size()));
    }
    std::vector<std::int64_t> r;
    for (std::size_t k = 0; k < row.size(); ++k) {
      std::int64_t v = int64_from(row[k], at(at(path, i), k));
      if (v < 0 && !allow_negative) {
        fail(at(at(path, i), k), "negative exponent " + std::to_string(v) +
                                     " (negative entries are allowed only in torus input)");
      }
      r.push_back(v);
    }
    out.push_back(std::move(r));
  }
  return out;
}

Json matrix_json(const std::vector<std::vector<std::int64_t>>& m) {
  Json out = Json::array();
  for (const auto& r : m) out.push_back(r);
  return out;
}

Json subset_json(SubsetMask s) {
  Json out = Json::array();
  for (auto j : subset_members(s)) out.push_back(j + 1);
  return out;
}

SubsetMask subset_from(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of 1-based indices");
  SubsetMask s = 0;
  for (std::size_t i = 0; i < j.size(); ++i) s |= SubsetMask{1} << index_from(j[i], at(path, i), 64);
  return s;
}

Json point_json(const LatticePoint& p) { return p.coords; }

LatticePoint point_from(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of integers");
  std::vector<std::int64_t> c;
  for (std::size_t i = 0; i < j.size(); ++i) c.push_back(int64_from(j[i], at(path, i)));
  return LatticePoint(std::move(c));
}

// ---- variety --------------------------------------------------------------

Json variety_json(const VarietySpec& v) {
  if (v.kind == VarietyKind::ProjectiveSpace) return {{"kind", "Pn"}, {"dim", v.dim}};
  Json entries = Json::array();
  for (const auto& e : v.entries) {
    Json s = Json::array();
    for (auto i : e.indices) s.push_back(i + 1);
    entries.push_back({{"S", s}, {"value", integer_json(e.value)}});
  }
  return {{"kind", "table"}, {"dim", v.dim}, {"degV", integer_json(v.degree)}, {"entries", entries}};
}

VarietySpec variety_from(const Json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  VarietySpec v;
  const Json& kind = require(j, "kind", path);
  if (!kind.is_string()) fail(path + ".kind", "expected \"Pn\" or \"table\"");
  std::int64_t dim = int64_from(require(j, "dim", path), path + ".dim");
  if (dim < 0) fail(path + ".dim", "dimension must be nonnegative");
  v.dim = static_cast<std::size_t>(dim);
  if (kind == "Pn") {
    check_keys(j, path, {"kind", "dim"});
    return v;
  }
  if (kind != "table") fail(path + ".kind", "expected \"Pn\" or \"table\"");
  check_keys(j, path, {"kind", "dim", "degV", "entries"});
  v.kind = VarietyKind::Table;
  v.degree = integer_from(require(j, "degV", path), path + ".degV");
  if (v.degree <= 0) fail(path + ".degV", "degree of V must be positive");
  if (auto it = j.find("entries"); it != j.end()) {
    if (!it->is_array()) fail(path + ".entries", "expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const Json& e = (*it)[i];
      const std::string ep = at(path + ".entries", i);
      check_keys(e, ep, {"S", "value"});
      const Json& s = require(e, "S", ep);
      if (!s.is_array()) fail(ep + ".S", "expected an array of 1-based indices");
      TableEntry te;
      for (std::size_t k = 0; k < s.size(); ++k) {
        te.indices.push_back(index_from(s[k], at(ep + ".S", k), 64));
      }
      te.value = integer_from(require(e, "value", ep), ep + ".value");
      v.entries.push_back(std::move(te));
    }
  }
  return v;
}

// ---- reports --------------------------------------------------------------

Json sign_violations_json(const std::vector<SignViolation>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) {
    out.push_back({{"subset", subset_json(v.subset)},
                   {"det", integer_json(v.det)},
                   {"required_sign", v.required_sign}});
  }
  return out;
}

std::vector<SignViolation> sign_violations_from(const Json& j, const std::string& path) {
  std::vector<SignViolation> out;
  if (!j.is_array()) fail(path, "expected an array");
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string p = at(path, i);
    out.push_back({subset_from(require(j[i], "subset", p), p + ".subset"),
                   integer_from(require(j[i], "det", p), p + ".det"),
                   static_cast<int>(int64_from(require(j[i], "required_sign", p),
                                               p + ".required_sign"))});
  }
  return out;
}

Json simplex_json(const SimplexRecord& r) {
  Json finite = Json::array();
  for (const auto& v : r.simplex.finite_vertices) finite.push_back(point_json(v));
  Json infinite = Json::array();
  for (auto j : r.simplex.infinite_directions) infinite.push_back(j + 1);
  return {{"finite", finite},
          {"infinite", infinite},
          {"rank", r.rank},
          {"hvol", integer_json(r.hvol)},
          {"degree", integer_json(r.degree)}};
}

Json optional_integer_json(const std::optional<Integer>& z) {
  return z ? integer_json(*z) : Json(nullptr);
}

std::optional<Integer> optional_integer_from(const Json& j, const std::string& path) {
  if (j.is_null()) return std::nullopt;
  return integer_from(j, path);
}

// ---- text rendering -------------------------------------------------------

std::string render_text(const Json& j) {
  std::ostringstream os;
  if (!j.is_object()) return j.dump() + "\n";
  for (const auto& [k, v] : j.items()) {
    if (v.is_string()) {
      os << k << ": " << v.get<std::string>() << "\n";
    } else if (v.is_array() && !v.empty() && v.front().is_string()) {
      os << k << ":\n";
      for (const auto& line : v) os << "  " << line.get<std::string>() << "\n";
    } else {
      os << k << ": " << v.dump() << "\n";
    }
  }
  return os.str();
}

std::string render(const Json& j, const RunOptions& options) {
  if (options.format == OutputFormat::Text) return render_text(j);
  return j.dump(2) + "\n";
}

double elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since)
      .count();
}

void check_size(const ExponentMatrix& m) {
  if (m.n() > max_n()) {
    throw ValidationError("n = " + std::to_string(m.n()) + " exceeds MULTIDEG_MAX_N = " +
                          std::to_string(max_n()));
  }
}

Json gamma_fields(const MultidegreePolynomial& g) {
  return {{"gamma", to_json(g)}, {"gamma_text", g.to_string()}};
}

}  // namespace

// ---- input ------------------------------------------------------------------

ProblemInput problem_from_json(const Json& j) {
  check_keys(j, "$",
             {"variety", "degrees", "rows", "torus", "pivot", "method", "force", "symbolic",
              "dump_triangulation", "seed"});
  ProblemInput in;
  const bool has_rows = j.contains("rows"), has_torus = j.contains("torus");
  if (has_rows == has_torus) fail("$", "exactly one of \"rows\" and \"torus\" must be given");

  std::size_t n = 0, row_count = 0;
  if (has_rows) {
    in.rows = matrix_from(j["rows"], "$.rows", false);
    n = in.rows->front().size();
    row_count = in.rows->size();
  } else {
    const Json& t = j["torus"];
    check_keys(t, "$.torus", {"A"});
    auto a = matrix_from(require(t, "A", "$.torus"), "$.torus.A", true);
    if (a.size() != a.front().size()) {
      fail("$.torus.A", "must be square (got " + std::to_string(a.size()) + " rows of " +
                            std::to_string(a.front().size()) + " entries)");
    }
    in.torus = TorusMap{std::move(a)};
    n = in.torus->size() + 1;
    row_count = n;
  }
  if (n > max_n()) {
    fail(has_rows ? "$.rows" : "$.torus.A",
         "n = " + std::to_string(n) + " exceeds MULTIDEG_MAX_N = " + std::to_string(max_n()));
  }

  if (auto it = j.find("variety"); it != j.end()) {
    in.variety = variety_from(*it, "$.variety");
  } else if (has_rows) {
    fail("$", "missing required key \"variety\"");
  } else {
    in.variety.dim = n - 1;
  }

  if (auto it = j.find("degrees"); it != j.end()) {
    if (!it->is_array()) fail("$.degrees", "expected an array of positive integers");
    for (std::size_t i = 0; i < it->size(); ++i) {
      Integer d = integer_from((*it)[i], at("$.degrees", i));
      if (d <= 0) fail(at("$.degrees", i), "degree must be positive");
      in.degrees.push_back(d);
    }
  } else if (has_rows) {
    fail("$", "missing required key \"degrees\"");
  } else {
    in.degrees.assign(n, Integer(1));
  }
  if (in.degrees.size() != n) {
    fail("$.degrees", "has " + std::to_string(in.degrees.size()) + " entries but the map has n = " +
                          std::to_string(n) + " columns");
  }
  if (has_torus) {
    if (in.variety.kind != VarietyKind::ProjectiveSpace || in.variety.dim != n - 1) {
      fail("$.variety", "torus input lives on P^" + std::to_string(n - 1));
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (in.degrees[i] != 1) fail(at("$.degrees", i), "torus input uses coordinate hyperplanes");
    }
  }

  if (auto it = j.find("pivot"); it != j.end()) in.pivot = index_from(*it, "$.pivot", row_count);
  if (auto it = j.find("method"); it != j.end()) {
    if (!it->is_string()) fail("$.method", "expected a string");
    try {
      in.method = parse_method(it->get<std::string>());
    } catch (const ValidationError& e) {
      fail("$.method", e.what());
    }
  }
  if (auto it = j.find("force"); it != j.end()) in.force = bool_from(*it, "$.force");
  if (auto it = j.find("symbolic"); it != j.end()) in.symbolic = bool_from(*it, "$.symbolic");
  if (auto it = j.find("dump_triangulation"); it != j.end()) {
    in.dump_triangulation = bool_from(*it, "$.dump_triangulation");
  }
  if (auto it = j.find("seed"); it != j.end()) {
    Integer s = integer_from(*it, "$.seed");
    if (s < 0 || s > std::numeric_limits<std::uint64_t>::max()) fail("$.seed", "out of range");
    in.seed = s.convert_to<std::uint64_t>();
  }

  try {
    (void)geometric_setup(in);
  } catch (const Error& e) {
    fail("$.variety", e.what());
  }
  return in;
}

ProblemInput parse_input(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail("$", std::string("invalid JSON: ") + e.what());
  }
  return problem_from_json(j);
}

ProblemInput parse_input_file(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ValidationError("cannot open input file " + path);
    text.assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
  }
  return parse_input(text);
}

Json to_json(const ProblemInput& in) {
  Json j;
  j["variety"] = variety_json(in.variety);
  Json degrees = Json::array();
  for (const auto& d : in.degrees) degrees.push_back(integer_json(d));
  j["degrees"] = degrees;
  if (in.rows) j["rows"] = matrix_json(*in.rows);
  if (in.torus) j["torus"] = {{"A", matrix_json(in.torus->a)}};
  if (in.pivot) j["pivot"] = *in.pivot + 1;
  j["method"] = to_string(in.method);
  j["force"] = in.force;
  j["symbolic"] = in.symbolic;
  j["dump_triangulation"] = in.dump_triangulation;
  j["seed"] = in.seed;
  return j;
}

ExponentMatrix exponent_matrix(const ProblemInput& in) {
  if (in.rows.has_value() == in.torus.has_value()) {
    throw ValidationError("exactly one of rows and torus must be given");
  }
  if (in.rows) return ExponentMatrix(*in.rows, in.pivot);
  auto m = homogenize_torus(*in.torus);
  return in.pivot ? m.with_pivot(*in.pivot) : m;
}

GeometricSetup geometric_setup(const ProblemInput& in) {
  if (in.variety.kind == VarietyKind::ProjectiveSpace) {
    return projective_space_setup(in.variety.dim, in.degrees);
  }
  return table_setup(in.variety.dim, in.variety.degree, in.degrees, in.variety.entries);
}

// ---- outputs ----------------------------------------------------------------

Json to_json(const MultidegreePolynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.coefficients()) out.push_back(integer_json(c));
  return out;
}

MultidegreePolynomial gamma_from_json(const Json& j) {
  if (!j.is_array()) fail("gamma", "expected an array of integers");
  std::vector<Integer> c;
  for (std::size_t i = 0; i < j.size(); ++i) c.push_back(integer_from(j[i], at("gamma", i)));
  return MultidegreePolynomial(std::move(c));
}

Json to_json(const MultidegreeReport& r) {
  Json j = gamma_fields(r.gamma);
  j["dim"] = r.multidegree_class.dim();
  Json terms = Json::array();
  for (const auto& [key, c] : r.multidegree_class.terms()) {
    terms.push_back({{"subset", subset_json(key.subset)}, {"h", key.h_power}, {"coeff", rational_json(c)}});
  }
  j["class"] = terms;
  j["class_text"] = r.multidegree_class.to_string();
  Json simplices = Json::array();
  for (const auto& s : r.simplices) simplices.push_back(simplex_json(s));
  j["simplices"] = simplices;
  Json points = Json::array();
  for (const auto& p : r.translated_points) points.push_back(point_json(p));
  j["translated_points"] = points;
  j["vertex_flags"] = r.vertex_flags;
  j["pivot"] = r.pivot + 1;
  j["line_bundle_degree"] = integer_json(r.line_bundle_degree);
  j["self_intersection"] = optional_integer_json(r.self_intersection);
  j["base_locus_contribution"] = optional_integer_json(r.base_locus_contribution);
  j["dominant"] = r.dominant;
  Json defaulted = Json::array();
  for (auto s : r.defaulted_subsets) defaulted.push_back(subset_json(s));
  j["defaulted_subsets"] = defaulted;
  j["hypothesis_note"] = r.hypothesis_note;
  return j;
}

MultidegreeReport report_from_json(const Json& j) {
  MultidegreeReport r;
  r.gamma = gamma_from_json(require(j, "gamma", "$"));
  auto dim = int64_from(require(j, "dim", "$"), "$.dim");
  r.multidegree_class = GradedClass(static_cast<std::size_t>(dim));
  const Json& terms = require(j, "class", "$");
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string p = at("$.class", i);
    r.multidegree_class.add(subset_from(require(terms[i], "subset", p), p + ".subset"),
                            static_cast<int>(int64_from(require(terms[i], "h", p), p + ".h")),
                            rational_from(require(terms[i], "coeff", p), p + ".coeff"));
  }
  const Json& simplices = require(j, "simplices", "$");
  for (std::size_t i = 0; i < simplices.size(); ++i) {
    const std::string p = at("$.simplices", i);
    const Json& s = simplices[i];
    SimplexRecord rec;
    const Json& finite = require(s, "finite", p);
    for (std::size_t k = 0; k < finite.size(); ++k) {
      rec.simplex.finite_vertices.push_back(point_from(finite[k], at(p + ".finite", k)));
    }
    const Json& infinite = require(s, "infinite", p);
    for (std::size_t k = 0; k < infinite.size(); ++k) {
      rec.simplex.infinite_directions.push_back(index_from(infinite[k], at(p + ".infinite", k), 64));
    }
    rec.rank = static_cast<std::size_t>(int64_from(require(s, "rank", p), p + ".rank"));
    rec.hvol = integer_from(require(s, "hvol", p), p + ".hvol");
    rec.degree = integer_from(require(s, "degree", p), p + ".degree");
    r.simplices.push_back(std::move(rec));
  }
  const Json& points = require(j, "translated_points", "$");
  for (std::size_t i = 0; i < points.size(); ++i) {
    r.translated_points.push_back(point_from(points[i], at("$.translated_points", i)));
  }
  for (const auto& f : require(j, "vertex_flags", "$")) r.vertex_flags.push_back(f.get<bool>());
  r.pivot = index_from(require(j, "pivot", "$"), "$.pivot", std::numeric_limits<std::size_t>::max());
  r.line_bundle_degree = integer_from(require(j, "line_bundle_degree", "$"), "$.line_bundle_degree");
  r.self_intersection = optional_integer_from(require(j, "self_intersection", "$"), "$.self_intersection");
  r.base_locus_contribution =
      optional_integer_from(require(j, "base_locus_contribution", "$"), "$.base_locus_contribution");
  r.dominant = bool_from(require(j, "dominant", "$"), "$.dominant");
  const Json& defaulted = require(j, "defaulted_subsets", "$");
  for (std::size_t i = 0; i < defaulted.size(); ++i) {
    r.defaulted_subsets.push_back(subset_from(defaulted[i], at("$.defaulted_subsets", i)));
  }
  r.hypothesis_note = require(j, "hypothesis_note", "$").get<std::string>();
  return r;
}

Json to_json(const WellPresentedReport& r) {
  Json projection = Json::array();
  for (const auto& v : r.projection_violations) {
    projection.push_back({{"subset", subset_json(v.subset)}, {"row", v.row + 1}});
  }
  return {{"ok", r.ok},
          {"projection_violations", projection},
          {"sign_violations", sign_violations_json(r.sign_violations)},
          {"translated_sign_violations", sign_violations_json(r.translated_sign_violations)}};
}

WellPresentedReport well_presented_from_json(const Json& j) {
  WellPresentedReport r;
  r.ok = bool_from(require(j, "ok", "$"), "$.ok");
  const Json& projection = require(j, "projection_violations", "$");
  for (std::size_t i = 0; i < projection.size(); ++i) {
    const std::string p = at("$.projection_violations", i);
    r.projection_violations.push_back(
        {subset_from(require(projection[i], "subset", p), p + ".subset"),
         index_from(require(projection[i], "row", p), p + ".row", 64)});
  }
  r.sign_violations = sign_violations_from(require(j, "sign_violations", "$"), "$.sign_violations");
  r.translated_sign_violations = sign_violations_from(require(j, "translated_sign_violations", "$"),
                                                      "$.translated_sign_violations");
  return r;
}

Json to_json(const CrossCheckResult& r) {
  Json routes = Json::object(), texts = Json::object();
  for (const auto& [name, g] : r.routes) {
    routes[name] = to_json(g);
    texts[name] = g.to_string();
  }
  Json j{{"routes", routes},
         {"routes_text", texts},
         {"skipped", r.skipped},
         {"agreement", r.agreement},
         {"discrepancies", r.discrepancies}};
  j["well_presented"] = r.well_presented ? to_json(*r.well_presented) : Json(nullptr);
  if (!r.timing_ms.empty()) j["timing_ms"] = r.timing_ms;
  return j;
}

CrossCheckResult cross_check_from_json(const Json& j) {
  CrossCheckResult r;
  for (const auto& [name, g] : require(j, "routes", "$").items()) r.routes[name] = gamma_from_json(g);
  for (const auto& [name, why] : require(j, "skipped", "$").items()) {
    r.skipped[name] = why.get<std::string>();
  }
  r.agreement = bool_from(require(j, "agreement", "$"), "$.agreement");
  for (const auto& d : require(j, "discrepancies", "$")) r.discrepancies.push_back(d.get<std::string>());
  const Json& wp = require(j, "well_presented", "$");
  if (!wp.is_null()) r.well_presented = well_presented_from_json(wp);
  if (auto it = j.find("timing_ms"); it != j.end()) {
    for (const auto& [name, ms] : it->items()) r.timing_ms[name] = ms.get<double>();
  }
  return r;
}

// ---- cross-check driver -----------------------------------------------------

CrossCheckResult cross_check(const ProblemInput& in, bool timing) {
  auto m = exponent_matrix(in);
  check_size(m);
  auto setup = geometric_setup(in);
  CrossCheckResult out;

  auto timed = [&](const std::string& name, auto&& compute) {
    auto start = std::chrono::steady_clock::now();
    try {
      out.routes[name] = compute();
    } catch (const MethodInapplicable& e) {
      out.skipped[name] = e.what();
    } catch (const NotWellPresented& e) {
      out.skipped[name] = e.what();
    }
    if (timing) out.timing_ms[name] = elapsed_ms(start);
  };

  timed("triangulation", [&] { return multidegree_polynomial(m, setup); });
  timed("symbolic", [&] { return gamma_from_symbolic(symbolic_integral(m, setup), setup); });

  if (m.is_square()) {
    out.well_presented = check_well_presented(m);
    const bool usable = out.well_presented->ok || in.force;
    if (usable) {
      timed("charpoly", [&] { return multidegree_via_charpoly(m, setup, in.force).gamma; });
      timed("prechar", [&] { return prechar_multidegrees(m, setup, in.force); });
      if (in.torus) timed("torus", [&] { return torus_multidegrees(*in.torus, in.force); });
    } else {
      for (const char* name : {"charpoly", "prechar"}) out.skipped[name] = "map is not well-presented";
      if (in.torus) out.skipped["torus"] = "map is not well-presented";
    }
  } else {
    for (const char* name : {"charpoly", "prechar"}) {
      out.skipped[name] = "exponent matrix is not square";
    }
  }

  out.agreement = !out.routes.empty();
  const auto& reference = out.routes.begin()->second;
  const auto& reference_name = out.routes.begin()->first;
  for (const auto& [name, g] : out.routes) {
    if (!(g == reference)) {
      out.agreement = false;
      out.discrepancies.push_back(name + ": " + g.to_string() + " vs " + reference_name + ": " +
                                  reference.to_string());
    }
  }
  return out;
}

// ---- run --------------------------------------------------------------------

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Validation:
    case ErrorKind::Isobaric:
    case ErrorKind::DivisionByZero:
      return 1;
    case ErrorKind::NonSquare:
    case ErrorKind::NotWellPresented:
    case ErrorKind::MethodInapplicable:
      return 2;
    case ErrorKind::InvariantBreach:
      return 3;
  }
  return 3;
}

Json error_envelope(const Error& e, const Json& detail) {
  Json err{{"kind", to_string(e.kind())}, {"message", e.what()}};
  if (!detail.is_null()) err["detail"] = detail;
  return {{"error", err}};
}

namespace {

Json compute_triangulation(const ProblemInput& in, const ExponentMatrix& m,
                           const GeometricSetup& setup) {
  Json j = to_json(report(m, setup));
  j["method"] = "triangulation";
  if (in.symbolic) j["symbolic"] = symbolic_integral(m, setup).to_string();
  if (in.dump_triangulation) {
    Json lines = Json::array();
    auto nt = newton_triangulation(m);
    for (const auto& t : nt.triangulation.simplices) lines.push_back(dump(t));
    j["triangulation_dump"] = lines;
  }
  return j;
}

// Throws NotWellPresented with the report attached through `detail`.
struct NotWellPresentedWithReport {
  NotWellPresented error;
  Json detail;
};

void require_route_applicable(const ProblemInput& in, const ExponentMatrix& m) {
  if (!m.is_square()) {
    throw NonSquareError("this method needs a square exponent matrix (" +
                         std::to_string(m.row_count()) + " rows, " + std::to_string(m.n()) +
                         " columns)");
  }
  auto wp = check_well_presented(m);
  if (!wp.ok && !in.force) {
    throw NotWellPresentedWithReport{
        NotWellPresented("map is not well-presented; rerun with --force to compute anyway"),
        {{"well_presented", to_json(wp)}}};
  }
}

Json dispatch(const std::string& command, const ProblemInput& in, const RunOptions& options) {
  if (command == "homogenize") {
    if (!in.torus) throw ValidationError("homogenize needs torus input");
    ProblemInput out = in;
    out.rows = homogenize_torus(*in.torus).rows();
    out.torus.reset();
    out.pivot.reset();
    return to_json(out);
  }

  auto m = exponent_matrix(in);
  check_size(m);
  auto setup = geometric_setup(in);

  if (command == "check-wp") return to_json(check_well_presented(m));

  if (command == "segre") {
    auto s = segre_class(m, setup);
    Json j{{"segre", s.segre.series.to_string()},
           {"complement", s.complement.series.to_string()},
           {"truncation", s.segre.truncation}};
    if (setup.classes_proportional_to_h()) j["segre_degrees"] = to_json(segre_degrees(s.segre, setup));
    return j;
  }

  if (command == "symbolic") {
    auto e = symbolic_integral(m, setup);
    Json j{{"expression", e.to_string()}};
    if (setup.classes_proportional_to_h()) {
      auto g = gamma_from_symbolic(e, setup);
      j.update(gamma_fields(g));
    }
    return j;
  }

  if (command != "compute") {
    throw ValidationError("unknown command \"" + command +
                          "\" (expected compute, check-wp, homogenize, segre or symbolic)");
  }

  switch (in.method) {
    case Method::Triangulation:
      return compute_triangulation(in, m, setup);
    case Method::Charpoly: {
      require_route_applicable(in, m);
      auto r = multidegree_via_charpoly(m, setup, in.force);
      Json j = gamma_fields(r.gamma);
      j["method"] = "charpoly";
      j["charpoly"] = r.charpoly.to_string();
      j["forced"] = r.forced;
      if (r.forced) j["warning"] = r.warning;
      return j;
    }
    case Method::Prechar: {
      require_route_applicable(in, m);
      Json j = gamma_fields(prechar_multidegrees(m, setup, true));
      j["method"] = "prechar";
      j["class"] = prechar_class(m, setup, true).to_string();
      j["forced"] = !check_well_presented(m).ok;
      return j;
    }
    case Method::All: {
      Json j = to_json(cross_check(in, options.timing));
      j["method"] = "all";
      if (m.is_square()) {
        auto b = basrel_identity_check(m, 20, in.seed);
        j["identity_check"] = {{"ok", b.ok}, {"samples", b.samples}, {"failures", b.failures}};
      }
      return j;
    }
  }
  throw InvariantBreach("unhandled method");
}

}  // namespace

RunResult run(const std::string& command, const ProblemInput& input, const RunOptions& options) {
  auto envelope = [&](const Error& e, const Json& detail) {
    Json j = error_envelope(e, detail);
    if (options.format == OutputFormat::Text) {
      std::string text = std::string("error (") + to_string(e.kind()) + "): " + e.what() + "\n";
      if (!detail.is_null()) text += render_text(detail);
      return RunResult{exit_code_for(e.kind()), text};
    }
    return RunResult{exit_code_for(e.kind()), j.dump(2) + "\n"};
  };
  try {
    auto start = std::chrono::steady_clock::now();
    Json j = dispatch(command, input, options);
    if (options.timing && command != "compute") j["timing_ms"] = elapsed_ms(start);
    if (options.timing && command == "compute" && !j.contains("timing_ms")) {
      j["timing_ms"] = elapsed_ms(start);
    }
    return {0, render(j, options)};
  } catch (const NotWellPresentedWithReport& e) {
    return envelope(e.error, e.detail);
  } catch (const Error& e) {
    return envelope(e, nullptr);
  } catch (const std::exception& e) {
    return envelope(InvariantBreach(std::string("internal error: ") + e.what()), nullptr);
  }
}

}  // namespace multideg::io
