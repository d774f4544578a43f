#pragma once

// JSON documents for every input and report. Integers stay JSON integers;
// rationals that are not integers (or do not fit in 64 bits) become "a/b"
// strings. Schema violations raise InputError.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "icstalk/bott.hpp"
#include "icstalk/errors.hpp"
#include "icstalk/matrix.hpp"
#include "icstalk/monodromy.hpp"
#include "icstalk/points.hpp"
#include "icstalk/rational.hpp"
#include "json.hpp"

namespace icstalk {

using Json = nlohmann::json;

namespace jsonio {

inline const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw InputError("expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("missing field \"") + key + "\"");
  return *it;
}

inline std::int64_t as_int(const Json& j, const std::string& what) {
  if (j.is_number_integer()) return j.get<std::int64_t>();
  if (j.is_number_unsigned()) {
    const auto u = j.get<std::uint64_t>();
    if (u > static_cast<std::uint64_t>(INT64_MAX)) throw InputError(what + " is out of range");
    return static_cast<std::int64_t>(u);
  }
  throw InputError(what + " must be an integer");
}

inline std::int64_t int_field(const Json& j, const char* key) {
  return as_int(field(j, key), std::string("field \"") + key + "\"");
}

inline std::int64_t count_field(const Json& j, const char* key) {
  const auto v = int_field(j, key);
  if (v < 0) throw InputError(std::string("field \"") + key + "\" must be nonnegative");
  return v;
}

inline bool bool_field(const Json& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_boolean()) throw InputError(std::string("field \"") + key + "\" must be a boolean");
  return v.get<bool>();
}

inline const Json& array_field(const Json& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_array()) throw InputError(std::string("field \"") + key + "\" must be an array");
  return v;
}

inline std::vector<std::int64_t> int_list(const Json& j, const std::string& what) {
  if (!j.is_array()) throw InputError(what + " must be an array");
  std::vector<std::int64_t> out;
  for (const auto& x : j) out.push_back(as_int(x, what + " entry"));
  return out;
}

}  // namespace jsonio

inline Json rational_to_json(const Rational& r) {
  if (auto v = r.to_int64()) return Json(*v);
  return Json(r.str());
}

inline Rational rational_from_json(const Json& j) {
  if (j.is_number_integer() || j.is_number_unsigned()) {
    if (j.is_number_unsigned()) return Rational::parse(std::to_string(j.get<std::uint64_t>()));
    return Rational::parse(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_float()) throw InputError("floating point numbers are not accepted; use \"a/b\"");
  throw InputError("expected a rational (integer or \"a/b\" string)");
}

inline Json vector_to_json(const RatVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(rational_to_json(x));
  return out;
}

inline RatVector vector_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("expected an array of rationals");
  RatVector v;
  v.reserve(j.size());
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

inline Json matrix_to_json(const RatMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rational_to_json(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

inline RatMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("matrix must be an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows ? (j[0].is_array() ? j[0].size() : 0) : 0;
  std::vector<Rational> entries;
  entries.reserve(rows * cols);
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != cols) throw InputError("matrix rows must have equal length");
    for (const auto& x : row) entries.push_back(rational_from_json(x));
  }
  return RatMatrix(rows, cols, std::move(entries));
}

// ---------------------------------------------------------------- monodromy

inline Json to_json(const MonodromyData& d) {
  Json j;
  j["dim"] = d.dim;
  j["pairing"] = matrix_to_json(d.pairing);
  Json cycles = Json::array();
  for (const auto& c : d.cycles) cycles.push_back(vector_to_json(c));
  j["cycles"] = std::move(cycles);
  j["h_ambient"] = d.h_ambient;
  if (d.fiber_dim) j["fiber_dim"] = *d.fiber_dim;
  return j;
}

inline MonodromyData monodromy_from_json(const Json& j) {
  MonodromyData d;
  d.dim = static_cast<std::size_t>(jsonio::count_field(j, "dim"));
  d.pairing = matrix_from_json(jsonio::field(j, "pairing"));
  for (const auto& c : jsonio::array_field(j, "cycles")) d.cycles.push_back(vector_from_json(c));
  d.h_ambient = jsonio::count_field(j, "h_ambient");
  if (j.contains("fiber_dim") && !j["fiber_dim"].is_null())
    d.fiber_dim = jsonio::int_field(j, "fiber_dim");
  if (auto err = detail::shape_problem(d)) throw InputError(*err);
  return d;
}

inline Json to_json(const PerverseFiltration& f) {
  return Json{{"below", f.below}, {"level0", f.level0}, {"level1", f.level1}, {"total", f.total}};
}

inline Json to_json(const IcStalkReport& r) {
  return Json{{"h0", r.h0},
              {"h1", r.h1},
              {"higher", r.higher},
              {"span_dim", r.span_dim},
              {"excision_rank", r.excision_rank},
              {"h_top_singular", r.h_top_singular},
              {"defect", r.defect},
              {"filtration", to_json(r.filtration)}};
}

inline IcStalkReport ic_report_from_json(const Json& j) {
  IcStalkReport r;
  r.h0 = jsonio::count_field(j, "h0");
  r.h1 = jsonio::count_field(j, "h1");
  r.higher = jsonio::int_list(jsonio::field(j, "higher"), "higher");
  r.span_dim = jsonio::count_field(j, "span_dim");
  r.excision_rank = jsonio::count_field(j, "excision_rank");
  r.h_top_singular = jsonio::count_field(j, "h_top_singular");
  r.defect = jsonio::count_field(j, "defect");
  const auto& f = jsonio::field(j, "filtration");
  r.filtration = {jsonio::int_field(f, "below"), jsonio::int_field(f, "level0"),
                  jsonio::int_field(f, "level1"), jsonio::int_field(f, "total")};
  return r;
}

// ------------------------------------------------------------------- points

inline Json to_json(const ProjectivePointSet& s) {
  Json pts = Json::array();
  for (const auto& p : s.points()) pts.push_back(vector_to_json(p));
  return Json{{"ambient_dim", s.ambient_dim()}, {"points", std::move(pts)}};
}

inline ProjectivePointSet point_set_from_json(const Json& j) {
  const auto n = static_cast<std::size_t>(jsonio::count_field(j, "ambient_dim"));
  std::vector<RatVector> pts;
  for (const auto& p : jsonio::array_field(j, "points")) pts.push_back(vector_from_json(p));
  return ProjectivePointSet::make(n, std::move(pts));
}

inline Json to_json(const ConditionsReport& r) {
  return Json{{"delta", r.delta},       {"degree", r.degree},     {"h0_ambient", r.h0_ambient},
              {"rank", r.rank},         {"h0_ideal", r.h0_ideal}, {"h1_ideal", r.h1_ideal},
              {"independent", r.independent}};
}

inline ConditionsReport conditions_from_json(const Json& j) {
  ConditionsReport r;
  r.delta = jsonio::count_field(j, "delta");
  r.degree = jsonio::count_field(j, "degree");
  r.h0_ambient = jsonio::count_field(j, "h0_ambient");
  r.rank = jsonio::count_field(j, "rank");
  r.h0_ideal = jsonio::count_field(j, "h0_ideal");
  r.h1_ideal = jsonio::count_field(j, "h1_ideal");
  r.independent = jsonio::bool_field(j, "independent");
  return r;
}

inline Json to_json(const NormalCrossingCheck& c) {
  return Json{{"independent_branches", c.independent_branches},
              {"tangent_intersection_dim", c.tangent_intersection_dim}};
}

inline NormalCrossingCheck normal_crossing_from_json(const Json& j) {
  return {jsonio::bool_field(j, "independent_branches"),
          jsonio::int_field(j, "tangent_intersection_dim")};
}

// --------------------------------------------------------------------- bott

inline Json to_json(const LineBundleSum& s) {
  Json out = Json::array();
  for (const auto& p : s.summands()) out.push_back(Json{{"twist", p.twist}, {"mult", p.mult}});
  return out;
}

inline LineBundleSum line_bundle_sum_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("resolution term must be an array of summands");
  std::vector<LineBundleSummand> parts;
  for (const auto& s : j) parts.push_back({jsonio::int_field(s, "twist"), jsonio::int_field(s, "mult")});
  return LineBundleSum::make(std::move(parts));
}

inline Json to_json(const Resolution& r) {
  Json terms = Json::array();
  for (const auto& t : r.terms) terms.push_back(to_json(t));
  return Json{{"ambient_dim", r.ambient_dim},
              {"resolved_twist", r.resolved_twist},
              {"terms", std::move(terms)}};
}

inline Resolution resolution_from_json(const Json& j) {
  Resolution r;
  r.ambient_dim = jsonio::int_field(j, "ambient_dim");
  r.resolved_twist = jsonio::int_field(j, "resolved_twist");
  for (const auto& t : jsonio::array_field(j, "terms")) r.terms.push_back(line_bundle_sum_from_json(t));
  r.check();
  return r;
}

inline Json to_json(const ChaseVerdict& v) {
  Json obs = Json::array();
  for (const auto& o : v.obstructions) obs.push_back(Json{{"p", o.p}, {"twist", o.twist}, {"value", o.value}});
  return Json{{"target_twist", v.target_twist},
              {"upper_bound", v.upper_bound},
              {"vanishes", v.vanishes},
              {"exact_h1", v.exact_h1 ? Json(*v.exact_h1) : Json(nullptr)},
              {"obstructions", std::move(obs)}};
}

inline ChaseVerdict chase_from_json(const Json& j) {
  ChaseVerdict v;
  v.target_twist = jsonio::int_field(j, "target_twist");
  v.upper_bound = jsonio::count_field(j, "upper_bound");
  v.vanishes = jsonio::bool_field(j, "vanishes");
  const auto& e = jsonio::field(j, "exact_h1");
  if (!e.is_null()) v.exact_h1 = jsonio::as_int(e, "exact_h1");
  for (const auto& o : jsonio::array_field(j, "obstructions"))
    v.obstructions.push_back(
        {jsonio::int_field(o, "p"), jsonio::int_field(o, "twist"), jsonio::int_field(o, "value")});
  return v;
}

/// Parses text, converting library parse failures into InputError.
inline Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace icstalk
