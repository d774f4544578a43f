#pragma once

// Self-checking sweep over the two defective families of nodal sections of
// P^{2n} and of complete intersections of quadrics:
//   * complete intersections of type (k-1, ..., k-1) in P^n: Koszul chase at
//     twist k, cross-checked against the exact rank of the grid node set;
//   * degeneracy loci of O^{h+1} -> O(1)^{h+n}: Eagon-Northcott chase at
//     twist 2 and node counts.
// Every cell is compared against the published verdicts.

#include <algorithm>
#include <cstdint>
#include <future>
#include <optional>
#include <string>
#include <vector>

#include "icstalk/bott.hpp"
#include "icstalk/combinatorics.hpp"
#include "icstalk/json_io.hpp"
#include "icstalk/points.hpp"
#include "icstalk/rational.hpp"

namespace icstalk {

struct ReproductionLimits {
  std::int64_t max_n = 6;
  std::int64_t max_k = 8;
  std::int64_t max_h = 6;
  std::int64_t grid_cap = 512;  // largest (k-1)^n for which the rank oracle runs
  friend bool operator==(const ReproductionLimits&, const ReproductionLimits&) = default;
};

struct CiCell {
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::int64_t node_count = 0;
  bool chase_vanishes = false;
  std::optional<std::int64_t> chase_exact_h1;
  std::optional<std::int64_t> grid_h1;
  bool expected_vanishes = false;
  bool consistent = true;
  friend bool operator==(const CiCell&, const CiCell&) = default;
};

struct EnCell {
  std::int64_t n = 0;
  std::int64_t h = 0;
  std::int64_t node_count = 0;
  bool chase_vanishes = false;
  std::int64_t upper_bound = 0;
  bool expected_vanishes = false;
  friend bool operator==(const EnCell&, const EnCell&) = default;
};

struct SeveriSample {
  std::int64_t big_n = 0;
  std::int64_t delta = 0;
  std::int64_t expected_dim = 0;
  friend bool operator==(const SeveriSample&, const SeveriSample&) = default;
};

struct ThresholdRow {
  std::int64_t n = 0;
  Rational bound;
  std::vector<std::int64_t> admissible_k;
  friend bool operator==(const ThresholdRow&, const ThresholdRow&) = default;
};

struct PaperExamplesReport {
  ReproductionLimits limits;
  std::vector<CiCell> ci_table;    // sorted by (n, k)
  std::vector<EnCell> en_table;    // sorted by (n, h)
  std::vector<ThresholdRow> thresholds;
  std::vector<SeveriSample> severi_samples;
  std::vector<std::string> deviations;

  bool reproduced() const { return deviations.empty(); }
  friend bool operator==(const PaperExamplesReport&, const PaperExamplesReport&) = default;
};

/// Published verdict: the nodes of the complete intersection impose
/// independent conditions when n = 2, k <= 4; n = 3, k <= 3; n >= 4, k = 2.
inline bool published_ci_vanishes(std::int64_t n, std::int64_t k) {
  if (k < 2) return false;
  if (n == 2) return k <= 4;
  if (n == 3) return k <= 3;
  return n >= 4 && k == 2;
}

/// Published verdict for the quadric family: 1 <= h <= 2.
inline bool published_en_vanishes(std::int64_t h) { return h >= 1 && h <= 2; }

inline CiCell ci_cell(std::int64_t n, std::int64_t k, std::int64_t grid_cap) {
  CiCell c;
  c.n = n;
  c.k = k;
  c.node_count = node_count_ci(n, k);
  const auto verdict =
      h1_vanishing_chase(koszul_resolution(n, std::vector<std::int64_t>(static_cast<std::size_t>(n), k - 1)), k);
  c.chase_vanishes = verdict.vanishes;
  c.chase_exact_h1 = verdict.exact_h1;
  c.expected_vanishes = published_ci_vanishes(n, k);
  if (c.node_count <= grid_cap)
    c.grid_h1 = conditions_report(grid_nodes(static_cast<std::size_t>(n), k), k).h1_ideal;
  if (c.grid_h1) {
    if (c.chase_vanishes && *c.grid_h1 != 0) c.consistent = false;
    if (c.chase_exact_h1 && *c.chase_exact_h1 != *c.grid_h1) c.consistent = false;
  }
  return c;
}

inline PaperExamplesReport paper_examples(const ReproductionLimits& limits = {}) {
  if (limits.max_n < 2 || limits.max_k < 2 || limits.max_h < 1)
    throw InputError("paper-examples needs max_n >= 2, max_k >= 2, max_h >= 1");
  PaperExamplesReport rep;
  rep.limits = limits;

  // Grid ranks dominate the cost; each cell is independent.
  std::vector<std::future<CiCell>> pending;
  for (std::int64_t n = 2; n <= limits.max_n; ++n)
    for (std::int64_t k = 2; k <= limits.max_k; ++k)
      pending.push_back(std::async(std::launch::async, ci_cell, n, k, limits.grid_cap));
  for (auto& f : pending) rep.ci_table.push_back(f.get());

  for (std::int64_t n = 2; n <= limits.max_n; ++n) {
    const auto t = ci_threshold(n);
    rep.thresholds.push_back({n, t.bound, t.admissible_k});
  }

  for (std::int64_t n = 2; n <= limits.max_n; ++n)
    for (std::int64_t h = 1; h <= limits.max_h; ++h) {
      EnCell c;
      c.n = n;
      c.h = h;
      c.node_count = node_count_quadrics(n, h);
      const auto v = h1_vanishing_chase(eagon_northcott_resolution(n, h), 2);
      c.chase_vanishes = v.vanishes;
      c.upper_bound = v.upper_bound;
      c.expected_vanishes = published_en_vanishes(h);
      rep.en_table.push_back(c);
    }

  // Nodal sections of P^{2n} by degree-k hypersurfaces containing P^n:
  // N = binom(2n+k, 2n) - 1 and delta = (k-1)^n.
  rep.severi_samples.push_back({9, 4, severi_expected_dim(9, 4)});
  for (const auto& c : rep.ci_table) {
    if (!c.expected_vanishes) continue;
    const std::int64_t big_n = binomial(2 * c.n + c.k, 2 * c.n) - 1;
    rep.severi_samples.push_back({big_n, c.node_count, severi_expected_dim(big_n, c.node_count)});
  }

  auto cell = [](std::int64_t n, std::int64_t x) {
    return "(" + std::to_string(n) + ", " + std::to_string(x) + ")";
  };
  for (const auto& c : rep.ci_table) {
    if (c.chase_vanishes != c.expected_vanishes)
      rep.deviations.push_back("complete intersection " + cell(c.n, c.k) +
                               ": chase verdict differs from the published one");
    if (!c.consistent)
      rep.deviations.push_back("complete intersection " + cell(c.n, c.k) +
                               ": chase and grid rank disagree");
  }
  for (const auto& t : rep.thresholds)
    for (std::int64_t k = 2; k <= limits.max_k; ++k) {
      const bool admissible =
          std::find(t.admissible_k.begin(), t.admissible_k.end(), k) != t.admissible_k.end();
      if (admissible != published_ci_vanishes(t.n, k))
        rep.deviations.push_back("threshold " + cell(t.n, k) + " differs from the published set");
    }
  for (const auto& c : rep.en_table) {
    if (c.chase_vanishes != c.expected_vanishes)
      rep.deviations.push_back("quadric family " + cell(c.n, c.h) +
                               ": chase verdict differs from the published one");
    if (c.h == 1 && c.node_count != c.n + 1)
      rep.deviations.push_back("quadric family " + cell(c.n, c.h) + ": node count is not n+1");
    if (c.h == 2 && 2 * c.node_count != (c.n + 1) * (c.n + 2))
      rep.deviations.push_back("quadric family " + cell(c.n, c.h) +
                               ": node count is not (n+1)(n+2)/2");
  }
  return rep;
}

inline Json to_json(const PaperExamplesReport& r) {
  auto opt = [](const std::optional<std::int64_t>& v) { return v ? Json(*v) : Json(nullptr); };
  Json ci = Json::array();
  for (const auto& c : r.ci_table)
    ci.push_back(Json{{"n", c.n},
                      {"k", c.k},
                      {"node_count", c.node_count},
                      {"chase_vanishes", c.chase_vanishes},
                      {"chase_exact_h1", opt(c.chase_exact_h1)},
                      {"grid_h1", opt(c.grid_h1)},
                      {"expected_vanishes", c.expected_vanishes},
                      {"consistent", c.consistent}});
  Json en = Json::array();
  for (const auto& c : r.en_table)
    en.push_back(Json{{"n", c.n},
                      {"h", c.h},
                      {"node_count", c.node_count},
                      {"chase_vanishes", c.chase_vanishes},
                      {"upper_bound", c.upper_bound},
                      {"expected_vanishes", c.expected_vanishes}});
  Json th = Json::array();
  for (const auto& t : r.thresholds)
    th.push_back(Json{{"n", t.n}, {"bound", rational_to_json(t.bound)}, {"admissible_k", t.admissible_k}});
  Json sev = Json::array();
  for (const auto& s : r.severi_samples)
    sev.push_back(Json{{"N", s.big_n}, {"delta", s.delta}, {"expected_dim", s.expected_dim}});
  return Json{{"limits",
               {{"max_n", r.limits.max_n},
                {"max_k", r.limits.max_k},
                {"max_h", r.limits.max_h},
                {"grid_cap", r.limits.grid_cap}}},
              {"ci_table", std::move(ci)},
              {"en_table", std::move(en)},
              {"thresholds", std::move(th)},
              {"severi_samples", std::move(sev)},
              {"deviations", r.deviations},
              {"reproduced", r.reproduced()}};
}

inline PaperExamplesReport paper_examples_from_json(const Json& j) {
  using namespace jsonio;
  auto opt = [](const Json& o, const char* key) -> std::optional<std::int64_t> {
    const auto& v = field(o, key);
    if (v.is_null()) return std::nullopt;
    return as_int(v, key);
  };
  PaperExamplesReport r;
  const auto& lim = field(j, "limits");
  r.limits = {int_field(lim, "max_n"), int_field(lim, "max_k"), int_field(lim, "max_h"),
              int_field(lim, "grid_cap")};
  for (const auto& c : array_field(j, "ci_table"))
    r.ci_table.push_back({int_field(c, "n"), int_field(c, "k"), int_field(c, "node_count"),
                          bool_field(c, "chase_vanishes"), opt(c, "chase_exact_h1"),
                          opt(c, "grid_h1"), bool_field(c, "expected_vanishes"),
                          bool_field(c, "consistent")});
  for (const auto& c : array_field(j, "en_table"))
    r.en_table.push_back({int_field(c, "n"), int_field(c, "h"), int_field(c, "node_count"),
                          bool_field(c, "chase_vanishes"), int_field(c, "upper_bound"),
                          bool_field(c, "expected_vanishes")});
  for (const auto& t : array_field(j, "thresholds"))
    r.thresholds.push_back({int_field(t, "n"), rational_from_json(field(t, "bound")),
                            int_list(field(t, "admissible_k"), "admissible_k")});
  for (const auto& s : array_field(j, "severi_samples"))
    r.severi_samples.push_back(
        {int_field(s, "N"), int_field(s, "delta"), int_field(s, "expected_dim")});
  for (const auto& d : array_field(j, "deviations")) {
    if (!d.is_string()) throw InputError("deviations must be strings");
    r.deviations.push_back(d.get<std::string>());
  }
  return r;
}

}  // namespace icstalk
