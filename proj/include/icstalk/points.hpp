#pragma once

// Node sets in projective space: whether they impose independent conditions
// on degree-d forms, and the linear checks on the nodes that govern the local
// structure of the Severi variety.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "icstalk/combinatorics.hpp"
#include "icstalk/errors.hpp"
#include "icstalk/linalg.hpp"
#include "icstalk/matrix.hpp"
#include "icstalk/rational.hpp"

namespace icstalk {

/// Distinct points of P^n in homogeneous coordinates, each scaled so that
/// its first nonzero coordinate is 1. Construct through make().
class ProjectivePointSet {
 public:
  ProjectivePointSet() = default;

  static ProjectivePointSet make(std::size_t ambient_dim, std::vector<RatVector> points) {
    std::set<RatVector, VectorLess> seen;
    for (std::size_t i = 0; i < points.size(); ++i) {
      auto& p = points[i];
      if (p.size() != ambient_dim + 1)
        throw InputError("point " + std::to_string(i) + " has " + std::to_string(p.size()) +
                         " coordinates, expected " + std::to_string(ambient_dim + 1));
      normalize(p, i);
      if (!seen.insert(p).second)
        throw InputError("point " + std::to_string(i) + " repeats an earlier point");
    }
    ProjectivePointSet s;
    s.ambient_dim_ = ambient_dim;
    s.points_ = std::move(points);
    return s;
  }

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<RatVector>& points() const { return points_; }

  /// delta x (n+1) matrix of coordinates.
  RatMatrix coordinate_matrix() const {
    RatMatrix m(points_.size(), ambient_dim_ + 1);
    for (std::size_t i = 0; i < points_.size(); ++i)
      for (std::size_t j = 0; j <= ambient_dim_; ++j) m(i, j) = points_[i][j];
    return m;
  }

  friend bool operator==(const ProjectivePointSet&, const ProjectivePointSet&) = default;

 private:
  struct VectorLess {
    bool operator()(const RatVector& a, const RatVector& b) const {
      return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
  };

  static void normalize(RatVector& p, std::size_t i) {
    std::size_t lead = 0;
    while (lead < p.size() && p[lead].is_zero()) ++lead;
    if (lead == p.size()) throw InputError("point " + std::to_string(i) + " is the zero vector");
    const Rational inv = Rational(1) / p[lead];
    for (auto& x : p) x *= inv;
  }

  std::size_t ambient_dim_ = 0;
  std::vector<RatVector> points_;
};

using Exponents = std::vector<std::int64_t>;

/// Exponent vectors of the degree-d monomials in x_0..x_n, in descending
/// lexicographic order (x_0^d first).
inline std::vector<Exponents> monomial_basis(std::size_t n, std::int64_t d) {
  if (d < 0) throw InputError("monomial degree must be nonnegative");
  std::vector<Exponents> out;
  Exponents cur(n + 1, 0);
  // Recursive fill: choose the exponent of x_i from high to low.
  auto fill = [&](auto&& self, std::size_t i, std::int64_t left) -> void {
    if (i == n) {
      cur[n] = left;
      out.push_back(cur);
      return;
    }
    for (std::int64_t e = left; e >= 0; --e) {
      cur[i] = e;
      self(self, i + 1, left - e);
    }
  };
  fill(fill, 0, d);
  return out;
}

/// Row i holds every degree-d monomial evaluated at point i.
inline RatMatrix evaluation_matrix(const ProjectivePointSet& pts, std::int64_t d) {
  const auto monos = monomial_basis(pts.ambient_dim(), d);
  RatMatrix m(pts.size(), monos.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto& x = pts.points()[i];
    // powers[j][e] = x_j^e
    std::vector<std::vector<Rational>> powers(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) {
      powers[j].reserve(static_cast<std::size_t>(d) + 1);
      powers[j].emplace_back(1);
      for (std::int64_t e = 1; e <= d; ++e) powers[j].push_back(powers[j].back() * x[j]);
    }
    for (std::size_t c = 0; c < monos.size(); ++c) {
      Rational v(1);
      for (std::size_t j = 0; j < x.size(); ++j)
        if (monos[c][j] != 0) v *= powers[j][static_cast<std::size_t>(monos[c][j])];
      m(i, c) = std::move(v);
    }
  }
  return m;
}

struct ConditionsReport {
  std::int64_t delta = 0;
  std::int64_t degree = 0;
  std::int64_t h0_ambient = 0;  // binom(n+d, n)
  std::int64_t rank = 0;
  std::int64_t h0_ideal = 0;    // h0_ambient - rank
  std::int64_t h1_ideal = 0;    // delta - rank
  bool independent = false;
  friend bool operator==(const ConditionsReport&, const ConditionsReport&) = default;
};

inline ConditionsReport conditions_report(const ProjectivePointSet& pts, std::int64_t d) {
  ConditionsReport r;
  r.delta = static_cast<std::int64_t>(pts.size());
  r.degree = d;
  r.h0_ambient = binomial(static_cast<std::int64_t>(pts.ambient_dim()) + d,
                          static_cast<std::int64_t>(pts.ambient_dim()));
  r.rank = static_cast<std::int64_t>(rank(evaluation_matrix(pts, d)));
  r.h0_ideal = r.h0_ambient - r.rank;
  r.h1_ideal = r.delta - r.rank;
  r.independent = r.h1_ideal == 0;
  return r;
}

/// Projective dimension of the linear span of the points (-1 when empty).
inline std::int64_t node_span_dim(const ProjectivePointSet& pts) {
  return static_cast<std::int64_t>(rank(pts.coordinate_matrix())) - 1;
}

/// The nodes read as hyperplanes of the dual space P^N are the tangent
/// hyperplanes of the branches through the section; the branches cross
/// normally iff these are linearly independent.
struct NormalCrossingCheck {
  bool independent_branches = false;
  std::int64_t tangent_intersection_dim = 0;  // N - rank
  friend bool operator==(const NormalCrossingCheck&, const NormalCrossingCheck&) = default;
};

inline NormalCrossingCheck normal_crossing_check(const ProjectivePointSet& pts) {
  const auto r = static_cast<std::int64_t>(rank(pts.coordinate_matrix()));
  return {r == static_cast<std::int64_t>(pts.size()),
          static_cast<std::int64_t>(pts.ambient_dim()) - r};
}

/// Expected dimension N - r of the locus of r-nodal sections.
inline std::int64_t severi_expected_dim(std::int64_t big_n, std::int64_t r) {
  if (r < 0 || big_n < 0) throw InputError("Severi dimension needs nonnegative N and r");
  if (r > big_n) throw InputError("node count r exceeds N");
  return big_n - r;
}

/// (k-1)^n points of P^n cut out by f_i = prod_j (x_i - c_{i,j} x_n),
/// i = 0..n-1. `parameters[i]` lists the k-1 distinct values c_{i,j};
/// the default is c_{i,j} = j. Points are ordered lexicographically in
/// (j_0, ..., j_{n-1}).
inline ProjectivePointSet grid_nodes(std::size_t n, std::int64_t k,
                                     std::optional<std::vector<RatVector>> parameters = {}) {
  if (n < 1) throw InputError("grid needs n >= 1");
  if (k < 2) throw InputError("grid needs k >= 2");
  const auto per_axis = static_cast<std::size_t>(k - 1);
  std::vector<RatVector> params;
  if (parameters) {
    params = std::move(*parameters);
    if (params.size() != n) throw InputError("grid needs one parameter list per coordinate");
    for (const auto& list : params) {
      if (list.size() != per_axis)
        throw InputError("grid parameter list must have k-1 = " + std::to_string(per_axis) +
                         " entries");
      std::set<Rational> distinct(list.begin(), list.end());
      if (distinct.size() != list.size()) throw InputError("grid parameters repeat a value");
    }
  } else {
    params.assign(n, RatVector{});
    for (auto& list : params)
      for (std::size_t j = 1; j <= per_axis; ++j) list.emplace_back(static_cast<long>(j));
  }

  std::vector<RatVector> points;
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    RatVector p(n + 1);
    for (std::size_t i = 0; i < n; ++i) p[i] = params[i][idx[i]];
    p[n] = Rational(1);
    points.push_back(std::move(p));
    std::size_t i = n;
    while (i > 0 && idx[i - 1] + 1 == per_axis) idx[--i] = 0;
    if (i == 0) break;
    ++idx[i - 1];
  }
  return ProjectivePointSet::make(n, std::move(points));
}

/// (k-1)^n nodes of a complete intersection of type (k-1, ..., k-1) in P^n.
inline std::int64_t node_count_ci(std::int64_t n, std::int64_t k) {
  if (k < 2) throw InputError("node_count_ci needs k >= 2");
  if (n < 0) throw InputError("node_count_ci needs n >= 0");
  return checked_pow(k - 1, n);
}

/// binom(n+h, n) points of the degeneracy locus of a general map
/// O^{h+1} -> O(1)^{h+n} on P^n.
inline std::int64_t node_count_quadrics(std::int64_t n, std::int64_t num_quadrics) {
  if (num_quadrics < 1) throw InputError("node_count_quadrics needs at least one quadric");
  if (n < 0) throw InputError("node_count_quadrics needs n >= 0");
  return binomial(n + num_quadrics, n);
}

}  // namespace icstalk
