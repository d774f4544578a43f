#pragma once

// Cohomology of sums of line bundles on P^n and a chase through a
// line-bundle resolution
//
//   ... -> C_2 -> C_1 -> F -> 0,   F = I(t0),
//
// which bounds h^1(F(t - t0)) by sum_p h^p(C_p(t - t0)) by splitting the
// resolution into short exact sequences.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "icstalk/combinatorics.hpp"
#include "icstalk/errors.hpp"
#include "icstalk/rational.hpp"

namespace icstalk {

/// h^q(P^n, O(a)).
inline std::int64_t bott_h(std::int64_t n, std::int64_t q, std::int64_t a) {
  if (n < 0) throw InputError("projective space dimension must be nonnegative");
  if (q < 0 || q > n)
    throw InputError("cohomological degree " + std::to_string(q) + " outside [0, " +
                     std::to_string(n) + "]");
  if (q == 0 && a >= 0) return binomial(n + a, n);
  if (q == n && a <= -n - 1) return binomial(-a - 1, n);
  return 0;
}

struct LineBundleSummand {
  std::int64_t twist = 0;
  std::int64_t mult = 0;
  friend bool operator==(const LineBundleSummand&, const LineBundleSummand&) = default;
};

/// (+) O(a)^r, kept sorted by twist with equal twists merged.
class LineBundleSum {
 public:
  LineBundleSum() = default;

  static LineBundleSum make(std::vector<LineBundleSummand> parts) {
    for (const auto& s : parts)
      if (s.mult <= 0) throw InputError("line bundle multiplicity must be positive");
    std::sort(parts.begin(), parts.end(),
              [](const auto& a, const auto& b) { return a.twist < b.twist; });
    LineBundleSum out;
    for (const auto& s : parts) {
      if (!out.parts_.empty() && out.parts_.back().twist == s.twist)
        out.parts_.back().mult += s.mult;
      else
        out.parts_.push_back(s);
    }
    return out;
  }

  const std::vector<LineBundleSummand>& summands() const { return parts_; }
  bool empty() const { return parts_.empty(); }

  std::int64_t rank() const {
    std::int64_t r = 0;
    for (const auto& s : parts_) r += s.mult;
    return r;
  }

  /// h^q of the whole sum on P^n; zero above n.
  std::int64_t h(std::int64_t n, std::int64_t q) const {
    if (q > n) return 0;
    std::int64_t total = 0;
    for (const auto& s : parts_) total += s.mult * bott_h(n, q, s.twist);
    return total;
  }

  friend bool operator==(const LineBundleSum&, const LineBundleSum&) = default;

 private:
  std::vector<LineBundleSummand> parts_;
};

inline LineBundleSum twist_term(const LineBundleSum& s, std::int64_t t) {
  std::vector<LineBundleSummand> parts = s.summands();
  for (auto& p : parts) p.twist += t;
  return LineBundleSum::make(std::move(parts));
}

/// terms[0] = C_1 maps onto F = I(resolved_twist).
struct Resolution {
  std::int64_t ambient_dim = 0;
  std::vector<LineBundleSum> terms;
  std::int64_t resolved_twist = 0;

  std::size_t length() const { return terms.size(); }

  void check() const {
    if (ambient_dim < 1) throw InputError("resolution ambient dimension must be >= 1");
    if (terms.empty()) throw InputError("resolution needs at least one term");
    for (std::size_t p = 0; p < terms.size(); ++p)
      if (terms[p].empty())
        throw InputError("resolution term C_" + std::to_string(p + 1) + " is empty");
  }

  friend bool operator==(const Resolution&, const Resolution&) = default;
};

/// Koszul resolution of the complete intersection cut out by forms of the
/// given degrees: C_p = wedge^p E*, E = (+) O(d_i).
inline Resolution koszul_resolution(std::int64_t n, const std::vector<std::int64_t>& degrees) {
  const auto c = static_cast<std::int64_t>(degrees.size());
  if (c < 1) throw InputError("Koszul resolution needs at least one form");
  if (c > n)
    throw InputError("Koszul resolution of " + std::to_string(c) + " forms on P^" +
                     std::to_string(n) + " is not a complete intersection");
  for (auto d : degrees)
    if (d < 1) throw InputError("Koszul form degrees must be positive");
  Resolution res;
  res.ambient_dim = n;
  res.resolved_twist = 0;
  for (std::size_t p = 1; p <= degrees.size(); ++p) {
    std::vector<LineBundleSummand> parts;
    for (const auto& subset : subsets_of_size(degrees.size(), p)) {
      std::int64_t sum = 0;
      for (auto i : subset) sum += degrees[i];
      parts.push_back({-sum, 1});
    }
    res.terms.push_back(LineBundleSum::make(std::move(parts)));
  }
  return res;
}

/// Eagon-Northcott resolution of I(h+n) for the degeneracy locus of a
/// general O^{h+1} -> O(1)^{h+n} on P^n:
///   C_p = S^{p-1} O^{h+1} (x) wedge^{n-p} O(1)^{h+n}
///       = O(n-p)^{binom(h+n, n-p) binom(h+p-1, p-1)},   p = 1..n.
inline Resolution eagon_northcott_resolution(std::int64_t n, std::int64_t num_quadrics) {
  if (n < 1) throw InputError("Eagon-Northcott resolution needs n >= 1");
  if (num_quadrics < 1) throw InputError("Eagon-Northcott resolution needs at least one quadric");
  const std::int64_t h = num_quadrics;
  Resolution res;
  res.ambient_dim = n;
  res.resolved_twist = h + n;
  for (std::int64_t p = 1; p <= n; ++p) {
    const std::int64_t mult = binomial(h + n, n - p) * binomial(h + p - 1, p - 1);
    res.terms.push_back(LineBundleSum::make({{n - p, mult}}));
  }
  return res;
}

struct Obstruction {
  std::int64_t p = 0;      // position in the resolution and cohomological degree
  std::int64_t twist = 0;  // twist after shifting to the target
  std::int64_t value = 0;  // multiplicity * h^p(O(twist))
  friend bool operator==(const Obstruction&, const Obstruction&) = default;
};

struct ChaseVerdict {
  std::int64_t target_twist = 0;
  std::int64_t upper_bound = 0;
  bool vanishes = false;
  std::optional<std::int64_t> exact_h1;
  std::vector<Obstruction> obstructions;
  friend bool operator==(const ChaseVerdict&, const ChaseVerdict&) = default;
};

/// Sufficient test for h^1(I(t)) = 0. With K_0 = F and
/// 0 -> K_p -> C_p -> K_{p-1} -> 0 we have
///   h^p(K_{p-1}) <= h^p(C_p) + h^{p+1}(K_p),
/// with equality h^p(K_{p-1}) = h^{p+1}(K_p) whenever h^p(C_p) and
/// h^{p+1}(C_p) both vanish. If that holds for every p < L, h^1 is
/// exactly h^L(C_L).
inline ChaseVerdict h1_vanishing_chase(const Resolution& res, std::int64_t target_twist) {
  res.check();
  const std::int64_t n = res.ambient_dim;
  const std::int64_t shift = target_twist - res.resolved_twist;
  const auto length = static_cast<std::int64_t>(res.length());

  ChaseVerdict v;
  v.target_twist = target_twist;
  for (std::int64_t p = 1; p <= std::min(length, n); ++p) {
    for (const auto& s : res.terms[static_cast<std::size_t>(p - 1)].summands()) {
      const std::int64_t value = s.mult * bott_h(n, p, s.twist + shift);
      if (value == 0) continue;
      v.obstructions.push_back({p, s.twist + shift, value});
      v.upper_bound += value;
    }
  }
  v.vanishes = v.upper_bound == 0;

  for (std::int64_t p = 1;; ++p) {
    if (p > n) {
      v.exact_h1 = 0;
      break;
    }
    const auto term = twist_term(res.terms[static_cast<std::size_t>(p - 1)], shift);
    if (p == length) {
      v.exact_h1 = term.h(n, p);
      break;
    }
    if (term.h(n, p) != 0 || term.h(n, p + 1) != 0) break;
  }
  return v;
}

struct CiThreshold {
  Rational bound;                       // (2n+1)/(n-1)
  std::vector<std::int64_t> admissible_k;  // k >= 2 with k < bound
};

/// Degrees k for which a complete intersection of n forms of degree k-1 in
/// P^n passes the top-degree vanishing test at twist k.
inline CiThreshold ci_threshold(std::int64_t n) {
  if (n < 2) throw InputError("threshold (2n+1)/(n-1) needs n >= 2");
  CiThreshold t{Rational(static_cast<long>(2 * n + 1), static_cast<long>(n - 1)), {}};
  for (std::int64_t k = 2; Rational(static_cast<long>(k)) < t.bound; ++k) t.admissible_k.push_back(k);
  return t;
}

}  // namespace icstalk
