#pragma once

// Picard-Lefschetz logarithms of local monodromy around a normal-crossing
// divisor and the associated complex
//
//   B^p = (+) over i_1 < ... < i_p of  N_{i_1} ... N_{i_p} V,
//
// whose cohomology is the stalk of the intermediate extension. For nodal
// degenerations the vanishing cycles are pairwise orthogonal, every product
// of two distinct logarithms vanishes and the complex lives in degrees 0, 1.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "icstalk/errors.hpp"
#include "icstalk/linalg.hpp"
#include "icstalk/matrix.hpp"
#include "icstalk/rational.hpp"

namespace icstalk {

/// Middle cohomology V of a nearby smooth fibre together with its
/// intersection form and one vanishing cycle per node.
struct MonodromyData {
  std::size_t dim = 0;             // m = dim V
  RatMatrix pairing;               // m x m, skew and nondegenerate
  std::vector<RatVector> cycles;   // delta vectors of length m
  std::int64_t h_ambient = 0;      // rank of the constant system in top degree
  std::optional<std::int64_t> fiber_dim;  // odd; informational

  std::size_t node_count() const { return cycles.size(); }
  friend bool operator==(const MonodromyData&, const MonodromyData&) = default;
};

/// Default orientation of the Picard-Lefschetz formula. Every reported
/// dimension is independent of this choice.
inline constexpr int kDefaultPLSign = -1;

struct PLOperator {
  std::size_t index = 0;
  RatMatrix matrix;  // N_i : x -> sign * <x, v_i> * v_i
};

inline bool is_skew(const RatMatrix& g) {
  if (g.rows() != g.cols()) return false;
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = i; j < g.cols(); ++j)
      if (!(g(i, j) == -g(j, i))) return false;
  return true;
}

inline bool is_zero_vector(const RatVector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

inline PLOperator pl_operator(const RatMatrix& pairing, const RatVector& cycle,
                              int sign = kDefaultPLSign, std::size_t index = 0) {
  if (sign != 1 && sign != -1) throw InputError("Picard-Lefschetz sign must be +1 or -1");
  if (pairing.rows() != pairing.cols() || cycle.size() != pairing.rows())
    throw InputError("vanishing cycle length does not match pairing dimension");
  if (!is_skew(pairing)) throw PreconditionError("pairing not skew");
  // <x, v> = x^T G v, so N = sign * v (G v)^T.
  const auto gv = matvec(pairing, std::span<const Rational>(cycle));
  const std::size_t m = cycle.size();
  RatMatrix n(m, m);
  const Rational s(sign);
  for (std::size_t i = 0; i < m; ++i) {
    if (cycle[i].is_zero()) continue;
    for (std::size_t j = 0; j < m; ++j) n(i, j) = s * cycle[i] * gv[j];
  }
  return {index, std::move(n)};
}

/// Monodromy T = I + N (exact since N^2 = 0).
inline RatMatrix transvection(const PLOperator& op) {
  const auto& n = op.matrix;
  if (n.rows() != n.cols()) throw InputError("monodromy logarithm must be square");
  if (!matmul(n, n).is_zero()) throw InputError("monodromy logarithm is not square-zero");
  return RatMatrix::identity(n.rows()) + n;
}

/// Outcome of every hypothesis check on MonodromyData. Never throws.
struct Diagnostics {
  std::optional<std::string> shape_error;
  bool skew = false;
  bool nondegenerate = false;
  bool nonzero_cycles = false;
  bool pairwise_orthogonal = false;
  bool commuting = false;

  /// Names of failed invariants in check order.
  std::vector<std::string> failures() const {
    std::vector<std::string> out;
    if (shape_error) {
      out.push_back(*shape_error);
      return out;
    }
    if (!skew) out.emplace_back("pairing not skew");
    if (!nondegenerate) out.emplace_back("pairing degenerate");
    if (!nonzero_cycles) out.emplace_back("zero vanishing cycle unsupported");
    if (!pairwise_orthogonal) out.emplace_back("vanishing cycles not pairwise orthogonal");
    if (!commuting) out.emplace_back("monodromy logarithms do not commute");
    return out;
  }
  bool ok() const { return failures().empty(); }
};

namespace detail {

inline std::optional<std::string> shape_problem(const MonodromyData& d) {
  if (d.pairing.rows() != d.dim || d.pairing.cols() != d.dim)
    return "pairing must be " + std::to_string(d.dim) + "x" + std::to_string(d.dim);
  for (std::size_t i = 0; i < d.cycles.size(); ++i)
    if (d.cycles[i].size() != d.dim)
      return "vanishing cycle " + std::to_string(i) + " has length " +
             std::to_string(d.cycles[i].size()) + ", expected " + std::to_string(d.dim);
  if (d.h_ambient < 0) return std::string("h_ambient must be nonnegative");
  if (d.fiber_dim && (*d.fiber_dim < 1 || *d.fiber_dim % 2 == 0))
    return std::string("fiber_dim must be a positive odd integer");
  return std::nullopt;
}

// N_i without the skew precondition, so validate() can inspect any input.
inline RatMatrix raw_logarithm(const RatMatrix& g, const RatVector& v, int sign) {
  const auto gv = matvec(g, std::span<const Rational>(v));
  RatMatrix n(v.size(), v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) n(i, j) = Rational(sign) * v[i] * gv[j];
  return n;
}

}  // namespace detail

inline Diagnostics validate(const MonodromyData& data, int sign = kDefaultPLSign) {
  Diagnostics diag;
  diag.shape_error = detail::shape_problem(data);
  if (diag.shape_error) return diag;

  diag.skew = is_skew(data.pairing);
  diag.nondegenerate = rank(data.pairing) == data.dim;
  diag.nonzero_cycles = true;
  for (const auto& v : data.cycles)
    if (is_zero_vector(v)) diag.nonzero_cycles = false;

  diag.pairwise_orthogonal = true;
  for (std::size_t i = 0; i < data.cycles.size(); ++i)
    for (std::size_t j = i + 1; j < data.cycles.size(); ++j)
      if (!bilinear(data.pairing, std::span<const Rational>(data.cycles[i]),
                    std::span<const Rational>(data.cycles[j]))
               .is_zero())
        diag.pairwise_orthogonal = false;

  std::vector<RatMatrix> logs;
  for (const auto& v : data.cycles) logs.push_back(detail::raw_logarithm(data.pairing, v, sign));
  diag.commuting = true;
  for (std::size_t i = 0; i < logs.size() && diag.commuting; ++i)
    for (std::size_t j = i + 1; j < logs.size(); ++j)
      if (!(matmul(logs[i], logs[j]) == matmul(logs[j], logs[i]))) {
        diag.commuting = false;
        break;
      }
  return diag;
}

/// One direct summand N_{i_1} ... N_{i_p} V of B^p.
struct CksSummand {
  std::vector<std::size_t> indices;  // strictly increasing
  RatMatrix basis;                   // columns: a basis of the subspace
};

/// B^0 -> B^1 -> ... -> B^delta. Only summands with a nonzero subspace are
/// stored; a missing index tuple means its product of logarithms is zero.
struct CksComplex {
  std::size_t ambient_dim = 0;
  std::size_t operator_count = 0;
  std::vector<std::vector<CksSummand>> terms;  // terms[p], p = 0..delta
  std::vector<RatMatrix> differentials;        // d[p] : B^p -> B^{p+1}, p = 0..delta-1

  std::size_t degree_count() const { return terms.size(); }

  std::size_t term_dim(std::size_t p) const {
    std::size_t total = 0;
    for (const auto& s : terms.at(p)) total += s.basis.cols();
    return total;
  }
};

/// Builds the complex for arbitrary pairwise-commuting endomorphisms of V.
/// Tuples are enumerated lexicographically; the block from the summand
/// indexed by J \ {j_l} to the one indexed by J is (-1)^{l-1} N_{j_l}.
inline CksComplex build_cks(std::size_t dim, const std::vector<RatMatrix>& logs) {
  for (const auto& n : logs)
    if (n.rows() != dim || n.cols() != dim) throw InputError("monodromy logarithm has wrong shape");
  for (std::size_t i = 0; i < logs.size(); ++i)
    for (std::size_t j = i + 1; j < logs.size(); ++j)
      if (!(matmul(logs[i], logs[j]) == matmul(logs[j], logs[i])))
        throw PreconditionError("monodromy logarithms do not commute");

  const std::size_t delta = logs.size();
  CksComplex c;
  c.ambient_dim = dim;
  c.operator_count = delta;
  c.terms.resize(delta + 1);

  // Products N_I for the nonzero tuples of the current degree. A tuple whose
  // product vanishes has no nonzero extension, so it is pruned.
  struct Pending {
    std::vector<std::size_t> indices;
    RatMatrix product;
  };
  std::vector<Pending> level{{{}, RatMatrix::identity(dim)}};
  c.terms[0].push_back({{}, RatMatrix::identity(dim)});
  for (std::size_t p = 1; p <= delta && !level.empty(); ++p) {
    std::vector<Pending> next;
    for (const auto& cur : level) {
      const std::size_t first = cur.indices.empty() ? 0 : cur.indices.back() + 1;
      for (std::size_t j = first; j < delta; ++j) {
        RatMatrix prod = matmul(logs[j], cur.product);
        if (prod.is_zero()) continue;
        auto idx = cur.indices;
        idx.push_back(j);
        c.terms[p].push_back({idx, column_space_basis(prod)});
        next.push_back({std::move(idx), std::move(prod)});
      }
    }
    level = std::move(next);
  }

  for (std::size_t p = 0; p < delta; ++p) {
    const auto& src = c.terms[p];
    const auto& dst = c.terms[p + 1];
    std::map<std::vector<std::size_t>, std::size_t> src_pos;
    std::vector<std::size_t> src_off(src.size() + 1, 0);
    for (std::size_t s = 0; s < src.size(); ++s) {
      src_pos[src[s].indices] = s;
      src_off[s + 1] = src_off[s] + src[s].basis.cols();
    }
    RatMatrix d(c.term_dim(p + 1), c.term_dim(p));
    std::size_t row_off = 0;
    for (const auto& target : dst) {
      const auto& j = target.indices;
      for (std::size_t l = 0; l < j.size(); ++l) {
        auto face = j;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(l));
        const auto it = src_pos.find(face);
        if (it == src_pos.end()) continue;
        const auto& source = src[it->second];
        RatMatrix block =
            solve_in_basis(target.basis, matmul(logs[j[l]], source.basis));
        if (l % 2 == 1) block = -block;
        for (std::size_t r = 0; r < block.rows(); ++r)
          for (std::size_t col = 0; col < block.cols(); ++col)
            d(row_off + r, src_off[it->second] + col) = block(r, col);
      }
      row_off += target.basis.cols();
    }
    c.differentials.push_back(std::move(d));
  }
  return c;
}

inline std::vector<RatMatrix> pl_logarithms(const MonodromyData& data, int sign = kDefaultPLSign) {
  std::vector<RatMatrix> logs;
  logs.reserve(data.cycles.size());
  for (std::size_t i = 0; i < data.cycles.size(); ++i)
    logs.push_back(pl_operator(data.pairing, data.cycles[i], sign, i).matrix);
  return logs;
}

inline CksComplex build_cks(const MonodromyData& data, int sign = kDefaultPLSign) {
  if (auto err = detail::shape_problem(data)) throw InputError(*err);
  return build_cks(data.dim, pl_logarithms(data, sign));
}

/// dim ker d^p - rank d^{p-1} for every degree p.
inline std::vector<std::int64_t> complex_cohomology(const CksComplex& c) {
  const std::size_t degrees = c.degree_count();
  std::vector<std::size_t> ranks(c.differentials.size());
  for (std::size_t p = 0; p < c.differentials.size(); ++p) ranks[p] = rank(c.differentials[p]);
  std::vector<std::int64_t> h(degrees);
  for (std::size_t p = 0; p < degrees; ++p) {
    const std::size_t out_rank = p < ranks.size() ? ranks[p] : 0;
    const std::size_t in_rank = p > 0 ? ranks[p - 1] : 0;
    h[p] = static_cast<std::int64_t>(c.term_dim(p)) - static_cast<std::int64_t>(out_rank) -
           static_cast<std::int64_t>(in_rank);
  }
  return h;
}

/// Two-step perverse filtration of the top cohomology of the singular
/// section: nothing below level 0, the defect at level 0, the constant
/// system at level 1.
struct PerverseFiltration {
  std::int64_t below = 0;
  std::int64_t level0 = 0;
  std::int64_t level1 = 0;
  std::int64_t total = 0;
  friend bool operator==(const PerverseFiltration&, const PerverseFiltration&) = default;
};

struct IcStalkReport {
  std::int64_t h0 = 0;
  std::int64_t h1 = 0;
  std::vector<std::int64_t> higher;  // degrees 2..delta
  std::int64_t span_dim = 0;
  std::int64_t excision_rank = 0;
  std::int64_t h_top_singular = 0;
  std::int64_t defect = 0;
  PerverseFiltration filtration;
  friend bool operator==(const IcStalkReport&, const IcStalkReport&) = default;
};

/// dim span{v_i}
inline std::int64_t span_dim(const MonodromyData& data) {
  if (data.cycles.empty()) return 0;
  return static_cast<std::int64_t>(rank(RatMatrix::from_columns(data.dim, data.cycles)));
}

namespace detail {

inline void require_valid(const MonodromyData& data, int sign) {
  const auto diag = validate(data, sign);
  if (diag.shape_error) throw InputError(*diag.shape_error);
  const auto failed = diag.failures();
  if (!failed.empty()) throw PreconditionError(failed.front());
}

}  // namespace detail

/// Rank of the restriction V -> Q^delta, x -> (<x, v_i>)_i.
inline std::int64_t excision_rank(const MonodromyData& data) {
  detail::require_valid(data, kDefaultPLSign);
  if (data.cycles.empty()) return 0;
  RatMatrix functionals(data.cycles.size(), data.dim);
  for (std::size_t i = 0; i < data.cycles.size(); ++i) {
    const auto gv = matvec(data.pairing, std::span<const Rational>(data.cycles[i]));
    for (std::size_t j = 0; j < data.dim; ++j) functionals(i, j) = gv[j];
  }
  return static_cast<std::int64_t>(rank(functionals));
}

inline PerverseFiltration perverse_filtration(const IcStalkReport& report) {
  PerverseFiltration f;
  f.below = 0;
  f.level0 = report.h1;
  f.level1 = report.h_top_singular - report.h1;
  f.total = f.below + f.level0 + f.level1;
  return f;
}

/// Stalk cohomology of the intermediate extension at a nodal section.
/// Computed from the complex and checked against the closed forms
/// h0 = m - s, h1 = delta - s, s = dim span{v_i}.
inline IcStalkReport ic_stalk(const MonodromyData& data, int sign = kDefaultPLSign) {
  detail::require_valid(data, sign);
  const std::int64_t m = static_cast<std::int64_t>(data.dim);
  const std::int64_t delta = static_cast<std::int64_t>(data.node_count());
  const std::int64_t s = span_dim(data);

  const auto coh = complex_cohomology(build_cks(data, sign));
  IcStalkReport r;
  r.h0 = coh.at(0);
  r.h1 = coh.size() > 1 ? coh[1] : 0;
  r.higher.assign(coh.size() > 2 ? coh.begin() + 2 : coh.end(), coh.end());
  if (r.h0 != m - s || r.h1 != delta - s)
    throw std::logic_error("complex cohomology disagrees with the closed form");

  r.span_dim = s;
  r.excision_rank = excision_rank(data);
  r.defect = r.h1;
  r.h_top_singular = data.h_ambient + r.h1;
  if (data.h_ambient + delta - r.excision_rank != r.h_top_singular)
    throw std::logic_error("excision sequence disagrees with the stalk computation");
  r.filtration = perverse_filtration(r);
  return r;
}

}  // namespace icstalk
