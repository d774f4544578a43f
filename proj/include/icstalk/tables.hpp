#pragma once

// Plain-text renderings of the reports. The JSON documents are the stable
// machine interface; these are for people.

#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "icstalk/bott.hpp"
#include "icstalk/monodromy.hpp"
#include "icstalk/points.hpp"
#include "icstalk/reproduction.hpp"

namespace icstalk::tables {

namespace detail {

inline void row(std::ostream& os, const std::string& key, const std::string& value) {
  os << "  " << std::left << std::setw(26) << key << value << '\n';
}

inline std::string yes_no(bool b) { return b ? "true" : "false"; }

inline std::string opt(const std::optional<std::int64_t>& v) {
  return v ? std::to_string(*v) : std::string("-");
}

inline std::string join(const std::vector<std::int64_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + "]";
}

inline std::string bundle(const LineBundleSum& s) {
  std::string out;
  for (const auto& p : s.summands()) {
    if (!out.empty()) out += " + ";
    out += "O(" + std::to_string(p.twist) + ")";
    if (p.mult != 1) out += "^" + std::to_string(p.mult);
  }
  return out;
}

}  // namespace detail

inline std::string render(const IcStalkReport& r) {
  std::ostringstream os;
  os << "IC stalk cohomology\n";
  detail::row(os, "h0", std::to_string(r.h0));
  detail::row(os, "h1", std::to_string(r.h1));
  detail::row(os, "higher degrees", detail::join(r.higher));
  detail::row(os, "span of vanishing cycles", std::to_string(r.span_dim));
  detail::row(os, "excision rank", std::to_string(r.excision_rank));
  detail::row(os, "top cohomology (singular)", std::to_string(r.h_top_singular));
  detail::row(os, "defect", std::to_string(r.defect));
  os << "perverse filtration of the top cohomology\n";
  detail::row(os, "level <= -1", std::to_string(r.filtration.below));
  detail::row(os, "level 0 (defect)", std::to_string(r.filtration.level0));
  detail::row(os, "level 1 (constant part)", std::to_string(r.filtration.level1));
  detail::row(os, "total", std::to_string(r.filtration.total));
  return os.str();
}

inline std::string render(const ConditionsReport& r, std::int64_t span,
                          const NormalCrossingCheck& nc) {
  std::ostringstream os;
  os << "Conditions imposed on degree-" << r.degree << " forms\n";
  detail::row(os, "points", std::to_string(r.delta));
  detail::row(os, "h0(O(d))", std::to_string(r.h0_ambient));
  detail::row(os, "evaluation rank", std::to_string(r.rank));
  detail::row(os, "h0(I(d))", std::to_string(r.h0_ideal));
  detail::row(os, "h1(I(d))", std::to_string(r.h1_ideal));
  detail::row(os, "independent", detail::yes_no(r.independent));
  os << "Linear checks on the nodes\n";
  detail::row(os, "span dimension", std::to_string(span));
  detail::row(os, "independent branches", detail::yes_no(nc.independent_branches));
  detail::row(os, "tangent intersection dim", std::to_string(nc.tangent_intersection_dim));
  return os.str();
}

inline std::string render(const Resolution& res) {
  std::ostringstream os;
  os << "Resolution of I(" << res.resolved_twist << ") on P^" << res.ambient_dim << '\n';
  for (std::size_t p = 0; p < res.terms.size(); ++p)
    detail::row(os, "C_" + std::to_string(p + 1), detail::bundle(res.terms[p]));
  return os.str();
}

inline std::string render(const ChaseVerdict& v) {
  std::ostringstream os;
  os << "h1 vanishing chase at twist " << v.target_twist << '\n';
  os << "  vanishes: " << detail::yes_no(v.vanishes) << '\n';
  detail::row(os, "upper bound", std::to_string(v.upper_bound));
  detail::row(os, "exact h1", detail::opt(v.exact_h1));
  for (const auto& o : v.obstructions)
    detail::row(os, "obstruction",
                "h^" + std::to_string(o.p) + "(O(" + std::to_string(o.twist) + ")) x mult = " +
                    std::to_string(o.value));
  return os.str();
}

inline std::string render(const PaperExamplesReport& r) {
  std::ostringstream os;
  os << "Complete intersections of type (k-1,...,k-1) in P^n, twist k\n";
  os << "     n     k  nodes  chase  exact  grid_h1  expected  consistent\n";
  for (const auto& c : r.ci_table)
    os << std::right << std::setw(6) << c.n << std::setw(6) << c.k << std::setw(7) << c.node_count
       << std::setw(7) << (c.chase_vanishes ? "yes" : "no") << std::setw(7)
       << detail::opt(c.chase_exact_h1) << std::setw(9) << detail::opt(c.grid_h1) << std::setw(10)
       << (c.expected_vanishes ? "yes" : "no") << std::setw(12)
       << (c.consistent ? "yes" : "NO") << '\n';
  os << "\nThresholds k < (2n+1)/(n-1)\n";
  for (const auto& t : r.thresholds)
    os << "  n = " << t.n << "  bound " << t.bound << "  admissible k " << detail::join(t.admissible_k)
       << '\n';
  os << "\nDegeneracy loci of O^(h+1) -> O(1)^(h+n), twist 2\n";
  os << "     n     h  nodes  bound  chase  expected\n";
  for (const auto& c : r.en_table)
    os << std::right << std::setw(6) << c.n << std::setw(6) << c.h << std::setw(7) << c.node_count
       << std::setw(7) << c.upper_bound << std::setw(7) << (c.chase_vanishes ? "yes" : "no")
       << std::setw(10) << (c.expected_vanishes ? "yes" : "no") << '\n';
  os << "\nExpected Severi dimensions N - delta\n";
  for (const auto& s : r.severi_samples)
    os << "  N = " << s.big_n << "  delta = " << s.delta << "  dim = " << s.expected_dim << '\n';
  os << '\n' << (r.reproduced() ? "all published verdicts reproduced" : "DEVIATIONS:") << '\n';
  for (const auto& d : r.deviations) os << "  " << d << '\n';
  return os.str();
}

}  // namespace icstalk::tables
