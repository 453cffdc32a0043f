#pragma once
//
// Exact rational arithmetic for the index conditions: critical order,
// subcritical gap, sufficiency and necessity checks, verdict
// classification, and interpolation of exponent tuples. Lebesgue
// exponents are stored as reciprocals so that p = infinity is the exact
// rational 0 and affine interpolation of exponents is exact.
//

#include <boost/rational.hpp>

#include <string>
#include <vector>

namespace bps {

using rat = boost::rational<long long>;

struct IndexTuple {
  int n = 1;
  // reciprocals 1/p1, 1/p2, 1/p in [0, infinity-free range); 0 means p = infinity
  rat rp1{1, 2}, rp2{1, 2}, rp{1, 2};
  rat s1{0}, s2{0}, s{0}, m{0};

  // 1/p' with the convention p' = p/(p-1) for 1 < p <= infinity and
  // p' = infinity (reciprocal 0) for 0 < p <= 1.
  static rat conjugate(rat rp);

  rat m_critical() const;  // min{n/p, n/2} - max{n/p1, n/2} - max{n/p2, n/2}
  rat kappa() const;       // m_critical + s1 + s2 - s - m
  rat alpha() const;       // max{0, n/2 - n/p}
  rat beta() const;        // min{0, n/2 - n/p}

  bool holder_ok() const;  // 1/p <= 1/p1 + 1/p2
};

struct SufficiencyResult {
  bool critical_ok = false;     // kappa = 0 and all three strict inequalities
  bool subcritical_ok = false;  // kappa > 0 and all three non-strict inequalities
  bool passes() const { return critical_ok || subcritical_ok; }
  bool bmo_endpoint = false;    // p = infinity: the target reads bmo_s
  std::string reason;
};
SufficiencyResult sufficiency_check(const IndexTuple& t);

struct NecessityResult {
  bool consistent = true;
  std::vector<std::string> violated;
};
NecessityResult necessity_check(const IndexTuple& t);

enum class Verdict { BoundedByTheorem, UnboundedByTheorem, Undetermined };
Verdict classify(const IndexTuple& t);

/// Componentwise affine combination of reciprocal exponents, smoothness
/// indices and order: (1-theta) A + theta B. Requires 0 < theta < 1.
IndexTuple interpolate(const IndexTuple& a, const IndexTuple& b, rat theta);

/// The interpolation endpoints that recover a tuple with p1, p2 <= 2 and
/// 1/p1 + 1/p2 >= 3/2: theta = (1/p2 - 1/2)/(1/p1 + 1/p2 - 1),
/// (1/q1, 1/q2) = (1/p1 + 1/p2 - 1/2, 1/2), (1/r1, 1/r2) mirrored, and
/// smoothness indices t_j, u_j with (1-theta) t_j + theta u_j = s_j.
struct InterpolationEndpoints {
  rat theta;
  IndexTuple left, right;  // interpolate(left, right, theta) recovers the input
};
InterpolationEndpoints appendix_endpoints(const IndexTuple& t);

/// Predicted growth exponent of the dyadic cone experiment:
/// m + n/p1 + n/p2 - n/p + s - s1 - s2.
rat cone_dyadic_slope(const IndexTuple& t);

}  // namespace bps
