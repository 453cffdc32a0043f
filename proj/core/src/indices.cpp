#include "bps/indices.hpp"

#include <algorithm>
#include <stdexcept>

namespace bps {

namespace {

rat rmax(rat a, rat b) { return a > b ? a : b; }
rat rmin(rat a, rat b) { return a < b ? a : b; }

}  // namespace

rat IndexTuple::conjugate(rat rp) {
  // 1/p' = 1 - 1/p for p > 1; p' = infinity (reciprocal 0) for p <= 1.
  if (rp >= rat(1)) return rat(0);
  return rat(1) - rp;
}

rat IndexTuple::m_critical() const {
  rat half{1, 2};
  return rat(n) * (rmin(rp, half) - rmax(rp1, half) - rmax(rp2, half));
}

rat IndexTuple::kappa() const { return m_critical() + s1 + s2 - s - m; }

rat IndexTuple::alpha() const { return rmax(rat(0), rat(n) * (rat(1, 2) - rp)); }

rat IndexTuple::beta() const { return rmin(rat(0), rat(n) * (rat(1, 2) - rp)); }

bool IndexTuple::holder_ok() const { return rp <= rp1 + rp2; }

SufficiencyResult sufficiency_check(const IndexTuple& t) {
  SufficiencyResult res;
  res.bmo_endpoint = t.rp == rat(0);
  if (!t.holder_ok()) {
    res.reason = "1/p > 1/p1 + 1/p2";
    return res;
  }
  rat half{1, 2};
  rat cap1 = rat(t.n) * rmax(t.rp1, half);
  rat cap2 = rat(t.n) * rmax(t.rp2, half);
  rat caps = rat(t.n) * rmax(IndexTuple::conjugate(t.rp), half);
  rat k = t.kappa();
  if (k == rat(0)) {
    if (t.s1 < cap1 && t.s2 < cap2 && t.s > -caps) {
      res.critical_ok = true;
      res.reason = "critical order with strict smoothness inequalities";
    } else {
      res.reason = "critical order but a smoothness inequality is not strict";
    }
  } else if (k > rat(0)) {
    if (t.s1 <= cap1 + k && t.s2 <= cap2 + k && t.s >= -caps - k) {
      res.subcritical_ok = true;
      res.reason = "subcritical order with admissible smoothness";
    } else {
      res.reason = "subcritical order but a smoothness index exceeds its cap";
    }
  } else {
    res.reason = "order above critical";
  }
  return res;
}

NecessityResult necessity_check(const IndexTuple& t) {
  NecessityResult res;
  rat half{1, 2};
  rat k = t.kappa();
  if (k < rat(0)) res.violated.push_back("order: m + s - s1 - s2 > m_critical");
  if (t.s1 > rat(t.n) * rmax(t.rp1, half) + k)
    res.violated.push_back("s1 > max{n/p1, n/2} + kappa");
  if (t.s2 > rat(t.n) * rmax(t.rp2, half) + k)
    res.violated.push_back("s2 > max{n/p2, n/2} + kappa");
  if (t.s < -rat(t.n) * rmax(IndexTuple::conjugate(t.rp), half) - k)
    res.violated.push_back("s < -max{n/p', n/2} - kappa");
  res.consistent = res.violated.empty();
  return res;
}

Verdict classify(const IndexTuple& t) {
  if (!necessity_check(t).consistent) return Verdict::UnboundedByTheorem;
  if (sufficiency_check(t).passes()) return Verdict::BoundedByTheorem;
  return Verdict::Undetermined;
}

IndexTuple interpolate(const IndexTuple& a, const IndexTuple& b, rat theta) {
  if (!(theta > rat(0) && theta < rat(1)))
    throw std::invalid_argument("interpolate: need 0 < theta < 1");
  if (a.n != b.n) throw std::invalid_argument("interpolate: dimension mismatch");
  rat c = rat(1) - theta;
  IndexTuple r;
  r.n = a.n;
  r.rp1 = c * a.rp1 + theta * b.rp1;
  r.rp2 = c * a.rp2 + theta * b.rp2;
  r.rp = c * a.rp + theta * b.rp;
  r.s1 = c * a.s1 + theta * b.s1;
  r.s2 = c * a.s2 + theta * b.s2;
  r.s = c * a.s + theta * b.s;
  r.m = c * a.m + theta * b.m;
  return r;
}

InterpolationEndpoints appendix_endpoints(const IndexTuple& t) {
  rat half{1, 2};
  if (!(t.rp1 >= rat(1) && t.rp2 >= rat(1)))
    throw std::invalid_argument("appendix_endpoints: need p1, p2 <= 1");
  rat nn{t.n};
  InterpolationEndpoints ep;
  ep.theta = (t.rp2 - half) / (t.rp1 + t.rp2 - rat(1));

  IndexTuple q = t;
  q.rp1 = t.rp1 + t.rp2 - half;
  q.rp2 = half;
  q.s1 = t.s1 + nn * t.rp2 - nn * half;
  q.s2 = t.s2 + nn * half - nn * t.rp2;
  q.m = q.m_critical() + q.s1 + q.s2 - q.s;

  IndexTuple r = t;
  r.rp1 = half;
  r.rp2 = t.rp1 + t.rp2 - half;
  r.s1 = t.s1 + nn * half - nn * t.rp1;
  r.s2 = t.s2 + nn * t.rp1 - nn * half;
  r.m = r.m_critical() + r.s1 + r.s2 - r.s;

  ep.left = q;
  ep.right = r;
  return ep;
}

rat cone_dyadic_slope(const IndexTuple& t) {
  return t.m + rat(t.n) * (t.rp1 + t.rp2 - t.rp) + t.s - t.s1 - t.s2;
}

}  // namespace bps
