#include <doctest.h>

#include <random>

#include "bps/indices.hpp"

using namespace bps;

namespace {

IndexTuple tuple(int n, rat rp1, rat rp2, rat rp, rat s1, rat s2, rat s, rat m) {
  IndexTuple t;
  t.n = n;
  t.rp1 = rp1;
  t.rp2 = rp2;
  t.rp = rp;
  t.s1 = s1;
  t.s2 = s2;
  t.s = s;
  t.m = m;
  return t;
}

}  // namespace

TEST_CASE("conjugate exponent in reciprocal form") {
  CHECK(IndexTuple::conjugate(rat(1, 2)) == rat(1, 2));
  CHECK(IndexTuple::conjugate(rat(0)) == rat(1));      // p = infinity -> p' = 1
  CHECK(IndexTuple::conjugate(rat(1)) == rat(0));      // p = 1 -> p' = infinity
  CHECK(IndexTuple::conjugate(rat(2)) == rat(0));      // p = 1/2 -> p' = infinity
  CHECK(IndexTuple::conjugate(rat(1, 3)) == rat(2, 3));
}

TEST_CASE("critical order golden values") {
  // all exponents 2
  CHECK(tuple(1, {1, 2}, {1, 2}, {1, 2}, 0, 0, 0, 0).m_critical() == rat(-1, 2));
  CHECK(tuple(2, {1, 2}, {1, 2}, {1, 2}, 0, 0, 0, 0).m_critical() == rat(-1));
  // all exponents infinity
  CHECK(tuple(1, 0, 0, 0, 0, 0, 0, 0).m_critical() == rat(-1));
  CHECK(tuple(2, 0, 0, 0, 0, 0, 0, 0).m_critical() == rat(-2));
  // n = 2, (p1, p2, p) = (1, 2, 1)
  CHECK(tuple(2, 1, {1, 2}, 1, 0, 0, 0, 0).m_critical() == rat(-2));
  // mixed: n = 1, (p1, p2, p) = (4, 4, 2)
  CHECK(tuple(1, {1, 4}, {1, 4}, {1, 2}, 0, 0, 0, 0).m_critical() == rat(-1, 2));
}

TEST_CASE("gap, alpha, beta, and Holder scaling") {
  auto t = tuple(2, {1, 4}, {1, 2}, 1, rat(1, 2), 0, rat(-1, 4), rat(-3, 2));
  // m_critical = 2(1/2 - 1/2 - 1/2) = -1; kappa = -1 + 1/2 + 1/4 + 3/2 = 5/4
  CHECK(t.m_critical() == rat(-1));
  CHECK(t.kappa() == rat(5, 4));
  CHECK(t.alpha() == rat(0));
  CHECK(t.beta() == rat(-1));
  t.rp = rat(1, 4);
  CHECK(t.alpha() == rat(1, 2));
  CHECK(t.beta() == rat(0));
  CHECK(t.holder_ok());  // 1/4 <= 1/4 + 1/2
  t.rp = rat(1);
  CHECK_FALSE(t.holder_ok());
}

TEST_CASE("sufficiency at the critical order") {
  auto t = tuple(1, {1, 2}, {1, 2}, {1, 2}, 0, 0, 0, rat(-1, 2));
  auto res = sufficiency_check(t);
  CHECK(res.critical_ok);
  CHECK(res.passes());
  CHECK_FALSE(res.bmo_endpoint);

  // push s1 to the cap: strictness fails
  t.s1 = rat(1, 2);
  t.m = t.m_critical() + t.s1;  // keep kappa = 0
  CHECK_FALSE(sufficiency_check(t).passes());

  // order above critical
  t = tuple(1, {1, 2}, {1, 2}, {1, 2}, 0, 0, 0, rat(-1, 4));
  CHECK_FALSE(sufficiency_check(t).passes());
}

TEST_CASE("sufficiency below the critical order allows the closed caps") {
  auto t = tuple(1, {1, 2}, {1, 2}, {1, 2}, 0, 0, 0, rat(-1));
  auto res = sufficiency_check(t);
  CHECK(res.subcritical_ok);
  // The cap s1 <= n/2 + kappa is closed. kappa contains s1, so equality
  // is a condition on the rest: here m_crit + cap1 = 0 forces m = 0.
  t.m = rat(0);
  t.s1 = rat(1);  // kappa = 1/2, s1 = cap1 + kappa exactly
  CHECK(sufficiency_check(t).subcritical_ok);
  // pushing the order past the equality point breaks the cap
  t.m += rat(1, 100);
  CHECK_FALSE(sufficiency_check(t).passes());
}

TEST_CASE("bmo endpoint flag at p = infinity") {
  auto t = tuple(1, {1, 2}, {1, 2}, 0, 0, 0, 0, rat(-3, 2));
  // m_critical = 1(0 - 1/2 - 1/2) = -1, kappa = 1/2 > 0
  auto res = sufficiency_check(t);
  CHECK(res.bmo_endpoint);
  CHECK(res.subcritical_ok);
}

TEST_CASE("necessity golden example") {
  // n = 1, p1 = p2 = 2, p = 1, no smoothness, order -2: consistent
  auto t = tuple(1, {1, 2}, {1, 2}, 1, 0, 0, 0, rat(-2));
  CHECK(necessity_check(t).consistent);
  // raising the order past critical flips it
  t.m = rat(-1, 4);  // kappa = -1/2 - (-1/4) = -1/4 < 0
  auto res = necessity_check(t);
  CHECK_FALSE(res.consistent);
  CHECK(res.violated.size() == 1);
}

TEST_CASE("each necessity clause can be violated in isolation") {
  // Note: the smoothness clauses compare s_j against caps shifted by the
  // gap, which itself contains s_j; violating one amounts to a condition
  // on the remaining indices.
  auto base = tuple(1, {1, 2}, {1, 2}, {1, 2}, 0, 0, 0, rat(-2));  // kappa = 3/2
  CHECK(necessity_check(base).consistent);
  // s1 clause: kappa = -1/2 + 1 - 1/4 = 1/4 >= 0, s1 = 1 > 1/2 + 1/4
  auto t = tuple(1, {1, 2}, {1, 2}, {1, 2}, 1, 0, 0, rat(1, 4));
  auto res = necessity_check(t);
  CHECK(res.violated == std::vector<std::string>{"s1 > max{n/p1, n/2} + kappa"});
  t = tuple(1, {1, 2}, {1, 2}, {1, 2}, 0, 1, 0, rat(1, 4));
  res = necessity_check(t);
  CHECK(res.violated == std::vector<std::string>{"s2 > max{n/p2, n/2} + kappa"});
  // s clause: kappa = -1/2 + 1 - 1/4 = 1/4, s = -1 < -1/2 - 1/4
  t = tuple(1, {1, 2}, {1, 2}, {1, 2}, 0, 0, rat(-1), rat(1, 4));
  res = necessity_check(t);
  CHECK(res.violated == std::vector<std::string>{"s < -max{n/p', n/2} - kappa"});
}

TEST_CASE("classification sweep: the two checks never contradict") {
  std::mt19937_64 rng(123);
  std::uniform_int_distribution<int> num(-8, 8), den(1, 4), nn(1, 2);
  int bounded = 0, unbounded = 0, undetermined = 0;
  for (int t = 0; t < 100000; ++t) {
    IndexTuple x;
    x.n = nn(rng);
    x.rp1 = rat(std::abs(num(rng)), 2 * den(rng));
    x.rp2 = rat(std::abs(num(rng)), 2 * den(rng));
    x.rp = rat(std::abs(num(rng)), 2 * den(rng));
    x.s1 = rat(num(rng), den(rng));
    x.s2 = rat(num(rng), den(rng));
    x.s = rat(num(rng), den(rng));
    x.m = rat(num(rng), den(rng));
    Verdict v = classify(x);
    bool nec = necessity_check(x).consistent;
    bool suf = sufficiency_check(x).passes();
    if (v == Verdict::UnboundedByTheorem) {
      ++unbounded;
      CHECK_FALSE(nec);
    } else if (v == Verdict::BoundedByTheorem) {
      ++bounded;
      CHECK(nec);
      CHECK(suf);
    } else {
      ++undetermined;
      CHECK(nec);
      CHECK_FALSE(suf);
    }
    // sufficiency must imply a consistent necessity check
    if (suf) REQUIRE(nec);
    // lowering the order preserves boundedness
    if (v == Verdict::BoundedByTheorem) {
      IndexTuple lower = x;
      lower.m = x.m - rat(1);
      REQUIRE(classify(lower) == Verdict::BoundedByTheorem);
    }
  }
  CHECK(bounded > 100);
  CHECK(unbounded > 100);
  CHECK(undetermined > 100);
}

TEST_CASE("interpolation is exact and validated") {
  auto a = tuple(1, 1, {1, 2}, 1, rat(1), 0, 0, rat(-1));
  auto b = tuple(1, {1, 2}, 1, {1, 2}, 0, rat(1), rat(1, 2), rat(-2));
  auto mid = interpolate(a, b, rat(1, 3));
  CHECK(mid.rp1 == rat(2, 3) * rat(1) + rat(1, 3) * rat(1, 2));
  CHECK(mid.m == rat(2, 3) * rat(-1) + rat(1, 3) * rat(-2));
  CHECK_THROWS(interpolate(a, b, rat(0)));
  CHECK_THROWS(interpolate(a, b, rat(1)));
  auto c = b;
  c.n = 2;
  CHECK_THROWS(interpolate(a, c, rat(1, 2)));
}

TEST_CASE("endpoint construction recovers the tuple by interpolation") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> num(-6, 6), den(1, 3), extra(0, 4);
  for (int t = 0; t < 2000; ++t) {
    IndexTuple x;
    x.n = 1 + (t % 2);
    x.rp1 = rat(1) + rat(extra(rng), 4);  // p1, p2 <= 1
    x.rp2 = rat(1) + rat(extra(rng), 4);
    x.rp = x.rp1 + x.rp2;
    x.s1 = rat(num(rng), den(rng));
    x.s2 = rat(num(rng), den(rng));
    x.s = rat(num(rng), den(rng));
    x.m = x.m_critical() + x.s1 + x.s2 - x.s;  // critical order
    auto ep = appendix_endpoints(x);
    REQUIRE(ep.theta > rat(0));
    REQUIRE(ep.theta < rat(1));
    auto back = interpolate(ep.left, ep.right, ep.theta);
    REQUIRE(back.rp1 == x.rp1);
    REQUIRE(back.rp2 == x.rp2);
    REQUIRE(back.s1 == x.s1);
    REQUIRE(back.s2 == x.s2);
    REQUIRE(back.s == x.s);
    REQUIRE(back.m == x.m);
    // the endpoints sit at the critical order for their own exponents
    REQUIRE(ep.left.kappa() == rat(0));
    REQUIRE(ep.right.kappa() == rat(0));
    // one endpoint has p1 = 2, the other p2 = 2
    REQUIRE(ep.left.rp2 == rat(1, 2));
    REQUIRE(ep.right.rp1 == rat(1, 2));
  }
  IndexTuple bad = tuple(1, {1, 2}, {1, 2}, {1, 2}, 0, 0, 0, 0);
  CHECK_THROWS(appendix_endpoints(bad));
}

TEST_CASE("predicted cone growth exponent") {
  auto t = tuple(1, 1, 1, 2, 0, 0, 0, 0);  // p1 = p2 = 1, p = 1/2
  CHECK(cone_dyadic_slope(t) == rat(0));
  t.m = rat(-1, 2);
  t.s = rat(1, 4);
  t.s1 = rat(1, 8);
  CHECK(cone_dyadic_slope(t) == rat(-1, 2) + rat(1, 4) - rat(1, 8));
  auto u = tuple(2, {1, 2}, {1, 2}, {1, 2}, 0, 0, 0, rat(-1));
  CHECK(cone_dyadic_slope(u) == rat(-1) + rat(2) * rat(1, 2));
}
