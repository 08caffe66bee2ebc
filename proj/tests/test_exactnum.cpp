#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dapx/exact.hpp"
#include "dapx/norms.hpp"

using namespace dapx;

namespace {

ExactReal sqrt2() { return parse_exact("alg(coeffs=[-2,0,1], lo=1, hi=2)"); }
ExactReal cubic_root() { return parse_exact("alg(coeffs=[-1,-2,1,1], lo=6/5, hi=13/10)"); }

}  // namespace

TEST_CASE("rational parsing and decimal forms") {
  CHECK(parse_rat("3/10").value() == Rat(3, 10));
  CHECK(parse_rat("0.3").value() == Rat(3, 10));
  CHECK(parse_rat("-1.25").value() == Rat(-5, 4));
  CHECK(parse_rat("17").value() == Rat(17));
  CHECK(!parse_rat("1/0").has_value());
  CHECK(rat_to_decimal(Rat(1, 3), 6) == "0.333333");
  CHECK(rat_to_decimal(Rat(25), 4) == "25");
  CHECK(rat_to_decimal(Rat(-1, 8), 3) == "-0.125");
}

TEST_CASE("refine sqrt(2) to 1e-3 lands inside [1.4142, 1.4143]") {
  ExactReal r = sqrt2();
  RatInterval e = r.enclosure(10);
  REQUIRE(!r.is_rational());
  e = r.elem().enclosure(12);  // width <= 2^-12 < 1e-3
  CHECK(e.width() <= Rat(1, 1000));
  CHECK(e.lo >= Rat(14142, 10000));
  CHECK(e.hi <= Rat(14143, 10000));
}

TEST_CASE("refine cubic root of x^3+x^2-2x-1 near 1.246980") {
  // oracle: plain bisection on the cubic (independent of AlgebraicReal's Newton path)
  Poly p(std::vector<Rat>{Rat(-1), Rat(-2), Rat(1), Rat(1)});
  Rat lo(12, 10), hi(13, 10);
  for (int i = 0; i < 40; ++i) {
    Rat m = (lo + hi) / 2;
    if (sgn(p.eval(m)) == sgn(p.eval(lo)))
      lo = m;
    else
      hi = m;
  }
  ExactReal r = cubic_root();
  RatInterval e = r.elem().enclosure(30);
  CHECK(e.lo >= lo - Rat(1, 1000000));
  CHECK(e.hi <= hi + Rat(1, 1000000));
  // spot value 1.246980 to 1e-6
  CHECK(e.lo >= Rat(1246979, 1000000));
  CHECK(e.hi <= Rat(1246981, 1000000));
}

TEST_CASE("rational lifted to any width is exact") {
  ExactReal r = parse_exact("3/7");
  RatInterval e = r.enclosure(4096);
  CHECK(e.is_point());
  CHECK(e.lo == Rat(3, 7));
}

TEST_CASE("compare: exact order decisions") {
  CHECK(compare(ExactReal(Rat(1, 2)), ExactReal(Rat(1, 3))) == Ordering::Greater);
  // sqrt2 vs a nearby rational, decided by refinement
  ExactReal s = sqrt2();
  CHECK(compare(s, ExactReal(Rat(Int("141421356237"), Int("100000000000")))) == Ordering::Greater);
  CHECK(compare(s, ExactReal(Rat(Int("141421356238"), Int("100000000000")))) == Ordering::Less);
  // beta^3 + beta^2 - 2 beta - 1 == 0 certified algebraically
  ExactReal b = cubic_root();
  ExactReal lhs = b * b * b + b * b - b * ExactReal(Rat(2)) - ExactReal(Rat(1));
  CHECK(lhs.sign() == 0);
  CHECK(compare(lhs, ExactReal(Rat(0))) == Ordering::Equal);
}

TEST_CASE("field arithmetic reduces modulo the minimal polynomial") {
  ExactReal b = cubic_root();
  // beta^3 = -beta^2 + 2 beta + 1 under x^3 + x^2 - 2x - 1
  ExactReal b3 = b * b * b;
  ExactReal rhs = -(b * b) + b * ExactReal(Rat(2)) + ExactReal(Rat(1));
  CHECK(compare(b3, rhs) == Ordering::Equal);
  CHECK((ExactReal(Rat(1, 2)) + ExactReal(Rat(1, 3))).rat() == Rat(5, 6));
  // (beta)*(beta) stays degree < 3, no reduction needed
  ExactReal b2 = b * b;
  CHECK(b2.elem().coeffs()[2] == 1);
  CHECK(b2.elem().coeffs()[1] == 0);
  CHECK(b2.elem().coeffs()[0] == 0);
}

TEST_CASE("division and errors") {
  ExactReal b = cubic_root();
  ExactReal q = (b * b) / b;
  CHECK(compare(q, b) == Ordering::Equal);
  CHECK_THROWS_AS(b / (b - b), DivideByZero);
  ExactReal s = sqrt2();
  CHECK_THROWS_AS((void)(s + b), IncompatibleFields);
}

TEST_CASE("arithmetic round trips on rationals") {
  Rat a(7, 4), c(-3, 5);
  ExactReal x(a), y(c);
  CHECK(((x + y) - y).rat() == a);
}

TEST_CASE("comparison is a strict total order on distinct field elements") {
  ExactReal b = cubic_root();
  std::vector<ExactReal> xs = {b, b * b, b + ExactReal(Rat(1, 3)), -b, b * b - b};
  for (size_t i = 0; i < xs.size(); ++i)
    for (size_t j = 0; j < xs.size(); ++j) {
      Ordering ij = compare(xs[i], xs[j]);
      Ordering ji = compare(xs[j], xs[i]);
      if (i == j) CHECK(ij == Ordering::Equal);
      if (ij == Ordering::Less) CHECK(ji == Ordering::Greater);
      if (ij == Ordering::Greater) CHECK(ji == Ordering::Less);
    }
  // transitivity on midpoint-sorted order
  for (size_t i = 0; i + 2 < xs.size(); ++i)
    for (size_t j = i + 1; j + 1 < xs.size(); ++j)
      for (size_t k = j + 1; k < xs.size(); ++k)
        if (less(xs[i], xs[j]) && less(xs[j], xs[k])) CHECK(less(xs[i], xs[k]));
}

TEST_CASE("refine is monotone: cached interval never widens") {
  Poly p(std::vector<Rat>{Rat(-2), Rat(0), Rat(1)});
  AlgebraicReal a(p, {Rat(1), Rat(2)});
  Rat w1 = a.refine(Rat(1, 100)).width();
  Rat w2 = a.refine(Rat(1, 100000)).width();
  Rat w3 = a.enclosure().width();
  CHECK(w2 <= w1);
  CHECK(w3 <= w2);
  // evaluating at a coarser request must not widen
  Rat w4 = a.refine(Rat(1, 10)).width();
  CHECK(w4 <= w2);
}

TEST_CASE("serialization round-trips all three forms") {
  for (const char* txt : {"3/10", "-7", "alg(coeffs=[-2,0,1], lo=1, hi=2)"}) {
    ExactReal x = parse_exact(txt);
    ExactReal y = parse_exact(serialize_exact(x));
    CHECK(compare(x, y) == Ordering::Equal);
  }
  // non-generator element round-trips by value through its own minpoly
  ExactReal b = cubic_root();
  ExactReal z = b * b - b * ExactReal(Rat(1, 2));
  ExactReal z2 = parse_exact(serialize_exact(z));
  CHECK(z2.enclosure(80).contains(z.enclosure(120).mid()));
}

TEST_CASE("norm values: exact comparable forms") {
  NormSpec sup{NormKind::Sup, 2};
  NormSpec euc{NormKind::Euclidean, 2};
  NormSpec l1{NormKind::L1, 2};
  std::vector<ExactReal> x = {ExactReal(Rat(3, 4)), ExactReal(Rat(-1, 2))};
  CHECK(norm_magnitude(sup, x).value.rat() == Rat(3, 4));
  std::vector<ExactReal> e = {ExactReal(Rat(3)), ExactReal(Rat(4))};
  CHECK(norm_magnitude(euc, e).value.rat() == Rat(25));
  std::vector<ExactReal> l = {ExactReal(Rat(1, 3)), ExactReal(Rat(1, 6))};
  CHECK(norm_magnitude(l1, l).value.rat() == Rat(1, 2));
  NormSpec lp3{NormKind::Lp, 2, Rat(3)};
  CHECK_THROWS_AS(norm_magnitude(lp3, x), UnsupportedExact);
  NormSpec lp4{NormKind::Lp, 2, Rat(4)};
  CHECK(norm_magnitude(lp4, e).value.rat() == Rat(81 + 256));
}

TEST_CASE("nearest integer points with ties") {
  NormSpec sup{NormKind::Sup, 1};
  auto r = nearest_int_points(sup, {ExactReal(Rat(3, 10))});
  CHECK(r.distance.value.rat() == Rat(3, 10));
  REQUIRE(r.points.size() == 1);
  CHECK(r.points[0][0] == 0);

  NormSpec euc{NormKind::Euclidean, 2};
  auto t = nearest_int_points(euc, {ExactReal(Rat(1, 2)), ExactReal(Rat(1, 2))});
  CHECK(t.distance.value.rat() == Rat(1, 2));  // squared norm
  CHECK(t.points.size() == 4);
  CHECK(t.tie());
}

TEST_CASE("nearest points match brute-force box scan (derived oracle)") {
  NormSpec l1{NormKind::L1, 2};
  std::vector<ExactReal> y = {ExactReal(Rat(2, 5)), ExactReal(Rat(7, 10))};
  auto r = nearest_int_points(l1, y);
  // brute force over ||p||_inf <= 2 around rounded y
  Rat best(1000);
  std::vector<std::vector<Int>> argbest;
  for (long a = -2; a <= 2; ++a)
    for (long b = -2; b <= 2; ++b) {
      Rat d = abs_rat(Rat(2, 5) - a) + abs_rat(Rat(7, 10) - b);
      if (d < best) {
        best = d;
        argbest = {{Int(a), Int(b)}};
      } else if (d == best) {
        argbest.push_back({Int(a), Int(b)});
      }
    }
  CHECK(r.distance.value.rat() == best);
  CHECK(best == Rat(7, 10));
  CHECK(r.points == argbest);
}

TEST_CASE("ball volumes") {
  Rat ex;
  NormSpec sup2{NormKind::Sup, 2};
  ball_volume(sup2, &ex);
  CHECK(ex == Rat(4));
  NormSpec l13{NormKind::L1, 3};
  ball_volume(l13, &ex);
  CHECK(ex == Rat(4, 3));
  NormSpec euc2{NormKind::Euclidean, 2};
  FloatInterval v = ball_volume(euc2);
  double pi = 3.14159265358979323846;
  CHECK(v.mid_double() == doctest::Approx(pi).epsilon(1e-12));
}

TEST_CASE("equivalence constants") {
  CHECK(equivalence_constants({NormKind::Sup, 5}).c2_upper == 1);
  CHECK(equivalence_constants({NormKind::Euclidean, 4}).c2_upper == 2);
  CHECK(equivalence_constants({NormKind::L1, 2}).c2_upper == 2);
  auto e3 = equivalence_constants({NormKind::Euclidean, 3});
  CHECK(e3.c2_upper >= Rat(17320, 10000));
  CHECK(e3.c2_upper <= Rat(17321, 10000));
}

TEST_CASE("norm properties: homogeneity and triangle inequality on exact samples") {
  NormSpec euc{NormKind::Euclidean, 2};
  std::vector<ExactReal> x = {ExactReal(Rat(3, 7)), ExactReal(Rat(-2, 9))};
  std::vector<ExactReal> y = {ExactReal(Rat(1, 4)), ExactReal(Rat(5, 6))};
  Rat s(4, 3);
  std::vector<ExactReal> sx = {x[0] * ExactReal(s), x[1] * ExactReal(s)};
  // homogeneity on the squared form: |s x|^2 = s^2 |x|^2
  CHECK(norm_magnitude(euc, sx).value.rat() == s * s * norm_magnitude(euc, x).value.rat());
  // triangle inequality via interval norms
  std::vector<ExactReal> xy = {x[0] + y[0], x[1] + y[1]};
  double nxy = norm_interval(euc, xy, 64).mid_double();
  double nx = norm_interval(euc, x, 64).mid_double();
  double ny = norm_interval(euc, y, 64).mid_double();
  CHECK(nxy <= nx + ny + 1e-15);
}

TEST_CASE("alg() rejects non-isolating and reducible inputs") {
  CHECK_THROWS(parse_exact("alg(coeffs=[-2,0,1], lo=-2, hi=2)"));   // two roots
  CHECK_THROWS(parse_exact("alg(coeffs=[2,-3,1], lo=0, hi=3)"));    // (x-1)(x-2)
  CHECK_THROWS(parse_exact("alg(coeffs=[1,1], lo=0, hi=1)"));       // linear, no root inside...
}
