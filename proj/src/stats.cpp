#include "dapx/stats.hpp"

#include <algorithm>
#include <cmath>

namespace dapx {

void EmpiricalDistribution::sort_samples() {
  if (!sorted) {
    std::sort(samples.begin(), samples.end());
    sorted = true;
  }
}

namespace {
const double kLog2 = std::log(2.0);
}

double ReferenceDistribution::cdf(double t) const {
  switch (kind) {
    case Kind::DoeblinLenstraAbs: {
      if (t <= 0) return 0;
      if (t >= 1) return 1;
      if (t <= 0.5) return t / kLog2;
      return (1.0 - t + std::log(2.0 * t)) / kLog2;
    }
    case Kind::DoeblinLenstraSigned: {
      if (t <= -1) return 0;
      if (t >= 1) return 1;
      ReferenceDistribution abs{Kind::DoeblinLenstraAbs, 1};
      double c = abs.cdf(std::fabs(t)) / 2;
      return t >= 0 ? 0.5 + c : 0.5 - c;
    }
    case Kind::LiftD1: {
      if (t <= -0.5) return 0;
      if (t >= 0.5) return 1;
      double a = std::fabs(t);
      double half = (std::log(2.0 * (1.0 + a) / (2.0 - a))) / (2 * kLog2);
      return t >= 0 ? 0.5 + half : 0.5 - half;
    }
    case Kind::UniformTorus: {
      if (t <= -0.5) return 0;
      if (t >= 0.5) return 1;
      return t + 0.5;
    }
    case Kind::UniformBallRadial: {
      if (t <= 0) return 0;
      if (t >= 1) return 1;
      return std::pow(t, d);
    }
  }
  return 0;
}

double ReferenceDistribution::density(double t) const {
  switch (kind) {
    case Kind::DoeblinLenstraAbs:
      if (t < 0 || t > 1) return 0;
      return t <= 0.5 ? 1.0 / kLog2 : (1.0 / t - 1.0) / kLog2;
    case Kind::DoeblinLenstraSigned: {
      ReferenceDistribution abs{Kind::DoeblinLenstraAbs, 1};
      return (t < -1 || t > 1) ? 0 : abs.density(std::fabs(t)) / 2;
    }
    case Kind::LiftD1: {
      if (t < -0.5 || t > 0.5) return 0;
      double a = std::fabs(t);
      return (1.0 / (2.0 - a) + 1.0 / (1.0 + a)) / (2 * kLog2);
    }
    case Kind::UniformTorus: return (t < -0.5 || t > 0.5) ? 0 : 1.0;
    case Kind::UniformBallRadial:
      return (t < 0 || t > 1) ? 0 : d * std::pow(t, d - 1);
  }
  return 0;
}

double ReferenceDistribution::support_lo() const {
  switch (kind) {
    case Kind::DoeblinLenstraAbs:
    case Kind::UniformBallRadial: return 0;
    case Kind::DoeblinLenstraSigned: return -1;
    default: return -0.5;
  }
}

double ReferenceDistribution::support_hi() const {
  switch (kind) {
    case Kind::DoeblinLenstraAbs:
    case Kind::DoeblinLenstraSigned:
    case Kind::UniformBallRadial: return kind == Kind::DoeblinLenstraSigned ? 1 : 1;
    default: return 0.5;
  }
}

double ks_statistic(EmpiricalDistribution& emp, const ReferenceDistribution& ref) {
  emp.sort_samples();
  size_t n = emp.samples.size();
  if (n == 0) throw std::invalid_argument("empty sample");
  double dmax = 0;
  for (size_t i = 0; i < n; ++i) {
    double f = ref.cdf(emp.samples[i]);
    double up = double(i + 1) / n - f;
    double dn = f - double(i) / n;
    if (up > dmax) dmax = up;
    if (dn > dmax) dmax = dn;
  }
  return dmax;
}

Int primitive_class_count(int n, long m) {
  if (m < 2) throw std::invalid_argument("m >= 2 required");
  Int total = 1;
  long rest = m;
  for (long p = 2; p * p <= rest; ++p) {
    if (rest % p) continue;
    long r = 0;
    while (rest % p == 0) {
      rest /= p;
      ++r;
    }
    total *= pow_int(Int(p), (unsigned long)(n * r)) - pow_int(Int(p), (unsigned long)(n * (r - 1)));
  }
  if (rest > 1) total *= pow_int(Int(rest), (unsigned long)n) - pow_int(Int(rest), (unsigned long)(n - 1));
  return total;
}

Rat congruence_expected(int n, long m) { return Rat(1, primitive_class_count(n, m)); }

double kl_expected(int n, const NormSpec& spec, const Rat& eps) {
  if (!(eps > 0)) throw std::invalid_argument("eps > 0 required");
  // zeta(n) with tail bound K^(1-n)/(n-1) < 1e-12
  double zeta = 0;
  double k = 1;
  for (;;) {
    double term = std::pow(k, -n);
    zeta += term;
    double tail = std::pow(k, 1.0 - n) / (n - 1);
    if (tail < 1e-12) break;
    k += 1;
  }
  FloatInterval vol = ball_volume(spec, nullptr, 128);
  double v = vol.mid_double();
  double epsd = std::pow(eps.get_d(), spec.dim);
  return zeta / (v * epsd);
}

int cluster_count(std::vector<double> samples, double width) {
  if (samples.empty()) return 0;
  std::sort(samples.begin(), samples.end());
  int c = 1;
  for (size_t i = 1; i < samples.size(); ++i)
    if (samples[i] - samples[i - 1] > width) ++c;
  return c;
}

ClusterSummary cluster_summary(std::vector<double> samples, double width, int top) {
  ClusterSummary out;
  if (samples.empty()) return out;
  std::sort(samples.begin(), samples.end());
  std::vector<long> sizes;
  long cur = 1;
  for (size_t i = 1; i < samples.size(); ++i) {
    if (samples[i] - samples[i - 1] > width) {
      sizes.push_back(cur);
      cur = 1;
    } else {
      ++cur;
    }
  }
  sizes.push_back(cur);
  out.count = (int)sizes.size();
  std::sort(sizes.rbegin(), sizes.rend());
  long mass = 0;
  for (int i = 0; i < top && i < (int)sizes.size(); ++i) mass += sizes[i];
  out.top_mass_fraction = double(mass) / double(samples.size());
  return out;
}

RadialProfile radial_profile(const std::vector<std::pair<double, double>>& disp, int sectors,
                             int rings, double z) {
  RadialProfile out;
  out.sectors = sectors;
  out.rings = rings;
  out.counts.assign(sectors, std::vector<long>(rings, 0));
  double rmax = 0;
  for (auto& [x, y] : disp) rmax = std::max(rmax, std::hypot(x, y));
  if (rmax == 0) rmax = 1;
  rmax *= 1.0000001;
  const double pi = 3.14159265358979323846;
  for (auto& [x, y] : disp) {
    double ang = std::atan2(y, x);
    int s = (int)std::floor((ang + pi) / (2 * pi) * sectors);
    if (s < 0) s = 0;
    if (s >= sectors) s = sectors - 1;
    double r = std::hypot(x, y);
    int k = (int)std::floor(r / rmax * rings);
    if (k >= rings) k = rings - 1;
    out.counts[s][k]++;
  }
  int pass = 0;
  for (int s = 0; s < sectors; ++s) {
    // density per ring: count / annulus-sector area; area_k proportional to (2k+1)
    std::vector<double> dens(rings), err(rings);
    for (int k = 0; k < rings; ++k) {
      double area = 2.0 * k + 1.0;
      dens[k] = out.counts[s][k] / area;
      err[k] = std::sqrt(std::max<long>(out.counts[s][k], 1)) / area;
    }
    // smoothed (window 3) monotone check within z standard errors
    auto smooth = [&](int k) {
      double num = dens[k], den = 1;
      if (k > 0) {
        num += dens[k - 1];
        den += 1;
      }
      if (k + 1 < rings) {
        num += dens[k + 1];
        den += 1;
      }
      return num / den;
    };
    bool ok = true;
    for (int k = 0; k + 1 < rings; ++k) {
      double a = smooth(k), b = smooth(k + 1);
      double tol = z * (err[k] + err[k + 1]);
      if (b > a + tol) ok = false;
    }
    out.sector_monotone.push_back(ok);
    if (ok) ++pass;
  }
  out.pass_fraction = double(pass) / sectors;
  return out;
}

double tv_distance_uniform(const std::vector<long>& class_counts, long total, const Rat& expected) {
  double e = expected.get_d();
  double tv = 0;
  for (long c : class_counts) tv += std::fabs(double(c) / total - e);
  // classes with zero observed count still contribute |0 - e| each; the caller
  // passes every class, so the plain sum over the provided vector is the TV x2
  return tv / 2;
}

}  // namespace dapx
