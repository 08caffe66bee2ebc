#pragma once

#include <string>
#include <vector>

#include "dapx/norms.hpp"

namespace dapx {

struct EmpiricalDistribution {
  std::vector<double> samples;
  bool sorted = false;

  size_t count() const { return samples.size(); }
  void sort_samples();
};

// Closed-form reference laws used as statistical test targets.
//  - DoeblinLenstraAbs:    |q(q theta - p)| for d=1 best approximations on [0,1]
//  - DoeblinLenstraSigned: signed version on [-1,1], density F(|t|)/2
//  - LiftD1:               gcd-lift coordinate of best approximations on [-1/2,1/2]
//  - UniformTorus:         uniform on [-1/2, 1/2]
//  - UniformBallRadial(d): ||disp||/eps of eps-approximations, cdf r^d on [0,1]
struct ReferenceDistribution {
  enum class Kind { DoeblinLenstraAbs, DoeblinLenstraSigned, LiftD1, UniformTorus, UniformBallRadial };
  Kind kind;
  int d = 1;  // UniformBallRadial only

  double cdf(double t) const;
  double density(double t) const;
  double support_lo() const;
  double support_hi() const;
};

// Two-sided Kolmogorov-Smirnov statistic against a continuous reference.
double ks_statistic(EmpiricalDistribution& emp, const ReferenceDistribution& ref);

// N_{m,n}: number of primitive classes in (Z/mZ)^n, and the limit frequency
// 1/N_{m,n} of each primitive class.
Int primitive_class_count(int n, long m);
Rat congruence_expected(int n, long m);

// Expectation zeta(n) / (V_{d,norm} eps^d) of the log-ratio law for
// eps-approximations; zeta summed with a 1e-12 tail bound.
double kl_expected(int n, const NormSpec& spec, const Rat& eps);

// Single-linkage clusters at the given width (1-d samples).
int cluster_count(std::vector<double> samples, double width);
struct ClusterSummary {
  int count = 0;
  double top_mass_fraction = 0;  // fraction of samples in the `top` largest clusters
};
ClusterSummary cluster_summary(std::vector<double> samples, double width, int top);

// Sector x ring histogram of planar displacement samples with a per-sector
// monotone-density verdict (noise tolerance z standard errors on counts).
struct RadialProfile {
  int sectors = 0, rings = 0;
  std::vector<std::vector<long>> counts;   // [sector][ring]
  std::vector<bool> sector_monotone;
  double pass_fraction = 0;
};
RadialProfile radial_profile(const std::vector<std::pair<double, double>>& disp, int sectors,
                             int rings, double z = 3.0);

// Total-variation distance between empirical class frequencies and a uniform
// law on the classes present in `expected_classes`.
double tv_distance_uniform(const std::vector<long>& class_counts, long total, const Rat& expected);

}  // namespace dapx
