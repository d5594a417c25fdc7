#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "acg/element.hpp"

namespace acg {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Unsigned Stirling number of the first kind: permutations of n points
/// with exactly c cycles. Out-of-range c gives 0 and sets *out_of_range.
BigInt stirling_first(int n, int c, bool* out_of_range = nullptr);

enum class Parity
{
  all,
  even_only
};

struct CycleDistribution
{
  int n = 0;
  Parity parity = Parity::all;
  /// cycle count -> probability
  std::map<int, Rational> support;
};

/// s(n,c)/n!, or s(n,c)/(n!/2) over c with n - c even. Throws for n < 1.
CycleDistribution cycle_distribution(int n, Parity parity);
/// Rows "c,numerator,denominator".
std::string to_csv(const CycleDistribution& d);

struct ChiSquaredReport
{
  double statistic = 0;
  int dof = 0;
  double critical = 0;
  double alpha = 0.05;
  bool pass = true;
  /// Bins remaining after pooling.
  std::size_t bins = 0;
};

/// Pearson chi-squared goodness of fit. Bins with expected count below 5
/// are pooled, smallest expected first (ties by observed count, so the
/// statistic does not depend on the labels); dof = bins - 1. Throws
/// PreconditionError on an empty histogram or an observed key missing from
/// `expected`.
ChiSquaredReport chi_squared_test(const std::map<std::int64_t, std::uint64_t>& observed,
                                  const std::map<std::int64_t, Rational>& expected, double alpha = 0.05);

/// Upper-alpha critical value of chi-squared with `dof` degrees of freedom.
double chi_squared_critical(int dof, double alpha);

struct PointActionReport
{
  /// histogram[p] = number of samples sending point 0 to p
  std::vector<std::uint64_t> histogram;
  ChiSquaredReport test;
};

/// Image of point 0 under each sample against the uniform distribution on
/// n points. Throws TypeError on a non-permutation or degree mismatch.
PointActionReport point_action_uniformity(const std::vector<GroupElement>& samples, int n);

/// Cycle-count histogram of permutation samples.
std::map<std::int64_t, std::uint64_t> cycle_histogram(const std::vector<GroupElement>& samples);

/// 1/2 sum_v |count_v/T - 1/m| over a set of size m; `counts` lists the
/// nonzero or observed bins (at most m of them). Exact.
Rational tv_distance(const std::vector<std::uint64_t>& counts, std::uint64_t m);
/// Same for a set too large to index (m given exactly, e.g. n!/2).
Rational tv_distance(const std::vector<std::uint64_t>& counts, const BigInt& m);

/// "p/q" (or "p" when q = 1).
std::string to_string(const Rational& r);

} // namespace acg
