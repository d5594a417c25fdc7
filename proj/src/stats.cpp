#include "acg/stats.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <boost/math/distributions/chi_squared.hpp>

#include "acg/errors.hpp"

namespace acg {

BigInt stirling_first(int n, int c, bool* out_of_range)
{
  const bool bad = n < 0 || c < 0 || c > n;
  if (out_of_range)
    *out_of_range = bad;
  if (bad)
    return 0;
  // Row recurrence s(m,j) = s(m-1,j-1) + (m-1) s(m-1,j).
  std::vector<BigInt> row{1};
  for (int m = 1; m <= n; ++m) {
    std::vector<BigInt> next(static_cast<std::size_t>(m) + 1, 0);
    for (int j = 1; j <= m; ++j) {
      next[j] = row[j - 1];
      if (j < m)
        next[j] += BigInt(m - 1) * row[j];
    }
    row = std::move(next);
  }
  return row[c];
}

CycleDistribution cycle_distribution(int n, Parity parity)
{
  if (n < 1)
    throw PreconditionError("cycle_distribution needs n >= 1");
  CycleDistribution d;
  d.n = n;
  d.parity = parity;
  BigInt total = 0;
  std::map<int, BigInt> counts;
  for (int c = 1; c <= n; ++c) {
    if (parity == Parity::even_only && (n - c) % 2 != 0)
      continue;
    counts[c] = stirling_first(n, c);
    total += counts[c];
  }
  for (const auto& [c, s] : counts)
    if (s != 0)
      d.support[c] = Rational(s, total);
  return d;
}

std::string to_csv(const CycleDistribution& d)
{
  std::ostringstream out;
  out << "c,numerator,denominator\n";
  for (const auto& [c, p] : d.support)
    out << c << ',' << numerator(p) << ',' << denominator(p) << '\n';
  return out.str();
}

double chi_squared_critical(int dof, double alpha)
{
  if (dof < 1)
    throw PreconditionError("chi-squared needs at least one degree of freedom");
  boost::math::chi_squared_distribution<double> dist(dof);
  return boost::math::quantile(boost::math::complement(dist, alpha));
}

ChiSquaredReport chi_squared_test(const std::map<std::int64_t, std::uint64_t>& observed,
                                  const std::map<std::int64_t, Rational>& expected, double alpha)
{
  std::uint64_t total = 0;
  for (const auto& [key, count] : observed) {
    if (count > 0 && !expected.count(key))
      throw PreconditionError("observed bin " + std::to_string(key) + " lies outside the expected support");
    total += count;
  }
  if (total == 0)
    throw PreconditionError("chi-squared test on an empty histogram");

  struct Bin
  {
    double expected;
    double observed;
    std::int64_t key;
  };
  std::vector<Bin> bins;
  for (const auto& [key, p] : expected) {
    const auto it = observed.find(key);
    const double o = it == observed.end() ? 0.0 : static_cast<double>(it->second);
    bins.push_back({static_cast<double>(total) * p.convert_to<double>(), o, key});
  }
  auto smaller = [](const Bin& a, const Bin& b) {
    if (a.expected != b.expected)
      return a.expected < b.expected;
    return a.observed != b.observed ? a.observed < b.observed : a.key < b.key;
  };
  // Merge the two smallest bins until every bin expects at least 5.
  for (;;) {
    std::sort(bins.begin(), bins.end(), smaller);
    if (bins.size() < 2 || bins.front().expected >= 5.0)
      break;
    bins[1].expected += bins[0].expected;
    bins[1].observed += bins[0].observed;
    bins[1].key = std::min(bins[1].key, bins[0].key);
    bins.erase(bins.begin());
  }

  ChiSquaredReport r;
  r.alpha = alpha;
  r.bins = bins.size();
  r.dof = static_cast<int>(bins.size()) - 1;
  for (const auto& b : bins)
    if (b.expected > 0)
      r.statistic += (b.observed - b.expected) * (b.observed - b.expected) / b.expected;
  if (r.dof < 1) {
    r.critical = 0;
    r.pass = true;
    return r;
  }
  r.critical = chi_squared_critical(r.dof, alpha);
  r.pass = r.statistic < r.critical;
  return r;
}

PointActionReport point_action_uniformity(const std::vector<GroupElement>& samples, int n)
{
  if (n < 1)
    throw PreconditionError("point_action_uniformity needs n >= 1");
  PointActionReport r;
  r.histogram.assign(static_cast<std::size_t>(n), 0);
  std::map<std::int64_t, std::uint64_t> observed;
  for (const auto& s : samples) {
    const auto* p = std::get_if<Permutation>(&s);
    if (!p)
      throw TypeError("point_action_uniformity needs permutations");
    if (p->degree != n)
      throw TypeError("sample of degree " + std::to_string(p->degree) + " where " + std::to_string(n) +
                      " was expected");
    ++r.histogram[(*p)[0]];
    ++observed[(*p)[0]];
  }
  std::map<std::int64_t, Rational> uniform;
  for (int x = 0; x < n; ++x)
    uniform[x] = Rational(1, n);
  r.test = chi_squared_test(observed, uniform);
  return r;
}

std::map<std::int64_t, std::uint64_t> cycle_histogram(const std::vector<GroupElement>& samples)
{
  std::map<std::int64_t, std::uint64_t> h;
  for (const auto& s : samples)
    ++h[cycle_count(s)];
  return h;
}

Rational tv_distance(const std::vector<std::uint64_t>& counts, std::uint64_t m)
{
  return tv_distance(counts, BigInt(m));
}

Rational tv_distance(const std::vector<std::uint64_t>& counts, const BigInt& m)
{
  if (m <= 0)
    throw PreconditionError("tv_distance needs m >= 1");
  if (BigInt(counts.size()) > m)
    throw PreconditionError("more bins than elements in tv_distance");
  BigInt total = 0;
  for (auto c : counts)
    total += c;
  if (total == 0)
    throw PreconditionError("tv_distance of an empty histogram");
  // (1 / (2 T m)) sum_v |m c_v - T|
  BigInt sum = 0;
  for (auto c : counts) {
    BigInt d = m * c - total;
    sum += d < 0 ? BigInt(-d) : d;
  }
  sum += (m - counts.size()) * total;
  return Rational(sum, 2 * total * m);
}

std::string to_string(const Rational& r)
{
  if (denominator(r) == 1)
    return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

} // namespace acg
