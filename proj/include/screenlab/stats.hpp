#pragma once

// Statistical primitives for the screening reports. Percentiles use the
// nearest-rank method (no interpolation), medians included, so results
// reproduce exactly across languages.

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "error.hpp"

namespace screenlab {

inline double percentile(std::vector<double> values, double p) {
  if (values.empty()) throw EmptyInput("percentile of empty set");
  if (!(p >= 0.0 && p <= 100.0))
    throw InputError("percentile rank must be in [0, 100]");
  std::sort(values.begin(), values.end());
  if (p == 0.0) return values.front();
  auto rank = static_cast<std::size_t>(
      std::ceil(p / 100.0 * static_cast<double>(values.size())));
  rank = std::min(std::max<std::size_t>(rank, 1), values.size());
  return values[rank - 1];
}

inline double median(const std::vector<double>& values) {
  return percentile(values, 50.0);
}

inline double pearson(const std::vector<double>& xs,
                      const std::vector<double>& ys) {
  if (xs.size() != ys.size())
    throw DegenerateInput("pearson needs equal-length sequences");
  const std::size_t n = xs.size();
  if (n < 2) throw DegenerateInput("pearson needs at least two points");
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    double dx = xs[i] - mx, dy = ys[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0)
    throw DegenerateInput("pearson needs nonzero variance in both arguments");
  return sxy / std::sqrt(sxx * syy);
}

struct RankedLigand {
  std::string label;
  double energy = 0;
  std::map<std::string, double> metrics;
};

struct GroupComparison {
  std::string metric;
  double mean_a = 0, mean_b = 0;
  int count_a = 0, count_b = 0;
};

// sorts by energy ascending (ties by label); group A = best k, group B =
// worst k; one comparison per metric name present in the input
inline std::vector<GroupComparison> compare_groups(
    std::vector<RankedLigand> ranked, int k) {
  if (k < 1) throw InputError("group size must be positive");
  if (ranked.size() < 2 * static_cast<std::size_t>(k))
    throw InsufficientData("need at least " + std::to_string(2 * k) +
                           " ligands for two groups of " + std::to_string(k));
  std::sort(ranked.begin(), ranked.end(),
            [](const RankedLigand& a, const RankedLigand& b) {
              return std::tie(a.energy, a.label) < std::tie(b.energy, b.label);
            });
  std::set<std::string> names;
  for (const RankedLigand& r : ranked)
    for (const auto& [name, value] : r.metrics) names.insert(name);

  std::vector<GroupComparison> out;
  for (const std::string& name : names) {
    GroupComparison g;
    g.metric = name;
    for (int i = 0; i < k; ++i) {
      auto it = ranked[i].metrics.find(name);
      if (it == ranked[i].metrics.end()) continue;
      g.mean_a += it->second;
      ++g.count_a;
    }
    for (std::size_t i = ranked.size() - k; i < ranked.size(); ++i) {
      auto it = ranked[i].metrics.find(name);
      if (it == ranked[i].metrics.end()) continue;
      g.mean_b += it->second;
      ++g.count_b;
    }
    if (g.count_a > 0) g.mean_a /= g.count_a;
    if (g.count_b > 0) g.mean_b /= g.count_b;
    out.push_back(std::move(g));
  }
  return out;
}

struct BoxplotSummary {
  // whisker ends: most extreme values inside the 1.5 IQR fences
  double min = 0, q1 = 0, median = 0, q3 = 0, max = 0;
  std::vector<double> outliers;  // ascending
};

inline BoxplotSummary boxplot_summary(const std::vector<double>& values) {
  if (values.empty()) throw EmptyInput("boxplot of empty set");
  BoxplotSummary b;
  b.q1 = percentile(values, 25.0);
  b.median = percentile(values, 50.0);
  b.q3 = percentile(values, 75.0);
  double iqr = b.q3 - b.q1;
  double lo = b.q1 - 1.5 * iqr, hi = b.q3 + 1.5 * iqr;
  b.min = b.q1;
  b.max = b.q3;
  for (double v : values) {
    if (v < lo || v > hi) {
      b.outliers.push_back(v);
      continue;
    }
    b.min = std::min(b.min, v);
    b.max = std::max(b.max, v);
  }
  std::sort(b.outliers.begin(), b.outliers.end());
  return b;
}

}  // namespace screenlab
