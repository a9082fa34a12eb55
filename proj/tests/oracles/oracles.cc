// Copyright 2026 The Prerank Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "oracles.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

namespace prerank::oracle {

double PixelIou(int ax0, int ay0, int ax1, int ay1, int bx0, int by0, int bx1,
                int by1) {
  const int lo_x = std::min(ax0, bx0), hi_x = std::max(ax1, bx1);
  const int lo_y = std::min(ay0, by0), hi_y = std::max(ay1, by1);
  long inter = 0, uni = 0;
  for (int y = lo_y; y < hi_y; ++y) {
    for (int x = lo_x; x < hi_x; ++x) {
      const bool in_a = x >= ax0 && x < ax1 && y >= ay0 && y < ay1;
      const bool in_b = x >= bx0 && x < bx1 && y >= by0 && y < by1;
      inter += (in_a && in_b) ? 1 : 0;
      uni += (in_a || in_b) ? 1 : 0;
    }
  }
  return uni == 0 ? 0.0 : static_cast<double>(inter) / static_cast<double>(uni);
}

std::vector<std::size_t> StableDescendingOrder(const std::vector<double>& keys) {
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    std::size_t pos = order.size();
    while (pos > 0 && keys[order[pos - 1]] < keys[i]) --pos;
    order.insert(order.begin() + static_cast<std::ptrdiff_t>(pos), i);
  }
  return order;
}

GridMin GridSearch1D(const std::function<double(double)>& f, double lo,
                     double hi, double step) {
  GridMin best{lo, f(lo)};
  const long steps = std::lround((hi - lo) / step);
  for (long i = 1; i <= steps; ++i) {
    const double x = lo + static_cast<double>(i) * step;
    const double v = f(x);
    if (v < best.value) best = {x, v};
  }
  return best;
}

double PrimalObjective(const HingeInstance& inst, const std::vector<double>& w) {
  double reg = 0.0;
  for (double v : w) reg += v * v;
  double loss = 0.0;
  for (const auto& group : inst.groups) {
    double group_loss = 0.0;
    for (const auto& z : group) {
      double dot = 0.0;
      for (std::size_t i = 0; i < inst.dim; ++i) dot += w[i] * z[i];
      const double h = 1.0 - dot;
      if (inst.shared_slack) {
        group_loss = std::max(group_loss, h);
      } else {
        group_loss += std::max(0.0, h);
      }
    }
    loss += group_loss;
  }
  return 0.5 * reg + inst.C * loss;
}

namespace {

// Euclidean projection onto {a >= 0, sum a <= cap}.
void ProjectCappedSimplex(std::vector<double>& a, double cap) {
  double sum = 0.0;
  for (double& v : a) {
    v = std::max(v, 0.0);
    sum += v;
  }
  if (sum <= cap) return;
  std::vector<double> sorted = a;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double cumulative = 0.0, theta = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    cumulative += sorted[i];
    const double t = (cumulative - cap) / static_cast<double>(i + 1);
    if (i + 1 == sorted.size() || sorted[i + 1] <= t) {
      theta = t;
      break;
    }
  }
  for (double& v : a) v = std::max(v - theta, 0.0);
}

}  // namespace

DualSolution SolveDual(const HingeInstance& inst, double gap_tol,
                       int max_iterations) {
  // Flatten the constraints.
  std::vector<const std::vector<double>*> z;
  std::vector<std::size_t> group_of;
  for (std::size_t j = 0; j < inst.groups.size(); ++j) {
    for (const auto& zc : inst.groups[j]) {
      z.push_back(&zc);
      group_of.push_back(j);
    }
  }
  const std::size_t m = z.size();
  double lipschitz = 1e-12;
  for (const auto* zc : z) {
    for (double v : *zc) lipschitz += v * v;
  }

  auto recover_w = [&](const std::vector<double>& a) {
    std::vector<double> w(inst.dim, 0.0);
    for (std::size_t c = 0; c < m; ++c) {
      for (std::size_t i = 0; i < inst.dim; ++i) w[i] += a[c] * (*z[c])[i];
    }
    return w;
  };
  auto dual_value = [&](const std::vector<double>& a, const std::vector<double>& w) {
    double s = 0.0, ww = 0.0;
    for (double v : a) s += v;
    for (double v : w) ww += v * v;
    return s - 0.5 * ww;
  };
  auto project = [&](std::vector<double>& a) {
    if (!inst.shared_slack) {
      for (double& v : a) v = std::clamp(v, 0.0, inst.C);
      return;
    }
    for (std::size_t j = 0; j < inst.groups.size(); ++j) {
      std::vector<double> part;
      for (std::size_t c = 0; c < m; ++c) if (group_of[c] == j) part.push_back(a[c]);
      ProjectCappedSimplex(part, inst.C);
      std::size_t k = 0;
      for (std::size_t c = 0; c < m; ++c) if (group_of[c] == j) a[c] = part[k++];
    }
  };

  std::vector<double> alpha(m, 0.0), y = alpha;
  double t = 1.0;
  DualSolution sol;
  double prev_dual = -std::numeric_limits<double>::infinity();
  for (int it = 1; it <= max_iterations; ++it) {
    const std::vector<double> wy = recover_w(y);
    std::vector<double> next(m);
    for (std::size_t c = 0; c < m; ++c) {
      double dot = 0.0;
      for (std::size_t i = 0; i < inst.dim; ++i) dot += wy[i] * (*z[c])[i];
      next[c] = y[c] + (1.0 - dot) / lipschitz;  // ascent on D
    }
    project(next);
    const std::vector<double> wn = recover_w(next);
    const double d = dual_value(next, wn);
    const double t_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t * t));
    if (d < prev_dual) {
      // Restart momentum when the dual value drops.
      t = 1.0;
      y = alpha;
      continue;
    }
    for (std::size_t c = 0; c < m; ++c) {
      y[c] = next[c] + ((t - 1.0) / t_next) * (next[c] - alpha[c]);
    }
    t = t_next;
    alpha = next;
    prev_dual = d;
    sol.iterations = it;
    if (it % 64 == 0 || it == max_iterations) {
      const double p = PrimalObjective(inst, wn);
      if (p - d <= gap_tol * std::max(1.0, std::abs(p))) break;
    }
  }
  sol.w = recover_w(alpha);
  sol.primal = PrimalObjective(inst, sol.w);
  sol.dual = dual_value(alpha, sol.w);
  return sol;
}

HingeInstance PartialInstance(const Dataset& dataset, int k, double C,
                              bool shared_slack) {
  HingeInstance inst;
  inst.C = C;
  inst.shared_slack = shared_slack;
  for (const auto& record : dataset.records) {
    std::vector<double> labels;
    for (const auto& c : record.candidates) labels.push_back(*c.iou_label);
    const auto order = StableDescendingOrder(labels);
    const std::size_t n = order.size();
    const std::size_t kk = static_cast<std::size_t>(k);
    const std::size_t cap = std::min(n - kk, 2 * kk);
    std::vector<std::vector<double>> group;
    for (std::size_t r = 0; r < kk; ++r) {
      group.push_back(*record.candidates[order[r]].features);
    }
    for (std::size_t r = n - cap; r < n; ++r) {
      std::vector<double> neg = *record.candidates[order[r]].features;
      for (double& v : neg) v = -v;
      group.push_back(std::move(neg));
    }
    inst.dim = group.front().size();
    inst.groups.push_back(std::move(group));
  }
  return inst;
}

BruteMetrics BruteForceMetrics(const Dataset& dataset,
                               const std::vector<std::vector<std::size_t>>& rankings,
                               double delta, std::size_t m, bool strict) {
  auto overlap = [](const Box& a, const Box& b) {
    const double ix0 = a.x_min > b.x_min ? a.x_min : b.x_min;
    const double iy0 = a.y_min > b.y_min ? a.y_min : b.y_min;
    const double ix1 = a.x_max < b.x_max ? a.x_max : b.x_max;
    const double iy1 = a.y_max < b.y_max ? a.y_max : b.y_max;
    if (ix1 <= ix0 || iy1 <= iy0) return 0.0;
    const double inter = (ix1 - ix0) * (iy1 - iy0);
    const double area_a = (a.x_max - a.x_min) * (a.y_max - a.y_min);
    const double area_b = (b.x_max - b.x_min) * (b.y_max - b.y_min);
    return inter / (area_a + area_b - inter);
  };
  BruteMetrics out;
  std::map<std::string, std::pair<double, std::size_t>> per_class;
  for (std::size_t j = 0; j < dataset.records.size(); ++j) {
    const auto& record = dataset.records[j];
    for (const auto& gt : record.groundtruth) {
      double best = 0.0;
      for (std::size_t r = 0; r < rankings[j].size() && r < m; ++r) {
        const double o = overlap(gt.box, record.candidates[rankings[j][r]].box);
        if (o > best) best = o;
      }
      ++out.total;
      if (strict ? best > delta : best >= delta) ++out.covered;
      per_class[gt.class_label].first += best;
      per_class[gt.class_label].second += 1;
    }
  }
  double sum = 0.0;
  for (const auto& [cls, acc] : per_class) sum += acc.first / static_cast<double>(acc.second);
  out.mabo = per_class.empty() ? 0.0 : sum / static_cast<double>(per_class.size());
  return out;
}

}  // namespace prerank::oracle
