#include "tcdyn/envelope.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

#include "tcdyn/errors.hpp"

namespace tcdyn {

namespace {

void check_lengths(std::span<const double> t, std::span<const double> v) {
  if (t.size() != v.size()) throw InvalidArgument("time and value arrays differ in length");
}

}  // namespace

std::vector<double> running_max(std::span<const double> t, std::span<const double> v, double window) {
  check_lengths(t, v);
  const std::size_t n = t.size();
  const double half = 0.5 * window;
  std::vector<double> out(n);
  std::deque<std::size_t> dq;  // indices with decreasing v
  std::size_t hi = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (hi < n && t[hi] <= t[i] + half) {
      while (!dq.empty() && v[dq.back()] <= v[hi]) dq.pop_back();
      dq.push_back(hi++);
    }
    while (t[dq.front()] < t[i] - half) dq.pop_front();
    out[i] = v[dq.front()];
  }
  return out;
}

std::vector<double> running_max_abs(std::span<const double> t, std::span<const double> v, double window) {
  std::vector<double> a(v.size());
  std::transform(v.begin(), v.end(), a.begin(), [](double x) { return std::abs(x); });
  return running_max(t, a, window);
}

Peak refine_peak(std::span<const double> t, std::span<const double> v, std::size_t i) {
  check_lengths(t, v);
  Peak p{i, t[i], v[i], 0.0};
  if (i == 0 || i + 1 >= t.size()) return p;
  const double y0 = v[i - 1], y1 = v[i], y2 = v[i + 1];
  const double denom = y0 - 2.0 * y1 + y2;
  if (denom >= 0.0) return p;
  const double h = 0.5 * (t[i + 1] - t[i - 1]);
  const double s = 0.5 * (y0 - y2) / denom;  // offset in units of h, |s| <= 1/2 for a true max
  p.t = t[i] + s * h;
  p.value = y1 - 0.25 * (y0 - y2) * s;
  return p;
}

std::vector<Peak> find_peaks(std::span<const double> t, std::span<const double> v, double min_prominence) {
  check_lengths(t, v);
  const std::size_t n = v.size();
  std::vector<Peak> out;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (!(v[i] > v[i - 1])) continue;
    std::size_t j = i;
    while (j + 1 < n && v[j + 1] == v[i]) ++j;
    if (j + 1 >= n || !(v[j + 1] < v[i])) continue;

    double left_min = v[i];
    for (std::size_t k = i; k-- > 0;) {
      if (v[k] > v[i]) break;
      left_min = std::min(left_min, v[k]);
    }
    double right_min = v[i];
    for (std::size_t k = j + 1; k < n; ++k) {
      if (v[k] > v[i]) break;
      right_min = std::min(right_min, v[k]);
    }
    const double prominence = v[i] - std::max(left_min, right_min);
    if (prominence >= min_prominence) {
      Peak p = refine_peak(t, v, i);
      if (j > i) {
        p.index = i + (j - i) / 2;
        p.t = 0.5 * (t[i] + t[j]);
      }
      p.prominence = prominence;
      out.push_back(p);
    }
    i = j;
  }
  return out;
}

std::optional<Peak> max_in(std::span<const double> t, std::span<const double> v, double t_lo, double t_hi) {
  check_lengths(t, v);
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] < t_lo || t[i] > t_hi) continue;
    if (!best || v[i] > v[*best]) best = i;
  }
  if (!best) return std::nullopt;
  return refine_peak(t, v, *best);
}

std::optional<double> collapse_time(std::span<const double> t, std::span<const double> env, double level,
                                    double hold) {
  check_lengths(t, env);
  std::optional<double> start;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (env[i] < level) {
      if (!start) start = t[i];
      if (t[i] - *start >= hold) return start;
    } else {
      start.reset();
    }
  }
  return std::nullopt;
}

std::optional<Peak> first_revival(std::span<const double> t, std::span<const double> v, double carrier_window,
                                  double level, double min_prominence) {
  const std::vector<double> env = running_max_abs(t, v, carrier_window);
  const auto tc = collapse_time(t, env, level, carrier_window);
  if (!tc) return std::nullopt;
  for (const Peak& p : find_peaks(t, env, min_prominence))
    if (p.t > *tc && p.value >= level + min_prominence) return p;
  return std::nullopt;
}

double interpolate(std::span<const double> t, std::span<const double> v, double at) {
  check_lengths(t, v);
  if (t.empty()) throw InvalidArgument("interpolation needs samples");
  if (at <= t.front()) return v.front();
  if (at >= t.back()) return v.back();
  const auto it = std::upper_bound(t.begin(), t.end(), at);
  const std::size_t i = static_cast<std::size_t>(it - t.begin());
  const double w = (at - t[i - 1]) / (t[i] - t[i - 1]);
  return (1.0 - w) * v[i - 1] + w * v[i];
}

}  // namespace tcdyn
