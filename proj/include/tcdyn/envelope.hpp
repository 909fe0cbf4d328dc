#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace tcdyn {

/// max over samples with |t_j - t_i| <= window/2, for every i. Times must be
/// increasing. O(n) via a monotone deque.
std::vector<double> running_max(std::span<const double> t, std::span<const double> v, double window);

/// Same on |v|.
std::vector<double> running_max_abs(std::span<const double> t, std::span<const double> v, double window);

struct Peak {
  std::size_t index = 0;
  double t = 0.0;  // parabolic-refined position
  double value = 0.0;
  double prominence = 0.0;
};

/// Local maxima of v (a plateau counts once, located at its midpoint) whose
/// prominence is at least min_prominence. Prominence is the height above the
/// higher of the two lowest points separating the peak from taller terrain.
std::vector<Peak> find_peaks(std::span<const double> t, std::span<const double> v, double min_prominence = 0.0);

/// Vertex of the parabola through samples i-1, i, i+1 (sample itself at the ends).
Peak refine_peak(std::span<const double> t, std::span<const double> v, std::size_t i);

/// Refined global maximum of v on [t_lo, t_hi]; nullopt when no sample lies there.
std::optional<Peak> max_in(std::span<const double> t, std::span<const double> v, double t_lo, double t_hi);

/// First time after which the envelope `env` stays below `level` for at least
/// `hold` time units; nullopt when it never collapses.
std::optional<double> collapse_time(std::span<const double> t, std::span<const double> env, double level,
                                    double hold);

/// First revival of an oscillating signal: the envelope is the running max
/// of |v| over `carrier_window`; after it has stayed below `level` for one
/// carrier window, the first envelope peak above level + min_prominence with at
/// least that prominence. nullopt when the signal never collapses or never revives.
std::optional<Peak> first_revival(std::span<const double> t, std::span<const double> v, double carrier_window,
                                  double level = 0.2, double min_prominence = 0.05);

/// Linear interpolation of samples (t, v) at `at`, clamped to the ends.
double interpolate(std::span<const double> t, std::span<const double> v, double at);

}  // namespace tcdyn
