#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace anosov {

/// Nearest-neighbor search over points of [0,1)^n with the torus metric,
/// backed by uniform cell binning at roughly one point per cell. Uniform
/// data is answered by expanding-shell search around the query cell;
/// heavily clustered data collapses into few occupied cells, and queries
/// then scan the occupied-cell list with per-cell distance bounds instead.
class TorusPointIndex {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  TorusPointIndex(const std::vector<std::vector<double>>& points, std::size_t dim);

  std::size_t size() const { return count_; }

  /// Distance from q to the nearest indexed point; `exclude` skips one
  /// point index (use npos to keep all).
  double nearest_distance(const double* q, std::size_t exclude = npos) const;
  double nearest_distance(const std::vector<double>& q, std::size_t exclude = npos) const;

  static double wrapped_distance(const double* a, const double* b, std::size_t dim);

 private:
  struct Cell {
    std::vector<std::uint32_t> coords;
    std::vector<std::uint32_t> idxs;
  };

  std::uint32_t axis_cell(double x) const;
  std::uint64_t cell_key(const std::vector<std::uint32_t>& c) const;
  void scan_cell(const Cell& cell, const double* q, std::size_t exclude, double& best_sq) const;

  std::size_t dim_ = 0;
  std::size_t count_ = 0;
  std::uint32_t m_ = 1;
  std::vector<double> flat_;
  std::vector<Cell> cells_;
  std::unordered_map<std::uint64_t, std::uint32_t> lookup_;
  bool direct_mode_ = false;
};

}  // namespace anosov
