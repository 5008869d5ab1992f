#include "anosov/point_index.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace anosov {

namespace {

constexpr std::size_t kDirectModeCellLimit = 64;

double circle_distance(double a, double b) {
  double d = std::fabs(a - b);
  return d > 0.5 ? 1.0 - d : d;
}

/// Distance on the circle from q to the arc [lo, hi].
double circle_to_interval(double q, double lo, double hi) {
  if (q >= lo && q <= hi) return 0.0;
  return std::min(circle_distance(q, lo), circle_distance(q, hi));
}

}  // namespace

double TorusPointIndex::wrapped_distance(const double* a, const double* b, std::size_t dim) {
  double sum = 0.0;
  for (std::size_t k = 0; k < dim; ++k) {
    double d = circle_distance(a[k], b[k]);
    sum += d * d;
  }
  return std::sqrt(sum);
}

TorusPointIndex::TorusPointIndex(const std::vector<std::vector<double>>& points, std::size_t dim)
    : dim_(dim), count_(points.size()) {
  if (dim_ == 0) throw std::invalid_argument("TorusPointIndex: dimension must be positive");
  m_ = static_cast<std::uint32_t>(
      std::max(1.0, std::ceil(std::pow(static_cast<double>(std::max<std::size_t>(count_, 1)),
                                       1.0 / static_cast<double>(dim_)))));
  flat_.resize(count_ * dim_);
  std::vector<std::uint32_t> c(dim_);
  for (std::size_t i = 0; i < count_; ++i) {
    if (points[i].size() != dim_)
      throw std::invalid_argument("TorusPointIndex: point dimension mismatch");
    for (std::size_t k = 0; k < dim_; ++k) {
      flat_[i * dim_ + k] = points[i][k];
      c[k] = axis_cell(points[i][k]);
    }
    std::uint64_t key = cell_key(c);
    auto it = lookup_.find(key);
    if (it == lookup_.end()) {
      it = lookup_.emplace(key, static_cast<std::uint32_t>(cells_.size())).first;
      cells_.push_back(Cell{c, {}});
    }
    cells_[it->second].idxs.push_back(static_cast<std::uint32_t>(i));
  }
  direct_mode_ = cells_.size() <= kDirectModeCellLimit;
}

std::uint32_t TorusPointIndex::axis_cell(double x) const {
  if (x < 0.0) x = 0.0;
  auto c = static_cast<std::uint32_t>(x * m_);
  return c >= m_ ? m_ - 1 : c;
}

std::uint64_t TorusPointIndex::cell_key(const std::vector<std::uint32_t>& c) const {
  std::uint64_t key = 0;
  for (std::size_t k = 0; k < dim_; ++k) key = key * m_ + c[k];
  return key;
}

void TorusPointIndex::scan_cell(const Cell& cell, const double* q, std::size_t exclude,
                                double& best_sq) const {
  for (std::uint32_t idx : cell.idxs) {
    if (idx == exclude) continue;
    double sum = 0.0;
    const double* p = &flat_[idx * dim_];
    for (std::size_t k = 0; k < dim_; ++k) {
      double d = circle_distance(q[k], p[k]);
      sum += d * d;
    }
    if (sum < best_sq) best_sq = sum;
  }
}

double TorusPointIndex::nearest_distance(const std::vector<double>& q, std::size_t exclude) const {
  return nearest_distance(q.data(), exclude);
}

double TorusPointIndex::nearest_distance(const double* q, std::size_t exclude) const {
  double best_sq = std::numeric_limits<double>::infinity();
  const double cell_width = 1.0 / static_cast<double>(m_);

  if (direct_mode_) {
    // Few occupied cells: scan them in order of their best-case distance.
    std::vector<std::pair<double, std::uint32_t>> order;
    order.reserve(cells_.size());
    for (std::uint32_t ci = 0; ci < cells_.size(); ++ci) {
      double bound_sq = 0.0;
      for (std::size_t k = 0; k < dim_; ++k) {
        double lo = cells_[ci].coords[k] * cell_width;
        double d = circle_to_interval(q[k], lo, lo + cell_width);
        bound_sq += d * d;
      }
      order.emplace_back(bound_sq, ci);
    }
    std::sort(order.begin(), order.end());
    for (const auto& [bound_sq, ci] : order) {
      if (bound_sq >= best_sq) break;
      scan_cell(cells_[ci], q, exclude, best_sq);
    }
    return std::sqrt(best_sq);
  }

  // Expanding Chebyshev shells around the query cell. After finishing shell
  // rho, every unvisited point is at least rho * cell_width away.
  std::vector<std::uint32_t> qc(dim_), c(dim_);
  for (std::size_t k = 0; k < dim_; ++k) qc[k] = axis_cell(q[k]);
  std::vector<int> off(dim_);
  for (std::uint32_t rho = 0;; ++rho) {
    if (rho > 0 && 2 * (rho - 1) + 1 >= m_) break;  // all cells already visited

    std::fill(off.begin(), off.end(), -static_cast<int>(rho));
    for (;;) {
      bool on_shell = false;
      for (std::size_t k = 0; k < dim_; ++k)
        if (off[k] == -static_cast<int>(rho) || off[k] == static_cast<int>(rho)) {
          on_shell = true;
          break;
        }
      if (on_shell || rho == 0) {
        for (std::size_t k = 0; k < dim_; ++k) {
          long v = (static_cast<long>(qc[k]) + off[k]) % static_cast<long>(m_);
          if (v < 0) v += m_;
          c[k] = static_cast<std::uint32_t>(v);
        }
        auto it = lookup_.find(cell_key(c));
        if (it != lookup_.end()) scan_cell(cells_[it->second], q, exclude, best_sq);
      }
      std::size_t k = dim_;
      while (k-- > 0) {
        if (off[k] < static_cast<int>(rho)) {
          ++off[k];
          break;
        }
        off[k] = -static_cast<int>(rho);
        if (k == 0) goto shell_done;
      }
    }
  shell_done:
    double reach = static_cast<double>(rho) * cell_width;
    if (best_sq <= reach * reach) break;
  }
  return std::sqrt(best_sq);
}

}  // namespace anosov
