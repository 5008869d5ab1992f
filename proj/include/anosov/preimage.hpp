#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "anosov/endomorphism.hpp"
#include "anosov/rational_point.hpp"

namespace anosov {

inline constexpr std::uint64_t kDefaultNodeBudget = 1u << 20;

/// All pre-images of a point under one application of the map: exactly
/// degree(f) points y with A y = x (mod 1), one per coset sheet, paired
/// with their 1-based sheet index in the canonical coset order.
std::vector<std::pair<int, RationalPoint>> preimage_step(const ToralEndomorphism& f,
                                                         const RationalPoint& x);

/// Sheet-addressed pre-image tree of depth n. Level m holds the k^m points
/// of f^-m(x) in lexicographic sheet-address order: the children of the
/// node at index j sit at indices j*k + s, and the child over sheet s
/// (0-based) extends the address with digit s+1.
class PreimageTree {
 public:
  PreimageTree(const ToralEndomorphism& f, const RationalPoint& x, int depth,
               std::uint64_t node_budget = kDefaultNodeBudget);

  const RationalPoint& base() const { return levels_[0][0]; }
  int depth() const { return static_cast<int>(levels_.size()) - 1; }
  const Integer& degree() const { return degree_; }

  const std::vector<RationalPoint>& level(int m) const { return levels_[static_cast<std::size_t>(m)]; }

  /// 1-based address digits (i_1, ..., i_m) of node `index` at level m.
  std::vector<int> address_of(int level, std::uint64_t index) const;

 private:
  Integer degree_;
  std::vector<std::vector<RationalPoint>> levels_;
};

/// Convenience wrapper matching the tree's construction contract.
PreimageTree preimage_tree(const ToralEndomorphism& f, const RationalPoint& x, int depth,
                           std::uint64_t node_budget = kDefaultNodeBudget);

}  // namespace anosov
