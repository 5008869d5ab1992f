#include "anosov/preimage.hpp"

#include <stdexcept>

#include "anosov/errors.hpp"
#include "anosov/smith.hpp"

namespace anosov {

namespace {

struct SheetContext {
  std::vector<std::vector<Rational>> inverse;   // A^-1 over the rationals
  std::vector<std::vector<Integer>> cosets;     // canonical sheet order
};

SheetContext make_context(const ToralEndomorphism& f) {
  return SheetContext{rational_inverse(f.matrix()), coset_representatives(f.matrix())};
}

RationalPoint pull_back(const SheetContext& ctx, const RationalPoint& x,
                        const std::vector<Integer>& coset) {
  const std::size_t n = x.dimension();
  std::vector<Rational> shifted(n);
  for (std::size_t i = 0; i < n; ++i) shifted[i] = x.coord(i) + coset[i];
  std::vector<Rational> y(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) y[i] += ctx.inverse[i][j] * shifted[j];
  return RationalPoint(std::move(y));
}

}  // namespace

std::vector<std::pair<int, RationalPoint>> preimage_step(const ToralEndomorphism& f,
                                                         const RationalPoint& x) {
  if (x.dimension() != f.dimension())
    throw DimensionMismatch("preimage_step: point dimension does not match the matrix");
  SheetContext ctx = make_context(f);
  std::vector<std::pair<int, RationalPoint>> out;
  out.reserve(ctx.cosets.size());
  for (std::size_t s = 0; s < ctx.cosets.size(); ++s)
    out.emplace_back(static_cast<int>(s) + 1, pull_back(ctx, x, ctx.cosets[s]));
  return out;
}

PreimageTree::PreimageTree(const ToralEndomorphism& f, const RationalPoint& x, int depth,
                           std::uint64_t node_budget)
    : degree_(f.degree()) {
  if (x.dimension() != f.dimension())
    throw DimensionMismatch("preimage tree: point dimension does not match the matrix");
  if (depth < 0) throw std::invalid_argument("preimage tree: depth must be >= 0");

  Integer leaves;
  mpz_pow_ui(leaves.get_mpz_t(), degree_.get_mpz_t(), static_cast<unsigned long>(depth));
  if (leaves > node_budget)
    throw BudgetExceeded("pre-image tree needs " + leaves.get_str() + " leaf nodes; budget is " +
                         std::to_string(node_budget));

  levels_.push_back({x});
  if (depth == 0) return;

  SheetContext ctx = make_context(f);
  const std::size_t k = ctx.cosets.size();
  for (int m = 1; m <= depth; ++m) {
    const auto& prev = levels_.back();
    std::vector<RationalPoint> next;
    next.reserve(prev.size() * k);
    for (const auto& node : prev)
      for (std::size_t s = 0; s < k; ++s) next.push_back(pull_back(ctx, node, ctx.cosets[s]));
    levels_.push_back(std::move(next));
  }
}

std::vector<int> PreimageTree::address_of(int level, std::uint64_t index) const {
  const auto k = degree_.get_ui();
  std::vector<int> digits(static_cast<std::size_t>(level));
  for (int t = level; t-- > 0;) {
    digits[static_cast<std::size_t>(t)] = static_cast<int>(index % k) + 1;
    index /= k;
  }
  return digits;
}

PreimageTree preimage_tree(const ToralEndomorphism& f, const RationalPoint& x, int depth,
                           std::uint64_t node_budget) {
  return PreimageTree(f, x, depth, node_budget);
}

}  // namespace anosov
