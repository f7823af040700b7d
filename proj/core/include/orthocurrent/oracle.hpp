#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "orthocurrent/liealg.hpp"

namespace orthocurrent {

/// Streams every k-dimensional subspace of F_q^n exactly once, as RREF
/// matrices of residues (k rows of n entries, row-major). Subspaces are
/// grouped by pivot pattern; within a pattern the free entries run through
/// an odometer. Memory use is constant.
class SubspaceEnumerator {
 public:
  using Visitor = std::function<void(std::span<const std::uint8_t>)>;

  /// Throws UnsupportedField unless q is 2, 3 or 5; ShapeMismatch unless
  /// n <= 6 and k <= n.
  SubspaceEnumerator(unsigned q, std::size_t n, std::size_t k);

  unsigned q() const noexcept { return q_; }
  std::size_t ambient_dim() const noexcept { return n_; }
  std::size_t dim() const noexcept { return k_; }

  std::size_t pattern_count() const noexcept { return patterns_.size(); }
  const std::vector<std::size_t>& pattern(std::size_t i) const { return patterns_.at(i); }

  void for_each_in_pattern(std::size_t pattern, const Visitor& visit) const;
  void for_each(const Visitor& visit) const;

 private:
  unsigned q_;
  std::size_t n_;
  std::size_t k_;
  std::vector<std::vector<std::size_t>> patterns_;
};

/// Materializes each subspace through `visit` as a canonical Subspace over F_q.
void enumerate_subspaces(unsigned q, std::size_t n, std::size_t k, const std::function<void(const Subspace&)>& visit);
std::uint64_t count_subspaces(unsigned q, std::size_t n, std::size_t k);

/// Every ideal of L (dimension 0..dim L), sorted canonically. L must be
/// defined over F_2, F_3 or F_5 with dim L <= 6. Pivot patterns are split
/// across `threads` workers (0 = hardware concurrency); the result does not
/// depend on the thread count.
std::vector<Subspace> enumerate_ideals(const LieAlgebra& l, unsigned threads = 0);

}  // namespace orthocurrent
