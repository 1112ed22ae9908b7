#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "minfam/lattice.hpp"

namespace minfam {

// sigma_* as a permutation of the exceptional generators, plus an optional
// l0 <-> l1 swap for Type2. e0 is always fixed.
class RealInvolution {
 public:
  // image[j] is the 0-based exceptional index that exceptional j maps to.
  // Throws on any violated invariant.
  RealInvolution(LatticeBasis basis, std::vector<std::size_t> image, bool swap_rulings = false);

  static RealInvolution identity(const LatticeBasis& basis);
  // Composes 1-based transpositions (a, b) of exceptional indices.
  static RealInvolution from_transpositions(const LatticeBasis& basis,
                                            const std::vector<std::pair<std::size_t, std::size_t>>& swaps,
                                            bool swap_rulings = false);

  const LatticeBasis& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& image() const noexcept { return image_; }
  bool swap_rulings() const noexcept { return swap_rulings_; }
  bool is_identity() const;

  // Image of generator index i (full index, including e0 / l0, l1).
  std::size_t map_index(std::size_t i) const;

  // Restriction to the generators listed in kept (full source indices, in
  // target order). The kept set must be stable.
  RealInvolution restrict(const LatticeBasis& target, const std::vector<std::size_t>& kept) const;

  friend bool operator==(const RealInvolution&, const RealInvolution&) = default;

 private:
  LatticeBasis basis_;
  std::vector<std::size_t> image_;
  bool swap_rulings_;
};

DivisorClass apply(const RealInvolution& sigma, const DivisorClass& c);
bool is_real(const RealInvolution& sigma, const DivisorClass& c);

// Throws Error naming the first violated invariant.
void validate(const LatticeBasis& basis, const std::vector<std::size_t>& image, bool swap_rulings);

}  // namespace minfam
