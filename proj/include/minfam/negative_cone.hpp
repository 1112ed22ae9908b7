#pragma once

#include <cstdint>
#include <vector>

#include "minfam/lattice.hpp"

namespace minfam {

// Largest total rank with k^2 > 0, where the (-1) and (-2) classes are finite.
inline constexpr std::size_t kFullEnumerationRank = 9;

// All classes with c^2 = -2, k.c = 0. Total rank <= 10; rank 10 throws
// because the set is infinite there.
std::vector<DivisorClass> enumerate_minus_two(const LatticeBasis& basis);
// All classes with c^2 = k.c = -1.
std::vector<DivisorClass> enumerate_exceptional(const LatticeBasis& basis);

// Effective (-2)-classes declared for a surface and the irreducible negative
// curves derived from them.
class CurveConfiguration {
 public:
  CurveConfiguration(LatticeBasis basis, std::vector<DivisorClass> roots);

  const LatticeBasis& basis() const noexcept { return basis_; }
  const std::vector<DivisorClass>& roots() const noexcept { return roots_; }
  // Simple roots followed by irreducible exceptional classes, each sorted.
  const std::vector<DivisorClass>& irreducible_negatives() const noexcept { return negatives_; }
  const std::vector<DivisorClass>& simple_roots() const noexcept { return simple_; }
  const std::vector<DivisorClass>& irreducible_exceptional() const noexcept { return exceptional_; }

 private:
  LatticeBasis basis_;
  std::vector<DivisorClass> roots_;
  std::vector<DivisorClass> simple_;
  std::vector<DivisorClass> exceptional_;
  std::vector<DivisorClass> negatives_;
};

const std::vector<DivisorClass>& irreducible_negative_curves(const CurveConfiguration& config);

// Classes that are nef on every surface in scope: e0 for Type1, l0 and l1
// for Type2.
std::vector<DivisorClass> nef_witnesses(const LatticeBasis& basis);

struct Decomposition {
  DivisorClass moving;
  DivisorClass fixed;
};

Decomposition moving_fixed_decomposition(const DivisorClass& c, const CurveConfiguration& config);
bool is_nef(const DivisorClass& c, const CurveConfiguration& config);
int64_t h0(const DivisorClass& c, const CurveConfiguration& config);

}  // namespace minfam
