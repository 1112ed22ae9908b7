#pragma once

#include <cstdint>
#include <vector>

#include "minfam/lattice.hpp"

namespace minfam {

// Rows are Type1 classes over e0..e8 with non-increasing multiplicities.
struct PsiTable {
  int alpha;
  std::vector<DivisorClass> rows;
};

// Largest b0 that can satisfy the constraints for r exceptional points:
// (9-r) b0^2 + 6 kdeg b0 + kdeg^2 + r selfint <= 0.
int64_t family_search_bound(std::size_t r, int64_t kdeg, int64_t selfint);

// Classes b0 e0 - b1 e1 - ... - br er (r <= max_r <= 8) with b0 >= 1,
// b1 >= ... >= br >= 0, k.f = kdeg, f^2 = selfint and b0 >= b1 + b2.
// One representative per permutation orbit, ordered by b0 then lexicographically.
// Returned in the Type1 basis with max_r exceptional generators.
std::vector<DivisorClass> enumerate_family_classes(std::size_t max_r, int64_t kdeg, int64_t selfint);

// alpha in {0, 1, 2, 4}; cached.
const PsiTable& psi(int alpha);

// Every distinct permutation instance of a row's multiplicities that fits in
// the basis. Type2 bases go through the Type1 basis of one more generator,
// once for each choice of special eps.
std::vector<DivisorClass> instantiate_row(const DivisorClass& row, const LatticeBasis& basis);
std::vector<DivisorClass> instantiate(const PsiTable& table, const LatticeBasis& basis);

}  // namespace minfam
