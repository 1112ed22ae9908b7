#include "minfam/real_structure.hpp"

#include <string>

#include "minfam/error.hpp"

namespace minfam {

static std::size_t raw_map(const LatticeBasis& basis, const std::vector<std::size_t>& image,
                           bool swap, std::size_t i) {
  const std::size_t off = basis.offset();
  if (i < off) {
    if (basis.kind() == BasisKind::Type2 && swap) return 1 - i;
    return i;
  }
  return image[i - off] + off;
}

void validate(const LatticeBasis& basis, const std::vector<std::size_t>& image, bool swap_rulings) {
  if (image.size() != basis.count())
    throw Error(ErrorCode::NotAPermutation, "generator map has wrong length");
  if (swap_rulings && basis.kind() != BasisKind::Type2)
    throw Error(ErrorCode::NotAPermutation, "swap_rulings needs a type2 basis");
  std::vector<bool> hit(image.size(), false);
  for (std::size_t j : image) {
    if (j >= image.size() || hit[j]) throw Error(ErrorCode::NotAPermutation, "generator map is not a permutation");
    hit[j] = true;
  }
  for (std::size_t j = 0; j < image.size(); ++j) {
    if (image[image[j]] != j) throw Error(ErrorCode::NotAnInvolution, "not an involution");
  }
  // Isometry on the Gram matrix.
  const std::size_t n = basis.rank();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (basis.gram(raw_map(basis, image, swap_rulings, i), raw_map(basis, image, swap_rulings, j)) !=
          basis.gram(i, j))
        throw Error(ErrorCode::NotAnIsometry, "not an isometry");
    }
  }
  DivisorClass k = canonical_class(basis);
  std::vector<int64_t> v(n, 0);
  for (std::size_t i = 0; i < n; ++i) v[raw_map(basis, image, swap_rulings, i)] = k[i];
  if (DivisorClass(basis, v) != k) throw Error(ErrorCode::CanonicalNotFixed, "canonical class not fixed");
}

RealInvolution::RealInvolution(LatticeBasis basis, std::vector<std::size_t> image, bool swap_rulings)
    : basis_(basis), image_(std::move(image)), swap_rulings_(swap_rulings) {
  validate(basis_, image_, swap_rulings_);
}

RealInvolution RealInvolution::identity(const LatticeBasis& basis) {
  std::vector<std::size_t> image(basis.count());
  for (std::size_t j = 0; j < image.size(); ++j) image[j] = j;
  return RealInvolution(basis, std::move(image), false);
}

RealInvolution RealInvolution::from_transpositions(
    const LatticeBasis& basis, const std::vector<std::pair<std::size_t, std::size_t>>& swaps,
    bool swap_rulings) {
  std::vector<std::size_t> image(basis.count());
  for (std::size_t j = 0; j < image.size(); ++j) image[j] = j;
  for (auto [a, b] : swaps) {
    if (a < 1 || b < 1 || a > image.size() || b > image.size())
      throw Error(ErrorCode::NotAPermutation,
                  "transposition (" + std::to_string(a) + "," + std::to_string(b) + ") out of range");
    // sigma = t_1 o t_2 o ... : apply the last transposition first.
    for (auto& x : image) {
      if (x == a - 1) {
        x = b - 1;
      } else if (x == b - 1) {
        x = a - 1;
      }
    }
  }
  return RealInvolution(basis, std::move(image), swap_rulings);
}

bool RealInvolution::is_identity() const {
  if (swap_rulings_) return false;
  for (std::size_t j = 0; j < image_.size(); ++j)
    if (image_[j] != j) return false;
  return true;
}

std::size_t RealInvolution::map_index(std::size_t i) const {
  return raw_map(basis_, image_, swap_rulings_, i);
}

RealInvolution RealInvolution::restrict(const LatticeBasis& target, const std::vector<std::size_t>& kept) const {
  if (target.kind() != basis_.kind() || kept.size() != target.rank())
    throw Error(ErrorCode::IncompatibleBases, "restriction does not match target basis");
  std::vector<std::size_t> where(basis_.rank(), SIZE_MAX);
  for (std::size_t t = 0; t < kept.size(); ++t) where[kept[t]] = t;
  std::vector<std::size_t> image(target.count());
  const std::size_t off = target.offset();
  for (std::size_t t = off; t < kept.size(); ++t) {
    std::size_t dest = where[map_index(kept[t])];
    if (dest == SIZE_MAX) throw Error(ErrorCode::RealStructureViolated, "real structure violated");
    image[t - off] = dest - off;
  }
  return RealInvolution(target, std::move(image), swap_rulings_);
}

DivisorClass apply(const RealInvolution& sigma, const DivisorClass& c) {
  if (!(sigma.basis() == c.basis())) throw Error(ErrorCode::IncompatibleBases, "incompatible bases");
  std::vector<int64_t> v(c.size(), 0);
  for (std::size_t i = 0; i < c.size(); ++i) v[sigma.map_index(i)] = c[i];
  return DivisorClass(c.basis(), std::move(v));
}

bool is_real(const RealInvolution& sigma, const DivisorClass& c) { return apply(sigma, c) == c; }

}  // namespace minfam
