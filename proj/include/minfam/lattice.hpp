#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace minfam {

enum class BasisKind { Type1, Type2 };

// Type1: e0, e1..er with e0^2 = 1, ej^2 = -1.
// Type2: l0, l1, eps1..epsr with l0.l1 = 1, l0^2 = l1^2 = 0, epsj^2 = -1.
class LatticeBasis {
 public:
  LatticeBasis(BasisKind kind, std::size_t count);

  BasisKind kind() const noexcept { return kind_; }
  // Number of exceptional generators r.
  std::size_t count() const noexcept { return count_; }
  std::size_t rank() const noexcept { return offset() + count_; }
  // Index of the first exceptional generator (1 for Type1, 2 for Type2).
  std::size_t offset() const noexcept { return kind_ == BasisKind::Type1 ? 1 : 2; }

  int64_t gram(std::size_t i, std::size_t j) const;
  std::string generator_name(std::size_t i) const;

  friend bool operator==(const LatticeBasis&, const LatticeBasis&) = default;

 private:
  BasisKind kind_;
  std::size_t count_;
};

int64_t gram_determinant(const LatticeBasis& basis);

class DivisorClass {
 public:
  // coeffs are signed generator coefficients: {2,-1,-1} is 2e0-e1-e2.
  DivisorClass(LatticeBasis basis, std::vector<int64_t> coeffs);

  static DivisorClass zero(const LatticeBasis& basis);
  static DivisorClass generator(const LatticeBasis& basis, std::size_t index);

  const LatticeBasis& basis() const noexcept { return basis_; }
  std::span<const int64_t> coeffs() const noexcept { return coeffs_; }
  int64_t operator[](std::size_t i) const { return coeffs_.at(i); }
  std::size_t size() const noexcept { return coeffs_.size(); }
  bool is_zero() const;

  DivisorClass operator+(const DivisorClass& other) const;
  DivisorClass operator-(const DivisorClass& other) const;
  DivisorClass operator-() const;

  friend bool operator==(const DivisorClass& a, const DivisorClass& b) {
    return a.basis_ == b.basis_ && a.coeffs_ == b.coeffs_;
  }
  // Orders by basis kind, count, then coefficients lexicographically.
  friend std::strong_ordering operator<=>(const DivisorClass& a, const DivisorClass& b);

 private:
  LatticeBasis basis_;
  std::vector<int64_t> coeffs_;
};

DivisorClass operator*(int64_t n, const DivisorClass& c);

int64_t intersect(const DivisorClass& a, const DivisorClass& b);
DivisorClass canonical_class(const LatticeBasis& basis);
DivisorClass add(const DivisorClass& a, const DivisorClass& b);
DivisorClass scale(int64_t n, const DivisorClass& a);
int64_t arithmetic_genus(const DivisorClass& c);

// Type1 with r+1 exceptional generators <-> Type2 with r. Needs rank >= 3.
DivisorClass convert_basis(const DivisorClass& c);

// "19e0-6e1-6e2", "2l0+3l1-eps1", "0".
std::string to_string(const DivisorClass& c);

// Display convention: Type1 [b0, b1..] = b0 e0 - sum bj ej;
// Type2 [g0, g1, b1..] = g0 l0 + g1 l1 - sum bj epsj.
std::vector<int64_t> to_display(const DivisorClass& c);
DivisorClass from_display(const LatticeBasis& basis, const std::vector<int64_t>& display);

}  // namespace minfam
