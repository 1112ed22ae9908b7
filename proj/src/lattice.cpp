#include "minfam/lattice.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>

#include "checked.hpp"
#include "minfam/error.hpp"

namespace minfam {

using detail::checked_add;
using detail::checked_mul;
using detail::checked_sub;

LatticeBasis::LatticeBasis(BasisKind kind, std::size_t count) : kind_(kind), count_(count) {
  if (rank() > 64) throw Error(ErrorCode::RankTooLarge, "lattice rank above 64");
  int64_t det = gram_determinant(*this);
  if (det != 1 && det != -1) throw Error(ErrorCode::NotAnIsometry, "gram matrix not unimodular");
}

int64_t LatticeBasis::gram(std::size_t i, std::size_t j) const {
  if (kind_ == BasisKind::Type1) {
    if (i != j) return 0;
    return i == 0 ? 1 : -1;
  }
  if (i < 2 && j < 2) return i == j ? 0 : 1;
  if (i != j) return 0;
  return -1;
}

std::string LatticeBasis::generator_name(std::size_t i) const {
  if (kind_ == BasisKind::Type1) return "e" + std::to_string(i);
  if (i < 2) return "l" + std::to_string(i);
  return "eps" + std::to_string(i - 1);
}

// Fraction-free Gaussian elimination.
int64_t gram_determinant(const LatticeBasis& basis) {
  const std::size_t n = basis.rank();
  std::vector<std::vector<int64_t>> m(n, std::vector<int64_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = basis.gram(i, j);
  int64_t sign = 1;
  int64_t prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        int64_t v = checked_sub(checked_mul(m[i][j], m[k][k]), checked_mul(m[i][k], m[k][j]));
        m[i][j] = v / prev;
      }
    }
    prev = m[k][k];
  }
  return n == 0 ? 1 : sign * m[n - 1][n - 1];
}

DivisorClass::DivisorClass(LatticeBasis basis, std::vector<int64_t> coeffs)
    : basis_(basis), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != basis_.rank())
    throw Error(ErrorCode::IncompatibleBases, "coefficient vector length does not match basis rank");
}

DivisorClass DivisorClass::zero(const LatticeBasis& basis) {
  return DivisorClass(basis, std::vector<int64_t>(basis.rank(), 0));
}

DivisorClass DivisorClass::generator(const LatticeBasis& basis, std::size_t index) {
  std::vector<int64_t> v(basis.rank(), 0);
  v.at(index) = 1;
  return DivisorClass(basis, std::move(v));
}

bool DivisorClass::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](int64_t x) { return x == 0; });
}

static void require_same(const DivisorClass& a, const DivisorClass& b) {
  if (!(a.basis() == b.basis())) throw Error(ErrorCode::IncompatibleBases, "incompatible bases");
}

DivisorClass DivisorClass::operator+(const DivisorClass& other) const {
  require_same(*this, other);
  std::vector<int64_t> v(coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = checked_add(coeffs_[i], other.coeffs_[i]);
  return DivisorClass(basis_, std::move(v));
}

DivisorClass DivisorClass::operator-(const DivisorClass& other) const {
  require_same(*this, other);
  std::vector<int64_t> v(coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = checked_sub(coeffs_[i], other.coeffs_[i]);
  return DivisorClass(basis_, std::move(v));
}

DivisorClass DivisorClass::operator-() const { return scale(-1, *this); }

std::strong_ordering operator<=>(const DivisorClass& a, const DivisorClass& b) {
  if (auto c = a.basis_.kind() <=> b.basis_.kind(); c != 0) return c;
  if (auto c = a.basis_.count() <=> b.basis_.count(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.coeffs_.begin(), a.coeffs_.end(),
                                                b.coeffs_.begin(), b.coeffs_.end());
}

DivisorClass operator*(int64_t n, const DivisorClass& c) { return scale(n, c); }

int64_t intersect(const DivisorClass& a, const DivisorClass& b) {
  require_same(a, b);
  auto x = a.coeffs();
  auto y = b.coeffs();
  int64_t sum = 0;
  std::size_t start;
  if (a.basis().kind() == BasisKind::Type1) {
    sum = checked_mul(x[0], y[0]);
    start = 1;
  } else {
    sum = checked_add(checked_mul(x[0], y[1]), checked_mul(x[1], y[0]));
    start = 2;
  }
  for (std::size_t i = start; i < x.size(); ++i) sum = checked_sub(sum, checked_mul(x[i], y[i]));
  return sum;
}

DivisorClass canonical_class(const LatticeBasis& basis) {
  std::vector<int64_t> v(basis.rank(), 1);
  if (basis.kind() == BasisKind::Type1) {
    v[0] = -3;
  } else {
    v[0] = -2;
    v[1] = -2;
  }
  return DivisorClass(basis, std::move(v));
}

DivisorClass add(const DivisorClass& a, const DivisorClass& b) { return a + b; }

DivisorClass scale(int64_t n, const DivisorClass& a) {
  std::vector<int64_t> v(a.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = checked_mul(n, a[i]);
  return DivisorClass(a.basis(), std::move(v));
}

int64_t arithmetic_genus(const DivisorClass& c) {
  int64_t twice = checked_add(intersect(c, c), intersect(canonical_class(c.basis()), c));
  assert(twice % 2 == 0);
  return twice / 2 + 1;
}

DivisorClass convert_basis(const DivisorClass& c) {
  const LatticeBasis& b = c.basis();
  if (b.rank() < 3) throw Error(ErrorCode::ConversionUndefined, "conversion undefined below rank 3");
  auto x = c.coeffs();
  if (b.kind() == BasisKind::Type2) {
    // l0 = e0-e2, l1 = e0-e1, eps1 = e0-e1-e2, epsj = e(j+1).
    LatticeBasis t(BasisKind::Type1, b.count() + 1);
    std::vector<int64_t> v(t.rank(), 0);
    int64_t a = x[0], bb = x[1], c1 = x[2];
    v[0] = checked_add(checked_add(a, bb), c1);
    v[1] = -checked_add(bb, c1);
    v[2] = -checked_add(a, c1);
    for (std::size_t j = 3; j < x.size(); ++j) v[j] = x[j];
    return DivisorClass(t, std::move(v));
  }
  // e0 = l0+l1-eps1, e1 = l0-eps1, e2 = l1-eps1, ej = eps(j-1).
  LatticeBasis t(BasisKind::Type2, b.count() - 1);
  std::vector<int64_t> v(t.rank(), 0);
  v[0] = checked_add(x[0], x[1]);
  v[1] = checked_add(x[0], x[2]);
  v[2] = -checked_add(checked_add(x[0], x[1]), x[2]);
  for (std::size_t j = 3; j < x.size(); ++j) v[j] = x[j];
  return DivisorClass(t, std::move(v));
}

std::string to_string(const DivisorClass& c) {
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    int64_t a = c[i];
    if (a == 0) continue;
    if (a < 0) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    uint64_t mag = a < 0 ? 0 - static_cast<uint64_t>(a) : static_cast<uint64_t>(a);
    if (mag != 1) out += std::to_string(mag);
    out += c.basis().generator_name(i);
  }
  return out.empty() ? "0" : out;
}

std::vector<int64_t> to_display(const DivisorClass& c) {
  std::vector<int64_t> v(c.coeffs().begin(), c.coeffs().end());
  for (std::size_t i = c.basis().offset(); i < v.size(); ++i) v[i] = -v[i];
  return v;
}

DivisorClass from_display(const LatticeBasis& basis, const std::vector<int64_t>& display) {
  if (display.size() != basis.rank())
    throw Error(ErrorCode::IncompatibleBases, "coefficient vector length does not match basis rank");
  std::vector<int64_t> v = display;
  for (std::size_t i = basis.offset(); i < v.size(); ++i) v[i] = detail::checked_sub(0, v[i]);
  return DivisorClass(basis, std::move(v));
}

}  // namespace minfam
