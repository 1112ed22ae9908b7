#include "minfam/negative_cone.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

#include "checked.hpp"
#include "minfam/error.hpp"

namespace minfam {

namespace {

// Type1 classes b0 e0 - sum bj ej with b0^2 - sum bj^2 = selfint and
// -3 b0 + sum bj = kdeg, any signs. Needs r <= 8.
std::vector<DivisorClass> search_type1(const LatticeBasis& basis, int64_t selfint, int64_t kdeg) {
  const int64_t r = static_cast<int64_t>(basis.count());
  std::vector<DivisorClass> out;
  if (r == 0) {
    for (int64_t b0 = -4; b0 <= 4; ++b0)
      if (b0 * b0 == selfint && -3 * b0 == kdeg) out.push_back(DivisorClass(basis, {b0}));
    return out;
  }
  // Cauchy-Schwarz: (kdeg + 3 b0)^2 <= r (b0^2 - selfint).
  const double a = 9.0 - static_cast<double>(r);
  const double b = 6.0 * static_cast<double>(kdeg);
  const double c = static_cast<double>(kdeg * kdeg + r * selfint);
  const double disc = b * b - 4 * a * c;
  if (disc < 0) return out;
  const int64_t lo = static_cast<int64_t>(std::floor((-b - std::sqrt(disc)) / (2 * a))) - 1;
  const int64_t hi = static_cast<int64_t>(std::ceil((-b + std::sqrt(disc)) / (2 * a))) + 1;

  std::vector<int64_t> beta(static_cast<std::size_t>(r) + 1);
  std::function<void(std::size_t, int64_t, int64_t)> rec = [&](std::size_t j, int64_t s, int64_t q) {
    const int64_t left = r - static_cast<int64_t>(j) + 1;
    if (left == 0) {
      if (s == 0 && q == 0) {
        std::vector<int64_t> v(beta.size());
        v[0] = beta[0];
        for (std::size_t i = 1; i < beta.size(); ++i) v[i] = -beta[i];
        out.push_back(DivisorClass(basis, std::move(v)));
      }
      return;
    }
    if (q < 0 || s * s > left * q || ((s - q) % 2) != 0) return;
    const int64_t m = static_cast<int64_t>(std::sqrt(static_cast<double>(q))) + 1;
    for (int64_t x = -m; x <= m; ++x) {
      if (x * x > q) continue;
      beta[j] = x;
      rec(j + 1, s - x, q - x * x);
    }
  };
  for (int64_t b0 = lo; b0 <= hi; ++b0) {
    const int64_t s = kdeg + 3 * b0;
    const int64_t q = b0 * b0 - selfint;
    if (q < 0 || s * s > r * q) continue;
    beta[0] = b0;
    rec(1, s, q);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<DivisorClass> search(const LatticeBasis& basis, int64_t selfint, int64_t kdeg) {
  if (basis.rank() > kFullEnumerationRank)
    throw Error(ErrorCode::RankTooLarge, "rank too large for full enumeration");
  if (basis.kind() == BasisKind::Type1) return search_type1(basis, selfint, kdeg);
  if (basis.rank() >= 3) {
    std::vector<DivisorClass> out;
    for (const auto& c : search_type1(LatticeBasis(BasisKind::Type1, basis.count() + 1), selfint, kdeg))
      out.push_back(convert_basis(c));
    std::sort(out.begin(), out.end());
    return out;
  }
  // Type2 rank 2: a l0 + b l1 with 2ab = selfint, -2(a+b) = kdeg.
  std::vector<DivisorClass> out;
  for (int64_t a = -4; a <= 4; ++a)
    for (int64_t b = -4; b <= 4; ++b)
      if (2 * a * b == selfint && -2 * (a + b) == kdeg) out.push_back(DivisorClass(basis, {a, b}));
  return out;
}

// Type1 shapes used above the full-enumeration rank.
std::vector<DivisorClass> type1_shapes(const LatticeBasis& basis, bool roots) {
  const std::size_t r = basis.count();
  std::vector<DivisorClass> out;
  auto make = [&](int64_t b0, const std::vector<std::size_t>& idx, int64_t first) {
    std::vector<int64_t> v(basis.rank(), 0);
    v[0] = b0;
    for (std::size_t t = 0; t < idx.size(); ++t) v[idx[t]] = (t == 0 && first != 0) ? first : -1;
    out.push_back(DivisorClass(basis, std::move(v)));
  };
  std::function<void(std::size_t, std::size_t, std::vector<std::size_t>&, int64_t)> subsets =
      [&](std::size_t start, std::size_t left, std::vector<std::size_t>& cur, int64_t b0) {
        if (left == 0) {
          make(b0, cur, 0);
          return;
        }
        for (std::size_t i = start; i <= r; ++i) {
          cur.push_back(i);
          subsets(i + 1, left - 1, cur, b0);
          cur.pop_back();
        }
      };
  std::vector<std::size_t> cur;
  if (roots) {
    for (std::size_t i = 1; i <= r; ++i)
      for (std::size_t j = 1; j <= r; ++j)
        if (i != j) make(0, {i, j}, 1);
    subsets(1, 3, cur, 1);
    subsets(1, 6, cur, 2);
  } else {
    for (std::size_t i = 1; i <= r; ++i) make(0, {i}, 1);
    subsets(1, 2, cur, 1);
    subsets(1, 5, cur, 2);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<DivisorClass> shapes(const LatticeBasis& basis, bool roots) {
  if (basis.kind() == BasisKind::Type1) return type1_shapes(basis, roots);
  std::vector<DivisorClass> out;
  for (const auto& c : type1_shapes(LatticeBasis(BasisKind::Type1, basis.count() + 1), roots))
    out.push_back(convert_basis(c));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<DivisorClass> enumerate_minus_two(const LatticeBasis& basis) { return search(basis, -2, 0); }

std::vector<DivisorClass> enumerate_exceptional(const LatticeBasis& basis) { return search(basis, -1, -1); }

CurveConfiguration::CurveConfiguration(LatticeBasis basis, std::vector<DivisorClass> roots)
    : basis_(basis) {
  const DivisorClass k = canonical_class(basis_);
  std::set<DivisorClass> declared;
  for (const auto& c : roots) {
    if (!(c.basis() == basis_)) throw Error(ErrorCode::IncompatibleBases, "root in a different basis");
    if (intersect(c, c) != -2 || intersect(k, c) != 0)
      throw Error(ErrorCode::InvalidRoot, "not a root: " + to_string(c));
    declared.insert(c);
  }
  roots_.assign(declared.begin(), declared.end());

  // Positive closure under sums that are again roots.
  std::set<DivisorClass> positive = declared;
  constexpr std::size_t kClosureCap = 4096;
  bool grown = true;
  while (grown) {
    grown = false;
    std::vector<DivisorClass> cur(positive.begin(), positive.end());
    for (std::size_t i = 0; i < cur.size(); ++i) {
      for (std::size_t j = i + 1; j < cur.size(); ++j) {
        DivisorClass s = cur[i] + cur[j];
        if (intersect(s, s) == -2 && intersect(k, s) == 0 && positive.insert(s).second) grown = true;
      }
    }
    if (positive.size() > kClosureCap)
      throw Error(ErrorCode::InconsistentRoots, "declared roots generate an infinite root system");
  }
  for (const auto& p : positive) {
    if (positive.count(-p))
      throw Error(ErrorCode::InconsistentRoots, "declared roots contain a class and its negative: " + to_string(p));
  }
  std::set<DivisorClass> sums;
  std::vector<DivisorClass> cur(positive.begin(), positive.end());
  for (std::size_t i = 0; i < cur.size(); ++i)
    for (std::size_t j = i + 1; j < cur.size(); ++j) sums.insert(cur[i] + cur[j]);
  for (const auto& p : cur)
    if (!sums.count(p)) simple_.push_back(p);
  // e0 (or l0, l1) must stay nef; a root such as l0-l1 turns the quadric into a cone.
  for (const auto& rho : simple_)
    for (const auto& w : nef_witnesses(basis_))
      if (intersect(rho, w) < 0)
        throw Error(ErrorCode::InconsistentRoots, "root " + to_string(rho) + " meets " + to_string(w) + " negatively");
  for (std::size_t i = 0; i < simple_.size(); ++i)
    for (std::size_t j = i + 1; j < simple_.size(); ++j)
      if (intersect(simple_[i], simple_[j]) < 0)
        throw Error(ErrorCode::InconsistentRoots, "declared roots not closed: " + to_string(simple_[i]) + " and " +
                                                      to_string(simple_[j]) + " meet negatively");

  std::vector<DivisorClass> candidates =
      basis_.rank() <= kFullEnumerationRank ? enumerate_exceptional(basis_) : shapes(basis_, false);
  for (const auto& e : candidates) {
    bool ok = std::all_of(simple_.begin(), simple_.end(), [&](const DivisorClass& rho) { return intersect(e, rho) >= 0; });
    if (ok) exceptional_.push_back(e);
  }
  negatives_ = simple_;
  negatives_.insert(negatives_.end(), exceptional_.begin(), exceptional_.end());
  std::sort(negatives_.begin(), negatives_.end());
}

const std::vector<DivisorClass>& irreducible_negative_curves(const CurveConfiguration& config) {
  return config.irreducible_negatives();
}

std::vector<DivisorClass> nef_witnesses(const LatticeBasis& basis) {
  if (basis.kind() == BasisKind::Type1) return {DivisorClass::generator(basis, 0)};
  return {DivisorClass::generator(basis, 0), DivisorClass::generator(basis, 1)};
}

Decomposition moving_fixed_decomposition(const DivisorClass& c, const CurveConfiguration& config) {
  if (!(c.basis() == config.basis())) throw Error(ErrorCode::IncompatibleBases, "incompatible bases");
  const auto witnesses = nef_witnesses(c.basis());
  const auto& negatives = config.irreducible_negatives();
  DivisorClass moving = c;
  DivisorClass fixed = DivisorClass::zero(c.basis());
  const std::size_t guard = 64 * c.basis().rank();
  for (std::size_t iter = 0; iter <= guard; ++iter) {
    for (const auto& w : witnesses)
      if (intersect(moving, w) < 0) throw Error(ErrorCode::DecompositionDiverged, "decomposition diverged");
    auto it = std::find_if(negatives.begin(), negatives.end(),
                           [&](const DivisorClass& n) { return intersect(moving, n) < 0; });
    if (it == negatives.end()) return {moving, fixed};
    moving = moving - *it;
    fixed = fixed + *it;
  }
  throw Error(ErrorCode::DecompositionDiverged, "decomposition diverged");
}

bool is_nef(const DivisorClass& c, const CurveConfiguration& config) {
  if (!(c.basis() == config.basis())) throw Error(ErrorCode::IncompatibleBases, "incompatible bases");
  if (intersect(c, c) < 0) return false;
  for (const auto& w : nef_witnesses(c.basis()))
    if (intersect(c, w) < 0) return false;
  for (const auto& n : config.irreducible_negatives())
    if (intersect(c, n) < 0) return false;
  return true;
}

int64_t h0(const DivisorClass& c, const CurveConfiguration& config) {
  if (c.is_zero()) return 1;
  const auto witnesses = nef_witnesses(c.basis());
  for (const auto& w : witnesses)
    if (intersect(c, w) < 0) return 0;
  Decomposition d{c, c};
  try {
    d = moving_fixed_decomposition(c, config);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::DecompositionDiverged) throw;
    return 0;
  }
  const DivisorClass& m = d.moving;
  if (m.is_zero()) return 1;
  if (intersect(m, m) < 0) return 0;
  for (const auto& w : witnesses)
    if (intersect(m, w) < 0) return 0;
  const int64_t twice = detail::checked_sub(intersect(m, m), intersect(canonical_class(m.basis()), m));
  return std::max<int64_t>(0, twice / 2 + 1);
}

}  // namespace minfam
