#include "minfam/enumeration.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <functional>
#include <mutex>
#include <set>

#include "minfam/error.hpp"

namespace minfam {

namespace {

constexpr std::size_t kPsiRank = 8;

bool within_bound(int64_t x, int64_t r, int64_t kdeg, int64_t selfint) {
  return (9 - r) * x * x + 6 * kdeg * x + kdeg * kdeg + r * selfint <= 0;
}

// Non-increasing beta1..betar >= 0 with sum s and square sum q, beta1 <= cap.
void search_tail(std::size_t r, int64_t b0, int64_t s, int64_t q, std::vector<std::vector<int64_t>>& out) {
  std::vector<int64_t> beta(r, 0);
  std::function<void(std::size_t, int64_t, int64_t, int64_t)> rec = [&](std::size_t j, int64_t s_left,
                                                                      int64_t q_left, int64_t cap) {
    if (s_left == 0 && q_left == 0) {
      std::vector<int64_t> v(r + 1, 0);
      v[0] = b0;
      std::copy(beta.begin(), beta.begin() + static_cast<std::ptrdiff_t>(j), v.begin() + 1);
      out.push_back(std::move(v));
      return;
    }
    if (j == r || s_left <= 0 || q_left <= 0) return;
    const int64_t left = static_cast<int64_t>(r - j);
    if (s_left * s_left > left * q_left) return;
    for (int64_t x = std::min(cap, s_left); x >= 1; --x) {
      if (x * x > q_left) continue;
      // Remaining slots hold at most x each.
      if (s_left > x * left) break;
      beta[j] = x;
      rec(j + 1, s_left - x, q_left - x * x, x);
      beta[j] = 0;
    }
  };
  rec(0, s, q, b0);
}

}  // namespace

int64_t family_search_bound(std::size_t r, int64_t kdeg, int64_t selfint) {
  assert(r <= 8);
  const int64_t rr = static_cast<int64_t>(r);
  const double a = static_cast<double>(9 - rr);
  const double b = 6.0 * static_cast<double>(kdeg);
  const double c = static_cast<double>(kdeg * kdeg + rr * selfint);
  const double disc = b * b - 4 * a * c;
  if (disc < 0) return 0;
  int64_t x = static_cast<int64_t>(std::floor((-b + std::sqrt(disc)) / (2 * a))) + 2;
  while (x > 0 && !within_bound(x, rr, kdeg, selfint)) --x;
  return x;
}

std::vector<DivisorClass> enumerate_family_classes(std::size_t max_r, int64_t kdeg, int64_t selfint) {
  if (max_r > kPsiRank) throw Error(ErrorCode::RankTooLarge, "family enumeration needs r <= 8");
  const LatticeBasis basis(BasisKind::Type1, max_r);
  const int64_t bound = family_search_bound(max_r, kdeg, selfint);
  std::vector<std::vector<int64_t>> rows;
  for (int64_t b0 = 1; b0 <= bound + 1; ++b0) {
    const int64_t s = kdeg + 3 * b0;
    const int64_t q = b0 * b0 - selfint;
    if (s < 0 || q < 0) continue;
    std::vector<std::vector<int64_t>> found;
    search_tail(max_r, b0, s, q, found);
    for (auto& v : found) {
      const int64_t b1 = v.size() > 1 ? v[1] : 0;
      const int64_t b2 = v.size() > 2 ? v[2] : 0;
      if (b0 < b1 + b2) continue;
      if (b0 == bound + 1) throw Error(ErrorCode::RankTooLarge, "family search bound is binding");
      rows.push_back(std::move(v));
    }
  }
  std::sort(rows.begin(), rows.end());
  std::vector<DivisorClass> out;
  for (const auto& v : rows) out.push_back(from_display(basis, v));
  const DivisorClass k = canonical_class(basis);
  for (const auto& f : out) {
    if (intersect(f, f) != selfint || intersect(k, f) != kdeg)
      throw Error(ErrorCode::InvalidAlpha, "enumerated class violates its constraints: " + to_string(f));
  }
  return out;
}

const PsiTable& psi(int alpha) {
  static std::once_flag once;
  static std::vector<PsiTable> tables;
  std::call_once(once, [] {
    const LatticeBasis b(BasisKind::Type1, kPsiRank);
    tables.push_back({0, enumerate_family_classes(kPsiRank, -2, 0)});
    tables.push_back({1, {DivisorClass::generator(b, 0)}});
    tables.push_back({2, enumerate_family_classes(kPsiRank, -2, 2)});
    tables.push_back({4, enumerate_family_classes(kPsiRank, -2, 4)});
  });
  for (const auto& t : tables)
    if (t.alpha == alpha) return t;
  throw Error(ErrorCode::InvalidAlpha, "no psi table for alpha " + std::to_string(alpha));
}

namespace {

std::vector<DivisorClass> instantiate_type1(const DivisorClass& row, const LatticeBasis& basis) {
  std::vector<int64_t> mult;
  for (std::size_t i = 1; i < row.size(); ++i)
    if (row[i] != 0) mult.push_back(row[i]);
  std::vector<DivisorClass> out;
  if (mult.size() > basis.count()) return out;
  mult.resize(basis.count(), 0);
  std::sort(mult.begin(), mult.end());
  do {
    std::vector<int64_t> v(basis.rank());
    v[0] = row[0];
    std::copy(mult.begin(), mult.end(), v.begin() + 1);
    out.push_back(DivisorClass(basis, std::move(v)));
  } while (std::next_permutation(mult.begin(), mult.end()));
  return out;
}

DivisorClass swap_eps(const DivisorClass& c, std::size_t j) {
  std::vector<int64_t> v(c.coeffs().begin(), c.coeffs().end());
  std::swap(v[2], v[1 + j]);
  return DivisorClass(c.basis(), std::move(v));
}

}  // namespace

std::vector<DivisorClass> instantiate_row(const DivisorClass& row, const LatticeBasis& basis) {
  if (row.basis().kind() != BasisKind::Type1)
    throw Error(ErrorCode::IncompatibleBases, "psi rows are type1 classes");
  if (basis.kind() == BasisKind::Type1) return instantiate_type1(row, basis);

  std::set<DivisorClass> out;
  if (basis.count() == 0) {
    const LatticeBasis up(BasisKind::Type2, 1);
    for (const auto& c : instantiate_row(row, up))
      if (c[2] == 0) out.insert(DivisorClass(basis, {c[0], c[1]}));
    return {out.begin(), out.end()};
  }
  const LatticeBasis t1(BasisKind::Type1, basis.count() + 1);
  const auto base = instantiate_type1(row, t1);
  for (std::size_t j = 1; j <= basis.count(); ++j) {
    for (const auto& c : base) out.insert(swap_eps(convert_basis(c), j));
  }
  return {out.begin(), out.end()};
}

std::vector<DivisorClass> instantiate(const PsiTable& table, const LatticeBasis& basis) {
  std::set<DivisorClass> out;
  for (const auto& row : table.rows)
    for (auto& c : instantiate_row(row, basis)) out.insert(std::move(c));
  return {out.begin(), out.end()};
}

}  // namespace minfam
