#pragma once

// Randomized property checks shared by the unit tests and the acceptance binary.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "minfam/adjoint.hpp"
#include "minfam/enumeration.hpp"
#include "minfam/error.hpp"
#include "minfam/lattice.hpp"
#include "minfam/negative_cone.hpp"
#include "minfam/real_structure.hpp"

namespace testing {

inline constexpr std::size_t kPropertyCases = 500;
inline constexpr uint64_t kPropertySeed = 0x5eed'2024'0915ULL;

struct PropertyResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0 && cases >= kPropertyCases; }
  void check(bool cond, const std::function<std::string()>& what) {
    ++cases;
    if (cond) return;
    if (failures++ == 0) first_failure = what();
  }
};

using Rng = std::mt19937_64;

inline int64_t uniform(Rng& rng, int64_t lo, int64_t hi) {
  return std::uniform_int_distribution<int64_t>(lo, hi)(rng);
}

inline minfam::DivisorClass random_class(Rng& rng, const minfam::LatticeBasis& b, int64_t bound) {
  std::vector<int64_t> v(b.rank());
  for (auto& x : v) x = uniform(rng, -bound, bound);
  return minfam::DivisorClass(b, std::move(v));
}

// Random disjoint 1-based transpositions of exceptional indices.
inline std::vector<std::pair<std::size_t, std::size_t>> random_transpositions(Rng& rng, std::size_t r) {
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i + 1;
  std::shuffle(idx.begin(), idx.end(), rng);
  std::size_t pairs = r < 2 ? 0 : static_cast<std::size_t>(uniform(rng, 0, static_cast<int64_t>(r / 2)));
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t p = 0; p < pairs; ++p) out.emplace_back(std::min(idx[2 * p], idx[2 * p + 1]), std::max(idx[2 * p], idx[2 * p + 1]));
  return out;
}

// Normal-form Type1 h: alpha0 >= 3 alpha1 + 1 and non-increasing positive
// multiplicities, with sigma pairing only equal multiplicities.
struct NormalForm {
  minfam::DivisorClass h;
  minfam::RealInvolution sigma;
};

inline NormalForm random_normal_form(Rng& rng, minfam::BasisKind kind, std::size_t r) {
  using namespace minfam;
  LatticeBasis b(kind, r);
  std::vector<int64_t> alpha(r);
  for (auto& a : alpha) a = uniform(rng, 1, 5);
  std::sort(alpha.rbegin(), alpha.rend());
  int64_t top = r ? alpha[0] : 1;
  std::vector<int64_t> display;
  if (kind == BasisKind::Type1) {
    display.push_back(3 * top + uniform(rng, 1, 6));
  } else {
    display.push_back(2 * top + uniform(rng, 1, 6));
    display.push_back(2 * top + uniform(rng, 1, 6));
  }
  display.insert(display.end(), alpha.begin(), alpha.end());
  // Pair neighbours with equal multiplicity at random.
  std::vector<std::pair<std::size_t, std::size_t>> swaps;
  for (std::size_t j = 0; j + 1 < r; ++j) {
    if (alpha[j] == alpha[j + 1] && uniform(rng, 0, 1)) {
      swaps.emplace_back(j + 1, j + 2);
      ++j;
    }
  }
  bool swap_rulings = false;
  if (kind == BasisKind::Type2 && uniform(rng, 0, 1)) {
    display[1] = display[0];
    swap_rulings = true;
  }
  return {from_display(b, display), RealInvolution::from_transpositions(b, swaps, swap_rulings)};
}

inline PropertyResult check_conversion(Rng& rng) {
  using namespace minfam;
  PropertyResult res{"basis conversion is an involutive isometry"};
  while (res.cases < kPropertyCases) {
    bool type1 = uniform(rng, 0, 1);
    std::size_t r = type1 ? uniform(rng, 2, 8) : uniform(rng, 1, 7);
    LatticeBasis b(type1 ? BasisKind::Type1 : BasisKind::Type2, r);
    auto x = random_class(rng, b, 20);
    auto y = random_class(rng, b, 20);
    auto cx = convert_basis(x);
    auto cy = convert_basis(y);
    res.check(intersect(cx, cy) == intersect(x, y) && convert_basis(cx) == x &&
                  convert_basis(canonical_class(b)) == canonical_class(cx.basis()),
              [&] { return to_string(x) + " / " + to_string(y); });
  }
  return res;
}

inline PropertyResult check_involution(Rng& rng) {
  using namespace minfam;
  PropertyResult res{"sigma is an involutive isometry"};
  while (res.cases < kPropertyCases) {
    bool type1 = uniform(rng, 0, 1);
    std::size_t r = uniform(rng, 0, 9);
    LatticeBasis b(type1 ? BasisKind::Type1 : BasisKind::Type2, r);
    auto sigma = RealInvolution::from_transpositions(b, random_transpositions(rng, r), !type1 && uniform(rng, 0, 1));
    auto x = random_class(rng, b, 20);
    auto y = random_class(rng, b, 20);
    auto sx = apply(sigma, x);
    res.check(intersect(sx, apply(sigma, y)) == intersect(x, y) && apply(sigma, sx) == x &&
                  is_real(sigma, x + sx) && apply(sigma, canonical_class(b)) == canonical_class(b),
              [&] { return to_string(x); });
  }
  return res;
}

inline PropertyResult check_genus(Rng& rng) {
  using namespace minfam;
  PropertyResult res{"arithmetic genus is an integer"};
  while (res.cases < kPropertyCases) {
    bool type1 = uniform(rng, 0, 1);
    LatticeBasis b(type1 ? BasisKind::Type1 : BasisKind::Type2, uniform(rng, 0, 12));
    auto c = random_class(rng, b, 30);
    int64_t s = intersect(c, c) + intersect(canonical_class(b), c);
    res.check(s % 2 == 0 && 2 * (arithmetic_genus(c) - 1) == s, [&] { return to_string(c); });
  }
  return res;
}

// Random Type1/Type2 chains with at least one step.
inline std::vector<minfam::AdjointChain> random_chains(Rng& rng, std::size_t count) {
  using namespace minfam;
  std::vector<AdjointChain> out;
  while (out.size() < count) {
    bool type1 = uniform(rng, 0, 1);
    std::size_t r = type1 ? uniform(rng, 1, 8) : uniform(rng, 0, 7);
    auto nf = random_normal_form(rng, type1 ? BasisKind::Type1 : BasisKind::Type2, r);
    SurfacePair pair(nf.h, nf.sigma, CurveConfiguration(nf.h.basis(), {}));
    auto chain = build_chain(pair);
    if (chain.length() > 0) out.push_back(std::move(chain));
  }
  return out;
}

inline const minfam::DivisorClass& pick(Rng& rng, const std::vector<minfam::DivisorClass>& v) {
  return v[static_cast<std::size_t>(uniform(rng, 0, static_cast<int64_t>(v.size()) - 1))];
}

// h . pullback(f') = h' . f' + 2 when k' . f' = -2 and the step has no fixed part.
inline PropertyResult check_pull(Rng& rng) {
  using namespace minfam;
  PropertyResult res{"pullback identity h.f = h'.f' + 2"};
  while (res.cases < kPropertyCases) {
    for (const auto& chain : random_chains(rng, 8)) {
      for (std::size_t i = 0; i < chain.length(); ++i) {
        const auto& step = chain.steps[i];
        if (!step.fixed.is_zero()) continue;
        const auto& next = chain.pairs[i + 1];
        auto inst = instantiate(psi(0), next.basis());
        if (inst.empty()) continue;
        for (int n = 0; n < 4; ++n) {
          const auto& f = pick(rng, inst);
          if (intersect(next.k(), f) != -2) continue;
          auto g = pullback(step, f);
          res.check(intersect(chain.pairs[i].h(), g) == intersect(next.h(), f) + 2,
                    [&] { return to_string(chain.pairs[i].h()) + " with " + to_string(f); });
        }
      }
    }
  }
  return res;
}

// h' . pushforward(f) = h . f + k . f on family classes.
inline PropertyResult check_push(Rng& rng) {
  using namespace minfam;
  PropertyResult res{"pushforward identity h'.f' = (h + k).f"};
  while (res.cases < kPropertyCases) {
    for (const auto& chain : random_chains(rng, 8)) {
      for (std::size_t i = 0; i < chain.length(); ++i) {
        const auto& step = chain.steps[i];
        if (!step.fixed.is_zero()) continue;
        const auto& here = chain.pairs[i];
        auto inst = instantiate(psi(0), here.basis());
        if (inst.empty()) continue;
        for (int n = 0; n < 4; ++n) {
          const auto& f = pick(rng, inst);
          auto g = pushforward(step, f);
          res.check(intersect(chain.pairs[i + 1].h(), g) == intersect(here.h(), f) + intersect(here.k(), f),
                    [&] { return to_string(here.h()) + " with " + to_string(f); });
        }
      }
    }
  }
  return res;
}

inline PropertyResult check_coord(Rng& rng) {
  using namespace minfam;
  PropertyResult res{"coordinate oracle matches iterated steps"};
  while (res.cases < kPropertyCases) {
    bool type1 = uniform(rng, 0, 1);
    std::size_t r = type1 ? uniform(rng, 1, 8) : uniform(rng, 0, 7);
    auto nf = random_normal_form(rng, type1 ? BasisKind::Type1 : BasisKind::Type2, r);
    SurfacePair pair(nf.h, nf.sigma, CurveConfiguration(nf.h.basis(), {}));
    auto chain = build_chain(pair);
    for (std::size_t i = 0; i <= chain.length(); ++i) {
      // The closed form only covers levels with positive leading coefficients.
      DivisorClass expect = nf.h;
      try {
        expect = coord_oracle(nf.h, static_cast<int64_t>(i));
      } catch (const Error&) {
        break;
      }
      auto got = embed_to_level(chain, chain.pairs[i].h(), i, 0);
      res.check(got == expect, [&] {
        return to_string(nf.h) + " level " + std::to_string(i) + ": " + to_string(got) + " vs " + to_string(expect);
      });
    }
  }
  return res;
}

// Random surface with a sigma-stable set of declared roots; nullopt if the
// draw is inconsistent.
inline std::optional<minfam::CurveConfiguration> random_configuration(Rng& rng, const minfam::RealInvolution& sigma) {
  using namespace minfam;
  const auto& b = sigma.basis();
  std::vector<DivisorClass> roots;
  if (b.rank() <= kFullEnumerationRank) {
    auto all = enumerate_minus_two(b);
    int n = all.empty() ? 0 : static_cast<int>(uniform(rng, 0, 2));
    for (int i = 0; i < n; ++i) {
      auto c = pick(rng, all);
      // Keep the roots on the effective side of e0 / l0 + l1.
      if (c[0] + (b.kind() == BasisKind::Type2 ? c[1] : 0) < 0) c = -c;
      roots.push_back(c);
      auto s = apply(sigma, c);
      if (s != c) roots.push_back(s);
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  try {
    return CurveConfiguration(b, roots);
  } catch (const Error&) {
    return std::nullopt;
  }
}

inline PropertyResult check_decomposition(Rng& rng) {
  using namespace minfam;
  PropertyResult res{"moving + fixed reassembles with a nef moving part"};
  while (res.cases < kPropertyCases) {
    bool type1 = uniform(rng, 0, 1);
    std::size_t r = type1 ? uniform(rng, 1, 8) : uniform(rng, 0, 7);
    LatticeBasis b(type1 ? BasisKind::Type1 : BasisKind::Type2, r);
    auto config = random_configuration(rng, RealInvolution::identity(b));
    if (!config) continue;
    const auto& neg = irreducible_negative_curves(*config);
    // A witness multiple plus a few irreducible negative curves.
    DivisorClass c = DivisorClass::zero(b);
    for (const auto& w : nef_witnesses(b)) c = c + scale(uniform(rng, 1, 6), w);
    if (!neg.empty()) {
      int n = static_cast<int>(uniform(rng, 0, 4));
      for (int i = 0; i < n; ++i) c = c + scale(uniform(rng, 1, 3), pick(rng, neg));
    }
    Decomposition d{c, c};
    try {
      d = moving_fixed_decomposition(c, *config);
    } catch (const Error& e) {
      res.check(false, [&] { return to_string(c) + ": " + e.what() + " roots " + std::to_string(config->roots().size()); });
      continue;
    }
    bool nef = is_nef(d.moving, *config);
    for (const auto& e : neg) nef = nef && intersect(d.moving, e) >= 0;
    res.check(d.moving + d.fixed == c && nef && h0(c, *config) == h0(d.moving, *config),
              [&] { return to_string(c) + " -> " + to_string(d.moving) + " + " + to_string(d.fixed); });
  }
  return res;
}

inline std::vector<PropertyResult> run_properties(uint64_t seed = kPropertySeed) {
  Rng rng(seed);
  std::vector<PropertyResult> out;
  out.push_back(check_conversion(rng));
  out.push_back(check_involution(rng));
  out.push_back(check_pull(rng));
  out.push_back(check_push(rng));
  out.push_back(check_coord(rng));
  out.push_back(check_genus(rng));
  out.push_back(check_decomposition(rng));
  return out;
}

}  // namespace testing
