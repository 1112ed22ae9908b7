#include "minfam/adjoint.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "checked.hpp"
#include "minfam/enumeration.hpp"
#include "minfam/error.hpp"

namespace minfam {

SurfacePair::SurfacePair(DivisorClass h, RealInvolution sigma, CurveConfiguration config, NoCheck)
    : h_(std::move(h)), sigma_(std::move(sigma)), config_(std::move(config)) {
  if (!(sigma_.basis() == h_.basis()) || !(config_.basis() == h_.basis()))
    throw Error(ErrorCode::IncompatibleBases, "incompatible bases");
}

SurfacePair::SurfacePair(DivisorClass h, RealInvolution sigma, CurveConfiguration config)
    : SurfacePair(std::move(h), std::move(sigma), std::move(config), NoCheck{}) {
  if (!is_real(sigma_, h_)) throw Error(ErrorCode::HNotInvariant, "h not σ-invariant");
  if (intersect(h_, h_) <= 0) throw Error(ErrorCode::HNotPositive, "h^2 must be positive");
  if (!is_nef(h_, config_)) throw Error(ErrorCode::HNotNef, "h is not nef");
  const auto& roots = config_.roots();
  for (const auto& r : roots) {
    if (!std::binary_search(roots.begin(), roots.end(), apply(sigma_, r)))
      throw Error(ErrorCode::RootsNotSigmaClosed, "roots not closed under σ: " + to_string(r));
  }
}

SurfacePair SurfacePair::unchecked(DivisorClass h, RealInvolution sigma, CurveConfiguration config) {
  return SurfacePair(std::move(h), std::move(sigma), std::move(config), NoCheck{});
}

SurfacePair SurfacePair::with_sigma(RealInvolution sigma) const {
  return SurfacePair(h_, std::move(sigma), config_, NoCheck{});
}

std::vector<DivisorClass> exceptional_orthogonal(const SurfacePair& pair) {
  std::vector<DivisorClass> out;
  for (const auto& e : pair.config().irreducible_exceptional())
    if (intersect(pair.h(), e) == 0) out.push_back(e);
  return out;
}

static DivisorClass drop(const LatticeBasis& target, const std::vector<std::size_t>& embedding,
                         const DivisorClass& f) {
  std::vector<int64_t> v(target.rank());
  for (std::size_t t = 0; t < v.size(); ++t) v[t] = f[embedding[t]];
  return DivisorClass(target, std::move(v));
}

std::optional<std::pair<SurfacePair, ChainStep>> pseudo_adjoint_step(const SurfacePair& pair, ChainKind kind) {
  const LatticeBasis& basis = pair.basis();
  const DivisorClass c = pair.h() + pair.k();
  if (h0(c, pair.config()) <= 1) return std::nullopt;

  std::vector<DivisorClass> orth;
  if (kind == ChainKind::PseudoAdjoint) orth = exceptional_orthogonal(pair);
  const auto& irreducible = pair.config().irreducible_exceptional();

  std::vector<std::size_t> contracted;
  for (std::size_t t = basis.offset(); t < basis.rank(); ++t) {
    DivisorClass g = DivisorClass::generator(basis, t);
    if (!std::binary_search(irreducible.begin(), irreducible.end(), g)) continue;
    if (intersect(c, g) != 0) continue;
    if (std::any_of(orth.begin(), orth.end(), [&](const DivisorClass& e) { return intersect(g, e) != 0; })) continue;
    contracted.push_back(t);
  }
  for (std::size_t t : contracted) {
    if (!std::binary_search(contracted.begin(), contracted.end(), pair.sigma().map_index(t)))
      throw Error(ErrorCode::RealStructureViolated, "real structure violated");
  }

  std::vector<std::size_t> kept;
  for (std::size_t t = 0; t < basis.rank(); ++t)
    if (!std::binary_search(contracted.begin(), contracted.end(), t)) kept.push_back(t);
  const LatticeBasis target(basis.kind(), basis.count() - contracted.size());

  std::vector<DivisorClass> roots;
  for (const auto& r : pair.config().roots()) {
    if (std::all_of(contracted.begin(), contracted.end(), [&](std::size_t t) { return r[t] == 0; }))
      roots.push_back(drop(target, kept, r));
  }
  CurveConfiguration config(target, std::move(roots));
  RealInvolution sigma = pair.sigma().restrict(target, kept);

  const DivisorClass pushed = drop(target, kept, c);
  DivisorClass next = pushed;
  DivisorClass fixed = DivisorClass::zero(target);
  if (kind == ChainKind::PseudoAdjoint) {
    Decomposition d = moving_fixed_decomposition(pushed, config);
    next = d.moving;
    fixed = d.fixed;
  }

  ChainStep step{{}, basis, target, kept, fixed};
  for (std::size_t t : contracted) step.contracted.push_back(DivisorClass::generator(basis, t));
  return std::make_pair(SurfacePair::unchecked(next, sigma, config), std::move(step));
}

AdjointChain build_chain(const SurfacePair& pair, ChainKind kind) {
  constexpr std::size_t kMaxSteps = 64;
  AdjointChain chain{kind, {pair}, {}};
  while (auto next = pseudo_adjoint_step(chain.pairs.back(), kind)) {
    if (chain.steps.size() == kMaxSteps) throw Error(ErrorCode::ChainDiverged, "chain diverged");
    chain.pairs.push_back(std::move(next->first));
    chain.steps.push_back(std::move(next->second));
  }
  return chain;
}

DivisorClass pushforward(const ChainStep& step, const DivisorClass& f) {
  if (!(f.basis() == step.source)) throw Error(ErrorCode::IncompatibleBases, "incompatible bases");
  return drop(step.target, step.embedding, f);
}

DivisorClass pullback(const ChainStep& step, const DivisorClass& f) {
  if (!(f.basis() == step.target)) throw Error(ErrorCode::IncompatibleBases, "incompatible bases");
  std::vector<int64_t> v(step.source.rank(), 0);
  for (std::size_t t = 0; t < f.size(); ++t) v[step.embedding[t]] = f[t];
  return DivisorClass(step.source, std::move(v));
}

DivisorClass embed_to_level(const AdjointChain& chain, const DivisorClass& f, std::size_t from, std::size_t to) {
  DivisorClass out = f;
  for (std::size_t i = from; i > to; --i) out = pullback(chain.steps[i - 1], out);
  return out;
}

DivisorClass push_to_level(const AdjointChain& chain, const DivisorClass& f, std::size_t from, std::size_t to) {
  DivisorClass out = f;
  for (std::size_t i = from; i < to; ++i) out = pushforward(chain.steps[i], out);
  return out;
}

DivisorClass coord_oracle(const DivisorClass& h0, int64_t i) {
  const LatticeBasis& b = h0.basis();
  if (i < 0) throw Error(ErrorCode::OracleOutOfRange, "negative chain index");
  std::vector<int64_t> v(h0.coeffs().begin(), h0.coeffs().end());
  if (b.kind() == BasisKind::Type1) {
    v[0] = detail::checked_sub(v[0], detail::checked_mul(3, i));
    if (v[0] <= 0) throw Error(ErrorCode::OracleOutOfRange, "chain index beyond the chain");
  } else {
    for (std::size_t j = 0; j < 2; ++j) {
      v[j] = detail::checked_sub(v[j], detail::checked_mul(2, i));
      if (v[j] <= 0) throw Error(ErrorCode::OracleOutOfRange, "chain index beyond the chain");
    }
  }
  // Exceptional coefficients are -alpha_j; they shrink towards zero.
  for (std::size_t j = b.offset(); j < v.size(); ++j) v[j] = -std::max<int64_t>(-v[j] - i, 0);
  return DivisorClass(b, std::move(v));
}

namespace {

std::optional<DivisorClass> exact_multiple(int64_t num, int64_t den, const DivisorClass& c) {
  if (den == 0) return std::nullopt;
  std::vector<int64_t> v(c.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    int64_t p = detail::checked_mul(num, c[i]);
    if (p % den != 0) return std::nullopt;
    v[i] = p / den;
  }
  return DivisorClass(c.basis(), std::move(v));
}

bool fraction_is(const Fraction& t, int64_t num, int64_t den) { return t.num * den == num * t.den; }

}  // namespace

MinimalPairCase classify_minimal_pair(const SurfacePair& pair) {
  const DivisorClass& h = pair.h();
  const DivisorClass k = pair.k();
  if (h.is_zero()) throw Error(ErrorCode::NotMinimalRuledPair, "not a minimal ruled pair");
  std::vector<DivisorClass> orth = exceptional_orthogonal(pair);

  MinimalPairCase out{0, std::nullopt, 0, k, orth, std::nullopt, std::nullopt, false};
  if (intersect(h, h) == 0) {
    out.number = 6;
    out.canonical_square = intersect(k, k);
    out.fiber = exact_multiple(-2, intersect(h, k), h);
    return out;
  }
  for (std::size_t i = 0; i < orth.size(); ++i)
    for (std::size_t j = i + 1; j < orth.size(); ++j)
      if (intersect(orth[i], orth[j]) != 0)
        throw Error(ErrorCode::NotMinimalRuledPair, "not a minimal ruled pair: exceptional classes orthogonal to h meet");
  DivisorClass K = k;
  for (const auto& e : orth) K = K - e;
  out.canonical = K;
  const int64_t K2 = intersect(K, K);
  out.canonical_square = K2;

  if (K2 > 0) {
    const int64_t num = -intersect(h, K);
    const int64_t den = K2;
    if (num > 0 && scale(den, h) == scale(-num, K)) {
      const int64_t g = std::gcd(num, den);
      const Fraction t{num / g, den / g};
      out.alpha = t;
      if (K2 <= 2 && fraction_is(t, 1, 1)) out.number = 1;
      else if (K2 >= 3 && K2 <= 6 && fraction_is(t, 1, 1)) out.number = 2;
      else if (K2 == 7 && fraction_is(t, 1, 1)) out.number = 3;
      else if (K2 == 8 && (fraction_is(t, 1, 2) || fraction_is(t, 1, 1))) out.number = 4;
      else if (K2 == 9 && (fraction_is(t, 1, 3) || fraction_is(t, 2, 3) || fraction_is(t, 1, 1))) out.number = 5;
    }
  }
  if (out.number == 0) {
    const DivisorClass d = scale(2, h) + K;
    if (intersect(d, d) == 0 && !d.is_zero()) {
      out.number = 7;
      out.alpha.reset();
      out.fiber = exact_multiple(-2, intersect(d, K), d);
    }
  }
  if (out.number == 0) throw Error(ErrorCode::NotMinimalRuledPair, "not a minimal ruled pair");

  if (out.number == 4) {
    if (auto half = exact_multiple(-1, 2, K)) {
      for (const auto& a : instantiate(psi(0), pair.basis())) {
        const DivisorClass b = *half - a;
        if (!(a < b)) continue;
        if (intersect(b, b) != 0 || intersect(a, b) != 1 || intersect(k, b) != -2) continue;
        bool orthogonal = std::all_of(orth.begin(), orth.end(), [&](const DivisorClass& e) {
          return intersect(a, e) == 0 && intersect(b, e) == 0;
        });
        if (!orthogonal) continue;
        out.rulings = std::make_pair(a, b);
        out.rulings_swapped = apply(pair.sigma(), a) == b;
        break;
      }
    }
  }
  return out;
}

}  // namespace minfam
