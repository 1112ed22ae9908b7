#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "minfam/lattice.hpp"
#include "minfam/negative_cone.hpp"
#include "minfam/real_structure.hpp"

namespace minfam {

class SurfacePair {
 public:
  // Validates sigma(h) = h, h^2 > 0, h nef and sigma-stable roots.
  SurfacePair(DivisorClass h, RealInvolution sigma, CurveConfiguration config);

  // No validation; intermediate chain levels may have h^2 = 0.
  static SurfacePair unchecked(DivisorClass h, RealInvolution sigma, CurveConfiguration config);

  const LatticeBasis& basis() const noexcept { return h_.basis(); }
  const DivisorClass& h() const noexcept { return h_; }
  DivisorClass k() const { return canonical_class(basis()); }
  const RealInvolution& sigma() const noexcept { return sigma_; }
  const CurveConfiguration& config() const noexcept { return config_; }

  SurfacePair with_sigma(RealInvolution sigma) const;

 private:
  struct NoCheck {};
  SurfacePair(DivisorClass h, RealInvolution sigma, CurveConfiguration config, NoCheck);

  DivisorClass h_;
  RealInvolution sigma_;
  CurveConfiguration config_;
};

// Irreducible exceptional classes orthogonal to h.
std::vector<DivisorClass> exceptional_orthogonal(const SurfacePair& pair);

enum class ChainKind { Adjoint, PseudoAdjoint };

struct ChainStep {
  std::vector<DivisorClass> contracted;
  LatticeBasis source;
  LatticeBasis target;
  // embedding[t] = source generator index of target generator t.
  std::vector<std::size_t> embedding;
  DivisorClass fixed;
};

struct AdjointChain {
  ChainKind kind;
  std::vector<SurfacePair> pairs;
  std::vector<ChainStep> steps;

  std::size_t length() const noexcept { return steps.size(); }
  const SurfacePair& terminal() const { return pairs.back(); }
};

std::optional<std::pair<SurfacePair, ChainStep>> pseudo_adjoint_step(const SurfacePair& pair,
                                                                     ChainKind kind = ChainKind::PseudoAdjoint);
AdjointChain build_chain(const SurfacePair& pair, ChainKind kind = ChainKind::PseudoAdjoint);

DivisorClass pushforward(const ChainStep& step, const DivisorClass& f);
DivisorClass pullback(const ChainStep& step, const DivisorClass& f);

// Level `from` class carried down to level `to` <= from by repeated pullback.
DivisorClass embed_to_level(const AdjointChain& chain, const DivisorClass& f, std::size_t from, std::size_t to);
// Level `from` class pushed forward to level `to` >= from.
DivisorClass push_to_level(const AdjointChain& chain, const DivisorClass& f, std::size_t from, std::size_t to);

// Closed-form i-th chain class for a normal-form h0 without roots or fixed parts.
DivisorClass coord_oracle(const DivisorClass& h0, int64_t i);

struct Fraction {
  int64_t num;
  int64_t den;
  friend bool operator==(const Fraction&, const Fraction&) = default;
};

struct MinimalPairCase {
  int number;                              // 1..7
  std::optional<Fraction> alpha;           // h = -alpha K for cases 1..5
  int64_t canonical_square;                // K^2
  DivisorClass canonical;                  // K = k - sum(E)
  std::vector<DivisorClass> exceptional;   // E: irreducible (-1)-classes orthogonal to h
  std::optional<DivisorClass> fiber;       // cases 6 and 7
  std::optional<std::pair<DivisorClass, DivisorClass>> rulings;  // case 4
  bool rulings_swapped = false;
};

MinimalPairCase classify_minimal_pair(const SurfacePair& pair);

}  // namespace minfam
