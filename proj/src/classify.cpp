#include "minfam/classify.hpp"

#include <algorithm>
#include <set>

#include "minfam/enumeration.hpp"
#include "minfam/error.hpp"

namespace minfam {

std::string to_string(TheoremCase c) {
  switch (c) {
    case TheoremCase::PulledBackMinus2: return "i";
    case TheoremCase::Type1Exceptional: return "ii";
    case TheoremCase::Type2Ruling: return "iii";
  }
  return "?";
}

std::string to_string(IncompleteGeometry g) {
  return g == IncompleteGeometry::TangentLines ? "tangent-lines" : "bitangent-planes";
}

FamilyAttributes attributes(const DivisorClass& f, const SurfacePair& pair) {
  FamilyAttributes a{};
  a.degree = intersect(pair.h(), f);
  a.canonical_degree = intersect(pair.k(), f);
  const int64_t self = intersect(f, f);
  a.complete = !(a.canonical_degree == -2 && (self == 2 || self == 4));
  a.dimension = a.complete ? h0(f, pair.config()) - 1 : 1;
  if (!a.complete)
    a.incomplete_geometry = self == 2 ? IncompleteGeometry::TangentLines : IncompleteGeometry::BitangentPlanes;
  return a;
}

Candidates candidate_set(const AdjointChain& chain, const MinimalPairCase& terminal) {
  Candidates out;
  for (int alpha : {0, 1, 2, 4}) {
    const auto& rows = psi(alpha).rows;
    out.rows.insert(out.rows.end(), rows.begin(), rows.end());
  }
  const LatticeBasis b8(BasisKind::Type1, 8);
  out.rows.push_back(from_display(b8, {2, 1, 1, 0, 0, 0, 0, 0, 0}));

  const SurfacePair& t = chain.terminal();
  const DivisorClass& h = t.h();
  auto add_multiple = [&](const DivisorClass& c, int64_t den) {
    if (den == 0) return;
    std::vector<int64_t> v(c.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      if ((-2 * c[i]) % den != 0) return;
      v[i] = -2 * c[i] / den;
    }
    DivisorClass m(c.basis(), std::move(v));
    if (!m.is_zero()) out.terminal_classes.push_back(m);
  };
  add_multiple(h, intersect(h, t.k()));
  const DivisorClass d = scale(2, h) + terminal.canonical;
  add_multiple(d, intersect(d, terminal.canonical));
  std::sort(out.terminal_classes.begin(), out.terminal_classes.end());
  out.terminal_classes.erase(std::unique(out.terminal_classes.begin(), out.terminal_classes.end()),
                             out.terminal_classes.end());
  return out;
}

namespace {

// Candidates at level i passing the reality and S* filters, sorted by degree.
std::vector<std::pair<int64_t, DivisorClass>> level_instances(const AdjointChain& chain, std::size_t i,
                                                              const Candidates& candidates) {
  const SurfacePair& pair = chain.pairs.at(i);
  std::set<DivisorClass> inst;
  for (const auto& row : candidates.rows)
    for (auto& c : instantiate_row(row, pair.basis())) inst.insert(std::move(c));
  for (const auto& c : candidates.terminal_classes) inst.insert(embed_to_level(chain, c, chain.length(), i));

  const auto orth = exceptional_orthogonal(pair);
  std::vector<std::pair<int64_t, DivisorClass>> out;
  for (const auto& f : inst) {
    if (f.is_zero() || !is_real(pair.sigma(), f)) continue;
    if (std::any_of(orth.begin(), orth.end(), [&](const DivisorClass& e) { return intersect(f, e) != 0; }))
      continue;
    out.emplace_back(intersect(pair.h(), f), f);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool moving_family(const DivisorClass& f, const CurveConfiguration& config) {
  try {
    if (!moving_fixed_decomposition(f, config).fixed.is_zero()) return false;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::DecompositionDiverged) throw;
    return false;
  }
  return h0(f, config) >= 2;
}

TheoremCase theorem_case(std::size_t returned, const AdjointChain& chain, const MinimalPairCase& terminal,
                         bool all_minus_two) {
  if (returned == chain.length() && all_minus_two) return TheoremCase::PulledBackMinus2;
  if (terminal.number == 4) return TheoremCase::Type2Ruling;
  if (terminal.number == 3 || terminal.number == 5) return TheoremCase::Type1Exceptional;
  return TheoremCase::PulledBackMinus2;
}

}  // namespace

std::vector<DivisorClass> families_at_level(const AdjointChain& chain, std::size_t i, const Candidates& candidates) {
  const auto inst = level_instances(chain, i, candidates);
  const CurveConfiguration& config = chain.pairs.at(i).config();
  std::vector<DivisorClass> out;
  for (std::size_t a = 0; a < inst.size();) {
    std::size_t b = a;
    while (b < inst.size() && inst[b].first == inst[a].first) ++b;
    for (std::size_t j = a; j < b; ++j)
      if (moving_family(inst[j].second, config)) out.push_back(inst[j].second);
    if (!out.empty()) break;
    a = b;
  }
  return out;
}

Classification classify(const SurfacePair& pair, Mode mode) {
  const SurfacePair working = mode == Mode::Complex ? pair.with_sigma(RealInvolution::identity(pair.basis())) : pair;
  AdjointChain chain = build_chain(working);
  MinimalPairCase terminal = classify_minimal_pair(chain.terminal());
  const Candidates candidates = candidate_set(chain, terminal);

  const std::size_t len = chain.length();
  std::size_t returned = 0;
  std::vector<DivisorClass> gamma;
  bool all_minus_two = false;
  for (std::size_t i = len + 1; i-- > 0;) {
    gamma = families_at_level(chain, i, candidates);
    const DivisorClass k = chain.pairs[i].k();
    all_minus_two = !gamma.empty() &&
                    std::all_of(gamma.begin(), gamma.end(), [&](const DivisorClass& f) { return intersect(k, f) == -2; });
    returned = i;
    if (all_minus_two) break;
  }
  if (gamma.empty()) {
    if (mode == Mode::Real && terminal.number == 1)
      throw Error(ErrorCode::NotRRational, "out of scope: not R-rational terminal pair");
    throw Error(ErrorCode::NoCoveringFamily, "no covering rational family");
  }

  std::vector<DivisorClass> level0;
  for (const auto& f : gamma) level0.push_back(embed_to_level(chain, f, returned, 0));
  std::sort(level0.begin(), level0.end());
  if (returned > 0) {
    auto direct = families_at_level(chain, 0, candidates);
    if (direct != level0)
      throw Error(ErrorCode::LevelMismatch, "families returned at level " + std::to_string(returned) +
                                                " differ from the level-0 minimum");
  }

  Classification out{mode, std::move(chain), std::move(terminal), returned, {}, false};
  const TheoremCase tc = theorem_case(returned, out.chain, out.terminal, all_minus_two);
  for (const auto& f : level0) {
    FamilyAttributes a = attributes(f, out.chain.pairs[0]);
    out.families.push_back(FamilyReport{f, a.degree, a.canonical_degree, a.dimension, a.complete,
                                        is_real(pair.sigma(), f), tc, a.incomplete_geometry, returned});
  }
  const bool dim3 = std::any_of(out.families.begin(), out.families.end(),
                                [](const FamilyReport& r) { return r.dimension == 3; });
  out.sphere_detected = dim3 && out.terminal.number == 4 && out.terminal.rulings_swapped;
  return out;
}

std::vector<FamilyReport> minimal_families(const SurfacePair& pair) { return classify(pair, Mode::Real).families; }

std::vector<FamilyReport> complex_minimal_families(const SurfacePair& pair) {
  return classify(pair, Mode::Complex).families;
}

ConicReport classify_conics(const Classification& cls) {
  ConicReport out;
  out.minimal_degree = cls.families.front().degree;
  const std::size_t len = cls.chain.length();
  auto count_or_infinite = [&](const std::vector<int64_t>& dims) -> std::optional<int64_t> {
    if (std::all_of(dims.begin(), dims.end(), [](int64_t d) { return d == 1; }))
      return static_cast<int64_t>(dims.size());
    return std::nullopt;
  };

  if (out.minimal_degree == 2) {
    std::vector<int64_t> dims;
    for (const auto& f : cls.families) {
      out.classes.push_back(f.cls);
      dims.push_back(f.dimension);
    }
    if (len == 0) {
      out.kind = ConicKind::MinimalPair;
      out.subkind = ConicSubkind::MinimalFamilies;
      out.lambda = count_or_infinite(dims);
    } else if (len == 1 && cls.terminal.number == 6) {
      out.kind = ConicKind::Pullback;
      out.lambda = 1;
    } else {
      out.classes.clear();
    }
    return out;
  }

  if (out.minimal_degree == 1 && len == 0) {
    const SurfacePair& pair = cls.chain.pairs[0];
    const int64_t n = h0(pair.h(), pair.config()) - 1;
    const int64_t deg = intersect(pair.h(), pair.h());
    if (deg <= n - 1 && n - 1 <= 3) {
      const Candidates candidates = candidate_set(cls.chain, cls.terminal);
      std::vector<int64_t> dims;
      for (const auto& [d, f] : level_instances(cls.chain, 0, candidates)) {
        if (d != 2 || arithmetic_genus(f) != 0 || !moving_family(f, pair.config())) continue;
        out.classes.push_back(f);
        dims.push_back(h0(f, pair.config()) - 1);
      }
      if (!out.classes.empty()) {
        out.kind = ConicKind::MinimalPair;
        out.subkind = ConicSubkind::GeometricallyRuled;
        out.lambda = count_or_infinite(dims);
      }
    }
  }
  return out;
}

ConicReport classify_conics(const SurfacePair& pair) { return classify_conics(classify(pair, Mode::Real)); }

}  // namespace minfam
