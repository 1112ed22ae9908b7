#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "minfam/adjoint.hpp"
#include "minfam/lattice.hpp"

namespace minfam {

enum class TheoremCase { PulledBackMinus2, Type1Exceptional, Type2Ruling };
enum class IncompleteGeometry { TangentLines, BitangentPlanes };
enum class Mode { Real, Complex };

std::string to_string(TheoremCase c);        // "i", "ii", "iii"
std::string to_string(IncompleteGeometry g);  // "tangent-lines", "bitangent-planes"

struct FamilyAttributes {
  int64_t degree;
  int64_t canonical_degree;
  int64_t dimension;
  bool complete;
  std::optional<IncompleteGeometry> incomplete_geometry;
};

FamilyAttributes attributes(const DivisorClass& f, const SurfacePair& pair);

struct FamilyReport {
  DivisorClass cls;  // level-0 basis
  int64_t degree;
  int64_t canonical_degree;
  int64_t dimension;
  bool complete;
  bool real;
  TheoremCase theorem_case;
  std::optional<IncompleteGeometry> incomplete_geometry;
  std::size_t level;  // chain level the family was found at
};

// Psi-hat rows (Type1 over e0..e8) plus extra classes living in the terminal lattice.
struct Candidates {
  std::vector<DivisorClass> rows;
  std::vector<DivisorClass> terminal_classes;
};

Candidates candidate_set(const AdjointChain& chain, const MinimalPairCase& terminal);

// Real (sigma-fixed at level i), nonzero, zero fixed part, h0 >= 2 and
// orthogonal to the h-orthogonal exceptional classes; minimal h_i-degree.
std::vector<DivisorClass> families_at_level(const AdjointChain& chain, std::size_t i, const Candidates& candidates);

struct Classification {
  Mode mode;
  AdjointChain chain;
  MinimalPairCase terminal;
  std::size_t returned_level;
  std::vector<FamilyReport> families;
  bool sphere_detected;
};

// Runs the chain and the level walk. In complex mode sigma is replaced by
// the identity; reports still carry reality against the original sigma.
Classification classify(const SurfacePair& pair, Mode mode = Mode::Real);

std::vector<FamilyReport> minimal_families(const SurfacePair& pair);
std::vector<FamilyReport> complex_minimal_families(const SurfacePair& pair);

enum class ConicKind { None, MinimalPair, Pullback };
enum class ConicSubkind { None, MinimalFamilies, GeometricallyRuled };

struct ConicReport {
  ConicKind kind = ConicKind::None;
  ConicSubkind subkind = ConicSubkind::None;
  std::vector<DivisorClass> classes;
  std::optional<int64_t> lambda;  // conics through a general point; nullopt = infinitely many
  int64_t minimal_degree = 0;
};

ConicReport classify_conics(const SurfacePair& pair);
ConicReport classify_conics(const Classification& cls);

}  // namespace minfam
