#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "minfam/adjoint.hpp"
#include "minfam/lattice.hpp"

namespace minfam {

// JSON surface description. h and roots use the display convention
// (see from_display); sigma holds 1-based transpositions of exceptional indices.
struct SurfaceDescriptor {
  BasisKind basis_kind = BasisKind::Type1;
  std::size_t exceptional_count = 0;
  std::vector<int64_t> h;
  std::vector<std::pair<std::size_t, std::size_t>> sigma;
  bool swap_rulings = false;
  std::vector<std::vector<int64_t>> roots;
  std::string label;

  friend bool operator==(const SurfaceDescriptor&, const SurfaceDescriptor&) = default;
};

// Strict parse; the resulting pair is validated too. Throws Error.
SurfaceDescriptor parse_descriptor(std::string_view text);
std::string emit_descriptor(const SurfaceDescriptor& d);
SurfacePair to_surface_pair(const SurfaceDescriptor& d);

}  // namespace minfam
