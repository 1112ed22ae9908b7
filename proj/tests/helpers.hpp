#pragma once

#include <string>
#include <vector>

#include "minfam/adjoint.hpp"
#include "minfam/descriptor.hpp"
#include "minfam/lattice.hpp"

namespace testing {

inline minfam::LatticeBasis t1(std::size_t r) { return minfam::LatticeBasis(minfam::BasisKind::Type1, r); }
inline minfam::LatticeBasis t2(std::size_t r) { return minfam::LatticeBasis(minfam::BasisKind::Type2, r); }

// Display convention: {b0, b1, ...} = b0 e0 - b1 e1 - ...
inline minfam::DivisorClass c1(std::size_t r, std::vector<int64_t> display) {
  return minfam::from_display(t1(r), display);
}
// {g0, g1, b1, ...} = g0 l0 + g1 l1 - b1 eps1 - ...
inline minfam::DivisorClass c2(std::size_t r, std::vector<int64_t> display) {
  return minfam::from_display(t2(r), display);
}

inline minfam::SurfacePair pair_of(minfam::BasisKind kind, std::size_t r, std::vector<int64_t> h,
                                   std::vector<std::pair<std::size_t, std::size_t>> sigma = {},
                                   bool swap = false, std::vector<std::vector<int64_t>> roots = {}) {
  minfam::SurfaceDescriptor d;
  d.basis_kind = kind;
  d.exceptional_count = r;
  d.h = std::move(h);
  d.sigma = std::move(sigma);
  d.swap_rulings = swap;
  d.roots = std::move(roots);
  return minfam::to_surface_pair(d);
}

inline minfam::SurfacePair sphere() { return pair_of(minfam::BasisKind::Type1, 2, {2, 1, 1}, {{1, 2}}); }
inline minfam::SurfacePair chain_example() {
  return pair_of(minfam::BasisKind::Type1, 8, {19, 6, 6, 4, 4, 3, 3, 2, 2}, {{1, 2}, {3, 4}, {5, 6}, {7, 8}});
}
inline minfam::SurfacePair par_example() {
  return pair_of(minfam::BasisKind::Type1, 4, {10, 5, 5, 2, 2}, {{1, 2}, {3, 4}});
}

inline std::vector<std::string> names(const std::vector<minfam::DivisorClass>& cs) {
  std::vector<std::string> out;
  for (const auto& c : cs) out.push_back(minfam::to_string(c));
  return out;
}

}  // namespace testing
