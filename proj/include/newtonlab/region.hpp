#pragma once
#include "newtonlab/newton.hpp"

namespace nl {

enum class CellLabel { upper, shadow, lower };

struct RegionCell {
  Polytope cell;  // projection of a compact lower facet of the trace polyhedron
  CellLabel label;
};

// Cocompact region of the orthant R^k_{>=0} cut out by a "shadow": the
// ε-projection of the faces of T = NP(images \ {apex}) whose dual cones
// meet the open cone of covectors (u,1), u > 0, minimized uniquely at the
// apex. The region is the component of orthant \ shadow reaching infinity;
// its complement (lower ∪ shadow) is compact.
//
// Cells are the projections of the lower facets of T (a regular
// subdivision of π(T)), plus the part of the orthant under π(T).
struct StaircaseRegion {
  int k = 0;
  std::vector<IVec> images;  // points of Z^k ⊕ Z
  IVec apex;                 // (0,...,0,c)
  Int bound;                 // truncation bound used for T
  std::vector<Polytope> shadow;
  std::vector<RegionCell> cells;
  bool has_under = false;
  CellLabel under_label = CellLabel::lower;
  Int under_volume = 0;
  Int complement_volume = 1;  // V_N(lower ∪ shadow)
};

StaircaseRegion make_region(int k, std::vector<IVec> images, IVec apex);
// The region above a convenient Newton polyhedron, expressed as a staircase.
StaircaseRegion region_from_newton(const std::vector<IVec>& support);

// Re-run inside each coordinate subspace, or read slices off the
// full-dimensional classification.
enum class SliceMode { rerun, closure };

// V_N of the complement's slice by the coordinate subspace mask.
Int slice_volume(const StaircaseRegion& r, unsigned mask, SliceMode mode = SliceMode::rerun);
Int region_newton_number(const StaircaseRegion& r, SliceMode mode = SliceMode::rerun);

}  // namespace nl
