#pragma once
#include "newtonlab/system.hpp"

namespace nl {

// Coordinate subspaces are bitmasks over the n x-coordinates.
std::vector<int> mask_coords(unsigned mask, std::size_t n);
// "{1,3}" for the x1x3 plane.
std::string subspace_name(unsigned mask);

// A bounded facet K of H_E with dual (v,1), v > 0 on E. Coordinates are
// those of E (increasing index).
struct SubspaceFacet {
  unsigned mask = 0;
  RVec v;
  Rat level;                  // (v,1)·K
  std::vector<IVec> points;   // π_ε(K ∩ Hs)
  Polytope polytope;          // π_ε(K)
};
// IS(E); sorted by v.
std::vector<SubspaceFacet> subspace_facets(const std::vector<IVec>& hs, unsigned mask);

struct Classification {
  RecordClass cls;
  std::vector<unsigned> witnesses;  // proper coordinate planes E' with dim(P∩E') = dim E'
};
// P sits in its own coordinate space R^d.
Classification classify_stratum(const Polytope& p);

// m_v of the subproblem on E for the facet with projected support pts.
Int subproblem_multiplicity(const std::vector<IVec>& pts);

// Image of Hs under (w⊥, w, a) ↦ (w⊥, ξ(v·w + a)), the last coordinate
// rescaled so the image lattice is standard.
struct TraceData {
  std::size_t k = 0;           // dim E⊥
  Int xi = 1;
  std::vector<IVec> images;    // all of Hs
  IVec apex;                   // image of the facet
  std::vector<IVec> support;   // images of Hs \ (E ⊕ R)
};
TraceData trace_data(const std::vector<IVec>& hs, const SubspaceFacet& f);

// Milnor number of a generic singularity with this support (not
// containing the origin).
Int milnor_generic(const std::vector<IVec>& support, std::size_t k);

// p_E(Hs) \ {0}, in the coordinates of E⊥.
std::vector<IVec> drop_projection(const std::vector<IVec>& hs, unsigned mask);

std::vector<AsymptoticRecord> solve_critical(const std::vector<IVec>& hs);

Int total_multiplicity(const std::vector<AsymptoticRecord>& rs);

}  // namespace nl
