#pragma once
#include <optional>

#include "newtonlab/polytope.hpp"

namespace nl {

// Conv(support + nonnegative orthant). When the support carries an ε
// coordinate it is simply the last one; the recession cone is the full
// orthant either way.
class NewtonPolyhedron {
 public:
  explicit NewtonPolyhedron(std::vector<IVec> support);

  std::size_t dim() const { return n_; }
  const std::vector<IVec>& support() const { return support_; }
  // Hull of the support plus the points s + B·e_j.
  const Polytope& truncated() const { return trunc_; }
  const Int& bound() const { return bound_; }
  bool is_original(int truncated_index) const { return original_[truncated_index]; }

  // Meets every coordinate axis.
  bool is_convenient() const;
  bool contains(const IVec& p) const;

  struct FacetInfo {
    IVec normal;  // primitive, >= 0
    Int offset;
    int index;    // facet index in truncated()
    bool compact;
  };
  const std::vector<FacetInfo>& facets() const { return facets_; }
  std::vector<const FacetInfo*> compact_facets() const;
  // Faces of truncated() that are compact faces of the polyhedron.
  std::vector<const Face*> compact_faces() const;
  bool is_compact(const Face& f) const;
  // Support points lying on a truncated face.
  std::vector<IVec> original_points(const Face& f) const;

  struct SupportFace {
    std::vector<IVec> points;  // support points on the face
    std::vector<int> recession;  // coordinates j with γ_j = 0
    bool bounded() const { return recession.empty(); }
  };
  // Face minimizing γ; requires γ >= 0.
  SupportFace support_face(const RVec& gamma) const;

 private:
  std::size_t n_ = 0;
  std::vector<IVec> support_;
  Int bound_;
  Polytope trunc_;
  std::vector<char> original_;
  std::vector<FacetInfo> facets_;
};

// k!·vol(orthant \ Γ) for a convenient Γ, i.e. Σ over compact facets of
// (lattice distance of the origin)·V_N(facet). Dimension 0 gives 1.
Int under_volume(const NewtonPolyhedron& np);
Int under_volume(const std::vector<IVec>& support, std::size_t n);

// Points of the support lying in the coordinate subspace spanned by mask,
// written in the coordinates of that subspace.
std::vector<IVec> restrict_to(const std::vector<IVec>& pts, unsigned mask, std::size_t n,
                              bool keep_last = false);

Int newton_number(const NewtonPolyhedron& np);
Int newton_number(const std::vector<IVec>& support);

// π_ε of the face of the ε-support minimized by (v,1).
struct LocalPolytope {
  Polytope polytope;
  RVec v;
};
LocalPolytope local_polytope(const std::vector<IVec>& hs, const RVec& v);

}  // namespace nl
