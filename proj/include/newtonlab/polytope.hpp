#pragma once
#include <vector>

#include "newtonlab/arith.hpp"
#include "newtonlab/linalg.hpp"

namespace nl {

using Index = std::vector<int>;  // sorted indices into a point list

struct Face {
  int dim = 0;
  Index points;    // all input points lying on the face
  Index vertices;  // the extreme ones among them
  Index facets;    // facets of the polytope containing the face
  Index children;  // indices into the face list one dimension lower
};

// Facet in local lattice coordinates: normal . y >= offset on the polytope.
struct Facet {
  IVec normal;
  Int offset;
  Index points;
};

// Convex hull of finitely many lattice points with its full face lattice.
// Lower-dimensional inputs are handled in the integer frame of their
// affine span, so volumes are measured against the induced lattice.
class Polytope {
 public:
  Polytope() = default;
  explicit Polytope(std::vector<IVec> pts);

  std::size_t ambient_dim() const { return frame_.ambient(); }
  int dim() const { return frame_.dim(); }
  const std::vector<IVec>& points() const { return pts_; }
  const Index& vertices() const { return verts_; }
  std::vector<IVec> vertex_points() const;
  const Frame& frame() const { return frame_; }
  const std::vector<IVec>& local_points() const { return loc_; }
  const std::vector<Facet>& facets() const { return facets_; }
  // faces()[j] lists the j-dimensional faces; faces()[dim()] is the polytope.
  const std::vector<std::vector<Face>>& faces() const { return faces_; }

  // Facet normal pulled back to an ambient covector.
  RVec ambient_normal(const Facet& f) const { return frame_.lift_covector(to_rat(f.normal)); }

  // k!·vol in the induced lattice of the affine span (1 for a point).
  Int normalized_volume() const { return volume_; }
  // V_N measured in dimension d: 0 when the polytope is lower-dimensional.
  Int volume_in_dim(int d) const { return dim() == d ? volume_ : Int(0); }

  bool contains(const IVec& p) const;
  // Points (ambient) lying on the face.
  std::vector<IVec> face_points(const Face& f) const;
  std::vector<IVec> face_vertices(const Face& f) const;
  // Face with exactly this point set, or nullptr.
  const Face* find_face(const Index& pts) const;
  // Minimizing face of an ambient covector.
  const Face& support_face(const RVec& gamma) const;
  // Index of a point in points(), or -1.
  int index_of(const IVec& p) const;

  friend bool operator==(const Polytope& a, const Polytope& b) {
    return a.vertex_points() == b.vertex_points();
  }

 private:
  void build_hull();
  void build_lattice();
  void build_volume();

  std::vector<IVec> pts_;  // sorted, unique
  Frame frame_;
  std::vector<IVec> loc_;
  Index verts_;
  std::vector<Facet> facets_;
  std::vector<std::vector<Face>> faces_;
  Int volume_ = 0;
};

Polytope minkowski_sum(const Polytope& p, const Polytope& q);
Polytope translate(const Polytope& p, const IVec& t);
// Mixed volume of n polytopes in Z^n (polarization formula, normalized so
// that MV(P,...,P) = V_N(P)). The empty family in dimension 0 gives 1.
Int mixed_volume(const std::vector<Polytope>& ps);

// Image of points under the quotient of Z^n by the saturated lattice
// spanned by the given directions. The map is onto Z^{n-r}.
struct Quotient {
  IMat rows;  // (n-r) x n integer, rows span the annihilator lattice
  IVec apply(const IVec& p) const;
  std::vector<IVec> apply(const std::vector<IVec>& ps) const;
};
Quotient quotient_along(const IMat& directions, std::size_t ambient);
Quotient quotient_along(const Polytope& face);

}  // namespace nl
