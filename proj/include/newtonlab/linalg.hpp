#pragma once
#include "newtonlab/arith.hpp"

namespace nl {

// Rank of a rational/integer matrix given by rows.
int rank(const IMat& rows);
int rank(const RMat& rows);
// Affine dimension of a point set; -1 for an empty set.
int affine_dim(const std::vector<IVec>& pts);
// Determinant of a square integer matrix (fraction-free elimination).
Int det(IMat m);

// Basis of the lattice {x in Z^ncols : M x = 0}. Columns of a unimodular
// transform, so the basis is saturated. Returned as a list of vectors.
IMat integer_kernel(const IMat& m, std::size_t ncols);

// Integer affine frame of a point set: base point plus a basis of the
// saturated lattice of the direction space, with exact local coordinates.
class Frame {
 public:
  Frame() = default;
  explicit Frame(const std::vector<IVec>& pts);

  std::size_t ambient() const { return base_.size(); }
  int dim() const { return static_cast<int>(basis_.size()); }
  const IVec& base() const { return base_; }
  const IMat& basis() const { return basis_; }
  // Rows are integer covectors cutting out the direction space.
  const IMat& annihilator() const { return annihilator_; }

  bool contains(const IVec& p) const;
  // Local lattice coordinates; throws if p is not in the affine lattice.
  IVec local(const IVec& p) const;
  RVec local_rat(const RVec& p) const;
  IVec global(const IVec& y) const;
  // Pull back a local covector to an ambient covector (up to adding
  // annihilator combinations).
  RVec lift_covector(const RVec& local_cov) const;

 private:
  IVec base_;
  IMat basis_;        // dim x ambient
  IMat annihilator_;  // (ambient - dim) x ambient
  std::vector<std::size_t> rows_;  // coordinates where basis is invertible
  RMat inv_;          // dim x dim inverse of basis restricted to rows_
};

// Hyperplane through k affinely independent points of Z^k: primitive
// integer normal a and offset b with a.x = b on the points.
std::pair<IVec, Int> hyperplane_through(const std::vector<IVec>& pts);

// Solve a square nonsingular rational system.
RVec solve(RMat a, RVec b);

}  // namespace nl
