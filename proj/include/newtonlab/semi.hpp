#pragma once
#include "newtonlab/polytope.hpp"

namespace nl {

// Daughter sub-polytope of the pair (Ap, As), Ap = Conv(As). Indices refer
// to parent.points(), which is As (sorted, deduplicated).
struct Daughter {
  Index generators;           // As minus the thrown-out faces
  std::vector<Index> thrown;  // point sets of the thrown-out faces of Ap
  Polytope polytope;
};

// Validates the thrown-out faces (given by their vertices) and builds the
// daughter.
Daughter make_daughter(const Polytope& parent, const std::vector<std::vector<IVec>>& thrown);
// Builds the daughter spanned by a subset of As, deriving the thrown-out
// faces; rejects generator sets that are not of daughter form.
Daughter daughter_from_points(const Polytope& parent, const std::vector<IVec>& generators);

struct Analysis {
  bool interlaced = false;
  bool semi_interlaced = false;
  std::vector<const Face*> sutures;  // decreasing dimension, whole polytope first
};
Analysis analyze(const Polytope& parent, const std::vector<Daughter>& daughters);

struct SutureTable {
  std::vector<Polytope> sutures;       // ordered: whole polytope first
  std::vector<Int> volumes;            // 𝔳
  std::vector<std::vector<Int>> c;     // c[i][j] = V_N(Ζ^{S_i}_{S_j}), unit upper triangular
  std::vector<std::vector<Int>> inverse;  // 𝔈
  std::vector<Int> mixed;              // ṽ = 𝔈·𝔳
  std::vector<Int> mixed_recursive;    // ṽ by the recursive form
};

// V_N of the closure of p_{S'}(S) \ p_{S'}(Conv((As∩S) \ S')), measured in
// dimension dim S - dim S'.
Int zeta_volume(const Polytope& parent, const Face& s, const Face& s_prime);

SutureTable suture_system(const Polytope& parent, const std::vector<Daughter>& daughters);
Int mv_semi_interlaced(const Polytope& parent, const std::vector<Daughter>& daughters);

// Mixed volume of the daughters meeting a face, in the lattice of the face.
Int restricted_mixed_volume(const Polytope& parent, const Face& s,
                            const std::vector<Daughter>& daughters);

}  // namespace nl
