#pragma once
#include <optional>

#include "newtonlab/critical.hpp"
#include "newtonlab/region.hpp"

namespace nl {

// i(Fs) ∪ (i(Gs) + e_ε).
std::vector<IVec> build_H(const std::vector<IVec>& fs, const std::vector<IVec>& gs, const Int& g_level = 1);
// Support points that are vertices of the Newton polyhedron of hs.
std::vector<IVec> vertex_reduce(const std::vector<IVec>& hs);

// IS over all non-empty coordinate subspaces: larger subspaces first, then
// by mask, then by covector.
std::vector<SubspaceFacet> enumerate_IS(const std::vector<IVec>& hs);

// Empty optional for v ∈ IS(R^n), whose ν is 1 by convention.
std::optional<StaircaseRegion> essential_region(const std::vector<IVec>& hs, const SubspaceFacet& f);

struct SummandRecord {
  SubspaceFacet facet;
  Int multiplicity = 0;
  Int nu = 1;
  Int contribution = 0;
};

struct Verification {
  Int nu_f, nu_g;       // classical Newton numbers (f/g) or level-0 / projected (general H)
  Int difference;
  bool match = false;
};

struct NonnegResult {
  std::vector<IVec> hs;  // support actually used
  std::vector<SummandRecord> summands;
  Int total = 0;
  std::optional<Verification> verification;
};

struct NonnegOptions {
  bool keep_support = false;
  SliceMode slices = SliceMode::rerun;
};

NonnegResult nonneg_formula(std::vector<IVec> hs, const NonnegOptions& opt = {});
// Same, verified against ν(Γ_f) − ν(Γ_g).
NonnegResult nonneg_formula(const std::vector<IVec>& fs, const std::vector<IVec>& gs,
                            const NonnegOptions& opt = {});
// ν(level-0 part) − ν(projection) when the lowest ε level is 0 and both are
// convenient; otherwise empty.
std::optional<Verification> classical_check(const std::vector<IVec>& hs, const Int& total);

struct JumpCandidate {
  IVec point;
  Int difference;
};
struct JumpReport {
  Int base;
  Int jump;
  std::vector<IVec> witnesses;
  std::vector<JumpCandidate> candidates;  // lexicographic by point
};
JumpReport first_jump(const std::vector<IVec>& fs, unsigned threads = 0);

struct MonotonicityReport {
  bool equal = false;
  NonnegResult formula;
  std::vector<std::string> evidence;  // one line per IS index
  std::vector<AsymptoticRecord> positive;  // strict case: critical asymptotics with m > 0
};
MonotonicityReport monotonicity_report(const std::vector<IVec>& fs, const std::vector<IVec>& gs,
                                       const NonnegOptions& opt = {});

// Local polytopes Conv(pts \ E_i) of a facet; a subfamily whose Minkowski sum
// has dimension below its size forces a zero mixed volume.
std::vector<Polytope> local_polytopes(const std::vector<IVec>& pts);
std::optional<std::vector<int>> degenerate_subfamily(const std::vector<Polytope>& ps);

// 1 + Σ_{E' ⊋ E} ν(Γ̃_{E'}(v)) with each region rebuilt from Hs_{E'}.
Int complement_identity_lhs(const std::vector<IVec>& hs, const SubspaceFacet& f);

}  // namespace nl
