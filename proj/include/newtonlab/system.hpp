#pragma once
#include <optional>

#include "newtonlab/newton.hpp"

namespace nl {

// Rational or +∞; ∞ only appears in dropped records.
struct ExtRat {
  bool inf = false;
  Rat value;
  static ExtRat infinity() { return {true, 0}; }
  friend bool operator==(const ExtRat& a, const ExtRat& b) {
    return a.inf == b.inf && (a.inf || a.value == b.value);
  }
};
using ExtCovector = std::vector<ExtRat>;
std::string to_string(const ExtRat& x);
std::string to_string(const ExtCovector& v);
ExtRat parse_ext(const std::string& s);
bool ext_less(const ExtCovector& a, const ExtCovector& b);
ExtCovector finite(const RVec& v);

enum class RecordClass { internal, semi_internal, raised, dropped };
std::string to_string(RecordClass c);

struct AsymptoticRecord {
  ExtCovector covector;
  RecordClass cls = RecordClass::internal;
  Int multiplicity = 0;
  unsigned subspace = 0;   // coordinate mask E of the originating facet
  RVec base;               // v_E on E for raised/dropped records
  std::vector<IVec> dual;  // points of the dual facet / polytope
};
void sort_records(std::vector<AsymptoticRecord>& rs);

struct RhoData {
  Rat rho_f, rho_g;
};
RhoData rho(const std::vector<IVec>& fs, const std::vector<IVec>& gs, const RVec& v);
// v / <w_f - w_g, v>.
RVec normalize_N(const RVec& v, const std::vector<IVec>& fs, const std::vector<IVec>& gs);

// Zero-dimensional stratum of the common refinement.
struct Stratum {
  RVec direction;          // primitive positive facet normal of Γ_f + Γ_g
  std::vector<IVec> face_f, face_g;
  Polytope box;            // Conv(Γ_f^v ∪ Γ_g^v)
  bool allowable = false;
};
std::vector<Stratum> zero_strata(const std::vector<IVec>& fs, const std::vector<IVec>& gs);

// Γ_f ⊆ Γ_g as Newton polyhedra.
bool embeds(const std::vector<IVec>& fs, const std::vector<IVec>& gs);

std::vector<AsymptoticRecord> solve_system(const std::vector<IVec>& fs, const std::vector<IVec>& gs);
std::vector<AsymptoticRecord> solve_system_generalized(const std::vector<IVec>& hs);

// π_ε of the support meets every coordinate axis.
bool meets_axes(const std::vector<IVec>& hs, std::size_t n);

}  // namespace nl

namespace nl {

// V_N(Γ_g \ Γ_f) for Γ_f ⊆ Γ_g, via both polyhedra clipped to a common box.
Int difference_volume(const std::vector<IVec>& fs, const std::vector<IVec>& gs);

}  // namespace nl
