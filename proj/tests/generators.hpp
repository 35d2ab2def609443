#pragma once
// Seeded random instances shared by the property tests and the acceptance run.
#include <algorithm>
#include <random>
#include <vector>

#include "newtonlab/polytope.hpp"
#include "newtonlab/semi.hpp"

namespace nlgen {

using nl::Int;
using nl::IVec;

class Gen {
 public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  IVec point(std::size_t n, int lo, int hi) {
    IVec p(n);
    for (auto& x : p) x = uniform(lo, hi);
    return p;
  }

  // Nonzero point of [0, hi]^n.
  IVec nonzero_point(std::size_t n, int hi) {
    for (;;) {
      IVec p = point(n, 0, hi);
      if (std::any_of(p.begin(), p.end(), [](const Int& x) { return x != 0; })) return p;
    }
  }

  // Convenient support: one point per axis plus a few free points.
  std::vector<IVec> convenient(std::size_t n, int hi, int extra) {
    std::vector<IVec> s;
    for (std::size_t i = 0; i < n; ++i) {
      IVec p(n, Int(0));
      p[i] = uniform(2, hi);
      s.push_back(std::move(p));
    }
    for (int k = 0; k < extra; ++k) s.push_back(nonzero_point(n, hi));
    return s;
  }

  struct Pair {
    std::vector<IVec> f, g;
  };

  // Γ_f ⊆ Γ_g by construction: g = f plus 1..3 points.
  Pair embedded_pair(std::size_t n, int hi) {
    Pair p;
    p.f = convenient(n, hi, uniform(0, 3));
    p.g = p.f;
    // small points usually poke below Γ_f
    for (int k = uniform(1, 3); k > 0; --k) p.g.push_back(nonzero_point(n, std::max(1, hi / 2)));
    return p;
  }

  // Full-dimensional lattice polytope in [0, hi]^n.
  nl::Polytope polytope(std::size_t n, int hi) {
    for (;;) {
      std::vector<IVec> pts;
      for (int k = uniform(1, static_cast<int>(n) + 3); k > 0; --k) pts.push_back(point(n, 0, hi));
      nl::Polytope p(pts);
      if (p.dim() == static_cast<int>(n)) return p;
    }
  }

  // Lattice polytope of any dimension (points and segments included).
  nl::Polytope any_polytope(std::size_t n, int hi) {
    std::vector<IVec> pts;
    for (int k = uniform(1, static_cast<int>(n) + 2); k > 0; --k) pts.push_back(point(n, 0, hi));
    return nl::Polytope(pts);
  }

  // Product of elementary integer matrices, so det = ±1.
  nl::IMat unimodular(std::size_t n) {
    nl::IMat m(n, IVec(n, Int(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    for (int k = 0; k < 6; ++k) {
      std::size_t i = uniform(0, static_cast<int>(n) - 1), j = uniform(0, static_cast<int>(n) - 1);
      if (i == j) {
        for (auto& x : m[i]) x = -x;
        continue;
      }
      Int c = uniform(-2, 2);
      for (std::size_t col = 0; col < n; ++col) m[i][col] += c * m[j][col];
    }
    return m;
  }

  // Point set not contained in any coordinate hyperplane, spanning R^n,
  // with the daughters Conv(A \ {x_i = 0}).
  struct Family {
    nl::Polytope parent;
    std::vector<nl::Daughter> daughters;
  };
  Family coordinate_family(std::size_t n, int hi) {
    for (;;) {
      std::vector<IVec> a;
      for (int k = uniform(static_cast<int>(n) + 1, static_cast<int>(n) + 4); k > 0; --k) a.push_back(point(n, 0, hi));
      nl::Polytope parent(a);
      if (parent.dim() != static_cast<int>(n)) continue;
      Family fam{parent, {}};
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i) {
        std::vector<IVec> rest;
        for (const auto& p : parent.points())
          if (p[i] != 0) rest.push_back(p);
        if (rest.empty()) ok = false;
        else fam.daughters.push_back(nl::daughter_from_points(parent, rest));
      }
      if (ok) return fam;
    }
  }

 private:
  std::mt19937 rng_;
};

inline nl::Polytope transform(const nl::Polytope& p, const nl::IMat& m, const IVec& shift) {
  std::vector<IVec> out;
  for (const auto& x : p.points()) {
    IVec y(shift);
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = 0; j < x.size(); ++j) y[i] += m[i][j] * x[j];
    out.push_back(std::move(y));
  }
  return nl::Polytope(out);
}

}  // namespace nlgen
