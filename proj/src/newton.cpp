#include "newtonlab/newton.hpp"

#include <algorithm>
#include <set>

namespace nl {

NewtonPolyhedron::NewtonPolyhedron(std::vector<IVec> support) {
  if (support.empty()) throw InputError("empty support");
  n_ = support[0].size();
  std::sort(support.begin(), support.end(), LexLess{});
  support.erase(std::unique(support.begin(), support.end()), support.end());
  support_ = std::move(support);
  Int mx = 0;
  for (const auto& s : support_)
    for (const auto& x : s) mx = std::max(mx, Int(abs(x)));
  bound_ = mx + 1;
  std::vector<IVec> pts = support_;
  for (const auto& s : support_)
    for (std::size_t j = 0; j < n_; ++j) {
      IVec t = s;
      t[j] += bound_;
      pts.push_back(std::move(t));
    }
  trunc_ = Polytope(std::move(pts));
  std::set<IVec, LexLess> orig(support_.begin(), support_.end());
  original_.resize(trunc_.points().size());
  for (std::size_t i = 0; i < original_.size(); ++i) original_[i] = orig.count(trunc_.points()[i]) > 0;
  const auto& fs = trunc_.facets();
  for (std::size_t f = 0; f < fs.size(); ++f) {
    const IVec& a = fs[f].normal;  // full-dimensional: local = ambient directions
    bool nonneg = true, pos = true;
    for (const auto& x : a) {
      if (x < 0) nonneg = false;
      if (x <= 0) pos = false;
    }
    if (!nonneg) continue;
    // offset in ambient coordinates: a.(p - base) >= b  <=>  a.p >= b + a.base
    facets_.push_back({a, fs[f].offset + dot(a, trunc_.frame().base()), static_cast<int>(f), pos});
  }
}

bool NewtonPolyhedron::is_convenient() const {
  for (std::size_t j = 0; j < n_; ++j) {
    bool hit = false;
    for (const auto& s : support_) {
      bool axis = true;
      for (std::size_t i = 0; i < n_; ++i)
        if (i != j && s[i] != 0) axis = false;
      if (axis) hit = true;
    }
    if (!hit) return false;
  }
  return true;
}

bool NewtonPolyhedron::contains(const IVec& p) const {
  for (const auto& f : facets_)
    if (dot(f.normal, p) < f.offset) return false;
  return true;
}

std::vector<const NewtonPolyhedron::FacetInfo*> NewtonPolyhedron::compact_facets() const {
  std::vector<const FacetInfo*> r;
  for (const auto& f : facets_)
    if (f.compact) r.push_back(&f);
  return r;
}

bool NewtonPolyhedron::is_compact(const Face& f) const {
  for (int i : f.points)
    if (!original_[i]) return false;
  const auto& fs = trunc_.facets();
  for (std::size_t j = 0; j < n_; ++j) {
    bool pos = false;
    for (int fi : f.facets)
      if (fs[fi].normal[j] > 0) pos = true;
    if (!pos) return false;
  }
  return true;
}

std::vector<const Face*> NewtonPolyhedron::compact_faces() const {
  std::vector<const Face*> r;
  for (const auto& level : trunc_.faces())
    for (const auto& f : level)
      if (static_cast<std::size_t>(f.dim) < n_ && is_compact(f)) r.push_back(&f);
  return r;
}

std::vector<IVec> NewtonPolyhedron::original_points(const Face& f) const {
  std::vector<IVec> r;
  for (int i : f.points)
    if (original_[i]) r.push_back(trunc_.points()[i]);
  return r;
}

NewtonPolyhedron::SupportFace NewtonPolyhedron::support_face(const RVec& gamma) const {
  if (gamma.size() != n_) throw InputError("covector dimension mismatch");
  SupportFace sf;
  for (std::size_t j = 0; j < n_; ++j) {
    if (gamma[j] < 0) throw InputError("covector unbounded below on the Newton polyhedron");
    if (gamma[j] == 0) sf.recession.push_back(static_cast<int>(j));
  }
  Rat best;
  for (const auto& s : support_) {
    Rat v = dot(gamma, s);
    if (sf.points.empty() || v < best) {
      sf.points = {s};
      best = v;
    } else if (v == best) {
      sf.points.push_back(s);
    }
  }
  return sf;
}

std::vector<IVec> restrict_to(const std::vector<IVec>& pts, unsigned mask, std::size_t n,
                              bool keep_last) {
  std::vector<IVec> r;
  for (const auto& p : pts) {
    bool in = true;
    for (std::size_t j = 0; j < n; ++j)
      if (!(mask >> j & 1u) && p[j] != 0) in = false;
    if (!in) continue;
    IVec q;
    for (std::size_t j = 0; j < n; ++j)
      if (mask >> j & 1u) q.push_back(p[j]);
    if (keep_last) q.push_back(p[n]);
    r.push_back(std::move(q));
  }
  return r;
}

Int under_volume(const NewtonPolyhedron& np) {
  if (!np.is_convenient()) throw ScopeError("Newton polyhedron is not convenient");
  Int v = 0;
  for (const auto* f : np.compact_facets()) {
    const Face& face = np.truncated().faces()[np.dim() - 1][f->index];
    Polytope p(np.original_points(face));
    v += f->offset * p.normalized_volume();
  }
  return v;
}

Int under_volume(const std::vector<IVec>& support, std::size_t n) {
  if (n == 0) return 1;
  if (support.empty()) throw ScopeError("Newton polyhedron is not convenient");
  return under_volume(NewtonPolyhedron(support));
}

Int newton_number(const std::vector<IVec>& support) {
  if (support.empty()) throw InputError("empty support");
  const std::size_t n = support[0].size();
  Int nu = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    int sz = __builtin_popcount(mask);
    auto sub = restrict_to(support, mask, n);
    if (sz > 0 && sub.empty()) throw ScopeError("Newton polyhedron is not convenient");
    Int v = under_volume(sub, sz);
    if ((n - sz) % 2) nu -= v;
    else nu += v;
  }
  return nu;
}

Int newton_number(const NewtonPolyhedron& np) {
  if (!np.is_convenient()) throw ScopeError("Newton polyhedron is not convenient");
  return newton_number(np.support());
}

LocalPolytope local_polytope(const std::vector<IVec>& hs, const RVec& v) {
  if (hs.empty()) throw InputError("empty support");
  const std::size_t n = v.size();
  std::vector<IVec> best;
  Rat bv;
  for (const auto& p : hs) {
    if (p.size() != n + 1) throw InputError("support must carry an ε coordinate");
    Rat val = p[n];
    for (std::size_t j = 0; j < n; ++j) val += v[j] * p[j];
    IVec x(p.begin(), p.end() - 1);
    if (best.empty() || val < bv) {
      best = {x};
      bv = val;
    } else if (val == bv) {
      best.push_back(x);
    }
  }
  return {Polytope(best), v};
}

}  // namespace nl
