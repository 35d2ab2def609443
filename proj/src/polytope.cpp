#include "newtonlab/polytope.hpp"

#include <algorithm>
#include <map>

namespace nl {

namespace {

Index intersect(const Index& a, const Index& b) {
  Index r;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

bool includes(const Index& big, const Index& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

Polytope::Polytope(std::vector<IVec> pts) {
  if (pts.empty()) throw InputError("empty point set");
  std::size_t n = pts[0].size();
  for (const auto& p : pts)
    if (p.size() != n) throw InputError("points of mixed dimension");
  std::sort(pts.begin(), pts.end(), LexLess{});
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  pts_ = std::move(pts);
  frame_ = Frame(pts_);
  loc_.reserve(pts_.size());
  for (const auto& p : pts_) loc_.push_back(frame_.local(p));
  build_hull();
  build_lattice();
  build_volume();
}

void Polytope::build_hull() {
  const int k = dim();
  const int np = static_cast<int>(loc_.size());
  if (k == 0) {
    verts_ = {0};
    return;
  }
  if (k == 1) {
    int lo = 0, hi = 0;
    for (int i = 1; i < np; ++i) {
      if (loc_[i][0] < loc_[lo][0]) lo = i;
      if (loc_[i][0] > loc_[hi][0]) hi = i;
    }
    facets_.push_back({ivec({1}), loc_[lo][0], {lo}});
    facets_.push_back({ivec({-1}), -loc_[hi][0], {hi}});
    verts_ = {std::min(lo, hi), std::max(lo, hi)};
    return;
  }
  // initial simplex
  std::vector<int> simplex{0};
  {
    IMat dirs;
    for (int i = 1; i < np && static_cast<int>(simplex.size()) < k + 1; ++i) {
      dirs.push_back(sub(loc_[i], loc_[0]));
      if (rank(dirs) == static_cast<int>(dirs.size()))
        simplex.push_back(i);
      else
        dirs.pop_back();
    }
  }
  IVec ref(k, 0);  // (k+1) * centroid of the simplex
  for (int i : simplex) ref = add(ref, loc_[i]);
  const Int refw = k + 1;

  auto make_facet = [&](const std::vector<IVec>& through) {
    auto [a, b] = hyperplane_through(through);
    if (dot(a, ref) < refw * b) {
      for (auto& x : a) x = -x;
      b = -b;
    }
    return Facet{a, b, {}};
  };

  std::vector<char> processed(np, 0);
  for (int i : simplex) processed[i] = 1;
  for (int skip = 0; skip <= k; ++skip) {
    std::vector<IVec> th;
    for (int j = 0; j <= k; ++j)
      if (j != skip) th.push_back(loc_[simplex[j]]);
    Facet f = make_facet(th);
    for (int j = 0; j <= k; ++j)
      if (j != skip) f.points.push_back(simplex[j]);
    std::sort(f.points.begin(), f.points.end());
    facets_.push_back(std::move(f));
  }

  for (int p = 0; p < np; ++p) {
    if (processed[p]) continue;
    std::vector<Int> val(facets_.size());
    std::vector<char> vis(facets_.size(), 0);
    bool any = false;
    for (std::size_t f = 0; f < facets_.size(); ++f) {
      val[f] = dot(facets_[f].normal, loc_[p]) - facets_[f].offset;
      if (val[f] < 0) vis[f] = 1, any = true;
    }
    processed[p] = 1;
    if (!any) {
      for (std::size_t f = 0; f < facets_.size(); ++f)
        if (val[f] == 0) {
          auto& pt = facets_[f].points;
          pt.insert(std::upper_bound(pt.begin(), pt.end(), p), p);
        }
      continue;
    }
    std::vector<Facet> fresh;
    for (std::size_t f = 0; f < facets_.size(); ++f) {
      if (!vis[f]) continue;
      for (std::size_t g = 0; g < facets_.size(); ++g) {
        if (vis[g] || val[g] == 0) continue;
        Index ridge = intersect(facets_[f].points, facets_[g].points);
        if (static_cast<int>(ridge.size()) < k - 1) continue;
        std::vector<IVec> rp;
        for (int i : ridge) rp.push_back(loc_[i]);
        if (affine_dim(rp) != k - 2) continue;
        // k-1 independent ridge points plus p
        std::vector<IVec> th{rp[0]};
        IMat dirs;
        for (std::size_t i = 1; i < rp.size() && static_cast<int>(th.size()) < k - 1; ++i) {
          dirs.push_back(sub(rp[i], rp[0]));
          if (rank(dirs) == static_cast<int>(dirs.size()))
            th.push_back(rp[i]);
          else
            dirs.pop_back();
        }
        th.push_back(loc_[p]);
        Facet nf = make_facet(th);
        bool dup = false;
        for (const auto& e : fresh)
          if (e.normal == nf.normal && e.offset == nf.offset) dup = true;
        if (!dup) fresh.push_back(std::move(nf));
      }
    }
    std::vector<Facet> kept;
    for (std::size_t f = 0; f < facets_.size(); ++f) {
      if (vis[f]) continue;
      if (val[f] == 0) {
        auto& pt = facets_[f].points;
        pt.insert(std::upper_bound(pt.begin(), pt.end(), p), p);
      }
      kept.push_back(std::move(facets_[f]));
    }
    for (auto& nf : fresh) {
      for (int i = 0; i < np; ++i)
        if (processed[i] && dot(nf.normal, loc_[i]) == nf.offset) nf.points.push_back(i);
      kept.push_back(std::move(nf));
    }
    facets_ = std::move(kept);
  }
  // vertices: points whose incident facet normals have full rank
  for (int i = 0; i < np; ++i) {
    IMat ns;
    for (const auto& f : facets_)
      if (std::binary_search(f.points.begin(), f.points.end(), i)) ns.push_back(f.normal);
    if (static_cast<int>(ns.size()) >= k && rank(ns) == k) verts_.push_back(i);
  }
}

void Polytope::build_lattice() {
  const int k = dim();
  faces_.assign(k + 1, {});
  Index all(pts_.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  faces_[k].push_back(Face{k, all, verts_, {}, {}});
  if (k == 0) return;
  auto vertices_of = [&](const Index& pts) { return intersect(pts, verts_); };
  for (std::size_t f = 0; f < facets_.size(); ++f) {
    Face face{k - 1, facets_[f].points, vertices_of(facets_[f].points), {static_cast<int>(f)}, {}};
    faces_[k].front().children.push_back(static_cast<int>(f));
    faces_[k - 1].push_back(std::move(face));
  }
  for (int j = k - 1; j >= 1; --j) {
    std::map<Index, int> seen;
    for (auto& face : faces_[j]) {
      for (std::size_t g = 0; g < facets_.size(); ++g) {
        if (std::binary_search(face.facets.begin(), face.facets.end(), static_cast<int>(g))) continue;
        Index in = intersect(face.points, facets_[g].points);
        if (in.empty()) continue;
        Index iv = vertices_of(in);
        std::vector<IVec> vp;
        for (int i : iv) vp.push_back(loc_[i]);
        if (affine_dim(vp) != j - 1) continue;
        auto [it, inserted] = seen.emplace(in, static_cast<int>(faces_[j - 1].size()));
        if (inserted) faces_[j - 1].push_back(Face{j - 1, in, iv, {}, {}});
        if (std::find(face.children.begin(), face.children.end(), it->second) == face.children.end())
          face.children.push_back(it->second);
      }
      std::sort(face.children.begin(), face.children.end());
    }
    for (auto& face : faces_[j - 1])
      for (std::size_t g = 0; g < facets_.size(); ++g)
        if (includes(facets_[g].points, face.points)) face.facets.push_back(static_cast<int>(g));
  }
}

void Polytope::build_volume() {
  const int k = dim();
  if (k == 0) {
    volume_ = 1;
    return;
  }
  // pulling triangulation from the smallest vertex of each face
  std::vector<Index> simplices;
  auto rec = [&](auto&& self, int j, int fi, Index acc) -> void {
    const Face& f = faces_[j][fi];
    if (j == 0) {
      acc.push_back(f.vertices.front());
      simplices.push_back(std::move(acc));
      return;
    }
    int apex = f.vertices.front();
    acc.push_back(apex);
    for (int c : f.children) {
      const Face& ch = faces_[j - 1][c];
      if (std::binary_search(ch.points.begin(), ch.points.end(), apex)) continue;
      self(self, j - 1, c, acc);
    }
  };
  rec(rec, k, 0, {});
  Int vol = 0;
  for (const auto& s : simplices) {
    IMat m;
    for (int i = 1; i <= k; ++i) m.push_back(sub(loc_[s[i]], loc_[s[0]]));
    Int d = det(m);
    vol += abs(d);
  }
  volume_ = vol;
}

std::vector<IVec> Polytope::vertex_points() const {
  std::vector<IVec> r;
  for (int i : verts_) r.push_back(pts_[i]);
  return r;
}

bool Polytope::contains(const IVec& p) const {
  if (!frame_.contains(p)) return false;
  if (dim() == 0) return p == pts_[0];
  IVec y = frame_.local(p);
  for (const auto& f : facets_)
    if (dot(f.normal, y) < f.offset) return false;
  return true;
}

std::vector<IVec> Polytope::face_points(const Face& f) const {
  std::vector<IVec> r;
  for (int i : f.points) r.push_back(pts_[i]);
  return r;
}

std::vector<IVec> Polytope::face_vertices(const Face& f) const {
  std::vector<IVec> r;
  for (int i : f.vertices) r.push_back(pts_[i]);
  return r;
}

const Face* Polytope::find_face(const Index& pts) const {
  for (const auto& level : faces_)
    for (const auto& f : level)
      if (f.points == pts) return &f;
  return nullptr;
}

const Face& Polytope::support_face(const RVec& gamma) const {
  if (gamma.size() != ambient_dim()) throw InputError("covector dimension mismatch");
  Index arg;
  Rat best;
  for (std::size_t i = 0; i < pts_.size(); ++i) {
    Rat v = dot(gamma, pts_[i]);
    if (arg.empty() || v < best) {
      arg = {static_cast<int>(i)};
      best = v;
    } else if (v == best) {
      arg.push_back(static_cast<int>(i));
    }
  }
  const Face* f = find_face(arg);
  if (!f) throw std::logic_error("support face missing from face lattice");
  return *f;
}

int Polytope::index_of(const IVec& p) const {
  auto it = std::lower_bound(pts_.begin(), pts_.end(), p, LexLess{});
  if (it == pts_.end() || *it != p) return -1;
  return static_cast<int>(it - pts_.begin());
}

Polytope minkowski_sum(const Polytope& p, const Polytope& q) {
  if (p.ambient_dim() != q.ambient_dim()) throw InputError("minkowski_sum: dimension mismatch");
  std::vector<IVec> s;
  for (const auto& a : p.vertex_points())
    for (const auto& b : q.vertex_points()) s.push_back(add(a, b));
  return Polytope(std::move(s));
}

Polytope translate(const Polytope& p, const IVec& t) {
  std::vector<IVec> s;
  for (const auto& a : p.points()) s.push_back(add(a, t));
  return Polytope(std::move(s));
}

Int mixed_volume(const std::vector<Polytope>& ps) {
  const std::size_t n = ps.size();
  if (n == 0) return 1;
  for (const auto& p : ps)
    if (p.ambient_dim() != n) throw InputError("mixed_volume: need n polytopes in dimension n");
  std::vector<Polytope> sums(std::size_t(1) << n);
  Int total = 0;
  for (std::size_t mask = 1; mask < sums.size(); ++mask) {
    std::size_t low = mask & (~mask + 1);
    int li = __builtin_ctzll(mask);
    sums[mask] = (mask == low) ? ps[li] : minkowski_sum(sums[mask ^ low], ps[li]);
    int sz = __builtin_popcountll(mask);
    Int v = sums[mask].volume_in_dim(static_cast<int>(n));
    if ((n - sz) % 2) total -= v;
    else total += v;
  }
  Int f = factorial(static_cast<int>(n));
  if (total % f != 0) throw std::logic_error("mixed_volume: non-integral result");
  return total / f;
}

IVec Quotient::apply(const IVec& p) const {
  IVec r(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) r[i] = dot(rows[i], p);
  return r;
}

std::vector<IVec> Quotient::apply(const std::vector<IVec>& ps) const {
  std::vector<IVec> r;
  for (const auto& p : ps) r.push_back(apply(p));
  return r;
}

Quotient quotient_along(const IMat& directions, std::size_t ambient) {
  for (const auto& d : directions)
    if (d.size() != ambient) throw InputError("quotient: direction dimension mismatch");
  return Quotient{integer_kernel(directions, ambient)};
}

Quotient quotient_along(const Polytope& face) {
  return quotient_along(face.frame().basis(), face.ambient_dim());
}

}  // namespace nl
