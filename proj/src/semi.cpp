#include "newtonlab/semi.hpp"

#include <algorithm>

namespace nl {

namespace {

bool meets(const Index& a, const Index& b) {
  auto i = a.begin(), j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) ++i;
    else ++j;
  }
  return false;
}

bool subset(const Index& small, const Index& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

// Maximal faces of the parent avoiding the generators.
std::vector<Index> missing_faces(const Polytope& parent, const Index& gens) {
  std::vector<Index> miss;
  const auto& fl = parent.faces();
  for (int j = static_cast<int>(fl.size()) - 1; j >= 0; --j)
    for (const auto& f : fl[j]) {
      if (meets(f.points, gens)) continue;
      bool covered = false;
      for (const auto& m : miss)
        if (subset(f.points, m)) covered = true;
      if (!covered) miss.push_back(f.points);
    }
  std::sort(miss.begin(), miss.end());
  return miss;
}

Daughter finish(const Polytope& parent, Index gens, std::vector<Index> thrown) {
  if (gens.empty()) throw InputError("daughter: every support point was thrown out");
  for (std::size_t i = 0; i < thrown.size(); ++i)
    for (std::size_t j = i + 1; j < thrown.size(); ++j)
      if (meets(thrown[i], thrown[j])) throw InputError("daughter: thrown faces overlap");
  std::sort(thrown.begin(), thrown.end());
  if (missing_faces(parent, gens) != thrown)
    throw InputError("daughter: thrown faces are not the maximal faces missing the sub-polytope");
  std::vector<IVec> pts;
  for (int i : gens) pts.push_back(parent.points()[i]);
  return Daughter{std::move(gens), std::move(thrown), Polytope(std::move(pts))};
}

const Face* face_by_vertices(const Polytope& parent, const std::vector<IVec>& verts) {
  Index vi;
  for (const auto& v : verts) {
    int i = parent.index_of(v);
    if (i < 0) throw InputError("daughter: thrown face vertex " + to_string(v) + " is not in As");
    vi.push_back(i);
  }
  std::sort(vi.begin(), vi.end());
  vi.erase(std::unique(vi.begin(), vi.end()), vi.end());
  for (const auto& level : parent.faces())
    for (const auto& f : level)
      if (f.vertices == vi) return &f;
  throw InputError("daughter: thrown set is not a face of the parent");
}

std::vector<IVec> vertex_key(const Polytope& parent, const Face& f) {
  return parent.face_vertices(f);
}

}  // namespace

Daughter make_daughter(const Polytope& parent, const std::vector<std::vector<IVec>>& thrown) {
  std::vector<Index> faces;
  for (const auto& t : thrown) faces.push_back(face_by_vertices(parent, t)->points);
  Index gens;
  for (int i = 0; i < static_cast<int>(parent.points().size()); ++i) {
    bool out = false;
    for (const auto& f : faces)
      if (std::binary_search(f.begin(), f.end(), i)) out = true;
    if (!out) gens.push_back(i);
  }
  return finish(parent, std::move(gens), std::move(faces));
}

Daughter daughter_from_points(const Polytope& parent, const std::vector<IVec>& generators) {
  Index gens;
  for (const auto& g : generators) {
    int i = parent.index_of(g);
    if (i < 0) throw InputError("daughter: generator " + to_string(g) + " is not in As");
    gens.push_back(i);
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  if (gens.empty()) throw InputError("daughter: no generators");
  auto thrown = missing_faces(parent, gens);
  // the generators must be everything outside the thrown faces
  for (int i = 0; i < static_cast<int>(parent.points().size()); ++i) {
    bool out = false;
    for (const auto& f : thrown)
      if (std::binary_search(f.begin(), f.end(), i)) out = true;
    if (!out && !std::binary_search(gens.begin(), gens.end(), i))
      throw InputError("daughter: generators are not As minus a union of faces");
  }
  return finish(parent, std::move(gens), std::move(thrown));
}

Analysis analyze(const Polytope& parent, const std::vector<Daughter>& daughters) {
  const int n = static_cast<int>(parent.ambient_dim());
  if (static_cast<int>(daughters.size()) != n) throw InputError("analyze: need one daughter per dimension");
  for (const auto& d : daughters)
    for (int g : d.generators)
      if (g < 0 || g >= static_cast<int>(parent.points().size()))
        throw InputError("analyze: daughter does not belong to the parent");
  Analysis a;
  a.semi_interlaced = true;
  std::vector<const Face*> sut;
  for (const auto& level : parent.faces())
    for (const auto& f : level) {
      int cnt = 0;
      for (const auto& d : daughters)
        if (meets(d.generators, f.points)) ++cnt;
      if (cnt < f.dim) a.semi_interlaced = false;
      if (cnt == f.dim) sut.push_back(&f);
    }
  std::sort(sut.begin(), sut.end(), [&](const Face* x, const Face* y) {
    if (x->dim != y->dim) return x->dim > y->dim;
    return vertex_key(parent, *x) < vertex_key(parent, *y);
  });
  a.sutures = std::move(sut);

  // interlaced: relative to U = Conv(∪ D_i), proper faces need dim+1 daughters
  std::vector<IVec> all;
  for (const auto& d : daughters)
    for (int g : d.generators) all.push_back(parent.points()[g]);
  Polytope u(all);
  a.interlaced = true;
  for (const auto& level : u.faces())
    for (const auto& f : level) {
      if (f.dim == u.dim() && u.dim() == n) continue;
      int cnt = 0;
      for (const auto& d : daughters) {
        bool hit = false;
        for (int g : d.generators)
          if (std::binary_search(f.points.begin(), f.points.end(), u.index_of(parent.points()[g]))) hit = true;
        if (hit) ++cnt;
      }
      if (cnt < f.dim + 1) a.interlaced = false;
    }
  return a;
}

Int zeta_volume(const Polytope& parent, const Face& s, const Face& sp) {
  const int d = s.dim - sp.dim;
  Polytope spp(parent.face_points(sp));
  Quotient q = quotient_along(spp);
  Polytope img(q.apply(parent.face_points(s)));
  Int whole = img.volume_in_dim(d);
  std::vector<IVec> rest;
  for (int i : s.points)
    if (!std::binary_search(sp.points.begin(), sp.points.end(), i)) rest.push_back(q.apply(parent.points()[i]));
  Int cut = rest.empty() ? Int(0) : Polytope(rest).volume_in_dim(d);
  return whole - cut;
}

Int restricted_mixed_volume(const Polytope& parent, const Face& s, const std::vector<Daughter>& daughters) {
  Polytope sp(parent.face_points(s));
  std::vector<Polytope> parts;
  for (const auto& d : daughters) {
    std::vector<IVec> loc;
    for (int g : d.generators)
      if (std::binary_search(s.points.begin(), s.points.end(), g))
        loc.push_back(sp.frame().local(parent.points()[g]));
    if (!loc.empty()) parts.emplace_back(std::move(loc));
  }
  if (static_cast<int>(parts.size()) != s.dim)
    throw InputError("restricted mixed volume: face is not a suture");
  return mixed_volume(parts);
}

SutureTable suture_system(const Polytope& parent, const std::vector<Daughter>& daughters) {
  Analysis an = analyze(parent, daughters);
  if (parent.dim() != static_cast<int>(parent.ambient_dim()))
    throw InputError("suture system: parent polytope must be full-dimensional");
  if (!an.semi_interlaced) throw InputError("suture system: daughters are not semi-interlaced");
  SutureTable t;
  const std::size_t m = an.sutures.size();
  for (const Face* f : an.sutures) {
    t.sutures.emplace_back(parent.face_points(*f));
    t.volumes.push_back(t.sutures.back().normalized_volume());
  }
  t.c.assign(m, std::vector<Int>(m, 0));
  for (std::size_t i = 0; i < m; ++i) {
    t.c[i][i] = 1;
    for (std::size_t j = 0; j < m; ++j) {
      const Face& a = *an.sutures[i];
      const Face& b = *an.sutures[j];
      if (i == j || b.dim >= a.dim || !subset(b.points, a.points)) continue;
      if (j < i) throw std::logic_error("suture order is not a linear extension of inclusion");
      t.c[i][j] = zeta_volume(parent, a, b);
    }
  }
  // 𝔈 = c^{-1}, column by column back-substitution
  t.inverse.assign(m, std::vector<Int>(m, 0));
  for (std::size_t col = 0; col < m; ++col)
    for (std::size_t ii = m; ii-- > 0;) {
      Int s = (ii == col) ? 1 : 0;
      for (std::size_t j = ii + 1; j < m; ++j) s -= t.c[ii][j] * t.inverse[j][col];
      t.inverse[ii][col] = s;
    }
  t.mixed.assign(m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) t.mixed[i] += t.inverse[i][j] * t.volumes[j];
  t.mixed_recursive.assign(m, 0);
  for (std::size_t i = m; i-- > 0;) {
    Int s = t.volumes[i];
    for (std::size_t j = i + 1; j < m; ++j) s -= t.c[i][j] * t.mixed_recursive[j];
    t.mixed_recursive[i] = s;
  }
  if (t.mixed != t.mixed_recursive) throw std::logic_error("suture system: inverse and recursion disagree");
  return t;
}

Int mv_semi_interlaced(const Polytope& parent, const std::vector<Daughter>& daughters) {
  // all daughters in a proper affine subspace
  if (parent.dim() < static_cast<int>(parent.ambient_dim())) {
    if (!analyze(parent, daughters).semi_interlaced)
      throw InputError("suture system: daughters are not semi-interlaced");
    return 0;
  }
  return suture_system(parent, daughters).mixed.front();
}

}  // namespace nl
