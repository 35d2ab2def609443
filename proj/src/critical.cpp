#include "newtonlab/critical.hpp"

#include <algorithm>
#include <bit>

#include "newtonlab/semi.hpp"

namespace nl {

std::vector<int> mask_coords(unsigned mask, std::size_t n) {
  std::vector<int> r;
  for (std::size_t j = 0; j < n; ++j)
    if (mask >> j & 1u) r.push_back(static_cast<int>(j));
  return r;
}

std::string subspace_name(unsigned mask) {
  std::string s = "{";
  bool first = true;
  for (int j = 0; j < 32; ++j)
    if (mask >> j & 1u) {
      if (!first) s += ",";
      s += std::to_string(j + 1);
      first = false;
    }
  return s + "}";
}

std::vector<SubspaceFacet> subspace_facets(const std::vector<IVec>& hs, unsigned mask) {
  const std::size_t n = hs.at(0).size() - 1;
  const std::size_t d = std::popcount(mask);
  auto sub = restrict_to(hs, mask, n, true);
  std::vector<SubspaceFacet> out;
  if (sub.empty()) return out;
  NewtonPolyhedron np(sub);
  for (const auto* fi : np.compact_facets()) {
    SubspaceFacet f;
    f.mask = mask;
    f.v.resize(d);
    for (std::size_t j = 0; j < d; ++j) f.v[j] = make_rat(fi->normal[j], fi->normal[d]);
    f.level = make_rat(fi->offset, fi->normal[d]);
    for (const auto& p : np.original_points(np.truncated().faces()[d][fi->index]))
      f.points.emplace_back(p.begin(), p.end() - 1);
    f.polytope = Polytope(f.points);
    out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return lex_cmp(a.v, b.v) < 0; });
  return out;
}

Classification classify_stratum(const Polytope& p) {
  const std::size_t d = p.ambient_dim();
  const unsigned full = (1u << d) - 1;
  Classification c{RecordClass::internal, {}};
  for (std::size_t j = 0; j < d; ++j) {
    bool flat = std::all_of(p.points().begin(), p.points().end(), [&](const IVec& q) { return q[j] == 0; });
    if (flat) {
      c.cls = RecordClass::raised;
      c.witnesses = {full & ~(1u << j)};
      return c;
    }
  }
  for (unsigned m = 0; m < full; ++m) {
    std::vector<IVec> on;
    for (const auto& q : p.points()) {
      bool in = true;
      for (std::size_t j = 0; j < d; ++j)
        if (!(m >> j & 1u) && q[j] != 0) in = false;
      if (in) on.push_back(q);
    }
    // P ∩ E' is a face of P, spanned by the support points on it
    if (!on.empty() && affine_dim(on) == std::popcount(m)) c.witnesses.push_back(m);
  }
  if (!c.witnesses.empty()) c.cls = RecordClass::semi_internal;
  return c;
}

Int subproblem_multiplicity(const std::vector<IVec>& pts) {
  Polytope parent(pts);
  const std::size_t d = parent.ambient_dim();
  if (parent.dim() != static_cast<int>(d)) throw InputError("subproblem facet is not full-dimensional");
  auto c = classify_stratum(parent);
  if (c.cls == RecordClass::raised) throw InputError("raised facet passed to subproblem_multiplicity");
  if (c.cls == RecordClass::internal) return parent.normalized_volume();
  std::vector<Daughter> ds;
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<IVec> gens;
    for (const auto& p : parent.points())
      if (p[i] != 0) gens.push_back(p);
    ds.push_back(daughter_from_points(parent, gens));
  }
  return suture_system(parent, ds).mixed.front();
}

TraceData trace_data(const std::vector<IVec>& hs, const SubspaceFacet& f) {
  const std::size_t n = hs.at(0).size() - 1;
  auto in = mask_coords(f.mask, n);
  std::vector<int> out;
  for (std::size_t j = 0; j < n; ++j)
    if (!(f.mask >> j & 1u)) out.push_back(static_cast<int>(j));
  if (out.empty()) throw InputError("trace: the facet spans the whole space");
  TraceData t;
  t.k = out.size();
  t.xi = lcm_denominators(f.v);
  Rat apex_level = f.level * t.xi;
  t.apex = IVec(t.k, Int(0));
  t.apex.push_back(apex_level.get_num());
  for (const auto& p : hs) {
    Rat lvl = p[n];
    for (std::size_t i = 0; i < in.size(); ++i) lvl += f.v[i] * p[in[i]];
    lvl *= t.xi;
    if (lvl.get_den() != 1) throw InputError("trace image off the lattice");
    IVec y;
    bool off = false;
    for (int j : out) {
      y.push_back(p[j]);
      if (p[j] != 0) off = true;
    }
    y.push_back(lvl.get_num());
    t.images.push_back(y);
    if (off) t.support.push_back(std::move(y));
  }
  std::sort(t.images.begin(), t.images.end(), LexLess{});
  t.images.erase(std::unique(t.images.begin(), t.images.end()), t.images.end());
  std::sort(t.support.begin(), t.support.end(), LexLess{});
  t.support.erase(std::unique(t.support.begin(), t.support.end()), t.support.end());
  return t;
}

std::vector<IVec> drop_projection(const std::vector<IVec>& hs, unsigned mask) {
  const std::size_t n = hs.at(0).size() - 1;
  std::vector<IVec> r;
  for (const auto& p : hs) {
    IVec q;
    bool zero = true;
    for (std::size_t j = 0; j < n; ++j)
      if (!(mask >> j & 1u)) {
        q.push_back(p[j]);
        if (p[j] != 0) zero = false;
      }
    if (!zero) r.push_back(std::move(q));
  }
  std::sort(r.begin(), r.end(), LexLess{});
  r.erase(std::unique(r.begin(), r.end()), r.end());
  return r;
}

Int milnor_generic(const std::vector<IVec>& support, std::size_t k) {
  if (k == 0) return 1;
  for (const auto& p : support) {
    int ones = 0, nz = 0;
    for (const auto& x : p) {
      if (x != 0) ++nz;
      if (x == 1) ++ones;
    }
    if (nz == 1 && ones == 1) return 0;  // a linear term
  }
  if (support.empty()) throw ScopeError("empty support for a Milnor number");
  NewtonPolyhedron np(support);
  if (!np.is_convenient()) throw ScopeError("support is not convenient: infinite Milnor number");
  return newton_number(np);
}

namespace {

AsymptoticRecord embed(const ExtCovector& on_e, const ExtCovector& tail, unsigned mask, std::size_t n) {
  AsymptoticRecord r;
  r.covector.resize(n);
  for (std::size_t j = 0, ii = 0, ti = 0; j < n; ++j)
    r.covector[j] = (mask >> j & 1u) ? on_e[ii++] : tail[ti++];
  r.subspace = mask;
  for (const auto& x : on_e) r.base.push_back(x.value);
  return r;
}

std::vector<AsymptoticRecord> nondropped(const std::vector<IVec>& hs);

// Asymptotics raising from a facet of H_E with multiplicity m.
std::vector<AsymptoticRecord> raised_from(const std::vector<IVec>& hs, const SubspaceFacet& f,
                                          const Int& m) {
  const std::size_t n = hs.at(0).size() - 1;
  TraceData t = trace_data(hs, f);
  std::vector<AsymptoticRecord> rs;
  for (const auto& sub : nondropped(t.support)) {
    RVec u;
    for (const auto& x : sub.covector) u.push_back(x.value);
    u.push_back(1);
    Rat a = dot(u, t.apex);
    bool ok = true;
    for (const auto& y : t.images)
      if (y != t.apex && dot(u, y) <= a) ok = false;
    if (!ok) continue;
    ExtCovector tail;
    for (std::size_t j = 0; j + 1 < u.size(); ++j) tail.push_back({false, u[j] / t.xi});
    auto r = embed(finite(f.v), tail, f.mask, n);
    r.cls = RecordClass::raised;
    r.multiplicity = m * sub.multiplicity;
    r.dual = f.polytope.vertex_points();
    if (r.multiplicity > 0) rs.push_back(std::move(r));
  }
  return rs;
}

std::vector<AsymptoticRecord> nondropped(const std::vector<IVec>& hs) {
  const std::size_t n = hs.at(0).size() - 1;
  const unsigned full = (1u << n) - 1;
  std::vector<AsymptoticRecord> rs;
  for (unsigned mask = 1; mask <= full; ++mask) {
    for (const auto& f : subspace_facets(hs, mask)) {
      Int m = subproblem_multiplicity(f.points);
      if (m == 0) continue;
      if (mask == full) {
        AsymptoticRecord r;
        r.covector = finite(f.v);
        r.cls = classify_stratum(f.polytope).cls;
        r.multiplicity = m;
        r.subspace = mask;
        r.dual = f.polytope.vertex_points();
        rs.push_back(std::move(r));
      } else {
        auto more = raised_from(hs, f, m);
        rs.insert(rs.end(), more.begin(), more.end());
      }
    }
  }
  return rs;
}

}  // namespace

std::vector<AsymptoticRecord> solve_critical(const std::vector<IVec>& hs) {
  if (hs.empty()) throw InputError("empty support");
  const std::size_t n = hs[0].size() - 1;
  if (!meets_axes(hs, n)) throw ScopeError("projected support misses a coordinate axis");
  const unsigned full = (1u << n) - 1;
  auto rs = nondropped(hs);
  // dropped: every asymptotic of a coordinate subproblem, times a Milnor number
  for (unsigned mask = 1; mask < full; ++mask) {
    const std::size_t k = n - std::popcount(mask);
    Int mu;
    try {
      mu = milnor_generic(drop_projection(hs, mask), k);
    } catch (const ScopeError& e) {
      throw ScopeError(std::string(e.what()) + " (subspace mask " + std::to_string(mask) + ")");
    }
    if (mu == 0) continue;
    for (const auto& w : nondropped(restrict_to(hs, mask, n, true))) {
      auto r = embed(w.covector, ExtCovector(k, ExtRat::infinity()), mask, n);
      r.cls = RecordClass::dropped;
      r.multiplicity = w.multiplicity * mu;
      r.dual = w.dual;
      rs.push_back(std::move(r));
    }
  }
  sort_records(rs);
  return rs;
}

Int total_multiplicity(const std::vector<AsymptoticRecord>& rs) {
  Int t = 0;
  for (const auto& r : rs) t += r.multiplicity;
  return t;
}

}  // namespace nl
