#include "newtonlab/system.hpp"

#include <algorithm>

namespace nl {

std::string to_string(const ExtRat& x) { return x.inf ? "inf" : to_string(x.value); }

std::string to_string(const ExtCovector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += to_string(v[i]);
  }
  return s + ")";
}

ExtRat parse_ext(const std::string& s) {
  if (s == "inf") return ExtRat::infinity();
  Rat r;
  if (r.set_str(s, 10) != 0) throw InputError("bad rational '" + s + "'");
  r.canonicalize();
  return {false, r};
}

bool ext_less(const ExtCovector& a, const ExtCovector& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] == b[i]) continue;
    if (a[i].inf) return false;
    if (b[i].inf) return true;
    return a[i].value < b[i].value;
  }
  return a.size() < b.size();
}

ExtCovector finite(const RVec& v) {
  ExtCovector r;
  for (const auto& x : v) r.push_back({false, x});
  return r;
}

std::string to_string(RecordClass c) {
  switch (c) {
    case RecordClass::internal: return "internal";
    case RecordClass::semi_internal: return "semi-internal";
    case RecordClass::raised: return "raised";
    case RecordClass::dropped: return "dropped";
  }
  return "?";
}

void sort_records(std::vector<AsymptoticRecord>& rs) {
  std::stable_sort(rs.begin(), rs.end(), [](const auto& a, const auto& b) {
    return ext_less(a.covector, b.covector);
  });
}

namespace {

std::pair<Rat, std::vector<IVec>> argmin(const std::vector<IVec>& pts, const RVec& v) {
  std::vector<IVec> best;
  Rat bv;
  for (const auto& p : pts) {
    Rat x = dot(v, p);
    if (best.empty() || x < bv) {
      best = {p};
      bv = x;
    } else if (x == bv) {
      best.push_back(p);
    }
  }
  return {bv, best};
}

}  // namespace

RhoData rho(const std::vector<IVec>& fs, const std::vector<IVec>& gs, const RVec& v) {
  return {argmin(fs, v).first, argmin(gs, v).first};
}

RVec normalize_N(const RVec& v, const std::vector<IVec>& fs, const std::vector<IVec>& gs) {
  RhoData r = rho(fs, gs, v);
  Rat d = r.rho_f - r.rho_g;
  if (d == 0) throw InputError("faces at equal level: no scaled asymptotic");
  RVec out = v;
  for (auto& x : out) x /= d;
  return out;
}

bool embeds(const std::vector<IVec>& fs, const std::vector<IVec>& gs) {
  NewtonPolyhedron g(gs);
  for (const auto& f : fs)
    if (!g.contains(f)) return false;
  return true;
}

bool meets_axes(const std::vector<IVec>& hs, std::size_t n) {
  for (std::size_t j = 0; j < n; ++j) {
    bool hit = false;
    for (const auto& p : hs) {
      bool axis = p[j] != 0;
      for (std::size_t i = 0; i < n; ++i)
        if (i != j && p[i] != 0) axis = false;
      if (axis) hit = true;
    }
    if (!hit) return false;
  }
  return true;
}

std::vector<Stratum> zero_strata(const std::vector<IVec>& fs, const std::vector<IVec>& gs) {
  std::vector<IVec> sums;
  for (const auto& f : fs)
    for (const auto& g : gs) sums.push_back(add(f, g));
  NewtonPolyhedron sum(sums);
  std::vector<Stratum> out;
  for (const auto* fi : sum.compact_facets()) {
    Stratum s;
    s.direction = to_rat(fi->normal);
    auto [rf, ff] = argmin(fs, s.direction);
    auto [rg, gg] = argmin(gs, s.direction);
    s.face_f = ff;
    s.face_g = gg;
    std::vector<IVec> pts = ff;
    pts.insert(pts.end(), gg.begin(), gg.end());
    s.box = Polytope(pts);
    s.allowable = rf > rg;
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<AsymptoticRecord> solve_system(const std::vector<IVec>& fs, const std::vector<IVec>& gs) {
  if (fs.empty() || gs.empty()) throw InputError("empty support");
  const std::size_t n = fs[0].size();
  if (!embeds(fs, gs)) throw InputError("Γ_f is not contained in Γ_g");
  if (!NewtonPolyhedron(gs).is_convenient()) throw ScopeError("Γ_g is not convenient");
  std::vector<AsymptoticRecord> rs;
  for (auto& s : zero_strata(fs, gs)) {
    if (!s.allowable) continue;
    AsymptoticRecord r;
    r.covector = finite(normalize_N(s.direction, fs, gs));
    r.cls = RecordClass::internal;
    r.multiplicity = s.box.volume_in_dim(static_cast<int>(n));
    r.subspace = (1u << n) - 1;
    r.dual = s.box.vertex_points();
    rs.push_back(std::move(r));
  }
  sort_records(rs);
  return rs;
}

std::vector<AsymptoticRecord> solve_system_generalized(const std::vector<IVec>& hs) {
  if (hs.empty()) throw InputError("empty support");
  const std::size_t n = hs[0].size() - 1;
  if (!meets_axes(hs, n)) throw ScopeError("projected support misses a coordinate axis");
  NewtonPolyhedron h(hs);
  std::vector<AsymptoticRecord> rs;
  for (const auto* fi : h.compact_facets()) {
    AsymptoticRecord r;
    RVec v(n);
    for (std::size_t j = 0; j < n; ++j) v[j] = make_rat(fi->normal[j], fi->normal[n]);
    r.covector = finite(v);
    auto pts = h.original_points(h.truncated().faces()[n][fi->index]);
    std::vector<IVec> proj;
    for (const auto& p : pts) proj.emplace_back(p.begin(), p.end() - 1);
    Polytope lp(proj);
    r.multiplicity = lp.volume_in_dim(static_cast<int>(n));
    r.subspace = (1u << n) - 1;
    r.dual = lp.vertex_points();
    rs.push_back(std::move(r));
  }
  sort_records(rs);
  return rs;
}

}  // namespace nl

namespace nl {

namespace {

// Γ ∩ [0,B]^n as a polytope: each point with any subset of coordinates raised to B.
Polytope clipped(const std::vector<IVec>& pts, const Int& b) {
  const std::size_t n = pts.at(0).size();
  std::vector<IVec> out;
  for (const auto& p : pts)
    for (unsigned s = 0; s < (1u << n); ++s) {
      IVec q = p;
      for (std::size_t j = 0; j < n; ++j)
        if (s >> j & 1u) q[j] = b;
      out.push_back(std::move(q));
    }
  return Polytope(std::move(out));
}

}  // namespace

Int difference_volume(const std::vector<IVec>& fs, const std::vector<IVec>& gs) {
  if (!embeds(fs, gs)) throw InputError("Γ_f is not contained in Γ_g");
  Int b = 1;
  for (const auto* s : {&fs, &gs})
    for (const auto& p : *s)
      for (const auto& x : p) b = std::max(b, Int(x + 1));
  const int n = static_cast<int>(fs.at(0).size());
  return clipped(gs, b).volume_in_dim(n) - clipped(fs, b).volume_in_dim(n);
}

}  // namespace nl
