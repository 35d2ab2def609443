#include "newtonlab/nonneg.hpp"

#include <algorithm>
#include <bit>
#include <future>
#include <thread>

namespace nl {

std::vector<IVec> build_H(const std::vector<IVec>& fs, const std::vector<IVec>& gs, const Int& g_level) {
  if (fs.empty() || gs.empty()) throw InputError("empty support");
  if (!embeds(fs, gs)) throw InputError("Γ_f is not contained in Γ_g");
  if (!NewtonPolyhedron(gs).is_convenient()) throw ScopeError("Γ_g is not convenient");
  std::vector<IVec> hs;
  for (auto p : fs) {
    p.push_back(0);
    hs.push_back(std::move(p));
  }
  for (auto p : gs) {
    p.push_back(g_level);
    hs.push_back(std::move(p));
  }
  std::sort(hs.begin(), hs.end(), LexLess{});
  hs.erase(std::unique(hs.begin(), hs.end()), hs.end());
  return hs;
}

std::vector<IVec> vertex_reduce(const std::vector<IVec>& hs) {
  NewtonPolyhedron np(hs);
  std::vector<IVec> out;
  const auto& t = np.truncated();
  for (int i : t.vertices())
    if (np.is_original(i)) out.push_back(t.points()[i]);
  std::sort(out.begin(), out.end(), LexLess{});
  return out;
}

std::vector<SubspaceFacet> enumerate_IS(const std::vector<IVec>& hs) {
  const std::size_t n = hs.at(0).size() - 1;
  std::vector<unsigned> masks;
  for (unsigned m = 1; m < (1u << n); ++m) masks.push_back(m);
  std::stable_sort(masks.begin(), masks.end(),
                   [](unsigned a, unsigned b) { return std::popcount(a) > std::popcount(b); });
  std::vector<SubspaceFacet> out;
  for (unsigned m : masks) {
    auto fs = subspace_facets(hs, m);
    out.insert(out.end(), fs.begin(), fs.end());
  }
  return out;
}

std::optional<StaircaseRegion> essential_region(const std::vector<IVec>& hs, const SubspaceFacet& f) {
  const std::size_t n = hs.at(0).size() - 1;
  if (f.mask == (1u << n) - 1) return std::nullopt;
  TraceData t = trace_data(hs, f);
  return make_region(static_cast<int>(t.k), t.images, t.apex);
}

std::optional<Verification> classical_check(const std::vector<IVec>& hs, const Int& total) {
  const std::size_t n = hs.at(0).size() - 1;
  Int lo = hs[0][n];
  for (const auto& p : hs) lo = std::min(lo, Int(p[n]));
  if (lo != 0) return std::nullopt;
  std::vector<IVec> base, proj;
  for (const auto& p : hs) {
    IVec q(p.begin(), p.end() - 1);
    if (p[n] == 0) base.push_back(q);
    proj.push_back(std::move(q));
  }
  NewtonPolyhedron b(base), a(proj);
  if (!b.is_convenient() || !a.is_convenient()) return std::nullopt;
  Verification v;
  v.nu_f = newton_number(b);
  v.nu_g = newton_number(a);
  v.difference = v.nu_f - v.nu_g;
  v.match = v.difference == total;
  return v;
}

NonnegResult nonneg_formula(std::vector<IVec> hs, const NonnegOptions& opt) {
  if (hs.empty()) throw InputError("empty support");
  const std::size_t n = hs[0].size() - 1;
  if (!meets_axes(hs, n)) throw ScopeError("projected support misses a coordinate axis");
  std::sort(hs.begin(), hs.end(), LexLess{});
  hs.erase(std::unique(hs.begin(), hs.end()), hs.end());
  NonnegResult res;
  res.hs = opt.keep_support ? hs : vertex_reduce(hs);
  for (auto& f : enumerate_IS(res.hs)) {
    SummandRecord s;
    s.multiplicity = subproblem_multiplicity(f.points);
    if (auto r = essential_region(res.hs, f)) s.nu = region_newton_number(*r, opt.slices);
    s.contribution = s.nu * s.multiplicity;
    res.total += s.contribution;
    s.facet = std::move(f);
    res.summands.push_back(std::move(s));
  }
  res.verification = classical_check(res.hs, res.total);
  return res;
}

NonnegResult nonneg_formula(const std::vector<IVec>& fs, const std::vector<IVec>& gs,
                            const NonnegOptions& opt) {
  auto res = nonneg_formula(build_H(fs, gs), opt);
  Verification v;
  v.nu_f = newton_number(fs);
  v.nu_g = newton_number(gs);
  v.difference = v.nu_f - v.nu_g;
  v.match = v.difference == res.total;
  res.verification = v;
  return res;
}

JumpReport first_jump(const std::vector<IVec>& fs, unsigned threads) {
  if (fs.empty()) throw InputError("empty support");
  NewtonPolyhedron f(fs);
  if (!f.is_convenient()) throw ScopeError("Γ_f is not convenient");
  JumpReport rep;
  rep.base = newton_number(f);
  if (rep.base == 0) throw InputError("Newton number is 0: no positive jump");
  const std::size_t n = f.dim();
  // axis intercepts bound the complement
  IVec hi(n, Int(0));
  for (const auto& p : fs)
    for (std::size_t j = 0; j < n; ++j) hi[j] = std::max(hi[j], Int(p[j]));
  std::vector<IVec> cands;
  IVec p(n, Int(0));
  while (true) {
    bool zero = std::all_of(p.begin(), p.end(), [](const Int& x) { return x == 0; });
    if (!zero && !f.contains(p)) cands.push_back(p);
    std::size_t j = 0;
    while (j < n && p[j] == hi[j]) p[j++] = 0;
    if (j == n) break;
    ++p[j];
  }
  std::sort(cands.begin(), cands.end(), LexLess{});
  auto eval = [&](const IVec& g) {
    auto gs = fs;
    gs.push_back(g);
    return nonneg_formula(build_H(fs, gs)).total;
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  std::vector<Int> diffs(cands.size());
  std::vector<std::future<void>> jobs;
  for (unsigned t = 0; t < threads; ++t)
    jobs.push_back(std::async(std::launch::async, [&, t] {
      for (std::size_t i = t; i < cands.size(); i += threads) diffs[i] = eval(cands[i]);
    }));
  for (auto& j : jobs) j.get();
  bool found = false;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    rep.candidates.push_back({cands[i], diffs[i]});
    if (diffs[i] <= 0) continue;
    if (!found || diffs[i] < rep.jump) {
      rep.jump = diffs[i];
      rep.witnesses.clear();
      found = true;
    }
    if (diffs[i] == rep.jump) rep.witnesses.push_back(cands[i]);
  }
  if (!found) throw InputError("no candidate changes the Newton number");
  return rep;
}

std::vector<Polytope> local_polytopes(const std::vector<IVec>& pts) {
  const std::size_t d = pts.at(0).size();
  std::vector<Polytope> out;
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<IVec> q;
    for (const auto& p : pts)
      if (p[i] != 0) q.push_back(p);
    if (q.empty()) q.push_back(IVec(d, Int(0)));  // never happens for facets off E_i
    out.emplace_back(q);
  }
  return out;
}

std::optional<std::vector<int>> degenerate_subfamily(const std::vector<Polytope>& ps) {
  const int k = static_cast<int>(ps.size());
  std::optional<std::vector<int>> best;
  for (unsigned s = 1; s < (1u << k); ++s) {
    std::vector<IVec> dirs;
    std::vector<int> idx;
    for (int i = 0; i < k; ++i) {
      if (!(s >> i & 1u)) continue;
      idx.push_back(i);
      const auto& pts = ps[i].points();
      for (const auto& p : pts) dirs.push_back(sub(p, pts.front()));
    }
    IMat m(dirs.begin(), dirs.end());
    if (rank(m) < static_cast<int>(idx.size()) && (!best || idx.size() < best->size())) best = idx;
  }
  return best;
}

namespace {

std::string segment_text(const Polytope& p) {
  auto v = p.vertex_points();
  return "[" + to_string(v.front()) + "," + to_string(v.back()) + "]";
}

std::string evidence_for(const SummandRecord& s) {
  std::string head = to_string(finite(s.facet.v)) + " on " + subspace_name(s.facet.mask) + ": ";
  if (s.contribution != 0)
    return head + "contributes " + s.multiplicity.get_str() + "·" + s.nu.get_str();
  if (s.multiplicity == 0) {
    auto ps = local_polytopes(s.facet.points);
    if (auto sub = degenerate_subfamily(ps)) {
      std::vector<int> segs;
      for (int i : *sub)
        if (ps[i].dim() == 1) segs.push_back(i);
      if (sub->size() == 2 && segs.size() == 2)
        return head + "zero mixed volume: parallel segments " + segment_text(ps[segs[0]]) + " and " +
               segment_text(ps[segs[1]]);
      if (sub->size() == 1)
        return head + "zero mixed volume: local polytope " + std::to_string(sub->front() + 1) + " is a point";
      std::string t = head + "zero mixed volume: local polytopes";
      for (int i : *sub) t += " " + std::to_string(i + 1);
      return t + " span too few dimensions";
    }
    return head + "zero multiplicity";
  }
  return head + "essential region has Newton number 0";
}

}  // namespace

MonotonicityReport monotonicity_report(const std::vector<IVec>& fs, const std::vector<IVec>& gs,
                                       const NonnegOptions& opt) {
  MonotonicityReport rep;
  rep.formula = nonneg_formula(fs, gs, opt);
  rep.equal = std::all_of(rep.formula.summands.begin(), rep.formula.summands.end(),
                          [](const auto& s) { return s.contribution == 0; });
  for (const auto& s : rep.formula.summands) rep.evidence.push_back(evidence_for(s));
  if (!rep.equal)
    for (auto& a : solve_critical(build_H(fs, gs))) {
      if (a.multiplicity == 0) continue;
      rep.evidence.push_back("asymptotic " + to_string(a.covector) + " " + to_string(a.cls) +
                             " with multiplicity " + a.multiplicity.get_str());
      rep.positive.push_back(std::move(a));
    }
  return rep;
}

Int complement_identity_lhs(const std::vector<IVec>& hs, const SubspaceFacet& f) {
  const std::size_t n = hs.at(0).size() - 1;
  const unsigned full = (1u << n) - 1;
  Int sum = 1;
  for (unsigned e = full; e != f.mask; e = (e - 1) & full) {
    if ((e & f.mask) != f.mask) continue;
    // the facet seen from inside E'
    auto sub = restrict_to(hs, e, n, true);
    SubspaceFacet g = f;
    std::vector<int> pos = mask_coords(e, n);
    unsigned local = 0;
    for (std::size_t i = 0; i < pos.size(); ++i)
      if (f.mask >> pos[i] & 1u) local |= 1u << i;
    g.mask = local;
    if (e == full) {
      sum += region_newton_number(*essential_region(hs, f));
    } else {
      sum += region_newton_number(*essential_region(sub, g));
    }
  }
  return sum;
}

}  // namespace nl
