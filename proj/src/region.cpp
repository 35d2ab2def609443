#include "newtonlab/region.hpp"

#include <algorithm>
#include <map>

#include "newtonlab/lp.hpp"

namespace nl {

namespace {

constexpr int kOut = -1, kUnder = -2, kBoundary = -3;

IVec drop_last(const IVec& p) { return IVec(p.begin(), p.end() - 1); }

Polytope project(const std::vector<IVec>& pts) {
  std::vector<IVec> q;
  for (const auto& p : pts) q.push_back(drop_last(p));
  return Polytope(std::move(q));
}

// Internal state shared by the classification and the closure slices.
struct Complex {
  int k;
  std::vector<IVec> images;
  IVec apex;
  std::vector<IVec> tsup;
  std::optional<NewtonPolyhedron> np;
  std::vector<int> cell_of_facet;  // truncated facet -> bounded cell index
  std::vector<const Face*> compact;
  std::map<Index, bool> selected;  // compact face point set -> selected
  std::vector<CellLabel> labels;
  std::vector<Polytope> cells;
  bool has_under = false;
  bool under_upper = false;
  Int under_vol = 0;

  int node_of_facet(int f) const {
    const IVec& a = np->truncated().facets()[f].normal;
    if (cell_of_facet[f] >= 0) return cell_of_facet[f];
    bool eps_pos = a[k] > 0, rest_pos = true;
    for (int j = 0; j < k; ++j)
      if (a[j] <= 0) rest_pos = false;
    if (eps_pos) return kOut;
    if (rest_pos) return has_under ? kUnder : kBoundary;
    return kBoundary;
  }

  bool is_selected(const Face& g) const {
    const auto& pts = np->truncated().points();
    const auto vs = np->truncated().face_vertices(g);
    LinearSystem sys;
    sys.nvars = k + 1;
    const IVec& g0 = vs[0];
    for (std::size_t i = 1; i < vs.size(); ++i) sys.add_eq(to_rat(sub(vs[i], g0)), 0);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (!np->is_original(static_cast<int>(i))) continue;
      if (std::binary_search(g.points.begin(), g.points.end(), static_cast<int>(i))) continue;
      sys.add_ge(to_rat(sub(pts[i], g0)), 1);
    }
    for (int j = 0; j <= k; ++j) {
      RVec e(k + 1, 0);
      e[j] = 1;
      sys.add_ge(e, 1);
    }
    for (const auto& y : images)
      if (y != apex) sys.add_ge(to_rat(sub(y, apex)), 1);
    return feasible_point(sys).has_value();
  }

  void build() {
    for (const auto& y : images)
      if (y != apex) tsup.push_back(y);
    if (tsup.empty()) throw ScopeError("essential region: nothing beside the apex");
    np.emplace(tsup);
    const auto& tr = np->truncated();
    cell_of_facet.assign(tr.facets().size(), -1);
    for (const auto& f : np->facets())
      if (f.compact) {
        cell_of_facet[f.index] = static_cast<int>(cells.size());
        cells.push_back(project(np->original_points(tr.faces()[k][f.index])));
      }
    compact = np->compact_faces();
    for (const Face* g : compact) selected[g->points] = is_selected(*g);

    // under part: orthant below π(T)
    std::vector<IVec> proj;
    bool origin = false;
    for (const auto& y : tsup) {
      proj.push_back(drop_last(y));
      if (std::all_of(proj.back().begin(), proj.back().end(), [](const Int& x) { return x == 0; }))
        origin = true;
    }
    has_under = !origin && k > 0;
    if (has_under) under_vol = under_volume(proj, k);

    // flood fill from the unbounded cells
    std::vector<std::vector<int>> adj(cells.size() + 2);
    auto slot = [&](int node) { return node >= 0 ? node : static_cast<int>(cells.size()) - node - 1; };
    // slot(kOut) = cells.size(), slot(kUnder) = cells.size() + 1
    for (const Face* r : compact) {
      if (r->dim != k - 1 || selected.at(r->points)) continue;
      std::vector<int> nodes;
      for (int f : r->facets) {
        int nd = node_of_facet(f);
        if (nd != kBoundary) nodes.push_back(nd);
      }
      for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = i + 1; j < nodes.size(); ++j) {
          adj[slot(nodes[i])].push_back(slot(nodes[j]));
          adj[slot(nodes[j])].push_back(slot(nodes[i]));
        }
    }
    labels.assign(cells.size(), CellLabel::lower);
    std::vector<char> shadow(cells.size() + 2, 0), seen(cells.size() + 2, 0);
    for (const auto& f : np->facets())
      if (f.compact && selected.at(tr.faces()[k][f.index].points)) {
        shadow[cell_of_facet[f.index]] = 1;
        labels[cell_of_facet[f.index]] = CellLabel::shadow;
      }
    std::vector<int> stack{slot(kOut)};
    seen[slot(kOut)] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : adj[x])
        if (!seen[y] && !shadow[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
    }
    for (std::size_t c = 0; c < cells.size(); ++c)
      if (seen[c]) labels[c] = CellLabel::upper;
    under_upper = has_under && seen[slot(kUnder)];
  }
};

Complex build_complex(int k, const std::vector<IVec>& images, const IVec& apex) {
  Complex cx{k, images, apex, {}, {}, {}, {}, {}, {}, {}, false, false, 0};
  cx.build();
  return cx;
}

void restrict_data(const StaircaseRegion& r, unsigned mask, std::vector<IVec>& imgs, IVec& apex) {
  imgs = restrict_to(r.images, mask, r.k, true);
  apex = restrict_to({r.apex}, mask, r.k, true).front();
}

}  // namespace

StaircaseRegion make_region(int k, std::vector<IVec> images, IVec apex) {
  if (apex.size() != static_cast<std::size_t>(k + 1)) throw InputError("region: apex dimension");
  for (int j = 0; j < k; ++j)
    if (apex[j] != 0) throw InputError("region: apex must lie on the ε axis");
  if (std::find(images.begin(), images.end(), apex) == images.end())
    throw InputError("region: apex must be one of the images");
  StaircaseRegion r;
  r.k = k;
  r.images = std::move(images);
  r.apex = std::move(apex);
  if (k == 0) {
    r.complement_volume = 1;
    return r;
  }
  Complex cx = build_complex(k, r.images, r.apex);
  r.bound = cx.np->bound();
  for (const Face* g : cx.compact)
    if (cx.selected.at(g->points)) r.shadow.push_back(project(cx.np->original_points(*g)));
  Int vol = 0;
  for (std::size_t c = 0; c < cx.cells.size(); ++c) {
    r.cells.push_back({cx.cells[c], cx.labels[c]});
    if (cx.labels[c] != CellLabel::upper) vol += cx.cells[c].normalized_volume();
  }
  r.has_under = cx.has_under;
  r.under_volume = cx.under_vol;
  r.under_label = cx.under_upper ? CellLabel::upper : CellLabel::lower;
  if (r.has_under && !cx.under_upper) vol += cx.under_vol;
  r.complement_volume = vol;
  return r;
}

StaircaseRegion region_from_newton(const std::vector<IVec>& support) {
  if (support.empty()) throw InputError("empty support");
  const std::size_t k = support[0].size();
  std::vector<IVec> imgs;
  for (const auto& s : support) {
    IVec y = s;
    y.push_back(1);
    imgs.push_back(std::move(y));
  }
  IVec apex(k + 1, 0);
  imgs.push_back(apex);
  return make_region(static_cast<int>(k), std::move(imgs), std::move(apex));
}

Int slice_volume(const StaircaseRegion& r, unsigned mask, SliceMode mode) {
  const int k = r.k;
  const unsigned full = (1u << k) - 1;
  if (mask == full) return r.complement_volume;
  if (mask == 0) return 1;
  std::vector<IVec> imgs;
  IVec apex;
  restrict_data(r, mask, imgs, apex);
  const int j = __builtin_popcount(mask);
  if (mode == SliceMode::rerun) return make_region(j, imgs, apex).complement_volume;

  // closure: pieces of the slice are compact lower facets of T ∩ slice,
  // labelled by the full-dimensional cells around them
  Complex cx = build_complex(k, r.images, r.apex);
  const auto& tr = cx.np->truncated();
  std::vector<IVec> tsub;
  for (const auto& y : imgs)
    if (y != apex) tsub.push_back(y);
  NewtonPolyhedron sub(tsub);
  Int vol = 0;
  for (const auto& f : sub.facets()) {
    if (!f.compact) continue;
    auto pts_sub = sub.original_points(sub.truncated().faces()[j][f.index]);
    // embed back into the full coordinates
    Index idx;
    std::vector<IVec> lifted;
    for (const auto& q : pts_sub) {
      IVec p(k + 1, 0);
      int t = 0;
      for (int c = 0; c < k; ++c)
        if (mask >> c & 1u) p[c] = q[t++];
      p[k] = q[t];
      idx.push_back(tr.index_of(p));
      lifted.push_back(p);
    }
    std::sort(idx.begin(), idx.end());
    const Face* face = tr.find_face(idx);
    if (!face) throw std::logic_error("closure slice: face not found");
    bool in = cx.selected.count(face->points) && cx.selected.at(face->points);
    if (!in) {
      bool any_upper = false, any_lower = false;
      for (int fi : face->facets) {
        int nd = cx.node_of_facet(fi);
        if (nd == kBoundary) continue;
        bool up = nd == kOut || (nd == kUnder ? cx.under_upper : cx.labels[nd] == CellLabel::upper);
        (up ? any_upper : any_lower) = true;
      }
      in = !any_upper;
    }
    if (in) vol += project(pts_sub).normalized_volume();
  }
  if (cx.has_under && !cx.under_upper) {
    std::vector<IVec> proj;
    for (const auto& y : tsub) proj.push_back(drop_last(y));
    vol += under_volume(proj, j);
  }
  return vol;
}

Int region_newton_number(const StaircaseRegion& r, SliceMode mode) {
  const int k = r.k;
  if (k == 0) return 1;
  Int nu = 0;
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    Int v = slice_volume(r, mask, mode);
    if ((k - __builtin_popcount(mask)) % 2) nu -= v;
    else nu += v;
  }
  return nu;
}

}  // namespace nl
