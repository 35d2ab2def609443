#include <algorithm>
#include <filesystem>

#include "generators.hpp"
#include "newtonlab/critical.hpp"
#include "newtonlab/io.hpp"
#include "newtonlab/nonneg.hpp"
#include "support.hpp"

using namespace nl;
namespace fs = std::filesystem;

namespace {

// Instances with a lifted support the nonneg formula accepts.
std::vector<std::pair<std::string, Instance>> golden_instances() {
  std::vector<std::pair<std::string, Instance>> out;
  for (const char* stem : {"running_example", "roots_planar", "planar_critical", "spatial_pair", "equal_pair_a", "equal_pair_b"})
    out.emplace_back(stem, load_instance((fs::path(NL_SOURCE_DIR) / "data" / (std::string(stem) + ".json")).string()));
  return out;
}

std::vector<Polytope> permuted(std::vector<Polytope> ps, nlgen::Gen& gen) {
  for (std::size_t i = ps.size(); i > 1; --i) std::swap(ps[i - 1], ps[gen.uniform(0, static_cast<int>(i) - 1)]);
  return ps;
}

}  // namespace

TEST_CASE("random convenient pairs: nonneg total equals the Newton number difference") {
  nlgen::Gen gen(20240901);
  int strict = 0;
  for (int it = 0; it < 250; ++it) {
    auto [f, g] = gen.embedded_pair(gen.uniform(2, 3), 6);
    CAPTURE(nltest::str(f.front()));
    auto r = nonneg_formula(f, g);
    REQUIRE(r.verification);
    CHECK(r.total == newton_number(f) - newton_number(g));
    CHECK(r.verification->match);
    for (const auto& s : r.summands) {
      CHECK(s.multiplicity >= 0);
      CHECK(s.nu >= 0);
    }
    strict += r.total > 0;
  }
  // the generator is not degenerate
  CHECK(strict > 100);
}

TEST_CASE("random pairs: root multiplicities fill the difference volume") {
  nlgen::Gen gen(7771);
  for (int it = 0; it < 250; ++it) {
    auto [f, g] = gen.embedded_pair(gen.uniform(2, 3), 6);
    Int total = 0;
    for (const auto& r : solve_system(f, g)) total += r.multiplicity;
    CHECK(total == difference_volume(f, g));
  }
}

TEST_CASE("random pairs: critical asymptotics sum to the nonneg total") {
  nlgen::Gen gen(4242);
  for (int it = 0; it < 120; ++it) {
    auto [f, g] = gen.embedded_pair(gen.uniform(2, 3), 5);
    auto h = build_H(f, g);
    CHECK(total_multiplicity(solve_critical(h)) == nonneg_formula(h).total);
  }
}

TEST_CASE("random pairs: slice modes and kept support agree on the total") {
  nlgen::Gen gen(99);
  NonnegOptions closure, keep;
  closure.slices = SliceMode::closure;
  keep.keep_support = true;
  for (int it = 0; it < 60; ++it) {
    auto [f, g] = gen.embedded_pair(gen.uniform(2, 3), 5);
    Int base = nonneg_formula(f, g).total;
    CHECK(nonneg_formula(f, g, closure).total == base);
    CHECK(nonneg_formula(f, g, keep).total == base);
  }
}

TEST_CASE("mixed volume: diagonal, symmetry, translation, unimodular invariance") {
  nlgen::Gen gen(31337);
  for (int it = 0; it < 40; ++it) {
    std::size_t n = gen.uniform(1, it < 30 ? 3 : 4);
    std::vector<Polytope> ps;
    for (std::size_t i = 0; i < n; ++i) ps.push_back(gen.any_polytope(n, 5));
    Int mv = mixed_volume(ps);
    CHECK(mv >= 0);
    CHECK(mixed_volume(permuted(ps, gen)) == mv);

    std::vector<Polytope> shifted;
    for (const auto& p : ps) shifted.push_back(translate(p, gen.point(n, -3, 3)));
    CHECK(mixed_volume(shifted) == mv);

    auto m = gen.unimodular(n);
    std::vector<Polytope> moved;
    for (const auto& p : ps) moved.push_back(nlgen::transform(p, m, gen.point(n, -2, 2)));
    CHECK(mixed_volume(moved) == mv);

    Polytope d = gen.polytope(n, 5);
    CHECK(mixed_volume(std::vector<Polytope>(n, d)) == d.normalized_volume());
  }
}

TEST_CASE("mixed volume: monotone under inclusion") {
  nlgen::Gen gen(555);
  for (int it = 0; it < 40; ++it) {
    std::size_t n = gen.uniform(2, it < 30 ? 3 : 4);
    std::vector<Polytope> ps, bigger;
    for (std::size_t i = 0; i < n; ++i) {
      auto p = gen.any_polytope(n, 5);
      auto pts = p.points();
      pts.push_back(gen.point(n, 0, 5));
      ps.push_back(std::move(p));
      bigger.emplace_back(pts);
    }
    CHECK(mixed_volume(ps) <= mixed_volume(bigger));
  }
}

TEST_CASE("mixed volume: multilinear under Minkowski sums") {
  nlgen::Gen gen(8080);
  for (int it = 0; it < 20; ++it) {
    std::size_t n = gen.uniform(2, 3);
    std::vector<Polytope> ps;
    for (std::size_t i = 0; i < n; ++i) ps.push_back(gen.any_polytope(n, 4));
    auto q = gen.any_polytope(n, 4);
    auto with_q = ps;
    with_q[0] = q;
    auto summed = ps;
    summed[0] = minkowski_sum(ps[0], q);
    CHECK(mixed_volume(summed) == mixed_volume(ps) + mixed_volume(with_q));
  }
}

TEST_CASE("semi-interlaced coordinate families: both paths and polarization") {
  nlgen::Gen gen(2718);
  for (int it = 0; it < 60; ++it) {
    std::size_t n = gen.uniform(2, it < 45 ? 3 : 4);
    auto fam = gen.coordinate_family(n, it < 45 ? 4 : 3);
    auto an = analyze(fam.parent, fam.daughters);
    REQUIRE(an.semi_interlaced);
    auto t = suture_system(fam.parent, fam.daughters);
    CHECK(t.mixed == t.mixed_recursive);
    std::vector<Polytope> ds;
    for (const auto& d : fam.daughters) ds.push_back(d.polytope);
    CHECK(t.mixed.front() == mixed_volume(ds));
    CHECK(mv_semi_interlaced(fam.parent, fam.daughters) == t.mixed.front());
  }
}

TEST_CASE("complement identity on the golden instances") {
  int checked = 0;
  for (const auto& [stem, in] : golden_instances()) {
    CAPTURE(stem);
    auto r = nonneg_formula(in.lifted());
    for (const auto& s : r.summands)
      if (auto reg = essential_region(r.hs, s.facet)) {
        CHECK(complement_identity_lhs(r.hs, s.facet) == reg->complement_volume);
        ++checked;
      }
  }
  CHECK(checked >= 10);
}

TEST_CASE("moving g to level two keeps the golden totals") {
  for (const auto& [stem, in] : golden_instances()) {
    if (!in.has_pair()) continue;
    CAPTURE(stem);
    CHECK(nonneg_formula(build_H(*in.f, *in.g, 2)).total == nonneg_formula(build_H(*in.f, *in.g)).total);
  }
}

TEST_CASE("critical asymptotics agree with the nonneg formula on the golden instances") {
  for (const auto& [stem, in] : golden_instances()) {
    CAPTURE(stem);
    auto h = in.lifted();
    CHECK(total_multiplicity(solve_critical(h)) == nonneg_formula(h).total);
  }
}
