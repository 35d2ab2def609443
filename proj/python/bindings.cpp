#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <limits>
#include <sstream>

#include "cli.hpp"
#include "newtonlab/critical.hpp"
#include "newtonlab/nonneg.hpp"
#include "newtonlab/semi.hpp"

namespace py = pybind11;
using namespace nl;

namespace {

// Python ints of any size pass through their decimal form.
Int to_int(const py::handle& h) {
  if (!PyLong_Check(h.ptr())) throw py::type_error("coordinates must be integers");
  return Int(py::str(h).cast<std::string>(), 10);
}

py::int_ from_int(const Int& x) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(x.get_str().c_str(), nullptr, 10));
}

std::vector<IVec> to_points(const py::iterable& xs) {
  std::vector<IVec> out;
  for (auto p : xs) {
    IVec v;
    for (auto c : py::reinterpret_borrow<py::iterable>(p)) v.push_back(to_int(c));
    out.push_back(std::move(v));
  }
  return out;
}

py::list from_points(const std::vector<IVec>& ps) {
  py::list out;
  for (const auto& p : ps) {
    py::tuple t(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) t[i] = from_int(p[i]);
    out.append(t);
  }
  return out;
}

py::object fraction(const Rat& q) {
  return py::module_::import("fractions").attr("Fraction")(from_int(q.get_num()), from_int(q.get_den()));
}

py::tuple from_covector(const ExtCovector& v) {
  py::tuple t(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    t[i] = v[i].inf ? py::object(py::float_(std::numeric_limits<double>::infinity())) : fraction(v[i].value);
  return t;
}

py::tuple from_rvec(const RVec& v) {
  py::tuple t(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) t[i] = fraction(v[i]);
  return t;
}

py::list from_records(const std::vector<AsymptoticRecord>& rs) {
  py::list out;
  for (const auto& r : rs) {
    py::dict d;
    d["covector"] = from_covector(r.covector);
    d["class"] = to_string(r.cls);
    d["multiplicity"] = from_int(r.multiplicity);
    out.append(d);
  }
  return out;
}

py::dict from_nonneg(const NonnegResult& r) {
  py::dict d;
  py::list summands;
  for (const auto& s : r.summands) {
    py::dict x;
    x["subspace"] = subspace_name(s.facet.mask);
    x["covector"] = from_rvec(s.facet.v);
    x["multiplicity"] = from_int(s.multiplicity);
    x["nu"] = from_int(s.nu);
    x["contribution"] = from_int(s.contribution);
    summands.append(x);
  }
  d["summands"] = summands;
  d["total"] = from_int(r.total);
  if (r.verification) {
    py::dict v;
    v["nu_f"] = from_int(r.verification->nu_f);
    v["nu_g"] = from_int(r.verification->nu_g);
    v["difference"] = from_int(r.verification->difference);
    v["match"] = r.verification->match;
    d["verification"] = v;
  } else {
    d["verification"] = py::none();
  }
  return d;
}

NonnegOptions options(bool keep_support, const std::string& slices) {
  NonnegOptions o;
  o.keep_support = keep_support;
  if (slices == "closure") o.slices = SliceMode::closure;
  else if (slices != "rerun") throw py::value_error("slices must be 'rerun' or 'closure'");
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Newton polyhedra, mixed volumes and asymptotics";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<ScopeError>(m, "ScopeError", PyExc_ValueError);

  m.def(
      "newton_number", [](const py::iterable& f) { return from_int(newton_number(to_points(f))); }, py::arg("f"));
  m.def(
      "normalized_volume", [](const py::iterable& p) { return from_int(Polytope(to_points(p)).normalized_volume()); },
      py::arg("points"));
  m.def(
      "mixed_volume",
      [](const py::iterable& polys) {
        std::vector<Polytope> ps;
        for (auto p : polys) ps.emplace_back(to_points(py::reinterpret_borrow<py::iterable>(p)));
        return from_int(mixed_volume(ps));
      },
      py::arg("polytopes"));
  m.def(
      "build_H",
      [](const py::iterable& f, const py::iterable& g, const py::int_& level) {
        return from_points(build_H(to_points(f), to_points(g), to_int(level)));
      },
      py::arg("f"), py::arg("g"), py::arg("g_level") = 1);
  m.def(
      "solve_system", [](const py::iterable& f, const py::iterable& g) {
        return from_records(solve_system(to_points(f), to_points(g)));
      },
      py::arg("f"), py::arg("g"));
  m.def(
      "difference_volume",
      [](const py::iterable& f, const py::iterable& g) { return from_int(difference_volume(to_points(f), to_points(g))); },
      py::arg("f"), py::arg("g"));
  m.def(
      "solve_critical", [](const py::iterable& h) { return from_records(solve_critical(to_points(h))); },
      py::arg("h"));
  m.def(
      "nonneg_formula",
      [](const py::iterable& f, const py::iterable& g, bool keep_support, const std::string& slices) {
        return from_nonneg(nonneg_formula(to_points(f), to_points(g), options(keep_support, slices)));
      },
      py::arg("f"), py::arg("g"), py::arg("keep_support") = false, py::arg("slices") = "rerun");
  m.def(
      "nonneg_formula_h",
      [](const py::iterable& h, bool keep_support, const std::string& slices) {
        return from_nonneg(nonneg_formula(to_points(h), options(keep_support, slices)));
      },
      py::arg("h"), py::arg("keep_support") = false, py::arg("slices") = "rerun");
  m.def(
      "first_jump",
      [](const py::iterable& f, unsigned threads) {
        auto fs = to_points(f);
        JumpReport r;
        {
          py::gil_scoped_release release;
          r = first_jump(fs, threads);
        }
        py::dict d;
        d["base"] = from_int(r.base);
        d["jump"] = from_int(r.jump);
        d["witnesses"] = from_points(r.witnesses);
        return d;
      },
      py::arg("f"), py::arg("threads") = 0);
  m.def(
      "monotonicity_report",
      [](const py::iterable& f, const py::iterable& g) {
        auto r = monotonicity_report(to_points(f), to_points(g));
        py::dict d;
        d["equal"] = r.equal;
        d["total"] = from_int(r.formula.total);
        d["evidence"] = r.evidence;
        d["positive"] = from_records(r.positive);
        return d;
      },
      py::arg("f"), py::arg("g"));
  m.def(
      "mv_semi_interlaced",
      [](const py::iterable& parent, const py::iterable& daughters) {
        Polytope p(to_points(parent));
        std::vector<Daughter> ds;
        for (auto d : daughters) ds.push_back(daughter_from_points(p, to_points(py::reinterpret_borrow<py::iterable>(d))));
        return from_int(mv_semi_interlaced(p, ds));
      },
      py::arg("parent"), py::arg("daughters"));
  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run the command-line front end; returns (exit code, stdout, stderr).");
}
