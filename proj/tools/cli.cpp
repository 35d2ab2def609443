#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <iostream>

#include "newtonlab/io.hpp"
#include "newtonlab/nonneg.hpp"
#include "newtonlab/semi.hpp"

namespace nl::cli {

namespace {

struct Options {
  std::string file;
  std::string format = "table";
  bool verify = false;
  bool verify_warn = false;
  bool keep_support = false;
  int max_dim = 5;
  std::string slices = "rerun";
  unsigned threads = 0;
};

const std::vector<IVec>& need(const std::optional<std::vector<IVec>>& pts, const char* name) {
  if (!pts) throw InputError(std::string("instance has no '") + name + "' points");
  if (pts->empty()) throw InputError("empty support");
  return *pts;
}

ResultCheck check_of(const Verification& v, const std::string& kind) {
  return {kind, {{"nu_f", v.nu_f}, {"nu_g", v.nu_g}, {"difference", v.difference}}, v.match};
}

ResultFile newton_number_cmd(const Instance& in) {
  ResultFile r;
  const auto& f = need(in.f ? in.f : in.parent, "f");
  r.totals.emplace_back("newton_number", newton_number(f));
  if (in.g) {
    Int g = newton_number(*in.g);
    r.totals.emplace_back("newton_number_g", g);
    r.totals.emplace_back("difference", r.totals.front().second - g);
  }
  return r;
}

ResultFile mixed_volume_cmd(const Instance& in) {
  if (in.polytopes.size() != in.dim)
    throw InputError("need exactly dim = " + std::to_string(in.dim) + " polytopes");
  std::vector<Polytope> ps;
  ResultFile r;
  for (const auto& p : in.polytopes) {
    if (p.empty()) throw InputError("empty polytope");
    ps.emplace_back(p);
    ResultRecord rec;
    rec.label = "polytope";
    rec.points = ps.back().vertex_points();
    rec.values = {{"dim", Int(ps.back().dim())}, {"volume", ps.back().normalized_volume()}};
    r.records.push_back(std::move(rec));
  }
  r.totals.emplace_back("mixed_volume", mixed_volume(ps));
  return r;
}

ResultFile system_cmd(const Instance& in, const Options&) {
  ResultFile r;
  std::vector<AsymptoticRecord> rs;
  if (in.h) rs = solve_system_generalized(need(in.h, "h"));
  else rs = solve_system(need(in.f, "f"), need(in.g, "g"));
  Int total = 0;
  for (const auto& a : rs) {
    r.records.push_back(record_row(a));
    total += a.multiplicity;
  }
  r.totals.emplace_back("total", total);
  if (in.has_pair() && !meets_axes(*in.f, in.dim)) {
    r.notes.push_back("f is not convenient: difference region is unbounded, no volume check");
  } else if (in.has_pair()) {
    Int vol = difference_volume(*in.f, *in.g);
    r.check = ResultCheck{"difference volume", {{"volume", vol}, {"total", total}}, vol == total};
  }
  return r;
}

ResultFile critical_cmd(const Instance& in, const Options&) {
  ResultFile r;
  // records depend on non-vertex points, so no reduction here
  auto hs = in.lifted();
  if (hs.empty()) throw InputError("empty support");
  auto rs = solve_critical(hs);
  Int total = total_multiplicity(rs);
  for (const auto& a : rs) r.records.push_back(record_row(a));
  r.totals.emplace_back("total", total);
  if (in.has_pair()) {
    Verification v;
    v.nu_f = newton_number(*in.f);
    v.nu_g = newton_number(*in.g);
    v.difference = v.nu_f - v.nu_g;
    v.match = v.difference == total;
    r.check = check_of(v, "Kouchnirenko difference");
  } else if (auto v = classical_check(hs, total)) {
    r.check = check_of(*v, "Kouchnirenko difference");
  }
  return r;
}

ResultRecord summand_row(const SummandRecord& s, std::size_t n) {
  ResultRecord rec;
  rec.label = subspace_name(s.facet.mask);
  ExtCovector c(n, ExtRat{false, 0});
  auto pos = mask_coords(s.facet.mask, n);
  for (std::size_t i = 0; i < pos.size(); ++i) c[pos[i]] = {false, s.facet.v[i]};
  rec.covector = c;
  rec.values = {{"m", s.multiplicity}, {"nu", s.nu}, {"contribution", s.contribution}};
  return rec;
}

NonnegOptions nonneg_options(const Options& o) {
  NonnegOptions opt;
  opt.keep_support = o.keep_support;
  opt.slices = o.slices == "closure" ? SliceMode::closure : SliceMode::rerun;
  return opt;
}

ResultFile nonneg_cmd(const Instance& in, const Options& o) {
  NonnegOptions opt = nonneg_options(o);
  NonnegResult res = in.has_pair() ? nonneg_formula(*in.f, *in.g, opt) : nonneg_formula(in.lifted(), opt);
  ResultFile r;
  for (const auto& s : res.summands) r.records.push_back(summand_row(s, in.dim));
  r.totals.emplace_back("total", res.total);
  if (res.verification) r.check = check_of(*res.verification, "Kouchnirenko difference");
  return r;
}

ResultFile semi_cmd(const Instance& in) {
  const auto& par = need(in.parent, "parent");
  Polytope parent(par);
  std::vector<Daughter> ds;
  for (const auto& d : in.daughters) ds.push_back(daughter_from_points(parent, d));
  auto a = analyze(parent, ds);
  ResultFile r;
  r.status = a.interlaced ? "interlaced" : a.semi_interlaced ? "semi-interlaced" : "not semi-interlaced";
  if (!a.semi_interlaced) throw InputError("daughters are not semi-interlaced");
  auto t = suture_system(parent, ds);
  for (std::size_t i = 0; i < t.sutures.size(); ++i) {
    ResultRecord rec;
    rec.label = "suture";
    rec.points = t.sutures[i].vertex_points();
    rec.values = {{"dim", Int(t.sutures[i].dim())}, {"volume", t.volumes[i]}, {"mixed", t.mixed[i]},
                  {"mixed_recursive", t.mixed_recursive[i]}};
    r.records.push_back(std::move(rec));
  }
  std::vector<Polytope> ps;
  for (const auto& d : ds) ps.push_back(d.polytope);
  Int mv = mixed_volume(ps);
  r.totals.emplace_back("mv_semi_interlaced", t.mixed.front());
  r.totals.emplace_back("mixed_volume", mv);
  r.check = ResultCheck{"polarization", {{"semi_interlaced", t.mixed.front()}, {"polarization", mv}},
                        mv == t.mixed.front() && t.mixed == t.mixed_recursive};
  return r;
}

ResultFile jump_cmd(const Instance& in, const Options& o) {
  auto rep = first_jump(need(in.f, "f"), o.threads);
  ResultFile r;
  for (const auto& w : rep.witnesses) {
    ResultRecord rec;
    rec.label = "witness";
    rec.points = {w};
    rec.values = {{"difference", rep.jump}};
    r.records.push_back(std::move(rec));
  }
  r.totals = {{"newton_number", rep.base}, {"jump", rep.jump}, {"candidates", Int(rep.candidates.size())}};
  return r;
}

ResultFile monotonic_cmd(const Instance& in, const Options& o) {
  NonnegOptions opt = nonneg_options(o);
  auto rep = monotonicity_report(need(in.f, "f"), need(in.g, "g"), opt);
  ResultFile r;
  r.status = rep.equal ? "equal" : "strict";
  for (const auto& s : rep.formula.summands) r.records.push_back(summand_row(s, in.dim));
  r.totals.emplace_back("total", rep.formula.total);
  if (rep.formula.verification) r.check = check_of(*rep.formula.verification, "Kouchnirenko difference");
  r.notes = rep.evidence;
  return r;
}

ResultFile dispatch(const std::string& cmd, const Options& o) {
  Instance in = load_instance(o.file);
  if (static_cast<int>(in.dim) > o.max_dim)
    throw ScopeError("dimension " + std::to_string(in.dim) + " exceeds --max-dim " + std::to_string(o.max_dim));
  ResultFile r;
  if (cmd == "newton-number") r = newton_number_cmd(in);
  else if (cmd == "mixed-volume") r = mixed_volume_cmd(in);
  else if (cmd == "system-asymptotics") r = system_cmd(in, o);
  else if (cmd == "critical-asymptotics") r = critical_cmd(in, o);
  else if (cmd == "nonneg-formula") r = nonneg_cmd(in, o);
  else if (cmd == "semi-interlaced-mv") r = semi_cmd(in);
  else if (cmd == "first-jump") r = jump_cmd(in, o);
  else if (cmd == "monotonic-check") r = monotonic_cmd(in, o);
  r.command = cmd;
  auto slash = o.file.find_last_of('/');
  r.source = slash == std::string::npos ? o.file : o.file.substr(slash + 1);
  return r;
}

void emit(const ResultFile& r, const Options& o, std::ostream& out) {
  out << (o.format == "json" ? to_json(r) : to_table(r));
}

}  // namespace

int verdict(ResultFile& r, bool verify, bool verify_warn) {
  if (r.check && !r.check->match) {
    r.status = "mismatch";
    return verify_warn ? kOk : kVerifyFailed;
  }
  if (verify && !r.check) r.notes.push_back("nothing to verify for this instance");
  if (r.status.empty()) r.status = r.check ? "verified" : "ok";
  return kOk;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Newton-polyhedron toolkit: Newton numbers, mixed volumes, asymptotics"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::pair<std::string, std::string>> cmds{
      {"newton-number", "Kouchnirenko Newton number of the f support"},
      {"mixed-volume", "mixed volume of dim polytopes"},
      {"system-asymptotics", "asymptotics of roots of f_i + εg_i = 0"},
      {"critical-asymptotics", "asymptotics of critical points of f + εg (or h)"},
      {"nonneg-formula", "non-negative formula for ν(Γ_f) − ν(Γ_g)"},
      {"semi-interlaced-mv", "mixed volume of semi-interlaced daughters"},
      {"first-jump", "first non-degenerate jump of the Newton number"},
      {"monotonic-check", "does enlarging Γ_f to Γ_g change ν?"}};
  std::string chosen;
  for (const auto& [name, help] : cmds) {
    auto* sc = app.add_subcommand(name, help);
    sc->add_option("instance", o.file, "instance JSON file")->required();
    sc->add_option("--format", o.format, "json or table")->check(CLI::IsMember({"json", "table"}));
    sc->add_flag("--verify", o.verify, "note when the instance carries no check");
    sc->add_flag("--verify-warn", o.verify_warn, "report a verification mismatch without failing");
    sc->add_flag("--keep-support", o.keep_support, "do not reduce H to its vertices");
    sc->add_option("--max-dim", o.max_dim, "refuse inputs above this dimension");
    sc->add_option("--slices", o.slices, "rerun or closure")->check(CLI::IsMember({"rerun", "closure"}));
    sc->add_option("--threads", o.threads, "worker threads for first-jump (0 = all cores)");
    sc->callback([&chosen, name = name] { chosen = name; });
  }
  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kInputError;
  }
  try {
    ResultFile r = dispatch(chosen, o);
    int code = verdict(r, o.verify, o.verify_warn);
    emit(r, o, out);
    if (r.status == "mismatch") err << (code == kOk ? "warning: " : "") << "verification failed\n";
    return code;
  } catch (const ScopeError& e) {
    err << "out of scope: " << e.what() << "\n";
    return kOutOfScope;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace nl::cli
