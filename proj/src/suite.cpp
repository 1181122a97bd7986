#include "hopflab/suite.hpp"

#include <chrono>
#include <iomanip>
#include <sstream>

#include "hopflab/galois.hpp"

namespace hopflab {

namespace {

std::string tstr(long t) { return std::to_string(t); }

struct Ctx {
  const SuiteOptions& opt;
  Field f;
  HopfPtr h4;

  explicit Ctx(const SuiteOptions& o) : opt(o), f(o.field), h4(sweedler_h4(o.field)) {}
  Scalar s(long t) const { return f.make(t); }
  CqtStructure r(long t) const { return r_t(h4, s(t)); }
  TwoCocycle sigma(long t) const { return sigma_t(h4, s(t)); }
  DualCocycle theta(long t) const { return theta_t(h4, s(t)); }
};

void merge_all(CheckReport& rep, const std::string& prefix, const CheckReport& sub) { rep.merge(prefix, sub); }

CheckReport c1_hopf(const Ctx& c) {
  CheckReport rep;
  merge_all(rep, "Q", verify_hopf_axioms(*sweedler_h4(Field::rationals())));
  merge_all(rep, "F5", verify_hopf_axioms(*sweedler_h4(Field::prime(5))));
  if (c.f != Field::rationals() && c.f != Field::prime(5))
    merge_all(rep, c.f.str(), verify_hopf_axioms(*c.h4));
  const HopfAlgebra& h = *c.h4;
  // h g = -gh, S(h) = gh
  rep.add("table/h_times_g", h.mul(2, 1) == scaled(h.e(3), c.f.make(-1)));
  rep.add("table/antipode_h", h.S(2) == h.e(3));
  return rep;
}

CheckReport c2_cocycles(const Ctx& c) {
  CheckReport rep;
  for (long t : c.opt.t_values) {
    TwoCocycle s = c.sigma(t);
    merge_all(rep, "sigma_" + tstr(t), verify_two_cocycle(s));
    rep.add("sigma_" + tstr(t) + "/lazy", is_lazy(s));
    rep.add("sigma_" + tstr(t) + "/inverse_is_sigma_" + tstr(-t), s.sigma_inv == sigma_t_matrix(c.f, c.s(-t)));
  }
  std::vector<long> w;
  for (long t : c.opt.t_values)
    for (long u : c.opt.t_values)
      if (w.empty() && convolve2(*c.h4, sigma_t_matrix(c.f, c.s(t)), sigma_t_matrix(c.f, c.s(u))) !=
                           sigma_t_matrix(c.f, c.s(t + u)))
        w = {t, u};
  rep.add("convolution_additive", w.empty(), w);
  return rep;
}

CheckReport c3_dual(const Ctx& c) {
  CheckReport rep;
  for (long t : c.opt.t_values) {
    DualCocycle d = c.theta(t);
    merge_all(rep, "theta_" + tstr(t), verify_dual_cocycle(d));
    rep.add("theta_" + tstr(t) + "/lazy", is_lazy_dual(d));
  }
  std::vector<long> w;
  for (long t : c.opt.t_values)
    for (long u : c.opt.t_values)
      if (w.empty() && hh_mul(*c.h4, theta_t_matrix(c.f, c.s(t)), theta_t_matrix(c.f, c.s(u))) !=
                           theta_t_matrix(c.f, c.s(t + u)))
        w = {t, u};
  rep.add("product_additive", w.empty(), w);
  return rep;
}

CheckReport c4_round_trips(const Ctx& c) {
  CheckReport rep;
  auto round = [&](const std::string& name, const TwoCocycle& s) {
    HopfPtr hs = deform(s);
    rep.add(name + "/round_trip", deform(inverse_cocycle(s))->same_structure(*s.host));
    rep.add(name + "/deformed_is_hopf", verify_hopf_axioms(*hs).ok());
    if (is_lazy(s)) rep.add(name + "/lazy_fixes_H", hs->same_structure(*s.host));
  };
  for (long t : c.opt.t_values) round("sigma_" + tstr(t), c.sigma(t));
  round("coboundary_h4", h4_coboundary(c.h4));
  rep.add("coboundary_h4/not_lazy", !is_lazy(h4_coboundary(c.h4)));
  HopfPtr kc2 = group_algebra_c2(c.f);
  for (long a : {2, 3, -1})
    if (!c.f.make(a).is_zero()) round("kc2_mu_" + tstr(a), coboundary_from(kc2_mu(kc2, c.f.make(a))));
  for (long t : c.opt.t_values) {
    DualCocycle d = c.theta(t);
    HopfPtr hd = deform_dual(d);
    const std::string name = "theta_" + tstr(t);
    rep.add(name + "/round_trip", deform_dual(inverse_dual_cocycle(d))->same_structure(*c.h4));
    rep.add(name + "/deformed_is_hopf", verify_hopf_axioms(*hd).ok());
    if (is_lazy_dual(d)) rep.add(name + "/lazy_fixes_H", hd->same_structure(*c.h4));
  }
  return rep;
}

// Finds the sign e with deformed(t, s) == family(t + e s) for every sampled pair.
template <class Deformed, class Family>
void sign_rule(CheckReport& rep, const std::string& name, const std::vector<long>& ts, const std::vector<long>& ss,
               Deformed deformed, Family family) {
  bool plus = true, minus = true;
  for (long t : ts)
    for (long s : ss) {
      Matrix m = deformed(t, s);
      plus = plus && m == family(t + s);
      minus = minus && m == family(t - s);
    }
  const bool single = plus != minus;
  rep.add(name, single, {}, single ? (plus ? "t' = t + s" : "t' = t - s") : "no single sign fits all pairs");
}

CheckReport c5_cqt_qt(const Ctx& c) {
  CheckReport rep;
  for (long t : c.opt.t_values) {
    merge_all(rep, "R_" + tstr(t), verify_cqt(c.r(t)));
    merge_all(rep, "QT_" + tstr(t), verify_qt(qt_t(c.h4, c.s(t))));
  }
  const auto& ts = c.opt.t_values;
  sign_rule(
      rep, "R_sigma_sign", ts, ts, [&](long t, long s) { return deform_cqt(c.r(t), c.sigma(s)).r; },
      [&](long u) { return r_t_matrix(c.f, c.s(u)); });
  sign_rule(
      rep, "QT0_theta_sign", {0}, ts, [&](long t, long s) { return deform_qt(qt_t(c.h4, c.s(t)), c.theta(s)).rr; },
      [&](long u) { return qt_t_matrix(c.f, c.s(u)); });
  sign_rule(
      rep, "QT_theta_sign", ts, ts, [&](long t, long s) { return deform_qt(qt_t(c.h4, c.s(t)), c.theta(s)).rr; },
      [&](long u) { return qt_t_matrix(c.f, c.s(u)); });
  bool valid = true;
  for (long t : ts)
    for (long s : ts) {
      valid = valid && verify_cqt(deform_cqt(c.r(t), c.sigma(s))).ok();
      valid = valid && verify_qt(deform_qt(qt_t(c.h4, c.s(t)), c.theta(s))).ok();
    }
  rep.add("deformed_structures_valid", valid);
  return rep;
}

std::vector<std::pair<std::string, YdModule>> h4_objects(const Ctx& c) {
  return {{"regular", regular_comodule_module(c.r(1))},
          {"I", unit_object(c.h4).module},
          {"trivial", trivial_module(c.h4, 1)}};
}

CheckReport c6_squares(const Ctx& c) {
  CheckReport rep;
  auto objs = h4_objects(c);
  std::uint64_t seed = c.opt.seed;
  for (long t : {1, 2, -1}) {
    TwoCocycle s = c.sigma(t);
    DualCocycle d = c.theta(t);
    for (const auto& [mn, m] : objs)
      for (const auto& [nn, n] : objs) {
        const std::string pair = mn + "_" + nn;
        merge_all(rep, "sigma_" + tstr(t) + "/" + pair, verify_braided_functor(s, m, n));
        merge_all(rep, "theta_" + tstr(t) + "/" + pair, verify_theta_functor(d, m, n));
      }
    // naturality of eta in both arguments, against seeded random YD maps
    for (const auto& [mn, m] : objs)
      for (const auto& [nn, n] : objs) {
        Matrix fm = random_yd_map(m, m, seed++), fn = random_yd_map(n, n, seed++);
        Matrix e = eta(s, m, n).matrix;
        rep.add("sigma_" + tstr(t) + "/eta_natural/" + mn + "_" + nn, e * kron(fm, fn) == kron(fm, fn) * e, {},
                "seed " + std::to_string(seed - 2));
      }
  }
  return rep;
}

CheckReport c7_induced(const Ctx& c) {
  CheckReport rep;
  auto check = [&](const std::string& name, const CqtStructure& r, const TwoCocycle& s, const YdModule& m) {
    YdModule sm = sigma_module(s, m);
    YdModule expected = yd_from_comodule(deform_cqt(r, s), sm.coaction());
    rep.add(name, sm.action() == expected.action());
  };
  for (long t : c.opt.t_values) {
    CqtStructure r = c.r(t);
    YdModule m = regular_comodule_module(r);
    for (long s : c.opt.t_values) check("R_" + tstr(t) + "/sigma_" + tstr(s), r, c.sigma(s), m);
    check("R_" + tstr(t) + "/coboundary_h4", r, h4_coboundary(c.h4), m);
    check("R_" + tstr(t) + "/I", r, c.sigma(1), yd_from_comodule(r, unit_object(c.h4).module.coaction()));
  }
  HopfPtr kc2 = group_algebra_c2(c.f);
  for (long sign : {1, -1}) {
    CqtStructure r = cqt_c2(kc2, Scalar(sign));
    for (long a : {2, -1})
      if (!c.f.make(a).is_zero())
        check("kc2_" + tstr(sign) + "/mu_" + tstr(a), r, coboundary_from(kc2_mu(kc2, c.f.make(a))),
              regular_comodule_module(r));
  }
  return rep;
}

CheckReport c8_zeta(const Ctx& c) {
  CheckReport rep;
  HopfPtr kc2 = group_algebra_c2(c.f);
  std::vector<std::pair<std::string, YdModule>> objs{{"regular_minus", regular_comodule_module(cqt_c2(kc2, Scalar(-1)))},
                                                     {"regular_plus", regular_comodule_module(cqt_c2(kc2, Scalar(1)))},
                                                     {"I", unit_object(kc2).module},
                                                     {"trivial", trivial_module(kc2, 2)}};
  for (long a : {2, 3, -1}) {
    if (c.f.make(a).is_zero()) continue;
    LazyOneCocycle mu = kc2_mu(kc2, c.f.make(a));
    for (const auto& [mn, m] : objs)
      for (const auto& [nn, n] : objs) merge_all(rep, "mu_" + tstr(a) + "/" + mn + "_" + nn, verify_zeta(mu, m, n));
  }
  LazyOneCocycle eps = make_lazy_one_cocycle(c.h4, c.h4->counit());
  merge_all(rep, "h4_eps/regular_I", verify_zeta(eps, regular_comodule_module(c.r(1)), unit_object(c.h4).module));
  return rep;
}

CheckReport c9_azumaya(const Ctx& c) {
  CheckReport rep;
  YdAlgebra e = end_algebra(regular_comodule_module(c.r(1)));
  AzumayaResult base = azumaya_check(e);
  merge_all(rep, "End", base.report);
  for (long t : c.opt.t_values) {
    if (t == 0) continue;
    YdAlgebra se = sigma_algebra(c.sigma(t), e);
    merge_all(rep, "sigma_" + tstr(t) + "/End_is_yd_algebra", verify_yd_algebra(se));
    merge_all(rep, "sigma_" + tstr(t) + "/End", azumaya_check(se).report);
  }
  HopfPtr kc2 = group_algebra_c2(Field::rationals());
  AzumayaResult control = azumaya_check(trivial_yd_algebra(kc2, kc2->mult(), kc2->unit()));
  rep.add("control_kc2_trivial_not_azumaya", !control.is_azumaya, {},
          "rank F " + std::to_string(control.rank_f) + "/4");
  return rep;
}

CheckReport c10_isos(const Ctx& c) {
  CheckReport rep;
  const std::size_t n = c.h4->dim();
  std::vector<std::pair<std::string, YdAlgebra>> algs{{"I", unit_object(c.h4)},
                                                      {"H_regular", regular_comodule_algebra(c.r(1))},
                                                      {"End", end_algebra(regular_comodule_module(c.r(1)))}};
  for (long t : c.opt.t_values) {
    TwoCocycle s = c.sigma(t);
    ChiMaps chi = chi_maps(s);
    rep.add("sigma_" + tstr(t) + "/chi_round_trip",
            chi.chi * chi.chi_inv == Matrix::identity(n) && chi.chi_inv * chi.chi == Matrix::identity(n));
    for (const auto& [name, a] : algs) merge_all(rep, "sigma_" + tstr(t) + "/" + name, verify_phi_psi_xi(s, a));
  }
  return rep;
}

CheckReport c11_coinvariants_wedge(const Ctx& c) {
  CheckReport rep;
  YdAlgebra i = unit_object(c.h4);
  for (long t : {1, 0}) {
    CqtStructure r = c.r(t);
    YdModule reg = regular_comodule_module(r);
    for (long s : {1, 2, -1}) {
      const std::string p = "R_" + tstr(t) + "/sigma_" + tstr(s);
      TwoCocycle sg = c.sigma(s);
      merge_all(rep, p + "/coinvariants/regular", verify_sigma_coinvariants(r, sg, reg));
      merge_all(rep, p + "/coinvariants/I", verify_sigma_coinvariants(r, sg, i.module));
      merge_all(rep, p + "/wedge/I_I", verify_sigma_wedge(r, sg, i.module, i.module));
      merge_all(rep, p + "/wedge/regular_I", verify_sigma_wedge(r, sg, reg, i.module));
      merge_all(rep, p + "/wedge_algebra/I_I", verify_sigma_wedge_algebra(r, sg, i, i));
    }
    WedgeResult w = wedge(r, i.module, i.module);
    rep.add("R_" + tstr(t) + "/dim_I_wedge_I", w.space.dim() == c.h4->dim(), {},
            "dim " + std::to_string(w.space.dim()));
    if (w.module) merge_all(rep, "R_" + tstr(t) + "/I_wedge_I_yd", verify_yd(*w.module));
  }
  return rep;
}

CheckReport c12_unit(const Ctx& c) {
  CheckReport rep;
  for (long t : {1, -1}) merge_all(rep, "sigma_" + tstr(t), verify_unit_deformation(c.sigma(t)));
  return rep;
}

CheckReport c13_galois(const Ctx& c) {
  CheckReport rep;
  CqtStructure r = c.r(1);
  std::vector<std::pair<std::string, YdAlgebra>> algs{{"I", unit_object(c.h4)},
                                                      {"H_regular", regular_comodule_algebra(r)},
                                                      {"End", end_algebra(regular_comodule_module(r))}};
  auto yn = [](bool b) { return b ? std::string("yes") : std::string("no"); };
  for (long t : {1, -1}) {
    TwoCocycle s = c.sigma(t);
    CqtStructure rs = deform_cqt(r, s);
    for (const auto& [name, a] : algs) {
      const std::string p = "sigma_" + tstr(t) + "/" + name;
      YdAlgebra sa = sigma_algebra(s, a);
      GaloisReport g = galois_maps(r, a), gs = galois_maps(rs, sa);
      rep.add(p + "/braided_right_equivalent", g.right.galois == gs.right.galois, {},
              yn(g.right.galois) + " / " + yn(gs.right.galois));
      rep.add(p + "/braided_left_equivalent", g.left.galois == gs.left.galois, {},
              yn(g.left.galois) + " / " + yn(gs.left.galois));
      rep.add(p + "/bigalois_equivalent", g.bigalois == gs.bigalois, {}, yn(g.bigalois) + " / " + yn(gs.bigalois));
      GaloisDecision d = comodule_galois(a), ds = comodule_galois(sa);
      rep.add(p + "/comodule_galois_equivalent", d.galois == ds.galois, {}, yn(d.galois) + " / " + yn(ds.galois));
    }
  }
  GaloisReport gi = galois_maps(r, algs[0].second);
  rep.add("I_is_bigalois", gi.bigalois);
  rep.add("I_quantum_commutative", quantum_commutative(algs[0].second));
  rep.add("H_regular_comodule_galois", comodule_galois(algs[1].second).galois);
  return rep;
}

CheckReport c14_pi(const Ctx& c) {
  CheckReport rep;
  YdAlgebra e = end_algebra(regular_comodule_module(c.r(1)));
  merge_all(rep, "End/sigma_1", verify_pi_deformation(c.sigma(1), e));
  PiResult p = mu_action_and_pi(e);
  rep.add("End/pi_dim", p.pi.has_value(), {}, "dim " + std::to_string(p.centralizer.dim()));
  return rep;
}

const char* title_of(int id) {
  static const char* titles[] = {"",
                                 "Sweedler algebra Hopf axioms over Q and F5",
                                 "lazy cocycle family sigma_t",
                                 "dual cocycle family theta_t",
                                 "deformation round trips",
                                 "CQT/QT families and their deformations",
                                 "braided functor squares",
                                 "sigma of induced YD structures",
                                 "zeta from central functionals",
                                 "Azumaya invariance",
                                 "chi/phi/psi/xi round trips",
                                 "coinvariants and wedge under deformation",
                                 "unit object deformation",
                                 "Galois property under deformation",
                                 "MU action and pi under deformation",
                                 "determinism"};
  return id >= 1 && id <= kCriteria ? titles[id] : "?";
}

}  // namespace

CriterionResult run_criterion(int id, const SuiteOptions& opt) {
  auto t0 = std::chrono::steady_clock::now();
  CriterionResult res;
  res.id = id;
  res.title = title_of(id);
  Ctx c(opt);
  switch (id) {
    case 1: res.report = c1_hopf(c); break;
    case 2: res.report = c2_cocycles(c); break;
    case 3: res.report = c3_dual(c); break;
    case 4: res.report = c4_round_trips(c); break;
    case 5: res.report = c5_cqt_qt(c); break;
    case 6: res.report = c6_squares(c); break;
    case 7: res.report = c7_induced(c); break;
    case 8: res.report = c8_zeta(c); break;
    case 9: res.report = c9_azumaya(c); break;
    case 10: res.report = c10_isos(c); break;
    case 11: res.report = c11_coinvariants_wedge(c); break;
    case 12: res.report = c12_unit(c); break;
    case 13: res.report = c13_galois(c); break;
    case 14: res.report = c14_pi(c); break;
    default: throw std::invalid_argument("no criterion " + std::to_string(id));
  }
  res.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

std::vector<CriterionResult> run_suite(const SuiteOptions& opt, bool include_determinism) {
  std::vector<CriterionResult> out;
  for (int id = 1; id < kCriteria; ++id) out.push_back(run_criterion(id, opt));
  if (include_determinism) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<CriterionResult> again;
    for (int id = 1; id < kCriteria; ++id) again.push_back(run_criterion(id, opt));
    CriterionResult d;
    d.id = kCriteria;
    d.title = title_of(kCriteria);
    const std::string a = suite_to_json(out, opt).dump(), b = suite_to_json(again, opt).dump();
    d.report.add("second_run_identical_json", a == b, {}, std::to_string(a.size()) + " bytes");
    d.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    out.push_back(std::move(d));
  }
  return out;
}

json suite_to_json(const std::vector<CriterionResult>& results, const SuiteOptions& opt) {
  json j;
  j["schema"] = kReportSchema;
  j["field"] = opt.field.str();
  j["seed"] = opt.seed;
  j["t_values"] = opt.t_values;
  bool ok = true;
  json crit = json::array();
  for (const auto& r : results) {
    json e = report_to_json(r.report);
    e.erase("schema");
    e.erase("meta");
    e["id"] = r.id;
    e["title"] = r.title;
    e["ok"] = r.ok();
    ok = ok && r.ok();
    crit.push_back(e);
  }
  j["ok"] = ok;
  j["criteria"] = crit;
  return j;
}

std::string suite_text(const std::vector<CriterionResult>& results, const SuiteOptions& opt) {
  std::ostringstream os;
  os << "field " << opt.field.str() << ", seed " << opt.seed << ", t in {";
  for (std::size_t i = 0; i < opt.t_values.size(); ++i) os << (i ? "," : "") << opt.t_values[i];
  os << "}\n";
  for (const auto& r : results) {
    std::size_t failed = 0;
    for (const auto& ch : r.report.checks) failed += ch.status == Status::Fail;
    os << (r.ok() ? "PASS" : "FAIL") << "  " << std::setw(2) << r.id << "  " << r.title << "  (" << r.report.checks.size()
       << " checks, " << failed << " failed, " << std::fixed << std::setprecision(0) << r.millis << " ms)\n";
    if (!r.ok())
      for (const auto& ch : r.report.checks)
        if (ch.status == Status::Fail) {
          CheckReport one;
          one.checks.push_back(ch);
          os << "      " << one.text();
        }
  }
  return os.str();
}

}  // namespace hopflab
