#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "hopflab/galois.hpp"
#include "hopflab/io.hpp"
#include "hopflab/suite.hpp"

using namespace hopflab;

namespace {

struct Common {
  bool as_json = false;
  std::string host_file;
};

HopfPtr host_override(const Common& c) {
  if (c.host_file.empty()) return nullptr;
  return hopf_from_json(read_json_file(c.host_file));
}

Payload load(const std::string& path, const Common& c) { return payload_from_json(read_json_file(path), host_override(c)); }

template <class T>
T load_as(const std::string& path, const Common& c, const char* what) {
  Payload p = load(path, c);
  if (auto x = std::get_if<T>(&p)) return *x;
  throw InputError(path + ": expected " + what + ", got " + payload_kind(p));
}

YdAlgebra load_algebra(const std::string& path, const Common& c) { return load_as<YdAlgebra>(path, c, "yd_algebra"); }

YdModule load_module(const std::string& path, const Common& c) {
  Payload p = load(path, c);
  if (auto m = std::get_if<YdModule>(&p)) return *m;
  if (auto a = std::get_if<YdAlgebra>(&p)) return a->module;
  throw InputError(path + ": expected yd_module or yd_algebra, got " + payload_kind(p));
}

int emit(const CheckReport& r, const Common& c, const json& meta) {
  if (c.as_json) {
    std::cout << report_to_json(r, meta).dump(2) << "\n";
  } else {
    std::cout << r.text(true) << (r.ok() ? "OK" : "FAILED") << "\n";
  }
  return r.ok() ? 0 : 1;
}

std::vector<long> parse_t_values(const std::string& s) {
  std::vector<long> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      long v = std::stol(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw InputError("bad --t-values entry '" + item + "'");
    }
  }
  if (out.empty()) throw InputError("--t-values is empty");
  return out;
}

Field parse_field(const std::string& s) {
  try {
    return Field::parse(s);
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hopflab: exact checks for cocycle deformations of Hopf algebras and YD structures"};
  app.require_subcommand(1);
  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", common.as_json, "print the report as JSON");
    sub->add_option("--host", common.host_file, "Hopf algebra JSON used as host instead of the named one");
  };

  std::string file, file2, cocycle, dual, cqt;

  auto* validate = app.add_subcommand("validate", "run the verifier for any supported JSON object");
  validate->add_option("file", file)->required();
  add_common(validate);

  auto* deform_cmd = app.add_subcommand("deform", "emit the deformed Hopf algebra as JSON");
  deform_cmd->add_option("hopf", file)->required();
  auto* oc = deform_cmd->add_option("--cocycle", cocycle, "2-cocycle JSON");
  auto* od = deform_cmd->add_option("--dual-cocycle", dual, "dual 2-cocycle JSON");
  oc->excludes(od);

  std::map<std::string, CLI::App*> checks;
  for (const char* name : {"check-cocycle", "check-cqt", "check-qt", "check-yd", "azumaya"}) {
    auto* sub = app.add_subcommand(name, std::string("verify a ") + (std::string(name) == "azumaya" ? "YD algebra for the Azumaya property" : name + 6));
    sub->add_option("file", file)->required();
    add_common(sub);
    checks[name] = sub;
  }

  auto* wedge_cmd = app.add_subcommand("wedge", "compute M wedge N over the braided Hopf algebra of a CQT form");
  wedge_cmd->add_option("m", file)->required();
  wedge_cmd->add_option("n", file2)->required();
  wedge_cmd->add_option("--cqt", cqt, "CQT JSON")->required();
  add_common(wedge_cmd);

  auto* galois_cmd = app.add_subcommand("galois", "decide the Galois properties of a YD algebra");
  galois_cmd->add_option("algebra", file)->required();
  galois_cmd->add_option("--cqt", cqt, "CQT JSON")->required();
  add_common(galois_cmd);

  std::string field = "Q", tvals;
  std::uint64_t seed = 0;
  bool no_determinism = false;
  auto* suite_cmd = app.add_subcommand("suite", "run all acceptance criteria");
  suite_cmd->add_option("--field", field, "Q or Fp:<p>");
  suite_cmd->add_option("--t-values", tvals, "comma separated integers, default -2,-1,0,1,2,3");
  suite_cmd->add_option("--seed", seed, "seed for randomized checks");
  suite_cmd->add_flag("--no-determinism", no_determinism, "skip the second run");
  suite_cmd->add_flag("--json", common.as_json, "print the report as JSON");

  auto* catalog_cmd = app.add_subcommand("catalog", "list or export built-in instances");
  catalog_cmd->require_subcommand(1);
  catalog_cmd->add_subcommand("list", "list entry names");
  auto* export_cmd = catalog_cmd->add_subcommand("export", "print an entry as JSON");
  std::string entry, param = "1";
  export_cmd->add_option("name", entry)->required();
  export_cmd->add_option("--param", param, "family parameter t (default 1)");
  export_cmd->add_option("--field", field, "Q or Fp:<p>");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (validate->parsed()) {
      json j = read_json_file(file);
      try {
        Payload p = payload_from_json(j, host_override(common));
        return emit(verify_payload(p), common, {{"command", "validate"}, {"kind", payload_kind(p)}});
      } catch (const StructureError& e) {
        CheckReport r;
        r.add("constructible", false, {}, e.what());
        return emit(r, common, {{"command", "validate"}});
      }
    }
    if (deform_cmd->parsed()) {
      if (cocycle.empty() == dual.empty()) throw InputError("give exactly one of --cocycle, --dual-cocycle");
      HopfPtr h = hopf_from_json(read_json_file(file));
      Common c;
      c.host_file = file;
      HopfPtr out;
      if (!cocycle.empty())
        out = deform(load_as<TwoCocycle>(cocycle, c, "cocycle"));
      else
        out = deform_dual(load_as<DualCocycle>(dual, c, "dual_cocycle"));
      json j = hopf_to_json(*out);
      j["name"] = h->name();
      std::cout << j.dump(2) << "\n";
      return 0;
    }
    for (const auto& [name, sub] : checks) {
      if (!sub->parsed()) continue;
      Payload p = load(file, common);
      const std::string kind = payload_kind(p);
      json meta{{"command", name}, {"kind", kind}};
      if (name == "check-cocycle" && kind != "cocycle" && kind != "dual_cocycle" && kind != "one_cocycle")
        throw InputError("expected a cocycle, got " + kind);
      if (name == "check-cqt" && kind != "cqt") throw InputError("expected kind cqt, got " + kind);
      if (name == "check-qt" && kind != "qt") throw InputError("expected kind qt, got " + kind);
      if (name == "check-yd" && kind != "yd_module" && kind != "yd_algebra")
        throw InputError("expected a YD module or algebra, got " + kind);
      if (name == "azumaya") {
        auto a = std::get_if<YdAlgebra>(&p);
        if (!a) throw InputError("expected kind yd_algebra, got " + kind);
        CheckReport r;
        r.merge("yd_algebra", verify_yd_algebra(*a));
        AzumayaResult az = azumaya_check(*a);
        r.merge("", az.report);
        return emit(r, common, meta);
      }
      CheckReport r = verify_payload(p);
      if (kind == "cocycle") r.add("lazy_info", true, {}, is_lazy(std::get<TwoCocycle>(p)) ? "lazy" : "not lazy");
      return emit(r, common, meta);
    }
    if (wedge_cmd->parsed()) {
      CqtStructure c = load_as<CqtStructure>(cqt, common, "cqt");
      YdModule m = load_module(file, common), n = load_module(file2, common);
      WedgeResult w = wedge(c, m, n);
      CheckReport r;
      r.merge("cqt", verify_cqt(c));
      r.add("forms_agree", w.forms_agree);
      r.add("closed", w.closed, {}, "dim " + std::to_string(w.space.dim()) + " of " + std::to_string(w.space.ambient_dim));
      if (w.module) r.merge("wedge_yd", verify_yd(*w.module));
      return emit(r, common, {{"command", "wedge"}, {"dim", w.space.dim()}});
    }
    if (galois_cmd->parsed()) {
      CqtStructure c = load_as<CqtStructure>(cqt, common, "cqt");
      YdAlgebra a = load_algebra(file, common);
      CheckReport r;
      r.merge("yd_algebra", verify_yd_algebra(a));
      BraidedHopf bh = build_hr(c);
      r.merge("bimodule", verify_bimodule(bh, bimodule_actions(c, a.module)));
      GaloisReport g = galois_maps(c, a);
      GaloisDecision d = comodule_galois(a);
      // decisions are informational; only structural checks decide the exit code
      auto info = [&](const std::string& name, const GaloisDecision& x) {
        r.add(name, true, {},
              std::string(x.galois ? "galois" : "not galois") + ", rank " + std::to_string(x.beta_rank) +
                  ", kernel " + std::to_string(x.kernel_dim) + ", relations " + std::to_string(x.relation_dim) +
                  ", coinvariants " + std::to_string(x.coinvariants.dim()));
      };
      info("right", g.right);
      info("left", g.left);
      info("comodule", d);
      r.add("bigalois", true, {}, g.bigalois ? "yes" : "no");
      return emit(r, common,
                  {{"command", "galois"},
                   {"right", g.right.galois},
                   {"left", g.left.galois},
                   {"bigalois", g.bigalois},
                   {"comodule", d.galois}});
    }
    if (suite_cmd->parsed()) {
      SuiteOptions opt;
      opt.field = parse_field(field);
      if (!tvals.empty()) opt.t_values = parse_t_values(tvals);
      opt.seed = seed;
      std::vector<CriterionResult> res;
      try {
        res = run_suite(opt, !no_determinism);
      } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
      }
      bool ok = true;
      for (const auto& r : res) ok = ok && r.ok();
      if (common.as_json)
        std::cout << suite_to_json(res, opt).dump(2) << "\n";
      else
        std::cout << suite_text(res, opt) << (ok ? "OK" : "FAILED") << "\n";
      return ok ? 0 : 1;
    }
    if (catalog_cmd->parsed()) {
      if (catalog_cmd->get_subcommand("list")->parsed()) {
        for (const auto& n : catalog_names()) std::cout << n << "\n";
        return 0;
      }
      Field f = parse_field(field);
      Scalar t;
      try {
        t = f.parse_scalar(param);
      } catch (const std::exception& e) {
        throw InputError(e.what());
      }
      CatalogEntry e = [&] {
        try {
          return catalog_entry(entry, f, t);
        } catch (const std::invalid_argument& x) {
          throw InputError(x.what());
        }
      }();
      std::cout << payload_to_json(e.payload).dump(2) << "\n";
      return 0;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const StructureError& e) {
    std::cerr << "invalid structure: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
