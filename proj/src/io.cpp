#include "hopflab/io.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace hopflab {

namespace {

std::string where(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

const json& need(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing key '") + key + "'");
  return j.at(key);
}

Scalar scalar_of(const Field& f, const json& v) {
  try {
    if (v.is_string()) return f.parse_scalar(v.get<std::string>());
    if (v.is_number_integer()) return f.coerce(Scalar(v.get<long>()));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  } catch (const std::domain_error& e) {
    throw InputError(e.what());
  }
  throw InputError("scalar must be a string \"a/b\" or an integer, got " + v.dump());
}

std::size_t index_of(const json& v, std::size_t bound, const char* what) {
  if (!v.is_number_integer() || v.get<long>() < 0 || static_cast<std::size_t>(v.get<long>()) >= bound)
    throw InputError(std::string(what) + " index " + v.dump() + " out of range [0," + std::to_string(bound) + ")");
  return static_cast<std::size_t>(v.get<long>());
}

std::size_t checked_dim(const json& v, const char* what) {
  if (!v.is_number_integer() || v.get<long>() < 1) throw InputError(std::string(what) + " must be a positive integer");
  auto d = static_cast<std::size_t>(v.get<long>());
  if (d > max_dim())
    throw InputError(std::string(what) + " " + std::to_string(d) + " exceeds HOPFLAB_MAX_DIM=" +
                     std::to_string(max_dim()));
  return d;
}

Field field_of(const json& j) {
  if (!j.contains("field")) return Field::rationals();
  try {
    return Field::parse(j.at("field").get<std::string>());
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
}

// [[i,j,k,"c"],...] into a tensor of the given shape
Tensor sparse3(const Field& f, const json& arr, std::vector<std::size_t> shape, const char* what) {
  if (!arr.is_array()) throw InputError(std::string(what) + " must be an array");
  Tensor t(shape);
  for (const auto& e : arr) {
    if (!e.is_array() || e.size() != 4) throw InputError(std::string(what) + " entries must be [i,j,k,\"c\"]");
    t(index_of(e[0], shape[0], what), index_of(e[1], shape[1], what), index_of(e[2], shape[2], what)) +=
        scalar_of(f, e[3]);
  }
  return t;
}

Matrix sparse2(const Field& f, const json& arr, std::size_t rows, std::size_t cols, const char* what) {
  if (!arr.is_array()) throw InputError(std::string(what) + " must be an array");
  Matrix m(rows, cols);
  for (const auto& e : arr) {
    if (!e.is_array() || e.size() != 3) throw InputError(std::string(what) + " entries must be [i,j,\"c\"]");
    m(index_of(e[0], rows, what), index_of(e[1], cols, what)) += scalar_of(f, e[2]);
  }
  return m;
}

Vec dense(const Field& f, const json& arr, std::size_t n, const char* what) {
  if (!arr.is_array() || arr.size() != n)
    throw InputError(std::string(what) + " must be an array of length " + std::to_string(n));
  Vec v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = scalar_of(f, arr[i]);
  return v;
}

Matrix dense_rows(const Field& f, const json& arr, std::size_t n, const char* what) {
  if (!arr.is_array() || arr.size() != n) throw InputError(std::string(what) + " must have " + std::to_string(n) + " rows");
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Vec row = dense(f, arr[i], n, what);
    for (std::size_t j = 0; j < n; ++j) m(i, j) = row[j];
  }
  return m;
}

json sparse3_json(const Tensor& t) {
  json out = json::array();
  const auto& s = t.shape();
  for (std::size_t i = 0; i < s[0]; ++i)
    for (std::size_t j = 0; j < s[1]; ++j)
      for (std::size_t k = 0; k < s[2]; ++k)
        if (!t(i, j, k).is_zero()) out.push_back({i, j, k, t(i, j, k).str()});
  return out;
}

json sparse2_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) out.push_back({i, j, m(i, j).str()});
  return out;
}

json dense_json(const Vec& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

json rows_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(dense_json(m.row(i)));
  return out;
}

HopfPtr catalog_host(const std::string& name, const Field& f) {
  try {
    if (name == "H4" || name == "sweedler_h4") return sweedler_h4(f);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  if (name == "kC2" || name == "kc2") return group_algebra_c2(f);
  if (name == "k" || name == "ground") return ground_hopf(f);
  return nullptr;
}

HopfPtr resolve_host(const json& j, HopfPtr host) {
  if (host) return host;
  const json& h = need(j, "host");
  if (h.is_object()) return hopf_from_json(h);
  if (!h.is_string()) throw InputError("'host' must be a name or a Hopf algebra object");
  auto p = catalog_host(h.get<std::string>(), field_of(j));
  if (!p) throw InputError("unknown host '" + h.get<std::string>() + "'; embed the Hopf algebra object instead");
  return p;
}

json host_json(const HopfAlgebra& h) {
  for (const char* name : {"H4", "kC2", "k"}) {
    HopfPtr c;
    try {
      c = catalog_host(name, h.field());
    } catch (const InputError&) {
      continue;
    }
    if (c && c->dim() == h.dim() && c->same_structure(h)) return name;
  }
  return hopf_to_json(h);
}

std::string kind_of(const json& j) {
  const json& k = need(j, "kind");
  if (!k.is_string()) throw InputError("'kind' must be a string");
  return k.get<std::string>();
}

template <class F>
auto structural(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const std::invalid_argument& e) {
    throw StructureError(e.what());
  } catch (const std::domain_error& e) {
    throw StructureError(e.what());
  }
}

}  // namespace

std::size_t max_dim() {
  const char* v = std::getenv("HOPFLAB_MAX_DIM");
  if (!v || !*v) return 64;
  char* end = nullptr;
  long x = std::strtol(v, &end, 10);
  if (*end || x < 1) throw InputError(std::string("bad HOPFLAB_MAX_DIM '") + v + "'");
  return static_cast<std::size_t>(x);
}

json parse_json_text(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(origin + ": malformed JSON at " + where(text, e.byte == 0 ? 0 : e.byte - 1) + ": " + e.what());
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str(), path);
}

json hopf_to_json(const HopfAlgebra& h) {
  json j;
  j["kind"] = "hopf";
  j["name"] = h.name();
  j["field"] = h.field().str();
  j["dim"] = h.dim();
  j["basis"] = h.basis();
  j["mult"] = sparse3_json(h.mult());
  j["comult"] = sparse3_json(h.comult());
  j["unit"] = dense_json(h.unit());
  j["counit"] = dense_json(h.counit());
  j["antipode"] = rows_json(h.antipode());
  return j;
}

HopfPtr hopf_from_json(const json& j) {
  if (j.contains("kind") && kind_of(j) != "hopf") throw InputError("expected kind 'hopf'");
  Field f = field_of(j);
  const std::size_t n = checked_dim(need(j, "dim"), "dim");
  std::vector<std::string> basis;
  if (j.contains("basis")) {
    if (!j["basis"].is_array() || j["basis"].size() != n) throw InputError("'basis' must list dim names");
    for (const auto& b : j["basis"]) {
      if (!b.is_string()) throw InputError("basis names must be strings");
      basis.push_back(b.get<std::string>());
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) basis.push_back("e" + std::to_string(i));
  }
  Tensor mult = sparse3(f, need(j, "mult"), {n, n, n}, "mult");
  Tensor comult = sparse3(f, need(j, "comult"), {n, n, n}, "comult");
  Vec unit = dense(f, need(j, "unit"), n, "unit");
  Vec counit = dense(f, need(j, "counit"), n, "counit");
  Matrix s = dense_rows(f, need(j, "antipode"), n, "antipode");
  std::string name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "H";
  return structural([&] { return make_hopf(f, name, basis, mult, comult, unit, counit, s); });
}

Payload payload_from_json(const json& j, HopfPtr host) {
  const std::string kind = kind_of(j);
  if (kind == "hopf") return hopf_from_json(j);
  HopfPtr h = resolve_host(j, std::move(host));
  const Field& f = h->field();
  const std::size_t n = h->dim();
  if (kind == "cocycle" || kind == "dual_cocycle" || kind == "cqt" || kind == "qt") {
    Matrix m = sparse2(f, need(j, "entries"), n, n, "entries");
    std::optional<Matrix> inv;
    if (j.contains("inverse")) inv = sparse2(f, j["inverse"], n, n, "inverse");
    return structural([&]() -> Payload {
      if (kind == "cocycle") {
        TwoCocycle c = make_two_cocycle(h, m);
        if (inv) c.sigma_inv = *inv;
        return c;
      }
      if (kind == "dual_cocycle") {
        DualCocycle d = make_dual_cocycle(h, m);
        if (inv) d.theta_inv = *inv;
        return d;
      }
      if (kind == "cqt") {
        CqtStructure c = make_cqt(h, m);
        if (inv) c.r_inv = *inv;
        return c;
      }
      QtStructure q = make_qt(h, m);
      if (inv) q.rr_inv = *inv;
      return q;
    });
  }
  if (kind == "one_cocycle") {
    Vec mu(n);
    const json& e = need(j, "entries");
    if (!e.is_array()) throw InputError("entries must be an array");
    for (const auto& x : e) {
      if (!x.is_array() || x.size() != 2) throw InputError("one_cocycle entries must be [i,\"c\"]");
      mu[index_of(x[0], n, "entries")] += scalar_of(f, x[1]);
    }
    return structural([&]() -> Payload { return make_lazy_one_cocycle(h, mu); });
  }
  if (kind == "yd_module" || kind == "yd_algebra") {
    const std::size_t m = checked_dim(need(j, "dim"), "dim");
    Tensor action = sparse3(f, need(j, "action"), {n, m, m}, "action");
    Tensor coaction = sparse3(f, need(j, "coaction"), {m, m, n}, "coaction");
    YdModule mod(h, std::move(action), std::move(coaction));
    if (kind == "yd_module") return mod;
    Tensor mult = sparse3(f, need(j, "mult"), {m, m, m}, "mult");
    Vec unit = dense(f, need(j, "unit"), m, "unit");
    return YdAlgebra{std::move(mod), std::move(mult), std::move(unit)};
  }
  throw InputError("unknown kind '" + kind + "'");
}

std::string payload_kind(const Payload& p) {
  static const char* names[] = {"hopf", "cocycle", "dual_cocycle", "one_cocycle", "cqt", "qt", "yd_module", "yd_algebra"};
  return names[p.index()];
}

json payload_to_json(const Payload& p) {
  if (auto h = std::get_if<HopfPtr>(&p)) return hopf_to_json(**h);
  json j;
  j["kind"] = payload_kind(p);
  auto with_host = [&](const HopfPtr& h) {
    j["field"] = h->field().str();
    j["host"] = host_json(*h);
  };
  auto pair = [&](const HopfPtr& h, const Matrix& a, const Matrix& b) {
    with_host(h);
    j["entries"] = sparse2_json(a);
    j["inverse"] = sparse2_json(b);
  };
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, TwoCocycle>) {
          pair(x.host, x.sigma, x.sigma_inv);
        } else if constexpr (std::is_same_v<T, DualCocycle>) {
          pair(x.host, x.theta, x.theta_inv);
        } else if constexpr (std::is_same_v<T, CqtStructure>) {
          pair(x.host, x.r, x.r_inv);
        } else if constexpr (std::is_same_v<T, QtStructure>) {
          pair(x.host, x.rr, x.rr_inv);
        } else if constexpr (std::is_same_v<T, LazyOneCocycle>) {
          with_host(x.host);
          json e = json::array(), inv = json::array();
          for (std::size_t i = 0; i < x.mu.size(); ++i) {
            if (!x.mu[i].is_zero()) e.push_back({i, x.mu[i].str()});
            if (!x.mu_inv[i].is_zero()) inv.push_back({i, x.mu_inv[i].str()});
          }
          j["entries"] = e;
          j["inverse"] = inv;
        } else if constexpr (std::is_same_v<T, YdModule>) {
          with_host(x.host());
          j["dim"] = x.dim();
          j["action"] = sparse3_json(x.action());
          j["coaction"] = sparse3_json(x.coaction());
        } else if constexpr (std::is_same_v<T, YdAlgebra>) {
          with_host(x.module.host());
          j["dim"] = x.dim();
          j["action"] = sparse3_json(x.module.action());
          j["coaction"] = sparse3_json(x.module.coaction());
          j["mult"] = sparse3_json(x.mult);
          j["unit"] = dense_json(x.unit);
        }
      },
      p);
  return j;
}

CheckReport verify_payload(const Payload& p) {
  return std::visit(
      [](const auto& x) -> CheckReport {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, HopfPtr>) {
          return verify_hopf_axioms(*x);
        } else if constexpr (std::is_same_v<T, TwoCocycle>) {
          return verify_two_cocycle(x);
        } else if constexpr (std::is_same_v<T, DualCocycle>) {
          return verify_dual_cocycle(x);
        } else if constexpr (std::is_same_v<T, LazyOneCocycle>) {
          CheckReport r;
          r.add("normalized", x.mu.empty() || dot(x.host->unit(), x.mu) == Scalar(1));
          r.add("central", is_central(*x.host, x.mu));
          r.add("convolution_inverse", convolve1(*x.host, x.mu, x.mu_inv) == x.host->counit());
          return r;
        } else if constexpr (std::is_same_v<T, CqtStructure>) {
          return verify_cqt(x);
        } else if constexpr (std::is_same_v<T, QtStructure>) {
          return verify_qt(x);
        } else if constexpr (std::is_same_v<T, YdModule>) {
          return verify_yd(x);
        } else {
          return verify_yd_algebra(x);
        }
      },
      p);
}

json report_to_json(const CheckReport& r, const json& meta) {
  std::vector<const Check*> sorted;
  for (const auto& c : r.checks) sorted.push_back(&c);
  std::stable_sort(sorted.begin(), sorted.end(), [](const Check* a, const Check* b) { return a->name < b->name; });
  json checks = json::array();
  for (const Check* c : sorted) {
    json e;
    e["name"] = c->name;
    e["status"] = to_string(c->status);
    e["witness"] = c->witness;
    if (!c->detail.empty()) e["detail"] = c->detail;
    checks.push_back(e);
  }
  json j;
  j["schema"] = kReportSchema;
  j["ok"] = r.ok();
  j["meta"] = meta;
  j["checks"] = checks;
  return j;
}

}  // namespace hopflab
