#include <cstdlib>

#include "doctest.h"
#include "support.hpp"

#include "hopflab/io.hpp"

using namespace testing;

TEST_CASE("every catalog entry verifies and survives a JSON round trip") {
  for (Field f : {Field::rationals(), Field::prime(7)})
    for (const auto& name : catalog_names()) {
      CAPTURE(name);
      CatalogEntry e = catalog_entry(name, f, f.make(name == "cqt_c2" ? -1 : 3));
      CHECK(e.name == name);
      CHECK(verify_payload(e.payload).ok());
      json j = payload_to_json(e.payload);
      Payload back = payload_from_json(parse_json_text(j.dump(), "mem"));
      CHECK(payload_kind(back) == payload_kind(e.payload));
      CHECK(payload_to_json(back) == j);
    }
}

TEST_CASE("provenance of the source tables") {
  Field q = Field::rationals();
  for (const char* name : {"r_t", "sigma_t", "theta_t", "qt_t", "sweedler_h4"})
    CHECK(catalog_entry(name, q, q.one()).provenance == Provenance::Paper);
  CHECK(catalog_entry("h4_coboundary", q, q.one()).provenance == Provenance::Derived);
  CHECK_THROWS_AS(catalog_entry("nope", q, q.one()), std::invalid_argument);
}

TEST_CASE("Hopf JSON round trip with embedded host") {
  HopfPtr h4 = sweedler_h4(Field::rationals());
  json j = hopf_to_json(*h4);
  CHECK(j["kind"] == "hopf");
  CHECK(j["antipode"][3][2] == "1");
  HopfPtr back = hopf_from_json(j);
  CHECK(back->same_structure(*h4));
  CHECK(back->name() == "H4");

  TwoCocycle c = h4_coboundary(h4);
  HopfPtr d = deform(c);
  YdModule m = trivial_module(d, 1);
  json jm = payload_to_json(m);
  CHECK(jm["host"].is_object());
  Payload pm = payload_from_json(jm);
  CHECK(std::get<YdModule>(pm).host()->same_structure(*d));
}

TEST_CASE("malformed and invalid input") {
  try {
    parse_json_text("{\n  \"kind\": \"hopf\",\n  oops\n}", "doc");
    FAIL("no error");
  } catch (const InputError& e) {
    std::string w = e.what();
    CHECK(w.find("line 3") != std::string::npos);
    CHECK(w.find("column") != std::string::npos);
  }
  json j = hopf_to_json(*sweedler_h4(Field::rationals()));
  for (auto& row : j["antipode"])
    for (auto& x : row) x = "0";
  CHECK_THROWS_AS(hopf_from_json(j), StructureError);

  json c = payload_to_json(sigma_t(sweedler_h4(Field::rationals()), Scalar(1)));
  c["entries"][0][0] = 9;
  CHECK_THROWS_AS(payload_from_json(c), InputError);
  c = payload_to_json(sigma_t(sweedler_h4(Field::rationals()), Scalar(1)));
  c["host"] = "unknown";
  CHECK_THROWS_AS(payload_from_json(c), InputError);
  c["kind"] = "weird";
  CHECK_THROWS_AS(payload_from_json(c), InputError);
}

TEST_CASE("dimension cap from the environment") {
  json j = hopf_to_json(*sweedler_h4(Field::rationals()));
  setenv("HOPFLAB_MAX_DIM", "3", 1);
  CHECK_THROWS_AS(hopf_from_json(j), InputError);
  setenv("HOPFLAB_MAX_DIM", "zero", 1);
  CHECK_THROWS_AS(max_dim(), InputError);
  unsetenv("HOPFLAB_MAX_DIM");
  CHECK(max_dim() == 64);
  CHECK(hopf_from_json(j)->dim() == 4);
}

TEST_CASE("reports serialize deterministically") {
  CheckReport r;
  r.add("zeta", true);
  r.add("alpha", false, {1, 2}, "bad");
  json a = report_to_json(r, {{"command", "x"}});
  CHECK(a["schema"] == kReportSchema);
  CHECK(a["ok"] == false);
  CHECK(a["checks"][0]["name"] == "alpha");
  CHECK(a["checks"][0]["witness"] == json::array({1, 2}));
  CheckReport r2;
  r2.add("alpha", false, {1, 2}, "bad");
  r2.add("zeta", true);
  CHECK(report_to_json(r2, {{"command", "x"}}).dump() == a.dump());
}
