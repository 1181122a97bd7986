#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"

#include "hopflab/catalog.hpp"

namespace hopflab {

using json = nlohmann::json;

// Malformed or out-of-range input (CLI exit code 2).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Well-formed input describing an invalid structure, e.g. a singular antipode (exit code 1).
struct StructureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr const char* kReportSchema = "hopflab-report/1";

// HOPFLAB_MAX_DIM, default 64
std::size_t max_dim();

// Errors carry "line L, column C".
json parse_json_text(const std::string& text, const std::string& origin);
json read_json_file(const std::string& path);

json hopf_to_json(const HopfAlgebra& h);
HopfPtr hopf_from_json(const json& j);

// "host" may be a catalog name (H4, kC2, k) or an embedded Hopf object.
// A non-null `host` overrides whatever the document names.
Payload payload_from_json(const json& j, HopfPtr host = nullptr);
json payload_to_json(const Payload& p);
std::string payload_kind(const Payload& p);

// Runs the verifier matching the payload type.
CheckReport verify_payload(const Payload& p);

// Deterministic: checks sorted by name, no timing.
json report_to_json(const CheckReport& r, const json& meta = json::object());

}  // namespace hopflab
