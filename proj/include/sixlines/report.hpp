#pragma once

#include <json.hpp>

#include "sixlines/configuration.hpp"
#include "sixlines/fibration.hpp"
#include "sixlines/genus_two.hpp"
#include "sixlines/invariants.hpp"
#include "sixlines/quartic.hpp"
#include "sixlines/verification.hpp"

namespace sixlines {

using json = nlohmann::json;

// thrown on malformed request documents (exit code 2 territory)
struct RequestError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// configuration source parsed from {"lines": ...} | {"moduli": ...} | {"rosenhain": ...}
Configuration configuration_from_json(const json& input);

json rational_to_json(const Rational& r);
json quadext_to_json(const QuadExt& v);
template <class K>
json poly_to_json(const Poly<K>& p);

json invariants_report(const Configuration& c);
json classify_report(const Configuration& c);

json fibration_report(FibrationLabel label, const Configuration& c);
json fibration_report(FibrationLabel label, const SolvedParams& params);

json params_report(const Configuration& c);
json isogeny_report();
json tangent_report(const Rational& l1, const Rational& l2, const Rational& l3);
json verify_all_report(std::uint64_t seed, int samples_large, int samples_small);

// true when every entry of the report's results table passed
bool report_ok(const json& report);

inline constexpr const char* kSchemaTag = "sixlines-report/1";

}  // namespace sixlines
