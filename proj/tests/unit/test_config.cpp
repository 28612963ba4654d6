#include <sstream>

#include "doctest.h"
#include "ioncoupler/config.hpp"
#include "ioncoupler/errors.hpp"

using namespace ioncoupler;

namespace {

const char* full_document = R"({
  "ion1": { "mass_kg": 6.64e-26, "charge_multiple": 1 },
  "ion2": { "mass_kg": 6.64e-26, "charge_multiple": 1 },
  "trap1": { "frequency_hz": 1.0e6 },
  "trap2": { "frequency_hz": 1.0e6 },
  "geometry": {
    "r1_m": 2.5e-4, "r2_m": 2.5e-4,
    "d_eq1_m": 5.0e-5, "d_eq2_m": 5.0e-5,
    "wire_length_m": 1.0e-2, "wire_radius_m": 2.5e-5
  }
})";

system_config load_text(const std::string& text, std::vector<std::string>* warnings = nullptr) {
    std::istringstream in(text);
    return load_config(in, warnings);
}

} // namespace

TEST_CASE("full config document loads with every field in place") {
    const auto c = load_text(full_document);
    CHECK(c.ion1.mass_kg == 6.64e-26);
    CHECK(c.ion1.charge_multiple == 1);
    CHECK(c.trap2.frequency_hz == 1.0e6);
    CHECK(c.geometry.r1_m == 2.5e-4);
    CHECK(c.geometry.wire_radius_m == 2.5e-5);
    // defaults when the lumped section is absent
    CHECK(c.lumped.eta == 1.0);
    CHECK_FALSE(c.lumped.eta_from_zeta);
    CHECK_FALSE(c.lumped.eta_was_specified);
    CHECK(validate_config(c).empty());
}

TEST_CASE("angular frequency is 2 pi times the configured frequency") {
    harmonic_trap trap{1.0e6};
    CHECK(trap.omega() == doctest::Approx(6.283185307180e+06).epsilon(1e-12));
}

TEST_CASE("ion charge scales with the charge multiple") {
    ion_species doubly{6.64e-26, 2};
    CHECK(doubly.charge_c() == doctest::Approx(2 * 1.602176634e-19).epsilon(1e-15));
}

TEST_CASE("spring constant of the reference trap") {
    const auto c = load_text(full_document);
    CHECK(spring_constant(c.ion1, c.trap1) ==
          doctest::Approx(2.621366928929e-12).epsilon(1e-12));
}

TEST_CASE("self-capacitance estimates for the reference geometry") {
    CHECK(disk_self_capacitance(2.5e-4) == doctest::Approx(1.770837562560e-14).epsilon(1e-12));
    CHECK(wire_self_capacitance(1e-2, 2.5e-5) ==
          doctest::Approx(9.285292825315e-14).epsilon(1e-12));

    const auto c = load_text(full_document);
    const auto caps = compute_self_capacitances(c.geometry);
    CHECK(caps.disk1_f == caps.disk2_f);
    CHECK(caps.total_f == doctest::Approx(1.282696795044e-13).epsilon(1e-12));
    CHECK(caps.total_f == caps.disk1_f + caps.wire_f + caps.disk2_f);
}

TEST_CASE("self-capacitance estimators are replaceable") {
    const auto c = load_text(full_document);
    self_capacitance_model doubled;
    doubled.disk = [](double r) { return 2.0 * disk_self_capacitance(r); };
    doubled.wire = [](double l, double a) { return 2.0 * wire_self_capacitance(l, a); };
    const auto caps = compute_self_capacitances(c.geometry, doubled);
    const auto base = compute_self_capacitances(c.geometry);
    CHECK(caps.total_f == doctest::Approx(2.0 * base.total_f).epsilon(1e-14));
}

TEST_CASE("wire estimate requires length greater than radius") {
    CHECK_THROWS_AS(wire_self_capacitance(1e-5, 1e-5), validation_error);
    CHECK_THROWS_AS(wire_self_capacitance(1e-5, 2e-5), validation_error);
    CHECK_THROWS_AS(disk_self_capacitance(0.0), validation_error);
}

TEST_CASE("validation returns the complete list of violations") {
    auto c = load_text(full_document);
    c.ion1.mass_kg = -1.0;
    c.geometry.r2_m = 0.0;
    c.trap2.frequency_hz = -5.0;
    const auto violations = validate_config(c);
    REQUIRE(violations.size() >= 3);
    bool saw_mass = false, saw_r2 = false, saw_freq = false;
    for (const auto& v : violations) {
        if (v.field == "ion1.mass_kg") saw_mass = true;
        if (v.field == "geometry.r2_m") saw_r2 = true;
        if (v.field == "trap2.frequency_hz") saw_freq = true;
    }
    CHECK(saw_mass);
    CHECK(saw_r2);
    CHECK(saw_freq);
    CHECK_THROWS_AS(require_valid(c), validation_error);
}

TEST_CASE("eta must lie in (0, 1] and excludes eta_from_zeta") {
    auto c = load_text(full_document);
    c.lumped.eta = 1.5;
    CHECK_FALSE(validate_config(c).empty());
    c.lumped.eta = 0.0;
    CHECK_FALSE(validate_config(c).empty());
    c.lumped.eta = 0.5;
    c.lumped.eta_was_specified = true;
    c.lumped.eta_from_zeta = true;
    CHECK_FALSE(validate_config(c).empty());
    c.lumped.eta_from_zeta = false;
    CHECK(validate_config(c).empty());
}

TEST_CASE("missing sections and fields are named in the error") {
    CHECK_THROWS_WITH_AS(load_text("{}"), doctest::Contains("missing section"),
                         validation_error);
    std::string no_freq = full_document;
    const auto pos = no_freq.find("\"frequency_hz\": 1.0e6 },\n  \"trap2\"");
    REQUIRE(pos != std::string::npos);
    no_freq.replace(pos, 21, "\"f\": 1.0e6");
    CHECK_THROWS_WITH_AS(load_text(no_freq), doctest::Contains("trap1.frequency_hz"),
                         validation_error);
}

TEST_CASE("malformed JSON and non-integer charge multiples are rejected") {
    CHECK_THROWS_AS(load_text("not json"), validation_error);
    std::string fractional = full_document;
    const auto pos = fractional.find("\"charge_multiple\": 1 }");
    fractional.replace(pos, 22, "\"charge_multiple\": 1.5 }");
    CHECK_THROWS_WITH_AS(load_text(fractional), doctest::Contains("integer"), validation_error);
}

TEST_CASE("unknown keys are warned about, not rejected") {
    std::string extra = full_document;
    extra.insert(extra.rfind('}') - 1, ", \"units\": \"SI\"");
    std::vector<std::string> warnings;
    CHECK_NOTHROW(load_text(extra, &warnings));
    REQUIRE(warnings.size() == 1);
    CHECK(warnings[0].find("units") != std::string::npos);
}

TEST_CASE("lumped section round-trips through the loader") {
    std::string with_lumped = full_document;
    with_lumped.insert(with_lumped.rfind('}') - 1,
                       ", \"lumped\": { \"eta\": 0.25, \"oscillation_energy1_j\": 1e-27 }");
    const auto c = load_text(with_lumped);
    CHECK(c.lumped.eta == 0.25);
    CHECK(c.lumped.eta_was_specified);
    REQUIRE(c.lumped.oscillation_energy1_j.has_value());
    CHECK(*c.lumped.oscillation_energy1_j == 1e-27);
    CHECK_FALSE(c.lumped.oscillation_energy2_j.has_value());
}

TEST_CASE("missing config file names the path") {
    CHECK_THROWS_WITH_AS(load_config_file("/nonexistent/path.json"),
                         doctest::Contains("/nonexistent/path.json"), validation_error);
}
