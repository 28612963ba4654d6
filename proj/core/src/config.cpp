#include "ioncoupler/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "ioncoupler/errors.hpp"

namespace ioncoupler {

double spring_constant(const ion_species& ion, const harmonic_trap& trap) {
    const double w = trap.omega();
    return ion.mass_kg * w * w;
}

double disk_self_capacitance(double radius_m) {
    if (!(radius_m > 0.0) || !std::isfinite(radius_m))
        throw validation_error("disk_self_capacitance: radius must be > 0");
    return 8.0 * constants::vacuum_permittivity * radius_m;
}

double wire_self_capacitance(double length_m, double radius_m) {
    if (!(radius_m > 0.0) || !(length_m > radius_m) || !std::isfinite(length_m))
        throw validation_error("wire_self_capacitance: need length > radius > 0");
    return 2.0 * constants::pi * constants::vacuum_permittivity * length_m
           / std::log(length_m / radius_m);
}

self_capacitances compute_self_capacitances(const coupling_geometry& g,
                                            const self_capacitance_model& model) {
    self_capacitances c;
    c.disk1_f = model.disk(g.r1_m);
    c.wire_f = model.wire(g.wire_length_m, g.wire_radius_m);
    c.disk2_f = model.disk(g.r2_m);
    c.total_f = c.disk1_f + c.wire_f + c.disk2_f;
    return c;
}

namespace {

void check_positive(std::vector<config_violation>& out, const std::string& field, double v) {
    if (!std::isfinite(v))
        out.push_back({field, "must be finite"});
    else if (!(v > 0.0)) {
        std::ostringstream msg;
        msg << "must be > 0 (got " << v << ")";
        out.push_back({field, msg.str()});
    }
}

} // namespace

std::vector<config_violation> validate_config(const system_config& c) {
    std::vector<config_violation> v;
    check_positive(v, "ion1.mass_kg", c.ion1.mass_kg);
    check_positive(v, "ion2.mass_kg", c.ion2.mass_kg);
    if (c.ion1.charge_multiple < 1)
        v.push_back({"ion1.charge_multiple", "must be an integer >= 1"});
    if (c.ion2.charge_multiple < 1)
        v.push_back({"ion2.charge_multiple", "must be an integer >= 1"});
    check_positive(v, "trap1.frequency_hz", c.trap1.frequency_hz);
    check_positive(v, "trap2.frequency_hz", c.trap2.frequency_hz);
    check_positive(v, "geometry.r1_m", c.geometry.r1_m);
    check_positive(v, "geometry.r2_m", c.geometry.r2_m);
    check_positive(v, "geometry.d_eq1_m", c.geometry.d_eq1_m);
    check_positive(v, "geometry.d_eq2_m", c.geometry.d_eq2_m);
    check_positive(v, "geometry.wire_length_m", c.geometry.wire_length_m);
    check_positive(v, "geometry.wire_radius_m", c.geometry.wire_radius_m);
    if (c.geometry.wire_radius_m > 0.0 && c.geometry.wire_length_m > 0.0
        && !(c.geometry.wire_length_m > c.geometry.wire_radius_m))
        v.push_back({"geometry.wire_length_m", "must exceed wire_radius_m"});
    if (!std::isfinite(c.lumped.eta) || !(c.lumped.eta > 0.0) || c.lumped.eta > 1.0)
        v.push_back({"lumped.eta", "must be in (0, 1]"});
    if (c.lumped.eta_from_zeta && c.lumped.eta_was_specified)
        v.push_back({"lumped.eta", "give either eta or eta_from_zeta, not both"});
    check_positive(v, "lumped.geometry_factor", c.lumped.geometry_factor);
    if (c.lumped.oscillation_energy1_j)
        check_positive(v, "lumped.oscillation_energy1_j", *c.lumped.oscillation_energy1_j);
    if (c.lumped.oscillation_energy2_j)
        check_positive(v, "lumped.oscillation_energy2_j", *c.lumped.oscillation_energy2_j);
    return v;
}

void require_valid(const system_config& config) {
    const auto violations = validate_config(config);
    if (violations.empty())
        return;
    std::ostringstream msg;
    msg << "invalid configuration:";
    for (const auto& violation : violations)
        msg << "\n  " << violation.field << ": " << violation.message;
    throw validation_error(msg.str());
}

namespace {

using nlohmann::json;

double get_number(const json& section, const std::string& section_name, const char* key) {
    if (!section.contains(key))
        throw validation_error("config: missing field " + section_name + "." + key);
    const auto& value = section.at(key);
    if (!value.is_number())
        throw validation_error("config: " + section_name + "." + key + " must be a number");
    return value.get<double>();
}

void warn_unknown_keys(const json& section, const std::string& section_name,
                       const std::set<std::string>& known, std::vector<std::string>* warnings) {
    if (!warnings)
        return;
    for (const auto& [key, _] : section.items())
        if (!known.count(key))
            warnings->push_back("config: unknown field " + section_name + "." + key + " ignored");
}

ion_species parse_ion(const json& section, const std::string& name, std::vector<std::string>* warnings) {
    warn_unknown_keys(section, name, {"mass_kg", "charge_multiple"}, warnings);
    ion_species ion;
    ion.mass_kg = get_number(section, name, "mass_kg");
    if (section.contains("charge_multiple")) {
        const auto& n = section.at("charge_multiple");
        if (!n.is_number_integer())
            throw validation_error("config: " + name + ".charge_multiple must be an integer");
        ion.charge_multiple = n.get<int>();
    }
    return ion;
}

} // namespace

system_config load_config(std::istream& in, std::vector<std::string>* warnings) {
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw validation_error(std::string("config: JSON parse failure: ") + e.what());
    }
    if (!doc.is_object())
        throw validation_error("config: top level must be a JSON object");

    for (const char* section : {"ion1", "ion2", "trap1", "trap2", "geometry"})
        if (!doc.contains(section))
            throw validation_error(std::string("config: missing section ") + section);
    warn_unknown_keys(doc, "<top>", {"ion1", "ion2", "trap1", "trap2", "geometry", "lumped"}, warnings);

    system_config c;
    c.ion1 = parse_ion(doc.at("ion1"), "ion1", warnings);
    c.ion2 = parse_ion(doc.at("ion2"), "ion2", warnings);

    for (auto [trap, name] : {std::pair{&c.trap1, "trap1"}, std::pair{&c.trap2, "trap2"}}) {
        const auto& section = doc.at(name);
        warn_unknown_keys(section, name, {"frequency_hz"}, warnings);
        trap->frequency_hz = get_number(section, name, "frequency_hz");
    }

    const auto& geo = doc.at("geometry");
    warn_unknown_keys(geo, "geometry",
                      {"r1_m", "r2_m", "d_eq1_m", "d_eq2_m", "wire_length_m", "wire_radius_m"},
                      warnings);
    c.geometry.r1_m = get_number(geo, "geometry", "r1_m");
    c.geometry.r2_m = get_number(geo, "geometry", "r2_m");
    c.geometry.d_eq1_m = get_number(geo, "geometry", "d_eq1_m");
    c.geometry.d_eq2_m = get_number(geo, "geometry", "d_eq2_m");
    c.geometry.wire_length_m = get_number(geo, "geometry", "wire_length_m");
    c.geometry.wire_radius_m = get_number(geo, "geometry", "wire_radius_m");

    if (doc.contains("lumped")) {
        const auto& lumped = doc.at("lumped");
        warn_unknown_keys(lumped, "lumped",
                          {"eta", "eta_from_zeta", "geometry_factor",
                           "oscillation_energy1_j", "oscillation_energy2_j"},
                          warnings);
        if (lumped.contains("eta")) {
            c.lumped.eta = get_number(lumped, "lumped", "eta");
            c.lumped.eta_was_specified = true;
        }
        if (lumped.contains("eta_from_zeta"))
            c.lumped.eta_from_zeta = lumped.at("eta_from_zeta").get<bool>();
        if (lumped.contains("geometry_factor"))
            c.lumped.geometry_factor = get_number(lumped, "lumped", "geometry_factor");
        if (lumped.contains("oscillation_energy1_j"))
            c.lumped.oscillation_energy1_j = get_number(lumped, "lumped", "oscillation_energy1_j");
        if (lumped.contains("oscillation_energy2_j"))
            c.lumped.oscillation_energy2_j = get_number(lumped, "lumped", "oscillation_energy2_j");
    }
    return c;
}

system_config load_config_file(const std::string& path, std::vector<std::string>* warnings) {
    std::ifstream in(path);
    if (!in)
        throw validation_error("config: cannot open file: " + path);
    return load_config(in, warnings);
}

} // namespace ioncoupler
