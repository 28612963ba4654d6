#include "ioncoupler/report.hpp"

#include <cmath>
#include <cstdio>
#include <ctime>
#include <sstream>

#include "ioncoupler/errors.hpp"
#include "ioncoupler/linear.hpp"
#include "ioncoupler/log.hpp"
#include "ioncoupler/lumped.hpp"
#include "ioncoupler/version.hpp"

namespace ioncoupler {

compute_model compute_model_from_name(std::string_view name) {
    if (name == "linear") return compute_model::linear;
    if (name == "lumped") return compute_model::lumped;
    if (name == "both") return compute_model::both;
    throw validation_error("unknown model '" + std::string(name) +
                           "'; expected linear, lumped, or both");
}

std::string_view compute_model_name(compute_model model) {
    switch (model) {
    case compute_model::linear: return "linear";
    case compute_model::lumped: return "lumped";
    case compute_model::both: return "both";
    }
    return "both";
}

report_section& run_report::add_section(std::string name) {
    sections.push_back({std::move(name), {}});
    return sections.back();
}

double run_report::number(std::string_view dotted_key) const {
    const auto dot = dotted_key.find('.');
    if (dot == std::string_view::npos)
        throw validation_error("report lookup needs a section.key path");
    const auto section_name = dotted_key.substr(0, dot);
    const auto key = dotted_key.substr(dot + 1);
    for (const auto& section : sections) {
        if (section.name != section_name)
            continue;
        for (const auto& entry : section.entries) {
            if (entry.key != key)
                continue;
            if (const auto* d = std::get_if<double>(&entry.value))
                return *d;
            if (const auto* i = std::get_if<std::int64_t>(&entry.value))
                return static_cast<double>(*i);
            throw validation_error("report entry is not numeric: " + std::string(dotted_key));
        }
    }
    throw validation_error("report entry not found: " + std::string(dotted_key));
}

std::string format_number(double value) {
    if (!std::isfinite(value))
        throw numerical_error("report: non-finite value cannot be serialized");
    if (value == 0.0)
        value = 0.0; // collapse -0 for byte-stable output
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.11e", value);
    return buffer;
}

namespace {

std::string current_timestamp_utc() {
    const std::time_t now = std::time(nullptr);
    std::tm utc{};
    gmtime_r(&now, &utc);
    char buffer[32];
    std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &utc);
    return buffer;
}

std::string json_escape(const std::string& text) {
    std::string out;
    out.reserve(text.size() + 2);
    for (const char ch : text) {
        switch (ch) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        default:
            if (static_cast<unsigned char>(ch) < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof(buf), "\\u%04x", ch);
                out += buf;
            } else {
                out += ch;
            }
        }
    }
    return out;
}

std::string value_text(const report_value& value) {
    if (const auto* d = std::get_if<double>(&value))
        return format_number(*d);
    if (const auto* i = std::get_if<std::int64_t>(&value))
        return std::to_string(*i);
    return std::get<std::string>(value);
}

std::string csv_field(const std::string& text) {
    if (text.find_first_of(",\"\n") == std::string::npos)
        return text;
    std::string quoted = "\"";
    for (const char ch : text) {
        quoted += ch;
        if (ch == '"')
            quoted += '"';
    }
    quoted += '"';
    return quoted;
}

void echo_config(run_report& report, const system_config& c) {
    auto& section = report.add_section("config");
    auto num = [&](std::string key, double v) { section.entries.push_back({std::move(key), v}); };
    section.entries.push_back({"ion1.mass_kg", c.ion1.mass_kg});
    section.entries.push_back(
        {"ion1.charge_multiple", static_cast<std::int64_t>(c.ion1.charge_multiple)});
    section.entries.push_back({"ion2.mass_kg", c.ion2.mass_kg});
    section.entries.push_back(
        {"ion2.charge_multiple", static_cast<std::int64_t>(c.ion2.charge_multiple)});
    num("trap1.frequency_hz", c.trap1.frequency_hz);
    num("trap2.frequency_hz", c.trap2.frequency_hz);
    num("geometry.r1_m", c.geometry.r1_m);
    num("geometry.r2_m", c.geometry.r2_m);
    num("geometry.d_eq1_m", c.geometry.d_eq1_m);
    num("geometry.d_eq2_m", c.geometry.d_eq2_m);
    num("geometry.wire_length_m", c.geometry.wire_length_m);
    num("geometry.wire_radius_m", c.geometry.wire_radius_m);
}

bool asymmetric_chain(const system_config& c) {
    return c.geometry.r1_m != c.geometry.r2_m || c.geometry.d_eq1_m != c.geometry.d_eq2_m ||
           c.ion1.charge_multiple != c.ion2.charge_multiple;
}

} // namespace

run_report build_report(const system_config& config, const report_options& options) {
    require_valid(config);
    const auto caps = compute_self_capacitances(config.geometry);
    const bool want_linear =
        options.model == compute_model::linear || options.model == compute_model::both;
    const bool want_lumped =
        options.model == compute_model::lumped || options.model == compute_model::both;

    run_report report;
    echo_config(report, config);

    {
        auto& derived = report.add_section("derived");
        auto num = [&](std::string key, double v) { derived.entries.push_back({std::move(key), v}); };
        num("q1_c", config.ion1.charge_c());
        num("q2_c", config.ion2.charge_c());
        num("omega1_rad_per_s", config.trap1.omega());
        num("omega2_rad_per_s", config.trap2.omega());
        num("k1_n_per_m", spring_constant(config.ion1, config.trap1));
        num("k2_n_per_m", spring_constant(config.ion2, config.trap2));
        num("c_disk1_f", caps.disk1_f);
        num("c_wire_f", caps.wire_f);
        num("c_disk2_f", caps.disk2_f);
        num("c_total_f", caps.total_f);
    }

    double gamma_linear = 0.0;
    if (want_linear) {
        const auto elements = build_linear_elements(config, caps);
        gamma_linear = elements.coupling_n_per_m;
        auto& linear = report.add_section("linear");
        auto num = [&](std::string key, double v) { linear.entries.push_back({std::move(key), v}); };
        num("a12_c_per_m", elements.charge_response_c_per_m);
        num("zeta", elements.transfer_fraction);
        num("a34_n_per_c", elements.force_response_n_per_c);
        num("gamma_n_per_m", elements.coupling_n_per_m);
        if (asymmetric_chain(config))
            num("gamma_reverse_n_per_m", elements.coupling_reverse_n_per_m);
        num("g_rad_per_s", elements.rabi_rate_rad_per_s);
        num("t_swap_s", elements.swap_time_s);

        if (options.model == compute_model::linear &&
            (config.lumped.eta_was_specified || config.lumped.eta_from_zeta))
            log::warn("config field lumped.eta is unused with model=linear");
    }

    double gamma_plate = 0.0;
    if (want_lumped) {
        double eta = config.lumped.eta;
        if (config.lumped.eta_from_zeta)
            eta = far_disk_transfer_fraction(caps);

        auto& lumped = report.add_section("lumped");
        auto num = [&](std::string key, double v) { lumped.entries.push_back({std::move(key), v}); };
        lumped_elements per_ion[2] = {build_lumped_elements(config, 1, eta),
                                      build_lumped_elements(config, 2, eta)};
        for (int i = 0; i < 2; ++i) {
            const std::string prefix = i == 0 ? "ion1." : "ion2.";
            const auto& e = per_ion[i];
            num(prefix + "oscillation_energy_j", e.oscillation_energy_j);
            num(prefix + "plate_separation_m", e.plate_separation_m);
            num(prefix + "energy_capacitance_f", e.energy_capacitance_f);
            num(prefix + "energy_inductance_h", e.energy_inductance_h);
            num(prefix + "motional_capacitance_f", e.motional_capacitance_f);
            num(prefix + "motional_inductance_h", e.motional_inductance_h);
            num(prefix + "corrected_motional_capacitance_f", e.corrected_motional_capacitance_f);
        }
        num("eta", eta);

        if (config.ion1.mass_kg != config.ion2.mass_kg ||
            config.trap1.frequency_hz != config.trap2.frequency_hz)
            throw unsupported_configuration(
                "plate coupling is defined for identical ions in equal traps");
        plate_coupling_inputs inputs;
        inputs.mass_kg = config.ion1.mass_kg;
        inputs.omega = config.trap1.omega();
        inputs.c1_f = per_ion[0].motional_capacitance_f;
        inputs.c2_f = per_ion[1].motional_capacitance_f;
        inputs.c_total_f = caps.total_f;
        inputs.charge1_c = config.ion1.charge_c();
        inputs.charge2_c = config.ion2.charge_c();
        inputs.gap1_m = config.geometry.d_eq1_m;
        inputs.gap2_m = config.geometry.d_eq2_m;
        inputs.geometry_factor = config.lumped.geometry_factor;
        const auto plate = plate_coupling_strength(inputs);
        gamma_plate = plate.exact_n_per_m;
        num("plate_coupling_exact_n_per_m", plate.exact_n_per_m);
        num("plate_coupling_large_c_n_per_m", plate.large_c_n_per_m);
        num("plate_coupling_charge_form_n_per_m", plate.charge_form_n_per_m);
    }

    if (want_linear && want_lumped) {
        auto& ratios = report.add_section("ratios");
        ratios.entries.push_back({"gamma_linear_over_gamma_plate", gamma_linear / gamma_plate});
        ratios.entries.push_back({"g_rad_per_s", report.number("linear.g_rad_per_s")});
        ratios.entries.push_back({"t_swap_s", report.number("linear.t_swap_s")});
    }

    auto& provenance = report.add_section("provenance");
    provenance.entries.push_back({"tool_version", std::string(version)});
    provenance.entries.push_back({"model", std::string(compute_model_name(options.model))});
    if (options.include_timestamp)
        provenance.entries.push_back({"timestamp_utc", current_timestamp_utc()});
    return report;
}

std::string to_json(const run_report& report) {
    std::ostringstream out;
    out << "{\n";
    for (std::size_t s = 0; s < report.sections.size(); ++s) {
        const auto& section = report.sections[s];
        out << "  \"" << json_escape(section.name) << "\": {\n";
        for (std::size_t i = 0; i < section.entries.size(); ++i) {
            const auto& entry = section.entries[i];
            out << "    \"" << json_escape(entry.key) << "\": ";
            if (const auto* text = std::get_if<std::string>(&entry.value))
                out << '"' << json_escape(*text) << '"';
            else
                out << value_text(entry.value);
            out << (i + 1 < section.entries.size() ? ",\n" : "\n");
        }
        out << (s + 1 < report.sections.size() ? "  },\n" : "  }\n");
    }
    out << "}\n";
    return out.str();
}

std::string to_csv(const run_report& report) {
    std::ostringstream header;
    std::ostringstream row;
    bool first = true;
    for (const auto& section : report.sections) {
        for (const auto& entry : section.entries) {
            if (!first) {
                header << ',';
                row << ',';
            }
            first = false;
            header << csv_field(section.name + "." + entry.key);
            row << csv_field(value_text(entry.value));
        }
    }
    return header.str() + "\n" + row.str() + "\n";
}

std::string to_text(const run_report& report) {
    std::ostringstream out;
    for (const auto& section : report.sections) {
        out << section.name << ":\n";
        std::size_t width = 0;
        for (const auto& entry : section.entries)
            width = std::max(width, entry.key.size());
        for (const auto& entry : section.entries) {
            out << "  " << entry.key;
            out << std::string(width - entry.key.size() + 2, ' ');
            out << value_text(entry.value) << "\n";
        }
    }
    return out.str();
}

} // namespace ioncoupler
