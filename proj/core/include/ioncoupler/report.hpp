#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "ioncoupler/config.hpp"

namespace ioncoupler {

/// Which model sections a compute run emits.
enum class compute_model { linear, lumped, both };

compute_model compute_model_from_name(std::string_view name); // throws validation_error
std::string_view compute_model_name(compute_model model);

/// One report value. Numbers serialize in scientific notation with 12
/// significant digits so runs are byte-for-byte reproducible.
using report_value = std::variant<double, std::int64_t, std::string>;

struct report_entry {
    std::string key;
    report_value value;
};

struct report_section {
    std::string name;
    std::vector<report_entry> entries;
};

/// Ordered sections of ordered key/value pairs; ordering is part of the
/// output contract.
struct run_report {
    std::vector<report_section> sections;

    report_section& add_section(std::string name);
    /// Numeric lookup by "section.key"; throws validation_error when absent.
    double number(std::string_view dotted_key) const;
};

struct report_options {
    compute_model model = compute_model::both;
    bool include_timestamp = true; // disabled by --no-timestamp for determinism
};

/// Validate the config, evaluate the requested models, and assemble the
/// report (sections: config, derived, linear, lumped, ratios, provenance).
run_report build_report(const system_config& config, const report_options& options);

/// Fixed-format scientific notation with 12 significant digits.
std::string format_number(double value);

std::string to_json(const run_report& report);
/// Two lines: "section.key" header row, then the values (RFC-4180 commas/LF).
std::string to_csv(const run_report& report);
/// Human-readable aligned key/value listing.
std::string to_text(const run_report& report);

} // namespace ioncoupler
