// Verification records and their JSON, CSV and text renderings.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace anyons {

using ordered_json = nlohmann::ordered_json;

struct Record {
    std::string suite;
    std::string anchor;  // what is being checked, in words
    ordered_json inputs = ordered_json::object();
    ordered_json residuals = ordered_json::object();
    bool pass = false;
    double runtime_ms = 0.0;
};

struct Report {
    static constexpr const char* version = "1.0";

    ordered_json config = ordered_json::object();
    std::vector<Record> records;

    /// Conjunction over the records; true for an empty report.
    bool pass() const;
    void append(const Report& other);
};

enum class ReportFormat { json, csv, text };

/// Throws std::invalid_argument for an unknown name.
ReportFormat parse_format(const std::string& name);

ordered_json to_json(const Record& r);
ordered_json to_json(const Report& r);
/// Throws nlohmann::json::exception on a malformed document.
Report report_from_json(const ordered_json& j);

std::string render(const Report& r, ReportFormat format);
void write_report(const Report& r, ReportFormat format, std::ostream& os);
/// Throws std::runtime_error if the file cannot be written.
void write_report(const Report& r, ReportFormat format, const std::string& path);

}  // namespace anyons
