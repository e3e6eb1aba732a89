#include "anyons/report.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace anyons {

namespace {

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

std::string compact(const ordered_json& j)
{
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : j.items()) {
        if (!first)
            os << ' ';
        first = false;
        os << k << '=' << (v.is_string() ? v.get<std::string>() : v.dump());
    }
    return os.str();
}

}  // namespace

bool Report::pass() const
{
    for (const Record& r : records)
        if (!r.pass)
            return false;
    return true;
}

void Report::append(const Report& other)
{
    records.insert(records.end(), other.records.begin(), other.records.end());
}

ReportFormat parse_format(const std::string& name)
{
    if (name == "json")
        return ReportFormat::json;
    if (name == "csv")
        return ReportFormat::csv;
    if (name == "text")
        return ReportFormat::text;
    throw std::invalid_argument("unknown report format '" + name + "'");
}

ordered_json to_json(const Record& r)
{
    ordered_json j;
    j["suite"] = r.suite;
    j["anchor"] = r.anchor;
    j["inputs"] = r.inputs;
    j["residuals"] = r.residuals;
    j["pass"] = r.pass;
    j["runtime_ms"] = r.runtime_ms;
    return j;
}

ordered_json to_json(const Report& r)
{
    ordered_json j;
    j["version"] = Report::version;
    j["config-echo"] = r.config;
    j["records"] = ordered_json::array();
    for (const Record& rec : r.records)
        j["records"].push_back(to_json(rec));
    return j;
}

Report report_from_json(const ordered_json& j)
{
    Report r;
    r.config = j.at("config-echo");
    for (const auto& jr : j.at("records")) {
        Record rec;
        rec.suite = jr.at("suite").get<std::string>();
        rec.anchor = jr.at("anchor").get<std::string>();
        rec.inputs = jr.at("inputs");
        rec.residuals = jr.at("residuals");
        rec.pass = jr.at("pass").get<bool>();
        rec.runtime_ms = jr.at("runtime_ms").get<double>();
        r.records.push_back(std::move(rec));
    }
    return r;
}

std::string render(const Report& r, ReportFormat format)
{
    std::ostringstream os;
    switch (format) {
    case ReportFormat::json:
        os << to_json(r).dump(2) << '\n';
        break;
    case ReportFormat::csv:
        os << "suite,anchor,inputs,residuals,pass,runtime_ms\n";
        for (const Record& rec : r.records)
            os << csv_field(rec.suite) << ',' << csv_field(rec.anchor) << ',' << csv_field(rec.inputs.dump()) << ','
               << csv_field(rec.residuals.dump()) << ',' << (rec.pass ? "true" : "false") << ','
               << ordered_json(rec.runtime_ms).dump() << '\n';
        break;
    case ReportFormat::text:
        for (const Record& rec : r.records) {
            os << (rec.pass ? "PASS " : "FAIL ") << rec.suite << " | " << rec.anchor << " | " << compact(rec.inputs)
               << " | " << compact(rec.residuals);
            if (rec.runtime_ms > 0.0)
                os << " | " << rec.runtime_ms << " ms";
            os << '\n';
        }
        os << (r.pass() ? "all passed" : "FAILURES") << " (" << r.records.size() << " records)\n";
        break;
    }
    return os.str();
}

void write_report(const Report& r, ReportFormat format, std::ostream& os)
{
    os << render(r, format);
}

void write_report(const Report& r, ReportFormat format, const std::string& path)
{
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw std::runtime_error("cannot open report file '" + path + "'");
    write_report(r, format, f);
    if (!f)
        throw std::runtime_error("failed writing report file '" + path + "'");
}

}  // namespace anyons
