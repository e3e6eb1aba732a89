// Command-line driver for the verification suites.
//
// Exit status: 0 all records pass, 1 some record fails, 2 configuration error.
// Settings come from a config file (key=value lines or a JSON object, keys
// named like the long flags) and are overridden by flags. The file defaults
// to $ANYONS_VERIFY_CONFIG when --config is absent.
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "anyons/report.hpp"
#include "anyons/suites.hpp"

namespace {

using anyons::ConfigError;
using Settings = std::map<std::string, std::string>;

const std::vector<std::string> kKeys{"suite", "spin",        "mass",         "n",    "seed",    "tol-engine",
                                     "tol-boundary", "tol-pipeline", "grid", "samples", "out", "format", "timing"};

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos)
        return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s)
{
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!trim(item).empty())
            out.push_back(trim(item));
    return out;
}

double parse_real(const std::string& text)
{
    try {
        std::size_t pos = 0;
        if (const auto slash = text.find('/'); slash != std::string::npos) {
            const double num = std::stod(text.substr(0, slash), &pos);
            if (pos != slash)
                throw ConfigError("");
            const std::string den_text = text.substr(slash + 1);
            const double den = std::stod(den_text, &pos);
            if (pos != den_text.size() || den == 0.0)
                throw ConfigError("");
            return num / den;
        }
        const double v = std::stod(text, &pos);
        if (pos != text.size())
            throw ConfigError("");
        return v;
    } catch (const std::exception&) {
        throw ConfigError("not a number: '" + text + "'");
    }
}

long long parse_integer(const std::string& text)
{
    try {
        std::size_t pos = 0;
        const long long v = std::stoll(text, &pos);
        if (pos != text.size())
            throw ConfigError("");
        return v;
    } catch (const std::exception&) {
        throw ConfigError("not an integer: '" + text + "'");
    }
}

bool parse_bool(const std::string& text)
{
    if (text == "true" || text == "1" || text == "yes" || text == "on")
        return true;
    if (text == "false" || text == "0" || text == "no" || text == "off")
        return false;
    throw ConfigError("not a boolean: '" + text + "'");
}

std::string scalar_text(const nlohmann::json& v)
{
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_number_float()) {
        std::ostringstream os;
        os.precision(17);
        os << v.get<double>();
        return os.str();
    }
    return v.dump();
}

Settings read_config_file(const std::string& path)
{
    std::ifstream f(path);
    if (!f)
        throw ConfigError("cannot read config file '" + path + "'");
    std::stringstream buf;
    buf << f.rdbuf();
    const std::string text = buf.str();

    Settings out;
    const std::string head = trim(text);
    if (!head.empty() && head.front() == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            throw ConfigError("config file is not valid JSON: " + std::string(e.what()));
        }
        for (const auto& [key, value] : j.items()) {
            if (value.is_array()) {
                std::string joined;
                for (const auto& v : value)
                    joined += (joined.empty() ? "" : ",") + scalar_text(v);
                out[key] = joined;
            } else {
                out[key] = scalar_text(value);
            }
        }
    } else {
        std::istringstream lines(text);
        std::string line;
        int number = 0;
        while (std::getline(lines, line)) {
            ++number;
            line = trim(line.substr(0, line.find('#')));
            if (line.empty())
                continue;
            const auto eq = line.find('=');
            if (eq == std::string::npos)
                throw ConfigError("config line " + std::to_string(number) + " is not key=value");
            out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
        }
    }
    for (const auto& [key, value] : out)
        if (std::find(kKeys.begin(), kKeys.end(), key) == kKeys.end())
            throw ConfigError("unknown config key '" + key + "'");
    return out;
}

struct Run {
    std::vector<std::string> suites;
    anyons::SuiteConfig config;
    anyons::ReportFormat format = anyons::ReportFormat::json;
};

Run build_run(const Settings& s)
{
    Run run;
    auto has = [&](const char* k) { return s.count(k) > 0; };
    run.suites = has("suite") ? split(s.at("suite")) : std::vector<std::string>{"all"};
    for (const std::string& name : run.suites) {
        const auto& known = anyons::suite_names();
        if (name != "all" && std::find(known.begin(), known.end(), name) == known.end())
            throw ConfigError("unknown suite '" + name + "'");
    }

    anyons::SuiteConfig& c = run.config;
    if (has("spin")) {
        c.spins.clear();
        for (const auto& x : split(s.at("spin")))
            c.spins.push_back(parse_real(x));
    }
    if (has("mass")) {
        c.masses.clear();
        for (const auto& x : split(s.at("mass")))
            c.masses.push_back(parse_real(x));
    }
    if (has("n")) {
        c.multiplicities.clear();
        for (const auto& x : split(s.at("n")))
            c.multiplicities.push_back(static_cast<int>(parse_integer(x)));
    }
    if (has("seed")) {
        c.seeds.clear();
        for (const auto& x : split(s.at("seed"))) {
            const long long v = parse_integer(x);
            if (v < 0)
                throw ConfigError("seeds must be non-negative");
            c.seeds.push_back(static_cast<std::uint64_t>(v));
        }
    }
    if (has("tol-engine"))
        c.tol_engine = parse_real(s.at("tol-engine"));
    if (has("tol-boundary"))
        c.tol_boundary = parse_real(s.at("tol-boundary"));
    if (has("tol-pipeline"))
        c.tol_pipeline = parse_real(s.at("tol-pipeline"));
    if (has("grid"))
        c.grid = static_cast<int>(parse_integer(s.at("grid")));
    if (has("samples"))
        c.samples = static_cast<int>(parse_integer(s.at("samples")));
    if (has("timing"))
        c.timing = parse_bool(s.at("timing"));
    if (has("out"))
        c.out = s.at("out");
    if (has("format")) {
        try {
            run.format = anyons::parse_format(s.at("format"));
        } catch (const std::invalid_argument& e) {
            throw ConfigError(e.what());
        }
    }
    c.validate();
    return run;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Numerical verification of the anyon spin-statistics relation"};
    std::map<std::string, std::string> flags;
    std::string config_path;
    bool timing = false;

    app.add_option("--config", config_path, "config file (key=value or JSON); default $ANYONS_VERIFY_CONFIG");
    app.add_option("--suite", flags["suite"], "comma-separated suites: group, wigner, continuation, cones, "
                                              "pauli-lubanski, spinstat, all (default all)");
    app.add_option("--spin", flags["spin"], "comma-separated spins, fractions allowed (default 0,1/4,1/3,1/2,0.137)");
    app.add_option("--mass", flags["mass"], "comma-separated masses (default 1.3)");
    app.add_option("--n", flags["n"], "comma-separated multiplicities (default 2)");
    app.add_option("--seed", flags["seed"], "comma-separated seeds (default 7)");
    app.add_option("--tol-engine", flags["tol-engine"], "continuation self-consistency tolerance (default 1e-9)");
    app.add_option("--tol-boundary", flags["tol-boundary"], "boundary formula tolerance (default 1e-8)");
    app.add_option("--tol-pipeline", flags["tol-pipeline"], "spin-statistics pipeline tolerance (default 1e-8)");
    app.add_option("--grid", flags["grid"], "momentum grid size k for k x k (default 5)");
    app.add_option("--samples", flags["samples"], "random samples for group and cocycle laws (default 1000)");
    app.add_option("--out", flags["out"], "report file (default stdout)");
    app.add_option("--format", flags["format"], "json, csv or text (default json)");
    app.add_flag("--timing", timing, "record wall-clock runtimes (breaks byte-identical reports)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    Run run;
    try {
        if (config_path.empty())
            if (const char* env = std::getenv("ANYONS_VERIFY_CONFIG"))
                config_path = env;
        Settings settings = config_path.empty() ? Settings{} : read_config_file(config_path);
        for (const auto& [key, value] : flags)
            if (app.get_option("--" + key)->count() > 0)
                settings[key] = value;
        if (timing)
            settings["timing"] = "true";
        run = build_run(settings);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    }

    anyons::Report report;
    report.config = run.config.echo();
    report.config["suites"] = run.suites;
    for (const std::string& name : run.suites)
        report.append(anyons::run_suite(name, run.config));

    try {
        if (run.config.out.empty()) {
            anyons::write_report(report, run.format, std::cout);
        } else {
            anyons::write_report(report, run.format, run.config.out);
            std::size_t failed = 0;
            for (const auto& r : report.records)
                failed += r.pass ? 0 : 1;
            std::cout << report.records.size() << " records, " << failed << " failed\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return report.pass() ? 0 : 1;
}
