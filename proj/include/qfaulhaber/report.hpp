#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qfaulhaber/check_record.hpp"
#include "qfaulhaber/errors.hpp"
#include "qfaulhaber/version.hpp"

namespace qfaulhaber {

// Deterministic verdict reports: fixed key order, no timestamps, sorted
// records, every number carried as text. Two runs with identical flags must
// produce byte-identical bytes, which is itself one of the checked claims.

struct SuiteResult {
    std::string name;
    std::optional<std::string> tolerance;  // decimal text; numeric suites only
    std::vector<CheckRecord> records;

    friend bool operator==(const SuiteResult& a, const SuiteResult& b) {
        return a.name == b.name && a.tolerance == b.tolerance && a.records == b.records;
    }
};

struct Report {
    long format_version = kFormatVersion;
    std::string tool_version = kToolVersion;
    std::vector<SuiteResult> suites;

    friend bool operator==(const Report& a, const Report& b) {
        return a.format_version == b.format_version && a.tool_version == b.tool_version &&
               a.suites == b.suites;
    }
};

inline nlohmann::ordered_json to_json(const CheckRecord& r) {
    nlohmann::ordered_json j;
    j["suite"] = r.suite;
    j["params"] = nlohmann::ordered_json::object();
    for (const auto& [key, value] : r.params) j["params"][key] = value;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["verdict"] = to_string(r.verdict);
    j["residual"] = r.residual;
    return j;
}

inline nlohmann::ordered_json to_json(const Report& report) {
    nlohmann::ordered_json j;
    j["format_version"] = report.format_version;
    j["tool_version"] = report.tool_version;
    j["suites"] = nlohmann::ordered_json::array();
    for (const SuiteResult& suite : report.suites) {
        nlohmann::ordered_json s;
        s["name"] = suite.name;
        if (suite.tolerance) s["tolerance"] = *suite.tolerance;
        s["records"] = nlohmann::ordered_json::array();
        for (const CheckRecord& r : suite.records) s["records"].push_back(to_json(r));
        j["suites"].push_back(std::move(s));
    }
    return j;
}

inline std::string emit_json(const Report& report) { return to_json(report).dump(2) + "\n"; }

// One table per suite; the same fields as the JSON, for human eyes.
inline std::string emit_markdown(const Report& report) {
    std::ostringstream out;
    out << "# verification report\n\n";
    out << "tool " << report.tool_version << ", format " << report.format_version << "\n";
    for (const SuiteResult& suite : report.suites) {
        out << "\n## " << suite.name << "\n\n";
        if (suite.tolerance) out << "tolerance: " << *suite.tolerance << "\n\n";
        out << "| params | lhs | rhs | verdict | residual |\n";
        out << "|---|---|---|---|---|\n";
        for (const CheckRecord& r : suite.records) {
            std::string params;
            for (const auto& [key, value] : r.params) {
                if (!params.empty()) params += ", ";
                params += key + "=" + value;
            }
            out << "| " << params << " | " << r.lhs << " | " << r.rhs << " | "
                << to_string(r.verdict) << " | " << r.residual << " |\n";
        }
    }
    return out.str();
}

inline Report parse_report(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("malformed report: ") + e.what());
    }
    try {
        Report report;
        report.format_version = j.at("format_version").get<long>();
        report.tool_version = j.at("tool_version").get<std::string>();
        for (const auto& s : j.at("suites")) {
            SuiteResult suite;
            suite.name = s.at("name").get<std::string>();
            if (s.contains("tolerance")) suite.tolerance = s.at("tolerance").get<std::string>();
            for (const auto& rj : s.at("records")) {
                CheckRecord r;
                r.suite = rj.at("suite").get<std::string>();
                for (const auto& [key, value] : rj.at("params").items())
                    r.params[key] = value.get<std::string>();
                r.lhs = rj.at("lhs").get<std::string>();
                r.rhs = rj.at("rhs").get<std::string>();
                r.verdict = verdict_from_string(rj.at("verdict").get<std::string>());
                r.residual = rj.at("residual").get<std::string>();
                suite.records.push_back(std::move(r));
            }
            report.suites.push_back(std::move(suite));
        }
        return report;
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("malformed report: ") + e.what());
    }
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path);
    out << content;
    if (!out) throw IoError("short write to " + path);
}

// Field-by-field comparison against a golden report. Only verdicts and
// residuals gate the exit status; added/missing suites and records are
// reported alongside.
struct GoldenDiff {
    std::vector<std::string> differences;
    bool identical() const { return differences.empty(); }
};

inline GoldenDiff compare_golden(const Report& current, const Report& golden) {
    if (current.format_version != golden.format_version)
        throw VersionMismatch("format_version " + std::to_string(current.format_version) +
                              " vs golden " + std::to_string(golden.format_version));
    GoldenDiff diff;
    const auto params_key = [](const CheckRecord& r) {
        std::string key;
        for (const auto& [name, value] : r.params) key += name + "=" + value + ";";
        return key;
    };
    const auto find_suite = [](const Report& rep, const std::string& name) -> const SuiteResult* {
        for (const SuiteResult& s : rep.suites)
            if (s.name == name) return &s;
        return nullptr;
    };
    for (const SuiteResult& suite : current.suites) {
        const SuiteResult* gold = find_suite(golden, suite.name);
        if (!gold) {
            diff.differences.push_back("suite " + suite.name + ": added (absent from golden)");
            continue;
        }
        for (const CheckRecord& r : suite.records) {
            const CheckRecord* match = nullptr;
            for (const CheckRecord& g : gold->records)
                if (params_key(g) == params_key(r)) {
                    match = &g;
                    break;
                }
            if (!match) {
                diff.differences.push_back("suite " + suite.name + " [" + params_key(r) +
                                           "]: added record");
                continue;
            }
            if (r.verdict != match->verdict)
                diff.differences.push_back("suite " + suite.name + " [" + params_key(r) +
                                           "]: verdict " + to_string(r.verdict) + " vs golden " +
                                           to_string(match->verdict));
            if (r.residual != match->residual)
                diff.differences.push_back("suite " + suite.name + " [" + params_key(r) +
                                           "]: residual " + r.residual + " vs golden " +
                                           match->residual);
        }
        for (const CheckRecord& g : gold->records) {
            bool found = false;
            for (const CheckRecord& r : suite.records)
                if (params_key(r) == params_key(g)) {
                    found = true;
                    break;
                }
            if (!found)
                diff.differences.push_back("suite " + suite.name + " [" + params_key(g) +
                                           "]: missing record");
        }
    }
    for (const SuiteResult& gold : golden.suites)
        if (!find_suite(current, gold.name))
            diff.differences.push_back("suite " + gold.name + ": missing (present in golden)");
    return diff;
}

}  // namespace qfaulhaber
