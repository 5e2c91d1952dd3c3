#include "qfaulhaber/report.hpp"

#include <cstdio>
#include <filesystem>
#include <string>

#include "gtest/gtest.h"

namespace qfaulhaber {
namespace {

CheckRecord make_record(std::string suite, std::map<std::string, std::string> params,
                        std::string lhs, std::string rhs, Verdict verdict) {
    CheckRecord r;
    r.suite = std::move(suite);
    r.params = std::move(params);
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    r.verdict = verdict;
    r.residual = verdict == Verdict::pass ? "(0)" : "(v^2)";
    return r;
}

Report make_report() {
    Report report;
    SuiteResult symbolic;
    symbolic.name = "alpha";
    symbolic.records.push_back(
        make_record("alpha", {{"n", "1"}}, "(v^2)", "(v^2)", Verdict::pass));
    symbolic.records.push_back(
        make_record("alpha", {{"n", "2"}}, "(v^4)", "(v^4 + v^2)", Verdict::fail));
    SuiteResult numeric;
    numeric.name = "beta";
    numeric.tolerance = "1e-08";
    numeric.records.push_back(
        make_record("beta", {{"k", "2"}, {"n", "1"}}, "1.5", "1.5", Verdict::pass));
    report.suites.push_back(std::move(symbolic));
    report.suites.push_back(std::move(numeric));
    return report;
}

TEST(VerdictNames, RoundTrip) {
    for (Verdict v : {Verdict::pass, Verdict::fail, Verdict::singular, Verdict::skipped,
                      Verdict::error})
        EXPECT_EQ(verdict_from_string(to_string(v)), v);
    EXPECT_THROW(verdict_from_string("maybe"), Error);
}

TEST(Records, EqualityIsFieldwise) {
    const CheckRecord a = make_record("s", {{"n", "1"}}, "(v)", "(v)", Verdict::pass);
    CheckRecord b = a;
    EXPECT_TRUE(a == b);
    b.residual = "(1)";
    EXPECT_FALSE(a == b);
    b = a;
    b.verdict = Verdict::fail;
    EXPECT_FALSE(a == b);
    b = a;
    b.params["n"] = "2";
    EXPECT_FALSE(a == b);
}

TEST(Records, OrderingIsNumericAware) {
    const auto rec = [](std::map<std::string, std::string> params) {
        return make_record("s", std::move(params), "", "", Verdict::pass);
    };
    EXPECT_TRUE(record_less(rec({{"n", "2"}}), rec({{"n", "10"}})));
    EXPECT_FALSE(record_less(rec({{"n", "10"}}), rec({{"n", "2"}})));
    EXPECT_TRUE(record_less(rec({{"q", "3/2"}}), rec({{"q", "2"}})));
    // Non-numeric values fall back to string order.
    EXPECT_TRUE(record_less(rec({{"source", "paper"}}), rec({{"source", "reference"}})));
    // A record whose params are a strict prefix sorts first.
    EXPECT_TRUE(record_less(rec({{"n", "1"}}), rec({{"n", "1"}, {"sign", "plus"}})));
    // Suite name dominates.
    CheckRecord other = rec({{"n", "9"}});
    other.suite = "a";
    EXPECT_TRUE(record_less(other, rec({{"n", "1"}})));
}

TEST(ReportJson, RoundTripIsExact) {
    const Report report = make_report();
    const std::string text = emit_json(report);
    EXPECT_EQ(text, emit_json(report));  // byte-deterministic
    EXPECT_EQ(text.back(), '\n');
    const Report parsed = parse_report(text);
    EXPECT_TRUE(parsed == report);
    EXPECT_EQ(parsed.format_version, kFormatVersion);
    EXPECT_EQ(parsed.tool_version, kToolVersion);
}

TEST(ReportJson, KeyOrderIsFixed) {
    const std::string text = emit_json(make_report());
    EXPECT_LT(text.find("\"format_version\""), text.find("\"tool_version\""));
    EXPECT_LT(text.find("\"tool_version\""), text.find("\"suites\""));
    const std::size_t record = text.find("\"suite\"");
    ASSERT_NE(record, std::string::npos);
    EXPECT_LT(record, text.find("\"params\""));
    EXPECT_LT(text.find("\"params\""), text.find("\"lhs\""));
    EXPECT_LT(text.find("\"lhs\""), text.find("\"rhs\""));
    EXPECT_LT(text.find("\"rhs\""), text.find("\"verdict\""));
    EXPECT_LT(text.find("\"verdict\""), text.find("\"residual\""));
    // The symbolic suite carries no tolerance key; the numeric one does.
    EXPECT_EQ(text.find("\"tolerance\""), text.rfind("\"tolerance\""));
    EXPECT_NE(text.find("\"tolerance\": \"1e-08\""), std::string::npos);
}

TEST(Markdown, TableShape) {
    const std::string text = emit_markdown(make_report());
    EXPECT_NE(text.find("# verification report"), std::string::npos);
    EXPECT_NE(text.find("tool " + std::string(kToolVersion)), std::string::npos);
    EXPECT_NE(text.find("## alpha"), std::string::npos);
    EXPECT_NE(text.find("## beta"), std::string::npos);
    EXPECT_NE(text.find("tolerance: 1e-08"), std::string::npos);
    EXPECT_NE(text.find("| params | lhs | rhs | verdict | residual |"), std::string::npos);
    EXPECT_NE(text.find("| n=2 | (v^4) | (v^4 + v^2) | fail | (v^2) |"), std::string::npos);
    // Params are comma-joined in key order.
    EXPECT_NE(text.find("| k=2, n=1 | 1.5 | 1.5 | pass |"), std::string::npos);
}

TEST(Parse, MalformedInputs) {
    EXPECT_THROW(parse_report("{ not json"), Error);
    EXPECT_THROW(parse_report("{}"), Error);                            // missing keys
    EXPECT_THROW(parse_report("{\"format_version\": 1}"), Error);       // still incomplete
    std::string bad_verdict = emit_json(make_report());
    const std::size_t at = bad_verdict.find("\"pass\"");
    ASSERT_NE(at, std::string::npos);
    bad_verdict.replace(at, 6, "\"huh?\"");
    EXPECT_THROW(parse_report(bad_verdict), Error);
    bool threw = false;
    try {
        parse_report("[1, 2");
    } catch (const Error& e) {
        threw = true;
        EXPECT_NE(std::string(e.what()).find("malformed report"), std::string::npos);
    }
    EXPECT_TRUE(threw);
}

TEST(Files, RoundTripAndErrors) {
    const std::string path =
        (std::filesystem::temp_directory_path() / "qfaulhaber_report_test.json").string();
    const std::string text = emit_json(make_report());
    write_file(path, text);
    EXPECT_EQ(read_file(path), text);
    std::remove(path.c_str());
    EXPECT_THROW(read_file(path), IoError);
    EXPECT_THROW(write_file("/no-such-directory/out.json", text), IoError);
}

TEST(Golden, IdenticalReportsHaveNoDiff) {
    const GoldenDiff diff = compare_golden(make_report(), make_report());
    EXPECT_TRUE(diff.identical());
}

TEST(Golden, VerdictAndResidualChangesAreNamed) {
    const Report golden = make_report();
    Report current = golden;
    current.suites[0].records[1].verdict = Verdict::pass;
    current.suites[0].records[1].residual = "(0)";
    const GoldenDiff diff = compare_golden(current, golden);
    ASSERT_EQ(diff.differences.size(), 2u);
    EXPECT_NE(diff.differences[0].find("suite alpha [n=2;]"), std::string::npos);
    EXPECT_NE(diff.differences[0].find("verdict pass vs golden fail"), std::string::npos);
    EXPECT_NE(diff.differences[1].find("residual (0) vs golden (v^2)"), std::string::npos);
}

TEST(Golden, AddedAndMissingRecords) {
    const Report golden = make_report();
    Report current = golden;
    current.suites[0].records.push_back(
        make_record("alpha", {{"n", "3"}}, "(v^6)", "(v^6)", Verdict::pass));
    GoldenDiff diff = compare_golden(current, golden);
    ASSERT_EQ(diff.differences.size(), 1u);
    EXPECT_NE(diff.differences[0].find("[n=3;]: added record"), std::string::npos);

    current = golden;
    current.suites[0].records.pop_back();
    diff = compare_golden(current, golden);
    ASSERT_EQ(diff.differences.size(), 1u);
    EXPECT_NE(diff.differences[0].find("[n=2;]: missing record"), std::string::npos);
}

TEST(Golden, AddedAndMissingSuites) {
    const Report golden = make_report();
    Report current = golden;
    SuiteResult extra;
    extra.name = "gamma";
    current.suites.push_back(extra);
    GoldenDiff diff = compare_golden(current, golden);
    ASSERT_EQ(diff.differences.size(), 1u);
    EXPECT_EQ(diff.differences[0], "suite gamma: added (absent from golden)");

    current = golden;
    current.suites.pop_back();
    diff = compare_golden(current, golden);
    ASSERT_EQ(diff.differences.size(), 1u);
    EXPECT_EQ(diff.differences[0], "suite beta: missing (present in golden)");
}

TEST(Golden, FormatVersionMismatchThrows) {
    const Report golden = make_report();
    Report current = golden;
    current.format_version = 99;
    EXPECT_THROW(compare_golden(current, golden), VersionMismatch);
}

}  // namespace
}  // namespace qfaulhaber
