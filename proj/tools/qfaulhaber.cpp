#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qfaulhaber/numeric.hpp"
#include "qfaulhaber/q_bernoulli.hpp"
#include "qfaulhaber/q_power_sums.hpp"
#include "qfaulhaber/report.hpp"
#include "qfaulhaber/suites.hpp"
#include "qfaulhaber/version.hpp"

namespace {

using namespace qfaulhaber;

// Exit codes: 0 ok / matched golden, 1 golden mismatch, 2 usage or tool
// error, 3 unresolved singularity under --strict.

struct VerifyArgs {
    std::string suite;
    long n_max = -1, k_max = -1, m_max = -1;
    std::string q_text;
    long precision = BigFloat::kDefaultPrecision;
    double tol = 1e-8;
    std::string format = "json";
    std::string out_path;
    std::string golden_path;
    bool strict = false;
};

int run_verify(const VerifyArgs& args) {
    SuiteOptions opt;
    opt.n_max = args.n_max;
    opt.k_max = args.k_max;
    opt.m_max = args.m_max;
    if (!args.q_text.empty()) opt.q = rational_from_string(args.q_text);
    opt.precision = args.precision;
    opt.tol = args.tol;

    std::vector<std::string> names;
    if (args.suite == "all")
        names = all_suite_names();
    else
        names.push_back(args.suite);

    const Report report = build_report(names, opt);
    const std::string payload =
        args.format == "md" ? emit_markdown(report) : emit_json(report);
    if (args.out_path.empty())
        std::cout << payload;
    else
        write_file(args.out_path, payload);

    if (!args.golden_path.empty()) {
        const Report golden = parse_report(read_file(args.golden_path));
        const GoldenDiff diff = compare_golden(report, golden);
        if (!diff.identical()) {
            for (const std::string& line : diff.differences) std::cerr << line << "\n";
            std::cerr << diff.differences.size() << " difference(s) vs golden\n";
            return 1;
        }
    }
    if (args.strict)
        for (const SuiteResult& suite : report.suites)
            for (const CheckRecord& r : suite.records)
                if (r.verdict == Verdict::singular) {
                    std::cerr << "unresolved singularity in suite " << suite.name << "\n";
                    return 3;
                }
    return 0;
}

void print_regularized(const RegularizedValue& value) {
    std::cout << "value: "
              << (value.maybe_value ? value.maybe_value->to_canonical_string() : "singular")
              << "\n";
    std::cout << "status: " << to_string(value.status) << "\n";
    std::cout << "singular_terms: " << singular_terms_to_string(value.singular_terms) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verifier for q-power-sum identities and their q-Bernoulli closed forms"};
    app.set_version_flag("--version", qfaulhaber::kToolVersion);
    app.require_subcommand(1);

    VerifyArgs vargs;
    CLI::App* verify = app.add_subcommand("verify", "run verification suites, emit a report");
    verify->add_option("--suite", vargs.suite, "suite id or 'all'")->required();
    verify->add_option("--n-max", vargs.n_max, "upper n bound (default: per suite)");
    verify->add_option("--k-max", vargs.k_max, "upper k bound (default: per suite)");
    verify->add_option("--m-max", vargs.m_max, "upper m bound (default: per suite)");
    verify->add_option("--q", vargs.q_text, "exact rational q for numeric suites, e.g. 3/2");
    verify->add_option("--precision", vargs.precision, "float precision in bits (default 256)");
    verify->add_option("--tol", vargs.tol, "numeric comparison tolerance (default 1e-8)");
    verify->add_option("--format", vargs.format, "report format")
        ->check(CLI::IsMember({"json", "md"}));
    verify->add_option("--out", vargs.out_path, "write the report to this path");
    verify->add_option("--golden", vargs.golden_path, "compare against this golden report");
    verify->add_flag("--strict", vargs.strict, "exit 3 on any unresolved singularity");

    CLI::App* eval = app.add_subcommand("eval", "evaluate one object");
    eval->require_subcommand(1);

    long bn = 0, bk = 0;
    std::string bsource = "paper", bwhich = "numbers";
    CLI::App* beta = eval->add_subcommand("beta-star", "a q-Bernoulli closed form");
    beta->add_option("--n", bn)->required();
    beta->add_option("--k", bk)->required();
    beta->add_option("--source", bsource)->check(CLI::IsMember({"paper", "reference"}));
    beta->add_option("--which", bwhich)->check(CLI::IsMember({"numbers", "polynomials"}));

    long sm = 0, sn = 0;
    CLI::App* sum = eval->add_subcommand("sum", "direct power sum S_{m,n}");
    sum->add_option("--m", sm)->required();
    sum->add_option("--n", sn)->required();

    long zs = 0, zk = 0, zprec = qfaulhaber::BigFloat::kDefaultPrecision;
    std::string zq, zvariant = "derived", zwhich = "numbers";
    CLI::App* zeta = eval->add_subcommand("zeta", "truncated q-zeta series value");
    zeta->add_option("--s", zs)->required();
    zeta->add_option("--k", zk)->required();
    zeta->add_option("--q", zq, "exact rational, e.g. 3/2")->required();
    zeta->add_option("--variant", zvariant)->check(CLI::IsMember({"paper", "derived"}));
    zeta->add_option("--which", zwhich)->check(CLI::IsMember({"numbers", "polynomials"}));
    zeta->add_option("--precision", zprec);

    long lm = -1, ln = -1, lk = -1;
    std::string lop, lvariant = "linear";
    CLI::App* limit = app.add_subcommand("limit", "classical v -> 1 limit of a direct sum");
    limit->add_option("--op", lop)
        ->required()
        ->check(CLI::IsMember(
            {"schlosser_sum", "thm3_lhs", "warnaar_lhs", "garrett_hummel_lhs", "kim_sum"}));
    limit->add_option("--m", lm);
    limit->add_option("--n", ln);
    limit->add_option("--k", lk);
    limit->add_option("--variant", lvariant)->check(CLI::IsMember({"linear", "square"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        using namespace qfaulhaber;
        if (verify->parsed()) return run_verify(vargs);
        if (beta->parsed()) {
            const Thm3Source source =
                bsource == "paper" ? Thm3Source::paper : Thm3Source::reference;
            RegularizedValue value;
            if (bwhich == "numbers")
                value = source == Thm3Source::paper ? beta_star_paper(bn, bk)
                                                    : beta_star_reference(bn, bk);
            else
                value = source == Thm3Source::paper ? beta_star_poly_paper(bn, bk)
                                                    : beta_star_poly_reference(bn, bk);
            print_regularized(value);
            return 0;
        }
        if (sum->parsed()) {
            std::cout << schlosser_sum(sm, sn).to_canonical_string() << "\n";
            return 0;
        }
        if (zeta->parsed()) {
            NumericParams p;
            p.q = rational_from_string(zq);
            p.precision = zprec;
            const BigFloat value = zeta_star_series(zs, zk, p, which_from_string(zwhich),
                                                    zeta_variant_from_string(zvariant));
            std::cout << value.to_string() << "\n";
            return 0;
        }
        if (limit->parsed()) {
            const auto need = [](long v, const char* name) {
                if (v < 0) throw Error(std::string("missing required --") + name);
                return v;
            };
            RatFunc f;
            if (lop == "schlosser_sum")
                f = schlosser_sum(need(lm, "m"), need(ln, "n"));
            else if (lop == "thm3_lhs")
                f = thm3_lhs(need(ln, "n"), need(lk, "k"));
            else if (lop == "warnaar_lhs")
                f = warnaar_lhs(need(ln, "n"));
            else if (lop == "garrett_hummel_lhs")
                f = garrett_hummel_lhs(need(ln, "n"));
            else
                f = kim_sum(need(ln, "n"), kim_variant_from_string(lvariant));
            std::cout << to_string(f.limit_at_v1()) << "\n";
            return 0;
        }
    } catch (const qfaulhaber::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
