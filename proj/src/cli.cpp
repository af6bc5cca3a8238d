#include "chebroot/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <ostream>
#include <string>

#include "chebroot/dyck.hpp"
#include "chebroot/nthroot.hpp"
#include "chebroot/numeric.hpp"
#include "chebroot/sqrt_engines.hpp"
#include "chebroot/suites.hpp"

namespace chebroot {

namespace {

using ordered_json = nlohmann::ordered_json;

enum class OutputFormat { Plain, Json, Csv };

OutputFormat parse_format(const std::string & name)
{
    if (name == "plain")
        return OutputFormat::Plain;
    if (name == "json")
        return OutputFormat::Json;
    if (name == "csv")
        return OutputFormat::Csv;
    throw usage_error("unknown output format '" + name + "'");
}

struct RootOptions {
    std::string x;
    std::string r;
    unsigned p = 2;
    unsigned d = 1;
    unsigned n = 4;
    std::string form = "iterate";
    unsigned digits = 30;
    unsigned precision = 0; // 0: derive from digits
};

struct VerifyOptions {
    std::string suite = "all";
};

struct SeriesOptions {
    std::string family = "f";
    unsigned d = 1;
    unsigned terms = 8;
    std::string x = "2";
    unsigned digits = 30;
};

struct DyckOptions {
    unsigned n = 0;
    unsigned h = 0;
    bool sym = false;
    bool enumerate = false;
};

struct TraceOptions {
    std::string x;
    unsigned d = 1;
    unsigned n = 4;
    unsigned digits = 30;
    unsigned precision = 512;
};

HouseholderForm parse_householder_form(const std::string & f)
{
    if (f == "iterate")
        return HouseholderForm::Iterate;
    if (f == "cheb")
        return HouseholderForm::Cheb;
    if (f == "product-even")
        return HouseholderForm::ProductEven;
    if (f == "factored-odd")
        return HouseholderForm::FactoredOdd;
    if (f == "recursive-odd")
        return HouseholderForm::RecursiveOdd;
    if (f == "binomial")
        return HouseholderForm::Binomial;
    if (f == "algorithm4")
        return HouseholderForm::Algorithm4;
    throw usage_error("unknown form '" + f + "'");
}

void emit_value(OutputFormat fmt, std::ostream & out, const std::string & method,
                const std::vector<std::pair<std::string, std::string>> & params,
                const std::string & fraction, const std::string & decimal)
{
    switch (fmt) {
        case OutputFormat::Plain: {
            out << method;
            for (const auto & [k, v] : params)
                out << " " << k << "=" << v;
            out << "\n";
            if (!fraction.empty())
                out << "fraction = " << fraction << "\n";
            out << "decimal  = " << decimal << "\n";
            return;
        }
        case OutputFormat::Json: {
            ordered_json j;
            j["method"] = method;
            j["params"] = ordered_json::object();
            for (const auto & [k, v] : params)
                j["params"][k] = v;
            if (fraction.empty())
                j["value_fraction"] = nullptr;
            else
                j["value_fraction"] = fraction;
            j["value_decimal"] = decimal;
            j["trace"] = ordered_json::array();
            out << j.dump(2) << "\n";
            return;
        }
        case OutputFormat::Csv: {
            std::string header = "method", row = method;
            for (const auto & [k, v] : params) {
                header += "," + k;
                row += "," + v;
            }
            out << header << ",value_fraction,value_decimal\n"
                << row << "," << fraction << "," << decimal << "\n";
            return;
        }
    }
}

int run_sqrt(const RootOptions & o, OutputFormat fmt, std::ostream & out)
{
    const Rational x = Rational::parse(o.x);
    const SqrtProblem prob =
        o.r.empty() ? SqrtProblem::with_default_seed(x) : SqrtProblem(x, Rational::parse(o.r));
    const std::string & f = o.form;

    std::string family = o.d == 1 ? "newton" : o.d == 2 ? "halley" : "householder";
    std::string fraction, decimal;
    if (f == "sum" || f == "ratio" || f == "second-kind" || f == "algorithm1") {
        if (o.d != 1)
            throw usage_error("form '" + f + "' is Newton-specific; it requires d = 1");
        const NewtonForm nf = f == "sum"           ? NewtonForm::Sum
                              : f == "ratio"       ? NewtonForm::Ratio
                              : f == "second-kind" ? NewtonForm::SecondKind
                                                   : NewtonForm::Algorithm1;
        const Rational v = newton(prob, o.n, nf);
        fraction = v.str();
        decimal = to_decimal(v, o.digits);
    } else if (f == "product" || f == "algorithm3") {
        if (o.d != 2)
            throw usage_error("form '" + f + "' is Halley-specific; it requires d = 2");
        const Rational v =
            halley(prob, o.n, f == "product" ? HalleyForm::Product : HalleyForm::Algorithm);
        fraction = v.str();
        decimal = to_decimal(v, o.digits);
    } else if (f == "monomial") {
        const mpfr_prec_t prec = o.precision ? o.precision : precision_for_digits(o.digits);
        decimal = householder_monomial(prob, o.d, o.n, prec).str_fixed(o.digits);
    } else {
        const Rational v = householder(prob, o.d, o.n, parse_householder_form(f));
        fraction = v.str();
        decimal = to_decimal(v, o.digits);
    }

    emit_value(fmt, out, "sqrt/" + family + "/" + f,
               {{"x", prob.x.str()},
                {"r", prob.r.str()},
                {"d", std::to_string(o.d)},
                {"n", std::to_string(o.n)},
                {"digits", std::to_string(o.digits)}},
               fraction, decimal);
    return 0;
}

int run_nthroot(const RootOptions & o, OutputFormat fmt, std::ostream & out)
{
    const Rational x = Rational::parse(o.x);
    const PthRootProblem prob = o.r.empty()
                                    ? PthRootProblem::with_default_seed(x, o.p, o.d)
                                    : PthRootProblem(x, o.p, Rational::parse(o.r), o.d);
    const Rational v = pth_root_iterate(prob, o.n);
    emit_value(fmt, out, "nthroot/householder/iterate",
               {{"x", prob.x.str()},
                {"p", std::to_string(o.p)},
                {"r", prob.r.str()},
                {"d", std::to_string(o.d)},
                {"n", std::to_string(o.n)},
                {"digits", std::to_string(o.digits)}},
               v.str(), to_decimal(v, o.digits));
    return 0;
}

int run_verify(const VerifyOptions & o, OutputFormat fmt, std::ostream & out)
{
    std::vector<SuiteResult> results;
    if (o.suite == "all" || o.suite == "identities") {
        auto part = run_identity_suite(128);
        results.insert(results.end(), part.begin(), part.end());
    }
    if (o.suite == "all" || o.suite == "crossform") {
        auto part = run_crossform_suite();
        results.insert(results.end(), part.begin(), part.end());
    }
    if (results.empty())
        throw usage_error("unknown suite '" + o.suite + "' (expected all, identities, crossform)");

    size_t failed = 0, skipped = 0;
    for (const SuiteResult & r : results) {
        failed += r.pass ? 0 : 1;
        skipped += r.skipped ? 1 : 0;
    }
    if (fmt == OutputFormat::Json) {
        ordered_json j;
        j["method"] = "verify";
        j["params"] = {{"suite", o.suite}};
        j["results"] = ordered_json::array();
        for (const SuiteResult & r : results)
            j["results"].push_back(
                {{"key", r.key}, {"pass", r.pass}, {"skipped", r.skipped}});
        j["total"] = std::to_string(results.size());
        j["failed"] = std::to_string(failed);
        out << j.dump(2) << "\n";
    } else if (fmt == OutputFormat::Csv) {
        out << "key,result\n";
        for (const SuiteResult & r : results)
            out << r.key << "," << (r.skipped ? "SKIP" : r.pass ? "PASS" : "FAIL") << "\n";
    } else {
        for (const SuiteResult & r : results)
            out << (r.skipped ? "SKIP" : r.pass ? "PASS" : "FAIL") << " " << r.key << "\n";
        out << results.size() << " checks, " << failed << " failed, " << skipped << " skipped\n";
    }
    return failed == 0 ? 0 : 1;
}

int run_series(const SeriesOptions & o, OutputFormat fmt, std::ostream & out)
{
    if (o.terms < 1)
        throw usage_error("series needs at least one term");
    const Rational x = Rational::parse(o.x);
    const bool is_f = o.family == "f";
    if (!is_f && o.family != "g")
        throw usage_error("family must be f or g");
    const DyckTable table(std::max(64u, o.terms + 2));
    const SeriesApprox approx = SeriesApprox::make(
        is_f ? SeriesApprox::Family::F : SeriesApprox::Family::G, o.d, o.terms, table);
    const Rational exact = is_f ? f_exact(o.d, x) : g_exact(o.d, x);
    const Rational partial = is_f ? f_series(o.d, o.terms - 1, x, table)
                                  : g_series(o.d, o.terms - 1, x, table);
    const Rational err = abs(exact - partial);
    const Rational bound = is_f ? f_tail_bound(o.terms - 1, x) : g_tail_bound(o.terms - 1, x);

    if (fmt == OutputFormat::Json) {
        ordered_json j;
        j["method"] = "series/" + o.family;
        j["params"] = {{"family", o.family},
                       {"d", std::to_string(o.d)},
                       {"terms", std::to_string(o.terms)},
                       {"x", x.str()}};
        j["coefficients"] = ordered_json::array();
        for (size_t i = 0; i < approx.coefficients.size(); i++) {
            const BigInt count = is_f ? table.delta(i, static_cast<long>(o.d) - 1)
                                      : table.delta_sym(i, static_cast<long>(o.d) - 1);
            j["coefficients"].push_back({{"i", std::to_string(i)},
                                         {"path_count", count.get_str()},
                                         {"coefficient", approx.coefficients[i].str()}});
        }
        j["value_exact"] = exact.str();
        j["value_partial"] = partial.str();
        j["abs_error"] = to_decimal(err, o.digits);
        j["tail_bound"] = to_decimal(bound, o.digits);
        out << j.dump(2) << "\n";
    } else if (fmt == OutputFormat::Csv) {
        out << "i,path_count,coefficient\n";
        for (size_t i = 0; i < approx.coefficients.size(); i++) {
            const BigInt count = is_f ? table.delta(i, static_cast<long>(o.d) - 1)
                                      : table.delta_sym(i, static_cast<long>(o.d) - 1);
            out << i << "," << count.get_str() << "," << approx.coefficients[i].str() << "\n";
        }
    } else {
        out << "series " << o.family << "_d, d=" << o.d << ", x=" << x.str() << ", terms="
            << o.terms << "\n";
        for (size_t i = 0; i < approx.coefficients.size(); i++) {
            const BigInt count = is_f ? table.delta(i, static_cast<long>(o.d) - 1)
                                      : table.delta_sym(i, static_cast<long>(o.d) - 1);
            out << "  term " << i << ": paths " << count.get_str() << ", coefficient "
                << approx.coefficients[i].str() << "\n";
        }
        out << "exact    = " << exact.str() << "\n";
        out << "partial  = " << partial.str() << "\n";
        out << "abs err  = " << to_decimal(err, o.digits) << "\n";
        out << "tail bnd = " << to_decimal(bound, o.digits) << "\n";
    }
    return 0;
}

int run_dyck(const DyckOptions & o, OutputFormat fmt, std::ostream & out)
{
    if (o.enumerate) {
        const auto paths = o.sym ? sym_dyck_enumerate(o.n, o.h) : dyck_enumerate(o.n, o.h);
        if (fmt == OutputFormat::Json) {
            ordered_json j;
            j["method"] = o.sym ? "dyck/enumerate-sym" : "dyck/enumerate";
            j["params"] = {{"n", std::to_string(o.n)}, {"h", std::to_string(o.h)}};
            j["count"] = std::to_string(paths.size());
            j["paths"] = paths;
            out << j.dump(2) << "\n";
        } else if (fmt == OutputFormat::Csv) {
            out << "path\n";
            for (const auto & path : paths)
                out << path << "\n";
        } else {
            for (const auto & path : paths)
                out << path << "\n";
        }
        return 0;
    }
    const DyckTable table(std::max(64u, o.n));
    const BigInt count = o.sym ? table.delta_sym(o.n, o.h) : table.delta(o.n, o.h);
    if (fmt == OutputFormat::Json) {
        ordered_json j;
        j["method"] = o.sym ? "dyck/count-sym" : "dyck/count";
        j["params"] = {{"n", std::to_string(o.n)}, {"h", std::to_string(o.h)}};
        j["count"] = count.get_str();
        out << j.dump(2) << "\n";
    } else if (fmt == OutputFormat::Csv) {
        out << "n,h,sym,count\n"
            << o.n << "," << o.h << "," << (o.sym ? 1 : 0) << "," << count.get_str() << "\n";
    } else {
        out << count.get_str() << "\n";
    }
    return 0;
}

int run_trace(const TraceOptions & o, OutputFormat fmt, std::ostream & out)
{
    const Rational x = Rational::parse(o.x);
    const SqrtProblem prob = SqrtProblem::with_default_seed(x);
    const mpfr_prec_t prec = std::max<mpfr_prec_t>(o.precision, kMinFloatPrecision);
    const IterationTrace trace = make_sqrt_trace(prob, o.d, o.n, prec);
    const BigFloat reference = BigFloat::sqrt(prob.x, prec);
    const OrderEstimate estimate = convergence_order_estimate(trace, reference);

    if (fmt == OutputFormat::Json) {
        ordered_json j;
        j["method"] = "trace/" + trace.family + "/iterate";
        j["params"] = {{"x", prob.x.str()},
                       {"r", prob.r.str()},
                       {"d", std::to_string(o.d)},
                       {"n", std::to_string(o.n)},
                       {"precision", std::to_string(prec)}};
        j["trace"] = ordered_json::array();
        for (size_t i = 0; i < trace.values.size(); i++)
            j["trace"].push_back({{"step", std::to_string(i)},
                                  {"value_fraction", trace.values[i].str()},
                                  {"value_decimal", to_decimal(trace.values[i], o.digits)},
                                  {"abs_error", trace.errors[i].str_scientific(6)}});
        if (estimate.estimate)
            j["order_estimate"] = estimate.estimate->str_fixed(4);
        else
            j["order_estimate"] = nullptr;
        if (estimate.exact_at)
            j["exact_at_step"] = std::to_string(*estimate.exact_at);
        out << j.dump(2) << "\n";
    } else if (fmt == OutputFormat::Csv) {
        out << "step,value_fraction,value_decimal,abs_error\n";
        for (size_t i = 0; i < trace.values.size(); i++)
            out << i << "," << trace.values[i].str() << "," << to_decimal(trace.values[i], o.digits)
                << "," << trace.errors[i].str_scientific(6) << "\n";
    } else {
        out << "trace " << trace.family << " d=" << o.d << " x=" << prob.x.str()
            << " r=" << prob.r.str() << "\n";
        for (size_t i = 0; i < trace.values.size(); i++)
            out << "step " << i << ": " << trace.values[i].str() << " = "
                << to_decimal(trace.values[i], o.digits) << "  err "
                << trace.errors[i].str_scientific(6) << "\n";
        if (estimate.estimate)
            out << "order estimate = " << estimate.estimate->str_fixed(4) << " (pair "
                << estimate.pair_index << " -> " << estimate.pair_index + 1 << ")\n";
        if (estimate.exact_at)
            out << "iterate " << *estimate.exact_at
                << " matches the reference within its resolution\n";
    }
    return 0;
}

} // namespace

int run(int argc, const char * const * argv, std::ostream & out, std::ostream & err)
{
    CLI::App app{"exact square/pth roots via Chebyshev closed forms of the Householder methods"};
    app.name("chebroot");
    app.require_subcommand(1);

    std::string format = "plain";
    unsigned long guard = 0;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"plain", "json", "csv"}));
    app.add_option("--guard-bits", guard, "operand-size guard in bits (default 2^20)");

    RootOptions sqrt_opts;
    CLI::App * sqrt_cmd = app.add_subcommand("sqrt", "square-root iterates, any exact form");
    sqrt_cmd->add_option("--x", sqrt_opts.x, "radicand (rational)")->required();
    sqrt_cmd->add_option("--r", sqrt_opts.r, "seed (default: nearest integer to sqrt x)");
    sqrt_cmd->add_option("--d", sqrt_opts.d, "Householder order (1 Newton, 2 Halley)");
    sqrt_cmd->add_option("--n", sqrt_opts.n, "iteration index");
    sqrt_cmd->add_option("--form", sqrt_opts.form,
                         "iterate|cheb|product-even|factored-odd|recursive-odd|binomial|"
                         "algorithm4|monomial|sum|ratio|second-kind|algorithm1|product|algorithm3");
    sqrt_cmd->add_option("--digits", sqrt_opts.digits, "decimal digits to print");
    sqrt_cmd->add_option("--precision", sqrt_opts.precision, "binary precision for monomial form");

    RootOptions nth_opts;
    CLI::App * nth_cmd = app.add_subcommand("nthroot", "pth-root Householder iterates");
    nth_cmd->add_option("--x", nth_opts.x, "radicand (rational)")->required();
    nth_cmd->add_option("--p", nth_opts.p, "root order p >= 2")->required();
    nth_cmd->add_option("--r", nth_opts.r, "seed (default: round(x^(1/p)))");
    nth_cmd->add_option("--d", nth_opts.d, "Householder order");
    nth_cmd->add_option("--n", nth_opts.n, "iteration index");
    nth_cmd->add_option("--digits", nth_opts.digits, "decimal digits to print");

    VerifyOptions verify_opts;
    CLI::App * verify_cmd = app.add_subcommand("verify", "identity and cross-form suites");
    verify_cmd->add_option("--suite", verify_opts.suite, "all|identities|crossform");

    SeriesOptions series_opts;
    CLI::App * series_cmd = app.add_subcommand("series", "Dyck-path series of f_d / g_d");
    series_cmd->add_option("--family", series_opts.family, "f or g")->required();
    series_cmd->add_option("--d", series_opts.d, "order d >= 1")->required();
    series_cmd->add_option("--terms", series_opts.terms, "number of series terms");
    series_cmd->add_option("--x", series_opts.x, "evaluation point (rational > 1)")->required();
    series_cmd->add_option("--digits", series_opts.digits, "decimal digits for error columns");

    DyckOptions dyck_opts;
    CLI::App * dyck_cmd = app.add_subcommand("dyck", "Dyck path counts and enumeration");
    dyck_cmd->set_help_flag("--help", "print help"); // frees -h for the height option
    dyck_cmd->add_option("--n", dyck_opts.n, "semilength")->required();
    dyck_cmd->add_option("--h", dyck_opts.h, "height cap")->required();
    dyck_cmd->add_flag("--sym", dyck_opts.sym, "symmetric paths only");
    dyck_cmd->add_flag("--enumerate", dyck_opts.enumerate, "list the paths");

    TraceOptions trace_opts;
    CLI::App * trace_cmd = app.add_subcommand("trace", "iterates with errors and order estimate");
    trace_cmd->add_option("--x", trace_opts.x, "radicand (rational)")->required();
    trace_cmd->add_option("--d", trace_opts.d, "Householder order");
    trace_cmd->add_option("--n", trace_opts.n, "steps");
    trace_cmd->add_option("--digits", trace_opts.digits, "decimal digits to print");
    trace_cmd->add_option("--precision", trace_opts.precision, "reference precision in bits");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp & e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp & e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError & e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (guard != 0)
            set_guard_bits(guard);
        const OutputFormat fmt = parse_format(format);
        if (sqrt_cmd->parsed())
            return run_sqrt(sqrt_opts, fmt, out);
        if (nth_cmd->parsed())
            return run_nthroot(nth_opts, fmt, out);
        if (verify_cmd->parsed())
            return run_verify(verify_opts, fmt, out);
        if (series_cmd->parsed())
            return run_series(series_opts, fmt, out);
        if (dyck_cmd->parsed())
            return run_dyck(dyck_opts, fmt, out);
        if (trace_cmd->parsed())
            return run_trace(trace_opts, fmt, out);
        throw usage_error("no subcommand given");
    } catch (const usage_error & e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const resource_error & e) {
        err << "resource error: " << e.what() << "\n";
        return 3;
    } catch (const domain_error & e) {
        err << "domain error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception & e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace chebroot
