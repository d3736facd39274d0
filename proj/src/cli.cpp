#include "apery/cli.hpp"

#include "apery/beukers.hpp"
#include "apery/bounds.hpp"
#include "apery/chain.hpp"
#include "apery/decimal.hpp"
#include "apery/zeta3.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <ostream>

namespace apery::cli {

namespace {

constexpr unsigned long kShownDigits = 15;

struct Options {
    bool quiet = false;
    bool json = false;
    bool csv = false;
    unsigned long n = 0;
    unsigned long n_max = 0;
    unsigned long digits = 20;
    std::string method = "cross";
    std::string coeffs;
};

int worst(int a, int b) {
    // Fails outranks Unknown
    if (a == kFails || b == kFails) return kFails;
    return std::max(a, b);
}

int exit_for(Verdict v) {
    switch (v) {
        case Verdict::Holds: return kOk;
        case Verdict::Fails: return kFails;
        case Verdict::Unknown: return kUnknown;
    }
    return kUnknown;
}

int cmd_form(const Options& o, std::ostream& out) {
    const LinearForm& f = linear_form(o.n);
    if (o.json) {
        nlohmann::ordered_json j;
        j["n"] = f.n;
        j["alpha"] = to_string(f.alpha);
        j["beta"] = to_string(f.beta);
        j["A"] = to_string(f.A);
        j["B"] = to_string(f.B);
        j["dn3"] = to_string(f.dn3);
        out << j.dump(2) << '\n';
    } else {
        out << "alpha=" << to_string(f.alpha) << " beta=" << to_string(f.beta) << " A=" << to_string(f.A)
            << " B=" << to_string(f.B) << " dn3=" << to_string(f.dn3) << '\n';
    }
    return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
    int code = kOk;
    if (o.csv) out << "n,abs_I_n,rhs,bound_status,R,ratio_status,digits_used\n";
    for (unsigned long n = 1; n <= o.n_max; ++n) {
        const CheckResult bound = verify_linear_form_bound(n, o.digits);
        const CheckResult ratio = verify_bound_ratio(n, o.digits);
        const unsigned long used = std::max(bound.digits_used, ratio.digits_used);
        code = worst(code, worst(exit_for(bound.status), exit_for(ratio.status)));
        if (o.csv) {
            out << n << ',' << format_sci(bound.lhs, kShownDigits) << ',' << format_sci(bound.rhs, kShownDigits) << ','
                << to_string(bound.status) << ',' << format_sci(ratio.lhs, kShownDigits) << ','
                << to_string(ratio.status) << ',' << used << '\n';
        } else {
            out << "n=" << n << " bound=" << to_string(bound.status) << " ratio=" << to_string(ratio.status)
                << " |I_n|=" << format_sci(bound.lhs, kShownDigits) << " rhs=" << format_sci(bound.rhs, kShownDigits)
                << " R=" << format_sci(ratio.lhs, kShownDigits) << " digits=" << used << '\n';
        }
    }
    return code;
}

int cmd_zeta3(const Options& o, std::ostream& out) {
    // two guard digits keep the enclosure well inside one printed ulp
    const Enclosure e = evaluate(Zeta3Request{o.digits + 2, parse_zeta3_method(o.method)});
    out << format_fixed(e, o.digits) << '\n';
    return kOk;
}

int cmd_audit(const Options& o, std::ostream& out) {
    const ChainReport r = audit(o.n, CoeffVector::parse(o.coeffs), o.digits);
    int code = kOk;
    for (const StepReport& s : r.steps) code = worst(code, exit_for(s.numeric));
    if (o.json) {
        out << report_json(r) << '\n';
        return code;
    }
    out << "n=" << r.n << " coeffs=" << o.coeffs << " digits=" << r.digits_used << '\n';
    out << "R=" << format_sci(r.R, kShownDigits) << '\n';
    out << "S=" << format_sci(r.S, kShownDigits) << '\n';
    out << "residual=" << format_sci(r.residual, kShownDigits) << '\n';
    out << "c0_positive=" << (r.c0_positive ? "yes" : "no") << '\n';
    for (const StepReport& s : r.steps) {
        out << std::left << std::setw(20) << s.id() << ' ' << std::setw(8) << to_string(s.numeric) << ' '
            << s.justification_text() << "  [" << s.statement << "]\n";
    }
    return code;
}

int cmd_decay(const Options& o, std::ostream& out) {
    const std::vector<DecayRow> rows = decay_table(o.n_max, o.digits);
    const char sep = o.csv ? ',' : ' ';
    out << "n" << sep << "d_n" << sep << "abs_I_n" << sep << "rhs" << sep << "ratio" << sep << "T_n" << '\n';
    for (const DecayRow& r : rows) {
        out << r.n << sep << to_string(r.dn) << sep << format_sci(r.abs_i, o.digits) << sep
            << format_sci(r.rhs, o.digits) << sep << format_sci(r.ratio, o.digits) << sep
            << format_sci(r.t_n, o.digits) << '\n';
    }
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact linear forms in 1 and zeta(3) with certified enclosures", "apery"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--quiet", o.quiet, "Suppress timing diagnostics on stderr");

    auto* form = app.add_subcommand("form", "Print the linear form alpha + beta*zeta(3) for one n");
    form->add_option("--n", o.n, "Index n >= 0")->required();
    form->add_flag("--json", o.json, "Emit JSON");

    auto* verify = app.add_subcommand("verify", "Certify both forms of the decay bound for n = 1..N");
    verify->add_option("--n-max", o.n_max, "Largest n")->required()->check(CLI::PositiveNumber);
    verify->add_option("--digits", o.digits, "Starting precision in decimal digits")->check(CLI::PositiveNumber);
    verify->add_flag("--csv", o.csv, "Emit CSV");

    auto* zeta = app.add_subcommand("zeta3", "Print zeta(3) with certified error below one ulp");
    zeta->add_option("--digits", o.digits, "Digits after the decimal point")->required()->check(CLI::PositiveNumber);
    zeta->add_option("--method", o.method, "direct, accelerated or cross")
        ->check(CLI::IsMember({"direct", "accelerated", "cross"}));

    auto* aud = app.add_subcommand("audit", "Replay the weighted-sum argument for coefficients c_0..c_m");
    aud->add_option("--coeffs", o.coeffs, "Comma-separated integers, c_0 first")->required();
    aud->add_option("--n", o.n, "Index n >= 1")->required()->check(CLI::PositiveNumber);
    aud->add_option("--digits", o.digits, "Starting precision in decimal digits")->check(CLI::PositiveNumber);
    aud->add_flag("--json", o.json, "Emit JSON");

    auto* dec = app.add_subcommand("decay", "Tabulate |I_n|, the bound and T_n = d_n^3 * bound");
    dec->add_option("--n-max", o.n_max, "Largest n")->required()->check(CLI::PositiveNumber);
    dec->add_option("--digits", o.digits, "Significant digits")->check(CLI::PositiveNumber);
    dec->add_flag("--csv", o.csv, "Emit CSV");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "apery: " << e.what() << '\n';
        return kUsage;
    }

    const auto start = std::chrono::steady_clock::now();
    int code = kOk;
    std::string name;
    try {
        if (form->parsed()) {
            name = "form";
            code = cmd_form(o, out);
        } else if (verify->parsed()) {
            name = "verify";
            code = cmd_verify(o, out);
        } else if (zeta->parsed()) {
            name = "zeta3";
            code = cmd_zeta3(o, out);
        } else if (aud->parsed()) {
            name = "audit";
            code = cmd_audit(o, out);
        } else {
            name = "decay";
            code = cmd_decay(o, out);
        }
    } catch (const InvalidCoeffVector& e) {
        err << "apery: " << e.what() << '\n';
        return kUsage;
    } catch (const IntegralityViolation& e) {
        err << "apery: " << e.what() << '\n';
        return kFails;
    } catch (const DisjointEnclosures& e) {
        err << "apery: " << e.what() << '\n';
        return kFails;
    }
    if (!o.quiet) {
        const auto ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
        err << "apery " << name << ": " << ms << " ms\n";
    }
    return code;
}

}  // namespace apery::cli
