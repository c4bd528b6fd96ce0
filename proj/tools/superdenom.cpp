// Command-line front end: runs the verifiers and dumps series.
//
// Exit status: 0 when every requested check matched, 1 on a mismatch,
// 2 on a usage error.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "superdenom/analytic.hpp"
#include "superdenom/denominator.hpp"
#include "superdenom/io.hpp"
#include "superdenom/jacobi.hpp"

namespace {

using namespace superdenom;

enum class Format { text, json, csv };

struct Options {
    int order = -1;
    int max_n = 64;
    double q = 0.1;
    double tol = 1e-8;
    std::string expr;
    Format format = Format::text;
    std::string output;
    bool timing = false;
};

std::string join_exp(const ExpVec& e, const char* sep)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < e.size(); ++i) {
        os << (i ? sep : "") << e[i];
    }
    return os.str();
}

void write_report(std::ostream& os, const QReport& r, const Options& opt)
{
    switch (opt.format) {
    case Format::json:
        os << to_json(r, opt.timing).dump(2) << "\n";
        break;
    case Format::csv:
        os << "identity,cutoff,matched,lhs_terms,rhs_terms,diffs" << (opt.timing ? ",millis" : "") << "\n";
        os << r.identity << "," << r.cutoff << "," << (r.matched ? "true" : "false") << "," << r.lhs_terms << ","
           << r.rhs_terms << "," << r.first_diffs.size();
        if (opt.timing) {
            os << "," << r.millis;
        }
        os << "\n";
        break;
    case Format::text:
        os << "identity   " << r.identity << "\n"
           << "cutoff     " << r.cutoff << "\n"
           << "matched    " << (r.matched ? "true" : "false") << "\n"
           << "lhs_terms  " << r.lhs_terms << "\n"
           << "rhs_terms  " << r.rhs_terms << "\n";
        if (opt.timing) {
            os << "millis     " << r.millis << "\n";
        }
        for (const auto& c : r.checks) {
            os << "check      " << c.name << ": " << (c.passed ? "pass" : "FAIL") << "\n";
        }
        for (const auto& d : r.first_diffs) {
            os << "diff       e=(" << join_exp(d.monomial, ",") << ") lhs=" << d.lhs << " rhs=" << d.rhs << "\n";
        }
        break;
    }
}

void write_series(std::ostream& os, const GradedSeries& s, const Options& opt)
{
    switch (opt.format) {
    case Format::json:
        os << to_json(s).dump() << "\n";
        break;
    case Format::csv: {
        const int r = s.lattice().rank();
        for (int i = 0; i < r; ++i) {
            os << "k" << i << ",";
        }
        for (int i = 0; i < r; ++i) {
            os << "e" << i << ",";
        }
        os << "c\n";
        for (const auto& t : s.terms()) {
            os << join_exp(s.cone_of(t.key), ",") << "," << join_exp(s.exponents(t.key), ",") << "," << t.coeff
               << "\n";
        }
        break;
    }
    case Format::text:
        os << "# " << s.lattice().name() << " cutoff " << s.cutoff() << " terms " << s.size() << "\n";
        for (const auto& t : s.terms()) {
            os << t.coeff << " (" << join_exp(s.exponents(t.key), ",") << ")\n";
        }
        break;
    }
}

struct JacobiOutcome {
    std::vector<JacobiRow> rows;
    std::vector<QReport> reports;
};

void write_jacobi(std::ostream& os, const JacobiOutcome& j, const Options& opt)
{
    switch (opt.format) {
    case Format::csv:
        os << "n,r8_enum,r8_theta,r8_formula,match\n";
        for (const auto& r : j.rows) {
            os << r.n << "," << r.r8_enum << "," << r.r8_theta << "," << r.r8_formula << ","
               << (r.match ? "true" : "false") << "\n";
        }
        break;
    case Format::json: {
        ojson out;
        ojson rows = ojson::array();
        for (const auto& r : j.rows) {
            ojson rec;
            rec["n"] = r.n;
            rec["r8_enum"] = r.r8_enum.str();
            rec["r8_theta"] = r.r8_theta.str();
            rec["r8_formula"] = r.r8_formula.str();
            rec["match"] = r.match;
            rows.push_back(std::move(rec));
        }
        out["rows"] = std::move(rows);
        ojson reports = ojson::array();
        for (const auto& r : j.reports) {
            reports.push_back(to_json(r, opt.timing));
        }
        out["reports"] = std::move(reports);
        os << out.dump(2) << "\n";
        break;
    }
    case Format::text:
        os << "    n       r8_enum      r8_theta    r8_formula  match\n";
        for (const auto& r : j.rows) {
            os << std::setw(5) << r.n << std::setw(14) << r.r8_enum.str() << std::setw(14) << r.r8_theta.str()
               << std::setw(14) << r.r8_formula.str() << "  " << (r.match ? "yes" : "NO") << "\n";
        }
        for (const auto& r : j.reports) {
            os << "\n";
            write_report(os, r, opt);
        }
        break;
    }
}

void write_numeric(std::ostream& os, const std::vector<NumericCheck>& checks, const Options& opt)
{
    switch (opt.format) {
    case Format::json: {
        ojson arr = ojson::array();
        for (const auto& c : checks) {
            ojson rec;
            rec["check"] = c.name;
            rec["passed"] = c.passed;
            rec["max_deviation"] = c.max_deviation;
            rec["tol"] = c.tol;
            if (!c.notes.empty()) {
                rec["notes"] = c.notes;
            }
            arr.push_back(std::move(rec));
        }
        os << arr.dump(2) << "\n";
        break;
    }
    case Format::csv:
        os << "check,passed,max_deviation,tol\n";
        for (const auto& c : checks) {
            os << "\"" << c.name << "\"," << (c.passed ? "true" : "false") << "," << c.max_deviation << "," << c.tol
               << "\n";
        }
        break;
    case Format::text:
        for (const auto& c : checks) {
            os << (c.passed ? "pass  " : "FAIL  ") << c.name << "  max_dev=" << c.max_deviation << " tol=" << c.tol
               << "\n";
            for (const auto& n : c.notes) {
                os << "      " << n << "\n";
            }
        }
        break;
    }
}

int run(int argc, char** argv)
{
    CLI::App app{"Exact and numeric checks of the affine gl(2|2) denominator identity"};
    app.require_subcommand(1);
    Options opt;

    const std::map<std::string, Format> formats{{"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};
    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", opt.format, "Output format: text, json or csv")
            ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
        sub->add_option("--output", opt.output, "Write to this file instead of stdout");
        sub->add_flag("--timing", opt.timing, "Include wall-clock milliseconds (output is then not reproducible)");
    };
    auto order_opt = [&](CLI::App* sub, int def) {
        sub->add_option("--order", opt.order, "Truncation degree N")
            ->default_val(def)
            ->check(CLI::Range(0, kMaxCutoff));
    };

    struct Verifier {
        const char* name;
        const char* help;
        int default_order;
        QReport (*fn)(int);
    };
    const Verifier verifiers[] = {
        {"verify-denom", "Product side against orbit-sum side", 24, &verify_denominator},
        {"verify-prefactor", "Product and f_n builders of the prefactor", 40, &verify_prefactor},
        {"verify-finite", "Finite gl(2|2) identity, product against both finite orbit sums", 24,
         &verify_finite_identity},
        {"verify-sl21", "Affine sl(2|1) identity", 18, &verify_sl21},
        {"verify-talpha-tgamma", "T_alpha and T_gamma orbit sums", 16, &verify_talpha_tgamma},
        {"ratio-support", "Support shape of RHS * LHS^-1", 24, &ratio_support_check},
    };
    std::map<CLI::App*, const Verifier*> verifier_of;
    for (const auto& v : verifiers) {
        auto* sub = app.add_subcommand(v.name, v.help);
        order_opt(sub, v.default_order);
        common(sub);
        verifier_of[sub] = &v;
    }

    auto* jac = app.add_subcommand("jacobi", "Eight-squares table, Gauss and intermediate identities");
    jac->add_option("--max-n", opt.max_n, "Largest n in the table")->default_val(64)->check(CLI::Range(0, kMaxCutoff));
    common(jac);

    auto* ana = app.add_subcommand("analytic", "Numeric checks at x = -1, y1 = y^2, y2 = y");
    ana->add_option("--q", opt.q, "Nome q in (0, 1)")->default_val(0.1)->check([](const std::string& s) {
        const double v = std::stod(s);
        return (v > 0 && v < 1) ? std::string{} : std::string("q must lie strictly between 0 and 1");
    });
    ana->add_option("--tol", opt.tol, "Tolerance for the exact-valued checks")
        ->default_val(1e-8)
        ->check(CLI::PositiveNumber);
    common(ana);

    auto* dump = app.add_subcommand("dump", "Print one series");
    dump->add_option("--expr", opt.expr, "lhs, rhs, prefactor, orbit-sum or rhat-roots")
        ->required()
        ->check(CLI::IsMember({"lhs", "rhs", "prefactor", "orbit-sum", "rhat-roots"}));
    order_opt(dump, 8);
    common(dump);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e, std::cerr, std::cerr);
        return 2;
    }

    std::ofstream file;
    if (!opt.output.empty()) {
        file.open(opt.output);
        if (!file) {
            std::cerr << "cannot open " << opt.output << " for writing\n";
            return 2;
        }
    }
    std::ostream& out = opt.output.empty() ? std::cout : file;
    CLI::App* sub = app.get_subcommands().front();

    if (auto it = verifier_of.find(sub); it != verifier_of.end()) {
        const QReport r = it->second->fn(opt.order);
        write_report(out, r, opt);
        return r.matched ? 0 : 1;
    }
    if (sub == jac) {
        JacobiOutcome j;
        j.rows = jacobi_table(opt.max_n);
        j.reports.push_back(verify_jacobi(opt.max_n));
        j.reports.push_back(gauss_check(std::max(opt.max_n, 100)));
        j.reports.push_back(intermediate_identity_check(opt.max_n));
        write_jacobi(out, j, opt);
        bool ok = true;
        for (const auto& r : j.rows) {
            ok = ok && r.match;
        }
        for (const auto& r : j.reports) {
            ok = ok && r.matched;
        }
        return ok ? 0 : 1;
    }
    if (sub == ana) {
        EvalConfig cfg = EvalConfig::defaults();
        cfg.q = opt.q;
        cfg.tol = opt.tol;
        const auto checks = run_analytic_suite(cfg);
        write_numeric(out, checks, opt);
        for (const auto& c : checks) {
            if (!c.passed) {
                return 1;
            }
        }
        return 0;
    }
    // dump
    GradedSeries s = [&] {
        if (opt.expr == "lhs") {
            return build_lhs(opt.order);
        }
        if (opt.expr == "rhs") {
            return build_rhs(opt.order);
        }
        if (opt.expr == "prefactor") {
            return build_prefactor(opt.order);
        }
        if (opt.expr == "orbit-sum") {
            return build_orbit_sum(opt.order);
        }
        return build_rhat_from_roots(opt.order);
    }();
    write_series(out, s, opt);
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    try {
        return run(argc, argv);
    } catch (const superdenom::pole_proximity_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const superdenom::convergence_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
