#include "kelvin/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <numbers>
#include <ostream>

namespace kelvin::cli {

namespace {

struct Flags {
    double x = 0.0;
    double rho = 0.0;
    double alpha = 0.0;
    double alpha_pi = 0.0;
    std::string method = "paris";
    std::string n = "auto";
    std::string format = "csv";
    std::string out;
    std::string threads = "auto";
    std::string x_range;
    std::string rho_range;
    std::string alpha_range;
    double abs_tol = 1e-12;
};

MethodChoice to_method(const std::string& s) {
    if (s == "bessho") return MethodChoice::bessho;
    if (s == "ursell") return MethodChoice::ursell;
    if (s == "oracle") return MethodChoice::oracle;
    if (s == "all") return MethodChoice::all;
    return MethodChoice::paris;
}

Format to_format(const std::string& s) {
    if (s == "json") return Format::json;
    if (s == "pretty") return Format::pretty;
    return Format::csv;
}

int parse_positive_int(const std::string& text, const char* flag) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(text, &used);
        if (used == text.size() && v > 0) return v;
    } catch (const std::logic_error&) {
    }
    throw UsageError(std::string(flag) + " must be a positive integer or auto");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Kelvin ship-wave source integral F(x, rho, alpha)", "kelvin"};
    app.require_subcommand(1);
    Flags f;

    const std::vector<std::string> formats{"csv", "json", "pretty"};
    auto add_output = [&](CLI::App* sub) {
        sub->add_option("--format", f.format, "csv, json or pretty")
            ->check(CLI::IsMember(formats));
        sub->add_option("--out", f.out, "write the table to this file");
        sub->add_option("--abs-tol", f.abs_tol, "oracle absolute tolerance")
            ->check(CLI::Range(1e-14, 1.0));
    };
    auto add_point = [&](CLI::App* sub) {
        sub->add_option("--x", f.x)->required();
        sub->add_option("--rho", f.rho)->required();
        auto* a = sub->add_option("--alpha", f.alpha, "radians");
        auto* ap = sub->add_option("--alpha-pi", f.alpha_pi, "units of pi");
        a->excludes(ap);
        sub->add_option("--n", f.n, "truncation index or auto");
    };

    auto* eval = app.add_subcommand("eval", "evaluate F at one point");
    add_point(eval);
    add_output(eval);
    eval->add_option("--method", f.method)
        ->check(CLI::IsMember({"bessho", "ursell", "paris", "oracle", "all"}));

    auto* compare = app.add_subcommand("compare", "evaluate F with every method");
    add_point(compare);
    add_output(compare);

    auto* table1 = app.add_subcommand("table1", "reproduce the residual table");
    add_output(table1);

    auto* coeffs = app.add_subcommand("coeffs", "coefficient curves C_k(x, alpha)");
    int n_coeffs = 4;
    f.x_range = "0.05:2:40";
    f.alpha = std::numbers::pi / 6.0;
    coeffs->add_option("--n", n_coeffs, "number of coefficients");
    coeffs->add_option("--x-range", f.x_range, "lo:hi:count");
    auto* ca = coeffs->add_option("--alpha", f.alpha, "radians");
    auto* cap = coeffs->add_option("--alpha-pi", f.alpha_pi, "units of pi");
    ca->excludes(cap);
    add_output(coeffs);

    auto* field = app.add_subcommand("field", "grid sweep of F");
    std::string field_x, field_rho, field_alpha;
    field->add_option("--x-range", field_x, "lo:hi:count");
    field->add_option("--rho-range", field_rho, "lo:hi:count");
    field->add_option("--alpha-range", field_alpha, "lo:hi:count, radians");
    field->add_option("--threads", f.threads, "worker count or auto");
    field->add_option("--n", f.n, "truncation index or auto");
    add_output(field);

    auto* bounds = app.add_subcommand("bounds", "verify the truncation bounds");
    add_output(bounds);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
    }

    try {
        RunConfig cfg;
        cfg.method = to_method(f.method);
        cfg.format = to_format(f.format);
        cfg.abs_tol = f.abs_tol;
        if (!f.out.empty()) cfg.output_path = f.out;
        if (f.n != "auto") cfg.n = parse_positive_int(f.n, "--n");
        if (f.threads != "auto") cfg.threads = parse_positive_int(f.threads, "--threads");

        auto alpha_of = [&](CLI::App* sub) {
            return sub->count("--alpha-pi") ? f.alpha_pi * std::numbers::pi : f.alpha;
        };

        if (*eval) return cmd_eval(f.x, f.rho, alpha_of(eval), cfg, out, err);
        if (*compare) {
            cfg.method = MethodChoice::all;
            return cmd_eval(f.x, f.rho, alpha_of(compare), cfg, out, err);
        }
        if (*table1) return cmd_table1(cfg, out, err);
        if (*coeffs) return cmd_coeffs(n_coeffs, parse_range(f.x_range), alpha_of(coeffs), cfg, out, err);
        if (*field) {
            if (!field_x.empty()) cfg.x_range = parse_range(field_x);
            if (!field_rho.empty()) cfg.rho_range = parse_range(field_rho);
            if (!field_alpha.empty()) cfg.alpha_range = parse_range(field_alpha);
            return cmd_field(cfg, out, err);
        }
        return cmd_bounds(cfg, out, err);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace kelvin::cli
