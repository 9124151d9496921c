// Command-line front end.  Exit codes: 0 success, 1 verification failure,
// 2 usage or parse error, 3 domain error.

#include "cli_util.hpp"

#include <qfourier/distributions.hpp>
#include <qfourier/qcore.hpp>
#include <qfourier/transform.hpp>
#include <qfourier/verify.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

using namespace qfourier;

namespace {

struct Options {
    double q = 0.5;
    bool q_given = false;
    double tol = 1e-15;
    int depth = 48;
    std::string window;
    std::string format;
    std::optional<double> nu;
    std::string suite = "all";
    std::string z = "0";
    int n = 1;
    unsigned threads = 0;

    QParams params() const { return QParams(q, tol, depth); }
    std::optional<Window> parsed_window() const {
        if (window.empty())
            return std::nullopt;
        return cli::parse_window(window);
    }
};

void print_scalar(const std::string& function, const Options& o, std::optional<cplx> z, cplx value) {
    if (o.format == "csv") {
        std::cout << "function,q,z_re,z_im,value_re,value_im\n"
                  << function << ',' << cli::num(o.q) << ',' << (z ? cli::num(z->real()) : "") << ','
                  << (z ? cli::num(z->imag()) : "") << ',' << cli::num(value.real()) << ','
                  << cli::num(value.imag()) << '\n';
        return;
    }
    std::cout << "{\"function\": " << cli::json_str(function) << ", \"q\": " << cli::json_num(o.q);
    if (o.nu && function == "c_nu")
        std::cout << ", \"nu\": " << cli::json_num(*o.nu);
    if (z)
        std::cout << ", \"z\": [" << cli::json_num(z->real()) << ", " << cli::json_num(z->imag()) << "]";
    std::cout << ", \"value\": [" << cli::json_num(value.real()) << ", " << cli::json_num(value.imag())
              << "]}\n";
}

int cmd_eval(const std::string& function, const Options& o) {
    const QParams p = o.params();
    const cplx z = cli::parse_complex(o.z);
    using Fn = cplx (*)(cplx, const QParams&);
    static const std::map<std::string, Fn> unary = {
        {"e_q2", [](cplx x, const QParams& p) { return e_q2(x, p); }},
        {"E_q2", [](cplx x, const QParams& p) { return E_q2(x, p); }},
        {"cos_q2", [](cplx x, const QParams& p) { return small_trig(x, p).cos; }},
        {"sin_q2", [](cplx x, const QParams& p) { return small_trig(x, p).sin; }},
        {"Cos_q2", [](cplx x, const QParams& p) { return big_trig(x, p).cos; }},
        {"Sin_q2", [](cplx x, const QParams& p) { return big_trig(x, p).sin; }},
        {"phi01", [](cplx x, const QParams& p) { return phi01(x, p); }},
        {"theta", [](cplx x, const QParams& p) { return theta_lattice(x, p); }},
        {"bigQ", [](cplx x, const QParams& p) { return bigQ(x, p); }},
    };
    if (auto it = unary.find(function); it != unary.end()) {
        print_scalar(function, o, z, it->second(z, p));
        return 0;
    }
    if (function == "theta0") {
        print_scalar(function, o, std::nullopt, theta0(p));
        return 0;
    }
    if (function == "c_nu") {
        if (!o.nu)
            throw UsageError("c_nu needs --nu");
        print_scalar(function, o, std::nullopt, c_nu(*o.nu, p));
        return 0;
    }
    throw UsageError("unknown function '" + function +
                     "'; known: e_q2 E_q2 cos_q2 sin_q2 Cos_q2 Sin_q2 phi01 theta bigQ theta0 c_nu");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int cmd_transform(const std::string& path, const std::string& direction, bool round_trip, int guard,
                  Options o) {
    if (direction != "forward" && direction != "inverse")
        throw UsageError("direction must be forward or inverse, got '" + direction + "'");
    const std::string text = read_file(path);
    if (!o.q_given) {
        // Take q from the file when the flag is absent.
        try {
            o.q = nlohmann::json::parse(text).at("q").get<double>();
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("malformed skeleton JSON: ") + e.what());
        }
    }
    const Skeleton phi = skeleton_from_json(text, o.params());
    const Direction dir = direction == "forward" ? Direction::forward : Direction::inverse;
    const Skeleton out = dir == Direction::forward ? fourier_forward(phi, o.threads)
                                                   : fourier_inverse(phi, o.threads);
    std::cout << to_json(out) << '\n';
    if (round_trip) {
        const double err = round_trip_error(phi, dir, guard, o.threads);
        std::cerr << "round trip interior max relative error: " << cli::num(err) << '\n';
    }
    return 0;
}

std::string status(const CheckResult& r) {
    if (r.known_false)
        return r.passed ? "HOLDS" : "KNOWN-FALSE";
    return r.passed ? "PASS" : "FAIL";
}

int cmd_verify(const Options& o) {
    VerifyConfig cfg{o.params(), o.parsed_window(), o.nu, o.threads};
    const auto results = run_verify(o.suite, cfg);
    const bool ok = verify_passed(results);
    auto residual = [](const CheckResult& r) { return r.exact ? std::string("exact") : cli::num(r.residual); };
    if (o.format == "json") {
        std::cout << "{\"q\": " << cli::json_num(o.q) << ", \"suite\": " << cli::json_str(o.suite)
                  << ", \"passed\": " << (ok ? "true" : "false") << ", \"checks\": [\n";
        for (std::size_t i = 0; i < results.size(); ++i) {
            const auto& r = results[i];
            std::cout << "  {\"suite\": " << cli::json_str(r.suite) << ", \"check\": " << cli::json_str(r.name)
                      << ", \"residual\": "
                      << (r.exact ? std::string("\"exact\"") : cli::json_num(r.residual))
                      << ", \"tolerance\": " << (r.exact ? std::string("null") : cli::json_num(r.tolerance))
                      << ", \"status\": " << cli::json_str(status(r)) << ", \"detail\": " << cli::json_str(r.detail)
                      << "}" << (i + 1 < results.size() ? "," : "") << '\n';
        }
        std::cout << "]}\n";
    } else if (o.format == "csv") {
        std::cout << "suite,check,residual,tolerance,status,detail\n";
        for (const auto& r : results)
            std::cout << r.suite << ',' << cli::csv_field(r.name) << ',' << residual(r) << ','
                      << (r.exact ? "" : cli::num(r.tolerance)) << ',' << status(r) << ','
                      << cli::csv_field(r.detail) << '\n';
    } else {
        int passed = 0, failed = 0, known = 0;
        for (const auto& r : results) {
            std::cout << std::left;
            std::cout.width(12);
            std::cout << status(r);
            std::cout.width(15);
            std::cout << r.suite;
            std::cout.width(24);
            std::cout << residual(r) << r.name;
            if (!r.exact)
                std::cout << "  [tol " << cli::num(r.tolerance) << "]";
            if (!r.detail.empty())
                std::cout << "  (" << r.detail << ")";
            std::cout << '\n';
            if (r.known_false)
                ++known;
            else if (r.passed)
                ++passed;
            else
                ++failed;
        }
        std::cout << results.size() << " checks: " << passed << " passed, " << failed << " failed, " << known
                  << " statements reported as known not to hold in their literal form\n";
    }
    return ok ? 0 : 1;
}

int cmd_table(bool skip_nu, const Options& o) {
    const QParams p = o.params();
    if (!skip_nu && !o.nu)
        throw UsageError("the z_+-^(nu-1) rows need --nu (or pass --skip-nu for the other five rows)");
    const auto rows = transform_table(p, o.n, skip_nu ? std::nullopt : o.nu);
    auto source = [](const TransformTableEntry& e) {
        return e.n ? e.source_label + " (n=" + std::to_string(*e.n) + ")" : e.source_label;
    };
    if (o.format == "json") {
        std::cout << "[\n";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const auto& e = rows[i];
            std::cout << "  {\"source_label\": " << cli::json_str(source(e))
                      << ", \"image_label\": " << cli::json_str(e.image_label)
                      << ", \"constant_re\": " << cli::json_num(e.constant.real())
                      << ", \"constant_im\": " << cli::json_num(e.constant.imag())
                      << ", \"q\": " << cli::json_num(o.q)
                      << ", \"nu\": " << (e.nu ? cli::json_num(*e.nu) : std::string("null")) << "}"
                      << (i + 1 < rows.size() ? "," : "") << '\n';
        }
        std::cout << "]\n";
        return 0;
    }
    std::cout << "source_label,image_label,constant_re,constant_im,q,nu\n";
    for (const auto& e : rows)
        std::cout << cli::csv_field(source(e)) << ',' << cli::csv_field(e.image_label) << ','
                  << cli::num(e.constant.real()) << ',' << cli::num(e.constant.imag()) << ','
                  << cli::num(o.q) << ',' << (e.nu ? cli::num(*e.nu) : "") << '\n';
    return 0;
}

void add_common(CLI::App* app, Options& o, bool with_window) {
    app->add_option_function<double>(
           "--q", [&o](double q) { o.q = q; o.q_given = true; }, "deformation parameter, 0 < q < 1")
        ->default_str("0.5");
    app->add_option("--tol", o.tol, "series truncation tolerance")->capture_default_str();
    app->add_option("--depth", o.depth, "lattice depth of bilateral sums")->capture_default_str();
    app->add_option("--threads", o.threads, "worker threads (0: all cores)")->capture_default_str();
    if (with_window)
        app->add_option("--window", o.window, "lattice index window MIN:MAX");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"q^2-Fourier transform toolkit"};
    app.require_subcommand(1);
    Options o;

    std::string function;
    auto* eval = app.add_subcommand("eval", "evaluate a special function");
    eval->add_option("function", function, "e_q2 E_q2 cos_q2 sin_q2 Cos_q2 Sin_q2 phi01 theta bigQ theta0 c_nu")
        ->required();
    eval->add_option("--z", o.z, "argument, re or re+imi")->capture_default_str();
    eval->add_option("--nu", o.nu, "exponent for c_nu");
    eval->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    add_common(eval, o, false);

    std::string path, direction = "forward";
    bool round_trip = false;
    int guard = 8;
    auto* transform = app.add_subcommand("transform", "transform a skeleton JSON file");
    transform->add_option("file", path, "skeleton JSON")->required();
    transform->add_option("--direction", direction, "forward or inverse")->capture_default_str();
    transform->add_flag("--round-trip", round_trip,
                        "also apply the opposite transform and report the interior error on stderr");
    transform->add_option("--guard", guard, "guard band for --round-trip")->capture_default_str();
    add_common(transform, o, false);

    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("--suite", o.suite, "all qcore lattice ncorder orthogonality transform table")
        ->capture_default_str();
    verify->add_option("--nu", o.nu, "exponent for the power-distribution rows of the table suite");
    verify->add_option("--format", o.format, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    add_common(verify, o, true);

    bool skip_nu = false;
    auto* table = app.add_subcommand("table", "closed-form distribution transform table");
    table->add_option("--n", o.n, "n for the z^n and z^(-n-1) rows")->capture_default_str();
    table->add_option("--nu", o.nu, "0 < nu < 1 for the z_+-^(nu-1) rows");
    table->add_flag("--skip-nu", skip_nu, "omit the z_+-^(nu-1) rows");
    table->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"json", "csv"}));
    add_common(table, o, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*eval) {
            if (o.format.empty())
                o.format = "json";
            return cmd_eval(function, o);
        }
        if (*transform)
            return cmd_transform(path, direction, round_trip, guard, o);
        if (*verify)
            return cmd_verify(o);
        if (*table) {
            if (o.format.empty())
                o.format = "csv";
            return cmd_table(skip_nu, o);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        // QParams rejects out-of-range settings this way.
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return 2;
}
