#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "grassmann/counting.hpp"
#include "grassmann/field.hpp"
#include "grassmann/grassmannian.hpp"
#include "grassmann/io.hpp"
#include "grassmann/oracle.hpp"
#include "grassmann/parallel.hpp"

namespace {

using namespace grassmann;

std::uint64_t env_u64(const char* name, std::uint64_t fallback) {
    const char* v = std::getenv(name);
    if (v == nullptr || *v == '\0') return fallback;
    try {
        std::size_t used = 0;
        const std::uint64_t parsed = std::stoull(v, &used);
        if (used != std::string(v).size()) throw std::invalid_argument(v);
        return parsed;
    } catch (const std::exception&) {
        throw Error(Errc::ParseError, std::string(name) + " is not a number: '" + v + "'");
    }
}

}  // namespace

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);
    CLI::App app{"exact computations on Grassmannians over finite fields"};
    app.require_subcommand(1);
    int rc = 0;

    std::string q_text;
    std::uint64_t n = 0, d = 0;
    std::string method = "pivot";
    std::string format = "text";
    std::uint64_t cap = 0;
    bool force = false;
    bool parallel = false;
    std::string input = "-";

    auto* c_count =
        app.add_subcommand("count", "Number of d-dimensional subspaces of F^n, |Gr(d,n)|");
    c_count->add_option("--q", q_text, "field order, as a prime power or p^k")->required();
    c_count->add_option("--n", n, "ambient dimension")->required();
    c_count->add_option("--d", d, "subspace dimension")->required();
    c_count->add_option("--method", method, "gaussian, pivot, or poly (default pivot)");
    c_count->add_flag("--parallel", parallel, "parallel reduction over pivot strata");
    c_count->callback([&] {
        const std::uint64_t q = parse_order_text(q_text);
        const CountMethod m = parse_method(method);
        const BigCount result = (parallel && m == CountMethod::Pivot)
                                    ? count_pivot_sum_parallel(q, n, d)
                                    : count(q, n, d, m);
        std::cout << result.get_str() << '\n';
    });

    auto* c_poly = app.add_subcommand(
        "poly", "Coefficients of |Gr(d,n)| as a polynomial in the field order");
    c_poly->add_option("--n", n, "ambient dimension")->required();
    c_poly->add_option("--d", d, "subspace dimension")->required();
    c_poly->add_option("--format", format, "text or json (default text)");
    c_poly->callback([&] {
        const OutputFormat fmt = parse_format(format);
        const QPoly p = coeff_poly(n, d);
        if (fmt == OutputFormat::Text)
            write_poly_text(std::cout, p);
        else
            std::cout << poly_json(p) << '\n';
    });

    auto* c_enum = app.add_subcommand(
        "enumerate", "Every d-dimensional subspace of F^n as its canonical matrix");
    c_enum->add_option("--q", q_text, "field order, as a prime power or p^k")->required();
    c_enum->add_option("--n", n, "ambient dimension")->required();
    c_enum->add_option("--d", d, "subspace dimension")->required();
    c_enum->add_option("--format", format, "text or json (default text)");
    c_enum->add_option("--cap", cap, "refuse enumerations larger than this (default " +
                                         EnumerateOptions::kDefaultCap.get_str() +
                                         ", or GRASSMANN_ENUM_CAP)");
    c_enum->add_flag("--force", force, "enumerate regardless of size");
    c_enum->add_flag("--parallel", parallel, "render strata on parallel workers");
    c_enum->callback([&] {
        const Field field = parse_field(q_text);
        const OutputFormat fmt = parse_format(format);
        EnumerateOptions opt;
        opt.cap = c_enum->count("--cap") > 0
                      ? BigCount(static_cast<unsigned long>(cap))
                      : BigCount(static_cast<unsigned long>(env_u64(
                            "GRASSMANN_ENUM_CAP", EnumerateOptions::kDefaultCap.get_ui())));
        opt.force = force;
        if (parallel)
            write_grassmannian_parallel(std::cout, field, n, d, fmt, opt);
        else
            write_grassmannian(std::cout, field, n, d, fmt, opt);
    });

    auto* c_pivots = app.add_subcommand("pivots", "Feasible pivot-column sequences for (n, d)");
    c_pivots->add_option("--n", n, "ambient dimension")->required();
    c_pivots->add_option("--d", d, "subspace dimension")->required();
    c_pivots->callback([&] {
        for (PivotSeqEnumerator e(n, d); !e.done(); e.advance()) {
            const auto& cols = e.current().cols;
            for (std::size_t i = 0; i < cols.size(); ++i) {
                if (i > 0) std::cout << ' ';
                std::cout << cols[i];
            }
            std::cout << '\n';
        }
    });

    auto* c_canon = app.add_subcommand(
        "canon", "Canonical matrix of the row space of the input matrix");
    c_canon->add_option("--q", q_text, "field order, as a prime power or p^k")->required();
    c_canon->add_option("--input", input, "matrix file, or - for standard input (default -)");
    c_canon->add_option("--format", format, "text or json (default text)");
    c_canon->callback([&] {
        const Field field = parse_field(q_text);
        const OutputFormat fmt = parse_format(format);
        Mat m = [&] {
            if (input == "-") return read_matrix_text(std::cin, field);
            std::ifstream in(input);
            if (!in) throw Error(Errc::ParseError, "cannot open '" + input + "'");
            return read_matrix_text(in, field);
        }();
        const Subspace s = canonicalize(m);
        if (fmt == OutputFormat::Text) {
            write_matrix_text(std::cout, s.canon().mat);
            std::cout << "dim " << s.dim() << '\n';
        } else {
            std::cout << matrix_json_line(s.canon().mat) << '\n';
        }
    });

    auto* c_verify = app.add_subcommand(
        "verify", "Check all counting routes and the canonical-form bijection "
                  "against the brute-force subspace scan");
    c_verify->add_option("--q", q_text, "field order, as a prime power or p^k")->required();
    c_verify->add_option("--n", n, "ambient dimension")->required();
    c_verify->add_option("--d", d, "subspace dimension")->required();
    c_verify->add_option("--format", format, "text or json (default text)");
    c_verify->callback([&] {
        const Field field = parse_field(q_text);
        const std::uint64_t budget = env_u64("GRASSMANN_ORACLE_BUDGET", kDefaultOracleBudget);
        const CrossCheckReport r = cross_check(field, n, d, budget);
        if (parse_format(format) == OutputFormat::Text)
            write_report_text(std::cout, r);
        else
            std::cout << report_json(r) << '\n';
        if (!r.pass()) rc = 3;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.is_guard() ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return rc;
}
