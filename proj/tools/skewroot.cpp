// skewroot: exact arithmetic with polynomials over division rings (quaternion
// algebras over Q and a degree-3 cyclic division algebra), with explicit root
// formulas for products of linear factors, factor reordering, and the
// quadratic-with-infinitely-many-roots construction.
//
// All arithmetic is exact; no output ever contains a floating-point value.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <skewroot/algebra.hpp>
#include <skewroot/parse.hpp>
#include <skewroot/root_engine.hpp>
#include <skewroot/skew_poly.hpp>
#include <skewroot/verify.hpp>

namespace {

using json = nlohmann::json;
using namespace skewroot;

json element_json(const AlgebraElement& e) {
    json coords = json::array();
    for (const auto& c : e.coords()) coords.push_back(c.to_string());
    json basis = json::array();
    for (const auto& name : basis_names(*e.algebra())) basis.push_back(name);
    return json{{"basis", basis}, {"coords", coords}, {"text", to_string(e)}};
}

json poly_json(const SkewPolynomial& p) {
    json coeffs = json::array();
    if (!p.is_zero())
        for (std::size_t k = 0; k <= p.degree(); ++k) coeffs.push_back(element_json(p.coeff(k)));
    return json{{"coeffs_low_to_high", coeffs}, {"text", to_string(p)}};
}

json central_poly_json(const CentralPolynomial& f) {
    json coeffs = json::array();
    for (const auto& c : f.coeffs()) coeffs.push_back(c.to_string());
    return json{{"coeffs_low_to_high", coeffs}, {"text", f.to_string()}};
}

std::vector<AlgebraElement> parse_factor_list(const std::string& src, const AlgebraPtr& alg) {
    std::vector<AlgebraElement> out;
    std::size_t start = 0;
    while (start <= src.size()) {
        const auto semi = src.find(';', start);
        const auto piece =
            src.substr(start, semi == std::string::npos ? std::string::npos : semi - start);
        out.push_back(parse_element(piece, alg));
        if (semi == std::string::npos) break;
        start = semi + 1;
    }
    return out;
}

struct Output {
    std::string command;
    std::string algebra = "";
    json inputs = json::object();
    json results = json::object();
    bool verified = true;
    std::uint64_t seed = 0;
    std::vector<std::string> text;  // rendered lines for --format text
};

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("SKEWROOT_SEED")) {
        try {
            return std::stoull(env);
        } catch (...) {
            raise(Errc::InvalidArgument, "SKEWROOT_SEED is not an integer");
        }
    }
    return 0;
}

int emit(const Output& out, const std::string& format, long long elapsed_ms, int exit_code) {
    if (format == "json") {
        json doc{{"command", out.command}, {"algebra", out.algebra},
                 {"inputs", out.inputs},   {"results", out.results},
                 {"verified", out.verified}, {"seed", out.seed},
                 {"elapsed_ms", elapsed_ms}};
        std::cout << doc.dump(2) << "\n";
    } else {
        for (const auto& line : out.text) std::cout << line << "\n";
        std::cout << (out.verified ? "verified: true" : "verified: false") << "\n";
    }
    return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "skewroot: exact roots of polynomials over noncommutative division rings.\n"
        "Factor lists are given rightmost-first: \"d1; d2\" means the product\n"
        "(x - d2)(x - d1), so d1 is the innermost (rightmost) factor."};
    app.require_subcommand(1);

    std::string algebra_spec = "quat:-1,-1";
    std::string format = "json";
    std::optional<std::uint64_t> seed_flag;

    const auto add_common = [&](CLI::App* sub, bool with_algebra) {
        sub->add_option("--format", format, "Output format: json or text")
            ->check(CLI::IsMember({"json", "text"}));
        sub->add_option("--seed", seed_flag,
                        "RNG seed (falls back to env SKEWROOT_SEED, then 0)");
        if (with_algebra)
            sub->add_option("--algebra", algebra_spec,
                            "Algebra spec: quat:A,B | cyclic:default | "
                            "cyclic:g=<poly in t>;sigma=<poly in th>;gamma=<rational>");
    };

    // eval
    auto* cmd_eval = app.add_subcommand("eval", "Right-evaluate a polynomial at an element, "
                                                "or normalize an element expression");
    std::string eval_poly, eval_at, eval_expr;
    cmd_eval->add_option("--poly", eval_poly, "Polynomial in x");
    cmd_eval->add_option("--at", eval_at, "Evaluation point (element expression)");
    cmd_eval->add_option("--expr", eval_expr, "Element expression to normalize");
    add_common(cmd_eval, true);

    // mul
    auto* cmd_mul = app.add_subcommand("mul", "Multiply two polynomials (left factor first)");
    std::string mul_lhs, mul_rhs;
    cmd_mul->add_option("--lhs", mul_lhs, "Left factor")->required();
    cmd_mul->add_option("--rhs", mul_rhs, "Right factor")->required();
    add_common(cmd_mul, true);

    // divide
    auto* cmd_div = app.add_subcommand("divide", "Right division: num = Q*den + R");
    std::string div_num, div_den;
    cmd_div->add_option("--num", div_num, "Dividend")->required();
    cmd_div->add_option("--den", div_den, "Divisor (nonzero)")->required();
    add_common(cmd_div, true);

    // roots
    auto* cmd_roots = app.add_subcommand(
        "roots", "All roots of (x-d_n)...(x-d_1) for factors with distinct classes; "
                 "pass \"d1; d2; ...\" with d1 the rightmost factor");
    std::string roots_factors;
    cmd_roots->add_option("--factors", roots_factors, "Semicolon-separated factor list")
        ->required();
    add_common(cmd_roots, true);

    // swap
    auto* cmd_swap = app.add_subcommand(
        "swap", "Reorder (x-d2)(x-d1) as (x-d)(x-d3) with the same product");
    std::string swap_d1, swap_d2;
    cmd_swap->add_option("--d1", swap_d1, "Rightmost factor")->required();
    cmd_swap->add_option("--d2", swap_d2, "Leftmost factor")->required();
    add_common(cmd_swap, true);

    // counterexample
    auto* cmd_ce = app.add_subcommand(
        "counterexample",
        "Quadratic (x-b)(x-a) with verified root and non-root families in the class of a "
        "(requires a class of minimal-polynomial degree > 2)");
    std::string ce_a, ce_d;
    long ce_roots = 10, ce_nonroots = 10, ce_budget = 4096;
    cmd_ce->add_option("--a", ce_a, "Class representative")->required();
    cmd_ce->add_option("--d", ce_d, "Element not commuting with a")->required();
    cmd_ce->add_option("--roots", ce_roots, "Number of distinct roots to produce");
    cmd_ce->add_option("--nonroots", ce_nonroots, "Number of distinct non-roots to produce");
    cmd_ce->add_option("--budget", ce_budget, "Witness search sample budget");
    add_common(cmd_ce, true);

    // verify
    auto* cmd_verify = app.add_subcommand(
        "verify", "Run seeded exact property suites; exit 1 on any failure");
    std::string verify_suite = "all";
    int verify_trials = 50;
    long verify_bound = 2;
    cmd_verify->add_option("--suite", verify_suite,
                           "prop163 | roots | swap | counterexample | gm | all");
    cmd_verify->add_option("--trials", verify_trials, "Trials per suite");
    cmd_verify->add_option("--bound", verify_bound, "Coordinate bound for sampled inputs");
    add_common(cmd_verify, false);

    CLI11_PARSE(app, argc, argv);

    Output out;
    int exit_code = 0;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        out.seed = resolve_seed(seed_flag);
        std::mt19937_64 rng(out.seed);

        if (app.got_subcommand(cmd_eval)) {
            out.command = "eval";
            out.algebra = algebra_spec;
            const auto alg = parse_algebra(algebra_spec);
            if (!eval_poly.empty() && !eval_at.empty()) {
                out.inputs = {{"poly", eval_poly}, {"at", eval_at}};
                const auto p = parse_poly(eval_poly, alg);
                const auto d = parse_element(eval_at, alg);
                const auto value = p.right_eval(d);
                out.results = {{"value", element_json(value)},
                               {"is_root", value.is_zero()}};
                out.text = {"value = " + to_string(value)};
            } else if (!eval_expr.empty()) {
                out.inputs = {{"expr", eval_expr}};
                const auto value = parse_element(eval_expr, alg);
                out.results = {{"value", element_json(value)}};
                out.text = {"value = " + to_string(value)};
            } else {
                raise(Errc::InvalidArgument, "eval needs either --poly with --at, or --expr");
            }
        } else if (app.got_subcommand(cmd_mul)) {
            out.command = "mul";
            out.algebra = algebra_spec;
            out.inputs = {{"lhs", mul_lhs}, {"rhs", mul_rhs}};
            const auto alg = parse_algebra(algebra_spec);
            const auto product = parse_poly(mul_lhs, alg) * parse_poly(mul_rhs, alg);
            out.results = {{"product", poly_json(product)}};
            out.text = {"product = " + to_string(product)};
        } else if (app.got_subcommand(cmd_div)) {
            out.command = "divide";
            out.algebra = algebra_spec;
            out.inputs = {{"num", div_num}, {"den", div_den}};
            const auto alg = parse_algebra(algebra_spec);
            const auto num = parse_poly(div_num, alg);
            const auto den = parse_poly(div_den, alg);
            const auto [q, r] = num.right_divide(den);
            out.verified = (q * den + r == num);
            out.results = {{"quotient", poly_json(q)}, {"remainder", poly_json(r)}};
            out.text = {"quotient = " + to_string(q), "remainder = " + to_string(r)};
        } else if (app.got_subcommand(cmd_roots)) {
            out.command = "roots";
            out.algebra = algebra_spec;
            out.inputs = {{"factors", roots_factors}};
            const auto alg = parse_algebra(algebra_spec);
            const auto factors = parse_factor_list(roots_factors, alg);
            const auto sol = linear_factor_roots(factors);
            json roots = json::array();
            for (const auto& root : sol.roots) {
                const bool ok = sol.polynomial.right_eval(root.zeta).is_zero();
                out.verified = out.verified && ok;
                roots.push_back({{"k", root.factor_index + 1},
                                 {"zeta", element_json(root.zeta)},
                                 {"class", central_poly_json(root.class_poly)},
                                 {"verified", ok}});
                out.text.push_back("zeta_" + std::to_string(root.factor_index + 1) + " = " +
                                   to_string(root.zeta) + "   [class " +
                                   root.class_poly.to_string() + "]");
            }
            out.results = {{"polynomial", poly_json(sol.polynomial)}, {"roots", roots}};
            bool quaternion_route = alg->kind() == AlgebraKind::Quaternion;
            for (const auto& f : factors) quaternion_route = quaternion_route && !f.is_central();
            if (quaternion_route) {
                const auto qsol = quaternion_roots(factors);
                bool agree = true;
                for (std::size_t k = 0; k < sol.roots.size(); ++k)
                    agree = agree && qsol.roots[k].zeta == sol.roots[k].zeta;
                out.verified = out.verified && agree;
                out.results["conjugate_formula_agrees"] = agree;
                out.text.push_back(std::string("conjugate-polynomial formula agrees: ") +
                                   (agree ? "yes" : "no"));
            }
            out.text.insert(out.text.begin(), "P = " + to_string(sol.polynomial));
        } else if (app.got_subcommand(cmd_swap)) {
            out.command = "swap";
            out.algebra = algebra_spec;
            out.inputs = {{"d1", swap_d1}, {"d2", swap_d2}};
            const auto alg = parse_algebra(algebra_spec);
            const auto d1 = parse_element(swap_d1, alg);
            const auto d2 = parse_element(swap_d2, alg);
            const auto [left, right] = swap_factors(d1, d2);
            const auto product = SkewPolynomial::x_minus(d2) * SkewPolynomial::x_minus(d1);
            out.results = {{"left", element_json(left)},
                           {"right", element_json(right)},
                           {"product", poly_json(product)},
                           {"identity_verified", true}};
            out.text = {"(x - d2)(x - d1) = (x - d)(x - d3)",
                        "d  = " + to_string(left), "d3 = " + to_string(right)};
            if (alg->kind() == AlgebraKind::Quaternion && !d1.is_central()) {
                const auto [l2, r2] = quaternion_swap(d1, d2);
                const bool agree = l2 == left && r2 == right;
                out.verified = out.verified && agree;
                out.results["quaternion_shortcut_agrees"] = agree;
                out.text.push_back(std::string("h = d2 - conj(d1) shortcut agrees: ") +
                                   (agree ? "yes" : "no"));
            }
        } else if (app.got_subcommand(cmd_ce)) {
            out.command = "counterexample";
            out.algebra = algebra_spec;
            out.inputs = {{"a", ce_a}, {"d", ce_d}, {"roots", ce_roots},
                          {"nonroots", ce_nonroots}};
            const auto alg = parse_algebra(algebra_spec);
            const auto a = parse_element(ce_a, alg);
            const auto d = parse_element(ce_d, alg);
            const auto report =
                build_quadratic_counterexample(a, d, ce_roots, ce_nonroots, rng, ce_budget);
            json roots = json::array(), nonroots = json::array();
            for (const auto& r : report.roots) roots.push_back(element_json(r));
            for (const auto& s : report.nonroots) nonroots.push_back(element_json(s));
            out.results = {{"a", element_json(report.a)},
                           {"lambda", central_poly_json(report.lambda)},
                           {"d", element_json(report.d)},
                           {"b", element_json(report.b)},
                           {"p", poly_json(report.p)},
                           {"roots", roots},
                           {"nonroots", nonroots},
                           {"witness", element_json(report.witness)},
                           {"remainder_p_mod_lambda", poly_json(report.remainder_p_mod_lambda)},
                           {"remainder_nonzero", !report.remainder_p_mod_lambda.is_zero()}};
            out.text = {"P = " + to_string(report.p),
                        "lambda = " + report.lambda.to_string(),
                        "b = " + to_string(report.b),
                        std::to_string(report.roots.size()) + " verified roots, " +
                            std::to_string(report.nonroots.size()) + " verified non-roots",
                        "lambda divides P: no"};
        } else if (app.got_subcommand(cmd_verify)) {
            out.command = "verify";
            out.algebra = "";
            out.inputs = {{"suite", verify_suite}, {"trials", verify_trials},
                          {"bound", verify_bound}};
            const auto suites =
                run_verify_suites(verify_suite, verify_trials, out.seed, verify_bound);
            json jsuites = json::array();
            bool all_passed = true;
            for (const auto& s : suites) {
                all_passed = all_passed && s.passed();
                json js{{"name", s.name},
                        {"trials", s.trials},
                        {"failures", s.failures},
                        {"passed", s.passed()},
                        {"notes", s.notes}};
                if (s.witness_required) js["witness_found"] = s.witness_found;
                jsuites.push_back(js);
                out.text.push_back(s.name + ": " + (s.passed() ? "pass" : "FAIL") + " (" +
                                   std::to_string(s.trials) + " trials, " +
                                   std::to_string(s.failures) + " failures)");
            }
            out.results = {{"suites", jsuites}};
            out.verified = all_passed;
            if (!all_passed) exit_code = 1;
        }
    } catch (const Error& e) {
        out.verified = false;
        out.results = {{"error", {{"code", errc_name(e.code())},
                                  {"message", e.what()},
                                  {"position", e.position() == Error::no_position
                                                   ? json(nullptr)
                                                   : json(e.position())}}}};
        out.text = {std::string("error: ") + e.what()};
        const auto t1 = std::chrono::steady_clock::now();
        const auto ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
        emit(out, format, ms, 2);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    const auto t1 = std::chrono::steady_clock::now();
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    return emit(out, format, ms, exit_code);
}
