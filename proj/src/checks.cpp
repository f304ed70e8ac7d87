#include "nlie/checks.hpp"

#include "nlie/casimir.hpp"
#include "nlie/diagrams.hpp"
#include "nlie/highest_weight.hpp"
#include "nlie/nlie_core.hpp"
#include "nlie/uea.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace nlie {

namespace {

template <class F> Report timed(bool timing, F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    Report r = f();
    if (timing) r.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

Report skipped(const std::string& check, int n, const std::string& why) {
    Report r{check, n};
    r.status = Status::Skipped;
    r.details["reason"] = why;
    return r;
}

}  // namespace

const std::vector<std::string>& verify_targets() {
    static const std::vector<std::string> t{"jacobi", "basic-lie", "relations", "casimir",
                                            "classification", "joseph", "diagrams"};
    return t;
}

bool is_verify_target(const std::string& name) {
    const auto& t = verify_targets();
    return std::find(t.begin(), t.end(), name) != t.end();
}

std::vector<Report> run_target(const std::string& target, int n, const BatteryOptions& opt) {
    if (n < 3) throw std::invalid_argument("n must be at least 3");
    const bool tm = opt.timing;
    std::vector<Report> out;
    auto add = [&](auto&& f) { out.push_back(timed(tm, f)); };
    if (target == "jacobi") {
        add([&] { return check_generalized_jacobi(n, opt.trials, opt.seed); });
        if (n <= 4) add([&] { return check_generalized_jacobi_basis(n); });
    } else if (target == "basic-lie") {
        add([&] { return check_ad_homomorphism(n, opt.homomorphism_trials, opt.seed); });
    } else if (target == "relations") {
        add([&] { return check_R_structure(n); });
        add([&] { return check_phi_psi(n); });
        add([&] { return check_psi_equivariance(n, opt.equivariance_trials, opt.seed); });
    } else if (target == "casimir") {
        add([&] { return check_casimir_table(n); });
        add([&] { return check_eigenbasis(n); });
        add([&] { return identify_R(n); });
    } else if (target == "classification") {
        add([&] { return check_classification_polynomials(n); });
        add([&] { return check_fundamental_weights(n); });
        add([&] { return check_graphical_route(n); });
        if (n == 3) add([&] { return so4_route_check(); });
    } else if (target == "joseph") {
        if (n <= 4)
            out.push_back(skipped("joseph", n, "the argument needs n >= 5"));
        else
            add([&] { return joseph_check(n); });
    } else if (target == "diagrams") {
        add([&] { return check_diagram_calculus(n, opt.strategies, opt.seed); });
    } else {
        throw std::invalid_argument("unknown verify target: " + target);
    }
    return out;
}

bool run_battery(int n_min, int n_max, const BatteryOptions& opt, const ReportSink& sink) {
    bool ok = true;
    for (int n = n_min; n <= n_max; ++n)
        for (const auto& t : verify_targets())
            for (const auto& r : run_target(t, n, opt)) {
                ok = ok && r.status != Status::Fail;
                sink(r);
            }
    return ok;
}

Report classify_report(int n, const std::string& basis) {
    if (n < 3) throw std::invalid_argument("n must be at least 3");
    if (basis != "epsilon" && basis != "fundamental") throw std::invalid_argument("basis must be epsilon or fundamental");
    Report rep{"classify", n};
    ClassificationResult res = solve_classification(n);
    rep.details["basis"] = basis;
    Json fams = Json::array();
    for (const auto& f : res.families) {
        if (basis == "epsilon") {
            fams.push_back(f.str());
        } else {
            PiExpression lit = theorem_pi_expression(f.t, n);
            PiExpression cor = epsilon_to_pi(f.coordinates(), n);
            fams.push_back({{"t", f.t}, {"epsilon", f.str()}, {"weight", to_string(cor)}, {"theorem", to_string(lit)},
                            {"theorem_matches", pi_to_epsilon(lit, n) == f.coordinates()}});
        }
    }
    rep.details["families"] = fams;
    rep.require(res.factors_ok && res.patterns_uncovered == 0 && res.grid_outside_families == 0 &&
                    res.family_points_failing == 0,
                "families do not describe the solution set");
    return rep;
}

Report pbw_count_report(int n, int degree) {
    if (n < 3) throw std::invalid_argument("n must be at least 3");
    Report rep{"pbw-count", n};
    const long count = count_noncrossing(n, degree);
    const long M = binomial(n + 1, 2);
    const long formula = M * (M + 1) / 2 - binomial(n + 1, 4);
    rep.details["degree"] = degree;
    rep.details["noncrossing"] = count;
    rep.details["dim_S2_minus_dim_R"] = formula;
    rep.require(count == formula, "non-crossing count differs from dim S^2 - dim R");
    return rep;
}

}  // namespace nlie
