// One line per acceptance criterion. Exit status is nonzero if any criterion fails.
#include "nlie/casimir.hpp"
#include "nlie/checks.hpp"
#include "nlie/diagrams.hpp"
#include "nlie/highest_weight.hpp"
#include "nlie/nlie_core.hpp"
#include "nlie/uea.hpp"
#include "support/verma_oracle.hpp"

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

using namespace nlie;

namespace {

struct Outcome {
    bool ok = true;
    std::vector<std::string> notes;

    void need(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            notes.push_back(what);
        }
    }
};

std::string join(const std::vector<std::string>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : "; ") + x;
    return s;
}

void print(int k, const std::string& title, const Outcome& o) {
    std::printf("criterion %d %-28s %s%s%s\n", k, title.c_str(), o.ok ? "PASS" : "FAIL", o.notes.empty() ? "" : ": ",
                join(o.notes).c_str());
}

std::string at(int n) { return "n=" + std::to_string(n); }

Outcome classification() {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    for (int n = 3; n <= 8; ++n) {
        const int N = (n + 1) / 2;
        o.need(classification_polynomials(n) == expected_classification_polynomials(n), "polynomial set " + at(n));
        auto res = solve_classification(n);
        bool fam_ok = static_cast<int>(res.families.size()) == N && res.factors_ok && res.patterns_uncovered == 0 &&
                      res.grid_outside_families == 0 && res.family_points_failing == 0;
        o.need(fam_ok, "families " + at(n));
        Report fw = check_fundamental_weights(n);
        if (!fw.passed()) {
            for (const auto& row : fw.details["rows"])
                if (!row["matches"].get<bool>())
                    o.need(false, "theorem row t=" + std::to_string(row["t"].get<int>()) + " " + at(n) + " reads " +
                                      row["theorem"].get<std::string>() + ", family is " +
                                      row["coroot_form"].get<std::string>());
        }
        if (n == 6) {
            double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            o.need(s < 120.0, "runtime for n<=6 over 2 minutes");
        }
    }
    return o;
}

Outcome triangulation() {
    Outcome o;
    for (int n = 3; n <= 8; ++n) {
        Report r = check_graphical_route(n);
        for (const auto& p : r.details["pairs"])
            o.need(p["routes_agree"].get<bool>(), "graphical vs algebraic " + at(n));
    }
    Report a = so4_route_check();
    o.need(a.details["commutation_failures"] == 0 && a.details["sl2_failures"] == 0 &&
               a.details["e_expression_failures"] == 0 && a.details["rewrite_holds"] == true,
           "so(4) route setup");
    o.need(a.details["mu_matches_stated"] == true, "so(4) route: X acts as " + a.details["mu_polynomial"].get<std::string>() +
                                                       ", stated " + a.details["stated_mu_polynomial"].get<std::string>());
    // solution set {lambda2 = 0} u {lambda1 = -1}
    auto fams = solve_classification(3).families;
    o.need(fams.size() == 2 && fams[0].str() == "(x, 0)" && fams[1].str() == "(-1, x)", "n=3 solution set");
    return o;
}

Outcome casimir() {
    Outcome o;
    for (int n : {3, 4, 6, 7, 8}) {
        Report r = identify_R(n);
        const long want = binomial(n + 1, 4);
        const long got = r.details["dim_eigenspace_minus2"].get<long>();
        o.need(r.details["R_equals_eigenspace"] == true && got == want,
               "Eig(-2) has dim " + std::to_string(got) + ", R has " + std::to_string(want) + " at " + at(n));
    }
    for (int n = 3; n <= 8; ++n) {
        Report e = check_eigenbasis(n);
        o.need(e.details["rank"].get<long>() == sym2_dimension(n), "eigenbasis rank " + at(n));
        if (!e.passed()) {
            long bad = 0;
            for (const auto& [k, v] : e.details["failed_claims"].items()) bad += v.get<long>();
            o.need(false, std::to_string(bad) + " stated eigenvalues wrong " + at(n));
        }
    }
    Report r5 = identify_R(5);
    o.need(r5.details["dim_eigenspace_minus2"] == 35,
           "Eig(-2) has dim " + r5.details["dim_eigenspace_minus2"].dump() + " at n=5, stated 35");
    o.need(r5.details["dim_R"] == 15, "dim R at n=5");
    SoAlgebra so6(5);
    auto hws = r_highest_weights(so6);
    o.need(s2_highest_weight_dim(so6, Weight{1, 1, 0}) == 1 && hws.size() == 1 && hws[0].in_R == 1,
           "eps1+eps2 highest weight space at n=5");
    const auto& sp = r5.details["spectrum"];
    o.need(sp["-4"] == 1 && sp["-2"] == 15 && sp["1"] == 84 && sp["-1"] == 20 && r5.details["spectrum_total"] == 120,
           "1+15+84+20 bookkeeping");
    return o;
}

Outcome structure() {
    Outcome o;
    for (int n = 3; n <= 8; ++n) {
        o.need(check_phi_psi(n).passed(), "phi psi = 3 Id " + at(n));
        Report eq = check_psi_equivariance(n, 100, kDefaultSeed);
        o.need(eq.passed(), "psi equivariance " + at(n));
        Report rs = check_R_structure(n);
        const auto& d = rs.details;
        o.need(d["dim_R"].get<long>() + d["dim_ker_phi"].get<long>() == d["dim_S2"].get<long>() &&
                   d["dim_R_meet_ker_phi"] == 0,
               "S^2 = psi + Ker phi " + at(n));
        o.need(d["adjoint_closure_failures"] == 0, "[so, R] in R " + at(n));
    }
    return o;
}

Outcome axioms() {
    Outcome o;
    for (int n = 3; n <= 6; ++n) {
        Report j = check_generalized_jacobi(n, 200, kDefaultSeed);
        o.need(j.passed() && j.details["trials"].get<int>() >= 200, "generalized Jacobi " + at(n));
        Report h = check_ad_homomorphism(n, 100, kDefaultSeed);
        o.need(h.details["homomorphism_failures"] == 0 && h.details["jacobi_failures"] == 0,
               "homomorphism identity " + at(n));
        if (n <= 5) {
            const long M = binomial(n + 1, 2);
            o.need(h.details["transport_failures"] == 0 && h.details["transport_pairs"].get<long>() >= M * (M - 1) / 2,
                   "Hodge transport " + at(n));
        }
    }
    return o;
}

Outcome graphical() {
    Outcome o;
    for (int n = 3; n <= 6; ++n) {
        Report r = check_diagram_calculus(n, 20, kDefaultSeed);
        o.need(r.details["generator_failures"] == 0, "Q(A) generators " + at(n));
        o.need(r.details["confluence_failures"] == 0, "confluence " + at(n));
    }
    for (int n = 3; n <= 10; ++n) {
        const long M = binomial(n + 1, 2);
        o.need(count_noncrossing(n, 2) == M * (M + 1) / 2 - binomial(n + 1, 4), "non-crossing count " + at(n));
    }
    o.need(count_noncrossing(3, 2) == 20 && count_noncrossing(4, 2) == 50, "n=3,4 counts");
    return o;
}

Outcome joseph() {
    Outcome o;
    for (int n = 5; n <= 8; ++n) {
        Report r = joseph_check(n);
        const auto& d = r.details;
        o.need(d["phi_top_zero"] == true && d["closure_phi_failures"] == 0 && d["phi_invariant_zero"] == true,
               "phi annihilation " + at(n));
        o.need(d["R_meet_ker_phi"] == 0, "R meet Ker phi " + at(n));
        o.need(r.passed(), "conclusion " + at(n));
    }
    return o;
}

Outcome oracle_agreement() {
    Outcome o;
    for (int n = 3; n <= 6; ++n) {
        SoAlgebra alg(n);
        oracle::VermaModel model(alg);
        const auto& labels = alg.labels(Family::V);
        int bad = 0;
        if (hw_action(alg, u_one()) != model.project(u_one())) ++bad;
        for (const auto& a : labels) {
            if (hw_action(alg, u_mono({a})) != model.project(u_mono({a}))) ++bad;
            for (const auto& b : labels)
                if (hw_action(alg, u_mono({a, b})) != model.project(u_mono({a, b}))) ++bad;
        }
        o.need(bad == 0, std::to_string(bad) + " disagreements " + at(n));
    }
    return o;
}

}  // namespace

int main() {
    struct Item {
        const char* title;
        Outcome (*run)();
    };
    const Item items[] = {{"classification", classification}, {"route-triangulation", triangulation},
                          {"casimir", casimir},               {"structural-identities", structure},
                          {"n-lie-axioms", axioms},           {"graphical-calculus", graphical},
                          {"joseph-inclusion", joseph},       {"oracle-agreement", oracle_agreement}};
    bool all = true;
    int k = 1;
    for (const auto& it : items) {
        Outcome o;
        try {
            o = it.run();
        } catch (const std::exception& e) {
            o.need(false, std::string("exception: ") + e.what());
        }
        print(k++, it.title, o);
        std::fflush(stdout);
        all = all && o.ok;
    }
    return all ? 0 : 1;
}
