// Command-line verification harness. Reports go to stdout, one JSON record per line.
#include "nlie/checks.hpp"
#include "nlie/diagrams.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

namespace {

constexpr int kExitUsage = 2;

void emit(const nlie::Report& r) { std::cout << r.to_line() << '\n' << std::flush; }

std::optional<std::uint64_t> seed_from_env() {
    const char* s = std::getenv("NLIE_SEED");
    if (!s || !*s) return std::nullopt;
    std::size_t used = 0;
    unsigned long long v = std::stoull(s, &used);
    if (used != std::string(s).size()) throw std::invalid_argument("NLIE_SEED is not an unsigned integer");
    return v;
}

nlie::Arc parse_arc(const std::string& s) {
    auto dash = s.find('-');
    if (dash == std::string::npos) throw std::invalid_argument("arc must look like i-j: " + s);
    return {std::stoi(s.substr(0, dash)), std::stoi(s.substr(dash + 1))};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Verification harness for the simple n-Lie algebra and its primitive ideals"};
    app.require_subcommand(1);

    nlie::BatteryOptions opt;
    std::optional<std::uint64_t> seed_flag;

    auto* verify = app.add_subcommand("verify", "Run checks and emit reports");
    std::string target;
    std::vector<std::string> choices = nlie::verify_targets();
    choices.push_back("all");
    verify->add_option("target", target, "Check group")->required()->check(CLI::IsMember(choices));
    std::optional<int> n_opt, max_n;
    bool deep = false;
    verify->add_option("--n", n_opt, "Arity n (so(n+1))")->check(CLI::Range(3, 64));
    verify->add_option("--max-n", max_n, "Upper end of the range for 'all'")->check(CLI::Range(3, 64));
    verify->add_flag("--deep", deep, "Extend the default range of 'all' to n = 8");
    verify->add_option("--trials", opt.trials, "Random tuples for the Jacobi check")->check(CLI::PositiveNumber);
    verify->add_option("--seed", seed_flag, "Random seed (default: NLIE_SEED or built in)");
    verify->add_flag("--timing", opt.timing, "Record wall_time_ms");

    auto* classify = app.add_subcommand("classify", "List the weight families");
    int classify_n = 3;
    std::string basis = "epsilon";
    classify->add_option("--n", classify_n, "Arity n")->required()->check(CLI::Range(3, 64));
    classify->add_option("--basis", basis, "Coordinates")->check(CLI::IsMember({"epsilon", "fundamental"}));

    auto* pbw = app.add_subcommand("pbw", "PBW basis counts");
    auto* pbw_count = pbw->add_subcommand("count", "Count non-crossing diagrams");
    pbw->require_subcommand(1);
    int pbw_n = 3, pbw_degree = 2;
    pbw_count->add_option("--n", pbw_n, "Arity n")->required()->check(CLI::Range(3, 64));
    pbw_count->add_option("--degree", pbw_degree, "Degree (only 2 is supported)")->check(CLI::Range(2, 2));

    auto* diagram = app.add_subcommand("diagram", "Render a diagram word and its normal form");
    int diagram_n = 3;
    std::vector<std::string> arcs;
    diagram->add_option("--n", diagram_n, "Arity n")->required()->check(CLI::Range(2, 64));
    diagram->add_option("arcs", arcs, "Arcs in product order, e.g. 1-3 2-4")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        auto env = seed_from_env();
        opt.seed = seed_flag ? *seed_flag : env ? *env : nlie::kDefaultSeed;

        if (*verify) {
            if (target == "all") {
                int lo = 3, hi = deep ? 8 : 6;
                if (max_n) hi = *max_n;
                if (n_opt) lo = hi = *n_opt;
                return nlie::run_battery(lo, hi, opt, emit) ? 0 : 1;
            }
            if (!n_opt) {
                std::cerr << "verify " << target << " needs --n\n" << verify->help();
                return kExitUsage;
            }
            bool ok = true;
            for (const auto& r : nlie::run_target(target, *n_opt, opt)) {
                ok = ok && r.status != nlie::Status::Fail;
                emit(r);
            }
            return ok ? 0 : 1;
        }
        if (*classify) {
            auto r = nlie::classify_report(classify_n, basis);
            emit(r);
            return r.passed() ? 0 : 1;
        }
        if (*pbw_count) {
            auto r = nlie::pbw_count_report(pbw_n, pbw_degree);
            emit(r);
            return r.passed() ? 0 : 1;
        }
        if (*diagram) {
            nlie::DiagramSum d(diagram_n + 1);
            nlie::ArcWord w;
            std::vector<std::pair<int, int>> oriented;
            for (const auto& a : arcs) {
                nlie::Arc x = parse_arc(a);
                if (x.i < 1 || x.j < 1 || x.i > diagram_n + 1 || x.j > diagram_n + 1 || x.i == x.j)
                    throw std::invalid_argument("arc out of range: " + a);
                oriented.push_back({x.i, x.j});
            }
            d.add_oriented(oriented, nlie::Scalar(1));
            std::cout << "input\n" << d.render() << "normal form\n";
            auto nf = nlie::normalize_diagram(d);
            std::cout << (nf.is_zero() ? "0\n" : nf.render());
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return kExitUsage;
}
