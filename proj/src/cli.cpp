#include "cavsim/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "cavsim/experiments.hpp"

namespace cavsim {

namespace {

const double kPi = std::acos(-1.0);

std::vector<double> build_theta_grid(const std::vector<double>& theta_list, double start,
                                     double end, double step) {
    if (!theta_list.empty()) return theta_list;
    if (step <= 0.0) throw std::invalid_argument("--theta-step must be positive");
    if (end < start) throw std::invalid_argument("--theta-end must be >= --theta-start");
    std::vector<double> grid;
    const auto n = static_cast<std::int64_t>(std::floor((end - start) / step + 1e-9));
    grid.reserve(static_cast<size_t>(n) + 1);
    for (std::int64_t i = 0; i <= n; ++i) grid.push_back(start + static_cast<double>(i) * step);
    return grid;
}

int write_output(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        return std::cout.good() ? 0 : 2;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open output file: " << path << "\n";
        return 2;
    }
    out << content;
    out.close();
    if (!out) {
        std::cerr << "error: failed writing output file: " << path << "\n";
        return 2;
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"cavsim -- deterministic two-qubit experiments on the coupled-cavity circuit"};

    std::string command;
    app.add_option("--command", command, "experiment to run")
        ->required()
        ->check(CLI::IsMember({"sweep", "transfer", "tomo", "concurrence", "chsh", "equivalence"}));

    double theta_start = 0.0;
    double theta_end = kPi;
    double theta_step = kPi / 32.0;
    std::vector<double> theta_list;
    app.add_option("--theta-start", theta_start, "grid start in radians (default 0)");
    app.add_option("--theta-end", theta_end, "grid end in radians (default pi)");
    app.add_option("--theta-step", theta_step, "grid step in radians (default pi/32)");
    app.add_option("--theta-list", theta_list, "explicit comma-separated theta values")
        ->delimiter(',')
        ->excludes("--theta-start")
        ->excludes("--theta-end")
        ->excludes("--theta-step");

    std::int64_t shots = 8192;
    app.add_option("--shots", shots, "shots per point; 0 means exact probabilities")
        ->check(CLI::NonNegativeNumber);

    std::uint64_t seed = 0;
    app.add_option("--seed", seed, "base RNG seed (default 0)");

    int k = 25;
    app.add_option("--k", k, "transfer-condition index, omega/J = 4k-1 (default 25)")
        ->check(CLI::PositiveNumber);

    std::string out_path = "-";
    app.add_option("--out", out_path, "output path, '-' for stdout (default)");

    std::string format;
    app.add_option("--format", format, "csv or json (default: csv; transfer emits json)")
        ->check(CLI::IsMember({"csv", "json"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        const std::vector<double> thetas =
            build_theta_grid(theta_list, theta_start, theta_end, theta_step);
        if (thetas.empty()) throw std::invalid_argument("theta grid is empty");
        const bool json = (format == "json");

        if (command == "sweep") {
            const auto rows = run_sweep(thetas, shots, seed);
            return write_output(out_path, json ? to_json(rows) : to_csv(rows));
        }
        if (command == "concurrence") {
            const auto rows = run_concurrence(thetas, shots, seed);
            return write_output(out_path, json ? to_json(rows, "concurrence", false)
                                               : to_csv(rows, "concurrence", false));
        }
        if (command == "chsh") {
            const auto rows = run_chsh(thetas, shots, seed);
            return write_output(out_path, json ? to_json(rows, "chsh", true)
                                               : to_csv(rows, "chsh", true));
        }
        if (command == "transfer" || command == "tomo") {
            if (format == "csv") {
                throw std::invalid_argument("the transfer report is JSON only; drop --format csv");
            }
            return write_output(out_path, to_json(run_transfer(k, shots, seed)));
        }

        // equivalence
        const auto rows = run_equivalence(seed);
        const int io_rc = write_output(out_path, json ? to_json(rows) : to_csv(rows));
        if (io_rc != 0) return io_rc;
        bool all_pass = true;
        for (const EquivalenceRow& r : rows) {
            if (!r.pass) {
                all_pass = false;
                char buf[128];
                std::snprintf(buf, sizeof(buf),
                              "equivalence mismatch at omega/J=%.6f Jt=%.6f (overlap %.12f)\n",
                              r.omega_over_j, r.jt, r.min_overlap);
                std::cerr << buf;
            }
        }
        return all_pass ? 0 : 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace cavsim
