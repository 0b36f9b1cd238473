#include <fstream>
#include <iostream>
#include <random>

#include <CLI11.hpp>

#include "mpc/lifts.hpp"
#include "mpc/report.hpp"

namespace {

struct CommonOpts {
    double hbar = 1.0;
    double tol = 1e-8;
    unsigned seed = 20260823;
    std::string format = "json";
    std::string out;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--hbar", opts.hbar, "Value of the hbar parameter")
        ->envname("MPC_DIRAC_HBAR")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--tol", opts.tol, "Pass/fail tolerance for residuals")
        ->envname("MPC_DIRAC_TOL")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--seed", opts.seed, "Random seed")
        ->envname("MPC_DIRAC_SEED");
    cmd->add_option("--format", opts.format, "Output format")
        ->envname("MPC_DIRAC_FORMAT")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", opts.out, "Output file (default stdout)")
        ->envname("MPC_DIRAC_OUT");
}

int emit(const CommonOpts& opts, const std::string& text) {
    if (opts.out.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream f(opts.out);
    if (!f) {
        std::cerr << "cannot open " << opts.out << "\n";
        return 2;
    }
    f << text;
    return 0;
}

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", x);
    return buf;
}

int run_mpc_verify(const CommonOpts& opts, int n, int samples) {
    mpc::SymplecticSpace sp = mpc::SymplecticSpace::standard(n, opts.hbar);
    std::mt19937_64 rng(opts.seed);
    double worst_constraint = 0.0;
    double worst_siegel = 0.0;
    double worst_assoc = 0.0;
    double worst_inverse = 0.0;
    double worst_eta = 0.0;
    std::vector<mpc::MpcElement> pool;
    for (int i = 0; i < samples; ++i) {
        pool.push_back(mpc::random_mpc(sp, rng));
    }
    for (const auto& x : pool) {
        worst_constraint =
            std::max(worst_constraint, mpc::mpc_constraint_residual(x));
        mpc::SiegelPair p = mpc::cz_decompose(sp, x.g);
        worst_siegel =
            std::max(worst_siegel, (mpc::cz_reassemble(sp, p) - x.g).norm());
        mpc::MpcElement xinv = mpc::mpc_inverse(x);
        mpc::MpcElement prod = mpc::mpc_multiply(x, xinv);
        worst_inverse = std::max(
            worst_inverse,
            std::max((prod.g - mpc::Mat::Identity(sp.dim(), sp.dim())).norm(),
                     std::abs(prod.lambda - mpc::cplx(1.0, 0.0))));
    }
    for (size_t i = 0; i + 2 < pool.size(); i += 3) {
        const auto& x = pool[i];
        const auto& y = pool[i + 1];
        const auto& z = pool[i + 2];
        mpc::MpcElement left = mpc::mpc_multiply(mpc::mpc_multiply(x, y), z);
        mpc::MpcElement right = mpc::mpc_multiply(x, mpc::mpc_multiply(y, z));
        worst_assoc = std::max(worst_assoc,
                               std::max((left.g - right.g).norm(),
                                        std::abs(left.lambda - right.lambda)));
        worst_eta = std::max(
            worst_eta, std::abs(mpc::eta(mpc::mpc_multiply(x, y)) -
                                mpc::eta(x) * mpc::eta(y)));
    }
    bool pass = worst_constraint <= opts.tol && worst_siegel <= opts.tol &&
                worst_assoc <= opts.tol && worst_inverse <= opts.tol &&
                worst_eta <= opts.tol;
    std::string text;
    if (opts.format == "json") {
        text = "{\n  \"schema\": \"mpc-verify/1\",\n";
        text += "  \"n\": " + std::to_string(n) + ",\n";
        text += "  \"samples\": " + std::to_string(samples) + ",\n";
        text += "  \"hbar\": " + fmt(opts.hbar) + ",\n";
        text += "  \"tol\": " + fmt(opts.tol) + ",\n";
        text += "  \"seed\": " + std::to_string(opts.seed) + ",\n";
        text += "  \"constraint_residual\": " + fmt(worst_constraint) + ",\n";
        text += "  \"siegel_residual\": " + fmt(worst_siegel) + ",\n";
        text += "  \"associativity_residual\": " + fmt(worst_assoc) + ",\n";
        text += "  \"inverse_residual\": " + fmt(worst_inverse) + ",\n";
        text += "  \"eta_residual\": " + fmt(worst_eta) + ",\n";
        text += std::string("  \"pass\": ") + (pass ? "true" : "false") + "\n}\n";
    } else {
        text = "check,residual\n";
        text += "constraint," + fmt(worst_constraint) + "\n";
        text += "siegel," + fmt(worst_siegel) + "\n";
        text += "associativity," + fmt(worst_assoc) + "\n";
        text += "inverse," + fmt(worst_inverse) + "\n";
        text += "eta," + fmt(worst_eta) + "\n";
        text += std::string("pass,") + (pass ? "1" : "0") + "\n";
    }
    int rc = emit(opts, text);
    if (rc != 0) return rc;
    return pass ? 0 : 1;
}

int run_dirac(const CommonOpts& opts, int n, int k, int r_max, int dim_cap) {
    mpc::SymplecticSpace sp = mpc::SymplecticSpace::standard(n, opts.hbar);
    mpc::SpectrumReport report =
        mpc::make_spectrum_report(sp, n, k, r_max, dim_cap);
    report.tol = opts.tol;
    std::string text =
        opts.format == "json" ? mpc::to_json(report) : mpc::to_csv(report);
    int rc = emit(opts, text);
    if (rc != 0) return rc;
    return report.worst_residual <= opts.tol ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Mpc group checks and symplectic Dirac spectra on CP^n"};
    app.require_subcommand(1);

    CommonOpts verify_opts;
    int verify_n = 2;
    int verify_samples = 60;
    CLI::App* verify = app.add_subcommand(
        "mpc-verify", "Randomized group law and decomposition checks");
    add_common(verify, verify_opts);
    verify->add_option("--n", verify_n, "Complex dimension")
        ->envname("MPC_DIRAC_N")
        ->check(CLI::Range(1, 6));
    verify->add_option("--samples", verify_samples, "Number of random elements")
        ->check(CLI::PositiveNumber);

    CommonOpts dirac_opts;
    int dirac_n = 2;
    int dirac_k = 0;
    int dirac_r_max = 2;
    int dirac_dim_cap = 5000;
    CLI::App* dirac = app.add_subcommand(
        "dirac", "Spectrum of the commutator operator block by block");
    add_common(dirac, dirac_opts);
    dirac->add_option("--n", dirac_n, "Complex dimension of CP^n")
        ->envname("MPC_DIRAC_N")
        ->check(CLI::Range(1, 4));
    dirac->add_option("--k", dirac_k, "Twisting character index")
        ->envname("MPC_DIRAC_K")
        ->check(CLI::NonNegativeNumber);
    dirac->add_option("--r-max", dirac_r_max, "Largest block parameter r")
        ->envname("MPC_DIRAC_R_MAX")
        ->check(CLI::NonNegativeNumber);
    dirac->add_option("--dim-cap", dirac_dim_cap,
                      "Refuse blocks above this representation dimension")
        ->envname("MPC_DIRAC_DIM_CAP")
        ->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);
    try {
        if (verify->parsed()) {
            return run_mpc_verify(verify_opts, verify_n, verify_samples);
        }
        return run_dirac(dirac_opts, dirac_n, dirac_k, dirac_r_max,
                         dirac_dim_cap);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
