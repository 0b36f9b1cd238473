#ifndef MPC_REPORT_HPP
#define MPC_REPORT_HPP

#include <string>
#include <vector>

#include "mpc/dirac_cpn.hpp"

namespace mpc {

struct SpectrumRow {
    int n;
    int k;
    int r;
    int b;
    int l;
    double matrix_eigenvalue;
    double closed_form;
    double residual;
    int ker_d_prime;
    int ker_d_double_prime;
    int ker_d;
};

struct SpectrumReport {
    std::string schema = "mpc-dirac-spectrum/1";
    double hbar = 1.0;
    double tol = 1e-8;
    /// Casimir numbers use the invariant form B(X, Y) = -Tr(XY)/2, which
    /// makes them negative on nontrivial irreps of the compact groups.
    std::string casimir_convention = "B=-trace/2";
    std::vector<SpectrumRow> rows;
    /// Worst residual and intertwiner defect over all rows.
    double worst_residual = 0.0;
    double worst_offblock = 0.0;
};

/// Spectrum rows for every block with the given n, k and r <= r_max, ordered
/// by (r, b, l).  Kernel dimensions are per block multiplicity space.
SpectrumReport make_spectrum_report(const SymplecticSpace& sp, int n, int k,
                                    int r_max, int dim_cap = 5000);

/// Serializations are deterministic and print floating-point values with 15
/// significant digits.
std::string to_json(const SpectrumReport& report);
std::string to_csv(const SpectrumReport& report);

} // namespace mpc

#endif
