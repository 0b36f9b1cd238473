#include "mpc/report.hpp"

#include <cstdio>

namespace mpc {

namespace {

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", x);
    return buf;
}

} // namespace

SpectrumReport make_spectrum_report(const SymplecticSpace& sp, int n, int k,
                                    int r_max, int dim_cap) {
    SpectrumReport report;
    report.hbar = sp.hbar();
    report.tol = sp.tol();
    for (const SpinorBlockSpec& spec : enumerate_specs(n, k, r_max)) {
        DiracModel model = build_dirac_model(sp, spec, dim_cap);
        KernelDims kd = kernel_dims(model);
        report.worst_offblock =
            std::max(report.worst_offblock, model.offblock_residual);
        for (const LevelSpectrum& level : p_operator_spectrum(model)) {
            SpectrumRow row;
            row.n = spec.n;
            row.k = spec.k;
            row.r = spec.r;
            row.b = spec.b;
            row.l = level.l;
            row.matrix_eigenvalue = level.matrix_eigenvalue;
            row.closed_form = level.closed_form;
            row.residual = level.residual;
            row.ker_d_prime = kd.d_prime;
            row.ker_d_double_prime = kd.d_double_prime;
            row.ker_d = kd.d;
            report.worst_residual = std::max(report.worst_residual, row.residual);
            report.rows.push_back(row);
        }
    }
    return report;
}

std::string to_json(const SpectrumReport& report) {
    std::string out = "{\n";
    out += "  \"schema\": \"" + report.schema + "\",\n";
    out += "  \"hbar\": " + fmt(report.hbar) + ",\n";
    out += "  \"tol\": " + fmt(report.tol) + ",\n";
    out += "  \"casimir_convention\": \"" + report.casimir_convention + "\",\n";
    out += "  \"worst_residual\": " + fmt(report.worst_residual) + ",\n";
    out += "  \"worst_offblock\": " + fmt(report.worst_offblock) + ",\n";
    out += "  \"rows\": [";
    for (size_t i = 0; i < report.rows.size(); ++i) {
        const SpectrumRow& r = report.rows[i];
        out += i == 0 ? "\n" : ",\n";
        out += "    {\"n\": " + std::to_string(r.n);
        out += ", \"k\": " + std::to_string(r.k);
        out += ", \"r\": " + std::to_string(r.r);
        out += ", \"b\": " + std::to_string(r.b);
        out += ", \"l\": " + std::to_string(r.l);
        out += ", \"matrix_eigenvalue\": " + fmt(r.matrix_eigenvalue);
        out += ", \"closed_form\": " + fmt(r.closed_form);
        out += ", \"residual\": " + fmt(r.residual);
        out += ", \"ker_d_prime\": " + std::to_string(r.ker_d_prime);
        out += ", \"ker_d_double_prime\": " + std::to_string(r.ker_d_double_prime);
        out += ", \"ker_d\": " + std::to_string(r.ker_d);
        out += "}";
    }
    out += "\n  ]\n}\n";
    return out;
}

std::string to_csv(const SpectrumReport& report) {
    std::string out =
        "n,k,r,b,l,matrix_eigenvalue,closed_form,residual,"
        "ker_d_prime,ker_d_double_prime,ker_d\n";
    for (const SpectrumRow& r : report.rows) {
        out += std::to_string(r.n) + "," + std::to_string(r.k) + "," +
               std::to_string(r.r) + "," + std::to_string(r.b) + "," +
               std::to_string(r.l) + "," + fmt(r.matrix_eigenvalue) + "," +
               fmt(r.closed_form) + "," + fmt(r.residual) + "," +
               std::to_string(r.ker_d_prime) + "," +
               std::to_string(r.ker_d_double_prime) + "," +
               std::to_string(r.ker_d) + "\n";
    }
    return out;
}

} // namespace mpc
