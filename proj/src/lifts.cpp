#include "mpc/lifts.hpp"

#include <cmath>

#include <unsupported/Eigen/MatrixFunctions>

namespace mpc {

namespace {

// Matrix of the inner product G_j in the ambient coordinates.
Mat gj_matrix(const SymplecticSpace& sp) { return sp.omega() * sp.j(); }

// <.,.>_j-orthonormal complex basis of the j-stable subspace given by the
// projector p: Gram-Schmidt over the complex span of each accepted vector.
Mat complex_basis_of_subspace(const SymplecticSpace& sp, const Mat& p,
                              int expected_complex_dim) {
    const int d = sp.dim();
    Mat basis = Mat::Zero(d, expected_complex_dim);
    int found = 0;
    for (int cand = 0; cand < d && found < expected_complex_dim; ++cand) {
        Vec c = p.col(cand);
        for (int a = 0; a < found; ++a) {
            Vec b = basis.col(a);
            cplx coeff = sp.herm(c, b);
            c -= coeff.real() * b + coeff.imag() * (sp.j() * b);
        }
        double norm2 = sp.gj(c, c);
        if (norm2 > 1e-10) basis.col(found++) = c / std::sqrt(norm2);
    }
    if (found < expected_complex_dim) {
        throw EigenspaceMismatch("subspace has smaller dimension than expected");
    }
    return basis;
}

// Complex matrix of a j-linear operator t restricted to the j-stable
// subspace spanned (complex-orthonormally) by the columns of basis.
CMat restrict_complex(const SymplecticSpace& sp, const Mat& t, const Mat& basis) {
    const int m = static_cast<int>(basis.cols());
    CMat out(m, m);
    for (int b = 0; b < m; ++b) {
        Vec image = t * basis.col(b);
        for (int a = 0; a < m; ++a) out(a, b) = sp.herm(image, basis.col(a));
    }
    return out;
}

cplx det_or_one(const CMat& m) {
    return m.rows() == 0 ? cplx(1.0, 0.0) : m.determinant();
}

// Real G_j-Gram-Schmidt on the columns of raw; throws if they are dependent.
Mat orthonormalize_real(const SymplecticSpace& sp, const Mat& raw) {
    Mat out = raw;
    for (int a = 0; a < out.cols(); ++a) {
        Vec c = out.col(a);
        for (int b = 0; b < a; ++b) c -= sp.gj(c, out.col(b)) * out.col(b);
        double norm2 = sp.gj(c, c);
        if (norm2 < 1e-12) throw Error("orthonormalize: dependent basis vectors");
        out.col(a) = c / std::sqrt(norm2);
    }
    return out;
}

// Random element of the subalgebra of sp(V, Omega) cut out by the linear
// constraint map, found as a combination of an SVD nullspace basis.
Mat random_constrained_sp(const SymplecticSpace& sp,
                          const std::function<Vec(const Mat&)>& constraint,
                          std::mt19937_64& rng, double bound) {
    const int d = sp.dim();
    std::vector<Mat> basis;
    Mat omega_inv = sp.omega().inverse();
    for (int i = 0; i < d; ++i) {
        for (int k = i; k < d; ++k) {
            Mat s = Mat::Zero(d, d);
            s(i, k) = 1.0;
            s(k, i) = 1.0;
            basis.push_back(omega_inv * s);
        }
    }
    const int nb = static_cast<int>(basis.size());
    Vec probe = constraint(basis[0]);
    Mat c(probe.size(), nb);
    c.col(0) = probe;
    for (int k = 1; k < nb; ++k) c.col(k) = constraint(basis[k]);
    Eigen::JacobiSVD<Mat> svd(c, Eigen::ComputeFullV);
    double smax = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
    std::normal_distribution<double> gauss(0.0, 1.0);
    Mat xi = Mat::Zero(d, d);
    int rank = 0;
    for (int k = 0; k < svd.singularValues().size(); ++k) {
        if (svd.singularValues()(k) > 1e-10 * std::max(smax, 1.0)) ++rank;
    }
    for (int k = rank; k < nb; ++k) {
        double coeff = gauss(rng);
        for (int b = 0; b < nb; ++b) xi += coeff * svd.matrixV()(b, k) * basis[b];
    }
    double norm = xi.operatorNorm();
    if (norm > bound) xi *= bound / norm;
    return xi;
}

} // namespace

PseudoUnitaryStructure make_pseudo_unitary_structure(const SymplecticSpace& sp,
                                                     Mat jtilde) {
    const int d = sp.dim();
    double scale = std::max(1.0, jtilde.norm());
    if ((jtilde * jtilde + Mat::Identity(d, d)).norm() > sp.tol() * scale * scale) {
        throw NotPseudoUnitary("jtilde is not a complex structure");
    }
    if ((jtilde.transpose() * sp.omega() * jtilde - sp.omega()).norm() >
        sp.tol() * scale * scale) {
        throw NotPseudoUnitary("jtilde is not compatible with omega");
    }
    if ((jtilde * sp.j() - sp.j() * jtilde).norm() > sp.tol() * scale) {
        throw NotPseudoUnitary("jtilde does not commute with j");
    }
    // V_+- are the eigenspaces of the involution jtilde*j: jtilde v = +-jv
    // reads (jtilde j) v = -+v.
    Mat k = jtilde * sp.j();
    Mat p_plus = 0.5 * (Mat::Identity(d, d) - k);
    Mat p_minus = 0.5 * (Mat::Identity(d, d) + k);
    int dim_plus = static_cast<int>(std::lround(p_plus.trace()));
    int dim_minus = d - dim_plus;
    if (dim_plus % 2 != 0) throw EigenspaceMismatch("odd eigenspace dimension");
    Mat v_plus = complex_basis_of_subspace(sp, p_plus, dim_plus / 2);
    Mat v_minus = complex_basis_of_subspace(sp, p_minus, dim_minus / 2);
    return PseudoUnitaryStructure{&sp, std::move(jtilde), std::move(v_plus),
                                  std::move(v_minus)};
}

LagrangianFrame make_lagrangian_frame(const SymplecticSpace& sp, const Mat& f_raw) {
    if (f_raw.rows() != sp.dim() || f_raw.cols() != sp.n()) {
        throw DimensionMismatch("make_lagrangian_frame: need n columns of length 2n");
    }
    Mat f = orthonormalize_real(sp, f_raw);
    Mat pairings = f.transpose() * sp.omega() * f;
    if (pairings.norm() > sp.tol() * sp.n()) {
        throw Error("make_lagrangian_frame: subspace is not isotropic");
    }
    return LagrangianFrame{&sp, std::move(f)};
}

ComplexLagrangianData make_complex_lagrangian(const SymplecticSpace& sp,
                                              const Mat& d_raw,
                                              const Mat& jtilde_prime) {
    const int d = sp.dim();
    const int m = static_cast<int>(d_raw.cols());
    if (m <= 0 || m >= sp.n()) {
        throw DimensionOutOfRange("make_complex_lagrangian: need 0 < dim D < n");
    }
    Mat dbasis = orthonormalize_real(sp, d_raw);
    if ((dbasis.transpose() * sp.omega() * dbasis).norm() > sp.tol() * m) {
        throw Error("make_complex_lagrangian: D is not isotropic");
    }
    // Q = (D + jD)^perp under G_j, built by projecting the coordinate vectors.
    Mat g = gj_matrix(sp);
    Mat span(d, 2 * m);
    span.leftCols(m) = dbasis;
    span.rightCols(m) = sp.j() * dbasis;
    Mat proj = Mat::Identity(d, d) - span * span.transpose() * g;
    const int qdim = d - 2 * m;
    Mat q(d, qdim);
    int found = 0;
    for (int cand = 0; cand < d && found < qdim; ++cand) {
        Vec c = proj.col(cand);
        for (int b = 0; b < found; ++b) c -= sp.gj(c, q.col(b)) * q.col(b);
        double norm2 = sp.gj(c, c);
        if (norm2 > 1e-10) q.col(found++) = c / std::sqrt(norm2);
    }
    if (found < qdim) throw Error("make_complex_lagrangian: failed to span Q");

    // Reduced symplectic space on Q in the q-coordinates.
    Mat omega_red = q.transpose() * sp.omega() * q;
    Mat j_red(qdim, qdim);
    for (int b = 0; b < qdim; ++b) {
        Vec image = sp.j() * q.col(b);
        for (int a = 0; a < qdim; ++a) j_red(a, b) = sp.gj(image, q.col(a));
    }
    auto reduced = std::make_shared<SymplecticSpace>(omega_red, j_red, sp.hbar(),
                                                     sp.tol());
    Mat jtp(qdim, qdim);
    for (int b = 0; b < qdim; ++b) {
        Vec image = jtilde_prime * q.col(b);
        if ((proj * image - image).norm() > sp.tol() * std::max(1.0, image.norm())) {
            throw Error("make_complex_lagrangian: jtilde' does not preserve Q");
        }
        for (int a = 0; a < qdim; ++a) jtp(a, b) = sp.gj(image, q.col(a));
    }
    PseudoUnitaryStructure ps = make_pseudo_unitary_structure(*reduced, jtp);
    return ComplexLagrangianData{&sp, std::move(dbasis), std::move(q), reduced,
                                 std::move(ps)};
}

MpcElement lift_unitary(const SymplecticSpace& sp, const Mat& g) {
    sp.require_symplectic(g);
    if ((g * sp.j() - sp.j() * g).norm() > sp.tol() * std::max(1.0, g.norm())) {
        throw NotUnitary("lift_unitary: g does not commute with j");
    }
    return MpcElement{&sp, g, cplx(1.0, 0.0)};
}

MpcElement lift_pseudo_unitary(const PseudoUnitaryStructure& ps, const Mat& g) {
    const SymplecticSpace& sp = *ps.space;
    sp.require_symplectic(g);
    if ((g * ps.jtilde - ps.jtilde * g).norm() > sp.tol() * std::max(1.0, g.norm())) {
        throw NotPseudoUnitary("lift_pseudo_unitary: g does not commute with jtilde");
    }
    Mat c_g = 0.5 * (g - sp.j() * g * sp.j());
    // C_g commutes with jtilde, so it preserves V_-; its restriction there
    // determines the lift.
    Mat k = ps.jtilde * sp.j();
    if ((c_g * k - k * c_g).norm() > sp.tol() * std::max(1.0, c_g.norm()) * 10) {
        throw EigenspaceMismatch("lift_pseudo_unitary: C_g does not preserve V_+-");
    }
    CMat c_minus = restrict_complex(sp, c_g, ps.v_minus);
    return MpcElement{&sp, g, 1.0 / det_or_one(c_minus)};
}

MpcElement lift_real_lagrangian(const LagrangianFrame& frame, const Mat& g) {
    const SymplecticSpace& sp = *frame.space;
    sp.require_symplectic(g);
    const int n = sp.n();
    const Mat& f = frame.f;
    Mat jf = sp.j() * f;
    // Components of g on the G_j-orthonormal basis {f_a, j f_a}.
    Mat a(n, n), off(n, n), b(n, n), e(n, n);
    for (int col = 0; col < n; ++col) {
        Vec gf = g * f.col(col);
        Vec gjf = g * jf.col(col);
        for (int row = 0; row < n; ++row) {
            a(row, col) = sp.gj(gf, f.col(row));
            off(row, col) = sp.gj(gf, jf.col(row));
            b(row, col) = sp.gj(gjf, f.col(row));
            e(row, col) = sp.gj(gjf, jf.col(row));
        }
    }
    if (off.norm() > sp.tol() * std::max(1.0, g.norm()) * 10) {
        throw NotStabilizing("lift_real_lagrangian: g does not stabilize F");
    }
    Mat s = a.inverse() * b;
    if ((s - s.transpose()).norm() > sp.tol() * std::max(1.0, s.norm()) * 100) {
        throw NonSymmetricS("lift_real_lagrangian: extracted S_g is not symmetric");
    }
    CMat arg = 0.5 * ((Mat::Identity(n, n) + (a.transpose() * a).inverse()).cast<cplx>() -
                      cplx(0.0, 1.0) * s.cast<cplx>());
    cplx lambda = std::pow(std::abs(a.determinant()), -0.5) *
                  std::exp(-0.5 * holomorphic_logdet(arg, sp.tol()));
    return MpcElement{&sp, g, lambda};
}

MpcElement lift_complex_lagrangian(const ComplexLagrangianData& data, const Mat& g) {
    const SymplecticSpace& sp = *data.space;
    sp.require_symplectic(g);
    const int m = static_cast<int>(data.d.cols());
    const int qdim = static_cast<int>(data.q.cols());
    const Mat& dmat = data.d;
    Mat jd = sp.j() * dmat;
    double scale = std::max(1.0, g.norm());

    // Coordinates of g on the blocks D, jD, Q of the orthogonal splitting.
    auto coords = [&](const Vec& v, const Mat& basis) {
        Vec out(basis.cols());
        for (int a = 0; a < basis.cols(); ++a) out(a) = sp.gj(v, basis.col(a));
        return out;
    };

    Mat a(m, m), k_block(m, m), e_q(qdim, m), b_red(qdim, qdim), n_block(m, qdim);
    for (int col = 0; col < m; ++col) {
        Vec gd = g * dmat.col(col);
        if (coords(gd, jd).norm() + coords(gd, data.q).norm() > sp.tol() * scale * 10) {
            throw NotStabilizing("lift_complex_lagrangian: g does not stabilize D");
        }
        a.col(col) = coords(gd, dmat);
        Vec gjd = g * jd.col(col);
        k_block.col(col) = coords(gjd, dmat);
        e_q.col(col) = coords(gjd, data.q);
    }
    for (int col = 0; col < qdim; ++col) {
        Vec gq = g * data.q.col(col);
        if (coords(gq, jd).norm() > sp.tol() * scale * 10) {
            throw NotStabilizing("lift_complex_lagrangian: g does not preserve D^perp");
        }
        b_red.col(col) = coords(gq, data.q);
        n_block.col(col) = coords(gq, dmat);
    }

    // Reduced map must be pseudo-unitary for jtilde' (g stabilizes F, not
    // merely D).
    const Mat& jtp = data.reduced_ps.jtilde;
    if ((b_red * jtp - jtp * b_red).norm() > sp.tol() * scale * 10) {
        throw NotStabilizing("lift_complex_lagrangian: reduced map does not commute with jtilde'");
    }

    Mat e = b_red.inverse() * e_q;           // e(g): D -> Q
    Mat estar = -(a.inverse()) * n_block;    // e(g)^*: Q -> D
    Mat omega_red = data.reduced->omega();
    if ((estar + e.transpose() * omega_red).norm() >
        sp.tol() * std::max(1.0, e.norm()) * 100) {
        throw NotStabilizing("lift_complex_lagrangian: inconsistent e / e^* blocks");
    }
    Mat s = a.inverse() * k_block + 0.5 * estar * e;
    if ((s - s.transpose()).norm() > sp.tol() * std::max(1.0, s.norm()) * 100) {
        throw NonSymmetricS("lift_complex_lagrangian: extracted s(g) is not symmetric");
    }

    // Real operators C'_b and Z'_b on the reduced space.
    const SymplecticSpace& red = *data.reduced;
    Mat c_red = 0.5 * (b_red - red.j() * b_red * red.j());
    Mat z_red = c_red.inverse() * b_red - Mat::Identity(qdim, qdim);
    Mat jprime = red.j();

    Mat re_part = 0.5 * (Mat::Identity(m, m) + (a.transpose() * a).inverse()) -
                  0.25 * estar * jprime * e - 0.25 * estar * jprime * z_red * e;
    Mat im_part = -0.5 * s - 0.25 * estar * z_red * e;
    CMat arg = re_part.cast<cplx>() + cplx(0.0, 1.0) * im_part.cast<cplx>();
    cplx delta = std::exp(0.5 * holomorphic_logdet(arg, sp.tol()));

    CMat c_minus = restrict_complex(red, c_red, data.reduced_ps.v_minus);
    cplx lambda = 1.0 / (std::sqrt(std::abs(a.determinant())) *
                         det_or_one(c_minus) * delta);
    return MpcElement{&sp, g, lambda};
}

LiftReport verify_lift(const SymplecticSpace& sp, const std::vector<Mat>& samples,
                       const std::function<cplx(const Mat&)>& f) {
    LiftReport report{0.0, 0.0};
    std::vector<cplx> values;
    values.reserve(samples.size());
    for (const Mat& g : samples) {
        cplx fg = f(g);
        values.push_back(fg);
        SiegelPair p = cz_decompose(sp, g);
        double r2 = std::abs(std::abs(fg * fg * p.c.determinant()) - 1.0);
        report.f2_residual = std::max(report.f2_residual, r2);
    }
    for (size_t i = 0; i < samples.size(); ++i) {
        for (size_t k = 0; k < samples.size(); ++k) {
            SiegelPair p1 = cz_decompose(sp, samples[i]);
            SiegelPair p2inv = cz_decompose(sp, Mat(samples[k].inverse()));
            CMat argm = CMat::Identity(sp.n(), sp.n()) - p1.z * p2inv.z.conjugate();
            cplx predicted = values[i] * values[k] *
                             std::exp(-0.5 * holomorphic_logdet(argm, sp.tol()));
            cplx actual = f(samples[i] * samples[k]);
            double r1 = std::abs(actual - predicted) / std::max(1.0, std::abs(actual));
            report.f1_residual = std::max(report.f1_residual, r1);
        }
    }
    return report;
}

Mat random_pseudo_unitary(const PseudoUnitaryStructure& ps, std::mt19937_64& rng,
                          double bound) {
    const SymplecticSpace& sp = *ps.space;
    Mat a = random_sp_algebra(sp, rng, bound);
    // Projection onto the jtilde-commutant inside sp(V, Omega).
    Mat x = 0.5 * (a - ps.jtilde * a * ps.jtilde);
    double norm = x.operatorNorm();
    if (norm > bound) x *= bound / norm;
    return x.exp();
}

Mat random_lagrangian_stabilizer(const LagrangianFrame& frame, std::mt19937_64& rng,
                                 double bound) {
    const SymplecticSpace& sp = *frame.space;
    Mat jf = sp.j() * frame.f;
    auto constraint = [&](const Mat& xi) {
        Vec out(sp.n() * sp.n());
        int idx = 0;
        for (int col = 0; col < sp.n(); ++col) {
            Vec image = xi * frame.f.col(col);
            for (int row = 0; row < sp.n(); ++row) {
                out(idx++) = sp.gj(image, jf.col(row));
            }
        }
        return out;
    };
    return random_constrained_sp(sp, constraint, rng, bound).exp();
}

Mat random_complex_lagrangian_stabilizer(const ComplexLagrangianData& data,
                                         std::mt19937_64& rng, double bound) {
    const SymplecticSpace& sp = *data.space;
    const int m = static_cast<int>(data.d.cols());
    const int qdim = static_cast<int>(data.q.cols());
    Mat jd = sp.j() * data.d;
    const Mat& jtp = data.reduced_ps.jtilde;
    auto constraint = [&](const Mat& xi) {
        // xi D inside D, and the reduced action commuting with jtilde'.
        Vec out(m * (m + qdim) + qdim * qdim);
        int idx = 0;
        for (int col = 0; col < m; ++col) {
            Vec image = xi * data.d.col(col);
            for (int row = 0; row < m; ++row) out(idx++) = sp.gj(image, jd.col(row));
            for (int row = 0; row < qdim; ++row) {
                out(idx++) = sp.gj(image, data.q.col(row));
            }
        }
        Mat xi_red(qdim, qdim);
        for (int col = 0; col < qdim; ++col) {
            Vec image = xi * data.q.col(col);
            for (int row = 0; row < qdim; ++row) {
                xi_red(row, col) = sp.gj(image, data.q.col(row));
            }
        }
        Mat comm = xi_red * jtp - jtp * xi_red;
        for (int col = 0; col < qdim; ++col) {
            for (int row = 0; row < qdim; ++row) out(idx++) = comm(row, col);
        }
        return out;
    };
    return random_constrained_sp(sp, constraint, rng, bound).exp();
}

} // namespace mpc
