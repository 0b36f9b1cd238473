#include "mpc/dirac_cpn.hpp"

#include <Eigen/SVD>
#include <unsupported/Eigen/KroneckerProduct>

#include <cmath>
#include <limits>

namespace mpc {

namespace {

long long rational_int(const Rational& r, const char* what) {
    if (r.denominator() != 1) throw Error(std::string(what) + ": not an integer");
    return r.numerator();
}

/// Matrix of z_b d/d z_a on the degree-l monomial block.
CMatR monomial_transport(const FockTrunc& fock, int l, int a, int b) {
    const int bd = fock.block_dim(l);
    const int off = fock.offset(l);
    CMatR m = CMatR::Zero(bd, bd);
    for (int i = 0; i < bd; ++i) {
        std::vector<int> alpha = fock.exponent(off + i);
        if (alpha[a] == 0) continue;
        double coeff = alpha[a];
        alpha[a] -= 1;
        alpha[b] += 1;
        int target = fock.index_of(alpha);
        m(target - off, i) += coeff;
    }
    return m;
}

} // namespace

Weight spinor_highest_weight(const SpinorBlockSpec& spec) {
    const int n = spec.n;
    if (n == 1) {
        long long m = 2LL * spec.r - spec.k;
        if (m < 0) throw NotDominant("spinor_highest_weight: 2r < k");
        return make_weight_int({m});
    }
    std::vector<long long> c(n, spec.r);
    c[0] = 2LL * spec.r + spec.b - spec.k;
    c[n - 1] = spec.r - spec.b;
    if (c[0] < c[1] || c[n - 1] < 0) {
        throw NotDominant("spinor_highest_weight: parameters out of range");
    }
    return make_weight_int(c);
}

std::vector<SpinorBlockSpec> enumerate_specs(int n, int k, int r_max) {
    if (n < 1 || k < 0 || r_max < 0) {
        throw DimensionOutOfRange("enumerate_specs: bad parameters");
    }
    std::vector<SpinorBlockSpec> out;
    for (int r = 0; r <= r_max; ++r) {
        if (n == 1) {
            if (2 * r >= k) out.push_back({n, k, r, std::max(0, k - r)});
            continue;
        }
        for (int b = 0; b <= r; ++b) {
            if (r + b >= k) out.push_back({n, k, r, b});
        }
    }
    return out;
}

long long hom_dimension(int n, const Weight& lambda, int k, int l) {
    if (lambda.n() != n) throw DimensionMismatch("hom_dimension: rank mismatch");
    if (!is_dominant(lambda, Algebra::Full)) {
        throw NotDominant("hom_dimension: weight is not dominant");
    }
    if (l < 0) return 0;
    std::vector<long long> m(n);
    for (int i = 0; i < n; ++i) m[i] = rational_int(lambda.coeffs[i], "hom_dimension");
    if (n == 1) {
        // Multiplicity of the torus weight 2l - k among m, m - 2, ..., -m.
        long long t = m[0] + k - 2LL * l;
        return t % 2 == 0 && t >= 0 && t <= 2 * m[0] ? 1 : 0;
    }
    long long triple = m[0] + m[n - 1] + k;
    if (triple % 3 != 0) return 0;
    long long r = triple / 3;
    if (r < m[n - 1] || r > m[0]) return 0;
    for (int i = 1; i + 1 < n; ++i) {
        if (m[i] != r) return 0;
    }
    return l >= r - m[n - 1] && l <= r ? 1 : 0;
}

CMatR solve_intertwiner(const FockTrunc& fock, const Irrep& rep, int k, int l) {
    const int n = rep.n;
    if (fock.space().n() != n) {
        throw DimensionMismatch("solve_intertwiner: rank mismatch");
    }
    if (l > fock.max_degree()) {
        throw DimensionOutOfRange("solve_intertwiner: level above truncation");
    }
    const int bd = fock.block_dim(l);
    const int vd = rep.dim;
    const long long expected = hom_dimension(n, rep.highest_weight, k, l);

    // Stack vec(L . pi(qtilde(e_ab)) - rho'(e_ab) . L) = 0 over all a, b of
    // gl(n); vec is column-major, so L A -> (A^T (x) I) and R L -> (I (x) R).
    const int unknowns = bd * vd;
    Eigen::MatrixXcd system(n * n * unknowns, unknowns);
    Eigen::MatrixXcd id_bd = Eigen::MatrixXcd::Identity(bd, bd);
    Eigen::MatrixXcd id_vd = Eigen::MatrixXcd::Identity(vd, vd);
    int row = 0;
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            CMatR pi_x = rep.generator(a + 1, b + 1);
            if (a == b) pi_x -= rep.generator(0, 0);
            CMatR rho_x = -monomial_transport(fock, l, a, b);
            if (a == b) {
                rho_x.diagonal().array() += static_cast<double>(k - l);
            }
            system.block(row, 0, unknowns, unknowns) =
                Eigen::kroneckerProduct(pi_x.transpose(), id_bd) -
                Eigen::kroneckerProduct(id_vd, rho_x);
            row += unknowns;
        }
    }
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(system, Eigen::ComputeThinV);
    const auto& sigma = svd.singularValues();
    double smax = sigma.size() > 0 ? sigma(0) : 0.0;
    int null_dim = 0;
    for (int i = 0; i < sigma.size(); ++i) {
        if (sigma(i) <= 1e-8 * std::max(smax, 1.0)) ++null_dim;
    }
    if (null_dim != expected) {
        throw OracleMismatch("solve_intertwiner: nullspace dimension " +
                             std::to_string(null_dim) + " but expected " +
                             std::to_string(expected));
    }
    if (expected == 0) return CMatR::Zero(bd, vd);

    Eigen::VectorXcd flat = svd.matrixV().col(unknowns - 1);
    CMatR out = Eigen::Map<CMatR>(flat.data(), bd, vd);
    int imax = 0, jmax = 0;
    double best = -1.0;
    for (int j = 0; j < vd; ++j) {
        for (int i = 0; i < bd; ++i) {
            if (std::abs(out(i, j)) > best) {
                best = std::abs(out(i, j));
                imax = i;
                jmax = j;
            }
        }
    }
    out *= std::conj(out(imax, jmax)) / std::abs(out(imax, jmax));
    out /= out.norm();
    return out;
}

DiracModel build_dirac_model(const SymplecticSpace& sp,
                             const SpinorBlockSpec& spec, int dim_cap) {
    const int n = spec.n;
    if (sp.n() != n) throw DimensionMismatch("build_dirac_model: rank mismatch");
    DiracModel model;
    model.spec = spec;
    model.lambda = spinor_highest_weight(spec);
    model.hbar = sp.hbar();

    Irrep rep = build_irrep(n, model.lambda, dim_cap);
    model.vdim = rep.dim;
    FockTrunc fock(sp, spec.r + 1);
    for (int l = spec.b; l <= spec.r; ++l) {
        model.levels.push_back(l);
        model.intertwiners.push_back(solve_intertwiner(fock, rep, spec.k, l));
    }
    const int nl = static_cast<int>(model.levels.size());
    model.d_prime = Eigen::MatrixXcd::Zero(nl, nl);
    model.d_double_prime = Eigen::MatrixXcd::Zero(nl, nl);
    model.offblock_residual = 0.0;

    std::vector<CMat> cs, as;
    for (int s = 0; s < n; ++s) {
        Vec e = Vec::Zero(sp.dim());
        e(s) = 1.0;
        cs.push_back(creation(fock, e).matrix);
        as.push_back(annihilation(fock, e).matrix);
    }
    const cplx two_i(0.0, 2.0);
    for (int i = 0; i < nl; ++i) {
        const int l = model.levels[i];
        const CMatR& L = model.intertwiners[i];
        // D' L_l, landing in degree l + 1.
        CMatR up = CMatR::Zero(fock.block_dim(l + 1), rep.dim);
        for (int s = 0; s < n; ++s) {
            up += two_i *
                  cs[s].block(fock.offset(l + 1), fock.offset(l),
                              fock.block_dim(l + 1), fock.block_dim(l)) *
                  L * rep.generator(s + 1, 0);
        }
        if (i + 1 < nl) {
            const CMatR& target = model.intertwiners[i + 1];
            cplx u = target.conjugate().cwiseProduct(up).sum();
            model.d_prime(i + 1, i) = u;
            up -= u * target;
        }
        model.offblock_residual = std::max(model.offblock_residual, up.norm());
        // D'' L_l, landing in degree l - 1 when l > 0.
        if (l > 0) {
            CMatR down = CMatR::Zero(fock.block_dim(l - 1), rep.dim);
            for (int s = 0; s < n; ++s) {
                down += -two_i *
                        as[s].block(fock.offset(l - 1), fock.offset(l),
                                    fock.block_dim(l - 1), fock.block_dim(l)) *
                        L * rep.generator(0, s + 1);
            }
            if (i > 0) {
                const CMatR& target = model.intertwiners[i - 1];
                cplx v = target.conjugate().cwiseProduct(down).sum();
                model.d_double_prime(i - 1, i) = v;
                down -= v * target;
            }
            model.offblock_residual =
                std::max(model.offblock_residual, down.norm());
        }
    }
    return model;
}

Eigen::MatrixXcd dirac_full(const DiracModel& model) {
    return model.d_prime + model.d_double_prime;
}

Eigen::MatrixXcd dirac_j(const DiracModel& model) {
    const cplx i(0.0, 1.0);
    return -i * model.d_prime + i * model.d_double_prime;
}

double closed_form_p(int n, const Weight& lambda, int k, int l, double hbar) {
    std::vector<Rational> beta(n, Rational(l));
    beta[0] = Rational(4LL * l + n + 1, 2);
    std::vector<Rational> gamma = beta;
    gamma[0] -= Rational(2LL * k + n + 1, 4);
    Rational c = casimir_constant(lambda, Algebra::Full) +
                 casimir_constant(make_weight(beta), Algebra::SubalgebraK) -
                 Rational(4) * casimir_constant(make_weight(gamma),
                                                Algebra::SubalgebraK);
    return boost::rational_cast<double>(c) / hbar;
}

std::vector<LevelSpectrum> p_operator_spectrum(const DiracModel& model) {
    Eigen::MatrixXcd p = 2.0 * (model.d_prime * model.d_double_prime -
                                model.d_double_prime * model.d_prime);
    std::vector<LevelSpectrum> out;
    for (size_t i = 0; i < model.levels.size(); ++i) {
        const int l = model.levels[i];
        double closed = closed_form_p(model.spec.n, model.lambda, model.spec.k,
                                      l, model.hbar);
        double value = p(i, i).real();
        Eigen::VectorXcd col = p.col(i);
        col(i) = 0.0;
        double stray = std::max(col.norm(), std::abs(p(i, i).imag()));
        double residual = (std::abs(value - closed) + stray) /
                          std::max(1.0, std::abs(closed));
        out.push_back(LevelSpectrum{l, value, closed, residual});
    }
    return out;
}

namespace {

int svd_kernel(const Eigen::MatrixXcd& m, double threshold, double& gap) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    const auto& sigma = svd.singularValues();
    double smax = sigma.size() > 0 ? sigma(0) : 0.0;
    if (smax == 0.0) return static_cast<int>(m.rows());
    double cut = threshold * smax;
    int kernel = 0;
    for (int i = 0; i < sigma.size(); ++i) {
        if (sigma(i) <= cut) {
            ++kernel;
            if (sigma(i) > cut / 10.0) {
                throw RankAmbiguous("kernel_dims: singular value near the cut");
            }
        } else if (sigma(i) < cut * 10.0) {
            throw RankAmbiguous("kernel_dims: singular value near the cut");
        } else {
            gap = std::min(gap, sigma(i) / cut);
        }
    }
    return kernel;
}

} // namespace

KernelDims kernel_dims(const DiracModel& model, double threshold) {
    KernelDims out;
    out.gap = std::numeric_limits<double>::infinity();
    out.d_prime = svd_kernel(model.d_prime, threshold, out.gap);
    out.d_double_prime = svd_kernel(model.d_double_prime, threshold, out.gap);
    out.d = svd_kernel(dirac_full(model), threshold, out.gap);
    return out;
}

int kernel_of_d_recursion(const DiracModel& model, double tol) {
    const int nl = static_cast<int>(model.levels.size());
    Eigen::MatrixXcd d = dirac_full(model);
    double scale = std::max(1.0, d.norm());
    int count = 0;
    for (int start = 0; start < std::min(nl, 2); ++start) {
        // Row i of D x = 0 reads u_{i-1} x_{i-1} + v_{i+1} x_{i+1} = 0, so a
        // solution is determined by one starting value per parity chain.
        Eigen::VectorXcd x = Eigen::VectorXcd::Zero(nl);
        x(start) = 1.0;
        bool ok = true;
        for (int i = start + 1; i + 1 < nl; i += 2) {
            cplx num = model.d_prime(i, i - 1) * x(i - 1);
            cplx v = model.d_double_prime(i, i + 1);
            if (std::abs(v) <= tol * scale) {
                if (std::abs(num) <= tol * scale * x.norm()) {
                    x(i + 1) = 0.0;
                } else {
                    ok = false;
                    break;
                }
            } else {
                x(i + 1) = -num / v;
            }
        }
        if (ok && (d * x).norm() <= tol * scale * x.norm() * 100) ++count;
    }
    return count;
}

} // namespace mpc
