#include "mpc/fock.hpp"

#include <cmath>
#include <numeric>

namespace mpc {

namespace {

void enumerate_monomials(int n, int degree, std::vector<int>& current,
                         std::vector<std::vector<int>>& out) {
    if (static_cast<int>(current.size()) == n - 1) {
        current.push_back(degree);
        out.push_back(current);
        current.pop_back();
        return;
    }
    for (int e = degree; e >= 0; --e) {
        current.push_back(e);
        enumerate_monomials(n, degree - e, current, out);
        current.pop_back();
    }
}

} // namespace

FockTrunc::FockTrunc(const SymplecticSpace& sp, int max_degree)
    : space_(&sp), q_(max_degree) {
    if (max_degree < 0) throw DimensionOutOfRange("FockTrunc: negative degree");
    offsets_.push_back(0);
    for (int l = 0; l <= q_; ++l) {
        std::vector<int> current;
        enumerate_monomials(sp.n(), l, current, monomials_);
        offsets_.push_back(static_cast<int>(monomials_.size()));
    }
    for (int i = 0; i < dim(); ++i) lookup_[monomials_[i]] = i;
}

int FockTrunc::degree(int i) const {
    return std::accumulate(monomials_[i].begin(), monomials_[i].end(), 0);
}

int FockTrunc::index_of(const std::vector<int>& alpha) const {
    auto it = lookup_.find(alpha);
    return it == lookup_.end() ? -1 : it->second;
}

double FockTrunc::monomial_norm2(int i) const {
    double out = 1.0;
    int total = 0;
    for (int e : monomials_[i]) {
        for (int k = 2; k <= e; ++k) out *= k;
        total += e;
    }
    return out * std::pow(2.0 * space_->hbar(), total);
}

FockOperator creation(const FockTrunc& fock, const Vec& v) {
    const SymplecticSpace& sp = fock.space();
    CVec vc = sp.to_complex(v);
    CMat m = CMat::Zero(fock.dim(), fock.dim());
    for (int i = 0; i < fock.dim(); ++i) {
        std::vector<int> alpha = fock.exponent(i);
        for (int a = 0; a < sp.n(); ++a) {
            if (vc(a) == cplx(0.0, 0.0)) continue;
            alpha[a] += 1;
            int target = fock.index_of(alpha);
            alpha[a] -= 1;
            if (target >= 0) {
                m(target, i) += std::conj(vc(a)) / (2.0 * sp.hbar());
            }
        }
    }
    return FockOperator{std::move(m), +1};
}

FockOperator annihilation(const FockTrunc& fock, const Vec& v) {
    const SymplecticSpace& sp = fock.space();
    CVec vc = sp.to_complex(v);
    CMat m = CMat::Zero(fock.dim(), fock.dim());
    for (int i = 0; i < fock.dim(); ++i) {
        std::vector<int> alpha = fock.exponent(i);
        for (int a = 0; a < sp.n(); ++a) {
            if (alpha[a] == 0 || vc(a) == cplx(0.0, 0.0)) continue;
            alpha[a] -= 1;
            int target = fock.index_of(alpha);
            double coeff = alpha[a] + 1;
            alpha[a] += 1;
            m(target, i) += vc(a) * coeff;
        }
    }
    return FockOperator{std::move(m), -1};
}

FockOperator clifford(const FockTrunc& fock, const Vec& v) {
    FockOperator c = creation(fock, v);
    FockOperator a = annihilation(fock, v);
    return FockOperator{c.matrix - a.matrix, FockOperator::kUnconstrained};
}

FockOperator nu_embed(const FockTrunc& fock, const Mat& a) {
    const SymplecticSpace& sp = fock.space();
    const int d = sp.dim();
    Mat omega_a = sp.omega() * a;
    if ((omega_a - omega_a.transpose()).norm() > sp.tol() * std::max(1.0, a.norm())) {
        throw NotInSp("nu_embed: omega * A is not symmetric");
    }
    // Spanning elements S_{rs} x = Omega(e_r, x) e_s + Omega(e_s, x) e_r
    // for r <= s; solve A = sum t_{rs} S_{rs} as a least-squares system.
    std::vector<std::pair<int, int>> pairs;
    for (int r = 0; r < d; ++r) {
        for (int s = r; s < d; ++s) pairs.emplace_back(r, s);
    }
    Mat system(d * d, pairs.size());
    for (size_t k = 0; k < pairs.size(); ++k) {
        auto [r, s] = pairs[k];
        Mat basis = Mat::Zero(d, d);
        basis.row(s) += sp.omega().row(r);
        basis.row(r) += sp.omega().row(s);
        system.col(k) = Eigen::Map<const Vec>(basis.data(), d * d);
    }
    Vec rhs = Eigen::Map<const Vec>(a.data(), d * d);
    Vec t = system.colPivHouseholderQr().solve(rhs);
    if ((system * t - rhs).norm() > sp.tol() * std::max(1.0, rhs.norm()) * 10) {
        throw NotInSp("nu_embed: A is outside the span of sp(V, Omega)");
    }
    std::vector<FockOperator> cls;
    cls.reserve(d);
    for (int i = 0; i < d; ++i) {
        Vec e = Vec::Zero(d);
        e(i) = 1.0;
        cls.push_back(clifford(fock, e));
    }
    CMat m = CMat::Zero(fock.dim(), fock.dim());
    cplx factor(0.0, -0.5 * sp.hbar());
    for (size_t k = 0; k < pairs.size(); ++k) {
        if (t(k) == 0.0) continue;
        auto [r, s] = pairs[k];
        m += factor * t(k) *
             (cls[r].matrix * cls[s].matrix + cls[s].matrix * cls[r].matrix);
    }
    return FockOperator{std::move(m), FockOperator::kUnconstrained};
}

FockOperator muc_action(const FockTrunc& fock, const MpcElement& x) {
    const SymplecticSpace& sp = fock.space();
    if ((x.g * sp.j() - sp.j() * x.g).norm() > sp.tol() * std::max(1.0, x.g.norm())) {
        throw NotUnitary("muc_action: g does not commute with j");
    }
    CMat kinv = sp.complex_of_linear(Mat(x.g.inverse()));
    CMat m = CMat::Zero(fock.dim(), fock.dim());
    const int n = sp.n();
    for (int i = 0; i < fock.dim(); ++i) {
        // Expand prod_a ((kinv z)_a)^{alpha_a} over the monomials of the
        // same degree.
        std::map<std::vector<int>, cplx> poly;
        poly[std::vector<int>(n, 0)] = x.lambda;
        const std::vector<int>& alpha = fock.exponent(i);
        for (int a = 0; a < n; ++a) {
            for (int rep = 0; rep < alpha[a]; ++rep) {
                std::map<std::vector<int>, cplx> next;
                for (const auto& [mono, coeff] : poly) {
                    for (int b = 0; b < n; ++b) {
                        if (kinv(a, b) == cplx(0.0, 0.0)) continue;
                        std::vector<int> grown = mono;
                        grown[b] += 1;
                        next[grown] += coeff * kinv(a, b);
                    }
                }
                poly.swap(next);
            }
        }
        for (const auto& [mono, coeff] : poly) {
            int target = fock.index_of(mono);
            if (target >= 0) m(target, i) += coeff;
        }
    }
    return FockOperator{std::move(m), 0};
}

cplx eval_coherent(const SymplecticSpace& sp, const CVec& v, const CVec& z) {
    cplx pairing = z.cwiseProduct(v.conjugate()).sum();
    return std::exp(pairing / (2.0 * sp.hbar()));
}

} // namespace mpc
