#include "mpc/irrep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>

namespace mpc {

namespace {

using SparseVec = std::map<std::uint64_t, double>;

double dot(const SparseVec& a, const SparseVec& b) {
    const SparseVec& small = a.size() <= b.size() ? a : b;
    const SparseVec& large = a.size() <= b.size() ? b : a;
    double out = 0.0;
    for (const auto& [key, coeff] : small) {
        auto it = large.find(key);
        if (it != large.end()) out += coeff * it->second;
    }
    return out;
}

double norm(const SparseVec& a) { return std::sqrt(dot(a, a)); }

void axpy(double s, const SparseVec& x, SparseVec& y) {
    for (const auto& [key, coeff] : x) y[key] += s * coeff;
}

void scale(double s, SparseVec& x) {
    for (auto& [key, coeff] : x) coeff *= s;
}

/// Weight of the defining-representation vector e_d of C^{n+1}.
Weight defining_weight(int n, int d) {
    Weight w = weight_zero(n);
    if (d == n) {
        for (auto& c : w.coeffs) c = Rational(-1);
    } else if (d == 0) {
        w.coeffs[0] = Rational(1);
    } else {
        w.coeffs[d] = Rational(1);
    }
    return w;
}

/// gl(n+1) generator E_ab acting on the N-fold tensor power, one tensor slot
/// at a time; keys store the slot digits base n+1.
SparseVec apply_gl(const SparseVec& v, int a, int b, int n, int boxes,
                   const std::vector<std::uint64_t>& pow) {
    SparseVec out;
    for (const auto& [key, coeff] : v) {
        for (int t = 0; t < boxes; ++t) {
            int digit = static_cast<int>(key / pow[t] % (n + 1));
            if (digit != b) continue;
            std::uint64_t moved = key + static_cast<std::uint64_t>(a - b) * pow[t];
            out[moved] += coeff;
        }
    }
    for (auto it = out.begin(); it != out.end();) {
        it = it->second == 0.0 ? out.erase(it) : std::next(it);
    }
    return out;
}

SparseVec highest_weight_vector(int n, const std::vector<long long>& m,
                                const std::vector<std::uint64_t>& pow) {
    SparseVec v;
    v[0] = 1.0;
    int slot = 0;
    long long m1 = m.empty() ? 0 : m[0];
    for (long long col = 1; col <= m1; ++col) {
        int height = 0;
        for (long long mi : m) {
            if (mi >= col) ++height;
        }
        // Tensor the column antisymmetrizer e_0 ^ ... ^ e_{height-1} onto
        // slots [slot, slot + height).
        std::vector<int> perm(height);
        std::iota(perm.begin(), perm.end(), 0);
        SparseVec wedge;
        do {
            int inversions = 0;
            for (int i = 0; i < height; ++i) {
                for (int k = i + 1; k < height; ++k) {
                    if (perm[i] > perm[k]) ++inversions;
                }
            }
            std::uint64_t key = 0;
            for (int i = 0; i < height; ++i) {
                key += static_cast<std::uint64_t>(perm[i]) * pow[slot + i];
            }
            wedge[key] = inversions % 2 == 0 ? 1.0 : -1.0;
        } while (std::next_permutation(perm.begin(), perm.end()));
        SparseVec next;
        for (const auto& [k1, c1] : v) {
            for (const auto& [k2, c2] : wedge) next[k1 + k2] += c1 * c2;
        }
        v.swap(next);
        slot += height;
    }
    scale(1.0 / norm(v), v);
    return v;
}

} // namespace

Irrep build_irrep(int n, const Weight& hw, int dim_cap) {
    if (!is_dominant(hw, Algebra::Full)) {
        throw NotDominant("build_irrep: weight is not dominant");
    }
    std::vector<long long> m(n);
    for (int i = 0; i < n; ++i) {
        if (hw.coeffs[i].denominator() != 1) {
            throw NotDominant("build_irrep: weight is not integral");
        }
        m[i] = hw.coeffs[i].numerator();
    }
    const long long expected = weyl_dim_su(hw);
    if (expected > dim_cap) {
        throw DimensionOverflow("build_irrep: dimension exceeds the cap");
    }
    const int boxes =
        static_cast<int>(std::accumulate(m.begin(), m.end(), 0LL));
    if (boxes > 0 && boxes * std::log2(n + 1.0) > 63.0) {
        throw DimensionOverflow("build_irrep: tensor keys exceed 64 bits");
    }
    std::vector<std::uint64_t> pow(boxes + 1, 1);
    for (int t = 0; t < boxes; ++t) {
        pow[t + 1] = pow[t] * static_cast<std::uint64_t>(n + 1);
    }

    std::vector<SparseVec> basis;
    std::vector<Weight> weights;
    basis.push_back(highest_weight_vector(n, m, pow));
    weights.push_back(hw);

    // Close under the lowering operators E_ab, a > b, orthonormalizing each
    // image against the already accepted vectors of the same weight.
    for (size_t s = 0; s < basis.size(); ++s) {
        for (int a = 0; a <= n; ++a) {
            for (int b = 0; b < a; ++b) {
                SparseVec cand = apply_gl(basis[s], a, b, n, boxes, pow);
                double before = norm(cand);
                if (before < 1e-12) continue;
                Weight wt = weights[s] + defining_weight(n, a) -
                            defining_weight(n, b);
                // Two projection passes keep the basis orthonormal even for
                // long lowering chains.
                for (int pass = 0; pass < 2; ++pass) {
                    for (size_t r = 0; r < basis.size(); ++r) {
                        if (!(weights[r] == wt)) continue;
                        axpy(-dot(basis[r], cand), basis[r], cand);
                    }
                }
                double after = norm(cand);
                if (after <= 1e-6 * before) continue;
                scale(1.0 / after, cand);
                basis.push_back(std::move(cand));
                weights.push_back(wt);
                if (static_cast<long long>(basis.size()) > expected) {
                    throw OracleMismatch(
                        "build_irrep: closure exceeds the Weyl dimension");
                }
            }
        }
    }
    if (static_cast<long long>(basis.size()) != expected) {
        throw OracleMismatch("build_irrep: closure misses the Weyl dimension");
    }
    const int dim = static_cast<int>(basis.size());

    Irrep rep;
    rep.n = n;
    rep.highest_weight = hw;
    rep.dim = dim;
    rep.weights = weights;
    rep.gens.assign((n + 1) * (n + 1), CMatR::Zero(dim, dim));
    const double trace_shift = static_cast<double>(boxes) / (n + 1);
    for (int a = 0; a <= n; ++a) {
        for (int b = 0; b <= n; ++b) {
            CMatR& g = rep.gens[a * (n + 1) + b];
            for (int s = 0; s < dim; ++s) {
                SparseVec img = apply_gl(basis[s], a, b, n, boxes, pow);
                Weight wt = weights[s] + defining_weight(n, a) -
                            defining_weight(n, b);
                double used2 = 0.0;
                for (int r = 0; r < dim; ++r) {
                    if (!(weights[r] == wt)) continue;
                    double c = dot(basis[r], img);
                    g(r, s) = c;
                    used2 += c * c;
                }
                double total2 = dot(img, img);
                if (total2 - used2 > 1e-10 * std::max(1.0, total2)) {
                    throw OracleMismatch(
                        "build_irrep: generator image leaves the module");
                }
            }
            if (a == b) g.diagonal().array() -= trace_shift;
        }
    }
    return rep;
}

} // namespace mpc
