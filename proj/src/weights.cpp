#include "mpc/weights.hpp"

#include <functional>
#include <numeric>

namespace mpc {

namespace {

Rational sum_coeffs(const Weight& w) {
    return std::accumulate(w.coeffs.begin(), w.coeffs.end(), Rational(0));
}

long long to_integer(const Rational& r, const char* what) {
    if (r.denominator() != 1) throw Error(std::string(what) + ": not an integer");
    return r.numerator();
}

// Standard U(n) highest weight (diagonal coordinates) of a K-weight in
// eps-coordinates: w_a = b_{a+1} - b_1 for a < n and w_n = -b_1.
std::vector<long long> standard_un_weight(const Weight& k_weight) {
    const int n = k_weight.n();
    std::vector<long long> w(n);
    long long b1 = to_integer(k_weight.coeffs[0], "k-weight");
    for (int a = 0; a + 1 < n; ++a) {
        w[a] = to_integer(k_weight.coeffs[a + 1], "k-weight") - b1;
    }
    w[n - 1] = -b1;
    return w;
}

void gt_recurse(const std::vector<long long>& row,
                std::vector<long long>& partial_sums,
                std::map<std::vector<long long>, long long>& out) {
    const int k = static_cast<int>(row.size());
    long long row_sum = std::accumulate(row.begin(), row.end(), 0LL);
    partial_sums[k - 1] = row_sum;
    if (k == 1) {
        // Diagonal coordinates of the weight are consecutive row-sum
        // differences; convert to eps-coordinates.
        const int n = static_cast<int>(partial_sums.size());
        std::vector<long long> mu(n);
        for (int a = 0; a < n; ++a) {
            mu[a] = partial_sums[a] - (a == 0 ? 0 : partial_sums[a - 1]);
        }
        std::vector<long long> eps(n);
        eps[0] = -mu[n - 1];
        for (int a = 0; a + 1 < n; ++a) eps[a + 1] = mu[a] - mu[n - 1];
        out[eps] += 1;
        return;
    }
    std::vector<long long> next(k - 1);
    std::function<void(int)> fill = [&](int pos) {
        if (pos == k - 1) {
            gt_recurse(next, partial_sums, out);
            return;
        }
        for (long long v = row[pos]; v >= row[pos + 1]; --v) {
            next[pos] = v;
            fill(pos + 1);
        }
    };
    fill(0);
}

} // namespace

Weight weight_zero(int n) { return Weight{std::vector<Rational>(n, Rational(0))}; }

Weight make_weight(std::vector<Rational> coeffs) { return Weight{std::move(coeffs)}; }

Weight make_weight_int(const std::vector<long long>& coeffs) {
    std::vector<Rational> r(coeffs.begin(), coeffs.end());
    return Weight{std::move(r)};
}

Weight operator+(const Weight& a, const Weight& b) {
    if (a.n() != b.n()) throw DimensionMismatch("weight addition: rank mismatch");
    Weight out = a;
    for (int i = 0; i < a.n(); ++i) out.coeffs[i] += b.coeffs[i];
    return out;
}

Weight operator-(const Weight& a, const Weight& b) {
    if (a.n() != b.n()) throw DimensionMismatch("weight subtraction: rank mismatch");
    Weight out = a;
    for (int i = 0; i < a.n(); ++i) out.coeffs[i] -= b.coeffs[i];
    return out;
}

Weight operator*(const Rational& s, const Weight& a) {
    Weight out = a;
    for (auto& c : out.coeffs) c *= s;
    return out;
}

Weight rho2(int n) {
    std::vector<Rational> c(n);
    for (int i = 0; i < n; ++i) c[i] = Rational(2 * (n - i));
    return Weight{std::move(c)};
}

Weight rho2_k(int n) {
    std::vector<Rational> c(n);
    c[0] = Rational(n - 1);
    for (int i = 1; i < n; ++i) c[i] = Rational(2 * (n - i));
    return Weight{std::move(c)};
}

Rational pairing(const Weight& a, const Weight& b) {
    if (a.n() != b.n()) throw DimensionMismatch("pairing: rank mismatch");
    Rational dot(0);
    for (int i = 0; i < a.n(); ++i) dot += a.coeffs[i] * b.coeffs[i];
    Rational cross = sum_coeffs(a) * sum_coeffs(b) / Rational(a.n() + 1);
    return Rational(-2) * (dot - cross);
}

bool is_dominant(const Weight& w, Algebra which) {
    const int n = w.n();
    int first = which == Algebra::Full ? 0 : 1;
    for (int i = first; i + 1 < n; ++i) {
        if (w.coeffs[i] < w.coeffs[i + 1]) return false;
    }
    if (n > first && w.coeffs[n - 1] < Rational(0)) return false;
    return true;
}

Rational casimir_constant(const Weight& hw, Algebra which) {
    if (!is_dominant(hw, which)) {
        throw NotDominant("casimir_constant: weight is not dominant");
    }
    Weight two_rho = which == Algebra::Full ? rho2(hw.n()) : rho2_k(hw.n());
    return pairing(hw, two_rho + hw);
}

long long weyl_dim_su(const Weight& hw) {
    const int n = hw.n();
    if (!is_dominant(hw, Algebra::Full)) {
        throw NotDominant("weyl_dim_su: weight is not dominant");
    }
    std::vector<long long> l(n + 1);
    for (int i = 0; i < n; ++i) {
        l[i] = to_integer(hw.coeffs[i], "weyl_dim_su") + n - i;
    }
    l[n] = 0;
    long long num = 1, den = 1;
    for (int i = 0; i <= n; ++i) {
        for (int k = i + 1; k <= n; ++k) {
            num *= l[i] - l[k];
            den *= k - i;
        }
    }
    return num / den;
}

long long weyl_dim_k(const Weight& k_weight) {
    const int n = k_weight.n();
    std::vector<long long> w = standard_un_weight(k_weight);
    long long num = 1, den = 1;
    for (int i = 0; i < n; ++i) {
        for (int k = i + 1; k < n; ++k) {
            num *= w[i] - w[k] + k - i;
            den *= k - i;
        }
    }
    return num / den;
}

std::vector<BranchEntry> branch_to_k(int n, const Weight& hw) {
    if (!is_dominant(hw, Algebra::Full)) {
        throw NotDominant("branch_to_k: weight is not dominant");
    }
    std::vector<long long> m(n);
    for (int i = 0; i < n; ++i) m[i] = to_integer(hw.coeffs[i], "branch_to_k");
    long long total = std::accumulate(m.begin(), m.end(), 0LL);

    std::vector<BranchEntry> out;
    for (long long kt = 0; kt <= m[n - 1]; ++kt) {
        // Choose k_2, ..., k_n subject to m_{j-1} >= k_j + kt >= m_j.
        std::vector<long long> k(n, 0);
        std::function<void(int)> choose = [&](int j) {
            if (j == n) {
                long long tail = std::accumulate(k.begin() + 1, k.end(), 0LL);
                k[0] = total - tail - (n + 1) * kt;
                std::vector<long long> coeffs(k.begin(), k.end());
                Weight kw = make_weight_int(coeffs);
                out.push_back(BranchEntry{kw, weyl_dim_k(kw)});
                return;
            }
            for (long long v = m[j] - kt; v + kt <= m[j - 1]; ++v) {
                k[j] = v;
                choose(j + 1);
            }
        };
        if (n == 1) {
            k[0] = total - 2 * kt;
            Weight kw = make_weight_int({k[0]});
            out.push_back(BranchEntry{kw, 1});
        } else {
            choose(1);
        }
    }
    return out;
}

Weight slcn_ktype(int n, int l, int k) {
    if (l < 0) throw DimensionOutOfRange("slcn_ktype: negative degree");
    std::vector<Rational> c(n, Rational(l));
    c[0] = Rational(2LL * l - k);
    return Weight{std::move(c)};
}

std::map<std::vector<long long>, long long> k_weight_multiset(const Weight& k_weight) {
    std::vector<long long> top = standard_un_weight(k_weight);
    std::map<std::vector<long long>, long long> out;
    std::vector<long long> partial(top.size(), 0);
    gt_recurse(top, partial, out);
    return out;
}

} // namespace mpc
