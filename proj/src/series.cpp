#include "gammalab/series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace gammalab {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

bool Series::all_finite() const {
    for (const cplx& x : c)
        if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) return false;
    return true;
}

bool approx_equal(const Series& a, const Series& b, double tol) {
    const int n = std::max(a.order(), b.order());
    for (int k = 0; k <= n; ++k)
        if (std::abs(a[k] - b[k]) > tol) return false;
    return true;
}

Series truncated(const Series& a, int order) {
    require(order >= 0, "truncated: order must be non-negative");
    Series r(order);
    const int n = std::min(order, a.order());
    for (int k = 0; k <= n; ++k) r.c[static_cast<std::size_t>(k)] = a[k];
    return r;
}

Series operator+(const Series& a, const Series& b) {
    const int n = std::min(a.order(), b.order());
    Series r(n);
    for (int k = 0; k <= n; ++k) r.at(k) = a[k] + b[k];
    return r;
}

Series operator-(const Series& a, const Series& b) {
    const int n = std::min(a.order(), b.order());
    Series r(n);
    for (int k = 0; k <= n; ++k) r.at(k) = a[k] - b[k];
    return r;
}

Series operator*(const cplx& s, const Series& a) {
    Series r = a;
    for (cplx& x : r.c) x *= s;
    return r;
}

Series mul_to(const Series& a, const Series& b, int order) {
    require(order >= 0, "mul_to: order must be non-negative");
    Series r(order);
    const int na = std::min(order, a.order());
    for (int i = 0; i <= na; ++i) {
        const cplx ai = a[i];
        if (ai == cplx{0.0}) continue;
        const int nb = std::min(order - i, b.order());
        for (int j = 0; j <= nb; ++j) r.at(i + j) += ai * b[j];
    }
    return r;
}

Series operator*(const Series& a, const Series& b) {
    return mul_to(a, b, std::min(a.order(), b.order()));
}

Series derivative(const Series& a) {
    if (a.order() == 0) return Series(0);
    Series r(a.order() - 1);
    for (int k = 1; k <= a.order(); ++k) r.at(k - 1) = static_cast<double>(k) * a[k];
    return r;
}

Series compose(const Series& outer, const Series& inner) {
    require(inner[0] == cplx{0.0},
            "compose: inner constant term must be 0 (branch ambiguity otherwise)");
    const int n = std::min(outer.order(), inner.order());
    Series r(n);
    r.at(0) = outer[n];
    for (int k = n - 1; k >= 0; --k) {
        r = mul_to(r, inner, n);
        r.at(0) += outer[k];
    }
    return r;
}

Series log(const Series& a) {
    require(a[0] == cplx{1.0}, "log: constant term must be 1");
    const int n = a.order();
    Series L(n);
    // (k+1) L[k+1] = a'[k] - sum_{i=1..k} i L[i] a[k+1-i], with a[0] = 1.
    for (int k = 0; k < n; ++k) {
        cplx s = static_cast<double>(k + 1) * a[k + 1];
        for (int i = 1; i <= k; ++i) s -= static_cast<double>(i) * L[i] * a[k + 1 - i];
        L.at(k + 1) = s / static_cast<double>(k + 1);
    }
    return L;
}

Series exp(const Series& a) {
    require(a[0] == cplx{0.0}, "exp: constant term must be 0");
    const int n = a.order();
    Series E(n);
    E.at(0) = 1.0;
    // (k+1) E[k+1] = sum_{i=0..k} (i+1) a[i+1] E[k-i].
    for (int k = 0; k < n; ++k) {
        cplx s{0.0};
        for (int i = 0; i <= k; ++i) s += static_cast<double>(i + 1) * a[i + 1] * E[k - i];
        E.at(k + 1) = s / static_cast<double>(k + 1);
    }
    return E;
}

Series sqrt(const Series& a) {
    require(a[0] == cplx{1.0}, "sqrt: constant term must be 1");
    const int n = a.order();
    Series s(n);
    s.at(0) = 1.0;
    // From 2 s s' = a': 2(k+1) s[k+1] = (k+1) a[k+1] - 2 sum_{i=0..k-1} (i+1) s[i+1] s[k-i].
    for (int k = 0; k < n; ++k) {
        cplx acc = static_cast<double>(k + 1) * a[k + 1];
        for (int i = 0; i < k; ++i) acc -= 2.0 * static_cast<double>(i + 1) * s[i + 1] * s[k - i];
        s.at(k + 1) = acc / (2.0 * static_cast<double>(k + 1));
    }
    return s;
}

BiSeries::BiSeries(int total_degree) : deg(total_degree) {
    if (total_degree < 0) throw std::invalid_argument("BiSeries: total degree must be non-negative");
    v.assign(static_cast<std::size_t>(deg + 1) * (deg + 2) / 2, cplx{0.0});
}

namespace {

// Triangular total-degree product shared by the double and long double paths.
template <typename C>
std::vector<C> tri_mul(int deg, const std::vector<C>& a, const std::vector<C>& b) {
    std::vector<C> out(a.size(), C{0});
    for (int sa = 0; sa <= deg; ++sa) {
        for (int pa = 0; pa <= sa; ++pa) {
            const int qa = sa - pa;
            const C av = a[BiSeries::index(pa, qa)];
            if (av == C{0}) continue;
            const int rest = deg - sa;
            for (int sb = 0; sb <= rest; ++sb) {
                for (int pb = 0; pb <= sb; ++pb) {
                    const int qb = sb - pb;
                    const C bv = b[BiSeries::index(pb, qb)];
                    if (bv == C{0}) continue;
                    out[BiSeries::index(pa + pb, qa + qb)] += av * bv;
                }
            }
        }
    }
    return out;
}

}  // namespace

BiSeries bi_mul(const BiSeries& a, const BiSeries& b) {
    BiSeries r(std::min(a.deg, b.deg));
    if (a.deg == b.deg) {
        r.v = tri_mul(r.deg, a.v, b.v);
        return r;
    }
    const auto shrink = [&](const BiSeries& s) {
        BiSeries t(r.deg);
        for (int p = 0; p <= r.deg; ++p)
            for (int q = 0; p + q <= r.deg; ++q) t.at(p, q) = s.get(p, q);
        return t;
    };
    r.v = tri_mul(r.deg, shrink(a).v, shrink(b).v);
    return r;
}

BiSeries bi_log(const BiSeries& a) {
    if (a.get(0, 0) != cplx{1.0}) throw std::invalid_argument("bi_log: constant term must be 1");
    // The Mercator terms u^k/k cancel heavily; extended precision keeps the
    // summation noise well under the 1e-10 asymmetry budget.
    using lcplx = std::complex<long double>;
    std::vector<lcplx> u(a.v.size());
    for (std::size_t i = 0; i < u.size(); ++i) u[i] = a.v[i];
    u[0] = 0.0L;

    std::vector<lcplx> acc(u.size(), lcplx{0.0L});
    std::vector<lcplx> pw = u;
    for (int k = 1; k <= a.deg; ++k) {
        const long double c = (k % 2 == 1 ? 1.0L : -1.0L) / static_cast<long double>(k);
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += c * pw[i];
        if (k < a.deg) pw = tri_mul(a.deg, pw, u);
    }

    BiSeries out(a.deg);
    for (std::size_t i = 0; i < acc.size(); ++i)
        out.v[i] = cplx{static_cast<double>(acc[i].real()), static_cast<double>(acc[i].imag())};
    return out;
}

}  // namespace gammalab
