#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

namespace gammalab {

using cplx = std::complex<double>;

/// Truncated complex power series. c[k] multiplies z^k; all arithmetic is
/// exact modulo z^(order+1). The truncation order travels with the value and
/// binary operations truncate to the minimum order of their operands.
struct Series {
    std::vector<cplx> c;  // size order()+1

    Series() : c{cplx{0.0}} {}
    explicit Series(int order) : c(static_cast<std::size_t>(order) + 1, cplx{0.0}) {}
    Series(std::initializer_list<cplx> coeffs) : c(coeffs) {}
    explicit Series(std::vector<cplx> coeffs) : c(std::move(coeffs)) {}

    int order() const { return static_cast<int>(c.size()) - 1; }

    // Reads past the truncation order yield zero.
    cplx operator[](int k) const {
        return (k >= 0 && k < static_cast<int>(c.size())) ? c[static_cast<std::size_t>(k)] : cplx{0.0};
    }
    cplx& at(int k) { return c[static_cast<std::size_t>(k)]; }

    bool all_finite() const;
};

bool approx_equal(const Series& a, const Series& b, double tol);

Series truncated(const Series& a, int order);

Series operator+(const Series& a, const Series& b);
Series operator-(const Series& a, const Series& b);
Series operator*(const Series& a, const Series& b);  // Cauchy product at min order
Series operator*(const cplx& s, const Series& a);

/// Cauchy product with an explicit truncation order; operands are read as if
/// zero-padded. Needed where a fixed working order must be carried through a
/// whole computation (composition, automorphisms).
Series mul_to(const Series& a, const Series& b, int order);

Series derivative(const Series& a);

/// outer(inner(z)) truncated to min(outer.order, inner.order), by Horner
/// nesting. Requires inner[0] == 0.
Series compose(const Series& outer, const Series& inner);

/// log(a) with a[0] == 1; the normalization pins the principal branch.
/// Solved from L'*a = a' coefficient by coefficient.
Series log(const Series& a);

/// exp(a) with a[0] == 0, from E' = a'*E.
Series exp(const Series& a);

/// sqrt(a) with a[0] == 1, from 2*s*s' = a'.
Series sqrt(const Series& a);

/// Bivariate series truncated by total degree: entries (p,q) with p+q <= deg.
struct BiSeries {
    int deg;
    std::vector<cplx> v;  // triangular storage, diagonal-major

    explicit BiSeries(int total_degree);

    static std::size_t index(int p, int q) {
        const int s = p + q;
        return static_cast<std::size_t>(s) * (s + 1) / 2 + static_cast<std::size_t>(q);
    }
    cplx get(int p, int q) const {
        return (p >= 0 && q >= 0 && p + q <= deg) ? v[index(p, q)] : cplx{0.0};
    }
    cplx& at(int p, int q) { return v[index(p, q)]; }
};

BiSeries bi_mul(const BiSeries& a, const BiSeries& b);  // truncates to min(deg)

/// log of a bivariate series with constant term 1. The zero-constant part is
/// nilpotent to truncation, so the Mercator sum terminates after deg terms.
BiSeries bi_log(const BiSeries& a);

}  // namespace gammalab
