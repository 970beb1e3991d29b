#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "gammalab/series.hpp"

namespace testutil {

using gammalab::cplx;
using gammalab::Series;

inline double u01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

inline cplx unit_disc(std::mt19937_64& rng) {
    // rejection-free: radius sqrt-uniform, angle uniform
    const double r = std::sqrt(u01(rng));
    const double t = 2.0 * std::acos(-1.0) * u01(rng);
    return {r * std::cos(t), r * std::sin(t)};
}

/// Random series with constant term 1 whose zero-constant part has l1 norm
/// <= 0.9, so it is zero-free on the closed unit disc and log/sqrt are well
/// conditioned. Coefficient moduli stay below 2.
inline Series random_one_series(std::mt19937_64& rng, int order) {
    Series a(order);
    a.at(0) = 1.0;
    const double rho = 0.3 + 0.4 * u01(rng);
    const double amp = 1.2 * u01(rng);
    double l1 = 0.0;
    for (int k = 1; k <= order; ++k) {
        a.at(k) = amp * std::pow(rho, k - 1) * unit_disc(rng);
        l1 += std::abs(a[k]);
    }
    if (l1 > 0.9) {
        const double s = 0.9 / l1;
        for (int k = 1; k <= order; ++k) a.at(k) *= s;
    }
    return a;
}

/// Same envelope but with zero constant term (admissible for exp).
inline Series random_zero_series(std::mt19937_64& rng, int order) {
    Series a = random_one_series(rng, order);
    a.at(0) = 0.0;
    return a;
}

// --- independent brute-force oracles (never call the library arithmetic) ---

/// Full polynomial product, truncated afterwards.
inline std::vector<cplx> naive_mul(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    std::vector<cplx> out(a.size() + b.size() - 1, cplx{0.0});
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

/// outer(inner(z)) by accumulating full powers of inner, truncated afterwards.
inline std::vector<cplx> naive_compose(const std::vector<cplx>& outer,
                                       const std::vector<cplx>& inner, std::size_t keep) {
    std::vector<cplx> acc(keep + 1, cplx{0.0});
    std::vector<cplx> power{cplx{1.0}};
    for (std::size_t k = 0; k < outer.size(); ++k) {
        for (std::size_t j = 0; j < power.size() && j <= keep; ++j) acc[j] += outer[k] * power[j];
        power = naive_mul(power, inner);
        if (power.size() > keep + 1) power.resize(keep + 1);
    }
    return acc;
}

inline double max_coeff_diff(const Series& a, const Series& b) {
    double m = 0.0;
    const int n = std::max(a.order(), b.order());
    for (int k = 0; k <= n; ++k) m = std::max(m, std::abs(a[k] - b[k]));
    return m;
}

}  // namespace testutil
