#include "gammalab/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "gammalab/coefficients.hpp"

namespace gammalab {

namespace {

constexpr double kTieEps = 1e-12;

const double kInvSqrt5 = 1.0 / std::sqrt(5.0);
const double kInvSqrt7 = 1.0 / std::sqrt(7.0);

double clamped_sqrt(double x) { return std::sqrt(std::max(x, 0.0)); }

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

struct Incumbent {
    double value = -std::numeric_limits<double>::infinity();
    double u = 0.0, v = 0.0;

    void consider(double val, double pu, double pv) {
        if (val > value + kTieEps) {
            value = val;
            u = pu;
            v = pv;
        } else if (val > value - kTieEps && (pu < u || (pu == u && pv < v))) {
            value = val;
            u = pu;
            v = pv;
        }
    }
};

}  // namespace

bool phi_domain_contains(double u, double v, double dust) {
    return u >= -dust && u <= 1.0 + dust && v >= -dust && 1.0 - u * u - 3.0 * v * v >= -dust;
}

bool psi_domain_contains(double s, double t, double dust) {
    return s >= -dust && s <= 1.0 + dust && t >= -dust && 1.0 - s - 3.0 * t >= -dust;
}

double phi(double u, double v) {
    require(phi_domain_contains(u, v), "phi: point outside the domain Omega");
    return kInvSqrt5 * clamped_sqrt(1.0 - u * u - 3.0 * v * v) + u * u * u / 6.0;
}

double psi(double s, double t) {
    require(psi_domain_contains(s, t), "psi: point outside the domain");
    return kInvSqrt7 * clamped_sqrt(1.0 - s - 3.0 * t) + 0.5 * t + s * s / 12.0;
}

MaxResult maximize_on(const std::function<double(double, double)>& f,
                      const std::function<double(double)>& v_max, double grid_step, int rounds) {
    require(grid_step > 0.0 && grid_step <= 0.1, "maximize: grid step must lie in (0, 0.1]");
    require(rounds >= 1, "maximize: rounds must be >= 1");

    Incumbent best;
    const auto scan_box = [&](double ulo, double uhi, double vlo, double vhi, double step) {
        ulo = std::max(ulo, 0.0);
        uhi = std::min(uhi, 1.0);
        if (ulo > uhi) return;
        const int nu = static_cast<int>(std::ceil((uhi - ulo) / step));
        for (int i = 0; i <= nu; ++i) {
            const double u = (i == nu) ? uhi : ulo + i * step;
            const double edge = v_max(u);
            const double lo = std::max(vlo, 0.0);
            const double hi = std::min(vhi, edge);
            if (lo > hi) continue;
            const int nv = static_cast<int>(std::ceil((hi - lo) / step));
            for (int j = 0; j <= nv; ++j) {
                const double v = (j == nv) ? hi : lo + j * step;
                best.consider(f(u, v), u, v);
            }
            if (edge > hi) best.consider(f(u, edge), u, edge);  // boundary point
        }
    };

    const double v_bound = 1.0;  // both domains sit inside v <= 1
    scan_box(0.0, 1.0, 0.0, v_bound, grid_step);
    double step = grid_step;
    for (int r = 0; r < rounds; ++r) {
        const double half = step;
        step /= 10.0;
        scan_box(best.u - half, best.u + half, best.v - half, best.v + half, step);
    }

    MaxResult out;
    out.u = best.u;
    out.v = best.v;
    out.value = best.value;
    out.grid_step = grid_step;
    out.refinement_rounds = rounds;
    return out;
}

MaxResult maximize(Objective objective, double grid_step, int rounds) {
    if (objective == Objective::phi)
        return maximize_on([](double u, double v) { return phi(u, v); },
                           [](double u) { return clamped_sqrt((1.0 - u * u) / 3.0); }, grid_step,
                           rounds);
    return maximize_on([](double s, double t) { return psi(s, t); },
                       [](double s) { return std::max(0.0, (1.0 - s) / 3.0); }, grid_step, rounds);
}

double ChainReport::min_slack() const {
    double m = std::numeric_limits<double>::infinity();
    for (const ChainStep& s : chain1) m = std::min(m, s.slack);
    for (const ChainStep& s : chain2) m = std::min(m, s.slack);
    return m;
}

ChainReport chain_slacks(const Series& f) {
    require(f.order() >= 16, "chain_slacks: needs f.order >= 16 (got " +
                                 std::to_string(f.order()) + ")");
    const GrunskyTable t = odd_grunsky(f, 7);
    const LogCoeffs lc = log_coefficients(f, 4);
    const cplx w11 = t.omega(1, 1), w13 = t.omega(1, 3), w15 = t.omega(1, 5), w17 = t.omega(1, 7);
    const double m11 = std::abs(w11), m13 = std::abs(w13);

    ChainReport rep;
    const auto push = [](std::vector<ChainStep>& chain, std::string label, double lhs, double rhs) {
        chain.push_back({std::move(label), lhs, rhs, rhs - lhs});
    };

    // |gamma_3|-|gamma_2| <= |w15 - w11^3/6| <= |w15| + |w11|^3/6
    //                     <= Phi(|w11|,|w13|) <= 1/sqrt(5)
    const double c1_l0 = lc.abs(3) - lc.abs(2);
    const double c1_r1 = std::abs(w15 - w11 * w11 * w11 / 6.0);
    const double c1_r2 = std::abs(w15) + m11 * m11 * m11 / 6.0;
    const double c1_r3 = phi(m11, m13);  // feasible for univalent f up to dust
    push(rep.chain1, "gamma_diff <= |w15 - w11^3/6|", c1_l0, c1_r1);
    push(rep.chain1, "|w15 - w11^3/6| <= |w15| + |w11|^3/6", c1_r1, c1_r2);
    push(rep.chain1, "|w15| + |w11|^3/6 <= Phi(|w11|,|w13|)", c1_r2, c1_r3);
    push(rep.chain1, "Phi(|w11|,|w13|) <= 1/sqrt(5)", c1_r3, kInvSqrt5);

    // |gamma_4|-|gamma_3| <= |gamma_4 - w11 gamma_3|
    //   = |w17 + w13^2/2 - w11^4/12|  (identity, reported as residual)
    //   <= |w17| + |w13|^2/2 + |w11|^4/12 <= Psi(|w11|^2,|w13|^2) <= 1/sqrt(7)
    const double c2_l0 = lc.abs(4) - lc.abs(3);
    const double c2_r1 = std::abs(lc(4) - w11 * lc(3));
    const double omega_form = std::abs(w17 + 0.5 * w13 * w13 - w11 * w11 * w11 * w11 / 12.0);
    const double c2_r2 = std::abs(w17) + 0.5 * m13 * m13 + m11 * m11 * m11 * m11 / 12.0;
    const double c2_r3 = psi(m11 * m11, m13 * m13);
    push(rep.chain2, "gamma_diff <= |gamma_4 - w11 gamma_3|", c2_l0, c2_r1);
    push(rep.chain2, "|w17 + w13^2/2 - w11^4/12| <= |w17| + |w13|^2/2 + |w11|^4/12", omega_form,
         c2_r2);
    push(rep.chain2, "|w17| + |w13|^2/2 + |w11|^4/12 <= Psi(|w11|^2,|w13|^2)", c2_r2, c2_r3);
    push(rep.chain2, "Psi(|w11|^2,|w13|^2) <= 1/sqrt(7)", c2_r3, kInvSqrt7);
    rep.equality_residual = std::abs(c2_r1 - omega_form);
    return rep;
}

}  // namespace gammalab
