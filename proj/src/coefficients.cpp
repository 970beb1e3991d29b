#include "gammalab/coefficients.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "gammalab/families.hpp"

namespace gammalab {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

double clamped_sqrt(double x) { return std::sqrt(std::max(x, 0.0)); }

}  // namespace

GrunskyTable::GrunskyTable(int p_max, bool odd_only, std::vector<cplx> dense, double max_asymmetry)
    : p_max_(p_max), odd_only_(odd_only), max_asymmetry_(max_asymmetry), w_(std::move(dense)) {
    require(p_max_ >= 0, "GrunskyTable: p_max must be non-negative");
    require(w_.size() == static_cast<std::size_t>(p_max_ + 1) * (p_max_ + 1),
            "GrunskyTable: dense storage size mismatch");
}

bool GrunskyTable::has(int p, int q) const {
    if (p < 0 || q < 0 || p > p_max_ || q > p_max_) return false;
    if (odd_only_ && ((p % 2 == 0 && p >= 2) || (q % 2 == 0 && q >= 2))) return false;
    return true;
}

cplx GrunskyTable::omega(int p, int q) const {
    require(has(p, q), "GrunskyTable: entry (" + std::to_string(p) + "," + std::to_string(q) +
                           ") is absent from this table");
    return w_[static_cast<std::size_t>(p) * (p_max_ + 1) + static_cast<std::size_t>(q)];
}

LogCoeffs log_coefficients(const Series& f, int n_max) {
    require(n_max >= 1, "log_coefficients: n_max must be >= 1");
    require(is_normalized(f), "log_coefficients: f must be normalized (f[0]=0, f[1]=1)");
    require(f.order() >= n_max + 1,
            "log_coefficients: gamma_" + std::to_string(n_max) + " needs f.order >= " +
                std::to_string(n_max + 1) + " (got " + std::to_string(f.order()) + ")");
    Series v(f.order() - 1);  // f/z
    for (int k = 0; k <= v.order(); ++k) v.at(k) = f[k + 1];
    const Series L = log(v);
    LogCoeffs out;
    out.n_max = n_max;
    out.g.resize(static_cast<std::size_t>(n_max));
    for (int n = 1; n <= n_max; ++n) out.g[static_cast<std::size_t>(n - 1)] = 0.5 * L[n];
    return out;
}

std::array<cplx, 4> gamma_from_taylor(cplx a2, cplx a3, cplx a4, cplx a5) {
    const cplx g1 = 0.5 * a2;
    const cplx g2 = 0.5 * (a3 - 0.5 * a2 * a2);
    const cplx g3 = 0.5 * (a4 - a2 * a3 + a2 * a2 * a2 / 3.0);
    const cplx g4 = 0.5 * (a5 - a2 * a4 - 0.5 * a3 * a3 + a2 * a2 * a3 - 0.25 * a2 * a2 * a2 * a2);
    return {g1, g2, g3, g4};
}

GrunskyTable grunsky_table(const Series& f, int p_max) {
    require(p_max >= 1, "grunsky_table: p_max must be >= 1");
    require(is_normalized(f), "grunsky_table: f must be normalized (f[0]=0, f[1]=1)");
    const int deg = 2 * p_max;
    require(f.order() >= deg + 1,
            "grunsky_table: p_max=" + std::to_string(p_max) + " requires f.order >= " +
                std::to_string(deg + 1) + " (got " + std::to_string(f.order()) + ")");

    // (f(t)-f(z))/(t-z) = sum_n a_n sum_{i+j=n-1} t^i z^j, entry (p,q) = a_{p+q+1}.
    BiSeries D(deg);
    for (int s = 0; s <= deg; ++s)
        for (int p = 0; p <= s; ++p) D.at(p, s - p) = f[s + 1];

    const BiSeries W = bi_log(D);

    std::vector<cplx> dense(static_cast<std::size_t>(p_max + 1) * (p_max + 1), cplx{0.0});
    double asym = 0.0;
    for (int p = 0; p <= p_max; ++p) {
        for (int q = 0; q <= p_max; ++q) {
            if (p == 0 && q == 0) continue;
            const cplx wpq = W.get(p, q);
            const cplx wqp = W.get(q, p);
            asym = std::max(asym, std::abs(wpq - wqp));
            dense[static_cast<std::size_t>(p) * (p_max + 1) + q] = 0.5 * (wpq + wqp);
        }
    }
    return GrunskyTable(p_max, false, std::move(dense), asym);
}

GrunskyTable odd_grunsky(const Series& f, int p_max_odd) {
    require(p_max_odd >= 1 && p_max_odd % 2 == 1, "odd_grunsky: p_max_odd must be odd and >= 1");
    require(is_normalized(f), "odd_grunsky: f must be normalized (f[0]=0, f[1]=1)");
    require(f.order() >= p_max_odd + 1,
            "odd_grunsky: p_max_odd=" + std::to_string(p_max_odd) + " requires f.order >= " +
                std::to_string(p_max_odd + 1) + " (got " + std::to_string(f.order()) + ")");
    const Series f2 = sqrt_transform(f);
    const GrunskyTable full = grunsky_table(f2, p_max_odd);
    std::vector<cplx> dense(static_cast<std::size_t>(p_max_odd + 1) * (p_max_odd + 1), cplx{0.0});
    for (int p = 0; p <= p_max_odd; ++p)
        for (int q = 0; q <= p_max_odd; ++q)
            if ((p % 2 == 1 || p == 0) && (q % 2 == 1 || q == 0) && !(p == 0 && q == 0))
                dense[static_cast<std::size_t>(p) * (p_max_odd + 1) + q] = full.omega(p, q);
    return GrunskyTable(p_max_odd, true, std::move(dense), full.max_asymmetry());
}

double ResidualReport::max_residual() const {
    double m = 0.0;
    for (const auto& [id, r] : residuals) m = std::max(m, r);
    return m;
}

ResidualReport verify_coefficient_relations(const Series& f, double tol) {
    require(is_normalized(f), "verify_coefficient_relations: f must be normalized");
    require(f.order() >= 8, "verify_coefficient_relations: needs f.order >= 8 (got " + std::to_string(f.order()) +
                                "), >= 16 recommended");
    const GrunskyTable t = odd_grunsky(f, 7);
    const cplx w11 = t.omega(1, 1), w13 = t.omega(1, 3), w15 = t.omega(1, 5), w17 = t.omega(1, 7);
    const cplx w33 = t.omega(3, 3), w35 = t.omega(3, 5);
    const cplx a2 = f[2], a3 = f[3], a4 = f[4], a5 = f[5];

    ResidualReport rep;
    rep.tol = tol;
    rep.residuals = {
        {"coeffRel.a2", std::abs(a2 - 2.0 * w11)},
        {"coeffRel.a3", std::abs(a3 - (2.0 * w13 + 3.0 * w11 * w11))},
        {"coeffRel.a4", std::abs(a4 - (2.0 * w33 + 8.0 * w11 * w13 + 10.0 / 3.0 * w11 * w11 * w11))},
        {"coeffRel.a5", std::abs(a5 - (2.0 * w35 + 8.0 * w11 * w33 + 5.0 * w13 * w13 +
                                  18.0 * w11 * w11 * w13 + 7.0 / 3.0 * w11 * w11 * w11 * w11))},
        {"coeffRel.zero1", std::abs(3.0 * w15 - 3.0 * w11 * w13 + w11 * w11 * w11 - 3.0 * w33)},
        {"coeffRel.zero2",
         std::abs(w17 - w35 - w11 * w33 - w13 * w13 + w11 * w11 * w11 * w11 / 3.0)},
    };
    rep.pass = rep.max_residual() <= tol;
    return rep;
}

ResidualReport verify_gamma_omega(const Series& f, double tol) {
    require(is_normalized(f), "verify_gamma_omega: f must be normalized");
    require(f.order() >= 8, "verify_gamma_omega: needs f.order >= 8 (got " +
                                std::to_string(f.order()) + "), >= 16 recommended");
    const GrunskyTable t = odd_grunsky(f, 7);
    const cplx w11 = t.omega(1, 1), w13 = t.omega(1, 3), w15 = t.omega(1, 5), w17 = t.omega(1, 7);
    const cplx w33 = t.omega(3, 3);
    const LogCoeffs lc = log_coefficients(f, 4);

    const cplx g2 = w13 + 0.5 * w11 * w11;
    const cplx g3 = w33 + 2.0 * w11 * w13;
    const cplx g4 = w17 + w11 * w15 + w11 * w11 * w13 + 0.5 * w13 * w13 +
                    0.25 * w11 * w11 * w11 * w11;

    ResidualReport rep;
    rep.tol = tol;
    rep.residuals = {
        {"gammaOmega.gamma2", std::abs(lc(2) - g2)},
        {"gammaOmega.gamma3", std::abs(lc(3) - g3)},
        {"gammaOmega.gamma4", std::abs(lc(4) - g4)},
    };
    rep.pass = rep.max_residual() <= tol;
    return rep;
}

QuadraticFormResult quadratic_form_slack(const GrunskyTable& t, const TestVector& x) {
    require(t.odd_only(), "quadratic_form_slack: table must be the odd-index table");
    require(!x.x.empty(), "quadratic_form_slack: test vector must have support");
    for (const auto& [p, xp] : x.x) {
        require(p >= 1 && p % 2 == 1, "quadratic_form_slack: support must be odd indices");
        require(p <= t.p_max(), "quadratic_form_slack: support index " + std::to_string(p) +
                                    " exceeds table range p_max=" + std::to_string(t.p_max()));
        (void)xp;
    }
    QuadraticFormResult r;
    for (int m = 1; m <= t.p_max(); m += 2) {
        cplx inner{0.0};
        for (const auto& [p, xp] : x.x) inner += t.omega(p, m) * xp;
        r.lhs += static_cast<double>(m) * std::norm(inner);
    }
    for (const auto& [p, xp] : x.x) r.rhs += std::norm(xp) / static_cast<double>(p);
    r.slack = r.rhs - r.lhs;
    return r;
}

std::array<double, 4> omega_bound_slacks(const GrunskyTable& odd) {
    require(odd.odd_only() && odd.p_max() >= 7, "omega_bound_slacks: needs odd table with p_max >= 7");
    const double m11 = std::abs(odd.omega(1, 1));
    const double m13 = std::abs(odd.omega(1, 3));
    const double m15 = std::abs(odd.omega(1, 5));
    const double m17 = std::abs(odd.omega(1, 7));
    const double s1 = 1.0 - m11 * m11;
    const double s2 = s1 - 3.0 * m13 * m13;
    const double s3 = s2 - 5.0 * m15 * m15;
    return {
        1.0 - m11,
        clamped_sqrt(s1 / 3.0) - m13,
        clamped_sqrt(s2 / 5.0) - m15,
        clamped_sqrt(s3 / 7.0) - m17,
    };
}

double omega33_identity_residual(const GrunskyTable& odd) {
    require(odd.odd_only() && odd.p_max() >= 5,
            "omega33_identity_residual: needs odd table with p_max >= 5");
    const cplx w11 = odd.omega(1, 1), w13 = odd.omega(1, 3), w15 = odd.omega(1, 5);
    const cplx w33 = odd.omega(3, 3);
    return std::abs(w33 - (w15 - w11 * w13 + w11 * w11 * w11 / 3.0));
}

}  // namespace gammalab
