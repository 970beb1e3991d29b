#pragma once

#include <array>
#include <map>

#include "gammalab/series.hpp"

namespace gammalab {

/// Logarithmic coefficients gamma_1..gamma_{ n_max }: log(f(z)/z) = 2 sum gamma_n z^n.
struct LogCoeffs {
    int n_max = 0;
    std::vector<cplx> g;  // g[n-1] = gamma_n

    cplx operator()(int n) const { return g[static_cast<std::size_t>(n - 1)]; }
    double abs(int n) const { return std::abs((*this)(n)); }
};

/// Grunsky coefficients omega_{p,q} of log((f(t)-f(z))/(t-z)), indices from 0
/// with omega_{0,0} = 0, symmetrized on construction. When odd_only is set the
/// table belongs to the square-root transform and entries with an even index
/// >= 2 are absent.
class GrunskyTable {
public:
    GrunskyTable(int p_max, bool odd_only, std::vector<cplx> dense, double max_asymmetry);

    int p_max() const { return p_max_; }
    bool odd_only() const { return odd_only_; }
    double max_asymmetry() const { return max_asymmetry_; }

    bool has(int p, int q) const;
    cplx omega(int p, int q) const;  // throws on absent entries

private:
    int p_max_;
    bool odd_only_;
    double max_asymmetry_;
    std::vector<cplx> w_;  // (p_max+1)^2 dense
};

/// Finitely supported test vector x_p (odd p) for the quadratic form.
struct TestVector {
    std::map<int, cplx> x;
};

/// gamma_n = (1/2) [z^n] log(f(z)/z), n = 1..n_max. Needs f.order >= n_max+1
/// since gamma_n depends on a_{n+1}.
LogCoeffs log_coefficients(const Series& f, int n_max);

/// Closed forms for gamma_1..gamma_4 from a_2..a_5.
std::array<cplx, 4> gamma_from_taylor(cplx a2, cplx a3, cplx a4, cplx a5);

/// Full Grunsky table of f via the bivariate log of the difference quotient
/// (f(t)-f(z))/(t-z), whose (p,q) entry is a_{p+q+1}. Needs f.order >= 2*p_max+1.
GrunskyTable grunsky_table(const Series& f, int p_max);

/// Odd-index table of sqrt(f(z^2)); p_max_odd must be odd.
GrunskyTable odd_grunsky(const Series& f, int p_max_odd);

struct ResidualReport {
    std::vector<std::pair<std::string, double>> residuals;  // relation id -> |residual|
    double tol = 0.0;
    bool pass = false;

    double max_residual() const;
};

/// The six relations expressing a_2..a_5 of f through the odd Grunsky table
/// of its square-root transform: four coefficient expressions (the a_5 one
/// carries a 5*omega_13^2 term) and two vanishing combinations.
ResidualReport verify_coefficient_relations(const Series& f, double tol);

/// gamma_2 = omega_13 + omega_11^2/2, gamma_3 = omega_33 + 2 omega_11 omega_13,
/// gamma_4 = omega_17 + omega_11 omega_15 + omega_11^2 omega_13 + omega_13^2/2
///           + omega_11^4/4, each checked against the series route.
ResidualReport verify_gamma_omega(const Series& f, double tol);

struct QuadraticFormResult {
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;  // rhs - lhs; >= 0 for univalent f up to rounding
};

/// The odd Grunsky quadratic form truncated to the table range:
/// lhs = sum_q (2q-1) |sum_p omega_{2p-1,2q-1} x_{2p-1}|^2,
/// rhs = sum_p |x_{2p-1}|^2 / (2p-1).
QuadraticFormResult quadratic_form_slack(const GrunskyTable& t, const TestVector& x);

/// Slack (rhs - lhs) of the chained bounds
///   |omega_11| <= 1,
///   |omega_13| <= sqrt((1-|omega_11|^2)/3),
///   |omega_15| <= sqrt((1-|omega_11|^2-3|omega_13|^2)/5),
///   |omega_17| <= sqrt((1-|omega_11|^2-3|omega_13|^2-5|omega_15|^2)/7).
std::array<double, 4> omega_bound_slacks(const GrunskyTable& odd);

/// |omega_33 - (omega_15 - omega_11 omega_13 + omega_11^3/3)|.
double omega33_identity_residual(const GrunskyTable& odd);

}  // namespace gammalab
