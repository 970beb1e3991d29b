#pragma once

#include <functional>
#include <string>
#include <vector>

#include "gammalab/series.hpp"

namespace gammalab {

/// Radicands may dip below zero by rounding dust when fed |omega| values;
/// anything above this is a genuine domain violation.
inline constexpr double kDomainDust = 1e-12;

/// Phi(u,v) = sqrt(1-u^2-3v^2)/sqrt(5) + u^3/6 on
/// Omega = { 0 <= u <= 1, 0 <= v <= sqrt((1-u^2)/3) }.
double phi(double u, double v);

/// Psi(s,t) = sqrt(1-s-3t)/sqrt(7) + t/2 + s^2/12 on
/// { 0 <= s <= 1, 0 <= t <= (1-s)/3 }.
double psi(double s, double t);

bool phi_domain_contains(double u, double v, double dust = kDomainDust);
bool psi_domain_contains(double s, double t, double dust = kDomainDust);

enum class Objective { phi, psi };

struct MaxResult {
    double u = 0.0;
    double v = 0.0;
    double value = 0.0;
    double grid_step = 0.0;
    int refinement_rounds = 0;
};

/// Dense feasible grid scan (boundary points included) followed by `rounds`
/// passes of 10x refinement in a shrinking box around the incumbent. Ties
/// within 1e-12 go to the lexicographically smallest point, so the result
/// does not depend on evaluation order.
MaxResult maximize(Objective objective, double grid_step = 1e-3, int rounds = 6);

/// Generic core used by maximize; exposed so tests can drive synthetic
/// objectives. v_max(u) describes the upper boundary of the (closed) domain.
MaxResult maximize_on(const std::function<double(double, double)>& f,
                      const std::function<double(double)>& v_max, double grid_step, int rounds);

struct ChainStep {
    std::string label;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;  // rhs - lhs
};

/// Step-by-step audit of the two inequality chains bounding |gamma_3|-|gamma_2|
/// by 1/sqrt(5) and |gamma_4|-|gamma_3| by 1/sqrt(7). Every slack must be
/// >= 0 (up to rounding) for univalent input; the equality step of the second
/// chain is reported as a residual.
struct ChainReport {
    std::vector<ChainStep> chain1;
    std::vector<ChainStep> chain2;
    double equality_residual = 0.0;

    double min_slack() const;
};

ChainReport chain_slacks(const Series& f);

}  // namespace gammalab
