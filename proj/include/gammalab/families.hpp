#pragma once

#include <string>
#include <vector>

#include "gammalab/series.hpp"

namespace gammalab {

/// Normalized univalent families with classical univalence proofs. Every
/// realizable spec stays inside class S, so the coefficient machinery's
/// inequality checks are meaningful on the whole corpus.
enum class Family { identity, koebe, halfplane, gen_koebe, starlike_pow };

std::string family_name(Family f);
Family family_from_name(const std::string& name);

struct Transform {
    enum class Kind { rotate, dilate, automorph } kind;
    double theta = 0.0;  // rotate
    double r = 1.0;      // dilate, in (0,1]
    cplx a{0.0, 0.0};    // automorph, |a| < 1
};

std::string transform_kind_name(Transform::Kind k);
Transform::Kind transform_kind_from_name(const std::string& name);

struct FamilySpec {
    Family family = Family::identity;
    double theta = 0.0;  // gen_koebe only
    double beta = 0.0;   // starlike_pow only, in [0,1]
    std::vector<Transform> transforms;

    /// Short printable form, e.g. "genKoebe(theta=0.5236)+rotate+automorph".
    std::string describe() const;
};

/// Throws std::invalid_argument naming the violated constraint.
void validate(const FamilySpec& spec, std::size_t transform_cap);

bool is_normalized(const Series& f);  // f[0] == 0 and f[1] == 1, bit-exact

/// Realize the base family in closed form and apply transforms left to right.
/// The base is expanded with enough guard terms that truncation error from
/// automorphisms stays below ~1e-12 at the requested order; see
/// automorph_guard_terms.
Series realize(const FamilySpec& spec, int order);

/// e^{-i theta} f(e^{i theta} z): a_n -> e^{i(n-1) theta} a_n.
Series rotate(const Series& f, double theta);

/// f(r z)/r for r in (0,1]: a_n -> r^{n-1} a_n.
Series dilate(const Series& f, double r);

/// Koebe transform g = (f(w) - f(a)) / ((1-|a|^2) f'(a)) with
/// w(z) = (z+a)/(1+conj(a) z). Needs f.order >= out_order + 4 when a != 0;
/// accuracy at out_order is the caller's order budget (realize handles it).
Series automorph(const Series& f, cplx a, int out_order);

/// Convenience form: out_order = f.order - 4 (f.order for a == 0).
Series automorph(const Series& f, cplx a);

/// Input order needed so automorph(f, a, out_order) gets the retained
/// coefficients right to ~1e-13. Coefficient n of the output draws on powers
/// w^k of the Moebius map up to k ~ n*(1+|a|)/(1-|a|) (the boundary rotation
/// number of w), so the requirement is multiplicative in that factor, not a
/// flat margin. Validated by doubling tests.
int automorph_input_order(cplx a, int out_order);

/// The odd square-root transform z -> sqrt(f(z^2)), order 2*f.order.
Series sqrt_transform(const Series& f);

}  // namespace gammalab
