#include "gammalab/families.hpp"

#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "gammalab/coefficients.hpp"
#include "helpers.hpp"

using namespace gammalab;
using testutil::max_coeff_diff;

namespace {

const double kPi = std::acos(-1.0);

FamilySpec base_spec(Family f, double theta = 0.0, double beta = 0.0) {
    FamilySpec s;
    s.family = f;
    s.theta = theta;
    s.beta = beta;
    return s;
}

}  // namespace

TEST_CASE("realize: identity is z") {
    const Series f = realize(base_spec(Family::identity), 10);
    CHECK(f[1] == cplx{1.0});
    for (int n = 2; n <= 10; ++n) CHECK(f[n] == cplx{0.0});
}

TEST_CASE("realize: koebe has a_n = n") {
    // binomial expansion of z(1-z)^(-2)
    const Series f = realize(base_spec(Family::koebe), 16);
    for (int n = 1; n <= 16; ++n) CHECK(f[n] == cplx{static_cast<double>(n)});
}

TEST_CASE("realize: halfplane map has a_n = 1") {
    const Series f = realize(base_spec(Family::halfplane), 12);
    for (int n = 1; n <= 12; ++n) CHECK(f[n] == cplx{1.0});
}

TEST_CASE("realize: genKoebe starts with a_2 = 2cos(theta)") {
    for (double theta : {0.3, 1.0, kPi / 2, 2.5}) {
        const Series f = realize(base_spec(Family::gen_koebe, theta), 8);
        CHECK(std::abs(f[2] - cplx{2.0 * std::cos(theta)}) < 1e-15);
    }
    // theta = 0 degenerates to the Koebe function
    const Series k = realize(base_spec(Family::gen_koebe, 0.0), 10);
    for (int n = 1; n <= 10; ++n) CHECK(k[n] == cplx{static_cast<double>(n)});
}

TEST_CASE("realize: genKoebe coefficients satisfy the Chebyshev recurrence") {
    const double theta = 0.7;
    const Series f = realize(base_spec(Family::gen_koebe, theta), 14);
    for (int n = 2; n <= 13; ++n)
        CHECK(std::abs(f[n + 1] - (2.0 * std::cos(theta) * f[n] - f[n - 1])) < 1e-12);
}

TEST_CASE("realize: starlikePow interpolates identity and koebe") {
    const Series s0 = realize(base_spec(Family::starlike_pow, 0.0, 0.0), 10);
    for (int n = 2; n <= 10; ++n) CHECK(std::abs(s0[n]) < 1e-15);
    const Series s1 = realize(base_spec(Family::starlike_pow, 0.0, 1.0), 10);
    for (int n = 1; n <= 10; ++n) CHECK(std::abs(s1[n] - cplx{static_cast<double>(n)}) < 1e-12);
    const Series sh = realize(base_spec(Family::starlike_pow, 0.0, 0.5), 10);
    for (int n = 1; n <= 10; ++n) CHECK(std::abs(sh[n] - cplx{1.0}) < 1e-13);
}

TEST_CASE("realize: normalization is bit-exact") {
    std::mt19937_64 rng(41);
    for (int iter = 0; iter < 10; ++iter) {
        FamilySpec s = base_spec(Family::gen_koebe, testutil::u01(rng) * kPi);
        s.transforms.push_back({Transform::Kind::rotate, testutil::u01(rng) * 2 * kPi, 1.0, {}});
        s.transforms.push_back({Transform::Kind::automorph, 0.0, 1.0, cplx{0.3, -0.2}});
        const Series f = realize(s, 12);
        CHECK(f[0] == cplx{0.0});
        CHECK(f[1] == cplx{1.0});
    }
}

TEST_CASE("realize rejects invalid parameters naming the constraint") {
    CHECK_THROWS_WITH_AS((void)realize(base_spec(Family::starlike_pow, 0.0, 1.5), 8),
                         doctest::Contains("beta"), std::invalid_argument);
    FamilySpec s = base_spec(Family::koebe);
    s.transforms.push_back({Transform::Kind::dilate, 0.0, 1.5, {}});
    CHECK_THROWS_WITH_AS((void)realize(s, 8), doctest::Contains("r must lie in (0,1]"),
                         std::invalid_argument);
    s.transforms = {{Transform::Kind::automorph, 0.0, 1.0, cplx{1.2, 0.0}}};
    CHECK_THROWS_WITH_AS((void)realize(s, 8), doctest::Contains("|a|"), std::invalid_argument);
}

TEST_CASE("rotate: theta = 0 and coefficient scaling rule") {
    const Series k = realize(base_spec(Family::koebe), 12);
    const Series same = rotate(k, 0.0);
    for (int n = 0; n <= 12; ++n) CHECK(same[n] == k[n]);

    const double theta = 0.9;
    const Series rk = rotate(k, theta);
    CHECK(std::abs(rk[2] - 2.0 * std::polar(1.0, theta)) < 1e-15);
    for (int n = 2; n <= 12; ++n)
        CHECK(std::abs(rk[n] - std::polar(1.0, (n - 1) * theta) * k[n]) < 1e-12);
}

TEST_CASE("rotate: |gamma_n| is invariant") {
    const Series f = realize(base_spec(Family::gen_koebe, 0.8), 14);
    const LogCoeffs before = log_coefficients(f, 10);
    const LogCoeffs after = log_coefficients(rotate(f, 1.234), 10);
    for (int n = 1; n <= 10; ++n) CHECK(std::abs(before.abs(n) - after.abs(n)) < 1e-12);
}

TEST_CASE("rotate rejects non-normalized input") {
    Series bad(4);
    bad.at(1) = 2.0;
    CHECK_THROWS_AS((void)rotate(bad, 0.5), std::invalid_argument);
}

TEST_CASE("dilate: r = 1 unchanged, exact scaling otherwise") {
    const Series k = realize(base_spec(Family::koebe), 10);
    const Series same = dilate(k, 1.0);
    for (int n = 0; n <= 10; ++n) CHECK(same[n] == k[n]);

    const double r = 0.75;
    const Series dk = dilate(k, r);
    for (int n = 1; n <= 10; ++n)
        CHECK(dk[n] == cplx{std::pow(r, n - 1) * static_cast<double>(n)});
}

TEST_CASE("dilate: koebe at r = 1/2 has gamma_n = 2^-n / n") {
    const Series dk = dilate(realize(base_spec(Family::koebe), 14), 0.5);
    const LogCoeffs lc = log_coefficients(dk, 12);
    for (int n = 1; n <= 12; ++n)
        CHECK(std::abs(lc(n) - cplx{std::pow(0.5, n) / n}) < 1e-14);
}

TEST_CASE("dilate rejects r outside (0,1]") {
    const Series k = realize(base_spec(Family::koebe), 6);
    CHECK_THROWS_AS((void)dilate(k, 0.0), std::invalid_argument);
    CHECK_THROWS_AS((void)dilate(k, 1.01), std::invalid_argument);
}

TEST_CASE("automorph: a = 0 leaves f unchanged") {
    const Series k = realize(base_spec(Family::koebe), 12);
    const Series g = automorph(k, cplx{0.0});
    for (int n = 0; n <= 12; ++n) CHECK(g[n] == k[n]);
}

TEST_CASE("automorph: koebe at a = 1/2 gives a_2 = 2") {
    // second-coefficient oracle: a_2(g) = (1-|a|^2) f''(a) / (2 f'(a)) - conj(a),
    // with f'(1/2) = 12 and f''(1/2) = 80 for the Koebe function
    FamilySpec s = base_spec(Family::koebe);
    s.transforms.push_back({Transform::Kind::automorph, 0.0, 1.0, cplx{0.5, 0.0}});
    const Series g = realize(s, 10);
    CHECK(std::abs(g[2] - cplx{2.0}) < 1e-12);
}

TEST_CASE("automorph matches the derivative oracle for a_2 on closed forms") {
    const auto check_a2 = [](Family fam, cplx a) {
        FamilySpec s = base_spec(fam);
        s.transforms.push_back({Transform::Kind::automorph, 0.0, 1.0, a});
        const Series g = realize(s, 8);
        cplx f1, f2;  // f'(a), f''(a)
        if (fam == Family::koebe) {
            f1 = (1.0 + a) / std::pow(1.0 - a, 3);
            f2 = (4.0 + 2.0 * a) / std::pow(1.0 - a, 4);
        } else {  // halfplane
            f1 = 1.0 / std::pow(1.0 - a, 2);
            f2 = 2.0 / std::pow(1.0 - a, 3);
        }
        const cplx expect = (1.0 - std::norm(a)) * f2 / (2.0 * f1) - std::conj(a);
        CHECK(std::abs(g[2] - expect) < 1e-12);
    };
    check_a2(Family::koebe, cplx{0.3, 0.0});
    check_a2(Family::koebe, cplx{-0.25, 0.4});
    check_a2(Family::halfplane, cplx{0.5, -0.3});
    check_a2(Family::halfplane, cplx{0.0, 0.6});
}

TEST_CASE("automorph doubling test: realize's working order is sufficient") {
    for (const cplx a : {cplx{0.55, -0.2}, cplx{0.0, 0.65}}) {
        FamilySpec s = base_spec(Family::koebe);
        s.transforms.push_back({Transform::Kind::automorph, 0.0, 1.0, a});
        const Series g = realize(s, 20);
        const int big = automorph_input_order(a, 20) + 200;
        Series base(big);
        for (int n = 1; n <= big; ++n) base.at(n) = static_cast<double>(n);
        const Series ref = automorph(base, a, 20);
        CHECK(max_coeff_diff(g, truncated(ref, 20)) < 1e-12);
    }
}

TEST_CASE("automorph rejects |a| >= 1 and insufficient order") {
    const Series k = realize(base_spec(Family::koebe), 12);
    CHECK_THROWS_AS((void)automorph(k, cplx{1.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_WITH_AS((void)automorph(k, cplx{0.5, 0.0}, 12), doctest::Contains("order"),
                         std::invalid_argument);
}

TEST_CASE("sqrt_transform: identity gives z, koebe gives z/(1-z^2)") {
    const Series id2 = sqrt_transform(realize(base_spec(Family::identity), 6));
    CHECK(id2[1] == cplx{1.0});
    for (int n = 0; n <= 12; ++n)
        if (n != 1) CHECK(id2[n] == cplx{0.0});

    const Series k2 = sqrt_transform(realize(base_spec(Family::koebe), 8));
    for (int j = 0; j <= 7; ++j) CHECK(std::abs(k2[2 * j + 1] - cplx{1.0}) < 1e-13);
    for (int n = 0; n <= 16; n += 2) CHECK(k2[n] == cplx{0.0});
}

TEST_CASE("sqrt_transform squared reproduces f(z^2)") {
    std::mt19937_64 rng(43);
    for (int iter = 0; iter < 8; ++iter) {
        FamilySpec s = base_spec(Family::gen_koebe, testutil::u01(rng) * kPi);
        const Series f = realize(s, 10);
        const Series f2 = sqrt_transform(f);
        const Series sq = f2 * f2;
        Series fz2(2 * f.order());
        for (int k = 1; k <= f.order(); ++k) fz2.at(2 * k) = f[k];
        CHECK(max_coeff_diff(sq, fz2) < 1e-12);
    }
}

TEST_CASE("starlike spot check: |gamma_n| <= 1/n for starlikePow") {
    for (double beta : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        const Series f = realize(base_spec(Family::starlike_pow, 0.0, beta), 14);
        const LogCoeffs lc = log_coefficients(f, 12);
        for (int n = 1; n <= 12; ++n) CHECK(lc.abs(n) <= 1.0 / n + 1e-10);
    }
}

TEST_CASE("validate enforces the transform cap") {
    FamilySpec s = base_spec(Family::koebe);
    s.transforms.push_back({Transform::Kind::rotate, 0.5, 1.0, {}});
    s.transforms.push_back({Transform::Kind::rotate, 0.7, 1.0, {}});
    s.transforms.push_back({Transform::Kind::rotate, 0.9, 1.0, {}});
    CHECK_THROWS_WITH_AS(validate(s, 2), doctest::Contains("cap"), std::invalid_argument);
    CHECK_NOTHROW(validate(s, 3));
}

TEST_CASE("family names round-trip") {
    for (Family f : {Family::identity, Family::koebe, Family::halfplane, Family::gen_koebe,
                     Family::starlike_pow})
        CHECK(family_from_name(family_name(f)) == f);
    CHECK_THROWS_AS((void)family_from_name("nope"), std::invalid_argument);
}
