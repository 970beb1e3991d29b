#include "gammalab/families.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace gammalab {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

Series base_series(const FamilySpec& spec, int order) {
    Series f(order);
    switch (spec.family) {
        case Family::identity:
            f.at(1) = 1.0;
            break;
        case Family::koebe:
            // z/(1-z)^2: a_n = n.
            for (int n = 1; n <= order; ++n) f.at(n) = static_cast<double>(n);
            break;
        case Family::halfplane:
            // z/(1-z): a_n = 1.
            for (int n = 1; n <= order; ++n) f.at(n) = 1.0;
            break;
        case Family::gen_koebe: {
            // z/(1 - 2cos(theta) z + z^2): a_{n+1} = 2cos(theta) a_n - a_{n-1}.
            const double c2 = 2.0 * std::cos(spec.theta);
            cplx prev{0.0}, cur{1.0};
            for (int n = 1; n <= order; ++n) {
                f.at(n) = cur;
                const cplx next = c2 * cur - prev;
                prev = cur;
                cur = next;
            }
            break;
        }
        case Family::starlike_pow: {
            // z (1-z)^(-2 beta) = z exp(-2 beta log(1-z)).
            Series one_minus_z(order - 1 >= 0 ? order - 1 : 0);
            one_minus_z.at(0) = 1.0;
            if (one_minus_z.order() >= 1) one_minus_z.at(1) = -1.0;
            const Series u = exp(cplx{-2.0 * spec.beta} * log(one_minus_z));
            for (int k = 0; k <= u.order() && k + 1 <= order; ++k) f.at(k + 1) = u[k];
            break;
        }
    }
    if (order >= 1) f.at(1) = 1.0;
    return f;
}

}  // namespace

std::string family_name(Family f) {
    switch (f) {
        case Family::identity: return "identity";
        case Family::koebe: return "koebe";
        case Family::halfplane: return "halfplane";
        case Family::gen_koebe: return "genKoebe";
        case Family::starlike_pow: return "starlikePow";
    }
    return "?";
}

Family family_from_name(const std::string& name) {
    if (name == "identity") return Family::identity;
    if (name == "koebe") return Family::koebe;
    if (name == "halfplane") return Family::halfplane;
    if (name == "genKoebe") return Family::gen_koebe;
    if (name == "starlikePow") return Family::starlike_pow;
    throw std::invalid_argument("unknown family '" + name + "'");
}

std::string transform_kind_name(Transform::Kind k) {
    switch (k) {
        case Transform::Kind::rotate: return "rotate";
        case Transform::Kind::dilate: return "dilate";
        case Transform::Kind::automorph: return "automorph";
    }
    return "?";
}

Transform::Kind transform_kind_from_name(const std::string& name) {
    if (name == "rotate") return Transform::Kind::rotate;
    if (name == "dilate") return Transform::Kind::dilate;
    if (name == "automorph") return Transform::Kind::automorph;
    throw std::invalid_argument("unknown transform kind '" + name + "'");
}

std::string FamilySpec::describe() const {
    std::ostringstream os;
    os << family_name(family);
    if (family == Family::gen_koebe) os << "(theta=" << theta << ")";
    if (family == Family::starlike_pow) os << "(beta=" << beta << ")";
    for (const Transform& t : transforms) os << "+" << transform_kind_name(t.kind);
    return os.str();
}

void validate(const FamilySpec& spec, std::size_t transform_cap) {
    if (spec.family == Family::starlike_pow)
        require(spec.beta >= 0.0 && spec.beta <= 1.0, "starlikePow: beta must lie in [0,1]");
    require(std::isfinite(spec.theta), "theta must be finite");
    require(spec.transforms.size() <= transform_cap,
            "transform list exceeds cap of " + std::to_string(transform_cap));
    for (const Transform& t : spec.transforms) {
        switch (t.kind) {
            case Transform::Kind::rotate:
                require(std::isfinite(t.theta), "rotate: theta must be finite");
                break;
            case Transform::Kind::dilate:
                require(t.r > 0.0 && t.r <= 1.0, "dilate: r must lie in (0,1]");
                break;
            case Transform::Kind::automorph:
                require(std::abs(t.a) < 1.0, "automorph: |a| must be < 1");
                break;
        }
    }
}

bool is_normalized(const Series& f) {
    return f.order() >= 1 && f[0] == cplx{0.0} && f[1] == cplx{1.0};
}

int automorph_input_order(cplx a, int out_order) {
    const double m = std::abs(a);
    if (m == 0.0) return out_order;
    const double q = (1.0 + m) / (1.0 - m);
    const int in = static_cast<int>(std::ceil((out_order + 60) * q)) + 8;
    return std::max(out_order + 4, in);
}

Series realize(const FamilySpec& spec, int order) {
    require(order >= 1, "realize: order must be >= 1");
    validate(spec, std::numeric_limits<std::size_t>::max());  // cap is a corpus-config concern

    const std::size_t nt = spec.transforms.size();
    std::vector<int> out_orders(nt, order);
    int work = order;
    for (std::size_t i = nt; i-- > 0;) {
        out_orders[i] = work;
        if (spec.transforms[i].kind == Transform::Kind::automorph)
            work = automorph_input_order(spec.transforms[i].a, work);
    }

    Series f = base_series(spec, work);
    for (std::size_t i = 0; i < nt; ++i) {
        const Transform& t = spec.transforms[i];
        switch (t.kind) {
            case Transform::Kind::rotate:
                f = rotate(f, t.theta);
                break;
            case Transform::Kind::dilate:
                f = dilate(f, t.r);
                break;
            case Transform::Kind::automorph:
                f = automorph(f, t.a, out_orders[i]);
                break;
        }
    }
    Series out = truncated(f, order);
    require(is_normalized(out), "realize: output lost normalization");
    return out;
}

Series rotate(const Series& f, double theta) {
    require(is_normalized(f), "rotate: input must be normalized (f[0]=0, f[1]=1)");
    Series r(f.order());
    r.at(1) = 1.0;
    for (int n = 2; n <= f.order(); ++n)
        r.at(n) = std::polar(1.0, static_cast<double>(n - 1) * theta) * f[n];
    return r;
}

Series dilate(const Series& f, double r) {
    require(r > 0.0 && r <= 1.0, "dilate: r must lie in (0,1]");
    require(is_normalized(f), "dilate: input must be normalized (f[0]=0, f[1]=1)");
    Series g(f.order());
    g.at(1) = 1.0;
    double rn = 1.0;
    for (int n = 2; n <= f.order(); ++n) {
        rn *= r;
        g.at(n) = rn * f[n];
    }
    return g;
}

Series automorph(const Series& f, cplx a, int out_order) {
    require(std::abs(a) < 1.0, "automorph: |a| must be < 1");
    require(is_normalized(f), "automorph: input must be normalized (f[0]=0, f[1]=1)");
    require(out_order >= 1, "automorph: output order must be >= 1");
    if (a == cplx{0.0}) return truncated(f, std::min(out_order, f.order()));
    require(f.order() >= out_order + 4,
            "automorph: insufficient order, need f.order >= out_order + 4 (got " +
                std::to_string(f.order()) + " for out_order " + std::to_string(out_order) + ")");

    const int work = f.order();

    // w(z) = (z+a)/(1 + conj(a) z) as a geometric series at the working order.
    Series w(work);
    w.at(0) = a;
    const cplx nb = -std::conj(a);
    const double one_minus = 1.0 - std::norm(a);
    cplx pw{1.0};
    for (int k = 1; k <= work; ++k) {
        w.at(k) = pw * one_minus;
        pw *= nb;
    }

    // F = f(w) by Horner over all retained coefficients of f.
    Series F(work);
    F.at(0) = f[work];
    for (int k = work - 1; k >= 0; --k) {
        F = mul_to(F, w, work);
        F.at(0) += f[k];
    }

    // g = (F - F(0)) / F'(0); F[1] equals (1-|a|^2) f'(a) to truncation, and
    // dividing by it keeps the normalization bit-exact.
    const cplx c = F[1];
    require(c != cplx{0.0}, "automorph: vanishing renormalization constant");
    Series g(out_order);
    g.at(1) = 1.0;
    for (int n = 2; n <= out_order; ++n) g.at(n) = F[n] / c;
    return g;
}

Series automorph(const Series& f, cplx a) {
    if (a == cplx{0.0}) return f;
    return automorph(f, a, f.order() - 4);
}

Series sqrt_transform(const Series& f) {
    require(is_normalized(f), "sqrt_transform: input must be normalized (f[0]=0, f[1]=1)");
    const int n = f.order();
    // f(z) = z v(z) with v(0)=1; f2(z) = z sqrt(v)(z^2).
    Series v(n - 1);
    for (int k = 0; k <= n - 1; ++k) v.at(k) = f[k + 1];
    const Series s = sqrt(v);
    Series f2(2 * n);
    for (int k = 0; k <= s.order(); ++k) f2.at(2 * k + 1) = s[k];
    return f2;
}

}  // namespace gammalab
