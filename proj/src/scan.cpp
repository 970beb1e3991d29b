#include "gammalab/scan.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <future>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "gammalab/json_io.hpp"

namespace gammalab {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

// std::mt19937_64 is fully pinned by the standard; the distributions are not,
// so raw bits are mapped to doubles explicitly to keep output reproducible.
double u01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::size_t pick(std::mt19937_64& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

std::string function_id(std::size_t index, const FamilySpec& spec) {
    std::ostringstream os;
    os.fill('0');
    os.width(3);
    os << index;
    os << "-" << spec.describe();
    return os.str();
}

std::string shortest(double x) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn) {
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const unsigned workers = std::min({hw, 8u, static_cast<unsigned>(count == 0 ? 1 : count)});
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::future<void>> futs;
    futs.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
        futs.push_back(std::async(std::launch::async, [&fn, w, workers, count] {
            for (std::size_t i = w; i < count; i += workers) fn(i);
        }));
    for (auto& f : futs) f.get();
}

}  // namespace

void validate(const CorpusSpec& spec) {
    require(spec.order >= 1, "corpus spec: order must be >= 1");
    require(spec.transform_depth_cap >= 0, "corpus spec: transformDepthCap must be >= 0");
    require(spec.count_identity >= 0 && spec.count_koebe >= 0 && spec.count_halfplane >= 0 &&
                spec.count_transformed >= 0 && spec.theta_grid_size >= 0,
            "corpus spec: counts must be non-negative");
    for (double b : spec.beta_set)
        require(b >= 0.0 && b <= 1.0, "corpus spec: betaSet entries must lie in [0,1]");
    for (double r : spec.r_set)
        require(r > 0.0 && r <= 1.0, "corpus spec: rSet entries must lie in (0,1]");
    for (const cplx& a : spec.automorph_points)
        require(std::abs(a) <= kCorpusAutomorphCap,
                "corpus spec: automorphPoints must satisfy |a| <= 0.8");
    if (spec.count_transformed > 0 && spec.transform_depth_cap > 0) {
        require(!spec.r_set.empty(), "corpus spec: rSet must be non-empty for transformed entries");
        require(!spec.automorph_points.empty(),
                "corpus spec: automorphPoints must be non-empty for transformed entries");
    }
}

CorpusSpec default_corpus_spec(int order) {
    CorpusSpec spec;
    spec.order = order;
    return spec;
}

std::vector<FamilySpec> build_corpus(const CorpusSpec& spec) {
    validate(spec);
    std::vector<FamilySpec> out;
    out.reserve(static_cast<std::size_t>(spec.total_count()));

    for (int i = 0; i < spec.count_identity; ++i) out.push_back({Family::identity, 0.0, 0.0, {}});
    for (int i = 0; i < spec.count_koebe; ++i) out.push_back({Family::koebe, 0.0, 0.0, {}});
    for (int i = 0; i < spec.count_halfplane; ++i) out.push_back({Family::halfplane, 0.0, 0.0, {}});
    const double pi = std::acos(-1.0);
    for (int j = 1; j <= spec.theta_grid_size; ++j) {
        FamilySpec s;
        s.family = Family::gen_koebe;
        s.theta = static_cast<double>(j) * pi / (spec.theta_grid_size + 1);
        out.push_back(s);
    }
    for (double beta : spec.beta_set) {
        FamilySpec s;
        s.family = Family::starlike_pow;
        s.beta = beta;
        out.push_back(s);
    }

    std::mt19937_64 rng(spec.seed);
    for (int i = 0; i < spec.count_transformed; ++i) {
        FamilySpec s;
        switch (pick(rng, 4)) {
            case 0: s.family = Family::koebe; break;
            case 1: s.family = Family::halfplane; break;
            case 2:
                s.family = Family::gen_koebe;
                s.theta = u01(rng) * pi;
                break;
            default:
                s.family = Family::starlike_pow;
                s.beta = spec.beta_set.empty() ? 0.5 : spec.beta_set[pick(rng, spec.beta_set.size())];
                break;
        }
        const int depth =
            spec.transform_depth_cap == 0 ? 0 : 1 + static_cast<int>(pick(rng, spec.transform_depth_cap));
        bool has_automorph = false;
        for (int d = 0; d < depth; ++d) {
            Transform t;
            std::size_t kind = pick(rng, 3);
            // a chain of two disc automorphisms is a single automorphism at
            // another point (up to rotation), so one per entry covers the orbit
            if (kind == 2 && has_automorph) kind = 0;
            switch (kind) {
                case 0:
                    t.kind = Transform::Kind::rotate;
                    t.theta = u01(rng) * 2.0 * pi;
                    break;
                case 1:
                    t.kind = Transform::Kind::dilate;
                    t.r = spec.r_set[pick(rng, spec.r_set.size())];
                    break;
                default:
                    t.kind = Transform::Kind::automorph;
                    t.a = spec.automorph_points[pick(rng, spec.automorph_points.size())];
                    has_automorph = true;
                    break;
            }
            s.transforms.push_back(t);
        }
        out.push_back(s);
    }

    for (const FamilySpec& s : out) validate(s, static_cast<std::size_t>(spec.transform_depth_cap));
    return out;
}

ScanResult scan(const std::vector<FamilySpec>& corpus, int n_max, int order) {
    require(n_max >= 2, "scan: n_max must be >= 2");
    require(order >= 2 * n_max + 8, "scan: order must be >= 2*n_max + 8 (got order " +
                                        std::to_string(order) + " for n_max " +
                                        std::to_string(n_max) + ")");

    struct Entry {
        std::vector<ScanRecord> records;
        std::string skip_reason;
    };
    std::vector<Entry> entries(corpus.size());

    parallel_for(corpus.size(), [&](std::size_t i) {
        Entry& e = entries[i];
        const std::string id = function_id(i, corpus[i]);
        try {
            const Series f = realize(corpus[i], order);
            const LogCoeffs lc = log_coefficients(f, n_max);
            for (int n = 2; n <= n_max; ++n) {
                ScanRecord rec;
                rec.function_id = id;
                rec.spec = corpus[i];
                rec.n = n;
                rec.abs_gamma_prev = lc.abs(n - 1);
                rec.abs_gamma = lc.abs(n);
                rec.d_n = rec.abs_gamma - rec.abs_gamma_prev;
                rec.bound = 1.0 / std::sqrt(2.0 * n - 1.0);
                rec.slack = rec.bound - rec.d_n;
                e.records.push_back(rec);
            }
        } catch (const std::exception& ex) {
            e.records.clear();
            e.skip_reason = ex.what();
        }
    });

    ScanResult result;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        Entry& e = entries[i];
        if (!e.skip_reason.empty()) {
            result.skipped.push_back({function_id(i, corpus[i]), e.skip_reason});
            continue;
        }
        for (ScanRecord& rec : e.records) {
            if (rec.n == 3) result.max_d3 = std::max(result.max_d3, rec.d_n);
            if (rec.n == 4) result.max_d4 = std::max(result.max_d4, rec.d_n);
            auto [it, inserted] = result.min_slack_by_n.try_emplace(rec.n, rec.slack);
            if (!inserted) it->second = std::min(it->second, rec.slack);
            result.records.push_back(std::move(rec));
        }
    }
    result.guard_pass = result.max_d3 <= 1.0 / std::sqrt(5.0) + kGuardTol &&
                        result.max_d4 <= 1.0 / std::sqrt(7.0) + kGuardTol;
    return result;
}

std::string report_csv(const std::vector<ScanRecord>& records) {
    std::string out = "function_id,family,n,abs_gamma_prev,abs_gamma,d_n,bound,slack\n";
    for (const ScanRecord& r : records) {
        out += r.function_id;
        out += ',';
        out += family_name(r.spec.family);
        out += ',';
        out += std::to_string(r.n);
        out += ',';
        out += shortest(r.abs_gamma_prev);
        out += ',';
        out += shortest(r.abs_gamma);
        out += ',';
        out += shortest(r.d_n);
        out += ',';
        out += shortest(r.bound);
        out += ',';
        out += shortest(r.slack);
        out += '\n';
    }
    return out;
}

std::string report_json(const ScanResult& result) {
    nlohmann::json arr = nlohmann::json::array();
    for (const ScanRecord& r : result.records) arr.push_back(to_json(r));
    for (const SkipRecord& s : result.skipped)
        arr.push_back({{"function_id", s.function_id}, {"skipped", true}, {"reason", s.reason}});
    return arr.dump(2) + "\n";
}

std::vector<TestVector> random_test_vectors(std::uint64_t seed, int count) {
    require(count >= 1, "random_test_vectors: count must be >= 1");
    std::mt19937_64 rng(seed);
    std::vector<TestVector> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        TestVector v;
        for (int p : {1, 3, 5, 7})
            v.x[p] = cplx{2.0 * u01(rng) - 1.0, 2.0 * u01(rng) - 1.0};
        bool all_zero = true;
        for (const auto& [p, xp] : v.x) all_zero = all_zero && xp == cplx{0.0};
        if (all_zero) v.x[1] = 1.0;
        out.push_back(std::move(v));
    }
    return out;
}

VerifyReport verify_corpus(const std::vector<FamilySpec>& corpus, int order, double tol,
                           std::uint64_t seed, int vectors_per_function) {
    require(order >= 16, "verify_corpus: order must be >= 16");
    require(tol > 0.0, "verify_corpus: tol must be positive");
    const std::vector<TestVector> vectors = random_test_vectors(seed, vectors_per_function);

    struct Entry {
        FunctionVerify fv;
        std::string skip_reason;
    };
    std::vector<Entry> entries(corpus.size());

    parallel_for(corpus.size(), [&](std::size_t i) {
        Entry& e = entries[i];
        e.fv.function_id = function_id(i, corpus[i]);
        try {
            const Series f = realize(corpus[i], order);
            auto add = [&](const std::string& id, double residual) {
                e.fv.records.push_back({id, residual, tol, residual <= tol});
            };

            for (const auto& [id, r] : verify_coefficient_relations(f, tol).residuals) add(id, r);
            for (const auto& [id, r] : verify_gamma_omega(f, tol).residuals) add(id, r);

            const GrunskyTable odd = odd_grunsky(f, 7);
            const auto bounds = omega_bound_slacks(odd);
            const char* bound_ids[4] = {"omegaBound.omega11", "omegaBound.omega13", "omegaBound.omega15",
                                        "omegaBound.omega17"};
            for (int k = 0; k < 4; ++k) add(bound_ids[k], std::max(0.0, -bounds[k]));
            add("omegaRel.omega33", omega33_identity_residual(odd));

            double worst = 0.0;
            for (const TestVector& x : vectors)
                worst = std::max(worst, -quadratic_form_slack(odd, x).slack);
            add("grunsky.quadraticForm", std::max(0.0, worst));
        } catch (const std::exception& ex) {
            e.fv.records.clear();
            e.skip_reason = ex.what();
        }
    });

    VerifyReport rep;
    rep.tol = tol;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        Entry& e = entries[i];
        if (!e.skip_reason.empty()) {
            rep.skipped.push_back({e.fv.function_id, e.skip_reason});
            continue;
        }
        for (const VerifyRecord& r : e.fv.records) {
            if (r.residual > rep.max_residual) {
                rep.max_residual = r.residual;
                rep.worst_function = e.fv.function_id;
                rep.worst_relation = r.relation_id;
            }
            rep.all_pass = rep.all_pass && r.pass;
        }
        rep.functions.push_back(std::move(e.fv));
    }
    return rep;
}

}  // namespace gammalab
