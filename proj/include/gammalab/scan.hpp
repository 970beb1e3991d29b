#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gammalab/coefficients.hpp"
#include "gammalab/families.hpp"

namespace gammalab {

/// Tolerance for the theorem guard and the corpus-wide inequality audits.
inline constexpr double kGuardTol = 1e-9;

/// |a| is kept well inside the disc in corpus configs; conditioning of the
/// automorphism degrades near the boundary.
inline constexpr double kCorpusAutomorphCap = 0.8;

struct CorpusSpec {
    std::uint64_t seed = 20250811;
    int order = 16;
    int transform_depth_cap = 2;
    int count_identity = 1;
    int count_koebe = 1;
    int count_halfplane = 1;
    int count_transformed = 38;
    int theta_grid_size = 10;  // genKoebe entries, theta_j = j*pi/(size+1)
    std::vector<double> beta_set = {0.0, 0.25, 0.5, 0.75, 1.0};  // starlikePow entries
    std::vector<double> r_set = {0.35, 0.6, 0.85, 1.0};
    std::vector<cplx> automorph_points = {
        {0.2, 0.0}, {0.0, 0.35}, {-0.4, 0.1}, {0.5, -0.3}, {-0.3, -0.55}, {0.65, 0.0}, {0.0, 0.75}};

    int total_count() const {
        return count_identity + count_koebe + count_halfplane + count_transformed +
               theta_grid_size + static_cast<int>(beta_set.size());
    }
};

void validate(const CorpusSpec& spec);

CorpusSpec default_corpus_spec(int order = 16);

/// Deterministic corpus: fixed parameter grids first, then seeded
/// pseudo-random transformed entries. Same spec (and seed) gives the same list.
std::vector<FamilySpec> build_corpus(const CorpusSpec& spec);

struct ScanRecord {
    std::string function_id;
    FamilySpec spec;
    int n = 0;
    double abs_gamma_prev = 0.0;
    double abs_gamma = 0.0;
    double d_n = 0.0;    // |gamma_n| - |gamma_{n-1}|
    double bound = 0.0;  // 1/sqrt(2n-1)
    double slack = 0.0;  // bound - d_n
};

struct SkipRecord {
    std::string function_id;
    std::string reason;
};

struct ScanResult {
    std::vector<ScanRecord> records;  // ordered by corpus index, then n
    std::vector<SkipRecord> skipped;
    double max_d3 = -1.0;  // observed maxima over the corpus (d_n can be negative)
    double max_d4 = -1.0;
    bool guard_pass = true;  // d3 <= 1/sqrt(5)+tol and d4 <= 1/sqrt(7)+tol everywhere
    std::map<int, double> min_slack_by_n;
};

/// One record per (function, n), n = 2..n_max. The n = 3,4 columns carry the
/// proved bounds (enforced via guard_pass); n >= 5 columns are exploratory
/// and only aggregate min slack. Requires order >= 2*n_max + 8.
ScanResult scan(const std::vector<FamilySpec>& corpus, int n_max, int order);

/// Fixed header `function_id,family,n,abs_gamma_prev,abs_gamma,d_n,bound,slack`;
/// numbers in shortest round-trip decimal form.
std::string report_csv(const std::vector<ScanRecord>& records);

/// JSON array of records; skipped entries appear in the array with a reason.
std::string report_json(const ScanResult& result);

struct VerifyRecord {
    std::string relation_id;
    double residual = 0.0;
    double tol = 0.0;
    bool pass = false;
};

struct FunctionVerify {
    std::string function_id;
    std::vector<VerifyRecord> records;
};

struct VerifyReport {
    double tol = 0.0;
    std::vector<FunctionVerify> functions;
    std::vector<SkipRecord> skipped;
    double max_residual = 0.0;
    std::string worst_function;
    std::string worst_relation;
    bool all_pass = true;
};

/// Seeded test vectors supported on {1,3,5,7} with entries in the unit square.
std::vector<TestVector> random_test_vectors(std::uint64_t seed, int count);

/// Runs every identity and inequality audit over the corpus: the six
/// coefficient relations, the three gamma-omega identities, the four chained
/// omega bounds, the omega_33 relation, and the quadratic form over seeded
/// test vectors. Inequalities report max(0, -slack) as their residual.
VerifyReport verify_corpus(const std::vector<FamilySpec>& corpus, int order, double tol,
                           std::uint64_t seed, int vectors_per_function = 100);

}  // namespace gammalab
