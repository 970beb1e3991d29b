#include "gammalab/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace gammalab {

using nlohmann::json;

json to_json(const Transform& t) {
    json j;
    j["kind"] = transform_kind_name(t.kind);
    switch (t.kind) {
        case Transform::Kind::rotate: j["theta"] = t.theta; break;
        case Transform::Kind::dilate: j["r"] = t.r; break;
        case Transform::Kind::automorph: j["a"] = {t.a.real(), t.a.imag()}; break;
    }
    return j;
}

Transform transform_from_json(const json& j) {
    Transform t;
    t.kind = transform_kind_from_name(j.at("kind").get<std::string>());
    switch (t.kind) {
        case Transform::Kind::rotate: t.theta = j.at("theta").get<double>(); break;
        case Transform::Kind::dilate: t.r = j.at("r").get<double>(); break;
        case Transform::Kind::automorph: {
            const auto& a = j.at("a");
            if (!a.is_array() || a.size() != 2)
                throw std::invalid_argument("transform: \"a\" must be [re, im]");
            t.a = cplx{a[0].get<double>(), a[1].get<double>()};
            break;
        }
    }
    return t;
}

json to_json(const FamilySpec& spec) {
    json j;
    j["family"] = family_name(spec.family);
    if (spec.family == Family::gen_koebe) j["theta"] = spec.theta;
    if (spec.family == Family::starlike_pow) j["beta"] = spec.beta;
    if (!spec.transforms.empty()) {
        json arr = json::array();
        for (const Transform& t : spec.transforms) arr.push_back(to_json(t));
        j["transforms"] = arr;
    }
    return j;
}

FamilySpec family_spec_from_json(const json& j) {
    FamilySpec spec;
    spec.family = family_from_name(j.at("family").get<std::string>());
    if (j.contains("theta")) spec.theta = j.at("theta").get<double>();
    if (j.contains("beta")) spec.beta = j.at("beta").get<double>();
    if (j.contains("transforms"))
        for (const auto& tj : j.at("transforms")) spec.transforms.push_back(transform_from_json(tj));
    return spec;
}

json to_json(const CorpusSpec& spec) {
    json j;
    j["seed"] = spec.seed;
    j["order"] = spec.order;
    j["transformDepthCap"] = spec.transform_depth_cap;
    j["counts"] = {{"identity", spec.count_identity},
                   {"koebe", spec.count_koebe},
                   {"halfplane", spec.count_halfplane},
                   {"transformed", spec.count_transformed}};
    j["thetaGridSize"] = spec.theta_grid_size;
    j["betaSet"] = spec.beta_set;
    j["rSet"] = spec.r_set;
    json pts = json::array();
    for (const cplx& a : spec.automorph_points) pts.push_back({a.real(), a.imag()});
    j["automorphPoints"] = pts;
    return j;
}

CorpusSpec corpus_spec_from_json(const json& j) {
    CorpusSpec spec;
    spec.seed = j.at("seed").get<std::uint64_t>();
    spec.order = j.at("order").get<int>();
    spec.transform_depth_cap = j.at("transformDepthCap").get<int>();
    const auto& counts = j.at("counts");
    spec.count_identity = counts.at("identity").get<int>();
    spec.count_koebe = counts.at("koebe").get<int>();
    spec.count_halfplane = counts.at("halfplane").get<int>();
    spec.count_transformed = counts.at("transformed").get<int>();
    spec.theta_grid_size = j.at("thetaGridSize").get<int>();
    spec.beta_set = j.at("betaSet").get<std::vector<double>>();
    spec.r_set = j.at("rSet").get<std::vector<double>>();
    spec.automorph_points.clear();
    for (const auto& pj : j.at("automorphPoints")) {
        if (!pj.is_array() || pj.size() != 2)
            throw std::invalid_argument("corpus spec: automorphPoints entries must be [re, im]");
        spec.automorph_points.emplace_back(pj[0].get<double>(), pj[1].get<double>());
    }
    return spec;
}

json to_json(const ScanRecord& rec) {
    json j;
    j["function_id"] = rec.function_id;
    j["spec"] = to_json(rec.spec);
    j["n"] = rec.n;
    j["abs_gamma_prev"] = rec.abs_gamma_prev;
    j["abs_gamma"] = rec.abs_gamma;
    j["d_n"] = rec.d_n;
    j["bound"] = rec.bound;
    j["slack"] = rec.slack;
    return j;
}

ScanRecord scan_record_from_json(const json& j) {
    ScanRecord rec;
    rec.function_id = j.at("function_id").get<std::string>();
    rec.spec = family_spec_from_json(j.at("spec"));
    rec.n = j.at("n").get<int>();
    rec.abs_gamma_prev = j.at("abs_gamma_prev").get<double>();
    rec.abs_gamma = j.at("abs_gamma").get<double>();
    rec.d_n = j.at("d_n").get<double>();
    rec.bound = j.at("bound").get<double>();
    rec.slack = j.at("slack").get<double>();
    return rec;
}

json to_json(const MaxResult& res, const std::string& objective) {
    json j;
    j["objective"] = objective;
    j["argmax"] = {res.u, res.v};
    j["value"] = res.value;
    j["gridStep"] = res.grid_step;
    j["refinementRounds"] = res.refinement_rounds;
    return j;
}

json to_json(const ChainReport& rep) {
    const auto steps = [](const std::vector<ChainStep>& chain) {
        json arr = json::array();
        for (const ChainStep& s : chain)
            arr.push_back({{"step", s.label}, {"lhs", s.lhs}, {"rhs", s.rhs}, {"slack", s.slack}});
        return arr;
    };
    json j;
    j["chain1"] = steps(rep.chain1);
    j["chain2"] = steps(rep.chain2);
    j["equality_residual"] = rep.equality_residual;
    j["min_slack"] = rep.min_slack();
    return j;
}

json to_json(const VerifyReport& rep) {
    json fns = json::array();
    for (const FunctionVerify& fv : rep.functions) {
        json recs = json::array();
        for (const VerifyRecord& r : fv.records)
            recs.push_back({{"relation_id", r.relation_id},
                            {"residual", r.residual},
                            {"tol", r.tol},
                            {"pass", r.pass}});
        fns.push_back({{"function_id", fv.function_id}, {"records", recs}});
    }
    json skipped = json::array();
    for (const SkipRecord& s : rep.skipped)
        skipped.push_back({{"function_id", s.function_id}, {"reason", s.reason}});
    json j;
    j["tol"] = rep.tol;
    j["functions"] = fns;
    j["skipped"] = skipped;
    j["summary"] = {{"max_residual", rep.max_residual},
                    {"worst_function", rep.worst_function},
                    {"worst_relation", rep.worst_relation},
                    {"all_pass", rep.all_pass}};
    return j;
}

CorpusSpec load_corpus_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("config file '" + path + "': " + e.what());
    }
    return corpus_spec_from_json(j);
}

}  // namespace gammalab
