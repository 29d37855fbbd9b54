#include "concord/report.hpp"

#include "concord/errors.hpp"

namespace concord {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Passed: return "passed";
        case Verdict::Obstructed: return "obstructed";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

Verdict verdict_from_string(const std::string& s) {
    if (s == "passed") return Verdict::Passed;
    if (s == "obstructed") return Verdict::Obstructed;
    if (s == "inconclusive") return Verdict::Inconclusive;
    throw invalid_input_error("unknown verdict: " + s);
}

nlohmann::json ObstructionReport::to_json() const {
    nlohmann::json j;
    j["verdict"] = to_string(verdict);
    j["reason"] = reason;
    if (!detail.empty()) j["detail"] = detail;
    if (witness) {
        j["witness"] = concord::to_string(*witness, witness_var);
        if (witness_var != 't') j["witness_var"] = std::string(1, witness_var);
    }
    if (has_family_witness) {
        auto idx_list = [](const std::vector<FamilyIndex>& v) {
            nlohmann::json a = nlohmann::json::array();
            for (const auto& i : v) a.push_back({{"k", i.k}, {"n", i.n}, {"sign", i.sign}});
            return a;
        };
        j["theta"] = idx_list(theta);
        j["theta_prime"] = idx_list(theta_prime);
    }
    return j;
}

ObstructionReport ObstructionReport::from_json(const nlohmann::json& j) {
    ObstructionReport r;
    r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
    r.reason = j.value("reason", "");
    r.detail = j.value("detail", "");
    if (j.contains("witness")) {
        const std::string var = j.value("witness_var", "t");
        if (var.size() != 1) throw invalid_input_error("report: bad witness_var");
        r.witness_var = var[0];
        r.witness = parse_poly(j.at("witness").get<std::string>(), r.witness_var);
    }
    if (j.contains("theta")) {
        r.has_family_witness = true;
        auto read = [](const nlohmann::json& a) {
            std::vector<FamilyIndex> v;
            for (const auto& e : a)
                v.push_back({e.at("k").get<long>(), e.at("n").get<int>(), e.at("sign").get<int>()});
            return v;
        };
        r.theta = read(j.at("theta"));
        r.theta_prime = read(j.at("theta_prime"));
    }
    return r;
}

} // namespace concord
