#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "concord/family.hpp"
#include "concord/laurent.hpp"

namespace concord {

enum class Verdict { Passed, Obstructed, Inconclusive };

std::string to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

/// Outcome of an obstruction or certificate test. Obstructed and Passed
/// always carry a witness that can be re-checked by direct computation;
/// Inconclusive means the (necessary-condition) test found nothing.
struct ObstructionReport {
    Verdict verdict = Verdict::Inconclusive;
    std::string reason;    // machine-readable code, e.g. "fox_milnor.unpaired_factor"
    std::string detail;    // one human-readable sentence
    std::optional<LaurentPoly> witness;          // factor / theta / quotient / minimal polynomial
    char witness_var = 't';                      // 'x' when the witness lives in x = z + 1/z
    std::vector<FamilyIndex> theta;              // family witness, left side
    std::vector<FamilyIndex> theta_prime;        // family witness, right side
    bool has_family_witness = false;

    nlohmann::json to_json() const;
    static ObstructionReport from_json(const nlohmann::json& j);

    bool passed() const { return verdict == Verdict::Passed; }
    bool obstructed() const { return verdict == Verdict::Obstructed; }
    bool inconclusive() const { return verdict == Verdict::Inconclusive; }
};

} // namespace concord
