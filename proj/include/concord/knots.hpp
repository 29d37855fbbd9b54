#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "concord/factor.hpp"
#include "concord/laurent.hpp"
#include "concord/report.hpp"

namespace concord {

/// Seifert pairing of a genus-g surface: a square integer matrix of even size
/// 2g with det(V - V^T) = +-1. Size 0 presents the unknot.
class SeifertMatrix {
public:
    explicit SeifertMatrix(std::vector<std::vector<long long>> entries);

    std::size_t size() const { return entries_.size(); }
    long long at(std::size_t i, std::size_t j) const { return entries_[i][j]; }
    const std::vector<std::vector<long long>>& entries() const { return entries_; }

    bool operator==(const SeifertMatrix&) const = default;

private:
    std::vector<std::vector<long long>> entries_;
};

/// Knot given by algebraic data rather than a diagram: a Seifert matrix, a
/// torus-knot pair, or a sum/mirror expression over such.
struct KnotDescriptor {
    enum class Kind { Unknot, Torus, Seifert, Sum, Mirror };

    Kind kind = Kind::Unknot;
    long long p = 0, q = 0;                  // Torus
    std::optional<SeifertMatrix> seifert;    // Seifert
    std::vector<KnotDescriptor> children;    // Sum: 2, Mirror: 1

    static KnotDescriptor unknot();
    static KnotDescriptor torus(long long p, long long q);
    static KnotDescriptor from_seifert(SeifertMatrix m);
    static KnotDescriptor sum(KnotDescriptor a, KnotDescriptor b);
    static KnotDescriptor mirror(KnotDescriptor k);

    /// Schema: {"type":"torus","p":5,"q":2}, {"type":"seifert","matrix":[[..]]},
    /// {"type":"sum","left":..,"right":..}, {"type":"mirror","of":..},
    /// {"type":"unknot"}.
    static KnotDescriptor from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
};

std::string to_string(const KnotDescriptor& k);

/// Normalized Alexander polynomial: det(V - tV^T) for a Seifert matrix,
/// (t^pq - 1)(t - 1) / ((t^p - 1)(t^q - 1)) for a torus knot, product for
/// sums, conjugate for mirrors, 1 for the unknot. Always symmetric with
/// value +-1 at t = 1.
LaurentPoly alexander(const KnotDescriptor& k);

/// Rejects polynomials that cannot be Alexander polynomials of knots:
/// zero, value at 1 different from +-1, or not symmetric up to units.
void require_alexander_poly(const LaurentPoly& delta, const std::string& context);

/// Slice-type factorization test: Passed iff delta = f(t) f(1/t) up to units
/// for some integer f (then with |f(1)| = 1). Necessary condition for
/// sliceness only; the witness or the unpairable factor is reported.
ObstructionReport fox_milnor_test(const LaurentPoly& delta, long degree_limit = kDefaultDegreeLimit);

/// Same factorization test reported as the double-slice polynomial condition
/// delta = theta(t) theta(1/t) up to units. Necessary condition only.
ObstructionReport double_slice_test(const LaurentPoly& delta, long degree_limit = kDefaultDegreeLimit);

} // namespace concord
