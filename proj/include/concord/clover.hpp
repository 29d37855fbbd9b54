#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace concord {

/// Combinatorial clover: a finite multigraph whose vertices are univalent
/// (leaves) or trivalent, loops allowed at trivalent vertices (counting twice
/// toward the degree). Each leaf carries a flag telling whether its disk
/// meets the knot exactly once. Only the combinatorics of the surgery
/// calculus is modeled; embeddings and framings are not.
class CloverGraph {
public:
    enum class VertexKind { Trivalent, Leaf };

    struct Vertex {
        VertexKind kind = VertexKind::Trivalent;
        bool simple = true; // meaningful for leaves only
    };

    CloverGraph(std::vector<Vertex> vertices, std::vector<std::pair<std::size_t, std::size_t>> edges);

    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
    std::size_t num_vertices() const { return vertices_.size(); }
    std::size_t num_edges() const { return edges_.size(); }
    bool is_leaf(std::size_t v) const { return vertices_[v].kind == VertexKind::Leaf; }
    bool is_loop(std::size_t e) const { return edges_[e].first == edges_[e].second; }
    std::size_t num_leaves() const;

    /// Component index per vertex, indices dense from 0.
    std::vector<int> component_of() const;
    std::size_t num_components() const;
    bool connected() const;
    /// First Betti number E - V + 1 of each component.
    std::vector<long> beta1_per_component() const;

    /// Schema: {"vertices":[{"kind":"trivalent"},{"kind":"leaf","simple":true}],
    ///          "edges":[[0,0],[0,1]]}. "simple" defaults to true on leaves.
    static CloverGraph from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;

private:
    std::vector<Vertex> vertices_;
    std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

/// A wheel with n legs: a circle of n trivalent vertices, one simple leaf
/// hanging off each (n = 1 gives the loop-plus-leaf clover).
CloverGraph wheel_graph(int legs);

struct CloverClass {
    std::vector<long> beta1;   // per component
    bool all_leaves_simple = true;
    bool in_c1 = false;        // every component beta1 >= 1, all leaves simple
    bool in_c2 = false;        // every component beta1 >= 2, all leaves simple
    bool in_civ = false;       // every component has an internal trivalent vertex
    bool in_c1nf = false;      // in_c1 and no forks
    long fork_count = 0;
    std::vector<std::size_t> fork_vertices;
};

CloverClass classify(const CloverGraph& g);

/// Direction per edge: true means first -> second endpoint as stored; loops
/// get a traversal direction (at their vertex they always contribute one
/// incoming and one outgoing half-edge).
struct EdgeOrientation {
    std::vector<bool> from_first;

    nlohmann::json to_json(const CloverGraph& g) const;
};

/// The two conditions a splitting orientation must satisfy:
///   (O1) no trivalent vertex is a source or a sink,
///   (O2) every edge incident to a leaf points toward the leaf.
bool orientation_satisfies_conditions(const CloverGraph& g, const EdgeOrientation& o);

/// Finds an orientation satisfying (O1) and (O2), or nullopt when none exists
/// (e.g. beta1 = 0 always forces a trivalent source). Deterministic: forced
/// choices are applied first (leaf edges, loops), remaining edges are decided
/// in index order trying the stored endpoint order first. Throws on
/// disconnected input; orient components separately.
std::optional<EdgeOrientation> orient_edges(const CloverGraph& g);

/// Abstract link components after splitting: one tail and one head label per
/// edge. Tails form L', heads together with the leaf components form L''.
struct LinkPartition {
    struct Label {
        std::size_t edge;
        bool tail;

        bool operator==(const Label&) const = default;
    };
    std::vector<Label> l_prime;        // tails
    std::vector<Label> l_double_prime; // heads (leaf components included here)
};

/// Splits the 2E link components along the orientation. Rejects orientations
/// failing (O1)/(O2). At every trivalent vertex the three incident labels
/// never land in a single part.
LinkPartition split_link(const CloverGraph& g, const EdgeOrientation& o);

/// Number of incident labels in (L', L'') at each trivalent vertex, aligned
/// with the trivalent vertices in index order.
std::vector<std::pair<int, int>> trivalent_part_counts(const CloverGraph& g,
                                                       const EdgeOrientation& o);

struct KirbyReduction {
    long components_before; // 2E
    long components_after;  // 2E - 2 * (number of leaves)
};

/// Component count of the associated link before/after the leaf Kirby move at
/// every (non-fork) leaf. Requires the no-fork class; a fork is reported with
/// its vertex.
KirbyReduction leaf_kirby_reduce(const CloverGraph& g);

} // namespace concord
