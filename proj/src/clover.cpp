#include "concord/clover.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "concord/errors.hpp"

namespace concord {

CloverGraph::CloverGraph(std::vector<Vertex> vertices,
                         std::vector<std::pair<std::size_t, std::size_t>> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    std::vector<int> degree(vertices_.size(), 0);
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        auto [a, b] = edges_[e];
        if (a >= vertices_.size() || b >= vertices_.size())
            throw invalid_input_error("clover edge " + std::to_string(e) +
                                      " references a missing vertex");
        degree[a] += 1;
        degree[b] += 1; // loops count twice
    }
    for (std::size_t v = 0; v < vertices_.size(); ++v) {
        const int want = vertices_[v].kind == VertexKind::Leaf ? 1 : 3;
        if (degree[v] != want)
            throw invalid_input_error("clover vertex " + std::to_string(v) + " has degree " +
                                      std::to_string(degree[v]) + ", expected " +
                                      std::to_string(want));
    }
}

std::size_t CloverGraph::num_leaves() const {
    return static_cast<std::size_t>(std::count_if(vertices_.begin(), vertices_.end(),
                                                  [](const Vertex& v) {
                                                      return v.kind == VertexKind::Leaf;
                                                  }));
}

std::vector<int> CloverGraph::component_of() const {
    std::vector<std::size_t> parent(vertices_.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [a, b] : edges_) parent[find(a)] = find(b);
    std::vector<int> comp(vertices_.size(), -1);
    int next = 0;
    for (std::size_t v = 0; v < vertices_.size(); ++v) {
        std::size_t r = find(v);
        if (comp[r] < 0) comp[r] = next++;
        comp[v] = comp[r];
    }
    return comp;
}

std::size_t CloverGraph::num_components() const {
    auto comp = component_of();
    return comp.empty() ? 0 : static_cast<std::size_t>(*std::max_element(comp.begin(), comp.end())) + 1;
}

bool CloverGraph::connected() const { return num_components() == 1; }

std::vector<long> CloverGraph::beta1_per_component() const {
    const auto comp = component_of();
    const std::size_t nc = num_components();
    std::vector<long> e_count(nc, 0), v_count(nc, 0);
    for (std::size_t v = 0; v < vertices_.size(); ++v) v_count[static_cast<std::size_t>(comp[v])]++;
    for (const auto& [a, b] : edges_) e_count[static_cast<std::size_t>(comp[a])]++;
    std::vector<long> beta(nc);
    for (std::size_t c = 0; c < nc; ++c) beta[c] = e_count[c] - v_count[c] + 1;
    return beta;
}

CloverGraph CloverGraph::from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw invalid_input_error("clover: expected object with fields 'vertices' and 'edges'");
    std::vector<Vertex> vertices;
    std::size_t vi = 0;
    for (const auto& v : j.at("vertices")) {
        const std::string at = "vertices[" + std::to_string(vi++) + "]";
        if (!v.is_object() || !v.contains("kind"))
            throw invalid_input_error("clover: " + at + " must be an object with field 'kind'");
        const std::string kind = v.at("kind").get<std::string>();
        Vertex vv;
        if (kind == "trivalent") {
            vv.kind = VertexKind::Trivalent;
            if (v.contains("simple"))
                throw invalid_input_error("clover: " + at + ".simple is only valid on leaves");
        } else if (kind == "leaf") {
            vv.kind = VertexKind::Leaf;
            vv.simple = v.value("simple", true);
        } else {
            throw invalid_input_error("clover: " + at + ".kind must be 'trivalent' or 'leaf'");
        }
        vertices.push_back(vv);
    }
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::size_t ei = 0;
    for (const auto& e : j.at("edges")) {
        const std::string at = "edges[" + std::to_string(ei++) + "]";
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned())
            throw invalid_input_error("clover: " + at + " must be a pair of vertex indices");
        edges.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
    }
    return CloverGraph(std::move(vertices), std::move(edges));
}

nlohmann::json CloverGraph::to_json() const {
    nlohmann::json vs = nlohmann::json::array();
    for (const auto& v : vertices_) {
        if (v.kind == VertexKind::Trivalent)
            vs.push_back({{"kind", "trivalent"}});
        else
            vs.push_back({{"kind", "leaf"}, {"simple", v.simple}});
    }
    nlohmann::json es = nlohmann::json::array();
    for (const auto& [a, b] : edges_) es.push_back({a, b});
    return {{"vertices", vs}, {"edges", es}};
}

CloverGraph wheel_graph(int legs) {
    if (legs < 1) throw invalid_input_error("wheel_graph: need at least one leg");
    const std::size_t n = static_cast<std::size_t>(legs);
    std::vector<CloverGraph::Vertex> vs(2 * n);
    for (std::size_t i = 0; i < n; ++i) vs[i].kind = CloverGraph::VertexKind::Trivalent;
    for (std::size_t i = n; i < 2 * n; ++i) vs[i] = {CloverGraph::VertexKind::Leaf, true};
    std::vector<std::pair<std::size_t, std::size_t>> es;
    for (std::size_t i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n); // circle arcs
    for (std::size_t i = 0; i < n; ++i) es.emplace_back(i, n + i);       // legs
    return CloverGraph(std::move(vs), std::move(es));
}

CloverClass classify(const CloverGraph& g) {
    CloverClass c;
    c.beta1 = g.beta1_per_component();
    for (std::size_t v = 0; v < g.num_vertices(); ++v)
        if (g.is_leaf(v) && !g.vertices()[v].simple) c.all_leaves_simple = false;

    // forks: trivalent vertices with >= 2 incident leaf edges
    std::vector<int> leaf_edges_at(g.num_vertices(), 0);
    std::vector<int> trivalent_edges_at(g.num_vertices(), 0);
    for (const auto& [a, b] : g.edges()) {
        const bool la = g.is_leaf(a), lb = g.is_leaf(b);
        if (!la) (lb ? leaf_edges_at[a] : trivalent_edges_at[a])++;
        if (!lb && a != b) (la ? leaf_edges_at[b] : trivalent_edges_at[b])++;
        if (a == b && !la) trivalent_edges_at[a]++; // loop: one more trivalent-trivalent edge
    }
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        if (!g.is_leaf(v) && leaf_edges_at[v] >= 2) {
            c.fork_count++;
            c.fork_vertices.push_back(v);
        }
    }

    // internal trivalent vertex per component: all incident edges join
    // trivalent vertices (a loop qualifies as trivalent-trivalent)
    const auto comp = g.component_of();
    std::vector<bool> has_internal(g.num_components(), false);
    for (std::size_t v = 0; v < g.num_vertices(); ++v)
        if (!g.is_leaf(v) && leaf_edges_at[v] == 0)
            has_internal[static_cast<std::size_t>(comp[v])] = true;

    const bool all_b1 = std::all_of(c.beta1.begin(), c.beta1.end(), [](long b) { return b >= 1; });
    const bool all_b2 = std::all_of(c.beta1.begin(), c.beta1.end(), [](long b) { return b >= 2; });
    c.in_c1 = all_b1 && c.all_leaves_simple && !c.beta1.empty();
    c.in_c2 = all_b2 && c.all_leaves_simple && !c.beta1.empty();
    c.in_civ = !c.beta1.empty() &&
               std::all_of(has_internal.begin(), has_internal.end(), [](bool b) { return b; });
    c.in_c1nf = c.in_c1 && c.fork_count == 0;
    return c;
}

nlohmann::json EdgeOrientation::to_json(const CloverGraph& g) const {
    nlohmann::json a = nlohmann::json::array();
    for (std::size_t e = 0; e < from_first.size(); ++e) {
        auto [u, v] = g.edges()[e];
        if (!from_first[e]) std::swap(u, v);
        a.push_back({u, v});
    }
    return a;
}

bool orientation_satisfies_conditions(const CloverGraph& g, const EdgeOrientation& o) {
    if (o.from_first.size() != g.num_edges()) return false;
    std::vector<int> in(g.num_vertices(), 0), out(g.num_vertices(), 0);
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
        auto [a, b] = g.edges()[e];
        if (!o.from_first[e]) std::swap(a, b);
        out[a]++;
        in[b]++;
        // (O2): an edge leaving a leaf is forbidden
        if (g.is_leaf(a)) return false;
    }
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        if (g.is_leaf(v)) continue;
        if (in[v] == 0 || out[v] == 0) return false; // (O1)
    }
    return true;
}

namespace {

struct OrientSearch {
    const CloverGraph& g;
    std::vector<int> dir; // -1 undecided, 0 second->first, 1 first->second
    std::vector<int> in, out, undecided;
    std::vector<std::size_t> open_edges; // trivalent-trivalent non-loop edges, index order

    explicit OrientSearch(const CloverGraph& graph)
        : g(graph),
          dir(graph.num_edges(), -1),
          in(graph.num_vertices(), 0),
          out(graph.num_vertices(), 0),
          undecided(graph.num_vertices(), 0) {}

    void count_half_edge(std::size_t v, bool incoming, int delta) {
        (incoming ? in : out)[v] += delta;
        undecided[v] -= delta;
    }

    void set_dir(std::size_t e, int d) {
        dir[e] = d;
        auto [a, b] = g.edges()[e];
        if (d == 0) std::swap(a, b);
        count_half_edge(a, false, +1);
        count_half_edge(b, true, +1);
    }

    void unset_dir(std::size_t e) {
        auto [a, b] = g.edges()[e];
        if (dir[e] == 0) std::swap(a, b);
        count_half_edge(a, false, -1);
        count_half_edge(b, true, -1);
        dir[e] = -1;
    }

    bool vertex_ok(std::size_t v) const {
        if (g.is_leaf(v)) return true;
        if (in[v] == 0 && undecided[v] == 0) return false;
        if (out[v] == 0 && undecided[v] == 0) return false;
        return true;
    }

    bool assign_ok(std::size_t e) {
        auto [a, b] = g.edges()[e];
        return vertex_ok(a) && vertex_ok(b);
    }

    bool solve(std::size_t next) {
        if (next == open_edges.size()) return true;
        const std::size_t e = open_edges[next];
        for (int d : {1, 0}) {
            set_dir(e, d);
            if (assign_ok(e) && solve(next + 1)) return true;
            unset_dir(e);
        }
        return false;
    }
};

} // namespace

std::optional<EdgeOrientation> orient_edges(const CloverGraph& g) {
    if (g.num_vertices() == 0) throw invalid_input_error("orient_edges: empty graph");
    if (!g.connected())
        throw invalid_input_error("orient_edges: disconnected clover; orient each component separately");

    OrientSearch s(g);
    for (std::size_t v = 0; v < g.num_vertices(); ++v)
        s.undecided[v] = g.is_leaf(v) ? 1 : 3;

    // forced choices: loops (direction immaterial), leaf edges (toward leaf)
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
        const auto [a, b] = g.edges()[e];
        if (a == b) {
            s.set_dir(e, 1);
        } else if (g.is_leaf(a) && g.is_leaf(b)) {
            return std::nullopt; // (O2) unsatisfiable on a leaf-leaf edge
        } else if (g.is_leaf(b)) {
            s.set_dir(e, 1);
        } else if (g.is_leaf(a)) {
            s.set_dir(e, 0);
        } else {
            s.open_edges.push_back(e);
        }
    }
    for (std::size_t v = 0; v < g.num_vertices(); ++v)
        if (!s.vertex_ok(v)) return std::nullopt;

    if (!s.solve(0)) return std::nullopt;

    EdgeOrientation o;
    o.from_first.assign(g.num_edges(), true);
    for (std::size_t e = 0; e < g.num_edges(); ++e) o.from_first[e] = s.dir[e] == 1;
    return o;
}

LinkPartition split_link(const CloverGraph& g, const EdgeOrientation& o) {
    if (!orientation_satisfies_conditions(g, o))
        throw invalid_input_error("split_link: orientation violates (O1)/(O2)");
    LinkPartition part;
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
        part.l_prime.push_back({e, true});
        part.l_double_prime.push_back({e, false});
    }
    // (O1) guarantees the labels mix at every trivalent vertex
    for (const auto& [lp, ldp] : trivalent_part_counts(g, o))
        if (lp == 0 || ldp == 0) throw std::logic_error("split_link: partition not mixed");
    return part;
}

std::vector<std::pair<int, int>> trivalent_part_counts(const CloverGraph& g,
                                                       const EdgeOrientation& o) {
    std::vector<std::pair<int, int>> counts(g.num_vertices(), {0, 0});
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
        auto [a, b] = g.edges()[e];
        if (!o.from_first[e]) std::swap(a, b);
        counts[a].first++;  // tail label sits at the tail end: L'
        counts[b].second++; // head label: L''
    }
    std::vector<std::pair<int, int>> out;
    for (std::size_t v = 0; v < g.num_vertices(); ++v)
        if (!g.is_leaf(v)) out.push_back(counts[v]);
    return out;
}

KirbyReduction leaf_kirby_reduce(const CloverGraph& g) {
    const CloverClass c = classify(g);
    if (c.fork_count > 0)
        throw invalid_input_error("leaf_kirby_reduce: fork at vertex " +
                                  std::to_string(c.fork_vertices.front()) +
                                  "; the leaf move needs a fork-free clover");
    if (!c.in_c1) {
        if (!c.all_leaves_simple)
            throw invalid_input_error("leaf_kirby_reduce: clover has a non-simple leaf");
        throw invalid_input_error("leaf_kirby_reduce: a component has first Betti number 0");
    }
    const long e2 = 2 * static_cast<long>(g.num_edges());
    return {e2, e2 - 2 * static_cast<long>(g.num_leaves())};
}

} // namespace concord
