#include "simint/graph.hpp"

#include <algorithm>
#include <set>

namespace simint {

Graph Graph::build(const std::vector<std::string>& vertex_ids,
                   const std::vector<std::pair<std::string, std::string>>& edge_pairs) {
    Graph g;
    g.ids_ = vertex_ids;
    for (Vertex i = 0; i < g.ids_.size(); ++i) {
        if (!g.index_.emplace(g.ids_[i], i).second)
            throw ValidationError("duplicate vertex id: " + g.ids_[i]);
    }
    g.adj_.resize(g.ids_.size());
    std::set<std::pair<Vertex, Vertex>> seen;
    for (const auto& [a, b] : edge_pairs) {
        auto ia = g.index_.find(a);
        auto ib = g.index_.find(b);
        if (ia == g.index_.end()) throw ValidationError("edge endpoint not a vertex: " + a);
        if (ib == g.index_.end()) throw ValidationError("edge endpoint not a vertex: " + b);
        if (ia->second == ib->second) throw ValidationError("self-loop at vertex: " + a);
        Vertex u = std::min(ia->second, ib->second);
        Vertex v = std::max(ia->second, ib->second);
        if (!seen.emplace(u, v).second) continue;  // drop duplicate
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
    g.edges_.assign(seen.begin(), seen.end());
    return g;
}

std::optional<Vertex> Graph::find(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

Vertex Graph::index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw ValidationError("unknown vertex: " + id);
    return it->second;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    const auto& nb = adj_.at(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

bool Graph::has_edge(const std::string& a, const std::string& b) const {
    auto ia = find(a);
    auto ib = find(b);
    if (!ia || !ib) return false;
    return adjacent(*ia, *ib);
}

bool SunflowerInstance::has_shared_edge(const std::string& a, const std::string& b) const {
    return shared_edge_set_.count(a < b ? a + "\x1f" + b : b + "\x1f" + a) > 0;
}

std::uint32_t SunflowerInstance::union_index(const std::string& id) const {
    auto it = union_index_.find(id);
    if (it == union_index_.end()) throw ValidationError("vertex not in instance: " + id);
    return it->second;
}

void SunflowerInstance::rebuild_index() {
    shared_set_.clear();
    shared_edge_set_.clear();
    union_ids_.clear();
    union_index_.clear();
    for (const auto& s : shared_vertices) shared_set_.insert(s);
    for (const auto& [a, b] : shared_edges)
        shared_edge_set_.insert(a < b ? a + "\x1f" + b : b + "\x1f" + a);
    for (const auto& g : graphs)
        for (const auto& id : g.names())
            if (union_index_.emplace(id, static_cast<std::uint32_t>(union_ids_.size())).second)
                union_ids_.push_back(id);
}

SunflowerInstance make_instance(std::vector<Graph> graphs,
                                std::vector<std::string> shared_vertices,
                                std::vector<std::pair<std::string, std::string>> shared_edges,
                                std::string name, bool sunflower_flagged) {
    SunflowerInstance inst;
    inst.name = std::move(name);
    inst.sunflower_flagged = sunflower_flagged;
    inst.graphs = std::move(graphs);
    inst.shared_vertices = std::move(shared_vertices);
    inst.shared_edges = std::move(shared_edges);
    inst.rebuild_index();
    return inst;
}

ValidationReport validate_sunflower(const SunflowerInstance& inst) {
    ValidationReport rep;
    auto fail = [&rep](std::string rule, std::string msg) {
        rep.ok = false;
        rep.violations.push_back({std::move(rule), std::move(msg)});
    };

    if (inst.graphs.empty()) fail("k-positive", "instance has no member graphs");

    // Shared edge endpoints must be shared vertices.
    for (const auto& [a, b] : inst.shared_edges) {
        if (!inst.is_shared(a) || !inst.is_shared(b))
            fail("shared-edge-endpoints", "shared edge (" + a + "," + b + ") has a non-shared endpoint");
    }

    // V_S subset of every V(G_i); E_S subset of every E(G_i).
    for (std::size_t i = 0; i < inst.graphs.size(); ++i) {
        const Graph& g = inst.graphs[i];
        for (const auto& s : inst.shared_vertices)
            if (!g.has_vertex(s))
                fail("shared-vertex-missing", "shared vertex " + s + " missing from graph " + std::to_string(i));
        for (const auto& [a, b] : inst.shared_edges)
            if (!g.has_edge(a, b))
                fail("shared-edge-missing",
                     "shared edge (" + a + "," + b + ") missing from graph " + std::to_string(i));
    }

    // S induced in each G_i: any G_i edge between shared vertices must be in E_S.
    for (std::size_t i = 0; i < inst.graphs.size(); ++i) {
        const Graph& g = inst.graphs[i];
        for (const auto& [u, v] : g.edges()) {
            const std::string& a = g.name_of(u);
            const std::string& b = g.name_of(v);
            if (inst.is_shared(a) && inst.is_shared(b) && !inst.has_shared_edge(a, b))
                fail("S-not-induced",
                     "edge (" + a + "," + b + ") of graph " + std::to_string(i) + " joins shared vertices but is not a shared edge");
        }
    }

    // Pairwise intersections equal S exactly.
    for (std::size_t i = 0; i < inst.graphs.size(); ++i) {
        for (std::size_t j = i + 1; j < inst.graphs.size(); ++j) {
            const Graph& gi = inst.graphs[i];
            const Graph& gj = inst.graphs[j];
            for (const auto& id : gi.names())
                if (gj.has_vertex(id) && !inst.is_shared(id))
                    fail("pairwise-vertex-overflow",
                         "vertex " + id + " lies in graphs " + std::to_string(i) + " and " + std::to_string(j) +
                             " but is not shared");
            for (const auto& [u, v] : gi.edges()) {
                const std::string& a = gi.name_of(u);
                const std::string& b = gi.name_of(v);
                if (gj.has_edge(a, b) && !inst.has_shared_edge(a, b))
                    fail("pairwise-edge-overflow",
                         "edge (" + a + "," + b + ") lies in graphs " + std::to_string(i) + " and " +
                             std::to_string(j) + " but is not a shared edge");
            }
        }
    }
    return rep;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
    std::vector<std::vector<Vertex>> comps;
    std::vector<bool> seen(g.vertex_count(), false);
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        if (seen[s]) continue;
        std::vector<Vertex> comp{s};
        seen[s] = true;
        for (std::size_t head = 0; head < comp.size(); ++head) {
            for (Vertex w : g.neighbors(comp[head])) {
                if (!seen[w]) {
                    seen[w] = true;
                    comp.push_back(w);
                }
            }
        }
        comps.push_back(std::move(comp));
    }
    return comps;
}

Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& vs) {
    std::vector<bool> keep(g.vertex_count(), false);
    for (Vertex v : vs) {
        if (v >= g.vertex_count()) throw ValidationError("induced_subgraph: vertex index out of range");
        keep[v] = true;
    }
    std::vector<std::string> ids;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (keep[v]) ids.push_back(g.name_of(v));
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& [u, v] : g.edges())
        if (keep[u] && keep[v]) edges.emplace_back(g.name_of(u), g.name_of(v));
    return Graph::build(ids, edges);
}

Graph union_graph(const SunflowerInstance& inst) {
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& g : inst.graphs)
        for (const auto& [u, v] : g.edges()) edges.emplace_back(g.name_of(u), g.name_of(v));
    return Graph::build(inst.union_ids(), edges);
}

std::vector<SunflowerInstance> split_by_components(const SunflowerInstance& inst) {
    Graph u = union_graph(inst);
    auto comps = connected_components(u);
    std::vector<SunflowerInstance> out;
    for (const auto& comp : comps) {
        std::unordered_set<std::string> in_comp;
        for (Vertex v : comp) in_comp.insert(u.name_of(v));
        std::vector<Graph> graphs;
        for (const auto& g : inst.graphs) {
            std::vector<Vertex> vs;
            for (Vertex v = 0; v < g.vertex_count(); ++v)
                if (in_comp.count(g.name_of(v))) vs.push_back(v);
            graphs.push_back(induced_subgraph(g, vs));
        }
        std::vector<std::string> sv;
        for (const auto& s : inst.shared_vertices)
            if (in_comp.count(s)) sv.push_back(s);
        std::vector<std::pair<std::string, std::string>> se;
        for (const auto& e : inst.shared_edges)
            if (in_comp.count(e.first)) se.push_back(e);
        out.push_back(make_instance(std::move(graphs), std::move(sv), std::move(se),
                                    inst.name.empty() ? "" : inst.name + "#" + std::to_string(out.size()),
                                    inst.sunflower_flagged));
    }
    return out;
}

}  // namespace simint
