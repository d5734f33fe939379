#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace simint {

using Vertex = std::uint32_t;

// Thrown when an instance (or a representation fed to an operation) is
// structurally unusable, as opposed to a sunflower rule violation which is
// reported as data in a ValidationReport.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Thrown by the brute-force oracles when an input exceeds their hard caps.
class CapExceededError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Simple undirected graph. Vertex ids are opaque strings externally and
// dense indices internally; all deterministic orderings use index order.
class Graph {
public:
    Graph() = default;

    // Duplicate edges are dropped; self-loops and unknown endpoints throw.
    static Graph build(const std::vector<std::string>& vertex_ids,
                       const std::vector<std::pair<std::string, std::string>>& edge_pairs);

    std::size_t vertex_count() const { return ids_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    bool empty() const { return ids_.empty(); }

    const std::string& name_of(Vertex v) const { return ids_.at(v); }
    const std::vector<std::string>& names() const { return ids_; }
    std::optional<Vertex> find(const std::string& id) const;
    Vertex index_of(const std::string& id) const;
    bool has_vertex(const std::string& id) const { return index_.count(id) > 0; }

    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(v); }
    bool adjacent(Vertex u, Vertex v) const;
    std::size_t degree(Vertex v) const { return adj_.at(v).size(); }
    // Edges as index pairs (u < v), sorted.
    const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }
    bool has_edge(const std::string& a, const std::string& b) const;

private:
    std::vector<std::string> ids_;
    std::unordered_map<std::string, Vertex> index_;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::pair<Vertex, Vertex>> edges_;
};

struct Violation {
    std::string rule;
    std::string message;
};

struct ValidationReport {
    bool ok = true;
    std::vector<Violation> violations;
};

// A sunflower instance: k member graphs sharing exactly the subgraph
// S = (shared_vertices, shared_edges). Instances carrying
// `sunflower_flagged = false` (hardness gadgets) skip sunflower validation
// and are rejected by the production recognizers.
struct SunflowerInstance {
    std::string name;
    bool sunflower_flagged = true;
    std::vector<Graph> graphs;
    std::vector<std::string> shared_vertices;
    std::vector<std::pair<std::string, std::string>> shared_edges;

    std::size_t graph_count() const { return graphs.size(); }
    bool is_shared(const std::string& id) const { return shared_set_.count(id) > 0; }
    bool has_shared_edge(const std::string& a, const std::string& b) const;

    // Union vertex ids in first-seen order across graphs.
    const std::vector<std::string>& union_ids() const { return union_ids_; }
    std::uint32_t union_index(const std::string& id) const;

    void rebuild_index();  // called by make_instance

private:
    std::unordered_set<std::string> shared_set_;
    std::unordered_set<std::string> shared_edge_set_;
    std::vector<std::string> union_ids_;
    std::unordered_map<std::string, std::uint32_t> union_index_;
};

SunflowerInstance make_instance(std::vector<Graph> graphs,
                                std::vector<std::string> shared_vertices,
                                std::vector<std::pair<std::string, std::string>> shared_edges,
                                std::string name = "", bool sunflower_flagged = true);

ValidationReport validate_sunflower(const SunflowerInstance& inst);

// Components as vertex-index sets, ordered by least index, BFS order inside.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& vs);

Graph union_graph(const SunflowerInstance& inst);

// One sub-instance per connected component of the union graph.
std::vector<SunflowerInstance> split_by_components(const SunflowerInstance& inst);

}  // namespace simint
