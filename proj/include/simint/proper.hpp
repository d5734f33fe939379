#pragma once

#include <optional>
#include <vector>

#include "simint/graph.hpp"
#include "simint/pqtree.hpp"
#include "simint/rational.hpp"

namespace simint {

// Blocks: classes of vertices with identical closed neighborhoods,
// ordered by least member index.
struct BlockPartition {
    std::vector<std::vector<Vertex>> blocks;  // members sorted ascending
    std::vector<int> block_of;                // vertex -> block index
};

BlockPartition compute_blocks(const Graph& g);

// A straight enumeration: blocks in order, each component's blocks
// contiguous. Block members are vertex indices of the underlying graph.
struct StraightEnumeration {
    std::vector<std::vector<Vertex>> blocks;
    // Half-open [start, end) block-index span per component, in order.
    std::vector<std::pair<int, int>> components;

    std::size_t block_count() const { return blocks.size(); }
    int block_index_of(Vertex v) const;  // linear scan helper for small uses

    // Vertex order: blocks in sequence, members ascending inside a block.
    std::vector<Vertex> vertex_order() const;

    StraightEnumeration reversed() const;
    // Reverse one component's block span in place (returns a copy).
    StraightEnumeration with_component_reversed(int comp) const;
};

// True iff the blocks + spans form a straight enumeration of g.
bool is_straight_enumeration(const Graph& g, const StraightEnumeration& se);

// Looges-Olariu 3-vertex condition over a vertex order.
bool verify_fine_enumeration(const Graph& g, const std::vector<Vertex>& order);

// Recognition: 3-sweep lexicographic BFS produces a candidate order, the
// 3-vertex condition verifies it. nullopt iff g is not proper interval.
// Components ordered by least vertex; orientation canonical.
std::optional<StraightEnumeration> straight_enumeration(const Graph& g);

// Per-vertex closed intervals with exact rational endpoints.
struct IntervalRepresentation {
    std::vector<Interval> by_vertex;  // indexed by graph vertex
};

IntervalRepresentation representation_from_straight_enumeration(const Graph& g,
                                                                const StraightEnumeration& se);

// PQ-tree over vertex indices whose consistent orders are exactly the fine
// enumerations of g; nullopt iff g is not proper interval.
std::optional<PQTree> fine_enum_pqtree(const Graph& g);

// Lexicographic BFS; ties broken by ascending index on the first sweep and
// by descending position in `prior` afterwards.
std::vector<Vertex> lbfs(const Graph& g, const std::vector<Vertex>* prior);

// Group a fine enumeration into its straight enumeration.
StraightEnumeration enumeration_from_fine_order(const Graph& g, const std::vector<Vertex>& order);

}  // namespace simint
