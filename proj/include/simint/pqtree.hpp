#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace simint {

// PQ-tree over a ground set of integer elements. Consistent(T) is the set of
// linear orders of the ground set in which every constraint applied via
// reduce() is consecutive. The null tree represents the empty order set.
//
// Trees are immutable values: every operation returns a new tree.
class PQTree {
public:
    // Single P-node over all elements (single leaf for |ground| = 1).
    static PQTree universal(const std::vector<int>& ground);

    bool is_null() const { return null_; }
    // Sorted ground set.
    const std::vector<int>& ground() const { return ground_; }

    // Consistent(result) = { orders of t where c is consecutive }.
    PQTree reduce(const std::vector<int>& constraint) const;

    // Consistent(result) = restrictions of Consistent(t) to sub.
    PQTree project(const std::vector<int>& sub) const;

    // Consistent(result) = Consistent(a) intersect Consistent(b).
    PQTree intersect(const PQTree& other) const;

    // Deterministic member of Consistent(t): left-to-right frontier.
    std::vector<int> pick_order() const;

    bool consistent(const std::vector<int>& order) const;

    // Number of consistent orders, saturated at cap.
    std::uint64_t order_count(std::uint64_t cap) const;

    // All consistent orders; throws CapExceededError beyond cap.
    std::vector<std::vector<int>> enumerate_orders(std::uint64_t cap) const;

    // Nested parenthesis debug form, e.g. "P(1, Q(2, 3, 4))".
    std::string to_string() const;

    // Semantic equality via canonical form (P children sorted by least leaf,
    // Q orientation fixed by endpoints).
    bool equivalent(const PQTree& other) const;

    static PQTree null_tree(std::vector<int> ground);

private:
    struct Node {
        enum class Kind { Leaf, P, Q } kind = Kind::Leaf;
        int element = 0;
        std::vector<int> kids;
    };

    bool null_ = false;
    std::vector<int> ground_;
    std::vector<Node> nodes_;
    int root_ = -1;

    int add_leaf(int element);
    int add_inner(Node::Kind kind, std::vector<int> kids);
    PQTree normalized() const;
    int copy_normalized(const PQTree& src, int node, PQTree& dst) const;
    void collect_leaves(int node, std::vector<int>& out) const;
    std::string node_string(int node) const;
    std::string canonical_key(int node) const;

    friend struct PQReducer;
};

}  // namespace simint
