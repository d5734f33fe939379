#include "simint/pqtree.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "simint/graph.hpp"  // CapExceededError

namespace simint {

namespace {

std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace

int PQTree::add_leaf(int element) {
    Node n;
    n.kind = Node::Kind::Leaf;
    n.element = element;
    nodes_.push_back(std::move(n));
    return static_cast<int>(nodes_.size()) - 1;
}

int PQTree::add_inner(Node::Kind kind, std::vector<int> kids) {
    Node n;
    n.kind = kind;
    n.kids = std::move(kids);
    nodes_.push_back(std::move(n));
    return static_cast<int>(nodes_.size()) - 1;
}

PQTree PQTree::universal(const std::vector<int>& ground) {
    if (ground.empty()) throw std::invalid_argument("universal: empty ground set");
    PQTree t;
    t.ground_ = sorted_unique(ground);
    if (t.ground_.size() != ground.size())
        throw std::invalid_argument("universal: duplicate ground elements");
    if (t.ground_.size() == 1) {
        t.root_ = t.add_leaf(t.ground_[0]);
        return t;
    }
    std::vector<int> kids;
    for (int e : t.ground_) kids.push_back(t.add_leaf(e));
    t.root_ = t.add_inner(Node::Kind::P, std::move(kids));
    return t;
}

PQTree PQTree::null_tree(std::vector<int> ground) {
    PQTree t;
    t.null_ = true;
    t.ground_ = sorted_unique(std::move(ground));
    return t;
}

void PQTree::collect_leaves(int node, std::vector<int>& out) const {
    const Node& n = nodes_[node];
    if (n.kind == Node::Kind::Leaf) {
        out.push_back(n.element);
        return;
    }
    for (int k : n.kids) collect_leaves(k, out);
}

int PQTree::copy_normalized(const PQTree& src, int node, PQTree& dst) const {
    const Node& n = src.nodes_[node];
    if (n.kind == Node::Kind::Leaf) return dst.add_leaf(n.element);
    std::vector<int> kids;
    for (int k : n.kids) kids.push_back(copy_normalized(src, k, dst));
    if (kids.size() == 1) return kids[0];
    Node::Kind kind = (n.kind == Node::Kind::Q && kids.size() == 2) ? Node::Kind::P : n.kind;
    return dst.add_inner(kind, std::move(kids));
}

PQTree PQTree::normalized() const {
    if (null_) return *this;
    PQTree t;
    t.ground_ = ground_;
    t.root_ = copy_normalized(*this, root_, t);
    return t;
}

// ---------------------------------------------------------------------------
// reduce: classical template matching (P/Q cases), correctness-first.
// ---------------------------------------------------------------------------

struct PQReducer {
    PQTree& t;
    const std::unordered_set<int>& in_c;
    std::vector<int> cnt;      // pertinent leaves below node
    std::vector<int> leafcnt;  // leaves below node
    bool failed = false;

    using Kind = PQTree::Node::Kind;

    PQReducer(PQTree& tree, const std::unordered_set<int>& c) : t(tree), in_c(c) {
        cnt.assign(t.nodes_.size(), 0);
        leafcnt.assign(t.nodes_.size(), 0);
        fill_counts(t.root_);
    }

    void fill_counts(int node) {
        auto& n = t.nodes_[node];
        if (n.kind == Kind::Leaf) {
            leafcnt[node] = 1;
            cnt[node] = in_c.count(n.element) ? 1 : 0;
            return;
        }
        for (int k : n.kids) {
            fill_counts(k);
            leafcnt[node] += leafcnt[k];
            cnt[node] += cnt[k];
        }
    }

    enum class State { Empty, Full, Partial };

    // Spine of a partial node: node ids ordered full end -> empty end.
    struct Res {
        State state;
        std::vector<int> spine;
    };

    int group(std::vector<int> kids) {
        if (kids.size() == 1) return kids[0];
        return t.add_inner(Kind::P, std::move(kids));
    }

    // Partition kids by pertinence; recurse only into partial kids.
    bool split_kids(const std::vector<int>& kids, std::vector<int>& empties, std::vector<int>& fulls,
                    std::vector<std::vector<int>>& spines, std::vector<int>& states_out) {
        for (int k : kids) {
            if (cnt[k] == 0) {
                empties.push_back(k);
                states_out.push_back(0);
            } else if (cnt[k] == leafcnt[k]) {
                fulls.push_back(k);
                states_out.push_back(1);
            } else {
                auto r = classify(k);
                if (!r) return false;
                spines.push_back(std::move(r->spine));
                states_out.push_back(2);
            }
        }
        return true;
    }

    std::optional<Res> classify(int node) {
        auto& n = t.nodes_[node];
        // Callers only recurse into partial inner nodes.
        std::vector<int> empties, fulls, states;
        std::vector<std::vector<int>> spines;
        if (!split_kids(n.kids, empties, fulls, spines, states)) return std::nullopt;

        if (n.kind == Kind::P) {
            if (spines.size() > 1) return std::nullopt;
            std::vector<int> spine;
            if (!fulls.empty()) spine.push_back(group(std::move(fulls)));
            if (!spines.empty()) {
                for (int x : spines[0]) spine.push_back(x);
            }
            if (!empties.empty()) spine.push_back(group(std::move(empties)));
            return Res{State::Partial, std::move(spine)};
        }

        // Q node: kid states must read full* partial? empty* in one direction.
        for (int dir = 0; dir < 2; ++dir) {
            std::vector<int> kid_seq = n.kids;
            std::vector<int> st = states;
            if (dir == 1) {
                std::reverse(kid_seq.begin(), kid_seq.end());
                std::reverse(st.begin(), st.end());
            }
            std::size_t i = 0;
            while (i < st.size() && st[i] == 1) ++i;
            std::size_t partial_at = st.size();
            if (i < st.size() && st[i] == 2) partial_at = i++;
            std::size_t rest = i;
            while (rest < st.size() && st[rest] == 0) ++rest;
            if (rest != st.size()) continue;
            std::vector<int> spine;
            for (std::size_t j = 0; j < st.size(); ++j) {
                if (j == partial_at) {
                    for (int x : spines[0]) spine.push_back(x);
                } else {
                    spine.push_back(kid_seq[j]);
                }
            }
            return Res{State::Partial, std::move(spine)};
        }
        return std::nullopt;
    }

    // Apply the root template at the pertinent root; returns false on failure.
    bool apply_root(int node) {
        auto& n = t.nodes_[node];
        if (n.kind == Kind::Leaf) return true;  // |c| == 1
        if (cnt[node] == leafcnt[node]) return true;

        std::vector<int> empties, fulls, states;
        std::vector<std::vector<int>> spines;
        if (!split_kids(n.kids, empties, fulls, spines, states)) return false;

        if (n.kind == Kind::P) {
            if (spines.size() > 2) return false;
            std::vector<int> core;
            if (spines.size() >= 1) {
                core.assign(spines[0].rbegin(), spines[0].rend());  // empty end .. full end
            }
            if (!fulls.empty()) core.push_back(group(std::move(fulls)));
            if (spines.size() == 2) {
                for (int x : spines[1]) core.push_back(x);
            }
            if (core.empty()) return true;  // nothing pertinent to arrange
            int core_node = core.size() == 1 ? core[0] : t.add_inner(Kind::Q, std::move(core));
            if (empties.empty()) {
                t.nodes_[node] = t.nodes_[core_node];
            } else {
                std::vector<int> kids = std::move(empties);
                kids.push_back(core_node);
                t.nodes_[node].kind = Kind::P;
                t.nodes_[node].kids = std::move(kids);
            }
            return true;
        }

        // Q root: pattern empty* partial? full* partial? empty* over the kid row.
        const std::vector<int>& kids = n.kids;
        std::size_t m = kids.size();
        // Range of non-empty kids must be contiguous with partials at its ends.
        std::size_t lo = m, hi = m;
        for (std::size_t j = 0; j < m; ++j) {
            if (states[j] != 0) {
                if (lo == m) lo = j;
                hi = j;
            }
        }
        if (lo == m) return true;  // cannot happen: root has pertinent content
        std::size_t spine_seen = 0;
        std::vector<int> new_kids;
        for (std::size_t j = 0; j < lo; ++j) new_kids.push_back(kids[j]);
        for (std::size_t j = lo; j <= hi; ++j) {
            if (states[j] == 0) return false;  // hole inside the pertinent run
            if (states[j] == 2) {
                if (j != lo && j != hi) return false;
                const auto& sp = spines[spine_seen++];
                if (j == lo && j != hi) {
                    new_kids.insert(new_kids.end(), sp.rbegin(), sp.rend());
                } else {
                    new_kids.insert(new_kids.end(), sp.begin(), sp.end());
                }
            } else {
                new_kids.push_back(kids[j]);
            }
        }
        for (std::size_t j = hi + 1; j < m; ++j) new_kids.push_back(kids[j]);
        t.nodes_[node].kids = std::move(new_kids);
        return true;
    }
};

PQTree PQTree::reduce(const std::vector<int>& constraint) const {
    if (null_) return *this;
    std::unordered_set<int> c;
    {
        std::unordered_set<int> g(ground_.begin(), ground_.end());
        for (int e : constraint) {
            if (!g.count(e)) throw std::invalid_argument("reduce: element outside ground set");
            c.insert(e);
        }
    }
    if (c.size() <= 1 || c.size() == ground_.size()) return normalized();

    PQTree work = *this;
    PQReducer red(work, c);

    // Pertinent root: deepest node whose subtree holds all of c.
    int r = work.root_;
    for (;;) {
        int next = -1;
        for (int k : work.nodes_[r].kids) {
            if (red.cnt[k] == static_cast<int>(c.size())) {
                next = k;
                break;
            }
        }
        if (next == -1) break;
        r = next;
    }
    if (!red.apply_root(r)) return null_tree(ground_);
    return work.normalized();
}

PQTree PQTree::project(const std::vector<int>& sub) const {
    if (null_) throw std::invalid_argument("project: null tree");
    if (sub.empty()) throw std::invalid_argument("project: empty subset");
    std::unordered_set<int> keep;
    {
        std::unordered_set<int> g(ground_.begin(), ground_.end());
        for (int e : sub) {
            if (!g.count(e)) throw std::invalid_argument("project: element outside ground set");
            keep.insert(e);
        }
    }
    PQTree out;
    out.ground_ = sorted_unique(sub);

    auto rec = [&](auto&& self, int node) -> int {
        const Node& n = nodes_[node];
        if (n.kind == Node::Kind::Leaf) {
            return keep.count(n.element) ? out.add_leaf(n.element) : -1;
        }
        std::vector<int> kids;
        for (int k : n.kids) {
            int c = self(self, k);
            if (c != -1) kids.push_back(c);
        }
        if (kids.empty()) return -1;
        if (kids.size() == 1) return kids[0];
        Node::Kind kind = (n.kind == Node::Kind::Q && kids.size() == 2) ? Node::Kind::P : n.kind;
        return out.add_inner(kind, std::move(kids));
    };
    out.root_ = rec(rec, root_);
    return out;
}

PQTree PQTree::intersect(const PQTree& other) const {
    if (ground_ != other.ground_) throw std::invalid_argument("intersect: ground-set mismatch");
    if (null_ || other.null_) return null_tree(ground_);

    PQTree acc = normalized();
    std::vector<std::vector<int>> constraints;
    auto rec = [&](auto&& self, int node) -> std::vector<int> {
        const Node& n = other.nodes_[node];
        if (n.kind == Node::Kind::Leaf) return {n.element};
        std::vector<std::vector<int>> kid_leaves;
        std::vector<int> mine;
        for (int k : n.kids) {
            kid_leaves.push_back(self(self, k));
            mine.insert(mine.end(), kid_leaves.back().begin(), kid_leaves.back().end());
        }
        constraints.push_back(mine);
        if (n.kind == Node::Kind::Q) {
            for (std::size_t i = 0; i + 1 < kid_leaves.size(); ++i) {
                std::vector<int> pair_union = kid_leaves[i];
                pair_union.insert(pair_union.end(), kid_leaves[i + 1].begin(), kid_leaves[i + 1].end());
                constraints.push_back(std::move(pair_union));
            }
        }
        return mine;
    };
    rec(rec, other.root_);
    for (const auto& c : constraints) {
        if (c.size() == ground_.size()) continue;
        acc = acc.reduce(c);
        if (acc.is_null()) return acc;
    }
    return acc;
}

std::vector<int> PQTree::pick_order() const {
    if (null_) throw std::invalid_argument("pick_order: null tree");
    std::vector<int> out;
    collect_leaves(root_, out);
    return out;
}

bool PQTree::consistent(const std::vector<int>& order) const {
    if (sorted_unique(order) != ground_) throw std::invalid_argument("consistent: not a permutation of the ground set");
    if (null_) return false;
    std::unordered_map<int, int> pos;
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);

    struct Span {
        int lo, hi, count;
    };
    bool ok = true;
    auto rec = [&](auto&& self, int node) -> Span {
        const Node& n = nodes_[node];
        if (n.kind == Node::Kind::Leaf) {
            int p = pos.at(n.element);
            return {p, p, 1};
        }
        std::vector<Span> kid_spans;
        Span s{INT32_MAX, -1, 0};
        for (int k : n.kids) {
            Span ks = self(self, k);
            kid_spans.push_back(ks);
            s.lo = std::min(s.lo, ks.lo);
            s.hi = std::max(s.hi, ks.hi);
            s.count += ks.count;
        }
        if (s.hi - s.lo + 1 != s.count) ok = false;
        if (n.kind == Node::Kind::Q && ok) {
            bool inc = true, dec = true;
            for (std::size_t i = 0; i + 1 < kid_spans.size(); ++i) {
                if (kid_spans[i].lo > kid_spans[i + 1].lo) inc = false;
                if (kid_spans[i].lo < kid_spans[i + 1].lo) dec = false;
            }
            if (!inc && !dec) ok = false;
        }
        return s;
    };
    rec(rec, root_);
    return ok;
}

std::uint64_t PQTree::order_count(std::uint64_t cap) const {
    if (null_) return 0;
    const std::uint64_t lim = cap >= UINT64_MAX - 1 ? UINT64_MAX : cap + 1;
    auto mul = [&](std::uint64_t a, std::uint64_t b) -> std::uint64_t {
        if (a == 0 || b == 0) return 0;
        if (a > lim / b) return lim;
        return a * b;
    };
    auto rec = [&](auto&& self, int node) -> std::uint64_t {
        const Node& n = nodes_[node];
        if (n.kind == Node::Kind::Leaf) return 1;
        std::uint64_t r = 1;
        for (int k : n.kids) r = mul(r, self(self, k));
        if (n.kind == Node::Kind::P) {
            for (std::uint64_t i = 2; i <= n.kids.size(); ++i) r = mul(r, i);
        } else {
            r = mul(r, 2);
        }
        return r;
    };
    return rec(rec, root_);
}

std::vector<std::vector<int>> PQTree::enumerate_orders(std::uint64_t cap) const {
    if (null_) return {};
    if (order_count(cap) > cap) throw CapExceededError("enumerate_orders: cap exceeded");

    auto concat_product = [](const std::vector<std::vector<std::vector<int>>>& parts) {
        std::vector<std::vector<int>> acc{{}};
        for (const auto& options : parts) {
            std::vector<std::vector<int>> next;
            for (const auto& prefix : acc) {
                for (const auto& opt : options) {
                    std::vector<int> row = prefix;
                    row.insert(row.end(), opt.begin(), opt.end());
                    next.push_back(std::move(row));
                }
            }
            acc = std::move(next);
        }
        return acc;
    };

    auto rec = [&](auto&& self, int node) -> std::vector<std::vector<int>> {
        const Node& n = nodes_[node];
        if (n.kind == Node::Kind::Leaf) return {{n.element}};
        std::vector<std::vector<std::vector<int>>> kid_orders;
        for (int k : n.kids) kid_orders.push_back(self(self, k));

        std::vector<std::vector<int>> out;
        if (n.kind == Node::Kind::Q) {
            auto fwd = concat_product(kid_orders);
            std::reverse(kid_orders.begin(), kid_orders.end());
            auto bwd = concat_product(kid_orders);
            out = std::move(fwd);
            out.insert(out.end(), bwd.begin(), bwd.end());
        } else {
            std::vector<std::size_t> idx(n.kids.size());
            for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
            do {
                std::vector<std::vector<std::vector<int>>> perm;
                for (std::size_t i : idx) perm.push_back(kid_orders[i]);
                auto rows = concat_product(perm);
                out.insert(out.end(), rows.begin(), rows.end());
            } while (std::next_permutation(idx.begin(), idx.end()));
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    };
    return rec(rec, root_);
}

std::string PQTree::node_string(int node) const {
    const Node& n = nodes_[node];
    if (n.kind == Node::Kind::Leaf) return std::to_string(n.element);
    std::string s = n.kind == Node::Kind::P ? "P(" : "Q(";
    for (std::size_t i = 0; i < n.kids.size(); ++i) {
        if (i) s += ", ";
        s += node_string(n.kids[i]);
    }
    s += ")";
    return s;
}

std::string PQTree::to_string() const {
    if (null_) return "NULL";
    return node_string(root_);
}

std::string PQTree::canonical_key(int node) const {
    const Node& n = nodes_[node];
    if (n.kind == Node::Kind::Leaf) return "L" + std::to_string(n.element);
    std::vector<std::string> keys;
    for (int k : n.kids) keys.push_back(canonical_key(k));
    if (n.kind == Node::Kind::P) {
        std::sort(keys.begin(), keys.end());
    } else {
        std::vector<std::string> rev(keys.rbegin(), keys.rend());
        if (rev < keys) keys = std::move(rev);
    }
    std::string s = n.kind == Node::Kind::P ? "P(" : "Q(";
    for (std::size_t i = 0; i < keys.size(); ++i) {
        if (i) s += ",";
        s += keys[i];
    }
    return s + ")";
}

bool PQTree::equivalent(const PQTree& other) const {
    if (ground_ != other.ground_) return false;
    if (null_ || other.null_) return null_ == other.null_;
    PQTree a = normalized();
    PQTree b = other.normalized();
    return a.canonical_key(a.root_) == b.canonical_key(b.root_);
}

}  // namespace simint
