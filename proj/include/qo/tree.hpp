#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qo/roots.hpp"

namespace qo {

// A bar of the Kuo-Lu tree, identified with its pseudo-ball.
struct Bar {
    Height height;
    Series center;                    // lambda_B: member terms not above the height
    std::vector<std::size_t> members; // root indices
    std::optional<Number> support;    // coefficient of x^{h(parent)} in the members
    int parent = -1;
    std::vector<int> children;

    bool is_leaf() const { return height.is_infinite(); }
    std::size_t m() const { return members.size(); }
};

struct BarCounts {
    long m = 0;
    long n_k = 0;
    long t_k = 0;
    bool in_T_k = false;  // m(B) >= k
};

class KuoLuTree {
public:
    KuoLuTree(RootSet roots, std::vector<Bar> bars) : roots_(std::move(roots)), bars_(std::move(bars)) {}

    const RootSet& roots() const { return roots_; }
    const std::vector<Bar>& bars() const { return bars_; }
    const Bar& bar(int i) const { return bars_.at(static_cast<std::size_t>(i)); }
    std::size_t degree() const { return roots_.size(); }
    // Bar indices in breadth-first order, children in stored order.
    std::vector<int> bfs() const;
    // Bars from the root down to b.
    std::vector<int> path_to(int b) const;
    // Smallest bar containing the root.
    int leaf_of(std::size_t root) const;
    std::string name(int b) const;

private:
    RootSet roots_;
    std::vector<Bar> bars_;
};

KuoLuTree build_kuo_lu(const RootSet& roots);

// Per-bar counts for the k-th polar, 1 <= k < n.
std::vector<BarCounts> bar_counts(const KuoLuTree& t, long k);

// Index [L + Z h : L] for L = Z^d + sum Z e over exponents e of lambda.
long ramification_index(const Series& lambda, const ExponentVec& h);

struct EggersVertex {
    std::string name;                 // "B1", ... or the branch label for leaves
    std::vector<int> bars;            // conjugate bars
    Height height;
    long N = 0;                       // class size
    long n = 0;                       // ramification index of x^h; 0 for leaves
    int parent = -1;
    std::vector<int> children;
    std::optional<std::size_t> leaf_branch;
    std::map<std::size_t, bool> dashed;  // per branch through the vertex: edge leaving it toward the branch

    bool is_leaf() const { return leaf_branch.has_value(); }
};

class EggersTree {
public:
    EggersTree(std::vector<EggersVertex> v, std::vector<int> class_of) : v_(std::move(v)), class_of_(std::move(class_of)) {}
    const std::vector<EggersVertex>& vertices() const { return v_; }
    const EggersVertex& vertex(int i) const { return v_.at(static_cast<std::size_t>(i)); }
    int class_of_bar(int b) const { return class_of_.at(static_cast<std::size_t>(b)); }
    // Vertices on the path from the root to the leaf of the branch.
    std::vector<int> branch_path(std::size_t branch) const;

private:
    std::vector<EggersVertex> v_;
    std::vector<int> class_of_;
};

EggersTree build_eggers(const KuoLuTree& t);

}  // namespace qo
