#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hopftrees/subset.hpp"

namespace hopftrees {

/// Planar binary tree, stored in canonical serialization: "." is the leaf, "(LR)" a node.
///
/// Trees order by size first, then by serialization.
class BinaryTree {
   public:
    /// The leaf (the unique tree with 0 internal nodes).
    BinaryTree() : repr_("."), size_(0) {}

    static BinaryTree leaf() { return {}; }
    static BinaryTree node(const BinaryTree& l, const BinaryTree& r);
    static BinaryTree parse(std::string_view text);

    bool is_leaf() const noexcept { return size_ == 0; }
    /// Number of internal nodes.
    int size() const noexcept { return size_; }
    const std::string& str() const noexcept { return repr_; }

    BinaryTree left() const;
    BinaryTree right() const;

    friend bool operator==(const BinaryTree& a, const BinaryTree& b) { return a.repr_ == b.repr_; }
    friend auto operator<=>(const BinaryTree& a, const BinaryTree& b) {
        if (auto c = a.size_ <=> b.size_; c != 0) return c;
        return a.repr_ <=> b.repr_;
    }

   private:
    BinaryTree(std::string repr, int size) : repr_(std::move(repr)), size_(size) {}
    friend BinaryTree replace_leaf(const BinaryTree& host, int leaf_index, const BinaryTree& part);
    friend BinaryTree attach(const std::vector<BinaryTree>& parts, const BinaryTree& s);
    friend std::pair<BinaryTree, BinaryTree> split_root(const BinaryTree& t);

    std::string repr_;
    int size_;
};

std::size_t catalan(int n);
/// All trees with n internal nodes, sorted.
std::vector<BinaryTree> all_trees(int n);

/// s v t.
BinaryTree graft_tree(const BinaryTree& s, const BinaryTree& t);
/// (t_l, t_r); throws invalid_input on the leaf.
std::pair<BinaryTree, BinaryTree> split_root(const BinaryTree& t);
/// 1_n = 1_{n-1} v |, the Tamari minimum.
BinaryTree comb(int n);
/// The Tamari maximum | v (| v (... v |)).
BinaryTree tamari_max(int n);

/// Replaces leaf number leaf_index (0-based, left to right) of host by part.
BinaryTree replace_leaf(const BinaryTree& host, int leaf_index, const BinaryTree& part);
/// s \ t: root of t on the rightmost leaf of s.
BinaryTree tree_concat_over(const BinaryTree& s, const BinaryTree& t);
/// s / t: root of s on the leftmost leaf of t.
BinaryTree tree_concat_under(const BinaryTree& s, const BinaryTree& t);

bool is_progressive(const BinaryTree& t);
/// Progressive components t_1 .. t_k with t = t_1 \ ... \ t_k; empty for the leaf.
std::vector<BinaryTree> progressive_decompose(const BinaryTree& t);

/// L(t): inner leaves (numbered 0..n) that are left children, as a subset of [n-1].
Subset left_leaf_set(const BinaryTree& t);
/// R(t): partial sums of the progressive component sizes, as a subset of [n-1].
Subset right_branch_set(const BinaryTree& t);

/// Covers of t in the Tamari order: right rotations ((A B) C) -> (A (B C)).
std::vector<BinaryTree> tamari_covers_up(const BinaryTree& t);
std::vector<BinaryTree> tamari_covers_down(const BinaryTree& t);

/// In-order labels 1..n of the internal nodes: each label exceeds its left subtree and is below its right subtree.
struct NodeLabeling {
    BinaryTree tree;
    int root = 0;
    std::vector<int> left;    // left[x]: label of the left child, 0 if it is a leaf
    std::vector<int> right;   // right[x]: same for the right child
    std::vector<int> parent;  // 0 for the root
    std::vector<int> low;     // smallest label in the subtree at x
    int size() const noexcept { return tree.size(); }
};
NodeLabeling node_labeling(const BinaryTree& t);

bool is_admissible(const NodeLabeling& lab, const Subset& r);
/// Admissible node subsets of t in binary-counter order.
std::vector<Subset> admissible_node_subsets(const BinaryTree& t);
/// (t'_R, t''_R) by direct pruning; throws invalid_input unless R is admissible.
std::pair<BinaryTree, BinaryTree> prune(const BinaryTree& t, const Subset& r);
/// Same pair computed by the grafting recursion (root in R or not).
std::pair<BinaryTree, BinaryTree> prune_recursive(const BinaryTree& t, const Subset& r);

/// t^r: reverses the progressive components, recursing into each as (s v |)^r = s^r v |.
BinaryTree reflect(const BinaryTree& t);

/// All ways of dividing t in Y_p into q+1 pieces at a multiset of q leaves, in colex order of the cut multiset.
std::vector<std::vector<BinaryTree>> tree_splits(const BinaryTree& t, int q);
/// (t_0, ..., t_q) / s: part i on leaf i of s. Requires parts.size() == s.size() + 1.
BinaryTree attach(const std::vector<BinaryTree>& parts, const BinaryTree& s);

}  // namespace hopftrees
