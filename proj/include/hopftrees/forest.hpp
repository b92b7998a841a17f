#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hopftrees/binary_tree.hpp"

namespace hopftrees {

class Forest;

/// Rooted planar tree of arbitrary arity, serialized as "(" + children + ")"; a single node is "()".
class OrderedTree {
   public:
    /// The single node.
    OrderedTree() : repr_("()"), size_(1) {}
    /// The tree whose root has the given ordered children.
    static OrderedTree with_children(const Forest& children);
    static OrderedTree parse(std::string_view text);

    int size() const noexcept { return size_; }
    const std::string& str() const noexcept { return repr_; }
    Forest children() const;

    friend bool operator==(const OrderedTree& a, const OrderedTree& b) { return a.repr_ == b.repr_; }
    friend auto operator<=>(const OrderedTree& a, const OrderedTree& b) {
        if (auto c = a.size_ <=> b.size_; c != 0) return c;
        return a.repr_ <=> b.repr_;
    }

   private:
    OrderedTree(std::string repr, int size) : repr_(std::move(repr)), size_(size) {}
    std::string repr_;
    int size_;
};

/// Ordered sequence of rooted planar trees; a monomial of NCK. The empty forest serializes as "∅".
class Forest {
   public:
    Forest() = default;
    explicit Forest(std::vector<OrderedTree> trees);
    /// Space-separated tree literals, or "∅".
    static Forest parse(std::string_view text);

    const std::vector<OrderedTree>& trees() const noexcept { return trees_; }
    int size() const noexcept { return size_; }
    bool empty() const noexcept { return trees_.empty(); }
    std::string str() const;

    friend bool operator==(const Forest&, const Forest&) = default;
    friend auto operator<=>(const Forest& a, const Forest& b) {
        if (auto c = a.size_ <=> b.size_; c != 0) return c;
        return a.trees_ <=> b.trees_;
    }

   private:
    std::vector<OrderedTree> trees_;
    int size_ = 0;
};

inline constexpr std::string_view empty_forest_literal = "\xE2\x88\x85";

/// Concatenation f g (the NCK product on monomials).
Forest forest_concat(const Forest& f, const Forest& g);
/// Ladder l_n: every node has at most one child. Requires n >= 1.
OrderedTree ladder(int n);
/// Mirror image: children reversed at every node, components reversed.
Forest forest_reflect(const Forest& f);
/// U: canonical representative of the unordered forest (children, then components, sorted descending).
Forest unorder(const Forest& f);

/// All planar forests with n nodes (Catalan(n) of them), sorted.
std::vector<Forest> all_forests(int n);
/// Canonical unordered forests with n nodes, sorted.
std::vector<Forest> all_unordered_forests(int n);

/// (f'_S, f''_S) over all admissible node sets S (closed under taking children), in binary-counter order
/// over preorder node numbering.
std::vector<std::pair<Forest, Forest>> admissible_cuts(const Forest& f);

/// phi: forests with n nodes to Y_n.
BinaryTree forest_to_tree(const Forest& f);
/// phi^{-1}.
Forest tree_to_forest(const BinaryTree& t);

}  // namespace hopftrees
