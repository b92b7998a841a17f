#include "hopftrees/maps.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "hopftrees/error.hpp"

namespace hopftrees {

namespace {

// Internal nodes of t indexed by in-order label 1..n; child 0 denotes a leaf. Built with an explicit stack.
struct InorderNodes {
    int root = 0;
    std::vector<int> left, right;
};

InorderNodes inorder_nodes(const BinaryTree& t) {
    const std::size_t n = static_cast<std::size_t>(t.size());
    InorderNodes out;
    out.left.assign(n + 1, 0);
    out.right.assign(n + 1, 0);
    struct Frame {
        bool has_left = false;
        int label = 0;
        int left = 0, right = 0;
    };
    std::vector<Frame> stack;
    int next = 1;
    auto finish = [&](int label) {
        if (stack.empty()) {
            out.root = label;
            return;
        }
        Frame& top = stack.back();
        if (!top.has_left) {
            top.has_left = true;
            top.left = label;
            top.label = next++;
        } else {
            top.right = label;
        }
    };
    for (char ch : t.str()) {
        if (ch == '(') {
            stack.emplace_back();
        } else if (ch == '.') {
            finish(0);
        } else {
            Frame f = stack.back();
            stack.pop_back();
            out.left[static_cast<std::size_t>(f.label)] = f.left;
            out.right[static_cast<std::size_t>(f.label)] = f.right;
            finish(f.label);
        }
    }
    return out;
}

// Preorder of internal nodes; right_first swaps the child visiting order.
std::vector<int> preorder(const InorderNodes& nodes, bool right_first) {
    std::vector<int> order, stack;
    if (nodes.root) stack.push_back(nodes.root);
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        order.push_back(x);
        int first = right_first ? nodes.right[static_cast<std::size_t>(x)] : nodes.left[static_cast<std::size_t>(x)];
        int second = right_first ? nodes.left[static_cast<std::size_t>(x)] : nodes.right[static_cast<std::size_t>(x)];
        if (second) stack.push_back(second);
        if (first) stack.push_back(first);
    }
    return order;
}

// Values 1..n assigned along the reverse of the given preorder.
Permutation assign_reverse(const std::vector<int>& pre, int n) {
    std::vector<int> word(static_cast<std::size_t>(n));
    int value = 1;
    for (auto it = pre.rbegin(); it != pre.rend(); ++it) word[static_cast<std::size_t>(*it - 1)] = value++;
    return Permutation(std::move(word));
}

}  // namespace

BinaryTree lambda(const Permutation& s) {
    const int n = s.size();
    // Max-rooted Cartesian tree over positions, built left to right with a stack.
    std::vector<int> left(static_cast<std::size_t>(n) + 1, 0), right(static_cast<std::size_t>(n) + 1, 0), stack;
    for (int i = 1; i <= n; ++i) {
        int last = 0;
        while (!stack.empty() && s(stack.back()) < s(i)) {
            last = stack.back();
            stack.pop_back();
        }
        left[static_cast<std::size_t>(i)] = last;
        if (!stack.empty()) right[static_cast<std::size_t>(stack.back())] = i;
        stack.push_back(i);
    }
    const int root = stack.empty() ? 0 : stack.front();
    // Serialize with an explicit stack; -1 marks a pending ')'.
    std::string out;
    std::vector<int> work{root};
    while (!work.empty()) {
        int x = work.back();
        work.pop_back();
        if (x == -1) {
            out += ')';
        } else if (x == 0) {
            out += '.';
        } else {
            out += '(';
            work.push_back(-1);
            work.push_back(right[static_cast<std::size_t>(x)]);
            work.push_back(left[static_cast<std::size_t>(x)]);
        }
    }
    return BinaryTree::parse(out);
}

Permutation gamma(const BinaryTree& t) {
    InorderNodes nodes = inorder_nodes(t);
    return assign_reverse(preorder(nodes, false), t.size());
}

Permutation gamma_min(const BinaryTree& t) {
    InorderNodes nodes = inorder_nodes(t);
    return assign_reverse(preorder(nodes, true), t.size());
}

BinaryTree rho(const Permutation& s) {
    const int n = s.size();
    if (n == 0) return BinaryTree();
    Subset gd = global_descents(s);
    int j = n;
    for (int p = 1; p < n; ++p)
        if (gd.contains(p)) {
            j = p;
            break;
        }
    const auto& w = s.word();
    Permutation l = standardize(std::vector<int>(w.begin(), w.begin() + (j - 1)));
    Permutation r = standardize(std::vector<int>(w.begin() + j, w.end()));
    return graft_tree(rho(l), rho(r));
}

Permutation Z_map(const Subset& s, int n) {
    if (n < 0 || s.ambient() != std::max(n - 1, 0)) throw invalid_input("Z: subset must lie in [n-1]");
    Permutation out;
    const Composition parts = Composition::from_subset(s, n);
    for (int part : parts.parts()) out = concat_over(out, Permutation::identity(part));
    return out;
}

BinaryTree C_map(const Subset& s, int n) {
    if (n < 0 || s.ambient() != std::max(n - 1, 0)) throw invalid_input("C: subset must lie in [n-1]");
    BinaryTree out;
    const Composition parts = Composition::from_subset(s, n);
    for (int part : parts.parts()) out = tree_concat_over(out, comb(part));
    return out;
}

BinaryTree restrict_tree(const BinaryTree& r, const Subset& sel) { return lambda(restrict_perm(gamma(r), sel)); }

std::optional<Permutation> rho_descent_step(const Permutation& s) {
    const int n = s.size();
    int best_j = 0, best_k = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) {
                if (!(s(i) < s(k) && s(k) < s(j))) continue;
                bool better = best_k == 0 || s(k) > s(best_k) || (s(k) == s(best_k) && s(j) < s(best_j));
                if (better) {
                    best_j = j;
                    best_k = k;
                }
            }
    if (best_k == 0) return std::nullopt;
    std::vector<int> w = s.word();
    const int target = s(best_k) + 1;
    auto m = std::find(w.begin(), w.end(), target);
    std::swap(*m, w[static_cast<std::size_t>(best_k - 1)]);
    return Permutation(std::move(w));
}

}  // namespace hopftrees
