#include "hopftrees/forest.hpp"

#include <algorithm>
#include <functional>
#include <mutex>

#include "hopftrees/error.hpp"
#include "parse_util.hpp"

namespace hopftrees {

namespace {

void parse_ordered(detail::Cursor& c, int& nodes) {
    c.expect('(', "'('");
    ++nodes;
    while (c.peek() == '(') parse_ordered(c, nodes);
    c.expect(')', "'(' or ')'");
}

}  // namespace

OrderedTree OrderedTree::with_children(const Forest& children) {
    std::string s = "(";
    for (const auto& t : children.trees()) s += t.str();
    return OrderedTree(s + ")", children.size() + 1);
}

OrderedTree OrderedTree::parse(std::string_view text) {
    detail::Cursor c(text);
    int nodes = 0;
    parse_ordered(c, nodes);
    c.expect_end();
    return OrderedTree(std::string(text), nodes);
}

Forest OrderedTree::children() const {
    std::vector<OrderedTree> kids;
    std::size_t i = 1;
    while (i + 1 < repr_.size()) {
        std::size_t j = i;
        int depth = 0, nodes = 0;
        do {
            if (repr_[j] == '(') {
                ++depth;
                ++nodes;
            } else {
                --depth;
            }
            ++j;
        } while (depth > 0);
        kids.push_back(OrderedTree(repr_.substr(i, j - i), nodes));
        i = j;
    }
    return Forest(std::move(kids));
}

Forest::Forest(std::vector<OrderedTree> trees) : trees_(std::move(trees)) {
    for (const auto& t : trees_) size_ += t.size();
}

Forest Forest::parse(std::string_view text) {
    if (text == empty_forest_literal) return Forest();
    std::vector<OrderedTree> trees;
    std::size_t start = 0;
    if (text.empty()) throw parse_error(std::string(text), 0, "a tree literal or \xE2\x88\x85");
    while (start <= text.size()) {
        std::size_t end = text.find(' ', start);
        if (end == std::string_view::npos) end = text.size();
        try {
            trees.push_back(OrderedTree::parse(text.substr(start, end - start)));
        } catch (const parse_error& e) {
            throw parse_error(std::string(text), start + e.position(), e.expected());
        }
        start = end + 1;
    }
    return Forest(std::move(trees));
}

std::string Forest::str() const {
    if (trees_.empty()) return std::string(empty_forest_literal);
    std::string out;
    for (std::size_t i = 0; i < trees_.size(); ++i) {
        if (i) out += ' ';
        out += trees_[i].str();
    }
    return out;
}

Forest forest_concat(const Forest& f, const Forest& g) {
    std::vector<OrderedTree> t = f.trees();
    t.insert(t.end(), g.trees().begin(), g.trees().end());
    return Forest(std::move(t));
}

OrderedTree ladder(int n) {
    if (n < 1) throw invalid_input("ladder needs at least one node");
    OrderedTree t;
    for (int i = 1; i < n; ++i) t = OrderedTree::with_children(Forest({t}));
    return t;
}

Forest forest_reflect(const Forest& f) {
    std::vector<OrderedTree> out;
    for (auto it = f.trees().rbegin(); it != f.trees().rend(); ++it) out.push_back(OrderedTree::with_children(forest_reflect(it->children())));
    return Forest(std::move(out));
}

Forest unorder(const Forest& f) {
    std::vector<OrderedTree> out;
    for (const auto& t : f.trees()) out.push_back(OrderedTree::with_children(unorder(t.children())));
    std::sort(out.begin(), out.end(), [](const OrderedTree& a, const OrderedTree& b) { return a.str() > b.str(); });
    return Forest(std::move(out));
}

std::vector<Forest> all_forests(int n) {
    static std::mutex mu;
    static std::vector<std::vector<Forest>> memo{{Forest()}};
    std::lock_guard lock(mu);
    while (static_cast<int>(memo.size()) <= n) {
        const int m = static_cast<int>(memo.size());
        std::vector<Forest> level;
        // first tree has k nodes (its children form a forest with k-1 nodes), the rest has m-k
        for (int k = 1; k <= m; ++k)
            for (const auto& kids : memo[static_cast<std::size_t>(k - 1)])
                for (const auto& rest : memo[static_cast<std::size_t>(m - k)])
                    level.push_back(forest_concat(Forest({OrderedTree::with_children(kids)}), rest));
        std::sort(level.begin(), level.end());
        memo.push_back(std::move(level));
    }
    return memo[static_cast<std::size_t>(n)];
}

std::vector<Forest> all_unordered_forests(int n) {
    std::vector<Forest> out;
    for (const auto& f : all_forests(n)) out.push_back(unorder(f));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::pair<Forest, Forest>> admissible_cuts(const Forest& f) {
    // Flatten in preorder.
    std::vector<int> parent;
    std::vector<std::vector<int>> kids;
    std::vector<int> roots;
    std::function<int(const OrderedTree&, int)> flatten = [&](const OrderedTree& t, int par) -> int {
        int id = static_cast<int>(parent.size());
        parent.push_back(par);
        kids.emplace_back();
        const Forest children = t.children();
        for (const auto& c : children.trees()) {
            int cid = flatten(c, id);
            kids[static_cast<std::size_t>(id)].push_back(cid);
        }
        return id;
    };
    for (const auto& t : f.trees()) roots.push_back(flatten(t, -1));
    const int n = static_cast<int>(parent.size());
    if (n > 30) throw invalid_input("admissible_cuts: forest too large");

    std::function<OrderedTree(int)> whole = [&](int x) {
        std::vector<OrderedTree> ch;
        for (int c : kids[static_cast<std::size_t>(x)]) ch.push_back(whole(c));
        return OrderedTree::with_children(Forest(std::move(ch)));
    };
    std::vector<std::pair<Forest, Forest>> out;
    for (std::uint32_t s = 0; s < (1U << n); ++s) {
        auto in = [&](int x) { return (s >> x) & 1U; };
        bool ok = true;
        for (int x = 0; x < n && ok; ++x)
            if (in(x))
                for (int c : kids[static_cast<std::size_t>(x)])
                    if (!in(c)) ok = false;
        if (!ok) continue;
        std::vector<OrderedTree> cut;
        for (int x = 0; x < n; ++x)
            if (in(x) && (parent[static_cast<std::size_t>(x)] < 0 || !in(parent[static_cast<std::size_t>(x)]))) cut.push_back(whole(x));
        std::function<OrderedTree(int)> remain = [&](int x) {
            std::vector<OrderedTree> ch;
            for (int c : kids[static_cast<std::size_t>(x)])
                if (!in(c)) ch.push_back(remain(c));
            return OrderedTree::with_children(Forest(std::move(ch)));
        };
        std::vector<OrderedTree> rest;
        for (int r : roots)
            if (!in(r)) rest.push_back(remain(r));
        out.emplace_back(Forest(std::move(cut)), Forest(std::move(rest)));
    }
    return out;
}

BinaryTree forest_to_tree(const Forest& f) {
    BinaryTree out;
    for (const auto& t : f.trees()) out = tree_concat_over(out, graft_tree(forest_to_tree(t.children()), BinaryTree()));
    return out;
}

Forest tree_to_forest(const BinaryTree& t) {
    std::vector<OrderedTree> out;
    for (const auto& c : progressive_decompose(t)) out.push_back(OrderedTree::with_children(tree_to_forest(c.left())));
    return Forest(std::move(out));
}

}  // namespace hopftrees
