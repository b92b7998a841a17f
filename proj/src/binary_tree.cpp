#include "hopftrees/binary_tree.hpp"

#include <algorithm>
#include <functional>
#include <mutex>

#include "hopftrees/error.hpp"
#include "parse_util.hpp"

namespace hopftrees {

namespace {

// Index one past the subtree that starts at i.
std::size_t subtree_end(const std::string& s, std::size_t i) {
    int depth = 0;
    do {
        if (s[i] == '(')
            ++depth;
        else if (s[i] == ')')
            --depth;
        ++i;
    } while (depth > 0);
    return i;
}

int count_nodes(std::string_view s) { return static_cast<int>(std::count(s.begin(), s.end(), '(')); }

void parse_subtree(detail::Cursor& c) {
    if (c.accept('.')) return;
    c.expect('(', "'.' or '('");
    parse_subtree(c);
    parse_subtree(c);
    c.expect(')', "')'");
}

}  // namespace

BinaryTree BinaryTree::node(const BinaryTree& l, const BinaryTree& r) {
    return BinaryTree("(" + l.repr_ + r.repr_ + ")", l.size_ + r.size_ + 1);
}

BinaryTree BinaryTree::parse(std::string_view text) {
    detail::Cursor c(text);
    parse_subtree(c);
    c.expect_end();
    return BinaryTree(std::string(text), count_nodes(text));
}

BinaryTree BinaryTree::left() const { return split_root(*this).first; }
BinaryTree BinaryTree::right() const { return split_root(*this).second; }

std::size_t catalan(int n) {
    std::vector<std::size_t> c(static_cast<std::size_t>(n) + 1, 0);
    c[0] = 1;
    for (int m = 1; m <= n; ++m)
        for (int k = 0; k < m; ++k) c[static_cast<std::size_t>(m)] += c[static_cast<std::size_t>(k)] * c[static_cast<std::size_t>(m - 1 - k)];
    return c[static_cast<std::size_t>(n)];
}

std::vector<BinaryTree> all_trees(int n) {
    static std::mutex mu;
    static std::vector<std::vector<BinaryTree>> memo{{BinaryTree()}};
    std::lock_guard lock(mu);
    while (static_cast<int>(memo.size()) <= n) {
        const int m = static_cast<int>(memo.size());
        std::vector<BinaryTree> level;
        for (int k = 0; k < m; ++k)
            for (const auto& l : memo[static_cast<std::size_t>(k)])
                for (const auto& r : memo[static_cast<std::size_t>(m - 1 - k)]) level.push_back(BinaryTree::node(l, r));
        std::sort(level.begin(), level.end());
        memo.push_back(std::move(level));
    }
    return memo[static_cast<std::size_t>(n)];
}

BinaryTree graft_tree(const BinaryTree& s, const BinaryTree& t) { return BinaryTree::node(s, t); }

std::pair<BinaryTree, BinaryTree> split_root(const BinaryTree& t) {
    if (t.is_leaf()) throw invalid_input("split_root of the leaf");
    const std::string& s = t.str();
    std::size_t mid = subtree_end(s, 1);
    std::string l = s.substr(1, mid - 1);
    std::string r = s.substr(mid, s.size() - 1 - mid);
    const int ln = count_nodes(l);
    return {BinaryTree(std::move(l), ln), BinaryTree(std::move(r), t.size() - 1 - ln)};
}

BinaryTree comb(int n) {
    BinaryTree t;
    for (int i = 0; i < n; ++i) t = graft_tree(t, BinaryTree());
    return t;
}

BinaryTree tamari_max(int n) {
    BinaryTree t;
    for (int i = 0; i < n; ++i) t = graft_tree(BinaryTree(), t);
    return t;
}

BinaryTree replace_leaf(const BinaryTree& host, int leaf_index, const BinaryTree& part) {
    if (leaf_index < 0 || leaf_index > host.size()) throw invalid_input("leaf index out of range");
    std::string out;
    int seen = 0;
    for (char ch : host.repr_) {
        if (ch == '.' && seen++ == leaf_index)
            out += part.repr_;
        else
            out += ch;
    }
    return BinaryTree(std::move(out), host.size_ + part.size_);
}

BinaryTree tree_concat_over(const BinaryTree& s, const BinaryTree& t) { return replace_leaf(s, s.size(), t); }
BinaryTree tree_concat_under(const BinaryTree& s, const BinaryTree& t) { return replace_leaf(t, 0, s); }

bool is_progressive(const BinaryTree& t) { return !t.is_leaf() && split_root(t).second.is_leaf(); }

std::vector<BinaryTree> progressive_decompose(const BinaryTree& t) {
    std::vector<BinaryTree> out;
    BinaryTree cur = t;
    while (!cur.is_leaf()) {
        auto [l, r] = split_root(cur);
        out.push_back(graft_tree(l, BinaryTree()));
        cur = r;
    }
    return out;
}

Subset left_leaf_set(const BinaryTree& t) {
    const int n = t.size();
    Subset out(std::max(n - 1, 0));
    const std::string& s = t.str();
    int leaf = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] != '.') continue;
        if (leaf >= 1 && leaf <= n - 1 && s[i - 1] == '(') out.insert(leaf);
        ++leaf;
    }
    return out;
}

Subset right_branch_set(const BinaryTree& t) {
    const int n = t.size();
    Subset out(std::max(n - 1, 0));
    int acc = 0;
    for (const auto& c : progressive_decompose(t)) {
        acc += c.size();
        if (acc < n) out.insert(acc);
    }
    return out;
}

std::vector<BinaryTree> tamari_covers_up(const BinaryTree& t) {
    std::vector<BinaryTree> out;
    if (t.is_leaf()) return out;
    auto [l, r] = split_root(t);
    if (!l.is_leaf()) {
        auto [a, b] = split_root(l);
        out.push_back(graft_tree(a, graft_tree(b, r)));
    }
    for (const auto& l2 : tamari_covers_up(l)) out.push_back(graft_tree(l2, r));
    for (const auto& r2 : tamari_covers_up(r)) out.push_back(graft_tree(l, r2));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<BinaryTree> tamari_covers_down(const BinaryTree& t) {
    std::vector<BinaryTree> out;
    if (t.is_leaf()) return out;
    auto [l, r] = split_root(t);
    if (!r.is_leaf()) {
        auto [b, c] = split_root(r);
        out.push_back(graft_tree(graft_tree(l, b), c));
    }
    for (const auto& l2 : tamari_covers_down(l)) out.push_back(graft_tree(l2, r));
    for (const auto& r2 : tamari_covers_down(r)) out.push_back(graft_tree(l, r2));
    std::sort(out.begin(), out.end());
    return out;
}

NodeLabeling node_labeling(const BinaryTree& t) {
    NodeLabeling lab;
    lab.tree = t;
    const std::size_t n = static_cast<std::size_t>(t.size());
    lab.left.assign(n + 1, 0);
    lab.right.assign(n + 1, 0);
    lab.parent.assign(n + 1, 0);
    lab.low.assign(n + 1, 0);
    const std::string& s = t.str();
    // Returns the label of the subtree at position i (0 for a leaf); `next` is the next free label.
    int next = 1;
    std::function<int(std::size_t)> walk = [&](std::size_t i) -> int {
        if (s[i] == '.') return 0;
        const int first = next;
        std::size_t mid = subtree_end(s, i + 1);
        int l = walk(i + 1);
        int x = next++;
        int r = walk(mid);
        lab.left[static_cast<std::size_t>(x)] = l;
        lab.right[static_cast<std::size_t>(x)] = r;
        lab.low[static_cast<std::size_t>(x)] = first;
        if (l) lab.parent[static_cast<std::size_t>(l)] = x;
        if (r) lab.parent[static_cast<std::size_t>(r)] = x;
        return x;
    };
    lab.root = walk(0);
    return lab;
}

bool is_admissible(const NodeLabeling& lab, const Subset& r) {
    if (r.ambient() != lab.size()) return false;
    for (int x : r.members())
        for (int y = lab.low[static_cast<std::size_t>(x)]; y < x; ++y)
            if (!r.contains(y)) return false;
    return true;
}

std::vector<Subset> admissible_node_subsets(const BinaryTree& t) {
    NodeLabeling lab = node_labeling(t);
    std::vector<Subset> out;
    for (const Subset& r : all_subsets(t.size()))
        if (is_admissible(lab, r)) out.push_back(r);
    return out;
}

std::pair<BinaryTree, BinaryTree> prune(const BinaryTree& t, const Subset& r) {
    NodeLabeling lab = node_labeling(t);
    if (!is_admissible(lab, r)) throw invalid_input("node set " + r.str() + " is not admissible in " + t.str());
    std::function<BinaryTree(int)> whole = [&](int x) -> BinaryTree {
        if (!x) return BinaryTree();
        return graft_tree(whole(lab.left[static_cast<std::size_t>(x)]), whole(lab.right[static_cast<std::size_t>(x)]));
    };
    // Piece rooted at x in R: full left subtree, right spine continued while it stays in R.
    std::function<BinaryTree(int)> piece = [&](int x) -> BinaryTree {
        int rt = lab.right[static_cast<std::size_t>(x)];
        return graft_tree(whole(lab.left[static_cast<std::size_t>(x)]), (rt && r.contains(rt)) ? piece(rt) : BinaryTree());
    };
    std::function<BinaryTree(int)> contract = [&](int x) -> BinaryTree {
        if (!x) return BinaryTree();
        if (r.contains(x)) return contract(lab.right[static_cast<std::size_t>(x)]);
        return graft_tree(contract(lab.left[static_cast<std::size_t>(x)]), contract(lab.right[static_cast<std::size_t>(x)]));
    };
    BinaryTree pruned;
    for (int x : r.members()) {
        int p = lab.parent[static_cast<std::size_t>(x)];
        if (p == 0 || !r.contains(p)) pruned = tree_concat_over(pruned, piece(x));
    }
    return {pruned, contract(lab.root)};
}

std::pair<BinaryTree, BinaryTree> prune_recursive(const BinaryTree& t, const Subset& r) {
    if (r.ambient() != t.size()) throw invalid_input("node set ambient must equal the tree size");
    if (t.is_leaf()) return {BinaryTree(), BinaryTree()};
    auto [s, u] = split_root(t);
    const int j = s.size() + 1;
    Subset sl(s.size()), ul(u.size());
    for (int x : r.members()) {
        if (x < j) sl.insert(x);
        if (x > j) ul.insert(x - j);
    }
    auto [u1, u2] = prune_recursive(u, ul);
    if (r.contains(j)) {
        if (sl.size() != s.size()) throw invalid_input("node set " + r.str() + " is not admissible in " + t.str());
        return {graft_tree(s, u1), u2};
    }
    auto [s1, s2] = prune_recursive(s, sl);
    return {tree_concat_over(s1, u1), graft_tree(s2, u2)};
}

BinaryTree reflect(const BinaryTree& t) {
    BinaryTree out;
    for (const auto& c : progressive_decompose(t)) out = tree_concat_over(graft_tree(reflect(c.left()), BinaryTree()), out);
    return out;
}

namespace {

// Splits t at leaf c into (t0, t1) with t0 in Y_c.
std::pair<BinaryTree, BinaryTree> split2(const BinaryTree& t, int c) {
    if (t.is_leaf()) return {BinaryTree(), BinaryTree()};
    auto [l, r] = split_root(t);
    const int a = l.size();
    if (c <= a) {
        auto [l0, l1] = split2(l, c);
        return {l0, graft_tree(l1, r)};
    }
    auto [r0, r1] = split2(r, c - a - 1);
    return {graft_tree(l, r0), r1};
}

}  // namespace

std::vector<std::vector<BinaryTree>> tree_splits(const BinaryTree& t, int q) {
    if (q < 0) throw invalid_input("tree_splits: q must be nonnegative");
    const int p = t.size();
    std::vector<std::vector<BinaryTree>> out;
    std::vector<int> cuts(static_cast<std::size_t>(q));
    // cuts[q-1] is the outermost loop variable, giving colex order.
    std::function<void(int, int)> rec = [&](int idx, int bound) {
        if (idx < 0) {
            std::vector<BinaryTree> pieces(static_cast<std::size_t>(q) + 1);
            BinaryTree rest = t;
            for (int i = q - 1; i >= 0; --i) {
                auto [a, b] = split2(rest, cuts[static_cast<std::size_t>(i)]);
                pieces[static_cast<std::size_t>(i) + 1] = b;
                rest = a;
            }
            pieces[0] = rest;
            out.push_back(std::move(pieces));
            return;
        }
        for (int c = 0; c <= bound; ++c) {
            cuts[static_cast<std::size_t>(idx)] = c;
            rec(idx - 1, c);
        }
    };
    rec(q - 1, p);
    return out;
}

BinaryTree attach(const std::vector<BinaryTree>& parts, const BinaryTree& s) {
    if (static_cast<int>(parts.size()) != s.size() + 1)
        throw invalid_input("attach: " + std::to_string(parts.size()) + " parts for a tree with " + std::to_string(s.size() + 1) + " leaves");
    std::string out;
    int size = s.size_;
    std::size_t leaf = 0;
    for (char ch : s.repr_) {
        if (ch == '.') {
            out += parts[leaf].repr_;
            size += parts[leaf].size_;
            ++leaf;
        } else {
            out += ch;
        }
    }
    return BinaryTree(std::move(out), size);
}

}  // namespace hopftrees
