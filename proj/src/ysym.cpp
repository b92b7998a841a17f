#include "hopftrees/ysym.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <stdexcept>

#include "convert.hpp"
#include "hopftrees/error.hpp"
#include "hopftrees/maps.hpp"
#include "hopftrees/posets.hpp"

namespace hopftrees {

namespace {

int tree_rank(const BinaryTree& t) { return t.size(); }
std::string tree_key(const BinaryTree& t) { return poset_key(t); }
BinaryTree tree_from(const std::string& k) { return BinaryTree::parse(k); }

// Everything route B needs for one (p, q): the maxima lists per r and the resulting products.
struct CountingTable {
    std::vector<std::vector<std::pair<BinaryTree, BinaryTree>>> maxima;  // indexed by tamari(p+q) index of r
    std::map<std::pair<BinaryTree, BinaryTree>, Vect<BinaryTree>> products;
};

CountingTable build_table(int p, int q) {
    const int n = p + q;
    const auto ys = all_trees(p), yt = all_trees(q);
    const Poset& P = poset(Family::tamari, p);
    const Poset& Q = poset(Family::tamari, q);
    const Poset& R = poset(Family::tamari, n);
    std::vector<int> si, ti;
    for (const auto& s : ys) si.push_back(P.index(s.str()));
    for (const auto& t : yt) ti.push_back(Q.index(t.str()));
    std::vector<Permutation> gs, gt;
    for (const auto& s : ys) gs.push_back(gamma(s));
    for (const auto& t : yt) gt.push_back(gamma(t));

    CountingTable table;
    table.maxima.resize(static_cast<std::size_t>(R.size()));
    for (const auto& zeta : shuffles(p, q)) {
        const Permutation zi = zeta.inverse();
        std::vector<std::vector<int>> f(ys.size(), std::vector<int>(yt.size()));
        for (std::size_t a = 0; a < ys.size(); ++a)
            for (std::size_t b = 0; b < yt.size(); ++b) f[a][b] = R.index(lambda(concat_under(gs[a], gt[b]) * zi).str());
        for (int r = 0; r < R.size(); ++r) {
            std::vector<std::pair<std::size_t, std::size_t>> pre;
            for (std::size_t a = 0; a < ys.size(); ++a)
                for (std::size_t b = 0; b < yt.size(); ++b)
                    if (R.leq(f[a][b], r)) pre.emplace_back(a, b);
            if (pre.empty()) continue;
            bool found = false;
            for (const auto& [a, b] : pre) {
                bool is_max = std::all_of(pre.begin(), pre.end(), [&](const auto& o) {
                    return P.leq(si[o.first], si[a]) && Q.leq(ti[o.second], ti[b]);
                });
                if (!is_max) continue;
                table.maxima[static_cast<std::size_t>(r)].emplace_back(ys[a], yt[b]);
                table.products[{ys[a], yt[b]}].add(tree_from(R.key(r)), 1);
                found = true;
                break;
            }
            if (!found)
                throw std::logic_error("f_zeta preimage of [1, " + R.key(r) + "] has no maximum for zeta = " + zeta.str());
        }
    }
    return table;
}

const CountingTable& counting_table(int p, int q) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::shared_ptr<const CountingTable>> cache;
    {
        std::lock_guard lock(mu);
        auto it = cache.find({p, q});
        if (it != cache.end()) return *it->second;
    }
    auto built = std::make_shared<const CountingTable>(build_table(p, q));
    std::lock_guard lock(mu);
    return *cache.emplace(std::make_pair(p, q), std::move(built)).first->second;
}

}  // namespace

Vect<BinaryTree> ysym_product_F(const BinaryTree& t, const BinaryTree& s) {
    Vect<BinaryTree> out;
    for (const auto& parts : tree_splits(t, s.size())) out.add(attach(parts, s), 1);
    return out;
}

Tensor<BinaryTree> ysym_coproduct_F(const BinaryTree& t) {
    Tensor<BinaryTree> out;
    for (const auto& parts : tree_splits(t, 1)) out.add({parts[0], parts[1]}, 1);
    return out;
}

Vect<BinaryTree> ysym_M_to_F(const Vect<BinaryTree>& v) {
    return detail::upper_sum(v, Family::tamari, tree_rank, tree_key, tree_from, true);
}

Vect<BinaryTree> ysym_F_to_M(const Vect<BinaryTree>& v) {
    return detail::upper_sum(v, Family::tamari, tree_rank, tree_key, tree_from, false);
}

std::string_view route_name(ProductRoute r) {
    return r == ProductRoute::conversion ? "via_F_conversion" : "via_fzeta_count";
}

Vect<BinaryTree> ysym_product_M(const BinaryTree& s, const BinaryTree& t, ProductRoute route) {
    if (route == ProductRoute::conversion)
        return ysym_F_to_M(bilinear(ysym_M_to_F(Vect<BinaryTree>(s)), ysym_M_to_F(Vect<BinaryTree>(t)), ysym_product_F));
    const auto& products = counting_table(s.size(), t.size()).products;
    auto it = products.find({s, t});
    return it == products.end() ? Vect<BinaryTree>() : it->second;
}

Tensor<BinaryTree> ysym_coproduct_M(const BinaryTree& r) {
    Tensor<BinaryTree> out;
    const auto comps = progressive_decompose(r);
    for (std::size_t i = 0; i <= comps.size(); ++i) {
        BinaryTree s, t;
        for (std::size_t j = 0; j < comps.size(); ++j) {
            BinaryTree& side = j < i ? s : t;
            side = tree_concat_over(side, comps[j]);
        }
        out.add({s, t}, 1);
    }
    return out;
}

Tensor<BinaryTree> ysym_coproduct_M_via_F(const BinaryTree& r) {
    auto to_m = [](const BinaryTree& k) { return ysym_F_to_M(Vect<BinaryTree>(k)); };
    return tensor_map(linear(ysym_M_to_F(Vect<BinaryTree>(r)), ysym_coproduct_F), to_m, to_m);
}

std::vector<StructureConstant> ysym_structure_constants(int p, int q, ProductRoute route) {
    std::vector<StructureConstant> out;
    for (const auto& s : all_trees(p))
        for (const auto& t : all_trees(q))
            for (const auto& [r, c] : ysym_product_M(s, t, route)) out.push_back({s, t, r, c, route});
    return out;
}

BinaryTree f_zeta(const Permutation& zeta, const BinaryTree& s, const BinaryTree& t) {
    if (zeta.size() != s.size() + t.size()) throw invalid_input("f_zeta: zeta must have degree p + q");
    return lambda(concat_under(gamma(s), gamma(t)) * zeta.inverse());
}

std::vector<BinaryTree> f_zeta_image(const Permutation& zeta, int p, int q) {
    std::set<BinaryTree> img;
    for (const auto& s : all_trees(p))
        for (const auto& t : all_trees(q)) img.insert(f_zeta(zeta, s, t));
    return {img.begin(), img.end()};
}

std::vector<BinaryTree> lambda_phi_image(const Permutation& zeta, int p, int q) {
    if (zeta.size() != p + q) throw invalid_input("phi_zeta: zeta must have degree p + q");
    std::set<BinaryTree> img;
    const Permutation zi = zeta.inverse();
    for (const auto& u : all_permutations(p))
        for (const auto& v : all_permutations(q)) img.insert(lambda(concat_under(u, v) * zi));
    return {img.begin(), img.end()};
}

const std::vector<std::pair<BinaryTree, BinaryTree>>& f_zeta_maxima(int p, int q, const BinaryTree& r) {
    if (r.size() != p + q) throw invalid_input("f_zeta_maxima: r must have p + q nodes");
    return counting_table(p, q).maxima[static_cast<std::size_t>(poset(Family::tamari, p + q).index(r.str()))];
}

namespace {

HopfAlgebra<BinaryTree> make_ysym(bool monomial) {
    HopfAlgebra<BinaryTree> a;
    a.name = "ysym";
    a.basis_id = monomial ? "M_tree" : "F_tree";
    a.basis = all_trees;
    a.degree = [](const BinaryTree& t) { return t.size(); };
    if (monomial) {
        a.product = [](const BinaryTree& s, const BinaryTree& t) { return ysym_product_M(s, t); };
        a.coproduct = ysym_coproduct_M;
    } else {
        a.product = ysym_product_F;
        a.coproduct = ysym_coproduct_F;
    }
    return a;
}

}  // namespace

const HopfAlgebra<BinaryTree>& ysym_F() {
    static const HopfAlgebra<BinaryTree> a = make_ysym(false);
    return a;
}

const HopfAlgebra<BinaryTree>& ysym_M() {
    static const HopfAlgebra<BinaryTree> a = make_ysym(true);
    return a;
}

}  // namespace hopftrees
