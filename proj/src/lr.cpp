#include "hopftrees/lr.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "hopftrees/error.hpp"
#include "hopftrees/maps.hpp"
#include "hopftrees/posets.hpp"
#include "hopftrees/ysym.hpp"

namespace hopftrees {

Vect<BinaryTree> lr_product_Mstar(const BinaryTree& s, const BinaryTree& t) {
    return Vect<BinaryTree>(tree_concat_over(s, t));
}

std::string_view route_name(CoproductRoute r) {
    switch (r) {
        case CoproductRoute::dualize: return "dualize";
        case CoproductRoute::admissible: return "admissible";
        case CoproductRoute::intermediate: return "intermediate";
    }
    return {};
}

CoproductRoute parse_coproduct_route(std::string_view name) {
    for (auto r : {CoproductRoute::dualize, CoproductRoute::admissible, CoproductRoute::intermediate})
        if (name == route_name(r)) return r;
    throw invalid_input("unknown coproduct route \"" + std::string(name) + "\" (expected dualize, admissible or intermediate)");
}

Tensor<BinaryTree> lr_coproduct_Mstar(const BinaryTree& r, CoproductRoute route) {
    Tensor<BinaryTree> out;
    const int n = r.size();
    switch (route) {
        case CoproductRoute::dualize:
            for (int p = 0; p <= n; ++p)
                for (const auto& st : f_zeta_maxima(p, n - p, r)) out.add(st, 1);
            break;
        case CoproductRoute::admissible:
            for (const auto& s : admissible_node_subsets(r)) out.add(prune(r, s), 1);
            break;
        case CoproductRoute::intermediate: {
            const Poset& P = poset(Family::tamari, n);
            const int ri = P.index(r.str());
            for (const auto& s : all_subsets(n))
                if (P.leq(P.index(lambda(pi_R(s, n)).str()), ri)) out.add({restrict_tree(r, s), restrict_tree(r, s.complement())}, 1);
            break;
        }
    }
    return out;
}

Tensor<BinaryTree> lr_coproduct_Mstar_by_pairing(const BinaryTree& r) {
    // Coefficient of M*_s (x) M*_t is the coefficient of M_r in M_s M_t; tabulated once per degree.
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const std::map<BinaryTree, Tensor<BinaryTree>>>> cache;
    const int n = r.size();
    std::shared_ptr<const std::map<BinaryTree, Tensor<BinaryTree>>> table;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(n); it != cache.end()) table = it->second;
    }
    if (!table) {
        auto built = std::make_shared<std::map<BinaryTree, Tensor<BinaryTree>>>();
        for (int p = 0; p <= n; ++p)
            for (const auto& s : all_trees(p))
                for (const auto& t : all_trees(n - p))
                    for (const auto& [u, c] : ysym_product_M(s, t, ProductRoute::conversion)) (*built)[u].add({s, t}, c);
        std::lock_guard lock(mu);
        table = cache.emplace(n, std::move(built)).first->second;
    }
    auto it = table->find(r);
    return it == table->end() ? Tensor<BinaryTree>() : it->second;
}

Vect<Forest> nck_product(const Forest& f, const Forest& g) { return Vect<Forest>(forest_concat(f, g)); }

Tensor<Forest> nck_coproduct(const Forest& f) {
    Tensor<Forest> out;
    for (auto& cut : admissible_cuts(f)) out.add(cut, 1);
    return out;
}

Vect<Forest> ck_product(const Forest& f, const Forest& g) { return Vect<Forest>(unorder(forest_concat(f, g))); }

Tensor<Forest> ck_coproduct(const Forest& f) {
    Tensor<Forest> out;
    for (const auto& [a, b] : admissible_cuts(f)) out.add({unorder(a), unorder(b)}, 1);
    return out;
}

Vect<Forest> ck_unorder(const Vect<Forest>& v) {
    return linear(v, [](const Forest& f) { return Vect<Forest>(unorder(f)); });
}

Vect<BinaryTree> Phi(const Vect<Forest>& v) {
    return linear(v, [](const Forest& f) { return Vect<BinaryTree>(forest_to_tree(f)); });
}

Vect<Forest> Phi_inverse(const Vect<BinaryTree>& v) {
    return linear(v, [](const BinaryTree& t) { return Vect<Forest>(tree_to_forest(t)); });
}

Vect<Forest> embed_nsym_nck(const Vect<Composition>& v) {
    return linear(v, [](const Composition& a) {
        std::vector<OrderedTree> trees;
        for (int part : a.parts()) trees.push_back(ladder(part));
        return Vect<Forest>(Forest(std::move(trees)));
    });
}

Vect<BinaryTree> embed_nsym_lr(const Vect<Composition>& v) {
    return linear(v, [](const Composition& a) { return Vect<BinaryTree>(C_map(a.to_subset(), a.degree())); });
}

Vect<Partition> project_sym(const Vect<Composition>& v) {
    return linear(v, [](const Composition& a) { return Vect<Partition>(Partition(a.parts())); });
}

Vect<Forest> embed_sym_ck(const Vect<Partition>& v) {
    return linear(v, [](const Partition& h) {
        std::vector<OrderedTree> trees;
        for (int part : h.parts()) trees.push_back(ladder(part));
        return Vect<Forest>(unorder(Forest(std::move(trees))));
    });
}

Vect<BinaryTree> ysym_reflect(const Vect<BinaryTree>& v) {
    return linear(v, [](const BinaryTree& t) { return Vect<BinaryTree>(reflect(t)); });
}

Vect<Forest> nck_reflect(const Vect<Forest>& v) {
    return linear(v, [](const Forest& f) { return Vect<Forest>(forest_reflect(f)); });
}

const HopfAlgebra<BinaryTree>& lr_Mstar() {
    static const HopfAlgebra<BinaryTree> a = [] {
        HopfAlgebra<BinaryTree> h;
        h.name = "lr";
        h.basis_id = "Mstar_tree";
        h.basis = all_trees;
        h.degree = [](const BinaryTree& t) { return t.size(); };
        h.product = lr_product_Mstar;
        h.coproduct = [](const BinaryTree& r) { return lr_coproduct_Mstar(r); };
        return h;
    }();
    return a;
}

namespace {

HopfAlgebra<Forest> make_forest_algebra(bool unordered) {
    HopfAlgebra<Forest> h;
    h.name = unordered ? "ck" : "nck";
    h.basis_id = unordered ? "uforest" : "forest";
    if (unordered) {
        h.basis = all_unordered_forests;
        h.product = ck_product;
        h.coproduct = ck_coproduct;
    } else {
        h.basis = all_forests;
        h.product = nck_product;
        h.coproduct = nck_coproduct;
    }
    h.degree = [](const Forest& f) { return f.size(); };
    return h;
}

}  // namespace

const HopfAlgebra<Forest>& nck() {
    static const HopfAlgebra<Forest> a = make_forest_algebra(false);
    return a;
}

const HopfAlgebra<Forest>& ck() {
    static const HopfAlgebra<Forest> a = make_forest_algebra(true);
    return a;
}

}  // namespace hopftrees
