#include "hopftrees/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <functional>
#include <map>
#include <optional>

#include "hopftrees/algebra.hpp"
#include "hopftrees/antipode.hpp"
#include "hopftrees/error.hpp"
#include "hopftrees/lr.hpp"
#include "hopftrees/maps.hpp"
#include "hopftrees/morphisms.hpp"
#include "hopftrees/posets.hpp"
#include "hopftrees/qsym.hpp"
#include "hopftrees/ssym.hpp"
#include "hopftrees/structure.hpp"
#include "hopftrees/verify.hpp"
#include "hopftrees/ysym.hpp"

namespace hopftrees::cli {

namespace {

// Raised when a check reached from the command line fails; maps to exit status 1.
struct verification_failure {};

int to_int(const std::string& s) {
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) throw parse_error(s, static_cast<std::size_t>(p - s.data()), "an integer");
    return v;
}

Permutation perm(const std::string& s) { return Permutation::parse(s); }
BinaryTree tree(const std::string& s) { return BinaryTree::parse(s); }
Forest forest(const std::string& s) { return Forest::parse(s); }
Composition comp(const std::string& s) { return Composition::parse(s); }
Partition part(const std::string& s) { return Partition::parse(s); }

template <class K>
void list(std::ostream& out, const std::vector<K>& keys) {
    for (const auto& k : keys) out << key_str(k) << '\n';
}

template <class A, class B>
std::string tensor_id(const HopfAlgebra<A>& a, const HopfAlgebra<B>& b) {
    return a.basis_id + "\xE2\x8A\x97" + b.basis_id;
}

void report(std::ostream& out, const CheckResult& r) {
    out << r.describe() << '\n';
    if (!r.ok) throw verification_failure{};
}

// ---------------------------------------------------------------- algebra selection

const std::map<std::string, std::vector<std::string>>& algebra_bases() {
    static const std::map<std::string, std::vector<std::string>> m = {
        {"ssym", {"F", "M"}}, {"ysym", {"F", "M"}}, {"qsym", {"F", "M"}}, {"nsym", {"Mstar"}},
        {"sym", {"h"}},       {"lr", {"Mstar"}},    {"nck", {"forest"}},  {"ck", {"uforest"}},
    };
    return m;
}

std::string resolve_basis(const std::string& alg, const std::string& basis) {
    auto it = algebra_bases().find(alg);
    if (it == algebra_bases().end()) throw invalid_input("unknown algebra \"" + alg + "\" (expected ssym, ysym, qsym, nsym, sym, lr, nck or ck)");
    if (basis.empty()) return it->second.front();
    for (const auto& b : it->second)
        if (b == basis) return b;
    throw invalid_input("algebra " + alg + " has no basis \"" + basis + "\"");
}

// Calls v(algebra, parse) for the selected algebra and basis.
template <class V>
void with_algebra(const std::string& alg, const std::string& basis_in, V&& v) {
    const std::string b = resolve_basis(alg, basis_in);
    if (alg == "ssym") return v(b == "M" ? ssym_M() : ssym_F(), perm);
    if (alg == "ysym") return v(b == "M" ? ysym_M() : ysym_F(), tree);
    if (alg == "qsym") return v(b == "M" ? qsym_M() : qsym_F(), comp);
    if (alg == "nsym") return v(nsym(), comp);
    if (alg == "sym") return v(sym(), part);
    if (alg == "lr") return v(lr_Mstar(), tree);
    if (alg == "nck") return v(nck(), forest);
    return v(ck(), [](const std::string& s) { return unorder(forest(s)); });
}

ProductRoute parse_product_route(const std::string& s) {
    for (auto r : {ProductRoute::conversion, ProductRoute::counting})
        if (s == route_name(r)) return r;
    if (s == "conversion") return ProductRoute::conversion;
    if (s == "counting") return ProductRoute::counting;
    throw invalid_input("unknown product route \"" + s + "\" (expected conversion or counting)");
}

void need(const std::vector<std::string>& v, std::size_t count, const std::string& what) {
    if (v.size() != count) throw invalid_input(what + " takes " + std::to_string(count) + " operand(s), got " + std::to_string(v.size()));
}

// ---------------------------------------------------------------- map operations

struct MapArgs {
    std::vector<std::string> v;
    std::optional<int> n;
    std::string basis;
    std::string algebra;
};

struct MapOp {
    std::string name;
    std::vector<std::string> operations;
    int arity;  // -1: two or more
    std::vector<std::string> example;
    std::function<void(const MapArgs&, std::ostream&)> fn;
};

std::vector<MapOp> make_map_ops() {
    std::vector<MapOp> ops;
    auto add = [&](std::string name, std::vector<std::string> operations, int arity, std::vector<std::string> example,
                   std::function<void(const MapArgs&, std::ostream&)> fn) {
        ops.push_back({std::move(name), std::move(operations), arity, std::move(example), std::move(fn)});
    };
    using O = std::ostream;
    // combinatorics of permutations
    add("standardize", {"standardize"}, 1, {"5,6,4,9,7,3"}, [](const MapArgs& a, O& o) {
        std::vector<int> seq;
        std::size_t start = 0;
        while (start <= a.v[0].size()) {
            auto end = a.v[0].find(',', start);
            if (end == std::string::npos) end = a.v[0].size();
            seq.push_back(to_int(a.v[0].substr(start, end - start)));
            start = end + 1;
        }
        o << standardize(seq).str() << '\n';
    });
    add("inversions", {"inversions"}, 1, {"p:312"}, [](const MapArgs& a, O& o) {
        for (const auto& [i, j] : inversions(perm(a.v[0]))) o << '(' << i << ',' << j << ")\n";
    });
    add("descents", {"descents"}, 1, {"p:3142"}, [](const MapArgs& a, O& o) { o << descents(perm(a.v[0])).str() << '\n'; });
    add("global-descents", {"global_descents"}, 1, {"p:3412"},
        [](const MapArgs& a, O& o) { o << global_descents(perm(a.v[0])).str() << '\n'; });
    auto binary_perm = [&](std::string name, std::string op, Permutation (*f)(const Permutation&, const Permutation&)) {
        add(std::move(name), {std::move(op)}, 2, {"p:21", "p:1"}, [f](const MapArgs& a, O& o) { o << f(perm(a.v[0]), perm(a.v[1])).str() << '\n'; });
    };
    binary_perm("graft-perm", "graft_perm", graft_perm);
    binary_perm("graft-perm-under", "graft_perm_under", graft_perm_under);
    binary_perm("concat-over", "concat_over", concat_over);
    binary_perm("concat-under", "concat_under", concat_under);
    add("gd-decompose", {"gd_decompose"}, 1, {"p:798563421"}, [](const MapArgs& a, O& o) { list(o, gd_decompose(perm(a.v[0]))); });
    add("avoids", {"avoids"}, 2, {"p:2413", "132"},
        [](const MapArgs& a, O& o) { o << (avoids(perm(a.v[0]), a.v[1]) ? "true" : "false") << '\n'; });
    add("pi-R", {"pi_R"}, 2, {"{1,3}", "4"}, [](const MapArgs& a, O& o) {
        const int n = to_int(a.v[1]);
        o << pi_R(Subset::parse(a.v[0], n), n).str() << '\n';
    });
    add("restrict-perm", {"restrict_perm"}, 2, {"p:3142", "{1,3}"}, [](const MapArgs& a, O& o) {
        const Permutation s = perm(a.v[0]);
        o << restrict_perm(s, Subset::parse(a.v[1], s.size())).str() << '\n';
    });
    add("rho-step", {"rho_descent_step"}, 1, {"p:4321"}, [](const MapArgs& a, O& o) {
        auto next = rho_descent_step(perm(a.v[0]));
        o << (next ? next->str() : "none") << '\n';
    });
    // combinatorics of trees and forests
    auto binary_tree = [&](std::string name, std::string op, BinaryTree (*f)(const BinaryTree&, const BinaryTree&)) {
        add(std::move(name), {std::move(op)}, 2, {"(..)", "(.(..))"}, [f](const MapArgs& a, O& o) { o << f(tree(a.v[0]), tree(a.v[1])).str() << '\n'; });
    };
    binary_tree("graft-tree", "graft_tree", graft_tree);
    binary_tree("tree-concat-over", "tree_concat_over", tree_concat_over);
    binary_tree("tree-concat-under", "tree_concat_under", tree_concat_under);
    add("split-root", {"split_root"}, 1, {"((..).)"}, [](const MapArgs& a, O& o) {
        auto [l, r] = split_root(tree(a.v[0]));
        o << l.str() << '\n' << r.str() << '\n';
    });
    add("comb", {"comb"}, 1, {"3"}, [](const MapArgs& a, O& o) { o << comb(to_int(a.v[0])).str() << '\n'; });
    add("progressive-decompose", {"progressive_decompose"}, 1, {"(.((..).))"},
        [](const MapArgs& a, O& o) { list(o, progressive_decompose(tree(a.v[0]))); });
    add("is-progressive", {"is_progressive"}, 1, {"((..).)"},
        [](const MapArgs& a, O& o) { o << (is_progressive(tree(a.v[0])) ? "true" : "false") << '\n'; });
    add("left-leaf-set", {"left_leaf_set"}, 1, {"((..).)"}, [](const MapArgs& a, O& o) { o << left_leaf_set(tree(a.v[0])).str() << '\n'; });
    add("right-branch-set", {"right_branch_set"}, 1, {"(.(..))"},
        [](const MapArgs& a, O& o) { o << right_branch_set(tree(a.v[0])).str() << '\n'; });
    add("tamari-covers-up", {"tamari_covers_up"}, 1, {"((..).)"}, [](const MapArgs& a, O& o) { list(o, tamari_covers_up(tree(a.v[0]))); });
    add("tamari-covers-down", {"tamari_covers_down"}, 1, {"(.(..))"},
        [](const MapArgs& a, O& o) { list(o, tamari_covers_down(tree(a.v[0]))); });
    add("node-labeling", {"node_labeling"}, 1, {"((..).)"}, [](const MapArgs& a, O& o) {
        const NodeLabeling lab = node_labeling(tree(a.v[0]));
        for (int x = 1; x <= lab.size(); ++x) {
            const auto i = static_cast<std::size_t>(x);
            o << x << "\tleft=" << lab.left[i] << "\tright=" << lab.right[i] << "\tparent=" << lab.parent[i] << "\tlow=" << lab.low[i]
              << '\n';
        }
    });
    add("admissible-subsets", {"admissible_node_subsets"}, 1, {"((..).)"},
        [](const MapArgs& a, O& o) { list(o, admissible_node_subsets(tree(a.v[0]))); });
    add("prune", {"prune"}, 2, {"((..).)", "{1}"}, [](const MapArgs& a, O& o) {
        const BinaryTree t = tree(a.v[0]);
        auto [kept, cut] = prune(t, Subset::parse(a.v[1], t.size()));
        o << kept.str() << '\n' << cut.str() << '\n';
    });
    add("restrict-tree", {"restrict_tree"}, 2, {"((..).)", "{2}"}, [](const MapArgs& a, O& o) {
        const BinaryTree t = tree(a.v[0]);
        o << restrict_tree(t, Subset::parse(a.v[1], t.size())).str() << '\n';
    });
    add("reflect", {"reflect"}, 1, {"((..).)"}, [](const MapArgs& a, O& o) { o << reflect(tree(a.v[0])).str() << '\n'; });
    add("phi", {"forest_to_tree"}, 1, {"(()) ()"}, [](const MapArgs& a, O& o) { o << forest_to_tree(forest(a.v[0])).str() << '\n'; });
    add("phi-inverse", {"tree_to_forest"}, 1, {"((..).)"}, [](const MapArgs& a, O& o) { o << tree_to_forest(tree(a.v[0])).str() << '\n'; });
    add("ladder", {"ladder"}, 1, {"3"}, [](const MapArgs& a, O& o) { o << ladder(to_int(a.v[0])).str() << '\n'; });
    add("unorder", {"unorder"}, 1, {"() (())"}, [](const MapArgs& a, O& o) { o << unorder(forest(a.v[0])).str() << '\n'; });
    add("tree-splits", {"tree_splits"}, 2, {"((..).)", "1"}, [](const MapArgs& a, O& o) {
        for (const auto& parts : tree_splits(tree(a.v[0]), to_int(a.v[1]))) {
            for (std::size_t i = 0; i < parts.size(); ++i) o << (i ? " " : "") << parts[i].str();
            o << '\n';
        }
    });
    add("attach", {"attach"}, -1, {"(..)", ".", "(..)"}, [](const MapArgs& a, O& o) {
        std::vector<BinaryTree> parts;
        for (std::size_t i = 0; i + 1 < a.v.size(); ++i) parts.push_back(tree(a.v[i]));
        o << attach(parts, tree(a.v.back())).str() << '\n';
    });
    // order-theoretic maps between weak, Tamari and Boolean posets
    for (auto m : {MapName::lambda, MapName::gamma, MapName::gamma_min, MapName::rho, MapName::des, MapName::gdes, MapName::Z, MapName::C,
                   MapName::L, MapName::R}) {
        static const std::map<MapName, std::pair<std::string, std::vector<std::string>>> info = {
            {MapName::lambda, {"lambda", {"p:2413"}}},     {MapName::gamma, {"gamma", {"(.(..))"}}},
            {MapName::gamma_min, {"gamma_min", {"(.(..))"}}}, {MapName::rho, {"rho", {"p:2413"}}},
            {MapName::des, {"descents", {"p:2413"}}},      {MapName::gdes, {"global_descents", {"p:3412"}}},
            {MapName::Z, {"Z_map", {"{1}", "--n", "3"}}},  {MapName::C, {"C_map", {"{1}", "--n", "3"}}},
            {MapName::L, {"left_leaf_set", {"((..).)"}}},  {MapName::R, {"right_branch_set", {"(.(..))"}}},
        };
        const auto& [op, example] = info.at(m);
        add(std::string(map_name(m)), {op, "apply_map"}, 1, example, [m](const MapArgs& a, O& o) {
            int n = 0;
            switch (map_source(m)) {
                case Family::weak: n = perm(a.v[0]).size(); break;
                case Family::tamari: n = tree(a.v[0]).size(); break;
                case Family::boolean:
                    if (!a.n) throw invalid_input("map " + std::string(map_name(m)) + " needs --n");
                    n = *a.n;
                    break;
            }
            o << apply_map(m, a.v[0], n) << '\n';
        });
    }
    // Hopf morphisms, splittings and the forest isomorphism
    add("hopf-D", {"morphism_D"}, 1, {"p:2413", "--basis", "M"}, [](const MapArgs& a, O& o) {
        const Basis b = parse_basis(a.basis.empty() ? "F" : a.basis);
        write_expansion(o, (b == Basis::M ? qsym_M() : qsym_F()).basis_id, morphism_D(Vect<Permutation>(perm(a.v[0])), b));
    });
    add("hopf-Lambda", {"morphism_Lambda"}, 1, {"p:42351", "--basis", "M"}, [](const MapArgs& a, O& o) {
        const Basis b = parse_basis(a.basis.empty() ? "F" : a.basis);
        write_expansion(o, (b == Basis::M ? ysym_M() : ysym_F()).basis_id, morphism_Lambda(Vect<Permutation>(perm(a.v[0])), b));
    });
    add("hopf-L", {"morphism_L"}, 1, {"((..).)", "--basis", "F"}, [](const MapArgs& a, O& o) {
        const Basis b = parse_basis(a.basis.empty() ? "F" : a.basis);
        write_expansion(o, (b == Basis::M ? qsym_M() : qsym_F()).basis_id, morphism_L(Vect<BinaryTree>(tree(a.v[0])), b));
    });
    add("split-C", {"splitting_C"}, 1, {"c:2,1"},
        [](const MapArgs& a, O& o) { write_expansion(o, ysym_M().basis_id, splitting_C(Vect<Composition>(comp(a.v[0])))); });
    add("split-Gamma", {"splitting_Gamma"}, 1, {"((..).)"},
        [](const MapArgs& a, O& o) { write_expansion(o, ssym_M().basis_id, splitting_Gamma(Vect<BinaryTree>(tree(a.v[0])))); });
    add("split-Z", {"splitting_Z"}, 1, {"c:1,2"},
        [](const MapArgs& a, O& o) { write_expansion(o, ssym_M().basis_id, splitting_Z(Vect<Composition>(comp(a.v[0])))); });
    add("Phi", {"Phi"}, 1, {"(()) ()"}, [](const MapArgs& a, O& o) { write_expansion(o, lr_Mstar().basis_id, Phi(Vect<Forest>(forest(a.v[0])))); });
    add("Phi-inverse", {"Phi_inverse"}, 1, {"((..).)"},
        [](const MapArgs& a, O& o) { write_expansion(o, nck().basis_id, Phi_inverse(Vect<BinaryTree>(tree(a.v[0])))); });
    add("involution", {"ysym_reflect", "nck_reflect", "qsym_reverse"}, 1, {"((..).)", "--algebra", "ysym"}, [](const MapArgs& a, O& o) {
        if (a.algebra == "ysym") return write_expansion(o, ysym_M().basis_id, ysym_reflect(Vect<BinaryTree>(tree(a.v[0]))));
        if (a.algebra == "nck") return write_expansion(o, nck().basis_id, nck_reflect(Vect<Forest>(forest(a.v[0]))));
        if (a.algebra == "qsym") return write_expansion(o, qsym_M().basis_id, qsym_reverse(Vect<Composition>(comp(a.v[0]))));
        throw invalid_input("involution needs --algebra ysym, nck or qsym");
    });
    add("embed-nsym", {"embed_nsym_nck", "embed_nsym_lr"}, 1, {"c:2,1", "--algebra", "nck"}, [](const MapArgs& a, O& o) {
        if (a.algebra == "nck") return write_expansion(o, nck().basis_id, embed_nsym_nck(Vect<Composition>(comp(a.v[0]))));
        if (a.algebra == "lr") return write_expansion(o, lr_Mstar().basis_id, embed_nsym_lr(Vect<Composition>(comp(a.v[0]))));
        throw invalid_input("embed-nsym needs --algebra nck or lr");
    });
    add("project-sym", {"project_sym"}, 1, {"c:1,2"},
        [](const MapArgs& a, O& o) { write_expansion(o, sym().basis_id, project_sym(Vect<Composition>(comp(a.v[0])))); });
    add("embed-sym-ck", {"embed_sym_ck"}, 1, {"h:2,1"},
        [](const MapArgs& a, O& o) { write_expansion(o, ck().basis_id, embed_sym_ck(Vect<Partition>(part(a.v[0])))); });
    add("ck-unorder", {"ck_unorder"}, 1, {"() (())"},
        [](const MapArgs& a, O& o) { write_expansion(o, ck().basis_id, ck_unorder(Vect<Forest>(forest(a.v[0])))); });
    // M-product machinery
    add("f-zeta", {"f_zeta"}, 3, {"p:21", "(..)", "(..)"},
        [](const MapArgs& a, O& o) { o << f_zeta(perm(a.v[0]), tree(a.v[1]), tree(a.v[2])).str() << '\n'; });
    add("f-zeta-image", {"f_zeta_image"}, 3, {"p:132", "1", "2"},
        [](const MapArgs& a, O& o) { list(o, f_zeta_image(perm(a.v[0]), to_int(a.v[1]), to_int(a.v[2]))); });
    add("lambda-phi-image", {"lambda_phi_image"}, 3, {"p:132", "1", "2"},
        [](const MapArgs& a, O& o) { list(o, lambda_phi_image(perm(a.v[0]), to_int(a.v[1]), to_int(a.v[2]))); });
    add("f-zeta-maxima", {"f_zeta_maxima"}, 3, {"1", "1", "(.(..))"}, [](const MapArgs& a, O& o) {
        for (const auto& [s, t] : f_zeta_maxima(to_int(a.v[0]), to_int(a.v[1]), tree(a.v[2]))) o << s.str() << '\t' << t.str() << '\n';
    });
    add("coradical-level", {"coradical_level"}, 1, {"(.((..).))"}, [](const MapArgs& a, O& o) { o << coradical_level(tree(a.v[0])) << '\n'; });
    return ops;
}

const std::vector<MapOp>& map_ops() {
    static const std::vector<MapOp> ops = make_map_ops();
    return ops;
}

const MapOp& find_map_op(const std::string& name) {
    for (const auto& op : map_ops())
        if (op.name == name) return op;
    throw invalid_input("unknown map \"" + name + "\"");
}

// ---------------------------------------------------------------- subcommands

struct Options {
    std::string algebra, basis, route, to, poset, morphism, suite = "all", what, name, cache_dir, check, f, g;
    std::vector<std::string> operands;
    std::optional<int> n, max_n, p, q;
    int workers = 1;
    bool explicit_formula = false, kappa = false, leq = false, interval = false, covers = false, nullity = false, levels = false;
    std::vector<int> constants;
    std::vector<std::string> test_key, cocycle;
};

void do_product(const Options& o, std::ostream& out) {
    if (!o.constants.empty()) {
        if (o.algebra != "ysym" || resolve_basis(o.algebra, o.basis) != "M") throw invalid_input("--constants needs --algebra ysym --basis M");
        const ProductRoute route = o.route.empty() ? ProductRoute::conversion : parse_product_route(o.route);
        for (const auto& c : ysym_structure_constants(o.constants[0], o.constants[1], route))
            out << c.s.str() << '\t' << c.t.str() << '\t' << c.r.str() << '\t' << scalar_str(c.coefficient) << '\t' << route_name(c.provenance) << '\n';
        return;
    }
    need(o.operands, 2, "product");
    if (!o.route.empty()) {
        if (o.algebra != "ysym" || resolve_basis(o.algebra, o.basis) != "M") throw invalid_input("--route applies to --algebra ysym --basis M");
        return write_expansion(out, ysym_M().basis_id, ysym_product_M(tree(o.operands[0]), tree(o.operands[1]), parse_product_route(o.route)));
    }
    with_algebra(o.algebra, o.basis, [&](const auto& A, auto parse) {
        write_expansion(out, A.basis_id, A.product(parse(o.operands[0]), parse(o.operands[1])));
    });
}

void do_coproduct(const Options& o, std::ostream& out) {
    need(o.operands, 1, "coproduct");
    if (!o.route.empty()) {
        if (o.algebra != "lr") throw invalid_input("--route applies to --algebra lr");
        const BinaryTree r = tree(o.operands[0]);
        const auto t = o.route == "pairing" ? lr_coproduct_Mstar_by_pairing(r) : lr_coproduct_Mstar(r, parse_coproduct_route(o.route));
        return write_expansion(out, tensor_id(lr_Mstar(), lr_Mstar()), t);
    }
    with_algebra(o.algebra, o.basis, [&](const auto& A, auto parse) {
        write_expansion(out, tensor_id(A, A), A.coproduct(parse(o.operands[0])));
    });
}

void do_antipode(const Options& o, std::ostream& out) {
    need(o.operands, 1, "antipode");
    if (o.explicit_formula || o.kappa) {
        if (o.algebra != "ysym" || resolve_basis(o.algebra, o.basis) != "M") throw invalid_input("--explicit and --kappa need --algebra ysym --basis M");
        const BinaryTree t = tree(o.operands[0]);
        if (o.kappa) {
            for (const auto& [s, k] : antipode_kappa(t)) out << s.str() << '\t' << k << '\n';
            return;
        }
        return write_expansion(out, ysym_M().basis_id, antipode_ysym_M_explicit(t));
    }
    with_algebra(o.algebra, o.basis, [&](const auto& A, auto parse) { write_expansion(out, A.basis_id, antipode(A, parse(o.operands[0]))); });
}

void do_convert(const Options& o, std::ostream& out) {
    need(o.operands, 1, "convert");
    const Basis to = parse_basis(o.to);
    const std::string& x = o.operands[0];
    if (o.algebra == "ssym") {
        const Vect<Permutation> v(perm(x));
        return write_expansion(out, (to == Basis::M ? ssym_M() : ssym_F()).basis_id, to == Basis::M ? ssym_F_to_M(v) : ssym_M_to_F(v));
    }
    if (o.algebra == "ysym") {
        const Vect<BinaryTree> v(tree(x));
        return write_expansion(out, (to == Basis::M ? ysym_M() : ysym_F()).basis_id, to == Basis::M ? ysym_F_to_M(v) : ysym_M_to_F(v));
    }
    if (o.algebra == "qsym") {
        const Vect<Composition> v(comp(x));
        return write_expansion(out, (to == Basis::M ? qsym_M() : qsym_F()).basis_id, to == Basis::M ? qsym_F_to_M(v) : qsym_M_to_F(v));
    }
    throw invalid_input("convert needs --algebra ssym, ysym or qsym");
}

int infer_n(Family f, const std::string& key, const std::optional<int>& n) {
    if (n) return *n;
    if (f == Family::weak) return perm(key).size();
    if (f == Family::tamari) return tree(key).size();
    throw invalid_input("the boolean poset needs --n");
}

void do_mobius(const Options& o, std::ostream& out) {
    if (!o.check.empty()) {
        if (!o.n) throw invalid_input("--check needs --n");
        const MapName f = parse_map_name(o.f);
        if (o.check == "order") return report(out, check_order_preserving(f, *o.n));
        const MapName g = parse_map_name(o.g);
        if (o.check == "galois") return report(out, check_galois(f, g, *o.n));
        if (o.check == "rota") return report(out, rota_transfer_check(f, g, *o.n));
        throw invalid_input("unknown check \"" + o.check + "\" (expected order, galois or rota)");
    }
    const Family fam = parse_family(o.poset);
    if (o.operands.empty()) throw invalid_input("mobius needs at least one element");
    const Poset& P = poset(fam, infer_n(fam, o.operands[0], o.n));
    const int x = P.index(o.operands[0]);
    if (o.covers) {
        need(o.operands, 1, "mobius --covers");
        for (int y : P.covers_up(x)) out << P.key(y) << '\n';
        return;
    }
    need(o.operands, 2, "mobius");
    const int y = P.index(o.operands[1]);
    if (o.leq) {
        out << (P.leq(x, y) ? "true" : "false") << '\n';
    } else if (o.interval) {
        for (int z : P.interval(x, y)) out << P.key(z) << '\n';
    } else {
        out << moebius(P, P.key(x), P.key(y)) << '\n';
    }
}

void do_kernel(const Options& o, std::ostream& out) {
    const Morphism m = parse_morphism(o.morphism);
    if (!o.cocycle.empty()) {
        need(o.cocycle, 2, "--cocycle");
        switch (m) {
            case Morphism::Lambda: return write_expansion(out, ssym_M().basis_id, cocycle_Lambda(tree(o.cocycle[0]), tree(o.cocycle[1])));
            case Morphism::L: return write_expansion(out, ysym_M().basis_id, cocycle_L(comp(o.cocycle[0]), comp(o.cocycle[1])));
            case Morphism::D: return write_expansion(out, ssym_M().basis_id, cocycle_D(comp(o.cocycle[0]), comp(o.cocycle[1])));
        }
    }
    if (!o.test_key.empty()) {
        const std::string& k = o.test_key[0];
        const bool in = m == Morphism::L ? in_hopf_kernel(Vect<BinaryTree>(tree(k))) : in_hopf_kernel(m, Vect<Permutation>(perm(k)));
        out << (in ? "true" : "false") << '\n';
        return;
    }
    if (!o.check.empty()) {
        if (o.check != "cocycles") throw invalid_input("kernel --check accepts only \"cocycles\"");
        if (!o.n) throw invalid_input("--check cocycles needs --n");
        return report(out, cocycle_check(m, *o.n));
    }
    if (!o.n) throw invalid_input("kernel needs --n");
    if (o.nullity) {
        out << kernel_nullity(m, *o.n) << '\n';
        return;
    }
    switch (m) {
        case Morphism::Lambda: return list(out, hopf_kernel_basis_Lambda(*o.n));
        case Morphism::L: return list(out, hopf_kernel_basis_L(*o.n));
        case Morphism::D: return list(out, hopf_kernel_basis_D(*o.n));
    }
}

void do_primitives(const Options& o, std::ostream& out) {
    if (!o.n) throw invalid_input("primitives needs --n");
    if (!o.check.empty()) {
        if (o.check != "grading") throw invalid_input("primitives --check accepts only \"grading\"");
        return report(out, grading_check(*o.n));
    }
    if (o.levels) {
        for (const auto& g : grading(*o.n)) out << g.tree.str() << '\t' << g.level << '\n';
        return;
    }
    list(out, primitives_basis(*o.n));
}

void do_dims(const Options& o, std::ostream& out) {
    if (!o.n) throw invalid_input("dims needs --n");
    const int n = *o.n;
    const std::string s = std::to_string(n);
    if (o.what == "kernel") {
        out << "a_" << s << '=' << kernel_dim_a(n) << " b_" << s << '=' << kernel_dim_b(n) << '\n';
    } else if (o.what == "nullity") {
        out << "Lambda=" << kernel_nullity(Morphism::Lambda, n) << " L=" << kernel_nullity(Morphism::L, n)
            << " D=" << kernel_nullity(Morphism::D, n) << '\n';
    } else if (o.what == "catalan") {
        out << "c_" << s << '=' << catalan(n) << '\n';
    } else if (o.what == "primitives") {
        out << "p_" << s << '=' << primitives_basis(n).size() << '\n';
    } else if (o.what == "forests") {
        out << "planar=" << all_forests(n).size() << " unordered=" << all_unordered_forests(n).size() << '\n';
    } else if (o.what == "hilbert") {
        report(out, hilbert_check(n));
    } else {
        throw invalid_input("unknown --what \"" + o.what + "\" (expected kernel, nullity, catalan, primitives, forests or hilbert)");
    }
}

bool do_verify(const Options& o, std::ostream& out) {
    std::vector<std::string> names;
    if (o.suite == "all")
        names = suite_names();
    else
        names.push_back(o.suite);
    bool ok = true;
    for (const auto& s : names) {
        const SuiteReport r = run_suite(s, o.max_n, o.workers);
        write_report(out, r);
        ok = ok && r.ok();
    }
    return ok;
}

void do_map(const Options& o, std::ostream& out) {
    const MapOp& op = find_map_op(o.name);
    if (op.arity >= 0)
        need(o.operands, static_cast<std::size_t>(op.arity), "map " + op.name);
    else if (o.operands.size() < 2)
        throw invalid_input("map " + op.name + " takes at least 2 operands");
    op.fn({o.operands, o.n, o.basis, o.algebra}, out);
}

}  // namespace

const std::vector<Binding>& operation_bindings() {
    static const std::vector<Binding> bindings = [] {
        std::vector<Binding> b;
        auto bind = [&](std::string sub, std::vector<std::string> ops, std::vector<std::string> example) {
            for (auto& op : ops) b.push_back({sub, op, example});
        };
        bind("product", {"ssym_product_F"}, {"product", "--algebra", "ssym", "--basis", "F", "p:12", "p:1"});
        bind("product", {"ssym_product_M"}, {"product", "--algebra", "ssym", "--basis", "M", "p:12", "p:1"});
        bind("product", {"ysym_product_F"}, {"product", "--algebra", "ysym", "--basis", "F", "(..)", "(..)"});
        bind("product", {"ysym_product_M"}, {"product", "--algebra", "ysym", "--basis", "M", "(..)", "(..)"});
        bind("product", {"ysym_product_M"}, {"product", "--algebra", "ysym", "--basis", "M", "--route", "counting", "(..)", "(..)"});
        bind("product", {"ysym_structure_constants"}, {"product", "--algebra", "ysym", "--basis", "M", "--constants", "2", "1"});
        bind("product", {"qsym_product_M"}, {"product", "--algebra", "qsym", "--basis", "M", "c:1", "c:2"});
        bind("product", {"qsym_product_F"}, {"product", "--algebra", "qsym", "--basis", "F", "c:1", "c:2"});
        bind("product", {"nsym_product"}, {"product", "--algebra", "nsym", "c:1", "c:2"});
        bind("product", {"sym_product"}, {"product", "--algebra", "sym", "h:1", "h:2"});
        bind("product", {"lr_product_Mstar"}, {"product", "--algebra", "lr", "(..)", "(..)"});
        bind("product", {"nck_product", "forest_concat"}, {"product", "--algebra", "nck", "()", "(())"});
        bind("product", {"ck_product"}, {"product", "--algebra", "ck", "()", "(())"});
        bind("coproduct", {"ssym_coproduct_F"}, {"coproduct", "--algebra", "ssym", "--basis", "F", "p:312"});
        bind("coproduct", {"ssym_coproduct_M"}, {"coproduct", "--algebra", "ssym", "--basis", "M", "p:312"});
        bind("coproduct", {"ysym_coproduct_F"}, {"coproduct", "--algebra", "ysym", "--basis", "F", "((..).)"});
        bind("coproduct", {"ysym_coproduct_M"}, {"coproduct", "--algebra", "ysym", "--basis", "M", "((..).)"});
        bind("coproduct", {"qsym_coproduct_M"}, {"coproduct", "--algebra", "qsym", "--basis", "M", "c:2,1"});
        bind("coproduct", {"qsym_coproduct_F"}, {"coproduct", "--algebra", "qsym", "--basis", "F", "c:2,1"});
        bind("coproduct", {"nsym_coproduct"}, {"coproduct", "--algebra", "nsym", "c:2,1"});
        bind("coproduct", {"sym_coproduct"}, {"coproduct", "--algebra", "sym", "h:2,1"});
        for (const char* r : {"dualize", "admissible", "intermediate"})
            bind("coproduct", {"lr_coproduct_Mstar"}, {"coproduct", "--algebra", "lr", "--route", r, "((..).)"});
        bind("coproduct", {"lr_coproduct_Mstar_by_pairing"}, {"coproduct", "--algebra", "lr", "--route", "pairing", "((..).)"});
        bind("coproduct", {"nck_coproduct", "admissible_cuts"}, {"coproduct", "--algebra", "nck", "(())"});
        bind("coproduct", {"ck_coproduct"}, {"coproduct", "--algebra", "ck", "(()())"});
        bind("antipode", {"antipode"}, {"antipode", "--algebra", "ysym", "--basis", "M", "((..).)"});
        bind("antipode", {"antipode_ysym_M_explicit"}, {"antipode", "--algebra", "ysym", "--basis", "M", "--explicit", "((..).)"});
        bind("antipode", {"antipode_kappa"}, {"antipode", "--algebra", "ysym", "--basis", "M", "--kappa", "(.(..))"});
        bind("convert", {"ssym_M_to_F"}, {"convert", "--algebra", "ssym", "--to", "F", "p:21"});
        bind("convert", {"ssym_F_to_M"}, {"convert", "--algebra", "ssym", "--to", "M", "p:21"});
        bind("convert", {"ysym_M_to_F"}, {"convert", "--algebra", "ysym", "--to", "F", "((..).)"});
        bind("convert", {"ysym_F_to_M"}, {"convert", "--algebra", "ysym", "--to", "M", "((..).)"});
        bind("convert", {"qsym_M_to_F"}, {"convert", "--algebra", "qsym", "--to", "F", "c:2,1"});
        bind("convert", {"qsym_F_to_M"}, {"convert", "--algebra", "qsym", "--to", "M", "c:2,1"});
        bind("mobius", {"moebius", "compute_moebius_row"}, {"mobius", "--poset", "weak", "p:123", "p:321"});
        bind("mobius", {"leq"}, {"mobius", "--poset", "tamari", "--leq", "((..).)", "(.(..))"});
        bind("mobius", {"interval"}, {"mobius", "--poset", "boolean", "--n", "4", "--interval", "{}", "{1,2}"});
        bind("mobius", {"covers"}, {"mobius", "--poset", "tamari", "--covers", "((..).)"});
        bind("mobius", {"check_order_preserving"}, {"mobius", "--check", "order", "--f", "lambda", "--n", "4"});
        bind("mobius", {"check_galois"}, {"mobius", "--check", "galois", "--f", "lambda", "--g", "gamma", "--n", "4"});
        bind("mobius", {"rota_transfer_check"}, {"mobius", "--check", "rota", "--f", "lambda", "--g", "gamma", "--n", "4"});
        bind("kernel", {"hopf_kernel_basis_Lambda"}, {"kernel", "--morphism", "Lambda", "--n", "3"});
        bind("kernel", {"hopf_kernel_basis_L"}, {"kernel", "--morphism", "L", "--n", "3"});
        bind("kernel", {"hopf_kernel_basis_D"}, {"kernel", "--morphism", "D", "--n", "3"});
        bind("kernel", {"in_hopf_kernel"}, {"kernel", "--morphism", "Lambda", "--test", "p:132"});
        bind("kernel", {"kernel_nullity"}, {"kernel", "--morphism", "L", "--n", "4", "--nullity"});
        bind("kernel", {"cocycle_Lambda"}, {"kernel", "--morphism", "Lambda", "--cocycle", "(..)", "(..)"});
        bind("kernel", {"cocycle_L"}, {"kernel", "--morphism", "L", "--cocycle", "c:1", "c:1"});
        bind("kernel", {"cocycle_D"}, {"kernel", "--morphism", "D", "--cocycle", "c:1", "c:1"});
        bind("kernel", {"cocycle_check"}, {"kernel", "--morphism", "D", "--check", "cocycles", "--n", "3"});
        bind("primitives", {"primitives_basis"}, {"primitives", "--n", "3"});
        bind("primitives", {"grading", "coradical_level"}, {"primitives", "--n", "3", "--levels"});
        bind("primitives", {"grading_check"}, {"primitives", "--n", "4", "--check", "grading"});
        bind("dims", {"kernel_dim_a", "kernel_dim_b"}, {"dims", "--what", "kernel", "--n", "4"});
        bind("dims", {"catalan", "all_trees"}, {"dims", "--what", "catalan", "--n", "4"});
        bind("dims", {"all_forests", "all_unordered_forests"}, {"dims", "--what", "forests", "--n", "4"});
        bind("dims", {"hilbert_check"}, {"dims", "--what", "hilbert", "--n", "8"});
        for (const auto& s : suite_names()) bind("verify", {"run_suite"}, {"verify", "--suite", s, "--max-n", "3"});
        for (const auto& op : map_ops()) {
            std::vector<std::string> ex = {"map", op.name};
            ex.insert(ex.end(), op.example.begin(), op.example.end());
            bind("map", op.operations, ex);
        }
        return b;
    }();
    return bindings;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations in combinatorial Hopf algebras of permutations, trees and compositions", "hopftrees"};
    app.require_subcommand(1, 1);
    Options o;
    app.add_option("--workers", o.workers, "worker threads for verify")->envname(workers_env)->check(CLI::PositiveNumber);
    app.add_option("--cache-dir", o.cache_dir, "directory for the persisted Moebius memo");

    auto algebra_opts = [&](CLI::App* sub, bool need_algebra = true) {
        auto* a = sub->add_option("--algebra", o.algebra, "ssym, ysym, qsym, nsym, sym, lr, nck or ck");
        if (need_algebra) a->required();
        sub->add_option("--basis", o.basis, "F or M for ssym/ysym/qsym");
    };
    auto* product = app.add_subcommand("product", "multiply two basis elements");
    algebra_opts(product);
    product->add_option("--route", o.route, "ysym M only: conversion or counting");
    product->add_option("--constants", o.constants, "ysym M only: print all structure constants for degrees P Q")->expected(2);
    product->add_option("operands", o.operands);

    auto* coproduct = app.add_subcommand("coproduct", "comultiply a basis element");
    algebra_opts(coproduct);
    coproduct->add_option("--route", o.route, "lr only: dualize, admissible, intermediate or pairing");
    coproduct->add_option("operands", o.operands);

    auto* antipode_cmd = app.add_subcommand("antipode", "antipode of a basis element");
    algebra_opts(antipode_cmd);
    antipode_cmd->add_flag("--explicit", o.explicit_formula, "ysym M only: use the closed counting formula");
    antipode_cmd->add_flag("--kappa", o.kappa, "ysym M only: print the counts kappa(t, s)");
    antipode_cmd->add_option("operands", o.operands);

    auto* convert = app.add_subcommand("convert", "change basis between F and M");
    convert->add_option("--algebra", o.algebra, "ssym, ysym or qsym")->required();
    convert->add_option("--to", o.to, "F or M")->required();
    convert->add_option("operands", o.operands);

    auto* map = app.add_subcommand("map", "apply a named combinatorial map or algebra morphism");
    map->add_option("name", o.name)->required();
    map->add_option("operands", o.operands);
    map->add_option("--n", o.n, "degree, where the operand does not fix it");
    map->add_option("--basis", o.basis, "F or M for the Hopf morphisms");
    map->add_option("--algebra", o.algebra, "target or source algebra, where a map has several");

    auto* mobius = app.add_subcommand("mobius", "Moebius function, order relation and map checks on weak, tamari and boolean posets");
    mobius->add_option("--poset", o.poset, "weak, tamari or boolean");
    mobius->add_option("--n", o.n, "degree (required for boolean)");
    mobius->add_flag("--leq", o.leq, "print whether x <= y");
    mobius->add_flag("--interval", o.interval, "list [x, y]");
    mobius->add_flag("--covers", o.covers, "list the upper covers of x");
    mobius->add_option("--check", o.check, "order, galois or rota");
    mobius->add_option("--f", o.f, "map for --check");
    mobius->add_option("--g", o.g, "opposite map for --check galois/rota");
    mobius->add_option("operands", o.operands);

    auto* kernel = app.add_subcommand("kernel", "Hopf kernels and cocycles of D, Lambda and L");
    kernel->add_option("--morphism", o.morphism, "D, Lambda or L")->required();
    kernel->add_option("--n", o.n, "degree");
    kernel->add_flag("--nullity", o.nullity, "print the kernel dimension found by linear algebra");
    kernel->add_option("--test", o.test_key, "decide membership of one M basis element")->expected(1);
    kernel->add_option("--cocycle", o.cocycle, "cocycle value at two basis keys")->expected(2);
    kernel->add_option("--check", o.check, "cocycles: check every cocycle of total degree <= n");

    auto* primitives = app.add_subcommand("primitives", "primitive M_tree basis and the coradical grading");
    primitives->add_option("--n", o.n, "degree")->required();
    primitives->add_flag("--levels", o.levels, "print every tree with its coradical level");
    primitives->add_option("--check", o.check, "grading: check the coradical grading of the coproduct");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suites = "all";
    for (const auto& s : suite_names()) suites += ", " + s;
    verify->add_option("--suite", o.suite, suites);
    verify->add_option("--max-n", o.max_n, "override every degree cap of the suite")->check(CLI::NonNegativeNumber);

    auto* dims = app.add_subcommand("dims", "dimension counts");
    dims->add_option("--what", o.what, "kernel, nullity, catalan, primitives, forests or hilbert")->required();
    dims->add_option("--n", o.n, "degree")->required();

    std::vector<const char*> argv{"hopftrees"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (o.n && *o.n < 0) throw invalid_input("--n must be >= 0");
        if (!o.cache_dir.empty()) MoebiusCache::global().load(o.cache_dir);
        bool ok = true;
        if (product->parsed()) do_product(o, out);
        else if (coproduct->parsed()) do_coproduct(o, out);
        else if (antipode_cmd->parsed()) do_antipode(o, out);
        else if (convert->parsed()) do_convert(o, out);
        else if (map->parsed()) do_map(o, out);
        else if (mobius->parsed()) do_mobius(o, out);
        else if (kernel->parsed()) do_kernel(o, out);
        else if (primitives->parsed()) do_primitives(o, out);
        else if (verify->parsed()) ok = do_verify(o, out);
        else if (dims->parsed()) do_dims(o, out);
        if (!o.cache_dir.empty()) MoebiusCache::global().save(o.cache_dir);
        return ok ? 0 : 1;
    } catch (const verification_failure&) {
        return 1;
    } catch (const invalid_input& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace hopftrees::cli
