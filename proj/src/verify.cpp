#include "hopftrees/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "hopftrees/algebra.hpp"
#include "hopftrees/antipode.hpp"
#include "hopftrees/error.hpp"
#include "hopftrees/lr.hpp"
#include "hopftrees/maps.hpp"
#include "hopftrees/morphisms.hpp"
#include "hopftrees/pool.hpp"
#include "hopftrees/posets.hpp"
#include "hopftrees/qsym.hpp"
#include "hopftrees/ssym.hpp"
#include "hopftrees/structure.hpp"
#include "hopftrees/ysym.hpp"

namespace hopftrees {

bool SuiteReport::ok() const {
    return std::all_of(items.begin(), items.end(), [](const SuiteItem& i) { return i.result.ok; });
}

const SuiteItem* SuiteReport::find(std::string_view item) const {
    for (const auto& i : items)
        if (i.name == item) return &i;
    return nullptr;
}

namespace {

struct Task {
    std::string item;
    std::function<CheckResult()> run;
};
using Tasks = std::vector<Task>;

struct Caps {
    std::optional<int> override_;
    int operator()(int def) const { return override_.value_or(def); }
};

std::string upto(const std::string& what, int n) { return what + " n<=" + std::to_string(n); }

CheckResult expect(bool cond, const std::string& a, const std::string& b) {
    CheckResult r;
    r.checked = 1;
    if (!cond) r.fail(a, b);
    return r;
}

template <class K>
std::vector<K> basis_upto(const HopfAlgebra<K>& A, int n) {
    std::vector<K> out;
    for (int d = 0; d <= n; ++d)
        for (const auto& k : A.basis(d)) out.push_back(k);
    return out;
}

// One task per basis element of degree <= cap.
template <class K, class F>
void per_element(Tasks& tasks, const std::string& item, const HopfAlgebra<K>& A, int cap, F check) {
    for (const auto& x : basis_upto(A, cap)) tasks.push_back({item, [x, check] { return check(x); }});
}

// f: Vect<A> -> Vect<B> is multiplicative, comultiplicative and unital; checked at x against all partners
// with total degree <= cap.
template <class A, class B, class F>
CheckResult hopf_morphism_at(const HopfAlgebra<A>& H, const HopfAlgebra<B>& K, F f, const A& x, int cap) {
    CheckResult res;
    const std::string xs = key_str(x);
    auto on_key = [&](const A& a) { return f(Vect<A>(a)); };
    const Vect<B> fx = f(Vect<A>(x));
    if (H.degree(x) == 0) res.merge(expect(fx == K.one(), xs, "unit is not preserved"));
    res.merge(expect(tensor_map(H.coproduct(x), on_key, on_key) == comultiply(K, fx), xs,
                     "not comultiplicative: image " + describe(fx)));
    for (int d = 0; H.degree(x) + d <= cap; ++d)
        for (const auto& y : H.basis(d))
            res.merge(expect(f(H.product(x, y)) == multiply(K, fx, f(Vect<A>(y))), xs, "not multiplicative with " + key_str(y)));
    return res;
}

// split is a coalgebra map with pi(split(x)) = x.
template <class A, class B, class S, class P>
CheckResult splitting_at(const HopfAlgebra<A>& K, const HopfAlgebra<B>& H, S split, P pi, const A& x) {
    CheckResult res;
    const std::string xs = key_str(x);
    auto on_key = [&](const A& a) { return split(Vect<A>(a)); };
    const Vect<B> sx = split(Vect<A>(x));
    res.merge(expect(comultiply(H, sx) == tensor_map(K.coproduct(x), on_key, on_key), xs, "not a coalgebra map"));
    res.merge(expect(pi(sx) == Vect<A>(x), xs, "projection does not undo the splitting"));
    return res;
}

template <class K>
Tensor<K> swap_tensor(const Tensor<K>& t) {
    Tensor<K> out;
    for (const auto& [ab, c] : t) out.add({ab.second, ab.first}, c);
    return out;
}

// ---------------------------------------------------------------- hopf-axioms

Tasks hopf_axioms_tasks(Caps caps) {
    Tasks t;
    auto add = [&](const auto& A, int cap) {
        per_element(t, upto(A.name + "." + A.basis_id, cap), A, cap, [&A, cap](const auto& x) { return hopf_axioms_at(A, x, cap); });
    };
    add(ssym_F(), caps(5));
    add(ssym_M(), caps(4));
    add(ysym_F(), caps(6));
    add(ysym_M(), caps(4));
    add(lr_Mstar(), caps(6));
    add(nck(), caps(6));
    add(ck(), caps(6));
    add(qsym_M(), caps(7));
    add(qsym_F(), caps(7));
    add(nsym(), caps(7));
    add(sym(), caps(7));
    return t;
}

// ---------------------------------------------------------------- morphisms

Tasks morphisms_tasks(Caps caps) {
    Tasks t;
    const int np = caps(5), nt = caps(6);
    auto D_F = [](const Vect<Permutation>& v) { return morphism_D(v, Basis::F); };
    auto Lam_F = [](const Vect<Permutation>& v) { return morphism_Lambda(v, Basis::F); };
    auto L_F = [](const Vect<BinaryTree>& v) { return morphism_L(v, Basis::F); };
    auto D_M = [](const Vect<Permutation>& v) { return morphism_D(v, Basis::M); };
    auto Lam_M = [](const Vect<Permutation>& v) { return morphism_Lambda(v, Basis::M); };
    auto L_M = [](const Vect<BinaryTree>& v) { return morphism_L(v, Basis::M); };

    per_element(t, upto("D: F_perm -> F_comp Hopf morphism", np), ssym_F(), np,
                [=](const Permutation& x) { return hopf_morphism_at(ssym_F(), qsym_F(), D_F, x, np); });
    per_element(t, upto("Lambda: F_perm -> F_tree Hopf morphism", np), ssym_F(), np,
                [=](const Permutation& x) { return hopf_morphism_at(ssym_F(), ysym_F(), Lam_F, x, np); });
    per_element(t, upto("L: F_tree -> F_comp Hopf morphism", nt), ysym_F(), nt,
                [=](const BinaryTree& x) { return hopf_morphism_at(ysym_F(), qsym_F(), L_F, x, nt); });
    per_element(t, upto("D = L Lambda on F and M", np), ssym_F(), np, [=](const Permutation& x) {
        CheckResult r;
        const Vect<Permutation> v(x);
        r.merge(expect(D_F(v) == L_F(Lam_F(v)), x.str(), "F basis"));
        r.merge(expect(D_M(v) == L_M(Lam_M(v)), x.str(), "M basis"));
        return r;
    });
    per_element(t, upto("Gamma: M_tree -> M_perm splitting", nt), ysym_M(), nt, [=](const BinaryTree& x) {
        return splitting_at(ysym_M(), ssym_M(), splitting_Gamma, Lam_M, x);
    });
    per_element(t, upto("C: M_comp -> M_tree splitting", nt), qsym_M(), nt, [=](const Composition& x) {
        return splitting_at(qsym_M(), ysym_M(), splitting_C, L_M, x);
    });
    per_element(t, upto("Z: M_comp -> M_perm splitting", np), qsym_M(), np, [=](const Composition& x) {
        return splitting_at(qsym_M(), ssym_M(), splitting_Z, D_M, x);
    });
    return t;
}

// ---------------------------------------------------------------- galois / rota

bool weak_side(MapName f) { return map_source(f) == Family::weak || map_target(f) == Family::weak; }

std::string pair_label(MapName f, MapName g) { return std::string(map_name(f)) + " -| " + std::string(map_name(g)); }

Tasks galois_tasks(Caps caps) {
    Tasks t;
    const int nw = caps(6), nt = caps(7);
    for (const auto& [f, g] : galois_pairs()) {
        const int cap = weak_side(f) ? nw : nt;
        for (int n = 0; n <= cap; ++n)
            t.push_back({upto("adjunction " + pair_label(f, g), cap), [f = f, g = g, n] { return check_galois(f, g, n); }});
    }
    for (auto m : {MapName::lambda, MapName::gamma, MapName::gamma_min, MapName::rho, MapName::des, MapName::gdes, MapName::Z, MapName::C, MapName::L,
                   MapName::R}) {
        const int cap = weak_side(m) ? nw : nt;
        for (int n = 0; n <= cap; ++n)
            t.push_back({upto("order-preserving " + std::string(map_name(m)), cap), [m, n] { return check_order_preserving(m, n); }});
    }
    // Sections: lambda gamma = lambda gamma_min = id, Des Z = id, L C = id.
    const std::vector<std::tuple<MapName, MapName, int>> sections = {
        {MapName::gamma, MapName::lambda, nw}, {MapName::gamma_min, MapName::lambda, nw},
        {MapName::Z, MapName::des, nw},        {MapName::C, MapName::L, nt}};
    for (const auto& [s, p, cap] : sections)
        for (int n = 0; n <= cap; ++n)
            t.push_back({upto("section " + std::string(map_name(p)) + " o " + std::string(map_name(s)) + " = id", cap),
                         [s = s, p = p, n] {
                             CheckResult r;
                             const Poset& P = poset(map_source(s), n);
                             for (int i = 0; i < P.size(); ++i)
                                 r.merge(expect(apply_map(p, apply_map(s, P.key(i), n), n) == P.key(i), P.key(i), "not fixed"));
                             return r;
                         }});
    return t;
}

Tasks rota_tasks(Caps caps) {
    Tasks t;
    const int cap = caps(6);
    for (const auto& [f, g] : galois_pairs())
        for (int n = 0; n <= cap; ++n)
            t.push_back({upto("Moebius transfer " + pair_label(f, g), cap), [f = f, g = g, n] { return rota_transfer_check(f, g, n); }});
    return t;
}

// ---------------------------------------------------------------- mbasis-images

Tasks mbasis_tasks(Caps caps) {
    Tasks t;
    const int np = caps(5), nt = caps(6);
    per_element(t, upto("Lambda(M_perm) formula = conversion", np), ssym_M(), np, [](const Permutation& x) {
        const Vect<Permutation> v(x);
        const Vect<BinaryTree> conv = ysym_F_to_M(morphism_Lambda(ssym_M_to_F(v), Basis::F));
        return expect(morphism_Lambda(v, Basis::M) == conv, x.str(), "conversion gives " + describe(conv, "M"));
    });
    per_element(t, upto("D(M_perm) formula = conversion", np), ssym_M(), np, [](const Permutation& x) {
        const Vect<Permutation> v(x);
        const Vect<Composition> conv = qsym_F_to_M(morphism_D(ssym_M_to_F(v), Basis::F));
        return expect(morphism_D(v, Basis::M) == conv, x.str(), "conversion gives " + describe(conv, "M"));
    });
    per_element(t, upto("L(M_tree) formula = conversion", nt), ysym_M(), nt, [](const BinaryTree& x) {
        const Vect<BinaryTree> v(x);
        const Vect<Composition> conv = qsym_F_to_M(morphism_L(ysym_M_to_F(v), Basis::F));
        return expect(morphism_L(v, Basis::M) == conv, x.str(), "conversion gives " + describe(conv, "M"));
    });
    for (int n = 0; n <= np; ++n)
        t.push_back({upto("Lambda kills n! - c_n keys", np), [n] {
                         long zeros = 0, expected = 1;
                         for (int i = 2; i <= n; ++i) expected *= i;
                         expected -= static_cast<long>(catalan(n));
                         for (const auto& s : all_permutations(n))
                             if (morphism_Lambda(Vect<Permutation>(s), Basis::M).empty()) ++zeros;
                         return expect(zeros == expected, "n=" + std::to_string(n), std::to_string(zeros) + " zeros");
                     }});
    per_element(t, upto("Lambda(M_gamma(t)) = M_t", nt), ysym_M(), nt, [](const BinaryTree& x) {
        return expect(morphism_Lambda(Vect<Permutation>(gamma(x)), Basis::M) == Vect<BinaryTree>(x), x.str(), "not recovered");
    });
    per_element(t, upto("L(M_C(S)) = M_S", nt), qsym_M(), nt, [](const Composition& a) {
        return expect(morphism_L(Vect<BinaryTree>(C_map(a.to_subset(), a.degree())), Basis::M) == Vect<Composition>(a), a.str(),
                      "not recovered");
    });
    return t;
}

// ---------------------------------------------------------------- product-routes

std::map<std::tuple<BinaryTree, BinaryTree, BinaryTree>, Scalar> constants(int p, int q, ProductRoute route) {
    std::map<std::tuple<BinaryTree, BinaryTree, BinaryTree>, Scalar> out;
    for (const auto& c : ysym_structure_constants(p, q, route))
        if (c.coefficient != 0) out[{c.s, c.t, c.r}] += c.coefficient;
    return out;
}

Tasks product_routes_tasks(Caps caps) {
    Tasks t;
    const int cap = caps(5), nc = caps(6), np = caps(8), nh = caps(10);
    for (int p = 0; p <= cap; ++p)
        for (int q = 0; p + q <= cap; ++q) {
            t.push_back({upto("M_tree structure constants: counting = conversion", cap), [p, q] {
                             const std::string at = "p=" + std::to_string(p) + ", q=" + std::to_string(q);
                             const auto a = constants(p, q, ProductRoute::conversion);
                             const auto b = constants(p, q, ProductRoute::counting);
                             CheckResult r;
                             r.merge(expect(a == b, at, "routes disagree"));
                             for (const auto& [k, c] : b)
                                 r.merge(expect(c > 0 && c.get_den() == 1, at,
                                                "coefficient " + scalar_str(c) + " at r=" + std::get<2>(k).str()));
                             return r;
                         }});
            for (const auto& zeta : shuffles(p, q)) {
                t.push_back({upto("image f_zeta = image lambda phi_zeta", cap), [zeta, p, q] {
                                 return expect(f_zeta_image(zeta, p, q) == lambda_phi_image(zeta, p, q), zeta.str(), "images differ");
                             }});
                t.push_back({upto("full image iff zeta avoids 132", cap), [zeta, p, q] {
                                 const bool full = f_zeta_image(zeta, p, q).size() == catalan(p) * catalan(q);
                                 return expect(full == avoids(zeta, "132"), zeta.str(),
                                               full ? "full image but contains 132" : "avoids 132 but image is not full");
                             }});
            }
        }
    per_element(t, upto("Delta(M_tree) formula = conversion", nc), ysym_M(), nc, [](const BinaryTree& x) {
        return expect(ysym_coproduct_M(x) == ysym_coproduct_M_via_F(x), x.str(), "coproducts differ");
    });
    for (int n = 0; n <= nc; ++n) t.push_back({upto("coradical grading", nc), [n] { return grading_check(n); }});
    for (int n = 1; n <= np; ++n)
        t.push_back({upto("primitive count = c_{n-1}", np), [n] {
                         std::size_t prim = 0;
                         for (const auto& x : all_trees(n)) {
                             Tensor<BinaryTree> reduced = ysym_coproduct_M(x);
                             reduced.add({x, BinaryTree()}, -1);
                             reduced.add({BinaryTree(), x}, -1);
                             if (reduced.empty()) ++prim;
                         }
                         return expect(prim == catalan(n - 1) && primitives_basis(n).size() == prim, "n=" + std::to_string(n),
                                       std::to_string(prim) + " primitive M_t");
                     }});
    t.push_back({upto("Catalan recursion of the Hilbert series", nh), [nh] { return hilbert_check(nh); }});
    return t;
}

// ---------------------------------------------------------------- antipode-explicit

Tasks antipode_tasks(Caps caps) {
    Tasks t;
    const int cap = caps(5);
    per_element(t, upto("explicit S(M_tree) = recursive antipode", cap), ysym_M(), cap, [](const BinaryTree& x) {
        const Vect<BinaryTree> e = antipode_ysym_M_explicit(x);
        const Vect<BinaryTree> g = antipode(ysym_M(), x);
        return expect(e == g, x.str(), "explicit " + describe(e, "M") + " vs " + describe(g, "M"));
    });
    per_element(t, upto("kappa counts are positive", cap), ysym_M(), cap, [](const BinaryTree& x) {
        CheckResult r;
        for (const auto& [s, k] : antipode_kappa(x)) r.merge(expect(k > 0, x.str(), s.str()));
        return r;
    });
    return t;
}

// ---------------------------------------------------------------- dual-coproduct-routes

Tasks dual_coproduct_tasks(Caps caps) {
    Tasks t;
    const int cap = caps(6), npair = caps(5);
    per_element(t, upto("dualize = admissible = intermediate", cap), lr_Mstar(), cap, [](const BinaryTree& x) {
        const auto a = lr_coproduct_Mstar(x, CoproductRoute::admissible);
        CheckResult r;
        r.merge(expect(lr_coproduct_Mstar(x, CoproductRoute::dualize) == a, x.str(), "dualize differs"));
        r.merge(expect(lr_coproduct_Mstar(x, CoproductRoute::intermediate) == a, x.str(), "intermediate differs"));
        return r;
    });
    per_element(t, upto("pairing with M_tree products", npair), lr_Mstar(), npair, [](const BinaryTree& x) {
        return expect(lr_coproduct_Mstar(x) == lr_coproduct_Mstar_by_pairing(x), x.str(), "pairing differs");
    });
    return t;
}

// ---------------------------------------------------------------- kernels

Tasks kernels_tasks(Caps caps) {
    Tasks t;
    const int cap = caps(6), nco = caps(4);
    for (int n = 1; n <= cap; ++n) {
        t.push_back({upto("Lambda kernel: basis = a_n = nullity", cap), [n] {
                         const auto b = hopf_kernel_basis_Lambda(n).size();
                         const auto a = kernel_dim_a(n);
                         const auto nul = kernel_nullity(Morphism::Lambda, n);
                         return expect(static_cast<long long>(b) == a && nul == b, "n=" + std::to_string(n),
                                       "basis " + std::to_string(b) + ", a_n " + std::to_string(a) + ", nullity " + std::to_string(nul));
                     }});
        t.push_back({upto("L kernel: basis = b_n = nullity", cap), [n] {
                         const auto b = hopf_kernel_basis_L(n).size();
                         const auto a = kernel_dim_b(n);
                         const auto nul = kernel_nullity(Morphism::L, n);
                         return expect(static_cast<long long>(b) == a && nul == b, "n=" + std::to_string(n),
                                       "basis " + std::to_string(b) + ", b_n " + std::to_string(a) + ", nullity " + std::to_string(nul));
                     }});
        t.push_back({upto("D kernel: basis = nullity", cap), [n] {
                         const auto b = hopf_kernel_basis_D(n).size();
                         const auto nul = kernel_nullity(Morphism::D, n);
                         return expect(nul == b, "n=" + std::to_string(n), "basis " + std::to_string(b) + ", nullity " + std::to_string(nul));
                     }});
        t.push_back({upto("kernel basis elements satisfy the predicate", cap), [n] {
                         CheckResult r;
                         for (const auto& s : hopf_kernel_basis_Lambda(n))
                             r.merge(expect(in_hopf_kernel(Morphism::Lambda, Vect<Permutation>(s)), "Lambda", s.str()));
                         for (const auto& s : hopf_kernel_basis_D(n))
                             r.merge(expect(in_hopf_kernel(Morphism::D, Vect<Permutation>(s)), "D", s.str()));
                         for (const auto& x : hopf_kernel_basis_L(n)) r.merge(expect(in_hopf_kernel(Vect<BinaryTree>(x)), "L", x.str()));
                         return r;
                     }});
    }
    for (auto m : {Morphism::Lambda, Morphism::L, Morphism::D})
        t.push_back({upto("cocycle values in the kernel span", nco), [m, nco] { return cocycle_check(m, nco); }});
    return t;
}

// ---------------------------------------------------------------- phi-iso

Tasks phi_tasks(Caps caps) {
    Tasks t;
    const int cap = caps(5), nb = caps(8);
    per_element(t, upto("Phi: forest -> Mstar_tree Hopf morphism", cap), nck(), cap,
                [cap](const Forest& x) { return hopf_morphism_at(nck(), lr_Mstar(), Phi, x, cap); });
    for (int n = 0; n <= nb; ++n)
        t.push_back({upto("phi is a degree-preserving bijection", nb), [n] {
                         CheckResult r;
                         const std::string at = "n=" + std::to_string(n);
                         const auto forests = all_forests(n);
                         r.merge(expect(forests.size() == catalan(n), at, std::to_string(forests.size()) + " forests"));
                         std::set<BinaryTree> seen;
                         for (const auto& f : forests) {
                             const BinaryTree tr = forest_to_tree(f);
                             r.merge(expect(tr.size() == n && seen.insert(tr).second, f.str(), tr.str()));
                             r.merge(expect(tree_to_forest(tr) == f, f.str(), "inverse fails"));
                         }
                         return r;
                     }});
    per_element(t, upto("Phi o (NSym -> forest) = (NSym -> Mstar_tree)", cap), nsym(), cap, [](const Composition& a) {
        const Vect<Composition> v(a);
        return expect(Phi(embed_nsym_nck(v)) == embed_nsym_lr(v), a.str(), "embeddings differ");
    });
    per_element(t, upto("NSym -> forest Hopf morphism", cap), nsym(), cap,
                [cap](const Composition& a) { return hopf_morphism_at(nsym(), nck(), embed_nsym_nck, a, cap); });
    return t;
}

// ---------------------------------------------------------------- involution

Tasks involution_tasks(Caps caps) {
    Tasks t;
    const int cap = caps(5);
    per_element(t, upto("forest reflection: involutive anti-automorphism", cap), nck(), cap, [cap](const Forest& x) {
        CheckResult r;
        const Vect<Forest> v(x);
        r.merge(expect(nck_reflect(nck_reflect(v)) == v, x.str(), "not involutive"));
        for (int d = 0; x.size() + d <= cap; ++d)
            for (const auto& y : all_forests(d))
                r.merge(expect(nck_reflect(nck_product(x, y)) == multiply(nck(), nck_reflect(Vect<Forest>(y)), nck_reflect(v)), x.str(),
                               "(fg)^r != g^r f^r for g = " + y.str()));
        auto refl = [](const Forest& f) { return nck_reflect(Vect<Forest>(f)); };
        r.merge(expect(comultiply(nck(), nck_reflect(v)) == tensor_map(nck_coproduct(x), refl, refl), x.str(), "coproduct"));
        return r;
    });
    per_element(t, upto("M_tree reflection: algebra iso, coalgebra anti-iso", cap), ysym_M(), cap, [cap](const BinaryTree& x) {
        CheckResult r;
        const Vect<BinaryTree> v(x);
        const Vect<BinaryTree> vr = ysym_reflect(v);
        r.merge(expect(ysym_reflect(vr) == v, x.str(), "not involutive"));
        for (int d = 0; x.size() + d <= cap; ++d)
            for (const auto& y : all_trees(d))
                r.merge(expect(ysym_reflect(ysym_product_M(x, y)) == multiply(ysym_M(), vr, ysym_reflect(Vect<BinaryTree>(y))), x.str(),
                               "product with " + y.str()));
        auto refl = [](const BinaryTree& s) { return ysym_reflect(Vect<BinaryTree>(s)); };
        r.merge(expect(comultiply(ysym_M(), vr) == swap_tensor(tensor_map(ysym_coproduct_M(x), refl, refl)), x.str(), "coproduct"));
        return r;
    });
    per_element(t, upto("M_comp reversal: algebra iso, coalgebra anti-iso", cap), qsym_M(), cap, [cap](const Composition& x) {
        CheckResult r;
        const Vect<Composition> v(x);
        const Vect<Composition> vr = qsym_reverse(v);
        r.merge(expect(qsym_reverse(vr) == v, x.str(), "not involutive"));
        for (int d = 0; x.degree() + d <= cap; ++d)
            for (const auto& y : all_compositions(d))
                r.merge(expect(qsym_reverse(qsym_product_M(x, y)) == multiply(qsym_M(), vr, qsym_reverse(Vect<Composition>(y))), x.str(),
                               "product with " + y.str()));
        auto rev = [](const Composition& a) { return qsym_reverse(Vect<Composition>(a)); };
        r.merge(expect(comultiply(qsym_M(), vr) == swap_tensor(tensor_map(qsym_coproduct_M(x), rev, rev)), x.str(), "coproduct"));
        return r;
    });
    per_element(t, upto("L commutes with reflection", cap), ysym_M(), cap, [](const BinaryTree& x) {
        const Vect<BinaryTree> v(x);
        return expect(morphism_L(ysym_reflect(v), Basis::M) == qsym_reverse(morphism_L(v, Basis::M)), x.str(), "square fails");
    });
    per_element(t, upto("Phi^-1 o reflect o Phi = forest reflection", cap), nck(), cap, [](const Forest& x) {
        const Vect<Forest> v(x);
        return expect(Phi_inverse(ysym_reflect(Phi(v))) == nck_reflect(v), x.str(), "square fails");
    });
    return t;
}

// ---------------------------------------------------------------- ck-diagram

Tasks ck_tasks(Caps caps) {
    Tasks t;
    const int cap = caps(5);
    per_element(t, upto("U o (NSym -> forest) = (Sym -> uforest) o (NSym -> Sym)", cap), nsym(), cap, [](const Composition& a) {
        const Vect<Composition> v(a);
        return expect(ck_unorder(embed_nsym_nck(v)) == embed_sym_ck(project_sym(v)), a.str(), "square fails");
    });
    per_element(t, upto("U: forest -> uforest Hopf morphism", cap), nck(), cap,
                [cap](const Forest& x) { return hopf_morphism_at(nck(), ck(), ck_unorder, x, cap); });
    per_element(t, upto("NSym -> Sym Hopf morphism", cap), nsym(), cap,
                [cap](const Composition& a) { return hopf_morphism_at(nsym(), sym(), project_sym, a, cap); });
    per_element(t, upto("Sym -> uforest Hopf morphism", cap), sym(), cap,
                [cap](const Partition& a) { return hopf_morphism_at(sym(), ck(), embed_sym_ck, a, cap); });
    return t;
}

struct SuiteDef {
    std::string name;
    std::string caps;
    std::function<Tasks(Caps)> tasks;
};

const std::vector<SuiteDef>& suites() {
    static const std::vector<SuiteDef> defs = {
        {"hopf-axioms", "F_perm 5, M_perm 4, F_tree/Mstar_tree/forest/uforest 6, M_tree 4, compositions/partitions 7", hopf_axioms_tasks},
        {"morphisms", "permutations 5, trees/compositions 6", morphisms_tasks},
        {"galois", "pairs involving permutations 6, trees/subsets 7", galois_tasks},
        {"rota", "6", rota_tasks},
        {"mbasis-images", "permutations 5, trees 6", mbasis_tasks},
        {"product-routes", "p+q 5, coproducts 6, primitives 8, Hilbert series 10", product_routes_tasks},
        {"antipode-explicit", "5", antipode_tasks},
        {"dual-coproduct-routes", "routes 6, pairing 5", dual_coproduct_tasks},
        {"kernels", "dimensions 6, cocycles 4", kernels_tasks},
        {"phi-iso", "morphism checks 5, bijection 8", phi_tasks},
        {"involution", "5", involution_tasks},
        {"ck-diagram", "5", ck_tasks},
    };
    return defs;
}

const SuiteDef& suite(std::string_view name) {
    for (const auto& d : suites())
        if (d.name == name) return d;
    std::string known;
    for (const auto& d : suites()) known += (known.empty() ? "" : ", ") + d.name;
    throw invalid_input("unknown suite \"" + std::string(name) + "\" (expected one of " + known + ")");
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& d : suites()) out.push_back(d.name);
        return out;
    }();
    return names;
}

std::string default_caps(std::string_view name) { return suite(name).caps; }

SuiteReport run_suite(std::string_view name, std::optional<int> max_n, int workers) {
    if (max_n && *max_n < 0) throw invalid_input("--max-n must be >= 0");
    const SuiteDef& def = suite(name);
    const Tasks tasks = def.tasks(Caps{max_n});
    const auto results = parallel_map<CheckResult>(tasks.size(), workers, [&](std::size_t i) { return tasks[i].run(); });
    std::map<std::string, CheckResult> merged;
    for (std::size_t i = 0; i < tasks.size(); ++i) merged[tasks[i].item].merge(results[i]);
    SuiteReport report{def.name, {}};
    for (auto& [item, res] : merged) report.items.push_back({item, res});
    return report;
}

void write_report(std::ostream& out, const SuiteReport& report) {
    out << "suite " << report.suite << '\n';
    for (const auto& i : report.items) out << "  " << i.name << ": " << i.result.describe() << '\n';
    out << "result: " << (report.ok() ? "ok" : "FAIL") << '\n';
}

}  // namespace hopftrees
