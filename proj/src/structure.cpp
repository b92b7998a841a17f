#include "hopftrees/structure.hpp"

#include <functional>

#include "hopftrees/algebra.hpp"
#include "hopftrees/error.hpp"
#include "hopftrees/linalg.hpp"
#include "hopftrees/qsym.hpp"
#include "hopftrees/ssym.hpp"
#include "hopftrees/ysym.hpp"

namespace hopftrees {

int coradical_level(const BinaryTree& t) { return static_cast<int>(progressive_decompose(t).size()); }

std::vector<GradingRecord> grading(int n) {
    std::vector<GradingRecord> out;
    for (const auto& t : all_trees(n)) out.push_back({t, coradical_level(t)});
    return out;
}

std::vector<BinaryTree> primitives_basis(int n) {
    std::vector<BinaryTree> out;
    for (const auto& t : all_trees(n))
        if (n > 0 && is_progressive(t)) out.push_back(t);
    return out;
}

CheckResult grading_check(int n) {
    CheckResult res;
    for (const auto& t : all_trees(n)) {
        const int k = coradical_level(t);
        const Tensor<BinaryTree> d = ysym_coproduct_M(t);
        for (const auto& [su, c] : d) {
            ++res.checked;
            if (coradical_level(su.first) + coradical_level(su.second) != k)
                res.fail(t.str(), "term " + key_str(su) + " leaves coradical level " + std::to_string(k));
        }
        ++res.checked;
        if (n > 0 && (d.size() == 2) != is_progressive(t)) res.fail(t.str(), "primitive iff progressive");
    }
    return res;
}

CheckResult hilbert_check(int max_n) {
    CheckResult res;
    std::vector<long long> c, p{0};
    for (int m = 0; m <= max_n; ++m) c.push_back(static_cast<long long>(all_trees(m).size()));
    for (int m = 1; m <= max_n; ++m) p.push_back(static_cast<long long>(primitives_basis(m).size()));
    for (int m = 1; m <= max_n; ++m) {
        long long rhs = 0;
        for (int k = 1; k <= m; ++k) rhs += p[static_cast<std::size_t>(k)] * c[static_cast<std::size_t>(m - k)];
        ++res.checked;
        if (rhs != c[static_cast<std::size_t>(m)]) res.fail("n=" + std::to_string(m), "c_n=" + std::to_string(c[static_cast<std::size_t>(m)]) + " but sum=" + std::to_string(rhs));
        ++res.checked;
        if (p[static_cast<std::size_t>(m)] != c[static_cast<std::size_t>(m - 1)])
            res.fail("n=" + std::to_string(m), "progressive count " + std::to_string(p[static_cast<std::size_t>(m)]));
    }
    return res;
}

std::vector<Permutation> hopf_kernel_basis_Lambda(int n) {
    std::vector<Permutation> out;
    if (n == 0) return out;
    for (const auto& s : all_permutations(n))
        if (!avoids(gd_decompose(s).back(), "132")) out.push_back(s);
    return out;
}

std::vector<BinaryTree> hopf_kernel_basis_L(int n) {
    std::vector<BinaryTree> out;
    if (n == 0) return out;
    for (const auto& t : all_trees(n)) {
        const BinaryTree last = progressive_decompose(t).back();
        if (last != comb(last.size())) out.push_back(t);
    }
    return out;
}

std::vector<Permutation> hopf_kernel_basis_D(int n) {
    std::vector<Permutation> out;
    if (n == 0) return out;
    for (const auto& s : all_permutations(n)) {
        const Permutation last = gd_decompose(s).back();
        if (last != Permutation::identity(last.size())) out.push_back(s);
    }
    return out;
}

namespace {

// (id (x) pi)Delta(x) - x (x) 1.
template <class HK, class KK, class Coproduct, class Pi>
Tensor<HK, KK> kernel_defect(const Vect<HK>& x, Coproduct coproduct, Pi pi) {
    Tensor<HK, KK> out;
    for (const auto& [h, c] : x) {
        for (const auto& [ab, c2] : coproduct(h))
            for (const auto& [k, c3] : pi(Vect<HK>(ab.second))) out.add({ab.first, k}, c * c2 * c3);
        out.add({h, KK{}}, -c);
    }
    return out;
}

Tensor<Permutation, BinaryTree> defect_Lambda(const Vect<Permutation>& x) {
    return kernel_defect<Permutation, BinaryTree>(x, ssym_coproduct_M, [](const Vect<Permutation>& v) { return morphism_Lambda(v, Basis::M); });
}
Tensor<Permutation, Composition> defect_D(const Vect<Permutation>& x) {
    return kernel_defect<Permutation, Composition>(x, ssym_coproduct_M, [](const Vect<Permutation>& v) { return morphism_D(v, Basis::M); });
}
Tensor<BinaryTree, Composition> defect_L(const Vect<BinaryTree>& x) {
    return kernel_defect<BinaryTree, Composition>(x, ysym_coproduct_M, [](const Vect<BinaryTree>& v) { return morphism_L(v, Basis::M); });
}

long long factorial(int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

template <class HK, class KK, class Split>
Vect<HK> cocycle_impl(const HopfAlgebra<HK>& H, const HopfAlgebra<KK>& K, Split split, const KK& k, const KK& k2) {
    Vect<HK> out;
    for (const auto& [a, ca] : K.coproduct(k))
        for (const auto& [b, cb] : K.coproduct(k2)) {
            const Vect<HK> left = multiply(H, split(Vect<KK>(a.first)), split(Vect<KK>(b.first)));
            if (left.empty()) continue;
            const Vect<HK> right = antipode(H, split(K.product(a.second, b.second)));
            out.add(multiply(H, left, right), ca * cb);
        }
    return out;
}

template <class HK, class KK, class Cocycle, class Defect, class BasisFn>
CheckResult cocycle_check_impl(const HopfAlgebra<KK>& K, Cocycle cocycle, Defect defect, BasisFn kernel_basis, const HK& unit, int max_n) {
    CheckResult res;
    for (int d1 = 0; d1 <= max_n; ++d1)
        for (int d2 = 0; d1 + d2 <= max_n; ++d2) {
            std::vector<Vect<HK>> span;
            if (d1 + d2 == 0) span.emplace_back(unit);
            for (const auto& h : kernel_basis(d1 + d2)) span.emplace_back(h);
            for (const auto& k : K.basis(d1))
                for (const auto& k2 : K.basis(d2)) {
                    const Vect<HK> c = cocycle(k, k2);
                    const std::string label = "c(" + key_str(k) + ", " + key_str(k2) + ")";
                    ++res.checked;
                    if (!defect(c).empty()) res.fail(label, "fails the kernel predicate: " + describe(c));
                    ++res.checked;
                    if (!in_span(span, c)) res.fail(label, "not in the span of the kernel basis: " + describe(c));
                }
        }
    return res;
}

}  // namespace

bool in_hopf_kernel(Morphism m, const Vect<Permutation>& x) {
    switch (m) {
        case Morphism::Lambda: return defect_Lambda(x).empty();
        case Morphism::D: return defect_D(x).empty();
        case Morphism::L: break;
    }
    throw invalid_input("in_hopf_kernel: L acts on trees");
}

bool in_hopf_kernel(const Vect<BinaryTree>& x) { return defect_L(x).empty(); }

long long kernel_dim_a(int n) {
    if (n < 1) throw invalid_input("kernel dimensions are defined for n >= 1");
    long long a = factorial(n);
    for (int k = 0; k < n; ++k) a -= factorial(k) * static_cast<long long>(catalan(n - k - 1));
    return a;
}

long long kernel_dim_b(int n) {
    if (n < 1) throw invalid_input("kernel dimensions are defined for n >= 1");
    long long b = static_cast<long long>(catalan(n));
    for (int k = 0; k < n; ++k) b -= static_cast<long long>(catalan(k));
    return b;
}

std::size_t kernel_nullity(Morphism m, int n) {
    switch (m) {
        case Morphism::Lambda: {
            std::vector<Tensor<Permutation, BinaryTree>> images;
            for (const auto& s : all_permutations(n)) images.push_back(defect_Lambda(Vect<Permutation>(s)));
            return nullity(images);
        }
        case Morphism::D: {
            std::vector<Tensor<Permutation, Composition>> images;
            for (const auto& s : all_permutations(n)) images.push_back(defect_D(Vect<Permutation>(s)));
            return nullity(images);
        }
        case Morphism::L: {
            std::vector<Tensor<BinaryTree, Composition>> images;
            for (const auto& t : all_trees(n)) images.push_back(defect_L(Vect<BinaryTree>(t)));
            return nullity(images);
        }
    }
    return 0;
}

Vect<Permutation> cocycle_Lambda(const BinaryTree& k, const BinaryTree& k2) {
    return cocycle_impl(ssym_M(), ysym_M(), splitting_Gamma, k, k2);
}

Vect<BinaryTree> cocycle_L(const Composition& k, const Composition& k2) {
    return cocycle_impl(ysym_M(), qsym_M(), splitting_C, k, k2);
}

Vect<Permutation> cocycle_D(const Composition& k, const Composition& k2) {
    return cocycle_impl(ssym_M(), qsym_M(), splitting_Z, k, k2);
}

CheckResult cocycle_check(Morphism m, int max_n) {
    switch (m) {
        case Morphism::Lambda:
            return cocycle_check_impl<Permutation>(ysym_M(), cocycle_Lambda, defect_Lambda, hopf_kernel_basis_Lambda, Permutation(), max_n);
        case Morphism::L:
            return cocycle_check_impl<BinaryTree>(qsym_M(), cocycle_L, defect_L, hopf_kernel_basis_L, BinaryTree(), max_n);
        case Morphism::D:
            return cocycle_check_impl<Permutation>(qsym_M(), cocycle_D, defect_D, hopf_kernel_basis_D, Permutation(), max_n);
    }
    return {};
}

}  // namespace hopftrees
