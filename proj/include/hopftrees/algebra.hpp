#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "hopftrees/check.hpp"
#include "hopftrees/vect.hpp"

namespace hopftrees {

namespace detail {
template <class K>
struct AntipodeMemo {
    std::mutex mu;
    std::map<K, Vect<K>> values;
};
}  // namespace detail

/// A graded connected Hopf algebra presented on one basis: structure maps on basis keys.
template <class K>
struct HopfAlgebra {
    std::string name;      // e.g. "ysym"
    std::string basis_id;  // e.g. "M_tree"
    std::function<std::vector<K>(int)> basis;
    std::function<int(const K&)> degree;
    std::function<Vect<K>(const K&, const K&)> product;
    std::function<Tensor<K>(const K&)> coproduct;
    K unit{};
    std::shared_ptr<detail::AntipodeMemo<K>> antipode_memo = std::make_shared<detail::AntipodeMemo<K>>();

    Vect<K> one() const { return Vect<K>(unit); }
};

template <class K>
Vect<K> multiply(const HopfAlgebra<K>& A, const Vect<K>& x, const Vect<K>& y) {
    return bilinear(x, y, A.product);
}

template <class K>
Tensor<K> comultiply(const HopfAlgebra<K>& A, const Vect<K>& x) {
    return linear(x, A.coproduct);
}

template <class K>
Scalar counit(const HopfAlgebra<K>& A, const Vect<K>& x) {
    return x.coefficient(A.unit);
}

/// Product in A (x) A: (a (x) b)(c (x) d) = ac (x) bd.
template <class K>
Tensor<K> tensor_multiply(const HopfAlgebra<K>& A, const Tensor<K>& x, const Tensor<K>& y) {
    Tensor<K> out;
    for (const auto& [ab, c1] : x)
        for (const auto& [cd, c2] : y) {
            Vect<K> left = A.product(ab.first, cd.first);
            if (left.empty()) continue;
            Vect<K> right = A.product(ab.second, cd.second);
            for (const auto& [l, cl] : left)
                for (const auto& [r, cr] : right) out.add({l, r}, c1 * c2 * cl * cr);
        }
    return out;
}

/// Antipode on a basis key by the graded recursion S(x) = -x - sum S(x')x'' over the reduced coproduct.
/// Results are memoized per algebra instance; safe to call concurrently.
template <class K>
Vect<K> antipode(const HopfAlgebra<K>& A, const K& key) {
    if (A.degree(key) == 0) return A.one();
    {
        std::lock_guard lock(A.antipode_memo->mu);
        auto it = A.antipode_memo->values.find(key);
        if (it != A.antipode_memo->values.end()) return it->second;
    }
    Vect<K> out(key, -1);
    for (const auto& [ab, c] : A.coproduct(key)) {
        if (A.degree(ab.first) == 0 || A.degree(ab.second) == 0) continue;
        out.add(multiply(A, antipode(A, ab.first), Vect<K>(ab.second)), -c);
    }
    std::lock_guard lock(A.antipode_memo->mu);
    A.antipode_memo->values.emplace(key, out);
    return out;
}

template <class K>
Vect<K> antipode(const HopfAlgebra<K>& A, const Vect<K>& x) {
    return linear(x, [&](const K& k) { return antipode(A, k); });
}

template <class K>
using Tensor3 = Vect<std::tuple<K, K, K>>;

/// Checks every Hopf axiom that involves the basis element x as its first argument, with partners drawn
/// from the basis in degrees keeping the total at most max_degree.
template <class K>
CheckResult hopf_axioms_at(const HopfAlgebra<K>& A, const K& x, int max_degree) {
    CheckResult res;
    const Vect<K> vx(x);
    const std::string xs = key_str(x);
    const int dx = A.degree(x);
    auto expect = [&](bool cond, const std::string& what) {
        ++res.checked;
        if (!cond) res.fail(A.name + "." + A.basis_id + " " + xs, what);
    };

    // Unit and counit.
    expect(A.product(x, A.unit) == vx && A.product(A.unit, x) == vx, "unit");
    const Tensor<K> dx_t = A.coproduct(x);
    Vect<K> left_counit, right_counit;
    for (const auto& [ab, c] : dx_t) {
        if (ab.first == A.unit) right_counit.add(ab.second, c);
        if (ab.second == A.unit) left_counit.add(ab.first, c);
    }
    expect(left_counit == vx && right_counit == vx, "counit");

    // Coassociativity.
    Tensor3<K> lhs, rhs;
    for (const auto& [ab, c] : dx_t) {
        for (const auto& [aa, c2] : A.coproduct(ab.first)) lhs.add({aa.first, aa.second, ab.second}, c * c2);
        for (const auto& [bb, c2] : A.coproduct(ab.second)) rhs.add({ab.first, bb.first, bb.second}, c * c2);
    }
    expect(lhs == rhs, "coassociativity");

    // Antipode convolution identities.
    Vect<K> s_id, id_s;
    for (const auto& [ab, c] : dx_t) {
        s_id.add(multiply(A, antipode(A, ab.first), Vect<K>(ab.second)), c);
        id_s.add(multiply(A, Vect<K>(ab.first), antipode(A, ab.second)), c);
    }
    const Vect<K> eps = dx == 0 ? A.one() : Vect<K>();
    expect(s_id == eps, "m(S (x) id)Delta = unit counit");
    expect(id_s == eps, "m(id (x) S)Delta = unit counit");

    // Associativity and bialgebra compatibility with partners.
    for (int dy = 0; dx + dy <= max_degree; ++dy)
        for (const K& y : A.basis(dy)) {
            const Vect<K> xy = A.product(x, y);
            expect(comultiply(A, xy) == tensor_multiply(A, dx_t, A.coproduct(y)), "Delta(xy) with y = " + key_str(y));
            for (int dz = 0; dx + dy + dz <= max_degree; ++dz)
                for (const K& z : A.basis(dz)) {
                    const Vect<K> l = multiply(A, xy, Vect<K>(z));
                    const Vect<K> r = multiply(A, vx, A.product(y, z));
                    expect(l == r, "associativity with " + key_str(y) + ", " + key_str(z));
                }
        }
    return res;
}

}  // namespace hopftrees
