#include "hopftrees/qsym.hpp"

#include <algorithm>
#include <functional>

#include "convert.hpp"

namespace hopftrees {

namespace {

int comp_rank(const Composition& a) { return a.degree(); }
std::string comp_key(const Composition& a) { return poset_key(a.to_subset()); }

// Parts as a composition: the leading `front` followed by the rest of `tail`.
Composition prepend(int front, const Composition& tail) {
    std::vector<int> parts{front};
    parts.insert(parts.end(), tail.parts().begin(), tail.parts().end());
    return Composition(std::move(parts));
}

Composition drop_first(const Composition& a) {
    return Composition(std::vector<int>(a.parts().begin() + 1, a.parts().end()));
}

// Multiplicative coproduct on a free (or free commutative) algebra whose generator g has
// Delta(g) = sum_i g_i (x) g_{g-i}; factors are accumulated as part lists.
std::vector<std::pair<std::vector<int>, std::vector<int>>> divided_power_terms(const std::vector<int>& parts) {
    std::vector<std::pair<std::vector<int>, std::vector<int>>> acc{{{}, {}}};
    for (int g : parts) {
        std::vector<std::pair<std::vector<int>, std::vector<int>>> next;
        for (const auto& [l, r] : acc)
            for (int i = 0; i <= g; ++i) {
                auto nl = l, nr = r;
                if (i > 0) nl.push_back(i);
                if (g - i > 0) nr.push_back(g - i);
                next.emplace_back(std::move(nl), std::move(nr));
            }
        acc = std::move(next);
    }
    return acc;
}

}  // namespace

Vect<Composition> qsym_product_M(const Composition& a, const Composition& b) {
    Vect<Composition> out;
    if (a.length() == 0) return Vect<Composition>(b);
    if (b.length() == 0) return Vect<Composition>(a);
    const int x = a.parts().front(), y = b.parts().front();
    const Composition a1 = drop_first(a), b1 = drop_first(b);
    for (const auto& [c, k] : qsym_product_M(a1, b)) out.add(prepend(x, c), k);
    for (const auto& [c, k] : qsym_product_M(a, b1)) out.add(prepend(y, c), k);
    for (const auto& [c, k] : qsym_product_M(a1, b1)) out.add(prepend(x + y, c), k);
    return out;
}

Tensor<Composition> qsym_coproduct_M(const Composition& a) {
    Tensor<Composition> out;
    const auto& p = a.parts();
    for (std::size_t i = 0; i <= p.size(); ++i)
        out.add({Composition(std::vector<int>(p.begin(), p.begin() + static_cast<long>(i))),
                 Composition(std::vector<int>(p.begin() + static_cast<long>(i), p.end()))},
                1);
    return out;
}

Vect<Composition> qsym_F_to_M(const Vect<Composition>& v) {
    Vect<Composition> out;
    for (const auto& [a, c] : v) {
        const int n = a.degree();
        auto back = [n](const std::string& k) { return Composition::from_subset(Subset::parse(k, std::max(n - 1, 0)), n); };
        out.add(detail::upper_sum(Vect<Composition>(a), Family::boolean, comp_rank, comp_key, back, false), c);
    }
    return out;
}

Vect<Composition> qsym_M_to_F(const Vect<Composition>& v) {
    Vect<Composition> out;
    for (const auto& [a, c] : v) {
        const int n = a.degree();
        auto back = [n](const std::string& k) { return Composition::from_subset(Subset::parse(k, std::max(n - 1, 0)), n); };
        out.add(detail::upper_sum(Vect<Composition>(a), Family::boolean, comp_rank, comp_key, back, true), c);
    }
    return out;
}

Vect<Composition> qsym_product_F(const Composition& a, const Composition& b) {
    return qsym_M_to_F(bilinear(qsym_F_to_M(Vect<Composition>(a)), qsym_F_to_M(Vect<Composition>(b)), qsym_product_M));
}

Tensor<Composition> qsym_coproduct_F(const Composition& a) {
    Tensor<Composition> out;
    const int n = a.degree();
    const Subset s = a.to_subset();
    for (int k = 0; k <= n; ++k) {
        std::vector<int> left, right;
        for (int e : s.members()) {
            if (e < k) left.push_back(e);
            if (e > k) right.push_back(e - k);
        }
        out.add({Composition::from_subset(Subset(std::max(k - 1, 0), left), k),
                 Composition::from_subset(Subset(std::max(n - k - 1, 0), right), n - k)},
                1);
    }
    return out;
}

Vect<Composition> nsym_product(const Composition& a, const Composition& b) {
    std::vector<int> parts = a.parts();
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    return Vect<Composition>(Composition(std::move(parts)));
}

Tensor<Composition> nsym_coproduct(const Composition& a) {
    Tensor<Composition> out;
    for (auto& [l, r] : divided_power_terms(a.parts())) out.add({Composition(l), Composition(r)}, 1);
    return out;
}

Vect<Partition> sym_product(const Partition& a, const Partition& b) {
    std::vector<int> parts = a.parts();
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    return Vect<Partition>(Partition(std::move(parts)));
}

Tensor<Partition> sym_coproduct(const Partition& a) {
    Tensor<Partition> out;
    for (auto& [l, r] : divided_power_terms(a.parts())) out.add({Partition(l), Partition(r)}, 1);
    return out;
}

std::vector<Partition> all_partitions(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int max_part) {
        if (left == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(left, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(left - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    std::sort(out.begin(), out.end());
    return out;
}

Vect<Composition> qsym_reverse(const Vect<Composition>& v) {
    return linear(v, [](const Composition& a) { return Vect<Composition>(a.reversed()); });
}

namespace {

HopfAlgebra<Composition> make_comp_algebra(std::string name, std::string basis_id, std::function<Vect<Composition>(const Composition&, const Composition&)> product,
                                           std::function<Tensor<Composition>(const Composition&)> coproduct) {
    HopfAlgebra<Composition> a;
    a.name = std::move(name);
    a.basis_id = std::move(basis_id);
    a.basis = all_compositions;
    a.degree = [](const Composition& c) { return c.degree(); };
    a.product = std::move(product);
    a.coproduct = std::move(coproduct);
    return a;
}

}  // namespace

const HopfAlgebra<Composition>& qsym_M() {
    static const HopfAlgebra<Composition> a = make_comp_algebra("qsym", "M_comp", qsym_product_M, qsym_coproduct_M);
    return a;
}

const HopfAlgebra<Composition>& qsym_F() {
    static const HopfAlgebra<Composition> a = make_comp_algebra("qsym", "F_comp", qsym_product_F, qsym_coproduct_F);
    return a;
}

const HopfAlgebra<Composition>& nsym() {
    static const HopfAlgebra<Composition> a = make_comp_algebra("nsym", "Mstar_comp", nsym_product, nsym_coproduct);
    return a;
}

const HopfAlgebra<Partition>& sym() {
    static const HopfAlgebra<Partition> a = [] {
        HopfAlgebra<Partition> h;
        h.name = "sym";
        h.basis_id = "h_partition";
        h.basis = all_partitions;
        h.degree = [](const Partition& p) { return p.degree(); };
        h.product = sym_product;
        h.coproduct = sym_coproduct;
        return h;
    }();
    return a;
}

}  // namespace hopftrees
