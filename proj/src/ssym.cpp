#include "hopftrees/ssym.hpp"

#include <vector>

#include "convert.hpp"

namespace hopftrees {

namespace {

int perm_rank(const Permutation& s) { return s.size(); }
std::string perm_key(const Permutation& s) { return poset_key(s); }
Permutation perm_from(const std::string& k) { return Permutation::parse(k); }

}  // namespace

Vect<Permutation> ssym_product_F(const Permutation& s, const Permutation& t) {
    Vect<Permutation> out;
    const Permutation base = concat_under(s, t);
    for (const auto& z : shuffles(s.size(), t.size())) out.add(base * z.inverse(), 1);
    return out;
}

Tensor<Permutation> ssym_coproduct_F(const Permutation& s) {
    Tensor<Permutation> out;
    const auto& w = s.word();
    for (std::size_t p = 0; p <= w.size(); ++p)
        out.add({standardize(std::vector<int>(w.begin(), w.begin() + static_cast<long>(p))),
                 standardize(std::vector<int>(w.begin() + static_cast<long>(p), w.end()))},
                1);
    return out;
}

Vect<Permutation> ssym_M_to_F(const Vect<Permutation>& v) {
    return detail::upper_sum(v, Family::weak, perm_rank, perm_key, perm_from, true);
}

Vect<Permutation> ssym_F_to_M(const Vect<Permutation>& v) {
    return detail::upper_sum(v, Family::weak, perm_rank, perm_key, perm_from, false);
}

Vect<Permutation> ssym_product_M(const Permutation& s, const Permutation& t) {
    return ssym_F_to_M(bilinear(ssym_M_to_F(Vect<Permutation>(s)), ssym_M_to_F(Vect<Permutation>(t)), ssym_product_F));
}

Tensor<Permutation> ssym_coproduct_M(const Permutation& s) {
    Tensor<Permutation> out;
    const int n = s.size();
    const auto& w = s.word();
    const Subset gd = global_descents(s);
    for (int p = 0; p <= n; ++p) {
        if (p != 0 && p != n && !gd.contains(p)) continue;
        out.add({standardize(std::vector<int>(w.begin(), w.begin() + p)), standardize(std::vector<int>(w.begin() + p, w.end()))},
                1);
    }
    return out;
}

Tensor<Permutation> ssym_coproduct_M_via_F(const Permutation& s) {
    auto to_m = [](const Permutation& k) { return ssym_F_to_M(Vect<Permutation>(k)); };
    return tensor_map(linear(ssym_M_to_F(Vect<Permutation>(s)), ssym_coproduct_F), to_m, to_m);
}

namespace {

HopfAlgebra<Permutation> make_ssym(bool monomial) {
    HopfAlgebra<Permutation> a;
    a.name = "ssym";
    a.basis_id = monomial ? "M_perm" : "F_perm";
    a.basis = all_permutations;
    a.degree = [](const Permutation& s) { return s.size(); };
    if (monomial) {
        a.product = ssym_product_M;
        a.coproduct = ssym_coproduct_M;
    } else {
        a.product = ssym_product_F;
        a.coproduct = ssym_coproduct_F;
    }
    return a;
}

}  // namespace

const HopfAlgebra<Permutation>& ssym_F() {
    static const HopfAlgebra<Permutation> a = make_ssym(false);
    return a;
}

const HopfAlgebra<Permutation>& ssym_M() {
    static const HopfAlgebra<Permutation> a = make_ssym(true);
    return a;
}

}  // namespace hopftrees
