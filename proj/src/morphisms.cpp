#include "hopftrees/morphisms.hpp"

#include <string>

#include "hopftrees/error.hpp"
#include "hopftrees/maps.hpp"

namespace hopftrees {

std::string_view morphism_name(Morphism m) {
    switch (m) {
        case Morphism::D: return "D";
        case Morphism::Lambda: return "Lambda";
        case Morphism::L: return "L";
    }
    return {};
}

Morphism parse_morphism(std::string_view name) {
    for (auto m : {Morphism::D, Morphism::Lambda, Morphism::L})
        if (name == morphism_name(m)) return m;
    throw invalid_input("unknown morphism \"" + std::string(name) + "\" (expected D, Lambda or L)");
}

Basis parse_basis(std::string_view name) {
    if (name == "F") return Basis::F;
    if (name == "M") return Basis::M;
    throw invalid_input("unknown basis \"" + std::string(name) + "\" (expected F or M)");
}

Vect<Composition> morphism_D(const Vect<Permutation>& v, Basis b) {
    Vect<Composition> out;
    for (const auto& [s, c] : v) {
        const Subset d = descents(s);
        if (b == Basis::M && Z_map(d, s.size()) != s) continue;
        out.add(Composition::from_subset(d, s.size()), c);
    }
    return out;
}

Vect<BinaryTree> morphism_Lambda(const Vect<Permutation>& v, Basis b) {
    Vect<BinaryTree> out;
    for (const auto& [s, c] : v) {
        const BinaryTree t = lambda(s);
        if (b == Basis::M && gamma(t) != s) continue;
        out.add(t, c);
    }
    return out;
}

Vect<Composition> morphism_L(const Vect<BinaryTree>& v, Basis b) {
    Vect<Composition> out;
    for (const auto& [t, c] : v) {
        const Subset l = left_leaf_set(t);
        if (b == Basis::M && C_map(l, t.size()) != t) continue;
        out.add(Composition::from_subset(l, t.size()), c);
    }
    return out;
}

Vect<BinaryTree> splitting_C(const Vect<Composition>& v) {
    return linear(v, [](const Composition& a) { return Vect<BinaryTree>(C_map(a.to_subset(), a.degree())); });
}

Vect<Permutation> splitting_Gamma(const Vect<BinaryTree>& v) {
    return linear(v, [](const BinaryTree& t) { return Vect<Permutation>(gamma(t)); });
}

Vect<Permutation> splitting_Z(const Vect<Composition>& v) {
    return linear(v, [](const Composition& a) { return Vect<Permutation>(Z_map(a.to_subset(), a.degree())); });
}

}  // namespace hopftrees
