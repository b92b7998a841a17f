#pragma once

#include <string_view>

#include "hopftrees/binary_tree.hpp"
#include "hopftrees/permutation.hpp"
#include "hopftrees/subset.hpp"
#include "hopftrees/vect.hpp"

namespace hopftrees {

/// The three Hopf surjections SSym -> QSym, SSym -> YSym, YSym -> QSym.
enum class Morphism { D, Lambda, L };
std::string_view morphism_name(Morphism m);
Morphism parse_morphism(std::string_view name);

enum class Basis { F, M };
Basis parse_basis(std::string_view name);

/// F_s -> F_{Des s}; M_s -> M_{Des s} when s = Z(Des s), else 0.
Vect<Composition> morphism_D(const Vect<Permutation>& v, Basis b);
/// F_s -> F_{lambda s}; M_s -> M_{lambda s} when s = gamma(lambda s), else 0.
Vect<BinaryTree> morphism_Lambda(const Vect<Permutation>& v, Basis b);
/// F_t -> F_{L(t)}; M_t -> M_{L(t)} when t = C(L(t)), else 0.
Vect<Composition> morphism_L(const Vect<BinaryTree>& v, Basis b);

/// The coalgebra splittings, on M bases: C(M_a) = M_{C(a)}, Gamma(M_t) = M_{gamma(t)}, Z(M_a) = M_{Z(a)}.
Vect<BinaryTree> splitting_C(const Vect<Composition>& v);
Vect<Permutation> splitting_Gamma(const Vect<BinaryTree>& v);
Vect<Permutation> splitting_Z(const Vect<Composition>& v);

}  // namespace hopftrees
