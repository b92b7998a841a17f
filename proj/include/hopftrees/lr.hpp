#pragma once

#include <string_view>

#include "hopftrees/algebra.hpp"
#include "hopftrees/binary_tree.hpp"
#include "hopftrees/forest.hpp"
#include "hopftrees/subset.hpp"
#include "hopftrees/vect.hpp"

namespace hopftrees {

/// M*_s M*_t = M*_{s \ t}.
Vect<BinaryTree> lr_product_Mstar(const BinaryTree& s, const BinaryTree& t);

enum class CoproductRoute {
    dualize,       // one term per zeta in Sh(p, q): the maximum (s, t) with f_zeta(s, t) <= r
    admissible,    // (t'_S, t''_S) over admissible node subsets S
    intermediate,  // (r|_R, r|_{R^c}) over R in [n] with lambda(pi_R) <= r
};
std::string_view route_name(CoproductRoute r);
/// Throws invalid_input on an unknown name.
CoproductRoute parse_coproduct_route(std::string_view name);

Tensor<BinaryTree> lr_coproduct_Mstar(const BinaryTree& r, CoproductRoute route = CoproductRoute::admissible);

/// <Delta(M*_r), M_s (x) M_t> read off from the M-basis product of YSym (computed through F); used as an oracle.
Tensor<BinaryTree> lr_coproduct_Mstar_by_pairing(const BinaryTree& r);

/// NCK: concatenation of forests.
Vect<Forest> nck_product(const Forest& f, const Forest& g);
/// Delta(f) = sum over admissible cuts of f' (x) f''.
Tensor<Forest> nck_coproduct(const Forest& f);

/// CK on canonical unordered forests (computed on planar representatives, then canonicalized by unorder).
Vect<Forest> ck_product(const Forest& f, const Forest& g);
Tensor<Forest> ck_coproduct(const Forest& f);
/// U: NCK -> CK.
Vect<Forest> ck_unorder(const Vect<Forest>& v);

/// Phi(f) = M*_{phi(f)}.
Vect<BinaryTree> Phi(const Vect<Forest>& v);
Vect<Forest> Phi_inverse(const Vect<BinaryTree>& v);

/// M*_a -> l_{a1} ... l_{ak} in NCK.
Vect<Forest> embed_nsym_nck(const Vect<Composition>& v);
/// M*_a -> M*_{C(a)} in LR.
Vect<BinaryTree> embed_nsym_lr(const Vect<Composition>& v);
/// NSym -> Sym: M*_a -> h_{sort(a)}.
Vect<Partition> project_sym(const Vect<Composition>& v);
/// Sym -> CK: h_lambda -> the unordered forest of ladders.
Vect<Forest> embed_sym_ck(const Vect<Partition>& v);

/// M_t -> M_{t^r} on YSym (and on LR's M* basis).
Vect<BinaryTree> ysym_reflect(const Vect<BinaryTree>& v);
/// f -> f^r on NCK.
Vect<Forest> nck_reflect(const Vect<Forest>& v);

const HopfAlgebra<BinaryTree>& lr_Mstar();
const HopfAlgebra<Forest>& nck();
const HopfAlgebra<Forest>& ck();

}  // namespace hopftrees
