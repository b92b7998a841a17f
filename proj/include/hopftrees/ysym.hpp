#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "hopftrees/algebra.hpp"
#include "hopftrees/binary_tree.hpp"
#include "hopftrees/permutation.hpp"
#include "hopftrees/vect.hpp"

namespace hopftrees {

/// F_t F_s = sum over splittings t -> (t_0..t_q) of F_{(t_0..t_q)/s}, for s in Y_q.
Vect<BinaryTree> ysym_product_F(const BinaryTree& t, const BinaryTree& s);
/// Delta(F_t) = sum over t -> (t_0, t_1) of F_{t_0} (x) F_{t_1}.
Tensor<BinaryTree> ysym_coproduct_F(const BinaryTree& t);

/// M_t = sum_{t<=s} mu(t, s) F_s in the Tamari order.
Vect<BinaryTree> ysym_M_to_F(const Vect<BinaryTree>& v);
/// F_t = sum_{t<=s} M_s.
Vect<BinaryTree> ysym_F_to_M(const Vect<BinaryTree>& v);

enum class ProductRoute {
    conversion,  // convert to F, multiply, convert back
    counting,    // count zeta in Sh(p, q) with (s, t) = max f_zeta^-1[1, r]
};
std::string_view route_name(ProductRoute r);

Vect<BinaryTree> ysym_product_M(const BinaryTree& s, const BinaryTree& t, ProductRoute route = ProductRoute::conversion);
/// Delta(M_r) = sum over r = s \ t of M_s (x) M_t.
Tensor<BinaryTree> ysym_coproduct_M(const BinaryTree& r);
/// The same coproduct computed through the F basis; used as an oracle.
Tensor<BinaryTree> ysym_coproduct_M_via_F(const BinaryTree& r);

/// One coefficient of M_s M_t on M_r, with the route that produced it.
struct StructureConstant {
    BinaryTree s, t, r;
    Scalar coefficient;
    ProductRoute provenance;
};
/// All nonzero constants for s in Y_p, t in Y_q, sorted by (s, t, r).
std::vector<StructureConstant> ysym_structure_constants(int p, int q, ProductRoute route);

/// f_zeta(s, t) = lambda(gamma(s)/gamma(t) . zeta^-1).
BinaryTree f_zeta(const Permutation& zeta, const BinaryTree& s, const BinaryTree& t);
/// Image of f_zeta on Y_p x Y_q, sorted and without repeats.
std::vector<BinaryTree> f_zeta_image(const Permutation& zeta, int p, int q);
/// Image of lambda o phi_zeta on S_p x S_q, where phi_zeta(u, v) = (u/v) . zeta^-1.
std::vector<BinaryTree> lambda_phi_image(const Permutation& zeta, int p, int q);

/// For r in Y_{p+q}: one pair (s, t) = max{(s', t') : f_zeta(s', t') <= r} for each zeta in Sh(p, q) whose
/// preimage of [1, r] is nonempty. Throws std::logic_error if some nonempty preimage has no maximum.
const std::vector<std::pair<BinaryTree, BinaryTree>>& f_zeta_maxima(int p, int q, const BinaryTree& r);

const HopfAlgebra<BinaryTree>& ysym_F();
const HopfAlgebra<BinaryTree>& ysym_M();

}  // namespace hopftrees
