#pragma once

#include <vector>

#include "hopftrees/algebra.hpp"
#include "hopftrees/subset.hpp"
#include "hopftrees/vect.hpp"

namespace hopftrees {

/// Quasi-shuffle product of monomial quasi-symmetric functions.
Vect<Composition> qsym_product_M(const Composition& a, const Composition& b);
/// Deconcatenation.
Tensor<Composition> qsym_coproduct_M(const Composition& a);

/// F_a = sum over refinements b of a (I(b) containing I(a)) of M_b.
Vect<Composition> qsym_F_to_M(const Vect<Composition>& v);
/// Inverse of qsym_F_to_M: M_a = sum (-1)^{k(b)-k(a)} F_b.
Vect<Composition> qsym_M_to_F(const Vect<Composition>& v);

Vect<Composition> qsym_product_F(const Composition& a, const Composition& b);
/// Delta(F_a): cut the ribbon of a after each of its n cells (and before the first).
Tensor<Composition> qsym_coproduct_F(const Composition& a);

/// NSym on the basis dual to the monomials: concatenation product.
Vect<Composition> nsym_product(const Composition& a, const Composition& b);
/// Multiplicative, with Delta(M*_(g)) = sum_i M*_(i) (x) M*_(g-i).
Tensor<Composition> nsym_coproduct(const Composition& a);

/// Sym on the complete basis h_lambda.
Vect<Partition> sym_product(const Partition& a, const Partition& b);
/// Multiplicative, with Delta(h_g) = sum_i h_i (x) h_{g-i}.
Tensor<Partition> sym_coproduct(const Partition& a);
std::vector<Partition> all_partitions(int n);

/// M_a -> M_{a reversed}.
Vect<Composition> qsym_reverse(const Vect<Composition>& v);

const HopfAlgebra<Composition>& qsym_M();
const HopfAlgebra<Composition>& qsym_F();
const HopfAlgebra<Composition>& nsym();
const HopfAlgebra<Partition>& sym();

}  // namespace hopftrees
