#pragma once

#include "hopftrees/algebra.hpp"
#include "hopftrees/permutation.hpp"
#include "hopftrees/vect.hpp"

namespace hopftrees {

/// F_s F_t = sum over zeta in Sh(p, q) of F_{(s/t) zeta^-1}.
Vect<Permutation> ssym_product_F(const Permutation& s, const Permutation& t);
/// Delta(F_s) = sum over p of F_{st(s_1..s_p)} (x) F_{st(s_p+1..s_n)}.
Tensor<Permutation> ssym_coproduct_F(const Permutation& s);

/// M_s = sum_{s<=t} mu(s, t) F_t.
Vect<Permutation> ssym_M_to_F(const Vect<Permutation>& v);
/// F_s = sum_{s<=t} M_t.
Vect<Permutation> ssym_F_to_M(const Vect<Permutation>& v);

/// M-basis product, through the F basis.
Vect<Permutation> ssym_product_M(const Permutation& s, const Permutation& t);
/// Delta(M_s) = sum over s = u \ v of M_u (x) M_v (global-descent splittings, trivial ones included).
Tensor<Permutation> ssym_coproduct_M(const Permutation& s);
/// The same coproduct computed through the F basis; used as an oracle.
Tensor<Permutation> ssym_coproduct_M_via_F(const Permutation& s);

const HopfAlgebra<Permutation>& ssym_F();
const HopfAlgebra<Permutation>& ssym_M();

}  // namespace hopftrees
