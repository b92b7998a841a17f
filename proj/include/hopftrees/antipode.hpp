#pragma once

#include <map>

#include "hopftrees/binary_tree.hpp"
#include "hopftrees/vect.hpp"

namespace hopftrees {

/// kappa(t, s) for every s in Y_n with a nonzero count: the number of zeta with Des(zeta) in R(t) such that
///   (i)   lambda(gamma(t)_R . zeta^-1) <= s,
///   (ii)  no t' > t has lambda(gamma(t')_R . zeta^-1) <= s,
///   (iii) no R' with Des(zeta) in R' strictly inside R has lambda(gamma(t)_R' . zeta^-1) <= s,
/// where R = R(t) and u_R recombines the R-decomposition of u with /.
std::map<BinaryTree, long> antipode_kappa(const BinaryTree& t);

/// S(M_t) = -(-1)^{#R(t)} sum_s kappa(t, s) M_s.
Vect<BinaryTree> antipode_ysym_M_explicit(const BinaryTree& t);

}  // namespace hopftrees
