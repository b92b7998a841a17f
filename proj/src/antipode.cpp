#include "hopftrees/antipode.hpp"

#include <vector>

#include "hopftrees/maps.hpp"
#include "hopftrees/posets.hpp"

namespace hopftrees {

std::map<BinaryTree, long> antipode_kappa(const BinaryTree& t) {
    const int n = t.size();
    const Subset R = right_branch_set(t);
    const Poset& P = poset(Family::tamari, n);
    const int ti = P.index(t.str());
    auto image = [&](const BinaryTree& u, const Subset& part, const Permutation& zi) {
        return P.index(lambda(partial_recombine(gamma(u), part) * zi).str());
    };

    std::vector<BinaryTree> above;
    for (int u : P.upset(ti))
        if (u != ti) above.push_back(BinaryTree::parse(P.key(u)));

    std::vector<long> count(static_cast<std::size_t>(P.size()), 0);
    for (const auto& zeta : perms_with_descents_in(R, n)) {
        const Permutation zi = zeta.inverse();
        const Subset dz = descents(zeta);
        const int base = image(t, R, zi);
        std::vector<int> blockers;  // images whose presence below s violates (ii) or (iii)
        for (const auto& u : above) blockers.push_back(image(u, R, zi));
        for (const auto& sub : all_subsets(R.ambient()))
            if (dz.is_subset_of(sub) && sub.is_subset_of(R) && sub != R) blockers.push_back(image(t, sub, zi));
        for (int s = 0; s < P.size(); ++s) {
            if (!P.leq(base, s)) continue;
            bool blocked = false;
            for (int b : blockers)
                if (P.leq(b, s)) {
                    blocked = true;
                    break;
                }
            if (!blocked) ++count[static_cast<std::size_t>(s)];
        }
    }
    std::map<BinaryTree, long> out;
    for (int s = 0; s < P.size(); ++s)
        if (count[static_cast<std::size_t>(s)]) out.emplace(BinaryTree::parse(P.key(s)), count[static_cast<std::size_t>(s)]);
    return out;
}

Vect<BinaryTree> antipode_ysym_M_explicit(const BinaryTree& t) {
    if (t.is_leaf()) return Vect<BinaryTree>(t);
    const long sign = right_branch_set(t).size() % 2 == 0 ? -1 : 1;
    Vect<BinaryTree> out;
    for (const auto& [s, k] : antipode_kappa(t)) out.add(s, Scalar(sign * k));
    return out;
}

}  // namespace hopftrees
