#pragma once

#include <string>

#include "hopftrees/posets.hpp"
#include "hopftrees/vect.hpp"

namespace hopftrees::detail {

// Sums each basis element over its upper set in the module poset: x -> sum_{x<=y} w(x,y) y, where w is the
// Moebius value when moebius is set and 1 otherwise. rank(k) gives n, key(k) the poset serialization and
// from(s) the basis key back.
template <class K, class Rank, class Key, class From>
Vect<K> upper_sum(const Vect<K>& v, Family family, Rank rank, Key key, From from, bool moebius) {
    Vect<K> out;
    for (const auto& [k, c] : v) {
        const Poset& p = poset(family, rank(k));
        const int x = p.index(key(k));
        if (moebius) {
            for (const auto& [y, mu] : *MoebiusCache::global().row(p, x)) out.add(from(p.key(y)), c * Scalar(static_cast<long>(mu)));
        } else {
            for (int y : p.upset(x)) out.add(from(p.key(y)), c);
        }
    }
    return out;
}

}  // namespace hopftrees::detail
