#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "hopftrees/binary_tree.hpp"
#include "hopftrees/forest.hpp"
#include "hopftrees/permutation.hpp"
#include "hopftrees/subset.hpp"

namespace hopftrees {

/// Exact rational (GMP), always kept canonical.
using Scalar = mpq_class;

inline std::string scalar_str(const Scalar& c) {
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

/// Finite linear combination of basis keys with nonzero rational coefficients.
template <class K>
class Vect {
   public:
    using key_type = K;
    using container = std::map<K, Scalar>;

    Vect() = default;
    explicit Vect(const K& key, const Scalar& c = 1) { add(key, c); }

    void add(const K& key, const Scalar& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    void add(const Vect& other, const Scalar& scale = 1) {
        for (const auto& [k, c] : other.terms_) add(k, c * scale);
    }

    Scalar coefficient(const K& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? Scalar(0) : it->second;
    }
    bool empty() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }
    const container& terms() const noexcept { return terms_; }

    Vect& operator+=(const Vect& o) {
        add(o);
        return *this;
    }
    Vect& operator-=(const Vect& o) {
        add(o, -1);
        return *this;
    }
    Vect& operator*=(const Scalar& c) {
        if (c == 0) {
            terms_.clear();
        } else {
            for (auto& [k, v] : terms_) v *= c;
        }
        return *this;
    }
    friend Vect operator+(Vect a, const Vect& b) { return a += b; }
    friend Vect operator-(Vect a, const Vect& b) { return a -= b; }
    friend Vect operator-(Vect a) { return a *= -1; }
    friend Vect operator*(const Scalar& c, Vect a) { return a *= c; }
    friend bool operator==(const Vect& a, const Vect& b) { return a.terms_ == b.terms_; }

   private:
    container terms_;
};

template <class A, class B = A>
using Tensor = Vect<std::pair<A, B>>;

/// Linear extension of a basis map.
template <class A, class F>
auto linear(const Vect<A>& v, F&& f) {
    decltype(f(std::declval<const A&>())) out;
    for (const auto& [k, c] : v) out.add(f(k), c);
    return out;
}

/// Bilinear extension of a basis product.
template <class A, class B, class F>
auto bilinear(const Vect<A>& x, const Vect<B>& y, F&& f) {
    decltype(f(std::declval<const A&>(), std::declval<const B&>())) out;
    for (const auto& [a, ca] : x)
        for (const auto& [b, cb] : y) out.add(f(a, b), ca * cb);
    return out;
}

/// (f (x) g) applied to a tensor.
template <class A1, class A2, class F, class G>
auto tensor_map(const Tensor<A1, A2>& t, F&& f, G&& g) {
    using V1 = decltype(f(std::declval<const A1&>()));
    using V2 = decltype(g(std::declval<const A2&>()));
    Tensor<typename V1::key_type, typename V2::key_type> out;
    for (const auto& [k, c] : t) {
        V1 left = f(k.first);
        if (left.empty()) continue;
        V2 right = g(k.second);
        for (const auto& [a, ca] : left)
            for (const auto& [b, cb] : right) out.add({a, b}, c * ca * cb);
    }
    return out;
}

template <class A, class B>
Tensor<A, B> tensor(const Vect<A>& x, const Vect<B>& y) {
    Tensor<A, B> out;
    for (const auto& [a, ca] : x)
        for (const auto& [b, cb] : y) out.add({a, b}, ca * cb);
    return out;
}

inline std::string key_str(const Permutation& k) { return k.str(); }
inline std::string key_str(const BinaryTree& k) { return k.str(); }
inline std::string key_str(const Composition& k) { return k.str(); }
inline std::string key_str(const Partition& k) { return k.str(); }
inline std::string key_str(const Forest& k) { return k.str(); }
inline std::string key_str(const Subset& k) { return k.str(); }
template <class A, class B>
std::string key_str(const std::pair<A, B>& k) {
    return key_str(k.first) + " \xE2\x8A\x97 " + key_str(k.second);
}

inline constexpr const char* expansion_header = "hopf-trees/1";

/// Emits the versioned header and one "num/den TAB basis-id TAB key" line per term, sorted by key text.
template <class K>
void write_expansion(std::ostream& out, const std::string& basis_id, const Vect<K>& v) {
    std::vector<std::pair<std::string, const Scalar*>> lines;
    for (const auto& [k, c] : v) lines.emplace_back(key_str(k), &c);
    std::sort(lines.begin(), lines.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    out << expansion_header << '\n';
    for (const auto& [k, c] : lines) out << scalar_str(*c) << '\t' << basis_id << '\t' << k << '\n';
}

/// Human-readable form for diagnostics, e.g. "2*M[(.(..))] - M[((..).)]".
template <class K>
std::string describe(const Vect<K>& v, const std::string& prefix = "") {
    if (v.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : v) {
        if (!out.empty()) out += " + ";
        out += c.get_str() + "*" + prefix + "[" + key_str(k) + "]";
    }
    return out;
}

}  // namespace hopftrees
