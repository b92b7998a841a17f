#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hopftrees {

/// A subset of [ambient] = {1, ..., ambient}, stored as a bit set (bit i-1 <-> element i).
///
/// Descent-type sets of a degree-n object live in [n-1]; node sets live in [n].
class Subset {
   public:
    static constexpr int max_ambient = 63;

    Subset() = default;
    explicit Subset(int ambient);
    Subset(int ambient, const std::vector<int>& members);

    static Subset from_bits(int ambient, std::uint64_t bits);
    static Subset full(int ambient);
    /// Parses "{2,5,7}" (or "{}") over the given ambient set.
    static Subset parse(std::string_view text, int ambient);

    int ambient() const noexcept { return ambient_; }
    std::uint64_t bits() const noexcept { return bits_; }
    int size() const noexcept;
    bool empty() const noexcept { return bits_ == 0; }
    bool contains(int element) const noexcept;
    std::vector<int> members() const;

    void insert(int element);
    void erase(int element);

    bool is_subset_of(const Subset& other) const noexcept { return (bits_ & ~other.bits_) == 0; }
    Subset complement() const;

    std::string str() const;

    friend bool operator==(const Subset&, const Subset&) = default;
    friend auto operator<=>(const Subset& a, const Subset& b) {
        if (auto c = a.ambient_ <=> b.ambient_; c != 0) return c;
        return a.bits_ <=> b.bits_;
    }

   private:
    int ambient_ = 0;
    std::uint64_t bits_ = 0;
};

/// Composition of n: a sequence of positive parts. Keys the M/F bases of QSym and the M* basis of NSym.
class Composition {
   public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);

    /// The composition alpha of n with I(alpha) = s, where s is a subset of [n-1].
    static Composition from_subset(const Subset& s, int n);
    /// Parses "c:2,1" ("c:" is the empty composition).
    static Composition parse(std::string_view text);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int degree() const noexcept { return degree_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    /// I(alpha) = {a1, a1+a2, ..., a1+...+a_{k-1}} as a subset of [n-1].
    Subset to_subset() const;
    Composition reversed() const;

    std::string str() const;

    friend bool operator==(const Composition&, const Composition&) = default;
    friend auto operator<=>(const Composition& a, const Composition& b) { return a.parts_ <=> b.parts_; }

   private:
    std::vector<int> parts_;
    int degree_ = 0;
};

/// Partition (weakly decreasing parts); keys the complete basis h_lambda of Sym.
class Partition {
   public:
    Partition() = default;
    /// Parts are sorted into weakly decreasing order.
    explicit Partition(std::vector<int> parts);
    static Partition parse(std::string_view text);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int degree() const noexcept;
    std::string str() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

   private:
    std::vector<int> parts_;
};

std::vector<Subset> all_subsets(int ambient);
std::vector<Composition> all_compositions(int n);

}  // namespace hopftrees
