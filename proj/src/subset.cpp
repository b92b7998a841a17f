#include "hopftrees/subset.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "hopftrees/error.hpp"
#include "parse_util.hpp"

namespace hopftrees {

Subset::Subset(int ambient) : ambient_(ambient) {
    if (ambient < 0 || ambient > max_ambient) throw invalid_input("subset ambient out of range: " + std::to_string(ambient));
}

Subset::Subset(int ambient, const std::vector<int>& members) : Subset(ambient) {
    for (int m : members) insert(m);
}

Subset Subset::from_bits(int ambient, std::uint64_t bits) {
    Subset s(ambient);
    std::uint64_t mask = ambient == 64 ? ~0ULL : ((1ULL << ambient) - 1);
    if (bits & ~mask) throw invalid_input("subset bits exceed ambient " + std::to_string(ambient));
    s.bits_ = bits;
    return s;
}

Subset Subset::full(int ambient) { return from_bits(ambient, (1ULL << ambient) - 1); }

Subset Subset::parse(std::string_view text, int ambient) {
    detail::Cursor c(text);
    c.expect('{', "'{'");
    Subset s(ambient);
    if (c.accept('}')) {
        c.expect_end();
        return s;
    }
    while (true) {
        std::size_t at = c.pos();
        int v = c.integer();
        if (v < 1 || v > ambient) throw parse_error(std::string(text), at, "an element of [1," + std::to_string(ambient) + "]");
        if (s.contains(v)) throw parse_error(std::string(text), at, "a new element (duplicate " + std::to_string(v) + ")");
        s.insert(v);
        if (c.accept('}')) break;
        c.expect(',', "',' or '}'");
    }
    c.expect_end();
    return s;
}

int Subset::size() const noexcept { return std::popcount(bits_); }

bool Subset::contains(int element) const noexcept {
    return element >= 1 && element <= ambient_ && ((bits_ >> (element - 1)) & 1ULL);
}

std::vector<int> Subset::members() const {
    std::vector<int> out;
    for (int i = 1; i <= ambient_; ++i)
        if (contains(i)) out.push_back(i);
    return out;
}

void Subset::insert(int element) {
    if (element < 1 || element > ambient_)
        throw invalid_input("element " + std::to_string(element) + " outside [1," + std::to_string(ambient_) + "]");
    bits_ |= 1ULL << (element - 1);
}

void Subset::erase(int element) {
    if (element >= 1 && element <= ambient_) bits_ &= ~(1ULL << (element - 1));
}

Subset Subset::complement() const { return from_bits(ambient_, ~bits_ & ((1ULL << ambient_) - 1)); }

std::string Subset::str() const {
    std::string out = "{";
    bool first = true;
    for (int m : members()) {
        if (!first) out += ',';
        out += std::to_string(m);
        first = false;
    }
    return out + "}";
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
        if (p <= 0) throw invalid_input("composition parts must be positive");
        degree_ += p;
    }
}

Composition Composition::from_subset(const Subset& s, int n) {
    if (s.ambient() != std::max(n - 1, 0)) throw invalid_input("subset ambient must be n-1");
    std::vector<int> parts;
    int last = 0;
    for (int m : s.members()) {
        parts.push_back(m - last);
        last = m;
    }
    if (n > 0) parts.push_back(n - last);
    return Composition(std::move(parts));
}

Composition Composition::parse(std::string_view text) {
    detail::Cursor c(text);
    c.expect_prefix("c:");
    std::vector<int> parts;
    if (c.at_end()) return Composition();
    while (true) {
        std::size_t at = c.pos();
        int v = c.integer();
        if (v <= 0) throw parse_error(std::string(text), at, "a positive part");
        parts.push_back(v);
        if (c.at_end()) break;
        c.expect(',', "',' or end of input");
    }
    return Composition(std::move(parts));
}

Subset Composition::to_subset() const {
    Subset s(std::max(degree_ - 1, 0));
    int acc = 0;
    for (std::size_t i = 0; i + 1 < parts_.size(); ++i) {
        acc += parts_[i];
        s.insert(acc);
    }
    return s;
}

Composition Composition::reversed() const { return Composition(std::vector<int>(parts_.rbegin(), parts_.rend())); }

std::string Composition::str() const {
    std::string out = "c:";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p <= 0) throw invalid_input("partition parts must be positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

Partition Partition::parse(std::string_view text) {
    detail::Cursor c(text);
    c.expect_prefix("h:");
    std::vector<int> parts;
    if (c.at_end()) return Partition();
    while (true) {
        std::size_t at = c.pos();
        int v = c.integer();
        if (v <= 0) throw parse_error(std::string(text), at, "a positive part");
        parts.push_back(v);
        if (c.at_end()) break;
        c.expect(',', "',' or end of input");
    }
    return Partition(std::move(parts));
}

int Partition::degree() const noexcept {
    int d = 0;
    for (int p : parts_) d += p;
    return d;
}

std::string Partition::str() const {
    std::string out = "h:";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

std::vector<Subset> all_subsets(int ambient) {
    std::vector<Subset> out;
    for (std::uint64_t b = 0; b < (1ULL << ambient); ++b) out.push_back(Subset::from_bits(ambient, b));
    return out;
}

std::vector<Composition> all_compositions(int n) {
    std::vector<Composition> out;
    if (n == 0) return {Composition()};
    for (const Subset& s : all_subsets(n - 1)) out.push_back(Composition::from_subset(s, n));
    return out;
}

}  // namespace hopftrees
