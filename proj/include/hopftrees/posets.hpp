#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hopftrees/binary_tree.hpp"
#include "hopftrees/check.hpp"
#include "hopftrees/permutation.hpp"
#include "hopftrees/subset.hpp"

namespace hopftrees {

enum class Family { weak, tamari, boolean };

std::string_view family_name(Family f);
Family parse_family(std::string_view name);

/// One of weak(n), tamari(n), boolean(n), materialized as indexed elements.
///
/// Elements are sorted by rank (size of the inversion or member set) and then by serialization, so
/// index order is a linear extension. Every order test is a bit-mask inclusion: inversion sets for
/// weak, Inv(gamma(t)) for tamari, member bits for boolean.
class Poset {
   public:
    Poset(Family family, int n);

    Family family() const noexcept { return family_; }
    int n() const noexcept { return n_; }
    int size() const noexcept { return static_cast<int>(keys_.size()); }
    std::string name() const;

    const std::string& key(int i) const { return keys_[static_cast<std::size_t>(i)]; }
    /// Index of a serialized element; throws invalid_input if it is not an element of this poset.
    int index(const std::string& key) const;
    std::optional<int> find(const std::string& key) const;

    bool leq(int i, int j) const noexcept { return (masks_[static_cast<std::size_t>(i)] & ~masks_[static_cast<std::size_t>(j)]) == 0; }
    const std::vector<int>& covers_up(int i) const { return covers_[static_cast<std::size_t>(i)]; }
    std::vector<int> upset(int i) const;
    /// {z : x <= z <= y}, found by upward search from x.
    std::vector<int> interval(int x, int y) const;
    int minimum() const noexcept { return 0; }
    int maximum() const noexcept { return size() - 1; }

   private:
    Family family_;
    int n_;
    std::vector<std::string> keys_;
    std::vector<std::uint64_t> masks_;
    std::vector<std::vector<int>> covers_;
    std::map<std::string, int> index_;
};

/// Shared, lazily built poset for (family, n).
const Poset& poset(Family family, int n);

std::string poset_key(const Permutation& s);
std::string poset_key(const BinaryTree& t);
std::string poset_key(const Subset& s);

/// Moebius row of x: pairs (y, mu(x, y)) for all y >= x, in index order.
using MoebiusRow = std::vector<std::pair<int, long long>>;

/// Thread-safe get-or-compute memo of Moebius rows keyed by "family/n/x". Rows are computed outside
/// the lock; concurrent computations of the same row produce identical values, so either may win.
class MoebiusCache {
   public:
    static MoebiusCache& global();

    std::shared_ptr<const MoebiusRow> row(const Poset& p, int x);
    long long value(const Poset& p, int x, int y);

    /// Maximum number of memoized rows; beyond it rows are computed but not retained.
    void set_budget(std::size_t rows);
    std::size_t cached_rows() const;
    void clear();

    /// Writes every memoized value as sorted "family/n/x/y TAB mu" lines to dir/moebius.tsv.
    void save(const std::string& dir) const;
    /// Loads a file written by save (missing file is not an error).
    void load(const std::string& dir);

   private:
    mutable std::mutex mu_;
    std::map<std::string, std::shared_ptr<const MoebiusRow>> rows_;
    std::size_t budget_ = 1u << 20;
};

MoebiusRow compute_moebius_row(const Poset& p, int x);
/// mu(x, y) by keys; throws invalid_input unless x <= y.
long long moebius(const Poset& p, const std::string& x, const std::string& y);

/// The poset maps between weak(n), tamari(n) and boolean(n).
enum class MapName { lambda, gamma, gamma_min, rho, des, gdes, Z, C, L, R };

std::string_view map_name(MapName m);
MapName parse_map_name(std::string_view name);
Family map_source(MapName m);
Family map_target(MapName m);
/// Applies the map to a serialized element of its source at rank n, returning the serialized image.
std::string apply_map(MapName m, const std::string& key, int n);
/// Index table source -> target at rank n.
std::vector<int> map_table(MapName m, int n);

CheckResult check_order_preserving(MapName f, int n);
/// f(x) <= y iff x <= g(y), for all x in the source of f and y in its target.
CheckResult check_galois(MapName f, MapName g, int n);
/// For a Galois pair (f, g): sum over y >= x with f(y) = w of mu_P(x, y) equals the sum over v <= w
/// with g(v) = x of mu_Q(v, w), for every x in P and w in Q.
CheckResult rota_transfer_check(MapName f, MapName g, int n);

/// The six adjoint pairs (left, right).
std::vector<std::pair<MapName, MapName>> galois_pairs();

}  // namespace hopftrees
