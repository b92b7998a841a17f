#include "hopftrees/posets.hpp"

#include <algorithm>
#include <bit>
#include <filesystem>
#include <limits>
#include <fstream>
#include <sstream>
#include <tuple>

#include "hopftrees/error.hpp"
#include "hopftrees/maps.hpp"

namespace hopftrees {

std::string_view family_name(Family f) {
    switch (f) {
        case Family::weak: return "weak";
        case Family::tamari: return "tamari";
        case Family::boolean: return "boolean";
    }
    return "?";
}

Family parse_family(std::string_view name) {
    if (name == "weak") return Family::weak;
    if (name == "tamari") return Family::tamari;
    if (name == "boolean") return Family::boolean;
    throw invalid_input("unknown poset family \"" + std::string(name) + "\" (expected weak, tamari or boolean)");
}

std::string poset_key(const Permutation& s) { return s.str(); }
std::string poset_key(const BinaryTree& t) { return t.str(); }
std::string poset_key(const Subset& s) { return s.str(); }

Poset::Poset(Family family, int n) : family_(family), n_(n) {
    if (n < 0) throw invalid_input("poset rank must be nonnegative");
    struct Item {
        std::uint64_t mask;
        std::string key;
    };
    std::vector<Item> items;
    switch (family) {
        case Family::weak:
            if (n > 9) throw invalid_input("weak order supported for n <= 9");
            for (const auto& s : all_permutations(n)) items.push_back({inversion_mask(s), s.str()});
            break;
        case Family::tamari:
            if (n > 11) throw invalid_input("tamari order supported for n <= 11");
            for (const auto& t : all_trees(n)) items.push_back({inversion_mask(gamma(t)), t.str()});
            break;
        case Family::boolean:
            if (n > 24) throw invalid_input("boolean order supported for n <= 24");
            for (const auto& s : all_subsets(std::max(n - 1, 0))) items.push_back({s.bits(), s.str()});
            break;
    }
    std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
        return std::make_tuple(std::popcount(a.mask), a.key) < std::make_tuple(std::popcount(b.mask), b.key);
    });
    for (std::size_t i = 0; i < items.size(); ++i) {
        keys_.push_back(items[i].key);
        masks_.push_back(items[i].mask);
        index_.emplace(items[i].key, static_cast<int>(i));
    }
    covers_.resize(items.size());
    for (std::size_t i = 0; i < items.size(); ++i) {
        std::vector<std::string> up;
        switch (family) {
            case Family::weak: {
                Permutation s = Permutation::parse(keys_[i]);
                Permutation inv = s.inverse();
                for (int v = 1; v < n; ++v)
                    if (inv(v) < inv(v + 1)) {
                        std::vector<int> w = s.word();
                        std::swap(w[static_cast<std::size_t>(inv(v) - 1)], w[static_cast<std::size_t>(inv(v + 1) - 1)]);
                        up.push_back(Permutation(std::move(w)).str());
                    }
                break;
            }
            case Family::tamari:
                for (const auto& t : tamari_covers_up(BinaryTree::parse(keys_[i]))) up.push_back(t.str());
                break;
            case Family::boolean: {
                Subset s = Subset::parse(keys_[i], std::max(n - 1, 0));
                for (int e = 1; e < n; ++e)
                    if (!s.contains(e)) {
                        Subset t = s;
                        t.insert(e);
                        up.push_back(t.str());
                    }
                break;
            }
        }
        for (const auto& k : up) covers_[i].push_back(index(k));
        std::sort(covers_[i].begin(), covers_[i].end());
    }
}

std::string Poset::name() const { return std::string(family_name(family_)) + "(" + std::to_string(n_) + ")"; }

std::optional<int> Poset::find(const std::string& key) const {
    auto it = index_.find(key);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

int Poset::index(const std::string& key) const {
    auto i = find(key);
    if (!i) throw invalid_input("\"" + key + "\" is not an element of " + name());
    return *i;
}

std::vector<int> Poset::upset(int i) const {
    std::vector<int> out;
    for (int j = i; j < size(); ++j)
        if (leq(i, j)) out.push_back(j);
    return out;
}

std::vector<int> Poset::interval(int x, int y) const {
    std::vector<int> out;
    if (!leq(x, y)) return out;
    std::vector<char> seen(static_cast<std::size_t>(size()), 0);
    std::vector<int> queue{x};
    seen[static_cast<std::size_t>(x)] = 1;
    for (std::size_t h = 0; h < queue.size(); ++h) {
        int z = queue[h];
        out.push_back(z);
        for (int c : covers_up(z))
            if (!seen[static_cast<std::size_t>(c)] && leq(c, y)) {
                seen[static_cast<std::size_t>(c)] = 1;
                queue.push_back(c);
            }
    }
    std::sort(out.begin(), out.end());
    return out;
}

const Poset& poset(Family family, int n) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<Poset>> store;
    std::lock_guard lock(mu);
    auto& slot = store[{static_cast<int>(family), n}];
    if (!slot) slot = std::make_unique<Poset>(family, n);
    return *slot;
}

MoebiusRow compute_moebius_row(const Poset& p, int x) {
    std::vector<int> up = p.upset(x);
    MoebiusRow row;
    row.reserve(up.size());
    for (std::size_t a = 0; a < up.size(); ++a) {
        long long mu = a == 0 ? 1 : 0;
        for (std::size_t b = 0; b < a; ++b)
            if (p.leq(up[b], up[a])) mu -= row[b].second;
        row.emplace_back(up[a], mu);
    }
    return row;
}

namespace {
std::string row_key(const Poset& p, int x) {
    return std::string(family_name(p.family())) + "/" + std::to_string(p.n()) + "/" + p.key(x);
}
}  // namespace

MoebiusCache& MoebiusCache::global() {
    static MoebiusCache cache;
    return cache;
}

std::shared_ptr<const MoebiusRow> MoebiusCache::row(const Poset& p, int x) {
    const std::string key = row_key(p, x);
    {
        std::lock_guard lock(mu_);
        auto it = rows_.find(key);
        if (it != rows_.end()) return it->second;
    }
    auto computed = std::make_shared<const MoebiusRow>(compute_moebius_row(p, x));
    std::lock_guard lock(mu_);
    auto it = rows_.find(key);
    if (it != rows_.end()) return it->second;
    if (rows_.size() < budget_) rows_.emplace(key, computed);
    return computed;
}

long long MoebiusCache::value(const Poset& p, int x, int y) {
    auto r = row(p, x);
    auto it = std::lower_bound(r->begin(), r->end(), std::make_pair(y, std::numeric_limits<long long>::min()));
    if (it == r->end() || it->first != y) throw invalid_input("moebius: " + p.key(x) + " is not below " + p.key(y) + " in " + p.name());
    return it->second;
}

void MoebiusCache::set_budget(std::size_t rows) {
    std::lock_guard lock(mu_);
    budget_ = rows;
}

std::size_t MoebiusCache::cached_rows() const {
    std::lock_guard lock(mu_);
    return rows_.size();
}

void MoebiusCache::clear() {
    std::lock_guard lock(mu_);
    rows_.clear();
}

void MoebiusCache::save(const std::string& dir) const {
    std::vector<std::string> lines;
    {
        std::lock_guard lock(mu_);
        for (const auto& [key, row] : rows_) {
            // key is family/n/x; recover the poset to name the y elements
            auto s1 = key.find('/'), s2 = key.find('/', s1 + 1);
            const Poset& p = poset(parse_family(key.substr(0, s1)), std::stoi(key.substr(s1 + 1, s2 - s1 - 1)));
            for (const auto& [y, mu] : *row) lines.push_back(key + "/" + p.key(y) + "\t" + std::to_string(mu));
        }
    }
    std::sort(lines.begin(), lines.end());
    std::filesystem::create_directories(dir);
    std::ofstream out(std::filesystem::path(dir) / "moebius.tsv");
    if (!out) throw invalid_input("cannot write Moebius cache in " + dir);
    for (const auto& l : lines) out << l << '\n';
}

void MoebiusCache::load(const std::string& dir) {
    std::ifstream in(std::filesystem::path(dir) / "moebius.tsv");
    if (!in) return;
    std::map<std::string, std::vector<std::pair<std::string, long long>>> pending;
    std::string line;
    while (std::getline(in, line)) {
        auto tab = line.rfind('\t');
        if (tab == std::string::npos) continue;
        std::string key = line.substr(0, tab);
        auto s1 = key.find('/');
        auto s2 = key.find('/', s1 + 1);
        auto s3 = key.find('/', s2 + 1);
        if (s1 == std::string::npos || s2 == std::string::npos || s3 == std::string::npos) continue;
        pending[key.substr(0, s3)].emplace_back(key.substr(s3 + 1), std::stoll(line.substr(tab + 1)));
    }
    for (auto& [rk, entries] : pending) {
        auto s1 = rk.find('/'), s2 = rk.find('/', s1 + 1);
        const Poset& p = poset(parse_family(rk.substr(0, s1)), std::stoi(rk.substr(s1 + 1, s2 - s1 - 1)));
        auto x = p.find(rk.substr(s2 + 1));
        if (!x) continue;
        MoebiusRow row;
        bool valid = true;
        for (const auto& [yk, mu] : entries) {
            auto y = p.find(yk);
            if (!y || !p.leq(*x, *y)) {
                valid = false;
                break;
            }
            row.emplace_back(*y, mu);
        }
        std::sort(row.begin(), row.end());
        if (!valid || row.size() != p.upset(*x).size()) continue;
        std::lock_guard lock(mu_);
        if (rows_.size() < budget_) rows_.emplace(rk, std::make_shared<const MoebiusRow>(std::move(row)));
    }
}

long long moebius(const Poset& p, const std::string& x, const std::string& y) {
    return MoebiusCache::global().value(p, p.index(x), p.index(y));
}

std::string_view map_name(MapName m) {
    switch (m) {
        case MapName::lambda: return "lambda";
        case MapName::gamma: return "gamma";
        case MapName::gamma_min: return "gamma_min";
        case MapName::rho: return "rho";
        case MapName::des: return "Des";
        case MapName::gdes: return "GDes";
        case MapName::Z: return "Z";
        case MapName::C: return "C";
        case MapName::L: return "L";
        case MapName::R: return "R";
    }
    return "?";
}

MapName parse_map_name(std::string_view name) {
    for (MapName m : {MapName::lambda, MapName::gamma, MapName::gamma_min, MapName::rho, MapName::des, MapName::gdes, MapName::Z,
                      MapName::C, MapName::L, MapName::R})
        if (name == map_name(m)) return m;
    throw invalid_input("unknown map \"" + std::string(name) + "\" (expected lambda, gamma, gamma_min, rho, Des, GDes, Z, C, L or R)");
}

Family map_source(MapName m) {
    switch (m) {
        case MapName::lambda:
        case MapName::rho:
        case MapName::des:
        case MapName::gdes: return Family::weak;
        case MapName::gamma:
        case MapName::gamma_min:
        case MapName::L:
        case MapName::R: return Family::tamari;
        case MapName::Z:
        case MapName::C: return Family::boolean;
    }
    return Family::weak;
}

Family map_target(MapName m) {
    switch (m) {
        case MapName::gamma:
        case MapName::gamma_min:
        case MapName::Z: return Family::weak;
        case MapName::lambda:
        case MapName::rho:
        case MapName::C: return Family::tamari;
        case MapName::des:
        case MapName::gdes:
        case MapName::L:
        case MapName::R: return Family::boolean;
    }
    return Family::weak;
}

std::string apply_map(MapName m, const std::string& key, int n) {
    const int amb = std::max(n - 1, 0);
    auto perm = [&] {
        Permutation s = Permutation::parse(key);
        if (s.size() != n) throw invalid_input("expected a permutation of size " + std::to_string(n));
        return s;
    };
    auto tree = [&] {
        BinaryTree t = BinaryTree::parse(key);
        if (t.size() != n) throw invalid_input("expected a tree with " + std::to_string(n) + " nodes");
        return t;
    };
    switch (m) {
        case MapName::lambda: return lambda(perm()).str();
        case MapName::rho: return rho(perm()).str();
        case MapName::des: return descents(perm()).str();
        case MapName::gdes: return global_descents(perm()).str();
        case MapName::gamma: return gamma(tree()).str();
        case MapName::gamma_min: return gamma_min(tree()).str();
        case MapName::L: return left_leaf_set(tree()).str();
        case MapName::R: return right_branch_set(tree()).str();
        case MapName::Z: return Z_map(Subset::parse(key, amb), n).str();
        case MapName::C: return C_map(Subset::parse(key, amb), n).str();
    }
    return {};
}

std::vector<int> map_table(MapName m, int n) {
    const Poset& src = poset(map_source(m), n);
    const Poset& dst = poset(map_target(m), n);
    std::vector<int> table(static_cast<std::size_t>(src.size()));
    for (int i = 0; i < src.size(); ++i) table[static_cast<std::size_t>(i)] = dst.index(apply_map(m, src.key(i), n));
    return table;
}

CheckResult check_order_preserving(MapName f, int n) {
    const Poset& src = poset(map_source(f), n);
    const Poset& dst = poset(map_target(f), n);
    auto table = map_table(f, n);
    CheckResult res;
    for (int x = 0; x < src.size(); ++x)
        for (int y : src.covers_up(x)) {
            ++res.checked;
            if (!dst.leq(table[static_cast<std::size_t>(x)], table[static_cast<std::size_t>(y)])) {
                res.ok = false;
                res.counterexample = {src.key(x), src.key(y)};
                return res;
            }
        }
    return res;
}

CheckResult check_galois(MapName f, MapName g, int n) {
    if (map_source(f) != map_target(g) || map_target(f) != map_source(g))
        throw invalid_input("maps " + std::string(map_name(f)) + " and " + std::string(map_name(g)) + " are not opposite");
    const Poset& P = poset(map_source(f), n);
    const Poset& Q = poset(map_target(f), n);
    auto ft = map_table(f, n), gt = map_table(g, n);
    CheckResult res;
    for (int x = 0; x < P.size(); ++x)
        for (int y = 0; y < Q.size(); ++y) {
            ++res.checked;
            bool lhs = Q.leq(ft[static_cast<std::size_t>(x)], y);
            bool rhs = P.leq(x, gt[static_cast<std::size_t>(y)]);
            if (lhs != rhs) {
                res.ok = false;
                res.counterexample = {P.key(x), Q.key(y)};
                return res;
            }
        }
    return res;
}

CheckResult rota_transfer_check(MapName f, MapName g, int n) {
    if (map_source(f) != map_target(g) || map_target(f) != map_source(g))
        throw invalid_input("maps " + std::string(map_name(f)) + " and " + std::string(map_name(g)) + " are not opposite");
    const Poset& P = poset(map_source(f), n);
    const Poset& Q = poset(map_target(f), n);
    auto ft = map_table(f, n), gt = map_table(g, n);
    const std::size_t qs = static_cast<std::size_t>(Q.size());
    std::vector<long long> lhs(static_cast<std::size_t>(P.size()) * qs, 0), rhs(lhs.size(), 0);
    auto& cache = MoebiusCache::global();
    for (int x = 0; x < P.size(); ++x)
        for (const auto& [y, mu] : *cache.row(P, x)) lhs[static_cast<std::size_t>(x) * qs + static_cast<std::size_t>(ft[static_cast<std::size_t>(y)])] += mu;
    for (int v = 0; v < Q.size(); ++v)
        for (const auto& [w, mu] : *cache.row(Q, v)) rhs[static_cast<std::size_t>(gt[static_cast<std::size_t>(v)]) * qs + static_cast<std::size_t>(w)] += mu;
    CheckResult res;
    for (std::size_t i = 0; i < lhs.size(); ++i) {
        ++res.checked;
        if (lhs[i] != rhs[i]) {
            res.ok = false;
            res.counterexample = {P.key(static_cast<int>(i / qs)), Q.key(static_cast<int>(i % qs))};
            return res;
        }
    }
    return res;
}

std::vector<std::pair<MapName, MapName>> galois_pairs() {
    return {{MapName::lambda, MapName::gamma}, {MapName::des, MapName::Z}, {MapName::L, MapName::C},
            {MapName::gamma, MapName::rho},    {MapName::Z, MapName::gdes},  {MapName::C, MapName::R}};
}

}  // namespace hopftrees
