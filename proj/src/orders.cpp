#include "hopf/orders.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>
#include <climits>

#include <fmt/format.h>

#include "hopf/degree_guard.hpp"
#include "hopf/errors.hpp"

namespace hopf {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int x : parts_) {
        if (x < 1) throw DomainError(fmt::format("composition part {} is not positive", x));
        weight_ += x;
    }
}

std::strong_ordering operator<=>(const Composition& a, const Composition& b) noexcept {
    if (auto c = a.weight_ <=> b.weight_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.parts_.begin(), a.parts_.end(),
                                                  b.parts_.begin(), b.parts_.end());
}

Composition subset_to_composition(const DescentSet& S) {
    std::vector<int> parts;
    int prev = 0;
    for (int p : S.members()) {
        parts.push_back(p - prev);
        prev = p;
    }
    if (S.degree() > 0) parts.push_back(S.degree() - prev);
    return Composition(std::move(parts));
}

DescentSet composition_to_subset(const Composition& alpha) {
    std::vector<int> members;
    int sum = 0;
    for (std::size_t i = 0; i + 1 < alpha.parts().size(); ++i) {
        sum += alpha.parts()[i];
        members.push_back(sum);
    }
    return DescentSet(std::move(members), alpha.weight());
}

namespace {
void require_same_weight(const Composition& a, const Composition& b) {
    if (a.weight() != b.weight()) {
        throw DomainError(
            fmt::format("compositions of {} and {} are not comparable", a.weight(), b.weight()));
    }
}
}  // namespace

bool refine_leq(const Composition& alpha, const Composition& beta) {
    require_same_weight(alpha, beta);
    return composition_to_subset(alpha).is_subset_of(composition_to_subset(beta));
}

int boolean_mobius(const Composition& alpha, const Composition& beta) {
    if (!refine_leq(alpha, beta)) return 0;
    return (beta.length() - alpha.length()) % 2 == 0 ? 1 : -1;
}

Composition reverse(const Composition& alpha) {
    std::vector<int> parts(alpha.parts().rbegin(), alpha.parts().rend());
    return Composition(std::move(parts));
}

std::vector<DescentSet> subsets(int n) {
    if (n < 0) throw DomainError(fmt::format("negative degree {}", n));
    if (n > 31) throw DomainError(fmt::format("too many subsets of [{}]", n - 1));
    std::vector<DescentSet> out;
    const std::uint32_t count = n == 0 ? 1u : (1u << (n - 1));
    out.reserve(count);
    for (std::uint32_t b = 0; b < count; ++b) out.push_back(DescentSet::from_bits(b, n));
    return out;
}

std::vector<Composition> compositions(int n) {
    std::vector<Composition> out;
    for (const auto& S : subsets(n)) out.push_back(subset_to_composition(S));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Permutation> weak_covers_up(const Permutation& u) {
    const int n = u.degree();
    std::vector<int> pos(static_cast<std::size_t>(n) + 1);
    for (int i = 1; i <= n; ++i) pos[static_cast<std::size_t>(u(i))] = i;
    std::vector<Permutation> out;
    for (int k = 1; k < n; ++k) {
        const int a = pos[static_cast<std::size_t>(k)], b = pos[static_cast<std::size_t>(k + 1)];
        if (a < b) {
            std::vector<int> w(u.word().begin(), u.word().end());
            std::swap(w[static_cast<std::size_t>(a - 1)], w[static_cast<std::size_t>(b - 1)]);
            out.push_back(Permutation::from_word(w));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {
void require_same_degree(const Permutation& u, const Permutation& v) {
    if (u.degree() != v.degree()) {
        throw DomainError(fmt::format("permutations of degrees {} and {} are not comparable",
                                      u.degree(), v.degree()));
    }
}
}  // namespace

std::uint64_t inversion_mask(const Permutation& u) {
    const int n = u.degree();
    if (n > 11) throw DomainError(fmt::format("inversion masks need degree <= 11, got {}", n));
    std::uint64_t mask = 0;
    int bit = 0;
    for (int j = 2; j <= n; ++j)
        for (int i = 1; i < j; ++i, ++bit)
            if (u(i) > u(j)) mask |= std::uint64_t{1} << bit;
    return mask;
}

bool weak_leq(const Permutation& u, const Permutation& v) {
    require_same_degree(u, v);
    const int n = u.degree();
    if (n <= 11) return mask_leq(inversion_mask(u), inversion_mask(v));
    for (int j = 2; j <= n; ++j)
        for (int i = 1; i < j; ++i)
            if (u(i) > u(j) && v(i) < v(j)) return false;
    return true;
}

std::vector<Permutation> weak_upset(const Permutation& u) {
    check_degree(u.degree(), "enumerating a weak-order up-set");
    std::vector<Permutation> seen{u};
    std::deque<Permutation> queue{u};
    std::unordered_set<Permutation> visited{u};
    while (!queue.empty()) {
        Permutation x = std::move(queue.front());
        queue.pop_front();
        for (auto& y : weak_covers_up(x)) {
            if (visited.insert(y).second) {
                seen.push_back(y);
                queue.push_back(std::move(y));
            }
        }
    }
    std::sort(seen.begin(), seen.end());
    return seen;
}

std::vector<Permutation> weak_interval(const Permutation& u, const Permutation& v) {
    require_same_degree(u, v);
    if (!weak_leq(u, v)) return {};
    std::vector<Permutation> out;
    for (auto& t : weak_upset(u))
        if (weak_leq(t, v)) out.push_back(std::move(t));
    return out;
}

int weak_mobius(const Permutation& u, const Permutation& v) {
    require_same_degree(u, v);
    return weak_order_cache().mobius(u, v);
}

Permutation z_of(const DescentSet& S) {
    std::vector<int> word;
    int next_top = S.degree();
    for (auto [a, b] : blocks(S)) {
        const int size = b - a;
        for (int k = size - 1; k >= 0; --k) word.push_back(next_top - k);
        next_top -= size;
    }
    return Permutation::from_word(word);
}

int lex_rank(const Permutation& u) {
    const int n = u.degree();
    int rank = 0;
    for (int i = 1; i <= n; ++i) {
        int smaller_after = 0;
        for (int j = i + 1; j <= n; ++j)
            if (u(j) < u(i)) ++smaller_after;
        rank = rank * (n - i + 1) + smaller_after;
    }
    return rank;
}

const WeakOrderCache::Table& WeakOrderCache::table(int n) {
    check_degree(n, "building the weak order table");
    if (n > 11) throw DomainError(fmt::format("weak order tables need degree <= 11, got {}", n));
    std::lock_guard lock(mutex_);
    auto& slot = tables_[n];
    if (!slot) {
        auto t = std::make_unique<Table>();
        t->degree = n;
        t->perms = all_permutations(n);
        for (const auto& p : t->perms) {
            t->masks.push_back(inversion_mask(p));
            t->lengths.push_back(inversions(p));
            std::vector<int> ups;
            for (const auto& c : weak_covers_up(p)) ups.push_back(lex_rank(c));
            t->covers_up.push_back(std::move(ups));
        }
        slot = std::move(t);
    }
    return *slot;
}

const WeakOrderCache::MobiusRow& WeakOrderCache::mobius_row(const Permutation& u) {
    const Table& t = table(u.degree());
    const int ur = lex_rank(u);
    {
        std::lock_guard lock(mutex_);
        auto it = rows_.find({u.degree(), ur});
        if (it != rows_.end()) return *it->second;
    }
    std::vector<int> up = upset(u.degree(), ur);
    std::stable_sort(up.begin(), up.end(), [&](int a, int b) {
        return t.lengths[static_cast<std::size_t>(a)] < t.lengths[static_cast<std::size_t>(b)];
    });
    // mu(u,u) = 1, mu(u,v) = -sum_{u <= s < v} mu(u,s).
    std::vector<int> mu(up.size(), 0);
    mu[0] = 1;
    for (std::size_t i = 1; i < up.size(); ++i) {
        const auto vm = t.masks[static_cast<std::size_t>(up[i])];
        int sum = 0;
        for (std::size_t j = 0; j < i; ++j)
            if (mu[j] != 0 && mask_leq(t.masks[static_cast<std::size_t>(up[j])], vm)) sum += mu[j];
        mu[i] = -sum;
    }
    auto row = std::make_unique<MobiusRow>();
    for (std::size_t i = 0; i < up.size(); ++i)
        if (mu[i] != 0) row->emplace_back(up[i], mu[i]);
    std::sort(row->begin(), row->end());
    std::lock_guard lock(mutex_);
    auto& slot = rows_[{u.degree(), ur}];
    if (!slot) slot = std::move(row);
    return *slot;
}

const std::vector<int>& WeakOrderCache::upset(int n, int rank) {
    const Table& t = table(n);
    {
        std::lock_guard lock(mutex_);
        auto it = upsets_.find({n, rank});
        if (it != upsets_.end()) return *it->second;
    }
    auto up = std::make_unique<std::vector<int>>(1, rank);
    std::vector<char> visited(t.perms.size(), 0);
    visited[static_cast<std::size_t>(rank)] = 1;
    for (std::size_t head = 0; head < up->size(); ++head) {
        for (int c : t.covers_up[static_cast<std::size_t>((*up)[head])]) {
            if (!visited[static_cast<std::size_t>(c)]) {
                visited[static_cast<std::size_t>(c)] = 1;
                up->push_back(c);
            }
        }
    }
    std::sort(up->begin(), up->end());
    std::lock_guard lock(mutex_);
    auto& slot = upsets_[{n, rank}];
    if (!slot) slot = std::move(up);
    return *slot;
}

int WeakOrderCache::mobius(const Permutation& u, const Permutation& v) {
    require_same_degree(u, v);
    const auto& row = mobius_row(u);
    const int vr = lex_rank(v);
    auto it = std::lower_bound(row.begin(), row.end(), std::pair<int, int>{vr, INT_MIN});
    return (it != row.end() && it->first == vr) ? it->second : 0;
}

void WeakOrderCache::clear() {
    std::lock_guard lock(mutex_);
    rows_.clear();
    upsets_.clear();
    tables_.clear();
}

WeakOrderCache& weak_order_cache() {
    static WeakOrderCache cache;
    return cache;
}

}  // namespace hopf
