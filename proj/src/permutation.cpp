#include "hopf/permutation.hpp"

#include <algorithm>
#include <numeric>

#include <fmt/format.h>

#include "hopf/degree_guard.hpp"
#include "hopf/errors.hpp"

namespace hopf {

Permutation make_unchecked(Permutation::Word word) { return Permutation(std::move(word)); }

Permutation Permutation::from_word(std::span<const int> word) {
    const int n = static_cast<int>(word.size());
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (std::size_t i = 0; i < word.size(); ++i) {
        const int x = word[i];
        if (x < 1 || x > n) {
            throw DomainError(fmt::format(
                "value {} at position {} is out of range for a permutation of {}", x, i + 1, n));
        }
        if (seen[static_cast<std::size_t>(x)]) {
            throw DomainError(fmt::format("duplicate value {} at position {}", x, i + 1));
        }
        seen[static_cast<std::size_t>(x)] = true;
    }
    return Permutation(Word(word.begin(), word.end()));
}

Permutation Permutation::from_word(std::initializer_list<int> word) {
    return from_word(std::span<const int>(word.begin(), word.size()));
}

Permutation Permutation::identity(int n) {
    Word w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
}

bool Permutation::is_identity() const noexcept {
    for (std::size_t i = 0; i < word_.size(); ++i)
        if (word_[i] != static_cast<int>(i) + 1) return false;
    return true;
}

std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) noexcept {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    return std::lexicographical_compare_three_way(a.word_.begin(), a.word_.end(), b.word_.begin(),
                                                  b.word_.end());
}

Permutation make_permutation(std::span<const int> word) { return Permutation::from_word(word); }

DescentSet::DescentSet(std::vector<int> members, int degree)
    : members_(std::move(members)), degree_(degree) {
    if (degree < 0) throw DomainError(fmt::format("negative degree {}", degree));
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    for (int p : members_) {
        if (p < 1 || p > degree - 1) {
            throw DomainError(
                fmt::format("descent position {} outside [1, {}] for degree {}", p, degree - 1, degree));
        }
    }
}

DescentSet DescentSet::full(int degree) {
    std::vector<int> m(static_cast<std::size_t>(std::max(degree - 1, 0)));
    std::iota(m.begin(), m.end(), 1);
    return DescentSet(std::move(m), degree);
}

bool DescentSet::contains(int p) const noexcept {
    return std::binary_search(members_.begin(), members_.end(), p);
}

bool DescentSet::is_subset_of(const DescentSet& other) const {
    if (degree_ != other.degree_) {
        throw DomainError(fmt::format("descent sets of degrees {} and {} are not comparable",
                                      degree_, other.degree_));
    }
    return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                         members_.end());
}

std::uint32_t DescentSet::bits() const noexcept {
    std::uint32_t b = 0;
    for (int p : members_) b |= 1u << (p - 1);
    return b;
}

DescentSet DescentSet::from_bits(std::uint32_t bits, int degree) {
    std::vector<int> m;
    for (int p = 1; p < degree; ++p)
        if (bits & (1u << (p - 1))) m.push_back(p);
    return DescentSet(std::move(m), degree);
}

std::strong_ordering operator<=>(const DescentSet& a, const DescentSet& b) noexcept {
    if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.members_.begin(), a.members_.end(),
                                                  b.members_.begin(), b.members_.end());
}

Permutation inverse(const Permutation& u) {
    Permutation::Word w(static_cast<std::size_t>(u.degree()));
    for (int i = 1; i <= u.degree(); ++i) w[static_cast<std::size_t>(u(i) - 1)] = i;
    return make_unchecked(std::move(w));
}

Permutation compose(const Permutation& w, const Permutation& u) {
    if (w.degree() != u.degree()) {
        throw DomainError(
            fmt::format("cannot compose permutations of degrees {} and {}", w.degree(), u.degree()));
    }
    Permutation::Word r(static_cast<std::size_t>(u.degree()));
    for (int i = 1; i <= u.degree(); ++i) r[static_cast<std::size_t>(i - 1)] = w(u(i));
    return make_unchecked(std::move(r));
}

Permutation longest(int n) {
    Permutation::Word w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = n - i;
    return make_unchecked(std::move(w));
}

int inversions(const Permutation& u) {
    const auto w = u.word();
    int count = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) ++count;
    return count;
}

Permutation standardize(std::span<const int> seq) {
    std::vector<std::size_t> order(seq.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return seq[a] < seq[b]; });
    Permutation::Word w(seq.size());
    for (std::size_t r = 0; r < order.size(); ++r) {
        if (r > 0 && seq[order[r]] == seq[order[r - 1]])
            throw DomainError(fmt::format("cannot standardize: duplicate entry {}", seq[order[r]]));
        w[order[r]] = static_cast<int>(r) + 1;
    }
    return make_unchecked(std::move(w));
}

DescentSet descents(const Permutation& u) {
    std::vector<int> d;
    for (int p = 1; p < u.degree(); ++p)
        if (u(p) > u(p + 1)) d.push_back(p);
    return DescentSet(std::move(d), u.degree());
}

DescentSet global_descents(const Permutation& u) {
    const int n = u.degree();
    std::vector<int> g;
    int min_prefix = n + 1;
    for (int p = 1; p < n; ++p) {
        min_prefix = std::min(min_prefix, u(p));
        // The first p values are the p largest iff their minimum is n-p+1.
        if (min_prefix == n - p + 1) g.push_back(p);
    }
    return DescentSet(std::move(g), n);
}

Permutation direct_sum(const Permutation& u, const Permutation& v) {
    Permutation::Word w(u.word().begin(), u.word().end());
    const int p = u.degree();
    for (int x : v.word()) w.push_back(x + p);
    return make_unchecked(std::move(w));
}

std::vector<std::pair<int, int>> blocks(const DescentSet& S) {
    std::vector<std::pair<int, int>> out;
    int start = 0;
    for (int p : S.members()) {
        out.emplace_back(start, p);
        start = p;
    }
    out.emplace_back(start, S.degree());
    return out;
}

Permutation restrict(const Permutation& v, const DescentSet& S) {
    if (S.degree() != v.degree()) {
        throw DomainError(fmt::format("cannot restrict a permutation of degree {} to a subset of degree {}",
                                      v.degree(), S.degree()));
    }
    Permutation result;
    for (auto [a, b] : blocks(S)) {
        auto block = standardize(v.word().subspan(static_cast<std::size_t>(a),
                                                  static_cast<std::size_t>(b - a)));
        result = direct_sum(result, block);
    }
    return result;
}

std::vector<Permutation> all_permutations(int n) {
    check_degree(n, "enumerating the symmetric group");
    std::vector<Permutation> out;
    Permutation::Word w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    do {
        out.push_back(make_unchecked(w));
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

std::vector<Permutation> grassmannians(const DescentSet& S) {
    check_degree(S.degree(), "enumerating Grassmannian permutations");
    const int n = S.degree();
    // Assign each value 1..n to a block; within a block values increase, so
    // the assignment determines zeta.
    const auto bl = blocks(S);
    std::vector<int> remaining;
    for (auto [a, b] : bl) remaining.push_back(b - a);
    std::vector<Permutation> out;
    Permutation::Word w(static_cast<std::size_t>(n));
    std::vector<int> fill(bl.size(), 0);
    std::function<void(int)> place = [&](int value) {
        if (value > n) {
            out.push_back(make_unchecked(w));
            return;
        }
        for (std::size_t k = 0; k < bl.size(); ++k) {
            if (remaining[k] == 0) continue;
            --remaining[k];
            w[static_cast<std::size_t>(bl[k].first + fill[k])] = value;
            ++fill[k];
            place(value + 1);
            --fill[k];
            ++remaining[k];
        }
    };
    place(1);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Permutation> grassmannians(int p, int q) {
    if (p < 0 || q < 0) throw DomainError(fmt::format("negative block size in Sh({},{})", p, q));
    const int n = p + q;
    if (p == 0 || q == 0) return grassmannians(DescentSet::empty(n));
    return grassmannians(DescentSet({p}, n));
}

Permutation rho(const Permutation& zeta, const Permutation& u, const Permutation& v) {
    const int p = u.degree(), q = v.degree();
    if (zeta.degree() != p + q) {
        throw DomainError(
            fmt::format("shuffle has degree {}, expected {}", zeta.degree(), p + q));
    }
    for (int i = 1; i < zeta.degree(); ++i) {
        if (i != p && zeta(i) > zeta(i + 1))
            throw DomainError(fmt::format("permutation is not in Sh({},{}): descent at {}", p, q, i));
    }
    return compose(direct_sum(u, v), inverse(zeta));
}

}  // namespace hopf

std::size_t std::hash<hopf::Permutation>::operator()(const hopf::Permutation& u) const noexcept {
    std::size_t h = static_cast<std::size_t>(u.degree());
    for (int x : u.word()) h = h * 31 + static_cast<std::size_t>(x);
    return h;
}
