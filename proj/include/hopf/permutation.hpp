#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace hopf {

// A permutation of {1..n} in one-line notation. The empty word (n = 0) is the
// unit index of SSym. Ordered by degree, then lexicographically on the word.
class Permutation {
public:
    using Word = boost::container::small_vector<int, 12>;

    Permutation() = default;

    // Validating constructor; throws DomainError naming the offending entry.
    static Permutation from_word(std::span<const int> word);
    static Permutation from_word(std::initializer_list<int> word);
    static Permutation identity(int n);

    int degree() const noexcept { return static_cast<int>(word_.size()); }
    std::span<const int> word() const noexcept { return {word_.data(), word_.size()}; }
    // 1-based position, 1-based value: u(i).
    int operator()(int position) const { return word_[static_cast<std::size_t>(position - 1)]; }
    bool is_identity() const noexcept;

    friend bool operator==(const Permutation& a, const Permutation& b) noexcept {
        return a.word_ == b.word_;
    }
    friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) noexcept;

private:
    explicit Permutation(Word word) : word_(std::move(word)) {}
    friend Permutation make_unchecked(Word word);

    Word word_;
};

Permutation make_permutation(std::span<const int> word);

// A subset of [n-1] together with its ambient degree n.
class DescentSet {
public:
    DescentSet() = default;
    // Members are sorted and deduplicated; each must lie in [1, n-1].
    DescentSet(std::vector<int> members, int degree);

    static DescentSet empty(int degree) { return DescentSet({}, degree); }
    static DescentSet full(int degree);

    int degree() const noexcept { return degree_; }
    const std::vector<int>& members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool contains(int p) const noexcept;
    // Throws DomainError when degrees differ.
    bool is_subset_of(const DescentSet& other) const;
    // Bit p-1 set iff p is a member.
    std::uint32_t bits() const noexcept;
    static DescentSet from_bits(std::uint32_t bits, int degree);

    friend bool operator==(const DescentSet&, const DescentSet&) = default;
    friend std::strong_ordering operator<=>(const DescentSet& a, const DescentSet& b) noexcept;

private:
    std::vector<int> members_;
    int degree_ = 0;
};

Permutation inverse(const Permutation& u);
// (w o u)(i) = w(u(i)); throws on degree mismatch.
Permutation compose(const Permutation& w, const Permutation& u);
Permutation longest(int n);
// Number of pairs i < j with u_i > u_j.
int inversions(const Permutation& u);

// The permutation order-isomorphic to a sequence of distinct integers.
Permutation standardize(std::span<const int> seq);

DescentSet descents(const Permutation& u);
// Positions p with {u_1..u_p} = {n, ..., n-p+1}.
DescentSet global_descents(const Permutation& u);

// u_1..u_p, v_1+p, ..., v_q+p.
Permutation direct_sum(const Permutation& u, const Permutation& v);

// st(v_1..v_{p_1}) x st(v_{p_1+1}..v_{p_2}) x ... for S = {p_1 < ... < p_k}.
Permutation restrict(const Permutation& v, const DescentSet& S);

// Blocks [0, p_1), [p_1, p_2), ... [p_k, n) of positions, as half-open pairs.
std::vector<std::pair<int, int>> blocks(const DescentSet& S);

// All of S_n in lexicographic order. Guarded by max_degree().
std::vector<Permutation> all_permutations(int n);

// Sh(p,q): permutations of S_{p+q} with descent set inside {p}, in
// lexicographic order.
std::vector<Permutation> grassmannians(int p, int q);
// Sh(S): permutations with descent set inside S, in lexicographic order.
std::vector<Permutation> grassmannians(const DescentSet& S);

// (u x v) o zeta^{-1}; throws unless zeta is in Sh(deg u, deg v).
Permutation rho(const Permutation& zeta, const Permutation& u, const Permutation& v);

}  // namespace hopf

template <>
struct std::hash<hopf::Permutation> {
    std::size_t operator()(const hopf::Permutation& u) const noexcept;
};
