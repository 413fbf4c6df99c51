#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "hopf/permutation.hpp"

namespace hopf {

// An ordered list of positive parts; the empty list is the composition of 0.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);
    Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const noexcept { return parts_; }
    int weight() const noexcept { return weight_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }

    friend bool operator==(const Composition&, const Composition&) = default;
    // Weight first, then lexicographic on the parts.
    friend std::strong_ordering operator<=>(const Composition& a, const Composition& b) noexcept;

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

Composition subset_to_composition(const DescentSet& S);
// I(alpha): partial sums without the last.
DescentSet composition_to_subset(const Composition& alpha);
// alpha <= beta iff I(alpha) is contained in I(beta), i.e. beta refines alpha.
bool refine_leq(const Composition& alpha, const Composition& beta);
// (-1)^{c(beta)-c(alpha)} when alpha <= beta, else 0.
int boolean_mobius(const Composition& alpha, const Composition& beta);
Composition reverse(const Composition& alpha);
// All compositions of n, in canonical order.
std::vector<Composition> compositions(int n);
// All subsets of [n-1] as descent sets of degree n, ordered by bit pattern.
std::vector<DescentSet> subsets(int n);

// Covers in the weak order: swap the values k and k+1 when k precedes k+1.
std::vector<Permutation> weak_covers_up(const Permutation& u);
// Reachability in the cover digraph, decided by containment of the sets of
// inverted position pairs.
bool weak_leq(const Permutation& u, const Permutation& v);
// [u, v] in canonical order; empty when u is not below v.
std::vector<Permutation> weak_interval(const Permutation& u, const Permutation& v);
// The up-set {v : u <= v}, found by breadth-first search over covers.
std::vector<Permutation> weak_upset(const Permutation& u);
int weak_mobius(const Permutation& u, const Permutation& v);

// Z(S): the maximum permutation with descent set S.
Permutation z_of(const DescentSet& S);

// Bit (i, j) for positions i < j is set when u_i > u_j. Requires n <= 11.
std::uint64_t inversion_mask(const Permutation& u);
inline bool mask_leq(std::uint64_t a, std::uint64_t b) noexcept { return (a & ~b) == 0; }

// Per-degree memo tables for the weak order. Permutations are addressed by
// their lexicographic rank in S_n.
class WeakOrderCache {
public:
    struct Table {
        int degree = 0;
        std::vector<Permutation> perms;
        std::vector<std::uint64_t> masks;
        std::vector<int> lengths;
        std::vector<std::vector<int>> covers_up;
    };

    // Nonzero Moebius values mu(u, v) over v, sorted by rank of v.
    using MobiusRow = std::vector<std::pair<int, int>>;

    const Table& table(int n);
    const MobiusRow& mobius_row(const Permutation& u);
    // Ranks of {v : u <= v}, found by breadth-first search over covers.
    const std::vector<int>& upset(int n, int rank);
    int mobius(const Permutation& u, const Permutation& v);

    void clear();

private:
    std::mutex mutex_;
    std::map<int, std::unique_ptr<Table>> tables_;
    std::map<std::pair<int, int>, std::unique_ptr<MobiusRow>> rows_;
    std::map<std::pair<int, int>, std::unique_ptr<std::vector<int>>> upsets_;
};

WeakOrderCache& weak_order_cache();

// Lexicographic rank of u within S_n.
int lex_rank(const Permutation& u);

}  // namespace hopf
