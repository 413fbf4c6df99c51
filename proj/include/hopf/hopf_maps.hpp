#pragma once

#include <vector>

#include "hopf/formal.hpp"

namespace hopf {

// D: SSym -> QSym. F_u maps to F_{Des(u)}; M_u maps to M_{GDes(u)} when u is
// closed and to 0 otherwise. The image stays in the basis of x.
Element descent_map(const Element& x);

// Des(u) = GDes(u).
bool is_closed(const Permutation& u);

// Z: QSym -> SSym, M_S maps to M_{Z(S)}. Fundamental input is converted first.
Element splitting_z(const Element& x);

// k such that u has exactly k-1 global descents; 0 for the unit.
int global_descent_grade(const Permutation& u);
// Permutations of degree n without global descents.
std::vector<Permutation> primitive_basis(int n);
// counts[k] = number of u in S_n with grade k.
std::vector<long long> grade_counts(int n);

struct FiltrationReport {
    Element element;
    int level = 0;
    // Delta^{(level)}(x), whose all-positive-degree component vanishes.
    Tensor certificate;
};

// Least k with Delta^{(k)}(x) inside sum_{i+j=k} C^{(x)i} (x) C^{(0)} (x) C^{(x)j}.
// SSym input is expanded in the F basis first.
FiltrationReport coradical_level(const Element& x);

// sum x_1 (x) D(x_2) = x (x) 1.
bool kernel_member(const Element& x);
// u in S_n whose word does not end in 1, 2, ..., n-k for any k < n.
std::vector<Permutation> kernel_basis(int n);

// sigma(M_S, M_T) = sum gamma(k_1) gamma(k'_1) S(gamma(k_2 k'_2)) with gamma = Z.
Element cocycle_sigma(const Composition& s, const Composition& t);

}  // namespace hopf
