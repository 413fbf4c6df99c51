#pragma once

#include <map>

#include "hopf/formal.hpp"

namespace hopf::qsym {

// Quasi-shuffles of alpha and beta, counted with multiplicity.
std::map<Composition, Integer> quasi_shuffles(const Composition& alpha, const Composition& beta);

// M_alpha * M_beta as a sum over quasi-shuffles.
Element m_product(const Composition& alpha, const Composition& beta);
// Deconcatenation: sum_p M_(a_1..a_p) (x) M_(a_{p+1}..a_k).
Tensor m_coproduct(const Composition& alpha);
// (-1)^{c(alpha)} sum over coarsenings beta of alpha of M_{reverse(beta)}.
Element m_antipode(const Composition& alpha);

// F_alpha = sum_{alpha <= beta} M_beta.
Element fundamental_in_monomial(const Composition& alpha);
// M_alpha = sum_{alpha <= beta} (-1)^{c(beta)-c(alpha)} F_beta.
Element monomial_in_fundamental(const Composition& alpha);

// Basis change for whole elements; identity when already in the target basis.
Element to_monomial(const Element& x);
Element to_fundamental(const Element& x);

// Fundamental-basis structure maps, obtained by conjugating the monomial ones.
Element f_product(const Composition& alpha, const Composition& beta);
Tensor f_coproduct(const Composition& alpha);
Element f_antipode(const Composition& alpha);

const HopfStructure& monomial_structure();
const HopfStructure& fundamental_structure();

}  // namespace hopf::qsym
