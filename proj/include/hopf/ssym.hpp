#pragma once

#include <vector>

#include "hopf/formal.hpp"

namespace hopf::ssym {

// F_u * F_v = sum over zeta in Sh(p,q) of F_{(u x v) zeta^{-1}}.
Element f_product(const Permutation& u, const Permutation& v);
// sum_p F_{st(u_1..u_p)} (x) F_{st(u_{p+1}..u_n)}.
Tensor f_coproduct(const Permutation& u);

// M_u = sum_{u <= v} mu(u,v) F_v, written in the F basis.
Element monomial_in_fundamental(const Permutation& u);
// F_u = sum_{u <= v} M_v, written in the M basis.
Element fundamental_in_monomial(const Permutation& u);

Element to_monomial(const Element& x);
Element to_fundamental(const Element& x);

// Splitting only at global descents (and the two ends).
Tensor m_coproduct(const Permutation& u);

struct AlphaQuery {
    Permutation u;
    Permutation v;
    Permutation w;
};

// A^w_{u,v}: the Grassmannians zeta in Sh(p,q) for which (u,v) is the
// maximum of the preimage of [1,w] under rho_zeta. Computed both from that
// definition and from the two-condition description; disagreement throws
// InternalError.
std::vector<Permutation> alpha_set(const AlphaQuery& q);
int alpha(const AlphaQuery& q);

// M_u * M_v = sum_w alpha^w_{u,v} M_w.
Element m_product(const Permutation& u, const Permutation& v);

struct LambdaCoefficient {
    Permutation target;
    Integer coefficient;
    // Subsets S with Des(w^{-1} v_S) contained in S; odd ones count +1.
    std::vector<DescentSet> witnesses;
};

struct KappaCoefficient {
    Permutation target;
    Integer coefficient;
    // C_{GDes(v)}(v, w).
    std::vector<Permutation> witnesses;
};

LambdaCoefficient lambda(const Permutation& v, const Permutation& w);
KappaCoefficient kappa(const Permutation& v, const Permutation& w);

// S(F_v) = sum_w lambda(v,w) F_w.
Element antipode_f(const Permutation& v);
// S(M_v) = (-1)^{#GDes(v)+1} sum_w kappa(v,w) M_w.
Element antipode_m(const Permutation& v);

// S applied k times, in the basis of x.
Element antipode_power(const Element& x, int k);

// Bilinear extension of <F_u, F_v> = [u = v^{-1}].
Integer duality_pairing(const Element& x, const Element& y);

// Structure maps from the closed formulas in each basis.
const HopfStructure& fundamental_structure();
const HopfStructure& monomial_structure();
// Monomial basis with every map computed through the fundamental basis.
// Independent of the monomial-basis formulas; used as their oracle.
const HopfStructure& monomial_structure_by_conversion();

}  // namespace hopf::ssym
