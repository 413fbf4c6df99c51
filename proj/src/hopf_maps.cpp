#include "hopf/hopf_maps.hpp"

#include <fmt/format.h>

#include "hopf/errors.hpp"
#include "hopf/qsym.hpp"
#include "hopf/ssym.hpp"

namespace hopf {

Element descent_map(const Element& x) {
    if (x.space().algebra != AlgebraTag::SSym) throw DomainError("the descent map takes an SSym element");
    if (x.space().basis == BasisTag::Fundamental) {
        return extend_linear(
            [](const Index& i) {
                return Element::basis(kQSymF, subset_to_composition(descents(as_permutation(i))));
            },
            kQSymF, x);
    }
    return extend_linear(
        [](const Index& i) {
            const auto& u = as_permutation(i);
            if (!is_closed(u)) return Element(kQSymM);
            return Element::basis(kQSymM, subset_to_composition(global_descents(u)));
        },
        kQSymM, x);
}

bool is_closed(const Permutation& u) { return descents(u) == global_descents(u); }

Element splitting_z(const Element& x) {
    if (x.space().algebra != AlgebraTag::QSym) throw DomainError("the splitting map takes a QSym element");
    return extend_linear(
        [](const Index& i) { return Element::basis(kSSymM, z_of(composition_to_subset(as_composition(i)))); },
        kSSymM, qsym::to_monomial(x));
}

int global_descent_grade(const Permutation& u) {
    if (u.degree() == 0) return 0;
    return static_cast<int>(global_descents(u).size()) + 1;
}

std::vector<Permutation> primitive_basis(int n) {
    std::vector<Permutation> out;
    if (n == 0) return out;
    for (auto& u : all_permutations(n))
        if (global_descents(u).size() == 0) out.push_back(std::move(u));
    return out;
}

std::vector<long long> grade_counts(int n) {
    std::vector<long long> counts(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& u : all_permutations(n)) ++counts[static_cast<std::size_t>(global_descent_grade(u))];
    return counts;
}

namespace {

const HopfStructure& structure_of(Space s) {
    if (s == kSSymF) return ssym::fundamental_structure();
    if (s == kSSymM) return ssym::monomial_structure();
    if (s == kQSymF) return qsym::fundamental_structure();
    return qsym::monomial_structure();
}

bool all_slots_positive(const Tensor::Key& key) {
    for (const auto& i : key)
        if (degree(i) == 0) return false;
    return true;
}

}  // namespace

FiltrationReport coradical_level(const Element& x) {
    const Element y = x.space().algebra == AlgebraTag::SSym ? ssym::to_fundamental(x) : qsym::to_fundamental(x);
    const HopfStructure& h = structure_of(y.space());
    for (int k = 0;; ++k) {
        Tensor t = iterated_coproduct(h, y, k);
        bool vanishes = true;
        for (const auto& [key, c] : t.terms()) {
            if (all_slots_positive(key)) {
                vanishes = false;
                break;
            }
        }
        if (vanishes) return {x, k, std::move(t)};
        // Each slot of a surviving term has degree >= 1.
        if (k > x.max_degree()) throw InternalError("coradical level exceeded the degree");
    }
}

bool kernel_member(const Element& x) {
    if (x.space().algebra != AlgebraTag::SSym) throw DomainError("kernel membership is tested on SSym elements");
    const Tensor delta = comultiply(structure_of(x.space()), x);
    const Space target = x.space().basis == BasisTag::Fundamental ? kQSymF : kQSymM;
    const Tensor lhs = map_slot(delta, 1, target, [&](const Index& i) {
        return descent_map(Element::basis(x.space(), i));
    });
    return lhs == tensor(x, Element::unit(target));
}

std::vector<Permutation> kernel_basis(int n) {
    std::vector<Permutation> out;
    for (auto& u : all_permutations(n)) {
        // The word ends in 1, 2, ..., m exactly when its last entry m is
        // preceded by m-1, ..., 1 in order.
        bool excluded = false;
        if (n > 0) {
            const int m = u(n);
            excluded = m <= n;
            for (int i = 0; i < m && excluded; ++i) excluded = u(n - i) == m - i;
        }
        if (!excluded) out.push_back(std::move(u));
    }
    return out;
}

Element cocycle_sigma(const Composition& s, const Composition& t) {
    const auto& hq = qsym::monomial_structure();
    const auto& hs = ssym::monomial_structure();
    const Element ms = Element::basis(kQSymM, s), mt = Element::basis(kQSymM, t);
    const Tensor ds = comultiply(hq, ms), dt = comultiply(hq, mt);
    Element out(kSSymM);
    for (const auto& [a, ca] : ds.terms()) {
        for (const auto& [b, cb] : dt.terms()) {
            const Element gamma_a1 = splitting_z(Element::basis(kQSymM, a[0]));
            const Element gamma_b1 = splitting_z(Element::basis(kQSymM, b[0]));
            const Element k2 = multiply(hq, Element::basis(kQSymM, a[1]), Element::basis(kQSymM, b[1]));
            const Element tail = apply_antipode(hs, splitting_z(k2));
            out += multiply(hs, multiply(hs, gamma_a1, gamma_b1), tail) * (ca * cb);
        }
    }
    return out;
}

}  // namespace hopf
