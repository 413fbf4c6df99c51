#include "hopf/qsym.hpp"

#include "hopf/errors.hpp"

namespace hopf::qsym {

namespace {

using Parts = std::vector<int>;

void shuffle_into(std::map<Composition, Integer>& out, Parts& prefix, std::span<const int> a,
                  std::span<const int> b) {
    if (a.empty() || b.empty()) {
        Parts full = prefix;
        full.insert(full.end(), a.begin(), a.end());
        full.insert(full.end(), b.begin(), b.end());
        out[Composition(std::move(full))] += 1;
        return;
    }
    prefix.push_back(a[0]);
    shuffle_into(out, prefix, a.subspan(1), b);
    prefix.back() = b[0];
    shuffle_into(out, prefix, a, b.subspan(1));
    prefix.back() = a[0] + b[0];
    shuffle_into(out, prefix, a.subspan(1), b.subspan(1));
    prefix.pop_back();
}

Composition slice(const Composition& alpha, std::size_t from, std::size_t to) {
    return Composition(Parts(alpha.parts().begin() + static_cast<std::ptrdiff_t>(from),
                             alpha.parts().begin() + static_cast<std::ptrdiff_t>(to)));
}

void require_space(const Element& x) {
    if (x.space().algebra != AlgebraTag::QSym) throw DomainError("expected a QSym element");
}

}  // namespace

std::map<Composition, Integer> quasi_shuffles(const Composition& alpha, const Composition& beta) {
    std::map<Composition, Integer> out;
    Parts prefix;
    shuffle_into(out, prefix, alpha.parts(), beta.parts());
    return out;
}

Element m_product(const Composition& alpha, const Composition& beta) {
    Element out(kQSymM);
    for (const auto& [gamma, count] : quasi_shuffles(alpha, beta)) out.add_term(gamma, count);
    return out;
}

Tensor m_coproduct(const Composition& alpha) {
    Tensor out({kQSymM, kQSymM});
    const std::size_t k = alpha.parts().size();
    for (std::size_t p = 0; p <= k; ++p) out.add_term({slice(alpha, 0, p), slice(alpha, p, k)}, 1);
    return out;
}

Element m_antipode(const Composition& alpha) {
    Element out(kQSymM);
    const Integer sign = alpha.length() % 2 == 0 ? 1 : -1;
    // Coarsenings of alpha correspond to subsets of I(alpha).
    const DescentSet I = composition_to_subset(alpha);
    const std::size_t m = I.size();
    for (std::uint32_t bits = 0; bits < (1u << m); ++bits) {
        std::vector<int> members;
        for (std::size_t i = 0; i < m; ++i)
            if (bits & (1u << i)) members.push_back(I.members()[i]);
        const Composition beta = subset_to_composition(DescentSet(std::move(members), alpha.weight()));
        out.add_term(reverse(beta), sign);
    }
    return out;
}

Element fundamental_in_monomial(const Composition& alpha) {
    Element out(kQSymM);
    for (const auto& beta : compositions(alpha.weight()))
        if (refine_leq(alpha, beta)) out.add_term(beta, 1);
    return out;
}

Element monomial_in_fundamental(const Composition& alpha) {
    Element out(kQSymF);
    for (const auto& beta : compositions(alpha.weight())) {
        const int mu = boolean_mobius(alpha, beta);
        if (mu != 0) out.add_term(beta, mu);
    }
    return out;
}

Element to_monomial(const Element& x) {
    require_space(x);
    if (x.space().basis == BasisTag::Monomial) return x;
    return extend_linear([](const Index& i) { return fundamental_in_monomial(as_composition(i)); }, kQSymM, x);
}

Element to_fundamental(const Element& x) {
    require_space(x);
    if (x.space().basis == BasisTag::Fundamental) return x;
    return extend_linear([](const Index& i) { return monomial_in_fundamental(as_composition(i)); }, kQSymF, x);
}

Element f_product(const Composition& alpha, const Composition& beta) {
    const Element a = fundamental_in_monomial(alpha), b = fundamental_in_monomial(beta);
    return to_fundamental(extend_product([](const Index& x, const Index& y) {
        return m_product(as_composition(x), as_composition(y));
    }, a, b));
}

Tensor f_coproduct(const Composition& alpha) {
    const Tensor t = extend_coproduct([](const Index& i) { return m_coproduct(as_composition(i)); },
                                      fundamental_in_monomial(alpha));
    auto conv = [](const Index& i) { return monomial_in_fundamental(as_composition(i)); };
    return map_slot(map_slot(t, 0, kQSymF, conv), 1, kQSymF, conv);
}

Element f_antipode(const Composition& alpha) {
    return to_fundamental(extend_linear([](const Index& i) { return m_antipode(as_composition(i)); }, kQSymM,
                                        fundamental_in_monomial(alpha)));
}

namespace {
std::vector<Index> basis_of(int n) {
    std::vector<Index> out;
    for (auto& c : compositions(n)) out.emplace_back(std::move(c));
    return out;
}
}  // namespace

const HopfStructure& monomial_structure() {
    static const HopfStructure h{
        "QSym monomial basis",
        kQSymM,
        [](const Index& a, const Index& b) { return m_product(as_composition(a), as_composition(b)); },
        [](const Index& a) { return m_coproduct(as_composition(a)); },
        [](const Index& a) { return m_antipode(as_composition(a)); },
        basis_of,
    };
    return h;
}

const HopfStructure& fundamental_structure() {
    static const HopfStructure h{
        "QSym fundamental basis",
        kQSymF,
        [](const Index& a, const Index& b) { return f_product(as_composition(a), as_composition(b)); },
        [](const Index& a) { return f_coproduct(as_composition(a)); },
        [](const Index& a) { return f_antipode(as_composition(a)); },
        basis_of,
    };
    return h;
}

}  // namespace hopf::qsym
