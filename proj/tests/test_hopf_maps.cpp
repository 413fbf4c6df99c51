#include <doctest.h>

#include "hopf/hopf_maps.hpp"
#include "hopf/qsym.hpp"
#include "hopf/ssym.hpp"
#include "support.hpp"

using namespace hopf;
using support::D;
using support::E;
using support::P;

namespace {

std::vector<Permutation> upto(int n) {
    std::vector<Permutation> out;
    for (int k = 0; k <= n; ++k)
        for (auto& u : all_permutations(k)) out.push_back(u);
    return out;
}

long long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

// Count of permutations of n without global descents, by direct scan.
long long primitive_count(int n) {
    long long count = 0;
    for (const auto& w : support::raw_permutations(n)) {
        bool any = false;
        int low = n + 1;
        for (int p = 1; p < n; ++p) {
            low = std::min(low, w[static_cast<std::size_t>(p - 1)]);
            any = any || low == n - p + 1;
        }
        count += !any;
    }
    return count;
}

// sigma with every SSym map routed through the fundamental basis and the
// antipode taken from the general formula.
Element sigma_oracle(const Composition& s, const Composition& t) {
    const auto& h = ssym::monomial_structure_by_conversion();
    auto gamma = [](const Index& i) { return splitting_z(Element::basis(kQSymM, i)); };
    Element out(kSSymM);
    const Tensor ds = qsym::m_coproduct(s), dt = qsym::m_coproduct(t);
    for (const auto& [a, ca] : ds.terms())
        for (const auto& [b, cb] : dt.terms()) {
            const Element k2 = qsym::m_product(as_composition(a[1]), as_composition(b[1]));
            const Element tail = takeuchi_antipode(h, splitting_z(k2));
            out += multiply(h, multiply(h, gamma(a[0]), gamma(b[0])), tail) * (ca * cb);
        }
    return out;
}

Tensor apply_d_both(const Tensor& t) {
    const Space target = t.spaces()[0].basis == BasisTag::Fundamental ? kQSymF : kQSymM;
    auto d = [&](const Index& i) { return descent_map(Element::basis(t.spaces()[0], i)); };
    return map_slot(map_slot(t, 0, target, d), 1, target, d);
}

}  // namespace

TEST_CASE("descent map examples") {
    CHECK(descent_map(E("M[231]")) == E("Mq[{2}@3]"));
    CHECK(descent_map(E("M[213]")).empty());
    CHECK(descent_map(E("F[1234]")) == E("Fq[(4)]"));
    CHECK(descent_map(E("F[46512837]")) == E("Fq[{2,3,6}@8]"));
}

TEST_CASE("descent map agrees across bases, n <= 5") {
    for (const auto& u : upto(5)) {
        const Element via_f = qsym::to_monomial(descent_map(ssym::monomial_in_fundamental(u)));
        CHECK(descent_map(Element::basis(kSSymM, u)) == via_f);
    }
}

TEST_CASE("descent map is a Hopf morphism, degree <= 5") {
    const auto all = upto(5);
    for (const auto& u : all) {
        const Element fu = Element::basis(kSSymF, u);
        CHECK(apply_d_both(ssym::f_coproduct(u)) == comultiply(qsym::fundamental_structure(), descent_map(fu)));
        for (const auto& v : all) {
            if (u.degree() + v.degree() > 5) continue;
            const Element fv = Element::basis(kSSymF, v);
            CHECK(descent_map(ssym::f_product(u, v)) ==
                  multiply(qsym::fundamental_structure(), descent_map(fu), descent_map(fv)));
        }
    }
}

TEST_CASE("closed permutations") {
    CHECK(is_closed(P("3412")));
    CHECK_FALSE(is_closed(P("213")));
    for (int n = 0; n <= 7; ++n)
        for (const auto& S : subsets(n)) CHECK(is_closed(z_of(S)));
}

TEST_CASE("splitting map") {
    CHECK(splitting_z(E("Mq[{2}@4]")) == E("M[3412]"));
    CHECK(splitting_z(E("Fq[(2)]")) == splitting_z(E("Mq[(2)] + Mq[(1,1)]")));
    CHECK_THROWS_AS(splitting_z(E("M[12]")), DomainError);
    CHECK_THROWS_AS(descent_map(E("Mq[(1)]")), DomainError);
    for (int n = 0; n <= 6; ++n)
        for (const auto& a : compositions(n)) {
            const Element m = Element::basis(kQSymM, a);
            CHECK(descent_map(splitting_z(m)) == m);
            if (n > 5) continue;
            const Tensor lhs = comultiply(ssym::monomial_structure(), splitting_z(m));
            const Tensor rhs = map_slot(map_slot(qsym::m_coproduct(a), 0, kSSymM,
                                                 [](const Index& i) { return splitting_z(Element::basis(kQSymM, i)); }),
                                        1, kSSymM, [](const Index& i) { return splitting_z(Element::basis(kQSymM, i)); });
            CHECK(lhs == rhs);
        }
}

TEST_CASE("global descent grading") {
    CHECK(support::words(primitive_basis(3)) == std::vector<std::string>{"123", "132", "213"});
    CHECK(primitive_basis(4).size() == 13);
    CHECK(support::words(primitive_basis(4)) ==
          std::vector<std::string>{"1234", "1243", "1324", "1342", "1423", "1432", "2134", "2143", "2314", "2413",
                                   "3124", "3142", "3214"});
    for (int n = 1; n <= 7; ++n) CHECK(global_descent_grade(longest(n)) == n);
    CHECK(global_descent_grade(Permutation()) == 0);
    for (int n = 1; n <= 4; ++n)
        for (const auto& u : primitive_basis(n)) {
            Tensor expected = tensor(Element::basis(kSSymM, u), Element::unit(kSSymM));
            expected += tensor(Element::unit(kSSymM), Element::basis(kSSymM, u));
            CHECK(ssym::m_coproduct(u) == expected);
        }
}

TEST_CASE("cofreeness dimension identity, n <= 7") {
    std::vector<long long> prim(8);
    for (int n = 1; n <= 7; ++n) {
        prim[static_cast<std::size_t>(n)] = primitive_count(n);
        CHECK(static_cast<long long>(primitive_basis(n).size()) == prim[static_cast<std::size_t>(n)]);
    }
    for (int n = 1; n <= 7; ++n) {
        const auto counts = grade_counts(n);
        long long total = 0;
        for (int k = 1; k <= n; ++k) {
            long long expected = 0;
            for (const auto& a : compositions(n)) {
                if (a.length() != k) continue;
                long long prod = 1;
                for (int part : a.parts()) prod *= prim[static_cast<std::size_t>(part)];
                expected += prod;
            }
            CHECK(counts[static_cast<std::size_t>(k)] == expected);
            total += counts[static_cast<std::size_t>(k)];
        }
        CHECK(total == factorial(n));
    }
}

TEST_CASE("coradical filtration") {
    CHECK(coradical_level(E("M[4312]")).level == 3);
    CHECK(coradical_level(E("M[]")).level == 0);
    CHECK(coradical_level(E("F[]")).level == 0);
    CHECK(coradical_level(E("F[21]")).level == 2);
    for (const auto& u : upto(5)) {
        if (u.degree() == 0) continue;
        const auto r = coradical_level(Element::basis(kSSymM, u));
        CHECK(r.level == 1 + static_cast<int>(global_descents(u).size()));
        CHECK(r.certificate.rank() == static_cast<std::size_t>(r.level) + 1);
    }
    CHECK(coradical_level(E("M[12] + M[4312]")).level == 3);
}

TEST_CASE("left Hopf kernel") {
    CHECK(support::words(kernel_basis(3)) == std::vector<std::string>{"132", "213"});
    CHECK(kernel_basis(1).empty());
    CHECK(kernel_basis(2).empty());
    for (int n = 1; n <= 5; ++n) {
        long long expected = factorial(n);
        for (int k = 0; k < n; ++k) expected -= factorial(k);
        CHECK(static_cast<long long>(kernel_basis(n).size()) == expected);
        std::vector<Permutation> members;
        for (const auto& u : all_permutations(n))
            if (kernel_member(Element::basis(kSSymM, u))) members.push_back(u);
        CHECK(members == kernel_basis(n));
    }
    CHECK(kernel_member(E("M[]")));
    CHECK_FALSE(kernel_member(E("F[132]")));
    CHECK(kernel_member(ssym::monomial_in_fundamental(P("132"))));
}

TEST_CASE("cocycle") {
    CHECK(cocycle_sigma({}, {}) == E("M[]"));
    CHECK(cocycle_sigma({}, {1}).empty());
    CHECK(cocycle_sigma({1}, {1}).empty());
    for (int total = 0; total <= 4; ++total)
        for (int a = 0; a <= total; ++a)
            for (const auto& s : compositions(a))
                for (const auto& t : compositions(total - a)) {
                    const Element x = cocycle_sigma(s, t);
                    CHECK(x == sigma_oracle(s, t));
                    CHECK(kernel_member(x));
                    for (const auto& [u, c] : x.terms()) CHECK(degree(u) == total);
                }
}
