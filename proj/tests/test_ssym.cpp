#include <doctest.h>

#include "hopf/ssym.hpp"
#include "support.hpp"

using namespace hopf;
using support::E;
using support::P;

namespace {

// All interleavings of the words a and b.
void shuffles(const std::vector<int>& a, std::size_t i, const std::vector<int>& b, std::size_t j,
              std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
    if (i == a.size() && j == b.size()) {
        out.push_back(prefix);
        return;
    }
    if (i < a.size()) {
        prefix.push_back(a[i]);
        shuffles(a, i + 1, b, j, prefix, out);
        prefix.pop_back();
    }
    if (j < b.size()) {
        prefix.push_back(b[j]);
        shuffles(a, i, b, j + 1, prefix, out);
        prefix.pop_back();
    }
}

// F_u F_v as the shuffle of u with v shifted up by deg u.
Element shuffle_product_oracle(const Permutation& u, const Permutation& v) {
    std::vector<int> a(u.word().begin(), u.word().end()), b;
    for (int x : v.word()) b.push_back(x + u.degree());
    std::vector<std::vector<int>> words;
    std::vector<int> prefix;
    shuffles(a, 0, b, 0, prefix, words);
    Element out(kSSymF);
    for (const auto& w : words) out.add_term(Permutation::from_word(w), 1);
    return out;
}

// M_u in the F basis by back substitution in F_x = sum_{x <= y} M_y,
// processing the up-set of u from the top down.
Element m_in_f_oracle(const Permutation& u) {
    auto up = weak_upset(u);
    std::sort(up.begin(), up.end(), [](const Permutation& a, const Permutation& b) {
        return inversions(a) > inversions(b);
    });
    std::map<Permutation, Element> m;
    for (const auto& x : up) {
        Element value = Element::basis(kSSymF, x);
        for (const auto& y : up)
            if (y != x && weak_leq(x, y)) value -= m.at(y);
        m.emplace(x, value);
    }
    return m.at(u);
}

std::vector<Permutation> upto(int n) {
    std::vector<Permutation> out;
    for (int k = 0; k <= n; ++k)
        for (auto& u : all_permutations(k)) out.push_back(u);
    return out;
}

}  // namespace

TEST_CASE("fundamental product") {
    CHECK(format_element(ssym::f_product(P("12"), P("312"))) ==
          "F[12534] + F[15234] + F[15324] + F[15342] + F[51234] + F[51324] + F[51342] + F[53124] + F[53142] + "
          "F[53412]");
    CHECK(ssym::f_product(Permutation(), P("231")) == E("F[231]"));
    CHECK(ssym::f_product(P("1"), P("1")) == E("F[12] + F[21]"));
}

TEST_CASE("fundamental product matches word shuffles, degree <= 6") {
    const auto all = upto(4);
    for (const auto& u : all)
        for (const auto& v : all) {
            if (u.degree() + v.degree() > 6) continue;
            CHECK(ssym::f_product(u, v) == shuffle_product_oracle(u, v));
        }
}

TEST_CASE("fundamental coproduct") {
    CHECK(format_tensor(ssym::f_coproduct(P("42531"))) ==
          "F[] ⊗ F[42531] + F[1] ⊗ F[2431] + F[21] ⊗ F[321] + F[213] ⊗ F[21] + F[3142] ⊗ F[1] + F[42531] ⊗ F[]");
    CHECK(ssym::f_coproduct(Permutation()).size() == 1);
    CHECK(format_tensor(ssym::f_coproduct(P("21"))) == "F[] ⊗ F[21] + F[1] ⊗ F[1] + F[21] ⊗ F[]");
}

TEST_CASE("basis conversion") {
    CHECK(ssym::monomial_in_fundamental(P("4123")) == E("F[4123] - F[4132] - F[4213] + F[4321]"));
    CHECK(ssym::monomial_in_fundamental(longest(4)) == E("F[4321]"));
    for (const auto& u : upto(5)) {
        CHECK(ssym::monomial_in_fundamental(u) == m_in_f_oracle(u));
        CHECK(ssym::to_monomial(ssym::monomial_in_fundamental(u)) == Element::basis(kSSymM, u));
        CHECK(ssym::to_fundamental(ssym::fundamental_in_monomial(u)) == Element::basis(kSSymF, u));
    }
}

TEST_CASE("monomial coproduct") {
    CHECK(format_tensor(ssym::m_coproduct(P("1"))) == "M[] ⊗ M[1] + M[1] ⊗ M[]");
    CHECK(format_tensor(ssym::m_coproduct(P("4312"))) == "M[] ⊗ M[4312] + M[1] ⊗ M[312] + M[21] ⊗ M[12] + M[4312] ⊗ M[]");
    for (const auto& u : upto(5))
        CHECK(ssym::m_coproduct(u) == comultiply(ssym::monomial_structure_by_conversion(), Element::basis(kSSymM, u)));
}

TEST_CASE("alpha") {
    const auto set = ssym::alpha_set({P("12"), P("21"), P("2431")});
    CHECK(support::words(set) == std::vector<std::string>{"1234", "1324"});
    CHECK(ssym::alpha({P("1"), P("1"), P("21")}) == 2);
    CHECK(ssym::alpha({P("21"), P("1"), P("123")}) == 0);
    CHECK_THROWS_AS(ssym::alpha({P("12"), P("1"), P("12")}), DomainError);
}

TEST_CASE("both descriptions of A^w_{u,v} agree, p + q <= 5") {
    // alpha_set throws InternalError on disagreement.
    for (int n = 0; n <= 5; ++n)
        for (int p = 0; p <= n; ++p)
            for (const auto& u : all_permutations(p))
                for (const auto& v : all_permutations(n - p))
                    for (const auto& w : all_permutations(n)) CHECK_NOTHROW(ssym::alpha_set({u, v, w}));
}

TEST_CASE("monomial product") {
    CHECK(ssym::m_product(P("12"), P("21")) ==
          E("M[4312] + M[4231] + M[3421] + M[4123] + M[2341] + M[1243] + M[1423] + M[1342] + 3*M[1432] + "
            "2*M[2431] + 2*M[4132]"));
    CHECK(ssym::m_product(Permutation(), P("21")) == E("M[21]"));
    CHECK(ssym::m_product(P("1"), P("1")) == E("M[12] + 2*M[21]"));
    for (const auto& u : upto(4))
        for (const auto& v : upto(4)) {
            if (u.degree() + v.degree() > 5) continue;
            const Element x = ssym::m_product(u, v);
            CHECK(x == multiply(ssym::monomial_structure_by_conversion(), Element::basis(kSSymM, u),
                                Element::basis(kSSymM, v)));
            for (const auto& [w, c] : x.terms()) CHECK(c > 0);
        }
}

TEST_CASE("fundamental antipode") {
    CHECK(ssym::antipode_f(P("231")) == E("F[132] - F[213] - 2*F[231] + F[312]"));
    const auto l = ssym::lambda(P("231"), P("312"));
    CHECK(l.coefficient == 1);
    CHECK(l.witnesses == std::vector<DescentSet>{support::D({1}, 3), support::D({2}, 3), support::D({1, 2}, 3)});
    CHECK(ssym::antipode_f(P("1")) == E("-F[1]"));
}

TEST_CASE("monomial antipode") {
    CHECK(ssym::antipode_m(P("3412")) ==
          E("M[1234] + 2*M[1324] + M[1342] + M[1423] + M[2314] + M[2413] + M[3124] + M[3142] + M[3412]"));
    const auto k = ssym::kappa(P("3412"), P("3412"));
    CHECK(k.coefficient == 1);
    CHECK(support::words(k.witnesses) == std::vector<std::string>{"3412"});
    CHECK(ssym::antipode_m(P("1")) == E("-M[1]"));
    CHECK(ssym::antipode_m(Permutation()) == E("M[]"));
}

TEST_CASE("antipodes agree with the Takeuchi formula, n <= 4") {
    for (const auto& v : upto(4)) {
        CHECK(ssym::antipode_f(v) == takeuchi_antipode(ssym::fundamental_structure(), Element::basis(kSSymF, v)));
        CHECK(ssym::antipode_m(v) == takeuchi_antipode(ssym::monomial_structure(), Element::basis(kSSymM, v)));
    }
}

TEST_CASE("monomial antipode has a uniform sign, n <= 5") {
    for (const auto& v : upto(5)) {
        if (v.degree() == 0) continue;
        const int sign = global_descents(v).size() % 2 == 0 ? -1 : 1;
        const Element s = ssym::antipode_m(v);
        for (const auto& [w, c] : s.terms()) CHECK(c * sign > 0);
    }
}

TEST_CASE("antipode powers") {
    const Element m231 = E("M[231]");
    for (int m = 1; m <= 5; ++m)
        CHECK(ssym::antipode_power(m231, 2 * m) == m231 + (E("M[213]") - E("M[132]")) * (2 * m));
    CHECK(ssym::antipode_power(m231, 0) == m231);
    CHECK(ssym::antipode_power(E("F[12]"), 2) == E("F[12]"));
    CHECK(ssym::antipode_f(P("12")) == E("F[21]"));
}

TEST_CASE("duality pairing") {
    CHECK(ssym::duality_pairing(E("F[231]"), E("F[312]")) == 1);
    CHECK(ssym::duality_pairing(E("F[231]"), E("F[231]")) == 0);
    // <F_u F_v, F_w> = sum over Delta(F_w) of <F_u, .><F_v, .>
    const auto all = upto(3);
    for (const auto& u : all)
        for (const auto& v : all) {
            if (u.degree() + v.degree() > 5) continue;
            const Element prod = ssym::f_product(u, v);
            for (const auto& w : all_permutations(u.degree() + v.degree())) {
                Integer rhs = 0;
                const Tensor delta = ssym::f_coproduct(w);
                for (const auto& [key, c] : delta.terms())
                    rhs += c * ssym::duality_pairing(Element::basis(kSSymF, u), Element::basis(kSSymF, key[0])) *
                           ssym::duality_pairing(Element::basis(kSSymF, v), Element::basis(kSSymF, key[1]));
                CHECK(ssym::duality_pairing(prod, Element::basis(kSSymF, w)) == rhs);
            }
        }
}

TEST_CASE("SSym axioms") {
    CHECK(verify_hopf_axioms(ssym::fundamental_structure(), 5).ok());
    CHECK(verify_hopf_axioms(ssym::monomial_structure(), 5).ok());
}
