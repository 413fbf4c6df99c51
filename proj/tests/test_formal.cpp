#include <doctest.h>

#include "hopf/errors.hpp"
#include "hopf/qsym.hpp"
#include "hopf/ssym.hpp"
#include "support.hpp"

using namespace hopf;
using support::E;
using support::P;

TEST_CASE("element arithmetic prunes zeros") {
    const Element f12 = E("F[12]");
    CHECK(add(f12, negate(f12)).empty());
    CHECK((f12 - f12).empty());
    CHECK(scale(f12, 0).empty());
    CHECK(add(scale(E("M[21]"), 2), E("M[12]")) == ssym::m_product(P("1"), P("1")));
    CHECK_THROWS_AS(add(E("F[12]"), E("M[12]")), DomainError);
    CHECK_THROWS_AS(add(E("Fq[(2)]"), E("F[12]")), DomainError);
    CHECK_THROWS_AS(Element::basis(kSSymF, Composition{1}), DomainError);
    CHECK(E("F[12] + 2*F[21] - F[1]").homogeneous(2) == E("F[12] + 2*F[21]"));
    CHECK(E("F[12] + 2*F[21] - F[1]").max_degree() == 2);
    CHECK(Element(kSSymF).max_degree() == -1);
}

TEST_CASE("homogeneous components partition the terms") {
    const Element x = E("F[] + F[1] - 3*F[21] + F[231] + 5*F[12]");
    Element sum(kSSymF);
    std::size_t count = 0;
    for (int d = 0; d <= x.max_degree(); ++d) {
        sum += x.homogeneous(d);
        count += x.homogeneous(d).size();
    }
    CHECK(sum == x);
    CHECK(count == x.size());
}

TEST_CASE("tensor basics") {
    const Tensor t = tensor(Element::unit(kSSymM), E("M[231]"));
    CHECK(t.size() == 1);
    CHECK(t.coefficient({Permutation(), P("231")}) == 1);
    Tensor u = t;
    u -= t;
    CHECK(u.empty());
}

TEST_CASE("extension of rules") {
    const auto& h = ssym::fundamental_structure();
    CHECK(extend_product(h.product, E("F[12]"), E("F[312]")) == ssym::f_product(P("12"), P("312")));
    // (F_12 + F_21) * F_1: three shuffles each, six terms and no cancellation.
    const Element prod = extend_product(h.product, E("F[12] + F[21]"), E("F[1]"));
    CHECK(prod.size() == 6);
    CHECK(extend_coproduct(h.coproduct, E("2*F[1]")) ==
          [] {
              Tensor t({kSSymF, kSSymF});
              t.add_term({Permutation(), P("1")}, 2);
              t.add_term({P("1"), Permutation()}, 2);
              return t;
          }());
}

TEST_CASE("iterated coproducts") {
    const auto& hm = ssym::monomial_structure();
    const Tensor d1 = iterated_coproduct(hm, E("M[1]"), 1);
    CHECK(d1 == comultiply(hm, E("M[1]")));
    CHECK(d1.size() == 2);
    CHECK(iterated_coproduct(hm, E("M[1]"), 0).rank() == 1);
    const auto& hf = ssym::fundamental_structure();
    // Delta^(2)(F_21): choose two cut points 0 <= a <= b <= 2.
    CHECK(iterated_coproduct(hf, E("F[21]"), 2).size() == 6);
    for (const auto& x : {E("F[312]"), E("F[2413] - F[21]"), E("M[3412]")}) {
        const auto& h = x.space() == kSSymF ? hf : hm;
        for (int k = 1; k <= 4; ++k) CHECK(iterated_coproduct(h, x, k) == iterated_coproduct_right(h, x, k));
    }
}

TEST_CASE("Takeuchi antipode") {
    CHECK(takeuchi_antipode(ssym::fundamental_structure(), E("F[1]")) == E("-F[1]"));
    CHECK(takeuchi_antipode(ssym::fundamental_structure(), E("F[231]")) ==
          E("F[132] - F[213] - 2*F[231] + F[312]"));
    CHECK(takeuchi_antipode(qsym::monomial_structure(), E("Mq[(1,1)]")) == E("Mq[(1,1)] + Mq[(2)]"));
    CHECK(takeuchi_antipode(ssym::monomial_structure(), E("M[]")) == E("M[]"));
}

TEST_CASE("Takeuchi antipode satisfies m(S x id)Delta = unit counit, degree <= 5") {
    for (const HopfStructure* h : {&ssym::fundamental_structure(), &ssym::monomial_structure(),
                                   &qsym::fundamental_structure(), &qsym::monomial_structure()}) {
        for (int n = 0; n <= 5; ++n) {
            for (const auto& idx : h->basis(n)) {
                const Element x = Element::basis(h->space, idx);
                Element lhs(h->space);
                const Tensor delta = comultiply(*h, x);
                for (const auto& [key, c] : delta.terms())
                    lhs += multiply(*h, takeuchi_antipode(*h, Element::basis(h->space, key[0])),
                                    Element::basis(h->space, key[1])) *
                           c;
                CHECK(lhs == Element::unit(h->space) * counit(x));
            }
        }
    }
}

TEST_CASE("counit laws, degree <= 6") {
    for (const HopfStructure* h : {&ssym::fundamental_structure(), &qsym::monomial_structure()}) {
        for (int n = 0; n <= 6; ++n) {
            for (const auto& idx : h->basis(n)) {
                const Element x = Element::basis(h->space, idx);
                Element left(h->space), right(h->space);
                const Tensor delta = comultiply(*h, x);
                for (const auto& [key, c] : delta.terms()) {
                    if (degree(key[0]) == 0) left += Element::basis(h->space, key[1], c);
                    if (degree(key[1]) == 0) right += Element::basis(h->space, key[0], c);
                    CHECK(degree(key[0]) + degree(key[1]) == n);
                }
                CHECK(left == x);
                CHECK(right == x);
            }
        }
    }
}

TEST_CASE("axiom verifier passes the registered structures") {
    for (const HopfStructure* h : {&ssym::fundamental_structure(), &ssym::monomial_structure(),
                                   &qsym::fundamental_structure(), &qsym::monomial_structure()}) {
        const auto report = verify_hopf_axioms(*h, 4);
        INFO(report.summary());
        CHECK(report.ok());
    }
}

TEST_CASE("axiom verifier catches a corrupted product") {
    HopfStructure broken = qsym::monomial_structure();
    const auto good = broken.product;
    broken.product = [good](const Index& a, const Index& b) {
        Element out = good(a, b);
        if (as_composition(a) == Composition{1} && as_composition(b) == Composition{1})
            out.add_term(Composition{2}, 1);
        return out;
    };
    const auto report = verify_hopf_axioms(broken, 3);
    CHECK_FALSE(report.ok());
    bool named = false;
    for (const auto& check : report.checks)
        for (const auto& v : check.violations) named = named || v.find("Mq[(1)]") != std::string::npos;
    CHECK(named);
}

TEST_CASE("text format round trip") {
    for (const std::string s : {"-2*F[231] + F[12534]", "M[]", "Mq[(2,1)]", "-Fq[()] + 3*Fq[(1,2)]",
                                "F[[10,9,8,7,6,5,4,3,2,1]]"}) {
        CHECK(format_element(parse_element(s)) == s);
    }
    CHECK(parse_element("Mq[{2}@4]") == parse_element("Mq[(2,2)]"));
    CHECK(parse_element(" F[21]+F[12] ") == parse_element("F[12] + F[21]"));
    CHECK(parse_element("F[12] - F[12]").empty());
    CHECK(format_element(Element(kSSymF)) == "0");
    CHECK(parse_permutation("[3,1,2]") == P("312"));
    CHECK(parse_descent_set("{2,3,6}@8") == support::D({2, 3, 6}, 8));
    CHECK(parse_composition("()") == Composition{});
}

TEST_CASE("parse errors carry a position") {
    auto position_of = [](const std::string& s) -> long long {
        try {
            parse_element(s);
        } catch (const ParseError& e) {
            return static_cast<long long>(e.position());
        }
        return -1;
    };
    CHECK(position_of("F[12] + G[21]") == 8);
    CHECK(position_of("F[12] + M[21]") == 8);
    CHECK(position_of("F[133]") >= 0);
    CHECK(position_of("F[12") >= 0);
    CHECK(position_of("Fq[(2,0)]") >= 0);
    CHECK(position_of("0") >= 0);
    CHECK(position_of("") >= 0);
    CHECK(position_of("F[12] + F[1]") == -1);
    CHECK_THROWS_AS(parse_element("F[(1,2)]"), DomainError);
}

TEST_CASE("JSON round trip") {
    for (const auto& x : {E("F[12534] - 2*F[231]"), E("M[]"), E("Mq[(2,1)] + 7*Mq[(1)]"), Element(kQSymF),
                          E("123456789012345678901234567890*F[21]")}) {
        const auto j = element_to_json(x);
        CHECK(element_from_json(nlohmann::json::parse(j.dump())) == x);
    }
    const auto j = element_to_json(E("F[231] - 2*F[12]"));
    CHECK(j["algebra"] == "SSym");
    CHECK(j["basis"] == "F");
    CHECK(j["terms"][0]["index"] == "12");
    CHECK(j["terms"][0]["coeff"] == -2);
    const Tensor t = comultiply(ssym::fundamental_structure(), E("F[42531]"));
    CHECK(tensor_from_json(nlohmann::json::parse(tensor_to_json(t).dump())) == t);
    CHECK_THROWS_AS(element_from_json(nlohmann::json::parse(R"({"algebra":"SSym"})")), DomainError);
}
