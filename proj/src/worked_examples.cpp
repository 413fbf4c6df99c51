#include "hopf/worked_examples.hpp"

#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "hopf/errors.hpp"
#include "hopf/hopf_maps.hpp"
#include "hopf/qsym.hpp"
#include "hopf/ssym.hpp"
#include "hopf/text.hpp"

#ifndef HOPF_GOLDEN_DIR
#define HOPF_GOLDEN_DIR "resources/paper-examples"
#endif

namespace hopf {

namespace {

Permutation P(std::string_view s) { return parse_permutation(s); }

std::string perm_set(const std::vector<Permutation>& perms) {
    std::vector<std::string> parts;
    for (const auto& u : perms) parts.push_back(format_permutation(u));
    return "{" + fmt::format("{}", fmt::join(parts, ", ")) + "}";
}

WorkedExample text(std::string name, std::string title, std::string value) {
    return {std::move(name), std::move(title), "text", std::move(value)};
}

WorkedExample element(std::string name, std::string title, const Element& x) {
    return {std::move(name), std::move(title), "element", element_to_json(x)};
}

WorkedExample tensor_example(std::string name, std::string title, const Tensor& t) {
    return {std::move(name), std::move(title), "tensor", tensor_to_json(t)};
}

}  // namespace

std::vector<WorkedExample> worked_examples() {
    std::vector<WorkedExample> out;
    const Element M231 = Element::basis(kSSymM, P("231"));

    out.push_back(text("make_permutation", "the word 4,2,5,3,1", format_permutation(Permutation::from_word({4, 2, 5, 3, 1}))));
    out.push_back(text("longest_4", "omega_4 and its length",
                       fmt::format("{} with {} inversions", format_permutation(longest(4)), inversions(longest(4)))));
    out.push_back(text("standardize_625", "st(6,2,5)", format_permutation(standardize(std::vector<int>{6, 2, 5}))));
    out.push_back(text("descents_46512837", "Des(46512837)", format_descent_set(descents(P("46512837")))));
    out.push_back(text("global_descents_3412", "GDes(3412)", format_descent_set(global_descents(P("3412")))));
    out.push_back(text("direct_sum_12_312", "12 x 312", format_permutation(direct_sum(P("12"), P("312")))));
    out.push_back(text("grassmannians_2_2", "Sh(2,2)", perm_set(grassmannians(2, 2))));
    out.push_back(text("rho_1324_12_21", "rho_1324(12,21)", format_permutation(rho(P("1324"), P("12"), P("21")))));
    out.push_back(text("weak_covers_up_4321", "covers above omega_4", perm_set(weak_covers_up(P("4321")))));
    out.push_back(text("weak_leq_1423_2431", "1423 <= 2431", weak_leq(P("1423"), P("2431")) ? "true" : "false"));
    out.push_back(text("weak_mobius_4123", "mu(4123, .) on 4132, 4321, 4231",
                       fmt::format("{}, {}, {}", weak_mobius(P("4123"), P("4132")), weak_mobius(P("4123"), P("4321")),
                                   weak_mobius(P("4123"), P("4231")))));
    {
        std::vector<std::string> parts;
        for (const auto& S : subsets(3))
            parts.push_back(fmt::format("{} -> {}", format_descent_set(S), format_permutation(z_of(S))));
        out.push_back(text("z_of_q3", "Z on subsets of [2]", fmt::format("{}", fmt::join(parts, ", "))));
    }
    out.push_back(element("f_product_12_312", "F_12 * F_312", ssym::f_product(P("12"), P("312"))));
    out.push_back(tensor_example("f_coproduct_42531", "Delta(F_42531)", ssym::f_coproduct(P("42531"))));
    out.push_back(element("m_4123_in_f", "M_4123 in the F basis", ssym::monomial_in_fundamental(P("4123"))));
    out.push_back(element("m_product_12_21", "M_12 * M_21", ssym::m_product(P("12"), P("21"))));
    {
        const auto w = ssym::alpha_set({P("12"), P("21"), P("2431")});
        out.push_back(text("alpha_2431_12_21", "alpha^2431_(12,21) and A^2431_(12,21)",
                           fmt::format("{} {}", w.size(), perm_set(w))));
    }
    out.push_back(element("antipode_f_231", "S(F_231)", ssym::antipode_f(P("231"))));
    out.push_back(element("takeuchi_f_231", "S(F_231) by the general antipode formula",
                          takeuchi_antipode(ssym::fundamental_structure(), Element::basis(kSSymF, P("231")))));
    {
        const auto l = ssym::lambda(P("231"), P("312"));
        std::vector<std::string> sets;
        for (const auto& S : l.witnesses) sets.push_back(format_descent_set(S));
        out.push_back(text("lambda_231_312", "lambda(231,312) and its subsets",
                           fmt::format("{} {}", format_integer(l.coefficient), fmt::join(sets, " "))));
    }
    out.push_back(element("antipode_m_3412", "S(M_3412)", ssym::antipode_m(P("3412"))));
    {
        const auto k = ssym::kappa(P("3412"), P("3412"));
        out.push_back(text("kappa_3412_3412", "kappa(3412,3412) and C_{2}(3412,3412)",
                           fmt::format("{} {}", format_integer(k.coefficient), perm_set(k.witnesses))));
    }
    out.push_back(text("grassmannians_s_2_4", "Sh({2}) in S_4", perm_set(grassmannians(DescentSet({2}, 4)))));
    for (int m = 1; m <= 5; ++m) {
        out.push_back(element(fmt::format("antipode_power_m231_{}", 2 * m), fmt::format("S^{}(M_231)", 2 * m),
                              ssym::antipode_power(M231, 2 * m)));
    }
    out.push_back(element("qsym_m_product_2_11", "M_(2) * M_(1,1)", qsym::m_product({2}, {1, 1})));
    out.push_back(tensor_example("qsym_m_coproduct_21", "Delta(M_(2,1))", qsym::m_coproduct({2, 1})));
    out.push_back(text("primitives_1_to_3", "permutations without global descents, degrees 1 to 3",
                       fmt::format("{} {} {}", perm_set(primitive_basis(1)), perm_set(primitive_basis(2)),
                                   perm_set(primitive_basis(3)))));
    {
        const auto p4 = primitive_basis(4);
        out.push_back(text("primitives_4", "permutations of 4 without global descents",
                           fmt::format("{} {}", p4.size(), perm_set(p4))));
    }
    out.push_back(text("is_closed_3412", "3412 is closed", is_closed(P("3412")) ? "true" : "false"));
    return out;
}

std::string render_value(const WorkedExample& e) {
    if (e.kind == "element") return format_element(element_from_json(e.payload));
    if (e.kind == "tensor") return format_tensor(tensor_from_json(e.payload));
    if (e.kind == "text") return e.payload.get<std::string>();
    throw DomainError("unknown example kind " + e.kind);
}

std::string render_report(const std::vector<WorkedExample>& examples) {
    std::string out;
    for (const auto& e : examples) out += fmt::format("{} = {}\n", e.name, render_value(e));
    return out;
}

nlohmann::json report_to_json(const std::vector<WorkedExample>& examples) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& e : examples)
        arr.push_back({{"name", e.name}, {"title", e.title}, {"kind", e.kind}, {"payload", e.payload}});
    return arr;
}

std::vector<WorkedExample> report_from_json(const nlohmann::json& j) {
    std::vector<WorkedExample> out;
    try {
        for (const auto& e : j)
            out.push_back({e.at("name").get<std::string>(), e.at("title").get<std::string>(),
                           e.at("kind").get<std::string>(), e.at("payload")});
    } catch (const nlohmann::json::exception& ex) {
        throw DomainError(std::string("malformed report JSON: ") + ex.what());
    }
    return out;
}

std::vector<GoldenMismatch> compare_with_golden(const std::vector<WorkedExample>& examples, const std::string& dir) {
    std::vector<GoldenMismatch> out;
    for (const auto& e : examples) {
        std::string expected;
        std::ifstream in(dir + "/" + e.name + ".txt");
        if (in) {
            std::stringstream ss;
            ss << in.rdbuf();
            expected = ss.str();
            while (!expected.empty() && (expected.back() == '\n' || expected.back() == '\r')) expected.pop_back();
        }
        const std::string actual = render_value(e);
        if (!in || expected != actual) out.push_back({e.name, expected, actual});
    }
    return out;
}

std::string default_golden_dir() { return HOPF_GOLDEN_DIR; }

}  // namespace hopf
