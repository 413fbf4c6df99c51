#include "hopf/cli.hpp"

#include <functional>
#include <ostream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "hopf/degree_guard.hpp"
#include "hopf/errors.hpp"
#include "hopf/hopf_maps.hpp"
#include "hopf/qsym.hpp"
#include "hopf/ssym.hpp"
#include "hopf/text.hpp"
#include "hopf/worked_examples.hpp"

namespace hopf {

namespace {

struct VerificationFailure {};

const HopfStructure& structure_for(Space s) {
    if (s == kSSymF) return ssym::fundamental_structure();
    if (s == kSSymM) return ssym::monomial_structure();
    if (s == kQSymF) return qsym::fundamental_structure();
    return qsym::monomial_structure();
}

Element convert(const Element& x, BasisTag to) {
    if (x.space().algebra == AlgebraTag::SSym)
        return to == BasisTag::Fundamental ? ssym::to_fundamental(x) : ssym::to_monomial(x);
    return to == BasisTag::Fundamental ? qsym::to_fundamental(x) : qsym::to_monomial(x);
}

std::string perm_list(const std::vector<Permutation>& perms) {
    std::vector<std::string> parts;
    for (const auto& u : perms) parts.push_back(format_permutation(u));
    return fmt::format("{}", fmt::join(parts, " "));
}

nlohmann::json perm_json(const std::vector<Permutation>& perms) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& u : perms) arr.push_back(format_permutation(u));
    return arr;
}

class Printer {
public:
    Printer(std::ostream& out, const bool& json) : out_(out), json_(json) {}

    void element(const Element& x) {
        if (json_) out_ << element_to_json(x).dump() << "\n";
        else out_ << format_element(x) << "\n";
    }
    void tensor(const Tensor& t) {
        if (json_) out_ << tensor_to_json(t).dump() << "\n";
        else out_ << format_tensor(t) << "\n";
    }
    void value(const std::string& text, const nlohmann::json& j) {
        if (json_) out_ << j.dump() << "\n";
        else out_ << text << "\n";
    }

private:
    std::ostream& out_;
    const bool& json_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact arithmetic in SSym and QSym"};
    app.require_subcommand(1);
    bool json = false;
    int guard = max_degree();
    app.add_flag("--json", json, "Emit JSON instead of canonical text");
    app.add_option("--max-degree", guard, "Largest symmetric group that may be enumerated")->check(CLI::Range(0, 11));

    Printer print(out, json);
    std::function<void()> action;

    std::string a, b, c;
    int k = 0, n = 0;
    bool witnesses = false;

    auto* product = app.add_subcommand("product", "Multiply two elements of the same basis");
    product->add_option("x", a)->required();
    product->add_option("y", b)->required();
    product->callback([&] {
        action = [&] {
            const Element x = parse_element(a), y = parse_element(b);
            if (x.space() != y.space()) throw DomainError("product of elements in different bases");
            print.element(multiply(structure_for(x.space()), x, y));
        };
    });

    auto* coproduct = app.add_subcommand("coproduct", "Coproduct of an element");
    coproduct->add_option("x", a)->required();
    coproduct->callback([&] {
        action = [&] {
            const Element x = parse_element(a);
            print.tensor(comultiply(structure_for(x.space()), x));
        };
    });

    auto* antipode = app.add_subcommand("antipode", "Antipode of an element");
    antipode->add_option("x", a)->required();
    antipode->callback([&] {
        action = [&] {
            const Element x = parse_element(a);
            print.element(apply_antipode(structure_for(x.space()), x));
        };
    });

    auto* power = app.add_subcommand("antipode-power", "Apply the antipode k times");
    power->add_option("x", a)->required();
    power->add_option("-k", k, "Number of applications")->required()->check(CLI::NonNegativeNumber);
    power->callback([&] {
        action = [&] {
            Element x = parse_element(a);
            if (x.space().algebra == AlgebraTag::SSym) {
                print.element(ssym::antipode_power(x, k));
                return;
            }
            for (int i = 0; i < k; ++i) x = apply_antipode(structure_for(x.space()), x);
            print.element(x);
        };
    });

    std::string target;
    auto* conv = app.add_subcommand("convert", "Change basis");
    conv->add_option("x", a)->required();
    conv->add_option("--to", target, "Target basis")->required()->check(CLI::IsMember({"F", "M"}));
    conv->callback([&] {
        action = [&] {
            print.element(convert(parse_element(a), target == "F" ? BasisTag::Fundamental : BasisTag::Monomial));
        };
    });

    auto* dmap = app.add_subcommand("descent-map", "Apply D: SSym -> QSym");
    dmap->add_option("x", a)->required();
    dmap->callback([&] { action = [&] { print.element(descent_map(parse_element(a))); }; });

    auto* zmap = app.add_subcommand("split-z", "Apply Z: QSym -> SSym");
    zmap->add_option("x", a)->required();
    zmap->callback([&] { action = [&] { print.element(splitting_z(parse_element(a))); }; });

    std::string poset;
    auto* mobius = app.add_subcommand("mobius", "Moebius function of the weak order or of the Boolean poset");
    mobius->add_option("poset", poset)->required()->check(CLI::IsMember({"weak", "boolean"}));
    mobius->add_option("u", a)->required();
    mobius->add_option("v", b)->required();
    mobius->callback([&] {
        action = [&] {
            int mu = 0;
            if (poset == "weak") {
                mu = weak_mobius(parse_permutation(a), parse_permutation(b));
            } else {
                mu = boolean_mobius(parse_qsym_index(a), parse_qsym_index(b));
            }
            print.value(std::to_string(mu), mu);
        };
    });

    auto* alpha = app.add_subcommand("alpha", "Structure constant of the monomial product");
    alpha->add_option("u", a)->required();
    alpha->add_option("v", b)->required();
    alpha->add_option("w", c)->required();
    alpha->add_flag("--witnesses", witnesses, "List the Grassmannians counted");
    alpha->callback([&] {
        action = [&] {
            const auto set = ssym::alpha_set({parse_permutation(a), parse_permutation(b), parse_permutation(c)});
            std::string text = std::to_string(set.size());
            nlohmann::json j = {{"alpha", set.size()}};
            if (witnesses) {
                text += "\n" + perm_list(set);
                j["witnesses"] = perm_json(set);
            }
            print.value(text, j);
        };
    });

    auto* kappa = app.add_subcommand("kappa", "Coefficient of the monomial antipode");
    kappa->add_option("v", a)->required();
    kappa->add_option("w", b)->required();
    kappa->add_flag("--witnesses", witnesses, "List the permutations counted");
    kappa->callback([&] {
        action = [&] {
            const auto r = ssym::kappa(parse_permutation(a), parse_permutation(b));
            std::string text = format_integer(r.coefficient);
            nlohmann::json j = {{"kappa", format_integer(r.coefficient)}};
            if (witnesses) {
                text += "\n" + perm_list(r.witnesses);
                j["witnesses"] = perm_json(r.witnesses);
            }
            print.value(text, j);
        };
    });

    auto* lambda = app.add_subcommand("lambda", "Coefficient of the fundamental antipode");
    lambda->add_option("v", a)->required();
    lambda->add_option("w", b)->required();
    lambda->add_flag("--witnesses", witnesses, "List the subsets counted");
    lambda->callback([&] {
        action = [&] {
            const auto r = ssym::lambda(parse_permutation(a), parse_permutation(b));
            std::string text = format_integer(r.coefficient);
            nlohmann::json j = {{"lambda", format_integer(r.coefficient)}};
            if (witnesses) {
                std::vector<std::string> sets;
                for (const auto& S : r.witnesses) sets.push_back(format_descent_set(S));
                text += "\n" + fmt::format("{}", fmt::join(sets, " "));
                j["witnesses"] = sets;
            }
            print.value(text, j);
        };
    });

    auto* prim = app.add_subcommand("primitives", "Permutations without global descents");
    prim->add_option("-n", n, "Degree")->required()->check(CLI::NonNegativeNumber);
    prim->callback([&] {
        action = [&] {
            const auto p = primitive_basis(n);
            print.value(fmt::format("{}\n{}", p.size(), perm_list(p)), {{"count", p.size()}, {"basis", perm_json(p)}});
        };
    });

    auto* corad = app.add_subcommand("coradical-level", "Position in the coradical filtration");
    corad->add_option("x", a)->required();
    corad->callback([&] {
        action = [&] {
            const auto r = coradical_level(parse_element(a));
            print.value(std::to_string(r.level), {{"level", r.level}, {"certificate", tensor_to_json(r.certificate)}});
        };
    });

    auto* kbasis = app.add_subcommand("kernel-basis", "Basis of the left Hopf kernel of D");
    kbasis->add_option("-n", n, "Degree")->required()->check(CLI::NonNegativeNumber);
    kbasis->callback([&] {
        action = [&] {
            const auto p = kernel_basis(n);
            print.value(fmt::format("{}\n{}", p.size(), perm_list(p)), {{"dimension", p.size()}, {"basis", perm_json(p)}});
        };
    });

    auto* ktest = app.add_subcommand("kernel-test", "Test membership in the left Hopf kernel of D");
    ktest->add_option("x", a)->required();
    ktest->callback([&] {
        action = [&] {
            const bool member = kernel_member(parse_element(a));
            print.value(member ? "true" : "false", member);
        };
    });

    auto* sigma = app.add_subcommand("sigma", "Evaluate the cocycle on two QSym monomial indices");
    sigma->add_option("s", a)->required();
    sigma->add_option("t", b)->required();
    sigma->callback([&] { action = [&] { print.element(cocycle_sigma(parse_qsym_index(a), parse_qsym_index(b))); }; });

    int verify_degree = 4;
    std::string algebra = "all";
    auto* verify = app.add_subcommand("verify", "Check the Hopf algebra axioms");
    verify->add_option("--degree", verify_degree, "Largest degree checked")->check(CLI::NonNegativeNumber);
    verify->add_option("--algebra", algebra, "Which structures")->check(CLI::IsMember({"all", "SSym", "QSym"}));
    verify->callback([&] {
        action = [&] {
            std::vector<const HopfStructure*> hs;
            if (algebra != "QSym") {
                hs.push_back(&ssym::fundamental_structure());
                hs.push_back(&ssym::monomial_structure());
            }
            if (algebra != "SSym") {
                hs.push_back(&qsym::fundamental_structure());
                hs.push_back(&qsym::monomial_structure());
            }
            bool ok = true;
            nlohmann::json j = nlohmann::json::array();
            std::string text;
            for (const auto* h : hs) {
                const auto report = verify_hopf_axioms(*h, verify_degree);
                ok = ok && report.ok();
                text += report.summary();
                j.push_back({{"structure", report.structure}, {"ok", report.ok()}, {"summary", report.summary()}});
            }
            if (!text.empty() && text.back() == '\n') text.pop_back();
            print.value(text, j);
            if (!ok) throw VerificationFailure{};
        };
    });

    std::string golden_dir = default_golden_dir();
    bool no_check = false;
    auto* examples = app.add_subcommand("paper-examples", "Regenerate the worked examples and diff against golden files");
    examples->add_option("--golden-dir", golden_dir, "Directory of <name>.txt files");
    examples->add_flag("--no-check", no_check, "Only print the report");
    examples->callback([&] {
        action = [&] {
            const auto ex = worked_examples();
            if (json) out << report_to_json(ex).dump(2) << "\n";
            else out << render_report(ex);
            if (no_check) return;
            const auto mismatches = compare_with_golden(ex, golden_dir);
            for (const auto& m : mismatches)
                err << fmt::format("golden mismatch in {}:\n  expected: {}\n  actual:   {}\n", m.name, m.expected, m.actual);
            if (!mismatches.empty()) throw VerificationFailure{};
        };
    });

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        DegreeGuardOverride scoped(guard);
        action();
    } catch (const VerificationFailure&) {
        return 2;
    } catch (const InternalError& e) {
        err << "internal check failed: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace hopf
