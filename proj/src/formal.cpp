#include "hopf/formal.hpp"

#include <fmt/format.h>

#include "hopf/errors.hpp"
#include "hopf/text.hpp"

namespace hopf {

std::string to_string(AlgebraTag a) { return a == AlgebraTag::SSym ? "SSym" : "QSym"; }

std::string to_string(BasisTag b) { return b == BasisTag::Fundamental ? "F" : "M"; }

std::string basis_symbol(Space s) {
    return to_string(s.basis) + (s.algebra == AlgebraTag::QSym ? "q" : "");
}

int degree(const Index& index) {
    return std::visit(
        [](const auto& i) {
            if constexpr (std::is_same_v<std::decay_t<decltype(i)>, Permutation>)
                return i.degree();
            else
                return i.weight();
        },
        index);
}

Index unit_index(AlgebraTag algebra) {
    if (algebra == AlgebraTag::SSym) return Permutation{};
    return Composition{};
}

bool index_matches(AlgebraTag algebra, const Index& index) {
    return (algebra == AlgebraTag::SSym) == std::holds_alternative<Permutation>(index);
}

const Permutation& as_permutation(const Index& index) {
    if (const auto* p = std::get_if<Permutation>(&index)) return *p;
    throw DomainError("expected a permutation index");
}

const Composition& as_composition(const Index& index) {
    if (const auto* c = std::get_if<Composition>(&index)) return *c;
    throw DomainError("expected a composition index");
}

namespace {
void require_same_space(Space a, Space b) {
    if (a != b) {
        throw DomainError(fmt::format("basis tag mismatch: {} and {}", basis_symbol(a), basis_symbol(b)));
    }
}
}  // namespace

Element Element::basis(Space space, Index index, Integer coefficient) {
    Element e(space);
    e.add_term(index, coefficient);
    return e;
}

Integer Element::coefficient(const Index& index) const {
    auto it = terms_.find(index);
    return it == terms_.end() ? Integer(0) : it->second;
}

void Element::add_term(const Index& index, const Integer& coefficient) {
    if (!index_matches(space_.algebra, index)) {
        throw DomainError(fmt::format("index {} does not belong to {}", format_index(index),
                                      to_string(space_.algebra)));
    }
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.try_emplace(index, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) terms_.erase(it);
    }
}

Element& Element::operator+=(const Element& other) {
    require_same_space(space_, other.space_);
    for (const auto& [k, c] : other.terms_) add_term(k, c);
    return *this;
}

Element& Element::operator-=(const Element& other) {
    require_same_space(space_, other.space_);
    for (const auto& [k, c] : other.terms_) add_term(k, -c);
    return *this;
}

Element& Element::operator*=(const Integer& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

Element Element::homogeneous(int d) const {
    Element out(space_);
    for (const auto& [k, c] : terms_)
        if (hopf::degree(k) == d) out.terms_.emplace(k, c);
    return out;
}

int Element::max_degree() const {
    // Terms are ordered by degree first.
    return terms_.empty() ? -1 : hopf::degree(terms_.rbegin()->first);
}

Element add(const Element& a, const Element& b) { return a + b; }
Element negate(const Element& a) { return -a; }
Element scale(const Element& a, const Integer& c) { return a * c; }

Integer Tensor::coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Integer(0) : it->second;
}

void Tensor::add_term(const Key& key, const Integer& coefficient) {
    if (key.size() != spaces_.size()) {
        throw DomainError(fmt::format("tensor key of rank {} added to a rank-{} tensor", key.size(),
                                      spaces_.size()));
    }
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) terms_.erase(it);
    }
}

Tensor& Tensor::operator+=(const Tensor& other) {
    if (spaces_ != other.spaces_) throw DomainError("tensor spaces differ");
    for (const auto& [k, c] : other.terms_) add_term(k, c);
    return *this;
}

Tensor& Tensor::operator-=(const Tensor& other) {
    if (spaces_ != other.spaces_) throw DomainError("tensor spaces differ");
    for (const auto& [k, c] : other.terms_) add_term(k, -c);
    return *this;
}

Tensor tensor(const Element& a, const Element& b) {
    Tensor t({a.space(), b.space()});
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) t.add_term({ka, kb}, ca * cb);
    return t;
}

Tensor map_slot(const Tensor& t, std::size_t slot, Space target,
                const std::function<Element(const Index&)>& f) {
    auto spaces = t.spaces();
    spaces.at(slot) = target;
    Tensor out(spaces);
    for (const auto& [key, c] : t.terms()) {
        const Element image = f(key[slot]);
        auto k = key;
        for (const auto& [idx, d] : image.terms()) {
            k[slot] = idx;
            out.add_term(k, c * d);
        }
    }
    return out;
}

Element extend_product(const ProductRule& rule, const Element& x, const Element& y) {
    require_same_space(x.space(), y.space());
    Element out(x.space());
    for (const auto& [kx, cx] : x.terms()) {
        for (const auto& [ky, cy] : y.terms()) {
            const Element p = rule(kx, ky);
            const Integer c = cx * cy;
            for (const auto& [k, d] : p.terms()) out.add_term(k, c * d);
        }
    }
    return out;
}

Tensor extend_coproduct(const CoproductRule& rule, const Element& x) {
    Tensor out({x.space(), x.space()});
    for (const auto& [k, c] : x.terms()) {
        const Tensor t = rule(k);
        for (const auto& [key, d] : t.terms()) out.add_term(key, c * d);
    }
    return out;
}

Element extend_linear(const LinearRule& rule, Space target, const Element& x) {
    Element out(target);
    for (const auto& [k, c] : x.terms()) {
        const Element image = rule(k);
        for (const auto& [idx, d] : image.terms()) out.add_term(idx, c * d);
    }
    return out;
}

Element multiply(const HopfStructure& h, const Element& x, const Element& y) {
    require_same_space(h.space, x.space());
    return extend_product(h.product, x, y);
}

Tensor comultiply(const HopfStructure& h, const Element& x) {
    require_same_space(h.space, x.space());
    return extend_coproduct(h.coproduct, x);
}

Element apply_antipode(const HopfStructure& h, const Element& x) {
    require_same_space(h.space, x.space());
    return extend_linear(h.antipode, h.space, x);
}

Integer counit(const Element& x) { return x.coefficient(unit_index(x.space().algebra)); }

Tensor multiply(const std::vector<const HopfStructure*>& slots, const Tensor& a, const Tensor& b) {
    if (a.spaces() != b.spaces() || a.rank() != slots.size())
        throw DomainError("tensor ranks or spaces differ in a product");
    Tensor out(a.spaces());
    for (const auto& [ka, ca] : a.terms()) {
        for (const auto& [kb, cb] : b.terms()) {
            // Expand slot by slot.
            std::vector<std::pair<Tensor::Key, Integer>> partial{{{}, ca * cb}};
            for (std::size_t s = 0; s < slots.size(); ++s) {
                const Element p = slots[s]->product(ka[s], kb[s]);
                std::vector<std::pair<Tensor::Key, Integer>> next;
                for (const auto& [key, c] : partial) {
                    for (const auto& [idx, d] : p.terms()) {
                        auto k = key;
                        k.push_back(idx);
                        next.emplace_back(std::move(k), c * d);
                    }
                }
                partial = std::move(next);
            }
            for (const auto& [key, c] : partial) out.add_term(key, c);
        }
    }
    return out;
}

namespace {

Tensor rank_one(const Element& x) {
    Tensor t({x.space()});
    for (const auto& [k, c] : x.terms()) t.add_term({k}, c);
    return t;
}

// Replace slot `slot` by its coproduct, raising the rank by one.
Tensor split_slot(const HopfStructure& h, const Tensor& t, std::size_t slot, bool reduced) {
    auto spaces = t.spaces();
    spaces.insert(spaces.begin() + static_cast<std::ptrdiff_t>(slot), h.space);
    Tensor out(spaces);
    for (const auto& [key, c] : t.terms()) {
        const Tensor d = h.coproduct(key[slot]);
        for (const auto& [pair, e] : d.terms()) {
            if (reduced && (degree(pair[0]) == 0 || degree(pair[1]) == 0)) continue;
            Tensor::Key k;
            k.reserve(key.size() + 1);
            k.insert(k.end(), key.begin(), key.begin() + static_cast<std::ptrdiff_t>(slot));
            k.push_back(pair[0]);
            k.push_back(pair[1]);
            k.insert(k.end(), key.begin() + static_cast<std::ptrdiff_t>(slot) + 1, key.end());
            out.add_term(k, c * e);
        }
    }
    return out;
}

}  // namespace

Tensor iterated_coproduct(const HopfStructure& h, const Element& x, int k) {
    if (k < 0) throw DomainError("iterated coproduct order must be non-negative");
    require_same_space(h.space, x.space());
    Tensor t = rank_one(x);
    for (int i = 0; i < k; ++i) t = split_slot(h, t, 0, false);
    return t;
}

Tensor iterated_coproduct_right(const HopfStructure& h, const Element& x, int k) {
    if (k < 0) throw DomainError("iterated coproduct order must be non-negative");
    require_same_space(h.space, x.space());
    Tensor t = rank_one(x);
    for (int i = 0; i < k; ++i) t = split_slot(h, t, t.rank() - 1, false);
    return t;
}

Element takeuchi_antipode(const HopfStructure& h, const Element& x) {
    require_same_space(h.space, x.space());
    Element result = x.homogeneous(0);
    Element positive = x - result;
    // layer = pi^{(x)k} Delta^{(k-1)}(x). Killing degree 0 commutes with
    // splitting the first slot, so zero-degree slots are dropped as we go.
    Tensor layer = rank_one(positive);
    for (int k = 1; !layer.empty(); ++k) {
        const Integer sign = (k % 2 == 1) ? -1 : 1;
        for (const auto& [key, c] : layer.terms()) {
            Element prod = Element::basis(h.space, key[0]);
            for (std::size_t i = 1; i < key.size(); ++i)
                prod = extend_product(h.product, prod, Element::basis(h.space, key[i]));
            result += prod * (sign * c);
        }
        layer = split_slot(h, layer, 0, true);
    }
    return result;
}

bool AxiomReport::ok() const {
    for (const auto& c : checks)
        if (!c.violations.empty()) return false;
    return true;
}

std::string AxiomReport::summary() const {
    std::string out = fmt::format("{} through degree {}: {}\n", structure, max_degree, ok() ? "pass" : "FAIL");
    for (const auto& c : checks) {
        out += fmt::format("  {:<26} {:>7} cases  {}\n", c.name, c.cases,
                           c.violations.empty() ? "ok" : fmt::format("{} violations", c.violations.size()));
        std::size_t shown = 0;
        for (const auto& v : c.violations) {
            if (++shown > 5) break;
            out += "    " + v + "\n";
        }
    }
    return out;
}

AxiomReport verify_hopf_axioms(const HopfStructure& h, int max_degree) {
    AxiomReport report{h.name, max_degree, {}};
    std::vector<std::vector<Index>> basis;
    for (int d = 0; d <= max_degree; ++d) basis.push_back(h.basis(d));
    auto key = [&](const Index& i) { return format_key(h.space, i); };
    auto el = [&](const Index& i) { return Element::basis(h.space, i); };
    const Element one = Element::unit(h.space);
    const std::vector<const HopfStructure*> two{&h, &h};

    AxiomCheck assoc{"associativity", 0, {}};
    AxiomCheck grading{"grading", 0, {}};
    AxiomCheck compat{"bialgebra compatibility", 0, {}};
    for (int p = 0; p <= max_degree; ++p) {
        for (int q = 0; p + q <= max_degree; ++q) {
            for (const auto& a : basis[static_cast<std::size_t>(p)]) {
                for (const auto& b : basis[static_cast<std::size_t>(q)]) {
                    const Element ab = h.product(a, b);
                    ++grading.cases;
                    for (const auto& [k, c] : ab.terms()) {
                        if (degree(k) != p + q) {
                            grading.violations.push_back(
                                fmt::format("{} * {} has a term {}", key(a), key(b), key(k)));
                            break;
                        }
                    }
                    ++compat.cases;
                    const Tensor lhs = extend_coproduct(h.coproduct, ab);
                    const Tensor rhs = multiply(two, h.coproduct(a), h.coproduct(b));
                    if (!(lhs == rhs)) {
                        compat.violations.push_back(fmt::format(
                            "Delta({} * {}) != Delta({}) Delta({})", key(a), key(b), key(a), key(b)));
                    }
                    for (int r = 0; p + q + r <= max_degree; ++r) {
                        for (const auto& c : basis[static_cast<std::size_t>(r)]) {
                            ++assoc.cases;
                            const Element left = extend_product(h.product, ab, el(c));
                            const Element right = extend_product(h.product, el(a), h.product(b, c));
                            if (!(left == right)) {
                                assoc.violations.push_back(fmt::format("({} * {}) * {} != {} * ({} * {})",
                                                                       key(a), key(b), key(c), key(a),
                                                                       key(b), key(c)));
                            }
                        }
                    }
                }
            }
        }
    }

    AxiomCheck coassoc{"coassociativity", 0, {}};
    AxiomCheck counit_law{"counit", 0, {}};
    AxiomCheck antipode_left{"antipode m(S(x)id)Delta", 0, {}};
    AxiomCheck antipode_right{"antipode m(id(x)S)Delta", 0, {}};
    for (int d = 0; d <= max_degree; ++d) {
        for (const auto& a : basis[static_cast<std::size_t>(d)]) {
            const Element x = el(a);
            const Tensor delta = h.coproduct(a);
            ++grading.cases;
            for (const auto& [k, c] : delta.terms()) {
                if (degree(k[0]) + degree(k[1]) != d) {
                    grading.violations.push_back(fmt::format("Delta({}) has a term of wrong degree", key(a)));
                    break;
                }
            }
            ++coassoc.cases;
            if (!(iterated_coproduct(h, x, 2) == iterated_coproduct_right(h, x, 2)))
                coassoc.violations.push_back(fmt::format("Delta is not coassociative on {}", key(a)));

            ++counit_law.cases;
            Element left_counit(h.space), right_counit(h.space);
            Element left_antipode(h.space), right_antipode(h.space);
            for (const auto& [k, c] : delta.terms()) {
                if (degree(k[0]) == 0) left_counit.add_term(k[1], c);
                if (degree(k[1]) == 0) right_counit.add_term(k[0], c);
                left_antipode += extend_product(h.product, h.antipode(k[0]), el(k[1])) * c;
                right_antipode += extend_product(h.product, el(k[0]), h.antipode(k[1])) * c;
            }
            if (!(left_counit == x) || !(right_counit == x))
                counit_law.violations.push_back(fmt::format("counit law fails on {}", key(a)));
            const Element expected = d == 0 ? one : Element(h.space);
            ++antipode_left.cases;
            if (!(left_antipode == expected))
                antipode_left.violations.push_back(fmt::format("m(S(x)id)Delta({}) = {}", key(a),
                                                               format_element(left_antipode)));
            ++antipode_right.cases;
            if (!(right_antipode == expected))
                antipode_right.violations.push_back(fmt::format("m(id(x)S)Delta({}) = {}", key(a),
                                                                format_element(right_antipode)));
        }
    }
    report.checks = {assoc, coassoc, counit_law, compat, antipode_left, antipode_right, grading};
    return report;
}

}  // namespace hopf
