#pragma once

#include <compare>
#include <functional>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "hopf/integer.hpp"
#include "hopf/orders.hpp"
#include "hopf/permutation.hpp"

namespace hopf {

enum class AlgebraTag { SSym, QSym };
enum class BasisTag { Fundamental, Monomial };

struct Space {
    AlgebraTag algebra = AlgebraTag::SSym;
    BasisTag basis = BasisTag::Fundamental;

    friend auto operator<=>(const Space&, const Space&) = default;
};

inline constexpr Space kSSymF{AlgebraTag::SSym, BasisTag::Fundamental};
inline constexpr Space kSSymM{AlgebraTag::SSym, BasisTag::Monomial};
inline constexpr Space kQSymF{AlgebraTag::QSym, BasisTag::Fundamental};
inline constexpr Space kQSymM{AlgebraTag::QSym, BasisTag::Monomial};

std::string to_string(AlgebraTag a);
std::string to_string(BasisTag b);
// "F", "M", "Fq", "Mq".
std::string basis_symbol(Space s);

// Permutations index SSym bases, compositions index QSym bases.
using Index = std::variant<Permutation, Composition>;

int degree(const Index& index);
Index unit_index(AlgebraTag algebra);
bool index_matches(AlgebraTag algebra, const Index& index);
const Permutation& as_permutation(const Index& index);
const Composition& as_composition(const Index& index);

struct BasisKey {
    Space space;
    Index index;

    int degree() const { return hopf::degree(index); }
    friend bool operator==(const BasisKey&, const BasisKey&) = default;
};

// A finite sum of basis elements of one space with nonzero integer
// coefficients, kept in canonical order (degree, then index).
class Element {
public:
    using Terms = std::map<Index, Integer>;

    explicit Element(Space space) : space_(space) {}
    static Element basis(Space space, Index index, Integer coefficient = 1);
    static Element unit(Space space) { return basis(space, unit_index(space.algebra)); }

    Space space() const noexcept { return space_; }
    const Terms& terms() const noexcept { return terms_; }
    bool empty() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    Integer coefficient(const Index& index) const;

    void add_term(const Index& index, const Integer& coefficient);

    Element& operator+=(const Element& other);
    Element& operator-=(const Element& other);
    Element& operator*=(const Integer& c);
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator-(Element a) { return a *= Integer(-1); }
    friend Element operator*(Element a, const Integer& c) { return a *= c; }
    friend Element operator*(const Integer& c, Element a) { return a *= c; }

    // The component of the given degree.
    Element homogeneous(int degree) const;
    // -1 for the empty sum.
    int max_degree() const;

    friend bool operator==(const Element&, const Element&) = default;

private:
    Space space_;
    Terms terms_;
};

Element add(const Element& a, const Element& b);
Element negate(const Element& a);
Element scale(const Element& a, const Integer& c);

// A finite sum of pure tensors of basis elements. Slot i lives in spaces()[i].
class Tensor {
public:
    using Key = std::vector<Index>;
    using Terms = std::map<Key, Integer>;

    explicit Tensor(std::vector<Space> spaces) : spaces_(std::move(spaces)) {}

    const std::vector<Space>& spaces() const noexcept { return spaces_; }
    std::size_t rank() const noexcept { return spaces_.size(); }
    const Terms& terms() const noexcept { return terms_; }
    bool empty() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    Integer coefficient(const Key& key) const;

    void add_term(const Key& key, const Integer& coefficient);
    Tensor& operator+=(const Tensor& other);
    Tensor& operator-=(const Tensor& other);

    friend bool operator==(const Tensor&, const Tensor&) = default;

private:
    std::vector<Space> spaces_;
    Terms terms_;
};

// The codomain of coproducts.
using Tensor2 = Tensor;

Tensor tensor(const Element& a, const Element& b);
// Linear map applied to slot `slot` of every term.
Tensor map_slot(const Tensor& t, std::size_t slot, Space target,
                const std::function<Element(const Index&)>& f);

using ProductRule = std::function<Element(const Index&, const Index&)>;
using CoproductRule = std::function<Tensor(const Index&)>;
using LinearRule = std::function<Element(const Index&)>;

Element extend_product(const ProductRule& rule, const Element& x, const Element& y);
Tensor extend_coproduct(const CoproductRule& rule, const Element& x);
Element extend_linear(const LinearRule& rule, Space target, const Element& x);

// A registered graded connected Hopf algebra in one basis.
struct HopfStructure {
    std::string name;
    Space space;
    ProductRule product;
    CoproductRule coproduct;
    LinearRule antipode;
    // All basis indices of degree n, canonical order.
    std::function<std::vector<Index>(int)> basis;
};

Element multiply(const HopfStructure& h, const Element& x, const Element& y);
Tensor comultiply(const HopfStructure& h, const Element& x);
Element apply_antipode(const HopfStructure& h, const Element& x);
// Coefficient of the degree-0 basis element.
Integer counit(const Element& x);
// (a (x) b)(c (x) d) = ac (x) bd, slot by slot.
Tensor multiply(const std::vector<const HopfStructure*>& slots, const Tensor& a, const Tensor& b);

// Delta^{(0)} = id, Delta^{(k)} = (Delta (x) id^{k-1}) Delta^{(k-1)}; rank k+1.
Tensor iterated_coproduct(const HopfStructure& h, const Element& x, int k);
// Same tensor, bracketed as (id^{k-1} (x) Delta) Delta^{(k-1)}.
Tensor iterated_coproduct_right(const HopfStructure& h, const Element& x, int k);

// S(x) = sum_k (-1)^k m^{(k-1)} pi^{(x)k} Delta^{(k-1)}(x), where pi kills
// degree 0. Uses only the product and coproduct of h.
Element takeuchi_antipode(const HopfStructure& h, const Element& x);

struct AxiomCheck {
    std::string name;
    std::size_t cases = 0;
    std::vector<std::string> violations;
};

struct AxiomReport {
    std::string structure;
    int max_degree = 0;
    std::vector<AxiomCheck> checks;

    bool ok() const;
    std::string summary() const;
};

// Associativity on triples of total degree <= max_degree, coassociativity,
// counit laws, compatibility of product and coproduct on pairs, and both
// antipode identities, on every basis element up to max_degree.
AxiomReport verify_hopf_axioms(const HopfStructure& h, int max_degree);

}  // namespace hopf
