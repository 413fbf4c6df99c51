#include "hopf/text.hpp"

#include <cctype>
#include <limits>

#include <fmt/format.h>

#include "hopf/errors.hpp"

namespace hopf {

namespace {

class Cursor {
public:
    Cursor(std::string_view text, std::size_t base = 0) : text_(text), base_(base) {}

    bool done() const { return pos_ >= text_.size(); }
    char peek() const { return done() ? '\0' : text_[pos_]; }
    std::size_t offset() const { return base_ + pos_; }
    void skip_ws() {
        while (!done() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) fail(fmt::format("expected '{}'", c));
    }
    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(done() ? message + " but reached the end" : fmt::format("{} near '{}'", message, text_[pos_]),
                         offset());
    }
    std::string digits() {
        std::string d;
        while (!done() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) d += text_[pos_++];
        return d;
    }
    int integer() {
        const std::size_t at = offset();
        const std::string d = digits();
        if (d.empty()) fail("expected a number");
        if (d.size() > 9) throw ParseError("number too large", at);
        return std::stoi(d);
    }
    std::vector<int> list(char close) {
        std::vector<int> out;
        skip_ws();
        if (accept(close)) return out;
        for (;;) {
            skip_ws();
            out.push_back(integer());
            skip_ws();
            if (accept(close)) return out;
            expect(',');
        }
    }

private:
    std::string_view text_;
    std::size_t base_;
    std::size_t pos_ = 0;
};

template <class T, class F>
T wrap_domain(std::size_t offset, F&& f) {
    try {
        return f();
    } catch (const ParseError&) {
        throw;
    } catch (const DomainError& e) {
        throw ParseError(e.what(), offset);
    }
}

Permutation read_permutation(Cursor& c) {
    const std::size_t at = c.offset();
    std::vector<int> word;
    if (c.accept('[')) {
        word = c.list(']');
    } else {
        for (char ch : c.digits()) word.push_back(ch - '0');
        if (word.size() > 9) throw ParseError("permutations of degree >= 10 need the bracketed list syntax", at);
    }
    return wrap_domain<Permutation>(at, [&] { return Permutation::from_word(word); });
}

DescentSet read_descent_set(Cursor& c) {
    const std::size_t at = c.offset();
    c.expect('{');
    auto members = c.list('}');
    c.skip_ws();
    c.expect('@');
    c.skip_ws();
    const int n = c.integer();
    return wrap_domain<DescentSet>(at, [&] { return DescentSet(std::move(members), n); });
}

Composition read_composition(Cursor& c) {
    const std::size_t at = c.offset();
    c.expect('(');
    auto parts = c.list(')');
    return wrap_domain<Composition>(at, [&] { return Composition(std::move(parts)); });
}

Composition read_qsym_index(Cursor& c) {
    if (c.peek() == '{') return subset_to_composition(read_descent_set(c));
    return read_composition(c);
}

template <class T>
T parse_whole(std::string_view text, T (*reader)(Cursor&)) {
    Cursor c(text);
    c.skip_ws();
    T value = reader(c);
    c.skip_ws();
    if (!c.done()) c.fail("unexpected trailing input");
    return value;
}

std::string join_ints(const auto& xs) { return fmt::format("{}", fmt::join(xs, ",")); }

}  // namespace

std::string format_permutation(const Permutation& u) {
    if (u.degree() >= 10) return "[" + join_ints(u.word()) + "]";
    std::string s;
    for (int x : u.word()) s += static_cast<char>('0' + x);
    return s;
}

Permutation parse_permutation(std::string_view text) { return parse_whole<Permutation>(text, read_permutation); }

std::string format_descent_set(const DescentSet& S) {
    return fmt::format("{{{}}}@{}", join_ints(S.members()), S.degree());
}

DescentSet parse_descent_set(std::string_view text) { return parse_whole<DescentSet>(text, read_descent_set); }

std::string format_composition(const Composition& alpha) { return "(" + join_ints(alpha.parts()) + ")"; }

Composition parse_composition(std::string_view text) { return parse_whole<Composition>(text, read_composition); }

Composition parse_qsym_index(std::string_view text) { return parse_whole<Composition>(text, read_qsym_index); }

std::string format_index(const Index& index) {
    if (const auto* p = std::get_if<Permutation>(&index)) return format_permutation(*p);
    return format_composition(std::get<Composition>(index));
}

std::string format_key(Space space, const Index& index) {
    return basis_symbol(space) + "[" + format_index(index) + "]";
}

std::string format_integer(const Integer& c) { return c.str(); }

namespace {
std::string signed_prefix(const Integer& c, bool first) {
    const Integer mag = c < 0 ? Integer(-c) : c;
    std::string s;
    if (first)
        s = c < 0 ? "-" : "";
    else
        s = c < 0 ? " - " : " + ";
    if (mag != 1) s += format_integer(mag) + "*";
    return s;
}
}  // namespace

std::string format_element(const Element& x) {
    if (x.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : x.terms()) {
        out += signed_prefix(c, first) + format_key(x.space(), k);
        first = false;
    }
    return out;
}

std::string format_tensor(const Tensor& t) {
    if (t.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [key, c] : t.terms()) {
        out += signed_prefix(c, first);
        for (std::size_t i = 0; i < key.size(); ++i) {
            if (i > 0) out += " ⊗ ";
            out += format_key(t.spaces()[i], key[i]);
        }
        first = false;
    }
    return out;
}

namespace {

Space read_tag(Cursor& c) {
    Space s;
    if (c.accept('F'))
        s.basis = BasisTag::Fundamental;
    else if (c.accept('M'))
        s.basis = BasisTag::Monomial;
    else
        c.fail("expected a basis tag F, M, Fq or Mq");
    s.algebra = c.accept('q') ? AlgebraTag::QSym : AlgebraTag::SSym;
    return s;
}

}  // namespace

Element parse_element(std::string_view text) {
    Cursor c(text);
    c.skip_ws();
    if (c.peek() == '0') {
        Cursor probe = c;
        probe.accept('0');
        probe.skip_ws();
        if (probe.done()) throw ParseError("the empty sum \"0\" has no basis tag; write a term", c.offset());
    }
    std::optional<Element> result;
    bool first = true;
    while (true) {
        c.skip_ws();
        Integer sign = 1;
        if (c.accept('-'))
            sign = -1;
        else if (!first && !c.accept('+'))
            c.fail("expected '+' or '-'");
        c.skip_ws();
        Integer coeff = 1;
        if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
            coeff = Integer(c.digits());
            c.skip_ws();
            c.expect('*');
            c.skip_ws();
        }
        const std::size_t key_at = c.offset();
        const Space space = read_tag(c);
        c.expect('[');
        Index index = space.algebra == AlgebraTag::SSym ? Index(read_permutation(c)) : Index(read_qsym_index(c));
        c.expect(']');
        if (!result) result.emplace(space);
        if (result->space() != space) {
            throw ParseError(fmt::format("basis tag {} does not match earlier tag {}", basis_symbol(space),
                                         basis_symbol(result->space())),
                             key_at);
        }
        result->add_term(index, sign * coeff);
        first = false;
        c.skip_ws();
        if (c.done()) break;
    }
    return *result;
}

namespace {
nlohmann::json coeff_to_json(const Integer& c) {
    if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(c);
    return format_integer(c);
}

Integer coeff_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
    if (j.is_string()) return Integer(j.get<std::string>());
    throw DomainError("coefficient must be an integer or a decimal string");
}
}  // namespace

nlohmann::json element_to_json(const Element& x) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [k, c] : x.terms()) terms.push_back({{"index", format_index(k)}, {"coeff", coeff_to_json(c)}});
    return {{"algebra", to_string(x.space().algebra)}, {"basis", to_string(x.space().basis)}, {"terms", terms}};
}

namespace {
Space space_from_json(const nlohmann::json& j) {
    Space s;
    const auto algebra = j.at("algebra").get<std::string>();
    if (algebra == "SSym")
        s.algebra = AlgebraTag::SSym;
    else if (algebra == "QSym")
        s.algebra = AlgebraTag::QSym;
    else
        throw DomainError("unknown algebra " + algebra);
    const auto basis = j.at("basis").get<std::string>();
    if (basis == "F")
        s.basis = BasisTag::Fundamental;
    else if (basis == "M")
        s.basis = BasisTag::Monomial;
    else
        throw DomainError("unknown basis " + basis);
    return s;
}

Index index_from_text(AlgebraTag algebra, const std::string& text) {
    if (algebra == AlgebraTag::SSym) return parse_permutation(text);
    return parse_qsym_index(text);
}
}  // namespace

Element element_from_json(const nlohmann::json& j) {
    try {
        const Space s = space_from_json(j);
        Element x(s);
        for (const auto& t : j.at("terms")) {
            const auto idx = t.at("index").get<std::string>();
            x.add_term(index_from_text(s.algebra, idx), coeff_from_json(t.at("coeff")));
        }
        return x;
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("malformed element JSON: ") + e.what());
    }
}

nlohmann::json tensor_to_json(const Tensor& t) {
    nlohmann::json spaces = nlohmann::json::array();
    for (const auto& s : t.spaces()) spaces.push_back({{"algebra", to_string(s.algebra)}, {"basis", to_string(s.basis)}});
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [key, c] : t.terms()) {
        nlohmann::json idx = nlohmann::json::array();
        for (const auto& k : key) idx.push_back(format_index(k));
        terms.push_back({{"index", idx}, {"coeff", coeff_to_json(c)}});
    }
    return {{"spaces", spaces}, {"terms", terms}};
}

Tensor tensor_from_json(const nlohmann::json& j) {
    try {
        std::vector<Space> spaces;
        for (const auto& s : j.at("spaces")) spaces.push_back(space_from_json(s));
        Tensor t(spaces);
        for (const auto& term : j.at("terms")) {
            Tensor::Key key;
            const auto& idx = term.at("index");
            if (idx.size() != spaces.size()) throw DomainError("tensor term rank does not match its spaces");
            for (std::size_t i = 0; i < spaces.size(); ++i)
                key.push_back(index_from_text(spaces[i].algebra, idx[i].get<std::string>()));
            t.add_term(key, coeff_from_json(term.at("coeff")));
        }
        return t;
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("malformed tensor JSON: ") + e.what());
    }
}

}  // namespace hopf
