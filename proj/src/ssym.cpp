#include "hopf/ssym.hpp"

#include <map>
#include <memory>
#include <mutex>

#include <fmt/format.h>

#include "hopf/degree_guard.hpp"
#include "hopf/errors.hpp"
#include "hopf/text.hpp"

namespace hopf::ssym {

namespace {

void require_ssym(const Element& x) {
    if (x.space().algebra != AlgebraTag::SSym) throw DomainError("expected an SSym element");
}

Permutation prefix_st(const Permutation& u, int p) {
    return standardize(u.word().subspan(0, static_cast<std::size_t>(p)));
}

Permutation suffix_st(const Permutation& u, int p) {
    return standardize(u.word().subspan(static_cast<std::size_t>(p)));
}

// Everything needed to evaluate rho_zeta on S_p x S_q by masks.
struct ShuffleTable {
    int p = 0, q = 0;
    const WeakOrderCache::Table* left = nullptr;
    const WeakOrderCache::Table* right = nullptr;
    std::vector<Permutation> shuffles;
    // rho[z][i * |S_q| + j] = inversion mask of rho_{zeta_z}(u_i, v_j).
    std::vector<std::vector<std::uint64_t>> rho;

    std::size_t width() const { return right->perms.size(); }
};

const ShuffleTable& shuffle_table(int p, int q) {
    static std::mutex mutex;
    static std::map<std::pair<int, int>, std::unique_ptr<ShuffleTable>> tables;
    check_degree(p + q, "computing monomial structure constants");
    auto& cache = weak_order_cache();
    const auto* left = &cache.table(p);
    const auto* right = &cache.table(q);
    std::lock_guard lock(mutex);
    auto& slot = tables[{p, q}];
    if (!slot) {
        auto t = std::make_unique<ShuffleTable>();
        t->p = p;
        t->q = q;
        t->left = left;
        t->right = right;
        t->shuffles = grassmannians(p, q);
        for (const auto& zeta : t->shuffles) {
            std::vector<std::uint64_t> masks;
            masks.reserve(left->perms.size() * right->perms.size());
            for (const auto& a : left->perms)
                for (const auto& b : right->perms) masks.push_back(inversion_mask(rho(zeta, a, b)));
            t->rho.push_back(std::move(masks));
        }
        slot = std::move(t);
    }
    return *slot;
}

// (u,v) = max rho_zeta^{-1}[1,w]: (u,v) lies in the preimage and dominates it.
bool is_preimage_max(const ShuffleTable& t, std::size_t z, std::size_t i, std::size_t j, std::uint64_t w) {
    const auto& rho = t.rho[z];
    const std::size_t width = t.width();
    if (!mask_leq(rho[i * width + j], w)) return false;
    const auto ui = t.left->masks[i], vj = t.right->masks[j];
    for (std::size_t a = 0; a < t.left->perms.size(); ++a) {
        for (std::size_t b = 0; b < width; ++b) {
            if (mask_leq(rho[a * width + b], w) && !(mask_leq(t.left->masks[a], ui) && mask_leq(t.right->masks[b], vj)))
                return false;
        }
    }
    return true;
}

// (i) (u x v) zeta^{-1} <= w; (ii) no (u',v') >= (u,v) other than (u,v)
// satisfies the same.
bool satisfies_conditions(const ShuffleTable& t, std::size_t z, std::size_t i, std::size_t j, std::uint64_t w) {
    const auto& rho = t.rho[z];
    const std::size_t width = t.width();
    if (!mask_leq(rho[i * width + j], w)) return false;
    const auto ui = t.left->masks[i], vj = t.right->masks[j];
    for (std::size_t a = 0; a < t.left->perms.size(); ++a) {
        if (!mask_leq(ui, t.left->masks[a])) continue;
        for (std::size_t b = 0; b < width; ++b) {
            if (a == i && b == j) continue;
            if (mask_leq(vj, t.right->masks[b]) && mask_leq(rho[a * width + b], w)) return false;
        }
    }
    return true;
}

// Both characterizations of A^w_{u,v}, cross-checked.
template <class Emit>
void alpha_witnesses(const ShuffleTable& t, std::size_t i, std::size_t j, std::uint64_t w, Emit&& emit) {
    for (std::size_t z = 0; z < t.shuffles.size(); ++z) {
        const bool by_max = is_preimage_max(t, z, i, j, w);
        const bool by_conditions = satisfies_conditions(t, z, i, j, w);
        if (by_max != by_conditions) {
            throw InternalError(fmt::format(
                "the two descriptions of A^w_(u,v) disagree at zeta = {} (u = {}, v = {})",
                format_permutation(t.shuffles[z]), format_permutation(t.left->perms[i]),
                format_permutation(t.right->perms[j])));
        }
        if (by_max) emit(z);
    }
}

std::vector<Permutation> up_masks_to_perms(const WeakOrderCache::Table& t, const std::vector<int>& ranks) {
    std::vector<Permutation> out;
    for (int r : ranks) out.push_back(t.perms[static_cast<std::size_t>(r)]);
    return out;
}

}  // namespace

Element f_product(const Permutation& u, const Permutation& v) {
    Element out(kSSymF);
    for (const auto& zeta : grassmannians(u.degree(), v.degree())) out.add_term(rho(zeta, u, v), 1);
    return out;
}

Tensor f_coproduct(const Permutation& u) {
    Tensor out({kSSymF, kSSymF});
    for (int p = 0; p <= u.degree(); ++p) out.add_term({prefix_st(u, p), suffix_st(u, p)}, 1);
    return out;
}

Element monomial_in_fundamental(const Permutation& u) {
    auto& cache = weak_order_cache();
    const auto& t = cache.table(u.degree());
    Element out(kSSymF);
    for (auto [rank, mu] : cache.mobius_row(u)) out.add_term(t.perms[static_cast<std::size_t>(rank)], mu);
    return out;
}

Element fundamental_in_monomial(const Permutation& u) {
    auto& cache = weak_order_cache();
    const auto& t = cache.table(u.degree());
    Element out(kSSymM);
    for (const auto& v : up_masks_to_perms(t, cache.upset(u.degree(), lex_rank(u)))) out.add_term(v, 1);
    return out;
}

Element to_monomial(const Element& x) {
    require_ssym(x);
    if (x.space().basis == BasisTag::Monomial) return x;
    // Accumulate densely per degree: coefficient of M_v is the sum of the
    // F-coefficients of all u <= v.
    auto& cache = weak_order_cache();
    std::map<int, std::vector<Integer>> dense;
    for (const auto& [k, c] : x.terms()) {
        const auto& u = as_permutation(k);
        const auto& t = cache.table(u.degree());
        auto& acc = dense[u.degree()];
        if (acc.empty()) acc.resize(t.perms.size());
        for (int r : cache.upset(u.degree(), lex_rank(u))) acc[static_cast<std::size_t>(r)] += c;
    }
    Element out(kSSymM);
    for (const auto& [n, acc] : dense) {
        const auto& t = cache.table(n);
        for (std::size_t r = 0; r < acc.size(); ++r)
            if (acc[r] != 0) out.add_term(t.perms[r], acc[r]);
    }
    return out;
}

Element to_fundamental(const Element& x) {
    require_ssym(x);
    if (x.space().basis == BasisTag::Fundamental) return x;
    return extend_linear([](const Index& i) { return monomial_in_fundamental(as_permutation(i)); }, kSSymF, x);
}

Tensor m_coproduct(const Permutation& u) {
    Tensor out({kSSymM, kSSymM});
    std::vector<int> cuts{0};
    const DescentSet gdes = global_descents(u);
    for (int p : gdes.members()) cuts.push_back(p);
    if (u.degree() > 0) cuts.push_back(u.degree());
    for (int p : cuts) out.add_term({prefix_st(u, p), suffix_st(u, p)}, 1);
    return out;
}

std::vector<Permutation> alpha_set(const AlphaQuery& q) {
    if (q.u.degree() + q.v.degree() != q.w.degree()) {
        throw DomainError(fmt::format("alpha query degrees {} + {} != {}", q.u.degree(), q.v.degree(),
                                      q.w.degree()));
    }
    const auto& t = shuffle_table(q.u.degree(), q.v.degree());
    std::vector<Permutation> out;
    alpha_witnesses(t, static_cast<std::size_t>(lex_rank(q.u)), static_cast<std::size_t>(lex_rank(q.v)),
                    inversion_mask(q.w), [&](std::size_t z) { out.push_back(t.shuffles[z]); });
    return out;
}

int alpha(const AlphaQuery& q) { return static_cast<int>(alpha_set(q).size()); }

Element m_product(const Permutation& u, const Permutation& v) {
    const int n = u.degree() + v.degree();
    const auto& t = shuffle_table(u.degree(), v.degree());
    const auto& full = weak_order_cache().table(n);
    const auto i = static_cast<std::size_t>(lex_rank(u));
    const auto j = static_cast<std::size_t>(lex_rank(v));
    Element out(kSSymM);
    for (std::size_t r = 0; r < full.perms.size(); ++r) {
        int count = 0;
        alpha_witnesses(t, i, j, full.masks[r], [&](std::size_t) { ++count; });
        if (count != 0) out.add_term(full.perms[r], count);
    }
    return out;
}

LambdaCoefficient lambda(const Permutation& v, const Permutation& w) {
    if (v.degree() != w.degree()) throw DomainError("lambda needs permutations of equal degree");
    LambdaCoefficient out{w, 0, {}};
    if (v.degree() == 0) {
        out.coefficient = 1;
        return out;
    }
    const Permutation w_inv = inverse(w);
    for (const auto& S : subsets(v.degree())) {
        if (descents(compose(w_inv, restrict(v, S))).is_subset_of(S)) {
            out.witnesses.push_back(S);
            out.coefficient += S.size() % 2 == 1 ? 1 : -1;
        }
    }
    return out;
}

Element antipode_f(const Permutation& v) {
    const int n = v.degree();
    if (n == 0) return Element::unit(kSSymF);
    check_degree(n, "computing the F-basis antipode");
    const auto all = all_permutations(n);
    const auto S_list = subsets(n);
    std::vector<Permutation> restricted;
    for (const auto& S : S_list) restricted.push_back(restrict(v, S));
    Element out(kSSymF);
    for (const auto& w : all) {
        const Permutation w_inv = inverse(w);
        int coefficient = 0;
        for (std::size_t s = 0; s < S_list.size(); ++s) {
            if (descents(compose(w_inv, restricted[s])).is_subset_of(S_list[s]))
                coefficient += S_list[s].size() % 2 == 1 ? 1 : -1;
        }
        if (coefficient != 0) out.add_term(w, coefficient);
    }
    return out;
}

namespace {

// Masks needed to test the three conditions defining C_S(v,w) for one zeta.
struct KappaCandidate {
    Permutation zeta;
    std::uint64_t base;                    // v_S zeta^{-1}
    std::vector<std::uint64_t> larger_v;   // v'_S zeta^{-1} for v' > v
    std::vector<std::uint64_t> smaller_r;  // v_R zeta^{-1} for Des(zeta) <= R < S
};

std::vector<KappaCandidate> kappa_candidates(const Permutation& v) {
    const int n = v.degree();
    const DescentSet S = global_descents(v);
    auto& cache = weak_order_cache();
    const auto& t = cache.table(n);
    const auto up = cache.upset(n, lex_rank(v));
    const Permutation v_S = restrict(v, S);
    std::vector<KappaCandidate> out;
    for (const auto& zeta : grassmannians(S)) {
        const Permutation zeta_inv = inverse(zeta);
        KappaCandidate c{zeta, inversion_mask(compose(v_S, zeta_inv)), {}, {}};
        for (int r : up) {
            const auto& vp = t.perms[static_cast<std::size_t>(r)];
            if (vp == v) continue;
            c.larger_v.push_back(inversion_mask(compose(restrict(vp, S), zeta_inv)));
        }
        const DescentSet D = descents(zeta);
        const std::uint32_t sb = S.bits(), db = D.bits();
        // R ranges over sets with D <= R < S: D plus a proper subset of S \ D.
        for (std::uint32_t extra = (sb & ~db);; extra = (extra - 1) & (sb & ~db)) {
            const std::uint32_t rb = db | extra;
            if (rb != sb) c.smaller_r.push_back(inversion_mask(compose(restrict(v, DescentSet::from_bits(rb, n)), zeta_inv)));
            if (extra == 0) break;
        }
        out.push_back(std::move(c));
    }
    return out;
}

bool in_c_set(const KappaCandidate& c, std::uint64_t w) {
    if (!mask_leq(c.base, w)) return false;
    for (auto m : c.larger_v)
        if (mask_leq(m, w)) return false;
    for (auto m : c.smaller_r)
        if (mask_leq(m, w)) return false;
    return true;
}

Integer kappa_sign(const Permutation& v) {
    return global_descents(v).size() % 2 == 1 ? 1 : -1;
}

}  // namespace

KappaCoefficient kappa(const Permutation& v, const Permutation& w) {
    if (v.degree() != w.degree()) throw DomainError("kappa needs permutations of equal degree");
    KappaCoefficient out{w, 0, {}};
    if (v.degree() == 0) {
        out.coefficient = 1;
        return out;
    }
    const auto wm = inversion_mask(w);
    for (const auto& c : kappa_candidates(v)) {
        if (in_c_set(c, wm)) out.witnesses.push_back(c.zeta);
    }
    out.coefficient = static_cast<int>(out.witnesses.size());
    return out;
}

Element antipode_m(const Permutation& v) {
    const int n = v.degree();
    if (n == 0) return Element::unit(kSSymM);
    const auto candidates = kappa_candidates(v);
    const auto& t = weak_order_cache().table(n);
    const Integer sign = kappa_sign(v);
    Element out(kSSymM);
    for (std::size_t r = 0; r < t.perms.size(); ++r) {
        int count = 0;
        for (const auto& c : candidates)
            if (in_c_set(c, t.masks[r])) ++count;
        if (count != 0) out.add_term(t.perms[r], sign * count);
    }
    return out;
}

Element antipode_power(const Element& x, int k) {
    require_ssym(x);
    if (k < 0) throw DomainError("antipode power must be non-negative");
    const HopfStructure& h = x.space().basis == BasisTag::Fundamental ? fundamental_structure() : monomial_structure();
    Element y = x;
    for (int i = 0; i < k; ++i) y = apply_antipode(h, y);
    return y;
}

Integer duality_pairing(const Element& x, const Element& y) {
    const Element fx = to_fundamental(x), fy = to_fundamental(y);
    Integer total = 0;
    for (const auto& [k, c] : fx.terms()) total += c * fy.coefficient(inverse(as_permutation(k)));
    return total;
}

namespace {
std::vector<Index> basis_of(int n) {
    std::vector<Index> out;
    for (auto& u : all_permutations(n)) out.emplace_back(std::move(u));
    return out;
}

Tensor convert_tensor(const Tensor& t, Space target, const std::function<Element(const Index&)>& conv) {
    return map_slot(map_slot(t, 0, target, conv), 1, target, conv);
}
}  // namespace

const HopfStructure& fundamental_structure() {
    static const HopfStructure h{
        "SSym fundamental basis",
        kSSymF,
        [](const Index& a, const Index& b) { return f_product(as_permutation(a), as_permutation(b)); },
        [](const Index& a) { return f_coproduct(as_permutation(a)); },
        [](const Index& a) { return antipode_f(as_permutation(a)); },
        basis_of,
    };
    return h;
}

const HopfStructure& monomial_structure() {
    static const HopfStructure h{
        "SSym monomial basis",
        kSSymM,
        [](const Index& a, const Index& b) { return m_product(as_permutation(a), as_permutation(b)); },
        [](const Index& a) { return m_coproduct(as_permutation(a)); },
        [](const Index& a) { return antipode_m(as_permutation(a)); },
        basis_of,
    };
    return h;
}

const HopfStructure& monomial_structure_by_conversion() {
    static const HopfStructure h{
        "SSym monomial basis (via F)",
        kSSymM,
        [](const Index& a, const Index& b) {
            const auto product = [](const Index& x, const Index& y) {
                return f_product(as_permutation(x), as_permutation(y));
            };
            return to_monomial(extend_product(product, monomial_in_fundamental(as_permutation(a)),
                                              monomial_in_fundamental(as_permutation(b))));
        },
        [](const Index& a) {
            const Tensor t = extend_coproduct([](const Index& x) { return f_coproduct(as_permutation(x)); },
                                              monomial_in_fundamental(as_permutation(a)));
            return convert_tensor(t, kSSymM, [](const Index& x) { return fundamental_in_monomial(as_permutation(x)); });
        },
        [](const Index& a) {
            return to_monomial(extend_linear([](const Index& x) { return antipode_f(as_permutation(x)); }, kSSymF,
                                             monomial_in_fundamental(as_permutation(a))));
        },
        basis_of,
    };
    return h;
}

}  // namespace hopf::ssym
