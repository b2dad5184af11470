#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "free_vector.hpp"
#include "linear_system.hpp"
#include "rational.hpp"

namespace cyclochar {

/*
 * Lie-theoretic layer: structure data for a finite-dimensional Lie algebra
 * (gl_n wired), the truncated polynomial coefficients V = S(g*)_[2n], the
 * complexes C(g,V) and W(g,V) with d = d_CE + d_K, Poincare duality, and the
 * SAYD checks at the Lie level.
 *
 * Conventions fixed here and validated by the golden values downstream:
 *  - basis B_a of gl_n indexed by pairs a = (i,j) <-> Y_i^j, ordered
 *    lexicographically; the dual generator R^i_j is the dual of Y_i^j;
 *  - V is a right module via (theta . Z)(W) = theta([Z, W]), extended as a
 *    derivation (this is the right-module form of the coadjoint action);
 *  - the Koszul coaction is nabla(v) = sum_a B_a (x) v R^a over dual pairs.
 */

struct LieAlgebraData {
    int dim = 0;
    std::vector<std::string> labels;
    // C[c][d][e] = coefficient of B_c in [B_d, B_e]
    std::vector<std::vector<std::vector<Rational>>> C;
    std::vector<Rational> trace_ad;  // delta = Tr o ad per basis element

    LieAlgebraData(int d, std::vector<std::string> lab,
                   std::vector<std::vector<std::vector<Rational>>> structure)
        : dim(d), labels(std::move(lab)), C(std::move(structure)) {
        validate();
        trace_ad.assign(dim, Rational(0));
        for (int e = 0; e < dim; ++e)
            for (int c = 0; c < dim; ++c)
                trace_ad[e] += C[c][e][c];  // Tr(ad_{B_e}): coeff of B_c in [B_e, B_c]
    }

    Rational c(int up, int d, int e) const { return C[up][d][e]; }

  private:
    void validate() const {
        for (int c0 = 0; c0 < dim; ++c0)
            for (int d = 0; d < dim; ++d)
                for (int e = 0; e < dim; ++e)
                    if (C[c0][d][e] != -C[c0][e][d])
                        throw std::invalid_argument("structure constants not antisymmetric");
        // Jacobi: [[d,e],f] + [[e,f],d] + [[f,d],e] = 0
        for (int d = 0; d < dim; ++d)
            for (int e = 0; e < dim; ++e)
                for (int f = 0; f < dim; ++f)
                    for (int g = 0; g < dim; ++g) {
                        Rational acc(0);
                        for (int h = 0; h < dim; ++h)
                            acc += C[h][d][e] * C[g][h][f] + C[h][e][f] * C[g][h][d] +
                                   C[h][f][d] * C[g][h][e];
                        if (!acc.is_zero())
                            throw std::invalid_argument("Jacobi identity fails");
                    }
    }
};

using GlIndex = std::pair<int, int>;  // a = (i,j) labels Y_i^j and R^i_j

inline int gl_flat(int n, GlIndex a) { return (a.first - 1) * n + (a.second - 1); }
inline GlIndex gl_unflat(int n, int idx) { return {idx / n + 1, idx % n + 1}; }

inline LieAlgebraData make_gl(int n) {
    const int dim = n * n;
    std::vector labels(dim, std::string{});
    for (int t = 0; t < dim; ++t) {
        auto [i, j] = gl_unflat(n, t);
        labels[t] = "Y_" + std::to_string(i) + "^" + std::to_string(j);
    }
    std::vector C(dim, std::vector(dim, std::vector(dim, Rational(0))));
    // [Y_i^j, Y_k^l] = d(k,j) Y_i^l - d(i,l) Y_k^j
    for (int d = 0; d < dim; ++d)
        for (int e = 0; e < dim; ++e) {
            auto [i, j] = gl_unflat(n, d);
            auto [k, l] = gl_unflat(n, e);
            if (k == j)
                C[gl_flat(n, {i, l})][d][e] += 1;
            if (i == l)
                C[gl_flat(n, {k, j})][d][e] -= 1;
        }
    return LieAlgebraData(dim, std::move(labels), std::move(C));
}

/* ---- truncated symmetric coefficients ---- */

using SymMonomial = std::vector<int>;  // sorted multiset of basis indices (dual gens)
using TruncatedSymElement = FreeVector<SymMonomial>;

inline SymMonomial sym_mul_key(SymMonomial a, const SymMonomial& b) {
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    return a;
}

inline TruncatedSymElement sym_truncate(const TruncatedSymElement& v, std::size_t max_degree) {
    TruncatedSymElement out;
    for (const auto& [m, c] : v.terms())
        if (m.size() <= max_degree)
            out.add(m, c);
    return out;
}

inline TruncatedSymElement sym_multiply(const TruncatedSymElement& a, const TruncatedSymElement& b,
                                        std::size_t max_degree) {
    TruncatedSymElement out;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            SymMonomial m = sym_mul_key(ma, mb);
            if (m.size() <= max_degree)
                out.add(std::move(m), ca * cb);
        }
    return out;
}

// Right coadjoint action of B_d on a dual generator: w_c . B_d = sum C^c_{de} w_e,
// extended to monomials as a derivation.
inline TruncatedSymElement coadjoint_action_gen(const LieAlgebraData& g, int c, int d) {
    TruncatedSymElement out;
    for (int e = 0; e < g.dim; ++e)
        out.add(SymMonomial{e}, g.c(c, d, e));
    return out;
}

inline TruncatedSymElement coadjoint_action(const LieAlgebraData& g, const TruncatedSymElement& v,
                                            int d) {
    TruncatedSymElement out;
    for (const auto& [m, coeff] : v.terms()) {
        for (std::size_t t = 0; t < m.size(); ++t) {
            TruncatedSymElement acted = coadjoint_action_gen(g, m[t], d);
            for (const auto& [gen, c2] : acted.terms()) {
                SymMonomial rest;
                rest.reserve(m.size());
                rest.insert(rest.end(), m.begin(), m.end());
                rest.erase(rest.begin() + t);
                out.add(sym_mul_key(std::move(rest), gen), coeff * c2);
            }
        }
    }
    return out;
}

// Koszul coaction at the Lie level: nabla(v) = sum_a B_a (x) v w_a (truncated).
using LieCoaction = FreeVector<std::pair<int, SymMonomial>>;

inline LieCoaction lie_koszul_coaction(const LieAlgebraData& g, const TruncatedSymElement& v,
                                       std::size_t max_degree) {
    LieCoaction out;
    for (const auto& [m, c] : v.terms()) {
        if (m.size() + 1 > max_degree)
            continue;
        for (int a = 0; a < g.dim; ++a)
            out.add({a, sym_mul_key(m, SymMonomial{a})}, c);
    }
    return out;
}

/* ---- wedge machinery ---- */

using WedgeWord = std::vector<int>;  // strictly increasing basis indices

// Sign-normalized wedge of an arbitrary index word; zero on repeats.
inline std::optional<std::pair<Rational, WedgeWord>> wedge_normalize(WedgeWord w) {
    Rational sign(1);
    for (std::size_t i = 1; i < w.size(); ++i)
        for (std::size_t j = i; j > 0 && w[j - 1] > w[j]; --j) {
            std::swap(w[j - 1], w[j]);
            sign = -sign;
        }
    for (std::size_t i = 1; i < w.size(); ++i)
        if (w[i - 1] == w[i])
            return std::nullopt;
    return std::make_pair(sign, std::move(w));
}

inline std::optional<std::pair<Rational, WedgeWord>> wedge_concat(const WedgeWord& a,
                                                                  const WedgeWord& b) {
    WedgeWord w = a;
    w.insert(w.end(), b.begin(), b.end());
    return wedge_normalize(std::move(w));
}

// Contraction with a single basis vector (pairing dual<->primal is diagonal).
inline std::optional<std::pair<Rational, WedgeWord>> wedge_contract(int a, const WedgeWord& w) {
    for (std::size_t t = 0; t < w.size(); ++t)
        if (w[t] == a) {
            WedgeWord rest = w;
            rest.erase(rest.begin() + t);
            return std::make_pair(Rational((t % 2 == 0) ? 1 : -1), std::move(rest));
        }
    return std::nullopt;
}

/* ---- the complexes W(g,V) and C(g,V) ---- */

using WeilKey = std::pair<WedgeWord, SymMonomial>;  // dual wedge (x) sym monomial
using WeilCochain = FreeVector<WeilKey>;
using LieKey = std::pair<WedgeWord, SymMonomial>;  // primal wedge (x) sym monomial
using LieChain = FreeVector<LieKey>;

struct WeilComplex {
    const LieAlgebraData& g;
    std::size_t trunc;  // max polynomial degree of V

    // d_dR(theta^c) = -1/2 C^c_{de} theta^d ^ theta^e, as an antiderivation.
    WeilCochain de_rham(const WedgeWord& w) const {
        WeilCochain out;
        for (std::size_t t = 0; t < w.size(); ++t) {
            Rational outer((t % 2 == 0) ? 1 : -1);
            for (int d = 0; d < g.dim; ++d)
                for (int e = 0; e < g.dim; ++e) {
                    Rational c = g.c(w[t], d, e);
                    if (c.is_zero())
                        continue;
                    WedgeWord rep;
                    rep.reserve(w.size() + 1);
                    rep.insert(rep.end(), w.begin(), w.begin() + t);
                    rep.push_back(d);
                    rep.push_back(e);
                    rep.insert(rep.end(), w.begin() + t + 1, w.end());
                    if (auto nw = wedge_normalize(std::move(rep)))
                        out.add({nw->second, {}}, outer * Rational(-1, 2) * c * nw->first);
                }
        }
        return out;
    }

    WeilCochain ce_coboundary(const WeilCochain& x) const {
        WeilCochain out;
        for (const auto& [key, c] : x.terms()) {
            const auto& [w, v] = key;
            WeilCochain dr = de_rham(w);
            for (const auto& [k2, c2] : dr.terms())
                out.add({k2.first, v}, c * c2);
            for (int a = 0; a < g.dim; ++a) {
                TruncatedSymElement acted = coadjoint_action(g, TruncatedSymElement::basis(v), a);
                if (acted.is_zero())
                    continue;
                if (auto nw = wedge_concat(WedgeWord{a}, w))
                    for (const auto& [vm, vc] : acted.terms())
                        out.add({nw->second, vm}, -c * nw->first * vc);
            }
        }
        return out;
    }

    WeilCochain koszul_contraction(const WeilCochain& x) const {
        WeilCochain out;
        for (const auto& [key, c] : x.terms()) {
            const auto& [w, v] = key;
            LieCoaction coact = lie_koszul_coaction(g, TruncatedSymElement::basis(v), trunc);
            for (const auto& [leg, c2] : coact.terms()) {
                if (auto cw = wedge_contract(leg.first, w))
                    out.add({cw->second, leg.second}, c * c2 * cw->first);
            }
        }
        return out;
    }

    WeilCochain differential(const WeilCochain& x) const {
        return ce_coboundary(x) + koszul_contraction(x);
    }

    /* homology-side complex C(g,V), boundary = CE part + Koszul part */

    LieChain ce_boundary(const LieChain& x) const {
        LieChain out;
        for (const auto& [key, c] : x.terms()) {
            const auto& [w, v] = key;
            for (std::size_t i = 0; i < w.size(); ++i) {
                Rational sign((i % 2 == 0) ? 1 : -1);
                WedgeWord rest = w;
                rest.erase(rest.begin() + i);
                TruncatedSymElement acted = coadjoint_action(g, TruncatedSymElement::basis(v), w[i]);
                for (const auto& [vm, vc] : acted.terms())
                    out.add({rest, vm}, c * sign * vc);
            }
            for (std::size_t i = 0; i < w.size(); ++i)
                for (std::size_t j = i + 1; j < w.size(); ++j) {
                    Rational sign(((i + j) % 2 == 0) ? 1 : -1);
                    WedgeWord rest;
                    for (std::size_t t = 0; t < w.size(); ++t)
                        if (t != i && t != j)
                            rest.push_back(w[t]);
                    for (int up = 0; up < g.dim; ++up) {
                        Rational sc = g.c(up, w[i], w[j]);
                        if (sc.is_zero())
                            continue;
                        if (auto nw = wedge_concat(WedgeWord{up}, rest))
                            out.add({nw->second, v}, c * sign * sc * nw->first);
                    }
                }
        }
        return out;
    }

    LieChain koszul_boundary(const LieChain& x) const {
        LieChain out;
        for (const auto& [key, c] : x.terms()) {
            const auto& [w, v] = key;
            LieCoaction coact = lie_koszul_coaction(g, TruncatedSymElement::basis(v), trunc);
            for (const auto& [leg, c2] : coact.terms())
                if (auto nw = wedge_concat(WedgeWord{leg.first}, w))
                    out.add({nw->second, leg.second}, c * c2 * nw->first);
        }
        return out;
    }

    LieChain boundary(const LieChain& x) const { return ce_boundary(x) + koszul_boundary(x); }

    // D_P: contract the dual wedge against the top primal wedge, with the
    // lexicographic volume ordering.
    LieChain poincare_duality(const WeilCochain& x) const {
        LieChain out;
        for (const auto& [key, c] : x.terms()) {
            const auto& [s, v] = key;
            WedgeWord complement;
            Rational sign(1);
            {
                std::vector<bool> in_s(g.dim, false);
                for (int t : s)
                    in_s[t] = true;
                for (int t = 0; t < g.dim; ++t)
                    if (!in_s[t])
                        complement.push_back(t);
                // sign of (s, complement) as a permutation of 0..dim-1
                WedgeWord perm = s;
                perm.insert(perm.end(), complement.begin(), complement.end());
                auto nw = wedge_normalize(std::move(perm));
                sign = nw->first;
            }
            out.add({complement, v}, c * sign);
        }
        return out;
    }

    /* total Weil degree: wedge degree + 2 * polynomial degree */
    static std::size_t weil_degree(const WeilKey& k) {
        return k.first.size() + 2 * k.second.size();
    }
};

/* ---- Lie-level SAYD verification ---- */

struct LieSaydReport {
    bool pass = true;
    std::string witness;  // first violated identity, when pass is false
};

struct LieModuleData {
    // right action and left coaction tables given on all of V
    std::vector<SymMonomial> basis;
    // act[b][d] = basis[b] . B_d
    std::vector<std::vector<TruncatedSymElement>> act;
    // coact[b] = sum (B_a, v')
    std::vector<LieCoaction> coact;
    std::vector<Rational> character;  // per basis element of g (defaults to Tr o ad)
};

inline std::vector<SymMonomial> sym_basis(int dim, std::size_t max_degree) {
    std::vector<SymMonomial> out{{}};
    std::vector<SymMonomial> layer{{}};
    for (std::size_t d = 1; d <= max_degree; ++d) {
        std::vector<SymMonomial> next;
        for (const auto& m : layer)
            for (int a = (m.empty() ? 0 : m.back()); a < dim; ++a) {
                SymMonomial ext = m;
                ext.push_back(a);
                next.push_back(ext);
            }
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline LieModuleData standard_lie_module(const LieAlgebraData& g, std::size_t trunc) {
    LieModuleData m;
    m.basis = sym_basis(g.dim, trunc);
    m.act.resize(m.basis.size());
    m.coact.resize(m.basis.size());
    for (std::size_t b = 0; b < m.basis.size(); ++b) {
        m.act[b].resize(g.dim);
        for (int d = 0; d < g.dim; ++d)
            m.act[b][d] = coadjoint_action(g, TruncatedSymElement::basis(m.basis[b]), d);
        m.coact[b] = lie_koszul_coaction(g, TruncatedSymElement::basis(m.basis[b]), trunc);
    }
    m.character = g.trace_ad;
    return m;
}

inline LieSaydReport lie_sayd_check(const LieAlgebraData& g, const LieModuleData& mod,
                                    std::size_t /*trunc*/) {
    LieSaydReport rep;
    auto idx = [&](const SymMonomial& m) {
        auto it = std::lower_bound(mod.basis.begin(), mod.basis.end(), m);
        if (it == mod.basis.end() || *it != m)
            throw std::invalid_argument("module basis is not closed");
        return static_cast<std::size_t>(it - mod.basis.begin());
    };
    using Pair = FreeVector<std::pair<int, SymMonomial>>;
    for (std::size_t b = 0; b < mod.basis.size(); ++b) {
        for (int d = 0; d < g.dim; ++d) {
            // AYD: nabla(v.X) = v(-1) (x) v(0).X + [v(-1), X] (x) v(0)
            Pair lhs;
            for (const auto& [vm, vc] : mod.act[b][d].terms())
                for (const auto& [leg, c2] : mod.coact[idx(vm)].terms())
                    lhs.add(leg, vc * c2);
            Pair rhs;
            for (const auto& [leg, c2] : mod.coact[b].terms()) {
                for (const auto& [vm, vc] : mod.act[idx(leg.second)][d].terms())
                    rhs.add({leg.first, vm}, c2 * vc);
                for (int up = 0; up < g.dim; ++up) {
                    Rational sc = g.c(up, leg.first, d);
                    if (!sc.is_zero())
                        rhs.add({up, leg.second}, c2 * sc);
                }
            }
            if (lhs != rhs) {
                rep.pass = false;
                std::ostringstream os;
                os << "AYD fails at basis element #" << b << " with generator " << g.labels[d];
                rep.witness = os.str();
                return rep;
            }
        }
        // stability of V_{-delta}: v(0) <| v(-1) = 0 with v <| X = v.X - delta(X) v
        TruncatedSymElement stab;
        for (const auto& [leg, c2] : mod.coact[b].terms()) {
            TruncatedSymElement acted = mod.act[idx(leg.second)][leg.first];
            acted -= mod.character[leg.first] * TruncatedSymElement::basis(leg.second);
            acted *= c2;
            stab += acted;
        }
        if (!stab.is_zero()) {
            rep.pass = false;
            std::ostringstream os;
            os << "unimodular stability fails at basis element #" << b;
            rep.witness = os.str();
            return rep;
        }
    }
    return rep;
}

/* ---- cohomology of the truncated Weil complex ---- */

struct WeilCohomology {
    std::vector<std::size_t> betti;                       // per total degree
    std::vector<std::pair<std::size_t, WeilCochain>> representatives;  // checked classes
};

inline std::vector<WeilKey> weil_basis(const LieAlgebraData& g, std::size_t trunc) {
    std::vector<WedgeWord> wedges{{}};
    for (int a = 0; a < g.dim; ++a) {
        std::size_t count = wedges.size();
        for (std::size_t t = 0; t < count; ++t) {
            WedgeWord w = wedges[t];
            w.push_back(a);
            wedges.push_back(std::move(w));
        }
    }
    std::vector<WeilKey> out;
    for (const auto& w : wedges)
        for (const auto& m : sym_basis(g.dim, trunc))
            out.push_back({w, m});
    std::sort(out.begin(), out.end());
    return out;
}

inline Matrix matrix_of_map(const std::vector<WeilKey>& domain, const std::vector<WeilKey>& codomain,
                            const std::function<WeilCochain(const WeilCochain&)>& f) {
    std::map<WeilKey, std::size_t> col;
    for (std::size_t t = 0; t < codomain.size(); ++t)
        col[codomain[t]] = t;
    Matrix m;
    for (const auto& k : domain) {
        Row r(codomain.size(), Rational(0));
        for (const auto& [k2, c] : f(WeilCochain::basis(k)).terms()) {
            auto it = col.find(k2);
            if (it == col.end())
                throw std::logic_error("differential leaves the span");
            r[it->second] = c;
        }
        m.push_back(std::move(r));
    }
    return m;
}

// ker d / im d per total Weil degree, plus verification that the given
// representatives are cocycles and independent modulo coboundaries.
inline WeilCohomology compute_weil_cohomology(
    const LieAlgebraData& g, std::size_t trunc,
    const std::vector<std::pair<std::string, WeilCochain>>& classes) {
    WeilComplex W{g, trunc};
    std::vector<WeilKey> all = weil_basis(g, trunc);
    std::size_t maxdeg = 0;
    for (const auto& k : all)
        maxdeg = std::max(maxdeg, WeilComplex::weil_degree(k));
    std::vector<std::vector<WeilKey>> by_degree(maxdeg + 1);
    for (const auto& k : all)
        by_degree[WeilComplex::weil_degree(k)].push_back(k);

    auto d = [&](const WeilCochain& x) { return W.differential(x); };
    WeilCohomology out;
    out.betti.assign(maxdeg + 1, 0);
    std::vector<std::vector<Row>> boundaries(maxdeg + 2);  // im d in each degree
    std::vector<std::map<WeilKey, std::size_t>> col(maxdeg + 1);
    for (std::size_t m = 0; m <= maxdeg; ++m)
        for (std::size_t t = 0; t < by_degree[m].size(); ++t)
            col[m][by_degree[m][t]] = t;

    std::vector<std::size_t> rank_out(maxdeg + 1, 0);  // rank of d leaving degree m
    for (std::size_t m = 0; m <= maxdeg; ++m) {
        if (by_degree[m].empty())
            continue;
        if (m + 1 <= maxdeg && !by_degree[m + 1].empty()) {
            Matrix dm = matrix_of_map(by_degree[m], by_degree[m + 1], d);
            rref_inplace(dm);
            rank_out[m] = dm.size();
            boundaries[m + 1] = dm;  // row space = image of d in degree m+1
        } else {
            for (const auto& k : by_degree[m])
                if (!d(WeilCochain::basis(k)).is_zero())
                    throw std::logic_error("differential leaves the graded span");
        }
    }
    for (std::size_t m = 0; m <= maxdeg; ++m) {
        std::size_t dim_ker = by_degree[m].size() - rank_out[m];
        std::size_t dim_im = boundaries[m].size();
        out.betti[m] = dim_ker - dim_im;
    }

    for (const auto& [name, rep] : classes) {
        if (rep.is_zero())
            throw std::invalid_argument("zero representative " + name);
        std::size_t m = WeilComplex::weil_degree(rep.terms().begin()->first);
        for (const auto& [k, c] : rep.terms())
            if (WeilComplex::weil_degree(k) != m)
                throw std::invalid_argument("inhomogeneous representative " + name);
        if (!d(rep).is_zero())
            throw std::logic_error("representative " + name + " is not closed");
        out.representatives.push_back({m, rep});
    }
    // independence modulo coboundaries, degree by degree
    for (std::size_t m = 0; m <= maxdeg; ++m) {
        Matrix stack = boundaries[m];
        std::size_t base = rank_of(stack);
        std::size_t count = 0;
        for (const auto& [deg, rep] : out.representatives) {
            if (deg != m)
                continue;
            Row r(by_degree[m].size(), Rational(0));
            for (const auto& [k, c] : rep.terms())
                r[col[m].at(k)] = c;
            stack.push_back(std::move(r));
            ++count;
        }
        if (count && rank_of(stack) != base + count)
            throw std::logic_error("representatives dependent modulo coboundaries in degree " +
                                   std::to_string(m));
    }
    return out;
}

/* ---- the Vey basis representatives for gl_1 and gl_2 ---- */

inline std::vector<std::pair<std::string, WeilCochain>> vey_basis(int n) {
    if (n == 1) {
        // {1, theta (x) R}
        return {{"1", WeilCochain::basis({{}, {}})},
                {"theta*R", WeilCochain::basis({{0}, {0}})}};
    }
    if (n == 2) {
        auto id = [&](int i, int j) { return gl_flat(2, {i, j}); };
        TruncatedSymElement c1;  // Tr = R^1_1 + R^2_2
        c1.add({id(1, 1)}, 1);
        c1.add({id(2, 2)}, 1);
        TruncatedSymElement c1sq = sym_multiply(c1, c1, 2);
        // the invariant second Chern polynomial det = R^1_1 R^2_2 - R^1_2 R^2_1;
        // the bare monomial R^1_2 R^2_1 is not ad-invariant and would not be closed
        TruncatedSymElement c2;
        c2.add(sym_mul_key({id(1, 1)}, {id(2, 2)}), 1);
        c2.add(sym_mul_key({id(1, 2)}, {id(2, 1)}), -1);
        // u1 = theta^1_1 + theta^2_2, u2 = theta^1_1 ^ theta^1_2 ^ theta^2_1,
        // omega = the full wedge (lexicographic order)
        std::vector<std::pair<Rational, WedgeWord>> u1{{1, {id(1, 1)}}, {1, {id(2, 2)}}};
        WedgeWord u2{id(1, 1), id(1, 2), id(2, 1)};
        WedgeWord omega{id(1, 1), id(1, 2), id(2, 1), id(2, 2)};
        auto mk = [&](const std::vector<std::pair<Rational, WedgeWord>>& wedge,
                      const TruncatedSymElement& v) {
            WeilCochain out;
            for (const auto& [ws, w] : wedge)
                for (const auto& [m, c] : v.terms())
                    out.add({w, m}, ws * c);
            return out;
        };
        return {{"1", WeilCochain::basis({{}, {}})},
                {"c1^2*u1", mk(u1, c1sq)},
                {"c2*u1", mk(u1, c2)},
                {"c2*u2", mk({{1, u2}}, c2)},
                {"c1^2*omega", mk({{1, omega}}, c1sq)},
                {"c2*omega", mk({{1, omega}}, c2)}};
    }
    throw std::invalid_argument("vey_basis wired for n in {1,2}");
}

}  // namespace cyclochar
