#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "free_vector.hpp"
#include "rational.hpp"

namespace cyclochar {

/*
 * The Hopf algebra H_n on generators X_k, Y_i^j, d^i_{j k l1...lr}
 * (1 <= indices <= n), with relations
 *
 *   [Y_i^j, Y_k^l] = d(k,j) Y_i^l - d(i,l) Y_k^j
 *   [Y_i^j, X_k]   = d(k,j) X_i
 *   [X_k, X_l]     = 0
 *   d^i_{j k l1..lr} = [X_lr, ... [X_l1, d^i_{jk}] ... ]
 *   [d..., d...]   = 0,   d^i_{jk l...} symmetric in the l's
 *
 * and the Bianchi identity  d^i_{jlk} - d^i_{jkl} = d^s_{jk} d^i_{sl} - d^s_{jl} d^i_{sk}.
 *
 * PBW normal form: (delta part)(Y part)(X part), each part sorted; a delta
 * generator is canonical when its lower indices after the first are sorted
 * ascending (l-symmetry plus Bianchi rewriting).  U(gl_n) sits inside as the
 * words with Y factors only.
 */

enum class GenKind : int { Delta = 0, Y = 1, X = 2 };  // the PBW part order

struct HnGenerator {
    GenKind kind;
    int a = 0;              // X: k.  Y: lower index i.  Delta: upper index i.
    int b = 0;              // Y: upper index j.
    std::vector<int> low;   // Delta: flat lower list (j, k, l1..lr), size >= 2

    friend auto operator<=>(const HnGenerator& x, const HnGenerator& y) {
        return std::tie(x.kind, x.a, x.b, x.low) <=> std::tie(y.kind, y.a, y.b, y.low);
    }
    friend bool operator==(const HnGenerator&, const HnGenerator&) = default;
};

inline HnGenerator Xgen(int k) { return {GenKind::X, k, 0, {}}; }
inline HnGenerator Ygen(int i, int j) { return {GenKind::Y, i, j, {}}; }
inline HnGenerator Dgen(int i, std::vector<int> low) {
    if (low.size() < 2)
        throw std::invalid_argument("delta generator needs at least two lower indices");
    return {GenKind::Delta, i, 0, std::move(low)};
}

using GenWord = std::vector<HnGenerator>;       // raw word, not necessarily normal
using PBWMonomial = GenWord;                    // invariant: in normal form
using HnElement = FreeVector<PBWMonomial>;
using TensorWord = std::vector<PBWMonomial>;    // fixed-width tensor key
using TensorElement = FreeVector<TensorWord>;

inline HnElement hn_one() { return HnElement::basis(PBWMonomial{}); }
inline HnElement hn_gen(const HnGenerator& g) { return HnElement::basis(PBWMonomial{g}); }

class Hopf {
  public:
    explicit Hopf(int n) : n_(n) {
        if (n < 1)
            throw std::invalid_argument("n must be positive");
    }

    int n() const { return n_; }

    void check_index(int i) const {
        if (i < 1 || i > n_)
            throw std::out_of_range("generator index out of range");
    }
    void check_generator(const HnGenerator& g) const {
        switch (g.kind) {
            case GenKind::X: check_index(g.a); break;
            case GenKind::Y: check_index(g.a); check_index(g.b); break;
            case GenKind::Delta:
                check_index(g.a);
                for (int l : g.low)
                    check_index(l);
                if (g.low.size() < 2)
                    throw std::out_of_range("delta generator with too few indices");
                break;
        }
    }

    /* ---- multiplication and normal form ---- */

    HnElement normal_form(const GenWord& word) const {
        for (const auto& g : word)
            check_generator(g);
        return nf(word);
    }

    HnElement multiply(const HnElement& x, const HnElement& y) const {
        HnElement out;
        for (const auto& [wx, cx] : x.terms())
            for (const auto& [wy, cy] : y.terms()) {
                GenWord w = wx;
                w.insert(w.end(), wy.begin(), wy.end());
                HnElement piece = nf(w);
                piece *= cx * cy;
                out += piece;
            }
        return out;
    }

    /* ---- coalgebra ---- */

    TensorElement coproduct_gen(const HnGenerator& g) const {
        auto it = coprod_memo_.find(g);
        if (it != coprod_memo_.end())
            return it->second;
        TensorElement out;
        const PBWMonomial one{};
        const PBWMonomial gm{g};
        switch (g.kind) {
            case GenKind::Y:
                out.add({gm, one}, 1);
                out.add({one, gm}, 1);
                break;
            case GenKind::X:
                out.add({gm, one}, 1);
                out.add({one, gm}, 1);
                for (int i = 1; i <= n_; ++i)
                    for (int j = 1; j <= n_; ++j)
                        out.add({{Dgen(i, {j, g.a})}, {Ygen(i, j)}}, 1);
                break;
            case GenKind::Delta:
                if (g.low.size() == 2) {
                    out.add({gm, one}, 1);
                    out.add({one, gm}, 1);
                } else {
                    // d_{w l} = [X_l, d_w]; Delta is an algebra map.
                    HnGenerator shorter = g;
                    int l = shorter.low.back();
                    shorter.low.pop_back();
                    TensorElement dx = coproduct_gen(Xgen(l));
                    TensorElement dd = coproduct_gen(shorter);
                    out = tensor_multiply(dx, dd) - tensor_multiply(dd, dx);
                }
                break;
        }
        coprod_memo_.emplace(g, out);
        return out;
    }

    TensorElement coproduct_monomial(const PBWMonomial& m) const {
        TensorElement acc;
        acc.add({PBWMonomial{}, PBWMonomial{}}, 1);
        for (const auto& g : m)
            acc = tensor_multiply(acc, coproduct_gen(g));
        return acc;
    }

    TensorElement coproduct(const HnElement& x) const {
        TensorElement out;
        for (const auto& [m, c] : x.terms()) {
            TensorElement piece = coproduct_monomial(m);
            piece *= c;
            out += piece;
        }
        return out;
    }

    // Delta^(legs-1): element of H^(x legs); legs == 1 is the identity embed.
    TensorElement iterated_coproduct(const HnElement& x, int legs) const {
        if (legs < 1)
            throw std::invalid_argument("iterated_coproduct needs legs >= 1");
        TensorElement acc;
        for (const auto& [m, c] : x.terms())
            acc.add(TensorWord{m}, c);
        for (int w = 1; w < legs; ++w)
            acc = coproduct_at(acc, w - 1);
        return acc;
    }

    // Apply the coproduct at one tensor slot.
    TensorElement coproduct_at(const TensorElement& x, std::size_t slot) const {
        TensorElement out;
        for (const auto& [word, c] : x.terms()) {
            if (slot >= word.size())
                throw std::out_of_range("coproduct_at: bad slot");
            TensorElement piece = coproduct_monomial(word[slot]);
            for (const auto& [pw, pc] : piece.terms()) {
                TensorWord w;
                w.reserve(word.size() + 1);
                w.insert(w.end(), word.begin(), word.begin() + slot);
                w.push_back(pw[0]);
                w.push_back(pw[1]);
                w.insert(w.end(), word.begin() + slot + 1, word.end());
                out.add(std::move(w), c * pc);
            }
        }
        return out;
    }

    Rational counit(const HnElement& x) const { return x.coeff(PBWMonomial{}); }

    // The modular character: delta(Y_i^j) = kronecker(i,j), zero on X and d.
    Rational delta_char(const PBWMonomial& m) const {
        for (const auto& g : m) {
            if (g.kind != GenKind::Y || g.a != g.b)
                return 0;
        }
        return 1;
    }
    Rational delta_char(const HnElement& x) const {
        Rational out(0);
        for (const auto& [m, c] : x.terms())
            out += c * delta_char(m);
        return out;
    }

    /* ---- antipode ---- */

    HnElement antipode_gen(const HnGenerator& g) const {
        auto it = antipode_memo_.find(g);
        if (it != antipode_memo_.end())
            return it->second;
        HnElement out;
        switch (g.kind) {
            case GenKind::Y:
                out.add({g}, -1);
                break;
            case GenKind::X: {
                out.add({g}, -1);
                for (int i = 1; i <= n_; ++i)
                    for (int j = 1; j <= n_; ++j)
                        out += nf({Dgen(i, {j, g.a}), Ygen(i, j)});
                break;
            }
            case GenKind::Delta: {
                if (g.low.size() == 2) {
                    out.add({g}, -1);
                    break;
                }
                // S(g) = -g - sum S(g') g'' over the nontrivial coproduct part;
                // those left legs only involve shallower deltas.
                out.add({g}, -1);
                TensorElement cp = coproduct_gen(g);
                cp.add({PBWMonomial{g}, PBWMonomial{}}, -1);
                cp.add({PBWMonomial{}, PBWMonomial{g}}, -1);
                for (const auto& [w, c] : cp.terms()) {
                    HnElement piece = multiply(antipode_monomial(w[0]), HnElement::basis(w[1]));
                    piece *= -c;
                    out += piece;
                }
                break;
            }
        }
        antipode_memo_.emplace(g, out);
        return out;
    }

    HnElement antipode_monomial(const PBWMonomial& m) const {
        HnElement acc = hn_one();
        for (auto it = m.rbegin(); it != m.rend(); ++it)
            acc = multiply(acc, antipode_gen(*it));
        return acc;
    }

    HnElement antipode(const HnElement& x) const {
        HnElement out;
        for (const auto& [m, c] : x.terms()) {
            HnElement piece = antipode_monomial(m);
            piece *= c;
            out += piece;
        }
        return out;
    }

    // S_delta = (delta (x) S) o coproduct
    HnElement twisted_antipode(const HnElement& x) const {
        HnElement out;
        const TensorElement cp = coproduct(x);
        for (const auto& [w, c] : cp.terms()) {
            Rational d = delta_char(w[0]);
            if (d.is_zero())
                continue;
            HnElement piece = antipode_monomial(w[1]);
            piece *= c * d;
            out += piece;
        }
        return out;
    }

    /* ---- tensor algebra helpers ---- */

    TensorElement tensor_multiply(const TensorElement& x, const TensorElement& y) const {
        TensorElement out;
        for (const auto& [wx, cx] : x.terms())
            for (const auto& [wy, cy] : y.terms()) {
                if (wx.size() != wy.size())
                    throw std::invalid_argument("tensor width mismatch");
                // per-leg products expand into sums; fold across legs
                std::vector<std::pair<TensorWord, Rational>> acc{{TensorWord{}, cx * cy}};
                for (std::size_t t = 0; t < wx.size(); ++t) {
                    GenWord w = wx[t];
                    w.insert(w.end(), wy[t].begin(), wy[t].end());
                    HnElement leg = nf(w);
                    std::vector<std::pair<TensorWord, Rational>> next;
                    for (const auto& [partial, pc] : acc)
                        for (const auto& [lm, lc] : leg.terms()) {
                            TensorWord tw = partial;
                            tw.push_back(lm);
                            next.emplace_back(std::move(tw), pc * lc);
                        }
                    acc = std::move(next);
                    if (acc.empty())
                        break;
                }
                for (auto& [w, c] : acc)
                    out.add(std::move(w), c);
            }
        return out;
    }

    // Left-multiply the legs [first, last) of every term by u, distributing u
    // through the iterated coproduct (the diagonal action).
    TensorElement diagonal_left_multiply(const HnElement& u, const TensorElement& x,
                                         std::size_t first, std::size_t last) const {
        if (x.is_zero())
            return {};
        const std::size_t width = x.terms().begin()->first.size();
        if (first > last || last > width)
            throw std::out_of_range("diagonal_left_multiply: bad leg range");
        const std::size_t span = last - first;
        if (span == 0)
            return counit(u) * x;
        TensorElement du = iterated_coproduct(u, static_cast<int>(span));
        TensorElement out;
        for (const auto& [uw, uc] : du.terms())
            for (const auto& [xw, xc] : x.terms()) {
                std::vector<std::pair<TensorWord, Rational>> acc{{TensorWord{}, uc * xc}};
                for (std::size_t t = 0; t < xw.size(); ++t) {
                    HnElement leg;
                    if (t >= first && t < last) {
                        GenWord w = uw[t - first];
                        w.insert(w.end(), xw[t].begin(), xw[t].end());
                        leg = nf(w);
                    } else {
                        leg = HnElement::basis(xw[t]);
                    }
                    std::vector<std::pair<TensorWord, Rational>> next;
                    for (const auto& [partial, pc] : acc)
                        for (const auto& [lm, lc] : leg.terms()) {
                            TensorWord tw = partial;
                            tw.push_back(lm);
                            next.emplace_back(std::move(tw), pc * lc);
                        }
                    acc = std::move(next);
                    if (acc.empty())
                        break;
                }
                for (auto& [w, c] : acc)
                    out.add(std::move(w), c);
            }
        return out;
    }

    /* ---- the bicrossed coaction used for the fundamental class ---- */

    // nabla(X_k) = 1 (x) X_k + d^i_{jk} (x) Y_i^j ;  nabla(Y) = 1 (x) Y.
    // Iterated j times by coassociativity and padded with units to m+1 legs.
    TensorElement iterated_coaction(const HnGenerator& Z, int depth, int m) const {
        if (Z.kind == GenKind::Delta)
            throw std::invalid_argument("coaction is defined on the U-part generators");
        if (depth < 1 || depth > m)
            throw std::out_of_range("coaction depth out of range");
        check_generator(Z);
        TensorElement acc;
        acc.add(TensorWord{{Z}}, 1);
        for (int d = 0; d < depth; ++d)
            acc = coact_last_leg(acc);
        // pad with units on the right to width m+1
        TensorElement out;
        for (const auto& [w, c] : acc.terms()) {
            TensorWord padded = w;
            padded.resize(m + 1);
            out.add(std::move(padded), c);
        }
        return out;
    }

  private:
    TensorElement coact_last_leg(const TensorElement& x) const {
        TensorElement out;
        for (const auto& [w, c] : x.terms()) {
            const PBWMonomial& u = w.back();
            if (u.size() != 1)
                throw std::logic_error("coaction iteration expects generator legs");
            const HnGenerator& g = u[0];
            auto emit = [&](PBWMonomial fleg, PBWMonomial uleg, Rational coeff) {
                TensorWord nw(w.begin(), w.end() - 1);
                nw.push_back(std::move(fleg));
                nw.push_back(std::move(uleg));
                out.add(std::move(nw), c * coeff);
            };
            if (g.kind == GenKind::Y) {
                emit({}, {g}, 1);
            } else {
                emit({}, {g}, 1);
                for (int i = 1; i <= n_; ++i)
                    for (int j = 1; j <= n_; ++j)
                        emit({Dgen(i, {j, g.a})}, {Ygen(i, j)}, 1);
            }
        }
        return out;
    }

    /* ---- rewriting engine ---- */

    HnElement nf(const GenWord& word) const {
        const bool cache = word.size() <= 6;
        if (cache) {
            auto it = nf_memo_.find(word);
            if (it != nf_memo_.end())
                return it->second;
        }
        HnElement out;
        std::vector<std::pair<GenWord, Rational>> work{{word, Rational(1)}};
        while (!work.empty()) {
            auto [w, c] = std::move(work.back());
            work.pop_back();

            // non-canonical delta generator?
            std::size_t bad = w.size();
            for (std::size_t t = 0; t < w.size(); ++t)
                if (w[t].kind == GenKind::Delta && !delta_is_canonical(w[t])) {
                    bad = t;
                    break;
                }
            if (bad != w.size()) {
                HnElement repl = canonical_delta(w[bad]);
                for (const auto& [rm, rc] : repl.terms()) {
                    GenWord nw(w.begin(), w.begin() + bad);
                    nw.insert(nw.end(), rm.begin(), rm.end());
                    nw.insert(nw.end(), w.begin() + bad + 1, w.end());
                    work.emplace_back(std::move(nw), c * rc);
                }
                continue;
            }

            // first adjacent violation of the PBW order
            std::size_t t = 0;
            bool found = false;
            for (; t + 1 < w.size(); ++t) {
                const auto& g1 = w[t];
                const auto& g2 = w[t + 1];
                if (g1.kind > g2.kind || (g1.kind == g2.kind && g2 < g1)) {
                    found = true;
                    break;
                }
            }
            if (!found) {
                out.add(std::move(w), c);
                continue;
            }

            auto push = [&](std::vector<HnGenerator> sub, Rational coeff) {
                GenWord nw(w.begin(), w.begin() + t);
                nw.insert(nw.end(), sub.begin(), sub.end());
                nw.insert(nw.end(), w.begin() + t + 2, w.end());
                work.emplace_back(std::move(nw), c * coeff);
            };
            const HnGenerator g1 = w[t], g2 = w[t + 1];
            push({g2, g1}, 1);  // the swap; corrections below
            if (g1.kind == GenKind::Y && g2.kind == GenKind::Y) {
                // [Y_i^j, Y_k^l] = d(k,j) Y_i^l - d(i,l) Y_k^j
                if (g2.a == g1.b)
                    push({Ygen(g1.a, g2.b)}, 1);
                if (g1.a == g2.b)
                    push({Ygen(g2.a, g1.b)}, -1);
            } else if (g1.kind == GenKind::X && g2.kind == GenKind::Y) {
                // X_k Y_i^j = Y_i^j X_k - d(k,j) X_i
                if (g1.a == g2.b)
                    push({Xgen(g2.a)}, -1);
            } else if (g1.kind == GenKind::X && g2.kind == GenKind::Delta) {
                // X_l d = d X_l + d_{low+l}
                HnGenerator ext = g2;
                ext.low.push_back(g1.a);
                push({ext}, 1);
            } else if (g1.kind == GenKind::Y && g2.kind == GenKind::Delta) {
                // Y_p^q d^i_low = d^i_low Y_p^q + [Y_p^q, d^i_low]
                for (std::size_t s = 0; s < g2.low.size(); ++s)
                    if (g2.low[s] == g1.b) {
                        HnGenerator sub = g2;
                        sub.low[s] = g1.a;
                        push({sub}, 1);
                    }
                if (g1.a == g2.a) {
                    HnGenerator sub = g2;
                    sub.a = g1.b;
                    push({sub}, -1);
                }
            }
            // X-X and Delta-Delta commute: the swap alone is the rewrite.
        }
        if (cache)
            nf_memo_.emplace(word, out);
        return out;
    }

    static bool delta_is_canonical(const HnGenerator& g) {
        return std::is_sorted(g.low.begin(), g.low.end());
    }

    // Canonicalize one delta generator.  Free rewrites: d^i_{jk} = d^i_{kj}
    // (needed for the coproduct to kill [X_k, X_l]; it propagates to every
    // depth through d_{w l} = [X_l, d_w]) and the l-block symmetry.  The
    // remaining descent low[1] > low[2] is a Bianchi swap whose corrections
    // are quadratic with strictly fewer lower indices, so this terminates.
    HnElement canonical_delta(const HnGenerator& g) const {
        auto it = delta_memo_.find(g);
        if (it != delta_memo_.end())
            return it->second;
        HnElement out;
        HnGenerator h = g;
        if (h.low[0] > h.low[1])
            std::swap(h.low[0], h.low[1]);
        if (h.low.size() > 3)
            std::sort(h.low.begin() + 2, h.low.end());
        if (delta_is_canonical(h)) {
            out.add({h}, 1);
        } else {
            // h.low = (j, a, b, L) with a > b.
            const int j = h.low[0], a = h.low[1], b = h.low[2];
            std::vector<int> L(h.low.begin() + 3, h.low.end());
            HnGenerator main = h;
            main.low[1] = b;
            main.low[2] = a;
            out += canonical_delta(main);
            const std::size_t nsplit = std::size_t{1} << L.size();
            for (std::size_t mask = 0; mask < nsplit; ++mask) {
                std::vector<int> L1, L2;
                for (std::size_t t = 0; t < L.size(); ++t)
                    ((mask >> t) & 1 ? L1 : L2).push_back(L[t]);
                for (int s = 1; s <= n_; ++s) {
                    // + d^s_{j b L1} d^i_{s a L2} - d^s_{j a L1} d^i_{s b L2}
                    auto mk = [&](int up, int first, int second, const std::vector<int>& tail) {
                        std::vector<int> low{first, second};
                        low.insert(low.end(), tail.begin(), tail.end());
                        return Dgen(up, std::move(low));
                    };
                    HnElement p1 = multiply(canonical_delta(mk(s, j, b, L1)),
                                            canonical_delta(mk(h.a, s, a, L2)));
                    HnElement p2 = multiply(canonical_delta(mk(s, j, a, L1)),
                                            canonical_delta(mk(h.a, s, b, L2)));
                    out += p1;
                    out -= p2;
                }
            }
        }
        delta_memo_.emplace(g, out);
        return out;
    }

    int n_;
    mutable std::map<HnGenerator, TensorElement> coprod_memo_;
    mutable std::map<HnGenerator, HnElement> antipode_memo_;
    mutable std::map<HnGenerator, HnElement> delta_memo_;
    mutable std::map<GenWord, HnElement> nf_memo_;
};

// Shared per-thread instances (memo tables are not synchronized).
inline const Hopf& hopf(int n) {
    thread_local std::map<int, Hopf> instances;
    auto it = instances.find(n);
    if (it == instances.end())
        it = instances.emplace(n, Hopf(n)).first;
    return it->second;
}

/* ---- token grammar shared with the CLI emitters ---- */

inline std::string gen_token(const HnGenerator& g) {
    std::ostringstream os;
    switch (g.kind) {
        case GenKind::X: os << "X_" << g.a; break;
        case GenKind::Y: os << "Y_" << g.a << "^" << g.b; break;
        case GenKind::Delta: {
            os << "d^" << g.a << "_{";
            for (std::size_t t = 0; t < g.low.size(); ++t)
                os << (t ? "," : "") << g.low[t];
            os << "}";
            break;
        }
    }
    return os.str();
}

inline HnGenerator parse_gen_token(const std::string& tok) {
    auto fail = [&]() -> HnGenerator {
        throw std::invalid_argument("bad generator token: " + tok);
    };
    if (tok.rfind("X_", 0) == 0)
        return Xgen(std::stoi(tok.substr(2)));
    if (tok.rfind("Y_", 0) == 0) {
        auto caret = tok.find('^');
        if (caret == std::string::npos)
            return fail();
        return Ygen(std::stoi(tok.substr(2, caret - 2)), std::stoi(tok.substr(caret + 1)));
    }
    if (tok.rfind("d^", 0) == 0) {
        auto us = tok.find('_');
        if (us == std::string::npos || tok.size() < us + 3 || tok[us + 1] != '{' || tok.back() != '}')
            return fail();
        int up = std::stoi(tok.substr(2, us - 2));
        std::vector<int> low;
        std::string body = tok.substr(us + 2, tok.size() - us - 3);
        std::istringstream is(body);
        std::string piece;
        while (std::getline(is, piece, ','))
            low.push_back(std::stoi(piece));
        return Dgen(up, std::move(low));
    }
    return fail();
}

}  // namespace cyclochar
