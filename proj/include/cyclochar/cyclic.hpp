#pragma once

#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "hopf.hpp"
#include "sym_module.hpp"

namespace cyclochar {

/*
 * The Hopf-cyclic complexes C^q(H, M) = M (x) H^(x q) in the reduced form,
 * with the operator formulas
 *
 *   d_0 = insert a unit leg,   d_i = coproduct at leg i,
 *   d_{q+1}(m (x) h-word) = m(0) (x) h-word (x) m(-1),
 *   s_j = counit at leg j+1,
 *   t(m (x) h^1 ... h^q) = m(0).h^1(1) (x) S(h^1(2)) . (h^2 ... h^q (x) m(-1)).
 *
 * Coefficients: M = C_delta over H_n (action by the modular character,
 * trivial coaction) or M = V = S(gl_n*)_[2n] over K = U(gl_n).
 */

struct CochainKey {
    SymMonomial m;    // empty monomial for C_delta
    TensorWord legs;  // PBW-normalized tensor legs

    friend auto operator<=>(const CochainKey& a, const CochainKey& b) {
        return std::tie(a.m, a.legs) <=> std::tie(b.m, b.legs);
    }
    friend bool operator==(const CochainKey&, const CochainKey&) = default;
};

using Cochain = FreeVector<CochainKey>;

class HopfCyclicComplex {
  public:
    // V == nullptr: coefficients C_delta over H_n.
    HopfCyclicComplex(int n, const SymModule* V) : H_(hopf(n)), V_(V) {}

    static HopfCyclicComplex over_cdelta(int n) { return {n, nullptr}; }
    static HopfCyclicComplex over_sym(int n) { return {n, &sym_module(n)}; }

    const Hopf& hopf_algebra() const { return H_; }
    const SymModule* module() const { return V_; }

    int degree(const Cochain& x) const {
        if (x.is_zero())
            return -1;
        std::size_t q = x.terms().begin()->first.legs.size();
        for (const auto& [k, c] : x.terms())
            if (k.legs.size() != q)
                throw std::invalid_argument("inhomogeneous cochain");
        return static_cast<int>(q);
    }

    /* module structure, uniform over both coefficient choices */

    FreeVector<SymMonomial> act_m(const SymMonomial& m, const PBWMonomial& word) const {
        if (V_)
            return V_->act(m, word);
        FreeVector<SymMonomial> out;
        out.add(m, H_.delta_char(word));
        return out;
    }

    KCoaction coact_m(const SymMonomial& m) const {
        if (V_)
            return V_->coaction(m);
        KCoaction out;
        out.add({PBWMonomial{}, m}, 1);
        return out;
    }

    /* cocyclic operators */

    Cochain coface(int i, const Cochain& x) const {
        Cochain out;
        int q = degree(x);
        if (q < 0)
            return out;
        if (i < 0 || i > q + 1)
            throw std::out_of_range("coface index");
        for (const auto& [key, c] : x.terms()) {
            if (i == 0) {
                CochainKey k2 = key;
                k2.legs.insert(k2.legs.begin(), PBWMonomial{});
                out.add(std::move(k2), c);
            } else if (i <= q) {
                TensorElement split = H_.coproduct_monomial(key.legs[i - 1]);
                for (const auto& [pw, pc] : split.terms()) {
                    CochainKey k2 = key;
                    k2.legs[i - 1] = pw[0];
                    k2.legs.insert(k2.legs.begin() + i, pw[1]);
                    out.add(std::move(k2), c * pc);
                }
            } else {
                KCoaction co = coact_m(key.m);
                for (const auto& [pair, pc] : co.terms()) {
                    CochainKey k2;
                    k2.m = pair.second;
                    k2.legs = key.legs;
                    k2.legs.push_back(pair.first);
                    out.add(std::move(k2), c * pc);
                }
            }
        }
        return out;
    }

    Cochain codegeneracy(int j, const Cochain& x) const {
        Cochain out;
        int q = degree(x);
        if (q < 0)
            return out;
        if (j < 0 || j > q - 1)
            throw std::out_of_range("codegeneracy index");
        for (const auto& [key, c] : x.terms()) {
            if (!key.legs[j].empty())
                continue;  // counit kills non-unit legs
            CochainKey k2 = key;
            k2.legs.erase(k2.legs.begin() + j);
            out.add(std::move(k2), c);
        }
        return out;
    }

    Cochain cyclic_op(const Cochain& x) const {
        Cochain out;
        int q = degree(x);
        if (q < 0)
            return out;
        for (const auto& [key, c] : x.terms()) {
            KCoaction co = coact_m(key.m);
            if (q == 0) {
                for (const auto& [pair, pc] : co.terms()) {
                    FreeVector<SymMonomial> acted = act_m(pair.second, pair.first);
                    for (const auto& [vm, vc] : acted.terms())
                        out.add({vm, {}}, c * pc * vc);
                }
                continue;
            }
            TensorElement split = H_.coproduct_monomial(key.legs[0]);
            for (const auto& [pair, pc] : co.terms()) {
                for (const auto& [pw, sc] : split.terms()) {
                    FreeVector<SymMonomial> acted = act_m(pair.second, pw[0]);
                    if (acted.is_zero())
                        continue;
                    TensorElement tail;
                    TensorWord tw(key.legs.begin() + 1, key.legs.end());
                    tw.push_back(pair.first);
                    tail.add(std::move(tw), 1);
                    tail = H_.diagonal_left_multiply(H_.antipode(HnElement::basis(pw[1])), tail, 0,
                                                     static_cast<std::size_t>(q));
                    for (const auto& [vm, vc] : acted.terms())
                        for (const auto& [lw, lc] : tail.terms())
                            out.add({vm, lw}, c * pc * sc * vc * lc);
                }
            }
        }
        return out;
    }

    Cochain hochschild_b(const Cochain& x) const {
        Cochain out;
        int q = degree(x);
        if (q < 0)
            return out;
        Rational sign(1);
        for (int i = 0; i <= q + 1; ++i, sign = -sign)
            out += sign * coface(i, x);
        return out;
    }

    // B = N s_{q-1} t (1 - lambda) with lambda = (-1)^q t and N the norm of
    // the target's signed cyclic operator.
    Cochain connes_B(const Cochain& x) const {
        int q = degree(x);
        if (q <= 0)
            return {};
        Rational lam_q(q % 2 == 0 ? 1 : -1);
        Cochain y = x - lam_q * cyclic_op(x);
        Cochain z = codegeneracy(q - 1, cyclic_op(y));
        Cochain out, power = z;
        Rational lambda((q - 1) % 2 == 0 ? 1 : -1), sign(1);
        for (int i = 0; i < q; ++i) {
            out += sign * power;
            if (i + 1 < q) {
                power = cyclic_op(power);
                sign *= lambda;
            }
        }
        return out;
    }

  private:
    const Hopf& H_;
    const SymModule* V_;
};

/* ---- SAYD verification over a Hopf algebra ---- */

struct SaydReport {
    bool pass = true;
    std::string witness;
};

// Module data as explicit tables so perturbed variants can be checked.
struct HopfModuleData {
    std::vector<SymMonomial> basis;
    std::function<FreeVector<SymMonomial>(const SymMonomial&, const HnGenerator&)> act_gen;
    std::function<KCoaction(const SymMonomial&)> coact;
};

inline HopfModuleData cdelta_data(int n) {
    HopfModuleData d;
    d.basis = {SymMonomial{}};
    d.act_gen = [n](const SymMonomial& m, const HnGenerator& g) {
        FreeVector<SymMonomial> out;
        out.add(m, hopf(n).delta_char(PBWMonomial{g}));
        return out;
    };
    d.coact = [](const SymMonomial& m) {
        KCoaction out;
        out.add({PBWMonomial{}, m}, 1);
        return out;
    };
    return d;
}

inline HopfModuleData sym_data(int n) {
    HopfModuleData d;
    const SymModule& V = sym_module(n);
    d.basis = V.basis();
    d.act_gen = [n](const SymMonomial& m, const HnGenerator& g) {
        return sym_module(n).act_gen(m, g);
    };
    d.coact = [n](const SymMonomial& m) { return sym_module(n).coaction(m); };
    return d;
}

// Verify nabla(m.h) = S(h(3)) m(-1) h(1) (x) m(0).h(2) and m(0).m(-1) = m on
// every (basis element, generator) pair.
inline SaydReport hopf_sayd_check(int n, const HopfModuleData& mod,
                                  const std::vector<HnGenerator>& gens) {
    const Hopf& H = hopf(n);
    SaydReport rep;
    auto coact_of = [&](const FreeVector<SymMonomial>& v) {
        KCoaction out;
        for (const auto& [m, c] : v.terms()) {
            KCoaction piece = mod.coact(m);
            piece *= c;
            out += piece;
        }
        return out;
    };
    for (const auto& m : mod.basis) {
        for (const auto& g : gens) {
            KCoaction lhs = coact_of(mod.act_gen(m, g));
            KCoaction rhs;
            TensorElement d2 = H.iterated_coproduct(hn_gen(g), 3);
            KCoaction co = mod.coact(m);
            for (const auto& [w, c] : d2.terms())
                for (const auto& [pair, pc] : co.terms()) {
                    HnElement left = H.multiply(H.antipode(HnElement::basis(w[2])),
                                                HnElement::basis(pair.first));
                    left = H.multiply(left, HnElement::basis(w[0]));
                    FreeVector<SymMonomial> right;
                    right.add(pair.second, 1);
                    // act by the middle leg, generator by generator
                    for (const auto& gen2 : w[1]) {
                        FreeVector<SymMonomial> next;
                        for (const auto& [vm, vc] : right.terms()) {
                            FreeVector<SymMonomial> step = mod.act_gen(vm, gen2);
                            step *= vc;
                            next += step;
                        }
                        right = std::move(next);
                    }
                    for (const auto& [lm, lc] : left.terms())
                        for (const auto& [vm, vc] : right.terms())
                            rhs.add({lm, vm}, c * pc * lc * vc);
                }
            if (lhs != rhs) {
                rep.pass = false;
                rep.witness = "AYD condition fails for generator " + gen_token(g);
                return rep;
            }
        }
        // stability
        FreeVector<SymMonomial> stab;
        KCoaction co = mod.coact(m);
        for (const auto& [pair, pc] : co.terms()) {
            FreeVector<SymMonomial> right;
            right.add(pair.second, 1);
            for (const auto& gen2 : pair.first) {
                FreeVector<SymMonomial> next;
                for (const auto& [vm, vc] : right.terms()) {
                    FreeVector<SymMonomial> step = mod.act_gen(vm, gen2);
                    step *= vc;
                    next += step;
                }
                right = std::move(next);
            }
            right *= pc;
            stab += right;
        }
        if (stab != FreeVector<SymMonomial>::basis(m)) {
            rep.pass = false;
            rep.witness = "stability fails on a basis element";
            return rep;
        }
    }
    return rep;
}

/* ---- antisymmetrization and its left inverse ---- */

inline Cochain antisymmetrize(int n, const LieChain& c) {
    Cochain out;
    for (const auto& [key, coeff] : c.terms()) {
        const WedgeWord& w = key.first;
        std::vector<std::size_t> perm(w.size());
        for (std::size_t t = 0; t < w.size(); ++t)
            perm[t] = t;
        // signed sum over all permutations of the wedge word
        std::sort(perm.begin(), perm.end());
        do {
            int inv = 0;
            for (std::size_t a = 0; a < perm.size(); ++a)
                for (std::size_t b = a + 1; b < perm.size(); ++b)
                    if (perm[a] > perm[b])
                        ++inv;
            Rational sign(inv % 2 == 0 ? 1 : -1);
            CochainKey k2;
            k2.m = key.second;
            for (std::size_t t = 0; t < perm.size(); ++t) {
                auto [i, j] = gl_unflat(n, w[perm[t]]);
                k2.legs.push_back({Ygen(i, j)});
            }
            out.add(std::move(k2), coeff * sign);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return out;
}

// Project every leg to its primitive (single-Y) part and keep only the
// strictly ascending leg words, mapped onto the wedge basis.  This is a left
// inverse of the anti-symmetrization with no normalizing division.
inline LieChain mu(int n, const Cochain& x) {
    LieChain out;
    for (const auto& [key, coeff] : x.terms()) {
        WedgeWord w;
        bool ok = true;
        for (const auto& leg : key.legs) {
            if (leg.size() != 1 || leg[0].kind != GenKind::Y) {
                ok = false;
                break;
            }
            w.push_back(gl_flat(n, {leg[0].a, leg[0].b}));
        }
        if (!ok)
            continue;
        for (std::size_t t = 1; t < w.size(); ++t)
            if (w[t - 1] >= w[t]) {
                ok = false;
                break;
            }
        if (ok)
            out.add({w, key.m}, coeff);
    }
    return out;
}

/* ---- randomized elements and the cocyclic identity suite ---- */

// Deterministic PBW monomial of total generator count <= max_len.
inline PBWMonomial random_pbw_monomial(int n, std::mt19937& rng, int max_len) {
    GenWord w;
    int len = static_cast<int>(rng() % (max_len + 1));
    for (int t = 0; t < len; ++t) {
        switch (rng() % 3) {
            case 0: w.push_back(Xgen(1 + rng() % n)); break;
            case 1: w.push_back(Ygen(1 + rng() % n, 1 + rng() % n)); break;
            default: w.push_back(Dgen(1 + rng() % n, {int(1 + rng() % n), int(1 + rng() % n)}));
        }
    }
    HnElement nf = hopf(n).normal_form(w);
    if (nf.is_zero())
        return {};
    // take the monomial of largest key for determinism
    return nf.terms().rbegin()->first;
}

inline PBWMonomial random_y_monomial(int n, std::mt19937& rng, int max_len) {
    GenWord w;
    int len = static_cast<int>(rng() % (max_len + 1));
    for (int t = 0; t < len; ++t)
        w.push_back(Ygen(1 + rng() % n, 1 + rng() % n));
    std::sort(w.begin(), w.end());
    return w;
}

inline Rational random_coeff(std::mt19937& rng) {
    long long c = static_cast<long long>(rng() % 5) - 2;
    return Rational(c == 0 ? 1 : c);
}

inline Cochain random_cochain(const HopfCyclicComplex& C, int q, std::mt19937& rng,
                              int max_terms = 3, int max_len = 3) {
    Cochain out;
    int n = C.hopf_algebra().n();
    int terms = 1 + static_cast<int>(rng() % max_terms);
    for (int t = 0; t < terms; ++t) {
        CochainKey k;
        if (C.module()) {
            const auto& basis = C.module()->basis();
            k.m = basis[rng() % basis.size()];
            for (int leg = 0; leg < q; ++leg)
                k.legs.push_back(random_y_monomial(n, rng, max_len));
        } else {
            for (int leg = 0; leg < q; ++leg)
                k.legs.push_back(random_pbw_monomial(n, rng, max_len));
        }
        out.add(std::move(k), random_coeff(rng));
    }
    return out;
}

struct CocyclicReport {
    std::string identity;
    int degree = 0;
    bool pass = true;
    std::string witness;
};

// The simplicial and cyclic identities checked on seeded random elements.
inline std::vector<CocyclicReport> cocyclic_identity_suite(const HopfCyclicComplex& C,
                                                           int max_degree, unsigned seed,
                                                           int trials = 3) {
    std::vector<CocyclicReport> out;
    std::mt19937 rng(seed);
    auto record = [&](const std::string& id, int q, bool ok) {
        CocyclicReport r;
        r.identity = id;
        r.degree = q;
        r.pass = ok;
        if (!ok)
            r.witness = "seed " + std::to_string(seed);
        out.push_back(std::move(r));
    };
    for (int q = 0; q <= max_degree; ++q) {
        for (int trial = 0; trial < trials; ++trial) {
            Cochain x = random_cochain(C, q, rng);
            bool djdi = true, sjsi = true, sjdi = true, tdi = true, tsi = true, tq = true;
            for (int i = 0; i <= q + 1 && djdi; ++i)
                for (int j = i + 1; j <= q + 2 && djdi; ++j)
                    djdi = (C.coface(j, C.coface(i, x)) == C.coface(i, C.coface(j - 1, x)));
            for (int j = 0; j + 1 <= q - 1 && sjsi; ++j)
                for (int i = 0; i <= j && sjsi; ++i)
                    sjsi = (C.codegeneracy(j, C.codegeneracy(i, x)) ==
                            C.codegeneracy(i, C.codegeneracy(j + 1, x)));
            for (int j = 0; j <= q && sjdi; ++j)
                for (int i = 0; i <= q + 1 && sjdi; ++i) {
                    Cochain lhs = C.codegeneracy(j, C.coface(i, x));
                    if (i < j)
                        sjdi = (lhs == C.coface(i, C.codegeneracy(j - 1, x)));
                    else if (i == j || i == j + 1)
                        sjdi = (lhs == x);
                    else
                        sjdi = (lhs == C.coface(i - 1, C.codegeneracy(j, x)));
                }
            {
                Cochain tx = C.cyclic_op(x);
                tdi = (C.cyclic_op(C.coface(0, x)) == C.coface(q + 1, x));
                for (int i = 1; i <= q + 1 && tdi; ++i)
                    tdi = (C.cyclic_op(C.coface(i, x)) == C.coface(i - 1, tx));
                for (int i = 1; i <= q - 1 && tsi; ++i)
                    tsi = (C.cyclic_op(C.codegeneracy(i, x)) == C.codegeneracy(i - 1, tx));
                if (q >= 1)
                    tsi = tsi && (C.cyclic_op(C.codegeneracy(0, x)) ==
                                  C.codegeneracy(q - 1, C.cyclic_op(tx)));
                Cochain p = x;
                for (int i = 0; i <= q; ++i)
                    p = C.cyclic_op(p);
                tq = (p == x);
            }
            record("d_j d_i = d_i d_{j-1}", q, djdi);
            record("s_j s_i = s_i s_{j+1}", q, sjsi);
            record("s_j d_i mixed relations", q, sjdi);
            record("t d_i = d_{i-1} t, t d_0 = d_{q+1}", q, tdi);
            record("t s_i = s_{i-1} t, t s_0 = s_{q-1} t^2", q, tsi);
            record("t^{q+1} = id", q, tq);

            Cochain bb = C.hochschild_b(C.hochschild_b(x));
            record("b^2 = 0", q, bb.is_zero());
            if (q >= 1) {
                Cochain BB = C.connes_B(C.connes_B(x));
                record("B^2 = 0", q, BB.is_zero());
            }
            Cochain anti = C.connes_B(C.hochschild_b(x)) + C.hochschild_b(C.connes_B(x));
            record("bB + Bb = 0", q, anti.is_zero());
        }
    }
    return out;
}

}  // namespace cyclochar
