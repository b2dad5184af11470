#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "affine.hpp"
#include "cyclic.hpp"
#include "linear_system.hpp"

namespace cyclochar {

/*
 * The invariant-subspace model (V* (x) C_delta (x) H^(x q))^{gl_n} of the
 * equivariant complex C_K(H, V, C_delta), with the operators of the
 * equivariant cocyclic module transported through the isomorphism I:
 *
 *   I(nu (x) 1 (x) h^1 ... h^q)(v) = nu(v) (x)_H 1 (x) h^1 ... h^q.
 *
 * A key stores the index of the dual-basis functional (as the V-basis
 * monomial it is dual to) and the H-legs.  The last coface and the cyclic
 * operator consume the Koszul coaction of V and the delta-twist; after the
 * cyclic rotation the leading leg is pushed back to 1 with S_delta (the
 * J-identification), which is where the twist enters.
 *
 * Coefficients are either exact rationals or affine expressions in named
 * unknowns; the latter drive the codimension-2 ansatz solve.
 */

struct TwistedKey {
    SymMonomial dual;  // nu = dual of this V-basis monomial
    TensorWord legs;

    friend auto operator<=>(const TwistedKey& a, const TwistedKey& b) {
        return std::tie(a.dual, a.legs) <=> std::tie(b.dual, b.legs);
    }
    friend bool operator==(const TwistedKey&, const TwistedKey&) = default;
};

template <class Coeff>
using TwistedT = FreeVector<TwistedKey, Coeff>;
using Twisted = TwistedT<Rational>;
using TwistedAffine = TwistedT<Affine>;

// Hom-side representative of C^q_K(H, V, C_delta): value at a V-basis
// argument, with an explicit slot-0 leg (the (x)_H presentation).
struct HomKey {
    SymMonomial arg;
    TensorWord slots;  // q+1 legs, slot 0 first

    friend auto operator<=>(const HomKey& a, const HomKey& b) {
        return std::tie(a.arg, a.slots) <=> std::tie(b.arg, b.slots);
    }
    friend bool operator==(const HomKey&, const HomKey&) = default;
};
using HomSide = FreeVector<HomKey>;

class EquivariantModel {
  public:
    explicit EquivariantModel(int n) : n_(n), H_(hopf(n)), V_(sym_module(n)) {
        // dual_coact[m] = all (p, u, c) with coact(v_p) containing c * (u (x) v_m)
        dual_coact_.resize(V_.basis().size());
        for (std::size_t p = 0; p < V_.basis().size(); ++p)
            for (const auto& [pair, c] : V_.coaction(V_.basis()[p]).terms())
                dual_coact_[V_.index(pair.second)].push_back({p, pair.first, c});
    }

    int n() const { return n_; }
    const Hopf& hopf_algebra() const { return H_; }
    const SymModule& module() const { return V_; }

    template <class Coeff>
    int degree(const TwistedT<Coeff>& x) const {
        if (x.is_zero())
            return -1;
        std::size_t q = x.terms().begin()->first.legs.size();
        for (const auto& [k, c] : x.terms())
            if (k.legs.size() != q)
                throw std::invalid_argument("inhomogeneous twisted cochain");
        return static_cast<int>(q);
    }

    /* the displayed gl_n-action on V* (x) C_delta (x) H^(x q) */

    template <class Coeff>
    TwistedT<Coeff> g0_action(const TwistedT<Coeff>& x, int i, int j) const {
        TwistedT<Coeff> out;
        HnElement Z = hn_gen(Ygen(i, j));
        for (const auto& [key, c] : x.terms()) {
            // - sum over legs of Ad_Z
            for (std::size_t t = 0; t < key.legs.size(); ++t) {
                HnElement leg = HnElement::basis(key.legs[t]);
                HnElement ad = H_.multiply(Z, leg) - H_.multiply(leg, Z);
                for (const auto& [lm, lc] : ad.terms()) {
                    TwistedKey k2 = key;
                    k2.legs[t] = lm;
                    out.add(std::move(k2), c * Coeff(-lc));
                }
            }
            // + delta(Z)
            if (i == j)
                out.add(key, c);
            // + (nu . Z) with (nu^m . Z) = -sum_p <nu^m, v_p . Z> nu^p
            for (std::size_t p = 0; p < V_.basis().size(); ++p) {
                TruncatedSymElement acted = V_.act_gen(V_.basis()[p], Ygen(i, j));
                Rational pairing = acted.coeff(key.dual);
                if (!pairing.is_zero()) {
                    TwistedKey k2 = key;
                    k2.dual = V_.basis()[p];
                    out.add(std::move(k2), c * Coeff(-pairing));
                }
            }
        }
        return out;
    }

    struct InvarianceReport {
        bool pass = true;
        std::string witness;
    };

    template <class Coeff>
    InvarianceReport invariance_check(const TwistedT<Coeff>& x) const {
        for (int i = 1; i <= n_; ++i)
            for (int j = 1; j <= n_; ++j)
                if (!g0_action(x, i, j).is_zero())
                    return {false, "action of " + gen_token(Ygen(i, j)) + " does not vanish"};
        return {};
    }

    /* cocyclic operators on the model */

    template <class Coeff>
    TwistedT<Coeff> coface(int i, const TwistedT<Coeff>& x) const {
        TwistedT<Coeff> out;
        int q = degree(x);
        if (q < 0)
            return out;
        if (i < 0 || i > q + 1)
            throw std::out_of_range("coface index");
        for (const auto& [key, c] : x.terms()) {
            if (i == 0) {
                TwistedKey k2 = key;
                k2.legs.insert(k2.legs.begin(), PBWMonomial{});
                out.add(std::move(k2), c);
            } else if (i <= q) {
                TensorElement split = H_.coproduct_monomial(key.legs[i - 1]);
                for (const auto& [pw, pc] : split.terms()) {
                    TwistedKey k2 = key;
                    k2.legs[i - 1] = pw[0];
                    k2.legs.insert(k2.legs.begin() + i, pw[1]);
                    out.add(std::move(k2), c * Coeff(pc));
                }
            } else {
                for (const auto& entry : dual_coact_[V_.index(key.dual)]) {
                    HnElement su = H_.antipode(HnElement::basis(entry.u));
                    for (const auto& [sm, sc] : su.terms()) {
                        TwistedKey k2;
                        k2.dual = V_.basis()[entry.p];
                        k2.legs = key.legs;
                        k2.legs.push_back(sm);
                        out.add(std::move(k2), c * Coeff(entry.c * sc));
                    }
                }
            }
        }
        return out;
    }

    template <class Coeff>
    TwistedT<Coeff> codegeneracy(int j, const TwistedT<Coeff>& x) const {
        TwistedT<Coeff> out;
        int q = degree(x);
        if (q < 0)
            return out;
        if (j < 0 || j > q - 1)
            throw std::out_of_range("codegeneracy index");
        for (const auto& [key, c] : x.terms()) {
            if (!key.legs[j].empty())
                continue;
            TwistedKey k2 = key;
            k2.legs.erase(k2.legs.begin() + j);
            out.add(std::move(k2), c);
        }
        return out;
    }

    template <class Coeff>
    TwistedT<Coeff> cyclic_op(const TwistedT<Coeff>& x) const {
        TwistedT<Coeff> out;
        int q = degree(x);
        if (q < 0)
            return out;
        for (const auto& [key, c] : x.terms()) {
            for (const auto& entry : dual_coact_[V_.index(key.dual)]) {
                HnElement su = H_.antipode(HnElement::basis(entry.u));
                if (q == 0) {
                    Rational val = H_.delta_char(su) * entry.c;
                    if (!val.is_zero())
                        out.add({V_.basis()[entry.p], {}}, c * Coeff(val));
                    continue;
                }
                // legs (h^2 ... h^q, S(u)), then push h^1 back through S_delta
                HnElement sdelta = H_.twisted_antipode(HnElement::basis(key.legs[0]));
                for (const auto& [sm, sc] : su.terms()) {
                    TensorElement tail;
                    TensorWord tw(key.legs.begin() + 1, key.legs.end());
                    tw.push_back(sm);
                    tail.add(std::move(tw), sc * entry.c);
                    tail = H_.diagonal_left_multiply(sdelta, tail, 0, static_cast<std::size_t>(q));
                    for (const auto& [lw, lc] : tail.terms())
                        out.add({V_.basis()[entry.p], lw}, c * Coeff(lc));
                }
            }
        }
        return out;
    }

    template <class Coeff>
    TwistedT<Coeff> twisted_b(const TwistedT<Coeff>& x, bool check_invariance = true) const {
        if (check_invariance) {
            auto rep = invariance_check(x);
            if (!rep.pass)
                throw std::invalid_argument("twisted_b on non-invariant input: " + rep.witness);
        }
        TwistedT<Coeff> out;
        int q = degree(x);
        if (q < 0)
            return out;
        Rational sign(1);
        for (int i = 0; i <= q + 1; ++i, sign = -sign) {
            TwistedT<Coeff> piece = coface(i, x);
            piece *= Coeff(sign);
            out += piece;
        }
        return out;
    }

    template <class Coeff>
    TwistedT<Coeff> twisted_t(const TwistedT<Coeff>& x, bool check_invariance = true) const {
        if (check_invariance) {
            auto rep = invariance_check(x);
            if (!rep.pass)
                throw std::invalid_argument("twisted_t on non-invariant input: " + rep.witness);
        }
        return cyclic_op(x);
    }

    /* the isomorphism I of the invariant model with the Hom-side complex */

    HomSide to_hom(const Twisted& x) const {
        HomSide out;
        for (const auto& [key, c] : x.terms()) {
            TensorWord slots;
            slots.push_back({});
            slots.insert(slots.end(), key.legs.begin(), key.legs.end());
            out.add({key.dual, std::move(slots)}, c);
        }
        return out;
    }

    Twisted from_hom(const HomSide& h) const {
        Twisted out;
        for (const auto& [key, c] : h.terms()) {
            const std::size_t q = key.slots.size() - 1;
            if (q == 0) {
                // J on width 0 evaluates the character: m . h^0 = delta(h^0) m
                Rational val = H_.delta_char(key.slots[0]);
                if (!val.is_zero())
                    out.add({key.arg, {}}, c * val);
                continue;
            }
            // J: push slot 0 through S_delta onto the rest
            HnElement sd = H_.twisted_antipode(HnElement::basis(key.slots[0]));
            TensorElement rest;
            rest.add(TensorWord(key.slots.begin() + 1, key.slots.end()), 1);
            rest = H_.diagonal_left_multiply(sd, rest, 0, q);
            for (const auto& [w, wc] : rest.terms())
                out.add({key.arg, w}, c * wc);
        }
        return out;
    }

  private:
    struct DualEntry {
        std::size_t p;  // source basis index
        PBWMonomial u;  // K-leg of the coaction
        Rational c;
    };

    int n_;
    const Hopf& H_;
    const SymModule& V_;
    std::vector<std::vector<DualEntry>> dual_coact_;
};

inline const EquivariantModel& equivariant_model(int n) {
    thread_local std::map<int, EquivariantModel> instances;
    auto it = instances.find(n);
    if (it == instances.end())
        it = instances.emplace(n, EquivariantModel(n)).first;
    return it->second;
}

// The equivariant characteristic map chi_tau^eq: on the model it re-tags the
// cochain as living on the A-side; the verification content is that the
// twisted operators on the codomain reproduce the A-side computations.
template <class Coeff>
TwistedT<Coeff> equivariant_cup(const EquivariantModel& model, const TwistedT<Coeff>& x) {
    auto rep = model.invariance_check(x);
    if (!rep.pass)
        throw std::invalid_argument("equivariant_cup on non-invariant input: " + rep.witness);
    return x;
}

// Seed-deterministic invariant elements: sample a key set, close it under
// the gl_n-action supports, and draw from the kernel of the stacked action.
inline std::vector<Twisted> random_invariant_elements(const EquivariantModel& M, int q,
                                                      unsigned seed, int samples, int max_len,
                                                      int count = 3) {
    const int n = M.n();
    std::mt19937 rng(seed);
    std::set<TwistedKey> keys;
    for (int t = 0; t < samples; ++t) {
        TwistedKey k;
        const auto& basis = M.module().basis();
        k.dual = basis[rng() % basis.size()];
        for (int leg = 0; leg < q; ++leg)
            k.legs.push_back(random_pbw_monomial(n, rng, max_len));
        keys.insert(std::move(k));
    }
    for (bool grew = true; grew;) {
        grew = false;
        std::set<TwistedKey> next = keys;
        for (const auto& k : keys)
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j) {
                    Twisted acted = M.g0_action(Twisted::basis(k), i, j);
                    for (const auto& [k2, c] : acted.terms())
                        if (next.insert(k2).second)
                            grew = true;
                }
        keys = std::move(next);
        if (keys.size() > 4000)
            throw std::runtime_error("invariant sample space exploded");
    }
    std::vector<TwistedKey> klist(keys.begin(), keys.end());
    std::map<std::pair<int, TwistedKey>, Row> rowmap;
    for (std::size_t t = 0; t < klist.size(); ++t)
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                int zid = (i - 1) * n + (j - 1);
                Twisted acted = M.g0_action(Twisted::basis(klist[t]), i, j);
                for (const auto& [k2, c] : acted.terms()) {
                    Row& r = rowmap[{zid, k2}];
                    if (r.empty())
                        r.assign(klist.size(), Rational(0));
                    r[t] += c;
                }
            }
    Matrix rows;
    for (auto& [idx, r] : rowmap)
        rows.push_back(std::move(r));
    std::vector<Twisted> out;
    if (rows.empty()) {
        for (std::size_t t = 0; t < std::min<std::size_t>(klist.size(), count); ++t)
            out.push_back(Twisted::basis(klist[t]));
        return out;
    }
    KernelResult kres = kernel_and_rank(rows);
    std::mt19937 rng2(seed + 1);
    for (int t = 0; t < count && !kres.kernel.empty(); ++t) {
        Twisted x;
        for (const auto& v : kres.kernel) {
            Rational c = random_coeff(rng2);
            for (std::size_t s = 0; s < klist.size(); ++s)
                if (!v[s].is_zero())
                    x += (c * v[s]) * Twisted::basis(klist[s]);
        }
        if (!x.is_zero())
            out.push_back(std::move(x));
    }
    return out;
}

}  // namespace cyclochar
