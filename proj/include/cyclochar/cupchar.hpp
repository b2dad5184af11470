#pragma once

#include <set>
#include <stdexcept>
#include <vector>

#include "cyclic.hpp"
#include "equivariant.hpp"

namespace cyclochar {

/*
 * Characteristic-map machinery.  Cochains on the groupoid action algebra are
 * never evaluated on functions: everything is represented through the
 * injective maps chi_tau / chi_tau^eq and manipulated by Hopf-side
 * operators.  An elementary m-cochain is the tensor h^1 (x) ... (x) h^m
 * standing for a_0 ... a_m |-> tau(a_0 h^1(a_1) ... h^m(a_m)).
 */

using Elementary = TensorElement;  // width m, legs PBW-normalized

inline Cochain elementary_as_cochain(const Elementary& x) {
    Cochain out;
    for (const auto& [w, c] : x.terms())
        out.add({SymMonomial{}, w}, c);
    return out;
}

inline Elementary cochain_as_elementary(const Cochain& x) {
    Elementary out;
    for (const auto& [k, c] : x.terms())
        out.add(k.legs, c);
    return out;
}

inline Elementary elementary_b(int n, const Elementary& x) {
    HopfCyclicComplex C = HopfCyclicComplex::over_cdelta(n);
    return cochain_as_elementary(C.hochschild_b(elementary_as_cochain(x)));
}

inline Elementary elementary_t(int n, const Elementary& x) {
    HopfCyclicComplex C = HopfCyclicComplex::over_cdelta(n);
    return cochain_as_elementary(C.cyclic_op(elementary_as_cochain(x)));
}

/* ---- raw trace expressions and integration by parts ---- */

// A formal tau(...) whose factors are operators applied to slots; the slots
// must form a cyclic rotation of 0..m (tau is a trace, so rotation is free).
struct RawTraceExpression {
    struct Atom {
        HnElement op;
        int slot;
    };
    std::vector<Atom> atoms;

    void append(HnElement op, int slot) { atoms.push_back({std::move(op), slot}); }

    // Expand to a tensor of width m+1 with the slots rotated so slot 0 leads.
    TensorElement to_tensor() const {
        const int m1 = static_cast<int>(atoms.size());
        std::size_t start = 0;
        while (start < atoms.size() && atoms[start].slot != 0)
            ++start;
        if (start == atoms.size() && m1 > 0)
            throw std::invalid_argument("trace expression without slot 0");
        for (int t = 0; t < m1; ++t)
            if (atoms[(start + t) % m1].slot != t)
                throw std::invalid_argument("slots are not a cyclic rotation of 0..m");
        TensorElement acc;
        acc.add(TensorWord{}, 1);
        for (int t = 0; t < m1; ++t) {
            const HnElement& op = atoms[(start + t) % m1].op;
            TensorElement next;
            for (const auto& [w, c] : acc.terms())
                for (const auto& [om, oc] : op.terms()) {
                    TensorWord w2 = w;
                    w2.push_back(om);
                    next.add(std::move(w2), c * oc);
                }
            acc = std::move(next);
        }
        return acc;
    }
};

// tau(h(a_0) ...) = tau(a_0 S_delta(h)(...)): eliminate the slot-0 operator,
// distributing S_delta over the remaining slots through the coproduct.
// `leftmost_first` fixes the elimination order; since S_delta is
// anti-multiplicative the result is order independent (checked in tests).
inline Elementary reduce_to_elementary(int n, const TensorElement& raw,
                                       bool leftmost_first = true) {
    const Hopf& H = hopf(n);
    Elementary out;
    std::vector<std::pair<TensorWord, Rational>> work(raw.terms().begin(), raw.terms().end());
    while (!work.empty()) {
        auto [w, c] = std::move(work.back());
        work.pop_back();
        if (w.empty())
            throw std::invalid_argument("reduce_to_elementary needs a slot-0 leg");
        if (w[0].empty()) {
            out.add(TensorWord(w.begin() + 1, w.end()), c);
            continue;
        }
        const std::size_t m = w.size() - 1;
        HnElement u;
        PBWMonomial rest;
        if (leftmost_first) {
            u = H.twisted_antipode(hn_gen(w[0].front()));
            rest.assign(w[0].begin() + 1, w[0].end());
        } else {
            u = H.twisted_antipode(HnElement::basis(w[0]));
        }
        TensorElement tail;
        tail.add(TensorWord(w.begin() + 1, w.end()), 1);
        tail = H.diagonal_left_multiply(u, tail, 0, m);
        for (const auto& [tw, tc] : tail.terms()) {
            TensorWord w2;
            w2.push_back(rest);
            w2.insert(w2.end(), tw.begin(), tw.end());
            work.emplace_back(std::move(w2), c * tc);
        }
    }
    return out;
}

inline Elementary reduce_to_elementary(int n, const RawTraceExpression& e,
                                       bool leftmost_first = true) {
    return reduce_to_elementary(n, e.to_tensor(), leftmost_first);
}

/* ---- the standard (x)_K form of C_K(K, V) and its plain cofaces ---- */

struct StdKey {
    SymMonomial m;
    TensorWord slots;  // p+1 slots, slot 0 first

    friend auto operator<=>(const StdKey& a, const StdKey& b) {
        return std::tie(a.m, a.slots) <=> std::tie(b.m, b.slots);
    }
    friend bool operator==(const StdKey&, const StdKey&) = default;
};
using StdForm = FreeVector<StdKey>;

inline StdForm to_standard_form(const Cochain& x) {
    StdForm out;
    for (const auto& [k, c] : x.terms()) {
        TensorWord slots;
        slots.push_back({});
        slots.insert(slots.end(), k.legs.begin(), k.legs.end());
        out.add({k.m, std::move(slots)}, c);
    }
    return out;
}

// Coface of the standard form.  Only the plain faces 0..deg arise inside the
// shuffle cup product: a shuffle value sigma(p+j) is at most p+j, so the face
// index never reaches the twisted one.
inline StdForm std_coface(int n, int i, const StdForm& x) {
    const Hopf& H = hopf(n);
    StdForm out;
    for (const auto& [k, c] : x.terms()) {
        const int deg = static_cast<int>(k.slots.size()) - 1;
        if (i < 0 || i > deg)
            throw std::out_of_range("std_coface: only the plain faces are defined here");
        TensorElement split = H.coproduct_monomial(k.slots[i]);
        for (const auto& [pw, pc] : split.terms()) {
            StdKey k2 = k;
            k2.slots[i] = pw[0];
            k2.slots.insert(k2.slots.begin() + i + 1, pw[1]);
            out.add(std::move(k2), c * pc);
        }
    }
    return out;
}

/* ---- the shuffle cup product ---- */

// x in C^p(K, V) (reduced form, Y-legs), phi an invariant twisted cochain of
// degree q standing for chi_tau^eq(phi) in C^q_K(A, V); the result is the
// elementary (p+q)-cochain chi_phi(x).
inline Elementary shuffle_cup(int n, const Cochain& x, const Twisted& phi) {
    const Hopf& H = hopf(n);
    const EquivariantModel& M = equivariant_model(n);
    {
        auto rep = M.invariance_check(phi);
        if (!rep.pass)
            throw std::invalid_argument("shuffle_cup: cocycle data is not invariant");
    }
    if (x.is_zero() || phi.is_zero())
        return {};
    const int q = M.degree(phi);
    HopfCyclicComplex CK = HopfCyclicComplex::over_sym(n);
    const int p = CK.degree(x);
    const int total = p + q;

    // enumerate the shuffles as the p-subsets A of {1..p+q} whose faces act
    // on the phi side; the complement B acts on x
    std::vector<std::vector<int>> subsets;
    {
        std::vector<int> choose(p);
        for (int t = 0; t < p; ++t)
            choose[t] = t + 1;
        while (true) {
            subsets.push_back(choose);
            int t = p - 1;
            while (t >= 0 && choose[t] == total - (p - 1 - t))
                --t;
            if (t < 0)
                break;
            ++choose[t];
            for (int s = t + 1; s < p; ++s)
                choose[s] = choose[s - 1] + 1;
        }
        if (p == 0)
            subsets = {{}};
    }

    TensorElement accumulated;  // width total+1, slot 0 included
    StdForm x_std = to_standard_form(x);
    for (const auto& A : subsets) {
        std::vector<int> B;
        {
            std::set<int> a_set(A.begin(), A.end());
            for (int v = 1; v <= total; ++v)
                if (!a_set.count(v))
                    B.push_back(v);
        }
        // sign: parity of the crossings (a in A, b in B) with b > a, times a
        // global (-1)^{p(q-1)}; calibrated against the four displayed cup
        // values at (p,q) = (0,1), (1,1), (0,2), (1,2)
        int crossings = p * (q - 1);
        for (int a : A)
            for (int b : B)
                if (b > a)
                    ++crossings;
        Rational sign(crossings % 2 == 0 ? 1 : -1);

        StdForm y = x_std;
        for (int b : B)
            y = std_coface(n, b - 1, y);

        // merge plan for the phi side, applied in descending face order; the
        // argument blocks stay contiguous, so only ranges are tracked
        std::vector<std::pair<int, int>> ranges;
        for (int s = 0; s <= total; ++s)
            ranges.push_back({s, s + 1});
        std::vector<int> plan(A.rbegin(), A.rend());
        for (int f_value : plan) {
            int f = f_value - 1;
            if (f < 0 || f + 1 >= static_cast<int>(ranges.size()))
                throw std::logic_error("shuffle merge out of range");
            ranges[f].second = ranges[f + 1].second;
            ranges.erase(ranges.begin() + f + 1);
        }
        if (static_cast<int>(ranges.size()) != q + 1)
            throw std::logic_error("shuffle merge arity mismatch");

        for (const auto& [yk, yc] : y.terms()) {
            for (const auto& [pk, pc] : phi.terms()) {
                if (pk.dual != yk.m)
                    continue;
                TensorElement state;
                state.add(yk.slots, yc * pc * sign);
                for (int j = 1; j <= q && !state.is_zero(); ++j)
                    state = H.diagonal_left_multiply(HnElement::basis(pk.legs[j - 1]), state,
                                                     ranges[j].first, ranges[j].second);
                accumulated += state;
            }
        }
    }
    return reduce_to_elementary(n, accumulated);
}

}  // namespace cyclochar
