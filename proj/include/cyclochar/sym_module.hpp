#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "hopf.hpp"
#include "lie.hpp"

namespace cyclochar {

/*
 * V = S(gl_n*)_[2n] as a SAYD module over K = U(gl_n): right coadjoint
 * action and the exponentiated Koszul coaction
 *
 *   nabla(v) = sum_k (1/k!) Y_{a1} ... Y_{ak} (x) v R^{a1} ... R^{ak}
 *
 * summed over all index sequences, truncated above polynomial degree n.
 * Basis indices of V are flat gl-indices (gl_flat); R^a is the dual of Y_a.
 */

using KCoactionKey = std::pair<PBWMonomial, SymMonomial>;
using KCoaction = FreeVector<KCoactionKey>;

class SymModule {
  public:
    explicit SymModule(int n) : n_(n), g_(make_gl(n)), trunc_(static_cast<std::size_t>(n)) {
        basis_ = sym_basis(g_.dim, trunc_);
        const Hopf& H = hopf(n_);
        for (std::size_t b = 0; b < basis_.size(); ++b) {
            // exponentiated Koszul coaction
            KCoaction total;
            FreeVector<std::pair<PBWMonomial, SymMonomial>> layer;
            layer.add({PBWMonomial{}, basis_[b]}, 1);
            total += layer;
            Rational factorial(1);
            for (std::size_t k = 1; k <= trunc_; ++k) {
                FreeVector<std::pair<PBWMonomial, SymMonomial>> next;
                for (const auto& [key, c] : layer.terms()) {
                    if (key.second.size() + 1 > trunc_)
                        continue;
                    for (int a = 0; a < g_.dim; ++a) {
                        auto [i, j] = gl_unflat(n_, a);
                        GenWord w = key.first;
                        w.push_back(Ygen(i, j));
                        HnElement prod = H.normal_form(w);
                        SymMonomial m2 = sym_mul_key(key.second, SymMonomial{a});
                        for (const auto& [pm, pc] : prod.terms())
                            next.add({pm, m2}, c * pc);
                    }
                }
                layer = std::move(next);
                factorial *= Rational(static_cast<long long>(k));
                FreeVector<std::pair<PBWMonomial, SymMonomial>> scaled = layer;
                scaled *= Rational(1) / factorial;
                total += scaled;
            }
            coact_.push_back(std::move(total));
        }
    }

    int n() const { return n_; }
    std::size_t trunc() const { return trunc_; }
    const LieAlgebraData& gl() const { return g_; }
    const std::vector<SymMonomial>& basis() const { return basis_; }

    std::size_t index(const SymMonomial& m) const {
        auto it = std::lower_bound(basis_.begin(), basis_.end(), m);
        if (it == basis_.end() || *it != m)
            throw std::invalid_argument("monomial outside the truncated basis");
        return static_cast<std::size_t>(it - basis_.begin());
    }

    // right action of one Y generator
    TruncatedSymElement act_gen(const SymMonomial& m, const HnGenerator& gen) const {
        if (gen.kind != GenKind::Y)
            throw std::invalid_argument("V is a module over U(gl_n) only");
        return coadjoint_action(g_, TruncatedSymElement::basis(m), gl_flat(n_, {gen.a, gen.b}));
    }

    // right action of a PBW word of Y's: m . (g1 g2 ...) = ((m . g1) . g2) ...
    TruncatedSymElement act(const SymMonomial& m, const PBWMonomial& word) const {
        TruncatedSymElement acc = TruncatedSymElement::basis(m);
        for (const auto& gen : word) {
            TruncatedSymElement next;
            for (const auto& [vm, vc] : acc.terms()) {
                TruncatedSymElement step = act_gen(vm, gen);
                step *= vc;
                next += step;
            }
            acc = std::move(next);
        }
        return acc;
    }

    const KCoaction& coaction(const SymMonomial& m) const { return coact_[index(m)]; }

  private:
    int n_;
    LieAlgebraData g_;
    std::size_t trunc_;
    std::vector<SymMonomial> basis_;
    std::vector<KCoaction> coact_;
};

inline const SymModule& sym_module(int n) {
    thread_local std::map<int, SymModule> instances;
    auto it = instances.find(n);
    if (it == instances.end())
        it = instances.emplace(n, SymModule(n)).first;
    return it->second;
}

}  // namespace cyclochar
