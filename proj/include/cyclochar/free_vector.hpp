#pragma once

#include <map>
#include <vector>

#include "rational.hpp"

namespace cyclochar {

/*
 * FreeVector<Key, Coeff>: a finite linear combination of basis keys with
 * exact coefficients.  Canonical form is an invariant: the term map is
 * ordered by the key's total order and never stores a zero coefficient,
 * so structural equality of the maps is equality of elements.
 */
template <class Key, class Coeff = Rational>
class FreeVector {
  public:
    using key_type = Key;
    using coeff_type = Coeff;
    using TermMap = std::map<Key, Coeff>;

    FreeVector() = default;

    static FreeVector basis(Key k, Coeff c = Coeff(1)) {
        FreeVector v;
        v.add(std::move(k), std::move(c));
        return v;
    }

    void add(const Key& k, const Coeff& c) {
        if (coeff_is_zero(c))
            return;
        auto [it, inserted] = terms_.emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (coeff_is_zero(it->second))
                terms_.erase(it);
        }
    }

    const TermMap& terms() const& { return terms_; }
    // calling terms() on a temporary yields an owning copy, so ranged-for
    // over `f(...).terms()` cannot dangle
    TermMap terms() && { return std::move(terms_); }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Coeff coeff(const Key& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? Coeff(0) : it->second;
    }

    FreeVector& operator+=(const FreeVector& o) {
        for (const auto& [k, c] : o.terms_)
            add(k, c);
        return *this;
    }
    FreeVector& operator-=(const FreeVector& o) {
        for (const auto& [k, c] : o.terms_)
            add(k, -c);
        return *this;
    }
    FreeVector& operator*=(const Coeff& c) {
        if (coeff_is_zero(c)) {
            terms_.clear();
            return *this;
        }
        for (auto& [k, v] : terms_)
            v *= c;
        return *this;
    }

    friend FreeVector operator+(FreeVector a, const FreeVector& b) { return a += b; }
    friend FreeVector operator-(FreeVector a, const FreeVector& b) { return a -= b; }
    friend FreeVector operator-(const FreeVector& a) {
        FreeVector r;
        for (const auto& [k, c] : a.terms_)
            r.terms_.emplace(k, -c);
        return r;
    }
    friend FreeVector operator*(const Coeff& c, FreeVector a) { return a *= c; }

    bool operator==(const FreeVector& o) const { return terms_ == o.terms_; }
    bool operator!=(const FreeVector& o) const { return !(*this == o); }

    // Expand every key through fn : Key -> FreeVector<Key2, Coeff>, linearly.
    template <class F>
    auto map_keys(F&& fn) const {
        using Out = decltype(fn(std::declval<const Key&>()));
        Out out;
        for (const auto& [k, c] : terms_) {
            Out piece = fn(k);
            piece *= c;
            out += piece;
        }
        return out;
    }

  private:
    template <class C>
    static bool coeff_is_zero(const C& c) {
        using cyclochar::is_zero;
        return is_zero(c);
    }

    TermMap terms_;
};

template <class Key, class Coeff>
bool is_zero(const FreeVector<Key, Coeff>& v) {
    return v.is_zero();
}

template <class Key, class Coeff>
FreeVector<Key, Coeff> linear_combine(const Coeff& a, const FreeVector<Key, Coeff>& x,
                                      const Coeff& b, const FreeVector<Key, Coeff>& y) {
    FreeVector<Key, Coeff> r;
    for (const auto& [k, c] : x.terms())
        r.add(k, a * c);
    for (const auto& [k, c] : y.terms())
        r.add(k, b * c);
    return r;
}

// Bilinear extension of a key-level product.
template <class K1, class K2, class C, class F>
auto bilinear_combine(const FreeVector<K1, C>& x, const FreeVector<K2, C>& y, F&& mergeKey) {
    using KOut = decltype(mergeKey(std::declval<const K1&>(), std::declval<const K2&>()));
    FreeVector<KOut, C> out;
    for (const auto& [kx, cx] : x.terms())
        for (const auto& [ky, cy] : y.terms())
            out.add(mergeKey(kx, ky), cx * cy);
    return out;
}

// Tensor product of word-keyed vectors: keys concatenate.
template <class T, class C>
FreeVector<std::vector<T>, C> tensor_product(const FreeVector<std::vector<T>, C>& x,
                                             const FreeVector<std::vector<T>, C>& y) {
    return bilinear_combine(x, y, [](const std::vector<T>& a, const std::vector<T>& b) {
        std::vector<T> w = a;
        w.insert(w.end(), b.begin(), b.end());
        return w;
    });
}

}  // namespace cyclochar
