#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

#include "rational.hpp"

namespace cyclochar {

/*
 * Affine expression c0 + sum c_u * u over named unknowns.  Coefficients of
 * cochains stay affine under all complex operators (which are linear), so
 * constraint extraction is exact coefficient matching.  Products are only
 * defined when one factor is constant.
 */
class Affine {
  public:
    Affine() = default;
    Affine(Rational c) : c0_(std::move(c)) {}
    Affine(long long c) : c0_(c) {}
    Affine(int c) : c0_(c) {}

    static Affine unknown(const std::string& name, Rational coeff = Rational(1)) {
        Affine a;
        if (!cyclochar::is_zero(coeff))
            a.lin_[name] = std::move(coeff);
        return a;
    }

    bool is_constant() const { return lin_.empty(); }
    bool is_zero() const { return c0_.is_zero() && lin_.empty(); }
    const Rational& constant() const { return c0_; }
    const std::map<std::string, Rational>& linear() const { return lin_; }
    Rational coeff_of(const std::string& name) const {
        auto it = lin_.find(name);
        return it == lin_.end() ? Rational(0) : it->second;
    }

    Affine& operator+=(const Affine& o) {
        c0_ += o.c0_;
        for (const auto& [u, c] : o.lin_)
            bump(u, c);
        return *this;
    }
    Affine& operator-=(const Affine& o) {
        c0_ -= o.c0_;
        for (const auto& [u, c] : o.lin_)
            bump(u, -c);
        return *this;
    }
    Affine& operator*=(const Affine& o) {
        if (!o.is_constant() && !is_constant())
            throw std::domain_error("product of two non-constant affine expressions");
        if (o.is_constant()) {
            c0_ *= o.c0_;
            for (auto it = lin_.begin(); it != lin_.end();) {
                it->second *= o.c0_;
                it = it->second.is_zero() ? lin_.erase(it) : std::next(it);
            }
        } else {
            Rational s = c0_;
            *this = o;
            *this *= Affine(s);
        }
        return *this;
    }

    friend Affine operator+(Affine a, const Affine& b) { return a += b; }
    friend Affine operator-(Affine a, const Affine& b) { return a -= b; }
    friend Affine operator*(Affine a, const Affine& b) { return a *= b; }
    friend Affine operator-(const Affine& a) { return Affine(Rational(-1)) * a; }

    bool operator==(const Affine& o) const { return c0_ == o.c0_ && lin_ == o.lin_; }
    bool operator!=(const Affine& o) const { return !(*this == o); }

    // Replace unknowns by affine values (unlisted unknowns are kept).
    Affine substitute(const std::map<std::string, Affine>& values) const {
        Affine out(c0_);
        for (const auto& [u, c] : lin_) {
            auto it = values.find(u);
            if (it == values.end())
                out += unknown(u, c);
            else
                out += Affine(c) * it->second;
        }
        return out;
    }

    std::string str() const {
        std::ostringstream os;
        bool first = true;
        if (!c0_.is_zero()) {
            os << to_string(c0_);
            first = false;
        }
        for (const auto& [u, c] : lin_) {
            if (!first)
                os << (c > 0 ? " + " : " - ");
            else if (c < 0)
                os << '-';
            Rational a = abs(c);
            if (a != 1)
                os << to_string(a) << '*';
            os << u;
            first = false;
        }
        return first ? "0" : os.str();
    }

  private:
    void bump(const std::string& u, const Rational& c) {
        auto [it, inserted] = lin_.emplace(u, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                lin_.erase(it);
        }
    }

    Rational c0_{0};
    std::map<std::string, Rational> lin_;
};

inline bool is_zero(const Affine& a) { return a.is_zero(); }

}  // namespace cyclochar
