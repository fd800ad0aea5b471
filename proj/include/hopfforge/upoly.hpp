#ifndef HOPFFORGE_UPOLY_HPP
#define HOPFFORGE_UPOLY_HPP

#include <stdexcept>
#include <utility>
#include <vector>

namespace hopfforge {

// ===========================================================================
// UPoly<F>: dense univariate polynomial over a field F.
//
// Coefficients are stored in ascending order of the exponent and the vector
// is kept normalized (no trailing zero coefficients; the zero polynomial has
// an empty vector).  Because some coefficient fields carry runtime data (a
// cyclotomic scalar knows its conductor), every polynomial stores a copy of
// the field's multiplicative unit and uses it to synthesize constants.
//
// F must provide: + - * / (field ops), unary -, operator==, and a free
// function is_zero(const F&).
// ===========================================================================

template <class F>
class UPoly {
public:
    explicit UPoly(F one) : one_(std::move(one)) {}
    UPoly(F one, std::vector<F> coeffs) : one_(std::move(one)), c_(std::move(coeffs)) {
        normalize();
    }

    static UPoly zero(const F& one) { return UPoly(one); }
    static UPoly constant(const F& one, const F& value) {
        UPoly p(one);
        if (!is_zero(value)) p.c_.push_back(value);
        return p;
    }
    // the monomial c * x^k
    static UPoly monomial(const F& one, const F& c, std::size_t k) {
        UPoly p(one);
        if (is_zero(c)) return p;
        p.c_.assign(k, one - one);
        p.c_.push_back(c);
        return p;
    }
    static UPoly variable(const F& one) { return monomial(one, one, 1); }

    const F& field_one() const { return one_; }
    F field_zero() const { return one_ - one_; }

    // degree of the zero polynomial is -1
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero_poly() const { return c_.empty(); }

    // order at 0: smallest exponent with nonzero coefficient, -1 for zero
    long ord() const {
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!is_zero(c_[i])) return static_cast<long>(i);
        return -1;
    }

    F coeff(std::size_t k) const { return k < c_.size() ? c_[k] : field_zero(); }
    const std::vector<F>& coeffs() const { return c_; }

    const F& leading() const {
        if (c_.empty()) throw std::logic_error("UPoly::leading on zero polynomial");
        return c_.back();
    }

    UPoly operator-() const {
        UPoly r(one_);
        r.c_.reserve(c_.size());
        for (const F& v : c_) r.c_.push_back(-v);
        return r;
    }

    UPoly& operator+=(const UPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), field_zero());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        normalize();
        return *this;
    }
    UPoly& operator-=(const UPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), field_zero());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        normalize();
        return *this;
    }

    friend UPoly operator+(UPoly a, const UPoly& b) { a += b; return a; }
    friend UPoly operator-(UPoly a, const UPoly& b) { a -= b; return a; }

    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        UPoly r(a.one_);
        if (a.c_.empty() || b.c_.empty()) return r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, a.field_zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                if (is_zero(b.c_[j])) continue;
                r.c_[i + j] += a.c_[i] * b.c_[j];
            }
        }
        r.normalize();
        return r;
    }
    UPoly& operator*=(const UPoly& o) { *this = *this * o; return *this; }

    UPoly& scale(const F& s) {
        if (is_zero(s)) { c_.clear(); return *this; }
        for (F& v : c_) v = v * s;
        return *this;
    }
    friend UPoly operator*(const F& s, UPoly p) { p.scale(s); return p; }

    // multiply by x^k
    UPoly shifted(std::size_t k) const {
        if (c_.empty()) return *this;
        UPoly r(one_);
        r.c_.assign(k, field_zero());
        r.c_.insert(r.c_.end(), c_.begin(), c_.end());
        return r;
    }

    bool operator==(const UPoly& o) const { return c_ == o.c_; }
    bool operator!=(const UPoly& o) const { return !(*this == o); }

    F eval(const F& x) const {
        F acc = field_zero();
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    UPoly derivative() const {
        UPoly r(one_);
        if (c_.size() < 2) return r;
        r.c_.reserve(c_.size() - 1);
        F k = one_;
        for (std::size_t i = 1; i < c_.size(); ++i) {
            r.c_.push_back(k * c_[i]);
            k += one_;
        }
        r.normalize();
        return r;
    }

    // Euclidean division: *this = q * d + r with deg r < deg d.
    std::pair<UPoly, UPoly> divmod(const UPoly& d) const {
        if (d.c_.empty()) throw std::invalid_argument("UPoly::divmod: division by zero");
        UPoly q(one_), r = *this;
        if (r.c_.size() < d.c_.size()) return {q, r};
        q.c_.assign(r.c_.size() - d.c_.size() + 1, field_zero());
        const F dl = d.leading();
        for (std::size_t k = r.c_.size(); k >= d.c_.size(); --k) {
            std::size_t top = k - 1;
            if (top >= r.c_.size() || is_zero(r.c_[top])) continue;
            F f = r.c_[top] / dl;
            std::size_t off = top - (d.c_.size() - 1);
            q.c_[off] = f;
            for (std::size_t i = 0; i < d.c_.size(); ++i)
                r.c_[off + i] -= f * d.c_[i];
        }
        q.normalize();
        r.normalize();
        return {q, r};
    }

    friend UPoly operator/(const UPoly& a, const UPoly& b) {
        auto [q, r] = a.divmod(b);
        if (!r.is_zero_poly())
            throw std::invalid_argument("UPoly::operator/: inexact division");
        return q;
    }

    UPoly monic() const {
        if (c_.empty()) return *this;
        UPoly r = *this;
        const F inv = one_ / c_.back();
        r.scale(inv);
        return r;
    }

    // monic gcd
    friend UPoly gcd(UPoly a, UPoly b) {
        while (!b.is_zero_poly()) {
            UPoly r = a.divmod(b).second;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

private:
    void normalize() {
        while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
    }

    F one_;
    std::vector<F> c_;
};

} // namespace hopfforge

#endif
