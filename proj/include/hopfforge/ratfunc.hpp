#ifndef HOPFFORGE_RATFUNC_HPP
#define HOPFFORGE_RATFUNC_HPP

#include <stdexcept>
#include <utility>

#include "hopfforge/cyclotomic.hpp"
#include "hopfforge/upoly.hpp"

namespace hopfforge {

// polynomials in the deformation parameter t with cyclotomic coefficients
using TPoly = UPoly<CycScalar>;

inline TPoly tpoly_zero(unsigned m) { return TPoly::zero(CycScalar::one(m)); }
inline TPoly tpoly_constant(const CycScalar& c) {
    return TPoly::constant(CycScalar::one(c.conductor()), c);
}
inline TPoly tpoly_t(unsigned m) { return TPoly::variable(CycScalar::one(m)); }

// result of evaluating lim_{t -> 0}; a pole is a verdict, not an error
struct LimitAtZero {
    bool is_pole = false;
    long valuation = 0; // ord_0(num) - ord_0(den); negative exactly on poles
    CycScalar value;    // meaningful when !is_pole
};

// ===========================================================================
// RatFunc: rational function in t over Q(zeta_m), kept canonical:
// gcd(num, den) = 1 and den monic.  Conductor is fixed per value, mixing
// conductors throws (same policy as CycScalar).
// ===========================================================================

class RatFunc {
public:
    RatFunc() : RatFunc(1) {}
    explicit RatFunc(unsigned m)
        : num_(tpoly_zero(m)),
          den_(TPoly::constant(CycScalar::one(m), CycScalar::one(m))) {}

    RatFunc(TPoly num, TPoly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero_poly())
            throw std::invalid_argument("RatFunc: zero denominator");
        canonicalize();
    }

    static RatFunc zero(unsigned m) { return RatFunc(m); }
    static RatFunc one(unsigned m) { return from_scalar(CycScalar::one(m)); }
    static RatFunc from_scalar(const CycScalar& c) {
        RatFunc r(c.conductor());
        r.num_ = tpoly_constant(c);
        return r;
    }
    static RatFunc from_poly(TPoly p) {
        unsigned m = p.field_one().conductor();
        RatFunc r(m);
        r.num_ = std::move(p);
        return r;
    }
    static RatFunc t(unsigned m) { return from_poly(tpoly_t(m)); }

    unsigned conductor() const { return num_.field_one().conductor(); }
    const TPoly& numerator() const { return num_; }
    const TPoly& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero_poly(); }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero() || b.is_zero()) return zero(a.conductor());
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw std::invalid_argument("RatFunc: division by zero");
        if (a.is_zero()) return zero(a.conductor());
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }

    RatFunc& operator+=(const RatFunc& o) { *this = *this + o; return *this; }
    RatFunc& operator-=(const RatFunc& o) { *this = *this - o; return *this; }
    RatFunc& operator*=(const RatFunc& o) { *this = *this * o; return *this; }

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    LimitAtZero limit_at_zero() const {
        LimitAtZero lim;
        lim.value = CycScalar::zero(conductor());
        if (num_.is_zero_poly()) return lim;
        const long a = num_.ord(), b = den_.ord();
        lim.valuation = a - b;
        if (lim.valuation < 0) {
            lim.is_pole = true;
        } else if (lim.valuation == 0) {
            lim.value = num_.coeff(static_cast<std::size_t>(a)) /
                        den_.coeff(static_cast<std::size_t>(b));
        }
        return lim;
    }

    // specialize t = c; throws when c is a root of the denominator
    CycScalar eval(const CycScalar& c) const {
        CycScalar d = den_.eval(c);
        if (d.is_zero())
            throw std::invalid_argument("RatFunc::eval: denominator vanishes");
        return num_.eval(c) / d;
    }

private:
    void canonicalize() {
        if (num_.is_zero_poly()) {
            den_ = TPoly::constant(num_.field_one(), num_.field_one());
            return;
        }
        TPoly g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
        CycScalar lead = den_.leading();
        if (!lead.is_one()) {
            CycScalar inv = lead.inverse();
            num_.scale(inv);
            den_.scale(inv);
        }
    }

    TPoly num_, den_;
};

inline bool is_zero(const RatFunc& r) { return r.is_zero(); }

// exemplar helpers used by scalar-generic code (matrices, tensors, verify)
inline CycScalar zero_like(const CycScalar& s) { return CycScalar::zero(s.conductor()); }
inline CycScalar one_like(const CycScalar& s) { return CycScalar::one(s.conductor()); }
inline RatFunc zero_like(const RatFunc& s) { return RatFunc::zero(s.conductor()); }
inline RatFunc one_like(const RatFunc& s) { return RatFunc::one(s.conductor()); }
inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }

inline void add_mul(RatFunc& acc, const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return;
    acc += a * b;
}
inline void sub_mul(RatFunc& acc, const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return;
    acc -= a * b;
}
inline void add_mul(Rational& acc, const Rational& a, const Rational& b) {
    acc += a * b;
}
inline void sub_mul(Rational& acc, const Rational& a, const Rational& b) {
    acc -= a * b;
}

} // namespace hopfforge

#endif
