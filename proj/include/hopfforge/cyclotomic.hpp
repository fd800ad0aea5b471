#ifndef HOPFFORGE_CYCLOTOMIC_HPP
#define HOPFFORGE_CYCLOTOMIC_HPP

#include <boost/container/small_vector.hpp>
#include <cstdint>
#include <string>
#include <vector>

#include "hopfforge/rational.hpp"

namespace hopfforge {

// m-th cyclotomic polynomial, ascending coefficients (length phi(m)+1, monic).
// Computed as (x^m - 1) / prod_{d | m, d < m} Phi_d by exact long division.
std::vector<Rational> cyclotomic_polynomial(unsigned m);

unsigned euler_phi(unsigned m);

// ===========================================================================
// CycField: per-conductor context shared by all scalars of conductor m.
// Holds Phi_m and a reduction table x^k mod Phi_m so scalar multiplication
// never runs polynomial division.
// ===========================================================================

class CycField {
public:
    explicit CycField(unsigned m);

    unsigned conductor() const { return m_; }
    unsigned degree() const { return phi_; }
    const std::vector<Rational>& minimal_polynomial() const { return phim_; }

    // row k = coefficients of x^k mod Phi_m, 0 <= k <= max_power()
    const std::vector<Rational>& power(unsigned k) const { return pow_[k]; }
    unsigned max_power() const { return static_cast<unsigned>(pow_.size() - 1); }

private:
    unsigned m_, phi_;
    std::vector<Rational> phim_;
    std::vector<std::vector<Rational>> pow_;
};

// registry; references stay valid for the lifetime of the process
const CycField& cyc_field(unsigned m);

// ===========================================================================
// CycScalar: an element of Q(zeta_m), stored as a polynomial in zeta of
// degree < phi(m) on the power basis 1, zeta, ..., zeta^(phi-1).
//
// Every value belongs to one fixed conductor; mixing conductors in any
// binary operation throws (no automatic embedding).
// ===========================================================================

class CycScalar {
public:
    // default: 0 in Q (conductor 1); containers need this, arithmetic code
    // should always construct with an explicit conductor
    CycScalar() : CycScalar(1) {}

    explicit CycScalar(unsigned m) : F_(&cyc_field(m)), c_(F_->degree(), Rational(0)) {}

    static CycScalar zero(unsigned m) { return CycScalar(m); }
    static CycScalar one(unsigned m) { return from_rational(m, Rational(1)); }
    static CycScalar from_rational(unsigned m, const Rational& q) {
        CycScalar s(m);
        s.c_[0] = q;
        return s;
    }
    static CycScalar from_int(unsigned m, long v) { return from_rational(m, Rational(v)); }
    // zeta_m^k
    static CycScalar zeta_pow(unsigned m, unsigned long k);
    static CycScalar zeta(unsigned m) { return zeta_pow(m, 1); }

    unsigned conductor() const { return F_->conductor(); }
    const CycField& field() const { return *F_; }

    // coefficient of zeta^i
    const Rational& coeff(unsigned i) const { return c_[i]; }
    unsigned ncoeffs() const { return static_cast<unsigned>(c_.size()); }

    bool is_zero() const {
        for (const Rational& v : c_)
            if (sgn(v) != 0) return false;
        return true;
    }
    bool is_one() const;
    // true when the value lies in Q (all zeta coefficients above 1 vanish)
    bool is_rational() const;
    const Rational& rational_part() const { return c_[0]; }

    CycScalar& operator+=(const CycScalar& o);
    CycScalar& operator-=(const CycScalar& o);
    CycScalar& operator*=(const CycScalar& o) { *this = *this * o; return *this; }
    CycScalar operator-() const;

    friend CycScalar operator+(CycScalar a, const CycScalar& b) { a += b; return a; }
    friend CycScalar operator-(CycScalar a, const CycScalar& b) { a -= b; return a; }
    friend CycScalar operator*(const CycScalar& a, const CycScalar& b);
    friend CycScalar operator/(const CycScalar& a, const CycScalar& b) {
        return a * b.inverse();
    }

    CycScalar inverse() const;
    CycScalar pow(unsigned long k) const;

    CycScalar& scale(const Rational& q) {
        for (Rational& v : c_) v *= q;
        return *this;
    }

    bool operator==(const CycScalar& o) const;
    bool operator!=(const CycScalar& o) const { return !(*this == o); }

    // acc += a * b, skipping work when either factor is zero
    friend void add_mul(CycScalar& acc, const CycScalar& a, const CycScalar& b) {
        if (a.is_zero() || b.is_zero()) return;
        acc += a * b;
    }
    friend void sub_mul(CycScalar& acc, const CycScalar& a, const CycScalar& b) {
        if (a.is_zero() || b.is_zero()) return;
        acc -= a * b;
    }

private:
    static void check_same(const CycScalar& a, const CycScalar& b);

    const CycField* F_;
    // phi(m) <= 4 for every conductor the suites use, so this never heap
    // allocates on the hot paths
    boost::container::small_vector<Rational, 4> c_;
};

inline bool is_zero(const CycScalar& s) { return s.is_zero(); }

} // namespace hopfforge

#endif
