#include "hopfforge/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "hopfforge/upoly.hpp"

namespace hopfforge {

namespace {

using QPoly = UPoly<Rational>;

QPoly qpoly(std::vector<Rational> c) { return QPoly(Rational(1), std::move(c)); }

QPoly x_pow_minus_one(unsigned m) {
    std::vector<Rational> c(m + 1, Rational(0));
    c[0] = -1;
    c[m] = 1;
    return qpoly(std::move(c));
}

} // namespace

std::vector<Rational> cyclotomic_polynomial(unsigned m) {
    if (m == 0) throw std::invalid_argument("cyclotomic_polynomial: m must be positive");
    static std::mutex mu;
    static std::map<unsigned, std::vector<Rational>> cache;
    std::lock_guard<std::mutex> lock(mu);

    // iterative over divisors so the cache fills bottom-up
    for (unsigned k = 1; k <= m; ++k) {
        if (m % k != 0 || cache.count(k)) continue;
        QPoly num = x_pow_minus_one(k);
        for (unsigned d = 1; d < k; ++d)
            if (k % d == 0) num = num / qpoly(cache.at(d));
        cache[k] = num.coeffs();
    }
    return cache.at(m);
}

unsigned euler_phi(unsigned m) {
    return static_cast<unsigned>(cyclotomic_polynomial(m).size() - 1);
}

CycField::CycField(unsigned m) : m_(m), phim_(cyclotomic_polynomial(m)) {
    phi_ = static_cast<unsigned>(phim_.size() - 1);
    // x^k mod Phi_m for every power multiplication or parsing can produce:
    // convolution of two reduced values reaches 2*phi-2, exponent reduction
    // of z^k in the grammar reaches m-1
    unsigned top = std::max(m_ >= 1 ? m_ - 1 : 0u, phi_ >= 1 ? 2 * phi_ - 2 : 0u);
    pow_.reserve(top + 1);
    QPoly phim = qpoly(phim_);
    std::vector<Rational> cur(phi_, Rational(0));
    if (phi_ > 0) cur[0] = 1; // x^0
    for (unsigned k = 0; k <= top; ++k) {
        pow_.push_back(cur);
        // multiply by x, reduce
        std::vector<Rational> nxt(phi_ + 1, Rational(0));
        for (unsigned i = 0; i < phi_; ++i) nxt[i + 1] = cur[i];
        QPoly rem = qpoly(std::move(nxt)).divmod(phim).second;
        cur.assign(phi_, Rational(0));
        for (unsigned i = 0; i < phi_; ++i) cur[i] = rem.coeff(i);
    }
}

const CycField& cyc_field(unsigned m) {
    static std::mutex mu;
    static std::map<unsigned, std::unique_ptr<CycField>> registry;
    std::lock_guard<std::mutex> lock(mu);
    auto it = registry.find(m);
    if (it == registry.end())
        it = registry.emplace(m, std::make_unique<CycField>(m)).first;
    return *it->second;
}

// ---------------------------------------------------------------------------
// CycScalar
// ---------------------------------------------------------------------------

void CycScalar::check_same(const CycScalar& a, const CycScalar& b) {
    if (a.F_ != b.F_)
        throw std::invalid_argument(
            "CycScalar: conductor mismatch (" + std::to_string(a.conductor()) +
            " vs " + std::to_string(b.conductor()) + ")");
}

CycScalar CycScalar::zeta_pow(unsigned m, unsigned long k) {
    CycScalar s(m);
    const CycField& F = s.field();
    const auto& row = F.power(static_cast<unsigned>(k % m));
    for (unsigned i = 0; i < F.degree(); ++i) s.c_[i] = row[i];
    return s;
}

bool CycScalar::is_one() const {
    if (sgn(c_[0] - 1) != 0) return false;
    for (unsigned i = 1; i < c_.size(); ++i)
        if (sgn(c_[i]) != 0) return false;
    return true;
}

bool CycScalar::is_rational() const {
    for (unsigned i = 1; i < c_.size(); ++i)
        if (sgn(c_[i]) != 0) return false;
    return true;
}

CycScalar& CycScalar::operator+=(const CycScalar& o) {
    check_same(*this, o);
    for (unsigned i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

CycScalar& CycScalar::operator-=(const CycScalar& o) {
    check_same(*this, o);
    for (unsigned i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

CycScalar CycScalar::operator-() const {
    CycScalar r = *this;
    for (Rational& v : r.c_) v = -v;
    return r;
}

CycScalar operator*(const CycScalar& a, const CycScalar& b) {
    CycScalar::check_same(a, b);
    const CycField& F = a.field();
    const unsigned phi = F.degree();
    CycScalar r(F.conductor());
    if (phi == 1) { // plain rational arithmetic
        r.c_[0] = a.c_[0] * b.c_[0];
        return r;
    }
    boost::container::small_vector<Rational, 8> conv(2 * phi - 1, Rational(0));
    for (unsigned i = 0; i < phi; ++i) {
        if (sgn(a.c_[i]) == 0) continue;
        for (unsigned j = 0; j < phi; ++j) {
            if (sgn(b.c_[j]) == 0) continue;
            conv[i + j] += a.c_[i] * b.c_[j];
        }
    }
    for (unsigned k = 0; k < phi; ++k) r.c_[k] = conv[k];
    for (unsigned k = phi; k < conv.size(); ++k) {
        if (sgn(conv[k]) == 0) continue;
        const auto& row = F.power(k);
        for (unsigned i = 0; i < phi; ++i)
            if (sgn(row[i]) != 0) r.c_[i] += conv[k] * row[i];
    }
    return r;
}

CycScalar CycScalar::inverse() const {
    if (is_zero()) throw std::invalid_argument("CycScalar::inverse of zero");
    const unsigned phi = F_->degree();
    if (phi == 1) {
        CycScalar r(conductor());
        r.c_[0] = 1 / c_[0];
        return r;
    }
    // extended Euclid against Phi_m (irreducible over Q, so the gcd is 1)
    using QPoly = UPoly<Rational>;
    QPoly a(Rational(1), std::vector<Rational>(c_.begin(), c_.end()));
    QPoly b(Rational(1), F_->minimal_polynomial());
    QPoly u0 = QPoly::constant(Rational(1), Rational(1)); // coeff of a in r0
    QPoly u1 = QPoly::zero(Rational(1));                  // coeff of a in r1
    QPoly r0 = a, r1 = b;
    while (!r1.is_zero_poly()) {
        auto [q, rem] = r0.divmod(r1);
        QPoly u2 = u0 - q * u1;
        r0 = std::move(r1);
        r1 = std::move(rem);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    // r0 = gcd = u0*a + v*Phi, constant because Phi is irreducible
    if (r0.degree() != 0)
        throw std::logic_error("CycScalar::inverse: cyclotomic modulus not coprime");
    QPoly inv = u0;
    inv.scale(1 / r0.coeff(0));
    // inv has degree < phi already (ext. Euclid keeps u below deg Phi)
    CycScalar r(conductor());
    for (unsigned i = 0; i < phi; ++i) r.c_[i] = inv.coeff(i);
    return r;
}

CycScalar CycScalar::pow(unsigned long k) const {
    CycScalar acc = one(conductor());
    CycScalar base = *this;
    while (k > 0) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

bool CycScalar::operator==(const CycScalar& o) const {
    check_same(*this, o);
    for (unsigned i = 0; i < c_.size(); ++i)
        if (cmp(c_[i], o.c_[i]) != 0) return false;
    return true;
}

} // namespace hopfforge
