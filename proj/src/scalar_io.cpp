#include "hopfforge/scalar_io.hpp"

#include <cctype>

namespace hopfforge {

namespace {

// ---------------------------------------------------------------------------
// recursive descent parser; one cursor class shared by both entry points,
// with t-factors and the quotient form enabled only in family mode
// ---------------------------------------------------------------------------

class Cursor {
public:
    Cursor(const std::string& text, unsigned m, bool allow_t)
        : s_(text), m_(m), allow_t_(allow_t) {}

    RatFunc parse_value() {
        skip_ws();
        RatFunc v(m_);
        if (allow_t_ && peek() == '(') {
            get();
            RatFunc num = parse_poly(')');
            expect(')');
            skip_ws();
            expect('/');
            skip_ws();
            expect('(');
            RatFunc den = parse_poly(')');
            expect(')');
            if (den.is_zero()) fail("zero denominator polynomial");
            v = num / den;
        } else {
            v = parse_poly('\0');
        }
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    char get() { return pos_ < s_.size() ? s_[pos_++] : '\0'; }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        get();
    }

    RatFunc parse_poly(char stop) {
        RatFunc acc = RatFunc::zero(m_);
        skip_ws();
        bool neg = false;
        if (peek() == '+' || peek() == '-') neg = (get() == '-');
        while (true) {
            RatFunc term = parse_term();
            acc = neg ? acc - term : acc + term;
            skip_ws();
            char c = peek();
            if (c == '+' || c == '-') {
                neg = (get() == '-');
                continue;
            }
            if (c == stop || (stop == '\0' && c == '\0')) return acc;
            if (stop == ')' && c == '\0') fail("unterminated '('");
            return acc; // let the caller report trailing input
        }
    }

    RatFunc parse_term() {
        RatFunc v = parse_factor();
        while (true) {
            skip_ws();
            if (peek() != '*') return v;
            get();
            v = v * parse_factor();
        }
    }

    RatFunc parse_factor() {
        skip_ws();
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) return parse_rational();
        if (c == 'z') {
            get();
            unsigned long k = parse_exponent();
            return RatFunc::from_scalar(CycScalar::zeta_pow(m_, k));
        }
        if (c == 't') {
            if (!allow_t_) fail("'t' is not allowed in a plain scalar");
            get();
            unsigned long k = parse_exponent();
            TPoly p = TPoly::monomial(CycScalar::one(m_), CycScalar::one(m_),
                                      static_cast<std::size_t>(k));
            return RatFunc::from_poly(p);
        }
        fail("expected a rational, 'z' or 't'");
    }

    unsigned long parse_exponent() {
        skip_ws();
        if (peek() != '^') return 1;
        get();
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an exponent");
        return parse_uint();
    }

    RatFunc parse_rational() {
        Integer num(parse_digits());
        skip_ws();
        if (peek() == '/') {
            // only a denominator if a digit follows; "(1+t)/(2)" handles '/'
            // at the quotient level instead
            std::size_t save = pos_;
            get();
            skip_ws();
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                Integer den(parse_digits());
                if (sgn(den) == 0) fail("zero denominator");
                return RatFunc::from_scalar(
                    CycScalar::from_rational(m_, make_rational(num, den)));
            }
            pos_ = save;
        }
        return RatFunc::from_scalar(CycScalar::from_rational(m_, Rational(num)));
    }

    unsigned long parse_uint() {
        std::string d = parse_digits();
        try {
            return std::stoul(d);
        } catch (const std::exception&) {
            fail("exponent out of range");
        }
    }

    std::string parse_digits() {
        skip_ws();
        std::string d;
        while (std::isdigit(static_cast<unsigned char>(peek()))) d.push_back(get());
        if (d.empty()) fail("expected digits");
        return d;
    }

    const std::string& s_;
    std::size_t pos_ = 0;
    unsigned m_;
    bool allow_t_;
};

// ---------------------------------------------------------------------------
// serialization
// ---------------------------------------------------------------------------

// one flat term c * z^zp * t^tp, c != 0
void append_term(std::string& out, const Rational& c, unsigned zp, unsigned tp) {
    const bool neg = sgn(c) < 0;
    Rational mag = neg ? Rational(-c) : c;
    if (out.empty()) {
        if (neg) out += '-';
    } else {
        out += neg ? " - " : " + ";
    }
    std::string body;
    if (zp > 0) body = zp == 1 ? "z" : "z^" + std::to_string(zp);
    if (tp > 0) {
        if (!body.empty()) body += '*';
        body += tp == 1 ? "t" : "t^" + std::to_string(tp);
    }
    if (body.empty()) {
        out += to_string(mag);
    } else if (mag == 1) {
        out += body;
    } else {
        out += to_string(mag) + "*" + body;
    }
}

void append_scalar_terms(std::string& out, const CycScalar& s, unsigned tp) {
    for (unsigned j = s.ncoeffs(); j-- > 0;) {
        const Rational& c = s.coeff(j);
        if (sgn(c) != 0) append_term(out, c, j, tp);
    }
}

} // namespace

CycScalar parse_scalar(const std::string& text, unsigned m) {
    RatFunc v = Cursor(text, m, false).parse_value();
    // t was rejected, so the value is a constant
    return v.numerator().coeff(0);
}

RatFunc parse_ratfunc(const std::string& text, unsigned m) {
    return Cursor(text, m, true).parse_value();
}

std::string to_string(const CycScalar& s) {
    std::string out;
    append_scalar_terms(out, s, 0);
    return out.empty() ? "0" : out;
}

std::string to_string(const TPoly& p) {
    std::string out;
    for (std::size_t k = p.coeffs().size(); k-- > 0;) {
        CycScalar c = p.coeff(k);
        if (!c.is_zero()) append_scalar_terms(out, c, static_cast<unsigned>(k));
    }
    return out.empty() ? "0" : out;
}

std::string to_string(const RatFunc& r) {
    const TPoly& den = r.denominator();
    if (den.degree() == 0 && den.leading().is_one()) return to_string(r.numerator());
    return "(" + to_string(r.numerator()) + ")/(" + to_string(den) + ")";
}

} // namespace hopfforge
