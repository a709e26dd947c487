#include "magiclim/scalar.hpp"

#include <algorithm>
#include <stdexcept>

namespace magiclim {

mpq_class parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    mpq_class q;
    if (q.set_str(text, 10) != 0)
        throw std::invalid_argument("bad rational literal '" + text + "'");
    if (sgn(q.get_den()) == 0)
        throw std::invalid_argument("zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

Scalar Scalar::rational(const std::string& text) { return Scalar(parse_rational(text)); }

Scalar Scalar::decimal(double value, double tolerance) {
    Scalar s;
    s.re = mpq_class(value);  // exact binary expansion of the double
    s.im = 0;
    s.mode = NumMode::Float;
    s.tol = tolerance;
    return s;
}

bool Scalar::is_zero() const {
    if (mode == NumMode::Exact) return exact_zero();
    mpq_class t(tol);
    return norm2() <= t * t;
}

Scalar Scalar::conj() const {
    Scalar s(*this);
    s.im = -im;
    return s;
}

Scalar Scalar::operator-() const {
    Scalar s(*this);
    s.re = -re;
    s.im = -im;
    return s;
}

void combine_mode(Scalar& dst, const Scalar& a, const Scalar& b) {
    if (a.mode == NumMode::Float || b.mode == NumMode::Float) {
        dst.mode = NumMode::Float;
        dst.tol = std::max(a.tol, b.tol);
    } else {
        dst.mode = NumMode::Exact;
        dst.tol = 0.0;
    }
}

Scalar& Scalar::operator+=(const Scalar& o) {
    re += o.re;
    im += o.im;
    combine_mode(*this, *this, o);
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    re -= o.re;
    im -= o.im;
    combine_mode(*this, *this, o);
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    mpq_class r = re * o.re - im * o.im;
    mpq_class i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    combine_mode(*this, *this, o);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    mpq_class n2 = o.norm2();
    if (sgn(n2) == 0) throw std::domain_error("division by zero scalar");
    mpq_class r = (re * o.re + im * o.im) / n2;
    mpq_class i = (im * o.re - re * o.im) / n2;
    re = std::move(r);
    im = std::move(i);
    combine_mode(*this, *this, o);
    return *this;
}

Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.mode == NumMode::Exact && b.mode == NumMode::Exact)
        return a.re == b.re && a.im == b.im;
    Scalar d = a - b;
    mpq_class t(std::max(a.tol, b.tol));
    return d.norm2() <= t * t;
}

bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

std::string Scalar::str() const {
    if (is_real()) return re.get_str();
    std::string s = re.get_str();
    if (sgn(im) >= 0) s += "+";
    s += im.get_str() + "*i";
    return s;
}

Scalar Scalar::with_mode(NumMode m, double tolerance) const {
    Scalar s(*this);
    s.mode = m;
    s.tol = (m == NumMode::Float) ? tolerance : 0.0;
    return s;
}

}  // namespace magiclim
