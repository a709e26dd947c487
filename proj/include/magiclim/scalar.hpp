#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace magiclim {

/// Comparison mode attached to a scalar. Arithmetic is exact rational in
/// both modes (decimal inputs are converted to the exact rational value
/// they denote); the mode only changes what "equal" and "zero" mean:
/// exact scalars compare literally, float scalars compare up to the
/// stored tolerance. Combining a float scalar with anything yields a
/// float scalar with the larger tolerance.
enum class NumMode : std::uint8_t { Exact, Float };

constexpr double kDefaultTolerance = 1e-9;

/// Complex number with rational real and imaginary parts.
struct Scalar {
    mpq_class re;
    mpq_class im;
    NumMode mode = NumMode::Exact;
    double tol = 0.0;  // comparison tolerance, meaningful when mode == Float

    Scalar() : re(0), im(0) {}
    Scalar(long v) : re(v), im(0) {}  // NOLINT: implicit for integer literals
    explicit Scalar(mpq_class r) : re(std::move(r)), im(0) {}
    Scalar(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}

    /// Parse "p/q" or "p" (optionally signed). Throws std::invalid_argument.
    static Scalar rational(const std::string& text);

    /// Exact rational value of the given double, tagged float-mode.
    static Scalar decimal(double value, double tolerance = kDefaultTolerance);

    static Scalar i() { return Scalar(mpq_class(0), mpq_class(1)); }

    bool is_real() const { return sgn(im) == 0; }
    bool exact_zero() const { return sgn(re) == 0 && sgn(im) == 0; }

    /// Mode-aware zero test: |z|^2 <= tol^2 in float mode, literal otherwise.
    bool is_zero() const;

    Scalar conj() const;
    Scalar operator-() const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);  // throws on division by exact zero

    /// Squared modulus re^2 + im^2 (always exact).
    mpq_class norm2() const { return re * re + im * im; }

    /// "p/q" for reals, "p/q+r/s*i" otherwise.
    std::string str() const;

    /// Tag this value (and everything derived from it) as float-mode.
    Scalar with_mode(NumMode m, double tolerance) const;
};

Scalar operator+(Scalar a, const Scalar& b);
Scalar operator-(Scalar a, const Scalar& b);
Scalar operator*(Scalar a, const Scalar& b);
Scalar operator/(Scalar a, const Scalar& b);

/// Mode-aware equality: literal in exact mode, |a-b| <= tol when either
/// operand is float-mode.
bool operator==(const Scalar& a, const Scalar& b);
bool operator!=(const Scalar& a, const Scalar& b);

/// Mode combination rule: Float dominates, tolerances max out.
void combine_mode(Scalar& dst, const Scalar& a, const Scalar& b);

mpq_class parse_rational(const std::string& text);

}  // namespace magiclim
