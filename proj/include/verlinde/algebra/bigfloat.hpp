#pragma once

#include "verlinde/algebra/cyclotomic.hpp"
#include "verlinde/algebra/rational.hpp"

#include <mpfr.h>

#include <string>

namespace verlinde {

inline constexpr long kMinPrecisionBits = 128;
inline constexpr long kDefaultPrecisionBits = 256;

/// Owning wrapper over mpfr_t. Binary results carry the larger operand precision.
class BigReal {
public:
    explicit BigReal(long bits = kDefaultPrecisionBits);
    BigReal(const Rational& q, long bits);
    BigReal(const BigReal& o);
    BigReal(BigReal&& o) noexcept;
    BigReal& operator=(const BigReal& o);
    BigReal& operator=(BigReal&& o) noexcept;
    ~BigReal();

    static BigReal pi(long bits);
    /// Parses a decimal string as printed by to_string().
    static BigReal parse(const std::string& text, long bits);

    long precision() const { return static_cast<long>(mpfr_get_prec(v_)); }
    mpfr_srcptr get() const { return v_; }
    mpfr_ptr get() { return v_; }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    /// Exact-round-trip decimal representation.
    std::string to_string() const;
    /// Fixed number of significant decimal digits.
    std::string to_string(int digits) const;

    BigReal abs() const;
    BigReal sqrt() const;
    /// floor(log2|x|) for x != 0.
    long exponent() const { return static_cast<long>(mpfr_get_exp(v_)) - 1; }

    friend BigReal operator+(const BigReal& a, const BigReal& b);
    friend BigReal operator-(const BigReal& a, const BigReal& b);
    friend BigReal operator*(const BigReal& a, const BigReal& b);
    friend BigReal operator/(const BigReal& a, const BigReal& b);
    friend BigReal operator-(const BigReal& a);
    friend BigReal operator*(const BigReal& a, const Rational& q);
    friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend bool operator<(const BigReal& a, const BigReal& b) { return mpfr_less_p(a.v_, b.v_) != 0; }

private:
    mpfr_t v_;
};

struct BigComplex {
    BigReal re;
    BigReal im;

    explicit BigComplex(long bits = kDefaultPrecisionBits) : re(bits), im(bits) {}
    BigComplex(BigReal r, BigReal i) : re(std::move(r)), im(std::move(i)) {}

    long precision() const { return re.precision(); }
    BigReal norm() const { return re * re + im * im; }
    BigReal abs() const { return norm().sqrt(); }
    BigComplex conjugate() const { return {re, -im}; }
    std::string to_string() const;

    friend BigComplex operator+(const BigComplex& a, const BigComplex& b) { return {a.re + b.re, a.im + b.im}; }
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b) { return {a.re - b.re, a.im - b.im}; }
    friend BigComplex operator-(const BigComplex& a) { return {-a.re, -a.im}; }
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b)
    {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend BigComplex operator*(const BigComplex& a, const Rational& q) { return {a.re * q, a.im * q}; }
    friend bool operator==(const BigComplex& a, const BigComplex& b) { return a.re == b.re && a.im == b.im; }
};

/// Arbitrary-precision complex backend.
class BigFloatField {
public:
    using Element = BigComplex;

    explicit BigFloatField(long bits = kDefaultPrecisionBits);

    long bits() const noexcept { return bits_; }

    Element zero() const { return Element(bits_); }
    Element one() const { return from_rational(1); }
    Element from_rational(const Rational& q) const { return {BigReal(q, bits_), BigReal(bits_)}; }
    /// e(q) = cos(2 pi q) + i sin(2 pi q), q reduced mod 1 first.
    Element root_of_unity(const Rational& turns) const;
    Element inverse(const Element& x) const;
    /// |x| below 2^-(bits - 16).
    bool is_zero(const Element& x) const;
    std::string to_string(const Element& x) const { return x.to_string(); }
    std::string name() const { return "bigfloat(" + std::to_string(bits_) + " bits)"; }

    friend bool operator==(const BigFloatField& a, const BigFloatField& b) { return a.bits_ == b.bits_; }

private:
    long bits_;
};

/// Embedding zeta_m -> exp(2 pi i / m).
BigComplex to_float(const Cyclotomic& x, long bits);
BigComplex to_float(const Rational& q, long bits);

/// Nearest rational with denominator <= max_denominator (continued fractions);
/// fails with RoundingAmbiguous if no candidate or two candidates lie within tol.
Rational round_to_rational(const BigReal& x, const Integer& max_denominator, const BigReal& tol);

} // namespace verlinde
