#include "verlinde/algebra/bigfloat.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>
#include <utility>

namespace verlinde {

namespace {

mpfr_prec_t max_prec(const BigReal& a, const BigReal& b)
{
    return static_cast<mpfr_prec_t>(std::max(a.precision(), b.precision()));
}

} // namespace

BigReal::BigReal(long bits)
{
    mpfr_init2(v_, static_cast<mpfr_prec_t>(bits));
    mpfr_set_zero(v_, 1);
}

BigReal::BigReal(const Rational& q, long bits)
{
    mpfr_init2(v_, static_cast<mpfr_prec_t>(bits));
    mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
}

BigReal::BigReal(const BigReal& o)
{
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& o) noexcept
{
    // steal by swapping with a minimal placeholder
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
}

BigReal& BigReal::operator=(const BigReal& o)
{
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

BigReal& BigReal::operator=(BigReal&& o) noexcept
{
    mpfr_swap(v_, o.v_);
    return *this;
}

BigReal::~BigReal() { mpfr_clear(v_); }

BigReal BigReal::pi(long bits)
{
    BigReal out(bits);
    mpfr_const_pi(out.v_, MPFR_RNDN);
    return out;
}

BigReal BigReal::parse(const std::string& text, long bits)
{
    BigReal out(bits);
    if (mpfr_set_str(out.v_, text.c_str(), 10, MPFR_RNDN) != 0)
        throw std::invalid_argument("not a decimal number: " + text);
    return out;
}

std::string BigReal::to_string() const { return to_string(0); }

std::string BigReal::to_string(int digits) const
{
    if (mpfr_zero_p(v_)) return "0";
    mpfr_exp_t exp = 0;
    std::unique_ptr<char, void (*)(char*)> raw(mpfr_get_str(nullptr, &exp, 10, static_cast<std::size_t>(digits), v_, MPFR_RNDN),
                                               mpfr_free_str);
    std::string mant(raw.get());
    std::string sign;
    if (!mant.empty() && mant[0] == '-') {
        sign = "-";
        mant.erase(0, 1);
    }
    // mantissa is 0.d1d2... times 10^exp
    return sign + "0." + mant + "e" + std::to_string(static_cast<long>(exp));
}

BigReal BigReal::abs() const
{
    BigReal out(precision());
    mpfr_abs(out.v_, v_, MPFR_RNDN);
    return out;
}

BigReal BigReal::sqrt() const
{
    BigReal out(precision());
    mpfr_sqrt(out.v_, v_, MPFR_RNDN);
    return out;
}

BigReal operator+(const BigReal& a, const BigReal& b)
{
    BigReal out(max_prec(a, b));
    mpfr_add(out.v_, a.v_, b.v_, MPFR_RNDN);
    return out;
}

BigReal operator-(const BigReal& a, const BigReal& b)
{
    BigReal out(max_prec(a, b));
    mpfr_sub(out.v_, a.v_, b.v_, MPFR_RNDN);
    return out;
}

BigReal operator*(const BigReal& a, const BigReal& b)
{
    BigReal out(max_prec(a, b));
    mpfr_mul(out.v_, a.v_, b.v_, MPFR_RNDN);
    return out;
}

BigReal operator/(const BigReal& a, const BigReal& b)
{
    BigReal out(max_prec(a, b));
    mpfr_div(out.v_, a.v_, b.v_, MPFR_RNDN);
    return out;
}

BigReal operator-(const BigReal& a)
{
    BigReal out(a.precision());
    mpfr_neg(out.v_, a.v_, MPFR_RNDN);
    return out;
}

BigReal operator*(const BigReal& a, const Rational& q)
{
    BigReal out(a.precision());
    mpfr_mul_q(out.v_, a.v_, q.get_mpq_t(), MPFR_RNDN);
    return out;
}

std::string BigComplex::to_string() const
{
    std::string r = re.to_string(30);
    std::string i = im.to_string(30);
    if (!i.empty() && i[0] == '-') return r + " - " + i.substr(1) + "i";
    return r + " + " + i + "i";
}

BigFloatField::BigFloatField(long bits) : bits_(bits)
{
    if (bits < kMinPrecisionBits)
        throw std::invalid_argument("bigfloat precision must be at least " + std::to_string(kMinPrecisionBits) + " bits");
}

BigComplex BigFloatField::root_of_unity(const Rational& turns) const
{
    const Rational q = frac_part(turns);
    // exact values on the axes avoid spurious 1e-77 residues
    if (q == 0) return one();
    if (q == Rational(1, 2)) return from_rational(-1);
    if (q == Rational(1, 4)) return {BigReal(bits_), BigReal(1, bits_)};
    if (q == Rational(3, 4)) return {BigReal(bits_), BigReal(-1, bits_)};
    const long work = bits_ + 32;
    BigReal angle = BigReal::pi(work) * (q * 2);
    BigReal s(bits_), c(bits_);
    mpfr_sin_cos(s.get(), c.get(), angle.get(), MPFR_RNDN);
    return {std::move(c), std::move(s)};
}

BigComplex BigFloatField::inverse(const BigComplex& x) const
{
    BigReal n = x.norm();
    if (n.is_zero()) throw std::domain_error("inverse of zero bigfloat element");
    return {x.re / n, -x.im / n};
}

bool BigFloatField::is_zero(const BigComplex& x) const
{
    if (x.re.is_zero() && x.im.is_zero()) return true;
    BigReal threshold(bits_);
    mpfr_set_ui_2exp(threshold.get(), 1, -(bits_ - 16), MPFR_RNDN);
    return x.abs() < threshold;
}

BigComplex to_float(const Cyclotomic& x, long bits)
{
    BigFloatField field(bits);
    BigComplex out = field.zero();
    const auto& coeffs = x.coefficients();
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k] == 0) continue;
        out = out + field.root_of_unity(ratio(static_cast<long>(k), x.conductor())) * coeffs[k];
    }
    return out;
}

BigComplex to_float(const Rational& q, long bits) { return BigFloatField(bits).from_rational(q); }

Rational round_to_rational(const BigReal& x, const Integer& max_denominator, const BigReal& tol)
{
    // Convergents of the continued fraction of x; keep those within tol.
    const long bits = x.precision();
    std::vector<Rational> hits;
    Integer p_prev = 0, q_prev = 1;
    Integer p = 1, q = 0;
    BigReal rest = x;
    for (int iter = 0; iter < 200; ++iter) {
        Integer a;
        BigReal fl(bits);
        mpfr_floor(fl.get(), rest.get());
        mpfr_get_z(a.get_mpz_t(), fl.get(), MPFR_RNDN);
        Integer p_next = a * p + p_prev;
        Integer q_next = a * q + q_prev;
        if (q_next > max_denominator) break;
        p_prev = p;
        q_prev = q;
        p = p_next;
        q = q_next;
        Rational cand(p, q);
        cand.canonicalize();
        if ((x - BigReal(cand, bits)).abs() < tol) hits.push_back(cand);
        BigReal frac = rest - fl;
        if (frac.is_zero()) break;
        rest = BigReal(1, bits) / frac;
    }
    if (hits.empty()) throw RoundingAmbiguous("no rational with denominator <= " + max_denominator.get_str() + " within tolerance");
    // distinct candidates within tol means the tolerance cannot separate them
    for (const auto& h : hits)
        if (h != hits.front()) throw RoundingAmbiguous("several rationals within tolerance");
    return hits.front();
}

} // namespace verlinde
