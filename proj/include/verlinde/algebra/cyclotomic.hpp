#pragma once

#include "verlinde/algebra/errors.hpp"
#include "verlinde/algebra/rational.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace verlinde {

/// Q(zeta_m) as Q[x] / Phi_m(x). Shared, immutable; obtain through get().
class CyclotomicContext {
public:
    static std::shared_ptr<const CyclotomicContext> get(int conductor);

    int conductor() const noexcept { return conductor_; }
    int degree() const noexcept { return static_cast<int>(phi_.size()) - 1; }
    const std::vector<long long>& polynomial() const noexcept { return phi_; }
    /// x^k mod Phi_m for 0 <= k < m.
    const std::vector<long long>& power(int k) const { return powers_[static_cast<std::size_t>(k)]; }

    explicit CyclotomicContext(int conductor);

private:
    int conductor_;
    std::vector<long long> phi_;
    std::vector<std::vector<long long>> powers_;
};

/// Largest conductor a CyclotomicField accepts.
inline constexpr int kMaxConductor = 100000;

/// Element of Q(zeta_m) in the power basis 1, z, ..., z^(phi(m)-1); the
/// representation is canonical so == is exact equality.
class Cyclotomic {
public:
    Cyclotomic() = default;
    Cyclotomic(std::shared_ptr<const CyclotomicContext> ctx, const Rational& value);

    static Cyclotomic zeta_power(std::shared_ptr<const CyclotomicContext> ctx, long long k);

    const std::shared_ptr<const CyclotomicContext>& context() const noexcept { return ctx_; }
    int conductor() const noexcept { return ctx_ ? ctx_->conductor() : 1; }
    const std::vector<Rational>& coefficients() const noexcept { return c_; }

    bool is_zero() const;
    std::optional<Rational> as_rational() const;
    Cyclotomic inverse() const;
    /// Image under zeta_m -> zeta_M^(M/m); M must be a multiple of m.
    Cyclotomic embed(int target_conductor) const;
    /// Complex conjugate (zeta -> zeta^-1).
    Cyclotomic conjugate() const;
    std::string to_string() const;

    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Rational& q);

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator-(Cyclotomic a)
    {
        for (auto& c : a.c_) c = -c;
        return a;
    }
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator*(Cyclotomic a, const Rational& q) { return a *= q; }
    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

private:
    void check_compatible(const Cyclotomic& o) const;

    std::shared_ptr<const CyclotomicContext> ctx_;
    std::vector<Rational> c_;
};

/// Exact backend.
class CyclotomicField {
public:
    using Element = Cyclotomic;

    explicit CyclotomicField(int conductor);

    int conductor() const noexcept { return ctx_->conductor(); }
    const std::shared_ptr<const CyclotomicContext>& context() const noexcept { return ctx_; }

    Element zero() const { return Element(ctx_, 0); }
    Element one() const { return Element(ctx_, 1); }
    Element from_rational(const Rational& q) const { return Element(ctx_, q); }
    /// e(q); throws ConductorOverflow unless m*q is an integer.
    Element root_of_unity(const Rational& turns) const;
    Element inverse(const Element& x) const { return x.inverse(); }
    bool is_zero(const Element& x) const { return x.is_zero(); }
    std::string to_string(const Element& x) const { return x.to_string(); }
    std::string name() const { return "exact(conductor " + std::to_string(conductor()) + ")"; }

    friend bool operator==(const CyclotomicField& a, const CyclotomicField& b)
    {
        return a.conductor() == b.conductor();
    }

private:
    std::shared_ptr<const CyclotomicContext> ctx_;
};

} // namespace verlinde
