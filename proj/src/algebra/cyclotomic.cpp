#include "verlinde/algebra/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace verlinde {

namespace {

using Poly = std::vector<long long>;

// Exact division of integer polynomials; divisor is monic.
Poly divide_monic(const Poly& num, const Poly& den)
{
    Poly rem = num;
    const std::size_t dn = den.size() - 1;
    Poly quot(num.size() - dn, 0);
    for (std::size_t i = num.size(); i-- > dn;) {
        long long lead = rem[i];
        quot[i - dn] = lead;
        if (lead != 0)
            for (std::size_t j = 0; j <= dn; ++j) rem[i - dn + j] -= lead * den[j];
    }
    for (std::size_t j = 0; j < dn; ++j)
        if (rem[j] != 0) throw std::logic_error("cyclotomic polynomial division left a remainder");
    return quot;
}

Poly cyclotomic_polynomial(int m)
{
    static std::map<int, Poly> cache;
    static std::mutex mutex;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(m); it != cache.end()) return it->second;
    }
    Poly p(static_cast<std::size_t>(m) + 1, 0);
    p[0] = -1;
    p[static_cast<std::size_t>(m)] = 1;
    for (int d = 1; d < m; ++d)
        if (m % d == 0) p = divide_monic(p, cyclotomic_polynomial(d));
    std::lock_guard lock(mutex);
    cache.emplace(m, p);
    return p;
}

long long mod_floor(long long a, long long m) { return ((a % m) + m) % m; }

} // namespace

CyclotomicContext::CyclotomicContext(int conductor) : conductor_(conductor)
{
    if (conductor < 1) throw std::invalid_argument("conductor must be positive");
    phi_ = cyclotomic_polynomial(conductor);
    const std::size_t deg = phi_.size() - 1;
    powers_.reserve(static_cast<std::size_t>(conductor));
    Poly current(deg, 0);
    current[0] = 1;
    for (int k = 0; k < conductor; ++k) {
        powers_.push_back(current);
        // multiply by x, reduce with x^deg = -sum phi_i x^i
        long long carry = current[deg - 1];
        for (std::size_t i = deg - 1; i > 0; --i) current[i] = current[i - 1];
        current[0] = 0;
        if (carry != 0)
            for (std::size_t i = 0; i < deg; ++i) current[i] -= carry * phi_[i];
    }
}

std::shared_ptr<const CyclotomicContext> CyclotomicContext::get(int conductor)
{
    static std::map<int, std::shared_ptr<const CyclotomicContext>> registry;
    static std::mutex mutex;
    if (conductor < 1 || conductor > kMaxConductor)
        throw ConductorOverflow("conductor " + std::to_string(conductor) + " outside [1, " +
                                std::to_string(kMaxConductor) + "]");
    std::lock_guard lock(mutex);
    auto& slot = registry[conductor];
    if (!slot) slot = std::make_shared<const CyclotomicContext>(conductor);
    return slot;
}

Cyclotomic::Cyclotomic(std::shared_ptr<const CyclotomicContext> ctx, const Rational& value)
    : ctx_(std::move(ctx)), c_(static_cast<std::size_t>(ctx_->degree()), Rational(0))
{
    c_[0] = value;
}

Cyclotomic Cyclotomic::zeta_power(std::shared_ptr<const CyclotomicContext> ctx, long long k)
{
    Cyclotomic out(ctx, 0);
    const auto& p = ctx->power(static_cast<int>(mod_floor(k, ctx->conductor())));
    for (std::size_t i = 0; i < p.size(); ++i) out.c_[i] = static_cast<long>(p[i]);
    return out;
}

void Cyclotomic::check_compatible(const Cyclotomic& o) const
{
    if (ctx_ && o.ctx_ && ctx_ != o.ctx_)
        throw BackendMismatch("cyclotomic conductors differ: " + std::to_string(conductor()) + " vs " +
                              std::to_string(o.conductor()));
}

bool Cyclotomic::is_zero() const
{
    for (const auto& c : c_)
        if (c != 0) return false;
    return true;
}

std::optional<Rational> Cyclotomic::as_rational() const
{
    if (c_.empty()) return Rational(0);
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return std::nullopt;
    return c_[0];
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o)
{
    check_compatible(o);
    if (!o.ctx_) return *this;
    if (!ctx_) {
        *this = o;
        return *this;
    }
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o)
{
    check_compatible(o);
    if (!o.ctx_) return *this;
    if (!ctx_) {
        *this = -o;
        return *this;
    }
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& q)
{
    for (auto& c : c_) c *= q;
    return *this;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b)
{
    a.check_compatible(b);
    if (!a.ctx_) return a;
    if (!b.ctx_) return b;
    const std::size_t deg = a.c_.size();
    const auto& ctx = *a.ctx_;
    std::vector<Rational> prod(2 * deg - 1, Rational(0));
    for (std::size_t i = 0; i < deg; ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < deg; ++j) {
            if (b.c_[j] == 0) continue;
            prod[i + j] += a.c_[i] * b.c_[j];
        }
    }
    Cyclotomic out(a.ctx_, 0);
    for (std::size_t k = 0; k < prod.size(); ++k) {
        if (prod[k] == 0) continue;
        if (k < deg) {
            out.c_[k] += prod[k];
            continue;
        }
        const auto& p = ctx.power(static_cast<int>(k % static_cast<std::size_t>(ctx.conductor())));
        for (std::size_t i = 0; i < deg; ++i)
            if (p[i] != 0) out.c_[i] += prod[k] * static_cast<long>(p[i]);
    }
    return out;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b)
{
    if (!a.ctx_ || !b.ctx_) return (a - b).is_zero();
    a.check_compatible(b);
    return a.c_ == b.c_;
}

Cyclotomic Cyclotomic::inverse() const
{
    if (!ctx_ || is_zero()) throw std::domain_error("inverse of zero cyclotomic element");
    const std::size_t n = c_.size();
    // Columns are the coordinates of this * x^j; solve A v = e_0.
    RationalMatrix a(n, n, Rational(0));
    for (std::size_t j = 0; j < n; ++j) {
        Cyclotomic col = *this * zeta_power(ctx_, static_cast<long long>(j));
        for (std::size_t i = 0; i < n; ++i) a(i, j) = col.c_[i];
    }
    std::vector<Rational> rhs(n, Rational(0));
    rhs[0] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a(pivot, col) == 0) ++pivot;
        if (pivot == n) throw std::logic_error("singular multiplication matrix for nonzero element");
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(pivot, j), a(col, j));
            std::swap(rhs[pivot], rhs[col]);
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a(i, col) == 0) continue;
            Rational factor = a(i, col) / a(col, col);
            for (std::size_t j = col; j < n; ++j) a(i, j) -= factor * a(col, j);
            rhs[i] -= factor * rhs[col];
        }
    }
    Cyclotomic out(ctx_, 0);
    for (std::size_t i = 0; i < n; ++i) out.c_[i] = rhs[i] / a(i, i);
    return out;
}

Cyclotomic Cyclotomic::embed(int target_conductor) const
{
    if (target_conductor % conductor() != 0)
        throw BackendMismatch("cannot embed conductor " + std::to_string(conductor()) + " into " +
                              std::to_string(target_conductor));
    auto target = CyclotomicContext::get(target_conductor);
    Cyclotomic out(target, 0);
    const long long step = target_conductor / conductor();
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        out += zeta_power(target, static_cast<long long>(k) * step) * c_[k];
    }
    return out;
}

Cyclotomic Cyclotomic::conjugate() const
{
    if (!ctx_) return *this;
    Cyclotomic out(ctx_, 0);
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        out += zeta_power(ctx_, -static_cast<long long>(k)) * c_[k];
    }
    return out;
}

std::string Cyclotomic::to_string() const
{
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    const std::string z = "z" + std::to_string(conductor());
    for (std::size_t k = 0; k < c_.size(); ++k) {
        const Rational& c = c_[k];
        if (c == 0) continue;
        Rational mag = abs(c);
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        if (k == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) os << mag.get_str() << "*";
        os << z;
        if (k > 1) os << "^" << k;
    }
    return os.str();
}

CyclotomicField::CyclotomicField(int conductor) : ctx_(CyclotomicContext::get(conductor)) {}

Cyclotomic CyclotomicField::root_of_unity(const Rational& turns) const
{
    Rational scaled = turns * conductor();
    if (!is_integral(scaled))
        throw ConductorOverflow("e(" + turns.get_str() + ") is not in Q(zeta_" + std::to_string(conductor()) + ")");
    Integer k = floor_of(scaled);
    Integer m = conductor();
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), k.get_mpz_t(), m.get_mpz_t());
    return Cyclotomic::zeta_power(ctx_, r.get_si());
}

} // namespace verlinde
