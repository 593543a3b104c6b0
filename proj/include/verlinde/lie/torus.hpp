#pragma once

#include "verlinde/algebra/series.hpp"
#include "verlinde/lie/root_datum.hpp"

#include <set>
#include <string>
#include <vector>

namespace verlinde::lie {

/// f = e(y), y in Q^r mod Z^r, stored with 0 <= y_i < 1.
class TorusPoint {
public:
    TorusPoint() = default;
    explicit TorusPoint(RationalVector y) : y_(std::move(y))
    {
        for (auto& c : y_) c = frac_part(c);
    }

    static TorusPoint identity(int rank) { return TorusPoint(RationalVector(static_cast<std::size_t>(rank), Rational(0))); }

    const RationalVector& y() const noexcept { return y_; }
    std::size_t rank() const noexcept { return y_.size(); }
    /// lcm of coordinate denominators.
    long long denominator() const
    {
        long long d = 1;
        for (const auto& c : y_) d = lcm(d, c.get_den().get_si());
        return d;
    }
    std::string to_string() const
    {
        std::string s = "(";
        for (std::size_t i = 0; i < y_.size(); ++i) s += (i ? ", " : "") + verlinde::to_string(y_[i]);
        return s + ")";
    }

    friend bool operator==(const TorusPoint& a, const TorusPoint& b) { return a.y_ == b.y_; }
    friend bool operator<(const TorusPoint& a, const TorusPoint& b) { return a.y_ < b.y_; }

private:
    RationalVector y_;
};

/// Formal lift f_t = e(y) * exp(sum_k t^k eta_k) with eta_k in "log units"
/// (eta = 2 pi i xi), so that characters never need pi explicitly.
template <CoefficientField F>
struct SeriesTorusPoint {
    using Element = ElementOf<F>;

    TorusPoint leading;
    /// corrections[k-1] = eta_k for k = 1..T.
    std::vector<std::vector<Element>> corrections;

    int order() const noexcept { return static_cast<int>(corrections.size()); }

    static SeriesTorusPoint unlifted(const F& field, const TorusPoint& p, int order)
    {
        SeriesTorusPoint s{p, {}};
        s.corrections.assign(static_cast<std::size_t>(order), std::vector<Element>(p.rank(), field.zero()));
        return s;
    }

    /// sum_k t^k <w, eta_k>, zero constant term.
    TruncatedSeries<F> log_part(const F& field, const IntVector& w) const
    {
        TruncatedSeries<F> s(field, order());
        for (int k = 1; k <= order(); ++k) {
            auto acc = field.zero();
            const auto& eta = corrections[static_cast<std::size_t>(k - 1)];
            for (std::size_t i = 0; i < w.size(); ++i)
                if (w[i] != 0) acc = acc + eta[i] * Rational(static_cast<long>(w[i]));
            s[k] = acc;
        }
        return s;
    }
};

/// e^w(f) = e(<w, y>).
template <CoefficientField F>
ElementOf<F> evaluate_character(const F& field, const IntVector& w, const TorusPoint& f)
{
    return field.root_of_unity(dot(w, f.y()));
}

/// e^w(f_t) as a truncated series.
template <CoefficientField F>
TruncatedSeries<F> evaluate_character(const F& field, const IntVector& w, const SeriesTorusPoint<F>& f)
{
    return series_exp(f.log_part(field, w)) * evaluate_character(field, w, f.leading);
}

/// Image of f under a simple reflection.
inline TorusPoint reflect(const RootDatum& datum, std::size_t i, const TorusPoint& f)
{
    return TorusPoint(datum.reflect_coweight(i, f.y()));
}

/// Orbit under the group generated by simple reflections, sorted.
inline std::set<TorusPoint> weyl_orbit(const RootDatum& datum, const TorusPoint& f)
{
    std::set<TorusPoint> orbit{f};
    std::vector<TorusPoint> frontier{f};
    while (!frontier.empty()) {
        TorusPoint p = std::move(frontier.back());
        frontier.pop_back();
        for (std::size_t i = 0; i < datum.simple_reflections().size(); ++i) {
            TorusPoint q = reflect(datum, i, p);
            if (orbit.insert(q).second) frontier.push_back(std::move(q));
        }
    }
    return orbit;
}

} // namespace verlinde::lie
