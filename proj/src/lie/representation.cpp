#include "verlinde/lie/representation.hpp"

#include <algorithm>
#include <map>
#include <regex>
#include <set>

namespace verlinde::lie {

namespace {

using WeightMap = std::map<IntVector, long long>;

WeightMap to_map(const std::vector<WeightMultiplicity>& weights)
{
    WeightMap m;
    for (const auto& w : weights) m[w.weight] += w.multiplicity;
    for (auto it = m.begin(); it != m.end();) it = it->second == 0 ? m.erase(it) : std::next(it);
    return m;
}

// B(x, y) = sum over all roots of <x, a^vee><y, a^vee>; Weyl-invariant, kills the center.
Rational killing(const RootDatum& datum, const RationalVector& x, const RationalVector& y)
{
    Rational s = 0;
    for (const auto& co : datum.coroots()) s += dot(co, x) * dot(co, y);
    return s;
}

RationalVector to_rational(const IntVector& v)
{
    RationalVector out;
    for (auto x : v) out.emplace_back(static_cast<long>(x));
    return out;
}

RationalVector plus(RationalVector a, const RationalVector& b)
{
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

IntVector parse_int_list(const std::string& text)
{
    IntVector out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(item, &used));
            if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw RepresentationError("bad integer '" + item + "' in weight list");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

} // namespace

long long RepSpec::dimension() const
{
    long long d = 0;
    for (const auto& w : weights) d += w.multiplicity;
    return d;
}

bool is_weyl_invariant(const RootDatum& datum, const std::vector<WeightMultiplicity>& weights)
{
    WeightMap m = to_map(weights);
    for (std::size_t i = 0; i < datum.simple_roots().size(); ++i) {
        WeightMap reflected;
        for (const auto& [w, mult] : m) reflected[datum.reflect_weight(i, w)] += mult;
        if (reflected != m) return false;
    }
    return true;
}

RepSpec normalized_rep(const RootDatum& datum, std::vector<WeightMultiplicity> weights, std::string name)
{
    for (const auto& w : weights) {
        if (w.weight.size() != static_cast<std::size_t>(datum.rank()))
            throw RepresentationError("weight has " + std::to_string(w.weight.size()) + " coordinates, expected " +
                                      std::to_string(datum.rank()));
        if (w.multiplicity < 0) throw RepresentationError("negative multiplicity");
    }
    RepSpec out;
    out.name = std::move(name);
    for (const auto& [w, mult] : to_map(weights)) out.weights.push_back({w, mult});
    if (!is_weyl_invariant(datum, out.weights))
        throw RepresentationError("weight multiset of '" + out.name + "' is not Weyl-invariant");
    return out;
}

RepSpec trivial_rep(const RootDatum& datum)
{
    return normalized_rep(datum, {{IntVector(static_cast<std::size_t>(datum.rank()), 0), 1}}, "trivial");
}

RepSpec one_dim_rep(const RootDatum& datum, const IntVector& mu)
{
    if (mu.size() != static_cast<std::size_t>(datum.rank())) throw RepresentationError("one_dim weight has wrong length");
    for (const auto& co : datum.coroots())
        if (pairing(mu, co) != 0) throw RepresentationError("one_dim(mu) needs a Weyl-invariant weight mu");
    std::string name = "one_dim(";
    for (std::size_t i = 0; i < mu.size(); ++i) name += (i ? "," : "") + std::to_string(mu[i]);
    return normalized_rep(datum, {{mu, 1}}, name + ")");
}

RepSpec defining_rep(const RootDatum& datum)
{
    const auto r = static_cast<std::size_t>(datum.rank());
    std::vector<WeightMultiplicity> w;
    switch (datum.kind()) {
    case GroupDescriptor::Kind::general_linear:
        for (std::size_t i = 0; i < r; ++i) {
            IntVector e(r, 0);
            e[i] = 1;
            w.push_back({e, 1});
        }
        break;
    case GroupDescriptor::Kind::special_linear:
        // eps_i = omega_i - omega_{i-1} in fundamental-weight coordinates.
        for (std::size_t i = 0; i <= r; ++i) {
            IntVector e(r, 0);
            if (i < r) e[i] += 1;
            if (i > 0) e[i - 1] -= 1;
            w.push_back({e, 1});
        }
        break;
    default:
        throw RepresentationError("defining representation is only built in for sl(n) and gl(n)");
    }
    return normalized_rep(datum, std::move(w), "defining");
}

RepSpec adjoint_rep(const RootDatum& datum)
{
    std::vector<WeightMultiplicity> w;
    for (const auto& a : datum.roots()) w.push_back({a, 1});
    w.push_back({IntVector(static_cast<std::size_t>(datum.rank()), 0), datum.rank()});
    return normalized_rep(datum, std::move(w), "adjoint");
}

RepSpec irreducible_rep(const RootDatum& datum, const IntVector& lambda, long long max_dimension)
{
    const auto r = static_cast<std::size_t>(datum.rank());
    if (lambda.size() != r) throw RepresentationError("highest weight has wrong length");
    for (const auto& co : datum.simple_coroots())
        if (pairing(lambda, co) < 0) throw RepresentationError("highest weight is not dominant");

    RationalVector rho_vee(r, Rational(0));
    for (const auto& co : datum.positive_coroots())
        for (std::size_t i = 0; i < r; ++i) rho_vee[i] += ratio(static_cast<long>(co[i]), 2);
    auto height = [&](const IntVector& v) { return dot(v, rho_vee); };

    const RationalVector rho = datum.rho();
    const RationalVector lambda_rho = plus(to_rational(lambda), rho);
    const Rational top = killing(datum, lambda_rho, lambda_rho);

    WeightMap mult{{lambda, 1}};
    long long dim = 1;
    std::vector<IntVector> layer{lambda};
    while (!layer.empty()) {
        std::set<IntVector> candidates;
        for (const auto& mu : layer)
            for (const auto& a : datum.simple_roots()) {
                IntVector next = mu;
                for (std::size_t i = 0; i < r; ++i) next[i] -= a[i];
                candidates.insert(next);
            }
        layer.clear();
        for (const auto& mu : candidates) {
            IntVector diff = lambda;
            for (std::size_t i = 0; i < r; ++i) diff[i] -= mu[i];
            const Rational depth = height(diff);
            const RationalVector mu_rho = plus(to_rational(mu), rho);
            const Rational denom = top - killing(datum, mu_rho, mu_rho);
            if (denom == 0) continue;
            Rational sum = 0;
            for (const auto& a : datum.positive_roots()) {
                const Rational step = height(a);
                IntVector shifted = mu;
                for (long k = 1; step * k <= depth; ++k) {
                    for (std::size_t i = 0; i < r; ++i) shifted[i] += a[i];
                    auto it = mult.find(shifted);
                    if (it == mult.end()) continue;
                    sum += Rational(static_cast<long>(it->second)) * killing(datum, to_rational(shifted), to_rational(a));
                }
            }
            Rational m = 2 * sum / denom;
            if (!is_integral(m) || m < 0) throw RepresentationError("internal error: non-integral weight multiplicity");
            if (m == 0) continue;
            const long long mi = m.get_num().get_si();
            mult[mu] = mi;
            dim += mi;
            if (dim > max_dimension) throw RepresentationError("irreducible representation exceeds the dimension cap");
            layer.push_back(mu);
        }
    }
    std::vector<WeightMultiplicity> w;
    for (const auto& [mu, m] : mult) w.push_back({mu, m});
    std::string name = "irrep(";
    for (std::size_t i = 0; i < r; ++i) name += (i ? "," : "") + std::to_string(lambda[i]);
    return normalized_rep(datum, std::move(w), name + ")");
}

RepSpec rep_weights(const RootDatum& datum, const std::string& name)
{
    if (name == "trivial" || name.empty()) return trivial_rep(datum);
    if (name == "defining") return defining_rep(datum);
    if (name == "adjoint") return adjoint_rep(datum);
    static const std::regex call(R"(\s*(one_dim|irrep|highest_weight)\s*\(([^)]*)\)\s*)");
    std::smatch m;
    if (std::regex_match(name, m, call)) {
        IntVector w = parse_int_list(m[2].str());
        if (m[1] == "one_dim") return one_dim_rep(datum, w);
        return irreducible_rep(datum, w);
    }
    throw RepresentationError("unknown representation '" + name + "'");
}

} // namespace verlinde::lie
