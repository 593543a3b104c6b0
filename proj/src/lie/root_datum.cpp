#include "verlinde/lie/root_datum.hpp"

#include "verlinde/lie/smith.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <regex>
#include <set>

namespace verlinde::lie {

namespace {

using Kind = GroupDescriptor::Kind;

struct RawDatum {
    std::string name;
    Kind kind = Kind::explicit_data;
    int rank = 0;
    std::vector<IntVector> roots;
    std::vector<IntVector> coroots;
    std::vector<bool> positive; // empty: choose by a generic functional
    std::optional<std::vector<ReflectionMatrix>> reflections;
    std::optional<int> center_dim;
};

IntVector scaled_sum(const IntVector& a, long long s, const IntVector& b)
{
    IntVector out = a;
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += s * b[i];
    return out;
}

IntVector negated(IntVector v)
{
    for (auto& x : v) x = -x;
    return v;
}

// A_{n-1} roots as coefficient vectors over simple roots, positive ones first.
std::vector<IntVector> type_a_positive_coefficients(int n)
{
    std::vector<IntVector> out;
    const int r = n - 1;
    for (int i = 0; i < r; ++i)
        for (int j = i; j < r; ++j) {
            IntVector v(static_cast<std::size_t>(r), 0);
            for (int k = i; k <= j; ++k) v[static_cast<std::size_t>(k)] = 1;
            out.push_back(v);
        }
    return out;
}

long long cartan_a(int i, int j)
{
    if (i == j) return 2;
    return std::abs(i - j) == 1 ? -1 : 0;
}

IntVector cartan_times(const IntVector& v)
{
    const int r = static_cast<int>(v.size());
    IntVector out(v.size(), 0);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) out[static_cast<std::size_t>(i)] += cartan_a(i, j) * v[static_cast<std::size_t>(j)];
    return out;
}

RawDatum raw_special_linear(int n, bool adjoint)
{
    if (n < 2) throw RootDatumError("sl(n)/pgl(n) needs n >= 2");
    RawDatum raw;
    raw.name = (adjoint ? "pgl" : "sl") + std::to_string(n);
    raw.kind = adjoint ? Kind::explicit_data : Kind::special_linear;
    raw.rank = n - 1;
    for (const auto& v : type_a_positive_coefficients(n)) {
        // sl: M = weight lattice (fundamental weights), N = coroot lattice.
        // pgl: M = root lattice, N = coweight lattice.
        IntVector root = adjoint ? v : cartan_times(v);
        IntVector coroot = adjoint ? cartan_times(v) : v;
        raw.roots.push_back(root);
        raw.coroots.push_back(coroot);
        raw.positive.push_back(true);
        raw.roots.push_back(negated(root));
        raw.coroots.push_back(negated(coroot));
        raw.positive.push_back(false);
    }
    return raw;
}

RawDatum raw_general_linear(int n)
{
    if (n < 2) throw RootDatumError("gl(n) needs n >= 2");
    RawDatum raw;
    raw.name = "gl" + std::to_string(n);
    raw.kind = Kind::general_linear;
    raw.rank = n;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            IntVector v(static_cast<std::size_t>(n), 0);
            v[static_cast<std::size_t>(i)] = 1;
            v[static_cast<std::size_t>(j)] = -1;
            raw.roots.push_back(v);
            raw.coroots.push_back(v);
            raw.positive.push_back(true);
            raw.roots.push_back(negated(v));
            raw.coroots.push_back(negated(v));
            raw.positive.push_back(false);
        }
    return raw;
}

RawDatum raw_torus(int r)
{
    if (r < 1) throw RootDatumError("torus(r) needs r >= 1");
    RawDatum raw;
    raw.name = "torus" + std::to_string(r);
    raw.kind = Kind::torus;
    raw.rank = r;
    return raw;
}

ReflectionMatrix reflection_matrix(const IntVector& root, const IntVector& coroot)
{
    const std::size_t r = root.size();
    ReflectionMatrix s = ReflectionMatrix::identity(r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) s(i, j) -= coroot[i] * root[j];
    return s;
}

std::vector<long long> flatten(const ReflectionMatrix& m)
{
    std::vector<long long> out;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m(i, j));
    return out;
}

std::size_t enumerate_weyl_group(const std::vector<ReflectionMatrix>& gens, std::size_t rank, std::size_t cap)
{
    std::set<std::vector<long long>> seen;
    std::vector<ReflectionMatrix> frontier{ReflectionMatrix::identity(rank)};
    seen.insert(flatten(frontier.front()));
    while (!frontier.empty()) {
        std::vector<ReflectionMatrix> next;
        for (const auto& w : frontier)
            for (const auto& s : gens) {
                ReflectionMatrix ws = w * s;
                if (seen.insert(flatten(ws)).second) {
                    if (seen.size() > cap)
                        throw RootDatumError("Weyl group exceeds the enumeration cap of " + std::to_string(cap) + " elements");
                    next.push_back(std::move(ws));
                }
            }
        frontier = std::move(next);
    }
    return seen.size();
}

} // namespace

long long pairing(const IntVector& weight, const IntVector& coweight)
{
    long long s = 0;
    for (std::size_t i = 0; i < weight.size(); ++i) s += weight[i] * coweight[i];
    return s;
}

GroupDescriptor parse_group_descriptor(const std::string& text)
{
    std::string lower;
    for (char c : text) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    static const std::regex pattern(R"(^\s*(sl|gl|pgl|torus)\s*[_(]?\s*(\d+)\s*\)?\s*$)");
    std::smatch match;
    if (!std::regex_match(lower, match, pattern))
        throw RootDatumError("unrecognized group descriptor '" + text + "' (expected sl(n), gl(n), torus(r))");
    const std::string family = match[1];
    const int n = std::stoi(match[2]);
    if (family == "sl") return GroupDescriptor::sl(n);
    if (family == "gl") return GroupDescriptor::gl(n);
    if (family == "torus") return GroupDescriptor::torus(n);
    // pgl(n) is expressed as explicit data so that construction rejects it uniformly.
    RawDatum raw = raw_special_linear(n, true);
    ExplicitRootData data;
    data.rank = raw.rank;
    data.roots = raw.roots;
    data.coroots = raw.coroots;
    data.name = raw.name;
    return GroupDescriptor::from_data(std::move(data));
}

RationalVector RootDatum::reflect_coweight(std::size_t i, const RationalVector& y) const
{
    const auto& s = simple_reflections_.at(i);
    RationalVector out(y.size(), Rational(0));
    for (std::size_t a = 0; a < y.size(); ++a)
        for (std::size_t b = 0; b < y.size(); ++b)
            if (s(a, b) != 0) out[a] += Rational(static_cast<long>(s(a, b))) * y[b];
    return out;
}

IntVector RootDatum::reflect_weight(std::size_t i, const IntVector& w) const
{
    return scaled_sum(w, -pairing(w, simple_coroots_.at(i)), simple_roots_.at(i));
}

RationalVector RootDatum::reflect_weight(std::size_t i, const RationalVector& w) const
{
    const auto& coroot = simple_coroots_.at(i);
    const auto& root = simple_roots_.at(i);
    Rational p = 0;
    for (std::size_t k = 0; k < w.size(); ++k) p += w[k] * Rational(static_cast<long>(coroot[k]));
    RationalVector out = w;
    for (std::size_t k = 0; k < w.size(); ++k) out[k] -= p * Rational(static_cast<long>(root[k]));
    return out;
}

RootDatum build_root_datum(const GroupDescriptor& spec, std::size_t weyl_cap)
{
    RawDatum raw;
    switch (spec.kind) {
    case Kind::special_linear: raw = raw_special_linear(spec.n, false); break;
    case Kind::general_linear: raw = raw_general_linear(spec.n); break;
    case Kind::torus: raw = raw_torus(spec.n); break;
    case Kind::explicit_data:
        raw.name = spec.data.name;
        raw.rank = spec.data.rank;
        raw.roots = spec.data.roots;
        raw.coroots = spec.data.coroots;
        raw.reflections = spec.data.reflections;
        raw.center_dim = spec.data.center_dim;
        break;
    }

    const int r = raw.rank;
    if (r < 1) throw RootDatumError("rank must be positive");
    if (raw.roots.size() != raw.coroots.size()) throw RootDatumError("roots and coroots must be parallel lists");
    std::map<IntVector, std::size_t> index;
    for (std::size_t k = 0; k < raw.roots.size(); ++k) {
        const auto& a = raw.roots[k];
        const auto& av = raw.coroots[k];
        if (a.size() != static_cast<std::size_t>(r) || av.size() != static_cast<std::size_t>(r))
            throw RootDatumError("root/coroot " + std::to_string(k) + " has wrong length");
        if (std::all_of(a.begin(), a.end(), [](long long x) { return x == 0; }))
            throw RootDatumError("zero root");
        if (pairing(a, av) != 2)
            throw RootDatumError("inconsistent root/coroot pairing: <alpha, alpha^vee> = " + std::to_string(pairing(a, av)) +
                                 " for root " + std::to_string(k));
        if (!index.emplace(a, k).second) throw RootDatumError("duplicate root");
    }
    // reflection closure on roots and coroots simultaneously
    for (std::size_t i = 0; i < raw.roots.size(); ++i)
        for (std::size_t j = 0; j < raw.roots.size(); ++j) {
            IntVector image = scaled_sum(raw.roots[j], -pairing(raw.roots[j], raw.coroots[i]), raw.roots[i]);
            auto it = index.find(image);
            if (it == index.end()) throw RootDatumError("root set is not closed under reflections");
            IntVector co_image = scaled_sum(raw.coroots[j], -pairing(raw.roots[i], raw.coroots[j]), raw.coroots[i]);
            if (raw.coroots[it->second] != co_image)
                throw RootDatumError("coroot set is not compatible with the root reflections");
        }

    if (raw.positive.empty()) {
        long long bound = 1;
        for (const auto& a : raw.roots)
            for (long long x : a) bound = std::max(bound, 2 * std::abs(x) + 1);
        IntVector generic(static_cast<std::size_t>(r), 1);
        for (std::size_t i = 1; i < generic.size(); ++i) generic[i] = generic[i - 1] * bound;
        for (const auto& a : raw.roots) raw.positive.push_back(pairing(a, generic) > 0);
    }

    RootDatum d;
    d.name_ = raw.name;
    d.kind_ = raw.kind;
    d.rank_ = r;
    d.roots_ = raw.roots;
    d.coroots_ = raw.coroots;
    std::set<IntVector> positive_set;
    for (std::size_t k = 0; k < raw.roots.size(); ++k)
        if (raw.positive[k]) {
            d.positive_roots_.push_back(raw.roots[k]);
            d.positive_coroots_.push_back(raw.coroots[k]);
            positive_set.insert(raw.roots[k]);
        }
    if (d.positive_roots_.size() * 2 != raw.roots.size()) throw RootDatumError("positive system does not split the roots");
    for (std::size_t k = 0; k < d.positive_roots_.size(); ++k) {
        const auto& a = d.positive_roots_[k];
        bool decomposable = false;
        for (const auto& b : d.positive_roots_)
            if (positive_set.count(scaled_sum(a, -1, b))) {
                decomposable = true;
                break;
            }
        if (!decomposable) {
            d.simple_roots_.push_back(a);
            d.simple_coroots_.push_back(d.positive_coroots_[k]);
        }
    }

    // center and pi_1 from the root / coroot lattices
    const std::size_t nroots = raw.roots.size();
    std::size_t root_rank = 0;
    if (nroots > 0) {
        IntegerMatrix roots_m(static_cast<std::size_t>(r), nroots), coroots_m(static_cast<std::size_t>(r), nroots);
        for (std::size_t k = 0; k < nroots; ++k)
            for (std::size_t i = 0; i < static_cast<std::size_t>(r); ++i) {
                roots_m(i, k) = static_cast<long>(raw.roots[k][i]);
                coroots_m(i, k) = static_cast<long>(raw.coroots[k][i]);
            }
        root_rank = integer_rank(roots_m);
        SmithForm snf = smith_normal_form(coroots_m);
        for (std::size_t i = 0; i < std::min(snf.D.rows(), snf.D.cols()); ++i)
            if (snf.D(i, i) > 1)
                throw RootDatumError("pi_1 of " + raw.name + " has torsion (coroot lattice index " + snf.D(i, i).get_str() +
                                     "); only groups with free pi_1 are supported");
    }
    if (d.simple_roots_.size() != root_rank) throw RootDatumError("simple roots do not span the root lattice rank");
    d.center_dim_ = r - static_cast<int>(root_rank);
    d.pi1_rank_ = d.center_dim_;
    if (raw.center_dim && *raw.center_dim != d.center_dim_)
        throw RootDatumError("declared center_dim " + std::to_string(*raw.center_dim) + " but roots give " +
                             std::to_string(d.center_dim_));

    for (std::size_t i = 0; i < d.simple_roots_.size(); ++i)
        d.simple_reflections_.push_back(reflection_matrix(d.simple_roots_[i], d.simple_coroots_[i]));
    if (raw.reflections) {
        auto key_set = [](const std::vector<ReflectionMatrix>& ms) {
            std::set<std::vector<long long>> s;
            for (const auto& m : ms) s.insert(flatten(m));
            return s;
        };
        for (const auto& m : *raw.reflections)
            if (m.rows() != static_cast<std::size_t>(r) || m.cols() != static_cast<std::size_t>(r))
                throw RootDatumError("reflection matrix has wrong shape");
        if (key_set(*raw.reflections) != key_set(d.simple_reflections_))
            throw RootDatumError("supplied reflections differ from the simple reflections of the roots");
    }
    d.weyl_order_ = enumerate_weyl_group(d.simple_reflections_, static_cast<std::size_t>(r), weyl_cap);

    d.rho_.assign(static_cast<std::size_t>(r), Rational(0));
    for (const auto& a : d.positive_roots_)
        for (std::size_t i = 0; i < a.size(); ++i) d.rho_[i] += ratio(static_cast<long>(a[i]), 2);

    // simple group: semisimple with connected Dynkin diagram
    const std::size_t ns = d.simple_roots_.size();
    if (d.center_dim_ == 0 && ns > 0) {
        std::vector<bool> reached(ns, false);
        std::vector<std::size_t> stack{0};
        reached[0] = true;
        while (!stack.empty()) {
            std::size_t i = stack.back();
            stack.pop_back();
            for (std::size_t j = 0; j < ns; ++j)
                if (!reached[j] && pairing(d.simple_roots_[j], d.simple_coroots_[i]) != 0) {
                    reached[j] = true;
                    stack.push_back(j);
                }
        }
        d.simple_ = std::all_of(reached.begin(), reached.end(), [](bool b) { return b; });
    }
    return d;
}

} // namespace verlinde::lie
