#include "verlinde/index/series_result.hpp"

#include "verlinde/algebra/cyclotomic.hpp"
#include "verlinde/index/compute.hpp"

#include <chrono>

namespace verlinde::index {

namespace {

using nlohmann::json;

json vector_json(const IntVector& v) { return json(v); }

json rational_vector_json(const RationalVector& v)
{
    json out = json::array();
    for (const auto& q : v) out.push_back(q.get_str());
    return out;
}

json matrix_json(const RationalMatrix& m)
{
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
        out.push_back(row);
    }
    return out;
}

template <CoefficientField F>
json dump_solutions(const F& field, const bethe::BetheSet<F>& set)
{
    json out = json::array();
    for (const auto& s : set.solutions) {
        json corr = json::array();
        for (const auto& eta : s.point.corrections) {
            json v = json::array();
            for (const auto& e : eta) v.push_back(field.to_string(e));
            corr.push_back(v);
        }
        json theta = json::array();
        for (const auto& c : s.theta.coefficients()) theta.push_back(field.to_string(c));
        out.push_back({{"y", rational_vector_json(s.point.leading.y())},
                       {"orbit_size", s.orbit_size},
                       {"corrections", corr},
                       {"residual_order", s.residual_order},
                       {"theta_coefficients", theta}});
    }
    return out;
}

template <CoefficientField F>
void check_residuals(const bethe::BetheSet<F>& set, int order)
{
    for (const auto& s : set.solutions)
        if (s.residual_order != order)
            throw InvariantFailure("residual", "lifted solution " + s.point.leading.to_string() + " solves the Bethe equation only through order " +
                                                   std::to_string(s.residual_order),
                                   {{"y", rational_vector_json(s.point.leading.y())}, {"residual_order", s.residual_order}, {"order", order}});
}

void fill_counts(VerlindeSeries& out, const IndexRequest& request, const std::vector<lie::TorusPoint>& leading)
{
    auto regular = bethe::filter_regular(request.datum, leading);
    out.leading_count = leading.size();
    out.regular_count = regular.size();
    out.regular_orbit_count = bethe::orbit_partition(request.datum, regular).size();
    out.F_count = request.level.isogeny_degree();
}

BigReal two_pow(long e, long bits)
{
    BigReal x(Rational(1), bits);
    mpfr_mul_2si(x.get(), x.get(), e, MPFR_RNDN);
    return x;
}

} // namespace

std::string to_string(Backend b) { return b == Backend::exact ? "exact" : "bigfloat"; }

Backend parse_backend(const std::string& text)
{
    if (text == "exact") return Backend::exact;
    if (text == "bigfloat") return Backend::bigfloat;
    throw RequestError("backend must be 'exact' or 'bigfloat', got '" + text + "'");
}

int VerlindeSeries::order() const
{
    return static_cast<int>(backend == Backend::exact ? exact_coefficients.size() : float_coefficients.size()) - 1;
}

std::string VerlindeSeries::coefficient_text(int n) const
{
    if (backend == Backend::exact) return exact_coefficients.at(static_cast<std::size_t>(n)).get_str();
    return float_coefficients.at(static_cast<std::size_t>(n)).re.to_string();
}

bool operator==(const VerlindeSeries& a, const VerlindeSeries& b)
{
    if (a.backend != b.backend || a.bits != b.bits || a.conductor != b.conductor) return false;
    if (a.exact_coefficients != b.exact_coefficients) return false;
    if (a.float_coefficients.size() != b.float_coefficients.size()) return false;
    for (std::size_t i = 0; i < a.float_coefficients.size(); ++i)
        if (!(a.float_coefficients[i] == b.float_coefficients[i])) return false;
    return a.sharp_L == b.sharp_L && a.F_count == b.F_count && a.leading_count == b.leading_count &&
           a.regular_count == b.regular_count && a.regular_orbit_count == b.regular_orbit_count &&
           a.dims_valid == b.dims_valid && a.kind == b.kind && a.vanishing == b.vanishing &&
           a.vanishing_reason == b.vanishing_reason && a.flags == b.flags && a.request == b.request &&
           a.solutions == b.solutions;
}

json to_json(const VerlindeSeries& s, bool include_timing)
{
    json coeffs = json::array();
    json imag = json::array();
    if (s.backend == Backend::exact) {
        for (const auto& q : s.exact_coefficients) coeffs.push_back(q.get_str());
    } else {
        for (const auto& c : s.float_coefficients) {
            coeffs.push_back(c.re.to_string());
            imag.push_back(c.im.to_string());
        }
    }
    json j = {{"request", s.request},
              {"backend", to_string(s.backend)},
              {"conductor", s.conductor},
              {"order", s.order()},
              {"coefficients", coeffs},
              {"sharp_L", s.sharp_L},
              {"F_count", s.F_count.get_str()},
              {"leading_count", s.leading_count},
              {"regular_count", s.regular_count},
              {"regular_orbit_count", s.regular_orbit_count},
              {"dims_valid", s.dims_valid},
              {"kind", s.kind},
              {"vanishing", s.vanishing},
              {"flags", s.flags}};
    if (s.backend == Backend::bigfloat) {
        j["bits"] = s.bits;
        j["coefficients_imag"] = imag;
    }
    if (s.vanishing) j["reason"] = s.vanishing_reason;
    if (!s.solutions.is_null()) j["solutions"] = s.solutions;
    if (include_timing && s.timing_ms) j["timing"] = {{"total_ms", *s.timing_ms}};
    return j;
}

VerlindeSeries series_from_json(const json& j)
{
    VerlindeSeries s;
    s.backend = parse_backend(j.at("backend").get<std::string>());
    s.conductor = j.at("conductor").get<long long>();
    if (s.backend == Backend::exact) {
        for (const auto& c : j.at("coefficients")) s.exact_coefficients.push_back(parse_rational(c.get<std::string>()));
    } else {
        s.bits = j.at("bits").get<long>();
        const auto& re = j.at("coefficients");
        const auto& im = j.at("coefficients_imag");
        for (std::size_t i = 0; i < re.size(); ++i)
            s.float_coefficients.emplace_back(BigReal::parse(re[i].get<std::string>(), s.bits),
                                              BigReal::parse(im.at(i).get<std::string>(), s.bits));
    }
    s.sharp_L = j.at("sharp_L").get<long long>();
    s.F_count = Integer(j.at("F_count").get<std::string>());
    s.leading_count = j.at("leading_count").get<std::size_t>();
    s.regular_count = j.at("regular_count").get<std::size_t>();
    s.regular_orbit_count = j.at("regular_orbit_count").get<std::size_t>();
    s.dims_valid = j.at("dims_valid").get<bool>();
    s.kind = j.at("kind").get<std::string>();
    s.vanishing = j.at("vanishing").get<bool>();
    if (s.vanishing) s.vanishing_reason = j.at("reason").get<std::string>();
    s.flags = j.at("flags").get<std::vector<std::string>>();
    s.request = j.at("request");
    if (j.contains("solutions")) s.solutions = j.at("solutions");
    if (j.contains("timing")) s.timing_ms = j.at("timing").at("total_ms").get<double>();
    return s;
}

json request_to_json(const IndexRequest& r, const MuResolution& mu)
{
    json rep = json::array();
    for (const auto& w : r.rep.weights) rep.push_back({{"weight", w.weight}, {"multiplicity", w.multiplicity}});
    json j = {{"group", r.datum.name()},
              {"rank", r.datum.rank()},
              {"center_dim", r.datum.center_dim()},
              {"level_h", matrix_json(r.level.h())},
              {"level_c", matrix_json(r.level.c())},
              {"h_prime", matrix_json(r.level.h_prime_rational())},
              {"genus", r.genus},
              {"degL", r.degL},
              {"h1L", r.h1L},
              {"chiL", r.chiL()},
              {"canonical", r.canonical},
              {"rep", {{"name", r.rep.name}, {"weights", rep}}},
              {"convention", to_string(r.convention)},
              {"variant", to_string(r.variant)},
              {"order", r.order}};
    if (r.gamma) j["gamma"] = rational_vector_json(*r.gamma);
    if (mu.mu) j["mu"] = vector_json(*mu.mu);
    if (r.variant == Variant::parabolic) j["mu_B"] = vector_json(r.mu_B);
    return j;
}

VerlindeSeries compute_index(const IndexRequest& request, const BackendOptions& options)
{
    const auto start = std::chrono::steady_clock::now();
    const MuResolution mu = resolve_mu(request);

    VerlindeSeries out;
    out.backend = options.backend;
    out.bits = options.backend == Backend::bigfloat ? options.bits : 0;
    out.sharp_L = request.variant == Variant::parabolic ? prefactor_exponent(request) : sharp_L(request);
    out.dims_valid = dims_valid(request);
    const bool dimension = out.dims_valid && request.genus > 1 && request.variant == Variant::standard;
    out.kind = dimension ? "dimension" : "index";
    out.request = request_to_json(request, mu);
    if (request.genus <= 1) out.flags.push_back("genus <= 1: index, not dimension");
    if (mu.mu && request.rep.name != "trivial") out.flags.push_back("Tr_U and e^{-mu} composed (U tensor C_{-mu})");
    if (request.degL < 0) out.flags.push_back("deg L < 0: sufficient positivity of h not checked");
    if (request.variant == Variant::parabolic) out.flags.push_back("parabolic: sum over all regular solutions");

    const auto leading = bethe::enumerate_leading(request.datum, request.level);
    fill_counts(out, request, leading);

    if (mu.vanishing) {
        out.vanishing = true;
        out.vanishing_reason = mu.reason;
        if (options.backend == Backend::exact) out.exact_coefficients.assign(static_cast<std::size_t>(request.order) + 1, Rational(0));
        else out.float_coefficients.assign(static_cast<std::size_t>(request.order) + 1, BigFloatField(options.bits).zero());
        return out;
    }

    const bethe::SolveOptions solve{request.order, request.variant == Variant::parabolic, options.parallel};
    if (options.backend == Backend::exact) {
        const long long m = bethe::conductor_for(request.datum, leading);
        if (m > kMaxConductor) throw ConductorOverflow("conductor " + std::to_string(m) + " exceeds " + std::to_string(kMaxConductor));
        const CyclotomicField field(static_cast<int>(m));
        out.conductor = m;
        const auto set = bethe::solve_bethe(request.datum, request.level, field, solve);
        check_residuals(set, request.order);
        if (options.dump_solutions) out.solutions = dump_solutions(field, set);
        const auto series = index_sum(request, mu.mu, field, set);
        for (int n = 0; n <= request.order; ++n) {
            auto q = series[n].as_rational();
            if (!q)
                throw InvariantFailure("rationality", "coefficient t^" + std::to_string(n) + " is not rational: " + series[n].to_string(),
                                       {{"n", n}, {"value", series[n].to_string()}});
            out.exact_coefficients.push_back(*q);
        }
        if (out.dims_valid && request.variant == Variant::standard) {
            for (int n = 0; n <= request.order; ++n) {
                const auto& c = out.exact_coefficients[static_cast<std::size_t>(n)];
                if (!is_integral(c) || c < 0)
                    throw InvariantFailure("integrality", "dimension coefficient t^" + std::to_string(n) + " = " + c.get_str() +
                                                              " is not a nonnegative integer",
                                           {{"n", n}, {"value", c.get_str()}});
            }
            out.flags.push_back("coefficients asserted nonnegative integers");
        }
    } else {
        if (options.bits < kMinPrecisionBits)
            throw RequestError("bigfloat precision must be at least " + std::to_string(kMinPrecisionBits) + " bits");
        const BigFloatField field(options.bits);
        const auto set = bethe::solve_bethe(request.datum, request.level, field, solve);
        check_residuals(set, request.order);
        if (options.dump_solutions) out.solutions = dump_solutions(field, set);
        const auto series = index_sum(request, mu.mu, field, set);
        const BigReal tol = two_pow(-(options.bits - 32), options.bits);
        for (int n = 0; n <= request.order; ++n) {
            const auto& c = series[n];
            if (!(c.im.abs() < tol * (BigReal(Rational(1), options.bits) + c.re.abs())))
                throw InvariantFailure("real_coefficients", "coefficient t^" + std::to_string(n) + " has imaginary part " + c.im.to_string(12),
                                       {{"n", n}, {"imag", c.im.to_string()}});
            out.float_coefficients.push_back(c);
        }
    }
    out.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return out;
}

Rational classical_verlinde_t0(const IndexRequest& request)
{
    if (request.variant == Variant::parabolic) throw RequestError("classical_verlinde_t0 is defined for the standard variant");
    const MuResolution mu = resolve_mu(request);
    if (mu.vanishing) return 0;
    const auto leading = bethe::enumerate_leading(request.datum, request.level);
    const auto orbits = bethe::orbit_partition(request.datum, bethe::filter_regular(request.datum, leading));
    const CyclotomicField field(static_cast<int>(bethe::conductor_for(request.datum, leading)));
    const Rational degree(request.level.isogeny_degree());
    Cyclotomic total = field.zero();
    for (const auto& o : orbits) {
        const auto& f0 = o.representative;
        Cyclotomic theta = field.one();
        for (const auto& a : request.datum.roots()) theta = theta * (field.one() - lie::evaluate_character(field, a, f0));
        theta = theta * (Rational(1) / degree);
        Cyclotomic term = field.one();
        const long e = 1L - request.genus;
        const Cyclotomic base = e >= 0 ? theta : theta.inverse();
        for (long i = 0; i < std::labs(e); ++i) term = term * base;
        Cyclotomic tr = field.zero();
        for (const auto& w : request.rep.weights)
            tr = tr + lie::evaluate_character(field, w.weight, f0) * Rational(static_cast<long>(w.multiplicity));
        term = term * tr;
        if (mu.mu) {
            IntVector neg = *mu.mu;
            for (auto& x : neg) x = -x;
            term = term * lie::evaluate_character(field, neg, f0);
        }
        total = total + term;
    }
    auto q = total.as_rational();
    if (!q) throw InvariantFailure("rationality", "classical t^0 value is not rational: " + total.to_string());
    return *q;
}

ConventionComparison convention_ratio(const IndexRequest& request, const BackendOptions& options)
{
    IndexRequest a = request, b = request;
    a.convention = Convention::reduced;
    b.convention = Convention::nonreduced;
    ConventionComparison out;
    out.delta = sharp_L(a) - sharp_L(b);
    out.reduced = compute_index(a, options);
    out.nonreduced = compute_index(b, options);
    const int order = request.order;
    if (options.backend == Backend::exact) {
        const CyclotomicField q(1);
        TruncatedSeries<CyclotomicField> sa(q, order), sb(q, order);
        for (int n = 0; n <= order; ++n) {
            sa[n] = q.from_rational(out.reduced.exact_coefficients[static_cast<std::size_t>(n)]);
            sb[n] = q.from_rational(out.nonreduced.exact_coefficients[static_cast<std::size_t>(n)]);
        }
        auto factor = int_pow(TruncatedSeries<CyclotomicField>::constant(q, order, q.one()) - TruncatedSeries<CyclotomicField>::variable(q, order), out.delta);
        out.holds = sa == factor * sb;
    } else {
        const BigFloatField f(options.bits);
        TruncatedSeries<BigFloatField> sa(f, order), sb(f, order);
        for (int n = 0; n <= order; ++n) {
            sa[n] = out.reduced.float_coefficients[static_cast<std::size_t>(n)];
            sb[n] = out.nonreduced.float_coefficients[static_cast<std::size_t>(n)];
        }
        auto factor = int_pow(TruncatedSeries<BigFloatField>::constant(f, order, f.one()) - TruncatedSeries<BigFloatField>::variable(f, order), out.delta);
        auto diff = sa - factor * sb;
        out.holds = true;
        const BigReal tol = two_pow(-(options.bits - 40), options.bits);
        for (int n = 0; n <= order; ++n)
            if (!(diff[n].abs() < tol * (BigReal(Rational(1), options.bits) + sa[n].abs()))) out.holds = false;
    }
    return out;
}

} // namespace verlinde::index
