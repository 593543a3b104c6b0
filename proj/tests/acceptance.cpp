#include "support/nilpotent_jacobian.hpp"
#include "support/requests.hpp"

#include "verlinde/algebra/cyclotomic.hpp"
#include "verlinde/oracles/sl2_closed_form.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace verlinde;
using namespace verlinde::index;
using verlinde::testing::gl2_request;
using verlinde::testing::sl2_request;
using verlinde::testing::sl3_request;

namespace {

constexpr long kBits = 256;
constexpr long kToleranceExponent = -200;
constexpr double kOracleSecondsBudget = 10.0;

struct Verdict {
    bool pass = true;
    std::ostringstream note;

    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            if (pass) note << "first failure: " << what;
            pass = false;
        }
    }
};

BigReal tolerance() { return verlinde::testing::power_of_two(kToleranceExponent, kBits); }

bool within_tolerance(const BigReal& deviation) { return !(tolerance() < deviation); }

std::string label(const IndexRequest& r)
{
    std::ostringstream s;
    s << r.datum.name() << " h'=" << r.level.h_prime_rational()(0, 0).get_str() << " g=" << r.genus << " degL=" << r.degL;
    if (r.gamma) s << " gamma=" << (*r.gamma)[0].get_str();
    return s.str();
}

std::vector<IndexRequest> sl2_grid(int order)
{
    std::vector<IndexRequest> out;
    for (long h = 1; h <= 3; ++h)
        for (int g = 2; g <= 3; ++g) out.push_back(sl2_request(h, g, order));
    return out;
}

struct Pair {
    long h1, h2;
};
const std::vector<Pair> kGl2Levels{{2, 1}, {3, 1}, {3, 2}};

/// Bethe grid: SL2 h = 1..3, GL2 levels, SL3 k = 1.
std::vector<IndexRequest> bethe_grid(int order)
{
    std::vector<IndexRequest> out;
    for (long h = 1; h <= 3; ++h) out.push_back(sl2_request(h, 2, order));
    for (auto [a, b] : kGl2Levels) out.push_back(gl2_request(a, b, 2, order));
    out.push_back(sl3_request(1, 2, order));
    return out;
}

CyclotomicField field_for(const IndexRequest& r)
{
    return CyclotomicField(static_cast<int>(bethe::conductor_for(r.datum, bethe::enumerate_leading(r.datum, r.level))));
}

/// Coefficients of (1 - t)^e through order T.
std::vector<Rational> one_minus_t_power(long e, int order)
{
    std::vector<Rational> out{Rational(1)};
    for (int n = 1; n <= order; ++n) out.push_back(out.back() * Rational(n - 1 - e) / Rational(n));
    return out;
}

std::vector<Rational> multiply(const std::vector<Rational>& a, const std::vector<Rational>& b)
{
    std::vector<Rational> out(a.size(), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; i + j < a.size() && j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

// 1. The pipeline against the closed-form SL2 oracle with its own lifting.
Verdict criterion_1()
{
    Verdict v;
    const auto start = std::chrono::steady_clock::now();
    const BigFloatField ffield(kBits);
    for (const auto& r : sl2_grid(8)) {
        const long h = -r.level.h()(0, 0).get_num().get_si() / 2;
        const CyclotomicField cfield(oracles::sl2_closed_form_conductor(h));
        const auto oracle = oracles::sl2_closed_form(cfield, h, r.genus, 8);
        const auto exact = compute_index(r).exact_coefficients;
        for (int n = 0; n <= 8; ++n)
            v.require(oracle[n].as_rational() == exact[static_cast<std::size_t>(n)], label(r) + " exact t^" + std::to_string(n));

        const auto foracle = oracles::sl2_closed_form(ffield, h, r.genus, 8);
        const auto approx = compute_index(r, verlinde::testing::bigfloat_options(kBits)).float_coefficients;
        for (int n = 0; n <= 8; ++n)
            v.require(within_tolerance((foracle[n] - approx[static_cast<std::size_t>(n)]).abs()),
                      label(r) + " float t^" + std::to_string(n));
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    v.require(seconds < kOracleSecondsBudget, "runtime " + std::to_string(seconds) + " s");
    if (v.pass) v.note << "6 requests, T=8, " << seconds << " s";
    return v;
}

// 2. t^0 against the classical sine sum.
Verdict criterion_2()
{
    Verdict v;
    v.require(oracles::classical_sine_sum(1, 2) == 4, "anchor h=1 g=2");
    v.require(oracles::classical_sine_sum(1, 3) == 8, "anchor h=1 g=3");
    for (const auto& r : sl2_grid(8)) {
        const long h = -r.level.h()(0, 0).get_num().get_si() / 2;
        const auto c0 = compute_index(r).exact_coefficients.at(0);
        v.require(c0 == oracles::classical_sine_sum(h, r.genus), label(r));
        v.require(classical_verlinde_t0(r) == c0, label(r) + " t0 oracle");
    }
    if (v.pass) v.note << "anchors 4, 8; 6 requests";
    return v;
}

// 3. Leading solution counts and SL2 regular orbit counts.
Verdict criterion_3()
{
    Verdict v;
    auto grid = bethe_grid(0);
    for (long h = 4; h <= 6; ++h) grid.push_back(sl2_request(h, 2, 0));
    for (const auto& r : grid) {
        const auto lead = bethe::enumerate_leading(r.datum, r.level);
        const Rational det = abs(determinant(r.level.h_prime_rational()));
        v.require(Rational(static_cast<long>(lead.size())) == det, label(r) + " leading count");
    }
    for (long h = 1; h <= 6; ++h) {
        const auto r = sl2_request(h, 2, 0);
        const auto regular = bethe::filter_regular(r.datum, bethe::enumerate_leading(r.datum, r.level));
        v.require(bethe::orbit_partition(r.datum, regular).size() == static_cast<std::size_t>(h + 1),
                  "SL2 h=" + std::to_string(h) + " orbit count");
    }
    if (v.pass) v.note << grid.size() << " levels";
    return v;
}

// 4. Every lift of every regular point solves the equation through T = 10.
Verdict criterion_4()
{
    Verdict v;
    std::size_t lifts = 0;
    for (const auto& r : bethe_grid(10)) {
        const auto field = field_for(r);
        const auto set = bethe::solve_bethe(r.datum, r.level, field, bethe::SolveOptions{10, true, true});
        for (const auto& s : set.solutions) {
            ++lifts;
            v.require(bethe::residual_check(r.datum, r.level, field, s.point) == 10, label(r) + " " + s.point.leading.to_string());
        }
    }
    if (v.pass) v.note << lifts << " lifts at T=10";
    return v;
}

// 5. Nonnegative integer coefficients wherever the output is a dimension.
Verdict criterion_5()
{
    Verdict v;
    std::vector<IndexRequest> requests;
    auto add_line_bundles = [&](const IndexRequest& base) {
        for (int g = 0; g <= 3; ++g) {
            auto r = base;
            r.genus = g;
            if (g > 1) {
                set_canonical(r);
                requests.push_back(r);
            }
            const long lowest = std::max(0, 2 * g - 2) + 1;
            for (long d = lowest; d <= lowest + 1; ++d) requests.push_back(verlinde::testing::with_generic_L(r, d));
        }
    };
    for (long h = 1; h <= 3; ++h) add_line_bundles(sl2_request(h, 2, 8));
    for (auto [a, b] : kGl2Levels)
        for (long d = 0; d <= 1; ++d) {
            auto r = gl2_request(a, b, 2, 8);
            r.gamma = gamma_of_degree(r.datum, d);
            if (mu_from_gamma(r.datum, r.level, *r.gamma).vanishing) continue;
            add_line_bundles(r);
        }
    for (const auto& r : requests) {
        v.require(dims_valid(r), label(r) + " outside the hypotheses");
        try {
            const auto s = compute_index(r);
            for (const auto& c : s.exact_coefficients) v.require(is_integral(c) && c >= 0, label(r) + " coefficient " + c.get_str());
        } catch (const InvariantFailure& e) {
            v.require(false, label(r) + " " + e.what());
        }
    }
    if (v.pass) v.note << requests.size() << " requests, T=8";
    return v;
}

// 6. Reduced = (1 - t)^delta nonreduced with delta = -center_dim h1(L).
Verdict criterion_6()
{
    Verdict v;
    std::vector<IndexRequest> requests{sl2_request(1, 2, 8), sl2_request(2, 3, 8), sl3_request(1, 2, 6)};
    for (auto [a, b] : kGl2Levels) requests.push_back(gl2_request(a, b, 2, 8));
    auto generic = verlinde::testing::with_generic_L(gl2_request(3, 1, 2, 8), 2);
    requests.push_back(generic);
    for (const auto& r : requests) {
        const long expected = -static_cast<long>(r.datum.center_dim()) * r.h1L;
        auto red = r;
        red.convention = Convention::reduced;
        auto non = r;
        non.convention = Convention::nonreduced;
        const auto a = compute_index(red).exact_coefficients;
        const auto b = compute_index(non).exact_coefficients;
        v.require(sharp_L(red) - sharp_L(non) == expected, label(r) + " delta");
        v.require(a == multiply(b, one_minus_t_power(expected, r.order)), label(r) + " series ratio");
    }
    const auto gl = convention_ratio(gl2_request(2, 1, 2, 8));
    v.require(gl.delta == -1 && gl.holds, "GL2 L=K delta -1");
    if (v.pass) v.note << requests.size() << " requests; GL2 L=K delta = -1";
    return v;
}

// 7. Closed-form Jacobian against a dual-number derivative.
Verdict criterion_7()
{
    Verdict v;
    std::size_t points = 0;
    for (const auto& r : bethe_grid(8)) {
        const auto field = field_for(r);
        const auto set = bethe::solve_bethe(r.datum, r.level, field, bethe::SolveOptions{8, true, true});
        for (const auto& s : set.solutions) {
            ++points;
            v.require(bethe::jacobian_H(r.datum, r.level, field, s.point) ==
                          verlinde::testing::nilpotent_jacobian(r.datum, r.level, field, s.point),
                      label(r) + " " + s.point.leading.to_string());
        }
    }
    if (v.pass) v.note << points << " solutions at T=8";
    return v;
}

// 8. Parabolic output with mu_B = lambda against U = V_lambda.
Verdict criterion_8()
{
    Verdict v;
    for (long lambda = 0; lambda <= 2; ++lambda) {
        auto par = sl2_request(2, 2, 6);
        par.variant = Variant::parabolic;
        par.mu_B = {lambda};
        auto std_req = sl2_request(2, 2, 6);
        std_req.rep = lie::irreducible_rep(std_req.datum, {lambda});
        const auto a = compute_index(par).exact_coefficients;
        const auto b = compute_index(std_req).exact_coefficients;
        for (std::size_t n = 0; n < a.size(); ++n)
            v.require(a[n] == b[n], "lambda=" + std::to_string(lambda) + " t^" + std::to_string(n) + ": parabolic " +
                                        a[n].get_str() + " vs index " + b[n].get_str());
    }
    if (v.pass) v.note << "lambda 0..2, T=6";
    return v;
}

// 9. Exact and 256-bit pipelines agree on the full grid.
Verdict criterion_9()
{
    Verdict v;
    std::vector<IndexRequest> requests = sl2_grid(8);
    for (auto [a, b] : kGl2Levels)
        for (long d = 0; d <= 1; ++d) {
            auto r = gl2_request(a, b, 2, 8);
            r.gamma = gamma_of_degree(r.datum, d);
            requests.push_back(r);
        }
    requests.push_back(sl3_request(1, 2, 8));
    BigReal worst(Rational(0), kBits);
    for (const auto& r : requests) {
        const auto exact = compute_index(r);
        const auto approx = compute_index(r, verlinde::testing::bigfloat_options(kBits));
        const auto dev = verlinde::testing::max_deviation(exact.exact_coefficients, approx.float_coefficients, kBits);
        if (worst < dev) worst = dev;
        v.require(within_tolerance(dev), label(r) + " deviation " + dev.to_string(6));
    }
    if (v.pass) v.note << requests.size() << " requests, max deviation " << worst.to_string(6);
    return v;
}

const std::vector<std::pair<std::string, std::function<Verdict()>>> kCriteria{
    {"SL2 closed-form oracle", criterion_1},
    {"classical t^0", criterion_2},
    {"Bethe counting", criterion_3},
    {"residuals at T=10", criterion_4},
    {"integrality and nonnegativity", criterion_5},
    {"convention factor", criterion_6},
    {"Jacobian", criterion_7},
    {"parabolic identity", criterion_8},
    {"backend agreement", criterion_9},
};

bool report(std::size_t index)
{
    const auto& [name, body] = kCriteria[index];
    Verdict v;
    try {
        v = body();
    } catch (const std::exception& e) {
        v.pass = false;
        v.note << "exception: " << e.what();
    }
    std::cout << "criterion " << index + 1 << " (" << name << "): " << (v.pass ? "PASS" : "FAIL") << " - " << v.note.str()
              << std::endl;
    return v.pass;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Acceptance criteria"};
    int criterion = 0;
    app.add_option("--criterion", criterion, "run a single criterion (1-9); default runs all")
        ->check(CLI::Range(1, static_cast<int>(kCriteria.size())));
    CLI11_PARSE(app, argc, argv);

    bool ok = true;
    if (criterion > 0) return report(static_cast<std::size_t>(criterion - 1)) ? 0 : 1;
    for (std::size_t i = 0; i < kCriteria.size(); ++i) ok = report(i) && ok;
    return ok ? 0 : 1;
}
