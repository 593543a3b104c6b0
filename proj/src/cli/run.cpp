#include "verlinde/cli/run.hpp"

#include "verlinde/algebra/cyclotomic.hpp"
#include "verlinde/bethe/leading.hpp"
#include "verlinde/oracles/sl2_closed_form.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace verlinde::cli {

namespace {

using nlohmann::json;

std::vector<std::string> split_list(const std::string& text)
{
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

IntVector parse_int_vector(const std::string& text, const std::string& what)
{
    IntVector out;
    for (const auto& item : split_list(text)) {
        Rational q;
        try {
            q = parse_rational(item);
        } catch (const std::invalid_argument&) {
            throw ValidationError(what + ": '" + item + "' is not a number");
        }
        if (!is_integral(q)) throw ValidationError(what + " must have integer coordinates");
        out.push_back(q.get_num().get_si());
    }
    return out;
}

RationalVector parse_rational_vector(const std::string& text, const std::string& what)
{
    RationalVector out;
    for (const auto& item : split_list(text)) {
        try {
            out.push_back(parse_rational(item));
        } catch (const std::invalid_argument&) {
            throw ValidationError(what + ": '" + item + "' is not a rational number");
        }
    }
    return out;
}

BigReal two_pow(long e, long bits)
{
    BigReal x(Rational(1), bits);
    mpfr_mul_2si(x.get(), x.get(), e, MPFR_RNDN);
    return x;
}

/// Float tolerance of the comparisons: 2^-200 at 256 bits.
long tolerance_exponent(long bits) { return -(bits - 56); }

std::string abs_text(const Rational& q) { return Rational(abs(q)).get_str(); }

Comparison compare_sl2_closed_form(const index::IndexRequest& request, const index::VerlindeSeries& series,
                                   const index::BackendOptions& options)
{
    const auto& d = request.datum;
    if (d.kind() != lie::GroupDescriptor::Kind::special_linear || d.rank() != 1)
        throw ValidationError("--compare sl2_closed_form needs --group sl2");
    const Rational h = -request.level.h()(0, 0) / 2;
    if (!is_integral(h) || h < 1) throw ValidationError("--compare sl2_closed_form needs a positive integer level");
    if (!request.canonical || request.rep.name != "trivial" || request.variant != index::Variant::standard ||
        (series.request.contains("mu") && series.request["mu"] != json::array({0})))
        throw ValidationError("--compare sl2_closed_form needs L = canonical, trivial U, no twist and the standard variant");
    const long hl = h.get_num().get_si();
    Comparison c{"sl2_closed_form", true, "0", ""};
    if (series.vanishing) {
        c.pass = false;
        c.detail = "series vanished";
        return c;
    }
    if (options.backend == index::Backend::exact) {
        const CyclotomicField field(oracles::sl2_closed_form_conductor(hl));
        const auto oracle = oracles::sl2_closed_form(field, hl, request.genus, request.order);
        Rational worst = 0;
        for (int n = 0; n <= request.order; ++n) {
            auto q = oracle[n].as_rational();
            if (!q) {
                c.pass = false;
                c.detail = "oracle coefficient not rational";
                return c;
            }
            Rational dev = abs(*q - series.exact_coefficients[static_cast<std::size_t>(n)]);
            if (dev > worst) worst = dev;
        }
        c.pass = worst == 0;
        c.deviation = abs_text(worst);
    } else {
        const BigFloatField field(options.bits);
        const auto oracle = oracles::sl2_closed_form(field, hl, request.genus, request.order);
        BigReal worst(Rational(0), options.bits);
        for (int n = 0; n <= request.order; ++n) {
            BigReal dev = (oracle[n] - series.float_coefficients[static_cast<std::size_t>(n)]).abs();
            if (worst < dev) worst = dev;
        }
        c.pass = !(two_pow(tolerance_exponent(options.bits), options.bits) < worst);
        c.deviation = worst.to_string(6);
    }
    return c;
}

Comparison compare_classical_t0(const index::IndexRequest& request, const index::VerlindeSeries& series,
                                const index::BackendOptions& options)
{
    if (request.variant != index::Variant::standard) throw ValidationError("--compare classical_t0 needs the standard variant");
    const Rational t0 = index::classical_verlinde_t0(request);
    Comparison c{"classical_t0", false, "", "t^0 oracle " + t0.get_str()};
    if (options.backend == index::Backend::exact) {
        const Rational dev = abs(t0 - series.exact_coefficients.at(0));
        c.pass = dev == 0;
        c.deviation = abs_text(dev);
    } else {
        BigReal dev = (to_float(t0, options.bits) - series.float_coefficients.at(0)).abs();
        c.pass = !(two_pow(tolerance_exponent(options.bits), options.bits) < dev);
        c.deviation = dev.to_string(6);
    }
    return c;
}

Comparison compare_convention_ratio(const index::IndexRequest& request, const index::BackendOptions& options)
{
    if (request.variant != index::Variant::standard) throw ValidationError("--compare convention_ratio needs the standard variant");
    const auto r = index::convention_ratio(request, options);
    return {"convention_ratio", r.holds, "delta=" + std::to_string(r.delta),
            "reduced = (1-t)^" + std::to_string(r.delta) + " * nonreduced"};
}

void write_failure(std::ostream& err, const std::string& check, const std::string& message, const json& details)
{
    json record = {{"status", "invariant_failure"}, {"check", check}, {"message", message}, {"details", details}};
    err << record.dump() << "\n";
}

} // namespace

index::IndexRequest build_request(const RunConfig& config)
{
    const lie::GroupDescriptor descriptor =
        config.group_data ? lie::GroupDescriptor::from_data(lie::parse_explicit_root_data(config.group_data->dump()))
                          : lie::parse_group_descriptor(config.group);
    auto datum = lie::build_root_datum(descriptor);
    auto spec = lie::parse_level_spec(config.level);
    if (config.c_matrix) spec.critical = lie::parse_rational_matrix(*config.c_matrix);
    auto level = lie::build_level(datum, spec);

    index::IndexRequest r(std::move(datum), std::move(level));
    r.genus = config.genus;
    if (r.genus < 0) throw ValidationError("genus must be nonnegative");
    if (config.L == "canonical") {
        index::set_canonical(r);
        if (config.degL && *config.degL != r.degL)
            throw ValidationError("--L canonical fixes deg L = 2g - 2 = " + std::to_string(r.degL) + ", got --degL " +
                                  std::to_string(*config.degL));
    } else if (config.L == "generic") {
        if (!config.degL) throw ValidationError("--L generic needs --degL");
        r.canonical = false;
        r.degL = *config.degL;
        r.h1L = index::default_h1L(r.genus, r.degL, false);
    } else {
        throw ValidationError("--L must be 'canonical' or 'generic', got '" + config.L + "'");
    }
    if (config.h1L) r.h1L = *config.h1L;
    r.rep = lie::rep_weights(r.datum, config.rep);

    if (config.gamma) {
        const std::string& g = *config.gamma;
        if (g.rfind("d=", 0) == 0) {
            Rational d;
            try {
                d = parse_rational(g.substr(2));
            } catch (const std::invalid_argument&) {
                throw ValidationError("--gamma d=...: bad degree '" + g.substr(2) + "'");
            }
            r.gamma = index::gamma_of_degree(r.datum, d);
        } else {
            r.gamma = parse_rational_vector(g, "--gamma");
        }
    }
    if (config.mu) r.mu = parse_int_vector(*config.mu, "--mu");
    r.convention = index::parse_convention(config.convention);
    r.variant = index::parse_variant(config.variant);
    if (config.mu_B) r.mu_B = parse_int_vector(*config.mu_B, "--mu-B");
    else if (r.variant == index::Variant::parabolic) r.mu_B.assign(static_cast<std::size_t>(r.datum.rank()), 0);
    else r.mu_B.clear();
    r.order = config.order;
    if (r.order < 0) throw ValidationError("--order must be nonnegative");
    index::resolve_mu(r);
    return r;
}

index::BackendOptions backend_options(const RunConfig& config)
{
    index::BackendOptions o;
    o.backend = index::parse_backend(config.backend);
    o.bits = config.bits;
    if (o.backend == index::Backend::bigfloat && o.bits < kMinPrecisionBits)
        throw ValidationError("--bits must be at least " + std::to_string(kMinPrecisionBits));
    o.parallel = config.parallel;
    o.dump_solutions = config.dump_solutions;
    return o;
}

std::vector<Comparison> run_comparisons(const RunConfig& config, const index::IndexRequest& request,
                                        const index::VerlindeSeries& series, const index::BackendOptions& options)
{
    std::vector<Comparison> out;
    for (const auto& target : config.compare) {
        if (target == "none") continue;
        if (target == "sl2_closed_form") out.push_back(compare_sl2_closed_form(request, series, options));
        else if (target == "classical_t0") out.push_back(compare_classical_t0(request, series, options));
        else if (target == "convention_ratio") out.push_back(compare_convention_ratio(request, options));
        else throw ValidationError("unknown --compare target '" + target + "'");
    }
    return out;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    try {
        if (config.format != "json" && config.format != "csv" && config.format != "pretty")
            throw ValidationError("--format must be json, csv or pretty");
        const auto request = build_request(config);
        const auto options = backend_options(config);
        const auto series = index::compute_index(request, options);
        const auto comparisons = run_comparisons(config, request, series, options);
        out << emit(series, config.format, comparisons, config.timing);
        for (const auto& c : comparisons)
            if (!c.pass) {
                write_failure(err, "compare:" + c.target, "comparison failed",
                              {{"max_deviation", c.deviation}, {"detail", c.detail}});
                return exit_invariant;
            }
        return exit_ok;
    } catch (const index::InvariantFailure& e) {
        write_failure(err, e.check, e.what(), e.details);
        return exit_invariant;
    } catch (const bethe::InputNotWeylClosed& e) {
        write_failure(err, "weyl_closure", e.what(), json::object());
        return exit_invariant;
    } catch (const ConfigParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_parse;
    } catch (const std::exception& e) {
        // RootDatumError, LevelError, RepresentationError, RequestError,
        // ConductorOverflow, ValidationError, ...
        err << "error: " << e.what() << "\n";
        return exit_validation;
    }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Equivariant Verlinde numbers: graded dimensions/indices of sections of positive line bundles\n"
                 "on moduli of L-twisted G-Higgs bundles, via formal Bethe ansatz solutions on a maximal torus."};
    app.set_version_flag("--version", "verlinde 1.0");

    RunConfig defaults;
    std::string config_path;
    std::string group_file;
    RunConfig cli;
    long degL = 0, h1L = 0;
    std::string c_matrix, gamma, mu, mu_B;
    std::string compare_text;
    bool serial = false, dump_config = false;

    app.add_option("--config", config_path, "JSON config file with RunConfig keys; flags override it");
    auto* o_group = app.add_option("--group", cli.group, "sl<n>, gl<n>, torus<r> (also sl(3), SL_3)")->capture_default_str();
    app.add_option("--group-file", group_file, "JSON root datum {rank, roots, coroots, reflections?, center_dim?, name?}");
    auto* o_level = app.add_option("--level", cli.level,
                                   "scalar k (simple groups, torus), pair h1,h2 (gl(n)), or JSON matrix [[..],..] of h on N")
                        ->capture_default_str();
    auto* o_c = app.add_option("--c-matrix", c_matrix, "JSON matrix replacing the default c = -sum_{a>0} a a^T");
    auto* o_genus = app.add_option("--genus", cli.genus, "curve genus g")->capture_default_str();
    auto* o_L = app.add_option("--L", cli.L, "canonical (deg L = 2g-2, h1 = 1) or generic (needs --degL)")->capture_default_str();
    auto* o_degL = app.add_option("--degL", degL, "degree of L; implies --L generic unless --L is given");
    auto* o_h1L = app.add_option("--h1L", h1L, "h^1(L); default 0 if deg L > 2g-2, 1 for K, else max(0, g-1-deg L)");
    auto* o_gamma = app.add_option("--gamma", gamma, "topological type: d=<degree> or a rational vector");
    auto* o_mu = app.add_option("--mu", mu, "explicit W-invariant weight mu (comma separated)");
    auto* o_rep = app.add_option("--rep", cli.rep, "trivial, defining, adjoint, one_dim(..), irrep(..)")->capture_default_str();
    auto* o_order = app.add_option("--order", cli.order, "truncation order T")->capture_default_str();
    auto* o_backend = app.add_option("--backend", cli.backend, "exact or bigfloat")->capture_default_str();
    auto* o_bits = app.add_option("--bits", cli.bits, "bigfloat precision in bits (>= 128; env VERLINDE_PRECISION)")->capture_default_str();
    auto* o_conv = app.add_option("--convention", cli.convention, "reduced or nonreduced (#_L convention)")->capture_default_str();
    auto* o_var = app.add_option("--variant", cli.variant, "standard or parabolic")->capture_default_str();
    auto* o_muB = app.add_option("--mu-B", mu_B, "weight of B for the parabolic variant (default 0)");
    auto* o_format = app.add_option("--format", cli.format, "json, csv or pretty")->capture_default_str();
    auto* o_compare = app.add_option("--compare", compare_text, "comma list of sl2_closed_form, classical_t0, convention_ratio, none");
    auto* o_dump = app.add_flag("--dump-solutions", cli.dump_solutions, "include per-solution Bethe data in the JSON report");
    auto* o_timing = app.add_flag("--timing", cli.timing, "report wall-clock time");
    auto* o_serial = app.add_flag("--serial", serial, "solve Bethe orbits sequentially");
    app.add_flag("--dump-config", dump_config, "print the effective config as JSON and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << (dynamic_cast<const CLI::CallForHelp*>(&e) || dynamic_cast<const CLI::CallForAllHelp*>(&e) ? app.help()
                                                                                                                 : "verlinde 1.0\n");
            return exit_ok;
        }
        err << "error: " << e.what() << "\n";
        return exit_parse;
    }

    RunConfig config;
    try {
        if (!config_path.empty()) config = load_config_file(config_path);
        if (!group_file.empty()) {
            std::ifstream in(group_file);
            if (!in) throw ConfigParseError("cannot open group file '" + group_file + "'");
            try {
                config.group_data = json::parse(in);
            } catch (const json::parse_error& e) {
                throw ConfigParseError("group file is not valid JSON: " + std::string(e.what()));
            }
        }
    } catch (const ConfigParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_parse;
    }

    if (const char* env = std::getenv("VERLINDE_PRECISION"); env && *env) {
        try {
            config.bits = std::stol(env);
        } catch (const std::exception&) {
            err << "error: VERLINDE_PRECISION must be an integer\n";
            return exit_parse;
        }
    }
    if (o_group->count()) {
        config.group = cli.group;
        config.group_data.reset();
    }
    if (o_level->count()) config.level = cli.level;
    if (o_c->count()) config.c_matrix = c_matrix;
    if (o_genus->count()) config.genus = cli.genus;
    if (o_degL->count()) {
        config.degL = degL;
        if (!o_L->count()) config.L = "generic";
    }
    if (o_L->count()) config.L = cli.L;
    if (o_h1L->count()) config.h1L = h1L;
    if (o_gamma->count()) config.gamma = gamma;
    if (o_mu->count()) config.mu = mu;
    if (o_rep->count()) config.rep = cli.rep;
    if (o_order->count()) config.order = cli.order;
    if (o_backend->count()) config.backend = cli.backend;
    if (o_bits->count()) config.bits = cli.bits;
    if (o_conv->count()) config.convention = cli.convention;
    if (o_var->count()) config.variant = cli.variant;
    if (o_muB->count()) config.mu_B = mu_B;
    if (o_format->count()) config.format = cli.format;
    if (o_compare->count()) config.compare = split_list(compare_text);
    if (o_dump->count()) config.dump_solutions = true;
    if (o_timing->count()) config.timing = true;
    if (o_serial->count()) config.parallel = false;

    if (dump_config) {
        out << config_to_json(config).dump(2) << "\n";
        return exit_ok;
    }
    return run(config, out, err);
}

} // namespace verlinde::cli
