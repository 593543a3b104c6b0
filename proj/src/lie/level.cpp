#include "verlinde/lie/level.hpp"

#include <json.hpp>

#include <sstream>

namespace verlinde::lie {

namespace {

using Kind = LevelError::Kind;

RationalMatrix sum_of_squares(const RootDatum& datum)
{
    const auto r = static_cast<std::size_t>(datum.rank());
    RationalMatrix k(r, r, Rational(0));
    for (const auto& a : datum.positive_roots())
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) k(i, j) += Rational(static_cast<long>(a[i] * a[j]));
    return k;
}

Rational quadratic(const RationalMatrix& m, const IntVector& v)
{
    Rational s = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) s += m(i, j) * Rational(static_cast<long>(v[i] * v[j]));
    return s;
}

} // namespace

RationalMatrix basic_critical_level(const RootDatum& datum)
{
    RationalMatrix k = sum_of_squares(datum);
    for (std::size_t i = 0; i < k.rows(); ++i)
        for (std::size_t j = 0; j < k.cols(); ++j) k(i, j) = -k(i, j);
    return k;
}

RationalMatrix normalized_basic_form(const RootDatum& datum)
{
    if (!datum.is_simple()) throw LevelError(Kind::unsupported_scalar, "normalized basic form needs a simple group");
    RationalMatrix k = sum_of_squares(datum);
    Rational shortest = -1;
    for (const auto& co : datum.coroots()) {
        Rational len = quadratic(k, co);
        if (shortest < 0 || len < shortest) shortest = len;
    }
    Rational scale = Rational(2) / shortest;
    for (std::size_t i = 0; i < k.rows(); ++i)
        for (std::size_t j = 0; j < k.cols(); ++j) k(i, j) *= scale;
    return k;
}

RationalMatrix parse_rational_matrix(const std::string& json_text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw LevelError(Kind::bad_shape, std::string("level matrix JSON: ") + e.what());
    }
    if (!j.is_array() || j.empty()) throw LevelError(Kind::bad_shape, "level matrix must be a nonempty array of rows");
    const std::size_t n = j.size();
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!j[i].is_array() || j[i].size() != n) throw LevelError(Kind::bad_shape, "level matrix must be square");
        for (std::size_t k = 0; k < n; ++k) {
            const auto& e = j[i][k];
            if (e.is_number_integer()) m(i, k) = Rational(e.get<long>());
            else if (e.is_string()) m(i, k) = parse_rational(e.get<std::string>());
            else throw LevelError(Kind::bad_shape, "level matrix entries must be integers or rational strings");
        }
    }
    return m;
}

LevelSpec parse_level_spec(const std::string& text)
{
    auto first = text.find_first_not_of(" \t");
    if (first != std::string::npos && text[first] == '[') return LevelSpec::of_matrix(parse_rational_matrix(text));
    if (auto comma = text.find(','); comma != std::string::npos) {
        try {
            return LevelSpec::of_pair(parse_rational(text.substr(0, comma)), parse_rational(text.substr(comma + 1)));
        } catch (const std::invalid_argument& e) {
            throw LevelError(Kind::bad_shape, "level pair: " + std::string(e.what()));
        }
    }
    try {
        return LevelSpec::of_scalar(parse_rational(text));
    } catch (const std::invalid_argument& e) {
        throw LevelError(Kind::bad_shape, "level: " + std::string(e.what()));
    }
}

LevelForm build_level(const RootDatum& datum, const LevelSpec& spec)
{
    const auto r = static_cast<std::size_t>(datum.rank());
    RationalMatrix h(r, r, Rational(0));
    switch (spec.kind) {
    case LevelSpec::Kind::scalar:
        if (datum.kind() == GroupDescriptor::Kind::torus) {
            for (std::size_t i = 0; i < r; ++i) h(i, i) = -spec.scalar;
        } else if (datum.is_simple()) {
            RationalMatrix basic = normalized_basic_form(datum);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j) h(i, j) = -spec.scalar * basic(i, j);
        } else {
            throw LevelError(Kind::unsupported_scalar,
                             "a scalar level needs a simple group or a torus; give a pair (gl(n)) or a matrix for " + datum.name());
        }
        break;
    case LevelSpec::Kind::pair:
        if (datum.kind() != GroupDescriptor::Kind::general_linear)
            throw LevelError(Kind::unsupported_scalar, "a level pair (h1,h2) is only defined for gl(n)");
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) h(i, j) = i == j ? -spec.first : -spec.second;
        break;
    case LevelSpec::Kind::matrix:
        if (spec.matrix.rows() != r || spec.matrix.cols() != r)
            throw LevelError(Kind::bad_shape, "level matrix must be " + std::to_string(r) + "x" + std::to_string(r));
        h = spec.matrix;
        break;
    }

    RationalMatrix c = spec.critical ? *spec.critical : basic_critical_level(datum);
    if (c.rows() != r || c.cols() != r) throw LevelError(Kind::bad_shape, "critical level matrix has wrong shape");

    for (const auto* m : {&h, &c})
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j)
                if ((*m)(i, j) != (*m)(j, i)) throw LevelError(Kind::not_symmetric, "level matrix is not symmetric");

    for (const auto& s : datum.simple_reflections()) {
        RationalMatrix sq(r, r);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) sq(i, j) = Rational(static_cast<long>(s(i, j)));
        if (!(sq.transpose() * h * sq == h)) throw LevelError(Kind::not_weyl_invariant, "level is not Weyl-invariant");
        if (!(sq.transpose() * c * sq == c)) throw LevelError(Kind::not_weyl_invariant, "critical level is not Weyl-invariant");
    }

    RationalMatrix hp = h + c;
    LevelForm out;
    out.h_prime_ = IntegerMatrix(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            if (!is_integral(hp(i, j)))
                throw LevelError(Kind::not_integral, "h' = h + c has non-integral entry " + hp(i, j).get_str());
            out.h_prime_(i, j) = hp(i, j).get_num();
        }
    if (!is_negative_definite(hp)) {
        std::ostringstream os;
        os << "h' = h + c is not negative definite (diagonal";
        for (std::size_t i = 0; i < r; ++i) os << " " << hp(i, i).get_str();
        os << ")";
        throw LevelError(Kind::not_negative_definite, os.str());
    }
    out.h_ = std::move(h);
    out.c_ = std::move(c);
    out.h_prime_inv_ = inverse(hp);
    out.degree_ = Rational(abs(determinant(hp))).get_num();
    out.h_prime_q_ = std::move(hp);
    return out;
}

} // namespace verlinde::lie
