#include "verlinde/algebra/rational.hpp"

#include <cctype>
#include <numeric>

namespace verlinde {

Rational parse_rational(std::string_view text)
{
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw std::invalid_argument("empty rational");
    auto valid_int = [](const std::string& part) {
        std::size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
        if (i == part.size()) return false;
        for (; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
        return true;
    };
    std::string num = s;
    std::string den = "1";
    if (auto slash = s.find('/'); slash != std::string::npos) {
        num = s.substr(0, slash);
        den = s.substr(slash + 1);
    }
    if (!num.empty() && num[0] == '+') num.erase(0, 1);
    if (!valid_int(num) || !valid_int(den)) throw std::invalid_argument("not a rational: " + std::string(text));
    Integer d(den);
    if (d == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
    Rational q(Integer(num), d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

bool is_integral(const Rational& q)
{
    return mpz_divisible_p(q.get_num_mpz_t(), q.get_den_mpz_t()) != 0;
}

Integer floor_of(const Rational& q)
{
    Integer out;
    mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return out;
}

Rational frac_part(const Rational& q)
{
    Rational out = q - Rational(floor_of(q));
    out.canonicalize();
    return out;
}

Integer lcm(const Integer& a, const Integer& b)
{
    Integer out;
    mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

long long lcm(long long a, long long b) { return std::lcm(a, b); }

Rational determinant(const RationalMatrix& m)
{
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    RationalMatrix a = m;
    const std::size_t n = a.rows();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a(pivot, col) == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(pivot, j), a(col, j));
            det = -det;
        }
        det *= a(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (a(i, col) == 0) continue;
            Rational factor = a(i, col) / a(col, col);
            for (std::size_t j = col; j < n; ++j) a(i, j) -= factor * a(col, j);
        }
    }
    return det;
}

RationalMatrix inverse(const RationalMatrix& m)
{
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
    const std::size_t n = m.rows();
    RationalMatrix a = m;
    RationalMatrix inv = RationalMatrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a(pivot, col) == 0) ++pivot;
        if (pivot == n) throw std::domain_error("singular matrix");
        for (std::size_t j = 0; j < n; ++j) {
            std::swap(a(pivot, j), a(col, j));
            std::swap(inv(pivot, j), inv(col, j));
        }
        Rational scale = 1 / a(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            a(col, j) *= scale;
            inv(col, j) *= scale;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a(i, col) == 0) continue;
            Rational factor = a(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= factor * a(col, j);
                inv(i, j) -= factor * inv(col, j);
            }
        }
    }
    return inv;
}

bool is_negative_definite(const RationalMatrix& m)
{
    const std::size_t n = m.rows();
    for (std::size_t k = 1; k <= n; ++k) {
        RationalMatrix minor(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) minor(i, j) = -m(i, j);
        if (determinant(minor) <= 0) return false;
    }
    return true;
}

Rational dot(const IntVector& w, const RationalVector& y)
{
    if (w.size() != y.size()) throw std::invalid_argument("pairing dimension mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < w.size(); ++i) s += Rational(static_cast<long>(w[i])) * y[i];
    return s;
}

} // namespace verlinde
