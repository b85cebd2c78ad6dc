#include "logfront/rational.hpp"

#include <cctype>
#include <ostream>

#include "logfront/error.hpp"

namespace logfront {

Rational::Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw Error("exactalg", "zero_denominator", "rational with denominator zero");
    v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
    if (den == 0) throw Error("exactalg", "zero_denominator", "rational with denominator zero");
    v_.canonicalize();
}

void Rational::set_integer(long long n) {
    mpz_class z;
    if (n >= 0) {
        mpz_import(z.get_mpz_t(), 1, 1, sizeof(n), 0, 0, &n);
    } else {
        unsigned long long m = static_cast<unsigned long long>(-(n + 1)) + 1ULL;
        mpz_import(z.get_mpz_t(), 1, 1, sizeof(m), 0, 0, &m);
        z = -z;
    }
    v_ = mpq_class(z);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error("exactalg", "division_by_zero", "rational division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw Error("exactalg", "division_by_zero", "reciprocal of zero");
    mpq_class r;
    mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
    return Rational(r, NoCanon{});
}

Rational Rational::pow(unsigned long e) const {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), num().get_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), den().get_mpz_t(), e);
    mpq_class r(n);
    r /= mpq_class(d);
    return Rational(r, NoCanon{});
}

Rational Rational::from_string(const std::string& text) {
    size_t i = 0, n = text.size();
    auto skip_ws = [&] { while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    bool neg = false;
    if (i < n && (text[i] == '+' || text[i] == '-')) {
        neg = text[i] == '-';
        ++i;
    }
    skip_ws();
    size_t start = i;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) throw Error("exactalg", "bad_rational", "expected digits in '" + text + "'");
    mpz_class num(text.substr(start, i - start));
    mpz_class den(1);
    skip_ws();
    if (i < n && text[i] == '/') {
        ++i;
        skip_ws();
        start = i;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) throw Error("exactalg", "bad_rational", "expected denominator digits in '" + text + "'");
        den = mpz_class(text.substr(start, i - start));
        if (den == 0) throw Error("exactalg", "zero_denominator", "denominator zero in '" + text + "'");
        skip_ws();
    }
    if (i != n) throw Error("exactalg", "bad_rational", "trailing characters in '" + text + "'");
    if (neg) num = -num;
    return Rational(num, den);
}

std::string Rational::str() const {
    if (is_integer()) return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace logfront
