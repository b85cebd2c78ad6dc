#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "logfront/rational.hpp"

namespace logfront {

// The variable universe is fixed: every polynomial in the system lives in
// Q[a,b,z,w,t]. Exponent vectors always carry all five slots; a variable is
// "active" in a polynomial when some term uses it.
enum class Var : uint8_t { a = 0, b = 1, z = 2, w = 3, t = 4 };

inline constexpr int kVarCount = 5;
inline constexpr std::array<char, kVarCount> kVarNames = {'a', 'b', 'z', 'w', 't'};

std::optional<Var> var_from_char(char c);
inline char var_name(Var v) { return kVarNames[static_cast<int>(v)]; }

using Exponents = std::array<uint32_t, kVarCount>;

// Graded lexicographic order with variable significance a > b > z > w > t
// inside a degree class. Canonical term order for printing and for the
// leading-coefficient sign normalization.
struct GrlexLess {
    bool operator()(const Exponents& x, const Exponents& y) const {
        uint64_t dx = 0, dy = 0;
        for (int i = 0; i < kVarCount; ++i) {
            dx += x[i];
            dy += y[i];
        }
        if (dx != dy) return dx < dy;
        for (int i = 0; i < kVarCount; ++i)
            if (x[i] != y[i]) return x[i] < y[i];
        return false;
    }
};

// Sparse multivariate polynomial with exact rational coefficients.
// Invariant: no stored coefficient is zero.
class SparsePoly {
public:
    using TermMap = std::map<Exponents, Rational, GrlexLess>;

    SparsePoly() = default;
    explicit SparsePoly(const Rational& c);

    static SparsePoly zero() { return SparsePoly(); }
    static SparsePoly one() { return SparsePoly(Rational(1)); }
    static SparsePoly variable(Var v, uint32_t power = 1);
    static SparsePoly monomial(const Exponents& e, const Rational& c);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Constant term; zero polynomial yields 0. Only meaningful when is_constant().
    Rational constant_value() const;

    const TermMap& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }

    // Degree in one variable, total degree, and minimum exponent of a
    // variable across all terms. Zero polynomial: degree() = -1 by convention.
    int64_t degree(Var v) const;
    int64_t total_degree() const;
    int64_t min_degree(Var v) const;
    std::vector<Var> active_vars() const;
    bool uses(Var v) const { return degree(v) > 0; }
    bool uses_only(std::initializer_list<Var> allowed) const;

    Rational coeff(const Exponents& e) const;
    void add_term(const Exponents& e, const Rational& c);

    SparsePoly operator-() const;
    SparsePoly& operator+=(const SparsePoly& o);
    SparsePoly& operator-=(const SparsePoly& o);
    friend SparsePoly operator+(SparsePoly x, const SparsePoly& y) { return x += y; }
    friend SparsePoly operator-(SparsePoly x, const SparsePoly& y) { return x -= y; }
    friend SparsePoly operator*(const SparsePoly& x, const SparsePoly& y);
    SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }
    SparsePoly scaled(const Rational& c) const;
    SparsePoly pow(uint32_t e) const;

    friend bool operator==(const SparsePoly& x, const SparsePoly& y) { return x.terms_ == y.terms_; }
    friend bool operator!=(const SparsePoly& x, const SparsePoly& y) { return !(x == y); }

    // Leading term in grlex order. Precondition: nonzero.
    const Exponents& leading_exponents() const;
    const Rational& leading_coeff_grlex() const;

    SparsePoly derivative(Var v) const;

    // Exact rational / complex evaluation. Every active variable must be
    // assigned; missing assignment raises exactalg.missing_assignment.
    Rational evaluate(const std::array<std::optional<Rational>, kVarCount>& point) const;
    std::complex<double> evaluate(const std::array<std::optional<std::complex<double>>, kVarCount>& point) const;

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const SparsePoly& p);

private:
    TermMap terms_;
};

// --- construction / destructuring helpers --------------------------------

// Parses the text grammar:
//   poly  = [ws] [sign] term (('+'|'-') term)*
//   term  = coeff? ('*'? var ('^' posint)?)*
//   coeff = int | int '/' posint
// Variables are restricted to {a,b,z,w,t}; whitespace is ignored.
// Errors carry the character position.
SparsePoly poly_parse(const std::string& text);

enum class ArithOp { add, sub, mul, exact_div };
SparsePoly poly_arith(ArithOp op, const SparsePoly& p, const SparsePoly& q);

// Exact division in the polynomial ring. Throws exactalg.not_divisible with
// the offending remainder rendered into the message when q does not divide p.
SparsePoly exact_div(const SparsePoly& p, const SparsePoly& q);
bool try_exact_div(const SparsePoly& p, const SparsePoly& q, SparsePoly& quotient);

// P(z,w) -> P(az, bw).
SparsePoly dilate(const SparsePoly& p);
// P(z,w) -> P(a z0, b w0): polynomial in (a,b) tracing the dilations placing
// P through the fixed point (z0,w0).
SparsePoly dilate_eval_at(const SparsePoly& p, const Rational& z0, const Rational& w0);
// Q(z,w) -> a^deg_z b^deg_w Q(z0/a, w0/b), denominators cleared.
SparsePoly reciprocal_dilate_eval(const SparsePoly& q, const Rational& z0, const Rational& w0);
// p(a,b) -> a^deg_a b^deg_b p(1/a, 1/b), denominators cleared.
SparsePoly invert_ab(const SparsePoly& p);
// Renames variables; `mapping[i]` is the new variable for slot i. Mapped-to
// slots must not collide with surviving active variables.
SparsePoly rename_vars(const SparsePoly& p, const std::array<Var, kVarCount>& mapping);

SparsePoly wronskian(const SparsePoly& dilated_p, const SparsePoly& q);

// Canonical unit representative: integer coefficients with content 1 and a
// positive grlex-leading coefficient. Zero maps to zero.
SparsePoly canonical_unit(const SparsePoly& p);
// The rational u with canonical_unit(p) = u * p (1 for zero input).
Rational canonical_unit_scale(const SparsePoly& p);

}  // namespace logfront
