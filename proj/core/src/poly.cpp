#include "logfront/poly.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

#include "logfront/error.hpp"

namespace logfront {

std::optional<Var> var_from_char(char c) {
    switch (c) {
        case 'a': return Var::a;
        case 'b': return Var::b;
        case 'z': return Var::z;
        case 'w': return Var::w;
        case 't': return Var::t;
        default: return std::nullopt;
    }
}

SparsePoly::SparsePoly(const Rational& c) {
    if (!c.is_zero()) terms_.emplace(Exponents{}, c);
}

SparsePoly SparsePoly::variable(Var v, uint32_t power) {
    SparsePoly p;
    if (power == 0) return one();
    Exponents e{};
    e[static_cast<int>(v)] = power;
    p.terms_.emplace(e, Rational(1));
    return p;
}

SparsePoly SparsePoly::monomial(const Exponents& e, const Rational& c) {
    SparsePoly p;
    if (!c.is_zero()) p.terms_.emplace(e, c);
    return p;
}

bool SparsePoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first == Exponents{};
}

Rational SparsePoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    return terms_.begin()->second;
}

int64_t SparsePoly::degree(Var v) const {
    int64_t d = -1;
    const int i = static_cast<int>(v);
    for (const auto& [e, c] : terms_) d = std::max<int64_t>(d, e[i]);
    return d;
}

int64_t SparsePoly::total_degree() const {
    int64_t d = -1;
    for (const auto& [e, c] : terms_) {
        int64_t s = 0;
        for (int i = 0; i < kVarCount; ++i) s += e[i];
        d = std::max(d, s);
    }
    return d;
}

int64_t SparsePoly::min_degree(Var v) const {
    if (terms_.empty()) return 0;
    const int i = static_cast<int>(v);
    int64_t d = INT64_MAX;
    for (const auto& [e, c] : terms_) d = std::min<int64_t>(d, e[i]);
    return d;
}

std::vector<Var> SparsePoly::active_vars() const {
    std::vector<Var> out;
    for (int i = 0; i < kVarCount; ++i) {
        for (const auto& [e, c] : terms_)
            if (e[i] > 0) {
                out.push_back(static_cast<Var>(i));
                break;
            }
    }
    return out;
}

bool SparsePoly::uses_only(std::initializer_list<Var> allowed) const {
    for (Var v : active_vars())
        if (std::find(allowed.begin(), allowed.end(), v) == allowed.end()) return false;
    return true;
}

Rational SparsePoly::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void SparsePoly::add_term(const Exponents& e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SparsePoly SparsePoly::operator-() const {
    SparsePoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

SparsePoly operator*(const SparsePoly& x, const SparsePoly& y) {
    SparsePoly r;
    for (const auto& [ex, cx] : x.terms_) {
        for (const auto& [ey, cy] : y.terms_) {
            Exponents e;
            for (int i = 0; i < kVarCount; ++i) e[i] = ex[i] + ey[i];
            r.add_term(e, cx * cy);
        }
    }
    return r;
}

SparsePoly SparsePoly::scaled(const Rational& c) const {
    SparsePoly r;
    if (c.is_zero()) return r;
    for (const auto& [e, coeff] : terms_) r.terms_.emplace(e, coeff * c);
    return r;
}

SparsePoly SparsePoly::pow(uint32_t e) const {
    SparsePoly result = one();
    SparsePoly base = *this;
    while (e) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

const Exponents& SparsePoly::leading_exponents() const {
    if (terms_.empty()) throw Error("exactalg", "zero_polynomial", "leading term of zero polynomial");
    return terms_.rbegin()->first;
}

const Rational& SparsePoly::leading_coeff_grlex() const {
    if (terms_.empty()) throw Error("exactalg", "zero_polynomial", "leading coefficient of zero polynomial");
    return terms_.rbegin()->second;
}

SparsePoly SparsePoly::derivative(Var v) const {
    SparsePoly r;
    const int i = static_cast<int>(v);
    for (const auto& [e, c] : terms_) {
        if (e[i] == 0) continue;
        Exponents d = e;
        d[i] -= 1;
        r.add_term(d, c * Rational(static_cast<long>(e[i])));
    }
    return r;
}

Rational SparsePoly::evaluate(const std::array<std::optional<Rational>, kVarCount>& point) const {
    for (Var v : active_vars())
        if (!point[static_cast<int>(v)])
            throw Error("exactalg", "missing_assignment",
                        std::string("no value assigned to variable '") + var_name(v) + "'");
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (int i = 0; i < kVarCount; ++i)
            if (e[i] > 0) term *= point[i]->pow(e[i]);
        acc += term;
    }
    return acc;
}

std::complex<double> SparsePoly::evaluate(
    const std::array<std::optional<std::complex<double>>, kVarCount>& point) const {
    for (Var v : active_vars())
        if (!point[static_cast<int>(v)])
            throw Error("exactalg", "missing_assignment",
                        std::string("no value assigned to variable '") + var_name(v) + "'");
    std::complex<double> acc = 0.0;
    for (const auto& [e, c] : terms_) {
        std::complex<double> term = c.to_double();
        for (int i = 0; i < kVarCount; ++i) {
            if (e[i] == 0) continue;
            std::complex<double> base = *point[i], p = 1.0;
            uint32_t k = e[i];
            while (k) {
                if (k & 1) p *= base;
                base *= base;
                k >>= 1;
            }
            term *= p;
        }
        acc += term;
    }
    return acc;
}

std::string SparsePoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Descending grlex order reads naturally: largest terms first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        bool has_vars = e != Exponents{};
        bool coeff_shown = !mag.is_one() || !has_vars;
        if (coeff_shown) os << mag.str();
        bool need_star = coeff_shown;
        for (int i = 0; i < kVarCount; ++i) {
            if (e[i] == 0) continue;
            if (need_star) os << "*";
            os << var_name(static_cast<Var>(i));
            if (e[i] > 1) os << "^" << e[i];
            need_star = true;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const SparsePoly& p) { return os << p.str(); }

// --- parser ----------------------------------------------------------------

namespace {

struct Parser {
    const std::string& s;
    size_t i = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return s[i];
    }
    [[noreturn]] void fail(const std::string& what) {
        throw Error("exactalg", "parse_error", what + " at position " + std::to_string(i));
    }

    mpz_class read_integer() {
        skip_ws();
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) fail("expected digits");
        return mpz_class(s.substr(start, i - start));
    }

    uint32_t read_posint(const char* what) {
        mpz_class n = read_integer();
        if (n <= 0 || !n.fits_uint_p()) fail(std::string("expected positive integer ") + what);
        return static_cast<uint32_t>(n.get_ui());
    }

    // term = coeff? ('*'? var ('^' posint)?)*
    SparsePoly read_term() {
        skip_ws();
        Rational coeff(1);
        bool saw_anything = false;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            mpz_class num = read_integer();
            mpz_class den(1);
            skip_ws();
            if (i < s.size() && s[i] == '/') {
                ++i;
                den = read_integer();
                if (den == 0) fail("zero denominator");
            }
            coeff = Rational(num, den);
            saw_anything = true;
        }
        Exponents e{};
        while (true) {
            skip_ws();
            if (i < s.size() && s[i] == '*') {
                ++i;
                skip_ws();
            }
            if (i >= s.size()) break;
            char c = s[i];
            if (!std::isalpha(static_cast<unsigned char>(c))) break;
            auto v = var_from_char(c);
            if (!v) fail(std::string("unknown variable '") + c + "'");
            ++i;
            uint32_t p = 1;
            skip_ws();
            if (i < s.size() && s[i] == '^') {
                ++i;
                p = read_posint("exponent");
            }
            e[static_cast<int>(*v)] += p;
            saw_anything = true;
        }
        if (!saw_anything) fail("expected term");
        return SparsePoly::monomial(e, coeff);
    }
};

}  // namespace

SparsePoly poly_parse(const std::string& text) {
    Parser p(text);
    if (p.eof()) p.fail("empty polynomial");
    SparsePoly acc;
    bool negate = false;
    if (p.peek() == '+' || p.peek() == '-') {
        negate = p.peek() == '-';
        ++p.i;
    }
    while (true) {
        SparsePoly term = p.read_term();
        acc += negate ? -term : term;
        if (p.eof()) break;
        char c = p.peek();
        if (c == '+') {
            negate = false;
            ++p.i;
        } else if (c == '-') {
            negate = true;
            ++p.i;
        } else {
            p.fail(std::string("unexpected character '") + c + "'");
        }
    }
    return acc;
}

// --- division / arith dispatch ----------------------------------------------

bool try_exact_div(const SparsePoly& p, const SparsePoly& q, SparsePoly& quotient) {
    if (q.is_zero()) throw Error("exactalg", "division_by_zero", "polynomial division by zero");
    SparsePoly r = p, result;
    while (!r.is_zero()) {
        const Exponents& er = r.leading_exponents();
        const Exponents& eq = q.leading_exponents();
        Exponents diff;
        for (int i = 0; i < kVarCount; ++i) {
            if (er[i] < eq[i]) {
                quotient = r;  // carries the remainder on failure
                return false;
            }
            diff[i] = er[i] - eq[i];
        }
        Rational c = r.leading_coeff_grlex() / q.leading_coeff_grlex();
        SparsePoly t = SparsePoly::monomial(diff, c);
        result += t;
        r -= t * q;
    }
    quotient = result;
    return true;
}

SparsePoly exact_div(const SparsePoly& p, const SparsePoly& q) {
    SparsePoly out;
    if (!try_exact_div(p, q, out))
        throw Error("exactalg", "not_divisible",
                    "not divisible; remainder begins with " + out.str().substr(0, 120));
    return out;
}

SparsePoly poly_arith(ArithOp op, const SparsePoly& p, const SparsePoly& q) {
    switch (op) {
        case ArithOp::add: return p + q;
        case ArithOp::sub: return p - q;
        case ArithOp::mul: return p * q;
        case ArithOp::exact_div: return exact_div(p, q);
    }
    throw Error("exactalg", "bad_op", "unknown arithmetic op");
}

// --- substitutions -----------------------------------------------------------

SparsePoly dilate(const SparsePoly& p) {
    if (!p.uses_only({Var::z, Var::w}))
        throw Error("exactalg", "bad_dilation", "dilation input must involve only z and w");
    SparsePoly r;
    for (const auto& [e, c] : p.terms()) {
        Exponents d = e;
        d[static_cast<int>(Var::a)] = e[static_cast<int>(Var::z)];
        d[static_cast<int>(Var::b)] = e[static_cast<int>(Var::w)];
        r.add_term(d, c);
    }
    return r;
}

SparsePoly dilate_eval_at(const SparsePoly& p, const Rational& z0, const Rational& w0) {
    SparsePoly r;
    for (const auto& [e, c] : p.terms()) {
        uint32_t iz = e[static_cast<int>(Var::z)], iw = e[static_cast<int>(Var::w)];
        Exponents d{};
        d[static_cast<int>(Var::a)] = iz;
        d[static_cast<int>(Var::b)] = iw;
        r.add_term(d, c * z0.pow(iz) * w0.pow(iw));
    }
    return r;
}

SparsePoly reciprocal_dilate_eval(const SparsePoly& q, const Rational& z0, const Rational& w0) {
    const uint32_t dz = static_cast<uint32_t>(std::max<int64_t>(q.degree(Var::z), 0));
    const uint32_t dw = static_cast<uint32_t>(std::max<int64_t>(q.degree(Var::w), 0));
    SparsePoly r;
    for (const auto& [e, c] : q.terms()) {
        uint32_t iz = e[static_cast<int>(Var::z)], iw = e[static_cast<int>(Var::w)];
        Exponents d{};
        d[static_cast<int>(Var::a)] = dz - iz;
        d[static_cast<int>(Var::b)] = dw - iw;
        r.add_term(d, c * z0.pow(iz) * w0.pow(iw));
    }
    return r;
}

SparsePoly invert_ab(const SparsePoly& p) {
    const uint32_t da = static_cast<uint32_t>(std::max<int64_t>(p.degree(Var::a), 0));
    const uint32_t db = static_cast<uint32_t>(std::max<int64_t>(p.degree(Var::b), 0));
    SparsePoly r;
    for (const auto& [e, c] : p.terms()) {
        Exponents d = e;
        d[static_cast<int>(Var::a)] = da - e[static_cast<int>(Var::a)];
        d[static_cast<int>(Var::b)] = db - e[static_cast<int>(Var::b)];
        r.add_term(d, c);
    }
    return r;
}

SparsePoly rename_vars(const SparsePoly& p, const std::array<Var, kVarCount>& mapping) {
    SparsePoly r;
    for (const auto& [e, c] : p.terms()) {
        Exponents d{};
        for (int i = 0; i < kVarCount; ++i) d[static_cast<int>(mapping[i])] += e[i];
        r.add_term(d, c);
    }
    return r;
}

SparsePoly wronskian(const SparsePoly& dilated_p, const SparsePoly& q) {
    return dilated_p.derivative(Var::z) * q.derivative(Var::w) -
           dilated_p.derivative(Var::w) * q.derivative(Var::z);
}

// --- canonical unit -----------------------------------------------------------

Rational canonical_unit_scale(const SparsePoly& p) {
    if (p.is_zero()) return Rational(1);
    mpz_class den_lcm(1), num_gcd(0);
    for (const auto& [e, c] : p.terms()) {
        mpz_class l;
        mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
        den_lcm = l;
    }
    for (const auto& [e, c] : p.terms()) {
        mpz_class scaled = c.num() * (den_lcm / c.den());
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
        num_gcd = g;
    }
    Rational scale(den_lcm, num_gcd);
    if (p.leading_coeff_grlex().sign() < 0) scale = -scale;
    return scale;
}

SparsePoly canonical_unit(const SparsePoly& p) {
    if (p.is_zero()) return p;
    return p.scaled(canonical_unit_scale(p));
}

}  // namespace logfront
