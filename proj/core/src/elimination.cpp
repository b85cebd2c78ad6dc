#include "logfront/elimination.hpp"

#include <algorithm>

#include "logfront/error.hpp"

namespace logfront {

std::vector<SparsePoly> coefficients_in(const SparsePoly& p, Var v) {
    std::vector<SparsePoly> out;
    const int iv = static_cast<int>(v);
    for (const auto& [e, c] : p.terms()) {
        uint32_t k = e[iv];
        if (out.size() <= k) out.resize(k + 1);
        Exponents stripped = e;
        stripped[iv] = 0;
        out[k].add_term(stripped, c);
    }
    return out;
}

SparsePoly from_coefficients(const std::vector<SparsePoly>& coeffs, Var v) {
    SparsePoly r;
    const int iv = static_cast<int>(v);
    for (size_t k = 0; k < coeffs.size(); ++k) {
        for (const auto& [e, c] : coeffs[k].terms()) {
            Exponents d = e;
            d[iv] += static_cast<uint32_t>(k);
            r.add_term(d, c);
        }
    }
    return r;
}

SparsePoly leading_coeff_in(const SparsePoly& p, Var v) {
    if (p.is_zero()) return SparsePoly::zero();
    const int iv = static_cast<int>(v);
    const uint32_t d = static_cast<uint32_t>(p.degree(v));
    SparsePoly lc;
    for (const auto& [e, c] : p.terms()) {
        if (e[iv] != d) continue;
        Exponents stripped = e;
        stripped[iv] = 0;
        lc.add_term(stripped, c);
    }
    return lc;
}

SparsePoly pseudo_remainder(const SparsePoly& A, const SparsePoly& B, Var v) {
    int64_t da = A.degree(v), db = B.degree(v);
    if (B.is_zero()) throw Error("exactalg", "division_by_zero", "pseudo-division by zero");
    if (da < db) throw Error("exactalg", "bad_prem", "pseudo-division needs deg A >= deg B");
    SparsePoly lcB = leading_coeff_in(B, v);
    SparsePoly R = A;
    int64_t e = da - db + 1;
    while (!R.is_zero() && R.degree(v) >= db) {
        SparsePoly lcR = leading_coeff_in(R, v);
        SparsePoly shift = SparsePoly::variable(v, static_cast<uint32_t>(R.degree(v) - db));
        R = lcB * R - lcR * shift * B;
        --e;
    }
    // prem is defined with the full lc(B)^(da-db+1) multiplier.
    while (e-- > 0) R = lcB * R;
    return R;
}

namespace {

// res(A, B) where both are treated as univariate in v over the polynomial
// ring in the remaining variables. Uses the reduction
//   lc(B)^((a-b+1)*b) * res(B, A) = lc(B)^(a-s) * res(B, prem(A,B))
// (a = deg A, b = deg B, s = deg prem), so
//   res(B, A) = res(B, prem(A,B)) / lc(B)^((b-1)(a-b)+s),
// an exact division in the coefficient ring.
SparsePoly resultant_rec(const SparsePoly& A, const SparsePoly& B, Var v) {
    if (A.is_zero() || B.is_zero()) return SparsePoly::zero();
    int64_t a = A.degree(v), b = B.degree(v);
    if (a < b) {
        SparsePoly r = resultant_rec(B, A, v);
        return ((a * b) % 2 != 0) ? -r : r;
    }
    if (b == 0) {
        // B is v-free: res = B^a (res of two v-free polynomials is 1).
        return a == 0 ? SparsePoly::one() : B.pow(static_cast<uint32_t>(a));
    }
    SparsePoly R = pseudo_remainder(A, B, v);
    if (R.is_zero()) return SparsePoly::zero();
    int64_t s = R.degree(v);
    SparsePoly sub = resultant_rec(B, R, v);
    int64_t e = (b - 1) * (a - b) + s;
    if (e > 0) {
        SparsePoly lcB = leading_coeff_in(B, v);
        sub = exact_div(sub, lcB.pow(static_cast<uint32_t>(e)));
    }
    return ((a * b) % 2 != 0) ? -sub : sub;
}

}  // namespace

SparsePoly resultant(const SparsePoly& p, const SparsePoly& q, Var v) {
    if (p.degree(v) <= 0 && q.degree(v) <= 0)
        throw Error("exactalg", "resultant_constant_inputs",
                    std::string("both inputs constant in ") + var_name(v));
    return resultant_rec(p, q, v);
}

SparsePoly resultant_sylvester(const SparsePoly& p, const SparsePoly& q, Var v) {
    if (p.degree(v) <= 0 && q.degree(v) <= 0)
        throw Error("exactalg", "resultant_constant_inputs",
                    std::string("both inputs constant in ") + var_name(v));
    if (p.is_zero() || q.is_zero()) return SparsePoly::zero();
    const int64_t m = std::max<int64_t>(p.degree(v), 0);
    const int64_t n = std::max<int64_t>(q.degree(v), 0);
    if (n == 0) return q.pow(static_cast<uint32_t>(m));
    if (m == 0) return p.pow(static_cast<uint32_t>(n));

    auto pc = coefficients_in(p, v);  // pc[k] multiplies v^k
    auto qc = coefficients_in(q, v);
    const int64_t N = m + n;
    std::vector<std::vector<SparsePoly>> M(N, std::vector<SparsePoly>(N));
    for (int64_t r = 0; r < n; ++r)
        for (int64_t k = 0; k <= m; ++k) M[r][r + m - k] = pc[k];
    for (int64_t r = 0; r < m; ++r)
        for (int64_t k = 0; k <= n; ++k) M[n + r][r + n - k] = qc[k];

    // Bareiss fraction-free elimination with row pivoting; divisions are exact.
    SparsePoly prev = SparsePoly::one();
    int sign = 1;
    for (int64_t k = 0; k + 1 < N; ++k) {
        if (M[k][k].is_zero()) {
            int64_t r = k + 1;
            while (r < N && M[r][k].is_zero()) ++r;
            if (r == N) return SparsePoly::zero();
            std::swap(M[k], M[r]);
            sign = -sign;
        }
        for (int64_t i = k + 1; i < N; ++i) {
            for (int64_t j = k + 1; j < N; ++j) {
                SparsePoly num = M[i][j] * M[k][k] - M[i][k] * M[k][j];
                M[i][j] = num.is_zero() ? SparsePoly::zero() : exact_div(num, prev);
            }
            M[i][k] = SparsePoly::zero();
        }
        prev = M[k][k];
    }
    SparsePoly det = M[N - 1][N - 1];
    return sign < 0 ? -det : det;
}

// --- gcd ------------------------------------------------------------------

namespace {

// Scalar rescale keeps intermediate coefficients small without touching the
// polynomial's unit class.
SparsePoly scalar_reduce(const SparsePoly& p) { return canonical_unit(p); }

}  // namespace

SparsePoly content_in(const SparsePoly& p, Var v) {
    auto coeffs = coefficients_in(p, v);
    SparsePoly g;
    for (const auto& c : coeffs) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? canonical_unit(c) : poly_gcd(g, c);
        if (g.is_constant()) break;
    }
    return g.is_zero() ? SparsePoly::zero() : g;
}

SparsePoly primitive_part_in(const SparsePoly& p, Var v) {
    if (p.is_zero()) return p;
    return exact_div(p, content_in(p, v));
}

SparsePoly poly_gcd(const SparsePoly& p, const SparsePoly& q) {
    if (p.is_zero()) return canonical_unit(q);
    if (q.is_zero()) return canonical_unit(p);
    if (p.is_constant() || q.is_constant()) return SparsePoly::one();

    // Main variable: active in both, smallest max-degree. If the active sets
    // are disjoint the gcd cannot involve the variable, so recurse on the
    // content.
    Var best{};
    int64_t best_score = -1;
    for (int i = 0; i < kVarCount; ++i) {
        Var v = static_cast<Var>(i);
        int64_t dp = p.degree(v), dq = q.degree(v);
        if (dp > 0 && dq > 0) {
            int64_t score = std::max(dp, dq);
            if (best_score < 0 || score < best_score) {
                best_score = score;
                best = v;
            }
        }
    }
    if (best_score < 0) {
        for (Var v : p.active_vars()) return poly_gcd(content_in(p, v), q);
        return SparsePoly::one();  // p constant, handled above; defensive
    }

    Var v = best;
    SparsePoly cp = content_in(p, v), cq = content_in(q, v);
    SparsePoly cg = poly_gcd(cp, cq);
    SparsePoly A = exact_div(p, cp), B = exact_div(q, cq);
    if (A.degree(v) < B.degree(v)) std::swap(A, B);
    while (!B.is_zero()) {
        SparsePoly R = pseudo_remainder(A, B, v);
        A = B;
        if (R.is_zero()) {
            B = SparsePoly::zero();
        } else if (R.degree(v) == 0) {
            // v-free remainder: the primitive gcd in v is trivial.
            A = SparsePoly::one();
            B = SparsePoly::zero();
        } else {
            B = scalar_reduce(primitive_part_in(R, v));
        }
    }
    return canonical_unit(cg * A);
}

// --- square-free decomposition ----------------------------------------------

SquarefreeDecomposition squarefree_decomposition(const SparsePoly& p, Var v) {
    if (p.is_zero()) throw Error("exactalg", "zero_polynomial", "square-free decomposition of zero");
    SquarefreeDecomposition out;
    if (p.degree(v) <= 0) {
        out.content = p;
        return out;
    }
    SparsePoly cont = content_in(p, v);
    SparsePoly A = exact_div(p, cont);

    // Yun's chain.
    SparsePoly Ad = A.derivative(v);
    SparsePoly g = poly_gcd(A, Ad);
    SparsePoly c = exact_div(A, g);
    SparsePoly d = exact_div(Ad, g) - c.derivative(v);
    int i = 1;
    while (c.degree(v) > 0) {
        SparsePoly f = poly_gcd(c, d);
        if (f.degree(v) > 0) out.factors.emplace_back(canonical_unit(f), i);
        c = exact_div(c, f);
        d = exact_div(d, f) - c.derivative(v);
        ++i;
    }

    // Recover the exact cofactor so that content * prod f^m == p identically.
    SparsePoly prod = SparsePoly::one();
    for (const auto& [f, mult] : out.factors) prod *= f.pow(static_cast<uint32_t>(mult));
    out.content = exact_div(p, prod);
    return out;
}

// --- Sturm -------------------------------------------------------------------

namespace {

// Remainder of univariate division over Q (field arithmetic, true remainder).
SparsePoly univariate_remainder(const SparsePoly& A, const SparsePoly& B, Var v) {
    SparsePoly R = A;
    const int64_t db = B.degree(v);
    const SparsePoly lcB = leading_coeff_in(B, v);
    const Rational lb = lcB.constant_value();
    while (!R.is_zero() && R.degree(v) >= db) {
        Rational lr = leading_coeff_in(R, v).constant_value();
        SparsePoly t = SparsePoly::variable(v, static_cast<uint32_t>(R.degree(v) - db))
                           .scaled(lr / lb);
        R -= t * B;
    }
    return R;
}

int sign_at_infinity(const SparsePoly& p, Var v, bool positive_end) {
    Rational lc = leading_coeff_in(p, v).constant_value();
    int s = lc.sign();
    if (!positive_end && (p.degree(v) % 2 != 0)) s = -s;
    return s;
}

}  // namespace

int sturm_real_roots(const SparsePoly& p) {
    if (p.is_zero()) throw Error("exactalg", "zero_polynomial", "Sturm count of zero polynomial");
    auto vars = p.active_vars();
    if (vars.size() > 1)
        throw Error("exactalg", "not_univariate", "Sturm count needs a univariate polynomial");
    if (vars.empty()) return 0;
    Var v = vars[0];
    if (p.degree(v) == 0) return 0;

    std::vector<SparsePoly> chain;
    chain.push_back(p);
    chain.push_back(p.derivative(v));
    while (!chain.back().is_zero()) {
        const SparsePoly& A = chain[chain.size() - 2];
        const SparsePoly& B = chain.back();
        if (B.degree(v) <= 0) break;
        SparsePoly R = univariate_remainder(A, B, v);
        if (R.is_zero()) break;
        SparsePoly next = -R;
        // Positive rescale keeps coefficients small and the sign pattern intact.
        chain.push_back(next.scaled(canonical_unit_scale(next).abs()));
    }

    auto variations = [&](bool positive_end) {
        int count = 0, prev = 0;
        for (const auto& q : chain) {
            if (q.is_zero()) continue;
            int s = q.degree(v) <= 0 ? q.constant_value().sign() : sign_at_infinity(q, v, positive_end);
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++count;
            prev = s;
        }
        return count;
    };
    return variations(false) - variations(true);
}

}  // namespace logfront
