#include "mappell/charlier.hpp"

namespace mappell {

namespace {

const Rational kOne(1);

void require_arity(const MultiIndex &n, const CharlierParams &params)
{
    if (n.arity() != params.arity()) {
        throw std::invalid_argument("multi-index arity does not match parameter arity");
    }
}

Rational product_binomials(const MultiIndex &n, const MultiIndex &k)
{
    Rational b = 1;
    for (unsigned i = 0; i < n.arity(); ++i) {
        b *= Rational(binomial(n[i], k[i]));
    }
    return b;
}

/// C_{n-e_i} with the convention that a negative component index is zero.
FFPoly charlier_or_zero(const MultiIndex &n, unsigned axis, const CharlierParams &params)
{
    if (n[axis] == 0) {
        return FFPoly::zero(kOne);
    }
    return charlier_explicit(n.decremented(axis), params);
}

} // namespace

FFPoly charlier_explicit(const MultiIndex &n, const CharlierParams &params)
{
    require_arity(n, params);
    FFPoly p = FFPoly::zero(kOne);
    for_each_below(n, [&](const MultiIndex &k) {
        Rational c = product_binomials(n, k);
        for (unsigned i = 0; i < n.arity(); ++i) {
            c *= pow_rational(-params.a[i], n[i] - k[i]);
        }
        p = p + c * FFPoly::basis(k.total(), kOne);
    });
    return p;
}

FFPoly charlier_genfunc(const MultiIndex &n, const CharlierParams &params, unsigned order)
{
    require_arity(n, params);
    if (order < n.total()) {
        throw out_of_order_error("series order " + std::to_string(order) +
                                 " below requested index total " + std::to_string(n.total()));
    }
    std::vector<Rational> c;
    for (const auto &ai : params.a) {
        c.push_back(-ai);
    }
    const MultiSeries g =
        series_exp_linear(c, order) * series_newton_binomial(kOne, order, params.arity());
    return extract_member(g, n);
}

IdentityWitness verify_difference_rule(const MultiIndex &n, const CharlierParams &params)
{
    FFPoly rhs = FFPoly::zero(kOne);
    for (unsigned i = 0; i < n.arity(); ++i) {
        rhs = rhs + Rational(n[i]) * charlier_or_zero(n, i, params);
    }
    const FFPoly residual = charlier_explicit(n, params).delta() - rhs;
    return {residual.is_zero(), residual, "difference rule at " + n.to_string()};
}

IdentityWitness inversion_formula(const MultiIndex &n, const CharlierParams &params)
{
    FFPoly rhs = FFPoly::zero(kOne);
    for_each_below(n, [&](const MultiIndex &k) {
        Rational c = product_binomials(n, k);
        for (unsigned i = 0; i < n.arity(); ++i) {
            c *= pow_rational(params.a[i], n[i] - k[i]);
        }
        rhs = rhs + c * charlier_explicit(k, params);
    });
    const FFPoly residual = FFPoly::basis(n.total(), kOne) - rhs;
    return {residual.is_zero(), residual, "inversion formula at " + n.to_string()};
}

IdentityWitness connection_formula(const MultiIndex &n, const CharlierParams &from_params,
                                   const CharlierParams &to_params)
{
    require_arity(n, from_params);
    require_arity(n, to_params);
    FFPoly rhs = FFPoly::zero(kOne);
    for_each_below(n, [&](const MultiIndex &k) {
        Rational c = product_binomials(n, k);
        for (unsigned i = 0; i < n.arity(); ++i) {
            c *= pow_rational(from_params.a[i] - to_params.a[i], k[i]);
        }
        rhs = rhs + c * charlier_explicit(n.minus(k), from_params);
    });
    const FFPoly residual = charlier_explicit(n, to_params) - rhs;
    return {residual.is_zero(), residual, "connection formula at " + n.to_string()};
}

IdentityWitness addition_formula(const MultiIndex &n, const CharlierParams &params,
                                 const std::vector<Rational> &split)
{
    require_arity(n, params);
    if (split.size() != params.a.size()) {
        throw std::invalid_argument("split arity does not match parameter arity");
    }
    CharlierParams left{split};
    CharlierParams right;
    for (unsigned i = 0; i < params.arity(); ++i) {
        right.a.push_back(params.a[i] - split[i]);
    }
    // Left side as y-expansion coefficients q_j(x) of C_n(x+y).
    const auto lhs = charlier_explicit(n, params).shift_argument();
    // Right side grouped by the FF coefficient of C^{(a-alpha)}_{n-k}(y).
    std::vector<FFPoly> rhs(n.total() + 1, FFPoly::zero(kOne));
    for_each_below(n, [&](const MultiIndex &k) {
        const Rational c = product_binomials(n, k);
        const FFPoly px = charlier_explicit(k, left);
        const FFPoly py = charlier_explicit(n.minus(k), right);
        for (unsigned j = 0; j <= static_cast<unsigned>(std::max(0, py.degree())); ++j) {
            rhs[j] = rhs[j] + (c * py.coeff(j)) * px;
        }
    });
    for (unsigned j = 0; j <= n.total(); ++j) {
        const FFPoly residual = (j < lhs.size() ? lhs[j] : FFPoly::zero(kOne)) - rhs[j];
        if (!residual.is_zero()) {
            return {false, residual,
                    "addition formula at " + n.to_string() + ", y-degree " + std::to_string(j)};
        }
    }
    return {true, FFPoly::zero(kOne), "addition formula at " + n.to_string()};
}

RecurrenceResiduals recurrence_residuals(const MultiIndex &n, const CharlierParams &params)
{
    require_arity(n, params);
    if (n.arity() != 2) {
        throw std::invalid_argument("recurrence residuals require r = 2");
    }
    const Rational a1 = params.a[0], a2 = params.a[1];
    const Rational n1(n[0]), n2(n[1]);
    const FFPoly c = charlier_explicit(n, params);
    const FFPoly c_p1 = charlier_explicit(n.incremented(0), params);
    const FFPoly c_p2 = charlier_explicit(n.incremented(1), params);
    const FFPoly c_m1 = charlier_or_zero(n, 0, params);
    const FFPoly c_m2 = charlier_or_zero(n, 1, params);
    const FFPoly c_mm = (n[0] > 0 && n[1] > 0)
                            ? charlier_explicit(n.decremented(0).decremented(1), params)
                            : FFPoly::zero(kOne);
    const FFPoly x = FFPoly::basis(1, kOne);

    RecurrenceResiduals res;
    res.rec1 = (a2 - a1) * c - (c_p1 - c_p2);
    // The second relation is obtained from the nearest-neighbor one by
    // eliminating C_{n1-1,n2} through the parameter-difference relation at
    // (n1-1,n2-1); that step needs n2 >= 1.  At n2 = 0 it degenerates to the
    // nearest-neighbor relation itself, which is what we check there.
    if (n[1] == 0) {
        res.rec2 = x * c - (c_p1 + (a1 + n1) * c + (a1 * n1) * c_m1);
    } else {
        res.rec2 = x * c - (c_p1 + (a1 + n1 + n2) * c + (a1 * n1 + a2 * n2) * c_m2 +
                            (a1 * n1 * (a1 - a2)) * c_mm);
    }
    res.rec3 = x * c - (c_p1 + (a1 + n1 + n2) * c + (a1 * n1) * c_m1 + (a2 * n2) * c_m2);
    return res;
}

bool diff_relations_check(const CharlierParams &params, unsigned order)
{
    if (params.arity() != 2) {
        throw std::invalid_argument("differential relations require r = 2");
    }
    if (order == 0) {
        return true;
    }
    const Rational a1 = params.a[0], a2 = params.a[1];
    const MultiSeries g = series_exp_linear({-a1, -a2}, order) * series_newton_binomial(kOne, order, 2);
    const MultiSeries d1 = g.derivative(0);
    const MultiSeries d2 = g.derivative(1);
    const unsigned cmp = order - 1;

    const MultiSeries rel1 = (d1 - d2 - (a2 - a1) * g.truncated(cmp)).truncated(cmp);
    if (!(rel1 == MultiSeries(2, cmp, kOne))) {
        return false;
    }

    // (1 + t1 + t2) dG/dt1 = (x - a1(1 + t1 + t2)) G, compared to order - 1.
    const MultiSeries lhs =
        (d1 + d1.times_variable(0) + d1.times_variable(1)).truncated(cmp);
    const MultiSeries xg = g.times_poly(FFPoly::basis(1, kOne));
    const MultiSeries rhs =
        (xg - a1 * (g + g.times_variable(0) + g.times_variable(1))).truncated(cmp);
    return lhs == rhs;
}

bool classical_charlier_check(unsigned n1, const CharlierParams &params)
{
    if (params.arity() != 2) {
        throw std::invalid_argument("classical reduction requires r = 2");
    }
    const Rational a1 = params.a[0];
    CharlierParams other{{a1, params.a[1] + 1}};
    const FFPoly x = FFPoly::basis(1, kOne);
    for (unsigned n = 0; n <= n1; ++n) {
        const MultiIndex idx({n, 0u});
        const FFPoly cn = charlier_explicit(idx, params);
        if (!(cn == charlier_explicit(idx, other))) {
            return false;
        }
        const FFPoly cnext = charlier_explicit(idx.incremented(0), params);
        const FFPoly cprev =
            n > 0 ? charlier_explicit(idx.decremented(0), params) : FFPoly::zero(kOne);
        const FFPoly residual = x * cn - (cnext + (Rational(n) + a1) * cn + (Rational(n) * a1) * cprev);
        if (!residual.is_zero()) {
            return false;
        }
    }
    return true;
}

} // namespace mappell
