#include "mappell/appell.hpp"

namespace mappell {

void AppellSeed::validate() const
{
    if (omega == 0) {
        throw invalid_step_error("seed step omega must be nonzero");
    }
    if (arity == 0) {
        throw std::invalid_argument("seed arity must be at least 1");
    }
    const auto it = coeffs.find(MultiIndex::zero(arity));
    if (it == coeffs.end() || it->second == 0) {
        throw degenerate_seed_error("seed coefficient at the zero index must be nonzero");
    }
    for (const auto &[k, v] : coeffs) {
        if (k.arity() != arity) {
            throw std::invalid_argument("seed index arity mismatch at " + k.to_string());
        }
        if (k.total() > order) {
            throw out_of_order_error("seed index " + k.to_string() + " beyond order " +
                                     std::to_string(order));
        }
    }
}

Rational AppellSeed::coeff(const MultiIndex &k) const
{
    const auto it = coeffs.find(k);
    return it == coeffs.end() ? Rational(0) : it->second;
}

AppellFamily::AppellFamily(AppellSeed seed) : seed_(std::move(seed))
{
    seed_.validate();
}

const FFPoly &AppellFamily::at(const MultiIndex &n) const
{
    if (n.arity() != seed_.arity) {
        throw std::invalid_argument("index arity does not match family arity");
    }
    if (n.total() > seed_.order) {
        throw out_of_order_error("family index " + n.to_string() + " beyond seed order " +
                                 std::to_string(seed_.order));
    }
    const auto it = table_.find(n);
    if (it != table_.end()) {
        return it->second;
    }
    FFPoly p = FFPoly::zero(seed_.omega);
    for_each_below(n, [&](const MultiIndex &k) {
        Rational c = seed_.coeff(n.minus(k));
        if (c == 0) {
            return;
        }
        for (unsigned i = 0; i < n.arity(); ++i) {
            c *= Rational(binomial(n[i], k[i]));
        }
        p = p + c * FFPoly::basis(k.total(), seed_.omega);
    });
    return table_.emplace(n, std::move(p)).first->second;
}

AppellFamily build_via_c(const AppellSeed &seed)
{
    return AppellFamily(seed);
}

std::map<MultiIndex, FFPoly> build_via_b(const AppellSeed &seed)
{
    seed.validate();
    const MultiSeries s = series_from_seed(seed.coeffs, seed.omega, seed.order, seed.arity) *
                          series_newton_binomial(seed.omega, seed.order, seed.arity);
    return extract_family(s);
}

std::map<MultiIndex, FFPoly> build_via_e(const AppellSeed &seed)
{
    seed.validate();
    std::map<MultiIndex, FFPoly> fam;
    for_each_index(seed.arity, seed.order, [&](const MultiIndex &n) {
        const FFPoly top = FFPoly::basis(n.total(), seed.omega);
        const Integer total_fact = factorial(n.total());
        FFPoly p = FFPoly::zero(seed.omega);
        for_each_below(n, [&](const MultiIndex &k) {
            Rational c = seed.coeff(k);
            if (c == 0) {
                return;
            }
            for (unsigned i = 0; i < n.arity(); ++i) {
                c *= Rational(binomial(n[i], k[i]));
            }
            c *= Rational(factorial(n.total() - k.total()), total_fact);
            p = p + c * top.delta_power(k.total());
        });
        fam.insert_or_assign(n, std::move(p));
    });
    return fam;
}

AppellSeed charlier_seed(const CharlierParams &params, unsigned order)
{
    AppellSeed seed;
    seed.omega = 1;
    seed.arity = params.arity();
    seed.order = order;
    for_each_index(seed.arity, order, [&](const MultiIndex &k) {
        Rational c = 1;
        for (unsigned i = 0; i < seed.arity; ++i) {
            c *= pow_rational(-params.a[i], k[i]);
        }
        seed.coeffs.insert_or_assign(k, c);
    });
    return seed;
}

AppellVerdict check_appell_property(const AppellFamily &family, unsigned max_total_degree)
{
    return check_appell_property([&](const MultiIndex &n) { return family.at(n); },
                                 family.seed().omega, family.arity(), max_total_degree);
}

AppellVerdict check_appell_property(const FamilyFn &family, const Rational &omega, unsigned arity,
                                    unsigned max_total_degree)
{
    AppellVerdict verdict;
    for_each_index(arity, max_total_degree, [&](const MultiIndex &n) {
        FFPoly rhs = FFPoly::zero(omega);
        for (unsigned j = 0; j < arity; ++j) {
            if (n[j] > 0) {
                rhs = rhs + Rational(n[j]) * family(n.decremented(j));
            }
        }
        const FFPoly residual = family(n).delta() - rhs;
        if (!residual.is_zero()) {
            verdict.ok = false;
            verdict.failures.emplace_back(n, residual);
        }
    });
    return verdict;
}

AppellVerdict check_addition_formula(const AppellFamily &family, unsigned max_total_degree)
{
    AppellVerdict verdict;
    const Rational omega = family.seed().omega;
    for_each_index(family.arity(), max_total_degree, [&](const MultiIndex &n) {
        const auto lhs = family.at(n).shift_argument();
        // Coefficient of y^(j,omega): sum over |k| = j of prod C(n_i,k_i) P_{n-k}(x).
        std::vector<FFPoly> rhs(n.total() + 1, FFPoly::zero(omega));
        for_each_below(n, [&](const MultiIndex &k) {
            Rational c = 1;
            for (unsigned i = 0; i < n.arity(); ++i) {
                c *= Rational(binomial(n[i], k[i]));
            }
            rhs[k.total()] = rhs[k.total()] + c * family.at(n.minus(k));
        });
        for (unsigned j = 0; j <= n.total(); ++j) {
            const FFPoly residual =
                (j < lhs.size() ? lhs[j] : FFPoly::zero(omega)) - rhs[j];
            if (!residual.is_zero()) {
                verdict.ok = false;
                verdict.failures.emplace_back(n, residual);
            }
        }
    });
    return verdict;
}

AppellSeed recover_seed(const AppellFamily &family)
{
    const auto appell = check_appell_property(family, family.order());
    if (!appell.ok) {
        throw not_appell_error("family fails the defining difference relation at " +
                               appell.failures.front().first.to_string());
    }
    AppellSeed seed;
    seed.omega = family.seed().omega;
    seed.arity = family.arity();
    seed.order = family.order();
    // The k = 0 term of the binomial-sum construction isolates a_n as the
    // constant FF coefficient of P_n.
    for_each_index(seed.arity, seed.order, [&](const MultiIndex &n) {
        const Rational a = family.at(n).coeff(0);
        if (a != 0 || n.is_zero()) {
            seed.coeffs.insert_or_assign(n, a);
        }
    });
    return seed;
}

} // namespace mappell
