#ifndef MAPPELL_CHARLIER_HPP
#define MAPPELL_CHARLIER_HPP

#include "mappell/series.hpp"

namespace mappell {

/// Weight parameters a_1..a_r. Algebraic identities accept any nonzero
/// rationals; positivity matters only to the orthogonality layer.
struct CharlierParams
{
    std::vector<Rational> a;

    unsigned arity() const { return static_cast<unsigned>(a.size()); }
};

/// Exact-equality verdict carrying the offending residual on failure.
struct IdentityWitness
{
    bool ok = true;
    FFPoly residual = FFPoly::zero(Rational(1));
    std::string note;
};

/// C_n(x) = sum_{k <= n} prod_i C(n_i,k_i)(-a_i)^{n_i-k_i} x^(|k|,1);
/// monic of degree |n|.
FFPoly charlier_explicit(const MultiIndex &n, const CharlierParams &params);

/// Same polynomial extracted from the truncated generating series
/// exp(-sum a_i t_i)(1 + sum t_i)^x; requires order >= |n|.
FFPoly charlier_genfunc(const MultiIndex &n, const CharlierParams &params, unsigned order);

/// Difference rule: Delta C_n = sum_i n_i C_{n-e_i}.
IdentityWitness verify_difference_rule(const MultiIndex &n, const CharlierParams &params);

/// Inversion: x^(|n|,1) = sum_{k <= n} prod C(n_i,k_i) a_i^{n_i-k_i} C_k.
IdentityWitness inversion_formula(const MultiIndex &n, const CharlierParams &params);

/// Connection: C^{(b)}_n = sum_{k <= n} prod C(n_i,k_i)(a_i-b_i)^{k_i} C^{(a)}_{n-k}.
IdentityWitness connection_formula(const MultiIndex &n, const CharlierParams &from_params,
                                   const CharlierParams &to_params);

/// Addition: C^{(a)}_n(x+y) = sum_{k <= n} prod C(n_i,k_i)
/// C^{(alpha)}_k(x) C^{(a-alpha)}_{n-k}(y), checked as an exact bivariate
/// identity by matching coefficients of y^(j,1).
IdentityWitness addition_formula(const MultiIndex &n, const CharlierParams &params,
                                 const std::vector<Rational> &split);

/// Left-minus-right residuals of the three r=2 recurrence relations.
struct RecurrenceResiduals
{
    FFPoly rec1 = FFPoly::zero(Rational(1));
    FFPoly rec2 = FFPoly::zero(Rational(1));
    FFPoly rec3 = FFPoly::zero(Rational(1));

    bool all_zero() const { return rec1.is_zero() && rec2.is_zero() && rec3.is_zero(); }
};

RecurrenceResiduals recurrence_residuals(const MultiIndex &n, const CharlierParams &params);

/// Both differential relations of the generating series, compared term by
/// term on truncations of order N (indices |k| <= N-1); r = 2.
bool diff_relations_check(const CharlierParams &params, unsigned order);

/// C_{n,0} is the classical monic Charlier polynomial: independent of a_2 and
/// satisfying x C_n = C_{n+1} + (n+a_1) C_n + n a_1 C_{n-1}, for all n <= n1.
bool classical_charlier_check(unsigned n1, const CharlierParams &params);

} // namespace mappell

#endif
