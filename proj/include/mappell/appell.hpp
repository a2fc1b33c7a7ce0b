#ifndef MAPPELL_APPELL_HPP
#define MAPPELL_APPELL_HPP

#include "mappell/charlier.hpp"
#include "mappell/series.hpp"

#include <functional>

namespace mappell {

class not_appell_error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Coefficient array a_k of the prefactor series A(t); determines a
/// Delta_omega-Appell family uniquely. a_0 must be nonzero.
struct AppellSeed
{
    Rational omega;
    unsigned arity = 2;
    unsigned order = 10;
    std::map<MultiIndex, Rational> coeffs;

    /// Throws on omega = 0, a_0 = 0, or out-of-range indices.
    void validate() const;
    Rational coeff(const MultiIndex &k) const;
};

/// Lazily materialized table n -> P_n for a seed, built by the binomial-sum
/// construction. Indices beyond the seed order are refused.
class AppellFamily
{
public:
    explicit AppellFamily(AppellSeed seed);

    const AppellSeed &seed() const { return seed_; }
    unsigned arity() const { return seed_.arity; }
    unsigned order() const { return seed_.order; }

    /// P_n; throws out_of_order_error when |n| > order.
    const FFPoly &at(const MultiIndex &n) const;

private:
    AppellSeed seed_;
    mutable std::map<MultiIndex, FFPoly> table_;
};

/// Binomial-sum construction:
/// P_n = sum_{k <= n} prod C(n_i,k_i) a_{n-k} x^(|k|,omega).
AppellFamily build_via_c(const AppellSeed &seed);

/// Generating-series construction: extraction from
/// A(t)(1 + omega sum t_i)^{x/omega}, truncated at the seed order.
std::map<MultiIndex, FFPoly> build_via_b(const AppellSeed &seed);

/// Difference-power construction:
/// P_n = sum_{k <= n} prod C(n_i,k_i) (|n|-|k|)!/|n|! a_k Delta^{|k|} x^(|n|,omega).
std::map<MultiIndex, FFPoly> build_via_e(const AppellSeed &seed);

/// The Charlier seed a_k = prod (-a_i)^{k_i} at omega = 1.
AppellSeed charlier_seed(const CharlierParams &params, unsigned order);

struct AppellVerdict
{
    bool ok = true;
    std::vector<std::pair<MultiIndex, FFPoly>> failures;
};

/// An arbitrary family table n -> P_n, for checks and extraction that must
/// also accept non-seed-driven (possibly corrupted) input.
using FamilyFn = std::function<FFPoly(const MultiIndex &)>;

/// Defining relation Delta_omega P_n = sum_j n_j P_{n-e_j}, swept over
/// |n| <= max_total_degree.
AppellVerdict check_appell_property(const AppellFamily &family, unsigned max_total_degree);
AppellVerdict check_appell_property(const FamilyFn &family, const Rational &omega, unsigned arity,
                                    unsigned max_total_degree);

/// Addition formula P_n(x+y) = sum_{k <= n} prod C(n_i,k_i) P_{n-k}(x)
/// y^(|k|,omega), as an exact bivariate identity.
AppellVerdict check_addition_formula(const AppellFamily &family, unsigned max_total_degree);

/// Inverse of the binomial-sum construction; a_n is the constant FF
/// coefficient of P_n. Throws not_appell_error when the family fails the
/// defining relation.
AppellSeed recover_seed(const AppellFamily &family);

} // namespace mappell

#endif
