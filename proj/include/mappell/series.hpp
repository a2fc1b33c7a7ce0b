#ifndef MAPPELL_SERIES_HPP
#define MAPPELL_SERIES_HPP

#include "mappell/ffpoly.hpp"
#include "mappell/multi_index.hpp"

#include <map>

namespace mappell {

class out_of_order_error : public std::out_of_range
{
public:
    using std::out_of_range::out_of_range;
};

class degenerate_seed_error : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// Truncated power series in r formal variables t_1..t_r with FFPoly
/// coefficients, truncated by total degree |k| <= order. Absent indices are
/// zero; all coefficients share one omega.
class MultiSeries
{
public:
    MultiSeries(unsigned arity, unsigned order, Rational omega);

    unsigned arity() const { return arity_; }
    unsigned order() const { return order_; }
    const Rational &omega() const { return omega_; }

    const std::map<MultiIndex, FFPoly> &terms() const { return terms_; }

    /// Coefficient at k; zero polynomial when absent.
    FFPoly coeff(const MultiIndex &k) const;
    /// Throws out_of_order_error when |k| > order.
    void set_coeff(const MultiIndex &k, FFPoly value);

    /// Formal partial derivative with respect to t_axis; order drops by one.
    MultiSeries derivative(unsigned axis) const;
    /// Multiplication by the single variable t_axis (index shift).
    MultiSeries times_variable(unsigned axis) const;
    /// Every coefficient multiplied by p.
    MultiSeries times_poly(const FFPoly &p) const;
    /// Restriction to total degree <= new_order.
    MultiSeries truncated(unsigned new_order) const;

    friend MultiSeries operator+(const MultiSeries &a, const MultiSeries &b);
    friend MultiSeries operator-(const MultiSeries &a, const MultiSeries &b);
    friend MultiSeries operator*(const Rational &s, const MultiSeries &a);
    /// Cauchy product; result order is min of the operand orders.
    friend MultiSeries operator*(const MultiSeries &a, const MultiSeries &b);
    friend bool operator==(const MultiSeries &a, const MultiSeries &b);

private:
    static void require_compatible(const MultiSeries &a, const MultiSeries &b);

    unsigned arity_;
    unsigned order_;
    Rational omega_;
    std::map<MultiIndex, FFPoly> terms_;
};

/// Truncation of exp(sum_i c_i t_i): coefficient at k is prod c_i^{k_i}/k_i!.
MultiSeries series_exp_linear(const std::vector<Rational> &c, unsigned order,
                              const Rational &omega = Rational(1));

/// The binomial kernel (1 + omega(t_1+..+t_r))^{x/omega}: coefficient at k is
/// x^(|k|,omega) / prod k_i!.
MultiSeries series_newton_binomial(const Rational &omega, unsigned order, unsigned arity);

/// Series sum seed(n) t^n / prod n_i!; requires seed(0) != 0.
MultiSeries series_from_seed(const std::map<MultiIndex, Rational> &seed, const Rational &omega,
                             unsigned order, unsigned arity);

/// P_n = prod n_i! * coefficient(n), for all |n| <= order.
std::map<MultiIndex, FFPoly> extract_family(const MultiSeries &s);

/// Single member extraction; throws out_of_order_error beyond the truncation.
FFPoly extract_member(const MultiSeries &s, const MultiIndex &n);

} // namespace mappell

#endif
