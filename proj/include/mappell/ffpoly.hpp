#ifndef MAPPELL_FFPOLY_HPP
#define MAPPELL_FFPOLY_HPP

#include "mappell/rational.hpp"

#include <span>
#include <string>
#include <vector>

namespace mappell {

/// Mixing polynomials with different steps omega, or a monomial-basis value
/// where a falling-factorial one is required.
class basis_mismatch_error : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

class invalid_step_error : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

class degree_cap_error : public std::length_error
{
public:
    using std::length_error::length_error;
};

/// Univariate polynomial sum_k c_k x^(k,omega) in the generalized
/// falling-factorial basis x^(k,omega) = x(x-omega)...(x-(k-1)omega).
///
/// Values are immutable after construction. The zero polynomial carries an
/// empty coefficient sequence; nonzero values are canonical (trailing
/// coefficient nonzero).
class FFPoly
{
public:
    /// Throws invalid_step_error when omega == 0.
    FFPoly(Rational omega, std::vector<Rational> coeffs);

    static FFPoly zero(const Rational &omega);
    static FFPoly constant(const Rational &omega, const Rational &c);
    /// The basis element x^(n,omega); n = 0 is the constant 1.
    static FFPoly basis(unsigned n, const Rational &omega);

    const Rational &omega() const { return omega_; }
    std::span<const Rational> coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    /// c_k, zero beyond the stored degree.
    Rational coeff(unsigned k) const;

    Rational eval(const Rational &x) const;

    /// Monomial-basis coefficients m_0..m_d with sum_j m_j x^j identical to *this.
    std::vector<Rational> to_monomial() const;
    static FFPoly from_monomial(std::span<const Rational> monomial, const Rational &omega);

    /// Forward difference (f(x+omega) - f(x)) / omega, in the same basis.
    FFPoly delta() const;
    /// k-fold forward difference; k = 0 is the identity.
    FFPoly delta_power(unsigned k) const;

    /// Coefficients q_j of the expansion p(x+y) = sum_j q_j(x) y^(j,omega),
    /// returned for j = 0..deg(p). Equals delta^j p / j!.
    std::vector<FFPoly> shift_argument() const;

    FFPoly operator-() const;
    friend FFPoly operator+(const FFPoly &a, const FFPoly &b);
    friend FFPoly operator-(const FFPoly &a, const FFPoly &b);
    /// Exact product via the linearization
    /// x^(m,w) x^(n,w) = sum_k C(m,k) C(n,k) k! w^k x^(m+n-k,w).
    friend FFPoly operator*(const FFPoly &a, const FFPoly &b);
    friend FFPoly operator*(const Rational &s, const FFPoly &p);

    /// Zero polynomials compare equal regardless of omega.
    friend bool operator==(const FFPoly &a, const FFPoly &b);

    std::string to_string() const;

    /// Guard against runaway exact-coefficient growth. Default 64.
    static unsigned degree_cap();
    static void set_degree_cap(unsigned cap);

private:
    void trim();
    static void require_same_omega(const FFPoly &a, const FFPoly &b);

    Rational omega_;
    std::vector<Rational> coeffs_;
};

} // namespace mappell

#endif
