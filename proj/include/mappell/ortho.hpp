#ifndef MAPPELL_ORTHO_HPP
#define MAPPELL_ORTHO_HPP

#include "mappell/appell.hpp"

#include <functional>
#include <optional>

namespace mappell {

/// Moment functional of the Charlier weight a^x/x! on the nonnegative
/// integers, with the common factor e^a divided out. Acts on the FF basis
/// at omega = 1 by L[x^(k,1)] = a^k.
class MomentFunctional
{
public:
    explicit MomentFunctional(Rational a);

    const Rational &parameter() const { return a_; }

    /// Throws basis_mismatch_error unless p.omega() == 1.
    Rational operator()(const FFPoly &p) const;

private:
    Rational a_;
};

struct OrthogonalityVerdict
{
    bool ok = true;
    bool degenerate_parameters = false;
    /// (weight index, moment order k, value) for every failed condition k < n_i.
    std::vector<std::tuple<unsigned, unsigned, Rational>> failures;
    /// Values L_{a_i}[x^(n_i,1) C_n] at the first non-annihilated order.
    std::vector<Rational> boundary_values;
};

/// L_{a_i}[x^(k,1) C_n] = 0 for all k < n_i and each weight i; also reports
/// the (expected nonzero) value at k = n_i.
OrthogonalityVerdict verify_multiple_orthogonality(const MultiIndex &n,
                                                   const CharlierParams &params);

enum class ExtractionStatus
{
    ok,
    rank_deficient,
    no_recurrence,
};

/// One solved instance of x P_n = P_{n+e_d} + b P_n + sum_j a_j P_{n-e_j}.
struct RecurrenceEntry
{
    ExtractionStatus status = ExtractionStatus::ok;
    Rational b;
    /// a_j per axis; absent when n_j = 0 (that term is not in the relation).
    std::vector<std::optional<Rational>> lower;
    /// Nonzero residual when status == no_recurrence.
    FFPoly residual = FFPoly::zero(Rational(1));
};

/// Tables E, F, G of the r = 2 nearest-neighbor recurrence (direction 0 is
/// the untilded form, direction 1 the tilde form); general r stores b and
/// the per-axis lower coefficients.
struct NNRecurrenceCoeffs
{
    unsigned direction = 0;
    std::map<MultiIndex, RecurrenceEntry> entries;

    bool all_ok() const;
};

/// Solves the nearest-neighbor relation exactly by FF-coefficient matching
/// at every window index |n| <= window. Monic families give a triangular
/// system; rank deficiency and inconsistency are reported per index, never
/// resolved by preference.
NNRecurrenceCoeffs extract_recurrence(const FamilyFn &family, unsigned arity, unsigned direction,
                                      unsigned window);

struct ConstraintVerdict
{
    bool ok = false;
    bool insufficient_window = false;
    std::string violation;
    Rational e00, f11, g11;
};

/// E_{m,n} = m+n+E_{0,0}, F_{m,n} = m F_{1,1}, G_{m,n} = n G_{1,1} across the
/// window, plus the consistency F_{1,1} = E_{0,0}; r = 2, direction 0.
ConstraintVerdict check_appell_orthogonal_constraints(const NNRecurrenceCoeffs &coeffs,
                                                      unsigned window);

struct IdentificationResult
{
    bool identified = false;
    std::string failing_stage;
    std::string witness;
    CharlierParams params;
};

/// Appell check + recurrence extraction + constraint check; on success the
/// candidate parameters (F_{1,1}, G_{1,1}) are verified against the explicit
/// Charlier polynomials on the window. Refutation is a value, not an error.
/// The family must supply indices up to |n| = window + 1; r = 2, omega = 1.
IdentificationResult charlier_identification(const FamilyFn &family, unsigned window);
IdentificationResult charlier_identification(const AppellFamily &family,
                                             unsigned max_total_degree);

} // namespace mappell

#endif
