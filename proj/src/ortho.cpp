#include "mappell/ortho.hpp"

namespace mappell {

namespace {

const Rational kOne(1);

} // namespace

MomentFunctional::MomentFunctional(Rational a) : a_(std::move(a)) {}

Rational MomentFunctional::operator()(const FFPoly &p) const
{
    if (!p.is_zero() && p.omega() != 1) {
        throw basis_mismatch_error("moment functional requires omega = 1");
    }
    Rational m = 0;
    Rational apow = 1;
    const auto c = p.coeffs();
    for (std::size_t k = 0; k < c.size(); ++k) {
        m += c[k] * apow;
        apow *= a_;
    }
    return m;
}

OrthogonalityVerdict verify_multiple_orthogonality(const MultiIndex &n,
                                                   const CharlierParams &params)
{
    OrthogonalityVerdict verdict;
    for (unsigned i = 0; i < params.arity(); ++i) {
        if (params.a[i] <= 0) {
            verdict.degenerate_parameters = true;
        }
        for (unsigned j = i + 1; j < params.arity(); ++j) {
            if (params.a[i] == params.a[j]) {
                verdict.degenerate_parameters = true;
            }
        }
    }
    const FFPoly c = charlier_explicit(n, params);
    for (unsigned i = 0; i < params.arity(); ++i) {
        const MomentFunctional functional(params.a[i]);
        for (unsigned k = 0; k < n[i]; ++k) {
            const Rational v = functional(FFPoly::basis(k, kOne) * c);
            if (v != 0) {
                verdict.ok = false;
                verdict.failures.emplace_back(i, k, v);
            }
        }
        verdict.boundary_values.push_back(functional(FFPoly::basis(n[i], kOne) * c));
    }
    return verdict;
}

bool NNRecurrenceCoeffs::all_ok() const
{
    for (const auto &[idx, e] : entries) {
        if (e.status != ExtractionStatus::ok) {
            return false;
        }
    }
    return true;
}

namespace {

/// Exact Gaussian elimination on a dense column-major system A x = rhs.
/// Returns a particular solution when one exists.
struct LinearSolve
{
    bool consistent = true;
    bool unique = true;
    std::vector<Rational> solution;
};

LinearSolve solve_exact(std::vector<std::vector<Rational>> columns, std::vector<Rational> rhs)
{
    const std::size_t ncols = columns.size();
    const std::size_t nrows = rhs.size();
    std::vector<std::size_t> pivot_row_of_col(ncols, SIZE_MAX);
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < nrows; ++col) {
        std::size_t pivot = SIZE_MAX;
        for (std::size_t r = row; r < nrows; ++r) {
            if (columns[col][r] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot == SIZE_MAX) {
            continue;
        }
        for (auto &c : columns) {
            std::swap(c[row], c[pivot]);
        }
        std::swap(rhs[row], rhs[pivot]);
        const Rational inv = Rational(1) / columns[col][row];
        for (std::size_t r = 0; r < nrows; ++r) {
            if (r == row || columns[col][r] == 0) {
                continue;
            }
            const Rational factor = columns[col][r] * inv;
            for (std::size_t c = col; c < ncols; ++c) {
                columns[c][r] -= factor * columns[c][row];
            }
            rhs[r] -= factor * rhs[row];
        }
        pivot_row_of_col[col] = row;
        ++row;
    }
    LinearSolve out;
    // Any nonzero rhs entry in a fully eliminated row means no solution.
    for (std::size_t r = row; r < nrows; ++r) {
        if (rhs[r] != 0) {
            out.consistent = false;
        }
    }
    out.solution.assign(ncols, Rational(0));
    for (std::size_t col = 0; col < ncols; ++col) {
        if (pivot_row_of_col[col] == SIZE_MAX) {
            out.unique = false;
        } else {
            out.solution[col] = rhs[pivot_row_of_col[col]] / columns[col][pivot_row_of_col[col]];
        }
    }
    return out;
}

RecurrenceEntry extract_at(const FamilyFn &family, unsigned arity, unsigned direction,
                           const MultiIndex &n)
{
    const FFPoly p = family(n);
    const FFPoly r = FFPoly::basis(1, kOne) * p - family(n.incremented(direction));

    // Rows cover degrees 0..|n|+1 so a non-cancelling leading term still
    // shows up as an inconsistency.
    const std::size_t nrows = n.total() + 2;
    auto column_of = [&](const FFPoly &q) {
        std::vector<Rational> col(nrows, Rational(0));
        for (std::size_t t = 0; t < nrows; ++t) {
            col[t] = q.coeff(static_cast<unsigned>(t));
        }
        return col;
    };

    std::vector<std::vector<Rational>> columns{column_of(p)};
    std::vector<unsigned> lower_axes;
    for (unsigned j = 0; j < arity; ++j) {
        if (n[j] > 0) {
            lower_axes.push_back(j);
            columns.push_back(column_of(family(n.decremented(j))));
        }
    }

    const auto solved = solve_exact(columns, column_of(r));

    RecurrenceEntry entry;
    entry.lower.assign(arity, std::nullopt);
    if (!solved.consistent) {
        entry.status = ExtractionStatus::no_recurrence;
        entry.residual = r;
        return entry;
    }
    entry.b = solved.solution[0];
    for (std::size_t i = 0; i < lower_axes.size(); ++i) {
        entry.lower[lower_axes[i]] = solved.solution[i + 1];
    }
    if (!solved.unique) {
        entry.status = ExtractionStatus::rank_deficient;
    }
    return entry;
}

} // namespace

NNRecurrenceCoeffs extract_recurrence(const FamilyFn &family, unsigned arity, unsigned direction,
                                      unsigned window)
{
    if (direction >= arity) {
        throw std::invalid_argument("recurrence direction out of range");
    }
    NNRecurrenceCoeffs coeffs;
    coeffs.direction = direction;
    for_each_index(arity, window, [&](const MultiIndex &n) {
        coeffs.entries.insert_or_assign(n, extract_at(family, arity, direction, n));
    });
    return coeffs;
}

ConstraintVerdict check_appell_orthogonal_constraints(const NNRecurrenceCoeffs &coeffs,
                                                      unsigned window)
{
    ConstraintVerdict verdict;
    const MultiIndex origin({0u, 0u});
    const MultiIndex diag({1u, 1u});
    const auto origin_it = coeffs.entries.find(origin);
    const auto diag_it = coeffs.entries.find(diag);
    if (window < 2 || origin_it == coeffs.entries.end() || diag_it == coeffs.entries.end()) {
        verdict.insufficient_window = true;
        verdict.violation = "window must contain (0,0) and (1,1)";
        return verdict;
    }
    for (const auto &[idx, e] : coeffs.entries) {
        if (e.status != ExtractionStatus::ok) {
            verdict.violation = "extraction did not produce unique coefficients at " + idx.to_string();
            return verdict;
        }
    }
    verdict.e00 = origin_it->second.b;
    verdict.f11 = *diag_it->second.lower[0];
    verdict.g11 = *diag_it->second.lower[1];
    for (const auto &[idx, e] : coeffs.entries) {
        const Rational m(idx[0]), n(idx[1]);
        if (e.b != m + n + verdict.e00) {
            verdict.violation = "E constraint violated at " + idx.to_string();
            return verdict;
        }
        if (idx[0] > 0 && *e.lower[0] != m * verdict.f11) {
            verdict.violation = "F constraint violated at " + idx.to_string();
            return verdict;
        }
        if (idx[1] > 0 && *e.lower[1] != n * verdict.g11) {
            verdict.violation = "G constraint violated at " + idx.to_string();
            return verdict;
        }
    }
    if (verdict.f11 != verdict.e00) {
        verdict.violation = "consistency F_{1,1} = E_{0,0} violated";
        return verdict;
    }
    verdict.ok = true;
    return verdict;
}

IdentificationResult charlier_identification(const AppellFamily &family, unsigned max_total_degree)
{
    if (family.arity() != 2) {
        IdentificationResult result;
        result.failing_stage = "arity";
        result.witness = "identification implemented for r = 2";
        return result;
    }
    // The window needs one extra order for the raised index of the recurrence.
    const unsigned window =
        std::min(max_total_degree, family.order() > 0 ? family.order() - 1 : 0u);
    return charlier_identification([&](const MultiIndex &n) { return family.at(n); }, window);
}

IdentificationResult charlier_identification(const FamilyFn &family, unsigned window)
{
    IdentificationResult result;
    const auto appell = check_appell_property(family, kOne, 2, window);
    if (!appell.ok) {
        result.failing_stage = "appell-property";
        result.witness = "nonzero residual at " + appell.failures.front().first.to_string();
        return result;
    }

    const auto coeffs = extract_recurrence(family, 2, 0, window);
    bool rank_deficient = false;
    MultiIndex first_deficient;
    for (const auto &[idx, e] : coeffs.entries) {
        if (e.status == ExtractionStatus::rank_deficient) {
            if (!rank_deficient) {
                rank_deficient = true;
                first_deficient = idx;
            }
        } else if (e.status == ExtractionStatus::no_recurrence) {
            result.failing_stage = "recurrence-extraction";
            result.witness = "nonzero residual " + e.residual.to_string() + " at " + idx.to_string();
            return result;
        }
    }

    if (rank_deficient) {
        // Repeated parameters collapse the family onto classical Charlier in
        // the total degree, so the mixed-index systems lose rank while the
        // boundary rows (m,0), (0,n) stay uniquely solvable.  Try that branch
        // before refuting: read the candidate parameter off the boundary rows
        // and demand an exact polynomial match.
        const auto e10 = coeffs.entries.find(MultiIndex({1u, 0u}));
        const auto e01 = coeffs.entries.find(MultiIndex({0u, 1u}));
        if (e10 != coeffs.entries.end() && e01 != coeffs.entries.end() &&
            e10->second.status == ExtractionStatus::ok &&
            e01->second.status == ExtractionStatus::ok) {
            const Rational a1 = *e10->second.lower[0];
            const Rational a2 = *e01->second.lower[1];
            if (a1 == a2 && a1 != 0) {
                const CharlierParams candidate{{a1, a2}};
                bool match = true;
                for (const auto &[idx, e] : coeffs.entries) {
                    (void)e;
                    match = match && family(idx) == charlier_explicit(idx, candidate);
                }
                if (match) {
                    result.identified = true;
                    result.params = candidate;
                    result.witness = "repeated parameter a1 = a2 = " + rational_to_string(a1) +
                                     "; not a genuine multiple-orthogonal system";
                    return result;
                }
            }
        }
        result.failing_stage = "recurrence-extraction";
        result.witness = "rank-deficient system at " + first_deficient.to_string();
        return result;
    }

    const auto constraints = check_appell_orthogonal_constraints(coeffs, window);
    if (!constraints.ok) {
        result.failing_stage = "constraint-check";
        result.witness = constraints.violation;
        return result;
    }

    result.params = CharlierParams{{constraints.f11, constraints.g11}};
    for (const auto &[idx, e] : coeffs.entries) {
        if (!(family(idx) == charlier_explicit(idx, result.params))) {
            result.failing_stage = "polynomial-match";
            result.witness = "mismatch against explicit Charlier polynomial at " + idx.to_string();
            return result;
        }
    }
    result.identified = true;
    return result;
}

} // namespace mappell
