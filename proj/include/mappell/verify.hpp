#ifndef MAPPELL_VERIFY_HPP
#define MAPPELL_VERIFY_HPP

#include "mappell/ortho.hpp"

#include <cstdint>
#include <optional>

namespace mappell {

/// One check outcome. A "fail" verdict always carries a nonzero witness.
struct ResultRecord
{
    std::string command;
    std::string check;
    std::string params;
    std::string verdict; // pass | fail | warn
    std::string witness_ff;
    std::string witness_monomial;
    double timing_ms = 0.0;
};

struct SuiteOptions
{
    unsigned max_degree = 5;
    std::vector<Rational> a;
    /// Extra randomly drawn parameter vectors per suite; 0 uses only `a`.
    unsigned random_count = 0;
    std::uint64_t rng_seed = 1;
};

/// Known suites: difference, inversion, connection, addition, recurrences,
/// genfunc, orthogonality, all. Throws std::invalid_argument on an unknown
/// suite name.
std::vector<ResultRecord> run_verify_suite(const std::string &suite, const SuiteOptions &options);

bool all_pass(const std::vector<ResultRecord> &records);

/// Deterministic nonzero rational with small numerator and denominator.
/// positive=false allows negative values.
Rational random_rational(std::uint64_t &state, bool positive);

} // namespace mappell

#endif
