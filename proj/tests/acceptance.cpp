// Acceptance suite: one pass/fail line per criterion, exit nonzero on any
// failure. Everything except criterion 10 is exact rational arithmetic.
#include "mappell/io.hpp"
#include "mappell/ortho.hpp"
#include "mappell/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sys/wait.h>

using namespace mappell;

namespace {

const Rational kOne(1);

int g_failures = 0;

void report(int number, const std::string &name, bool ok)
{
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << number << ": " << name << "\n";
    if (!ok) {
        ++g_failures;
    }
}

CharlierParams random_params(std::uint64_t &state, unsigned arity, bool positive = false)
{
    CharlierParams p;
    for (unsigned i = 0; i < arity; ++i) {
        p.a.push_back(random_rational(state, positive));
    }
    return p;
}

// 1. Constructor agreement: explicit vs generating function.
bool criterion_constructor_agreement()
{
    std::uint64_t state = 1001;
    for (unsigned rep = 0; rep < 5; ++rep) {
        const CharlierParams p = random_params(state, 2);
        bool ok = true;
        for_each_index(2, 8, [&](const MultiIndex &n) {
            ok = ok && charlier_genfunc(n, p, 8) == charlier_explicit(n, p);
        });
        if (!ok) {
            return false;
        }
    }
    const CharlierParams p3 = random_params(state, 3);
    bool ok = true;
    for_each_index(3, 4, [&](const MultiIndex &n) {
        ok = ok && charlier_genfunc(n, p3, 4) == charlier_explicit(n, p3);
    });
    return ok;
}

// 2. Difference rule over the same sweep.
bool criterion_difference_rule()
{
    std::uint64_t state = 1001;
    for (unsigned rep = 0; rep < 5; ++rep) {
        const CharlierParams p = random_params(state, 2);
        bool ok = true;
        for_each_index(2, 8, [&](const MultiIndex &n) {
            ok = ok && verify_difference_rule(n, p).ok;
        });
        if (!ok) {
            return false;
        }
    }
    const CharlierParams p3 = random_params(state, 3);
    bool ok = true;
    for_each_index(3, 4, [&](const MultiIndex &n) {
        ok = ok && verify_difference_rule(n, p3).ok;
    });
    return ok;
}

// 3. Inversion, connection, addition; includes a negative and a repeated
// parameter case.
bool criterion_structural_identities()
{
    std::uint64_t state = 2002;
    std::vector<CharlierParams> vectors = {
        CharlierParams{{Rational(-2), Rational(3, 4)}}, // negative parameter
        CharlierParams{{Rational(2), Rational(2)}},     // repeated parameter
        random_params(state, 2),
    };
    for (const auto &p : vectors) {
        const CharlierParams to = random_params(state, 2);
        std::vector<Rational> split;
        for (const auto &ai : p.a) {
            split.push_back(ai / 3);
        }
        bool ok = true;
        for_each_index(2, 6, [&](const MultiIndex &n) {
            ok = ok && inversion_formula(n, p).ok;
            ok = ok && connection_formula(n, p, to).ok;
            ok = ok && addition_formula(n, p, split).ok;
        });
        if (!ok) {
            return false;
        }
    }
    const CharlierParams p3 = random_params(state, 3);
    const CharlierParams to3 = random_params(state, 3);
    std::vector<Rational> split3;
    for (const auto &ai : p3.a) {
        split3.push_back(ai / 2);
    }
    bool ok = true;
    for_each_index(3, 3, [&](const MultiIndex &n) {
        ok = ok && inversion_formula(n, p3).ok;
        ok = ok && connection_formula(n, p3, to3).ok;
        ok = ok && addition_formula(n, p3, split3).ok;
    });
    return ok;
}

// 4. Recurrence residuals and differential relations of the series.
bool criterion_recurrences()
{
    std::uint64_t state = 3003;
    for (const auto &p : {CharlierParams{{Rational(1), Rational(2)}},
                          CharlierParams{{Rational(1, 2), Rational(-3)}},
                          random_params(state, 2)}) {
        bool ok = true;
        for_each_index(2, 6, [&](const MultiIndex &n) {
            ok = ok && recurrence_residuals(n, p).all_zero();
        });
        if (!ok || !diff_relations_check(p, 8)) {
            return false;
        }
    }
    return true;
}

// 5. Classical monic Charlier reduction at n <= 8.
bool criterion_classical_reduction()
{
    return classical_charlier_check(8, CharlierParams{{Rational(2), Rational(7)}}) &&
           classical_charlier_check(8, CharlierParams{{Rational(1, 3), Rational(-1)}});
}

// 6. Five-way Appell equivalence on seeded random instances.
bool criterion_appell_equivalence()
{
    std::uint64_t state = 4004;
    const Rational omegas[] = {Rational(1), Rational(1, 2), Rational(-2)};
    unsigned instance = 0;
    while (instance < 10) {
        const Rational omega = omegas[instance % 3];
        const unsigned arity = instance % 2 == 0 ? 2u : 3u;
        const unsigned order = arity == 3 ? 3u : 4u;
        AppellSeed seed;
        seed.omega = omega;
        seed.arity = arity;
        seed.order = order;
        for_each_index(arity, order, [&](const MultiIndex &k) {
            seed.coeffs[k] = random_rational(state, false);
        });
        const AppellFamily family = build_via_c(seed);
        const auto via_b = build_via_b(seed);
        const auto via_e = build_via_e(seed);
        bool ok = true;
        for_each_index(arity, order, [&](const MultiIndex &n) {
            ok = ok && via_b.at(n) == family.at(n) && via_e.at(n) == family.at(n);
        });
        ok = ok && check_appell_property(family, order).ok;
        ok = ok && check_addition_formula(family, order).ok;
        const AppellSeed recovered = recover_seed(family);
        for_each_index(arity, order, [&](const MultiIndex &k) {
            ok = ok && recovered.coeff(k) == seed.coeff(k);
        });
        if (!ok) {
            return false;
        }
        ++instance;
    }
    return true;
}

// 7. Multiple orthogonality with nonzero boundary moments.
bool criterion_orthogonality()
{
    for (const auto &a : {std::vector<Rational>{Rational(1), Rational(2)},
                          std::vector<Rational>{Rational(1, 2), Rational(3)}}) {
        const CharlierParams params{a};
        bool ok = true;
        for_each_index(2, 5, [&](const MultiIndex &n) {
            const auto v = verify_multiple_orthogonality(n, params);
            ok = ok && v.ok && !v.degenerate_parameters;
            for (const auto &boundary : v.boundary_values) {
                ok = ok && boundary != 0;
            }
        });
        if (!ok) {
            return false;
        }
    }
    return true;
}

// 8. Forward characterization: exact recurrence coefficients and constraints.
bool criterion_characterization_forward()
{
    const Rational a1(1), a2(2);
    const CharlierParams params{{a1, a2}};
    const auto coeffs = extract_recurrence(
        [&](const MultiIndex &n) { return charlier_explicit(n, params); }, 2, 0, 5);
    if (!coeffs.all_ok()) {
        return false;
    }
    for (const auto &[idx, e] : coeffs.entries) {
        const Rational m(idx[0]), n(idx[1]);
        if (e.b != a1 + m + n) {
            return false;
        }
        if (idx[0] > 0 && *e.lower[0] != a1 * m) {
            return false;
        }
        if (idx[1] > 0 && *e.lower[1] != a2 * n) {
            return false;
        }
    }
    const auto verdict = check_appell_orthogonal_constraints(coeffs, 5);
    return verdict.ok && verdict.e00 == a1 && verdict.f11 == a1 && verdict.g11 == a2;
}

// 9. Converse path: identification, rank-deficiency and mutation refutations.
bool criterion_characterization_converse()
{
    const CharlierParams params{{Rational(1, 2), Rational(5)}};
    const auto identified = charlier_identification(build_via_c(charlier_seed(params, 5)), 5);
    if (!identified.identified || identified.params.a[0] != Rational(1, 2) ||
        identified.params.a[1] != Rational(5)) {
        return false;
    }

    const FamilyFn basis = [](const MultiIndex &n) { return FFPoly::basis(n.total(), kOne); };
    const auto basis_result = charlier_identification(basis, 3);
    if (basis_result.identified ||
        basis_result.witness.find("rank-deficient") == std::string::npos) {
        return false;
    }

    const FamilyFn mutated = [&](const MultiIndex &n) {
        FFPoly p = charlier_explicit(n, params);
        if (n == MultiIndex({2u, 1u})) {
            p = p + FFPoly::basis(1, kOne);
        }
        return p;
    };
    const auto mutated_result = charlier_identification(mutated, 3);
    return !mutated_result.identified && !mutated_result.witness.empty();
}

// 10. Numerical sanity oracle for the closed-form moments.
bool criterion_moment_oracle()
{
    for (const double a : {0.5, 1.0, 3.0}) {
        for (unsigned k = 0; k <= 10; ++k) {
            double sum = 0.0;
            double weight = std::exp(-a);
            for (unsigned x = 0; x <= 60; ++x) {
                double ff = 1.0;
                for (unsigned j = 0; j < k; ++j) {
                    ff *= static_cast<double>(x) - static_cast<double>(j);
                }
                sum += ff * weight;
                weight *= a / static_cast<double>(x + 1);
            }
            const double expected = std::pow(a, static_cast<double>(k));
            if (std::abs(sum - expected) > 1e-12 * std::max(1.0, std::abs(expected))) {
                return false;
            }
        }
    }
    return true;
}

int run_cli(const std::string &args)
{
    const std::string cmd = std::string(MAPPELL_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

// 11. CLI contract: full suite passes within budget; mutated input fails.
bool criterion_cli_contract()
{
    const auto start = std::chrono::steady_clock::now();
    if (run_cli("verify --suite all --max-degree 5 --a 1,2") != 0) {
        return false;
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds >= 60.0) {
        return false;
    }
    // A seed that is not Charlier-patterned: strict recurrence extraction on
    // the basis family must exit 1.
    const char *path = "/tmp/mappell_acceptance_delta_seed.json";
    {
        AppellSeed seed;
        seed.omega = 1;
        seed.arity = 2;
        seed.order = 4;
        seed.coeffs[MultiIndex::zero(2)] = 1;
        std::ofstream out(path);
        out << seed_to_json(seed).dump();
    }
    return run_cli(std::string("--strict recurrence --seed-file ") + path + " --window 3") == 1;
}

} // namespace

int main()
{
    report(1, "constructor agreement (explicit = generating function)",
           criterion_constructor_agreement());
    report(2, "difference rule", criterion_difference_rule());
    report(3, "inversion, connection, addition formulas", criterion_structural_identities());
    report(4, "recurrence relations and differential relations", criterion_recurrences());
    report(5, "classical monic Charlier reduction", criterion_classical_reduction());
    report(6, "five-way Appell equivalence with seed round-trip",
           criterion_appell_equivalence());
    report(7, "multiple orthogonality", criterion_orthogonality());
    report(8, "characterization, forward (recurrence coefficients)",
           criterion_characterization_forward());
    report(9, "characterization, converse (identification and refutations)",
           criterion_characterization_converse());
    report(10, "moment sanity oracle", criterion_moment_oracle());
    report(11, "CLI contract", criterion_cli_contract());

    if (g_failures > 0) {
        std::cout << g_failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
