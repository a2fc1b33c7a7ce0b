#include "mappell/verify.hpp"

#include <chrono>

namespace mappell {

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t splitmix64(std::uint64_t &state)
{
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::string params_string(const std::vector<Rational> &a)
{
    std::string s = "a=(";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) {
            s += ",";
        }
        s += rational_to_string(a[i]);
    }
    return s + ")";
}

class Recorder
{
public:
    explicit Recorder(std::vector<ResultRecord> &out) : out_(out) {}

    void add(const std::string &check, const std::string &params, bool ok,
             const FFPoly &witness, Clock::time_point started, bool warn = false)
    {
        ResultRecord rec;
        rec.command = "verify";
        rec.check = check;
        rec.params = params;
        rec.verdict = !ok ? "fail" : (warn ? "warn" : "pass");
        if (!ok || !witness.is_zero()) {
            rec.witness_ff = witness.to_string();
            std::string mono;
            for (const auto &m : witness.to_monomial()) {
                if (!mono.empty()) {
                    mono += ",";
                }
                mono += rational_to_string(m);
            }
            rec.witness_monomial = mono.empty() ? "0" : mono;
        }
        rec.timing_ms =
            std::chrono::duration<double, std::milli>(Clock::now() - started).count();
        out_.push_back(std::move(rec));
    }

private:
    std::vector<ResultRecord> &out_;
};

void run_difference(Recorder &rec, const CharlierParams &params, unsigned max_degree)
{
    const auto t0 = Clock::now();
    for_each_index(params.arity(), max_degree, [&](const MultiIndex &n) {
        const auto w = verify_difference_rule(n, params);
        if (!w.ok) {
            rec.add("difference " + n.to_string(), params_string(params.a), false, w.residual, t0);
        }
    });
    rec.add("difference sweep |n|<=" + std::to_string(max_degree), params_string(params.a), true,
            FFPoly::zero(Rational(1)), t0);
}

void run_identity(Recorder &rec, const std::string &name, const CharlierParams &params,
                  unsigned max_degree,
                  const std::function<IdentityWitness(const MultiIndex &)> &check)
{
    const auto t0 = Clock::now();
    bool ok = true;
    for_each_index(params.arity(), max_degree, [&](const MultiIndex &n) {
        const auto w = check(n);
        if (!w.ok) {
            ok = false;
            rec.add(name + " " + n.to_string(), params_string(params.a), false, w.residual, t0);
        }
    });
    if (ok) {
        rec.add(name + " sweep |n|<=" + std::to_string(max_degree), params_string(params.a), true,
                FFPoly::zero(Rational(1)), t0);
    }
}

void run_recurrences(Recorder &rec, const CharlierParams &params, unsigned max_degree)
{
    const auto t0 = Clock::now();
    if (params.arity() != 2) {
        rec.add("recurrences (skipped, r != 2)", params_string(params.a), true,
                FFPoly::zero(Rational(1)), t0, /*warn=*/true);
        return;
    }
    bool ok = true;
    for_each_index(2, max_degree, [&](const MultiIndex &n) {
        const auto res = recurrence_residuals(n, params);
        const std::pair<const char *, const FFPoly *> items[] = {
            {"rec-1", &res.rec1}, {"rec-2", &res.rec2}, {"rec-3", &res.rec3}};
        for (const auto &[label, poly] : items) {
            if (!poly->is_zero()) {
                ok = false;
                rec.add(std::string(label) + " " + n.to_string(), params_string(params.a), false,
                        *poly, t0);
            }
        }
    });
    if (ok) {
        rec.add("recurrences sweep |n|<=" + std::to_string(max_degree), params_string(params.a),
                true, FFPoly::zero(Rational(1)), t0);
    }
}

void run_genfunc(Recorder &rec, const CharlierParams &params, unsigned max_degree)
{
    const auto t0 = Clock::now();
    bool ok = true;
    for_each_index(params.arity(), max_degree, [&](const MultiIndex &n) {
        const FFPoly diff =
            charlier_explicit(n, params) - charlier_genfunc(n, params, max_degree);
        if (!diff.is_zero()) {
            ok = false;
            rec.add("genfunc " + n.to_string(), params_string(params.a), false, diff, t0);
        }
    });
    if (ok) {
        rec.add("genfunc sweep |n|<=" + std::to_string(max_degree), params_string(params.a), true,
                FFPoly::zero(Rational(1)), t0);
    }
    if (params.arity() == 2) {
        const auto t1 = Clock::now();
        const bool rel = diff_relations_check(params, std::max(max_degree, 2u));
        rec.add("differential relations", params_string(params.a), rel, FFPoly::zero(Rational(1)),
                t1);
    }
}

void run_orthogonality(Recorder &rec, const CharlierParams &params, unsigned max_degree)
{
    const auto t0 = Clock::now();
    bool ok = true;
    bool degenerate = false;
    FFPoly witness = FFPoly::zero(Rational(1));
    for_each_index(params.arity(), max_degree, [&](const MultiIndex &n) {
        const auto v = verify_multiple_orthogonality(n, params);
        degenerate = degenerate || v.degenerate_parameters;
        if (!v.ok) {
            ok = false;
            const auto &[i, k, value] = v.failures.front();
            witness = FFPoly::constant(Rational(1), value);
            rec.add("orthogonality " + n.to_string() + " weight " + std::to_string(i) +
                        " moment " + std::to_string(k),
                    params_string(params.a), false, witness, t0);
        }
    });
    if (ok) {
        rec.add(std::string("orthogonality sweep |n|<=") + std::to_string(max_degree) +
                    (degenerate ? " (repeated or nonpositive parameters)" : ""),
                params_string(params.a), true, FFPoly::zero(Rational(1)), t0, degenerate);
    }
}

} // namespace

Rational random_rational(std::uint64_t &state, bool positive)
{
    const std::uint64_t r = splitmix64(state);
    const long long num = 1 + static_cast<long long>(r % 9);
    const long long den = 1 + static_cast<long long>((r >> 8) % 4);
    const bool negative = !positive && ((r >> 16) & 1u);
    return Rational(negative ? -num : num, den);
}

bool all_pass(const std::vector<ResultRecord> &records)
{
    for (const auto &r : records) {
        if (r.verdict == "fail") {
            return false;
        }
    }
    return true;
}

std::vector<ResultRecord> run_verify_suite(const std::string &suite, const SuiteOptions &options)
{
    static const std::vector<std::string> known = {"difference", "inversion", "connection",
                                                   "addition",   "recurrences", "genfunc",
                                                   "orthogonality", "all"};
    if (std::find(known.begin(), known.end(), suite) == known.end()) {
        throw std::invalid_argument("unknown suite '" + suite + "'");
    }
    const bool everything = suite == "all";
    auto want = [&](const char *name) { return everything || suite == name; };

    std::vector<std::vector<Rational>> param_vectors;
    if (!options.a.empty()) {
        param_vectors.push_back(options.a);
    }
    std::uint64_t state = options.rng_seed;
    const unsigned arity = options.a.empty() ? 2 : static_cast<unsigned>(options.a.size());
    for (unsigned i = 0; i < options.random_count; ++i) {
        std::vector<Rational> v;
        for (unsigned j = 0; j < arity; ++j) {
            v.push_back(random_rational(state, suite == "orthogonality"));
        }
        param_vectors.push_back(std::move(v));
    }
    if (param_vectors.empty()) {
        throw std::invalid_argument("no parameter vectors: pass a or random count");
    }

    std::vector<ResultRecord> records;
    Recorder rec(records);
    for (const auto &a : param_vectors) {
        const CharlierParams params{a};
        if (want("difference")) {
            run_difference(rec, params, options.max_degree);
        }
        if (want("inversion")) {
            run_identity(rec, "inversion", params, options.max_degree,
                         [&](const MultiIndex &n) { return inversion_formula(n, params); });
        }
        if (want("connection")) {
            CharlierParams to;
            for (unsigned i = 0; i < params.arity(); ++i) {
                to.a.push_back(params.a[i] + Rational(i + 1, 2));
            }
            run_identity(rec, "connection", params, options.max_degree, [&](const MultiIndex &n) {
                return connection_formula(n, params, to);
            });
        }
        if (want("addition")) {
            std::vector<Rational> split;
            for (const auto &ai : params.a) {
                split.push_back(ai / 2);
            }
            run_identity(rec, "addition", params, options.max_degree, [&](const MultiIndex &n) {
                return addition_formula(n, params, split);
            });
        }
        if (want("recurrences")) {
            run_recurrences(rec, params, options.max_degree);
        }
        if (want("genfunc")) {
            run_genfunc(rec, params, options.max_degree);
        }
        if (want("orthogonality")) {
            run_orthogonality(rec, params, options.max_degree);
        }
    }
    if (options.random_count > 0) {
        for (auto &r : records) {
            r.params += " rng_seed=" + std::to_string(options.rng_seed);
        }
    }
    return records;
}

} // namespace mappell
