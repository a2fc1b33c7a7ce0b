#include "mappell/io.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

using namespace mappell;
using nlohmann::json;

// Exit codes: 0 all pass, 1 verification failure, 2 input error.
constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

std::vector<Rational> parse_rational_list(const std::string &s)
{
    std::vector<Rational> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        const std::size_t comma = s.find(',', pos);
        const std::string tok =
            s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        out.push_back(parse_rational(tok));
        if (comma == std::string::npos) {
            break;
        }
        pos = comma + 1;
    }
    return out;
}

std::vector<unsigned> parse_index_list(const std::string &s)
{
    std::vector<unsigned> out;
    for (const auto &r : parse_rational_list(s)) {
        if (denominator(r) != 1 || r < 0) {
            throw std::invalid_argument("multi-index components must be nonnegative integers");
        }
        out.push_back(static_cast<unsigned>(numerator(r).convert_to<unsigned long>()));
    }
    return out;
}

void print_records(const std::vector<ResultRecord> &records, const std::string &format)
{
    for (const auto &rec : records) {
        if (format == "json") {
            std::cout << record_to_json(rec).dump() << "\n";
        } else {
            std::cout << "[" << rec.verdict << "] " << rec.check << " " << rec.params;
            if (!rec.witness_ff.empty()) {
                std::cout << " witness: " << rec.witness_ff;
            }
            std::cout << "\n";
        }
    }
}

std::string monomial_pretty(const FFPoly &p)
{
    const auto m = p.to_monomial();
    if (m.empty()) {
        return "0";
    }
    std::string s;
    for (std::size_t k = m.size(); k-- > 0;) {
        if (m[k] == 0) {
            continue;
        }
        Rational c = m[k];
        if (!s.empty()) {
            s += c < 0 ? " - " : " + ";
            if (c < 0) {
                c = -c;
            }
        }
        const bool unit = (c == 1 || c == -1) && k > 0;
        if (!unit) {
            s += rational_to_string(c);
        } else if (c == -1) {
            s += "-";
        }
        if (k > 0) {
            if (!unit) {
                s += "*";
            }
            s += "x";
            if (k > 1) {
                s += "^" + std::to_string(k);
            }
        }
    }
    return s;
}

int cmd_charlier(const std::vector<unsigned> &n, const std::vector<Rational> &a,
                 const std::string &basis, const std::string &format)
{
    const FFPoly p = charlier_explicit(MultiIndex(n), CharlierParams{a});
    if (format == "json") {
        std::cout << poly_to_json(p, basis == "monomial").dump() << "\n";
    } else if (basis == "monomial") {
        std::cout << monomial_pretty(p) << "\n";
    } else {
        std::cout << p.to_string() << "\n";
    }
    return kExitPass;
}

int cmd_verify(const std::string &suite, const SuiteOptions &options, const std::string &format)
{
    const auto records = run_verify_suite(suite, options);
    print_records(records, format);
    return all_pass(records) ? kExitPass : kExitFail;
}

int cmd_appell(const std::string &seed_path, const std::string &action, unsigned max_degree,
               const std::string &format)
{
    const AppellSeed seed = load_seed_file(seed_path);
    const AppellFamily family = build_via_c(seed);
    const unsigned degree = std::min(max_degree, seed.order);

    if (action == "build") {
        for_each_index(seed.arity, degree, [&](const MultiIndex &n) {
            if (format == "json") {
                json j;
                j["n"] = n.components();
                j["poly"] = poly_to_json(family.at(n));
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "P" << n.to_string() << " = " << family.at(n).to_string() << "\n";
            }
        });
        return kExitPass;
    }
    if (action == "recover") {
        std::cout << seed_to_json(recover_seed(family)).dump(2) << "\n";
        return kExitPass;
    }
    if (action != "check") {
        throw std::invalid_argument("unknown appell action '" + action + "'");
    }

    // Five-way equivalence battery on the seed.
    std::vector<ResultRecord> records;
    auto report = [&](const std::string &check, bool ok, const std::string &witness = "") {
        ResultRecord rec;
        rec.command = "appell";
        rec.check = check;
        rec.params = "omega=" + rational_to_string(seed.omega) +
                     " order=" + std::to_string(seed.order);
        rec.verdict = ok ? "pass" : "fail";
        rec.witness_ff = witness;
        rec.witness_monomial = witness;
        records.push_back(std::move(rec));
    };

    const auto via_b = build_via_b(seed);
    const auto via_e = build_via_e(seed);
    bool bc = true, ec = true;
    for_each_index(seed.arity, degree, [&](const MultiIndex &n) {
        bc = bc && via_b.at(n) == family.at(n);
        ec = ec && via_e.at(n) == family.at(n);
    });
    report("construction (b) = (c)", bc);
    report("construction (e) = (c)", ec);
    const auto prop = check_appell_property(family, degree);
    report("difference property (a)", prop.ok,
           prop.ok ? "" : prop.failures.front().second.to_string());
    const auto add = check_addition_formula(family, degree);
    report("addition formula (d)", add.ok,
           add.ok ? "" : add.failures.front().second.to_string());
    const auto recovered = recover_seed(family);
    bool roundtrip = true;
    for_each_index(seed.arity, seed.order, [&](const MultiIndex &k) {
        roundtrip = roundtrip && recovered.coeff(k) == seed.coeff(k);
    });
    report("seed round-trip", roundtrip);
    print_records(records, format);
    return all_pass(records) ? kExitPass : kExitFail;
}

int cmd_recurrence(const std::vector<Rational> &a, const std::string &seed_path, unsigned window,
                   unsigned direction, bool strict, const std::string &format)
{
    FamilyFn fn;
    unsigned arity = 2;
    std::unique_ptr<AppellFamily> family;
    if (!seed_path.empty()) {
        family = std::make_unique<AppellFamily>(load_seed_file(seed_path));
        arity = family->arity();
        fn = [&family](const MultiIndex &n) { return family->at(n); };
    } else {
        if (a.empty()) {
            throw std::invalid_argument("pass either --a or --seed-file");
        }
        arity = static_cast<unsigned>(a.size());
        CharlierParams params{a};
        fn = [params](const MultiIndex &n) { return charlier_explicit(n, params); };
    }
    if (arity != 2) {
        throw std::invalid_argument("recurrence tables require r = 2");
    }
    if (direction != 1 && direction != 2) {
        throw std::invalid_argument("direction must be 1 or 2");
    }
    const auto coeffs = extract_recurrence(fn, 2, direction - 1, window);

    auto status_name = [](ExtractionStatus s) {
        switch (s) {
        case ExtractionStatus::ok:
            return "ok";
        case ExtractionStatus::rank_deficient:
            return "rank-deficient";
        default:
            return "no-recurrence";
        }
    };
    // In the tilde (direction 2) form the F column multiplies P_{m,n-1}.
    const unsigned f_axis = direction == 1 ? 0u : 1u;
    if (format == "json") {
        for (const auto &[idx, e] : coeffs.entries) {
            json j;
            j["m"] = idx[0];
            j["n"] = idx[1];
            j["E"] = rational_to_json(e.b);
            j["F"] = e.lower[f_axis] ? rational_to_json(*e.lower[f_axis]) : json("0");
            j["G"] = e.lower[1 - f_axis] ? rational_to_json(*e.lower[1 - f_axis]) : json("0");
            j["status"] = status_name(e.status);
            std::cout << j.dump() << "\n";
        }
    } else {
        std::cout << "m,n,E,F,G,status\n";
        for (const auto &[idx, e] : coeffs.entries) {
            std::cout << idx[0] << "," << idx[1] << "," << rational_to_string(e.b) << ","
                      << (e.lower[f_axis] ? rational_to_string(*e.lower[f_axis]) : "0") << ","
                      << (e.lower[1 - f_axis] ? rational_to_string(*e.lower[1 - f_axis]) : "0")
                      << "," << status_name(e.status) << "\n";
        }
    }
    if (direction == 1) {
        const auto verdict = check_appell_orthogonal_constraints(coeffs, window);
        std::cerr << "constraints: "
                  << (verdict.ok
                          ? "pass (E00=" + rational_to_string(verdict.e00) +
                                ", F11=" + rational_to_string(verdict.f11) +
                                ", G11=" + rational_to_string(verdict.g11) + ")"
                          : (verdict.insufficient_window ? "insufficient window"
                                                         : verdict.violation))
                  << "\n";
    }
    if (strict && !coeffs.all_ok()) {
        return kExitFail;
    }
    return kExitPass;
}

int cmd_table(unsigned max_degree, const std::vector<Rational> &a,
              const std::vector<Rational> &xs)
{
    const CharlierParams params{a};
    std::cout << "# multiple Charlier evaluations, a=(";
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::cout << (i ? "," : "") << rational_to_string(a[i]);
    }
    std::cout << ")\n";
    for (unsigned i = 0; i < params.arity(); ++i) {
        std::cout << "n" << i + 1 << ",";
    }
    std::cout << "x,value\n";
    for_each_index(params.arity(), max_degree, [&](const MultiIndex &n) {
        const FFPoly p = charlier_explicit(n, params);
        for (const auto &x : xs) {
            for (unsigned i = 0; i < n.arity(); ++i) {
                std::cout << n[i] << ",";
            }
            std::cout << rational_to_string(x) << "," << rational_to_string(p.eval(x)) << "\n";
        }
    });
    return kExitPass;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Exact multiple Charlier / Delta-omega-Appell polynomial toolkit"};
    app.require_subcommand(1);

    std::string format = "text";
    unsigned max_degree = 5;
    std::string omega_str = "1";
    std::uint64_t rng_seed = 1;
    bool strict = false;
    app.add_option("--format", format, "Output format: text, json, csv")->capture_default_str();
    app.add_option("--max-degree", max_degree, "Sweep bound on |n|")->capture_default_str();
    app.add_option("--omega", omega_str, "Step omega (rational)")->capture_default_str();
    app.add_option("--seed", rng_seed, "RNG seed for random parameter draws")
        ->capture_default_str();
    app.add_flag("--strict", strict, "Exit nonzero on informational failures");
    
    std::string n_str, a_str = "1,2", basis = "ff", suite = "all", seed_path, action = "build";
    std::string x_str = "0,1,2";
    unsigned random_count = 0, window = 3, direction = 1;

    auto *charlier = app.add_subcommand("charlier", "Print one multiple Charlier polynomial")->fallthrough();
    charlier->add_option("--n", n_str, "Multi-index, e.g. 1,0")->required();
    charlier->add_option("--a", a_str, "Weight parameters, e.g. 1,2");
    charlier->add_option("--basis", basis, "ff or monomial")->capture_default_str();

    auto *verify = app.add_subcommand("verify", "Run an identity verification suite")->fallthrough();
    verify->add_option("--suite", suite,
                       "difference|inversion|connection|addition|recurrences|genfunc|"
                       "orthogonality|all")
        ->capture_default_str();
    verify->add_option("--a", a_str, "Weight parameters");
    verify->add_option("--random", random_count, "Number of random parameter vectors");

    auto *appell = app.add_subcommand("appell", "Build or check an Appell family from a seed file")->fallthrough();
    appell->add_option("--seed-file", seed_path, "JSON seed file")->required();
    appell->add_option("--action", action, "build|check|recover")->capture_default_str();

    auto *recurrence = app.add_subcommand("recurrence", "Nearest-neighbor recurrence table")->fallthrough();
    recurrence->add_option("--a", a_str, "Charlier weight parameters");
    recurrence->add_option("--seed-file", seed_path, "Appell seed file instead of --a");
    recurrence->add_option("--window", window, "Extract for all |n| <= window")
        ->capture_default_str();
    recurrence->add_option("--direction", direction, "1 (untilded) or 2 (tilde form)")
        ->capture_default_str();

    auto *table = app.add_subcommand("table", "CSV of exact evaluations")->fallthrough();
    table->add_option("--a", a_str, "Weight parameters");
    table->add_option("--x", x_str, "Comma-separated rational evaluation points");

    CLI11_PARSE(app, argc, argv);

    try {
        if (charlier->parsed()) {
            return cmd_charlier(parse_index_list(n_str), parse_rational_list(a_str), basis, format);
        }
        if (verify->parsed()) {
            SuiteOptions options;
            options.max_degree = max_degree;
            if (random_count == 0 || !a_str.empty()) {
                options.a = parse_rational_list(a_str);
            }
            options.random_count = random_count;
            options.rng_seed = rng_seed;
            return cmd_verify(suite, options, format);
        }
        if (appell->parsed()) {
            return cmd_appell(seed_path, action, max_degree, format);
        }
        if (recurrence->parsed()) {
            const bool use_seed = !recurrence->get_option("--seed-file")->empty();
            return cmd_recurrence(parse_rational_list(a_str), use_seed ? seed_path : "", window,
                                  direction, strict, format);
        }
        if (table->parsed()) {
            return cmd_table(max_degree, parse_rational_list(a_str), parse_rational_list(x_str));
        }
    } catch (const std::invalid_argument &e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::out_of_range &e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const nlohmann::json::exception &e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitInput;
}
