#include "mappell/io.hpp"

#include <fstream>

namespace mappell {

using nlohmann::json;

json rational_to_json(const Rational &r)
{
    return rational_to_string(r);
}

Rational rational_from_json(const json &j)
{
    if (j.is_number_integer()) {
        return Rational(j.get<long long>());
    }
    if (!j.is_string()) {
        throw std::invalid_argument("rational must be a \"p/q\" string or integer");
    }
    return parse_rational(j.get<std::string>());
}

json poly_to_json(const FFPoly &p, bool monomial)
{
    json j;
    if (monomial) {
        j["basis"] = "monomial";
        json coeffs = json::array();
        for (const auto &c : p.to_monomial()) {
            coeffs.push_back(rational_to_json(c));
        }
        j["coeffs"] = std::move(coeffs);
    } else {
        j["basis"] = "ff";
        j["omega"] = rational_to_json(p.omega());
        json coeffs = json::array();
        for (const auto &c : p.coeffs()) {
            coeffs.push_back(rational_to_json(c));
        }
        j["coeffs"] = std::move(coeffs);
    }
    return j;
}

FFPoly poly_from_json(const json &j)
{
    const std::string basis = j.at("basis").get<std::string>();
    std::vector<Rational> coeffs;
    for (const auto &c : j.at("coeffs")) {
        coeffs.push_back(rational_from_json(c));
    }
    if (basis == "monomial") {
        return FFPoly::from_monomial(coeffs, Rational(1));
    }
    if (basis != "ff") {
        throw std::invalid_argument("unknown basis tag '" + basis + "'");
    }
    return FFPoly(rational_from_json(j.at("omega")), std::move(coeffs));
}

namespace {

void write_dense(json &node, const AppellSeed &seed, std::vector<unsigned> &prefix)
{
    if (prefix.size() == seed.arity) {
        node = rational_to_json(seed.coeff(MultiIndex(prefix)));
        return;
    }
    node = json::array();
    for (unsigned v = 0; v <= seed.order; ++v) {
        prefix.push_back(v);
        json child;
        write_dense(child, seed, prefix);
        node.push_back(std::move(child));
        prefix.pop_back();
    }
}

void read_dense(const json &node, AppellSeed &seed, std::vector<unsigned> &prefix)
{
    if (prefix.size() == seed.arity) {
        const Rational v = rational_from_json(node);
        MultiIndex idx(prefix);
        if (v != 0 || idx.is_zero()) {
            if (idx.total() > seed.order) {
                if (v != 0) {
                    throw out_of_order_error("nonzero seed entry " + idx.to_string() +
                                             " beyond order " + std::to_string(seed.order));
                }
                return;
            }
            seed.coeffs.insert_or_assign(std::move(idx), v);
        }
        return;
    }
    if (!node.is_array()) {
        throw std::invalid_argument("seed coeffs nesting does not match arity");
    }
    for (std::size_t v = 0; v < node.size(); ++v) {
        prefix.push_back(static_cast<unsigned>(v));
        read_dense(node[v], seed, prefix);
        prefix.pop_back();
    }
}

} // namespace

json seed_to_json(const AppellSeed &seed)
{
    json j;
    j["omega"] = rational_to_json(seed.omega);
    j["arity"] = seed.arity;
    j["order"] = seed.order;
    std::vector<unsigned> prefix;
    write_dense(j["coeffs"], seed, prefix);
    return j;
}

AppellSeed seed_from_json(const json &j)
{
    AppellSeed seed;
    seed.omega = rational_from_json(j.at("omega"));
    seed.arity = j.at("arity").get<unsigned>();
    seed.order = j.at("order").get<unsigned>();
    std::vector<unsigned> prefix;
    read_dense(j.at("coeffs"), seed, prefix);
    seed.validate();
    return seed;
}

AppellSeed load_seed_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open seed file '" + path + "'");
    }
    json j;
    in >> j;
    return seed_from_json(j);
}

json record_to_json(const ResultRecord &rec)
{
    json j;
    j["command"] = rec.command;
    j["check"] = rec.check;
    j["params"] = rec.params;
    j["verdict"] = rec.verdict;
    if (!rec.witness_ff.empty()) {
        j["witness"] = {{"ff", rec.witness_ff}, {"monomial", rec.witness_monomial}};
    }
    j["timing_ms"] = rec.timing_ms;
    return j;
}

} // namespace mappell
