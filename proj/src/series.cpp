#include "mappell/series.hpp"

namespace mappell {

MultiSeries::MultiSeries(unsigned arity, unsigned order, Rational omega)
    : arity_(arity), order_(order), omega_(std::move(omega))
{
    if (arity_ == 0) {
        throw std::invalid_argument("series arity must be at least 1");
    }
    if (omega_ == 0) {
        throw invalid_step_error("step omega must be nonzero");
    }
}

FFPoly MultiSeries::coeff(const MultiIndex &k) const
{
    const auto it = terms_.find(k);
    return it == terms_.end() ? FFPoly::zero(omega_) : it->second;
}

void MultiSeries::set_coeff(const MultiIndex &k, FFPoly value)
{
    if (k.arity() != arity_) {
        throw std::invalid_argument("index arity does not match series arity");
    }
    if (k.total() > order_) {
        throw out_of_order_error("index " + k.to_string() + " beyond truncation order " +
                                 std::to_string(order_));
    }
    if (value.is_zero()) {
        terms_.erase(k);
    } else {
        terms_.insert_or_assign(k, std::move(value));
    }
}

MultiSeries MultiSeries::derivative(unsigned axis) const
{
    if (order_ == 0) {
        return MultiSeries(arity_, 0, omega_);
    }
    MultiSeries d(arity_, order_ - 1, omega_);
    for (const auto &[k, c] : terms_) {
        if (k[axis] == 0) {
            continue;
        }
        d.set_coeff(k.decremented(axis), Rational(k[axis]) * c);
    }
    return d;
}

MultiSeries MultiSeries::times_variable(unsigned axis) const
{
    MultiSeries r(arity_, order_, omega_);
    for (const auto &[k, c] : terms_) {
        const auto shifted = k.incremented(axis);
        if (shifted.total() <= order_) {
            r.set_coeff(shifted, c);
        }
    }
    return r;
}

MultiSeries MultiSeries::times_poly(const FFPoly &p) const
{
    MultiSeries r(arity_, order_, omega_);
    for (const auto &[k, c] : terms_) {
        r.set_coeff(k, p * c);
    }
    return r;
}

MultiSeries MultiSeries::truncated(unsigned new_order) const
{
    MultiSeries r(arity_, new_order, omega_);
    for (const auto &[k, c] : terms_) {
        if (k.total() <= new_order) {
            r.set_coeff(k, c);
        }
    }
    return r;
}

void MultiSeries::require_compatible(const MultiSeries &a, const MultiSeries &b)
{
    if (a.arity_ != b.arity_) {
        throw std::invalid_argument("series arity mismatch");
    }
    if (a.omega_ != b.omega_) {
        throw basis_mismatch_error("series step omega mismatch");
    }
}

MultiSeries operator+(const MultiSeries &a, const MultiSeries &b)
{
    MultiSeries::require_compatible(a, b);
    MultiSeries r(a.arity_, std::min(a.order_, b.order_), a.omega_);
    for (const auto &[k, c] : a.terms_) {
        if (k.total() <= r.order_) {
            r.set_coeff(k, c + b.coeff(k));
        }
    }
    for (const auto &[k, c] : b.terms_) {
        if (k.total() <= r.order_ && a.terms_.find(k) == a.terms_.end()) {
            r.set_coeff(k, c);
        }
    }
    return r;
}

MultiSeries operator-(const MultiSeries &a, const MultiSeries &b)
{
    return a + Rational(-1) * b;
}

MultiSeries operator*(const Rational &s, const MultiSeries &a)
{
    MultiSeries r(a.arity_, a.order_, a.omega_);
    for (const auto &[k, c] : a.terms_) {
        r.set_coeff(k, s * c);
    }
    return r;
}

MultiSeries operator*(const MultiSeries &a, const MultiSeries &b)
{
    MultiSeries::require_compatible(a, b);
    MultiSeries r(a.arity_, std::min(a.order_, b.order_), a.omega_);
    std::map<MultiIndex, FFPoly> acc;
    for (const auto &[ka, ca] : a.terms_) {
        for (const auto &[kb, cb] : b.terms_) {
            std::vector<unsigned> sum(a.arity_);
            unsigned tot = 0;
            for (unsigned i = 0; i < a.arity_; ++i) {
                sum[i] = ka[i] + kb[i];
                tot += sum[i];
            }
            if (tot > r.order_) {
                continue;
            }
            MultiIndex k(std::move(sum));
            auto [it, inserted] = acc.try_emplace(k, ca * cb);
            if (!inserted) {
                it->second = it->second + ca * cb;
            }
        }
    }
    for (auto &[k, c] : acc) {
        r.set_coeff(k, std::move(c));
    }
    return r;
}

bool operator==(const MultiSeries &a, const MultiSeries &b)
{
    if (a.arity_ != b.arity_ || a.order_ != b.order_) {
        return false;
    }
    return a.terms_ == b.terms_;
}

MultiSeries series_exp_linear(const std::vector<Rational> &c, unsigned order, const Rational &omega)
{
    const unsigned arity = static_cast<unsigned>(c.size());
    MultiSeries s(arity, order, omega);
    for_each_index(arity, order, [&](const MultiIndex &k) {
        Rational v = 1;
        for (unsigned i = 0; i < arity; ++i) {
            v *= pow_rational(c[i], k[i]);
            v /= Rational(factorial(k[i]));
        }
        s.set_coeff(k, FFPoly::constant(omega, v));
    });
    return s;
}

MultiSeries series_newton_binomial(const Rational &omega, unsigned order, unsigned arity)
{
    MultiSeries s(arity, order, omega);
    for_each_index(arity, order, [&](const MultiIndex &k) {
        Integer denom = 1;
        for (unsigned i = 0; i < arity; ++i) {
            denom *= factorial(k[i]);
        }
        s.set_coeff(k, Rational(Integer(1), denom) * FFPoly::basis(k.total(), omega));
    });
    return s;
}

MultiSeries series_from_seed(const std::map<MultiIndex, Rational> &seed, const Rational &omega,
                             unsigned order, unsigned arity)
{
    const auto zero_it = seed.find(MultiIndex::zero(arity));
    if (zero_it == seed.end() || zero_it->second == 0) {
        throw degenerate_seed_error("seed coefficient at the zero index must be nonzero");
    }
    MultiSeries s(arity, order, omega);
    for (const auto &[k, a] : seed) {
        if (k.arity() != arity) {
            throw std::invalid_argument("seed index arity mismatch");
        }
        if (k.total() > order) {
            continue;
        }
        Integer denom = 1;
        for (unsigned i = 0; i < arity; ++i) {
            denom *= factorial(k[i]);
        }
        s.set_coeff(k, FFPoly::constant(omega, a * Rational(Integer(1), denom)));
    }
    return s;
}

std::map<MultiIndex, FFPoly> extract_family(const MultiSeries &s)
{
    std::map<MultiIndex, FFPoly> fam;
    for_each_index(s.arity(), s.order(),
                   [&](const MultiIndex &n) { fam.insert_or_assign(n, extract_member(s, n)); });
    return fam;
}

FFPoly extract_member(const MultiSeries &s, const MultiIndex &n)
{
    if (n.total() > s.order()) {
        throw out_of_order_error("index " + n.to_string() + " beyond truncation order " +
                                 std::to_string(s.order()));
    }
    Integer fact = 1;
    for (unsigned i = 0; i < n.arity(); ++i) {
        fact *= factorial(n[i]);
    }
    return Rational(fact) * s.coeff(n);
}

} // namespace mappell
