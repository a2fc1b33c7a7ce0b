#include "mappell/ffpoly.hpp"

#include <atomic>
#include <sstream>

namespace mappell {

namespace {

std::atomic<unsigned> g_degree_cap{64};

} // namespace

unsigned FFPoly::degree_cap()
{
    return g_degree_cap.load();
}

void FFPoly::set_degree_cap(unsigned cap)
{
    g_degree_cap.store(cap);
}

FFPoly::FFPoly(Rational omega, std::vector<Rational> coeffs)
    : omega_(std::move(omega)), coeffs_(std::move(coeffs))
{
    if (omega_ == 0) {
        throw invalid_step_error("step omega must be nonzero");
    }
    trim();
    if (!coeffs_.empty() && coeffs_.size() - 1 > degree_cap()) {
        throw degree_cap_error("polynomial degree exceeds cap " + std::to_string(degree_cap()));
    }
}

void FFPoly::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

FFPoly FFPoly::zero(const Rational &omega)
{
    return FFPoly(omega, {});
}

FFPoly FFPoly::constant(const Rational &omega, const Rational &c)
{
    return FFPoly(omega, {c});
}

FFPoly FFPoly::basis(unsigned n, const Rational &omega)
{
    std::vector<Rational> c(n + 1, Rational(0));
    c[n] = 1;
    return FFPoly(omega, std::move(c));
}

Rational FFPoly::coeff(unsigned k) const
{
    return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

Rational FFPoly::eval(const Rational &x) const
{
    // x^(k+1,w) = x^(k,w) * (x - k w), accumulated incrementally.
    Rational acc = 0;
    Rational basis_val = 1;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        acc += coeffs_[k] * basis_val;
        basis_val *= x - Rational(k) * omega_;
    }
    return acc;
}

std::vector<Rational> FFPoly::to_monomial() const
{
    if (is_zero()) {
        return {};
    }
    std::vector<Rational> result(coeffs_.size(), Rational(0));
    // Monomial form of x^(k,w), built up one factor (x - k w) at a time.
    std::vector<Rational> basis_mono{Rational(1)};
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] != 0) {
            for (std::size_t j = 0; j < basis_mono.size(); ++j) {
                result[j] += coeffs_[k] * basis_mono[j];
            }
        }
        if (k + 1 < coeffs_.size()) {
            const Rational root = Rational(k) * omega_;
            basis_mono.insert(basis_mono.begin(), Rational(0));
            for (std::size_t j = 0; j + 1 < basis_mono.size(); ++j) {
                basis_mono[j] -= root * basis_mono[j + 1];
            }
        }
    }
    while (!result.empty() && result.back() == 0) {
        result.pop_back();
    }
    return result;
}

FFPoly FFPoly::from_monomial(std::span<const Rational> monomial, const Rational &omega)
{
    if (omega == 0) {
        throw invalid_step_error("step omega must be nonzero");
    }
    // FF expansion of x^j, extended via x * x^(k,w) = x^(k+1,w) + k w x^(k,w).
    std::vector<Rational> result(monomial.size(), Rational(0));
    std::vector<Rational> power_ff{Rational(1)};
    for (std::size_t j = 0; j < monomial.size(); ++j) {
        if (monomial[j] != 0) {
            for (std::size_t k = 0; k < power_ff.size(); ++k) {
                result[k] += monomial[j] * power_ff[k];
            }
        }
        if (j + 1 < monomial.size()) {
            std::vector<Rational> next(power_ff.size() + 1, Rational(0));
            for (std::size_t k = 0; k < power_ff.size(); ++k) {
                next[k + 1] += power_ff[k];
                next[k] += Rational(k) * omega * power_ff[k];
            }
            power_ff = std::move(next);
        }
    }
    return FFPoly(omega, std::move(result));
}

FFPoly FFPoly::delta() const
{
    // Delta_w x^(n,w) = n x^(n-1,w).
    if (coeffs_.size() <= 1) {
        return zero(omega_);
    }
    std::vector<Rational> c(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
        c[k - 1] = Rational(k) * coeffs_[k];
    }
    return FFPoly(omega_, std::move(c));
}

FFPoly FFPoly::delta_power(unsigned k) const
{
    FFPoly p = *this;
    for (unsigned i = 0; i < k; ++i) {
        p = p.delta();
    }
    return p;
}

std::vector<FFPoly> FFPoly::shift_argument() const
{
    // p(x+y) = sum_j (Delta^j p)(x) / j! * y^(j,w), from the Vandermonde rule
    // (x+y)^(n,w) = sum_k C(n,k) x^(k,w) y^(n-k,w).
    std::vector<FFPoly> q;
    const unsigned d = is_zero() ? 0 : static_cast<unsigned>(degree());
    FFPoly cur = *this;
    Integer jfact = 1;
    for (unsigned j = 0; j <= d; ++j) {
        if (j > 0) {
            jfact *= j;
            cur = cur.delta();
        }
        q.push_back(Rational(Integer(1), jfact) * cur);
    }
    return q;
}

void FFPoly::require_same_omega(const FFPoly &a, const FFPoly &b)
{
    if (a.omega_ != b.omega_) {
        throw basis_mismatch_error("cannot combine polynomials with different steps omega");
    }
}

FFPoly FFPoly::operator-() const
{
    auto c = coeffs_;
    for (auto &v : c) {
        v = -v;
    }
    return FFPoly(omega_, std::move(c));
}

FFPoly operator+(const FFPoly &a, const FFPoly &b)
{
    FFPoly::require_same_omega(a, b);
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k) {
        c[k] += a.coeffs_[k];
    }
    for (std::size_t k = 0; k < b.coeffs_.size(); ++k) {
        c[k] += b.coeffs_[k];
    }
    return FFPoly(a.omega_, std::move(c));
}

FFPoly operator-(const FFPoly &a, const FFPoly &b)
{
    return a + (-b);
}

FFPoly operator*(const FFPoly &a, const FFPoly &b)
{
    FFPoly::require_same_omega(a, b);
    if (a.is_zero() || b.is_zero()) {
        return FFPoly::zero(a.omega_);
    }
    const std::size_t da = a.coeffs_.size() - 1, db = b.coeffs_.size() - 1;
    std::vector<Rational> c(da + db + 1, Rational(0));
    for (std::size_t m = 0; m <= da; ++m) {
        if (a.coeffs_[m] == 0) {
            continue;
        }
        for (std::size_t n = 0; n <= db; ++n) {
            if (b.coeffs_[n] == 0) {
                continue;
            }
            const Rational cm = a.coeffs_[m] * b.coeffs_[n];
            Rational omega_pow = 1;
            Integer kfact = 1;
            for (std::size_t k = 0; k <= std::min(m, n); ++k) {
                if (k > 0) {
                    kfact *= k;
                    omega_pow *= a.omega_;
                }
                c[m + n - k] += cm *
                                Rational(binomial(static_cast<unsigned>(m), static_cast<unsigned>(k)) *
                                         binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)) *
                                         kfact) *
                                omega_pow;
            }
        }
    }
    return FFPoly(a.omega_, std::move(c));
}

FFPoly operator*(const Rational &s, const FFPoly &p)
{
    auto c = p.coeffs_;
    for (auto &v : c) {
        v *= s;
    }
    return FFPoly(p.omega_, std::move(c));
}

bool operator==(const FFPoly &a, const FFPoly &b)
{
    if (a.is_zero() && b.is_zero()) {
        return true;
    }
    return a.omega_ == b.omega_ && a.coeffs_ == b.coeffs_;
}

std::string FFPoly::to_string() const
{
    if (is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        if (coeffs_[k] == 0) {
            continue;
        }
        Rational c = coeffs_[k];
        if (!first) {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) {
                c = -c;
            }
        }
        first = false;
        const bool unit = (c == 1 || c == -1) && k > 0;
        if (!unit) {
            os << rational_to_string(c);
        } else if (c == -1) {
            os << "-";
        }
        if (k > 0) {
            if (!unit) {
                os << "*";
            }
            os << "x^(" << k << "," << rational_to_string(omega_) << ")";
        }
    }
    return os.str();
}

} // namespace mappell
