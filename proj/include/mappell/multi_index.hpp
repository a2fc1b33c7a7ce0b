#ifndef MAPPELL_MULTI_INDEX_HPP
#define MAPPELL_MULTI_INDEX_HPP

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mappell {

/// r-tuple of nonnegative integers (n_1, ..., n_r).
class MultiIndex
{
public:
    MultiIndex() = default;
    explicit MultiIndex(std::vector<unsigned> comps) : comps_(std::move(comps)) {}
    static MultiIndex zero(unsigned arity) { return MultiIndex(std::vector<unsigned>(arity, 0u)); }
    /// Unit index e_j (0-based axis).
    static MultiIndex unit(unsigned arity, unsigned axis)
    {
        std::vector<unsigned> c(arity, 0u);
        c.at(axis) = 1u;
        return MultiIndex(std::move(c));
    }

    unsigned arity() const { return static_cast<unsigned>(comps_.size()); }
    unsigned operator[](unsigned i) const { return comps_[i]; }
    const std::vector<unsigned> &components() const { return comps_; }

    unsigned total() const
    {
        unsigned t = 0;
        for (auto c : comps_) {
            t += c;
        }
        return t;
    }

    bool is_zero() const { return total() == 0; }

    MultiIndex incremented(unsigned axis) const
    {
        auto c = comps_;
        ++c.at(axis);
        return MultiIndex(std::move(c));
    }

    /// Throws if the component is already zero.
    MultiIndex decremented(unsigned axis) const
    {
        auto c = comps_;
        if (c.at(axis) == 0) {
            throw std::out_of_range("multi-index component decrement below zero");
        }
        --c[axis];
        return MultiIndex(std::move(c));
    }

    /// Componentwise k <= n.
    bool leq(const MultiIndex &other) const
    {
        if (arity() != other.arity()) {
            return false;
        }
        for (unsigned i = 0; i < arity(); ++i) {
            if (comps_[i] > other.comps_[i]) {
                return false;
            }
        }
        return true;
    }

    /// Componentwise difference; requires other.leq(*this).
    MultiIndex minus(const MultiIndex &other) const
    {
        std::vector<unsigned> c(arity());
        for (unsigned i = 0; i < arity(); ++i) {
            if (other.comps_[i] > comps_[i]) {
                throw std::out_of_range("multi-index subtraction below zero");
            }
            c[i] = comps_[i] - other.comps_[i];
        }
        return MultiIndex(std::move(c));
    }

    friend bool operator==(const MultiIndex &a, const MultiIndex &b) { return a.comps_ == b.comps_; }
    friend bool operator<(const MultiIndex &a, const MultiIndex &b) { return a.comps_ < b.comps_; }

    std::string to_string() const
    {
        std::string s = "(";
        for (unsigned i = 0; i < arity(); ++i) {
            if (i) {
                s += ",";
            }
            s += std::to_string(comps_[i]);
        }
        return s + ")";
    }

private:
    std::vector<unsigned> comps_;
};

/// Visits every index of the given arity with |k| <= max_total, in
/// lexicographic order.
void for_each_index(unsigned arity, unsigned max_total,
                    const std::function<void(const MultiIndex &)> &fn);

/// Visits every k with k <= n componentwise.
void for_each_below(const MultiIndex &n, const std::function<void(const MultiIndex &)> &fn);

} // namespace mappell

#endif
