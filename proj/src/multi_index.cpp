#include "mappell/multi_index.hpp"

namespace mappell {

namespace {

void enumerate_simplex(std::vector<unsigned> &cur, unsigned pos, unsigned budget,
                       const std::function<void(const MultiIndex &)> &fn)
{
    if (pos == cur.size()) {
        fn(MultiIndex(cur));
        return;
    }
    for (unsigned v = 0; v <= budget; ++v) {
        cur[pos] = v;
        enumerate_simplex(cur, pos + 1, budget - v, fn);
    }
    cur[pos] = 0;
}

void enumerate_box(std::vector<unsigned> &cur, unsigned pos, const MultiIndex &n,
                   const std::function<void(const MultiIndex &)> &fn)
{
    if (pos == cur.size()) {
        fn(MultiIndex(cur));
        return;
    }
    for (unsigned v = 0; v <= n[pos]; ++v) {
        cur[pos] = v;
        enumerate_box(cur, pos + 1, n, fn);
    }
    cur[pos] = 0;
}

} // namespace

void for_each_index(unsigned arity, unsigned max_total,
                    const std::function<void(const MultiIndex &)> &fn)
{
    std::vector<unsigned> cur(arity, 0u);
    enumerate_simplex(cur, 0, max_total, fn);
}

void for_each_below(const MultiIndex &n, const std::function<void(const MultiIndex &)> &fn)
{
    std::vector<unsigned> cur(n.arity(), 0u);
    enumerate_box(cur, 0, n, fn);
}

} // namespace mappell
