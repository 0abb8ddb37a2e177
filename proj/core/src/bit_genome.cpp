#include "bentsmith/bit_genome.hpp"

#include <algorithm>
#include <utility>

#include "bentsmith/error.hpp"

namespace bentsmith {

namespace {

void check_sizes(const BitGenome& a, const BitGenome& b)
{
    if (a.num_vars() != b.num_vars())
        throw SizeMismatch("crossover parents have different lengths");
}

}  // namespace

BitGenome random_bit_genome(int n, RandomStream& rng)
{
    BitGenome g{TruthTable(n)};
    for (auto& w : g.bits.words()) w = rng();
    g.bits.normalize();
    return g;
}

BitGenome flip_at(const BitGenome& g, std::size_t pos)
{
    BitGenome out = g;
    out.bits.flip(pos);
    return out;
}

BitGenome mut_bitflip(const BitGenome& g, RandomStream& rng)
{
    return flip_at(g, uniform_int<std::size_t>(rng, 0, g.bits.size() - 1));
}

BitGenome shuffle_range(const BitGenome& g, std::size_t first, std::size_t last, RandomStream& rng)
{
    BitGenome out = g;
    // Fisher-Yates over [first, last)
    for (std::size_t i = last; i > first + 1; --i) {
        const auto j = uniform_int<std::size_t>(rng, first, i - 1);
        const bool bi = out.bits.get(i - 1);
        out.bits.set(i - 1, out.bits.get(j));
        out.bits.set(j, bi);
    }
    return out;
}

BitGenome mut_mix(const BitGenome& g, RandomStream& rng)
{
    const std::size_t len = g.bits.size();
    auto first = uniform_int<std::size_t>(rng, 0, len);
    auto last = uniform_int<std::size_t>(rng, 0, len - 1);
    if (last >= first) ++last;  // distinct endpoints, uniform over pairs
    if (first > last) std::swap(first, last);
    return shuffle_range(g, first, last, rng);
}

BitGenome one_point_at(const BitGenome& a, const BitGenome& b, std::size_t k)
{
    check_sizes(a, b);
    BitGenome child = a;
    for (std::size_t i = k; i < a.bits.size(); ++i) child.bits.set(i, b.bits.get(i));
    return child;
}

BitGenome cx_one_point(const BitGenome& a, const BitGenome& b, RandomStream& rng)
{
    check_sizes(a, b);
    return one_point_at(a, b, uniform_int<std::size_t>(rng, 1, a.bits.size() - 1));
}

BitGenome cx_uniform(const BitGenome& a, const BitGenome& b, RandomStream& rng)
{
    check_sizes(a, b);
    BitGenome child = a;
    auto aw = a.bits.words();
    auto bw = b.bits.words();
    auto cw = child.bits.words();
    for (std::size_t i = 0; i < cw.size(); ++i) {
        const std::uint64_t pick_b = rng();
        cw[i] = (aw[i] & ~pick_b) | (bw[i] & pick_b);
    }
    child.bits.normalize();
    return child;
}

BitGenome mutate(const BitGenome& g, RandomStream& rng)
{
    return coin(rng) ? mut_bitflip(g, rng) : mut_mix(g, rng);
}

BitGenome crossover(const BitGenome& a, const BitGenome& b, RandomStream& rng)
{
    return coin(rng) ? cx_one_point(a, b, rng) : cx_uniform(a, b, rng);
}

}  // namespace bentsmith
