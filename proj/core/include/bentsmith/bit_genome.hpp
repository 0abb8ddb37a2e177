#pragma once

#include <cstddef>

#include "bentsmith/random.hpp"
#include "bentsmith/truth_table.hpp"

namespace bentsmith {

/// Truth-table encoding: the genome is the value vector itself.
struct BitGenome {
    TruthTable bits;

    int num_vars() const noexcept { return bits.num_vars(); }
    friend bool operator==(const BitGenome&, const BitGenome&) = default;
};

/// Every bit independent and uniform.
BitGenome random_bit_genome(int n, RandomStream& rng);

BitGenome mut_bitflip(const BitGenome& g, RandomStream& rng);
BitGenome flip_at(const BitGenome& g, std::size_t pos);

/// Uniformly permutes the bits of a random range [first, last), where the
/// pair is uniform over 0 <= first < last <= 2^n.
BitGenome mut_mix(const BitGenome& g, RandomStream& rng);
BitGenome shuffle_range(const BitGenome& g, std::size_t first, std::size_t last, RandomStream& rng);

/// a[0, k) ++ b[k, 2^n) with k uniform in [1, 2^n - 1].
BitGenome cx_one_point(const BitGenome& a, const BitGenome& b, RandomStream& rng);
BitGenome one_point_at(const BitGenome& a, const BitGenome& b, std::size_t k);

BitGenome cx_uniform(const BitGenome& a, const BitGenome& b, RandomStream& rng);

/// Engine entry points: pick one registered operator of the arity uniformly.
BitGenome mutate(const BitGenome& g, RandomStream& rng);
BitGenome crossover(const BitGenome& a, const BitGenome& b, RandomStream& rng);

}  // namespace bentsmith
