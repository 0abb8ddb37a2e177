#pragma once

#include <vector>

#include "bentsmith/spectral.hpp"
#include "bentsmith/truth_table.hpp"
#include "support/generators.hpp"

namespace bentsmith::testkit {

/// g(y) xor h(z) where y are the high inputs and z the low ones.
inline TruthTable direct_sum(const TruthTable& g, const TruthTable& h)
{
    TruthTable out(g.num_vars() + h.num_vars());
    for (std::size_t i = 0; i < out.size(); ++i)
        out.set(i, g.get(i >> h.num_vars()) != h.get(i & (h.size() - 1)));
    return out;
}

/// Self-dual bent functions of six variables: x1x2 xor h for every
/// self-dual bent h of four variables, and their complements.
inline std::vector<TruthTable> self_dual_six()
{
    const auto x1x2 = TruthTable::from_bits("0001");
    std::vector<TruthTable> out;
    for (const auto& h : census4().self_dual) out.push_back(direct_sum(x1x2, h));
    return out;
}

}  // namespace bentsmith::testkit
