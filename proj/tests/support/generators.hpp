#pragma once

#include <cstdint>
#include <vector>

#include "bentsmith/oracle.hpp"
#include "bentsmith/random.hpp"
#include "bentsmith/truth_table.hpp"

namespace bentsmith::testkit {

inline TruthTable random_table(int n, RandomStream& rng)
{
    TruthTable tt(n);
    for (auto& w : tt.words()) w = rng();
    tt.normalize();
    return tt;
}

/// Every function of n variables, n <= 4.
inline std::vector<TruthTable> all_tables(int n)
{
    std::vector<TruthTable> out;
    const std::uint64_t total = std::uint64_t{1} << (std::size_t{1} << n);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        TruthTable tt(n);
        for (std::size_t i = 0; i < tt.size(); ++i) tt.set(i, (idx >> i) & 1U);
        out.push_back(tt);
    }
    return out;
}

/// The n=4 census, computed once per test binary.
inline const oracle::CensusReport& census4()
{
    static const auto report = oracle::census(4);
    return report;
}

/// All bent functions of four variables, found by direct transform.
inline const std::vector<TruthTable>& bent4()
{
    static const auto tables = [] {
        std::vector<TruthTable> out;
        for (const auto& tt : all_tables(4)) {
            const auto ws = oracle::wht_direct(tt);
            bool flat = true;
            for (auto c : ws.coeffs) flat = flat && (c == 4 || c == -4);
            if (flat) out.push_back(tt);
        }
        return out;
    }();
    return tables;
}

}  // namespace bentsmith::testkit
