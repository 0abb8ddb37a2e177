#pragma once

#include <cstdint>
#include <vector>

#include "bentsmith/truth_table.hpp"

namespace bentsmith {

/// Walsh-Hadamard coefficients W_f(a), indexed like TruthTable.
struct WalshSpectrum {
    int n = 0;
    std::vector<std::int32_t> coeffs;

    std::int32_t max_abs() const noexcept;
    friend bool operator==(const WalshSpectrum&, const WalshSpectrum&) = default;
};

struct SpectralReport {
    int nonlinearity = 0;
    bool is_bent = false;
    bool is_self_dual = false;
    bool is_anti_self_dual = false;
    std::int32_t max_abs_coeff = 0;

    friend bool operator==(const SpectralReport&, const SpectralReport&) = default;
};

/// Exact O(n 2^n) butterfly over the sign vector (-1)^f(x).
WalshSpectrum wht_fast(const TruthTable& tt);

/// 2^(n-1) - max|W_f| / 2
int nonlinearity(const WalshSpectrum& ws) noexcept;

/// Covering-radius bound 2^(n-1) - 2^(n/2-1); only meaningful for even n.
int bent_nonlinearity(int n);

/// True iff n is even and every |W_f(a)| equals 2^(n/2).
bool is_bent(const WalshSpectrum& ws) noexcept;

/// Dual read off the spectrum signs: 0 where W_f = +2^(n/2), 1 where negative.
/// Throws NotBent for a non-flat spectrum.
TruthTable dual(const TruthTable& tt);
TruthTable dual(const WalshSpectrum& ws);

SpectralReport classify(const TruthTable& tt);
SpectralReport classify(const TruthTable& tt, const WalshSpectrum& ws);

}  // namespace bentsmith
