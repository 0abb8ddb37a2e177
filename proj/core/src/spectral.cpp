#include "bentsmith/spectral.hpp"

#include <algorithm>
#include <cstdlib>

#include "bentsmith/error.hpp"

namespace bentsmith {

std::int32_t WalshSpectrum::max_abs() const noexcept
{
    std::int32_t m = 0;
    for (auto c : coeffs) m = std::max(m, std::abs(c));
    return m;
}

WalshSpectrum wht_fast(const TruthTable& tt)
{
    WalshSpectrum ws{tt.num_vars(), std::vector<std::int32_t>(tt.size())};
    auto& w = ws.coeffs;
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = tt.get(i) ? -1 : 1;

    for (std::size_t half = 1; half < w.size(); half <<= 1) {
        for (std::size_t block = 0; block < w.size(); block += 2 * half) {
            for (std::size_t j = block; j < block + half; ++j) {
                const auto u = w[j];
                const auto v = w[j + half];
                w[j] = u + v;
                w[j + half] = u - v;
            }
        }
    }
    return ws;
}

int nonlinearity(const WalshSpectrum& ws) noexcept
{
    return (1 << (ws.n - 1)) - ws.max_abs() / 2;
}

int bent_nonlinearity(int n)
{
    if (n % 2 != 0) throw OddN(n);
    return (1 << (n - 1)) - (1 << (n / 2 - 1));
}

bool is_bent(const WalshSpectrum& ws) noexcept
{
    if (ws.n % 2 != 0) return false;
    const std::int32_t flat = 1 << (ws.n / 2);
    return std::all_of(ws.coeffs.begin(), ws.coeffs.end(), [flat](auto c) { return std::abs(c) == flat; });
}

TruthTable dual(const WalshSpectrum& ws)
{
    if (!is_bent(ws)) throw NotBent();
    TruthTable out(ws.n);
    for (std::size_t a = 0; a < ws.coeffs.size(); ++a) out.set(a, ws.coeffs[a] < 0);
    return out;
}

TruthTable dual(const TruthTable& tt)
{
    return dual(wht_fast(tt));
}

SpectralReport classify(const TruthTable& tt, const WalshSpectrum& ws)
{
    SpectralReport r;
    r.max_abs_coeff = ws.max_abs();
    r.nonlinearity = nonlinearity(ws);
    r.is_bent = is_bent(ws);
    if (r.is_bent) {
        const auto diff = dual(ws) ^ tt;
        const auto w = diff.weight();
        r.is_self_dual = w == 0;
        r.is_anti_self_dual = w == diff.size();
    }
    return r;
}

SpectralReport classify(const TruthTable& tt)
{
    return classify(tt, wht_fast(tt));
}

}  // namespace bentsmith
