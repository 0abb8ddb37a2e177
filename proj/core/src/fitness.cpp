#include "bentsmith/fitness.hpp"

#include <algorithm>
#include <cstdlib>

#include "bentsmith/error.hpp"

namespace bentsmith {

namespace {

void require_even(int n)
{
    if (n % 2 != 0) throw OddN(n);
}

std::int32_t target(const TruthTable& tt, std::size_t a, bool anti) noexcept
{
    const std::int32_t flat = 1 << (tt.num_vars() / 2);
    return (tt.get(a) != anti) ? -flat : flat;
}

void check_pair(const TruthTable& tt, const WalshSpectrum& ws)
{
    if (tt.num_vars() != ws.n || ws.coeffs.size() != tt.size())
        throw SizeMismatch("truth table and spectrum describe different variable counts");
}

}  // namespace

FitnessValue fit1(const TruthTable& tt, const WalshSpectrum& ws, bool anti)
{
    require_even(tt.num_vars());
    check_pair(tt, ws);
    std::int64_t hits = 0;
    for (std::size_t a = 0; a < tt.size(); ++a)
        hits += ws.coeffs[a] == target(tt, a, anti);
    return {static_cast<double>(hits), hits, hits == static_cast<std::int64_t>(tt.size())};
}

FitnessValue fit2(const TruthTable& tt, const WalshSpectrum& ws, bool anti)
{
    FitnessValue base = fit1(tt, ws, anti);
    std::int64_t deviation = 0;
    for (std::size_t a = 0; a < tt.size(); ++a)
        deviation += std::abs(target(tt, a, anti) - ws.coeffs[a]);
    if (deviation == 0) return base;

    const auto denominator = static_cast<double>(std::int64_t{1} << (tt.num_vars() + tt.num_vars() / 2));
    const double bonus = std::max(0.0, 1.0 - static_cast<double>(deviation) / denominator);
    base.value += bonus;
    return base;
}

FitnessValue fitness_nl(const WalshSpectrum& ws)
{
    require_even(ws.n);
    const int nl = nonlinearity(ws);
    return {static_cast<double>(nl), nl, is_bent(ws)};
}

Objective::Objective(ObjectiveKind kind, int n) : kind_(kind), n_(n)
{
    if (n < 2 || n > kMaxVariables) throw ConfigInvalid("objective variable count out of range: " + std::to_string(n));
    require_even(n);
}

bool Objective::anti() const noexcept
{
    return kind_ == ObjectiveKind::AntiSelfDualFit1 || kind_ == ObjectiveKind::AntiSelfDualFit2;
}

std::int64_t Objective::optimum() const noexcept
{
    if (kind_ == ObjectiveKind::NonlinearityOnly) return (std::int64_t{1} << (n_ - 1)) - (std::int64_t{1} << (n_ / 2 - 1));
    return std::int64_t{1} << n_;
}

FitnessValue Objective::evaluate(const TruthTable& tt) const
{
    return evaluate(tt, wht_fast(tt));
}

FitnessValue Objective::evaluate(const TruthTable& tt, const WalshSpectrum& ws) const
{
    if (tt.num_vars() != n_)
        throw SizeMismatch("objective expects " + std::to_string(n_) + " variables, got " +
                           std::to_string(tt.num_vars()));
    switch (kind_) {
        case ObjectiveKind::SelfDualFit1: return fit1(tt, ws, false);
        case ObjectiveKind::SelfDualFit2: return fit2(tt, ws, false);
        case ObjectiveKind::AntiSelfDualFit1: return fit1(tt, ws, true);
        case ObjectiveKind::AntiSelfDualFit2: return fit2(tt, ws, true);
        case ObjectiveKind::NonlinearityOnly: return fitness_nl(ws);
    }
    return {};
}

std::string_view Objective::name() const noexcept
{
    return to_string(kind_);
}

std::string_view to_string(ObjectiveKind kind) noexcept
{
    switch (kind) {
        case ObjectiveKind::SelfDualFit1: return "sd1";
        case ObjectiveKind::SelfDualFit2: return "sd2";
        case ObjectiveKind::AntiSelfDualFit1: return "asd1";
        case ObjectiveKind::AntiSelfDualFit2: return "asd2";
        case ObjectiveKind::NonlinearityOnly: return "nl";
    }
    return "?";
}

ObjectiveKind Objective::parse_kind(std::string_view name)
{
    for (auto k : {ObjectiveKind::SelfDualFit1, ObjectiveKind::SelfDualFit2, ObjectiveKind::AntiSelfDualFit1,
                   ObjectiveKind::AntiSelfDualFit2, ObjectiveKind::NonlinearityOnly})
        if (to_string(k) == name) return k;
    throw ConfigInvalid("unknown objective '" + std::string(name) + "' (expected sd1|sd2|asd1|asd2|nl)");
}

}  // namespace bentsmith
