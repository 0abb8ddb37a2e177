#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "bentsmith/spectral.hpp"
#include "bentsmith/truth_table.hpp"

namespace bentsmith {

enum class ObjectiveKind {
    SelfDualFit1,
    SelfDualFit2,
    AntiSelfDualFit1,
    AntiSelfDualFit2,
    NonlinearityOnly,
};

/// Score of one candidate. Candidates are ordered by `value`; `optimal` is
/// decided exactly (integer arithmetic), never by comparing doubles.
struct FitnessValue {
    double value = 0.0;
    std::int64_t integer_part = 0;
    bool optimal = false;

    friend bool operator==(const FitnessValue&, const FitnessValue&) = default;
};

/// Number of coefficients with W_f(a) = 2^(n/2) * (-1)^(f(a) xor anti).
/// Throws OddN for odd n.
FitnessValue fit1(const TruthTable& tt, const WalshSpectrum& ws, bool anti);

/// fit1 plus the normalized-deviation bonus 1 - D, where
/// D = sum_a |2^(n/2) (-1)^(f(a) xor anti) - W_f(a)| / (2^n 2^(n/2)).
/// The bonus is dropped when D = 0, so the optimum is exactly 2^n. D can
/// exceed 1 for far-from-bent functions; the bonus is floored at 0 there so
/// the integer part always equals fit1.
FitnessValue fit2(const TruthTable& tt, const WalshSpectrum& ws, bool anti);

/// Nonlinearity as fitness; optimal iff bent. Throws OddN for odd n.
FitnessValue fitness_nl(const WalshSpectrum& ws);

class Objective {
  public:
    Objective(ObjectiveKind kind, int n);

    ObjectiveKind kind() const noexcept { return kind_; }
    int num_vars() const noexcept { return n_; }
    bool anti() const noexcept;

    /// 2^n for the duality objectives, 2^(n-1) - 2^(n/2-1) for nonlinearity.
    std::int64_t optimum() const noexcept;

    FitnessValue evaluate(const TruthTable& tt) const;
    FitnessValue evaluate(const TruthTable& tt, const WalshSpectrum& ws) const;

    /// CLI spelling: sd1, sd2, asd1, asd2, nl.
    std::string_view name() const noexcept;
    static ObjectiveKind parse_kind(std::string_view name);

    /// Same objective at a different variable count.
    Objective with_vars(int n) const { return {kind_, n}; }

  private:
    ObjectiveKind kind_;
    int n_;
};

std::string_view to_string(ObjectiveKind kind) noexcept;

}  // namespace bentsmith
