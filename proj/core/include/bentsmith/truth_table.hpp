#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bentsmith {

inline constexpr int kMaxVariables = 16;

/// Value vector of a Boolean function f: F_2^n -> F_2.
///
/// Entry i holds f(x) where x is the big-endian expansion of i, so x_1 is
/// the most significant bit of the index. Bits are packed 64 per word with
/// entry i at bit (i % 64) of word (i / 64); bits beyond 2^n in the last word
/// are always zero.
class TruthTable {
  public:
    /// Constant-zero function of n variables. Throws ConfigInvalid unless
    /// 1 <= n <= 16.
    explicit TruthTable(int n);

    /// Builds from a string of '0'/'1' characters listing f(0), f(1), ...
    static TruthTable from_bits(std::string_view bits);

    /// Projection onto variable `var` (1-based, x_1 most significant).
    static TruthTable variable(int n, int var);

    int num_vars() const noexcept { return n_; }
    std::size_t size() const noexcept { return std::size_t{1} << n_; }

    bool get(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1U; }
    void set(std::size_t i, bool v) noexcept
    {
        const std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (v)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }
    void flip(std::size_t i) noexcept { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    std::span<const std::uint64_t> words() const noexcept { return words_; }
    std::span<std::uint64_t> words() noexcept { return words_; }

    /// Clears the unused high bits of the last word; call after raw word writes.
    void normalize() noexcept;

    std::size_t weight() const noexcept;

    TruthTable complement() const;
    TruthTable operator^(const TruthTable& other) const;
    bool is_constant() const noexcept;

    /// '0'/'1' listing in index order.
    std::string to_bits() const;

    /// Canonical text record `n:<n>;tt:<hex>`; hex nibbles run from index 0
    /// upward, the most significant bit of the first nibble being f(0).
    std::string to_record() const;
    static TruthTable from_record(std::string_view record);

    friend bool operator==(const TruthTable&, const TruthTable&) = default;

  private:
    int n_;
    std::vector<std::uint64_t> words_;
};

/// Number of 64-bit words backing a table of n variables.
constexpr std::size_t word_count(int n) noexcept
{
    return n <= 6 ? 1 : (std::size_t{1} << (n - 6));
}

/// Mask of the valid bits in a single-word table of n <= 6 variables.
constexpr std::uint64_t low_mask(int n) noexcept
{
    return n >= 6 ? ~std::uint64_t{0} : ((std::uint64_t{1} << (std::size_t{1} << n)) - 1);
}

}  // namespace bentsmith
