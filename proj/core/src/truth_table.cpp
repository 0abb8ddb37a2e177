#include "bentsmith/truth_table.hpp"

#include <algorithm>
#include <bit>
#include <charconv>

#include "bentsmith/error.hpp"

namespace bentsmith {

namespace {

void check_arity(int n)
{
    if (n < 1 || n > kMaxVariables)
        throw ConfigInvalid("variable count must be in [1, 16], got " + std::to_string(n));
}

int hex_value(char c)
{
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

}  // namespace

TruthTable::TruthTable(int n) : n_(n)
{
    check_arity(n);
    words_.assign(word_count(n), 0);
}

TruthTable TruthTable::from_bits(std::string_view bits)
{
    const auto len = bits.size();
    if (len < 2 || !std::has_single_bit(len))
        throw ParseError("bit string length must be a power of two >= 2, got " + std::to_string(len));
    TruthTable tt(std::countr_zero(len));
    for (std::size_t i = 0; i < len; ++i) {
        if (bits[i] != '0' && bits[i] != '1')
            throw ParseError(std::string("invalid bit character '") + bits[i] + "'");
        tt.set(i, bits[i] == '1');
    }
    return tt;
}

TruthTable TruthTable::variable(int n, int var)
{
    TruthTable tt(n);
    if (var < 1 || var > n)
        throw UnboundVariable("variable x" + std::to_string(var) + " outside 1.." + std::to_string(n));
    const int shift = n - var;
    for (std::size_t i = 0; i < tt.size(); ++i)
        tt.set(i, (i >> shift) & 1U);
    return tt;
}

void TruthTable::normalize() noexcept
{
    if (n_ < 6) words_[0] &= low_mask(n_);
}

std::size_t TruthTable::weight() const noexcept
{
    std::size_t w = 0;
    for (auto word : words_) w += static_cast<std::size_t>(std::popcount(word));
    return w;
}

TruthTable TruthTable::complement() const
{
    TruthTable out = *this;
    for (auto& w : out.words_) w = ~w;
    out.normalize();
    return out;
}

TruthTable TruthTable::operator^(const TruthTable& other) const
{
    if (other.n_ != n_)
        throw SizeMismatch("xor of tables with different variable counts");
    TruthTable out = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] ^= other.words_[i];
    return out;
}

bool TruthTable::is_constant() const noexcept
{
    const auto w = weight();
    return w == 0 || w == size();
}

std::string TruthTable::to_bits() const
{
    std::string s(size(), '0');
    for (std::size_t i = 0; i < size(); ++i)
        if (get(i)) s[i] = '1';
    return s;
}

std::string TruthTable::to_record() const
{
    static constexpr char digits[] = "0123456789abcdef";
    const std::size_t nibbles = (size() + 3) / 4;
    std::string hex(nibbles, '0');
    for (std::size_t k = 0; k < nibbles; ++k) {
        unsigned v = 0;
        for (std::size_t b = 0; b < 4; ++b) {
            const std::size_t i = 4 * k + b;
            v = (v << 1) | (i < size() && get(i) ? 1U : 0U);
        }
        hex[k] = digits[v];
    }
    return "n:" + std::to_string(n_) + ";tt:" + hex;
}

TruthTable TruthTable::from_record(std::string_view record)
{
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
        return s;
    };
    record = trim(record);
    if (!record.starts_with("n:"))
        throw ParseError("record must start with 'n:'");
    const auto semi = record.find(';');
    if (semi == std::string_view::npos)
        throw ParseError("record is missing ';tt:'");
    const auto n_text = record.substr(2, semi - 2);
    int n = 0;
    const auto [ptr, ec] = std::from_chars(n_text.data(), n_text.data() + n_text.size(), n);
    if (ec != std::errc{} || ptr != n_text.data() + n_text.size())
        throw ParseError("invalid variable count '" + std::string(n_text) + "'");
    if (n < 1 || n > kMaxVariables)
        throw ParseError("variable count out of range: " + std::to_string(n));
    auto rest = record.substr(semi + 1);
    if (!rest.starts_with("tt:"))
        throw ParseError("expected 'tt:' after ';'");
    const auto hex = rest.substr(3);

    TruthTable tt(n);
    const std::size_t nibbles = (tt.size() + 3) / 4;
    if (hex.size() != nibbles)
        throw ParseError("expected " + std::to_string(nibbles) + " hex digits for n=" + std::to_string(n) + ", got " +
                         std::to_string(hex.size()));
    for (std::size_t k = 0; k < nibbles; ++k) {
        const int v = hex_value(hex[k]);
        if (v < 0)
            throw ParseError(std::string("invalid hex digit '") + hex[k] + "'");
        for (std::size_t b = 0; b < 4; ++b) {
            const std::size_t i = 4 * k + b;
            const bool bit = (v >> (3 - b)) & 1;
            if (i < tt.size())
                tt.set(i, bit);
            else if (bit)
                throw ParseError("non-zero padding bits in hex record");
        }
    }
    return tt;
}

}  // namespace bentsmith
