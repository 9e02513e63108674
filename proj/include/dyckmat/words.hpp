#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dyckmat {

/// Fixed-length binary string packed into a 64-bit word.
///
/// The leftmost character is the most significant of the size() low bits of
/// packed(). Lengths from 1 to 64 are supported; a default-constructed value
/// is empty and only useful as a placeholder.
class BitString {
public:
    static constexpr int max_size = 64;

    BitString() = default;

    /// Builds from the low `length` bits of `bits`; higher bits must be zero.
    BitString(uint64_t bits, int length);

    /// Parses a contiguous run of '0'/'1' characters.
    static BitString parse(std::string_view text);

    static BitString all_ones(int length);
    static BitString all_zeros(int length);

    int size() const { return len_; }
    bool empty() const { return len_ == 0; }
    uint64_t packed() const { return bits_; }

    /// Character at 0-based position i counting from the left.
    bool bit(int i) const;

    int count_ones() const;
    int count_zeros() const { return len_ - count_ones(); }

    BitString prefix(int k) const;
    BitString suffix(int k) const;

    /// This string followed by `tail`; combined size must stay within 64.
    BitString concat(const BitString& tail) const;

    std::string str() const;

    friend bool operator==(const BitString&, const BitString&) = default;

private:
    uint64_t bits_ = 0;
    uint8_t len_ = 0;
};

/// Exact k-th Catalan number. Throws std::overflow_error once the value
/// leaves the 64-bit range (first at k = 37).
uint64_t catalan(int k);

/// Balanced and prefix-dominant: every prefix has at least as many ones as
/// zeros and the totals are equal. Requires nonempty even length.
bool is_dyck(const BitString& w);

/// Balanced word whose every proper nonempty prefix has strictly more ones
/// than zeros. Equivalent to the form 1 u 0 with u balanced. Such words are
/// self non-overlapping.
bool is_type_alpha(const BitString& w);

/// A validated balanced prefix-dominant word.
class DyckWord {
public:
    explicit DyckWord(BitString word);
    static DyckWord parse(std::string_view text);

    const BitString& bits() const { return word_; }
    int size() const { return word_.size(); }
    int half_length() const { return word_.size() / 2; }

    friend bool operator==(const DyckWord&, const DyckWord&) = default;

private:
    BitString word_;
};

/// Wraps u as 1 u 0, the generic strictly dominant form.
BitString type_alpha_from(const DyckWord& u);

inline constexpr int default_dyck_guard = 32;

/// All balanced prefix-dominant words of the given length, in descending
/// binary order (every '1' sorts before '0'). Length must be even and
/// positive; lengths above the guard are refused.
std::vector<DyckWord> enumerate_dyck(int length, int guard = default_dyck_guard);

enum class OverlapSide {
    PrefixOfFirst,   // a proper prefix of x equals a proper suffix of y
    PrefixOfSecond,  // a proper prefix of y equals a proper suffix of x
};

struct StringOverlap {
    int length = 0;  // smallest witnessing k
    OverlapSide side = OverlapSide::PrefixOfFirst;

    friend bool operator==(const StringOverlap&, const StringOverlap&) = default;
};

/// Smallest k in [1, min(|x|,|y|)-1] such that a proper prefix of one string
/// equals a proper suffix of the other, checking prefix-of-x first at each k.
/// Empty result means the two strings are non-overlapping.
std::optional<StringOverlap> strings_overlap(const BitString& x, const BitString& y);

/// No nonempty proper prefix of w equals one of its own proper suffixes.
bool is_self_non_overlapping(const BitString& w);

}  // namespace dyckmat
