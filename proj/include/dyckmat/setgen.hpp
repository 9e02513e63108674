#pragma once

#include <cstdint>
#include <iterator>
#include <string>
#include <string_view>
#include <vector>

#include "dyckmat/words.hpp"

namespace dyckmat {

/// Rectangular binary matrix stored as packed rows of uniform width.
class BinaryMatrix {
public:
    BinaryMatrix() = default;
    explicit BinaryMatrix(std::vector<BitString> rows);

    int rows() const { return static_cast<int>(rows_.size()); }
    int cols() const { return rows_.empty() ? 0 : rows_[0].size(); }
    const BitString& row(int i) const;
    bool bit(int r, int c) const { return row(r).bit(c); }

    /// One line of '0'/'1' characters per row, each newline-terminated.
    std::string text() const;
    static BinaryMatrix parse_text(std::string_view text);

    friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;

private:
    std::vector<BitString> rows_;
};

/// Parameters of one constructed matrix set: dimensions plus the anchor word
/// that fixes the first row. For even n the first row is 1 u 0 with u
/// balanced of length n-2; for odd n it is 1 v with v a strictly dominant
/// balanced word of length n-1.
class SetSpec {
public:
    SetSpec(int m, int n, DyckWord anchor);

    /// Staircase anchor 1..10..0 of the appropriate length.
    static SetSpec with_default_anchor(int m, int n);

    int m() const { return m_; }
    int n() const { return n_; }
    const DyckWord& anchor() const { return anchor_; }
    bool odd_n() const { return n_ % 2 != 0; }

    /// The fixed first row derived from the anchor.
    BitString first_row() const;

    friend bool operator==(const SetSpec&, const SetSpec&) = default;

private:
    int m_;
    int n_;
    DyckWord anchor_;
};

/// Row classification relative to a first row and an excluded word.
/// Even-width rows fall into five patterns, odd-width rows into three;
/// anything else is Other. Alpha marks the first row itself.
enum class RowKind { Alpha, T1, T2, T3, T4, T5, T6, T7, T8, Other };

const char* row_kind_name(RowKind kind);

/// Environment for classify_row: the first row plus the word excluded from
/// the derived patterns. SetSpec always produces a valid one; raw() admits
/// arbitrary strings so candidate scans can be run against first rows that
/// no valid anchor produces.
struct RowContext {
    int n = 0;
    bool odd = false;
    BitString first_row;
    BitString excluded;

    static RowContext of(const SetSpec& spec);

    /// Parity is inferred from the lengths: excluded must be two shorter
    /// (even) or one shorter (odd) than first_row.
    static RowContext raw(const BitString& first_row, const BitString& excluded);
};

/// Lowest-numbered pattern the row matches, Alpha if it equals the first
/// row, Other if nothing matches. Row width must equal ctx.n.
RowKind classify_row(const BitString& row, const RowContext& ctx);
RowKind classify_row(const BitString& row, const SetSpec& spec);

/// Legal choices for rows 2..m-1, in generation order, duplicates removed.
std::vector<BitString> middle_row_choices(const SetSpec& spec);

/// Legal choices for the last row (the patterns that keep a trailing-row
/// prefix from matching the first row's suffix).
std::vector<BitString> last_row_choices(const SetSpec& spec);

inline constexpr uint64_t default_set_guard = 1'000'000;

/// Sentinel for SetEnumeration: no cardinality cap.
inline constexpr uint64_t no_set_guard = ~uint64_t{0};

/// Random-access view of the full matrix set in mixed-radix order: rows
/// 2..m-1 are digits over middle_row_choices (most significant first) and
/// the last row is the least significant digit over last_row_choices.
class SetEnumeration {
public:
    explicit SetEnumeration(const SetSpec& spec, uint64_t guard = default_set_guard);

    const SetSpec& spec() const { return spec_; }
    uint64_t size() const { return size_; }
    BinaryMatrix at(uint64_t index) const;

    /// Inverse of at(); throws std::invalid_argument for non-members.
    uint64_t rank(const BinaryMatrix& mat) const;

    const std::vector<BitString>& middle_choices() const { return middle_; }
    const std::vector<BitString>& last_choices() const { return last_; }

    class const_iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = BinaryMatrix;
        using difference_type = std::ptrdiff_t;

        const_iterator() = default;
        const_iterator(const SetEnumeration* owner, uint64_t index)
            : owner_(owner), index_(index) {}

        BinaryMatrix operator*() const { return owner_->at(index_); }
        const_iterator& operator++() { ++index_; return *this; }
        const_iterator operator++(int) { auto old = *this; ++index_; return old; }
        friend bool operator==(const const_iterator&, const const_iterator&) = default;

    private:
        const SetEnumeration* owner_ = nullptr;
        uint64_t index_ = 0;
    };

    const_iterator begin() const { return {this, 0}; }
    const_iterator end() const { return {this, size_}; }

private:
    SetSpec spec_;
    std::vector<BitString> middle_;
    std::vector<BitString> last_;
    uint64_t size_ = 0;
};

/// Guard-checked enumeration of the whole set.
SetEnumeration enumerate_set(const SetSpec& spec, uint64_t guard = default_set_guard);

/// The index-th matrix of the enumeration order, without a cardinality cap.
BinaryMatrix unrank(const SetSpec& spec, uint64_t index);

/// Position of a member matrix in the enumeration order.
uint64_t rank(const SetSpec& spec, const BinaryMatrix& mat);

struct MemberCheck {
    bool ok = false;
    std::string diagnosis;  // empty when ok; names the first offending row otherwise
};

/// Structural membership test against the row rules of the spec.
MemberCheck validate_member(const SetSpec& spec, const BinaryMatrix& mat);

}  // namespace dyckmat
