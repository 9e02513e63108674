#pragma once

#include <optional>
#include <vector>

#include "dyckmat/overlap.hpp"
#include "dyckmat/setgen.hpp"
#include "dyckmat/words.hpp"

namespace dyckmat {

/// Screening result for one prospective extra-row string. A valid candidate
/// matches none of the row patterns (so the construction never generates it)
/// and is string-non-overlapping with the first row.
struct ExpansionCandidate {
    BitString x;
    RowKind classified = RowKind::Other;
    std::optional<StringOverlap> first_row_overlap;

    bool matches_row_pattern() const { return classified != RowKind::Other; }
    bool nonoverlap_ok() const { return !first_row_overlap.has_value(); }
    bool valid() const { return !matches_row_pattern() && nonoverlap_ok(); }

    /// The row patterns the string fails to match; all of them for a valid
    /// candidate.
    std::vector<RowKind> excluded_types(bool odd) const;
};

ExpansionCandidate screen_expansion_candidate(const BitString& x, const RowContext& ctx);

inline constexpr int default_expand_guard = 24;

/// Every length-n string that could extend the set: classifies as no row
/// pattern, differs from the first row, and is non-overlapping with it.
/// Exhaustive over all 2^n strings, descending binary order; widths above
/// the guard are refused.
std::vector<BitString> find_expansion_strings(const RowContext& ctx,
                                              int guard = default_expand_guard);
std::vector<BitString> find_expansion_strings(const SetSpec& spec,
                                              int guard = default_expand_guard);

/// The m x n matrix whose first row is the set's derived first row and whose other
/// rows all equal x. Throws std::invalid_argument naming the violated
/// property when x is not a valid expansion candidate.
BinaryMatrix build_z(const SetSpec& spec, const BitString& x);

/// Verifies the generated set together with the extra matrix built from x.
/// A passing report certifies the generated set is expandable.
VerifyReport verify_expansion(const SetSpec& spec, const BitString& x,
                              uint64_t guard = default_set_guard);

struct CompatibleRow {
    BitString row;
    RowKind kind = RowKind::Other;

    friend bool operator==(const CompatibleRow&, const CompatibleRow&) = default;
};

/// Every length-n string (any classification) that differs from the first
/// row and is string-non-overlapping with it, annotated with its row kind.
/// Exhaustive, descending binary order.
std::vector<CompatibleRow> find_compatible_rows(const RowContext& ctx,
                                                int guard = default_expand_guard);
std::vector<CompatibleRow> find_compatible_rows(const SetSpec& spec,
                                                int guard = default_expand_guard);

}  // namespace dyckmat
