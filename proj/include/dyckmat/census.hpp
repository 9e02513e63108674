#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dyckmat/setgen.hpp"

namespace dyckmat {

/// Closed-form cardinality of the even-width set: the middle-row choice
/// count raised to m-2 times the last-row choice count, both expressed
/// through Catalan numbers. Exact; throws std::overflow_error past 64 bits.
uint64_t cardinality_even(int m, int n);

/// Odd-width counterpart. The last factor uses the Catalan index (n-1)/2,
/// the only integral reading for odd n.
uint64_t cardinality_odd(int m, int n);

/// Parity dispatch over the two formulas.
uint64_t cardinality(int m, int n);

/// value written with two significant digits as mant_x10 / 10 * 10^exp10.
struct TwoSigDigits {
    int mant_x10 = 0;  // 10..99, or value*10 for single-digit values
    int exp10 = 0;

    friend bool operator==(const TwoSigDigits&, const TwoSigDigits&) = default;
};

TwoSigDigits two_sig_truncated(uint64_t value);
TwoSigDigits two_sig_rounded(uint64_t value);

/// The published reference mixes truncation and rounding across cells, so a
/// value agrees when either reading reproduces the printed digits.
bool two_sig_agrees(uint64_t value, int mant_x10, int exp10);

std::string two_sig_str(TwoSigDigits digits);  // "4.1e17"

/// One published reference cell: exact integer or two significant digits.
struct ReferenceValue {
    bool scientific = false;
    uint64_t exact = 0;
    int mant_x10 = 0;
    int exp10 = 0;

    std::string str() const;
};

/// Published reference count for m in 2..10, n in 4..10, absent elsewhere.
/// The n = 5 column is known to disagree with the construction for m >= 3;
/// enumeration settles which count is real.
std::optional<ReferenceValue> reference_count(int m, int n);

enum class Agreement { Match, Mismatch, Unchecked };

const char* agreement_name(Agreement a);

struct CountReport {
    int m = 0;
    int n = 0;
    std::optional<uint64_t> formula_value;       // absent past the 64-bit range
    std::optional<uint64_t> enumerated_value;    // absent past the guard
    std::optional<ReferenceValue> table_value;   // absent outside the published grid
    Agreement agrees = Agreement::Unchecked;     // formula vs enumeration
    Agreement table_agrees = Agreement::Unchecked;  // formula vs published value
    bool known_reference_discrepancy = false;    // the documented n = 5 family
};

/// Compares the closed form against the concrete enumeration (counted from
/// the generated row-choice lists, up to the guard) and against the
/// published reference where one exists. The enumeration is the count of
/// record when the two disagree.
CountReport cross_check(int m, int n, const std::optional<DyckWord>& anchor = {},
                        uint64_t guard = default_set_guard);

/// Formula-only grid over 2 <= m <= m_max, 4 <= n <= n_max with published
/// annotations; cells past the 64-bit range carry an absent formula_value.
std::vector<CountReport> emit_table(int m_max, int n_max);

std::string render_table_text(const std::vector<CountReport>& cells);
std::string render_table_csv(const std::vector<CountReport>& cells);

struct OrientationCount {
    std::optional<uint64_t> value;
    std::string note;  // reason when value is absent
};

/// Formula counts for (m, n) and for the transposed (n, m), each side
/// marked out-of-domain or overflow instead of failing the pair.
std::pair<OrientationCount, OrientationCount> compare_orientations(int m, int n);

}  // namespace dyckmat
