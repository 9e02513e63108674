#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dyckmat/setgen.hpp"

namespace dyckmat {

/// Rigid translation of the second matrix relative to the first: shifted
/// down dr rows and right dc columns (negative values shift up/left).
struct Offset {
    int dr = 0;
    int dc = 0;

    friend bool operator==(const Offset&, const Offset&) = default;
};

enum class WitnessKind { Vertical, Horizontal, Corner };

const char* witness_kind_name(WitnessKind kind);

/// Vertical: pure row shift. Horizontal: pure column shift. Corner: both
/// components nonzero (and the degenerate (0,0) duplicate case).
WitnessKind witness_kind(Offset off);

struct OverlapWitness {
    Offset offset;
    int window_rows = 0;
    int window_cols = 0;
    WitnessKind kind = WitnessKind::Corner;

    friend bool operator==(const OverlapWitness&, const OverlapWitness&) = default;
};

/// True iff every cell in the control window of the translation agrees.
/// Both matrices must be m x n and the offset within |dr| <= m-1,
/// |dc| <= n-1. The window at (0,0) is the full matrix.
bool overlap_at(const BinaryMatrix& a, const BinaryMatrix& b, Offset off);

/// First witness in row-major offset order (dr ascending, then dc), or
/// empty when the pair is non-overlapping. When a and b are equal as
/// values the (0,0) offset is skipped (self test); verify_set reports
/// duplicates at distinct positions separately.
std::optional<OverlapWitness> find_overlap_witness(const BinaryMatrix& a,
                                                   const BinaryMatrix& b);

/// All witnesses in row-major offset order, same (0,0) convention.
std::vector<OverlapWitness> all_overlap_witnesses(const BinaryMatrix& a,
                                                  const BinaryMatrix& b);

inline bool matrices_non_overlapping(const BinaryMatrix& a, const BinaryMatrix& b) {
    return !find_overlap_witness(a, b).has_value();
}

/// Cell count of the control window at the offset.
uint64_t window_cells(int m, int n, Offset off);

/// Sum of window cells over every nonzero offset; closed form m^2 n^2 - mn.
uint64_t comparison_budget(int m, int n);

/// One violating pair of list positions, a <= b, with its canonical witness
/// (first in row-major offset order; (0,0) included for distinct positions
/// holding equal values).
struct Violation {
    uint64_t a = 0;
    uint64_t b = 0;
    OverlapWitness witness;

    friend bool operator==(const Violation&, const Violation&) = default;
};

struct VerifyReport {
    bool pass = false;
    uint64_t matrix_count = 0;
    uint64_t checked_pairs = 0;  // unordered pairs plus one self check per matrix
    std::vector<Violation> violations;  // sorted by (a, b)
};

struct VerifyOptions {
    /// Stop scanning once some violation is known; the violation list is
    /// then a nonempty subset of the full list.
    bool fail_fast = false;
};

/// Checks self non-overlap of every matrix and pairwise non-overlap of every
/// unordered pair. Distinct positions holding equal matrices are reported as
/// (0,0) violations. All matrices must share dimensions.
///
/// Offsets are scanned with a sort-and-merge join on packed window contents,
/// so the cost is near-linear in the list size per offset rather than
/// quadratic; the report is identical to the one a pairwise scan produces.
VerifyReport verify_set(const std::vector<BinaryMatrix>& matrices,
                        VerifyOptions options = {});

}  // namespace dyckmat
