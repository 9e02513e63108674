#include "dyckmat/overlap.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace dyckmat {

namespace {

uint64_t low_mask(int k) {
    return k >= 64 ? ~uint64_t{0} : (uint64_t{1} << k) - 1;
}

void check_same_dims(const BinaryMatrix& a, const BinaryMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrices must share dimensions");
}

void check_offset(int m, int n, Offset off) {
    if (off.dr <= -m || off.dr >= m || off.dc <= -n || off.dc >= n)
        throw std::invalid_argument("offset outside the valid translation range");
}

// Window fragment of one row on the first matrix's side of the translation.
uint64_t first_side_bits(uint64_t row, int n, int dc) {
    return dc >= 0 ? row & low_mask(n - dc) : row >> -dc;
}

// Matching fragment on the translated matrix's side.
uint64_t second_side_bits(uint64_t row, int n, int dc) {
    return dc >= 0 ? row >> dc : row & low_mask(n + dc);
}

OverlapWitness make_witness(int m, int n, Offset off) {
    return {off, m - std::abs(off.dr), n - std::abs(off.dc), witness_kind(off)};
}

bool window_matches(const BinaryMatrix& a, const BinaryMatrix& b, Offset off) {
    const int m = a.rows(), n = a.cols();
    const int first_top = std::max(off.dr, 0);
    const int second_top = std::max(-off.dr, 0);
    const int wrows = m - std::abs(off.dr);
    for (int i = 0; i < wrows; ++i) {
        if (first_side_bits(a.row(first_top + i).packed(), n, off.dc) !=
            second_side_bits(b.row(second_top + i).packed(), n, off.dc))
            return false;
    }
    return true;
}

// Row-major scan for the first witness; (0,0) participates only on request.
std::optional<OverlapWitness> scan_first_witness(const BinaryMatrix& a,
                                                 const BinaryMatrix& b,
                                                 bool include_zero_offset) {
    const int m = a.rows(), n = a.cols();
    for (int dr = -(m - 1); dr <= m - 1; ++dr) {
        for (int dc = -(n - 1); dc <= n - 1; ++dc) {
            if (dr == 0 && dc == 0 && !include_zero_offset) continue;
            if (window_matches(a, b, {dr, dc})) return make_witness(m, n, {dr, dc});
        }
    }
    return std::nullopt;
}

}  // namespace

const char* witness_kind_name(WitnessKind kind) {
    switch (kind) {
        case WitnessKind::Vertical: return "vertical";
        case WitnessKind::Horizontal: return "horizontal";
        case WitnessKind::Corner: return "corner";
    }
    return "corner";
}

WitnessKind witness_kind(Offset off) {
    if (off.dc == 0 && off.dr != 0) return WitnessKind::Vertical;
    if (off.dr == 0 && off.dc != 0) return WitnessKind::Horizontal;
    return WitnessKind::Corner;
}

bool overlap_at(const BinaryMatrix& a, const BinaryMatrix& b, Offset off) {
    check_same_dims(a, b);
    check_offset(a.rows(), a.cols(), off);
    return window_matches(a, b, off);
}

std::optional<OverlapWitness> find_overlap_witness(const BinaryMatrix& a,
                                                   const BinaryMatrix& b) {
    check_same_dims(a, b);
    return scan_first_witness(a, b, !(a == b));
}

std::vector<OverlapWitness> all_overlap_witnesses(const BinaryMatrix& a,
                                                  const BinaryMatrix& b) {
    check_same_dims(a, b);
    const bool include_zero = !(a == b);
    const int m = a.rows(), n = a.cols();
    std::vector<OverlapWitness> out;
    for (int dr = -(m - 1); dr <= m - 1; ++dr) {
        for (int dc = -(n - 1); dc <= n - 1; ++dc) {
            if (dr == 0 && dc == 0 && !include_zero) continue;
            if (window_matches(a, b, {dr, dc})) out.push_back(make_witness(m, n, {dr, dc}));
        }
    }
    return out;
}

uint64_t window_cells(int m, int n, Offset off) {
    if (m < 1 || n < 1) throw std::invalid_argument("dimensions must be positive");
    check_offset(m, n, off);
    return static_cast<uint64_t>(m - std::abs(off.dr)) *
           static_cast<uint64_t>(n - std::abs(off.dc));
}

uint64_t comparison_budget(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("dimensions must be positive");
    const uint64_t mn = static_cast<uint64_t>(m) * static_cast<uint64_t>(n);
    uint64_t square;
    if (__builtin_mul_overflow(mn, mn, &square))
        throw std::overflow_error("comparison budget exceeds the 64-bit range");
    return square - mn;
}

namespace {

using PairSet = std::set<std::pair<uint64_t, uint64_t>>;

void insert_pair(PairSet& pairs, uint64_t x, uint64_t y) {
    pairs.emplace(std::min(x, y), std::max(x, y));
}

// Positions holding identical matrices; every such pair is a violation at
// offset (0,0).
void collect_duplicates(const std::vector<BinaryMatrix>& mats, PairSet& pairs) {
    const size_t count = mats.size();
    const int m = mats[0].rows();
    std::vector<uint64_t> order(count);
    std::iota(order.begin(), order.end(), uint64_t{0});
    auto content_less = [&](uint64_t x, uint64_t y) {
        for (int r = 0; r < m; ++r) {
            const uint64_t rx = mats[x].row(r).packed();
            const uint64_t ry = mats[y].row(r).packed();
            if (rx != ry) return rx < ry;
        }
        return false;
    };
    std::sort(order.begin(), order.end(), content_less);
    size_t run = 0;
    for (size_t i = 1; i <= count; ++i) {
        if (i == count || content_less(order[run], order[i])) {
            for (size_t x = run; x < i; ++x)
                for (size_t y = x + 1; y < i; ++y) insert_pair(pairs, order[x], order[y]);
            run = i;
        }
    }
}

// All ordered pairs (first, second) whose windows coincide under the offset,
// found by sorting both key sides and merging equal runs.
void join_offset(const std::vector<BinaryMatrix>& mats, int dr, int dc, PairSet& pairs) {
    const size_t count = mats.size();
    const int m = mats[0].rows(), n = mats[0].cols();
    const int wrows = m - dr;
    std::vector<uint64_t> keys_first(count * static_cast<size_t>(wrows));
    std::vector<uint64_t> keys_second(count * static_cast<size_t>(wrows));
    for (size_t idx = 0; idx < count; ++idx) {
        for (int r = 0; r < wrows; ++r) {
            keys_first[idx * wrows + r] =
                first_side_bits(mats[idx].row(dr + r).packed(), n, dc);
            keys_second[idx * wrows + r] =
                second_side_bits(mats[idx].row(r).packed(), n, dc);
        }
    }
    auto slice_cmp = [wrows](const std::vector<uint64_t>& ka, uint64_t x,
                             const std::vector<uint64_t>& kb, uint64_t y) {
        for (int r = 0; r < wrows; ++r) {
            const uint64_t va = ka[x * wrows + r];
            const uint64_t vb = kb[y * wrows + r];
            if (va != vb) return va < vb ? -1 : 1;
        }
        return 0;
    };
    std::vector<uint64_t> order_first(count), order_second(count);
    std::iota(order_first.begin(), order_first.end(), uint64_t{0});
    std::iota(order_second.begin(), order_second.end(), uint64_t{0});
    std::sort(order_first.begin(), order_first.end(), [&](uint64_t x, uint64_t y) {
        return slice_cmp(keys_first, x, keys_first, y) < 0;
    });
    std::sort(order_second.begin(), order_second.end(), [&](uint64_t x, uint64_t y) {
        return slice_cmp(keys_second, x, keys_second, y) < 0;
    });
    size_t ia = 0, ib = 0;
    while (ia < count && ib < count) {
        const int cmp = slice_cmp(keys_first, order_first[ia], keys_second, order_second[ib]);
        if (cmp < 0) {
            ++ia;
        } else if (cmp > 0) {
            ++ib;
        } else {
            size_t ea = ia + 1;
            while (ea < count &&
                   slice_cmp(keys_first, order_first[ea], keys_first, order_first[ia]) == 0)
                ++ea;
            size_t eb = ib + 1;
            while (eb < count &&
                   slice_cmp(keys_second, order_second[eb], keys_second, order_second[ib]) == 0)
                ++eb;
            for (size_t x = ia; x < ea; ++x)
                for (size_t y = ib; y < eb; ++y)
                    insert_pair(pairs, order_first[x], order_second[y]);
            ia = ea;
            ib = eb;
        }
    }
}

OverlapWitness canonical_witness(const std::vector<BinaryMatrix>& mats, uint64_t a,
                                 uint64_t b) {
    auto witness = scan_first_witness(mats[a], mats[b], a != b);
    if (!witness) throw std::logic_error("violation pair lost its witness");
    return *witness;
}

}  // namespace

VerifyReport verify_set(const std::vector<BinaryMatrix>& matrices, VerifyOptions options) {
    VerifyReport report;
    report.matrix_count = matrices.size();
    report.checked_pairs = matrices.size() * (matrices.size() + 1) / 2;
    if (matrices.empty()) {
        report.pass = true;
        return report;
    }
    const int m = matrices[0].rows(), n = matrices[0].cols();
    for (const auto& mat : matrices) check_same_dims(matrices[0], mat);

    PairSet pairs;
    collect_duplicates(matrices, pairs);
    bool done = options.fail_fast && !pairs.empty();
    for (int dr = 0; dr < m && !done; ++dr) {
        for (int dc = dr == 0 ? 1 : -(n - 1); dc < n && !done; ++dc) {
            join_offset(matrices, dr, dc, pairs);
            if (options.fail_fast && !pairs.empty()) done = true;
        }
    }

    report.violations.reserve(pairs.size());
    for (const auto& [a, b] : pairs)
        report.violations.push_back({a, b, canonical_witness(matrices, a, b)});
    report.pass = report.violations.empty();
    return report;
}

}  // namespace dyckmat
