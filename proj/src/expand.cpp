#include "dyckmat/expand.hpp"

#include <algorithm>
#include <stdexcept>

#include "dyckmat/errors.hpp"

namespace dyckmat {

std::vector<RowKind> ExpansionCandidate::excluded_types(bool odd) const {
    std::vector<RowKind> kinds =
        odd ? std::vector<RowKind>{RowKind::Alpha, RowKind::T6, RowKind::T7, RowKind::T8}
            : std::vector<RowKind>{RowKind::Alpha, RowKind::T1, RowKind::T2,
                                   RowKind::T3, RowKind::T4, RowKind::T5};
    std::vector<RowKind> out;
    for (RowKind kind : kinds)
        if (kind != classified) out.push_back(kind);
    return out;
}

ExpansionCandidate screen_expansion_candidate(const BitString& x, const RowContext& ctx) {
    ExpansionCandidate candidate;
    candidate.x = x;
    candidate.classified = classify_row(x, ctx);
    candidate.first_row_overlap = strings_overlap(x, ctx.first_row);
    return candidate;
}

namespace {

void check_scan_guard(const RowContext& ctx, int guard) {
    // 62 is a hard cap: the scan walks all 2^n strings.
    if (ctx.n > guard || ctx.n > 62)
        throw ResourceLimitError("width " + std::to_string(ctx.n) +
                                 " exceeds the exhaustive scan guard " +
                                 std::to_string(std::min(guard, 62)));
}

template <typename Visit>
void scan_descending(const RowContext& ctx, Visit&& visit) {
    const uint64_t top = uint64_t{1} << ctx.n;
    for (uint64_t v = top; v-- > 0;) {
        const BitString x(v, ctx.n);
        if (x == ctx.first_row) continue;
        visit(x);
    }
}

}  // namespace

std::vector<BitString> find_expansion_strings(const RowContext& ctx, int guard) {
    check_scan_guard(ctx, guard);
    std::vector<BitString> out;
    scan_descending(ctx, [&](const BitString& x) {
        if (screen_expansion_candidate(x, ctx).valid()) out.push_back(x);
    });
    return out;
}

std::vector<BitString> find_expansion_strings(const SetSpec& spec, int guard) {
    return find_expansion_strings(RowContext::of(spec), guard);
}

BinaryMatrix build_z(const SetSpec& spec, const BitString& x) {
    if (x.size() != spec.n())
        throw std::invalid_argument("extra row width " + std::to_string(x.size()) +
                                    " does not match the set width " +
                                    std::to_string(spec.n()));
    const RowContext ctx = RowContext::of(spec);
    if (x == ctx.first_row)
        throw std::invalid_argument("extra row equals the first row");
    const ExpansionCandidate candidate = screen_expansion_candidate(x, ctx);
    if (candidate.matches_row_pattern())
        throw std::invalid_argument(
            std::string("extra row matches row pattern ") +
            row_kind_name(candidate.classified) +
            "; an expansion row must match none");
    if (!candidate.nonoverlap_ok())
        throw std::invalid_argument(
            "extra row overlaps the first row (matching length " +
            std::to_string(candidate.first_row_overlap->length) + ")");
    std::vector<BitString> rows(static_cast<size_t>(spec.m()), x);
    rows[0] = ctx.first_row;
    return BinaryMatrix(std::move(rows));
}

VerifyReport verify_expansion(const SetSpec& spec, const BitString& x, uint64_t guard) {
    const BinaryMatrix z = build_z(spec, x);
    const SetEnumeration enumeration(spec, guard);
    std::vector<BinaryMatrix> matrices;
    matrices.reserve(enumeration.size() + 1);
    for (const auto& mat : enumeration) matrices.push_back(mat);
    matrices.push_back(z);
    return verify_set(matrices);
}

std::vector<CompatibleRow> find_compatible_rows(const RowContext& ctx, int guard) {
    check_scan_guard(ctx, guard);
    std::vector<CompatibleRow> out;
    scan_descending(ctx, [&](const BitString& x) {
        if (!strings_overlap(x, ctx.first_row))
            out.push_back({x, classify_row(x, ctx)});
    });
    return out;
}

std::vector<CompatibleRow> find_compatible_rows(const SetSpec& spec, int guard) {
    return find_compatible_rows(RowContext::of(spec), guard);
}

}  // namespace dyckmat
