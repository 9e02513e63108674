#include "dyckmat/setgen.hpp"

#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "dyckmat/errors.hpp"

namespace dyckmat {

BinaryMatrix::BinaryMatrix(std::vector<BitString> rows) : rows_(std::move(rows)) {
    if (rows_.empty()) throw std::invalid_argument("matrix needs at least one row");
    for (const auto& r : rows_) {
        if (r.empty()) throw std::invalid_argument("matrix rows must be nonempty");
        if (r.size() != rows_[0].size())
            throw std::invalid_argument("matrix rows must share one width");
    }
}

const BitString& BinaryMatrix::row(int i) const {
    if (i < 0 || i >= rows()) throw std::out_of_range("row index out of range");
    return rows_[static_cast<size_t>(i)];
}

std::string BinaryMatrix::text() const {
    std::string out;
    out.reserve(static_cast<size_t>(rows()) * (static_cast<size_t>(cols()) + 1));
    for (const auto& r : rows_) {
        out += r.str();
        out += '\n';
    }
    return out;
}

BinaryMatrix BinaryMatrix::parse_text(std::string_view text) {
    std::vector<BitString> rows;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t nl = text.find('\n', pos);
        std::string_view line =
            nl == std::string_view::npos ? text.substr(pos) : text.substr(pos, nl - pos);
        rows.push_back(BitString::parse(line));
        pos = nl == std::string_view::npos ? text.size() : nl + 1;
    }
    return BinaryMatrix(std::move(rows));
}

SetSpec::SetSpec(int m, int n, DyckWord anchor) : m_(m), n_(n), anchor_(std::move(anchor)) {
    if (m_ < 2) throw std::invalid_argument("row count must be at least 2");
    if (n_ % 2 == 0) {
        if (n_ < 4) throw std::invalid_argument("even width must be at least 4");
        if (anchor_.size() != n_ - 2)
            throw std::invalid_argument("even width " + std::to_string(n_) +
                                        " needs an anchor of length " + std::to_string(n_ - 2));
    } else {
        if (n_ < 5) throw std::invalid_argument("odd width must be at least 5");
        if (anchor_.size() != n_ - 1)
            throw std::invalid_argument("odd width " + std::to_string(n_) +
                                        " needs an anchor of length " + std::to_string(n_ - 1));
        if (!is_type_alpha(anchor_.bits()))
            throw std::invalid_argument(
                "odd-width anchor must be strictly dominant on proper prefixes: " +
                anchor_.bits().str());
    }
}

SetSpec SetSpec::with_default_anchor(int m, int n) {
    if (n < 4) throw std::invalid_argument("width must be at least 4");
    const int half = (n % 2 == 0 ? n - 2 : n - 1) / 2;
    BitString staircase = BitString::all_ones(half).concat(BitString::all_zeros(half));
    return SetSpec(m, n, DyckWord(staircase));
}

BitString SetSpec::first_row() const {
    if (odd_n()) return BitString(1, 1).concat(anchor_.bits());
    return type_alpha_from(anchor_);
}

const char* row_kind_name(RowKind kind) {
    switch (kind) {
        case RowKind::Alpha: return "alpha";
        case RowKind::T1: return "t1";
        case RowKind::T2: return "t2";
        case RowKind::T3: return "t3";
        case RowKind::T4: return "t4";
        case RowKind::T5: return "t5";
        case RowKind::T6: return "t6";
        case RowKind::T7: return "t7";
        case RowKind::T8: return "t8";
        case RowKind::Other: return "other";
    }
    return "other";
}

RowContext RowContext::of(const SetSpec& spec) {
    RowContext ctx;
    ctx.n = spec.n();
    ctx.odd = spec.odd_n();
    ctx.first_row = spec.first_row();
    ctx.excluded = spec.anchor().bits();
    return ctx;
}

RowContext RowContext::raw(const BitString& first_row, const BitString& excluded) {
    RowContext ctx;
    ctx.n = first_row.size();
    ctx.first_row = first_row;
    ctx.excluded = excluded;
    if (excluded.size() == ctx.n - 2 && ctx.n >= 4 && ctx.n % 2 == 0)
        ctx.odd = false;
    else if (excluded.size() == ctx.n - 1 && ctx.n >= 5 && ctx.n % 2 == 1)
        ctx.odd = true;
    else
        throw std::invalid_argument(
            "excluded word length must be first-row length minus 2 (even width >= 4) "
            "or minus 1 (odd width >= 5)");
    return ctx;
}

RowKind classify_row(const BitString& row, const RowContext& ctx) {
    if (row.size() != ctx.n)
        throw std::invalid_argument("row width " + std::to_string(row.size()) +
                                    " does not match context width " + std::to_string(ctx.n));
    if (row == ctx.first_row) return RowKind::Alpha;
    const int n = ctx.n;
    if (!ctx.odd) {
        if (is_dyck(row)) return RowKind::T1;
        if (row.prefix(2) == BitString::all_ones(2) && is_dyck(row.suffix(n - 2)) &&
            row.suffix(n - 2) != ctx.excluded)
            return RowKind::T2;
        if (row.suffix(2) == BitString::all_zeros(2) && is_dyck(row.prefix(n - 2)) &&
            row.prefix(n - 2) != ctx.excluded)
            return RowKind::T3;
        if (row.prefix(2) == BitString::parse("01") && is_dyck(row.suffix(n - 2)) &&
            row.suffix(n - 2) != ctx.excluded)
            return RowKind::T4;
        if (!row.bit(0) && !row.bit(n - 1) && is_dyck(row.prefix(n - 1).suffix(n - 2)))
            return RowKind::T5;
        return RowKind::Other;
    }
    if (row.bit(0) && is_dyck(row.suffix(n - 1)) && row.suffix(n - 1) != ctx.excluded)
        return RowKind::T6;
    if (!row.bit(n - 1) && is_dyck(row.prefix(n - 1)) && row.prefix(n - 1) != ctx.excluded)
        return RowKind::T7;
    if (!row.bit(0) && is_dyck(row.suffix(n - 1))) return RowKind::T8;
    return RowKind::Other;
}

RowKind classify_row(const BitString& row, const SetSpec& spec) {
    return classify_row(row, RowContext::of(spec));
}

namespace {

class RowCollector {
public:
    void add(const BitString& row) {
        if (seen_.insert(row.packed()).second) rows_.push_back(row);
    }
    std::vector<BitString> take() { return std::move(rows_); }

private:
    std::unordered_set<uint64_t> seen_;
    std::vector<BitString> rows_;
};

const BitString one{1, 1};
const BitString zero{0, 1};

}  // namespace

std::vector<BitString> middle_row_choices(const SetSpec& spec) {
    const int n = spec.n();
    RowCollector out;
    if (!spec.odd_n()) {
        const BitString first = spec.first_row();
        const BitString& u = spec.anchor().bits();
        for (const auto& w : enumerate_dyck(n))
            if (w.bits() != first) out.add(w.bits());
        const BitString ones2 = BitString::all_ones(2);
        const BitString zeros2 = BitString::all_zeros(2);
        const BitString zero_one = BitString::parse("01");
        for (const auto& w : enumerate_dyck(n - 2)) {
            if (w.bits() != u) {
                out.add(ones2.concat(w.bits()));
                out.add(w.bits().concat(zeros2));
                out.add(zero_one.concat(w.bits()));
            }
        }
        for (const auto& w : enumerate_dyck(n - 2))
            out.add(zero.concat(w.bits()).concat(zero));
    } else {
        const BitString& v = spec.anchor().bits();
        for (const auto& w : enumerate_dyck(n - 1)) {
            if (w.bits() != v) {
                out.add(one.concat(w.bits()));
                out.add(w.bits().concat(zero));
            }
        }
        for (const auto& w : enumerate_dyck(n - 1)) out.add(zero.concat(w.bits()));
    }
    return out.take();
}

std::vector<BitString> last_row_choices(const SetSpec& spec) {
    const int n = spec.n();
    RowCollector out;
    if (!spec.odd_n()) {
        const BitString first = spec.first_row();
        const BitString& u = spec.anchor().bits();
        for (const auto& w : enumerate_dyck(n))
            if (w.bits() != first) out.add(w.bits());
        const BitString ones2 = BitString::all_ones(2);
        const BitString zeros2 = BitString::all_zeros(2);
        for (const auto& w : enumerate_dyck(n - 2)) {
            if (w.bits() != u) {
                out.add(ones2.concat(w.bits()));
                out.add(w.bits().concat(zeros2));
            }
        }
    } else {
        const BitString& v = spec.anchor().bits();
        for (const auto& w : enumerate_dyck(n - 1)) {
            if (w.bits() != v) {
                out.add(one.concat(w.bits()));
                out.add(w.bits().concat(zero));
            }
        }
    }
    return out.take();
}

SetEnumeration::SetEnumeration(const SetSpec& spec, uint64_t guard)
    : spec_(spec), middle_(middle_row_choices(spec)), last_(last_row_choices(spec)) {
    uint64_t size = last_.size();
    for (int i = 2; i < spec_.m(); ++i) {
        if (__builtin_mul_overflow(size, static_cast<uint64_t>(middle_.size()), &size))
            throw std::overflow_error("matrix set cardinality exceeds the 64-bit range");
        if (size > guard) break;
    }
    if (size > guard)
        throw ResourceLimitError("matrix set has more than " + std::to_string(guard) +
                                 " elements");
    size_ = size;
}

BinaryMatrix SetEnumeration::at(uint64_t index) const {
    if (index >= size_) throw std::out_of_range("matrix index out of range");
    const int m = spec_.m();
    std::vector<BitString> rows(static_cast<size_t>(m));
    rows[0] = spec_.first_row();
    rows[static_cast<size_t>(m) - 1] = last_[index % last_.size()];
    index /= last_.size();
    for (int i = m - 2; i >= 1; --i) {
        rows[static_cast<size_t>(i)] = middle_[index % middle_.size()];
        index /= middle_.size();
    }
    return BinaryMatrix(std::move(rows));
}

uint64_t SetEnumeration::rank(const BinaryMatrix& mat) const {
    if (mat.rows() != spec_.m() || mat.cols() != spec_.n())
        throw std::invalid_argument("matrix dimensions do not match the enumeration");
    MemberCheck check = validate_member(spec_, mat);
    if (!check.ok) throw std::invalid_argument("not a member: " + check.diagnosis);
    std::unordered_map<uint64_t, uint64_t> middle_index;
    for (size_t i = 0; i < middle_.size(); ++i) middle_index.emplace(middle_[i].packed(), i);
    std::unordered_map<uint64_t, uint64_t> last_index;
    for (size_t i = 0; i < last_.size(); ++i) last_index.emplace(last_[i].packed(), i);
    uint64_t index = 0;
    for (int i = 1; i + 1 < spec_.m(); ++i)
        index = index * middle_.size() + middle_index.at(mat.row(i).packed());
    return index * last_.size() + last_index.at(mat.row(spec_.m() - 1).packed());
}

SetEnumeration enumerate_set(const SetSpec& spec, uint64_t guard) {
    return SetEnumeration(spec, guard);
}

BinaryMatrix unrank(const SetSpec& spec, uint64_t index) {
    return SetEnumeration(spec, no_set_guard).at(index);
}

uint64_t rank(const SetSpec& spec, const BinaryMatrix& mat) {
    return SetEnumeration(spec, no_set_guard).rank(mat);
}

MemberCheck validate_member(const SetSpec& spec, const BinaryMatrix& mat) {
    if (mat.rows() != spec.m() || mat.cols() != spec.n())
        return {false, "matrix is " + std::to_string(mat.rows()) + "x" +
                           std::to_string(mat.cols()) + ", expected " +
                           std::to_string(spec.m()) + "x" + std::to_string(spec.n())};
    const RowContext ctx = RowContext::of(spec);
    if (mat.row(0) != ctx.first_row)
        return {false, "row 1: must equal the derived first row " + ctx.first_row.str()};
    const int m = spec.m();
    for (int i = 1; i < m - 1; ++i) {
        switch (classify_row(mat.row(i), ctx)) {
            case RowKind::Alpha:
                return {false, "row " + std::to_string(i + 1) + ": repeats the first row"};
            case RowKind::Other:
                return {false, "row " + std::to_string(i + 1) + ": matches no middle row pattern"};
            default:
                break;
        }
    }
    const std::string last_label = "row " + std::to_string(m);
    switch (classify_row(mat.row(m - 1), ctx)) {
        case RowKind::Alpha:
            return {false, last_label + ": repeats the first row"};
        case RowKind::T4:
            return {false, last_label + ": type 4 forbidden in last row"};
        case RowKind::T5:
            return {false, last_label + ": type 5 forbidden in last row"};
        case RowKind::T8:
            return {false, last_label + ": type 8 forbidden in last row"};
        case RowKind::Other:
            return {false, last_label + ": matches no last row pattern"};
        default:
            break;
    }
    return {true, ""};
}

}  // namespace dyckmat
