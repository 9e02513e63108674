#include "dyckmat/census.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "dyckmat/errors.hpp"
#include "dyckmat/words.hpp"

namespace dyckmat {

namespace {

uint64_t checked_mul(uint64_t a, uint64_t b) {
    uint64_t out;
    if (__builtin_mul_overflow(a, b, &out))
        throw std::overflow_error("count exceeds the 64-bit range");
    return out;
}

uint64_t checked_pow(uint64_t base, int exp) {
    uint64_t out = 1;
    for (int i = 0; i < exp; ++i) out = checked_mul(out, base);
    return out;
}

}  // namespace

uint64_t cardinality_even(int m, int n) {
    if (m < 2) throw std::invalid_argument("row count must be at least 2");
    if (n < 4 || n % 2 != 0) throw std::invalid_argument("width must be even and at least 4");
    const uint64_t c_half = catalan(n / 2);
    const uint64_t c_inner = catalan((n - 2) / 2);
    const uint64_t middle = c_half - 1 + 4 * c_inner - 3;
    const uint64_t last = c_half - 1 + 2 * c_inner - 2;
    return checked_mul(checked_pow(middle, m - 2), last);
}

uint64_t cardinality_odd(int m, int n) {
    if (m < 2) throw std::invalid_argument("row count must be at least 2");
    if (n < 5 || n % 2 == 0) throw std::invalid_argument("width must be odd and at least 5");
    const uint64_t c_inner = catalan((n - 1) / 2);
    const uint64_t middle = 3 * c_inner - 2;
    const uint64_t last = 2 * c_inner - 2;
    return checked_mul(checked_pow(middle, m - 2), last);
}

uint64_t cardinality(int m, int n) {
    return n % 2 == 0 ? cardinality_even(m, n) : cardinality_odd(m, n);
}

namespace {

uint64_t pow10_u64(int e) {
    uint64_t out = 1;
    for (int i = 0; i < e; ++i) out *= 10;
    return out;
}

int decimal_digits(uint64_t v) {
    int d = 1;
    while (v >= 10) {
        v /= 10;
        ++d;
    }
    return d;
}

}  // namespace

TwoSigDigits two_sig_truncated(uint64_t value) {
    if (value == 0) throw std::invalid_argument("two-significant-digit form needs a positive value");
    const int d = decimal_digits(value);
    if (d == 1) return {static_cast<int>(value) * 10, 0};
    return {static_cast<int>(value / pow10_u64(d - 2)), d - 1};
}

TwoSigDigits two_sig_rounded(uint64_t value) {
    if (value == 0) throw std::invalid_argument("two-significant-digit form needs a positive value");
    const int d = decimal_digits(value);
    if (d == 1) return {static_cast<int>(value) * 10, 0};
    const uint64_t unit = pow10_u64(d - 2);
    int mant = static_cast<int>(value / unit);
    if (value % unit * 2 >= unit) ++mant;
    if (mant == 100) return {10, d};
    return {mant, d - 1};
}

bool two_sig_agrees(uint64_t value, int mant_x10, int exp10) {
    const TwoSigDigits printed{mant_x10, exp10};
    return two_sig_truncated(value) == printed || two_sig_rounded(value) == printed;
}

std::string two_sig_str(TwoSigDigits digits) {
    return std::to_string(digits.mant_x10 / 10) + "." + std::to_string(digits.mant_x10 % 10) +
           "e" + std::to_string(digits.exp10);
}

std::string ReferenceValue::str() const {
    if (!scientific) return std::to_string(exact);
    return two_sig_str({mant_x10, exp10});
}

namespace {

constexpr ReferenceValue exact_cell(uint64_t v) { return {false, v, 0, 0}; }
constexpr ReferenceValue sci_cell(int mant_x10, int exp10) { return {true, 0, mant_x10, exp10}; }

// Rows m = 2..10, columns n = 4..10.
const ReferenceValue reference_grid[9][7] = {
    {exact_cell(1), exact_cell(2), exact_cell(6), exact_cell(8), exact_cell(21),
     exact_cell(26), exact_cell(67)},
    {exact_cell(2), exact_cell(4), exact_cell(54), exact_cell(104), exact_cell(630),
     exact_cell(1040), sci_cell(62, 3)},
    {exact_cell(4), exact_cell(8), exact_cell(486), exact_cell(1352), sci_cell(19, 4),
     sci_cell(41, 4), sci_cell(59, 5)},
    {exact_cell(8), exact_cell(16), exact_cell(4374), sci_cell(17, 4), sci_cell(57, 5),
     sci_cell(16, 6), sci_cell(55, 7)},
    {exact_cell(16), exact_cell(32), sci_cell(39, 4), sci_cell(22, 5), sci_cell(17, 7),
     sci_cell(66, 7), sci_cell(52, 9)},
    {exact_cell(32), exact_cell(64), sci_cell(35, 5), sci_cell(30, 6), sci_cell(51, 8),
     sci_cell(27, 9), sci_cell(49, 11)},
    {exact_cell(64), exact_cell(128), sci_cell(31, 6), sci_cell(38, 7), sci_cell(15, 10),
     sci_cell(11, 11), sci_cell(46, 13)},
    {exact_cell(128), exact_cell(256), sci_cell(28, 7), sci_cell(50, 8), sci_cell(46, 11),
     sci_cell(42, 12), sci_cell(43, 15)},
    {exact_cell(256), exact_cell(512), sci_cell(26, 8), sci_cell(65, 9), sci_cell(14, 13),
     sci_cell(17, 14), sci_cell(41, 17)},
};

}  // namespace

std::optional<ReferenceValue> reference_count(int m, int n) {
    if (m < 2 || m > 10 || n < 4 || n > 10) return std::nullopt;
    return reference_grid[m - 2][n - 4];
}

const char* agreement_name(Agreement a) {
    switch (a) {
        case Agreement::Match: return "match";
        case Agreement::Mismatch: return "mismatch";
        case Agreement::Unchecked: return "unchecked";
    }
    return "unchecked";
}

namespace {

Agreement reference_agreement(uint64_t formula, const ReferenceValue& ref) {
    if (!ref.scientific) return formula == ref.exact ? Agreement::Match : Agreement::Mismatch;
    return two_sig_agrees(formula, ref.mant_x10, ref.exp10) ? Agreement::Match
                                                            : Agreement::Mismatch;
}

void annotate_reference(CountReport& report) {
    report.table_value = reference_count(report.m, report.n);
    if (report.table_value && report.formula_value) {
        report.table_agrees = reference_agreement(*report.formula_value, *report.table_value);
        report.known_reference_discrepancy =
            report.table_agrees == Agreement::Mismatch && report.n == 5 && report.m >= 3;
    }
}

}  // namespace

CountReport cross_check(int m, int n, const std::optional<DyckWord>& anchor, uint64_t guard) {
    const SetSpec spec =
        anchor ? SetSpec(m, n, *anchor) : SetSpec::with_default_anchor(m, n);
    CountReport report;
    report.m = m;
    report.n = n;
    try {
        report.formula_value = cardinality(m, n);
    } catch (const std::overflow_error&) {
    }
    try {
        report.enumerated_value = SetEnumeration(spec, guard).size();
    } catch (const ResourceLimitError&) {
    } catch (const std::overflow_error&) {
    }
    if (report.formula_value && report.enumerated_value)
        report.agrees = *report.formula_value == *report.enumerated_value
                            ? Agreement::Match
                            : Agreement::Mismatch;
    annotate_reference(report);
    return report;
}

std::vector<CountReport> emit_table(int m_max, int n_max) {
    if (m_max < 2) throw std::invalid_argument("m_max must be at least 2");
    if (n_max < 4) throw std::invalid_argument("n_max must be at least 4");
    std::vector<CountReport> cells;
    cells.reserve(static_cast<size_t>(m_max - 1) * static_cast<size_t>(n_max - 3));
    for (int m = 2; m <= m_max; ++m) {
        for (int n = 4; n <= n_max; ++n) {
            CountReport cell;
            cell.m = m;
            cell.n = n;
            try {
                cell.formula_value = cardinality(m, n);
            } catch (const std::overflow_error&) {
            }
            annotate_reference(cell);
            cells.push_back(std::move(cell));
        }
    }
    return cells;
}

std::string render_table_text(const std::vector<CountReport>& cells) {
    if (cells.empty()) return "";
    int m_min = cells[0].m, m_max = cells[0].m, n_min = cells[0].n, n_max = cells[0].n;
    for (const auto& c : cells) {
        m_min = std::min(m_min, c.m);
        m_max = std::max(m_max, c.m);
        n_min = std::min(n_min, c.n);
        n_max = std::max(n_max, c.n);
    }
    auto cell_text = [&](const CountReport& c) {
        std::string out = c.formula_value ? std::to_string(*c.formula_value) : "overflow";
        if (c.table_agrees == Agreement::Mismatch)
            out += c.known_reference_discrepancy ? "~" : "*";
        return out;
    };
    const int cols = n_max - n_min + 1;
    std::vector<size_t> width(static_cast<size_t>(cols));
    for (int n = n_min; n <= n_max; ++n)
        width[static_cast<size_t>(n - n_min)] = std::to_string(n).size();
    std::vector<std::string> texts(cells.size());
    for (size_t i = 0; i < cells.size(); ++i) {
        texts[i] = cell_text(cells[i]);
        auto& w = width[static_cast<size_t>(cells[i].n - n_min)];
        w = std::max(w, texts[i].size());
    }
    std::ostringstream out;
    out << "m\\n";
    for (int n = n_min; n <= n_max; ++n)
        out << "  " << std::setw(static_cast<int>(width[static_cast<size_t>(n - n_min)]))
            << n;
    out << "\n";
    size_t i = 0;
    for (int m = m_min; m <= m_max; ++m) {
        out << std::setw(3) << m;
        for (int n = n_min; n <= n_max && i < cells.size(); ++n, ++i)
            out << "  " << std::setw(static_cast<int>(width[static_cast<size_t>(n - n_min)]))
                << texts[i];
        out << "\n";
    }
    bool any_known = false, any_unknown = false;
    for (const auto& c : cells) {
        if (c.table_agrees == Agreement::Mismatch)
            (c.known_reference_discrepancy ? any_known : any_unknown) = true;
    }
    if (any_known)
        out << "~ published reference disagrees here; the enumeration confirms the formula\n";
    if (any_unknown) out << "* published reference disagrees\n";
    return out.str();
}

std::string render_table_csv(const std::vector<CountReport>& cells) {
    std::ostringstream out;
    out << "m,n,formula,enumerated,table,agrees\n";
    for (const auto& c : cells) {
        out << c.m << "," << c.n << ",";
        if (c.formula_value)
            out << *c.formula_value;
        else
            out << "overflow";
        out << ",";
        if (c.enumerated_value) out << *c.enumerated_value;
        out << ",";
        if (c.table_value) out << c.table_value->str();
        out << "," << agreement_name(c.table_agrees) << "\n";
    }
    return out.str();
}

namespace {

OrientationCount orientation_side(int m, int n) {
    if (m < 2) return {std::nullopt, "out of domain: " + std::to_string(m) + " rows < 2"};
    if (n < 4) return {std::nullopt, "out of domain: width " + std::to_string(n) + " < 4"};
    try {
        return {cardinality(m, n), ""};
    } catch (const std::overflow_error&) {
        return {std::nullopt, "overflow"};
    }
}

}  // namespace

std::pair<OrientationCount, OrientationCount> compare_orientations(int m, int n) {
    return {orientation_side(m, n), orientation_side(n, m)};
}

}  // namespace dyckmat
