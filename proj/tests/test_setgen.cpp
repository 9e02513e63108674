#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include "dyckmat/errors.hpp"
#include "dyckmat/setgen.hpp"

namespace {

using dyckmat::BinaryMatrix;
using dyckmat::BitString;
using dyckmat::DyckWord;
using dyckmat::RowContext;
using dyckmat::RowKind;
using dyckmat::SetEnumeration;
using dyckmat::SetSpec;

BinaryMatrix from_lines(const std::vector<std::string>& lines) {
    std::vector<BitString> rows;
    for (const std::string& line : lines) rows.push_back(BitString::parse(line));
    return BinaryMatrix(std::move(rows));
}

std::vector<std::string> to_strings(const std::vector<BitString>& rows) {
    std::vector<std::string> out;
    for (const BitString& r : rows) out.push_back(r.str());
    return out;
}

}  // namespace

TEST_CASE("matrix text format round trips") {
    const BinaryMatrix mat = from_lines({"111000", "110100", "101000"});
    CHECK(mat.rows() == 3);
    CHECK(mat.cols() == 6);
    CHECK(mat.text() == "111000\n110100\n101000\n");
    CHECK(BinaryMatrix::parse_text(mat.text()) == mat);
    CHECK(BinaryMatrix::parse_text("10\n01") == from_lines({"10", "01"}));
    CHECK(mat.bit(0, 0));
    CHECK_FALSE(mat.bit(2, 1));

    CHECK_THROWS_AS((void)BinaryMatrix::parse_text("10\n011\n"), std::invalid_argument);
    CHECK_THROWS_AS((void)BinaryMatrix::parse_text(""), std::invalid_argument);
    CHECK_THROWS_AS(BinaryMatrix(std::vector<BitString>{}), std::invalid_argument);
    CHECK_THROWS_AS((void)mat.row(3), std::out_of_range);
}

TEST_CASE("set parameters fix the first row") {
    SUBCASE("even width wraps the anchor") {
        const SetSpec spec = SetSpec::with_default_anchor(3, 6);
        CHECK(spec.m() == 3);
        CHECK(spec.n() == 6);
        CHECK_FALSE(spec.odd_n());
        CHECK(spec.anchor().bits().str() == "1100");
        CHECK(spec.first_row().str() == "111000");
        CHECK(SetSpec(3, 8, DyckWord::parse("101010")).first_row().str() == "11010100");
    }

    SUBCASE("odd width prepends a one") {
        const SetSpec spec = SetSpec::with_default_anchor(3, 7);
        CHECK(spec.odd_n());
        CHECK(spec.anchor().bits().str() == "111000");
        CHECK(spec.first_row().str() == "1111000");
        CHECK(SetSpec::with_default_anchor(2, 5).first_row().str() == "11100");
    }

    SUBCASE("rejects bad parameters") {
        CHECK_THROWS_AS(SetSpec(1, 6, DyckWord::parse("1100")), std::invalid_argument);
        CHECK_THROWS_AS(SetSpec(3, 2, DyckWord::parse("1100")), std::invalid_argument);
        CHECK_THROWS_AS((void)SetSpec::with_default_anchor(3, 3), std::invalid_argument);
        // anchor length must be n-2 (even) or n-1 (odd)
        CHECK_THROWS_AS(SetSpec(3, 6, DyckWord::parse("10")), std::invalid_argument);
        CHECK_THROWS_AS(SetSpec(3, 7, DyckWord::parse("1100")), std::invalid_argument);
        // odd width needs a strictly dominant anchor
        CHECK_THROWS_AS(SetSpec(3, 7, DyckWord::parse("101010")), std::invalid_argument);
        CHECK_NOTHROW(SetSpec(3, 7, DyckWord::parse("110100")));
    }
}

TEST_CASE("row classification") {
    const RowContext even = RowContext::of(SetSpec::with_default_anchor(3, 6));
    auto kind6 = [&](const char* s) { return classify_row(BitString::parse(s), even); };
    CHECK(kind6("111000") == RowKind::Alpha);
    CHECK(kind6("110100") == RowKind::T1);
    CHECK(kind6("110010") == RowKind::T1);
    CHECK(kind6("111010") == RowKind::T2);
    CHECK(kind6("101000") == RowKind::T3);
    CHECK(kind6("011010") == RowKind::T4);
    CHECK(kind6("010100") == RowKind::T5);
    CHECK(kind6("011000") == RowKind::T5);
    // the excluded word knocks out the derived patterns
    CHECK(kind6("111100") == RowKind::Other);  // would be 11 + excluded
    CHECK(kind6("110000") == RowKind::Other);  // would be excluded + 00
    CHECK(kind6("011100") == RowKind::Other);  // would be 01 + excluded
    CHECK(kind6("011001") == RowKind::Other);
    CHECK(kind6("000000") == RowKind::Other);

    const RowContext odd = RowContext::of(SetSpec::with_default_anchor(3, 7));
    auto kind7 = [&](const char* s) { return classify_row(BitString::parse(s), odd); };
    CHECK(kind7("1111000") == RowKind::Alpha);
    CHECK(kind7("1110100") == RowKind::T6);
    CHECK(kind7("1100100") == RowKind::T7);
    CHECK(kind7("0111000") == RowKind::T8);  // tail may equal the excluded word here
    CHECK(kind7("0101010") == RowKind::T8);
    CHECK(kind7("1111001") == RowKind::Other);

    CHECK_THROWS_AS((void)classify_row(BitString::parse("10"), even), std::invalid_argument);

    SUBCASE("names") {
        CHECK(std::string(row_kind_name(RowKind::Alpha)) == "alpha");
        CHECK(std::string(row_kind_name(RowKind::T1)) == "t1");
        CHECK(std::string(row_kind_name(RowKind::T8)) == "t8");
        CHECK(std::string(row_kind_name(RowKind::Other)) == "other");
    }
}

TEST_CASE("raw row contexts") {
    const RowContext raw =
        RowContext::raw(BitString::parse("11100010"), BitString::parse("110001"));
    CHECK(raw.n == 8);
    CHECK_FALSE(raw.odd);
    CHECK(raw.first_row.str() == "11100010");
    const RowContext odd = RowContext::raw(BitString::parse("11100"), BitString::parse("1100"));
    CHECK(odd.odd);
    CHECK_THROWS_AS((void)RowContext::raw(BitString::parse("11100010"), BitString::parse("10")),
                    std::invalid_argument);
}

TEST_CASE("row choice lists") {
    SUBCASE("even width 6") {
        const SetSpec spec = SetSpec::with_default_anchor(3, 6);
        CHECK(to_strings(middle_row_choices(spec)) ==
              std::vector<std::string>{"110100", "110010", "101100", "101010", "111010",
                                       "101000", "011010", "011000", "010100"});
        CHECK(to_strings(last_row_choices(spec)) ==
              std::vector<std::string>{"110100", "110010", "101100", "101010", "111010",
                                       "101000"});
    }

    SUBCASE("odd width 5") {
        const SetSpec spec = SetSpec::with_default_anchor(3, 5);
        CHECK(to_strings(middle_row_choices(spec)) ==
              std::vector<std::string>{"11010", "10100", "01100", "01010"});
        CHECK(to_strings(last_row_choices(spec)) ==
              std::vector<std::string>{"11010", "10100"});
    }

    SUBCASE("width 4") {
        const SetSpec spec = SetSpec::with_default_anchor(3, 4);
        CHECK(to_strings(middle_row_choices(spec)) ==
              std::vector<std::string>{"1010", "0100"});
        CHECK(to_strings(last_row_choices(spec)) == std::vector<std::string>{"1010"});
    }

    SUBCASE("no duplicates, all classify to legal kinds") {
        for (int n = 4; n <= 9; ++n) {
            const SetSpec spec = SetSpec::with_default_anchor(4, n);
            const RowContext ctx = RowContext::of(spec);
            std::set<uint64_t> seen;
            for (const BitString& row : middle_row_choices(spec)) {
                CHECK(seen.insert(row.packed()).second);
                const RowKind kind = classify_row(row, ctx);
                CHECK(kind != RowKind::Alpha);
                CHECK(kind != RowKind::Other);
            }
            seen.clear();
            for (const BitString& row : last_row_choices(spec)) {
                CHECK(seen.insert(row.packed()).second);
                const RowKind kind = classify_row(row, ctx);
                CHECK(kind != RowKind::Alpha);
                CHECK(kind != RowKind::Other);
                CHECK(kind != RowKind::T4);
                CHECK(kind != RowKind::T5);
                CHECK(kind != RowKind::T8);
            }
        }
    }

    SUBCASE("list sizes do not depend on the anchor") {
        for (int n : {6, 7, 8}) {
            std::size_t mid = 0, last = 0;
            bool first = true;
            const int ah = n % 2 == 0 ? n - 2 : n - 1;
            for (const DyckWord& w : dyckmat::enumerate_dyck(ah)) {
                if (n % 2 != 0 && !dyckmat::is_type_alpha(w.bits())) continue;
                const SetSpec spec(4, n, w);
                if (first) {
                    mid = middle_row_choices(spec).size();
                    last = last_row_choices(spec).size();
                    first = false;
                } else {
                    CHECK(middle_row_choices(spec).size() == mid);
                    CHECK(last_row_choices(spec).size() == last);
                }
            }
        }
    }
}

TEST_CASE("set enumeration") {
    const SetSpec spec = SetSpec::with_default_anchor(3, 6);
    const SetEnumeration members(spec);
    REQUIRE(members.size() == 54);

    SUBCASE("goldens at both ends") {
        CHECK(members.at(0).text() == "111000\n110100\n110100\n");
        CHECK(members.at(5).text() == "111000\n110100\n101000\n");
        CHECK(members.at(53).text() == "111000\n010100\n101000\n");
        CHECK_THROWS_AS((void)members.at(54), std::out_of_range);
    }

    SUBCASE("rank inverts at, no duplicates") {
        std::set<std::string> seen;
        for (uint64_t i = 0; i < members.size(); ++i) {
            const BinaryMatrix mat = members.at(i);
            CHECK(members.rank(mat) == i);
            CHECK(seen.insert(mat.text()).second);
            CHECK(validate_member(spec, mat).ok);
        }
    }

    SUBCASE("rank rejects non-members") {
        CHECK_THROWS_AS((void)members.rank(from_lines({"111000", "110100"})),
                        std::invalid_argument);
        CHECK_THROWS_AS((void)members.rank(from_lines({"111000", "111100", "110100"})),
                        std::invalid_argument);
    }

    SUBCASE("iteration agrees with at") {
        uint64_t i = 0;
        for (const BinaryMatrix& mat : members) {
            CHECK(mat == members.at(i));
            ++i;
        }
        CHECK(i == 54);
    }

    SUBCASE("two-row sets have a fixed first row and one free row") {
        const SetEnumeration small(SetSpec::with_default_anchor(2, 4));
        REQUIRE(small.size() == 1);
        CHECK(small.at(0).text() == "1100\n1010\n");
    }

    SUBCASE("free helpers") {
        CHECK(dyckmat::unrank(spec, 53).text() == "111000\n010100\n101000\n");
        CHECK(dyckmat::rank(spec, members.at(17)) == 17);
        CHECK(dyckmat::enumerate_set(spec).size() == 54);
    }

    SUBCASE("guard and overflow") {
        CHECK_THROWS_AS(SetEnumeration(SetSpec::with_default_anchor(6, 6), 1000),
                        dyckmat::ResourceLimitError);
        CHECK_NOTHROW(SetEnumeration(SetSpec::with_default_anchor(6, 6), 40000));
        CHECK_THROWS_AS(SetEnumeration(SetSpec::with_default_anchor(12, 10),
                                       dyckmat::no_set_guard),
                        std::overflow_error);
    }
}

TEST_CASE("membership diagnoses name the first offending row") {
    const SetSpec spec = SetSpec::with_default_anchor(3, 6);
    auto diag = [&](const BinaryMatrix& mat) { return validate_member(spec, mat).diagnosis; };

    CHECK(validate_member(spec, from_lines({"111000", "110100", "101000"})).ok);
    CHECK(diag(from_lines({"111000", "110100"})) ==
          "matrix is 2x6, expected 3x6");
    CHECK(diag(from_lines({"110100", "110100", "101000"})) ==
          "row 1: must equal the derived first row 111000");
    CHECK(diag(from_lines({"111000", "111000", "101000"})) ==
          "row 2: repeats the first row");
    CHECK(diag(from_lines({"111000", "111100", "101000"})) ==
          "row 2: matches no middle row pattern");
    CHECK(diag(from_lines({"111000", "110100", "011010"})) ==
          "row 3: type 4 forbidden in last row");
    CHECK(diag(from_lines({"111000", "110100", "010100"})) ==
          "row 3: type 5 forbidden in last row");
    CHECK(diag(from_lines({"111000", "110100", "111100"})) ==
          "row 3: matches no last row pattern");

    const SetSpec odd = SetSpec::with_default_anchor(2, 5);
    CHECK(validate_member(odd, from_lines({"11100", "10100"})).ok);
    CHECK(validate_member(odd, from_lines({"11100", "01100"})).diagnosis ==
          "row 2: type 8 forbidden in last row");
}
