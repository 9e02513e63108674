#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <optional>
#include <string>
#include <vector>

#include "dyckmat/errors.hpp"
#include "dyckmat/words.hpp"

namespace {

using dyckmat::BitString;
using dyckmat::DyckWord;
using dyckmat::OverlapSide;
using dyckmat::StringOverlap;

// Character-level reimplementations used as a second opinion on the
// bit-packed versions. Deliberately slow and obvious.

bool naive_is_dyck(const std::string& s) {
    if (s.empty() || s.size() % 2 != 0) return false;
    int bal = 0;
    for (char c : s) {
        bal += c == '1' ? 1 : -1;
        if (bal < 0) return false;
    }
    return bal == 0;
}

bool naive_is_alpha(const std::string& s) {
    if (!naive_is_dyck(s)) return false;
    int bal = 0;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        bal += s[i] == '1' ? 1 : -1;
        if (bal <= 0) return false;
    }
    return true;
}

std::optional<StringOverlap> naive_overlap(const std::string& x, const std::string& y) {
    const int lim = static_cast<int>(std::min(x.size(), y.size()));
    for (int k = 1; k < lim; ++k) {
        if (x.substr(0, k) == y.substr(y.size() - k)) {
            return StringOverlap{k, OverlapSide::PrefixOfFirst};
        }
        if (y.substr(0, k) == x.substr(x.size() - k)) {
            return StringOverlap{k, OverlapSide::PrefixOfSecond};
        }
    }
    return std::nullopt;
}

std::vector<std::string> all_strings(int length) {
    std::vector<std::string> out;
    for (unsigned v = 0; v < (1u << length); ++v) {
        std::string s(length, '0');
        for (int i = 0; i < length; ++i)
            if (v >> (length - 1 - i) & 1u) s[i] = '1';
        out.push_back(s);
    }
    return out;
}

}  // namespace

TEST_CASE("bit string construction and round trips") {
    const BitString w = BitString::parse("110100");
    CHECK(w.size() == 6);
    CHECK(w.str() == "110100");
    CHECK(w.packed() == 0b110100u);
    CHECK(w.bit(0));
    CHECK(w.bit(1));
    CHECK_FALSE(w.bit(2));
    CHECK(w.bit(3));
    CHECK(w.count_ones() == 3);
    CHECK(w.count_zeros() == 3);

    CHECK(BitString(0b110100u, 6) == w);
    CHECK(BitString::all_ones(4).str() == "1111");
    CHECK(BitString::all_zeros(3).str() == "000");
    CHECK(BitString().empty());

    SUBCASE("prefix, suffix, concat") {
        CHECK(w.prefix(2).str() == "11");
        CHECK(w.suffix(3).str() == "100");
        CHECK(w.prefix(6) == w);
        CHECK(BitString::parse("11").concat(BitString::parse("0100")) == w);
        CHECK_THROWS_AS((void)w.prefix(0), std::invalid_argument);
        CHECK_THROWS_AS((void)w.suffix(7), std::invalid_argument);
    }

    SUBCASE("rejects malformed input") {
        CHECK_THROWS_AS((void)BitString::parse(""), std::invalid_argument);
        CHECK_THROWS_AS((void)BitString::parse("10x"), std::invalid_argument);
        CHECK_THROWS_AS((void)BitString::parse(std::string(65, '1')), std::invalid_argument);
        CHECK_THROWS_AS(BitString(0b100u, 2), std::invalid_argument);
        CHECK_THROWS_AS(BitString(0, 0), std::invalid_argument);
        CHECK_THROWS_AS((void)w.bit(6), std::out_of_range);
    }

    SUBCASE("64-bit edge") {
        const std::string full(64, '1');
        CHECK(BitString::parse(full).str() == full);
        CHECK(BitString::parse(full).count_ones() == 64);
        CHECK_THROWS_AS((void)BitString::all_ones(32).concat(BitString::all_ones(33)),
                        std::invalid_argument);
    }
}

TEST_CASE("catalan numbers are exact") {
    const uint64_t expected[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796};
    for (int k = 0; k <= 10; ++k) CHECK(dyckmat::catalan(k) == expected[k]);
    CHECK(dyckmat::catalan(36) == 11959798385860453492ull);
    CHECK_THROWS_AS((void)dyckmat::catalan(37), std::overflow_error);
    CHECK_THROWS_AS((void)dyckmat::catalan(-1), std::invalid_argument);
}

TEST_CASE("dyck and strictly dominant predicates match the character oracle") {
    for (int length = 1; length <= 12; ++length) {
        for (const std::string& s : all_strings(length)) {
            const BitString w = BitString::parse(s);
            CHECK(dyckmat::is_dyck(w) == naive_is_dyck(s));
            CHECK(dyckmat::is_type_alpha(w) == naive_is_alpha(s));
        }
    }
    CHECK_FALSE(dyckmat::is_type_alpha(BitString::parse("11100010")));
    CHECK(dyckmat::is_type_alpha(BitString::parse("111000")));
    CHECK_FALSE(dyckmat::is_type_alpha(BitString::parse("101010")));
}

TEST_CASE("strictly dominant words are self non-overlapping") {
    for (int length = 2; length <= 14; length += 2) {
        for (const std::string& s : all_strings(length)) {
            const BitString w = BitString::parse(s);
            if (dyckmat::is_type_alpha(w)) CHECK(dyckmat::is_self_non_overlapping(w));
        }
    }
}

TEST_CASE("balanced word enumeration") {
    CHECK(dyckmat::enumerate_dyck(4).size() == 2);
    const std::vector<std::string> d4 = {"1100", "1010"};
    const std::vector<std::string> d6 = {"111000", "110100", "110010", "101100", "101010"};
    auto strs = [](const std::vector<DyckWord>& ws) {
        std::vector<std::string> out;
        for (const DyckWord& w : ws) out.push_back(w.bits().str());
        return out;
    };
    CHECK(strs(dyckmat::enumerate_dyck(4)) == d4);
    CHECK(strs(dyckmat::enumerate_dyck(6)) == d6);
    CHECK(dyckmat::enumerate_dyck(8).size() == 14);

    SUBCASE("counts equal catalan numbers") {
        for (int half = 1; half <= 8; ++half)
            CHECK(dyckmat::enumerate_dyck(2 * half).size() == dyckmat::catalan(half));
    }

    SUBCASE("descending binary order, all words valid") {
        for (int length = 2; length <= 14; length += 2) {
            const auto words = dyckmat::enumerate_dyck(length);
            for (std::size_t i = 0; i < words.size(); ++i) {
                CHECK(dyckmat::is_dyck(words[i].bits()));
                if (i > 0) CHECK(words[i - 1].bits().packed() > words[i].bits().packed());
            }
        }
    }

    SUBCASE("input validation and guard") {
        CHECK_THROWS_AS((void)dyckmat::enumerate_dyck(5), std::invalid_argument);
        CHECK_THROWS_AS((void)dyckmat::enumerate_dyck(0), std::invalid_argument);
        CHECK_THROWS_AS((void)dyckmat::enumerate_dyck(-2), std::invalid_argument);
        CHECK_THROWS_AS((void)dyckmat::enumerate_dyck(34), dyckmat::ResourceLimitError);
        CHECK(dyckmat::enumerate_dyck(10, 10).size() == 42);
        CHECK_THROWS_AS((void)dyckmat::enumerate_dyck(12, 10), dyckmat::ResourceLimitError);
    }
}

TEST_CASE("validated balanced words") {
    CHECK(DyckWord::parse("1100").bits().str() == "1100");
    CHECK(DyckWord::parse("1100").half_length() == 2);
    CHECK_THROWS_AS((void)DyckWord::parse("1001"), std::invalid_argument);
    CHECK_THROWS_AS((void)DyckWord::parse("111"), std::invalid_argument);
    CHECK(dyckmat::type_alpha_from(DyckWord::parse("1100")).str() == "111000");
    CHECK(dyckmat::type_alpha_from(DyckWord::parse("101010")).str() == "11010100");
    CHECK(dyckmat::is_type_alpha(dyckmat::type_alpha_from(DyckWord::parse("110010"))));
}

TEST_CASE("string overlap matches the character oracle exhaustively") {
    std::vector<std::string> pool;
    for (int length = 1; length <= 6; ++length)
        for (const std::string& s : all_strings(length)) pool.push_back(s);
    for (const std::string& xs : pool) {
        for (const std::string& ys : pool) {
            const BitString x = BitString::parse(xs);
            const BitString y = BitString::parse(ys);
            const auto got = dyckmat::strings_overlap(x, y);
            const auto want = naive_overlap(xs, ys);
            REQUIRE(got.has_value() == want.has_value());
            if (got) {
                CHECK(got->length == want->length);
                CHECK(got->side == want->side);
            }
        }
    }
}

TEST_CASE("string overlap goldens") {
    using dyckmat::strings_overlap;
    const BitString a1 = BitString::parse("11100010");
    const BitString x = BitString::parse("11111100");
    auto w = strings_overlap(a1, x);
    REQUIRE(w.has_value());
    CHECK(w->length == 5);
    CHECK(w->side == OverlapSide::PrefixOfFirst);
    auto back = strings_overlap(x, a1);
    REQUIRE(back.has_value());
    CHECK(back->length == 5);
    CHECK(back->side == OverlapSide::PrefixOfSecond);

    CHECK_FALSE(strings_overlap(BitString::parse("111000"), BitString::parse("110110")));
    CHECK_FALSE(dyckmat::strings_overlap(BitString::parse("10"), BitString::parse("10")));
    CHECK(dyckmat::is_self_non_overlapping(BitString::parse("111000")));
    CHECK_FALSE(dyckmat::is_self_non_overlapping(BitString::parse("101010")));
}
