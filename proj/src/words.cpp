#include "dyckmat/words.hpp"

#include <bit>
#include <limits>
#include <stdexcept>

#include "dyckmat/errors.hpp"

namespace dyckmat {

namespace {

uint64_t low_mask(int k) {
    return k >= 64 ? ~uint64_t{0} : (uint64_t{1} << k) - 1;
}

}  // namespace

BitString::BitString(uint64_t bits, int length) {
    if (length < 1 || length > max_size)
        throw std::invalid_argument("bit string length must be in 1..64, got " +
                                    std::to_string(length));
    if ((bits & ~low_mask(length)) != 0)
        throw std::invalid_argument("bit value has set bits beyond the stated length");
    bits_ = bits;
    len_ = static_cast<uint8_t>(length);
}

BitString BitString::parse(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty bit string");
    if (text.size() > max_size)
        throw std::invalid_argument("bit string longer than 64 characters");
    uint64_t bits = 0;
    for (char c : text) {
        if (c != '0' && c != '1')
            throw std::invalid_argument(std::string("invalid character '") + c +
                                        "' in bit string");
        bits = bits << 1 | static_cast<uint64_t>(c == '1');
    }
    return BitString(bits, static_cast<int>(text.size()));
}

BitString BitString::all_ones(int length) {
    return BitString(low_mask(length), length);
}

BitString BitString::all_zeros(int length) {
    return BitString(0, length);
}

bool BitString::bit(int i) const {
    if (i < 0 || i >= len_) throw std::out_of_range("bit index out of range");
    return (bits_ >> (len_ - 1 - i)) & 1;
}

int BitString::count_ones() const {
    return std::popcount(bits_);
}

BitString BitString::prefix(int k) const {
    if (k < 1 || k > len_) throw std::invalid_argument("prefix length out of range");
    return BitString(bits_ >> (len_ - k), k);
}

BitString BitString::suffix(int k) const {
    if (k < 1 || k > len_) throw std::invalid_argument("suffix length out of range");
    return BitString(bits_ & low_mask(k), k);
}

BitString BitString::concat(const BitString& tail) const {
    if (len_ + tail.len_ > max_size)
        throw std::invalid_argument("concatenation exceeds 64 bits");
    if (tail.empty()) return *this;
    if (empty()) return tail;
    return BitString(bits_ << tail.len_ | tail.bits_, len_ + tail.len_);
}

std::string BitString::str() const {
    std::string out(len_, '0');
    for (int i = 0; i < len_; ++i)
        if (bits_ >> (len_ - 1 - i) & 1) out[i] = '1';
    return out;
}

uint64_t catalan(int k) {
    if (k < 0) throw std::invalid_argument("catalan index must be nonnegative");
    unsigned __int128 c = 1;
    for (int i = 0; i < k; ++i) {
        c = c * 2 * (2 * i + 1) / (i + 2);
        if (c > std::numeric_limits<uint64_t>::max())
            throw std::overflow_error("catalan(" + std::to_string(k) +
                                      ") exceeds the 64-bit range");
    }
    return static_cast<uint64_t>(c);
}

bool is_dyck(const BitString& w) {
    if (w.empty() || w.size() % 2 != 0) return false;
    int balance = 0;
    for (int i = 0; i < w.size(); ++i) {
        balance += w.bit(i) ? 1 : -1;
        if (balance < 0) return false;
    }
    return balance == 0;
}

bool is_type_alpha(const BitString& w) {
    if (!is_dyck(w)) return false;
    int balance = 0;
    for (int i = 0; i < w.size() - 1; ++i) {
        balance += w.bit(i) ? 1 : -1;
        if (balance <= 0) return false;
    }
    return true;
}

DyckWord::DyckWord(BitString word) : word_(word) {
    if (!is_dyck(word_))
        throw std::invalid_argument("not a balanced prefix-dominant word: " + word_.str());
}

DyckWord DyckWord::parse(std::string_view text) {
    return DyckWord(BitString::parse(text));
}

BitString type_alpha_from(const DyckWord& u) {
    return BitString(1, 1).concat(u.bits()).concat(BitString(0, 1));
}

namespace {

void generate_dyck(uint64_t acc, int ones_left, int zeros_left, int length,
                   std::vector<DyckWord>& out) {
    if (ones_left == 0 && zeros_left == 0) {
        out.emplace_back(BitString(acc, length));
        return;
    }
    if (ones_left > 0)
        generate_dyck(acc << 1 | 1, ones_left - 1, zeros_left, length, out);
    if (zeros_left > ones_left)
        generate_dyck(acc << 1, ones_left, zeros_left - 1, length, out);
}

}  // namespace

std::vector<DyckWord> enumerate_dyck(int length, int guard) {
    if (length <= 0 || length % 2 != 0)
        throw std::invalid_argument("word length must be positive and even, got " +
                                    std::to_string(length));
    if (length > guard)
        throw ResourceLimitError("word length " + std::to_string(length) +
                                 " exceeds the enumeration guard " + std::to_string(guard));
    if (length > BitString::max_size)
        throw std::invalid_argument("word length exceeds 64");
    std::vector<DyckWord> out;
    generate_dyck(0, length / 2, length / 2, length, out);
    return out;
}

std::optional<StringOverlap> strings_overlap(const BitString& x, const BitString& y) {
    if (x.empty() || y.empty()) throw std::invalid_argument("empty bit string");
    const int limit = std::min(x.size(), y.size()) - 1;
    for (int k = 1; k <= limit; ++k) {
        if (x.prefix(k) == y.suffix(k)) return StringOverlap{k, OverlapSide::PrefixOfFirst};
        if (y.prefix(k) == x.suffix(k)) return StringOverlap{k, OverlapSide::PrefixOfSecond};
    }
    return std::nullopt;
}

bool is_self_non_overlapping(const BitString& w) {
    return !strings_overlap(w, w).has_value();
}

}  // namespace dyckmat
