#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace norm0 {

struct Letter {
    std::string name;
    std::int64_t exponent;

    friend bool operator==(const Letter&, const Letter&) = default;
};

/// A product of generator powers, read left to right. Empty = identity.
using Word = std::vector<Letter>;

/// Grammar: whitespace-separated tokens `name`, `name^k`, or `( ... )^k`
/// (groups nest; k is any nonzero integer, negative meaning inverse).
/// The literal `1` denotes the empty word. Groups are expanded, so the
/// result is flat. Throws Error{ParseError}.
Word parse_word(std::string_view text);

/// Merges adjacent equal names and drops zero exponents.
Word simplify(Word w);
Word inverse(const Word& w);
Word power(const Word& w, std::int64_t k);
Word concat(Word x, const Word& y);

/// "name^k" tokens separated by spaces; "1" for the empty word.
std::string format_word(const Word& w);

} // namespace norm0
