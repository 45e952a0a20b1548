#include "norm0/word.hpp"

#include <cctype>
#include <charconv>

#include "norm0/errors.hpp"

namespace norm0 {

Word simplify(Word w) {
    Word out;
    for (auto& l : w) {
        if (l.exponent == 0) continue;
        if (!out.empty() && out.back().name == l.name) {
            out.back().exponent += l.exponent;
            if (out.back().exponent == 0) out.pop_back();
        } else {
            out.push_back(std::move(l));
        }
    }
    return out;
}

Word inverse(const Word& w) {
    Word out(w.rbegin(), w.rend());
    for (auto& l : out) l.exponent = -l.exponent;
    return out;
}

Word power(const Word& w, std::int64_t k) {
    const Word base = k < 0 ? inverse(w) : w;
    Word out;
    for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i) out.insert(out.end(), base.begin(), base.end());
    return simplify(std::move(out));
}

Word concat(Word x, const Word& y) {
    x.insert(x.end(), y.begin(), y.end());
    return simplify(std::move(x));
}

std::string format_word(const Word& w) {
    if (w.empty()) return "1";
    std::string out;
    for (const auto& l : w) {
        if (!out.empty()) out += ' ';
        out += l.name;
        if (l.exponent != 1) out += "^" + std::to_string(l.exponent);
    }
    return out;
}

namespace {

// Bound on the number of generator letters a single power may expand to;
// keeps exponents far from overflow under nesting.
constexpr std::uint64_t kMaxExpandedLength = 1'000'000;

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    Word parse() {
        Word w = sequence();
        skip_space();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return w;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw Error(ErrorCode::ParseError,
                    "word parse error at column " + std::to_string(pos_ + 1) + ": " + msg);
    }

    void skip_space() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    Word sequence() {
        Word out;
        for (;;) {
            skip_space();
            if (pos_ == s_.size() || s_[pos_] == ')') return out;
            Word atom = factor();
            out.insert(out.end(), atom.begin(), atom.end());
        }
    }

    Word factor() {
        Word base;
        const char ch = s_[pos_];
        if (ch == '(') {
            ++pos_;
            base = sequence();
            skip_space();
            if (pos_ == s_.size() || s_[pos_] != ')') fail("missing ')'");
            ++pos_;
        } else if (ch == '1' && (pos_ + 1 == s_.size() || !std::isalnum(static_cast<unsigned char>(s_[pos_ + 1])))) {
            ++pos_;
        } else if (std::isalpha(static_cast<unsigned char>(ch))) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            base.push_back({std::string(s_.substr(start, pos_ - start)), 1});
        } else {
            fail("expected a generator name or '('");
        }
        if (pos_ < s_.size() && s_[pos_] == '^') {
            ++pos_;
            const std::int64_t k = exponent();
            std::uint64_t len = 0;
            for (const auto& l : base) len += static_cast<std::uint64_t>(l.exponent < 0 ? -l.exponent : l.exponent);
            if (len * static_cast<std::uint64_t>(k < 0 ? -k : k) > kMaxExpandedLength) fail("expanded word too long");
            return power(base, k);
        }
        return base;
    }

    std::int64_t exponent() {
        std::size_t start = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        std::string_view tok = s_.substr(start, pos_ - start);
        if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
        std::int64_t k = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), k);
        if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) fail("bad exponent");
        if (k == 0) fail("exponent must be nonzero");
        if (k > 1'000'000 || k < -1'000'000) fail("exponent out of range");
        return k;
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

} // namespace

Word parse_word(std::string_view text) { return simplify(Parser(text).parse()); }

} // namespace norm0
