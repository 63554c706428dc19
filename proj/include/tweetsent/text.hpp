#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tweetsent::text {

/// One decoded codepoint and the byte range it occupies in the source.
struct Codepoint {
    char32_t value = 0;
    std::size_t offset = 0;
    std::size_t length = 0;
};

/// Decodes UTF-8; returns nullopt on any malformed or overlong sequence.
std::optional<std::vector<Codepoint>> decode_utf8(std::string_view bytes);

bool is_valid_utf8(std::string_view bytes);

std::string encode_utf8(char32_t cp);

inline bool is_ascii(std::string_view s) {
    for (unsigned char c : s) {
        if (c >= 0x80) return false;
    }
    return true;
}

inline bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

inline bool is_word_char(char c) {
    const auto u = static_cast<unsigned char>(c);
    return (u >= '0' && u <= '9') || (u >= 'a' && u <= 'z') || (u >= 'A' && u <= 'Z') || u == '_';
}

/// ASCII case folding; non-ASCII bytes pass through untouched.
std::string fold_case(std::string_view s);

std::string_view trim(std::string_view s);

/// Splits on ASCII whitespace, dropping empty pieces.
std::vector<std::string_view> split_whitespace(std::string_view s);

std::vector<std::string_view> split(std::string_view s, char sep);

/// Shortest decimal text that parses back to exactly `v`.
std::string format_double(double v);

/// Strict full-string parse; rejects trailing garbage, NaN and infinities.
std::optional<double> parse_double(std::string_view s);

/// Codepoints that render as pictographs when they appear outside a lexicon match.
bool is_pictographic(char32_t cp);

/// Variation selectors, skin-tone modifiers, ZWJ and keycap/tag combiners.
bool is_emoji_modifier(char32_t cp);

}  // namespace tweetsent::text
