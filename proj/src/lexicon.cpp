#include "tweetsent/lexicon.hpp"

#include "tweetsent/text.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>

namespace tweetsent {

namespace {

std::string make_message(std::size_t line, const std::string& message) {
    if (line == 0) return message;
    return "line " + std::to_string(line) + ": " + message;
}

// "U+1F60E" or "U+1F468 U+200D U+1F4BB" -> UTF-8 bytes; nullopt when the key is not in that notation.
std::optional<std::string> decode_codepoint_notation(std::string_view key) {
    if (key.size() < 3 || key[0] != 'U' || key[1] != '+') return std::nullopt;
    std::string out;
    for (auto part : text::split_whitespace(key)) {
        if (part.size() < 3 || part[0] != 'U' || part[1] != '+') return std::nullopt;
        part.remove_prefix(2);
        unsigned long cp = 0;
        const auto res = std::from_chars(part.data(), part.data() + part.size(), cp, 16);
        if (res.ec != std::errc{} || res.ptr != part.data() + part.size() || cp > 0x10FFFF ||
            (cp >= 0xD800 && cp <= 0xDFFF)) {
            throw std::invalid_argument("bad codepoint '" + std::string(part) + "'");
        }
        out += text::encode_utf8(static_cast<char32_t>(cp));
    }
    return out;
}

}  // namespace

LexiconError::LexiconError(std::size_t line, const std::string& message)
    : std::runtime_error(make_message(line, message)), line_(line) {}

LexiconEntry make_entry(std::string_view key, double valence) {
    if (key.empty()) throw std::invalid_argument("empty key");
    if (key.front() == '#') throw std::invalid_argument("key may not start with '#'");
    if (!std::isfinite(valence) || valence < kMinValence || valence > kMaxValence) {
        throw std::invalid_argument("valence " + text::format_double(valence) +
                                    " outside [-4, 4]");
    }
    if (!text::is_valid_utf8(key)) throw std::invalid_argument("key is not valid UTF-8");
    if (std::any_of(key.begin(), key.end(), text::is_space)) {
        throw std::invalid_argument("key contains whitespace");
    }
    if (text::is_ascii(key)) return {text::fold_case(key), valence, EntryKind::word};
    return {std::string(key), valence, EntryKind::emoji};
}

bool Lexicon::insert(std::string_view key, double valence) {
    auto entry = make_entry(key, valence);
    auto& table = entry.kind == EntryKind::word ? words_ : emoji_;
    if (entry.kind == EntryKind::emoji) {
        max_emoji_bytes_ = std::max(max_emoji_bytes_, entry.key.size());
    }
    const auto [it, inserted] = table.insert_or_assign(std::move(entry.key), valence);
    return !inserted;
}

std::optional<double> Lexicon::lookup(std::string_view feature) const {
    if (feature.empty()) return std::nullopt;
    if (text::is_ascii(feature)) {
        const auto it = words_.find(text::fold_case(feature));
        if (it == words_.end()) return std::nullopt;
        return it->second;
    }
    const auto it = emoji_.find(feature);
    if (it == emoji_.end()) return std::nullopt;
    return it->second;
}

Lexicon load_lexicon(std::istream& source, std::string name) {
    Lexicon lexicon(std::move(name));
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(source, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line_no == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
        if (text::trim(line).empty() || line.front() == '#') continue;

        const auto fields = text::split(line, '\t');
        if (fields.size() != 2) {
            throw LexiconError(line_no, "expected 2 tab-separated fields, got " +
                                            std::to_string(fields.size()));
        }
        const auto valence = text::parse_double(fields[1]);
        if (!valence) {
            throw LexiconError(line_no, "non-numeric valence '" + std::string(fields[1]) + "'");
        }
        try {
            std::string key(fields[0]);
            if (auto decoded = decode_codepoint_notation(key)) key = std::move(*decoded);
            if (lexicon.insert(key, *valence)) ++lexicon.duplicates_;
        } catch (const std::invalid_argument& e) {
            throw LexiconError(line_no, e.what());
        }
    }
    if (lexicon.empty()) throw LexiconError(0, "empty lexicon");
    return lexicon;
}

Lexicon load_lexicon_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw LexiconError(0, "cannot open lexicon '" + path + "'");
    return load_lexicon(in, path);
}

void write_lexicon(std::ostream& out, const Lexicon& lexicon) {
    for (const auto& [key, valence] : lexicon.word_entries()) {
        out << key << '\t' << text::format_double(valence) << '\n';
    }
    for (const auto& [key, valence] : lexicon.emoji_entries()) {
        out << key << '\t' << text::format_double(valence) << '\n';
    }
}

Lexicon merge_lexicons(const Lexicon& base, const Lexicon& overlay) {
    Lexicon merged = base;
    if (base.empty()) merged.set_name(overlay.name());
    else if (!overlay.empty()) merged.set_name(base.name() + "+" + overlay.name());
    for (const auto& [key, valence] : overlay.word_entries()) merged.insert(key, valence);
    for (const auto& [key, valence] : overlay.emoji_entries()) merged.insert(key, valence);
    return merged;
}

}  // namespace tweetsent
