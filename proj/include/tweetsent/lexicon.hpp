#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tweetsent {

inline constexpr double kMinValence = -4.0;
inline constexpr double kMaxValence = 4.0;

enum class EntryKind { word, emoji };

struct LexiconEntry {
    std::string key;
    double valence = 0.0;
    EntryKind kind = EntryKind::word;

    friend bool operator==(const LexiconEntry&, const LexiconEntry&) = default;
};

/// Raised by load_lexicon; carries the 1-based line that failed (0 for whole-file errors).
class LexiconError : public std::runtime_error {
public:
    LexiconError(std::size_t line, const std::string& message);
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Valence table for word tokens (case-folded) and emoji codepoint sequences.
///
/// Immutable once built; concurrent lookups are safe. A key goes to the emoji
/// table iff it contains a non-ASCII codepoint.
class Lexicon {
public:
    Lexicon() = default;
    explicit Lexicon(std::string name) : name_(std::move(name)) {}

    /// Inserts or replaces; throws std::invalid_argument if the entry breaks an invariant.
    /// Returns true when an existing key was replaced.
    bool insert(std::string_view key, double valence);

    std::optional<double> lookup(std::string_view feature) const;

    const std::map<std::string, double, std::less<>>& word_entries() const noexcept { return words_; }
    const std::map<std::string, double, std::less<>>& emoji_entries() const noexcept { return emoji_; }
    const std::string& name() const noexcept { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    std::size_t entry_count() const noexcept { return words_.size() + emoji_.size(); }
    bool empty() const noexcept { return entry_count() == 0; }

    /// Lines that overwrote an earlier key during load.
    std::size_t duplicate_count() const noexcept { return duplicates_; }

    /// Longest emoji key, in bytes. Used to bound longest-match scans.
    std::size_t max_emoji_bytes() const noexcept { return max_emoji_bytes_; }

    /// Entry equality; the name and duplicate counter are not compared.
    friend bool operator==(const Lexicon& a, const Lexicon& b) {
        return a.words_ == b.words_ && a.emoji_ == b.emoji_;
    }

private:
    friend Lexicon load_lexicon(std::istream&, std::string);

    std::string name_;
    std::map<std::string, double, std::less<>> words_;
    std::map<std::string, double, std::less<>> emoji_;
    std::size_t duplicates_ = 0;
    std::size_t max_emoji_bytes_ = 0;
};

/// Classifies and validates one raw key; throws std::invalid_argument with the reason.
LexiconEntry make_entry(std::string_view key, double valence);

/// Parses `key<TAB>valence` lines. `#` lines and blank lines are skipped; keys
/// written as `U+1F60E` (optionally several, space separated) are decoded.
Lexicon load_lexicon(std::istream& source, std::string name);
Lexicon load_lexicon_file(const std::string& path);

/// Writes every entry in load_lexicon's format, words first, emoji as literal UTF-8.
void write_lexicon(std::ostream& out, const Lexicon& lexicon);

/// Union of both tables; overlay wins on key conflicts.
Lexicon merge_lexicons(const Lexicon& base, const Lexicon& overlay);

}  // namespace tweetsent
