#pragma once

#include "tweetsent/time.hpp"

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

namespace tweetsent {

struct Tweet {
    std::string id;
    Timestamp created_at{};
    std::string text;
    std::string lang;
    bool is_retweet = false;
    std::vector<std::string> hashtags;  // lower-case, no '#'
    std::string author_id;

    friend bool operator==(const Tweet&, const Tweet&) = default;
};

class TweetParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Builds a Tweet from one decoded JSON object. `id` may be a string or an integer.
/// Missing `hashtags` are recovered by scanning the text for `#tag` tokens.
Tweet tweet_from_json(const nlohmann::json& object);
nlohmann::json tweet_to_json(const Tweet& tweet);

/// One JSONL line; throws TweetParseError.
Tweet parse_tweet_record(std::string_view line);

/// Lower-cased `#tag` tokens of `text` in first-seen order, without repeats.
std::vector<std::string> scan_hashtags(std::string_view text);

struct LineError {
    std::size_t line = 0;
    std::string message;
};

struct CorpusRead {
    std::vector<Tweet> tweets;
    std::vector<LineError> errors;
    std::size_t lines_read = 0;  // non-blank lines
};

/// Reads a JSONL corpus, skipping and recording malformed lines.
CorpusRead read_corpus(std::istream& in);
CorpusRead read_corpus_file(const std::string& path);

/// One compact JSON object per line, keys sorted.
void write_corpus(std::ostream& out, const std::vector<Tweet>& tweets);

struct DateWindow {
    Timestamp start{};
    Timestamp end{};  // inclusive
};

struct FilterSpec {
    std::vector<std::string> include_keywords;  // empty: every tweet matches
    std::vector<std::string> exclude_hashtags;
    std::optional<std::string> required_lang = "en";
    bool drop_retweets = true;
    std::optional<DateWindow> date_window;

    /// Throws std::invalid_argument when the window is reversed.
    void validate() const;

    /// Filter that accepts everything but duplicate ids.
    static FilterSpec permissive();
};

/// Lower-cased, leading '#' removed, surrounding whitespace trimmed.
std::string normalize_keyword(std::string_view keyword);

/// Case-insensitive substring of the text or exact match on a hashtag.
bool matches_keyword(const Tweet& tweet, std::string_view normalized_keyword);

enum class DropReason { kept, language, retweet, date_window, no_keyword, excluded_hashtag, duplicate };

std::string_view to_string(DropReason reason);

/// Verdict for a single tweet, ignoring duplicates.
DropReason check_tweet(const Tweet& tweet, const FilterSpec& spec);

struct FilterReport {
    std::vector<Tweet> kept;
    std::vector<std::pair<DropReason, std::size_t>> dropped;  // every reason except kept, fixed order
};

/// Keeps tweets passing every filter, order preserved; later duplicate ids are dropped.
std::vector<Tweet> filter_stream(const std::vector<Tweet>& tweets, const FilterSpec& spec);
FilterReport filter_with_report(const std::vector<Tweet>& tweets, const FilterSpec& spec);

struct KeywordStat {
    std::string keyword;
    std::size_t tweet_count = 0;
    double share = 0.0;

    friend bool operator==(const KeywordStat&, const KeywordStat&) = default;
};

/// Per keyword, how many tweets mention it; sorted by count, descending, ties in input order.
std::vector<KeywordStat> keyword_frequency(const std::vector<Tweet>& tweets,
                                           const std::vector<std::string>& keywords);

struct SuggestOptions {
    double min_share = 0.05;
    /// Also consider word n-grams up to this length (0 = hashtags only).
    std::size_t max_phrase_words = 0;
};

/// Hashtags (and optionally phrases) co-occurring with the official keywords, by share.
std::vector<KeywordStat> suggest_keywords(const std::vector<Tweet>& tweets,
                                          const std::vector<std::string>& official_keywords,
                                          const SuggestOptions& options = {});

}  // namespace tweetsent
