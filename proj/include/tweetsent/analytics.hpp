#pragma once

#include "tweetsent/engine.hpp"
#include "tweetsent/ingest.hpp"
#include "tweetsent/time.hpp"

#include <chrono>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tweetsent {

struct ScoredTweet {
    Tweet tweet;
    SentimentScore score;
};

/// Per-day summary. Forms a commutative monoid under merge_aggregates for a
/// fixed date, with zero(date) as identity.
struct DailyAggregate {
    Date date{};
    std::size_t n_tweets = 0;
    double sum_compound = 0.0;
    double mean_compound = 0.0;
    std::size_t n_positive = 0;
    std::size_t n_neutral = 0;
    std::size_t n_negative = 0;

    static DailyAggregate zero(Date date) { return DailyAggregate{date}; }

    void add(const SentimentScore& score);

    friend bool operator==(const DailyAggregate&, const DailyAggregate&) = default;
};

/// Throws std::invalid_argument when the dates differ.
DailyAggregate merge_aggregates(const DailyAggregate& a, const DailyAggregate& b);

struct DayRange {
    Date first{};
    Date last{};  // inclusive
};

struct BucketOptions {
    std::chrono::minutes utc_offset{0};  // +180 buckets by Qatar local days
};

/// One aggregate per calendar day, ascending, with empty days filled in.
/// Without a window the range spans the earliest to latest tweet.
std::vector<DailyAggregate> daily_series(const std::vector<ScoredTweet>& scored,
                                         const std::optional<DayRange>& window = std::nullopt,
                                         const BucketOptions& options = {});

struct Entity {
    std::string canonical_name;
    std::vector<std::string> aliases;
};

struct EntityProfile {
    std::string canonical_name;
    std::vector<std::string> aliases;  // always includes canonical_name
    std::size_t n_tweets = 0;
    double mean_compound = 0.0;
    std::size_t n_positive = 0;
    std::size_t n_neutral = 0;
    std::size_t n_negative = 0;
    std::vector<DailyAggregate> daily;
};

/// Case-insensitive match of `alias` as whole words inside `text`.
bool mentions_alias(std::string_view text, std::string_view alias);

/// A tweet counts for every entity one of whose aliases it mentions.
std::vector<EntityProfile> entity_profiles(const std::vector<ScoredTweet>& scored,
                                           const std::vector<Entity>& entities,
                                           const std::optional<DayRange>& window = std::nullopt,
                                           const BucketOptions& options = {});

/// `Canonical Name<TAB>alias, alias` lines; `#` comments. Throws std::runtime_error.
std::vector<Entity> load_entities(std::istream& in);
std::vector<Entity> load_entities_file(const std::string& path);

struct EmojiStats {
    std::size_t n_tweets = 0;
    std::size_t n_with_emoji = 0;
    double fraction_with_emoji = 0.0;
    std::vector<std::pair<std::string, std::size_t>> per_emoji_counts;  // count desc, then key
};

EmojiStats emoji_statistics(const std::vector<Tweet>& tweets, const Lexicon& lexicon);

struct PolarityCounts {
    std::size_t positive = 0;
    std::size_t neutral = 0;
    std::size_t negative = 0;

    friend bool operator==(const PolarityCounts&, const PolarityCounts&) = default;
};

PolarityCounts polarity_distribution(const std::vector<ScoredTweet>& scored);

}  // namespace tweetsent
