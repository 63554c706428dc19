#pragma once

#include "tweetsent/analytics.hpp"
#include "tweetsent/engine.hpp"
#include "tweetsent/ingest.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace tweetsent {

class ReportFormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One line of the scored dataset.
struct ScoredRow {
    std::string id;
    Timestamp created_at{};
    SentimentScore score;

    friend bool operator==(const ScoredRow&, const ScoredRow&) = default;
};

/// Numeric ids compare by value, everything else lexicographically after them.
bool id_less(const std::string& a, const std::string& b);

// Writers emit a header line then one row per record, LF-terminated. Readers
// check the header and throw ReportFormatError on any mismatch.

void write_scored_csv(std::ostream& out, std::vector<ScoredRow> rows);  // sorts by id
std::vector<ScoredRow> read_scored_csv(std::istream& in);

void write_daily_csv(std::ostream& out, const std::vector<DailyAggregate>& series);
std::vector<DailyAggregate> read_daily_csv(std::istream& in);

void write_entities_csv(std::ostream& out, const std::vector<EntityProfile>& profiles);
/// Profiles without their daily breakdown, which lives in the entity-daily file.
std::vector<EntityProfile> read_entities_csv(std::istream& in);

void write_entity_daily_csv(std::ostream& out, const std::vector<EntityProfile>& profiles);

void write_keywords_csv(std::ostream& out, const std::vector<KeywordStat>& stats);
std::vector<KeywordStat> read_keywords_csv(std::istream& in);

void write_emoji_summary_csv(std::ostream& out, const EmojiStats& stats);
void write_emoji_counts_csv(std::ostream& out, const EmojiStats& stats);
/// Reassembles both emoji files.
EmojiStats read_emoji_csv(std::istream& summary, std::istream& counts);

void write_polarity_csv(std::ostream& out, const PolarityCounts& counts);
PolarityCounts read_polarity_csv(std::istream& in);

nlohmann::json daily_to_json(const std::vector<DailyAggregate>& series);
nlohmann::json entities_to_json(const std::vector<EntityProfile>& profiles);
nlohmann::json keywords_to_json(const std::vector<KeywordStat>& stats);
nlohmann::json emoji_to_json(const EmojiStats& stats);

}  // namespace tweetsent
