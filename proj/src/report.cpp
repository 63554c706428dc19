#include "tweetsent/report.hpp"

#include "tweetsent/csv.hpp"
#include "tweetsent/text.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>

namespace tweetsent {

using nlohmann::json;

namespace {

const csv::Row kScoredHeader = {"id", "created_at", "raw", "compound", "polarity", "emoji_count"};
const csv::Row kDailyHeader = {"date",       "n_tweets",  "mean_compound", "sum_compound",
                               "n_positive", "n_neutral", "n_negative"};
const csv::Row kEntityHeader = {"entity",     "aliases",   "n_tweets",  "mean_compound",
                                "n_positive", "n_neutral", "n_negative"};
const csv::Row kEntityDailyHeader = {"entity", "date", "n_tweets", "mean_compound"};
const csv::Row kKeywordHeader = {"keyword", "tweet_count", "share"};
const csv::Row kEmojiSummaryHeader = {"n_tweets", "n_with_emoji", "fraction_with_emoji"};
const csv::Row kEmojiCountsHeader = {"rank", "emoji", "count"};
const csv::Row kPolarityHeader = {"positive", "neutral", "negative"};

std::string num(double v) { return text::format_double(v); }
std::string num(std::size_t v) { return std::to_string(v); }

std::vector<csv::Row> body(std::istream& in, const csv::Row& header, const char* what) {
    auto rows = csv::parse(in);
    std::erase_if(rows, [](const csv::Row& r) { return r.size() == 1 && r[0].empty(); });
    if (rows.empty() || rows.front() != header) {
        throw ReportFormatError(std::string(what) + ": unexpected header");
    }
    rows.erase(rows.begin());
    for (const auto& r : rows) {
        if (r.size() != header.size()) {
            throw ReportFormatError(std::string(what) + ": row has " + std::to_string(r.size()) +
                                    " fields, expected " + std::to_string(header.size()));
        }
    }
    return rows;
}

double to_double(const std::string& s) {
    const auto v = text::parse_double(s);
    if (!v) throw ReportFormatError("bad number '" + s + "'");
    return *v;
}

std::size_t to_count(const std::string& s) {
    std::size_t v = 0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
        throw ReportFormatError("bad count '" + s + "'");
    }
    return v;
}

Date to_date(const std::string& s) {
    const auto d = parse_date(s);
    if (!d) throw ReportFormatError("bad date '" + s + "'");
    return *d;
}

bool all_digits(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

bool id_less(const std::string& a, const std::string& b) {
    const bool da = all_digits(a), db = all_digits(b);
    if (da != db) return da;
    if (da) {
        const auto strip = [](const std::string& s) {
            const auto p = s.find_first_not_of('0');
            return p == std::string::npos ? std::string_view("0") : std::string_view(s).substr(p);
        };
        const auto sa = strip(a), sb = strip(b);
        if (sa.size() != sb.size()) return sa.size() < sb.size();
        if (sa != sb) return sa < sb;
    }
    return a < b;
}

void write_scored_csv(std::ostream& out, std::vector<ScoredRow> rows) {
    std::stable_sort(rows.begin(), rows.end(),
                     [](const ScoredRow& a, const ScoredRow& b) { return id_less(a.id, b.id); });
    csv::write_row(out, kScoredHeader);
    for (const auto& r : rows) {
        csv::write_row(out, {r.id, format_timestamp(r.created_at), num(r.score.raw), num(r.score.compound),
                             std::string(to_string(r.score.polarity)), num(r.score.emoji_count)});
    }
}

std::vector<ScoredRow> read_scored_csv(std::istream& in) {
    std::vector<ScoredRow> rows;
    for (const auto& r : body(in, kScoredHeader, "scored csv")) {
        const auto ts = parse_timestamp(r[1]);
        if (!ts) throw ReportFormatError("bad timestamp '" + r[1] + "'");
        ScoredRow row{r[0], *ts, {}};
        row.score.raw = to_double(r[2]);
        row.score.compound = to_double(r[3]);
        try {
            row.score.polarity = parse_polarity(r[4]);
        } catch (const std::invalid_argument& e) {
            throw ReportFormatError(e.what());
        }
        row.score.emoji_count = to_count(r[5]);
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_daily_csv(std::ostream& out, const std::vector<DailyAggregate>& series) {
    csv::write_row(out, kDailyHeader);
    for (const auto& d : series) {
        csv::write_row(out, {format_date(d.date), num(d.n_tweets), num(d.mean_compound), num(d.sum_compound),
                             num(d.n_positive), num(d.n_neutral), num(d.n_negative)});
    }
}

std::vector<DailyAggregate> read_daily_csv(std::istream& in) {
    std::vector<DailyAggregate> series;
    for (const auto& r : body(in, kDailyHeader, "daily csv")) {
        DailyAggregate d;
        d.date = to_date(r[0]);
        d.n_tweets = to_count(r[1]);
        d.mean_compound = to_double(r[2]);
        d.sum_compound = to_double(r[3]);
        d.n_positive = to_count(r[4]);
        d.n_neutral = to_count(r[5]);
        d.n_negative = to_count(r[6]);
        series.push_back(d);
    }
    return series;
}

void write_entities_csv(std::ostream& out, const std::vector<EntityProfile>& profiles) {
    csv::write_row(out, kEntityHeader);
    for (const auto& p : profiles) {
        std::string aliases;
        for (const auto& a : p.aliases) aliases += (aliases.empty() ? "" : "|") + a;
        csv::write_row(out, {p.canonical_name, aliases, num(p.n_tweets), num(p.mean_compound),
                             num(p.n_positive), num(p.n_neutral), num(p.n_negative)});
    }
}

std::vector<EntityProfile> read_entities_csv(std::istream& in) {
    std::vector<EntityProfile> profiles;
    for (const auto& r : body(in, kEntityHeader, "entities csv")) {
        EntityProfile p;
        p.canonical_name = r[0];
        for (auto a : text::split(r[1], '|')) p.aliases.emplace_back(a);
        p.n_tweets = to_count(r[2]);
        p.mean_compound = to_double(r[3]);
        p.n_positive = to_count(r[4]);
        p.n_neutral = to_count(r[5]);
        p.n_negative = to_count(r[6]);
        profiles.push_back(std::move(p));
    }
    return profiles;
}

void write_entity_daily_csv(std::ostream& out, const std::vector<EntityProfile>& profiles) {
    csv::write_row(out, kEntityDailyHeader);
    for (const auto& p : profiles) {
        for (const auto& d : p.daily) {
            csv::write_row(out, {p.canonical_name, format_date(d.date), num(d.n_tweets), num(d.mean_compound)});
        }
    }
}

void write_keywords_csv(std::ostream& out, const std::vector<KeywordStat>& stats) {
    csv::write_row(out, kKeywordHeader);
    for (const auto& s : stats) csv::write_row(out, {s.keyword, num(s.tweet_count), num(s.share)});
}

std::vector<KeywordStat> read_keywords_csv(std::istream& in) {
    std::vector<KeywordStat> stats;
    for (const auto& r : body(in, kKeywordHeader, "keywords csv")) {
        stats.push_back({r[0], to_count(r[1]), to_double(r[2])});
    }
    return stats;
}

void write_emoji_summary_csv(std::ostream& out, const EmojiStats& stats) {
    csv::write_row(out, kEmojiSummaryHeader);
    csv::write_row(out, {num(stats.n_tweets), num(stats.n_with_emoji), num(stats.fraction_with_emoji)});
}

void write_emoji_counts_csv(std::ostream& out, const EmojiStats& stats) {
    csv::write_row(out, kEmojiCountsHeader);
    std::size_t rank = 0;
    for (const auto& [emoji, count] : stats.per_emoji_counts) {
        csv::write_row(out, {num(++rank), emoji, num(count)});
    }
}

EmojiStats read_emoji_csv(std::istream& summary, std::istream& counts) {
    EmojiStats stats;
    const auto head = body(summary, kEmojiSummaryHeader, "emoji summary csv");
    if (head.size() != 1) throw ReportFormatError("emoji summary csv: expected one row");
    stats.n_tweets = to_count(head[0][0]);
    stats.n_with_emoji = to_count(head[0][1]);
    stats.fraction_with_emoji = to_double(head[0][2]);
    for (const auto& r : body(counts, kEmojiCountsHeader, "emoji counts csv")) {
        stats.per_emoji_counts.emplace_back(r[1], to_count(r[2]));
    }
    return stats;
}

void write_polarity_csv(std::ostream& out, const PolarityCounts& counts) {
    csv::write_row(out, kPolarityHeader);
    csv::write_row(out, {num(counts.positive), num(counts.neutral), num(counts.negative)});
}

PolarityCounts read_polarity_csv(std::istream& in) {
    const auto rows = body(in, kPolarityHeader, "polarity csv");
    if (rows.size() != 1) throw ReportFormatError("polarity csv: expected one row");
    return {to_count(rows[0][0]), to_count(rows[0][1]), to_count(rows[0][2])};
}

json daily_to_json(const std::vector<DailyAggregate>& series) {
    json out = json::array();
    for (const auto& d : series) {
        out.push_back({{"date", format_date(d.date)},
                       {"n_tweets", d.n_tweets},
                       {"mean_compound", d.mean_compound},
                       {"sum_compound", d.sum_compound},
                       {"n_positive", d.n_positive},
                       {"n_neutral", d.n_neutral},
                       {"n_negative", d.n_negative}});
    }
    return out;
}

json entities_to_json(const std::vector<EntityProfile>& profiles) {
    json out = json::array();
    for (const auto& p : profiles) {
        out.push_back({{"entity", p.canonical_name},
                       {"aliases", p.aliases},
                       {"n_tweets", p.n_tweets},
                       {"mean_compound", p.mean_compound},
                       {"n_positive", p.n_positive},
                       {"n_neutral", p.n_neutral},
                       {"n_negative", p.n_negative},
                       {"daily", daily_to_json(p.daily)}});
    }
    return out;
}

json keywords_to_json(const std::vector<KeywordStat>& stats) {
    json out = json::array();
    for (const auto& s : stats) {
        out.push_back({{"keyword", s.keyword}, {"tweet_count", s.tweet_count}, {"share", s.share}});
    }
    return out;
}

json emoji_to_json(const EmojiStats& stats) {
    json counts = json::array();
    for (const auto& [emoji, n] : stats.per_emoji_counts) counts.push_back({{"emoji", emoji}, {"count", n}});
    return {{"n_tweets", stats.n_tweets},
            {"n_with_emoji", stats.n_with_emoji},
            {"fraction_with_emoji", stats.fraction_with_emoji},
            {"per_emoji_counts", counts}};
}

}  // namespace tweetsent
