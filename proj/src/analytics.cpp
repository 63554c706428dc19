#include "tweetsent/analytics.hpp"

#include "tweetsent/text.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <stdexcept>

namespace tweetsent {

void DailyAggregate::add(const SentimentScore& score) {
    ++n_tweets;
    sum_compound += score.compound;
    switch (score.polarity) {
        case Polarity::positive: ++n_positive; break;
        case Polarity::neutral: ++n_neutral; break;
        case Polarity::negative: ++n_negative; break;
    }
    mean_compound = sum_compound / static_cast<double>(n_tweets);
}

DailyAggregate merge_aggregates(const DailyAggregate& a, const DailyAggregate& b) {
    if (a.date != b.date) {
        throw std::invalid_argument("cannot merge aggregates for " + format_date(a.date) + " and " +
                                    format_date(b.date));
    }
    DailyAggregate out = DailyAggregate::zero(a.date);
    out.n_tweets = a.n_tweets + b.n_tweets;
    out.sum_compound = a.sum_compound + b.sum_compound;
    out.n_positive = a.n_positive + b.n_positive;
    out.n_neutral = a.n_neutral + b.n_neutral;
    out.n_negative = a.n_negative + b.n_negative;
    out.mean_compound = out.n_tweets > 0 ? out.sum_compound / static_cast<double>(out.n_tweets) : 0.0;
    return out;
}

std::vector<DailyAggregate> daily_series(const std::vector<ScoredTweet>& scored,
                                         const std::optional<DayRange>& window,
                                         const BucketOptions& options) {
    std::map<Date, DailyAggregate> buckets;
    for (const auto& s : scored) {
        const Date day = day_of(s.tweet.created_at, options.utc_offset);
        if (window && (day < window->first || day > window->last)) continue;
        auto [it, inserted] = buckets.try_emplace(day, DailyAggregate::zero(day));
        it->second.add(s.score);
    }

    Date first, last;
    if (window) {
        if (window->first > window->last) throw std::invalid_argument("day range is reversed");
        first = window->first;
        last = window->last;
    } else if (!buckets.empty()) {
        first = buckets.begin()->first;
        last = buckets.rbegin()->first;
    } else {
        return {};
    }

    std::vector<DailyAggregate> series;
    for (Date d = first; d <= last; d += std::chrono::days{1}) {
        const auto it = buckets.find(d);
        series.push_back(it != buckets.end() ? it->second : DailyAggregate::zero(d));
    }
    return series;
}

bool mentions_alias(std::string_view body, std::string_view alias) {
    const std::string needle = text::fold_case(text::trim(alias));
    if (needle.empty()) return false;
    const std::string hay = text::fold_case(body);
    for (std::size_t pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) {
        const bool left_ok = pos == 0 || !text::is_word_char(hay[pos - 1]);
        const std::size_t end = pos + needle.size();
        const bool right_ok = end == hay.size() || !text::is_word_char(hay[end]);
        if (left_ok && right_ok) return true;
    }
    return false;
}

std::vector<EntityProfile> entity_profiles(const std::vector<ScoredTweet>& scored,
                                           const std::vector<Entity>& entities,
                                           const std::optional<DayRange>& window,
                                           const BucketOptions& options) {
    std::vector<EntityProfile> profiles;
    for (const auto& e : entities) {
        EntityProfile p;
        p.canonical_name = e.canonical_name;
        p.aliases = e.aliases;
        if (std::find(p.aliases.begin(), p.aliases.end(), e.canonical_name) == p.aliases.end()) {
            p.aliases.insert(p.aliases.begin(), e.canonical_name);
        }

        std::vector<ScoredTweet> matched;
        double sum = 0.0;
        for (const auto& s : scored) {
            if (window) {
                const Date day = day_of(s.tweet.created_at, options.utc_offset);
                if (day < window->first || day > window->last) continue;
            }
            const bool hit = std::any_of(p.aliases.begin(), p.aliases.end(), [&](const std::string& a) {
                return mentions_alias(s.tweet.text, a);
            });
            if (!hit) continue;
            matched.push_back(s);
            sum += s.score.compound;
            switch (s.score.polarity) {
                case Polarity::positive: ++p.n_positive; break;
                case Polarity::neutral: ++p.n_neutral; break;
                case Polarity::negative: ++p.n_negative; break;
            }
        }
        p.n_tweets = matched.size();
        p.mean_compound = matched.empty() ? 0.0 : sum / static_cast<double>(matched.size());
        p.daily = daily_series(matched, window, options);
        profiles.push_back(std::move(p));
    }
    return profiles;
}

std::vector<Entity> load_entities(std::istream& in) {
    std::vector<Entity> entities;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto trimmed = text::trim(line);
        if (trimmed.empty() || trimmed.front() == '#') continue;
        const auto fields = text::split(trimmed, '\t');
        if (fields.size() > 2) {
            throw std::runtime_error("entities line " + std::to_string(line_no) +
                                     ": expected 'name<TAB>aliases'");
        }
        Entity e;
        e.canonical_name = std::string(text::trim(fields[0]));
        if (e.canonical_name.empty()) {
            throw std::runtime_error("entities line " + std::to_string(line_no) + ": empty name");
        }
        e.aliases.push_back(e.canonical_name);
        if (fields.size() == 2) {
            for (auto alias : text::split(fields[1], ',')) {
                alias = text::trim(alias);
                if (!alias.empty() &&
                    std::find(e.aliases.begin(), e.aliases.end(), alias) == e.aliases.end()) {
                    e.aliases.emplace_back(alias);
                }
            }
        }
        entities.push_back(std::move(e));
    }
    return entities;
}

std::vector<Entity> load_entities_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open entity file '" + path + "'");
    return load_entities(in);
}

EmojiStats emoji_statistics(const std::vector<Tweet>& tweets, const Lexicon& lexicon) {
    EmojiStats stats;
    stats.n_tweets = tweets.size();
    std::map<std::string, std::size_t> counts;
    for (const auto& t : tweets) {
        const auto bag = tokenize(t.text, lexicon);
        if (bag.emoji_count() == 0) continue;
        ++stats.n_with_emoji;
        for (const auto& f : bag.features()) {
            if (f.kind == EntryKind::emoji) counts[f.key] += f.count;
        }
    }
    stats.fraction_with_emoji =
        stats.n_tweets > 0 ? static_cast<double>(stats.n_with_emoji) / static_cast<double>(stats.n_tweets) : 0.0;
    stats.per_emoji_counts.assign(counts.begin(), counts.end());
    std::stable_sort(stats.per_emoji_counts.begin(), stats.per_emoji_counts.end(),
                     [](const auto& a, const auto& b) { return a.second > b.second; });
    return stats;
}

PolarityCounts polarity_distribution(const std::vector<ScoredTweet>& scored) {
    PolarityCounts counts;
    for (const auto& s : scored) {
        switch (s.score.polarity) {
            case Polarity::positive: ++counts.positive; break;
            case Polarity::neutral: ++counts.neutral; break;
            case Polarity::negative: ++counts.negative; break;
        }
    }
    return counts;
}

}  // namespace tweetsent
