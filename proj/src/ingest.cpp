#include "tweetsent/ingest.hpp"

#include "tweetsent/text.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace tweetsent {

using nlohmann::json;

namespace {

std::string id_field(const json& object, const char* name, bool required) {
    const auto it = object.find(name);
    if (it == object.end() || it->is_null()) {
        if (required) throw TweetParseError(std::string("missing field '") + name + "'");
        return {};
    }
    if (it->is_string()) return it->get<std::string>();
    if (it->is_number_integer()) return it->dump();
    throw TweetParseError(std::string("field '") + name + "' must be a string or integer");
}

std::string normalize_hashtag(std::string_view tag) {
    tag = text::trim(tag);
    while (!tag.empty() && tag.front() == '#') tag.remove_prefix(1);
    if (tag.empty()) throw TweetParseError("empty hashtag");
    if (std::any_of(tag.begin(), tag.end(), [](char c) { return text::is_space(c) || c == '#'; })) {
        throw TweetParseError("hashtag '" + std::string(tag) + "' contains '#' or whitespace");
    }
    return text::fold_case(tag);
}

}  // namespace

std::vector<std::string> scan_hashtags(std::string_view s) {
    std::vector<std::string> tags;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] != '#' || (i > 0 && (text::is_word_char(s[i - 1]) || s[i - 1] == '#'))) continue;
        std::size_t j = i + 1;
        while (j < s.size() && text::is_word_char(s[j])) ++j;
        if (j == i + 1) continue;
        auto tag = text::fold_case(s.substr(i + 1, j - i - 1));
        if (std::find(tags.begin(), tags.end(), tag) == tags.end()) tags.push_back(std::move(tag));
        i = j - 1;
    }
    return tags;
}

Tweet tweet_from_json(const json& object) {
    if (!object.is_object()) throw TweetParseError("record is not a JSON object");
    Tweet t;
    t.id = id_field(object, "id", true);
    if (t.id.empty()) throw TweetParseError("empty id");

    const auto text_it = object.find("text");
    if (text_it == object.end() || !text_it->is_string()) {
        throw TweetParseError("missing field 'text'");
    }
    t.text = text_it->get<std::string>();

    const auto created = object.find("created_at");
    if (created == object.end() || !created->is_string()) {
        throw TweetParseError("missing field 'created_at'");
    }
    const auto ts = parse_timestamp(created->get_ref<const std::string&>());
    if (!ts) {
        throw TweetParseError("unparseable created_at '" + created->get<std::string>() + "'");
    }
    t.created_at = *ts;

    if (const auto it = object.find("lang"); it != object.end() && !it->is_null()) {
        if (!it->is_string()) throw TweetParseError("field 'lang' must be a string");
        t.lang = it->get<std::string>();
    }
    if (const auto it = object.find("is_retweet"); it != object.end() && !it->is_null()) {
        if (!it->is_boolean()) throw TweetParseError("field 'is_retweet' must be a boolean");
        t.is_retweet = it->get<bool>();
    }
    t.author_id = id_field(object, "author_id", false);

    if (const auto it = object.find("hashtags"); it != object.end() && !it->is_null()) {
        if (!it->is_array()) throw TweetParseError("field 'hashtags' must be an array");
        for (const auto& tag : *it) {
            if (!tag.is_string()) throw TweetParseError("hashtags must be strings");
            auto normalized = normalize_hashtag(tag.get_ref<const std::string&>());
            if (std::find(t.hashtags.begin(), t.hashtags.end(), normalized) == t.hashtags.end()) {
                t.hashtags.push_back(std::move(normalized));
            }
        }
    } else {
        t.hashtags = scan_hashtags(t.text);
    }
    return t;
}

json tweet_to_json(const Tweet& tweet) {
    return json{{"id", tweet.id},
                {"created_at", format_timestamp(tweet.created_at)},
                {"text", tweet.text},
                {"lang", tweet.lang},
                {"is_retweet", tweet.is_retweet},
                {"hashtags", tweet.hashtags},
                {"author_id", tweet.author_id}};
}

Tweet parse_tweet_record(std::string_view line) {
    json object;
    try {
        object = json::parse(line);
    } catch (const json::parse_error& e) {
        throw TweetParseError(std::string("malformed JSON: ") + e.what());
    }
    return tweet_from_json(object);
}

CorpusRead read_corpus(std::istream& in) {
    CorpusRead result;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (text::trim(line).empty()) continue;
        ++result.lines_read;
        try {
            result.tweets.push_back(parse_tweet_record(line));
        } catch (const TweetParseError& e) {
            result.errors.push_back({line_no, e.what()});
        }
    }
    return result;
}

CorpusRead read_corpus_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open corpus '" + path + "'");
    return read_corpus(in);
}

void write_corpus(std::ostream& out, const std::vector<Tweet>& tweets) {
    for (const auto& t : tweets) out << tweet_to_json(t).dump() << '\n';
}

void FilterSpec::validate() const {
    if (date_window && date_window->start > date_window->end) {
        throw std::invalid_argument("date window start is after its end");
    }
}

FilterSpec FilterSpec::permissive() {
    FilterSpec spec;
    spec.required_lang.reset();
    spec.drop_retweets = false;
    return spec;
}

std::string normalize_keyword(std::string_view keyword) {
    keyword = text::trim(keyword);
    while (!keyword.empty() && keyword.front() == '#') keyword.remove_prefix(1);
    return text::fold_case(text::trim(keyword));
}

namespace {

bool matches_folded(const Tweet& tweet, std::string_view folded_text, std::string_view keyword) {
    if (keyword.empty()) return false;
    // Hashtags cannot hold spaces, so "world cup" also matches #worldcup.
    std::string tag_form;
    for (char c : keyword) {
        if (!text::is_space(c)) tag_form.push_back(c);
    }
    if (std::find(tweet.hashtags.begin(), tweet.hashtags.end(), tag_form) != tweet.hashtags.end()) {
        return true;
    }
    return folded_text.find(keyword) != std::string_view::npos;
}

struct PreparedSpec {
    std::vector<std::string> include;
    std::unordered_set<std::string> exclude;
    std::optional<std::string> lang;
    const FilterSpec* spec;

    explicit PreparedSpec(const FilterSpec& s) : spec(&s) {
        s.validate();
        for (const auto& k : s.include_keywords) {
            if (auto n = normalize_keyword(k); !n.empty()) include.push_back(std::move(n));
        }
        for (const auto& h : s.exclude_hashtags) {
            if (auto n = normalize_keyword(h); !n.empty()) exclude.insert(std::move(n));
        }
        if (s.required_lang && !s.required_lang->empty()) lang = text::fold_case(*s.required_lang);
    }

    DropReason check(const Tweet& t) const {
        if (lang && text::fold_case(t.lang) != *lang) return DropReason::language;
        if (spec->drop_retweets && t.is_retweet) return DropReason::retweet;
        if (const auto& w = spec->date_window; w && (t.created_at < w->start || t.created_at > w->end)) {
            return DropReason::date_window;
        }
        if (!include.empty()) {
            const auto folded = text::fold_case(t.text);
            const bool any = std::any_of(include.begin(), include.end(), [&](const std::string& k) {
                return matches_folded(t, folded, k);
            });
            if (!any) return DropReason::no_keyword;
        }
        for (const auto& tag : t.hashtags) {
            if (exclude.contains(tag)) return DropReason::excluded_hashtag;
        }
        return DropReason::kept;
    }
};

}  // namespace

bool matches_keyword(const Tweet& tweet, std::string_view normalized_keyword) {
    return matches_folded(tweet, text::fold_case(tweet.text), normalized_keyword);
}

std::string_view to_string(DropReason reason) {
    switch (reason) {
        case DropReason::kept: return "kept";
        case DropReason::language: return "language";
        case DropReason::retweet: return "retweet";
        case DropReason::date_window: return "date_window";
        case DropReason::no_keyword: return "no_keyword";
        case DropReason::excluded_hashtag: return "excluded_hashtag";
        case DropReason::duplicate: return "duplicate";
    }
    return "unknown";
}

DropReason check_tweet(const Tweet& tweet, const FilterSpec& spec) {
    return PreparedSpec(spec).check(tweet);
}

FilterReport filter_with_report(const std::vector<Tweet>& tweets, const FilterSpec& spec) {
    const PreparedSpec prepared(spec);
    static constexpr std::array kReasons = {DropReason::language,   DropReason::retweet,
                                            DropReason::date_window, DropReason::no_keyword,
                                            DropReason::excluded_hashtag, DropReason::duplicate};
    FilterReport report;
    for (auto r : kReasons) report.dropped.emplace_back(r, 0);
    auto bump = [&](DropReason r) {
        for (auto& [reason, n] : report.dropped) {
            if (reason == r) ++n;
        }
    };

    std::unordered_set<std::string> seen;
    for (const auto& t : tweets) {
        const auto verdict = prepared.check(t);
        if (verdict != DropReason::kept) {
            bump(verdict);
        } else if (!seen.insert(t.id).second) {
            bump(DropReason::duplicate);
        } else {
            report.kept.push_back(t);
        }
    }
    return report;
}

std::vector<Tweet> filter_stream(const std::vector<Tweet>& tweets, const FilterSpec& spec) {
    return filter_with_report(tweets, spec).kept;
}

std::vector<KeywordStat> keyword_frequency(const std::vector<Tweet>& tweets,
                                           const std::vector<std::string>& keywords) {
    if (keywords.empty()) throw std::invalid_argument("keyword list is empty");
    std::vector<KeywordStat> stats;
    for (const auto& k : keywords) stats.push_back({normalize_keyword(k), 0, 0.0});

    for (const auto& t : tweets) {
        const auto folded = text::fold_case(t.text);
        for (auto& s : stats) {
            if (matches_folded(t, folded, s.keyword)) ++s.tweet_count;
        }
    }
    for (auto& s : stats) {
        s.share = tweets.empty() ? 0.0 : static_cast<double>(s.tweet_count) / static_cast<double>(tweets.size());
    }
    std::stable_sort(stats.begin(), stats.end(),
                     [](const KeywordStat& a, const KeywordStat& b) { return a.tweet_count > b.tweet_count; });
    return stats;
}

namespace {

const std::unordered_set<std::string_view>& stopwords() {
    static const std::unordered_set<std::string_view> words = {
        "a",     "an",   "and",  "are",  "as",    "at",   "be",   "been", "but",  "by",
        "for",   "from", "has",  "have", "he",    "her",  "his",  "i",    "i'm",  "in",
        "is",    "it",   "its",  "me",   "my",    "not",  "of",   "on",   "or",   "our",
        "she",   "so",   "that", "the",  "their", "them", "they", "this", "to",   "us",
        "was",   "we",   "were", "will", "with",  "you",  "your", "rt",   "amp",  "just"};
    return words;
}

// Plain words of a tweet, lower-cased; mentions, URLs and hashtags become breaks.
std::vector<std::string> phrase_words(std::string_view s) {
    std::vector<std::string> words;
    for (auto piece : text::split_whitespace(s)) {
        if (piece.front() == '@' || piece.front() == '#' || piece.find("://") != std::string_view::npos) {
            words.emplace_back();
            continue;
        }
        while (!piece.empty() && !text::is_word_char(piece.back())) piece.remove_suffix(1);
        while (!piece.empty() && !text::is_word_char(piece.front())) piece.remove_prefix(1);
        const bool plain = !piece.empty() && std::all_of(piece.begin(), piece.end(), [](char c) {
            return text::is_word_char(c) || c == '\'';
        });
        words.push_back(plain ? text::fold_case(piece) : std::string{});
    }
    return words;
}

std::string without_spaces(std::string_view s) {
    std::string out;
    for (char c : s) {
        if (!text::is_space(c)) out.push_back(c);
    }
    return out;
}

}  // namespace

std::vector<KeywordStat> suggest_keywords(const std::vector<Tweet>& tweets,
                                          const std::vector<std::string>& official_keywords,
                                          const SuggestOptions& options) {
    if (!(options.min_share > 0.0) || options.min_share > 1.0) {
        throw std::invalid_argument("min_share must lie in (0, 1]");
    }
    std::unordered_set<std::string> official;
    for (const auto& k : official_keywords) official.insert(without_spaces(normalize_keyword(k)));

    std::unordered_map<std::string, std::size_t> counts;
    for (const auto& t : tweets) {
        std::set<std::string> candidates(t.hashtags.begin(), t.hashtags.end());
        if (options.max_phrase_words > 0) {
            const auto words = phrase_words(t.text);
            for (std::size_t i = 0; i < words.size(); ++i) {
                std::string phrase;
                for (std::size_t n = 1; n <= options.max_phrase_words && i + n <= words.size(); ++n) {
                    const auto& w = words[i + n - 1];
                    if (w.empty()) break;
                    phrase += (n > 1 ? " " : "") + w;
                    if (!stopwords().contains(words[i]) && !stopwords().contains(w)) {
                        candidates.insert(phrase);
                    }
                }
            }
        }
        for (const auto& c : candidates) ++counts[c];
    }

    std::vector<KeywordStat> out;
    const auto total = static_cast<double>(tweets.size());
    for (const auto& [candidate, n] : counts) {
        if (official.contains(without_spaces(candidate))) continue;
        const double share = static_cast<double>(n) / total;
        if (share >= options.min_share) out.push_back({candidate, n, share});
    }
    std::sort(out.begin(), out.end(), [](const KeywordStat& a, const KeywordStat& b) {
        return a.tweet_count != b.tweet_count ? a.tweet_count > b.tweet_count : a.keyword < b.keyword;
    });
    return out;
}

}  // namespace tweetsent
