#include "tweetsent/cli.hpp"

#include "tweetsent/analytics.hpp"
#include "tweetsent/report.hpp"
#include "tweetsent/svg.hpp"
#include "tweetsent/text.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>
#include <unordered_map>

namespace tweetsent::cli {

namespace fs = std::filesystem;

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    for (auto part : text::split(s, ',')) {
        part = text::trim(part);
        if (!part.empty()) out.emplace_back(part);
    }
    return out;
}

namespace {

bool is_url(const std::string& s) { return s.rfind("http://", 0) == 0 || s.rfind("https://", 0) == 0; }

std::ofstream open_output(const fs::path& path) {
    std::error_code ec;
    if (path.has_parent_path()) fs::create_directories(path.parent_path(), ec);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw CommandError("cannot write '" + path.string() + "'");
    return out;
}

void finish(std::ofstream& out, const fs::path& path) {
    out.flush();
    if (!out) throw CommandError("error writing '" + path.string() + "'");
}

CorpusRead read_corpus_or_throw(const std::string& path) {
    try {
        return read_corpus_file(path);
    } catch (const std::runtime_error& e) {
        throw CommandError(e.what());
    }
}

}  // namespace

IngestSummary run_ingest(const IngestOptions& options) {
    try {
        options.filter.validate();
    } catch (const std::invalid_argument& e) {
        throw CommandError(e.what());
    }
    IngestSummary summary;
    std::vector<Tweet> tweets;
    std::size_t fetch_duplicates = 0;
    if (is_url(options.source)) {
        FetchOptions fetch = options.fetch;
        if (fetch.bearer_token.empty()) {
            if (const char* token = std::getenv(kTokenEnvVar)) fetch.bearer_token = token;
        }
        try {
            auto result = fetch_pages(options.source, options.filter, fetch);
            summary.parse_errors = result.record_errors.size();
            fetch_duplicates = result.duplicates;
            summary.read = result.tweets.size() + result.duplicates + summary.parse_errors;
            tweets = std::move(result.tweets);
        } catch (const FetchError& e) {
            throw CommandError(e.what());
        }
    } else {
        auto read = read_corpus_or_throw(options.source);
        summary.read = read.lines_read;
        summary.parse_errors = read.errors.size();
        tweets = std::move(read.tweets);
    }

    auto report = filter_with_report(tweets, options.filter);
    for (auto& [reason, n] : report.dropped) {
        if (reason == DropReason::duplicate) n += fetch_duplicates;
    }
    summary.kept = report.kept.size();
    summary.dropped = report.dropped;

    auto out = open_output(options.out);
    write_corpus(out, report.kept);
    finish(out, options.out);
    return summary;
}

Lexicon load_lexicons(const LexiconPaths& paths) {
    try {
        Lexicon words = paths.words.empty() ? Lexicon("words") : load_lexicon_file(paths.words);
        if (paths.emoji.empty()) return words;
        return merge_lexicons(words, load_lexicon_file(paths.emoji));
    } catch (const LexiconError& e) {
        throw CommandError(std::string("lexicon: ") + e.what());
    }
}

ScoreSummary run_score(const ScoreOptions& options) {
    try {
        options.engine.validate();
    } catch (const std::invalid_argument& e) {
        throw CommandError(e.what());
    }
    if (options.lexicons.words.empty() && options.lexicons.emoji.empty()) {
        throw CommandError("score needs --lexicon and/or --emoji-lexicon");
    }
    const Lexicon lexicon = load_lexicons(options.lexicons);
    const auto corpus = read_corpus_or_throw(options.corpus);

    const auto& tweets = corpus.tweets;
    std::vector<ScoredRow> rows(tweets.size());
    const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(tweets.size() / 256 + 1)));
    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            rows[i] = {tweets[i].id, tweets[i].created_at, score_text(tweets[i].text, lexicon, options.engine)};
        }
    };
    if (jobs == 1) {
        work(0, tweets.size());
    } else {
        std::vector<std::jthread> pool;
        const std::size_t chunk = (tweets.size() + jobs - 1) / jobs;
        for (unsigned j = 0; j < jobs; ++j) {
            const std::size_t begin = j * chunk;
            const std::size_t end = std::min(tweets.size(), begin + chunk);
            if (begin < end) pool.emplace_back(work, begin, end);
        }
    }

    auto out = open_output(options.out);
    write_scored_csv(out, std::move(rows));
    finish(out, options.out);
    return {tweets.size(), corpus.errors.size()};
}

namespace {

template <typename Writer>
void write_file(const fs::path& path, std::vector<std::string>& written, Writer&& writer) {
    auto out = open_output(path);
    writer(out);
    finish(out, path);
    written.push_back(path.string());
}

bool wants(const ReportOptions& o, ReportFormat f) {
    return std::find(o.formats.begin(), o.formats.end(), f) != o.formats.end();
}

}  // namespace

std::vector<std::string> run_report(const ReportOptions& options) {
    if (options.formats.empty()) throw CommandError("no report format selected");

    std::vector<ScoredRow> rows;
    {
        std::ifstream in(options.scored, std::ios::binary);
        if (!in) throw CommandError("cannot open scored dataset '" + options.scored + "'");
        try {
            rows = read_scored_csv(in);
        } catch (const ReportFormatError& e) {
            throw CommandError(options.scored + ": " + e.what());
        }
    }
    auto corpus = read_corpus_or_throw(options.corpus);
    std::vector<Entity> entities;
    if (!options.entities.empty()) {
        try {
            entities = load_entities_file(options.entities);
        } catch (const std::runtime_error& e) {
            throw CommandError(e.what());
        }
    }
    const Lexicon lexicon = load_lexicons(options.lexicons);

    std::unordered_map<std::string, const Tweet*> by_id;
    for (const auto& t : corpus.tweets) by_id.try_emplace(t.id, &t);
    std::vector<ScoredTweet> scored;
    std::vector<Tweet> tweets;
    scored.reserve(rows.size());
    for (const auto& r : rows) {
        const auto it = by_id.find(r.id);
        if (it == by_id.end()) throw CommandError("scored id '" + r.id + "' not found in corpus");
        scored.push_back({*it->second, r.score});
        tweets.push_back(*it->second);
    }

    const BucketOptions bucket{options.utc_offset};
    std::optional<DayRange> window;
    if (options.start || options.end) {
        const auto days = daily_series(scored, std::nullopt, bucket);
        const Date first = options.start ? *options.start : (days.empty() ? *options.end : days.front().date);
        const Date last = options.end ? *options.end : (days.empty() ? *options.start : days.back().date);
        if (first > last) throw CommandError("--start is after --end");
        window = DayRange{first, last};
    }

    const auto series = daily_series(scored, window, bucket);
    const auto polarity = polarity_distribution(scored);
    const auto profiles = entity_profiles(scored, entities, window, bucket);
    const auto keywords = options.keywords.empty() ? std::vector<KeywordStat>{}
                                                   : keyword_frequency(tweets, options.keywords);
    const auto emoji = emoji_statistics(tweets, lexicon);

    const fs::path dir(options.out_dir);
    std::vector<std::string> written;
    if (wants(options, ReportFormat::csv)) {
        write_file(dir / "daily.csv", written, [&](std::ostream& o) { write_daily_csv(o, series); });
        write_file(dir / "polarity.csv", written, [&](std::ostream& o) { write_polarity_csv(o, polarity); });
        if (!options.entities.empty()) {
            write_file(dir / "entities.csv", written, [&](std::ostream& o) { write_entities_csv(o, profiles); });
            write_file(dir / "entity_daily.csv", written,
                       [&](std::ostream& o) { write_entity_daily_csv(o, profiles); });
        }
        write_file(dir / "keywords.csv", written, [&](std::ostream& o) { write_keywords_csv(o, keywords); });
        write_file(dir / "emoji_summary.csv", written, [&](std::ostream& o) { write_emoji_summary_csv(o, emoji); });
        write_file(dir / "emoji_counts.csv", written, [&](std::ostream& o) { write_emoji_counts_csv(o, emoji); });
    }
    if (wants(options, ReportFormat::json)) {
        nlohmann::json doc{{"daily", daily_to_json(series)},
                           {"polarity",
                            {{"positive", polarity.positive},
                             {"neutral", polarity.neutral},
                             {"negative", polarity.negative}}},
                           {"entities", entities_to_json(profiles)},
                           {"keywords", keywords_to_json(keywords)},
                           {"emoji", emoji_to_json(emoji)}};
        write_file(dir / "report.json", written, [&](std::ostream& o) { o << doc.dump(2) << '\n'; });
    }
    if (wants(options, ReportFormat::svg)) {
        std::vector<std::string> dates;
        std::vector<double> means, counts;
        for (const auto& d : series) {
            dates.push_back(format_date(d.date));
            means.push_back(d.mean_compound);
            counts.push_back(static_cast<double>(d.n_tweets));
        }
        write_file(dir / "daily_sentiment.svg", written, [&](std::ostream& o) {
            o << svg::line_chart({"Average sentiment per day", "mean compound", dates, 800, 400, -1.0, 1.0},
                                 {{"all tweets", means}});
        });
        write_file(dir / "daily_volume.svg", written, [&](std::ostream& o) {
            o << svg::bar_chart({"Tweets per day", "tweets", dates}, counts);
        });
        if (!options.entities.empty()) {
            std::vector<std::string> names;
            std::vector<double> sentiment, volume;
            for (const auto& p : profiles) {
                names.push_back(p.canonical_name);
                sentiment.push_back(p.mean_compound);
                volume.push_back(static_cast<double>(p.n_tweets));
            }
            write_file(dir / "entity_sentiment.svg", written, [&](std::ostream& o) {
                o << svg::bar_chart({"Sentiment by entity", "mean compound", names, 800, 400, -1.0, 1.0}, sentiment);
            });
            write_file(dir / "entity_volume.svg", written, [&](std::ostream& o) {
                o << svg::bar_chart({"Tweets by entity", "tweets", names}, volume);
            });
        }
        std::vector<std::string> kw_names;
        std::vector<double> kw_counts;
        for (const auto& k : keywords) {
            kw_names.push_back(k.keyword);
            kw_counts.push_back(static_cast<double>(k.tweet_count));
        }
        write_file(dir / "keywords.svg", written, [&](std::ostream& o) {
            o << svg::bar_chart({"Keyword frequency", "tweets", kw_names}, kw_counts);
        });
        std::vector<std::string> emoji_names;
        std::vector<double> emoji_counts;
        for (std::size_t i = 0; i < emoji.per_emoji_counts.size() && i < 20; ++i) {
            emoji_names.push_back(emoji.per_emoji_counts[i].first);
            emoji_counts.push_back(static_cast<double>(emoji.per_emoji_counts[i].second));
        }
        write_file(dir / "emoji.svg", written, [&](std::ostream& o) {
            o << svg::bar_chart({"Emoji frequency", "occurrences", emoji_names}, emoji_counts);
        });
    }
    return written;
}

std::vector<std::string> run_keywords(const KeywordsOptions& options) {
    if (options.keywords.empty()) throw CommandError("keywords needs --keywords");
    const auto corpus = read_corpus_or_throw(options.corpus);
    const fs::path dir(options.out_dir);
    std::vector<std::string> written;
    const auto stats = keyword_frequency(corpus.tweets, options.keywords);
    write_file(dir / "keywords.csv", written, [&](std::ostream& o) { write_keywords_csv(o, stats); });
    if (options.suggest) {
        std::vector<KeywordStat> suggestions;
        try {
            suggestions = suggest_keywords(corpus.tweets, options.keywords, options.suggest_options);
        } catch (const std::invalid_argument& e) {
            throw CommandError(e.what());
        }
        write_file(dir / "suggested_keywords.csv", written,
                   [&](std::ostream& o) { write_keywords_csv(o, suggestions); });
    }
    return written;
}

namespace {

std::optional<Timestamp> parse_bound(const std::string& s, bool end_of_day) {
    if (s.empty()) return std::nullopt;
    if (const auto d = parse_date(s)) {
        Timestamp t{*d};
        if (end_of_day) t += std::chrono::days{1} - std::chrono::seconds{1};
        return t;
    }
    if (const auto t = parse_timestamp(s)) return t;
    throw CommandError("cannot parse date '" + s + "'");
}

std::optional<Date> parse_day(const std::string& s) {
    if (s.empty()) return std::nullopt;
    if (const auto d = parse_date(s)) return d;
    throw CommandError("cannot parse date '" + s + "' (want YYYY-MM-DD)");
}

// `key = value` lines become `--key value` in front of the real arguments, so
// explicit flags (which come later and take precedence) win.
std::vector<std::string> config_args(const std::string& path, const CLI::App& sub) {
    std::ifstream in(path);
    if (!in) throw CommandError("cannot open config '" + path + "'");
    std::vector<std::string> args;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto trimmed = text::trim(line);
        if (trimmed.empty() || trimmed.front() == '#' || trimmed.front() == ';') continue;
        const auto eq = trimmed.find('=');
        if (eq == std::string_view::npos) {
            throw CommandError("config line " + std::to_string(line_no) + ": expected key = value");
        }
        const std::string key(text::trim(trimmed.substr(0, eq)));
        std::string value(text::trim(trimmed.substr(eq + 1)));
        if (value.size() >= 2 && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);
        const auto* opt = sub.get_option_no_throw("--" + key);
        if (opt == nullptr) continue;  // key belongs to another command
        if (opt->get_type_size() == 0) {
            if (value == "true" || value == "1" || value == "yes") args.push_back("--" + key);
        } else {
            args.push_back("--" + key);
            args.push_back(value);
        }
    }
    return args;
}

struct CommonFlags {
    std::string lexicon, emoji_lexicon, keywords, exclude, lang = "en", start, end, entities, out;
    std::string format = "csv";
    double alpha = 15.0;
    double positive_threshold = 0.0;
    double negative_threshold = 0.0;
    std::string config;
};

FilterSpec filter_from(const CommonFlags& f, bool keep_retweets) {
    FilterSpec spec;
    spec.include_keywords = split_list(f.keywords);
    spec.exclude_hashtags = split_list(f.exclude);
    if (f.lang.empty() || f.lang == "any") spec.required_lang.reset();
    else spec.required_lang = f.lang;
    spec.drop_retweets = !keep_retweets;
    const auto start = parse_bound(f.start, false);
    const auto end = parse_bound(f.end, true);
    if (start || end) {
        spec.date_window = DateWindow{start.value_or(Timestamp{Date{std::chrono::year{1970} / 1 / 1}}),
                                      end.value_or(Timestamp{Date{std::chrono::year{2099} / 12 / 31}})};
    }
    return spec;
}

std::vector<ReportFormat> formats_from(const std::string& s) {
    std::vector<ReportFormat> out;
    for (const auto& f : split_list(s)) {
        if (f == "csv") out.push_back(ReportFormat::csv);
        else if (f == "json") out.push_back(ReportFormat::json);
        else if (f == "svg") out.push_back(ReportFormat::svg);
        else throw CommandError("unknown format '" + f + "' (csv, json, svg)");
    }
    if (out.empty()) throw CommandError("--format selects nothing");
    return out;
}

void print_summary(std::ostream& out, const IngestSummary& s) {
    out << "read " << s.read << " parse_errors " << s.parse_errors << " kept " << s.kept << " dropped";
    for (const auto& [reason, n] : s.dropped) out << ' ' << to_string(reason) << '=' << n;
    out << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Lexicon-based sentiment analytics for tweet corpora", "tweetsent"};
    app.require_subcommand(1);
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

    CommonFlags f;
    bool keep_retweets = false;
    std::string source, corpus, scored;
    std::size_t page_size = 100;
    double rate = 1.0;
    int retries = 3;
    int backoff_ms = 500;
    unsigned jobs = 1;
    int utc_offset = 0;
    bool suggest = false;
    double min_share = 0.05;
    std::size_t phrase_words = 0;
    int port = 8080;
    std::string host = "127.0.0.1";

    auto add_config = [&](CLI::App* sub) { sub->add_option("--config", f.config, "Flat key = value file; flags win"); };
    auto add_lexicons = [&](CLI::App* sub) {
        sub->add_option("--lexicon", f.lexicon, "Word lexicon (key<TAB>valence)");
        sub->add_option("--emoji-lexicon", f.emoji_lexicon, "Emoji lexicon (key<TAB>valence)");
    };

    auto* ingest = app.add_subcommand("ingest", "Filter a JSONL corpus or search endpoint into a corpus file");
    ingest->add_option("source", source, "JSONL file or http(s):// search endpoint")->required();
    ingest->add_option("--out", f.out, "Output JSONL corpus")->required();
    ingest->add_option("--keywords", f.keywords, "Comma-separated include keywords");
    ingest->add_option("--exclude", f.exclude, "Comma-separated hashtags to exclude");
    ingest->add_option("--lang", f.lang, "Required language ('any' disables)");
    ingest->add_option("--start", f.start, "Window start (YYYY-MM-DD or RFC-3339)");
    ingest->add_option("--end", f.end, "Window end, inclusive");
    ingest->add_flag("--keep-retweets", keep_retweets, "Do not drop retweets");
    ingest->add_option("--page-size", page_size, "Results per request")->check(CLI::PositiveNumber);
    ingest->add_option("--rate", rate, "Request cap per second (0 = unlimited)");
    ingest->add_option("--retries", retries, "Retries for 5xx/transport errors")->check(CLI::NonNegativeNumber);
    ingest->add_option("--backoff-ms", backoff_ms, "Initial retry backoff")->check(CLI::NonNegativeNumber);
    add_config(ingest);

    auto* score = app.add_subcommand("score", "Score every tweet of a corpus into a CSV");
    score->add_option("corpus", corpus, "JSONL corpus")->required();
    score->add_option("--out", f.out, "Output CSV")->required();
    add_lexicons(score);
    score->add_option("--alpha", f.alpha, "Normalization constant");
    score->add_option("--positive-threshold", f.positive_threshold);
    score->add_option("--negative-threshold", f.negative_threshold);
    score->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
    add_config(score);

    auto* report = app.add_subcommand("report", "Aggregate a scored dataset into CSV/JSON/SVG reports");
    report->add_option("scored", scored, "Scored CSV from `score`")->required();
    report->add_option("corpus", corpus, "JSONL corpus the scores came from")->required();
    report->add_option("--out", f.out, "Output directory")->required();
    add_lexicons(report);
    report->add_option("--entities", f.entities, "Entity file (name<TAB>alias, alias)");
    report->add_option("--keywords", f.keywords, "Comma-separated keywords to count");
    report->add_option("--start", f.start, "First day (YYYY-MM-DD)");
    report->add_option("--end", f.end, "Last day (YYYY-MM-DD)");
    report->add_option("--utc-offset", utc_offset, "Minutes east of UTC for day buckets");
    report->add_option("--format", f.format, "Comma-separated subset of csv,json,svg");
    add_config(report);

    auto* keywords = app.add_subcommand("keywords", "Keyword frequencies and co-occurring keyword suggestions");
    keywords->add_option("corpus", corpus, "JSONL corpus")->required();
    keywords->add_option("--out", f.out, "Output directory")->required();
    keywords->add_option("--keywords", f.keywords, "Comma-separated (official) keywords")->required();
    keywords->add_flag("--suggest", suggest, "Also mine co-occurring hashtags/phrases");
    keywords->add_option("--min-share", min_share, "Minimum share for suggestions");
    keywords->add_option("--phrase-words", phrase_words, "Longest phrase to suggest (0 = hashtags only)");
    add_config(keywords);

    auto* stub = app.add_subcommand("serve-stub", "Serve a JSONL corpus over the paged search protocol");
    stub->add_option("corpus", corpus, "JSONL corpus")->required();
    stub->add_option("--host", host);
    stub->add_option("--port", port);

    // Splice config values in front of the explicit arguments.
    std::vector<std::string> effective = args;
    for (std::size_t i = 0; i + 1 < args.size(); ++i) {
        if (args[i] != "--config") continue;
        CLI::App* sub = args.empty() ? nullptr : app.get_subcommand_no_throw(args[0]);
        if (sub == nullptr) break;
        try {
            auto injected = config_args(args[i + 1], *sub);
            effective.insert(effective.begin() + 1, injected.begin(), injected.end());
        } catch (const CommandError& e) {
            err << "tweetsent: " << e.what() << '\n';
            return 1;
        }
        break;
    }

    std::vector<std::string> reversed(effective.rbegin(), effective.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "tweetsent: " << e.what() << '\n';
        return 2;
    }

    try {
        if (ingest->parsed()) {
            IngestOptions o;
            o.source = source;
            o.out = f.out;
            o.filter = filter_from(f, keep_retweets);
            o.fetch.page_size = page_size;
            o.fetch.requests_per_second = rate;
            o.fetch.max_retries = retries;
            o.fetch.initial_backoff = std::chrono::milliseconds(backoff_ms);
            print_summary(out, run_ingest(o));
        } else if (score->parsed()) {
            ScoreOptions o;
            o.corpus = corpus;
            o.out = f.out;
            o.lexicons = {f.lexicon, f.emoji_lexicon};
            o.engine = {f.alpha, f.positive_threshold, f.negative_threshold};
            o.jobs = jobs;
            const auto s = run_score(o);
            out << "scored " << s.scored << " parse_errors " << s.parse_errors << '\n';
        } else if (report->parsed()) {
            ReportOptions o;
            o.scored = scored;
            o.corpus = corpus;
            o.out_dir = f.out;
            o.lexicons = {f.lexicon, f.emoji_lexicon};
            o.entities = f.entities;
            o.keywords = split_list(f.keywords);
            o.start = parse_day(f.start);
            o.end = parse_day(f.end);
            o.utc_offset = std::chrono::minutes(utc_offset);
            o.formats = formats_from(f.format);
            for (const auto& path : run_report(o)) out << "wrote " << path << '\n';
        } else if (keywords->parsed()) {
            KeywordsOptions o;
            o.corpus = corpus;
            o.out_dir = f.out;
            o.keywords = split_list(f.keywords);
            o.suggest = suggest;
            o.suggest_options = {min_share, phrase_words};
            for (const auto& path : run_keywords(o)) out << "wrote " << path << '\n';
        } else if (stub->parsed()) {
            auto read = read_corpus_or_throw(corpus);
            StubSearchServer server(std::move(read.tweets));
            out << "serving " << corpus << " on http://" << host << ':' << port << "/search" << std::endl;
            server.listen_blocking(host, port);
        }
    } catch (const CommandError& e) {
        err << "tweetsent: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "tweetsent: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace tweetsent::cli
