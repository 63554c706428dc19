#pragma once

#include "tweetsent/engine.hpp"
#include "tweetsent/fetch.hpp"
#include "tweetsent/ingest.hpp"

#include <chrono>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tweetsent::cli {

/// Any failure a command reports as a one-line diagnostic and non-zero exit.
class CommandError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr const char* kTokenEnvVar = "TWEETSENT_BEARER_TOKEN";

struct IngestOptions {
    std::string source;  // JSONL path or http(s):// search endpoint
    std::string out;
    FilterSpec filter;
    FetchOptions fetch;
};

struct IngestSummary {
    std::size_t read = 0;
    std::size_t parse_errors = 0;
    std::size_t kept = 0;
    std::vector<std::pair<DropReason, std::size_t>> dropped;
};

IngestSummary run_ingest(const IngestOptions& options);

struct LexiconPaths {
    std::string words;
    std::string emoji;
};

/// Merges whichever files are given (emoji over words); none at all yields an empty lexicon.
Lexicon load_lexicons(const LexiconPaths& paths);

struct ScoreOptions {
    std::string corpus;
    std::string out;
    LexiconPaths lexicons;
    EngineConfig engine;
    unsigned jobs = 1;
};

struct ScoreSummary {
    std::size_t scored = 0;
    std::size_t parse_errors = 0;
};

ScoreSummary run_score(const ScoreOptions& options);

enum class ReportFormat { csv, json, svg };

struct ReportOptions {
    std::string scored;
    std::string corpus;
    std::string out_dir;
    LexiconPaths lexicons;
    std::string entities;                 // empty: no entity report
    std::vector<std::string> keywords;    // empty: header-only keyword report
    std::optional<Date> start;
    std::optional<Date> end;
    std::chrono::minutes utc_offset{0};
    std::vector<ReportFormat> formats = {ReportFormat::csv};
};

/// Paths of every file written, in write order.
std::vector<std::string> run_report(const ReportOptions& options);

struct KeywordsOptions {
    std::string corpus;
    std::string out_dir;
    std::vector<std::string> keywords;
    bool suggest = false;
    SuggestOptions suggest_options;
};

std::vector<std::string> run_keywords(const KeywordsOptions& options);

/// Full command line front end. `args` excludes the program name.
/// Returns the process exit code; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Comma-separated list, trimmed, empties dropped.
std::vector<std::string> split_list(const std::string& s);

}  // namespace tweetsent::cli
