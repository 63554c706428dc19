#pragma once

#include "tweetsent/lexicon.hpp"

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tweetsent {

struct Feature {
    std::string key;
    std::size_t count = 1;
    EntryKind kind = EntryKind::word;

    friend bool operator==(const Feature&, const Feature&) = default;
};

/// Distinct features of one post in first-seen order, with occurrence counts.
class FeatureBag {
public:
    void add(std::string key, EntryKind kind, std::size_t count = 1);

    const std::vector<Feature>& features() const noexcept { return features_; }
    std::size_t total_features() const noexcept { return total_; }
    std::size_t emoji_count() const noexcept { return emoji_; }
    bool empty() const noexcept { return features_.empty(); }

    /// 0 when absent.
    std::size_t count_of(std::string_view key) const;

    /// Multiset union.
    friend FeatureBag operator+(FeatureBag a, const FeatureBag& b);

    friend bool operator==(const FeatureBag&, const FeatureBag&) = default;

private:
    std::vector<Feature> features_;
    std::size_t total_ = 0;
    std::size_t emoji_ = 0;
};

enum class Polarity { negative, neutral, positive };

std::string_view to_string(Polarity p);
/// Inverse of to_string; throws std::invalid_argument.
Polarity parse_polarity(std::string_view s);

struct EngineConfig {
    double alpha = 15.0;
    double positive_threshold = 0.0;
    double negative_threshold = 0.0;

    /// Throws std::invalid_argument unless alpha > 0 and negative <= positive.
    void validate() const;
};

struct SentimentScore {
    double raw = 0.0;
    double compound = 0.0;
    Polarity polarity = Polarity::neutral;
    std::size_t emoji_count = 0;

    friend bool operator==(const SentimentScore&, const SentimentScore&) = default;
};

/// Splits on whitespace, case-folds and strips edge punctuation from words,
/// and pulls emoji out by longest match against the lexicon's emoji keys.
/// Pictographs that no key covers are still extracted (they score 0).
FeatureBag tokenize(std::string_view text, const Lexicon& lexicon);

/// Weighted valence sum; features missing from the lexicon contribute 0.
double raw_score(const FeatureBag& bag, const Lexicon& lexicon);

/// raw / sqrt(raw^2 + alpha), evaluated without overflow for large |raw|.
double normalize(double raw, const EngineConfig& config = {});

Polarity classify(double compound, const EngineConfig& config = {});

/// Optional adjustment applied to the raw score before normalization.
/// None are installed by default, so scores follow the plain weighted sum.
using RawScoreRule = std::function<double(const FeatureBag&, const Lexicon&, double raw)>;

SentimentScore score_text(std::string_view text, const Lexicon& lexicon,
                          const EngineConfig& config = {},
                          std::span<const RawScoreRule> rules = {});

}  // namespace tweetsent
