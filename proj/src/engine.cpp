#include "tweetsent/engine.hpp"

#include "tweetsent/text.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tweetsent {

void FeatureBag::add(std::string key, EntryKind kind, std::size_t count) {
    if (count == 0 || key.empty()) return;
    total_ += count;
    if (kind == EntryKind::emoji) emoji_ += count;
    for (auto& f : features_) {
        if (f.key == key && f.kind == kind) {
            f.count += count;
            return;
        }
    }
    features_.push_back({std::move(key), count, kind});
}

std::size_t FeatureBag::count_of(std::string_view key) const {
    std::size_t n = 0;
    for (const auto& f : features_) {
        if (f.key == key) n += f.count;
    }
    return n;
}

FeatureBag operator+(FeatureBag a, const FeatureBag& b) {
    for (const auto& f : b.features_) a.add(f.key, f.kind, f.count);
    return a;
}

std::string_view to_string(Polarity p) {
    switch (p) {
        case Polarity::positive: return "positive";
        case Polarity::negative: return "negative";
        case Polarity::neutral: break;
    }
    return "neutral";
}

Polarity parse_polarity(std::string_view s) {
    if (s == "positive") return Polarity::positive;
    if (s == "negative") return Polarity::negative;
    if (s == "neutral") return Polarity::neutral;
    throw std::invalid_argument("unknown polarity '" + std::string(s) + "'");
}

void EngineConfig::validate() const {
    if (!(alpha > 0.0) || !std::isfinite(alpha)) {
        throw std::invalid_argument("alpha must be a positive finite number");
    }
    if (!std::isfinite(positive_threshold) || !std::isfinite(negative_threshold) ||
        negative_threshold > positive_threshold) {
        throw std::invalid_argument("negative_threshold must not exceed positive_threshold");
    }
}

namespace {

bool is_ascii_punct(char c) {
    const auto u = static_cast<unsigned char>(c);
    return u < 0x80 && u > 0x20 && u != 0x7F && !text::is_word_char(c);
}

bool has_alnum(std::string_view s) {
    return std::any_of(s.begin(), s.end(), [](char c) { return text::is_word_char(c) && c != '_'; });
}

// Edge punctuation goes, except a leading '@' (mentions stay mentions). A
// leading '#' is dropped with the rest. Bare emoticons found in the lexicon
// are kept verbatim.
void add_word(FeatureBag& bag, std::string_view piece, const Lexicon& lexicon) {
    if (piece.empty()) return;
    if (!has_alnum(piece) && lexicon.word_entries().contains(text::fold_case(piece))) {
        bag.add(text::fold_case(piece), EntryKind::word);
        return;
    }
    while (!piece.empty() && is_ascii_punct(piece.back())) piece.remove_suffix(1);
    while (!piece.empty() && is_ascii_punct(piece.front()) && piece.front() != '@') {
        piece.remove_prefix(1);
    }
    if (piece.empty() || piece == "@") return;
    bag.add(text::fold_case(piece), EntryKind::word);
}

void tokenize_chunk(FeatureBag& bag, std::string_view chunk, const Lexicon& lexicon) {
    const auto decoded = text::decode_utf8(chunk);
    if (!decoded) {
        add_word(bag, chunk, lexicon);
        return;
    }
    const auto& cps = *decoded;
    const auto& emoji = lexicon.emoji_entries();
    const std::size_t n = cps.size();
    auto byte_end = [&](std::size_t idx) { return idx < n ? cps[idx].offset : chunk.size(); };

    std::size_t word_start = 0;
    std::size_t i = 0;
    while (i < n) {
        const bool near_non_ascii = cps[i].value >= 0x80 || (i + 1 < n && cps[i + 1].value >= 0x80);
        std::size_t match_end = 0;
        if (near_non_ascii && !emoji.empty()) {
            // longest match over codepoint boundaries, bounded by the longest key
            for (std::size_t j = i + 1; j <= n; ++j) {
                const std::size_t len = byte_end(j) - cps[i].offset;
                if (len > lexicon.max_emoji_bytes()) break;
                if (emoji.contains(chunk.substr(cps[i].offset, len))) match_end = j;
            }
        }
        if (match_end == 0 && text::is_pictographic(cps[i].value) &&
            !text::is_emoji_modifier(cps[i].value)) {
            std::size_t j = i + 1;
            while (j < n) {
                if (text::is_emoji_modifier(cps[j].value)) {
                    ++j;
                } else if (cps[j - 1].value == 0x200D && text::is_pictographic(cps[j].value)) {
                    ++j;
                } else {
                    break;
                }
            }
            match_end = j;
        }
        if (match_end > 0) {
            add_word(bag, chunk.substr(byte_end(word_start), cps[i].offset - byte_end(word_start)),
                     lexicon);
            const std::size_t start = cps[i].offset;
            bag.add(std::string(chunk.substr(start, byte_end(match_end) - start)), EntryKind::emoji);
            i = match_end;
            word_start = i;
            continue;
        }
        if (cps[i].value >= 0x80 && text::is_emoji_modifier(cps[i].value)) {
            // stray selector or skin tone left over after a match
            add_word(bag, chunk.substr(byte_end(word_start), cps[i].offset - byte_end(word_start)),
                     lexicon);
            word_start = i + 1;
        }
        ++i;
    }
    if (word_start < n) add_word(bag, chunk.substr(byte_end(word_start)), lexicon);
}

}  // namespace

FeatureBag tokenize(std::string_view input, const Lexicon& lexicon) {
    FeatureBag bag;
    for (const auto chunk : text::split_whitespace(input)) tokenize_chunk(bag, chunk, lexicon);
    return bag;
}

double raw_score(const FeatureBag& bag, const Lexicon& lexicon) {
    double sum = 0.0;
    for (const auto& f : bag.features()) {
        if (const auto valence = lexicon.lookup(f.key)) sum += *valence * static_cast<double>(f.count);
    }
    return sum;
}

double normalize(double raw, const EngineConfig& config) {
    if (raw == 0.0) return 0.0;
    if (std::isinf(raw)) return raw > 0 ? 1.0 : -1.0;
    if (std::abs(raw) < 1e150) return raw / std::sqrt(raw * raw + config.alpha);
    return raw / std::hypot(raw, std::sqrt(config.alpha));
}

Polarity classify(double compound, const EngineConfig& config) {
    if (compound > config.positive_threshold) return Polarity::positive;
    if (compound < config.negative_threshold) return Polarity::negative;
    return Polarity::neutral;
}

SentimentScore score_text(std::string_view input, const Lexicon& lexicon, const EngineConfig& config,
                          std::span<const RawScoreRule> rules) {
    const FeatureBag bag = tokenize(input, lexicon);
    double raw = raw_score(bag, lexicon);
    for (const auto& rule : rules) raw = rule(bag, lexicon, raw);
    const double compound = normalize(raw, config);
    return {raw, compound, classify(compound, config), bag.emoji_count()};
}

}  // namespace tweetsent
