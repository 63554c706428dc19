#pragma once

#include "tweetsent/ingest.hpp"

#include <string>

namespace fixtures {

inline tweetsent::Tweet tweet(std::string id, std::string text, std::string when = "2022-08-01T12:00:00Z",
                              bool retweet = false, std::string lang = "en") {
    tweetsent::Tweet t;
    t.id = std::move(id);
    t.text = std::move(text);
    t.created_at = *tweetsent::parse_timestamp(when);
    t.lang = std::move(lang);
    t.is_retweet = retweet;
    t.hashtags = tweetsent::scan_hashtags(t.text);
    t.author_id = "u1";
    return t;
}

inline const char* kGiveaway =
    "Amazing giveaway i really excited @Ajay8307 @Tarun54552170 #NFTGiveaways #NFTs #Qatar2022";

}  // namespace fixtures
