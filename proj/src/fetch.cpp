#include "tweetsent/fetch.hpp"

#include <httplib.h>

#include <algorithm>
#include <unordered_set>

namespace tweetsent {

using nlohmann::json;

QueryParams render_query(const FilterSpec& spec, std::size_t page_size,
                         const std::optional<std::string>& next_token) {
    QueryParams params;
    std::string query;
    for (const auto& k : spec.include_keywords) {
        if (!query.empty()) query += ' ';
        query += k;
    }
    params.emplace_back("query", query);
    if (!spec.exclude_hashtags.empty()) {
        std::string exclude;
        for (const auto& h : spec.exclude_hashtags) {
            if (!exclude.empty()) exclude += ',';
            exclude += normalize_keyword(h);
        }
        params.emplace_back("exclude", exclude);
    }
    if (spec.required_lang) params.emplace_back("lang", *spec.required_lang);
    if (spec.date_window) {
        params.emplace_back("start_time", format_timestamp(spec.date_window->start));
        params.emplace_back("end_time", format_timestamp(spec.date_window->end));
    }
    params.emplace_back("max_results", std::to_string(page_size));
    if (next_token) params.emplace_back("next_token", *next_token);
    return params;
}

namespace {

struct Endpoint {
    std::string origin;  // scheme://host[:port]
    std::string path;
};

Endpoint split_endpoint(const std::string& url) {
    const auto scheme_end = url.find("://");
    if (scheme_end == std::string::npos) throw FetchError("endpoint '" + url + "' has no scheme", 0);
    const auto path_start = url.find('/', scheme_end + 3);
    if (path_start == std::string::npos) return {url, "/"};
    return {url.substr(0, path_start), url.substr(path_start)};
}

class RateLimiter {
public:
    explicit RateLimiter(double per_second) {
        if (per_second > 0) {
            interval_ = std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                std::chrono::duration<double>(1.0 / per_second));
        }
    }

    void wait() {
        const auto now = std::chrono::steady_clock::now();
        if (next_ > now) std::this_thread::sleep_for(next_ - now);
        next_ = std::max(now, next_) + interval_;
    }

private:
    std::chrono::steady_clock::duration interval_{};
    std::chrono::steady_clock::time_point next_{};
};

}  // namespace

FetchResult fetch_pages(const std::string& endpoint, const FilterSpec& query,
                        const FetchOptions& options) {
    if (options.page_size == 0) throw std::invalid_argument("page_size must be positive");
    const auto [origin, path] = split_endpoint(endpoint);

    httplib::Client client(origin);
    client.set_connection_timeout(options.timeout);
    client.set_read_timeout(options.timeout);
    httplib::Headers headers;
    if (!options.bearer_token.empty()) {
        headers.emplace("Authorization", "Bearer " + options.bearer_token);
    }

    RateLimiter limiter(options.requests_per_second);
    FetchResult result;
    std::unordered_set<std::string> seen;
    std::optional<std::string> cursor;

    for (;;) {
        httplib::Params params;
        for (auto& [k, v] : render_query(query, options.page_size, cursor)) params.emplace(k, v);

        json body;
        int attempt = 0;
        auto backoff = options.initial_backoff;
        for (;;) {
            limiter.wait();
            ++result.requests;
            const auto res = client.Get(path, params, headers);
            std::string failure;
            int status = 0;
            if (!res) {
                failure = "request failed: " + httplib::to_string(res.error());
            } else if (res->status >= 400 && res->status < 500) {
                throw FetchError("HTTP " + std::to_string(res->status) + " from " + endpoint,
                                 result.pages, res->status);
            } else if (res->status >= 500) {
                status = res->status;
                failure = "HTTP " + std::to_string(res->status) + " from " + endpoint;
            } else {
                try {
                    body = json::parse(res->body);
                    break;
                } catch (const json::parse_error& e) {
                    throw FetchError(std::string("malformed page: ") + e.what(), result.pages);
                }
            }
            if (attempt++ >= options.max_retries) {
                throw FetchError(failure + " after " + std::to_string(attempt) + " attempts; " +
                                     std::to_string(result.pages) + " pages fetched",
                                 result.pages, status);
            }
            std::this_thread::sleep_for(backoff);
            backoff = std::min(backoff * 2, options.max_backoff);
        }

        ++result.pages;
        if (const auto data = body.find("data"); data != body.end() && data->is_array()) {
            for (const auto& record : *data) {
                try {
                    auto tweet = tweet_from_json(record);
                    if (seen.insert(tweet.id).second) {
                        result.tweets.push_back(std::move(tweet));
                    } else {
                        ++result.duplicates;
                    }
                } catch (const TweetParseError& e) {
                    result.record_errors.emplace_back(e.what());
                }
            }
        }
        cursor.reset();
        if (const auto meta = body.find("meta"); meta != body.end() && meta->is_object()) {
            if (const auto next = meta->find("next_token"); next != meta->end() && next->is_string() &&
                                                             !next->get_ref<const std::string&>().empty()) {
                cursor = next->get<std::string>();
            }
        }
        if (!cursor) break;
    }
    return result;
}

struct StubSearchServer::Impl {
    httplib::Server server;
};

StubSearchServer::StubSearchServer(std::vector<Tweet> corpus, StubOptions options)
    : corpus_(std::move(corpus)), options_(options), impl_(std::make_unique<Impl>()) {
    install_routes();
}

StubSearchServer::~StubSearchServer() { stop(); }

void StubSearchServer::install_routes() {
    impl_->server.Get("/search", [this](const httplib::Request& req, httplib::Response& res) {
        const auto n = ++requests_;
        {
            std::lock_guard lock(mutex_);
            QueryParams q(req.params.begin(), req.params.end());
            queries_.push_back(std::move(q));
        }
        if (static_cast<int>(n) <= options_.fail_first ||
            (options_.fail_after_pages >= 0 && pages_served_.load() >= options_.fail_after_pages)) {
            res.status = options_.fail_status;
            res.set_content(R"({"error":"injected failure"})", "application/json");
            return;
        }
        std::size_t page_size = 10;
        std::size_t offset = 0;
        try {
            if (req.has_param("max_results")) page_size = std::stoul(req.get_param_value("max_results"));
            if (req.has_param("next_token")) offset = std::stoul(req.get_param_value("next_token"));
        } catch (const std::exception&) {
            res.status = 400;
            res.set_content(R"({"error":"bad paging parameters"})", "application/json");
            return;
        }
        if (page_size == 0 || offset > corpus_.size()) {
            res.status = 400;
            res.set_content(R"({"error":"bad paging parameters"})", "application/json");
            return;
        }
        const std::size_t end = std::min(corpus_.size(), offset + page_size);
        json data = json::array();
        if (options_.repeat_last_of_previous_page && offset > 0) {
            data.push_back(tweet_to_json(corpus_[offset - 1]));
        }
        for (std::size_t i = offset; i < end; ++i) data.push_back(tweet_to_json(corpus_[i]));
        json meta = json::object();
        meta["result_count"] = data.size();
        if (end < corpus_.size()) meta["next_token"] = std::to_string(end);
        ++pages_served_;
        res.set_content(json{{"data", data}, {"meta", meta}}.dump(), "application/json");
    });
}

void StubSearchServer::start(int port) {
    if (port == 0) {
        port_ = impl_->server.bind_to_any_port("127.0.0.1");
    } else if (impl_->server.bind_to_port("127.0.0.1", port)) {
        port_ = port;
    } else {
        port_ = -1;
    }
    if (port_ <= 0) throw std::runtime_error("stub server could not bind");
    thread_ = std::thread([this] { impl_->server.listen_after_bind(); });
    impl_->server.wait_until_ready();
}

void StubSearchServer::listen_blocking(const std::string& host, int port) {
    port_ = port;
    if (!impl_->server.listen(host, port)) throw std::runtime_error("stub server could not listen");
}

void StubSearchServer::stop() {
    impl_->server.stop();
    if (thread_.joinable()) thread_.join();
}

std::string StubSearchServer::url() const {
    return "http://127.0.0.1:" + std::to_string(port_) + "/search";
}

std::vector<QueryParams> StubSearchServer::received_queries() const {
    std::lock_guard lock(mutex_);
    return queries_;
}

}  // namespace tweetsent
