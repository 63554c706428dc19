#pragma once

#include "tweetsent/ingest.hpp"

#include <atomic>
#include <chrono>
#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace tweetsent {

using QueryParams = std::vector<std::pair<std::string, std::string>>;

/// Query parameters for the paged search protocol: query, exclude, lang,
/// start_time/end_time, max_results and (when resuming) next_token.
QueryParams render_query(const FilterSpec& spec, std::size_t page_size,
                         const std::optional<std::string>& next_token = std::nullopt);

struct FetchOptions {
    std::size_t page_size = 100;
    double requests_per_second = 1.0;  // <= 0 disables the cap
    int max_retries = 3;
    std::chrono::milliseconds initial_backoff{500};
    std::chrono::milliseconds max_backoff{8000};
    std::chrono::seconds timeout{30};
    std::string bearer_token;  // sent as Authorization: Bearer when non-empty
};

class FetchError : public std::runtime_error {
public:
    FetchError(const std::string& message, std::size_t pages_fetched, int status = 0)
        : std::runtime_error(message), pages_fetched_(pages_fetched), status_(status) {}
    std::size_t pages_fetched() const noexcept { return pages_fetched_; }
    /// HTTP status of the failing response; 0 for transport errors.
    int status() const noexcept { return status_; }

private:
    std::size_t pages_fetched_;
    int status_;
};

struct FetchResult {
    std::vector<Tweet> tweets;  // cursor order, duplicate ids removed
    std::size_t pages = 0;
    std::size_t requests = 0;   // including retries
    std::size_t duplicates = 0;
    std::vector<std::string> record_errors;
};

/// Walks the `next_token` cursor until the server stops returning one.
/// 4xx aborts at once; 5xx and transport failures are retried with
/// exponential backoff until max_retries is spent.
FetchResult fetch_pages(const std::string& endpoint, const FilterSpec& query,
                        const FetchOptions& options = {});

struct StubOptions {
    int fail_first = 0;       // answer this many requests with fail_status before serving
    int fail_status = 500;
    int fail_after_pages = -1;  // once this many pages were served, fail every request
    bool repeat_last_of_previous_page = false;  // plant a duplicate id at each page start
};

/// In-process stand-in for the search endpoint, serving a fixed corpus at
/// GET /search. It does not evaluate the query; it pages the whole corpus.
class StubSearchServer {
public:
    explicit StubSearchServer(std::vector<Tweet> corpus, StubOptions options = {});
    ~StubSearchServer();
    StubSearchServer(const StubSearchServer&) = delete;
    StubSearchServer& operator=(const StubSearchServer&) = delete;

    /// Binds to 127.0.0.1 on `port` (0 picks a free one) and serves on a background thread.
    void start(int port = 0);
    /// Serves on the calling thread until stop() is called from elsewhere.
    void listen_blocking(const std::string& host, int port);
    void stop();

    int port() const noexcept { return port_; }
    std::string url() const;
    std::size_t request_count() const noexcept { return requests_.load(); }
    std::vector<QueryParams> received_queries() const;

private:
    struct Impl;
    void install_routes();

    std::vector<Tweet> corpus_;
    StubOptions options_;
    std::unique_ptr<Impl> impl_;
    std::thread thread_;
    int port_ = 0;
    std::atomic<std::size_t> requests_{0};
    std::atomic<int> pages_served_{0};
    mutable std::mutex mutex_;
    std::vector<QueryParams> queries_;
};

}  // namespace tweetsent
