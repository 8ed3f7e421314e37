#pragma once

// Shared synthetic fixtures: trading calendars, simulated price paths, news
// corpora with planted vocabulary-label correlation, and temp-dir plumbing.

#include <filesystem>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include "privysense/csv.hpp"
#include "privysense/dates.hpp"
#include "privysense/ingest.hpp"
#include "privysense/rng.hpp"
#include "privysense/volatility.hpp"

namespace fixtures {

namespace fs = std::filesystem;
namespace ps = privysense;

class TempDir {
public:
    explicit TempDir(const std::string& tag) {
        path_ = fs::temp_directory_path() /
                ("privysense_" + tag + "_" + std::to_string(::getpid()) + "_" +
                 std::to_string(counter()++));
        fs::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path_, ec);
    }
    const fs::path& path() const { return path_; }
    std::string file(const std::string& name) const { return (path_ / name).string(); }

private:
    static int& counter() {
        static int c = 0;
        return c;
    }
    fs::path path_;
};

inline ps::Date next_trading_day(ps::Date d) {
    do {
        d = ps::next_day(d);
    } while (ps::is_weekend(d));
    return d;
}

inline std::vector<ps::Date> trading_calendar(ps::Date start, size_t n) {
    std::vector<ps::Date> days;
    ps::Date d = ps::is_weekend(start) ? next_trading_day(start) : start;
    while (days.size() < n) {
        days.push_back(d);
        d = next_trading_day(d);
    }
    return days;
}

// closes implied by a return path: c_t = c_{t-1} * exp(r_t)
inline std::vector<double> closes_from_returns(double c0, const std::vector<double>& returns) {
    std::vector<double> closes;
    closes.reserve(returns.size() + 1);
    closes.push_back(c0);
    for (double r : returns) closes.push_back(closes.back() * std::exp(r));
    return closes;
}

struct TickerSeries {
    std::string ticker;
    std::vector<ps::Date> dates;
    std::vector<double> closes;  // parallel to dates
};

inline TickerSeries simulated_ticker(const std::string& ticker, size_t n_days, uint64_t seed,
                                     ps::Date start = 20150105, double scale = 0.02) {
    ps::vol::GarchModel truth;
    truth.omega = 0.05;
    truth.alpha = 0.10;
    truth.beta = 0.80;
    std::vector<double> r = ps::vol::simulate_garch11(truth, n_days - 1, seed);
    for (double& v : r) v *= scale;  // tame the unit variance into return-like sizes
    TickerSeries s;
    s.ticker = ticker;
    s.dates = trading_calendar(start, n_days);
    s.closes = closes_from_returns(100.0, r);
    return s;
}

inline std::string prices_csv(const std::vector<TickerSeries>& series) {
    std::string out = "gvkey,iid,datadate,tic,conm,prccd,prchd,prcld,prcod\n";
    for (const auto& s : series) {
        for (size_t i = 0; i < s.dates.size(); ++i) {
            const double c = s.closes[i];
            out += "1,1," + std::to_string(s.dates[i]) + "," + s.ticker + "," + s.ticker +
                   " INC," + ps::fmt_double(c) + "," + ps::fmt_double(c * 1.01) + "," +
                   ps::fmt_double(c * 0.99) + "," + ps::fmt_double(c) + "\n";
        }
    }
    return out;
}

struct NewsRow {
    std::string ticker;
    ps::Date date;
    std::string headline;
    std::string body;
    std::string rank = "normal";
};

inline std::string news_csv(const std::vector<NewsRow>& rows) {
    std::vector<privysense::csv::Row> table;
    table.push_back({"ticker", "exchange", "timestamp", "story_headline", "story_full",
                     "story_rank"});
    for (const auto& r : rows)
        table.push_back({r.ticker, "NASDAQ", std::to_string(r.date), r.headline, r.body,
                         r.rank});
    return privysense::csv::serialize(table);
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
}

// word pools for planted-signal corpora; none of these are stopwords and all
// survive the tokenizer
inline const std::vector<std::string>& positive_pool() {
    static const std::vector<std::string> v = {
        "surge",  "record", "upbeat",   "strong",  "growth",  "beat",
        "profit", "rally",  "optimism", "upgrade", "boom",    "win",
        "expand", "soar",   "robust",   "bullish", "improve", "gain"};
    return v;
}

inline const std::vector<std::string>& negative_pool() {
    static const std::vector<std::string> v = {
        "slump",   "lawsuit", "downbeat", "weak",    "losses",  "miss",
        "deficit", "selloff", "fear",     "downgrade", "bust",  "fail",
        "shrink",  "plunge",  "fragile",  "bearish", "worsen",  "drop"};
    return v;
}

inline const std::vector<std::string>& noise_pool() {
    static const std::vector<std::string> v = {
        "company", "market", "share",  "quarter", "report",  "analyst",
        "price",   "stock",  "board",  "revenue", "product", "sector",
        "deal",    "index",  "update", "chief"};
    return v;
}

// Text whose vocabulary encodes the sign: positive-pool words for label 1,
// negative-pool words for label 0, plus shared noise.
inline std::string planted_text(bool positive, ps::Rng& rng) {
    const auto& pool = positive ? positive_pool() : negative_pool();
    std::string text;
    const size_t n_signal = 5 + rng.below(4);
    for (size_t i = 0; i < n_signal; ++i) {
        text += pool[rng.below(pool.size())];
        text.push_back(' ');
    }
    const size_t n_noise = 3 + rng.below(4);
    for (size_t i = 0; i < n_noise; ++i) {
        text += noise_pool()[rng.below(noise_pool().size())];
        text.push_back(' ');
    }
    return text;
}

}  // namespace fixtures
