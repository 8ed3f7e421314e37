#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <unordered_set>
#include <vector>

#include "privysense/csv.hpp"
#include "privysense/dates.hpp"
#include "privysense/errors.hpp"
#include "privysense/strutil.hpp"

namespace privysense::ingest {

enum class StoryRank { Normal, TopStory };

struct NewsDoc {
    std::string ticker;
    std::string exchange;
    Date date = 0;
    std::string headline;
    std::string body;  // may be empty, never absent
    StoryRank rank = StoryRank::Normal;
};

struct PriceBar {
    std::string ticker;
    Date date = 0;
    double close = 0.0;  // prccd, > 0
    double high = 0.0;   // 0 when the column is absent/blank
    double low = 0.0;
    double open = 0.0;
};

struct DatedClose {
    Date date = 0;
    double close = 0.0;
};

// One news document joined to the trading-day closes around its release.
// closes[anchor_index] is the release-day close (the news date itself when it
// is a trading day, otherwise the nearest prior trading day).
struct JoinedRecord {
    NewsDoc doc;
    std::vector<DatedClose> closes;
    size_t anchor_index = 0;

    Date anchor_date() const { return closes[anchor_index].date; }
};

struct NewsParseResult {
    std::vector<NewsDoc> docs;
    size_t skipped_rows = 0;  // unparseable timestamps
};

struct PriceParseResult {
    std::map<std::string, std::vector<PriceBar>> by_ticker;  // sorted by date
    size_t rejected_rows = 0;  // non-positive / non-numeric close
};

struct JoinResult {
    std::vector<JoinedRecord> records;
    size_t dropped_docs = 0;  // no coverage for the requested window
};

inline StoryRank parse_rank(std::string_view s) {
    return s == "topStory" ? StoryRank::TopStory : StoryRank::Normal;
}

inline const char* rank_name(StoryRank r) {
    return r == StoryRank::TopStory ? "topStory" : "normal";
}

inline NewsParseResult parse_news_rows(const std::vector<csv::Row>& rows) {
    if (rows.empty()) throw schema_error("news csv: missing header row");
    static const std::vector<std::string> kCols = {
        "ticker", "exchange", "timestamp", "story_headline", "story_full", "story_rank"};
    const auto idx = csv::header_indices(rows[0], kCols);
    NewsParseResult out;
    for (size_t r = 1; r < rows.size(); ++r) {
        const csv::Row& row = rows[r];
        auto cell = [&](size_t k) -> std::string_view {
            return idx[k] < row.size() ? std::string_view(row[idx[k]]) : std::string_view();
        };
        auto ts = parse_int(cell(2));
        if (!ts || !is_valid_date(static_cast<Date>(*ts)) || cell(0).empty()) {
            ++out.skipped_rows;
            continue;
        }
        NewsDoc doc;
        doc.ticker = std::string(cell(0));
        doc.exchange = std::string(cell(1));
        doc.date = static_cast<Date>(*ts);
        doc.headline = std::string(cell(3));
        doc.body = std::string(cell(4));
        doc.rank = parse_rank(cell(5));
        out.docs.push_back(std::move(doc));
    }
    return out;
}

inline NewsParseResult parse_news_csv(const std::string& path) {
    return parse_news_rows(csv::parse_file(path));
}

inline PriceParseResult parse_prices_rows(const std::vector<csv::Row>& rows) {
    if (rows.empty()) throw schema_error("prices csv: missing header row");
    static const std::vector<std::string> kCols = {"tic", "datadate", "prccd"};
    const auto idx = csv::header_indices(rows[0], kCols);
    const size_t hi = csv::optional_column(rows[0], "prchd");
    const size_t lo = csv::optional_column(rows[0], "prcld");
    const size_t op = csv::optional_column(rows[0], "prcod");
    PriceParseResult out;
    auto opt_num = [&](const csv::Row& row, size_t col) -> double {
        if (col == static_cast<size_t>(-1) || col >= row.size()) return 0.0;
        auto v = parse_double(row[col]);
        return v ? *v : 0.0;
    };
    for (size_t r = 1; r < rows.size(); ++r) {
        const csv::Row& row = rows[r];
        auto cell = [&](size_t k) -> std::string_view {
            return idx[k] < row.size() ? std::string_view(row[idx[k]]) : std::string_view();
        };
        auto date = parse_int(cell(1));
        auto close = parse_double(cell(2));
        if (cell(0).empty() || !date || !is_valid_date(static_cast<Date>(*date)) ||
            !close || *close <= 0.0) {
            ++out.rejected_rows;
            continue;
        }
        PriceBar bar;
        bar.ticker = std::string(cell(0));
        bar.date = static_cast<Date>(*date);
        bar.close = *close;
        bar.high = opt_num(row, hi);
        bar.low = opt_num(row, lo);
        bar.open = opt_num(row, op);
        out.by_ticker[bar.ticker].push_back(std::move(bar));
    }
    // sort by date, keep the first occurrence of duplicate (tic, datadate)
    for (auto& [tic, bars] : out.by_ticker) {
        std::stable_sort(bars.begin(), bars.end(),
                         [](const PriceBar& a, const PriceBar& b) { return a.date < b.date; });
        std::vector<PriceBar> uniq;
        uniq.reserve(bars.size());
        for (PriceBar& b : bars) {
            if (!uniq.empty() && uniq.back().date == b.date) continue;
            uniq.push_back(std::move(b));
        }
        bars = std::move(uniq);
    }
    return out;
}

inline PriceParseResult parse_prices_csv(const std::string& path) {
    return parse_prices_rows(csv::parse_file(path));
}

// Collapses documents with identical (ticker, timestamp, headline); earliest
// file order survives and the output order is stable.
inline std::vector<NewsDoc> dedupe_news(const std::vector<NewsDoc>& docs) {
    std::vector<NewsDoc> out;
    out.reserve(docs.size());
    std::unordered_set<std::string> seen;
    for (const NewsDoc& d : docs) {
        std::string key = d.ticker;
        key.push_back('\x1f');
        key += std::to_string(d.date);
        key.push_back('\x1f');
        key += d.headline;
        if (seen.insert(std::move(key)).second) out.push_back(d);
    }
    return out;
}

// Pairs each document with the closes spanning `lookback` trading days before
// to `horizon` trading days after its anchored release day. Documents whose
// ticker lacks the full window are dropped and counted.
inline JoinResult join_news_prices(const std::vector<NewsDoc>& docs,
                                   const std::map<std::string, std::vector<PriceBar>>& prices,
                                   int lookback = 10, int horizon = 6) {
    check_contract(lookback >= 1 && horizon >= 1, "join: lookback and horizon must be >= 1");
    JoinResult out;
    for (const NewsDoc& d : docs) {
        auto it = prices.find(d.ticker);
        if (it == prices.end()) {
            ++out.dropped_docs;
            continue;
        }
        const std::vector<PriceBar>& bars = it->second;
        // anchor = last bar with date <= news date
        auto pos = std::upper_bound(bars.begin(), bars.end(), d.date,
                                    [](Date v, const PriceBar& b) { return v < b.date; });
        if (pos == bars.begin()) {
            ++out.dropped_docs;
            continue;
        }
        const size_t anchor = static_cast<size_t>(pos - bars.begin()) - 1;
        if (anchor < static_cast<size_t>(lookback) ||
            anchor + static_cast<size_t>(horizon) >= bars.size()) {
            ++out.dropped_docs;
            continue;
        }
        JoinedRecord rec;
        rec.doc = d;
        rec.closes.reserve(static_cast<size_t>(lookback + horizon + 1));
        for (size_t i = anchor - lookback; i <= anchor + horizon; ++i)
            rec.closes.push_back({bars[i].date, bars[i].close});
        rec.anchor_index = static_cast<size_t>(lookback);
        out.records.push_back(std::move(rec));
    }
    return out;
}

}  // namespace privysense::ingest
