#include <catch2/catch_amalgamated.hpp>

#include "privysense/csv.hpp"
#include "privysense/ingest.hpp"
#include "privysense/rng.hpp"
#include "support/fixtures.hpp"

using namespace privysense;
using ingest::NewsDoc;
using ingest::PriceBar;

namespace privysense::ingest {
inline bool operator==(const NewsDoc& x, const NewsDoc& y) {
    return x.ticker == y.ticker && x.date == y.date && x.headline == y.headline &&
           x.body == y.body && x.rank == y.rank && x.exchange == y.exchange;
}
}  // namespace privysense::ingest

namespace {

std::vector<csv::Row> random_rows(Rng& rng) {
    const char* alphabet = "ab,\"\nx $%7-";
    std::vector<csv::Row> rows;
    const size_t n_cols = 2 + rng.below(4);
    const size_t n_rows = 1 + rng.below(8);
    for (size_t r = 0; r < n_rows; ++r) {
        csv::Row row;
        for (size_t c = 0; c < n_cols; ++c) {
            std::string field;
            const size_t len = rng.below(8);
            for (size_t i = 0; i < len; ++i) field.push_back(alphabet[rng.below(11)]);
            row.push_back(field);
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace

TEST_CASE("csv parse/serialize round-trips arbitrary fields") {
    Rng rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        const auto rows = random_rows(rng);
        const auto back = csv::parse_text(csv::serialize(rows));
        REQUIRE(back == rows);
    }
}

TEST_CASE("csv handles quoted commas, quotes and newlines") {
    const auto rows = csv::parse_text("a,\"b,c\",\"say \"\"hi\"\"\",\"two\nlines\"\n");
    REQUIRE(rows.size() == 1);
    REQUIRE(rows[0] == csv::Row{"a", "b,c", "say \"hi\"", "two\nlines"});
    REQUIRE_THROWS_AS(csv::parse_text("a,\"unterminated\n"), schema_error);
}

TEST_CASE("parse_news_csv reads the six-column schema") {
    const std::string content =
        "ticker,exchange,timestamp,story_headline,story_full,story_rank\n"
        "MSFT,NASDAQ,20171017,Microsoft responded quietly,Oct 17 Microsoft Corp's secret "
        "internal database,normal\n"
        "MSFT,NASDAQ,20171016,Board nominations,Two nominations announced,topStory\n";
    const auto parsed = ingest::parse_news_rows(csv::parse_text(content));
    REQUIRE(parsed.docs.size() == 2);
    REQUIRE(parsed.skipped_rows == 0);
    REQUIRE(parsed.docs[0].ticker == "MSFT");
    REQUIRE(parsed.docs[0].exchange == "NASDAQ");
    REQUIRE(parsed.docs[0].date == 20171017);
    REQUIRE(parsed.docs[0].rank == ingest::StoryRank::Normal);
    REQUIRE(parsed.docs[1].rank == ingest::StoryRank::TopStory);
}

TEST_CASE("parse_news_csv: header-only file gives empty list, zero skipped") {
    const auto parsed = ingest::parse_news_rows(
        csv::parse_text("ticker,exchange,timestamp,story_headline,story_full,story_rank\n"));
    REQUIRE(parsed.docs.empty());
    REQUIRE(parsed.skipped_rows == 0);
}

TEST_CASE("parse_news_csv skips and counts bad timestamps") {
    const std::string content =
        "ticker,exchange,timestamp,story_headline,story_full,story_rank\n"
        "MSFT,NASDAQ,20171332,h,b,normal\n"
        "MSFT,NASDAQ,20171017,h,b,normal\n"
        "MSFT,NASDAQ,notadate,h,b,normal\n";
    const auto parsed = ingest::parse_news_rows(csv::parse_text(content));
    REQUIRE(parsed.docs.size() == 1);
    REQUIRE(parsed.skipped_rows == 2);
}

TEST_CASE("parse_news_csv names missing columns") {
    REQUIRE_THROWS_WITH(
        ingest::parse_news_rows(csv::parse_text("ticker,exchange,timestamp,story_full\nx\n")),
        Catch::Matchers::ContainsSubstring("story_headline"));
}

TEST_CASE("parse_prices_csv reads by header name, extra columns ignored") {
    const std::string content =
        "gvkey,iid,datadate,tic,cusip,conm,prccd,prchd,prcld,prcod\n"
        "1690,1,20091102,AAPL,37833100,APPLE INC,189.31,192.88,185.57,189.8\n"
        "1690,1,20091103,AAPL,37833100,APPLE INC,188.75,189.52,185.92,187.85\n";
    const auto parsed = ingest::parse_prices_rows(csv::parse_text(content));
    REQUIRE(parsed.rejected_rows == 0);
    const auto& bars = parsed.by_ticker.at("AAPL");
    REQUIRE(bars.size() == 2);
    REQUIRE(bars[0].date == 20091102);
    REQUIRE(bars[0].close == 189.31);
    REQUIRE(bars[0].high == 192.88);
    REQUIRE(bars[0].low == 185.57);
}

TEST_CASE("parse_prices_csv dedupes on (tic, datadate) keeping the first") {
    const std::string content =
        "tic,datadate,prccd\n"
        "AAPL,20091102,189.31\n"
        "AAPL,20091102,999.99\n";
    const auto parsed = ingest::parse_prices_rows(csv::parse_text(content));
    REQUIRE(parsed.by_ticker.at("AAPL").size() == 1);
    REQUIRE(parsed.by_ticker.at("AAPL")[0].close == 189.31);
}

TEST_CASE("parse_prices_csv rejects non-positive and non-numeric closes") {
    const std::string content =
        "tic,datadate,prccd\n"
        "AAPL,20091102,-5\n"
        "AAPL,20091103,abc\n"
        "AAPL,20091104,12.5\n";
    const auto parsed = ingest::parse_prices_rows(csv::parse_text(content));
    REQUIRE(parsed.rejected_rows == 2);
    REQUIRE(parsed.by_ticker.at("AAPL").size() == 1);
}

TEST_CASE("parse_prices_csv sorts bars by date") {
    const std::string content =
        "tic,datadate,prccd\n"
        "AAPL,20091104,3\n"
        "AAPL,20091102,1\n"
        "AAPL,20091103,2\n";
    const auto bars = ingest::parse_prices_rows(csv::parse_text(content)).by_ticker.at("AAPL");
    REQUIRE(bars[0].close == 1.0);
    REQUIRE(bars[1].close == 2.0);
    REQUIRE(bars[2].close == 3.0);
}

TEST_CASE("parse_prices_csv requires tic/datadate/prccd") {
    REQUIRE_THROWS_WITH(ingest::parse_prices_rows(csv::parse_text("tic,datadate\nx,1\n")),
                        Catch::Matchers::ContainsSubstring("prccd"));
}

TEST_CASE("dedupe_news collapses identical (ticker, timestamp, headline)") {
    NewsDoc a{"MSFT", "NASDAQ", 20171017,
              "RPT-INSIGHT-Microsoft responded quietly after detecting secret database hack",
              "body1", ingest::StoryRank::Normal};
    NewsDoc b = a;
    b.headline = "INSIGHT-Microsoft responded quietly after detecting secret database hack";
    SECTION("distinct headlines both survive") {
        const auto out = ingest::dedupe_news({a, b});
        REQUIRE(out.size() == 2);
    }
    SECTION("exact duplicate collapses to the first") {
        NewsDoc a2 = a;
        a2.body = "later body";
        const auto out = ingest::dedupe_news({a, a2, b});
        REQUIRE(out.size() == 2);
        REQUIRE(out[0].body == "body1");
    }
    SECTION("empty input") { REQUIRE(ingest::dedupe_news({}).empty()); }
    SECTION("idempotent") {
        const auto once = ingest::dedupe_news({a, a, b, b, a});
        REQUIRE(ingest::dedupe_news(once) == std::vector<NewsDoc>(once));
    }
}

namespace {

std::map<std::string, std::vector<PriceBar>> fixture_bars() {
    // ten consecutive trading days around Fri 2017-10-13 / Mon 2017-10-16
    std::map<std::string, std::vector<PriceBar>> m;
    std::vector<PriceBar>& bars = m["MSFT"];
    const std::vector<Date> days = fixtures::trading_calendar(20171009, 10);
    for (size_t i = 0; i < days.size(); ++i)
        bars.push_back({"MSFT", days[i], 100.0 + static_cast<double>(i), 0, 0, 0});
    return m;
}

}  // namespace

TEST_CASE("join pairs docs with the exact trading-day window") {
    const auto prices = fixture_bars();
    NewsDoc doc{"MSFT", "NASDAQ", 20171016, "h", "b", ingest::StoryRank::Normal};
    const auto res = ingest::join_news_prices({doc}, prices, 3, 2);
    REQUIRE(res.records.size() == 1);
    REQUIRE(res.dropped_docs == 0);
    const auto& rec = res.records[0];
    REQUIRE(rec.closes.size() == 6);  // L + H + 1
    REQUIRE(rec.anchor_index == 3);
    REQUIRE(rec.anchor_date() == 20171016);
    for (size_t i = 1; i < rec.closes.size(); ++i)
        REQUIRE(rec.closes[i].date > rec.closes[i - 1].date);
}

TEST_CASE("join anchors weekend news to the nearest prior trading day") {
    const auto prices = fixture_bars();
    NewsDoc sat{"MSFT", "NASDAQ", 20171014, "h", "b", ingest::StoryRank::Normal};  // Saturday
    const auto res = ingest::join_news_prices({sat}, prices, 3, 2);
    REQUIRE(res.records.size() == 1);
    REQUIRE(res.records[0].anchor_date() == 20171013);  // Friday
}

TEST_CASE("join drops and counts docs without coverage") {
    const auto prices = fixture_bars();
    NewsDoc absent{"ZZZZ", "NYSE", 20171016, "h", "b", ingest::StoryRank::Normal};
    NewsDoc too_early{"MSFT", "NASDAQ", 20171009, "h", "b", ingest::StoryRank::Normal};
    NewsDoc ok{"MSFT", "NASDAQ", 20171016, "h", "b", ingest::StoryRank::Normal};
    const auto res = ingest::join_news_prices({absent, too_early, ok}, prices, 3, 2);
    REQUIRE(res.records.size() == 1);
    REQUIRE(res.dropped_docs == 2);
}

TEST_CASE("join output count + drop count = input docs (property)") {
    const auto prices = fixture_bars();
    Rng rng(5);
    std::vector<NewsDoc> docs;
    for (int i = 0; i < 60; ++i) {
        NewsDoc d;
        d.ticker = rng.below(2) ? "MSFT" : "OTHER";
        d.date = static_cast<Date>(20171001 + rng.below(31));
        d.headline = "h" + std::to_string(i);
        docs.push_back(d);
    }
    const auto res = ingest::join_news_prices(docs, prices, 2, 2);
    REQUIRE(res.records.size() + res.dropped_docs == docs.size());
}

TEST_CASE("news csv: parse of serialize is identity on required columns") {
    Rng rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<fixtures::NewsRow> rows;
        const size_t n = 1 + rng.below(6);
        for (size_t i = 0; i < n; ++i) {
            fixtures::NewsRow r;
            r.ticker = "T" + std::to_string(rng.below(3));
            r.date = static_cast<Date>(20170101 + rng.below(28));
            r.headline = "headline, with \"quotes\" #" + std::to_string(rng.below(1000));
            r.body = "body\nwith newline " + std::to_string(rng.below(1000));
            r.rank = rng.below(2) ? "topStory" : "normal";
            rows.push_back(r);
        }
        const auto parsed = ingest::parse_news_rows(csv::parse_text(fixtures::news_csv(rows)));
        REQUIRE(parsed.docs.size() == rows.size());
        REQUIRE(parsed.skipped_rows == 0);
        for (size_t i = 0; i < rows.size(); ++i) {
            REQUIRE(parsed.docs[i].ticker == rows[i].ticker);
            REQUIRE(parsed.docs[i].date == rows[i].date);
            REQUIRE(parsed.docs[i].headline == rows[i].headline);
            REQUIRE(parsed.docs[i].body == rows[i].body);
            REQUIRE(ingest::rank_name(parsed.docs[i].rank) == rows[i].rank);
        }
    }
}
