#include <catch2/catch_amalgamated.hpp>

#include "privysense/rng.hpp"
#include "privysense/strutil.hpp"

using namespace privysense;

TEST_CASE("fmt_double round-trips doubles exactly") {
    Rng rng(7);
    for (int i = 0; i < 2000; ++i) {
        double v = (rng.uniform() - 0.5) * std::pow(10.0, rng.uniform(-12.0, 12.0));
        auto parsed = parse_double(fmt_double(v));
        REQUIRE(parsed.has_value());
        REQUIRE(*parsed == v);
    }
    REQUIRE(*parse_double(fmt_double(0.0)) == 0.0);
    REQUIRE(*parse_double(fmt_double(1e-300)) == 1e-300);
}

TEST_CASE("parse_double handles currency markers and rejects junk") {
    REQUIRE(*parse_double("189.31") == 189.31);
    REQUIRE(*parse_double(" $ 189.31 ") == 189.31);
    REQUIRE(*parse_double("-5") == -5.0);
    REQUIRE_FALSE(parse_double("abc").has_value());
    REQUIRE_FALSE(parse_double("1.2x").has_value());
    REQUIRE_FALSE(parse_double("").has_value());
}

TEST_CASE("scrub_utf8 keeps valid text and replaces bad bytes") {
    REQUIRE(scrub_utf8("hello") == "hello");
    REQUIRE(scrub_utf8("caf\xC3\xA9") == "caf\xC3\xA9");
    const std::string bad = "a\xFFz";
    const std::string scrubbed = scrub_utf8(bad);
    REQUIRE(scrubbed == "a\xEF\xBF\xBDz");
    // overlong encoding is rejected
    REQUIRE(scrub_utf8("\xC0\xAF") == "\xEF\xBF\xBD\xEF\xBF\xBD");
    // truncated sequence at end of input
    REQUIRE(scrub_utf8("ok\xE2\x82") == "ok\xEF\xBF\xBD\xEF\xBF\xBD");
}

TEST_CASE("fnv1a is stable") {
    REQUIRE(fnv1a("") == 0xcbf29ce484222325ull);
    REQUIRE(fnv1a("a") != fnv1a("b"));
    REQUIRE(fnv1a_hex("abc") == fnv1a_hex("abc"));
    REQUIRE(fnv1a_hex("abc").size() == 16);
}

TEST_CASE("rng shuffle and gaussian are deterministic per seed") {
    Rng a(123), b(123), c(124);
    std::vector<int> va{1, 2, 3, 4, 5, 6, 7, 8}, vb = va, vc = va;
    a.shuffle(va);
    b.shuffle(vb);
    c.shuffle(vc);
    REQUIRE(va == vb);
    REQUIRE(va != vc);  // overwhelmingly likely
    Rng g1(9), g2(9);
    for (int i = 0; i < 100; ++i) REQUIRE(g1.gaussian() == g2.gaussian());
}
