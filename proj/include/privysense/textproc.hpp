#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "privysense/porter.hpp"
#include "privysense/strutil.hpp"
#include "privysense/textproc_data.hpp"

namespace privysense::text {

enum class Tag { NN, JJ, IN, RB, VB, OTHER };

inline const char* tag_name(Tag t) {
    switch (t) {
        case Tag::NN: return "NN";
        case Tag::JJ: return "JJ";
        case Tag::IN: return "IN";
        case Tag::RB: return "RB";
        case Tag::VB: return "VB";
        default: return "OTHER";
    }
}

struct Token {
    std::string surface;     // lowercased
    std::string normalized;  // stemmed + lemma-mapped
    Tag tag = Tag::NN;
};

enum class ChunkRule { Rule1, Rule2, Unigram };

inline const char* rule_name(ChunkRule r) {
    switch (r) {
        case ChunkRule::Rule1: return "Rule1";
        case ChunkRule::Rule2: return "Rule2";
        default: return "Unigram";
    }
}

// Half-open token span [begin, end) into the tagged token sequence.
struct Keyphrase {
    size_t begin = 0;
    size_t end = 0;
    ChunkRule rule = ChunkRule::Unigram;
    std::vector<std::string> words;    // normalized forms
    std::vector<std::string> surface;  // surface forms

    size_t size() const { return end - begin; }
    std::string surface_text() const { return join(surface); }
    std::string normalized_text() const { return join(words); }

private:
    static std::string join(const std::vector<std::string>& v) {
        std::string out;
        for (size_t i = 0; i < v.size(); ++i) {
            if (i) out.push_back(' ');
            out += v[i];
        }
        return out;
    }
};

inline const std::unordered_set<std::string_view>& stoplist() {
    static const std::unordered_set<std::string_view> s(std::begin(data::kStoplist),
                                                        std::end(data::kStoplist));
    return s;
}

inline const std::unordered_map<std::string_view, Tag>& lexicon() {
    static const std::unordered_map<std::string_view, Tag> m = [] {
        std::unordered_map<std::string_view, Tag> t;
        for (const auto& e : data::kLexicon) {
            Tag tag = Tag::NN;
            switch (e.tag) {
                case 'N': tag = Tag::NN; break;
                case 'J': tag = Tag::JJ; break;
                case 'I': tag = Tag::IN; break;
                case 'R': tag = Tag::RB; break;
                case 'V': tag = Tag::VB; break;
                case 'O': tag = Tag::OTHER; break;
            }
            t.emplace(e.word, tag);
        }
        return t;
    }();
    return m;
}

inline const std::unordered_map<std::string_view, std::string_view>& lemma_exceptions() {
    static const std::unordered_map<std::string_view, std::string_view> m = [] {
        std::unordered_map<std::string_view, std::string_view> t;
        for (const auto& e : data::kLemmaExceptions) t.emplace(e.stem, e.lemma);
        return t;
    }();
    return m;
}

// Porter stem, then map the stem back to a dictionary word where the
// exception table knows one. Idempotent: every value the function can return
// is a fixed point (the lemma table is tested for that property).
inline std::string normalize(std::string_view lowercase_word) {
    std::string stem = porter_stem(lowercase_word);
    auto it = lemma_exceptions().find(stem);
    if (it != lemma_exceptions().end()) return std::string(it->second);
    return stem;
}

// Lowercased word tokens. Tokens are runs of [a-z0-9-] (hyphen kept only
// word-internally); anything else separates. Filters drop punctuation-only
// and digit-only runs, stopwords, and single-character tokens.
inline std::vector<std::string> tokenize_and_filter(std::string_view input) {
    std::vector<std::string> out;
    const std::string lowered = to_lower(input);
    size_t i = 0;
    const size_t n = lowered.size();
    auto is_word_char = [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '-';
    };
    while (i < n) {
        if (!is_word_char(lowered[i])) {
            ++i;
            continue;
        }
        size_t j = i;
        while (j < n && is_word_char(lowered[j])) ++j;
        std::string_view run(lowered.data() + i, j - i);
        i = j;
        // trim hyphens at the edges
        size_t b = 0, e = run.size();
        while (b < e && run[b] == '-') ++b;
        while (e > b && run[e - 1] == '-') --e;
        run = run.substr(b, e - b);
        if (run.size() < 2) continue;
        bool has_letter = false;
        for (char c : run)
            if (c >= 'a' && c <= 'z') { has_letter = true; break; }
        if (!has_letter) continue;  // numbers and amounts carry no vocabulary
        if (stoplist().count(run)) continue;
        out.emplace_back(run);
    }
    return out;
}

// Lexicon lookup, then suffix rules, then NN.
inline Tag tag_word(std::string_view w) {
    auto it = lexicon().find(w);
    if (it != lexicon().end()) return it->second;
    auto ends = [&](std::string_view suf) {
        return w.size() >= suf.size() + 2 &&
               w.compare(w.size() - suf.size(), suf.size(), suf) == 0;
    };
    if (ends("ly")) return Tag::RB;
    if (ends("ing") || ends("ed")) return Tag::VB;
    if (ends("ous") || ends("ful") || ends("ive")) return Tag::JJ;
    return Tag::NN;
}

inline std::vector<Token> pos_tag(const std::vector<std::string>& tokens) {
    std::vector<Token> out;
    out.reserve(tokens.size());
    for (const std::string& t : tokens) {
        Token tok;
        tok.surface = t;
        tok.normalized = normalize(t);
        tok.tag = tag_word(t);
        out.push_back(std::move(tok));
    }
    return out;
}

namespace detail {

constexpr size_t kMaxPhraseLen = 5;

inline bool nounish(Tag t) { return t == Tag::NN || t == Tag::JJ; }

// Longest NBAR (= (NN|JJ)* NN) starting at `from` within the noun/adjective
// run ending at `run_end`; returns one past the final NN, or `from` when the
// run holds no noun.
inline size_t nbar_end(const std::vector<Token>& toks, size_t from, size_t run_end) {
    size_t last_nn = from;
    for (size_t i = from; i < run_end; ++i)
        if (toks[i].tag == Tag::NN) last_nn = i + 1;
    return last_nn;
}

}  // namespace detail

// Figure-2 grammar chunker.
//   Rule1: NBAR  = (NN|JJ)* NN
//   Rule2: NBAR IN NBAR
// Scans left to right emitting maximal non-overlapping matches, trying Rule2
// before Rule1 at each position. Matches are capped at 5 words: an over-long
// Rule1 run is tiled greedily (each tile ends at a noun), and a Rule2 second
// NBAR is truncated to fit. Material that cannot head a >= 2-word match is
// emitted one word at a time as Unigram candidates.
inline std::vector<Keyphrase> chunk(const std::vector<Token>& toks) {
    using detail::kMaxPhraseLen;
    std::vector<Keyphrase> out;
    auto emit = [&](size_t b, size_t e, ChunkRule rule) {
        Keyphrase k;
        k.begin = b;
        k.end = e;
        k.rule = rule;
        for (size_t i = b; i < e; ++i) {
            k.words.push_back(toks[i].normalized);
            k.surface.push_back(toks[i].surface);
        }
        out.push_back(std::move(k));
    };
    // Tiles [b, e) into phrases of <= 5 words, each ending at an NN; words
    // that cannot join such a phrase become unigram candidates.
    auto emit_rule1_span = [&](size_t b, size_t e) {
        size_t pos = b;
        while (pos < e) {
            size_t limit = std::min(e, pos + kMaxPhraseLen);
            size_t w_end = pos;  // one past last NN within the window
            for (size_t i = pos; i < limit; ++i)
                if (toks[i].tag == Tag::NN) w_end = i + 1;
            if (w_end == pos) {  // window holds no noun
                emit(pos, pos + 1, ChunkRule::Unigram);
                ++pos;
            } else if (w_end - pos == 1) {
                emit(pos, w_end, ChunkRule::Unigram);
                pos = w_end;
            } else {
                emit(pos, w_end, ChunkRule::Rule1);
                pos = w_end;
            }
        }
    };

    const size_t n = toks.size();
    size_t i = 0;
    while (i < n) {
        if (!detail::nounish(toks[i].tag)) {
            ++i;
            continue;
        }
        size_t run_end = i;
        while (run_end < n && detail::nounish(toks[run_end].tag)) ++run_end;
        const size_t nbar1_end = detail::nbar_end(toks, i, run_end);
        if (nbar1_end == i) {
            // adjective-only run
            emit_rule1_span(i, run_end);
            i = run_end;
            continue;
        }
        const size_t nbar1_len = nbar1_end - i;
        // Rule2 first: the full NBAR, an IN, then a second NBAR, within the cap
        if (nbar1_len + 2 <= kMaxPhraseLen && nbar1_end < n && toks[nbar1_end].tag == Tag::IN) {
            const size_t j = nbar1_end + 1;
            size_t run2_end = j;
            while (run2_end < n && detail::nounish(toks[run2_end].tag)) ++run2_end;
            const size_t budget = kMaxPhraseLen - nbar1_len - 1;
            const size_t limit = std::min(run2_end, j + budget);
            const size_t nbar2_end = detail::nbar_end(toks, j, limit);
            if (nbar2_end > j) {
                emit(i, nbar2_end, ChunkRule::Rule2);
                i = nbar2_end;
                continue;
            }
        }
        emit_rule1_span(i, nbar1_end);
        i = nbar1_end;
    }
    return out;
}

struct ProcessedText {
    std::vector<Token> tokens;
    std::vector<Keyphrase> chunks;
};

inline ProcessedText process_text(std::string_view input) {
    ProcessedText p;
    p.tokens = pos_tag(tokenize_and_filter(input));
    p.chunks = chunk(p.tokens);
    return p;
}

// Accumulates normalized-unigram occurrence counts (the training-split
// statistic behind the frequency pruning rule).
inline void count_unigrams(const std::vector<Token>& toks,
                           std::unordered_map<std::string, long>& freq) {
    for (const Token& t : toks) ++freq[t.normalized];
}

// Feature multiset for one document: every multi-word chunk phrase
// (normalized, space-joined; the chunker already enforces 2..5 words) plus
// every normalized unigram whose training-corpus frequency reaches min_freq.
inline std::vector<std::string> extract_keyphrase_features(
    const std::vector<Token>& toks, const std::vector<Keyphrase>& chunks,
    const std::unordered_map<std::string, long>& train_unigram_freq, long min_freq = 3) {
    std::vector<std::string> feats;
    for (const Keyphrase& k : chunks) {
        if (k.rule == ChunkRule::Unigram || k.size() < 2) continue;
        feats.push_back(k.normalized_text());
    }
    for (const Token& t : toks) {
        auto it = train_unigram_freq.find(t.normalized);
        if (it != train_unigram_freq.end() && it->second >= min_freq)
            feats.push_back(t.normalized);
    }
    return feats;
}

// --- data-file mirrors ------------------------------------------------------

inline std::string stoplist_file_content() {
    std::string out;
    for (const auto& w : data::kStoplist) {
        out += w;
        out.push_back('\n');
    }
    return out;
}

inline std::string lexicon_file_content() {
    std::string out;
    for (const auto& e : data::kLexicon) {
        out += e.word;
        out.push_back('\t');
        switch (e.tag) {
            case 'N': out += "NN"; break;
            case 'J': out += "JJ"; break;
            case 'I': out += "IN"; break;
            case 'R': out += "RB"; break;
            case 'V': out += "VB"; break;
            default: out += "OTHER"; break;
        }
        out.push_back('\n');
    }
    return out;
}

}  // namespace privysense::text
