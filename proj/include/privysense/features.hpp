#pragma once

#include <cmath>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "privysense/errors.hpp"
#include "privysense/strutil.hpp"

namespace privysense::feat {

// A document, by the time it reaches vectorization, is a term multiset.
using TermCounts = std::map<std::string, double>;

inline TermCounts to_counts(const std::vector<std::string>& terms) {
    TermCounts c;
    for (const std::string& t : terms) c[t] += 1.0;
    return c;
}

enum class Scheme { Presence, RawTF, TFIDF, BM25 };

inline const char* scheme_name(Scheme s) {
    switch (s) {
        case Scheme::Presence: return "presence";
        case Scheme::RawTF: return "tf";
        case Scheme::TFIDF: return "tfidf";
        default: return "bm25";
    }
}

struct WeightingParams {
    double k1 = 1.2;
    double b = 0.95;
    bool standard_bm25 = false;  // adds the conventional +tf denominator term
    bool log10_base = false;     // natural log unless set
};

struct Vocabulary {
    std::unordered_map<std::string, size_t> index;  // term -> dense id
    std::vector<std::string> terms;                 // id -> term
    std::vector<long> df;                           // id -> document frequency
    long n_docs = 0;
    double avgdl = 1.0;

    size_t size() const { return terms.size(); }

    // Checksum ties feature files and model files to the vocabulary that
    // produced them.
    std::string checksum() const {
        uint64_t h = 0xcbf29ce484222325ull;
        for (size_t i = 0; i < terms.size(); ++i) {
            h = fnv1a(terms[i], h);
            h = fnv1a("\t" + std::to_string(df[i]) + "\n", h);
        }
        h = fnv1a("N=" + std::to_string(n_docs), h);
        h = fnv1a(";avgdl=" + fmt_double(avgdl), h);
        char buf[17];
        std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
        return std::string(buf, 16);
    }
};

struct FeatureEntry {
    size_t index;
    double weight;
};

// Sparse vector; indices strictly increasing, no zero weights.
using FeatureVector = std::vector<FeatureEntry>;

// Terms indexed in first-seen order over the training stream; terms below
// min_df are dropped. avgdl counts term occurrences (multiset size) per doc.
inline Vocabulary build_vocabulary(const std::vector<TermCounts>& train_docs, long min_df = 1) {
    check_contract(!train_docs.empty(), "build_vocabulary: empty corpus");
    Vocabulary v;
    v.n_docs = static_cast<long>(train_docs.size());
    std::unordered_map<std::string, long> df;
    std::vector<std::string> first_seen;
    double total_len = 0.0;
    for (const TermCounts& doc : train_docs) {
        for (const auto& [term, tf] : doc) {
            total_len += tf;
            long& d = df[term];
            if (d == 0) first_seen.push_back(term);
            ++d;
        }
    }
    for (const std::string& term : first_seen) {
        const long d = df[term];
        if (d < min_df) continue;
        v.index.emplace(term, v.terms.size());
        v.terms.push_back(term);
        v.df.push_back(d);
    }
    v.avgdl = v.n_docs > 0 && total_len > 0.0 ? total_len / static_cast<double>(v.n_docs) : 1.0;
    return v;
}

namespace detail {

inline double log_base(double x, bool log10_base) {
    return log10_base ? std::log10(x) : std::log(x);
}

}  // namespace detail

// Weight of one term under the selected scheme. dl is the full multiset size
// of the document (out-of-vocabulary occurrences included).
inline double term_weight(Scheme scheme, double tf, long df, long n_docs, double dl,
                          const Vocabulary& vocab, const WeightingParams& p) {
    switch (scheme) {
        case Scheme::Presence:
            return tf > 0.0 ? 1.0 : 0.0;
        case Scheme::RawTF:
            return tf;
        case Scheme::TFIDF:
            return tf * detail::log_base(static_cast<double>(n_docs) / static_cast<double>(df),
                                         p.log10_base);
        case Scheme::BM25: {
            const double idf = detail::log_base(
                (static_cast<double>(n_docs) - static_cast<double>(df) + 0.5) /
                    (static_cast<double>(df) + 0.5),
                p.log10_base);
            double denom = p.k1 * ((1.0 - p.b) + p.b * dl / vocab.avgdl);
            if (p.standard_bm25) denom += tf;
            return (p.k1 + 1.0) * tf / denom * idf;
        }
    }
    return 0.0;
}

// Out-of-vocabulary terms are ignored; zero weights are omitted so the
// sparse invariant (no zero entries) holds for every scheme.
inline FeatureVector vectorize(const TermCounts& doc, const Vocabulary& vocab, Scheme scheme,
                               const WeightingParams& params = {}) {
    double dl = 0.0;
    for (const auto& [term, tf] : doc) dl += tf;
    FeatureVector out;
    std::vector<std::pair<size_t, double>> hits;
    hits.reserve(doc.size());
    for (const auto& [term, tf] : doc) {
        auto it = vocab.index.find(term);
        if (it == vocab.index.end()) continue;
        const size_t id = it->second;
        const double w =
            term_weight(scheme, tf, vocab.df[id], vocab.n_docs, dl, vocab, params);
        if (w != 0.0) hits.emplace_back(id, w);
    }
    std::sort(hits.begin(), hits.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    out.reserve(hits.size());
    for (const auto& [id, w] : hits) out.push_back({id, w});
    return out;
}

inline double dot(const FeatureVector& x, const std::vector<double>& w) {
    double s = 0.0;
    for (const FeatureEntry& e : x) s += e.weight * w[e.index];
    return s;
}

inline double squared_norm(const FeatureVector& x) {
    double s = 0.0;
    for (const FeatureEntry& e : x) s += e.weight * e.weight;
    return s;
}

}  // namespace privysense::feat
