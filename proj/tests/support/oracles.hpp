#pragma once

// Independent reference implementations used as test oracles. These are kept
// deliberately naive and separate from the library code paths they check:
// dense maps instead of sparse vectors, long double accumulation, direct
// transcription of the formulas.

#include <cmath>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using Doc = std::map<std::string, double>;  // term -> tf

struct DenseCorpusStats {
    std::vector<std::string> terms;           // sorted
    std::map<std::string, long> df;
    long n_docs = 0;
    long double avgdl = 1.0L;
};

inline DenseCorpusStats corpus_stats(const std::vector<Doc>& train) {
    DenseCorpusStats s;
    s.n_docs = static_cast<long>(train.size());
    std::set<std::string> vocab;
    long double total = 0.0L;
    for (const Doc& d : train) {
        for (const auto& [t, tf] : d) {
            vocab.insert(t);
            s.df[t] += 1;
            total += static_cast<long double>(tf);
        }
    }
    s.terms.assign(vocab.begin(), vocab.end());
    if (s.n_docs > 0 && total > 0.0L) s.avgdl = total / static_cast<long double>(s.n_docs);
    return s;
}

enum class Scheme { Presence, RawTF, TFIDF, BM25 };

struct Params {
    long double k1 = 1.2L;
    long double b = 0.95L;
    bool standard_bm25 = false;
    bool log10_base = false;
};

inline long double lg(long double x, bool log10_base) {
    return log10_base ? std::log10(x) : std::log(x);
}

// Dense per-term weights for one document against training statistics.
inline std::map<std::string, double> vectorize(const Doc& doc, const DenseCorpusStats& s,
                                               Scheme scheme, const Params& p = {}) {
    long double dl = 0.0L;
    for (const auto& [t, tf] : doc) dl += static_cast<long double>(tf);
    std::map<std::string, double> out;
    for (const std::string& term : s.terms) {
        auto it = doc.find(term);
        if (it == doc.end()) continue;
        const long double tf = static_cast<long double>(it->second);
        const long double df = static_cast<long double>(s.df.at(term));
        const long double n = static_cast<long double>(s.n_docs);
        long double w = 0.0L;
        switch (scheme) {
            case Scheme::Presence:
                w = tf > 0.0L ? 1.0L : 0.0L;
                break;
            case Scheme::RawTF:
                w = tf;
                break;
            case Scheme::TFIDF:
                w = tf * lg(n / df, p.log10_base);
                break;
            case Scheme::BM25: {
                long double denom = p.k1 * ((1.0L - p.b) + p.b * dl / s.avgdl);
                if (p.standard_bm25) denom += tf;
                w = (p.k1 + 1.0L) * tf / denom * lg((n - df + 0.5L) / (df + 0.5L), p.log10_base);
                break;
            }
        }
        if (w != 0.0L) out[term] = static_cast<double>(w);
    }
    return out;
}

// Cell-by-cell GARCH(1,1) recursion the way a spreadsheet would hold it:
// one column of eps^2, one column of h, long double arithmetic.
inline std::vector<double> garch_recursion(long double omega, long double alpha,
                                           long double beta, const std::vector<double>& eps,
                                           long double h0) {
    std::vector<long double> eps2(eps.size() + 1);
    eps2[0] = h0;
    for (size_t t = 0; t < eps.size(); ++t)
        eps2[t + 1] = static_cast<long double>(eps[t]) * static_cast<long double>(eps[t]);
    std::vector<long double> h(eps.size() + 1);
    h[0] = h0;
    for (size_t t = 1; t <= eps.size(); ++t)
        h[t] = omega + alpha * eps2[t - 1] + beta * h[t - 1];
    std::vector<double> out(eps.size());
    for (size_t t = 0; t < eps.size(); ++t) out[t] = static_cast<double>(h[t + 1]);
    return out;
}

struct ClassMetrics {
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
};

// Straight transcription of the metric definitions from a confusion matrix,
// with 0/0 defined as 0.
inline std::vector<ClassMetrics> metrics_from_confusion(
    const std::vector<std::vector<long>>& m) {
    const size_t k = m.size();
    std::vector<ClassMetrics> out(k);
    for (size_t c = 0; c < k; ++c) {
        long tp = m[c][c];
        long fp = 0, fn = 0;
        for (size_t i = 0; i < k; ++i) {
            if (i != c) {
                fp += m[i][c];
                fn += m[c][i];
            }
        }
        out[c].precision = (tp + fp) > 0 ? static_cast<double>(tp) / (tp + fp) : 0.0;
        out[c].recall = (tp + fn) > 0 ? static_cast<double>(tp) / (tp + fn) : 0.0;
        const double pr = out[c].precision + out[c].recall;
        out[c].f1 = pr > 0.0 ? 2.0 * out[c].precision * out[c].recall / pr : 0.0;
    }
    return out;
}

inline double accuracy_from_confusion(const std::vector<std::vector<long>>& m) {
    long total = 0, correct = 0;
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m.size(); ++j) {
            total += m[i][j];
            if (i == j) correct += m[i][j];
        }
    return total > 0 ? static_cast<double>(correct) / total : 0.0;
}

}  // namespace oracle
