#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "privysense/features.hpp"
#include "privysense/models.hpp"
#include "privysense/textproc.hpp"

namespace privysense::pipe {

// Which view of the document feeds the vectorizer. The first four are the
// bag-of-words weightings over filtered surface tokens; Ngram is the chunker
// pipeline (normalized keyphrases + frequency-pruned normalized unigrams)
// weighted by raw term frequency.
enum class FeatureKind { Presence, RawTF, TFIDF, BM25, Ngram };

inline const char* feature_kind_name(FeatureKind k) {
    switch (k) {
        case FeatureKind::Presence: return "presence";
        case FeatureKind::RawTF: return "tf";
        case FeatureKind::TFIDF: return "tfidf";
        case FeatureKind::BM25: return "bm25";
        default: return "ngram";
    }
}

enum class ModelKind { SVM, MultinomialNB, BernoulliNB };

inline const char* model_kind_name(ModelKind k) {
    switch (k) {
        case ModelKind::SVM: return "svm";
        case ModelKind::MultinomialNB: return "nb";
        default: return "bnb";
    }
}

struct PipelineConfig {
    FeatureKind scheme = FeatureKind::TFIDF;
    ModelKind model = ModelKind::SVM;
    double alpha = 1.0;  // NB smoothing
    double svm_c = 1.0;
    feat::WeightingParams weighting;
    long min_unigram_freq = 3;  // training-corpus occurrence threshold
    long min_df = 1;

    feat::Scheme weighting_scheme() const {
        switch (scheme) {
            case FeatureKind::Presence: return feat::Scheme::Presence;
            case FeatureKind::RawTF: return feat::Scheme::RawTF;
            case FeatureKind::TFIDF: return feat::Scheme::TFIDF;
            case FeatureKind::BM25: return feat::Scheme::BM25;
            case FeatureKind::Ngram: return feat::Scheme::RawTF;
        }
        return feat::Scheme::RawTF;
    }

    std::string describe() const {
        std::string s = std::string("scheme=") + feature_kind_name(scheme) +
                        " model=" + model_kind_name(model);
        if (model == ModelKind::SVM) s += " C=" + fmt_double(svm_c);
        else s += " alpha=" + fmt_double(alpha);
        return s;
    }
};

// One document after text processing; everything the per-fold featurization
// needs, so the expensive tokenize/tag/chunk pass runs exactly once.
struct PreparedDoc {
    std::vector<std::string> tokens;         // filtered surface tokens
    std::vector<std::string> norm_unigrams;  // normalized tokens
    std::vector<std::string> phrases;        // multi-word chunk phrases, normalized
    int label = 0;
};

inline PreparedDoc prepare_doc(std::string_view text, int label) {
    PreparedDoc d;
    d.label = label;
    const text::ProcessedText p = text::process_text(text);
    d.tokens.reserve(p.tokens.size());
    d.norm_unigrams.reserve(p.tokens.size());
    for (const text::Token& t : p.tokens) {
        d.tokens.push_back(t.surface);
        d.norm_unigrams.push_back(t.normalized);
    }
    for (const text::Keyphrase& k : p.chunks)
        if (k.rule != text::ChunkRule::Unigram && k.size() >= 2)
            d.phrases.push_back(k.normalized_text());
    return d;
}

// Occurrence counts over the training split only; vocabulary pruning that
// peeked at test documents would leak.
inline std::unordered_map<std::string, long> train_unigram_frequencies(
    const std::vector<PreparedDoc>& docs, const std::vector<size_t>& train_idx,
    FeatureKind scheme) {
    std::unordered_map<std::string, long> freq;
    for (size_t i : train_idx) {
        const auto& words =
            scheme == FeatureKind::Ngram ? docs[i].norm_unigrams : docs[i].tokens;
        for (const std::string& w : words) ++freq[w];
    }
    return freq;
}

inline feat::TermCounts doc_terms(const PreparedDoc& doc, FeatureKind scheme,
                                  const std::unordered_map<std::string, long>& train_freq,
                                  long min_freq) {
    feat::TermCounts out;
    const auto& unigrams =
        scheme == FeatureKind::Ngram ? doc.norm_unigrams : doc.tokens;
    for (const std::string& w : unigrams) {
        auto it = train_freq.find(w);
        if (it != train_freq.end() && it->second >= min_freq) out[w] += 1.0;
    }
    if (scheme == FeatureKind::Ngram)
        for (const std::string& p : doc.phrases) out[p] += 1.0;
    return out;
}

struct TrainedClassifier {
    ModelKind kind = ModelKind::SVM;
    model::NBModel nb;
    model::OvrSVMModel svm;

    int predict(const feat::FeatureVector& x) const {
        return kind == ModelKind::SVM ? model::svm_ovr_predict(svm, x)
                                      : model::nb_predict(nb, x);
    }
};

inline TrainedClassifier train_classifier(const PipelineConfig& cfg,
                                          const std::vector<feat::FeatureVector>& x,
                                          const std::vector<int>& y, size_t vocab_size) {
    TrainedClassifier t;
    t.kind = cfg.model;
    switch (cfg.model) {
        case ModelKind::SVM:
            t.svm = model::train_svm_ovr(x, y, vocab_size, cfg.svm_c);
            break;
        case ModelKind::MultinomialNB:
            t.nb = model::train_nb(x, y, vocab_size, model::NBVariant::Multinomial, cfg.alpha);
            break;
        case ModelKind::BernoulliNB:
            t.nb = model::train_nb(x, y, vocab_size, model::NBVariant::Bernoulli, cfg.alpha);
            break;
    }
    return t;
}

// Everything a fit-on-train / apply-on-test pass produces.
struct FittedPipeline {
    feat::Vocabulary vocab;
    std::unordered_map<std::string, long> train_freq;
    TrainedClassifier classifier;
};

inline FittedPipeline fit_pipeline(const PipelineConfig& cfg,
                                   const std::vector<PreparedDoc>& docs,
                                   const std::vector<size_t>& train_idx) {
    FittedPipeline f;
    f.train_freq = train_unigram_frequencies(docs, train_idx, cfg.scheme);
    std::vector<feat::TermCounts> train_terms;
    std::vector<int> y;
    train_terms.reserve(train_idx.size());
    y.reserve(train_idx.size());
    for (size_t i : train_idx) {
        train_terms.push_back(doc_terms(docs[i], cfg.scheme, f.train_freq, cfg.min_unigram_freq));
        y.push_back(docs[i].label);
    }
    f.vocab = feat::build_vocabulary(train_terms, cfg.min_df);
    std::vector<feat::FeatureVector> x;
    x.reserve(train_terms.size());
    for (const auto& terms : train_terms)
        x.push_back(feat::vectorize(terms, f.vocab, cfg.weighting_scheme(), cfg.weighting));
    f.classifier = train_classifier(cfg, x, y, f.vocab.size());
    return f;
}

inline int predict_doc(const FittedPipeline& f, const PipelineConfig& cfg,
                       const PreparedDoc& doc) {
    const feat::TermCounts terms =
        doc_terms(doc, cfg.scheme, f.train_freq, cfg.min_unigram_freq);
    const feat::FeatureVector x =
        feat::vectorize(terms, f.vocab, cfg.weighting_scheme(), cfg.weighting);
    return f.classifier.predict(x);
}

}  // namespace privysense::pipe
