// privysense — derives sentiment labels for financial news from subsequent
// price movement and trains/evaluates text classifiers on them.
//
// Subcommands: ingest, fit, label, featurize, train, eval, sweep-p, chunk,
// report. Artifacts are written atomically under --workdir and embed the
// resolved config, its hash, and the seed. Exit codes: 0 success, 1 domain or
// contract error, 2 input/schema error, 3 internal error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "privysense/artifacts.hpp"
#include "privysense/eval.hpp"
#include "privysense/ingest.hpp"
#include "privysense/pipeline.hpp"
#include "privysense/strutil.hpp"
#include "privysense/textproc.hpp"
#include "privysense/volatility.hpp"

namespace ps = privysense;
using nlohmann::json;

namespace {

struct Options {
    std::string config_path;
    std::string workdir;
    std::string news, prices;
    std::string joined, labeled, features, vocab, model_file, garch, out, input;
    std::string scheme = "tfidf";
    std::string model = "svm";
    std::string log_base = "e";
    std::string weighting = "geometric";
    std::string text;
    int p = 0;
    int p_min = 0;
    int p_max = 5;
    int folds = 10;
    int lookback = 10;
    int horizon = 6;
    long min_freq = 3;
    long min_df = 1;
    double min_thr = 0.0;  // 0 means "not set" (must be < 0 when used)
    double max_thr = 0.0;
    double split = 0.8;
    double k1 = 1.2;
    double b = 0.95;
    double alpha = 1.0;
    double svm_c = 1.0;
    bool standard_bm25 = false;
    uint64_t seed = 42;
};

// Pre-scan for --config so the file's values can seed option defaults;
// precedence stays flag > config file > built-in default.
json load_config_json(int argc, char** argv) {
    std::string path;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "--config" && i + 1 < argc) path = argv[i + 1];
        else if (a.rfind("--config=", 0) == 0) path = a.substr(9);
    }
    if (path.empty()) return json::object();
    std::ifstream in(path);
    if (!in) throw ps::io_error("cannot open config file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ps::schema_error("bad config file " + path + ": " + e.what());
    }
    if (!j.is_object()) throw ps::schema_error("config file must hold a JSON object");
    return j;
}

template <typename T>
void seed_default(const json& cfg, const char* key, T& slot) {
    if (!cfg.contains(key)) return;
    try {
        slot = cfg.at(key).get<T>();
    } catch (const json::exception&) {
        throw ps::schema_error(std::string("config key '") + key + "' has the wrong type");
    }
}

std::string artifact_path(const Options& o, const std::string& explicit_path,
                          const char* default_name) {
    if (!explicit_path.empty()) return explicit_path;
    return o.workdir + "/" + default_name;
}

ps::pipe::FeatureKind parse_scheme(const std::string& s) {
    if (s == "presence") return ps::pipe::FeatureKind::Presence;
    if (s == "tf") return ps::pipe::FeatureKind::RawTF;
    if (s == "tfidf") return ps::pipe::FeatureKind::TFIDF;
    if (s == "bm25") return ps::pipe::FeatureKind::BM25;
    if (s == "ngram") return ps::pipe::FeatureKind::Ngram;
    throw ps::contract_error("unknown scheme: " + s);
}

ps::pipe::ModelKind parse_model(const std::string& s) {
    if (s == "svm") return ps::pipe::ModelKind::SVM;
    if (s == "nb") return ps::pipe::ModelKind::MultinomialNB;
    if (s == "bnb") return ps::pipe::ModelKind::BernoulliNB;
    throw ps::contract_error("unknown model: " + s);
}

ps::pipe::PipelineConfig pipeline_config(const Options& o) {
    ps::pipe::PipelineConfig cfg;
    cfg.scheme = parse_scheme(o.scheme);
    cfg.model = parse_model(o.model);
    cfg.alpha = o.alpha;
    cfg.svm_c = o.svm_c;
    cfg.weighting.k1 = o.k1;
    cfg.weighting.b = o.b;
    cfg.weighting.standard_bm25 = o.standard_bm25;
    cfg.weighting.log10_base = o.log_base == "10";
    cfg.min_unigram_freq = o.min_freq;
    cfg.min_df = o.min_df;
    return cfg;
}

ps::artifact::Meta make_meta(const Options& o, const std::string& kind,
                             const std::string& detail) {
    ps::artifact::Meta m;
    m.kind = kind;
    m.config = detail;
    m.seed = o.seed;
    return m;
}

std::string percent(double v) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%.1f%%", v * 100.0);
    return buf;
}

const char* class_name_of(int cls) {
    switch (cls) {
        case 0: return "Negative";
        case 1: return "Positive";
        case 2: return "Neutral";
        default: return "?";
    }
}

void print_report(std::ostream& os, const ps::eval::EvalReport& r) {
    os << "test accuracy: " << percent(r.accuracy) << "  (n=" << r.n_test << ")\n";
    os << "macro F1: " << percent(r.macro_f1) << "  weighted F1: " << percent(r.weighted_f1)
       << "\n\n";
    os << "class        precision  recall     F1\n";
    for (size_t c = 0; c < r.classes.size(); ++c) {
        char line[96];
        std::snprintf(line, sizeof(line), "%-12s %-10.2f %-10.2f %-10.2f%s",
                      class_name_of(r.classes[c]), r.precision[c], r.recall[c], r.f1[c],
                      r.zero_support[c] ? "  (no support)" : "");
        os << line << "\n";
    }
    os << "\nconfusion (rows = true class, raw):\n";
    for (const auto& row : r.confusion) {
        for (long v : row) os << "  " << v;
        os << "\n";
    }
    os << "confusion (row-normalized):\n";
    for (size_t i = 0; i < r.confusion_norm.size(); ++i) {
        for (double v : r.confusion_norm[i]) {
            char buf[16];
            std::snprintf(buf, sizeof(buf), "  %.3f", v);
            os << buf;
        }
        os << (r.zero_support[i] ? "  (no support)\n" : "\n");
    }
}

// --- subcommand bodies -------------------------------------------------------

int run_ingest(const Options& o) {
    if (o.news.empty() || o.prices.empty())
        throw ps::contract_error("ingest: --news and --prices are required");
    auto news = ps::ingest::parse_news_csv(o.news);
    const size_t raw_docs = news.docs.size();
    auto docs = ps::ingest::dedupe_news(news.docs);
    auto prices = ps::ingest::parse_prices_csv(o.prices);
    auto joined = ps::ingest::join_news_prices(docs, prices.by_ticker, o.lookback, o.horizon);

    const std::string out_path = artifact_path(o, o.out, "joined.jsonl");
    const std::string cfg = "news=" + o.news + " prices=" + o.prices +
                            " L=" + std::to_string(o.lookback) +
                            " H=" + std::to_string(o.horizon);
    ps::artifact::write_joined(out_path, make_meta(o, "joined", cfg), joined.records);

    std::cout << "news rows parsed: " << raw_docs << " (skipped " << news.skipped_rows << ")\n"
              << "after dedupe: " << docs.size() << "\n"
              << "price rows rejected: " << prices.rejected_rows << "\n"
              << "joined records: " << joined.records.size() << " (dropped "
              << joined.dropped_docs << ")\n"
              << "wrote " << out_path << "\n";
    return 0;
}

int run_fit(const Options& o) {
    if (o.prices.empty()) throw ps::contract_error("fit: --prices is required");
    auto prices = ps::ingest::parse_prices_csv(o.prices);
    std::map<std::string, ps::vol::GarchModel> models;
    size_t skipped = 0;
    for (const auto& [ticker, bars] : prices.by_ticker) {
        if (bars.size() < 51) {
            std::cout << ticker << ": skipped (needs >= 51 bars, has " << bars.size() << ")\n";
            ++skipped;
            continue;
        }
        try {
            const auto series = ps::vol::make_return_series(ticker, bars);
            const auto m = ps::vol::fit_garch11(series);
            std::cout << ticker << ": omega=" << ps::fmt_double(m.omega)
                      << " alpha=" << ps::fmt_double(m.alpha)
                      << " beta=" << ps::fmt_double(m.beta)
                      << " loglik=" << ps::fmt_double(m.loglik) << " n=" << m.n_obs << "\n";
            models.emplace(ticker, m);
        } catch (const ps::vol::convergence_error& e) {
            std::cout << ticker << ": no convergence, skipped (" << e.what() << ")\n";
            ++skipped;
        } catch (const ps::degenerate_input_error& e) {
            std::cout << ticker << ": degenerate series, skipped (" << e.what() << ")\n";
            ++skipped;
        }
    }
    if (models.empty()) throw ps::degenerate_input_error("fit: no ticker could be fitted");
    const std::string out_path = artifact_path(o, o.out, "garch_models.txt");
    ps::artifact::write_garch_models(out_path, make_meta(o, "garch", "prices=" + o.prices),
                                     models);
    std::cout << "fitted " << models.size() << " tickers (skipped " << skipped << "), wrote "
              << out_path << "\n";
    return 0;
}

int run_label(const Options& o, bool thresholds_given) {
    const std::string joined_path = artifact_path(o, o.joined, "joined.jsonl");
    auto records = ps::artifact::read_joined(joined_path);

    std::map<std::string, ps::vol::GarchModel> models;
    const bool geometric = o.weighting != "uniform";
    if (o.p >= 1 && geometric)
        models = ps::artifact::read_garch_models(artifact_path(o, o.garch, "garch_models.txt"));
    if (thresholds_given)
        ps::check_contract(o.min_thr < 0.0 && o.max_thr > 0.0,
                           "label: need --min-thr < 0 < --max-thr");

    const auto weighting = geometric ? ps::vol::DecayWeighting::Geometric
                                     : ps::vol::DecayWeighting::Uniform;
    std::vector<ps::artifact::LabeledDoc> out;
    out.reserve(records.size());
    for (auto& rec : records) {
        const ps::vol::GarchModel* m = nullptr;
        if (o.p >= 1 && geometric) {
            auto it = models.find(rec.doc.ticker);
            if (it == models.end())
                throw ps::contract_error("label: p >= 1 but no fitted model for ticker " +
                                         rec.doc.ticker);
            m = &it->second;
        }
        ps::artifact::LabeledDoc d;
        d.p = o.p;
        d.measure = ps::vol::forward_measure(rec, o.p, m, weighting);
        d.label = thresholds_given
                      ? ps::vol::label_threshold(d.measure, o.min_thr, o.max_thr)
                      : (d.measure > 0.0 ? ps::vol::Sentiment::Positive
                                         : ps::vol::Sentiment::Negative);
        d.record = std::move(rec);
        out.push_back(std::move(d));
    }
    std::string cfg = "p=" + std::to_string(o.p) + " weighting=" + o.weighting;
    if (thresholds_given)
        cfg += " min_thr=" + ps::fmt_double(o.min_thr) + " max_thr=" + ps::fmt_double(o.max_thr);
    const std::string out_path = artifact_path(o, o.out, "labeled.jsonl");
    ps::artifact::write_labeled(out_path, make_meta(o, "labeled", cfg), out);

    size_t pos = 0, neg = 0, neu = 0;
    for (const auto& d : out) {
        if (d.label == ps::vol::Sentiment::Positive) ++pos;
        else if (d.label == ps::vol::Sentiment::Negative) ++neg;
        else ++neu;
    }
    std::cout << "labeled " << out.size() << " docs: " << pos << " positive, " << neg
              << " negative, " << neu << " neutral\nwrote " << out_path << "\n";
    return 0;
}

int run_featurize(const Options& o) {
    const std::string labeled_path = artifact_path(o, o.labeled, "labeled.jsonl");
    const auto labeled = ps::artifact::read_labeled(labeled_path);
    ps::check_contract(!labeled.empty(), "featurize: empty labeled dataset");

    std::vector<ps::pipe::PreparedDoc> docs;
    docs.reserve(labeled.size());
    for (const auto& d : labeled)
        docs.push_back(ps::pipe::prepare_doc(d.record.doc.headline + "\n" + d.record.doc.body,
                                             static_cast<int>(d.label)));

    std::vector<int> y;
    for (const auto& d : docs) y.push_back(d.label);
    const auto split = ps::eval::train_test_split(y, o.split, o.seed);

    const auto cfg = pipeline_config(o);
    const auto fitted_freq = ps::pipe::train_unigram_frequencies(docs, split.train, cfg.scheme);
    std::vector<ps::feat::TermCounts> train_terms;
    for (size_t i : split.train)
        train_terms.push_back(
            ps::pipe::doc_terms(docs[i], cfg.scheme, fitted_freq, cfg.min_unigram_freq));
    const auto vocab = ps::feat::build_vocabulary(train_terms, cfg.min_df);

    ps::artifact::FeatureFile f;
    f.scheme = o.scheme;
    f.vocab_size = vocab.size();
    f.vocab_checksum = vocab.checksum();
    f.classes = ps::eval::sorted_classes(y);
    std::vector<bool> test_mask(docs.size(), false);
    for (size_t i : split.test) test_mask[i] = true;
    for (size_t i = 0; i < docs.size(); ++i) {
        const auto terms =
            ps::pipe::doc_terms(docs[i], cfg.scheme, fitted_freq, cfg.min_unigram_freq);
        f.x.push_back(ps::feat::vectorize(terms, vocab, cfg.weighting_scheme(), cfg.weighting));
        f.y.push_back(docs[i].label);
        f.is_test.push_back(test_mask[i]);
    }

    const std::string detail = "scheme=" + o.scheme + " split=" + ps::fmt_double(o.split) +
                               " k1=" + ps::fmt_double(o.k1) + " b=" + ps::fmt_double(o.b) +
                               " standard_bm25=" + (o.standard_bm25 ? "1" : "0") +
                               " log_base=" + o.log_base +
                               " min_freq=" + std::to_string(o.min_freq) +
                               " min_df=" + std::to_string(o.min_df);
    const std::string feat_path = artifact_path(o, o.features, "features.txt");
    const std::string vocab_path = artifact_path(o, o.vocab, "vocab.txt");
    ps::artifact::write_features(feat_path, make_meta(o, "features", detail), f);
    ps::artifact::write_vocabulary(vocab_path, make_meta(o, "vocab", detail), vocab);
    std::cout << "vocabulary: " << vocab.size() << " terms, train " << split.train.size()
              << " / test " << split.test.size() << "\nwrote " << feat_path << " and "
              << vocab_path << "\n";
    return 0;
}

int run_train(const Options& o) {
    const std::string feat_path = artifact_path(o, o.features, "features.txt");
    const auto f = ps::artifact::read_features(feat_path);
    std::vector<ps::feat::FeatureVector> x;
    std::vector<int> y;
    for (size_t i = 0; i < f.x.size(); ++i) {
        if (f.is_test[i]) continue;
        x.push_back(f.x[i]);
        y.push_back(f.y[i]);
    }
    ps::check_contract(!x.empty(), "train: no training rows in features file");
    const auto cfg = pipeline_config(o);
    const auto classifier = ps::pipe::train_classifier(cfg, x, y, f.vocab_size);

    const std::string detail = "model=" + o.model + " alpha=" + ps::fmt_double(o.alpha) +
                               " C=" + ps::fmt_double(o.svm_c) + " scheme=" + f.scheme;
    const std::string out_path = artifact_path(o, o.out, "model.txt");
    ps::artifact::write_model(out_path, make_meta(o, "model", detail), classifier,
                              f.vocab_checksum, f.vocab_size);
    std::cout << "trained " << o.model << " on " << x.size() << " docs, wrote " << out_path
              << "\n";
    return 0;
}

int run_eval(const Options& o) {
    const std::string feat_path = artifact_path(o, o.features, "features.txt");
    const std::string model_path = artifact_path(o, o.model_file, "model.txt");
    const auto f = ps::artifact::read_features(feat_path);
    const auto m = ps::artifact::read_model(model_path);
    if (m.vocab_checksum != f.vocab_checksum)
        throw ps::mismatch_error("eval: model was trained against a different vocabulary (" +
                                 m.vocab_checksum + " vs " + f.vocab_checksum + ")");

    std::vector<int> y_true, y_pred;
    for (size_t i = 0; i < f.x.size(); ++i) {
        if (!f.is_test[i]) continue;
        y_true.push_back(f.y[i]);
        y_pred.push_back(m.classifier.predict(f.x[i]));
    }
    ps::check_contract(!y_true.empty(), "eval: no test rows in features file");
    const auto report = ps::eval::evaluate_predictions(y_true, y_pred, f.classes);

    const std::string out_path = artifact_path(o, o.out, "eval_report.txt");
    ps::artifact::write_report(out_path, make_meta(o, "eval", "features=" + f.scheme), report);
    print_report(std::cout, report);
    std::cout << "wrote " << out_path << "\n";
    return 0;
}

int run_sweep(const Options& o) {
    const std::string joined_path = artifact_path(o, o.joined, "joined.jsonl");
    const auto records = ps::artifact::read_joined(joined_path);
    ps::check_contract(!records.empty(), "sweep-p: empty joined dataset");

    std::map<std::string, ps::vol::GarchModel> models;
    const bool geometric = o.weighting != "uniform";
    if (geometric && o.p_max >= 1)
        models = ps::artifact::read_garch_models(artifact_path(o, o.garch, "garch_models.txt"));

    std::vector<ps::pipe::PreparedDoc> docs;
    docs.reserve(records.size());
    for (const auto& r : records)
        docs.push_back(ps::pipe::prepare_doc(r.doc.headline + "\n" + r.doc.body, 0));

    const auto weighting = geometric ? ps::vol::DecayWeighting::Geometric
                                     : ps::vol::DecayWeighting::Uniform;
    const auto result = ps::eval::sweep_p(records, docs, models, o.p_min, o.p_max,
                                          pipeline_config(o), o.split, o.seed, weighting);

    const std::string detail = "p_min=" + std::to_string(o.p_min) +
                               " p_max=" + std::to_string(o.p_max) + " scheme=" + o.scheme +
                               " model=" + o.model + " split=" + ps::fmt_double(o.split) +
                               " weighting=" + o.weighting;
    const std::string out_path = artifact_path(o, o.out, "sweep.txt");
    ps::artifact::write_sweep(out_path, make_meta(o, "sweep", detail), result);

    std::cout << "p    test accuracy\n";
    for (const auto& row : result.rows)
        std::cout << row.p << "    " << percent(row.test_accuracy) << "\n";
    std::cout << "best p: " << result.best_p << "\nwrote " << out_path << "\n";
    return 0;
}

int run_chunk(const Options& o) {
    const auto processed = ps::text::process_text(o.text);
    std::cout << "tokens:";
    for (const auto& t : processed.tokens)
        std::cout << " " << t.surface << "/" << ps::text::tag_name(t.tag);
    std::cout << "\n";
    for (const auto& k : processed.chunks) {
        std::cout << ps::text::rule_name(k.rule) << " [" << k.begin << "," << k.end << ") \""
                  << k.surface_text() << "\" -> \"" << k.normalized_text() << "\"\n";
    }
    return 0;
}

int run_report(const Options& o) {
    if (o.input.empty()) throw ps::contract_error("report: --in is required");
    const auto a = ps::artifact::parse_artifact(o.input);
    std::cout << "artifact: " << a.kind << " (seed " << a.seed << ")\nconfig: " << a.config
              << "\n\n";
    if (a.kind == "sweep") {
        std::cout << "p    test accuracy\n";
        for (const auto& line : a.lines) {
            const auto f = ps::split_ws(line);
            if (f.size() == 2 && ps::parse_int(f[0]))
                std::cout << f[0] << "    " << percent(*ps::parse_double(f[1])) << "\n";
            else if (f.size() == 2 && f[0] == "best_p")
                std::cout << "best p: " << f[1] << "\n";
        }
        return 0;
    }
    if (a.kind == "eval") {
        for (const auto& line : a.lines) {
            const auto f = ps::split_ws(line);
            if (f.size() == 2 && (f[0] == "accuracy" || f[0] == "macro_f1" ||
                                  f[0] == "weighted_f1"))
                std::cout << f[0] << ": " << percent(*ps::parse_double(f[1])) << "\n";
            else
                std::cout << line << "\n";
        }
        return 0;
    }
    // anything else: body verbatim
    for (const auto& line : a.lines) std::cout << line << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    Options o;
    try {
        const json cfg = load_config_json(argc, argv);
        seed_default(cfg, "workdir", o.workdir);
        seed_default(cfg, "news", o.news);
        seed_default(cfg, "prices", o.prices);
        seed_default(cfg, "scheme", o.scheme);
        seed_default(cfg, "model", o.model);
        seed_default(cfg, "p", o.p);
        seed_default(cfg, "p-min", o.p_min);
        seed_default(cfg, "p-max", o.p_max);
        seed_default(cfg, "folds", o.folds);
        seed_default(cfg, "seed", o.seed);
        seed_default(cfg, "split", o.split);
        seed_default(cfg, "k1", o.k1);
        seed_default(cfg, "b", o.b);
        seed_default(cfg, "standard-bm25", o.standard_bm25);
        seed_default(cfg, "log-base", o.log_base);
        seed_default(cfg, "min-thr", o.min_thr);
        seed_default(cfg, "max-thr", o.max_thr);
        seed_default(cfg, "min-freq", o.min_freq);
        seed_default(cfg, "min-df", o.min_df);
        seed_default(cfg, "alpha", o.alpha);
        seed_default(cfg, "C", o.svm_c);
        seed_default(cfg, "L", o.lookback);
        seed_default(cfg, "H", o.horizon);
        seed_default(cfg, "weighting", o.weighting);

        if (o.workdir.empty()) {
            const char* env = std::getenv("PRIVYSENSE_WORKDIR");
            o.workdir = env && *env ? env : ".";
        }

        CLI::App app{"price-volatility sentiment pipeline"};
        app.require_subcommand(1);
        app.set_help_all_flag("--help-all");
        app.add_option("--config", o.config_path, "JSON config file (flag > config > default)");
        app.add_option("--workdir", o.workdir, "artifact directory")->capture_default_str();
        app.add_option("--seed", o.seed, "RNG seed recorded in every artifact")
            ->capture_default_str();

        auto add_pipeline_flags = [&](CLI::App* cmd) {
            cmd->add_option("--scheme", o.scheme,
                            "feature scheme: presence|tf|tfidf|bm25|ngram")
                ->capture_default_str();
            cmd->add_option("--model", o.model, "classifier: svm|nb|bnb")
                ->capture_default_str();
            cmd->add_option("--alpha", o.alpha, "NB smoothing")->capture_default_str();
            cmd->add_option("--C", o.svm_c, "SVM regularization")->capture_default_str();
            cmd->add_option("--k1", o.k1, "BM25 k1")->capture_default_str();
            cmd->add_option("--b", o.b, "BM25 b")->capture_default_str();
            cmd->add_flag("--standard-bm25", o.standard_bm25,
                          "use the conventional BM25 denominator (+tf)");
            cmd->add_option("--log-base", o.log_base, "idf log base: e|10")
                ->check(CLI::IsMember({"e", "10"}))
                ->capture_default_str();
            cmd->add_option("--min-freq", o.min_freq,
                            "training-corpus unigram frequency threshold")
                ->capture_default_str();
            cmd->add_option("--min-df", o.min_df, "vocabulary document-frequency floor")
                ->capture_default_str();
        };

        auto* ingest = app.add_subcommand("ingest", "parse and join news/prices CSVs");
        ingest->add_option("--news", o.news, "news CSV path");
        ingest->add_option("--prices", o.prices, "prices CSV path");
        ingest->add_option("--L", o.lookback, "trading days before the anchor")
            ->capture_default_str();
        ingest->add_option("--H", o.horizon, "trading days after the anchor")
            ->capture_default_str();
        ingest->add_option("--out", o.out, "output path (default workdir/joined.jsonl)");

        auto* fit = app.add_subcommand("fit", "fit per-ticker GARCH(1,1) models");
        fit->add_option("--prices", o.prices, "prices CSV path");
        fit->add_option("--out", o.out, "output path (default workdir/garch_models.txt)");

        auto* label = app.add_subcommand("label", "assign sentiment labels from price movement");
        label->add_option("--joined", o.joined, "joined dataset path");
        label->add_option("--garch", o.garch, "fitted models path (needed for p >= 1)");
        label->add_option("--p", o.p, "horizon parameter 0..5")->capture_default_str();
        auto* min_thr_opt = label->add_option("--min-thr", o.min_thr, "neutral zone lower bound (< 0)");
        auto* max_thr_opt = label->add_option("--max-thr", o.max_thr, "neutral zone upper bound (> 0)");
        label->add_option("--weighting", o.weighting, "forward-return weights: geometric|uniform")
            ->check(CLI::IsMember({"geometric", "uniform"}))
            ->capture_default_str();
        label->add_option("--out", o.out, "output path (default workdir/labeled.jsonl)");
        min_thr_opt->needs(max_thr_opt);
        max_thr_opt->needs(min_thr_opt);

        auto* featurize = app.add_subcommand("featurize", "vectorize a labeled dataset");
        featurize->add_option("--labeled", o.labeled, "labeled dataset path");
        featurize->add_option("--split", o.split, "train fraction for the holdout split")
            ->capture_default_str();
        featurize->add_option("--features", o.features, "features output path");
        featurize->add_option("--vocab", o.vocab, "vocabulary output path");
        add_pipeline_flags(featurize);

        auto* train = app.add_subcommand("train", "train a classifier on the train split");
        train->add_option("--features", o.features, "features file path");
        train->add_option("--out", o.out, "model output path (default workdir/model.txt)");
        add_pipeline_flags(train);

        auto* eval_cmd = app.add_subcommand("eval", "evaluate a model on the test split");
        eval_cmd->add_option("--features", o.features, "features file path");
        eval_cmd->add_option("--model-file", o.model_file, "trained model path");
        eval_cmd->add_option("--out", o.out, "report output path");

        auto* sweep = app.add_subcommand("sweep-p", "relabel/retrain over p = p-min..p-max");
        sweep->add_option("--joined", o.joined, "joined dataset path");
        sweep->add_option("--garch", o.garch, "fitted models path");
        sweep->add_option("--p-min", o.p_min, "first p")->capture_default_str();
        sweep->add_option("--p-max", o.p_max, "last p")->capture_default_str();
        sweep->add_option("--split", o.split, "train fraction")->capture_default_str();
        sweep->add_option("--weighting", o.weighting, "geometric|uniform")
            ->check(CLI::IsMember({"geometric", "uniform"}))
            ->capture_default_str();
        sweep->add_option("--out", o.out, "output path (default workdir/sweep.txt)");
        add_pipeline_flags(sweep);

        auto* chunk = app.add_subcommand("chunk", "debug: tag and chunk a text argument");
        chunk->add_option("--text", o.text, "text to process")->required();

        auto* report = app.add_subcommand("report", "render an artifact as a table");
        report->add_option("--in", o.input, "artifact path");

        try {
            app.parse(argc, argv);
        } catch (const CLI::ParseError& e) {
            return app.exit(e) == 0 ? 0 : 2;
        }

        if (ingest->parsed()) return run_ingest(o);
        if (fit->parsed()) return run_fit(o);
        if (label->parsed()) return run_label(o, min_thr_opt->count() > 0 ||
                                                     (o.min_thr != 0.0 && o.max_thr != 0.0));
        if (featurize->parsed()) return run_featurize(o);
        if (train->parsed()) return run_train(o);
        if (eval_cmd->parsed()) return run_eval(o);
        if (sweep->parsed()) return run_sweep(o);
        if (chunk->parsed()) return run_chunk(o);
        if (report->parsed()) return run_report(o);
        return 2;
    } catch (const ps::input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ps::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
