#pragma once

#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "privysense/errors.hpp"
#include "privysense/eval.hpp"
#include "privysense/features.hpp"
#include "privysense/ingest.hpp"
#include "privysense/metrics.hpp"
#include "privysense/models.hpp"
#include "privysense/pipeline.hpp"
#include "privysense/strutil.hpp"
#include "privysense/volatility.hpp"

// Artifact files. Every artifact starts with a '#'-prefixed header block:
//
//   #privysense <kind> v1
//   #config <canonical key=value list>
//   #config_hash <fnv1a-64 of the config line>
//   #seed <n>
//   #written_at <utc timestamp>
//
// Re-running a command with identical inputs and config reproduces every
// artifact byte for byte except the #written_at line. All files are UTF-8
// with LF line endings and are written atomically (temp file + rename).

namespace privysense::artifact {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

struct Meta {
    std::string kind;
    std::string config;  // canonical "k=v k=v" summary
    uint64_t seed = 0;
};

inline std::string utc_now_string() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

inline std::string header_block(const Meta& meta) {
    std::string h;
    h += "#privysense " + meta.kind + " v1\n";
    h += "#config " + meta.config + "\n";
    h += "#config_hash " + fnv1a_hex(meta.config) + "\n";
    h += "#seed " + std::to_string(meta.seed) + "\n";
    h += "#written_at " + utc_now_string() + "\n";
    return h;
}

inline void atomic_write(const std::string& path, const std::string& content) {
    const fs::path target(path);
    if (target.has_parent_path()) fs::create_directories(target.parent_path());
    const fs::path tmp = target.string() + ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw io_error("cannot open for writing: " + tmp.string());
        out << content;
        out.flush();
        if (!out) throw io_error("write failed: " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp);
        throw io_error("rename failed for " + path + ": " + ec.message());
    }
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct ParsedArtifact {
    std::string kind;
    std::string config;
    uint64_t seed = 0;
    std::vector<std::string> lines;  // body lines, header stripped
};

inline ParsedArtifact parse_artifact(const std::string& path) {
    ParsedArtifact a;
    const std::string content = read_file(path);
    std::istringstream in(content);
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty() && line[0] == '#') {
            if (first) {
                const auto parts = split_ws(line);
                if (parts.size() < 2 || parts[0] != "#privysense")
                    throw schema_error(path + ": not a privysense artifact");
                a.kind = std::string(parts[1]);
                first = false;
            } else if (line.rfind("#config ", 0) == 0) {
                a.config = line.substr(8);
            } else if (line.rfind("#seed ", 0) == 0) {
                auto v = parse_int(line.substr(6));
                if (v) a.seed = static_cast<uint64_t>(*v);
            }
            continue;
        }
        if (first) throw schema_error(path + ": missing artifact header");
        a.lines.push_back(line);
    }
    return a;
}

// --- joined / labeled news datasets (JSON lines) ----------------------------

inline json joined_to_json(const ingest::JoinedRecord& r) {
    json j;
    j["ticker"] = r.doc.ticker;
    j["exchange"] = r.doc.exchange;
    j["date"] = r.doc.date;
    j["headline"] = r.doc.headline;
    j["body"] = r.doc.body;
    j["rank"] = ingest::rank_name(r.doc.rank);
    j["anchor_index"] = r.anchor_index;
    j["anchor_date"] = r.anchor_date();
    json closes = json::array();
    for (const auto& c : r.closes) closes.push_back(json::array({c.date, c.close}));
    j["closes"] = std::move(closes);
    return j;
}

inline ingest::JoinedRecord joined_from_json(const json& j) {
    ingest::JoinedRecord r;
    r.doc.ticker = j.at("ticker").get<std::string>();
    r.doc.exchange = j.at("exchange").get<std::string>();
    r.doc.date = j.at("date").get<Date>();
    r.doc.headline = j.at("headline").get<std::string>();
    r.doc.body = j.at("body").get<std::string>();
    r.doc.rank = ingest::parse_rank(j.at("rank").get<std::string>());
    r.anchor_index = j.at("anchor_index").get<size_t>();
    for (const auto& c : j.at("closes"))
        r.closes.push_back({c.at(0).get<Date>(), c.at(1).get<double>()});
    if (r.anchor_index >= r.closes.size())
        throw schema_error("joined record: anchor_index out of range");
    return r;
}

inline void write_joined(const std::string& path, const Meta& meta,
                         const std::vector<ingest::JoinedRecord>& records) {
    std::string body = header_block(meta);
    for (const auto& r : records) {
        body += joined_to_json(r).dump();
        body.push_back('\n');
    }
    atomic_write(path, body);
}

inline std::vector<ingest::JoinedRecord> read_joined(const std::string& path) {
    const ParsedArtifact a = parse_artifact(path);
    if (a.kind != "joined" && a.kind != "labeled")
        throw schema_error(path + ": expected a joined/labeled dataset, got " + a.kind);
    std::vector<ingest::JoinedRecord> out;
    for (const std::string& line : a.lines) {
        if (line.empty()) continue;
        out.push_back(joined_from_json(json::parse(line)));
    }
    return out;
}

struct LabeledDoc {
    ingest::JoinedRecord record;
    int p = 0;
    double measure = 0.0;
    vol::Sentiment label = vol::Sentiment::Negative;
};

inline void write_labeled(const std::string& path, const Meta& meta,
                          const std::vector<LabeledDoc>& docs) {
    std::string body = header_block(meta);
    for (const auto& d : docs) {
        json j = joined_to_json(d.record);
        j["p"] = d.p;
        j["measure"] = d.measure;
        j["label"] = vol::sentiment_name(d.label);
        body += j.dump();
        body.push_back('\n');
    }
    atomic_write(path, body);
}

inline vol::Sentiment sentiment_from_name(const std::string& s) {
    if (s == "Positive") return vol::Sentiment::Positive;
    if (s == "Negative") return vol::Sentiment::Negative;
    if (s == "Neutral") return vol::Sentiment::Neutral;
    throw schema_error("unknown sentiment label: " + s);
}

inline std::vector<LabeledDoc> read_labeled(const std::string& path) {
    const ParsedArtifact a = parse_artifact(path);
    if (a.kind != "labeled")
        throw schema_error(path + ": expected a labeled dataset, got " + a.kind);
    std::vector<LabeledDoc> out;
    for (const std::string& line : a.lines) {
        if (line.empty()) continue;
        const json j = json::parse(line);
        LabeledDoc d;
        d.record = joined_from_json(j);
        d.p = j.at("p").get<int>();
        d.measure = j.at("measure").get<double>();
        d.label = sentiment_from_name(j.at("label").get<std::string>());
        out.push_back(std::move(d));
    }
    return out;
}

// --- per-ticker GARCH model file --------------------------------------------

inline void write_garch_models(const std::string& path, const Meta& meta,
                               const std::map<std::string, vol::GarchModel>& models) {
    std::string body = header_block(meta);
    body += "ticker omega alpha beta loglik n\n";
    for (const auto& [ticker, m] : models) {
        body += ticker + " " + fmt_double(m.omega) + " " + fmt_double(m.alpha) + " " +
                fmt_double(m.beta) + " " + fmt_double(m.loglik) + " " +
                std::to_string(m.n_obs) + "\n";
    }
    atomic_write(path, body);
}

inline std::map<std::string, vol::GarchModel> read_garch_models(const std::string& path) {
    const ParsedArtifact a = parse_artifact(path);
    if (a.kind != "garch") throw schema_error(path + ": expected garch models, got " + a.kind);
    std::map<std::string, vol::GarchModel> out;
    for (const std::string& line : a.lines) {
        if (line.empty() || line.rfind("ticker ", 0) == 0) continue;
        const auto f = split_ws(line);
        if (f.size() != 6) throw schema_error(path + ": malformed garch row: " + line);
        vol::GarchModel m;
        auto num = [&](size_t i) {
            auto v = parse_double(f[i]);
            if (!v) throw schema_error(path + ": bad number in garch row: " + line);
            return *v;
        };
        m.omega = num(1);
        m.alpha = num(2);
        m.beta = num(3);
        m.loglik = num(4);
        m.n_obs = static_cast<int>(num(5));
        out.emplace(std::string(f[0]), m);
    }
    return out;
}

// --- sparse feature matrix + vocabulary --------------------------------------

struct FeatureFile {
    std::vector<int> classes;
    std::string vocab_checksum;
    size_t vocab_size = 0;
    std::string scheme;
    // parallel arrays, one entry per document
    std::vector<feat::FeatureVector> x;
    std::vector<int> y;
    std::vector<bool> is_test;
};

inline void write_features(const std::string& path, const Meta& meta, const FeatureFile& f) {
    std::string body = header_block(meta);
    body += "#scheme " + f.scheme + "\n";
    body += "#V " + std::to_string(f.vocab_size) + "\n";
    body += "#vocab_checksum " + f.vocab_checksum + "\n";
    std::string classes_line = "#classes";
    for (int c : f.classes) classes_line += " " + std::to_string(c);
    body += classes_line + "\n";
    for (size_t i = 0; i < f.x.size(); ++i) {
        body += f.is_test[i] ? "test " : "train ";
        body += std::to_string(f.y[i]);
        for (const auto& e : f.x[i])
            body += " " + std::to_string(e.index) + ":" + fmt_double(e.weight);
        body.push_back('\n');
    }
    atomic_write(path, body);
}

inline FeatureFile read_features(const std::string& path) {
    const std::string content = read_file(path);
    std::istringstream in(content);
    std::string line;
    FeatureFile f;
    bool saw_magic = false;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            if (line.rfind("#privysense features", 0) == 0) saw_magic = true;
            else if (line.rfind("#scheme ", 0) == 0) f.scheme = line.substr(8);
            else if (line.rfind("#V ", 0) == 0) {
                auto v = parse_int(line.substr(3));
                if (!v) throw schema_error(path + ": bad #V line");
                f.vocab_size = static_cast<size_t>(*v);
            } else if (line.rfind("#vocab_checksum ", 0) == 0) {
                f.vocab_checksum = line.substr(16);
            } else if (line.rfind("#classes", 0) == 0) {
                for (auto tok : split_ws(line.substr(8))) {
                    auto v = parse_int(tok);
                    if (!v) throw schema_error(path + ": bad #classes line");
                    f.classes.push_back(static_cast<int>(*v));
                }
            }
            continue;
        }
        if (!saw_magic) throw schema_error(path + ": not a features artifact");
        const auto toks = split_ws(line);
        if (toks.size() < 2) throw schema_error(path + ": malformed feature row: " + line);
        if (toks[0] != "train" && toks[0] != "test")
            throw schema_error(path + ": row must start with train/test");
        f.is_test.push_back(toks[0] == "test");
        auto label = parse_int(toks[1]);
        if (!label) throw schema_error(path + ": bad label in row: " + line);
        f.y.push_back(static_cast<int>(*label));
        feat::FeatureVector vec;
        for (size_t i = 2; i < toks.size(); ++i) {
            const auto colon = toks[i].find(':');
            if (colon == std::string_view::npos)
                throw schema_error(path + ": bad index:weight pair: " + std::string(toks[i]));
            auto idx = parse_int(toks[i].substr(0, colon));
            auto w = parse_double(toks[i].substr(colon + 1));
            if (!idx || !w || static_cast<size_t>(*idx) >= f.vocab_size)
                throw schema_error(path + ": bad index:weight pair: " + std::string(toks[i]));
            vec.push_back({static_cast<size_t>(*idx), *w});
        }
        f.x.push_back(std::move(vec));
    }
    if (!saw_magic) throw schema_error(path + ": not a features artifact");
    return f;
}

inline void write_vocabulary(const std::string& path, const Meta& meta,
                             const feat::Vocabulary& v) {
    std::string body = header_block(meta);
    body += "#N " + std::to_string(v.n_docs) + "\n";
    body += "#avgdl " + fmt_double(v.avgdl) + "\n";
    body += "#checksum " + v.checksum() + "\n";
    for (size_t i = 0; i < v.terms.size(); ++i)
        body += std::to_string(i) + "\t" + v.terms[i] + "\t" + std::to_string(v.df[i]) + "\n";
    atomic_write(path, body);
}

inline feat::Vocabulary read_vocabulary(const std::string& path) {
    const std::string content = read_file(path);
    std::istringstream in(content);
    std::string line;
    feat::Vocabulary v;
    bool saw_magic = false;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            if (line.rfind("#privysense vocab", 0) == 0) saw_magic = true;
            else if (line.rfind("#N ", 0) == 0) v.n_docs = *parse_int(line.substr(3));
            else if (line.rfind("#avgdl ", 0) == 0) v.avgdl = *parse_double(line.substr(7));
            continue;
        }
        if (!saw_magic) throw schema_error(path + ": not a vocabulary artifact");
        const auto f = split(line, '\t');
        if (f.size() != 3) throw schema_error(path + ": malformed vocabulary row: " + line);
        auto idx = parse_int(f[0]);
        auto df = parse_int(f[2]);
        if (!idx || !df || static_cast<size_t>(*idx) != v.terms.size())
            throw schema_error(path + ": vocabulary rows must be dense and ordered");
        v.index.emplace(std::string(f[1]), v.terms.size());
        v.terms.emplace_back(f[1]);
        v.df.push_back(*df);
    }
    if (!saw_magic) throw schema_error(path + ": not a vocabulary artifact");
    return v;
}

// --- trained classifier files -------------------------------------------------

inline void write_model(const std::string& path, const Meta& meta,
                        const pipe::TrainedClassifier& t, const std::string& vocab_checksum,
                        size_t vocab_size) {
    std::string body = header_block(meta);
    body += "model " + std::string(pipe::model_kind_name(t.kind)) + "\n";
    body += "vocab_checksum " + vocab_checksum + "\n";
    body += "vocab_size " + std::to_string(vocab_size) + "\n";
    if (t.kind == pipe::ModelKind::SVM) {
        std::string classes = "classes";
        for (int c : t.svm.classes) classes += " " + std::to_string(c);
        body += classes + "\n";
        body += "C " + fmt_double(t.svm.models.empty() ? 1.0 : t.svm.models[0].c) + "\n";
        body += "binary_models " + std::to_string(t.svm.models.size()) + "\n";
        for (const auto& m : t.svm.models) {
            body += "bias " + fmt_double(m.bias) + "\n";
            body += "weights " + std::to_string(m.weights.size()) + "\n";
            for (double w : m.weights) {
                body += fmt_double(w);
                body.push_back('\n');
            }
        }
    } else {
        std::string classes = "classes";
        for (int c : t.nb.classes) classes += " " + std::to_string(c);
        body += classes + "\n";
        body += "alpha " + fmt_double(t.nb.alpha) + "\n";
        std::string priors = "log_prior";
        for (double p : t.nb.log_prior) priors += " " + fmt_double(p);
        body += priors + "\n";
        const bool bernoulli = t.nb.variant == model::NBVariant::Bernoulli;
        for (size_t c = 0; c < t.nb.classes.size(); ++c) {
            body += "class " + std::to_string(t.nb.classes[c]) + "\n";
            for (size_t i = 0; i < t.nb.log_likelihood[c].size(); ++i) {
                body += fmt_double(t.nb.log_likelihood[c][i]);
                if (bernoulli) body += " " + fmt_double(t.nb.log_one_minus[c][i]);
                body.push_back('\n');
            }
        }
    }
    atomic_write(path, body);
}

struct ModelFile {
    pipe::TrainedClassifier classifier;
    std::string vocab_checksum;
    size_t vocab_size = 0;
};

inline ModelFile read_model(const std::string& path) {
    const ParsedArtifact a = parse_artifact(path);
    if (a.kind != "model") throw schema_error(path + ": expected a model artifact, got " + a.kind);
    ModelFile out;
    size_t pos = 0;
    auto next_line = [&]() -> const std::string& {
        while (pos < a.lines.size() && a.lines[pos].empty()) ++pos;
        if (pos >= a.lines.size()) throw schema_error(path + ": truncated model file");
        return a.lines[pos++];
    };
    auto expect_kv = [&](const std::string& key) {
        const std::string& l = next_line();
        if (l.rfind(key + " ", 0) != 0)
            throw schema_error(path + ": expected '" + key + "', got: " + l);
        return l.substr(key.size() + 1);
    };
    const std::string kind = expect_kv("model");
    out.vocab_checksum = expect_kv("vocab_checksum");
    out.vocab_size = static_cast<size_t>(*parse_int(expect_kv("vocab_size")));
    std::vector<int> classes;
    for (auto tok : split_ws(expect_kv("classes")))
        classes.push_back(static_cast<int>(*parse_int(tok)));
    if (classes.size() < 2) throw schema_error(path + ": model needs >= 2 classes");

    if (kind == "svm") {
        out.classifier.kind = pipe::ModelKind::SVM;
        out.classifier.svm.classes = classes;
        const double c = *parse_double(expect_kv("C"));
        const size_t n_models = static_cast<size_t>(*parse_int(expect_kv("binary_models")));
        for (size_t m = 0; m < n_models; ++m) {
            model::SVMModel sm;
            sm.c = c;
            sm.bias = *parse_double(expect_kv("bias"));
            const size_t n_w = static_cast<size_t>(*parse_int(expect_kv("weights")));
            sm.weights.reserve(n_w);
            for (size_t i = 0; i < n_w; ++i) {
                auto v = parse_double(next_line());
                if (!v) throw schema_error(path + ": bad weight value");
                sm.weights.push_back(*v);
            }
            out.classifier.svm.models.push_back(std::move(sm));
        }
    } else if (kind == "nb" || kind == "bnb") {
        out.classifier.kind =
            kind == "nb" ? pipe::ModelKind::MultinomialNB : pipe::ModelKind::BernoulliNB;
        model::NBModel& nb = out.classifier.nb;
        nb.variant = kind == "nb" ? model::NBVariant::Multinomial : model::NBVariant::Bernoulli;
        nb.classes = classes;
        nb.vocab_size = out.vocab_size;
        nb.alpha = *parse_double(expect_kv("alpha"));
        for (auto tok : split_ws(expect_kv("log_prior")))
            nb.log_prior.push_back(*parse_double(tok));
        const bool bernoulli = nb.variant == model::NBVariant::Bernoulli;
        nb.log_likelihood.assign(classes.size(), {});
        if (bernoulli) {
            nb.log_one_minus.assign(classes.size(), {});
            nb.absent_sum.assign(classes.size(), 0.0);
        }
        for (size_t c = 0; c < classes.size(); ++c) {
            expect_kv("class");
            nb.log_likelihood[c].reserve(out.vocab_size);
            for (size_t i = 0; i < out.vocab_size; ++i) {
                const std::string& l = next_line();
                const auto toks = split_ws(l);
                if (toks.empty()) throw schema_error(path + ": bad likelihood row");
                nb.log_likelihood[c].push_back(*parse_double(toks[0]));
                if (bernoulli) {
                    if (toks.size() < 2) throw schema_error(path + ": bad bernoulli row");
                    nb.log_one_minus[c].push_back(*parse_double(toks[1]));
                    nb.absent_sum[c] += nb.log_one_minus[c].back();
                }
            }
        }
    } else {
        throw schema_error(path + ": unknown model kind " + kind);
    }
    return out;
}

// --- evaluation reports --------------------------------------------------------

inline void write_report(const std::string& path, const Meta& meta,
                         const eval::EvalReport& r) {
    std::string body = header_block(meta);
    body += "n_test " + std::to_string(r.n_test) + "\n";
    body += "accuracy " + fmt_double(r.accuracy) + "\n";
    body += "macro_f1 " + fmt_double(r.macro_f1) + "\n";
    body += "weighted_f1 " + fmt_double(r.weighted_f1) + "\n";
    std::string classes = "classes";
    for (int c : r.classes) classes += " " + std::to_string(c);
    body += classes + "\n";
    auto vec_line = [&](const char* name, const std::vector<double>& v) {
        std::string l = name;
        for (double x : v) l += " " + fmt_double(x);
        return l + "\n";
    };
    body += vec_line("precision", r.precision);
    body += vec_line("recall", r.recall);
    body += vec_line("f1", r.f1);
    body += "confusion_raw\n";
    for (const auto& row : r.confusion) {
        std::string l;
        for (long v : row) l += (l.empty() ? "" : " ") + std::to_string(v);
        body += l + "\n";
    }
    body += "confusion_norm\n";
    for (const auto& row : r.confusion_norm) {
        std::string l;
        for (double v : row) l += (l.empty() ? "" : " ") + fmt_double(v);
        body += l + "\n";
    }
    atomic_write(path, body);
}

inline void write_sweep(const std::string& path, const Meta& meta,
                        const eval::SweepResult& s) {
    std::string body = header_block(meta);
    body += "best_p " + std::to_string(s.best_p) + "\n";
    body += "p test_accuracy\n";
    for (const auto& row : s.rows)
        body += std::to_string(row.p) + " " + fmt_double(row.test_accuracy) + "\n";
    atomic_write(path, body);
}

}  // namespace privysense::artifact
