#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "privysense/errors.hpp"
#include "privysense/metrics.hpp"
#include "privysense/pipeline.hpp"
#include "privysense/rng.hpp"
#include "privysense/volatility.hpp"

namespace privysense::eval {

struct SplitResult {
    std::vector<size_t> train;
    std::vector<size_t> test;
};

namespace detail {

// class label -> its example indices, classes in sorted label order
inline std::vector<std::pair<int, std::vector<size_t>>> group_by_class(
    const std::vector<int>& y) {
    std::map<int, std::vector<size_t>> groups;
    for (size_t i = 0; i < y.size(); ++i) groups[y[i]].push_back(i);
    return {groups.begin(), groups.end()};
}

}  // namespace detail

// Stratified holdout split. Per class the train share is round(fraction * n_c)
// clamped so both sides stay nonempty; indices come out sorted.
inline SplitResult train_test_split(const std::vector<int>& y, double fraction, uint64_t seed) {
    check_contract(fraction > 0.0 && fraction < 1.0, "split: fraction must be in (0,1)");
    check_contract(!y.empty(), "split: empty label vector");
    SplitResult out;
    Rng rng(seed);
    for (auto& [label, idx] : detail::group_by_class(y)) {
        if (idx.size() < 2)
            throw contract_error("split: class " + std::to_string(label) +
                                 " has fewer than 2 examples");
        rng.shuffle(idx);
        size_t n_train = static_cast<size_t>(
            std::llround(fraction * static_cast<double>(idx.size())));
        n_train = std::max<size_t>(1, std::min(n_train, idx.size() - 1));
        out.train.insert(out.train.end(), idx.begin(), idx.begin() + n_train);
        out.test.insert(out.test.end(), idx.begin() + n_train, idx.end());
    }
    std::sort(out.train.begin(), out.train.end());
    std::sort(out.test.begin(), out.test.end());
    return out;
}

struct FoldPlan {
    std::vector<std::vector<size_t>> folds;
    uint64_t seed = 0;
};

// Per class: shuffle, then deal round-robin, so every fold's class count is
// within one of the stratified ideal.
inline FoldPlan stratified_kfold(const std::vector<int>& y, int k, uint64_t seed) {
    check_contract(k >= 2, "kfold: k must be >= 2");
    FoldPlan plan;
    plan.seed = seed;
    plan.folds.assign(static_cast<size_t>(k), {});
    Rng rng(seed);
    for (auto& [label, idx] : detail::group_by_class(y)) {
        if (idx.size() < static_cast<size_t>(k))
            throw contract_error("kfold: class " + std::to_string(label) + " has " +
                                 std::to_string(idx.size()) + " examples, fewer than k=" +
                                 std::to_string(k));
        rng.shuffle(idx);
        for (size_t j = 0; j < idx.size(); ++j)
            plan.folds[j % static_cast<size_t>(k)].push_back(idx[j]);
    }
    for (auto& f : plan.folds) std::sort(f.begin(), f.end());
    return plan;
}

struct CVResult {
    std::vector<EvalReport> fold_reports;
    double mean_accuracy = 0.0;
    double mean_macro_f1 = 0.0;
};

inline std::vector<int> sorted_classes(const std::vector<int>& y) {
    std::set<int> s(y.begin(), y.end());
    return {s.begin(), s.end()};
}

// k-fold CV with the vocabulary and frequency thresholds rebuilt inside each
// training fold.
inline CVResult cross_validate(const std::vector<pipe::PreparedDoc>& docs,
                               const pipe::PipelineConfig& cfg, int k, uint64_t seed) {
    std::vector<int> y;
    y.reserve(docs.size());
    for (const auto& d : docs) y.push_back(d.label);
    const std::vector<int> classes = sorted_classes(y);
    const FoldPlan plan = stratified_kfold(y, k, seed);

    CVResult res;
    for (size_t f = 0; f < plan.folds.size(); ++f) {
        std::vector<size_t> train_idx;
        for (size_t g = 0; g < plan.folds.size(); ++g)
            if (g != f) train_idx.insert(train_idx.end(), plan.folds[g].begin(),
                                         plan.folds[g].end());
        std::sort(train_idx.begin(), train_idx.end());
        try {
            const pipe::FittedPipeline fitted = pipe::fit_pipeline(cfg, docs, train_idx);
            std::vector<int> y_true, y_pred;
            y_true.reserve(plan.folds[f].size());
            for (size_t i : plan.folds[f]) {
                y_true.push_back(docs[i].label);
                y_pred.push_back(pipe::predict_doc(fitted, cfg, docs[i]));
            }
            res.fold_reports.push_back(evaluate_predictions(y_true, y_pred, classes));
        } catch (const error& e) {
            throw contract_error("fold " + std::to_string(f) + ": " + e.what());
        }
    }
    for (const EvalReport& r : res.fold_reports) {
        res.mean_accuracy += r.accuracy;
        res.mean_macro_f1 += r.macro_f1;
    }
    res.mean_accuracy /= static_cast<double>(res.fold_reports.size());
    res.mean_macro_f1 /= static_cast<double>(res.fold_reports.size());
    return res;
}

struct GridResult {
    size_t best_index = 0;
    std::vector<std::pair<std::string, double>> table;  // (config description, mean accuracy)
    CVResult best_cv;
};

// Highest mean CV accuracy wins; ties go to the earliest grid point.
inline GridResult grid_search(const std::vector<pipe::PreparedDoc>& docs,
                              const std::vector<pipe::PipelineConfig>& grid, int k,
                              uint64_t seed) {
    check_contract(!grid.empty(), "grid_search: empty grid");
    GridResult out;
    double best_acc = -1.0;
    for (size_t g = 0; g < grid.size(); ++g) {
        CVResult cv = cross_validate(docs, grid[g], k, seed);
        out.table.emplace_back(grid[g].describe(), cv.mean_accuracy);
        if (cv.mean_accuracy > best_acc) {
            best_acc = cv.mean_accuracy;
            out.best_index = g;
            out.best_cv = std::move(cv);
        }
    }
    return out;
}

struct SweepRow {
    int p = 0;
    double test_accuracy = 0.0;
    EvalReport report;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    int best_p = 0;
};

// Relabels the same joined documents for every p in [p_min, p_max], retrains
// the fixed classifier config on a split held constant across p, and reports
// per-p test accuracy. The split is stratified on the p_min labels.
inline SweepResult sweep_p(const std::vector<ingest::JoinedRecord>& records,
                           const std::vector<pipe::PreparedDoc>& docs,
                           const std::map<std::string, vol::GarchModel>& models,
                           int p_min, int p_max, const pipe::PipelineConfig& cfg,
                           double split_fraction, uint64_t seed,
                           vol::DecayWeighting weighting = vol::DecayWeighting::Geometric) {
    check_contract(records.size() == docs.size(), "sweep_p: records/docs mismatch");
    check_contract(p_min >= 0 && p_max >= p_min && p_max <= 5, "sweep_p: bad p range");

    auto labels_for = [&](int p) {
        std::vector<int> y(records.size());
        for (size_t i = 0; i < records.size(); ++i) {
            const vol::GarchModel* m = nullptr;
            if (p >= 1 && weighting == vol::DecayWeighting::Geometric) {
                auto it = models.find(records[i].doc.ticker);
                check_contract(it != models.end(), "sweep_p: no fitted model for ticker " +
                                                       records[i].doc.ticker);
                m = &it->second;
            }
            y[i] = static_cast<int>(vol::label_binary(records[i], p, m, weighting));
        }
        return y;
    };

    const SplitResult split = train_test_split(labels_for(p_min), split_fraction, seed);

    SweepResult out;
    double best_acc = -1.0;
    for (int p = p_min; p <= p_max; ++p) {
        const std::vector<int> y = labels_for(p);
        std::vector<pipe::PreparedDoc> relabeled = docs;
        for (size_t i = 0; i < relabeled.size(); ++i) relabeled[i].label = y[i];
        const pipe::FittedPipeline fitted = pipe::fit_pipeline(cfg, relabeled, split.train);
        std::vector<int> y_true, y_pred;
        for (size_t i : split.test) {
            y_true.push_back(y[i]);
            y_pred.push_back(pipe::predict_doc(fitted, cfg, relabeled[i]));
        }
        SweepRow row;
        row.p = p;
        row.report = evaluate_predictions(y_true, y_pred, sorted_classes(y));
        row.test_accuracy = row.report.accuracy;
        if (row.test_accuracy > best_acc) {
            best_acc = row.test_accuracy;
            out.best_p = p;
        }
        out.rows.push_back(std::move(row));
    }
    return out;
}

}  // namespace privysense::eval
