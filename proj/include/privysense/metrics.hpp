#pragma once

#include <algorithm>
#include <vector>

#include "privysense/errors.hpp"

namespace privysense::eval {

// Evaluation summary in the shape the reports print: accuracy, per-class
// precision/recall/F1, macro and support-weighted F1, confusion matrix raw
// and row-normalized. 0/0 ratios are defined as 0; zero-support rows of the
// normalized matrix stay all-zero and are flagged.
struct EvalReport {
    std::vector<int> classes;
    std::vector<std::vector<long>> confusion;         // [true][pred]
    std::vector<std::vector<double>> confusion_norm;  // rows sum to 1 (or 0)
    std::vector<double> precision;
    std::vector<double> recall;
    std::vector<double> f1;
    std::vector<bool> zero_support;
    double accuracy = 0.0;
    double macro_f1 = 0.0;
    double weighted_f1 = 0.0;
    long n_test = 0;
};

inline EvalReport report_from_confusion(const std::vector<std::vector<long>>& confusion,
                                        const std::vector<int>& classes) {
    const size_t k = classes.size();
    check_contract(confusion.size() == k, "report: confusion size mismatch");
    EvalReport r;
    r.classes = classes;
    r.confusion = confusion;
    r.confusion_norm.assign(k, std::vector<double>(k, 0.0));
    r.precision.assign(k, 0.0);
    r.recall.assign(k, 0.0);
    r.f1.assign(k, 0.0);
    r.zero_support.assign(k, false);

    long total = 0, correct = 0;
    std::vector<long> row_sum(k, 0), col_sum(k, 0);
    for (size_t i = 0; i < k; ++i) {
        check_contract(confusion[i].size() == k, "report: confusion row size mismatch");
        for (size_t j = 0; j < k; ++j) {
            row_sum[i] += confusion[i][j];
            col_sum[j] += confusion[i][j];
            total += confusion[i][j];
        }
        correct += confusion[i][i];
    }
    r.n_test = total;
    r.accuracy = total > 0 ? static_cast<double>(correct) / static_cast<double>(total) : 0.0;

    double weighted = 0.0;
    for (size_t i = 0; i < k; ++i) {
        if (row_sum[i] == 0) {
            r.zero_support[i] = true;
        } else {
            for (size_t j = 0; j < k; ++j)
                r.confusion_norm[i][j] =
                    static_cast<double>(confusion[i][j]) / static_cast<double>(row_sum[i]);
        }
        const double tp = static_cast<double>(confusion[i][i]);
        r.precision[i] = col_sum[i] > 0 ? tp / static_cast<double>(col_sum[i]) : 0.0;
        r.recall[i] = row_sum[i] > 0 ? tp / static_cast<double>(row_sum[i]) : 0.0;
        const double pr = r.precision[i] + r.recall[i];
        r.f1[i] = pr > 0.0 ? 2.0 * r.precision[i] * r.recall[i] / pr : 0.0;
        r.macro_f1 += r.f1[i];
        weighted += r.f1[i] * static_cast<double>(row_sum[i]);
    }
    r.macro_f1 /= static_cast<double>(k);
    r.weighted_f1 = total > 0 ? weighted / static_cast<double>(total) : 0.0;
    return r;
}

inline EvalReport evaluate_predictions(const std::vector<int>& y_true,
                                       const std::vector<int>& y_pred,
                                       const std::vector<int>& classes) {
    check_contract(y_true.size() == y_pred.size(), "evaluate: prediction count mismatch");
    const size_t k = classes.size();
    auto class_of = [&](int label) {
        auto it = std::lower_bound(classes.begin(), classes.end(), label);
        check_contract(it != classes.end() && *it == label, "evaluate: unknown class label");
        return static_cast<size_t>(it - classes.begin());
    };
    std::vector<std::vector<long>> confusion(k, std::vector<long>(k, 0));
    for (size_t i = 0; i < y_true.size(); ++i)
        ++confusion[class_of(y_true[i])][class_of(y_pred[i])];
    return report_from_confusion(confusion, classes);
}

}  // namespace privysense::eval
