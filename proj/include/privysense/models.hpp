#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "privysense/errors.hpp"
#include "privysense/features.hpp"
#include "privysense/rng.hpp"

namespace privysense::model {

using feat::FeatureVector;

enum class NBVariant { Multinomial, Bernoulli };

// Naive Bayes over sparse vectors. Multinomial treats weights as
// (possibly fractional) occurrence counts; Bernoulli looks only at term
// presence and scores absent vocabulary terms too.
struct NBModel {
    NBVariant variant = NBVariant::Multinomial;
    double alpha = 1.0;
    size_t vocab_size = 0;
    std::vector<int> classes;                          // sorted ascending
    std::vector<double> log_prior;                     // per class
    std::vector<std::vector<double>> log_likelihood;   // class x term
    // Bernoulli: log p and log(1-p) per class/term plus the all-absent sum
    std::vector<std::vector<double>> log_one_minus;
    std::vector<double> absent_sum;
};

inline NBModel train_nb(const std::vector<FeatureVector>& x, const std::vector<int>& y,
                        size_t vocab_size, NBVariant variant = NBVariant::Multinomial,
                        double alpha = 1.0) {
    check_contract(x.size() == y.size() && !x.empty(), "train_nb: need parallel nonempty x,y");
    check_contract(alpha > 0.0, "train_nb: alpha must be positive");
    NBModel m;
    m.variant = variant;
    m.alpha = alpha;
    m.vocab_size = vocab_size;
    m.classes = y;
    std::sort(m.classes.begin(), m.classes.end());
    m.classes.erase(std::unique(m.classes.begin(), m.classes.end()), m.classes.end());
    check_contract(m.classes.size() >= 2, "train_nb: need at least two classes");

    const size_t k = m.classes.size();
    auto class_of = [&](int label) {
        return static_cast<size_t>(
            std::lower_bound(m.classes.begin(), m.classes.end(), label) - m.classes.begin());
    };

    std::vector<double> n_c(k, 0.0);
    std::vector<std::vector<double>> counts(k, std::vector<double>(vocab_size, 0.0));
    for (size_t i = 0; i < x.size(); ++i) {
        const size_t c = class_of(y[i]);
        n_c[c] += 1.0;
        for (const auto& e : x[i]) {
            check_contract(e.index < vocab_size, "train_nb: feature index out of range");
            counts[c][e.index] += variant == NBVariant::Multinomial
                                      ? e.weight
                                      : (e.weight != 0.0 ? 1.0 : 0.0);
        }
    }
    m.log_prior.resize(k);
    m.log_likelihood.assign(k, std::vector<double>(vocab_size, 0.0));
    if (variant == NBVariant::Bernoulli) {
        m.log_one_minus.assign(k, std::vector<double>(vocab_size, 0.0));
        m.absent_sum.assign(k, 0.0);
    }
    const double n_total = static_cast<double>(x.size());
    for (size_t c = 0; c < k; ++c) {
        m.log_prior[c] = std::log(n_c[c] / n_total);
        if (variant == NBVariant::Multinomial) {
            double total = 0.0;
            for (double v : counts[c]) total += v;
            const double denom = total + alpha * static_cast<double>(vocab_size);
            for (size_t t = 0; t < vocab_size; ++t)
                m.log_likelihood[c][t] = std::log((counts[c][t] + alpha) / denom);
        } else {
            for (size_t t = 0; t < vocab_size; ++t) {
                const double p = (counts[c][t] + alpha) / (n_c[c] + 2.0 * alpha);
                m.log_likelihood[c][t] = std::log(p);
                m.log_one_minus[c][t] = std::log1p(-p);
                m.absent_sum[c] += m.log_one_minus[c][t];
            }
        }
    }
    return m;
}

inline std::vector<double> nb_scores(const NBModel& m, const FeatureVector& x) {
    const size_t k = m.classes.size();
    std::vector<double> s(k);
    for (size_t c = 0; c < k; ++c) {
        double v = m.log_prior[c];
        if (m.variant == NBVariant::Multinomial) {
            for (const auto& e : x) v += e.weight * m.log_likelihood[c][e.index];
        } else {
            v += m.absent_sum[c];
            for (const auto& e : x)
                if (e.weight != 0.0)
                    v += m.log_likelihood[c][e.index] - m.log_one_minus[c][e.index];
        }
        s[c] = v;
    }
    return s;
}

// argmax posterior; ties break toward the lower class index
inline int nb_predict(const NBModel& m, const FeatureVector& x) {
    const std::vector<double> s = nb_scores(m, x);
    size_t best = 0;
    for (size_t c = 1; c < s.size(); ++c)
        if (s[c] > s[best]) best = c;
    return m.classes[best];
}

// L2-regularized hinge-loss linear SVM:
//     min 1/2 ||w||^2 + C * sum_i max(0, 1 - y_i * (w.x_i + b))
// trained in the dual by coordinate descent. The bias rides along as an
// appended always-on feature (so it is regularized too, which keeps the
// update rule uniform).
struct SVMModel {
    double c = 1.0;
    std::vector<double> weights;  // length V
    double bias = 0.0;
    // training diagnostics, not serialized
    std::vector<double> epoch_dual_objective;
    double duality_gap = std::numeric_limits<double>::quiet_NaN();
    int epochs_run = 0;

    double decision(const FeatureVector& x) const {
        return feat::dot(x, weights) + bias;
    }
};

struct SVMOptions {
    int max_epochs = 1000;
    double gap_tolerance = 1e-6;     // relative: gap <= tol * (1 + |primal|)
    uint64_t shuffle_seed = 0x5151;  // fixed by design: training is deterministic
};

// y in {-1,+1}
inline SVMModel train_svm(const std::vector<FeatureVector>& x, const std::vector<int>& y,
                          size_t vocab_size, double c = 1.0, const SVMOptions& opts = {}) {
    check_contract(x.size() == y.size() && !x.empty(), "train_svm: need parallel nonempty x,y");
    check_contract(c > 0.0, "train_svm: C must be positive");
    bool has_pos = false, has_neg = false;
    for (size_t i = 0; i < y.size(); ++i) {
        check_contract(y[i] == 1 || y[i] == -1, "train_svm: labels must be -1/+1");
        (y[i] == 1 ? has_pos : has_neg) = true;
        for (const auto& e : x[i]) {
            check_contract(std::isfinite(e.weight), "train_svm: non-finite feature value");
            check_contract(e.index < vocab_size, "train_svm: feature index out of range");
        }
    }
    check_contract(has_pos && has_neg, "train_svm: both classes must be present");

    const size_t n = x.size();
    const size_t dim = vocab_size + 1;  // appended bias feature
    std::vector<double> w(dim, 0.0);
    std::vector<double> alpha(n, 0.0);
    std::vector<double> qii(n);
    for (size_t i = 0; i < n; ++i) qii[i] = feat::squared_norm(x[i]) + 1.0;

    std::vector<size_t> order(n);
    for (size_t i = 0; i < n; ++i) order[i] = i;
    Rng rng(opts.shuffle_seed);

    SVMModel m;
    m.c = c;

    auto dual_objective = [&] {
        double wn = 0.0;
        for (double v : w) wn += v * v;
        double asum = 0.0;
        for (double a : alpha) asum += a;
        return 0.5 * wn - asum;
    };
    auto primal_and_gap = [&](double& primal, double& gap) {
        double wn = 0.0;
        for (double v : w) wn += v * v;
        double hinge = 0.0, asum = 0.0;
        for (size_t i = 0; i < n; ++i) {
            const double margin =
                static_cast<double>(y[i]) * (feat::dot(x[i], w) + w[dim - 1]);
            hinge += std::max(0.0, 1.0 - margin);
            asum += alpha[i];
        }
        primal = 0.5 * wn + c * hinge;
        gap = wn + c * hinge - asum;  // primal - dual
    };

    int epoch = 0;
    for (; epoch < opts.max_epochs; ++epoch) {
        rng.shuffle(order);
        for (size_t idx : order) {
            const FeatureVector& xi = x[idx];
            const double yi = static_cast<double>(y[idx]);
            double g = yi * (feat::dot(xi, w) + w[dim - 1]) - 1.0;
            double pg = g;
            if (alpha[idx] <= 0.0) pg = std::min(g, 0.0);
            else if (alpha[idx] >= c) pg = std::max(g, 0.0);
            if (pg == 0.0) continue;
            const double old = alpha[idx];
            alpha[idx] = std::min(std::max(old - g / qii[idx], 0.0), c);
            const double delta = (alpha[idx] - old) * yi;
            if (delta != 0.0) {
                for (const auto& e : xi) w[e.index] += delta * e.weight;
                w[dim - 1] += delta;
            }
        }
        m.epoch_dual_objective.push_back(dual_objective());
        double primal = 0.0, gap = 0.0;
        primal_and_gap(primal, gap);
        m.duality_gap = gap;
        if (gap <= opts.gap_tolerance * (1.0 + std::fabs(primal))) {
            ++epoch;
            break;
        }
    }
    m.epochs_run = epoch;
    m.weights.assign(w.begin(), w.end() - 1);
    m.bias = w[dim - 1];
    return m;
}

// sign of the decision score; zero falls to the negative class
inline int svm_predict(const SVMModel& m, const FeatureVector& x) {
    return m.decision(x) > 0.0 ? 1 : -1;
}

// One-vs-rest wrapper for the three-class threshold labeling.
struct OvrSVMModel {
    std::vector<int> classes;
    std::vector<SVMModel> models;  // parallel to classes
};

inline OvrSVMModel train_svm_ovr(const std::vector<FeatureVector>& x, const std::vector<int>& y,
                                 size_t vocab_size, double c = 1.0, const SVMOptions& opts = {}) {
    OvrSVMModel m;
    m.classes = y;
    std::sort(m.classes.begin(), m.classes.end());
    m.classes.erase(std::unique(m.classes.begin(), m.classes.end()), m.classes.end());
    check_contract(m.classes.size() >= 2, "train_svm_ovr: need at least two classes");
    if (m.classes.size() == 2) {
        std::vector<int> yy(y.size());
        for (size_t i = 0; i < y.size(); ++i) yy[i] = y[i] == m.classes[1] ? 1 : -1;
        m.models.push_back(train_svm(x, yy, vocab_size, c, opts));
        return m;
    }
    for (int cls : m.classes) {
        std::vector<int> yy(y.size());
        for (size_t i = 0; i < y.size(); ++i) yy[i] = y[i] == cls ? 1 : -1;
        m.models.push_back(train_svm(x, yy, vocab_size, c, opts));
    }
    return m;
}

inline int svm_ovr_predict(const OvrSVMModel& m, const FeatureVector& x) {
    if (m.classes.size() == 2)
        return svm_predict(m.models[0], x) == 1 ? m.classes[1] : m.classes[0];
    size_t best = 0;
    double best_score = -std::numeric_limits<double>::infinity();
    for (size_t c = 0; c < m.models.size(); ++c) {
        const double s = m.models[c].decision(x);
        if (s > best_score) {
            best_score = s;
            best = c;
        }
    }
    return m.classes[best];
}

}  // namespace privysense::model
