#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "privysense/dates.hpp"
#include "privysense/errors.hpp"
#include "privysense/ingest.hpp"
#include "privysense/rng.hpp"

namespace privysense::vol {

// Conditional-variance models:
//   ARCH(p):     h_t = omega + sum_i alpha_i * eps_{t-i}^2
//   GARCH(1,1):  h_t = omega + alpha * eps_{t-1}^2 + beta * h_{t-1}
// Only GARCH(1,1) is fitted; the general ARCH form exists for the recursion
// cross-checks.

struct ArchParams {
    double omega = 0.0;
    std::vector<double> alphas;
};

struct GarchModel {
    double omega = 0.0;
    double alpha = 0.0;
    double beta = 0.0;
    // filled by the fitter
    double loglik = std::numeric_limits<double>::quiet_NaN();
    int n_obs = 0;

    double persistence() const { return alpha + beta; }
    double uncond_var() const { return omega / (1.0 - alpha - beta); }
};

struct ReturnSeries {
    std::string ticker;
    std::vector<Date> dates;     // strictly increasing, parallel to returns
    std::vector<double> returns; // log returns
    std::vector<double> shocks;  // demeaned returns
    double mean = 0.0;
    double sample_var = 0.0;     // population variance of the shocks
};

enum class Sentiment { Negative = 0, Positive = 1, Neutral = 2 };

inline const char* sentiment_name(Sentiment s) {
    switch (s) {
        case Sentiment::Negative: return "Negative";
        case Sentiment::Positive: return "Positive";
        default: return "Neutral";
    }
}

inline double log_return(double p_now, double p_prev) {
    if (!(p_now > 0.0) || !(p_prev > 0.0))
        throw domain_error("log_return: prices must be positive");
    return std::log(p_now / p_prev);
}

// shocks are ordered most recent first: eps_{t-1}, ..., eps_{t-p}
inline double arch_variance(const ArchParams& params, const std::vector<double>& shocks) {
    check_contract(shocks.size() == params.alphas.size(),
                   "arch_variance: shock count must equal ARCH order p");
    double h = params.omega;
    for (size_t i = 0; i < shocks.size(); ++i)
        h += params.alphas[i] * shocks[i] * shocks[i];
    return h;
}

// Runs the GARCH(1,1) recursion across eps_1..eps_n and returns h_1..h_n,
// taking eps_0^2 = h_0.
inline std::vector<double> garch_filter(const GarchModel& m, const std::vector<double>& shocks,
                                        double h0) {
    if (!(h0 > 0.0)) throw domain_error("garch_filter: h0 must be positive");
    check_contract(!shocks.empty(), "garch_filter: need at least one shock");
    std::vector<double> h(shocks.size());
    double prev_h = h0;
    double prev_eps2 = h0;
    for (size_t t = 0; t < shocks.size(); ++t) {
        h[t] = m.omega + m.alpha * prev_eps2 + m.beta * prev_h;
        prev_h = h[t];
        prev_eps2 = shocks[t] * shocks[t];
    }
    return h;
}

inline ReturnSeries make_return_series(std::string ticker, const std::vector<ingest::DatedClose>& closes) {
    check_contract(closes.size() >= 2, "return series needs at least two closes");
    ReturnSeries s;
    s.ticker = std::move(ticker);
    s.dates.reserve(closes.size() - 1);
    s.returns.reserve(closes.size() - 1);
    for (size_t i = 1; i < closes.size(); ++i) {
        check_contract(closes[i].date > closes[i - 1].date,
                       "return series: dates must be strictly increasing");
        s.dates.push_back(closes[i].date);
        s.returns.push_back(log_return(closes[i].close, closes[i - 1].close));
    }
    double sum = 0.0;
    for (double r : s.returns) sum += r;
    s.mean = sum / static_cast<double>(s.returns.size());
    s.shocks.resize(s.returns.size());
    double ss = 0.0;
    for (size_t i = 0; i < s.returns.size(); ++i) {
        s.shocks[i] = s.returns[i] - s.mean;
        ss += s.shocks[i] * s.shocks[i];
    }
    s.sample_var = ss / static_cast<double>(s.returns.size());
    return s;
}

inline ReturnSeries make_return_series(const std::string& ticker,
                                       const std::vector<ingest::PriceBar>& bars) {
    std::vector<ingest::DatedClose> closes;
    closes.reserve(bars.size());
    for (const auto& b : bars) closes.push_back({b.date, b.close});
    return make_return_series(ticker, closes);
}

// Gaussian log-likelihood up to the constant -n/2*log(2*pi); the constant
// does not move the optimum and is omitted consistently everywhere.
inline double garch11_loglik(const GarchModel& m, const std::vector<double>& shocks, double h0) {
    const std::vector<double> h = garch_filter(m, shocks, h0);
    double ll = 0.0;
    for (size_t t = 0; t < shocks.size(); ++t)
        ll += std::log(h[t]) + shocks[t] * shocks[t] / h[t];
    return -0.5 * ll;
}

struct FitOptions {
    int max_iterations = 500;
    double rel_tolerance = 1e-8;
    double max_persistence = 0.9999;  // closed feasible set for the optimizer
};

struct convergence_error : error {
    convergence_error(const std::string& msg, GarchModel best_so_far)
        : error(msg), best(best_so_far) {}
    GarchModel best;
};

namespace detail {

// Derivative-free Nelder-Mead simplex minimizer. Deterministic: fixed
// coefficients, fixed initial simplex, no randomness.
struct SimplexResult {
    std::vector<double> x;
    double fx = 0.0;
    int iterations = 0;
    bool converged = false;
};

inline SimplexResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                                 std::vector<double> x0, double step, int max_iter, double tol) {
    const size_t n = x0.size();
    std::vector<std::vector<double>> pts(n + 1, x0);
    for (size_t i = 0; i < n; ++i) pts[i + 1][i] += step;
    std::vector<double> fv(n + 1);
    for (size_t i = 0; i <= n; ++i) fv[i] = f(pts[i]);

    std::vector<size_t> order(n + 1);
    SimplexResult res;
    for (res.iterations = 0; res.iterations < max_iter; ++res.iterations) {
        for (size_t i = 0; i <= n; ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return fv[a] < fv[b]; });
        const size_t best = order[0], worst = order[n], second_worst = order[n - 1];

        if (std::fabs(fv[worst] - fv[best]) <= tol * (std::fabs(fv[best]) + tol)) {
            res.converged = true;
            break;
        }

        std::vector<double> centroid(n, 0.0);
        for (size_t i = 0; i <= n; ++i) {
            if (i == worst) continue;
            for (size_t d = 0; d < n; ++d) centroid[d] += pts[i][d];
        }
        for (size_t d = 0; d < n; ++d) centroid[d] /= static_cast<double>(n);

        auto blend = [&](double coef) {
            std::vector<double> p(n);
            for (size_t d = 0; d < n; ++d)
                p[d] = centroid[d] + coef * (pts[worst][d] - centroid[d]);
            return p;
        };

        std::vector<double> refl = blend(-1.0);
        double f_refl = f(refl);
        if (f_refl < fv[best]) {
            std::vector<double> exp_pt = blend(-2.0);
            double f_exp = f(exp_pt);
            if (f_exp < f_refl) {
                pts[worst] = std::move(exp_pt);
                fv[worst] = f_exp;
            } else {
                pts[worst] = std::move(refl);
                fv[worst] = f_refl;
            }
        } else if (f_refl < fv[second_worst]) {
            pts[worst] = std::move(refl);
            fv[worst] = f_refl;
        } else {
            std::vector<double> contr = blend(f_refl < fv[worst] ? -0.5 : 0.5);
            double f_contr = f(contr);
            if (f_contr < std::min(f_refl, fv[worst])) {
                pts[worst] = std::move(contr);
                fv[worst] = f_contr;
            } else {
                // shrink toward the best vertex
                for (size_t i = 0; i <= n; ++i) {
                    if (i == best) continue;
                    for (size_t d = 0; d < n; ++d)
                        pts[i][d] = pts[best][d] + 0.5 * (pts[i][d] - pts[best][d]);
                    fv[i] = f(pts[i]);
                }
            }
        }
    }
    size_t best = 0;
    for (size_t i = 1; i <= n; ++i)
        if (fv[i] < fv[best]) best = i;
    res.x = pts[best];
    res.fx = fv[best];
    return res;
}

inline double logit(double p) { return std::log(p / (1.0 - p)); }
inline double sigmoid(double u) { return 1.0 / (1.0 + std::exp(-u)); }

}  // namespace detail

// Maximum-likelihood GARCH(1,1) fit. The search runs in an unconstrained
// space: omega = exp(u0), persistence = max_persistence * sigmoid(u1),
// alpha = persistence * sigmoid(u2), beta = persistence - alpha. h_0 is the
// sample variance of the demeaned returns.
inline GarchModel fit_garch11(const ReturnSeries& series, const FitOptions& opts = {}) {
    check_contract(series.returns.size() >= 50, "fit_garch11: need at least 50 returns");
    if (!(series.sample_var > 0.0))
        throw degenerate_input_error("fit_garch11: returns are constant");

    const std::vector<double>& eps = series.shocks;
    const double h0 = series.sample_var;
    const double cap = opts.max_persistence;

    auto decode = [&](const std::vector<double>& u) {
        GarchModel m;
        m.omega = std::exp(u[0]);
        const double persistence = cap * detail::sigmoid(u[1]);
        const double frac = detail::sigmoid(u[2]);
        m.alpha = persistence * frac;
        m.beta = persistence - m.alpha;
        return m;
    };
    auto nll = [&](const std::vector<double>& u) {
        const GarchModel m = decode(u);
        if (!(m.omega > 0.0) || !std::isfinite(m.omega)) return 1e300;
        return -garch11_loglik(m, eps, h0);
    };

    // init (0.1 * sample_var, 0.05, 0.85)
    const double s0 = 0.90;
    std::vector<double> u0 = {std::log(0.1 * h0), detail::logit(s0 / cap),
                              detail::logit(0.05 / s0)};
    const auto res = detail::nelder_mead(nll, u0, 0.5, opts.max_iterations, opts.rel_tolerance);

    GarchModel m = decode(res.x);
    m.loglik = -res.fx;
    m.n_obs = static_cast<int>(eps.size());
    if (!res.converged)
        throw convergence_error("fit_garch11: no convergence after " +
                                    std::to_string(res.iterations) + " iterations",
                                m);
    return m;
}

// h(eps) = omega + beta * baseline_var + alpha * eps^2 over the grid.
inline std::vector<std::pair<double, double>> news_impact_curve(const GarchModel& m,
                                                                double baseline_var,
                                                                const std::vector<double>& eps_grid) {
    if (!(baseline_var > 0.0)) throw domain_error("news_impact_curve: baseline_var must be > 0");
    std::vector<std::pair<double, double>> out;
    out.reserve(eps_grid.size());
    for (double e : eps_grid)
        out.emplace_back(e, m.omega + m.beta * baseline_var + m.alpha * e * e);
    return out;
}

enum class DecayWeighting { Geometric, Uniform };

// Forward price-movement measure for horizon parameter p:
//   p = 0: the release-day-to-next-day log return.
//   p >= 1: sum_{i=0..p} w_i * r_{t+i -> t+i+1}, with w_i = persistence^i under
//   geometric weighting and w_i = 1 under uniform weighting.
inline double forward_measure(const ingest::JoinedRecord& rec, int p,
                              const GarchModel* model,
                              DecayWeighting weighting = DecayWeighting::Geometric) {
    check_contract(p >= 0 && p <= 5, "forward_measure: p must be in [0,5]");
    const size_t t = rec.anchor_index;
    const size_t need_last = t + static_cast<size_t>(p) + 1;
    if (need_last >= rec.closes.size())
        throw coverage_error("price series does not cover horizon p=" + std::to_string(p));
    if (p == 0)
        return log_return(rec.closes[t + 1].close, rec.closes[t].close);
    double lambda = 1.0;
    if (weighting == DecayWeighting::Geometric) {
        check_contract(model != nullptr, "forward_measure: p >= 1 requires a fitted GARCH model");
        lambda = model->persistence();
    }
    double m = 0.0;
    double w = 1.0;
    for (int i = 0; i <= p; ++i) {
        m += w * log_return(rec.closes[t + i + 1].close, rec.closes[t + i].close);
        w *= lambda;
    }
    return m;
}

// Binary labeling: strictly positive measure -> Positive, otherwise Negative
// (zero maps to Negative).
inline Sentiment label_binary(const ingest::JoinedRecord& rec, int p, const GarchModel* model,
                              DecayWeighting weighting = DecayWeighting::Geometric) {
    return forward_measure(rec, p, model, weighting) > 0.0 ? Sentiment::Positive
                                                           : Sentiment::Negative;
}

// Three-class labeling with a neutral zone strictly between the thresholds.
inline Sentiment label_threshold(double measure, double min_thr, double max_thr) {
    check_contract(min_thr < 0.0 && max_thr > 0.0,
                   "label_threshold: need min_thr < 0 < max_thr");
    if (measure >= max_thr) return Sentiment::Positive;
    if (measure <= min_thr) return Sentiment::Negative;
    return Sentiment::Neutral;
}

// Simulates a GARCH(1,1) path (used by fixtures and the recovery checks).
inline std::vector<double> simulate_garch11(const GarchModel& m, size_t n, uint64_t seed,
                                            double mean = 0.0) {
    Rng rng(seed);
    std::vector<double> r(n);
    double h = m.uncond_var();
    double eps2 = h;  // stationary start
    for (size_t t = 0; t < n; ++t) {
        h = m.omega + m.alpha * eps2 + m.beta * h;
        const double eps = std::sqrt(h) * rng.gaussian();
        eps2 = eps * eps;
        r[t] = mean + eps;
    }
    return r;
}

}  // namespace privysense::vol
