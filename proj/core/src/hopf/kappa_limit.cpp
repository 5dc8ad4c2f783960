#include "weyl/hopf/kappa_limit.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "weyl/errors.hpp"

namespace weyl::hopf {

namespace {

double spatial2(const Momentum& p) { return p[1] * p[1] + p[2] * p[2] + p[3] * p[3]; }

double max_abs_diff(const Momentum& a, const Momentum& b) {
    double m = 0.0;
    for (int i = 0; i < 4; ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

double max_abs(const Momentum& a) {
    double m = 0.0;
    for (double v : a) m = std::max(m, std::abs(v));
    return m;
}

}  // namespace

double kappa_K(const Momentum& p, double kappa) { return std::exp(kappa_log_K(p, kappa)); }

double kappa_log_K(const Momentum& p, double kappa) {
    const double m = p[0] * p[0] - spatial2(p);
    const double s = std::sqrt(kappa * kappa + m);
    // K - 1 = (p0 + (s - kappa)) / kappa with s - kappa = m / (s + kappa)
    return std::log1p((p[0] + m / (s + kappa)) / kappa);
}

Momentum kappa_coproduct_full(const Momentum& p, const Momentum& q, double kappa) {
    const double ap = kappa_log_K(p, kappa);
    const double aq = kappa_log_K(q, kappa);
    const double kp_inv = std::exp(-ap);
    const double kq = std::exp(aq);
    const double kq_inv = std::exp(-aq);
    const double dot = p[1] * q[1] + p[2] * q[2] + p[3] * q[3];
    Momentum out{};
    out[0] = kappa * std::sinh(ap + aq) + kp_inv * spatial2(p) * kq / (2.0 * kappa) + kp_inv * dot / kappa +
             kp_inv * kq_inv * spatial2(q) / (2.0 * kappa);
    for (int i = 1; i < 4; ++i) out[i] = p[i] * kq + q[i];
    return out;
}

Momentum primitive_coproduct(const Momentum& p, const Momentum& q) {
    return {p[0] + q[0], p[1] + q[1], p[2] + q[2], p[3] + q[3]};
}

Momentum kappa_coproduct_bilinear(const Momentum& p, const Momentum& q, double kappa) {
    Momentum out = primitive_coproduct(p, q);
    out[0] += (p[1] * q[1] + p[2] * q[2] + p[3] * q[3]) / kappa;
    for (int i = 1; i < 4; ++i) out[i] += p[i] * q[0] / kappa;
    return out;
}

KappaLimitReport kappa_classical_limit(const std::vector<double>& kappas, std::uint64_t seed, int samples) {
    if (kappas.empty()) throw InvalidInput("kappa list is empty");
    for (std::size_t j = 0; j < kappas.size(); ++j) {
        if (!(kappas[j] > 0.0) || (j > 0 && !(kappas[j] > kappas[j - 1]))) {
            throw InvalidInput("kappa values must be positive and increasing");
        }
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> time(0.1, 1.0);
    std::uniform_real_distribution<double> space(-0.5, 0.5);
    std::vector<std::pair<Momentum, Momentum>> pts;
    for (int s = 0; s < samples; ++s) {
        Momentum p{time(rng), space(rng), space(rng), space(rng)};
        Momentum q{time(rng), space(rng), space(rng), space(rng)};
        pts.emplace_back(p, q);
    }

    KappaLimitReport r;
    r.k_at_zero_exact = true;
    r.truncation_ok = true;
    for (double kappa : kappas) {
        if (kappa_K({0, 0, 0, 0}, kappa) != 1.0) r.k_at_zero_exact = false;
        KappaLimitRow row;
        row.kappa = kappa;
        for (const auto& [p, q] : pts) {
            const Momentum full = kappa_coproduct_full(p, q, kappa);
            row.deviation = std::max(row.deviation, max_abs_diff(full, primitive_coproduct(p, q)));
            row.truncation_error =
                std::max(row.truncation_error, max_abs_diff(full, kappa_coproduct_bilinear(p, q, kappa)) / max_abs(full));
            const double kk = kappa_K(p, kappa) * kappa_K(q, kappa);
            row.k_multiplicativity = std::max(row.k_multiplicativity, std::abs(kappa_K(full, kappa) - kk) / kk);
        }
        row.truncation_ok = row.truncation_error < 10.0 / (kappa * kappa);
        r.truncation_ok = r.truncation_ok && row.truncation_ok;
        r.rows.push_back(row);
    }
    r.ratio_ok = r.rows.size() >= 2;
    for (std::size_t j = 0; j + 1 < r.rows.size(); ++j) {
        const double ratio = r.rows[j].deviation / r.rows[j + 1].deviation;
        const double expect = r.rows[j + 1].kappa / r.rows[j].kappa;
        r.ratios.push_back(ratio);
        if (std::abs(ratio / expect - 1.0) > 0.1) r.ratio_ok = false;
    }
    return r;
}

}  // namespace weyl::hopf
