#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace weyl::hopf {

using Momentum = std::array<double, 4>;

/// K = (p0 + sqrt(p0^2 - |p|^2 + kappa^2)) / kappa.
double kappa_K(const Momentum& p, double kappa);
/// log K, evaluated without cancellation for kappa much larger than p.
double kappa_log_K(const Momentum& p, double kappa);

/// Full coproducts evaluated on p (x) q:
/// D p0 = kappa sinh(a(p) + a(q)) + (1/2k) K^-1(p)|p|^2 K(q) + (1/k) K^-1(p) p.q + (1/2k) K^-1(p) K^-1(q) |q|^2,
/// D pi = pi K(q) + qi, a = log K.
Momentum kappa_coproduct_full(const Momentum& p, const Momentum& q, double kappa);
Momentum primitive_coproduct(const Momentum& p, const Momentum& q);
/// Bilinear truncation evaluated numerically.
Momentum kappa_coproduct_bilinear(const Momentum& p, const Momentum& q, double kappa);

struct KappaLimitRow {
    double kappa = 0.0;
    double deviation = 0.0;        ///< max |full - primitive| over the samples
    double truncation_error = 0.0; ///< max |full - bilinear| / |full|
    bool truncation_ok = false;    ///< truncation_error < 10 / kappa^2
    double k_multiplicativity = 0.0;  ///< max |K(p (+) q) - K(p) K(q)| / K(p) K(q)
};

struct KappaLimitReport {
    std::vector<KappaLimitRow> rows;
    /// deviation[j] / deviation[j+1] versus kappa[j+1] / kappa[j].
    std::vector<double> ratios;
    bool ratio_ok = false;
    bool truncation_ok = false;
    bool k_at_zero_exact = false;
};

/// Samples p0 in [0.1, 1], |p_i| <= 0.5 for both legs. Kappa values must be positive and increasing.
KappaLimitReport kappa_classical_limit(const std::vector<double>& kappas, std::uint64_t seed = 2024,
                                       int samples = 20);

}  // namespace weyl::hopf
