#include "weyl/lorentz/deformation.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <map>
#include <mutex>
#include <numbers>
#include <ostream>
#include <sstream>
#include <tuple>

#include "weyl/errors.hpp"

namespace weyl::lorentz {

namespace {

constexpr double kPi = std::numbers::pi;

void require_region(int region) {
    if (region < 0 || region > 3) throw InvalidInput("region must be 0..3, got " + std::to_string(region));
}

SpinorMatrix kernel_matrix(const OnShellPoint& pt, double g) {
    const Vec3 n = walk::n_vector(pt.k, pt.chirality);
    SpinorMatrix m = std::sin(pt.omega) * SpinorMatrix::Identity();
    for (int a = 0; a < 3; ++a) m -= n[a] * walk::chiral_pauli(a, pt.chirality);
    return g * m;
}

}  // namespace

double shell_defect(const OnShellPoint& pt) {
    const double s = std::sin(pt.omega);
    return std::abs(s * s - walk::n_vector(pt.k, pt.chirality).squaredNorm());
}

const char* to_string(GChoice g) {
    switch (g) {
        case GChoice::Unit: return "unit";
        case GChoice::Secant: return "secant";
        case GChoice::Custom: return "custom";
    }
    return "?";
}

GFunction GFunction::unit() {
    GFunction g;
    g.choice_ = GChoice::Unit;
    return g;
}

GFunction GFunction::secant() { return {}; }

GFunction GFunction::custom(std::vector<std::pair<double, double>> table) {
    if (table.size() < 2) throw InvalidInput("custom g needs at least two table points");
    if (table.front().first != 0.0 || table.front().second != 1.0) {
        throw InvalidInput("custom g must start at (0, 1)");
    }
    if (table.back().first > 1.0) throw InvalidInput("custom g: sigma = sin^2 w cannot exceed 1");
    for (std::size_t j = 0; j < table.size(); ++j) {
        if (!(table[j].second > 0.0)) throw InvalidInput("custom g must be positive");
        if (j == 0) continue;
        const auto [s0, g0] = table[j - 1];
        const auto [s1, g1] = table[j];
        if (!(s1 > s0)) throw InvalidInput("custom g: sigma values must increase");
        // d/ds (g sqrt s) > 0  <=>  g + 2 s g' > 0, linear in s on each segment.
        const double m = (g1 - g0) / (s1 - s0);
        if (!(g0 + 2.0 * s0 * m > 0.0) || !(g1 + 2.0 * s1 * m > 0.0)) {
            throw InvalidInput("custom g: g(sigma) sqrt(sigma) must be strictly increasing");
        }
    }
    GFunction g;
    g.choice_ = GChoice::Custom;
    g.table_ = std::move(table);
    return g;
}

double GFunction::sigma_max() const {
    switch (choice_) {
        case GChoice::Unit:
        case GChoice::Secant: return 1.0;
        case GChoice::Custom: return table_.back().first;
    }
    return 1.0;
}

double GFunction::operator()(double sigma) const {
    if (sigma < 0.0) sigma = 0.0;
    switch (choice_) {
        case GChoice::Unit: return 1.0;
        case GChoice::Secant:
            if (sigma >= 1.0) throw InvalidInput("secant g diverges at sin^2 w = 1");
            return 1.0 / std::sqrt(1.0 - sigma);
        case GChoice::Custom: {
            if (sigma > table_.back().first) throw InvalidInput("custom g evaluated outside its table");
            auto it = std::upper_bound(table_.begin(), table_.end(), sigma,
                                       [](double s, const auto& e) { return s < e.first; });
            if (it == table_.end()) return table_.back().second;
            const auto& [s1, g1] = *it;
            const auto& [s0, g0] = *(it - 1);
            return g0 + (g1 - g0) * (sigma - s0) / (s1 - s0);
        }
    }
    return 1.0;
}

double GFunction::derivative(double sigma) const {
    switch (choice_) {
        case GChoice::Unit: return 0.0;
        case GChoice::Secant: return 0.5 * std::pow(1.0 - sigma, -1.5);
        case GChoice::Custom: {
            auto it = std::upper_bound(table_.begin(), table_.end(), std::max(sigma, 0.0),
                                       [](double s, const auto& e) { return s < e.first; });
            if (it == table_.end()) it = table_.end() - 1;
            const auto& [s1, g1] = *it;
            const auto& [s0, g0] = *(it - 1);
            return (g1 - g0) / (s1 - s0);
        }
    }
    return 0.0;
}

double GFunction::solve_radius(double r) const {
    r = std::abs(r);
    switch (choice_) {
        case GChoice::Unit:
            if (r > 1.0) throw NoConvergence("|p0| > 1 is outside the image of D for g = 1");
            return r * r;
        case GChoice::Secant: return r * r / (1.0 + r * r);
        case GChoice::Custom: {
            auto f = [this](double s) { return (*this)(s) * std::sqrt(s); };
            const double smax = table_.back().first;
            if (r > f(smax)) throw NoConvergence("|p0| is outside the tabulated range of g");
            double lo = 0.0, hi = smax;
            for (int it = 0; it < 200 && hi - lo > 1e-17; ++it) {
                const double mid = 0.5 * (lo + hi);
                (f(mid) < r ? lo : hi) = mid;
            }
            return 0.5 * (lo + hi);
        }
    }
    return 0.0;
}

int region_sign(int region, Chirality c) {
    require_region(region);
    return walk::lambda_scalar(walk::special_point(region), c) > 0.0 ? 1 : -1;
}

double min_jacobian_determinant(double radius, int region, Chirality c) {
    require_region(region);
    static std::mutex mu;
    static std::map<std::tuple<double, int, int>, double> cache;
    const auto key = std::make_tuple(radius, region, static_cast<int>(c));
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    constexpr int m = 24;
    const WaveVector ki = walk::special_point(region);
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= m; ++i) {
        for (int j = 0; j <= m; ++j) {
            for (int l = 0; l <= m; ++l) {
                const WaveVector d{radius * (2.0 * i / m - 1.0), radius * (2.0 * j / m - 1.0),
                                   radius * (2.0 * l / m - 1.0)};
                best = std::min(best, std::abs(walk::n_jacobian(ki + d, c).determinant()));
            }
        }
    }
    std::lock_guard lock(mu);
    cache.emplace(key, best);
    return best;
}

void verify_safe_region(const DeformationConfig& cfg, int region, Chirality c) {
    if (!(cfg.safe_radius > 0.0) || cfg.safe_radius > walk::kSqrt3 * kPi / 4.0) {
        throw ConfigError("safe_radius must lie in (0, sqrt3*pi/4]");
    }
    const double d = min_jacobian_determinant(cfg.safe_radius, region, c);
    if (d < 1e-3) {
        std::ostringstream msg;
        msg << "safe_radius " << cfg.safe_radius << " fails the Jacobian self-check (min |det| = " << d << ")";
        throw ConfigError(msg.str());
    }
}

bool in_safe_region(const WaveVector& k, int region, double radius) {
    const WaveVector d = k - walk::special_point(region);
    const double lim = radius * (1.0 + 1e-12) + 1e-14;
    return std::abs(d.kx) <= lim && std::abs(d.ky) <= lim && std::abs(d.kz) <= lim;
}

FourVector deformation_D(const OnShellPoint& pt, const DeformationConfig& cfg) {
    require_region(pt.region);
    if (shell_defect(pt) > 1e-10) throw OffShellInput("point is not on the walk's mass shell");
    const double s = std::sin(pt.omega);
    const double g = cfg.g(s * s);
    return FourVector::from(g * region_sign(pt.region, pt.chirality) * s, g * walk::n_vector(pt.k, pt.chirality));
}

Matrix4 deformation_jacobian(const OnShellPoint& pt, const DeformationConfig& cfg, bool rescaled) {
    require_region(pt.region);
    const double s = std::sin(pt.omega);
    const double c = std::cos(pt.omega);
    const double sigma = s * s;
    const double g = cfg.g(sigma);
    const double dg = cfg.g.derivative(sigma) * 2.0 * s * c;
    const Vec3 n = walk::n_vector(pt.k, pt.chirality);
    Matrix4 j = Matrix4::Zero();
    j(0, 0) = region_sign(pt.region, pt.chirality) * (dg * s + g * c);
    j.block<3, 1>(1, 0) = dg * n;
    j.bottomRightCorner<3, 3>() = g * walk::n_jacobian(pt.k, pt.chirality) * (rescaled ? walk::kSqrt3 : 1.0);
    return j;
}

OnShellPoint deformation_D_inverse(const FourVector& p, int region, const DeformationConfig& cfg, Chirality c) {
    require_region(region);
    if (!is_null(p)) throw OffShellInput("four-vector is not null");
    verify_safe_region(cfg, region, c);

    const double sigma = cfg.g.solve_radius(p.p0);
    const double g = cfg.g(sigma);
    const Vec3 target = p.spatial() / g;

    OnShellPoint pt;
    pt.region = region;
    pt.chirality = c;
    const double sin_w = region_sign(region, c) * (p.p0 < 0.0 ? -1.0 : 1.0) * std::sqrt(sigma);
    pt.omega = region_sign(region, c) > 0 ? std::asin(sin_w) : kPi - std::asin(sin_w);

    const WaveVector ki = walk::special_point(region);
    const Eigen::Matrix3d j0 = walk::n_jacobian(ki, c);
    Vec3 seed = target.unaryExpr([](double t) { return std::asin(std::clamp(t, -1.0, 1.0)); });
    Vec3 delta = j0.partialPivLu().solve(seed);

    auto residual = [&](const Vec3& d) {
        return (walk::n_vector(ki + WaveVector{d[0], d[1], d[2]}, c) - target).eval();
    };
    Vec3 f = residual(delta);
    bool converged = f.cwiseAbs().maxCoeff() <= cfg.newton_tol;
    for (int it = 0; it < cfg.newton_max_iter && !converged; ++it) {
        const Eigen::Matrix3d j = walk::n_jacobian(ki + WaveVector{delta[0], delta[1], delta[2]}, c);
        const Vec3 step = -j.partialPivLu().solve(f);
        if (!step.allFinite()) break;
        double t = 1.0;
        Vec3 trial = delta + step;
        Vec3 ft = residual(trial);
        for (int h = 0; h < 40 && ft.norm() > f.norm(); ++h) {
            t *= 0.5;
            trial = delta + t * step;
            ft = residual(trial);
        }
        delta = trial;
        f = ft;
        converged = f.cwiseAbs().maxCoeff() <= cfg.newton_tol;
    }
    if (!converged) throw NoConvergence("Newton inversion of n(k) did not converge");
    pt.k = ki + WaveVector{delta[0], delta[1], delta[2]};
    if (!in_safe_region(pt.k, region, cfg.safe_radius)) {
        throw NoConvergence("preimage lies outside the safe region");
    }
    return pt;
}

OnShellPoint deformed_transform(const OnShellPoint& pt, const LorentzTransform& L, const DeformationConfig& cfg) {
    return deformation_D_inverse(L(deformation_D(pt, cfg)), pt.region, cfg, pt.chirality);
}

OnShellPoint deformed_boost(const OnShellPoint& pt, const Vec3& beta, const Vec3& theta,
                            const DeformationConfig& cfg) {
    if (beta.isZero(0.0) && theta.isZero(0.0)) {
        (void)deformation_D(pt, cfg);
        return pt;
    }
    return deformed_transform(pt, lorentz_transform(beta, theta), cfg);
}

SymmetryCheck check_symmetry_detailed(const OnShellPoint& pt, const Vec3& beta, const Vec3& theta,
                                      const DeformationConfig& cfg, bool swap_handedness) {
    SymmetryCheck out;
    out.image = deformed_boost(pt, beta, theta, cfg);

    Handedness gamma = region_sign(pt.region, pt.chirality) > 0 ? Handedness::Right : Handedness::Left;
    if (swap_handedness) gamma = other(gamma);

    // The Minus kernel uses sigma^T = (sx, -sy, sz): conjugating by the reflection
    // y -> -y maps (beta, theta) to (R beta, -R theta).
    Vec3 b = beta, th = theta;
    if (pt.chirality == Chirality::Minus) {
        b[1] = -b[1];
        th = -th;
        th[1] = -th[1];
    }
    const SpinorMatrix G = spinor_rep(b, th, gamma).matrix;
    const SpinorMatrix Gt = spinor_rep(b, th, other(gamma)).matrix;

    const double s0 = std::sin(pt.omega);
    const double s1 = std::sin(out.image.omega);
    const SpinorMatrix lhs = kernel_matrix(pt, cfg.g(s0 * s0));
    const SpinorMatrix rhs = Gt.inverse() * kernel_matrix(out.image, cfg.g(s1 * s1)) * G;

    out.raw_residual = (lhs - rhs).cwiseAbs().maxCoeff();
    const double nl = lhs.norm();
    const double nr = rhs.norm();
    if (nl == 0.0 && nr == 0.0) {
        out.residual = 0.0;
    } else if (nl == 0.0 || nr == 0.0) {
        out.residual = out.raw_residual;
    } else {
        out.residual = (lhs / nl - rhs / nr).cwiseAbs().maxCoeff();
    }
    return out;
}

double check_symmetry(const OnShellPoint& pt, const Vec3& beta, const Vec3& theta, const DeformationConfig& cfg) {
    return check_symmetry_detailed(pt, beta, theta, cfg).residual;
}

void write_boost_scan_csv(std::ostream& out, const std::vector<BoostScanRow>& rows) {
    std::ostringstream buf;
    buf.imbue(std::locale::classic());
    buf << std::setprecision(17);
    buf << "beta,omega_in,kx_in,ky_in,kz_in,omega_out,kx_out,ky_out,kz_out,residual\n";
    for (const auto& r : rows) {
        buf << r.beta << ',' << r.in.omega << ',' << r.in.k.kx << ',' << r.in.k.ky << ',' << r.in.k.kz << ','
            << r.out.omega << ',' << r.out.k.kx << ',' << r.out.k.ky << ',' << r.out.k.kz << ',' << r.residual
            << '\n';
    }
    out << buf.str();
}

}  // namespace weyl::lorentz
