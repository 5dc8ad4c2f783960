#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "weyl/lorentz/lorentz.hpp"

namespace weyl::lorentz {

using walk::Chirality;
using walk::WaveVector;

struct OnShellPoint {
    double omega = 0.0;
    WaveVector k;
    int region = 0;
    Chirality chirality = Chirality::Plus;
};

/// max(|sin^2 w - |n(k)|^2|).
double shell_defect(const OnShellPoint& pt);

enum class GChoice { Unit, Secant, Custom };
const char* to_string(GChoice g);

/// Scalar factor g as a function of sigma = sin^2 w (= |n(k)|^2 on the shell).
/// Depending on k only through |n|^2 makes grad g vanish at every special point.
class GFunction {
public:
    GFunction() = default;
    static GFunction unit();
    static GFunction secant();
    /// Piecewise-linear in sigma through (sigma_j, g_j). Requires sigma_0 = 0, g_0 = 1,
    /// increasing sigma_j, positive g_j, and g(sigma) sqrt(sigma) strictly increasing.
    static GFunction custom(std::vector<std::pair<double, double>> table);

    GChoice choice() const { return choice_; }
    const std::vector<std::pair<double, double>>& table() const { return table_; }

    double operator()(double sigma) const;
    double derivative(double sigma) const;
    /// Largest sigma for which g is defined (exclusive for Secant).
    double sigma_max() const;
    /// Solve g(sigma) sqrt(sigma) = r for sigma; NoConvergence when r is out of range.
    double solve_radius(double r) const;

private:
    GChoice choice_ = GChoice::Secant;
    std::vector<std::pair<double, double>> table_;
};

struct DeformationConfig {
    GFunction g = GFunction::secant();
    double newton_tol = 1e-12;
    int newton_max_iter = 64;
    /// Half-width of the cube |k_a - k_i,a| <= safe_radius on which D is inverted.
    double safe_radius = walk::kSqrt3 * 3.14159265358979323846 / 8.0;
};

/// key = value lines; '#' starts a comment. Keys: g_choice (unit|secant|custom),
/// g_table ("s0:g0, s1:g1, ..."), newton_tol, newton_max_iter, safe_radius. Throws ConfigError.
DeformationConfig parse_deformation_config(std::istream& in);
DeformationConfig load_deformation_config(const std::filesystem::path& path);

/// Sign of lambda at the region's special point: for Plus +1 in regions 0, 2 and -1 in 1, 3;
/// for Minus the roles of regions 1 and 2 are exchanged. Fixes the sign of the time
/// component of D and which spinor representation plays Gamma.
int region_sign(int region, Chirality c);

/// min |det dn/dk| sampled on a grid of the cube around k_region. Cached per
/// (radius, region, chirality); thread safe.
double min_jacobian_determinant(double radius, int region, Chirality c);
/// Self-check threshold for the cube: min |det J| >= 1e-3, else ConfigError.
void verify_safe_region(const DeformationConfig& cfg, int region, Chirality c);

/// Whether k lies in the configured cube around the region's special point.
bool in_safe_region(const WaveVector& k, int region, double radius);

/// D(w, k) = g(sin^2 w) (s_i sin w, n(k)), s_i = region_sign.
FourVector deformation_D(const OnShellPoint& pt, const DeformationConfig& cfg);

/// dD/d(w, k). With `rescaled` the k-columns are taken with respect to u = k / sqrt3.
Matrix4 deformation_jacobian(const OnShellPoint& pt, const DeformationConfig& cfg, bool rescaled);

/// Numerical inverse on the safe cube of the given region. Throws OffShellInput or NoConvergence.
OnShellPoint deformation_D_inverse(const FourVector& p, int region, const DeformationConfig& cfg,
                                   Chirality c = Chirality::Plus);

/// D^{-1}(L D(pt)) for a general transformation.
OnShellPoint deformed_transform(const OnShellPoint& pt, const LorentzTransform& L, const DeformationConfig& cfg);
/// Same with L = exp(beta.K + theta.J).
OnShellPoint deformed_boost(const OnShellPoint& pt, const Vec3& beta, const Vec3& theta,
                            const DeformationConfig& cfg);

struct SymmetryCheck {
    OnShellPoint image;
    double residual = 0.0;      ///< after normalising both sides by their Frobenius norms
    double raw_residual = 0.0;  ///< max entrywise |lhs - rhs|
};

/// Compares g (sin w - n.sigma) with Gt^{-1} g' (sin w' - n'.sigma) G, where (G, Gt) is
/// (Right, Left) where region_sign is +1 and exchanged where it is -1. `swap_handedness`
/// exchanges them once more (negative control).
SymmetryCheck check_symmetry_detailed(const OnShellPoint& pt, const Vec3& beta, const Vec3& theta,
                                      const DeformationConfig& cfg, bool swap_handedness = false);
double check_symmetry(const OnShellPoint& pt, const Vec3& beta, const Vec3& theta, const DeformationConfig& cfg);

/// CSV: beta,omega_in,kx_in,ky_in,kz_in,omega_out,kx_out,ky_out,kz_out,residual
struct BoostScanRow {
    double beta;
    OnShellPoint in;
    OnShellPoint out;
    double residual;
};
void write_boost_scan_csv(std::ostream& out, const std::vector<BoostScanRow>& rows);

}  // namespace weyl::lorentz
