#include "weyl/hopf/lie.hpp"

#include <cmath>
#include <complex>

#include "weyl/errors.hpp"
#include "weyl/lorentz/lorentz.hpp"

namespace weyl::hopf {

namespace {

using Bracket = std::array<GaussianRational, kLieDim>;

int eps(int i, int j, int k) {  // 0-based
    if (i == j || j == k || i == k) return 0;
    return ((j - i + 3) % 3 == 1) ? 1 : -1;
}

void set(LieStructure& s, int a, int b, int c, const GaussianRational& v) {
    s.f[a][b][c] = v;
    s.f[b][a][c] = -v;
}

Bracket bracket_with(const LieStructure& s, int a, const Bracket& y) {
    Bracket out{};
    for (int d = 0; d < kLieDim; ++d) {
        if (y[d].is_zero()) continue;
        for (int e = 0; e < kLieDim; ++e) out[e] += y[d] * s.f[a][d][e];
    }
    return out;
}

LieStructure build(bool literal) {
    LieStructure s;
    const GaussianRational i = GaussianRational::i();
    for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < 3; ++b) {
            for (int c = 0; c < 3; ++c) {
                const int e = eps(a, b, c);
                if (e == 0) continue;
                const GaussianRational v = i * GaussianRational(e);
                set(s, lie_m(a + 1), lie_m(b + 1), lie_m(c + 1), v);
                set(s, lie_n(a + 1), lie_n(b + 1), lie_m(c + 1), -v);
                set(s, lie_m(a + 1), lie_n(b + 1), lie_n(c + 1), v);
                set(s, lie_m(a + 1), lie_p(b + 1), lie_p(c + 1), v);
            }
        }
    }
    for (int a = 1; a <= 3; ++a) {
        set(s, lie_n(a), lie_p(a), lie_p(0), i);
        if (literal) {
            set(s, lie_n(a), lie_p(0), lie_p(0), -i);
        } else {
            set(s, lie_n(a), lie_p(0), lie_p(a), i);
        }
    }
    return s;
}

std::complex<double> to_complex(const GaussianRational& g) { return {g.re().get_d(), g.im().get_d()}; }

}  // namespace

int lie_m(int i) {
    if (i < 1 || i > 3) throw InvalidInput("rotation index must be 1..3");
    return i - 1;
}

int lie_n(int i) {
    if (i < 1 || i > 3) throw InvalidInput("boost index must be 1..3");
    return i + 2;
}

int lie_p(int mu) {
    if (mu < 0 || mu > 3) throw InvalidInput("translation index must be 0..3");
    return mu + 6;
}

LieStructure LieStructure::poincare() { return build(false); }
LieStructure LieStructure::poincare_literal() { return build(true); }

const std::array<std::string, kLieDim>& LieStructure::names() {
    static const std::array<std::string, kLieDim> n{"M1", "M2", "M3", "N1", "N2", "N3", "p0", "p1", "p2", "p3"};
    return n;
}

bool is_antisymmetric(const LieStructure& s) {
    for (int a = 0; a < kLieDim; ++a) {
        for (int b = 0; b < kLieDim; ++b) {
            for (int c = 0; c < kLieDim; ++c) {
                if (!(s.f[a][b][c] + s.f[b][a][c]).is_zero()) return false;
            }
        }
    }
    return true;
}

std::vector<std::string> jacobi_failures(const LieStructure& s) {
    std::vector<std::string> out;
    const auto& n = LieStructure::names();
    for (int a = 0; a < kLieDim; ++a) {
        for (int b = a + 1; b < kLieDim; ++b) {
            for (int c = b + 1; c < kLieDim; ++c) {
                Bracket sum = bracket_with(s, a, s.f[b][c]);
                const Bracket t2 = bracket_with(s, b, s.f[c][a]);
                const Bracket t3 = bracket_with(s, c, s.f[a][b]);
                bool zero = true;
                for (int e = 0; e < kLieDim; ++e) {
                    sum[e] += t2[e] + t3[e];
                    zero = zero && sum[e].is_zero();
                }
                if (!zero) out.push_back("(" + n[a] + ", " + n[b] + ", " + n[c] + ")");
            }
        }
    }
    return out;
}

LieReport lie_checks(double fd_step, double tolerance) {
    LieReport r;
    const LieStructure s = LieStructure::poincare();
    r.antisymmetric = is_antisymmetric(s);
    r.jacobi_failures = jacobi_failures(s);
    r.jacobi = r.jacobi_failures.empty();
    const auto literal = jacobi_failures(LieStructure::poincare_literal());
    r.literal_jacobi = literal.empty();
    if (!literal.empty()) r.literal_failure = literal.front();

    // [X, p_mu] = i sum_nu G_{nu mu} p_nu with G the 4x4 generator of X.
    const std::complex<double> iu(0.0, 1.0);
    for (int a = 1; a <= 3; ++a) {
        lorentz::Vec3 e = lorentz::Vec3::Zero();
        e[a - 1] = fd_step;
        const lorentz::Matrix4 kb =
            (lorentz::boost_matrix(e).L - lorentz::boost_matrix(-e).L) / (2.0 * fd_step);
        const lorentz::Matrix4 kr =
            (lorentz::rotation_matrix(e).L - lorentz::rotation_matrix(-e).L) / (2.0 * fd_step);
        for (int mu = 0; mu < 4; ++mu) {
            for (int nu = 0; nu < 4; ++nu) {
                r.boost_fd_error = std::max(
                    r.boost_fd_error, std::abs(to_complex(s.f[lie_n(a)][lie_p(mu)][lie_p(nu)]) - iu * kb(nu, mu)));
                r.rotation_fd_error = std::max(
                    r.rotation_fd_error, std::abs(to_complex(s.f[lie_m(a)][lie_p(mu)][lie_p(nu)]) - iu * kr(nu, mu)));
            }
        }
    }
    r.matches_matrices = r.boost_fd_error < tolerance && r.rotation_fd_error < tolerance;
    return r;
}

}  // namespace weyl::hopf
