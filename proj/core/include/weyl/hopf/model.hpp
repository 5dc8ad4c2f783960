#pragma once

#include <array>
#include <optional>
#include <string>

#include "weyl/hopf/polynomial.hpp"

namespace weyl::hopf {

enum class ModelKind { Classical, Kappa };
const char* to_string(ModelKind k);
ModelKind parse_model(const std::string& name);

/// Coproducts of the four translation generators.
struct CoproductModel {
    ModelKind kind = ModelKind::Classical;
    std::array<TensorSeries, 4> delta;

    /// 1 (x) p + p (x) 1.
    static CoproductModel classical();
    /// Bilinear truncation: D p0 = 1(x)p0 + p0(x)1 + (1/k) sum_i pi(x)pi,
    /// D pi = pi(x)1 + (1/k) pi(x)p0 + 1(x)pi.
    static CoproductModel kappa();
    static CoproductModel make(ModelKind k) { return k == ModelKind::Classical ? classical() : kappa(); }
};

/// Delta(f) = f(Delta p), the coproduct extended as an algebra map.
TensorSeries coproduct_of(const MomentumPoly& f, const std::array<TensorSeries, 4>& delta, Truncation t = {});

/// (eps (x) id) D p = p = (id (x) eps) D p for every generator.
bool satisfies_counit_axiom(const std::array<TensorSeries, 4>& delta);

/// Change of generators p' = forward(p) with J(0) = I, and its inverse p = inverse(p').
class BasisMap {
public:
    /// Validates (zero constant terms, identity linear part; InvalidMap otherwise)
    /// and computes the inverse by fixed-point iteration at the truncation order.
    static BasisMap from_forward(std::array<MomentumPoly, 4> forward, std::string label = "custom",
                                 std::array<std::string, 4> p_names = {"p0", "p1", "p2", "p3"},
                                 std::array<std::string, 4> x_names = {"x0", "x1", "x2", "x3"});
    /// As from_forward, then checks the supplied inverse against the computed one (InvalidMap on mismatch).
    static BasisMap with_inverse(std::array<MomentumPoly, 4> forward, const std::array<MomentumPoly, 4>& inverse,
                                 std::string label, std::array<std::string, 4> p_names,
                                 std::array<std::string, 4> x_names);

    const std::array<MomentumPoly, 4>& forward() const { return forward_; }
    const std::array<MomentumPoly, 4>& inverse() const { return inverse_; }
    const std::string& label() const { return label_; }
    /// Names of the new generators p' and of their dual coordinates.
    const std::array<std::string, 4>& p_names() const { return p_names_; }
    const std::array<std::string, 4>& x_names() const { return x_names_; }

    /// forward(inverse(p')) - p' and inverse(forward(p)) - p; both zero when consistent.
    std::array<MomentumPoly, 4> forward_after_inverse_defect() const;
    std::array<MomentumPoly, 4> inverse_after_forward_defect() const;

private:
    std::array<MomentumPoly, 4> forward_;
    std::array<MomentumPoly, 4> inverse_;
    std::string label_;
    std::array<std::string, 4> p_names_;
    std::array<std::string, 4> x_names_;
};

BasisMap identity_map();

/// E = w, p_x = k_x + k_y k_z / kappa, p_y = k_y - k_x k_z / kappa, p_z = k_z + k_x k_y / kappa
/// (inputs p0..p3 = w, k_x, k_y, k_z).
BasisMap walk_basis_map();
/// The inverse printed alongside the walk map: k_x = p_x - p_y p_z/kappa, k_y = p_y + p_x p_z/kappa,
/// k_z = p_z - p_x p_y/kappa.
std::array<MomentumPoly, 4> walk_basis_map_printed_inverse();

/// <p_mu, x_nu>.
using PairingMatrix = std::array<std::array<GaussianRational, 4>, 4>;
/// i eta = diag(i, -i, -i, -i).
PairingMatrix default_pairing();

/// A model written in the new generators p' of a basis map, with its pairing constants.
struct MappedModel {
    ModelKind kind = ModelKind::Classical;
    std::string map_label;
    std::array<TensorSeries, 4> delta;
    PairingMatrix pairing = default_pairing();
    std::array<std::string, 4> p_names;
    std::array<std::string, 4> x_names;
};

/// D p'_mu = forward_mu(D p), both legs then re-expressed through p = inverse(p').
MappedModel map_model(const CoproductModel& model, const BasisMap& map,
                      const PairingMatrix& pairing = default_pairing());

}  // namespace weyl::hopf
