#include "weyl/hopf/model.hpp"

#include "weyl/errors.hpp"

namespace weyl::hopf {

namespace {

MomentumPoly gen(int mu) { return MomentumPoly::generator(mu); }

const KappaCoeff kInvKappa = KappaCoeff::inv_kappa();

void validate_forward(const std::array<MomentumPoly, 4>& forward) {
    for (int mu = 0; mu < 4; ++mu) {
        if (!forward[mu].constant_term().is_zero()) {
            throw InvalidMap("basis map component " + std::to_string(mu) + " has a constant term");
        }
        for (int nu = 0; nu < 4; ++nu) {
            if (!(forward[mu].linear_coeff(nu) == KappaCoeff(mu == nu ? 1 : 0))) {
                throw InvalidMap("basis map violates J(0) = I at entry (" + std::to_string(mu) + ", " +
                                 std::to_string(nu) + ")");
            }
        }
    }
}

std::array<MomentumPoly, 4> generators() { return {gen(0), gen(1), gen(2), gen(3)}; }

std::array<MomentumPoly, 4> defect(const std::array<MomentumPoly, 4>& outer, const std::array<MomentumPoly, 4>& inner) {
    std::array<MomentumPoly, 4> out;
    for (int mu = 0; mu < 4; ++mu) out[mu] = outer[mu].substitute(inner) - gen(mu);
    return out;
}

}  // namespace

const char* to_string(ModelKind k) { return k == ModelKind::Classical ? "classical" : "kappa"; }

ModelKind parse_model(const std::string& name) {
    if (name == "classical") return ModelKind::Classical;
    if (name == "kappa") return ModelKind::Kappa;
    throw InvalidInput("unknown model '" + name + "' (expected classical or kappa)");
}

CoproductModel CoproductModel::classical() {
    CoproductModel m;
    m.kind = ModelKind::Classical;
    for (int mu = 0; mu < 4; ++mu) {
        m.delta[mu] = TensorSeries::tensor(MomentumPoly(1), gen(mu)) + TensorSeries::tensor(gen(mu), MomentumPoly(1));
    }
    return m;
}

CoproductModel CoproductModel::kappa() {
    CoproductModel m = classical();
    m.kind = ModelKind::Kappa;
    for (int i = 1; i < 4; ++i) {
        TensorSeries a = TensorSeries::tensor(gen(i), gen(i));
        a *= kInvKappa;
        m.delta[0] += a;
        TensorSeries b = TensorSeries::tensor(gen(i), gen(0));
        b *= kInvKappa;
        m.delta[i] += b;
    }
    return m;
}

TensorSeries coproduct_of(const MomentumPoly& f, const std::array<TensorSeries, 4>& delta, Truncation t) {
    TensorSeries out;
    for (const auto& [e, c] : f.terms()) {
        if (degree(e) > t.max_degree) continue;
        TensorSeries term = TensorSeries::unit();
        term *= c;
        for (int mu = 0; mu < 4 && !term.is_zero(); ++mu) {
            for (int k = 0; k < e[mu]; ++k) term = term.multiply(delta[mu], t);
        }
        out += term;
    }
    return out;
}

bool satisfies_counit_axiom(const std::array<TensorSeries, 4>& delta) {
    for (int mu = 0; mu < 4; ++mu) {
        if (!(delta[mu].counit_left() == gen(mu)) || !(delta[mu].counit_right() == gen(mu))) return false;
    }
    return true;
}

BasisMap BasisMap::from_forward(std::array<MomentumPoly, 4> forward, std::string label,
                                std::array<std::string, 4> p_names, std::array<std::string, 4> x_names) {
    validate_forward(forward);
    BasisMap m;
    m.forward_ = std::move(forward);
    m.label_ = std::move(label);
    m.p_names_ = std::move(p_names);
    m.x_names_ = std::move(x_names);

    // p = p' - N(p) with N = forward - id; each pass fixes one more order.
    std::array<MomentumPoly, 4> nonlinear;
    for (int mu = 0; mu < 4; ++mu) nonlinear[mu] = m.forward_[mu] - gen(mu);
    std::array<MomentumPoly, 4> inv = generators();
    bool done = false;
    for (int pass = 0; pass < 16 && !done; ++pass) {
        std::array<MomentumPoly, 4> next;
        for (int mu = 0; mu < 4; ++mu) next[mu] = gen(mu) - nonlinear[mu].substitute(inv);
        done = next == inv;
        inv = std::move(next);
    }
    if (!done) throw InvalidMap("basis map inverse did not stabilise at the truncation order");
    m.inverse_ = std::move(inv);
    return m;
}

BasisMap BasisMap::with_inverse(std::array<MomentumPoly, 4> forward, const std::array<MomentumPoly, 4>& inverse,
                                std::string label, std::array<std::string, 4> p_names,
                                std::array<std::string, 4> x_names) {
    BasisMap m = from_forward(std::move(forward), std::move(label), std::move(p_names), std::move(x_names));
    for (int mu = 0; mu < 4; ++mu) {
        if (!(inverse[mu] == m.inverse_[mu])) {
            throw InvalidMap("supplied inverse differs from the computed one in component " + std::to_string(mu) +
                             ": " + inverse[mu].to_string(default_p_names()) + " vs " +
                             m.inverse_[mu].to_string(default_p_names()));
        }
    }
    return m;
}

std::array<MomentumPoly, 4> BasisMap::forward_after_inverse_defect() const { return defect(forward_, inverse_); }

std::array<MomentumPoly, 4> BasisMap::inverse_after_forward_defect() const { return defect(inverse_, forward_); }

BasisMap identity_map() { return BasisMap::from_forward(generators(), "identity"); }

BasisMap walk_basis_map() {
    auto mono = [](int a, int b) { return gen(a).multiply(gen(b)); };
    std::array<MomentumPoly, 4> fwd{gen(0), gen(1) + mono(2, 3) * kInvKappa, gen(2) - mono(1, 3) * kInvKappa,
                                    gen(3) + mono(1, 2) * kInvKappa};
    return BasisMap::with_inverse(std::move(fwd), walk_basis_map_printed_inverse(), "walk",
                                  {"omega", "k1", "k2", "k3"}, {"t", "x1", "x2", "x3"});
}

std::array<MomentumPoly, 4> walk_basis_map_printed_inverse() {
    auto mono = [](int a, int b) { return gen(a).multiply(gen(b)); };
    return {gen(0), gen(1) - mono(2, 3) * kInvKappa, gen(2) + mono(1, 3) * kInvKappa,
            gen(3) - mono(1, 2) * kInvKappa};
}

PairingMatrix default_pairing() {
    PairingMatrix c{};
    c[0][0] = GaussianRational::i();
    for (int i = 1; i < 4; ++i) c[i][i] = -GaussianRational::i();
    return c;
}

MappedModel map_model(const CoproductModel& model, const BasisMap& map, const PairingMatrix& pairing) {
    MappedModel out;
    out.kind = model.kind;
    out.map_label = map.label();
    out.pairing = pairing;
    out.p_names = map.p_names();
    out.x_names = map.x_names();
    for (int mu = 0; mu < 4; ++mu) {
        out.delta[mu] = coproduct_of(map.forward()[mu], model.delta).substitute(map.inverse());
    }
    return out;
}

}  // namespace weyl::hopf
