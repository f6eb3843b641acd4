#include "nambu/hamfields.hpp"

#include <algorithm>

namespace nambu {
namespace {

void require_grade_range(std::size_t n, std::size_t k) {
    if (k < 1 || k + 1 > n)
        throw GradeError("grade " + std::to_string(k) + " outside 1.." + std::to_string(n > 0 ? n - 1 : 0));
}

} // namespace

NambuSystem::NambuSystem(std::vector<Polynomial> hamiltonians) : hamiltonians_(std::move(hamiltonians)) {
    if (hamiltonians_.empty()) throw std::invalid_argument("a Nambu system needs at least one Hamiltonian");
    const auto& c = hamiltonians_.front().coords();
    for (const auto& h : hamiltonians_)
        if (!same_coords(c, h.coords())) throw CoordinateMismatch();
    if (hamiltonians_.size() + 1 > c->size())
        throw std::invalid_argument("a Nambu system on n coordinates takes at most n-1 Hamiltonians");
}

KForm theta_ladder(const Polynomial& h, std::size_t k) {
    const auto& coords = h.coords();
    const std::size_t n = coords->size();
    require_grade_range(n, k);
    const KForm dh = d(KForm::scalar(h));
    KForm theta(coords, n - k);
    for (const auto& s : index_subsets(n, n - k - 1)) theta += wedge(dh, KForm::basis(coords, s));
    return theta;
}

KVector hamiltonian_kvector(const Polynomial& h, std::size_t k) {
    return omega_inverse(theta_ladder(h, k), volume_form(h.coords()));
}

Polynomial nambu_bracket(const Polynomial& h, const std::vector<Polynomial>& fs) {
    const auto& coords = h.coords();
    require_grade_range(coords->size(), fs.size());
    KForm wedge_df = KForm::scalar(Polynomial(coords, 1));
    for (const auto& f : fs) {
        if (!same_coords(coords, f.coords())) throw CoordinateMismatch();
        wedge_df = wedge(wedge_df, d(KForm::scalar(f)));
    }
    return contract(hamiltonian_kvector(h, fs.size()), wedge_df).coefficient({});
}

Polynomial poisson_bracket(const Polynomial& h, const Polynomial& g, std::size_t k) {
    if (k != 1) throw GradeError("the two-argument bracket is defined for grade 1 only");
    return nambu_bracket(h, {g});
}

Json LiouvilleCertificate::to_json() const {
    Json j;
    j["n"] = n;
    j["k"] = k;
    j["H"] = hamiltonian;
    j["lie_residual"] = nambu::to_json(lie_residual);
    j["theta_closed"] = theta_closed();
    j["pass"] = pass;
    return j;
}

LiouvilleCertificate liouville_check(const KVector& x) {
    const KForm omega = volume_form(x.coords());
    KForm lie = lie_derivative(x, omega);
    KForm theta = d(contract(x, omega));
    const bool ok = lie.is_zero() && theta.is_zero();
    return LiouvilleCertificate{x.dimension(), x.grade(), "", std::move(lie), std::move(theta), ok};
}

LiouvilleCertificate liouville_check(const Polynomial& h, std::size_t k) {
    auto cert = liouville_check(hamiltonian_kvector(h, k));
    cert.hamiltonian = h.to_string();
    return cert;
}

CoordsPtr extended_coords(const CoordsPtr& phase) {
    std::string time = "t";
    const auto& names = phase->names();
    while (std::find(names.begin(), names.end(), time) != names.end()) time = "_" + time;
    std::vector<std::string> ext{time};
    ext.insert(ext.end(), names.begin(), names.end());
    return Coords::make(std::move(ext));
}

KForm embed(const KForm& a, const CoordsPtr& target, std::size_t offset) {
    KForm r(target, a.grade());
    for (const auto& [idx, f] : a.terms()) {
        IndexSet shifted = idx;
        for (auto& i : shifted) i += offset;
        r.add_term(shifted, f.embed(target, offset));
    }
    return r;
}

namespace {

std::vector<Polynomial> canonical_velocities(const Polynomial& h, const CoordsPtr& ext) {
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < h.dimension(); ++i)
        out.push_back(poisson_bracket(h, Polynomial::variable(h.coords(), i)).embed(ext, 1));
    return out;
}

} // namespace

std::vector<KForm> cartan_distribution(const Polynomial& h) {
    const auto ext = extended_coords(h.coords());
    const KForm dt = dx(ext, 0);
    std::vector<KForm> thetas;
    const auto vel = canonical_velocities(h, ext);
    for (std::size_t i = 0; i < vel.size(); ++i) thetas.push_back(dx(ext, i + 1) - dt * vel[i]);
    return thetas;
}

ContactField contact_field(const Polynomial& h) {
    const auto ext = extended_coords(h.coords());
    KVector field = dd(ext, 0);
    const auto vel = canonical_velocities(h, ext);
    for (std::size_t i = 0; i < vel.size(); ++i) field += dd(ext, i + 1) * vel[i];
    return ContactField{std::move(field), h};
}

PoincareInvariant poincare_invariant(const Polynomial& h) {
    if (h.dimension() != 2) throw std::invalid_argument("the Poincare invariant is built for a two-dimensional phase space");
    const auto ext = extended_coords(h.coords());
    const auto thetas = cartan_distribution(h);
    KForm volume = wedge(thetas[0], thetas[1]);
    KForm primitive = homotopy(volume);
    KForm ext_volume = embed(volume_form(h.coords()), ext, 1);
    KForm theta = embed(contract(hamiltonian_kvector(h, 1), volume_form(h.coords())), ext, 1);
    return PoincareInvariant{std::move(volume), std::move(primitive), std::move(ext_volume), std::move(theta)};
}

} // namespace nambu
