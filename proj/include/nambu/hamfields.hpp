#pragma once

#include <cstddef>
#include <vector>

#include "nambu/exterior.hpp"
#include "nambu/serialize.hpp"

namespace nambu {

/// Ordered Hamiltonians {H1, ..., Hm} over one coordinate system,
/// 1 <= m <= n-1. The flow uses all of them: x_i' = {H1, ..., Hm, x_i}.
class NambuSystem {
  public:
    explicit NambuSystem(std::vector<Polynomial> hamiltonians);

    const CoordsPtr& coords() const noexcept { return hamiltonians_.front().coords(); }
    std::size_t dimension() const noexcept { return coords()->size(); }
    const std::vector<Polynomial>& hamiltonians() const noexcept { return hamiltonians_; }

  private:
    std::vector<Polynomial> hamiltonians_;
};

/// Theta^{n-k} = sum over increasing S with |S| = n-k-1 of dH ^ dx_S.
/// For k = n-1 this is dH.
KForm theta_ladder(const Polynomial& h, std::size_t k);

/// The k-vector X with contract(X, volume) = theta_ladder(h, k).
KVector hamiltonian_kvector(const Polynomial& h, std::size_t k);

/// {H, F1, ..., Fk} = contract(X_H^k, dF1 ^ ... ^ dFk).
/// For k = n-1 this is (-1)^(n-1) det[grad H; grad F1; ...; grad F_{n-1}];
/// the sign comes from contract(X_H^{n-1}, vol) = dH.
Polynomial nambu_bracket(const Polynomial& h, const std::vector<Polynomial>& fs);

/// {H, G} through the grade-1 field; only k = 1 is defined.
Polynomial poisson_bracket(const Polynomial& h, const Polynomial& g, std::size_t k = 1);

struct LiouvilleCertificate {
    std::size_t n;
    std::size_t k;
    std::string hamiltonian;
    KForm lie_residual;
    KForm theta_residual;
    bool pass;

    bool theta_closed() const { return theta_residual.is_zero(); }
    Json to_json() const;
};

/// Checks L_X(volume) = 0 and d(contract(X, volume)) = 0 exactly for
/// X = hamiltonian_kvector(h, k).
LiouvilleCertificate liouville_check(const Polynomial& h, std::size_t k);
/// Same check for an arbitrary multivector; hamiltonian is left empty.
LiouvilleCertificate liouville_check(const KVector& x);

/// (t, x0, ..., x{n-1}) built from the phase-space coordinates; the time
/// name is "t" unless that name is taken, in which case underscores are
/// prepended.
CoordsPtr extended_coords(const CoordsPtr& phase);

/// theta_i = dx_i - {H, x_i} dt on extended coordinates.
std::vector<KForm> cartan_distribution(const Polynomial& h);

struct ContactField {
    KVector base; // d/dt + sum {H, x_i} d/dx_i on extended coordinates
    Polynomial hamiltonian;
};

ContactField contact_field(const Polynomial& h);

struct PoincareInvariant {
    KForm volume;           // I = theta_0 ^ theta_1
    KForm primitive;        // i = K(I), d(i) = I
    KForm extended_volume;  // dx0 ^ dx1 lifted to (t, x0, x1)
    KForm theta;            // contract(X_H^1, dx0 ^ dx1) lifted
};

/// Re-expresses a form on `target`, sending coordinate i to i + offset.
KForm embed(const KForm& a, const CoordsPtr& target, std::size_t offset);

/// Cartan volume and its homotopy primitive for a two-dimensional phase space.
PoincareInvariant poincare_invariant(const Polynomial& h);

} // namespace nambu
