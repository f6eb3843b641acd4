#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "nambu/hamfields.hpp"

namespace nambu {

using Field = std::vector<Polynomial>;

/// x_i' = {H1, ..., H_{n-1}, x_i}. Requires exactly n-1 Hamiltonians.
Field flow_field(const NambuSystem& system);

Polynomial divergence(const Field& field);

/// curl of a three-component field on three coordinates.
Field curl(const Field& h);

/// A vector potential h with curl(h) = field, obtained by pairing the field
/// with the volume form and applying the homotopy operator. Three
/// dimensions only; the field must be divergence free.
Field vector_hamiltonian(const Field& field);

struct FlowSpec {
    NambuSystem system;
    std::vector<double> initial_state;
    double t_end;
    double step;

    /// Throws std::invalid_argument on a bad state length or time grid.
    void validate() const;
};

struct Sample {
    double t;
    std::vector<double> state;
    std::vector<double> invariants;
};

struct Trajectory {
    std::vector<Sample> samples;
    /// max over samples of |I_j(t) - I_j(0)|, one entry per Hamiltonian
    std::vector<double> drift;
};

class NonFiniteState : public std::runtime_error {
  public:
    NonFiniteState(double t, Trajectory partial)
        : std::runtime_error("non-finite state at t = " + std::to_string(t)), partial_(std::move(partial)) {}
    /// Samples up to and including the last finite state.
    const Trajectory& partial() const noexcept { return partial_; }

  private:
    Trajectory partial_;
};

/// Classical fourth-order Runge-Kutta with a fixed step, sampling after every
/// step. The last step is shortened so the final sample lands on t_end.
Trajectory integrate(const FlowSpec& spec);

/// Same integrator on an explicit right-hand side; invariants are evaluated
/// at each sample.
Trajectory integrate(const Field& rhs, const std::vector<Polynomial>& invariants,
                     const std::vector<double>& initial_state, double t_end, double step);

/// Header "t,x0,...,x{n-1},I1,...,Im", one row per sample, then one
/// "# drift Ij = <value>" line per invariant. 17 significant digits.
void write_csv(std::ostream& os, const Trajectory& traj);

/// Row-major 3x3 matrix of polynomials.
class PolyMatrix3 {
  public:
    explicit PolyMatrix3(const CoordsPtr& coords);
    PolyMatrix3(const CoordsPtr& coords, const std::vector<std::vector<Rational>>& constant);

    Polynomial& operator()(std::size_t r, std::size_t c) { return entries_.at(3 * r + c); }
    const Polynomial& operator()(std::size_t r, std::size_t c) const { return entries_.at(3 * r + c); }
    const CoordsPtr& coords() const noexcept { return entries_.front().coords(); }

    Polynomial trace() const;
    bool is_zero() const;
    bool is_symmetric() const;
    bool is_antisymmetric() const;

    friend PolyMatrix3 operator*(const PolyMatrix3& a, const PolyMatrix3& b);
    friend PolyMatrix3 operator-(const PolyMatrix3& a, const PolyMatrix3& b);
    friend bool operator==(const PolyMatrix3&, const PolyMatrix3&) = default;

  private:
    std::vector<Polynomial> entries_;
};

struct LaxPair {
    PolyMatrix3 l; // symmetric
    PolyMatrix3 m; // antisymmetric, constant

    LaxPair(PolyMatrix3 l, PolyMatrix3 m);
};

/// L = [[x,z,y],[z,y,x],[y,x,z]], M = 1/2 [[0,-1,1],[1,0,-1],[-1,1,0]]
/// on the given three coordinates.
LaxPair rigid_body_lax_pair(const CoordsPtr& coords);

/// The Euler top field (y-z, z-x, x-y).
Field rigid_body_field(const CoordsPtr& coords);

/// dL/dt along the field (chain rule, exact) minus [M, L] = ML - LM.
PolyMatrix3 lax_residual(const LaxPair& pair, const Field& field);

} // namespace nambu
