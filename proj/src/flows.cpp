#include "nambu/flows.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace nambu {

Field flow_field(const NambuSystem& system) {
    const std::size_t n = system.dimension();
    const auto& hs = system.hamiltonians();
    if (hs.size() + 1 != n) throw std::invalid_argument("flow field needs exactly n-1 Hamiltonians");
    const std::vector<Polynomial> tail(hs.begin() + 1, hs.end());
    Field rhs;
    for (std::size_t i = 0; i < n; ++i) {
        auto args = tail;
        args.push_back(Polynomial::variable(system.coords(), i));
        rhs.push_back(nambu_bracket(hs.front(), args));
    }
    return rhs;
}

Polynomial divergence(const Field& field) {
    if (field.empty()) throw std::invalid_argument("empty field");
    if (field.size() != field.front().dimension()) throw std::invalid_argument("field length must equal dimension");
    Polynomial div(field.front().coords());
    for (std::size_t i = 0; i < field.size(); ++i) div += field[i].partial(i);
    return div;
}

Field curl(const Field& h) {
    if (h.size() != 3 || h.front().dimension() != 3) throw std::invalid_argument("curl is three-dimensional");
    return {h[2].partial(1) - h[1].partial(2), h[0].partial(2) - h[2].partial(0), h[1].partial(0) - h[0].partial(1)};
}

Field vector_hamiltonian(const Field& field) {
    if (field.size() != 3 || field.front().dimension() != 3)
        throw std::invalid_argument("vector Hamiltonian is three-dimensional");
    if (!divergence(field).is_zero()) throw std::invalid_argument("field is not divergence free");
    const auto& coords = field.front().coords();
    const KForm omega = contract(vector_field(field), volume_form(coords));
    const KForm nu = homotopy(omega);
    Field h;
    for (std::size_t i = 0; i < 3; ++i) h.push_back(nu.coefficient({i}));
    return h;
}

void FlowSpec::validate() const {
    if (initial_state.size() != system.dimension()) throw std::invalid_argument("initial state has wrong dimension");
    if (!std::isfinite(t_end) || t_end < 0) throw std::invalid_argument("t_end must be finite and >= 0");
    if (!std::isfinite(step) || step <= 0) throw std::invalid_argument("step must be positive");
    if (t_end > 0 && step >= t_end) throw std::invalid_argument("step must be smaller than t_end");
}

Trajectory integrate(const FlowSpec& spec) {
    spec.validate();
    return integrate(flow_field(spec.system), spec.system.hamiltonians(), spec.initial_state, spec.t_end, spec.step);
}

namespace {

// Flattened polynomial for fast double evaluation.
class CompiledPoly {
  public:
    explicit CompiledPoly(const Polynomial& p) : n_(p.dimension()) {
        for (const auto& [m, c] : p.terms()) {
            coefs_.push_back(c.to_double());
            exps_.insert(exps_.end(), m.exponents().begin(), m.exponents().end());
        }
    }

    double operator()(const std::vector<double>& x) const {
        double sum = 0.0;
        for (std::size_t t = 0; t < coefs_.size(); ++t) {
            double v = coefs_[t];
            const auto* e = &exps_[t * n_];
            for (std::size_t i = 0; i < n_; ++i)
                for (std::uint32_t k = 0; k < e[i]; ++k) v *= x[i];
            sum += v;
        }
        return sum;
    }

  private:
    std::size_t n_;
    std::vector<double> coefs_;
    std::vector<std::uint32_t> exps_;
};

bool all_finite(const std::vector<double>& v) {
    return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

} // namespace

Trajectory integrate(const Field& rhs, const std::vector<Polynomial>& invariants,
                     const std::vector<double>& initial_state, double t_end, double step) {
    const std::size_t n = rhs.size();
    if (initial_state.size() != n) throw std::invalid_argument("initial state has wrong dimension");
    if (!(step > 0) || !(t_end >= 0)) throw std::invalid_argument("bad time grid");

    std::vector<CompiledPoly> f(rhs.begin(), rhs.end());
    std::vector<CompiledPoly> inv(invariants.begin(), invariants.end());

    const auto eval_rhs = [&](const std::vector<double>& x, std::vector<double>& out) {
        for (std::size_t i = 0; i < n; ++i) out[i] = f[i](x);
    };
    const auto eval_inv = [&](const std::vector<double>& x) {
        std::vector<double> out(inv.size());
        for (std::size_t j = 0; j < inv.size(); ++j) out[j] = inv[j](x);
        return out;
    };

    Trajectory traj;
    traj.samples.push_back({0.0, initial_state, eval_inv(initial_state)});
    traj.drift.assign(inv.size(), 0.0);
    const std::vector<double> i0 = traj.samples.front().invariants;

    const auto steps = t_end == 0 ? std::size_t{0} : static_cast<std::size_t>(std::ceil(t_end / step - 1e-9));
    std::vector<double> x = initial_state, k1(n), k2(n), k3(n), k4(n), tmp(n);
    double t = 0.0;
    for (std::size_t s = 1; s <= steps; ++s) {
        const double t_next = s == steps ? t_end : static_cast<double>(s) * step;
        const double h = t_next - t;
        eval_rhs(x, k1);
        for (std::size_t i = 0; i < n; ++i) tmp[i] = x[i] + 0.5 * h * k1[i];
        eval_rhs(tmp, k2);
        for (std::size_t i = 0; i < n; ++i) tmp[i] = x[i] + 0.5 * h * k2[i];
        eval_rhs(tmp, k3);
        for (std::size_t i = 0; i < n; ++i) tmp[i] = x[i] + h * k3[i];
        eval_rhs(tmp, k4);
        for (std::size_t i = 0; i < n; ++i) tmp[i] = x[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        if (!all_finite(tmp)) throw NonFiniteState(t_next, std::move(traj));
        x = tmp;
        t = t_next;
        auto values = eval_inv(x);
        if (!all_finite(values)) throw NonFiniteState(t_next, std::move(traj));
        for (std::size_t j = 0; j < values.size(); ++j) traj.drift[j] = std::max(traj.drift[j], std::abs(values[j] - i0[j]));
        traj.samples.push_back({t, x, std::move(values)});
    }
    return traj;
}

void write_csv(std::ostream& os, const Trajectory& traj) {
    if (traj.samples.empty()) return;
    const auto& first = traj.samples.front();
    const auto fmt = [](double v) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", v);
        return std::string(buf);
    };
    os << "t";
    for (std::size_t i = 0; i < first.state.size(); ++i) os << ",x" << i;
    for (std::size_t j = 0; j < first.invariants.size(); ++j) os << ",I" << j + 1;
    os << '\n';
    for (const auto& s : traj.samples) {
        os << fmt(s.t);
        for (double v : s.state) os << ',' << fmt(v);
        for (double v : s.invariants) os << ',' << fmt(v);
        os << '\n';
    }
    for (std::size_t j = 0; j < traj.drift.size(); ++j) os << "# drift I" << j + 1 << " = " << fmt(traj.drift[j]) << '\n';
}

PolyMatrix3::PolyMatrix3(const CoordsPtr& coords) : entries_(9, Polynomial(coords)) {}

PolyMatrix3::PolyMatrix3(const CoordsPtr& coords, const std::vector<std::vector<Rational>>& constant) : PolyMatrix3(coords) {
    if (constant.size() != 3) throw std::invalid_argument("3x3 matrix expected");
    for (std::size_t r = 0; r < 3; ++r) {
        if (constant[r].size() != 3) throw std::invalid_argument("3x3 matrix expected");
        for (std::size_t c = 0; c < 3; ++c) (*this)(r, c) = Polynomial(coords, constant[r][c]);
    }
}

Polynomial PolyMatrix3::trace() const { return entries_[0] + entries_[4] + entries_[8]; }

bool PolyMatrix3::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

bool PolyMatrix3::is_symmetric() const {
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = r + 1; c < 3; ++c)
            if (!((*this)(r, c) == (*this)(c, r))) return false;
    return true;
}

bool PolyMatrix3::is_antisymmetric() const {
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = r; c < 3; ++c)
            if (!((*this)(r, c) == -(*this)(c, r))) return false;
    return true;
}

PolyMatrix3 operator*(const PolyMatrix3& a, const PolyMatrix3& b) {
    PolyMatrix3 r(a.coords());
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t k = 0; k < 3; ++k) r(i, j) += a(i, k) * b(k, j);
    return r;
}

PolyMatrix3 operator-(const PolyMatrix3& a, const PolyMatrix3& b) {
    PolyMatrix3 r(a);
    for (std::size_t i = 0; i < 9; ++i) r.entries_[i] -= b.entries_[i];
    return r;
}

LaxPair::LaxPair(PolyMatrix3 l_, PolyMatrix3 m_) : l(std::move(l_)), m(std::move(m_)) {
    if (!same_coords(l.coords(), m.coords())) throw CoordinateMismatch();
    if (!l.is_symmetric()) throw std::invalid_argument("L must be symmetric");
    if (!m.is_antisymmetric()) throw std::invalid_argument("M must be antisymmetric");
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c)
            if (!m(r, c).is_constant()) throw std::invalid_argument("M must be constant");
}

LaxPair rigid_body_lax_pair(const CoordsPtr& coords) {
    if (coords->size() != 3) throw std::invalid_argument("rigid body lives on three coordinates");
    const auto x = Polynomial::variable(coords, 0);
    const auto y = Polynomial::variable(coords, 1);
    const auto z = Polynomial::variable(coords, 2);
    PolyMatrix3 l(coords);
    const Polynomial rows[3][3] = {{x, z, y}, {z, y, x}, {y, x, z}};
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) l(r, c) = rows[r][c];
    const Rational h(1, 2);
    PolyMatrix3 m(coords, {{0, -h, h}, {h, 0, -h}, {-h, h, 0}});
    return LaxPair(std::move(l), std::move(m));
}

Field rigid_body_field(const CoordsPtr& coords) {
    if (coords->size() != 3) throw std::invalid_argument("rigid body lives on three coordinates");
    const auto x = Polynomial::variable(coords, 0);
    const auto y = Polynomial::variable(coords, 1);
    const auto z = Polynomial::variable(coords, 2);
    return {y - z, z - x, x - y};
}

PolyMatrix3 lax_residual(const LaxPair& pair, const Field& field) {
    const auto& coords = pair.l.coords();
    if (coords->size() != 3 || field.size() != 3) throw std::invalid_argument("Lax residual is three-dimensional");
    PolyMatrix3 ldot(coords);
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c)
            for (std::size_t i = 0; i < 3; ++i) ldot(r, c) += pair.l(r, c).partial(i) * field[i];
    return ldot - (pair.m * pair.l - pair.l * pair.m);
}

} // namespace nambu
