// Acceptance suite: one line per criterion, exit status 0 only when every
// criterion passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "nambu/cli.hpp"
#include "nambu/flows.hpp"
#include "nambu/hamfields.hpp"
#include "nambu/parse.hpp"
#include "nambu/random.hpp"

using namespace nambu;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

// Collects named sub-checks and reports the ones that failed.
class Checks {
  public:
    void operator()(const std::string& name, bool ok) {
        ++total_;
        if (!ok) failed_.push_back(name);
    }
    void note(const std::string& text) { notes_.push_back(text); }
    Outcome outcome() const {
        std::string detail = std::to_string(total_ - failed_.size()) + "/" + std::to_string(total_) + " checks";
        for (const auto& f : failed_) detail += "; FAILED: " + f;
        for (const auto& n : notes_) detail += "; " + n;
        return {failed_.empty(), detail};
    }

  private:
    int total_ = 0;
    std::vector<std::string> failed_;
    std::vector<std::string> notes_;
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

CoordsPtr xyz() { return Coords::make({"x", "y", "z"}); }
Polynomial P(const std::string& s, const CoordsPtr& c) { return parse_polynomial(s, c); }
KForm F(const Polynomial& f) { return KForm::scalar(f); }

Outcome liouville_suite() {
    const auto start = std::chrono::steady_clock::now();
    Checks check;
    int runs = 0, passes = 0;
    for (std::size_t n = 2; n <= 6; ++n) {
        const auto c = Coords::standard(n);
        for (std::size_t k = 1; k < n; ++k) {
            PolyRng rng(1000 * n + k);
            for (int trial = 0; trial < 20; ++trial) {
                const auto cert = liouville_check(rng.polynomial(c, 3), k);
                ++runs;
                if (cert.lie_residual.is_zero() && cert.theta_closed()) ++passes;
            }
        }
    }
    const double secs = seconds_since(start);
    check("all " + std::to_string(runs) + " certificates exact zero", passes == runs && runs == 300);
    check("runtime under 60 s", secs < 60.0);
    check.note(std::to_string(passes) + "/" + std::to_string(runs) + " in " + fmt(secs) + " s");
    return check.outcome();
}

Outcome symplectic_reproduction() {
    Checks check;
    const auto c = Coords::standard(2);
    const auto h = P("1/2*(x0^2+x1^2)", c);
    const auto x = hamiltonian_kvector(h, 1);
    check("X_H = x1 d0 - x0 d1", x == dd(c, 0) * P("x1", c) - dd(c, 1) * P("x0", c));
    check("X_H contracted with the volume is dH", contract(x, volume_form(c)) == d(F(h)));

    const auto thetas = cartan_distribution(h);
    const auto ext = thetas[0].coords();
    const auto dt = dx(ext, 0);
    check("theta_0 = dx0 - x1 dt", thetas[0] == dx(ext, 1) - dt * P("x1", ext));
    check("theta_1 = dx1 + x0 dt", thetas[1] == dx(ext, 2) + dt * P("x0", ext));

    const auto inv = poincare_invariant(h);
    const KForm printed_identity = inv.extended_volume - wedge(inv.theta, dt);
    const KForm i_printed = dx(ext, 2) * P("1/2*x0", ext) - dx(ext, 1) * P("1/2*x1", ext) - dt * h.embed(ext, 1);
    check("I = theta_0^theta_1 = vol - (X_H contracted with vol)^dt", inv.volume == printed_identity);
    check("d(i_printed) = I", d(i_printed) == inv.volume);
    check("d(K(I)) = I", d(inv.primitive) == inv.volume);

    if (inv.volume == inv.extended_volume + wedge(inv.theta, dt))
        check.note("computed theta_0^theta_1 = vol + dH^dt");
    if (d(i_printed) == printed_identity) check.note("d(i_printed) = vol - dH^dt");
    return check.outcome();
}

Outcome three_dim_reproduction() {
    Checks check;
    const auto c = Coords::standard(3);
    PolyRng rng(33);
    bool x1_ok = true, x2_ok = true, pb_ok = true, triple_ok = true, det_ok = true;
    for (int trial = 0; trial < 25; ++trial) {
        const auto h = rng.polynomial(c, 3), f = rng.polynomial(c, 3), g = rng.polynomial(c, 3);
        const auto h0 = h.partial(0), h1 = h.partial(1), h2 = h.partial(2);
        const auto f0 = f.partial(0), f1 = f.partial(1), f2 = f.partial(2);
        const auto g0 = g.partial(0), g1 = g.partial(1), g2 = g.partial(2);

        x1_ok &= hamiltonian_kvector(h, 1) == vector_field({h1 - h2, h2 - h0, h0 - h1});
        const Rational half(1, 2);
        const auto printed_x2 = KVector::basis(c, {1, 2}, half * h0) + KVector::basis(c, {2, 0}, half * h1) +
                                KVector::basis(c, {0, 1}, half * h2);
        x2_ok &= hamiltonian_kvector(h, 2) == printed_x2 * Polynomial(c, 2);

        pb_ok &= poisson_bracket(h, g) == (h1 - h2) * g0 + (h2 - h0) * g1 + (h0 - h1) * g2;

        const auto printed_triple = half * (h0 * (f1 * g2 - f2 * g1) + h1 * (f2 * g0 - f0 * g2) + h2 * (f0 * g1 - f1 * g0));
        const auto ours = nambu_bracket(h, {f, g});
        triple_ok &= ours == printed_triple * Polynomial(c, 2);
        const auto det = h0 * (f1 * g2 - f2 * g1) - h1 * (f0 * g2 - f2 * g0) + h2 * (f0 * g1 - f1 * g0);
        det_ok &= ours == det;
    }
    check("X^1 verbatim", x1_ok);
    check("X^2 = 2 x printed (1/2 prefactor dropped)", x2_ok);
    check("{H,G} expansion", pb_ok);
    check("{H,F,G} = 2 x printed expansion", triple_ok);
    check("{H,F,G} = Jacobian determinant", det_ok);
    return check.outcome();
}

Outcome euler_homotopy() {
    Checks check;
    const auto c = xyz();
    const KForm omega = KForm::basis(c, {1, 2}, P("y - z", c)) + KForm::basis(c, {2, 0}, P("z - x", c)) +
                        KForm::basis(c, {0, 1}, P("x - y", c));
    const KForm nu = homotopy(omega);
    check("h1", nu.coefficient({0}) == P("1/3*(y^2+z^2-x*(y+z))", c));
    check("h2", nu.coefficient({1}) == P("1/3*(z^2+x^2-y*(z+x))", c));
    check("h3", nu.coefficient({2}) == P("1/3*(x^2+y^2-z*(x+y))", c));
    check("d(K(omega)) = omega", d(nu) == omega);
    check("vector_hamiltonian(Dx) gives the same h",
          vector_hamiltonian(rigid_body_field(c)) == Field{nu.coefficient({0}), nu.coefficient({1}), nu.coefficient({2})});
    return check.outcome();
}

Outcome euler_lax() {
    Checks check;
    const auto c = xyz();
    const auto pair = rigid_body_lax_pair(c);
    check("Lax residual is the zero matrix", lax_residual(pair, rigid_body_field(c)).is_zero());
    check("tr L = I1", pair.l.trace() == P("x+y+z", c));
    check("tr(L^2)/2 = I2", Rational(1, 2) * (pair.l * pair.l).trace() == P("3/2*(x^2+y^2+z^2)", c));
    return check.outcome();
}

Outcome euler_bracket_dynamics() {
    Checks check;
    const auto c = xyz();
    const auto i1 = P("x+y+z", c), i2 = P("3/2*(x^2+y^2+z^2)", c);
    const auto dx_field = rigid_body_field(c);
    const auto bracket_field = flow_field(NambuSystem({i1, i2}));
    for (std::size_t i = 0; i < 3; ++i)
        check("{I1,I2,x" + std::to_string(i) + "} = -3 (Dx)_" + std::to_string(i),
              nambu_bracket(i1, {i2, Polynomial::variable(c, i)}) == Rational(-3) * dx_field[i] &&
                  bracket_field[i] == Rational(-3) * dx_field[i]);
    const auto along = [&](const Polynomial& inv, const Field& f) {
        Polynomial r(c);
        for (std::size_t i = 0; i < 3; ++i) r += inv.partial(i) * f[i];
        return r;
    };
    check("Dx conserves I1", along(i1, dx_field).is_zero());
    check("Dx conserves I2", along(i2, dx_field).is_zero());
    check("bracket field conserves I1", along(i1, bracket_field).is_zero());
    check("bracket field conserves I2", along(i2, bracket_field).is_zero());
    return check.outcome();
}

Outcome homotopy_identity() {
    Checks check;
    int forms = 0, ok = 0;
    PolyRng rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        const auto n = static_cast<std::size_t>(2 + trial % 4);
        const auto c = Coords::standard(n);
        const auto k = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(n) - 1));
        const auto a = rng.form(c, k, 3, 4);
        ++forms;
        if (d(homotopy(a)) + homotopy(d(a)) == a) ++ok;
    }
    check("dK + Kd = id on " + std::to_string(forms) + " forms", ok == forms && forms == 200);
    return check.outcome();
}

Outcome numeric_conservation() {
    Checks check;
    const auto c = xyz();
    const NambuSystem euler({P("x+y+z", c), P("3/2*(x^2+y^2+z^2)", c)});
    const auto start = std::chrono::steady_clock::now();
    const auto coarse = integrate(FlowSpec{euler, {1, 0, 0}, 10.0, 1e-3});
    const auto fine = integrate(FlowSpec{euler, {1, 0, 0}, 10.0, 5e-4});
    const double secs = seconds_since(start);
    check("I1 drift <= 1e-8", coarse.drift[0] <= 1e-8);
    check("I2 drift <= 1e-8", coarse.drift[1] <= 1e-8);
    const double max_coarse = std::max(coarse.drift[0], coarse.drift[1]);
    const double max_fine = std::max(fine.drift[0], fine.drift[1]);
    const double ratio = max_coarse / max_fine;
    check("halving the step cuts drift by a factor in [12, 20]", ratio >= 12.0 && ratio <= 20.0);
    check("runtime under 5 s", secs < 5.0);
    check.note("drift I1 " + fmt(coarse.drift[0]) + ", I2 " + fmt(coarse.drift[1]) + ", ratio " + fmt(ratio) + ", " +
               fmt(secs) + " s");
    return check.outcome();
}

Outcome determinism() {
    Checks check;
    const std::vector<std::string> args{"nambu", "verify", "--dim", "5", "--grade", "2", "--random", "20", "--degree", "3", "--seed", "42"};
    std::ostringstream out1, err1, out2, err2;
    const int c1 = cli::run(args, out1, err1);
    const int c2 = cli::run(args, out2, err2);
    check("both runs pass", c1 == 0 && c2 == 0);
    check("byte-identical certificates", out1.str() == out2.str() && !out1.str().empty());
    return check.outcome();
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"1 Liouville identity for random Hamiltonians, n=2..6", liouville_suite},
        {"2 two-dimensional symplectic case and Poincare invariant", symplectic_reproduction},
        {"3 three-dimensional fields and brackets", three_dim_reproduction},
        {"4 rigid-body homotopy potential", euler_homotopy},
        {"5 rigid-body Lax pair", euler_lax},
        {"6 rigid-body bracket dynamics", euler_bracket_dynamics},
        {"7 homotopy identity on 200 random forms", homotopy_identity},
        {"8 numeric conservation and fourth-order drift", numeric_conservation},
        {"9 deterministic verify certificates", determinism},
    };
    int failed = 0;
    for (const auto& [name, run] : criteria) {
        Outcome o{false, ""};
        try {
            o = run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.pass) ++failed;
        std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << name << " -- " << o.detail << '\n';
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
