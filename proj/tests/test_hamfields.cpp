#include "doctest.h"

#include "nambu/hamfields.hpp"
#include "nambu/parse.hpp"
#include "nambu/random.hpp"
#include "oracles.hpp"

using namespace nambu;

namespace {

Polynomial P(const std::string& s, const CoordsPtr& c) { return parse_polynomial(s, c); }
KForm F(const Polynomial& f) { return KForm::scalar(f); }

} // namespace

TEST_CASE("theta ladder") {
    auto c = Coords::standard(3);
    PolyRng rng(1);
    const auto h = rng.polynomial(c, 3);
    const auto dh = d(F(h));
    CHECK(theta_ladder(h, 2) == dh);
    CHECK(theta_ladder(h, 1) == wedge(dh, dx(c, 0)) + wedge(dh, dx(c, 1)) + wedge(dh, dx(c, 2)));
    CHECK(theta_ladder(Polynomial(c, 5), 1).is_zero());
    CHECK_THROWS_AS(theta_ladder(h, 0), GradeError);
    CHECK_THROWS_AS(theta_ladder(h, 3), GradeError);

    auto c5 = Coords::standard(5);
    const auto h5 = rng.polynomial(c5, 3);
    // n = 5, k = 2: sum over i < j of dH ^ dx_i ^ dx_j
    KForm expect(c5, 3);
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = i + 1; j < 5; ++j) expect += wedge(wedge(d(F(h5)), dx(c5, i)), dx(c5, j));
    CHECK(theta_ladder(h5, 2) == expect);
}

TEST_CASE("hamiltonian fields in two and three dimensions") {
    auto c2 = Coords::standard(2);
    CHECK(hamiltonian_kvector(P("1/2*(x0^2+x1^2)", c2), 1) == dd(c2, 0) * P("x1", c2) - dd(c2, 1) * P("x0", c2));

    auto c3 = Coords::standard(3);
    PolyRng rng(2);
    for (int trial = 0; trial < 10; ++trial) {
        const auto h = rng.polynomial(c3, 3);
        const auto h0 = h.partial(0), h1 = h.partial(1), h2 = h.partial(2);
        CHECK(hamiltonian_kvector(h, 1) == vector_field({h1 - h2, h2 - h0, h0 - h1}));
        // the printed X^2 carries an extra 1/2 in front
        const auto x2 = KVector::basis(c3, {1, 2}, h0) + KVector::basis(c3, {2, 0}, h1) + KVector::basis(c3, {0, 1}, h2);
        CHECK(hamiltonian_kvector(h, 2) == x2);
    }
}

TEST_CASE("constructor identity and closed theta") {
    for (std::size_t n = 2; n <= 6; ++n) {
        auto c = Coords::standard(n);
        PolyRng rng(10 + n);
        for (std::size_t k = 1; k < n; ++k)
            for (int trial = 0; trial < 4; ++trial) {
                const auto h = rng.polynomial(c, 3);
                const auto theta = theta_ladder(h, k);
                CHECK(contract(hamiltonian_kvector(h, k), volume_form(c)) == theta);
                CHECK(d(theta).is_zero());
            }
    }
}

TEST_CASE("poisson bracket") {
    auto c2 = Coords::standard(2);
    const auto osc = P("1/2*(x0^2+x1^2)", c2);
    CHECK(poisson_bracket(osc, P("x0", c2)) == P("x1", c2));
    CHECK(poisson_bracket(osc, P("x1", c2)) == P("-x0", c2));
    CHECK(poisson_bracket(osc, Polynomial(c2, 3)).is_zero());
    CHECK_THROWS_AS(poisson_bracket(osc, osc, 2), GradeError);

    auto c3 = Coords::standard(3);
    PolyRng rng(4);
    for (int trial = 0; trial < 10; ++trial) {
        const auto h = rng.polynomial(c3, 3), g = rng.polynomial(c3, 3);
        const auto h0 = h.partial(0), h1 = h.partial(1), h2 = h.partial(2);
        CHECK(poisson_bracket(h, g) == (h1 - h2) * g.partial(0) + (h2 - h0) * g.partial(1) + (h0 - h1) * g.partial(2));
        CHECK(poisson_bracket(h, h).is_zero());
    }
}

TEST_CASE("nambu bracket") {
    auto c = Coords::make({"x", "y", "z"});
    const auto i1 = P("x+y+z", c), i2 = P("3/2*(x^2+y^2+z^2)", c);
    CHECK(nambu_bracket(i1, {i2, P("x", c)}) == P("3*z - 3*y", c));
    CHECK(nambu_bracket(i1, {i2, P("x", c)}) == oracle::jacobian({i1, i2, P("x", c)}));
    CHECK_THROWS_AS(nambu_bracket(i1, {}), GradeError);
    CHECK_THROWS_AS(nambu_bracket(i1, {i1, i2, i2}), GradeError);

    for (std::size_t n = 2; n <= 5; ++n) {
        auto cn = Coords::standard(n);
        PolyRng rng(20 + n);
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<Polynomial> fs;
            for (std::size_t i = 0; i + 1 < n; ++i) fs.push_back(rng.polynomial(cn, 3, 4));
            const auto h = rng.polynomial(cn, 3, 4);
            std::vector<Polynomial> all{h};
            all.insert(all.end(), fs.begin(), fs.end());
            // with contract(X, vol) = dH fixed, the top bracket is (-1)^(n-1) times the Jacobian
            const auto jac = oracle::jacobian(all);
            CHECK(nambu_bracket(h, fs) == (n % 2 == 1 ? jac : -jac));
        }
    }
}

TEST_CASE("nambu bracket is antisymmetric and a derivation in its arguments") {
    for (std::size_t n = 3; n <= 5; ++n) {
        auto c = Coords::standard(n);
        PolyRng rng(60 + n);
        for (std::size_t k = 1; k < n; ++k)
            for (int trial = 0; trial < 3; ++trial) {
                const auto h = rng.polynomial(c, 3, 3);
                std::vector<Polynomial> fs;
                for (std::size_t i = 0; i < k; ++i) fs.push_back(rng.polynomial(c, 2, 3));
                const auto base = nambu_bracket(h, fs);
                if (k >= 2) {
                    auto swapped = fs;
                    std::swap(swapped[0], swapped[1]);
                    CHECK(nambu_bracket(h, swapped) == -base);
                }
                const auto f = rng.polynomial(c, 2, 3), g = rng.polynomial(c, 2, 3);
                auto with_fg = fs, with_f = fs, with_g = fs;
                with_fg[0] = f * g;
                with_f[0] = f;
                with_g[0] = g;
                CHECK(nambu_bracket(h, with_fg) == f * nambu_bracket(h, with_g) + g * nambu_bracket(h, with_f));
            }
    }
    auto c2 = Coords::standard(2);
    const auto h = P("x0^3 - x1", c2);
    CHECK(nambu_bracket(h, {h}).is_zero());
}

TEST_CASE("liouville check") {
    auto c = Coords::standard(3);
    const auto ok = liouville_check(P("x0*x1*x2", c), 2);
    CHECK(ok.pass);
    CHECK(ok.theta_closed());
    CHECK(ok.lie_residual.is_zero());

    // i_X vol = x1 dx0, whose derivative is dx1 ^ dx0
    const auto bad = liouville_check(KVector::basis(c, {1, 2}, P("x1", c)));
    CHECK_FALSE(bad.pass);
    CHECK(bad.theta_residual == KForm::basis(c, {1, 0}, Polynomial(c, 1)));
    CHECK(bad.lie_residual == KForm::basis(c, {1, 0}, Polynomial(c, 1)));

    CHECK(liouville_check(KVector(c, 2)).pass);

    const auto json = ok.to_json();
    CHECK(dump(json) ==
          R"({"n":3,"k":2,"H":"x0*x1*x2","lie_residual":{"coords":["x0","x1","x2"],"grade":2,"terms":[]},"theta_closed":true,"pass":true})");
}

TEST_CASE("liouville holds for random Hamiltonians") {
    for (std::size_t n = 2; n <= 6; ++n) {
        auto c = Coords::standard(n);
        PolyRng rng(80 + n);
        for (std::size_t k = 1; k < n; ++k)
            for (int trial = 0; trial < 3; ++trial) CHECK(liouville_check(rng.polynomial(c, 3), k).pass);
    }
}

TEST_CASE("cartan distribution and contact field") {
    auto c2 = Coords::standard(2);
    const auto osc = P("1/2*(x0^2+x1^2)", c2);
    const auto thetas = cartan_distribution(osc);
    REQUIRE(thetas.size() == 2);
    const auto ext = thetas[0].coords();
    CHECK(ext->names() == std::vector<std::string>{"t", "x0", "x1"});
    CHECK(thetas[0] == dx(ext, 1) - dx(ext, 0) * P("x1", ext));
    CHECK(thetas[1] == dx(ext, 2) + dx(ext, 0) * P("x0", ext));

    const auto field = contact_field(osc);
    CHECK(field.base == dd(ext, 0) + dd(ext, 1) * P("x1", ext) - dd(ext, 2) * P("x0", ext));

    const auto flat = cartan_distribution(Polynomial(c2, 4));
    CHECK(flat[0] == dx(ext, 1));
    CHECK(contact_field(Polynomial(c2, 4)).base == dd(ext, 0));

    for (std::size_t n = 2; n <= 4; ++n) {
        auto c = Coords::standard(n);
        PolyRng rng(90 + n);
        for (int trial = 0; trial < 5; ++trial) {
            const auto h = rng.polynomial(c, 3);
            const auto cf = contact_field(h);
            for (const auto& theta : cartan_distribution(h)) CHECK(contract(cf.base, theta).is_zero());
            const auto e = cf.base.coords();
            CHECK(cf.base.coefficient({0}) == Polynomial(e, 1));
            for (std::size_t i = 0; i < n; ++i)
                CHECK(cf.base.coefficient({i + 1}) == poisson_bracket(h, Polynomial::variable(c, i)).embed(e, 1));
        }
    }
}

TEST_CASE("extended coordinates avoid name clashes") {
    auto c = Coords::make({"t", "p"});
    CHECK(extended_coords(c)->names() == std::vector<std::string>{"_t", "t", "p"});
}

TEST_CASE("poincare invariant for the oscillator") {
    auto c2 = Coords::standard(2);
    const auto h = P("1/2*(x0^2+x1^2)", c2);
    const auto inv = poincare_invariant(h);
    const auto ext = inv.volume.coords();
    const auto dt = dx(ext, 0);
    const auto dh = d(F(h.embed(ext, 1)));
    CHECK(inv.theta == dh);
    // wedge of the two Cartan forms, expanded by hand
    CHECK(inv.volume == inv.extended_volume + wedge(dh, dt));
    CHECK(d(inv.primitive) == inv.volume);
    CHECK(d(inv.volume).is_zero());

    const auto i_printed = dx(ext, 2) * P("1/2*x0", ext) - dx(ext, 1) * P("1/2*x1", ext) - dt * h.embed(ext, 1);
    CHECK(d(i_printed) == inv.extended_volume - wedge(inv.theta, dt));
    CHECK_THROWS(poincare_invariant(Polynomial(Coords::standard(3), 1)));
}
