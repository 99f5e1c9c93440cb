#include "anho/hierarchy.hpp"

#include <doctest.h>

using namespace anho;

namespace {

real rel_err(const real& got, const real& want) {
    if (want == 0) return abs(got);
    return abs(got - want) / abs(want);
}

OscillatorSpec make_spec(double mass, double omega, double mu, int N) {
    OscillatorSpec s;
    s.mass = real(mass);
    s.omega = real(omega);
    s.mu = real(mu);
    s.N = N;
    s.hbar = 1;
    return s;
}

// Independent mirror of the hierarchy, built only from the public polynomial
// operations: form the source, expand in the Hermite basis, cancel the
// resonant component, divide mode by mode. Kept deliberately naive; the
// production solver must reproduce it exactly.
struct ReferenceSolution {
    std::vector<Poly> xi;
    std::vector<real> energies;
};

ReferenceSolution reference_hierarchy(const OscillatorSpec& spec, int n, const real& Omega,
                                      int m, HierarchyGauge gauge) {
    const ScaledCouplings c = scaled_couplings(spec, Omega);
    std::vector<Poly> xi(m + 1);
    std::vector<real> eps(m + 1);
    xi[0] = hermite(n);
    eps[0] = 2 * n + 1;
    for (int j = 1; j <= m; ++j) {
        Poly source = apply_perturbation(xi[j - 1], c, spec.N);
        for (int k = 1; k < j; ++k) source -= eps[k] * xi[j - k];
        HermiteCoeffs s = to_hermite(source);
        eps[j] = s.coeff(n);
        std::vector<real> cj(std::max(s.max_index() + 1, 0), real(0));
        for (int k = 0; k <= s.max_index(); ++k)
            if (k != n) cj[k] = s.coeff(k) / real(2 * (n - k));
        Poly p = HermiteCoeffs(std::move(cj)).to_poly();
        if (gauge == HierarchyGauge::origin)
            p -= p.coeff(n) / hermite(n).coeff(n) * hermite(n);
        xi[j] = std::move(p);
    }
    ReferenceSolution out;
    out.xi = std::move(xi);
    out.energies.resize(m + 1);
    for (int j = 0; j <= m; ++j)
        out.energies[j] = eps[j] * spec.hbar * c.Omega_tilde / 2;
    return out;
}

}  // namespace

TEST_SUITE("hierarchy") {

TEST_CASE("gamma_of closed form") {
    CHECK(rel_err(gamma_of(make_spec(0.5, 2, 8, 2)), sqrt(real(2)) / 3) <= real("1e-48"));
    CHECK(rel_err(gamma_of(make_spec(0.5, 2, 12, 3)), sqrt(real(2)) / 4) <= real("1e-48"));
    CHECK(gamma_of(make_spec(0.5, 0, 1, 2)) == real(1) / 6);
}

TEST_CASE("scaled couplings: direct evaluations") {
    auto spec = make_spec(0.5, 2, 8, 2);
    auto c = scaled_couplings(spec, real(2));
    CHECK(rel_err(c.Omega_tilde, 2 * sqrt(real(2))) <= real("1e-48"));
    CHECK(rel_err(c.beta, sqrt(real(2)) / 2) <= real("1e-48"));
    CHECK(c.r == real(1) / 2);

    SUBCASE("omega = 0 degenerates to Omega_tilde = Omega, r = 1") {
        auto c0 = scaled_couplings(make_spec(0.5, 0, 1, 2), real("3.7"));
        CHECK(c0.Omega_tilde == real("3.7"));
        CHECK(c0.r == 1);
    }
    SUBCASE("rejects Omega <= 0") {
        CHECK_THROWS_AS(scaled_couplings(spec, real(0)), std::invalid_argument);
        CHECK_THROWS_AS(scaled_couplings(spec, real(-1)), std::invalid_argument);
    }
    SUBCASE("bounds: 0 < r < 1 for omega > 0, Omega_tilde >= both frequencies") {
        for (double w : {0.5, 2.0, 11.0}) {
            auto cc = scaled_couplings(make_spec(0.5, 0.0 + w, 8, 2), real(3));
            CHECK(cc.r > 0);
            CHECK(cc.r < 1);
            CHECK(cc.Omega_tilde >= cc.Omega);
            CHECK(cc.Omega_tilde >= real(w));
        }
    }
}

TEST_CASE("scaled right-hand side maps back to the unscaled equation") {
    // With xi(x) = xihat(u_scale*x), the bracketed perturbation in x must
    // equal u_scale^2 times its scaled form in u, at machine-level agreement.
    for (int N : {2, 3, 4}) {
        auto spec = make_spec(0.5, 2, 8, N);
        const real Omega = real(2);
        auto c = scaled_couplings(spec, Omega);

        Poly xihat = hermite(2) + real(3) * hermite(1) + Poly::constant(real("0.25"));
        Poly scaled = apply_perturbation(xihat, c, N);

        const real s = c.u_scale;
        const real root = sqrt(spec.mu * spec.mass / N);
        for (double xd : {0.13, 0.51, 0.97, 1.63, 2.41}) {
            const real x(xd);
            const real u = s * x;
            const real xi_x = xihat(u);
            const real dxi_x = s * xihat.derivative()(u);  // d/dx of xihat(s x)
            const real rhs_x =
                2 * root * pow_int(x, N) / spec.hbar * dxi_x -
                pow_int(spec.mass * Omega / spec.hbar, 2) * x * x * xi_x -
                root * pow_int(x, N - 1) / (spec.hbar * spec.hbar) *
                    (2 * spec.mass * c.Omega_tilde * x * x - spec.hbar * N) * xi_x;
            CHECK(rel_err(s * s * scaled(u), rhs_x) <= real("1e-20"));
        }
    }
}

TEST_CASE("apply_perturbation symbolic expansions") {
    auto c = scaled_couplings(make_spec(0.5, 2, 8, 2), real(2));

    SUBCASE("xi = 1, N = 2: -2g u^3 - r u^2 + 2g u") {
        Poly p = apply_perturbation(Poly::constant(1), c, 2);
        CHECK(p.degree() == 3);
        CHECK(p.coeff(3) == -2 * c.g);
        CHECK(p.coeff(2) == -c.r);
        CHECK(p.coeff(1) == 2 * c.g);
        CHECK(p.coeff(0) == 0);
    }
    SUBCASE("xi = 2u, N = 3: -4g u^5 + (10g - 2r) u^3") {
        auto c3 = scaled_couplings(make_spec(0.5, 2, 12, 3), real(2));
        Poly p = apply_perturbation(Poly::monomial(1, 2), c3, 3);
        CHECK(p.degree() == 5);
        CHECK(p.coeff(5) == -4 * c3.g);
        CHECK(rel_err(p.coeff(3), 10 * c3.g - 2 * c3.r) <= real("1e-48"));
        CHECK(p.coeff(4) == 0);
        CHECK(p.coeff(2) == 0);
        CHECK(p.coeff(1) == 0);
    }
    SUBCASE("linearity: xi = 0 maps to 0") {
        CHECK(apply_perturbation(Poly(), c, 2).is_zero());
        CHECK(apply_perturbation(HermiteCoeffs(), c, 2).is_zero());
    }
    SUBCASE("hermite-basis route agrees with the polynomial route") {
        Poly xi = hermite(3) + real("0.5") * hermite(1);
        Poly via_h = apply_perturbation(to_hermite(xi), c, 2).to_poly();
        Poly direct = apply_perturbation(xi, c, 2);
        for (int k = 0; k <= direct.degree(); ++k)
            CHECK(rel_err(via_h.coeff(k), direct.coeff(k)) <= real("1e-30"));
    }
}

TEST_CASE("order zero of the hierarchy") {
    for (int n : {0, 1}) {
        auto sol = solve_hierarchy(make_spec(0.5, 2, 8, 2), n, real(3), 0);
        CHECK(sol.xi[0] == hermite(n));
        CHECK(rel_err(sol.energies[0],
                      sol.spec.hbar * sol.couplings.Omega_tilde * (2 * n + 1) / 2) <=
              real("1e-48"));
    }
}

TEST_CASE("production solver reproduces the public-operations reference") {
    struct Case {
        double mu;
        int N, n, m;
        double Omega;
    };
    for (HierarchyGauge gauge : {HierarchyGauge::origin, HierarchyGauge::hermite_orthogonal}) {
        for (const Case& tc :
             {Case{8, 2, 0, 6, 3.0}, Case{12, 3, 1, 5, 2.5}, Case{16, 4, 0, 4, 4.0}}) {
            auto spec = make_spec(0.5, 2, tc.mu, tc.N);
            auto got = solve_hierarchy(spec, tc.n, real(tc.Omega), tc.m, gauge);
            auto want = reference_hierarchy(spec, tc.n, real(tc.Omega), tc.m, gauge);
            for (int j = 0; j <= tc.m; ++j) {
                CHECK(rel_err(got.energies[j], want.energies[j]) <= real("1e-35"));
                real scale = 0;
                for (const auto& v : want.xi[j].coeffs()) {
                    const real mag = abs(v);
                    if (mag > scale) scale = mag;
                }
                if (scale == 0) scale = 1;
                const int deg = std::max(got.xi[j].degree(), want.xi[j].degree());
                for (int k = 0; k <= deg; ++k)
                    CHECK(abs(got.xi[j].coeff(k) - want.xi[j].coeff(k)) <= scale * real("1e-30"));
            }
        }
    }
}

TEST_CASE("gauge invariants and solvability") {
    for (int n : {0, 1}) {
        auto orth = solve_hierarchy(make_spec(0.5, 2, 16, 4), n, real(5), 10,
                                    HierarchyGauge::hermite_orthogonal);
        auto orig = solve_hierarchy(make_spec(0.5, 2, 16, 4), n, real(5), 10);
        for (int j = 1; j <= 10; ++j) {
            // intermediate normalization, exact in the Hermite representation;
            // the monomial round trip leaves basis-change dust only
            CHECK(orth.xi_h[j].coeff(n) == 0);
            real hscale = 0;
            for (const auto& v : orth.xi_h[j].coeffs()) {
                const real mag = abs(v);
                if (mag > hscale) hscale = mag;
            }
            CHECK(abs(to_hermite(orth.xi[j]).coeff(n)) <= hscale * real("1e-30"));
            real scale = 0;
            for (const auto& v : orig.xi[j].coeffs()) {
                const real mag = abs(v);
                if (mag > scale) scale = mag;
            }
            CHECK(abs(orig.xi[j].coeff(n)) <= scale * real("1e-40"));  // origin gauge
            CHECK(boost::multiprecision::isfinite(orig.energies[j]));
        }
    }
}

TEST_CASE("energy coefficients are gauge independent") {
    auto spec = make_spec(0.5, 2, 16, 4);
    for (int n : {0, 1}) {
        auto a = solve_hierarchy(spec, n, real(5), 9, HierarchyGauge::origin);
        auto b = solve_hierarchy(spec, n, real(5), 9, HierarchyGauge::hermite_orthogonal);
        for (int j = 0; j <= 9; ++j)
            CHECK(abs(a.energies[j] - b.energies[j]) <=
                  (abs(a.energies[j]) + 1) * real("1e-45"));
    }
}

TEST_CASE("degree growth is (N+1) per order") {
    for (int N : {2, 3, 4}) {
        auto sol = solve_hierarchy(make_spec(0.5, 2, 8, N), 1, real(3), 6);
        for (int j = 1; j <= 6; ++j) CHECK(sol.xi[j].degree() == (N + 1) * j + 1);
    }
}

TEST_CASE("odd-N corrections keep the parity of the state") {
    for (int n : {0, 1}) {
        auto sol = solve_hierarchy(make_spec(0.5, 2, 12, 3), n, real(2), 8);
        for (int j = 0; j <= 8; ++j)
            for (int k = 0; k <= sol.xi[j].degree(); ++k)
                if ((k - n) % 2 != 0) CHECK(sol.xi[j].coeff(k) == 0);
    }
}

TEST_CASE("order-0 exactness in the harmonic limit") {
    // mu = 0, Omega -> 0+: every truncation equals hbar*omega*(n + 1/2).
    auto spec = make_spec(0.5, 2, 0, 2);
    for (int n : {0, 1}) {
        auto sol = solve_hierarchy(spec, n, real("1e-25"), 5);
        CHECK(rel_err(direct_energy(sol), real(2 * n + 1)) <= real("1e-20"));
    }
}

TEST_CASE("direct_energy sums the coefficients") {
    auto sol = solve_hierarchy(make_spec(0.5, 2, 8, 2), 0, real(3), 4);
    real sum = 0;
    for (const auto& e : sol.energies) sum += e;
    CHECK(direct_energy(sol) == sum);
    auto sol0 = solve_hierarchy(make_spec(0.5, 2, 8, 2), 1, real(3), 0);
    CHECK(rel_err(direct_energy(sol0), real(3) * sol0.couplings.Omega_tilde / 2) <= real("1e-48"));
}

TEST_CASE("energy coefficients do not depend on the truncation order") {
    auto spec = make_spec(0.5, 2, 12, 3);
    auto a = solve_hierarchy(spec, 0, real("2.2"), 6);
    auto b = solve_hierarchy(spec, 0, real("2.2"), 12);
    for (int j = 0; j <= 6; ++j) CHECK(a.energies[j] == b.energies[j]);
}

TEST_CASE("wavefunction parity and origin values") {
    auto spec = make_spec(0.5, 2, 8, 2);
    SUBCASE("odd state vanishes at the origin") {
        auto sol = solve_hierarchy(spec, 1, real(3), 5);
        CHECK(wavefunction(sol, real(0)) == 0);
    }
    SUBCASE("even state at order 0 is 1 at the origin") {
        auto sol = solve_hierarchy(spec, 0, real(3), 0);
        CHECK(wavefunction(sol, real(0)) == 1);
    }
    SUBCASE("psi(x)/psi(-x) = (-1)^n") {
        for (int n : {0, 1}) {
            auto sol = solve_hierarchy(spec, n, real(3), 6);
            for (double x : {0.3, 0.9, 1.7}) {
                const real plus = wavefunction(sol, real(x));
                const real minus = wavefunction(sol, real(-x));
                CHECK(rel_err(minus, n == 0 ? plus : -plus) <= real("1e-45"));
            }
        }
    }
}

TEST_CASE("residual of the exact equation") {
    auto spec = make_spec(0.5, 2, 8, 2);

    SUBCASE("harmonic solution with mu = 0 and Omega -> 0 is exact") {
        auto hspec = make_spec(0.5, 2, 0, 2);
        for (int n : {0, 1}) {
            auto sol = solve_hierarchy(hspec, n, real("1e-12"), 3);
            auto grid = default_residual_grid(sol);
            CHECK(residual(sol, grid) <= real("1e-40"));
        }
    }
    SUBCASE("order 0 residual is the normalized perturbation of H_n") {
        for (int n : {0, 1}) {
            auto sol = solve_hierarchy(spec, n, real(3), 0);
            auto grid = default_residual_grid(sol);
            Poly pert = apply_perturbation(hermite(n), sol.couplings, spec.N);
            real worst = 0, scale = 0;
            for (const auto& x : grid) {
                const real u = sol.couplings.u_scale * x;
                const real pv = abs(pert(u)), hv = abs(hermite(n)(u));
                if (pv > worst) worst = pv;
                if (hv > scale) scale = hv;
            }
            const real want = sol.couplings.u_scale * sol.couplings.u_scale * worst / scale;
            CHECK(rel_err(residual(sol, grid), want) <= real("1e-30"));
        }
    }
    SUBCASE("residual falls with order at a fixed Omega in the stationary region") {
        auto s1 = solve_hierarchy(spec, 0, real(7), 1);
        auto s3 = solve_hierarchy(spec, 0, real(7), 3);
        auto s5 = solve_hierarchy(spec, 0, real(7), 5);
        auto grid = default_residual_grid(s5);
        const real r1 = residual(s1, grid), r3 = residual(s3, grid), r5 = residual(s5, grid);
        CHECK(r3 < r1);
        CHECK(r5 < r3);
    }
    SUBCASE("rejects nonpositive grid points") {
        auto sol = solve_hierarchy(spec, 0, real(3), 2);
        std::vector<real> bad{real(0), real(1)};
        CHECK_THROWS_AS(residual(sol, bad), std::invalid_argument);
    }
}

TEST_CASE("input validation") {
    auto spec = make_spec(0.5, 2, 8, 2);
    CHECK_THROWS_AS(solve_hierarchy(spec, 2, real(3), 4), std::invalid_argument);
    CHECK_THROWS_AS(solve_hierarchy(spec, 0, real(3), 41), std::invalid_argument);
    CHECK_THROWS_AS(solve_hierarchy(spec, 0, real(0), 4), std::invalid_argument);
    OscillatorSpec bad = spec;
    bad.mass = 0;
    CHECK_THROWS_AS(solve_hierarchy(bad, 0, real(3), 4), std::invalid_argument);
    bad = spec;
    bad.N = 1;
    CHECK_THROWS_AS(solve_hierarchy(bad, 0, real(3), 4), std::invalid_argument);
}

}  // TEST_SUITE
