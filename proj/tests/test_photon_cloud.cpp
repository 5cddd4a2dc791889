#include <catch2/catch_amalgamated.hpp>

#include <numbers>

#include "helpers.hpp"
#include "softdress/photon_cloud.hpp"

using namespace softdress;
using namespace softdress::testing;

namespace {

double abs2(const ComplexFourVector& f)
{
    return std::norm(f.t) + std::norm(f.x) + std::norm(f.y) + std::norm(f.z);
}

// Independent oracle for the angular density: explicit transverse
// polarization vectors applied to cloud_amplitude at fixed photon energy.
double transverse_density_oracle(const CloudSpec& spec, double omega, const QuadratureSpec& quad)
{
    double sum = 0.0;
    for (const auto& node : sphere_quadrature(quad)) {
        const Vec3 n = node.direction;
        // transverse basis perpendicular to n
        Vec3 seed = std::abs(n[0]) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
        Vec3 e1{n[1] * seed[2] - n[2] * seed[1], n[2] * seed[0] - n[0] * seed[2],
                n[0] * seed[1] - n[1] * seed[0]};
        e1 = scale3(e1, 1.0 / norm3(e1));
        const Vec3 e2{n[1] * e1[2] - n[2] * e1[1], n[2] * e1[0] - n[0] * e1[2],
                      n[0] * e1[1] - n[1] * e1[0]};

        const ComplexFourVector f = cloud_amplitude(spec, FourVector(omega, scale3(n, omega)));
        const auto fs = f.spatial();
        Complex p1 = 0.0, p2 = 0.0;
        for (int a = 0; a < 3; ++a) {
            p1 += e1[a] * fs[a];
            p2 += e2[a] * fs[a];
        }
        sum += node.weight * (std::norm(p1) + std::norm(p2));
    }
    return omega * omega * omega * sum;  // degree-0 in omega by eikonal scaling
}

}  // namespace

TEST_CASE("cloud amplitude of a static particle points along eta")
{
    const CloudSpec spec({Particle(1.0, {0, 0, 0})}, 0.0, 1.0);
    const double k0 = 0.5;
    const ComplexFourVector f = cloud_amplitude(spec, FourVector(k0, {0, 0, k0}));
    // f^mu = norm * p^mu/(p.k) = norm * (1,0)/k0
    const double expected =
        1.0 / (std::pow(2.0 * std::numbers::pi, 1.5) * std::sqrt(2.0 * k0) * k0);
    CHECK_THAT(f.t.real(), Catch::Matchers::WithinRel(expected, 1e-12));
    CHECK(std::abs(f.x) == 0.0);
    CHECK(std::abs(f.y) == 0.0);
    CHECK(std::abs(f.z) == 0.0);
}

TEST_CASE("cloud amplitude rejects bad photon momenta")
{
    const CloudSpec spec({Particle(1.0, {0, 0, 0})});
    CHECK_THROWS_AS(cloud_amplitude(spec, FourVector(1.0, {0, 0, 0.5})), std::invalid_argument);
    CHECK_THROWS_AS(cloud_amplitude(spec, FourVector(-1.0, {0, 0, -1.0})), std::invalid_argument);
    CHECK_THROWS_AS(cloud_amplitude(spec, FourVector(0.0, {0, 0, 0})), std::invalid_argument);
}

TEST_CASE("two-particle amplitude is the sum of single-particle amplitudes")
{
    const Particle a(1.0, {0, 0, 0.5});
    const Particle b(1.0, {0.3, 0.0, -0.2}, -1);
    const FourVector k(0.7, scale3({0.6, 0.8, 0.0}, 0.7));
    const ComplexFourVector fa = cloud_amplitude(CloudSpec({a}), k);
    const ComplexFourVector fb = cloud_amplitude(CloudSpec({b}), k);
    const ComplexFourVector fab = cloud_amplitude(CloudSpec({a, b}), k);
    CHECK_THAT(std::abs(fab.t - fa.t - fb.t), Catch::Matchers::WithinAbs(0.0, 1e-14));
    CHECK_THAT(std::abs(fab.z - fa.z - fb.z), Catch::Matchers::WithinAbs(0.0, 1e-14));
}

TEST_CASE("|f| is independent of the phase time")
{
    const Particle a(1.0, {0, 0, 0.5});
    const FourVector k(0.7, scale3({0.6, 0.8, 0.0}, 0.7));
    const double base = abs2(cloud_amplitude(CloudSpec({a}, 0.0), k));
    for (double t : {1.0, 10.0, -3.5}) {
        CHECK_THAT(abs2(cloud_amplitude(CloudSpec({a}, t), k)),
                   Catch::Matchers::WithinRel(base, 1e-12));
    }
}

TEST_CASE("expected photon number log scaling")
{
    const CloudSpec spec({Particle(1.0, {0, 0, 0.6}), Particle(1.0, {0, 0, -0.6})});
    const QuadratureSpec quad(64, 64);
    const double n1 = expected_photon_number(spec, Regulators(1.0 / std::numbers::e, 1.0), quad);
    const double n2 =
        expected_photon_number(spec, Regulators(1.0 / (std::numbers::e * std::numbers::e), 1.0), quad);
    CHECK_THAT(n2, Catch::Matchers::WithinRel(2.0 * n1, 1e-10));
    CHECK(n1 > 0.0);
}

TEST_CASE("a static charge has no transverse cloud content")
{
    const CloudSpec spec({Particle(1.0, {0, 0, 0})});
    CHECK(expected_photon_number(spec, Regulators(0.01, 1.0), QuadratureSpec(16, 16)) == 0.0);
}

TEST_CASE("<N> slope matches the independent polarization-sum oracle")
{
    const CloudSpec spec({Particle(1.0, {0, 0, 0.6}), Particle(1.0, {0, 0, -0.6})});
    const double coeff = cloud_angular_coefficient(spec, QuadratureSpec(64, 64));
    for (double omega : {0.1, 1.0}) {
        const double oracle = transverse_density_oracle(spec, omega, QuadratureSpec(96, 96));
        CHECK_THAT(spec.e2 * coeff, Catch::Matchers::WithinRel(oracle, 1e-6));
    }
}

TEST_CASE("<N>(lambda) is exactly linear in ln(Delta/lambda)")
{
    const CloudSpec spec({Particle(1.0, {0, 0, 0.6}), Particle(1.0, {0, 0, -0.6})});
    const QuadratureSpec quad(32, 32);
    const double n0 = expected_photon_number(spec, Regulators(0.1, 1.0), quad);
    const double n1 = expected_photon_number(spec, Regulators(0.01, 1.0), quad);
    const double n2 = expected_photon_number(spec, Regulators(0.001, 1.0), quad);
    const double resid = n1 - 0.5 * (n0 + n2);
    CHECK(std::abs(resid) < 1e-10 * n2);
}

TEST_CASE("vacuum overlap")
{
    CHECK(vacuum_overlap(0.0) == 1.0);
    CHECK_THAT(vacuum_overlap(1.0), Catch::Matchers::WithinRel(std::exp(-0.5), 1e-12));
    CHECK_THROWS_AS(vacuum_overlap(-1.0), std::invalid_argument);

    // monotone vanishing overlap as lambda -> 0 (infraparticle behavior)
    const CloudSpec spec({Particle(1.0, {0, 0, 0.9}), Particle(1.0, {0, 0, -0.9})});
    const QuadratureSpec quad(64, 64);
    double prev = 1.0;
    for (double lam : {1e-2, 1e-100, 1e-250}) {
        const double ov = vacuum_overlap(expected_photon_number(spec, Regulators(lam, 1.0), quad));
        CHECK(ov < prev);
        prev = ov;
    }
    CHECK(prev < 1e-3);
}

TEST_CASE("fock displacement with alpha = 0 is the vacuum")
{
    const FockState st = fock_displacement_sim({Complex(0.0, 0.0)}, 8);
    CHECK_THAT(st.vacuum_overlap, Catch::Matchers::WithinAbs(1.0, 1e-12));
    CHECK_THAT(st.mean_occupation[0], Catch::Matchers::WithinAbs(0.0, 1e-12));
}

TEST_CASE("coherent state closed forms at |alpha| = 1")
{
    const FockState st = fock_displacement_sim({Complex(1.0, 0.0)}, 20);
    CHECK_THAT(st.vacuum_overlap, Catch::Matchers::WithinAbs(std::exp(-0.5), 1e-8));
    CHECK_THAT(st.mean_occupation[0], Catch::Matchers::WithinAbs(1.0, 1e-8));
    CHECK(st.truncation_leakage < 1e-10);
    CHECK_THAT(st.norm, Catch::Matchers::WithinAbs(1.0, 1e-10));
}

TEST_CASE("two commuting modes factorize")
{
    const Complex alpha(0.8, 0.1), beta(-0.3, 0.6);
    const FockState st = fock_displacement_sim({alpha, beta}, 16);
    CHECK_THAT(st.mean_occupation[0] + st.mean_occupation[1],
               Catch::Matchers::WithinAbs(std::norm(alpha) + std::norm(beta), 1e-8));
    CHECK_THAT(st.vacuum_overlap,
               Catch::Matchers::WithinAbs(std::exp(-0.5 * (std::norm(alpha) + std::norm(beta))), 1e-8));
}

TEST_CASE("taylor sum through order 12 matches the dense exponential")
{
    const std::vector<Complex> alphas{Complex(0.4, -0.1)};
    const FockState exact = fock_displacement_sim(alphas, 24);
    const FockState taylor = fock_displacement_taylor(alphas, 24, 12);
    REQUIRE(exact.amplitudes.size() == taylor.amplitudes.size());
    CHECK((exact.amplitudes - taylor.amplitudes).cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("fock simulator rejects bad arguments")
{
    CHECK_THROWS_AS(fock_displacement_sim({}, 8), std::invalid_argument);
    CHECK_THROWS_AS(fock_displacement_sim({Complex(1, 0)}, 0), std::invalid_argument);
    CHECK_THROWS_AS(fock_displacement_sim({Complex(1, 0)}, 128), std::invalid_argument);
    // heavy displacement against a tiny truncation leaks
    CHECK_THROWS_AS(fock_displacement_sim({Complex(3.0, 0.0)}, 4), std::runtime_error);
}

TEST_CASE("hadamard phase: vanishing cases")
{
    const Complex zero(0.0, 0.0);
    CHECK(std::abs(hadamard_phase_sim({Complex(0.6, 0.1)}, {zero}, 24)) < 1e-10);
    // disjoint modes commute
    const Complex a(0.5, 0.2), b(0.3, -0.4);
    CHECK(std::abs(hadamard_phase_sim({a, zero}, {zero, b}, 12)) < 1e-10);
}

TEST_CASE("hadamard phase matches the canonical commutator")
{
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (int i = 0; i < 5; ++i) {
        Complex alpha(dist(rng), dist(rng)), beta(dist(rng), dist(rng));
        alpha /= std::max(1.0, std::abs(alpha));
        beta /= std::max(1.0, std::abs(beta));
        const Complex c = hadamard_phase_sim({alpha}, {beta}, 32);
        const Complex expected = 2.0 * Complex(0.0, 1.0) * std::imag(alpha * std::conj(beta));
        CHECK(std::abs(c - expected) < 1e-8);
    }
}
