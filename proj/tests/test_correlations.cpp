#include <doctest.h>

#include <cmath>
#include <random>

#include "qcorr/correlations.hpp"
#include "test_helpers.hpp"

using namespace qcorr;
using namespace qcorr::test;

namespace {

const double kLog2_3 = std::log2(3.0);

XState bell_like(double alpha2) {
    XState x;
    x.a = alpha2;
    x.d = 1.0 - alpha2;
    x.w = std::sqrt(alpha2 * (1.0 - alpha2));
    x.b = x.z = 0.0;
    return x;
}

} // namespace

TEST_CASE("mutual information on reference states") {
    std::mt19937_64 rng(101);
    const DensityMatrix product(kron2(random_density(2, rng), random_density(2, rng)));
    CHECK(std::abs(mutual_information(product)) < 1e-9);

    CHECK(mutual_information(DensityMatrix(bell_phi_plus())) == doctest::Approx(2.0).epsilon(1e-10));

    CHECK(mutual_information(DensityMatrix(diagonal({0.5, 0.0, 0.0, 0.5}))) ==
          doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("mutual information is nonnegative on random X states") {
    XStateSampler sampler(202);
    for (int rep = 0; rep < 25; ++rep) {
        const XState x = sampler.next();
        CHECK(mutual_information(x.to_density_matrix()) >= -1e-9);
    }
}

TEST_CASE("conditional entropy: measurement on a product state reveals nothing new") {
    std::mt19937_64 rng(303);
    const ComplexMatrix ra = random_density(2, rng);
    const DensityMatrix rho(kron2(ra, pure_state({1.0, 0.0})));
    const double sa = vn_entropy(DensityMatrix(ra));
    CHECK(conditional_entropy_after_measurement(rho, {0.0, 0.0}, Subsystem::B) ==
          doctest::Approx(sa).epsilon(1e-10));
}

TEST_CASE("conditional entropy: Bell state collapses to pure conditionals") {
    const DensityMatrix bell(bell_phi_plus());
    for (double theta : {0.0, 0.3, 0.785, 1.2}) {
        for (double phi : {0.0, 0.5, 3.14, 5.5}) {
            CHECK(std::abs(conditional_entropy_after_measurement(bell, {theta, phi},
                                                                 Subsystem::B)) < 1e-10);
        }
    }
}

TEST_CASE("conditional entropy: diagonal X state by explicit two-outcome enumeration") {
    const XState x{1.0 / 3.0, 1.0 / 4.0, 1.0 / 6.0, 0.0, 0.0};
    // theta = 0 projects B onto |0>,|1>: p_0 = a+b with A-state diag(a,b)/p_0,
    // p_1 = b+d with diag(b,d)/p_1
    const double p0 = x.a + x.b;
    const double p1 = x.b + x.d;
    const double oracle = p0 * binary_entropy(x.a / p0) + p1 * binary_entropy(x.b / p1);
    const double got =
        conditional_entropy_after_measurement(x.to_density_matrix(), {0.0, 0.0}, Subsystem::B);
    CHECK(got == doctest::Approx(oracle).epsilon(1e-12));
    CHECK(got == doctest::Approx(0.9792791603760919).epsilon(1e-9));
}

TEST_CASE("classical correlation: product and Bell references") {
    std::mt19937_64 rng(404);
    const DensityMatrix product(kron2(random_density(2, rng), random_density(2, rng)));
    CHECK(std::abs(classical_correlation_numeric(product, Subsystem::B).value) < 1e-7);

    const DensityMatrix bell(bell_phi_plus());
    CHECK(classical_correlation_numeric(bell, Subsystem::B).value ==
          doctest::Approx(1.0).epsilon(1e-7));
}

TEST_CASE("optimizer lands on the analytic critical branches") {
    XStateSampler sampler(505);
    for (int rep = 0; rep < 12; ++rep) {
        const XState x = sampler.next();
        const DiscordResult a = discord_x_analytic(x);
        const double s_a = x.marginal_entropy();
        // J at the best critical set equals S_A - min(F1, F2); recover the
        // branch conditional entropies from D_i = S_A - S_AB + F_i
        const double f1 = a.d1 - s_a + x.entropy();
        const double f2 = a.d2 - s_a + x.entropy();
        const double expected = s_a - std::min(f1, f2);
        const double numeric = classical_correlation_numeric(x.to_density_matrix(), Subsystem::B).value;
        CHECK(std::abs(numeric - expected) < 1e-7);
    }
}

TEST_CASE("measurement-side symmetry for X states") {
    XStateSampler sampler(606);
    for (int rep = 0; rep < 8; ++rep) {
        const XState x = sampler.next();
        const DensityMatrix rho = x.to_density_matrix();
        const double qa = classical_correlation_numeric(rho, Subsystem::A).value;
        const double qb = classical_correlation_numeric(rho, Subsystem::B).value;
        CHECK(std::abs(qa - qb) < 1e-6);
    }
}

TEST_CASE("analytic discord on reference states") {
    const DiscordResult bell = discord_x_analytic(bell_like(0.5));
    CHECK(bell.discord == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(bell.mutual_information == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(bell.classical_correlation == doctest::Approx(1.0).epsilon(1e-12));

    // classically correlated states have zero discord
    XStateSampler sampler(707);
    for (int rep = 0; rep < 15; ++rep) {
        XState x = sampler.next();
        x.w = x.z = 0.0;
        const DiscordResult r = discord_x_analytic(x);
        CHECK(std::abs(r.discord) < 1e-9);
        CHECK(r.discord >= -1e-9);
    }

    // pure Bell-like state with alpha^2 = 1/3: discord = marginal entropy
    const DiscordResult pure = discord_x_analytic(bell_like(1.0 / 3.0));
    CHECK(pure.discord == doctest::Approx(kLog2_3 - 2.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("analytic discord rejects invalid X states") {
    XState bad;
    bad.a = 0.6;
    bad.d = 0.4;
    bad.b = 0.0;
    bad.w = 0.6; // w^2 > a d
    CHECK_THROWS_AS(discord_x_analytic(bad), invalid_state_error);

    XState bad_trace{0.5, 0.1, 0.5, 0.0, 0.0};
    CHECK_THROWS_AS(discord_x_analytic(bad_trace), invalid_state_error);
}

TEST_CASE("discord result structure: min of the two branches, nonnegative") {
    XStateSampler sampler(808);
    for (int rep = 0; rep < 25; ++rep) {
        const DiscordResult r = discord_x_analytic(sampler.next());
        CHECK(r.discord == std::min(r.d1, r.d2));
        CHECK(r.discord >= -1e-9);
        CHECK((r.branch == Branch::D1 ? r.d1 : r.d2) == r.discord);
    }
}

TEST_CASE("numeric discord agrees with the analytic formula on random X states") {
    XStateSampler sampler(909);
    double worst = 0.0;
    for (int rep = 0; rep < 60; ++rep) {
        const XState x = sampler.next();
        const double da = discord_x_analytic(x).discord;
        const double dn = discord_numeric(x.to_density_matrix());
        worst = std::max(worst, std::abs(da - dn));
    }
    CHECK(worst <= 1e-6);

    CHECK(std::abs(discord_numeric(DensityMatrix(bell_phi_plus())) - 1.0) < 1e-7);
    std::mt19937_64 rng(910);
    const DensityMatrix product(kron2(random_density(2, rng), random_density(2, rng)));
    CHECK(std::abs(discord_numeric(product)) < 1e-7);
}

TEST_CASE("pure states: discord equals entanglement of formation") {
    for (double alpha2 : {0.05, 0.1, 0.25, 1.0 / 3.0, 0.5, 0.75, 0.9}) {
        const XState x = bell_like(alpha2);
        const double d = discord_x_analytic(x).discord;
        const double e = eof_from_concurrence(concurrence_x(x));
        CHECK(std::abs(d - e) <= 1e-9);
    }
    // the single-excitation pure |+> state
    const XState plus{0.0, 0.5, 0.0, 0.0, 0.5};
    CHECK(std::abs(discord_x_analytic(plus).discord -
                   eof_from_concurrence(concurrence_x(plus))) <= 1e-9);
}

TEST_CASE("concurrence on reference states") {
    CHECK(concurrence_x(bell_like(0.5)) == doctest::Approx(1.0).epsilon(1e-12));

    XStateSampler sampler(111);
    for (int rep = 0; rep < 10; ++rep) {
        XState x = sampler.next();
        x.w = x.z = 0.0;
        CHECK(concurrence_x(x) == 0.0);
    }

    const XState plus{0.0, 0.5, 0.0, 0.0, 0.5};
    CHECK(concurrence_x(plus) == doctest::Approx(1.0).epsilon(1e-12));

    for (int rep = 0; rep < 20; ++rep) {
        const double c = concurrence_x(sampler.next());
        CHECK(c >= 0.0);
        CHECK(c <= 1.0);
    }
}

TEST_CASE("entanglement of formation from concurrence") {
    CHECK(eof_from_concurrence(0.0) == 0.0);
    CHECK(eof_from_concurrence(1.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(eof_from_concurrence(2.0 * std::sqrt(2.0) / 3.0) ==
          doctest::Approx(kLog2_3 - 2.0 / 3.0).epsilon(1e-9));

    // strictly increasing
    double prev = -1.0;
    for (double c = 0.0; c <= 1.0; c += 0.05) {
        const double e = eof_from_concurrence(std::min(c, 1.0));
        CHECK(e > prev);
        prev = e;
    }

    CHECK_THROWS_AS(eof_from_concurrence(-0.1), std::domain_error);
    CHECK_THROWS_AS(eof_from_concurrence(1.1), std::domain_error);
}

TEST_CASE("measurement angles wrap into canonical ranges") {
    const auto a = MeasurementAngles::normalized(3.5, -1.0);
    CHECK(a.theta >= 0.0);
    CHECK(a.theta < 3.14159265358979324);
    CHECK(a.phi >= 0.0);
    CHECK(a.phi < 6.28318530717958648);
}
