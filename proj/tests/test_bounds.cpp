#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <vector>

#include <qsd/bounds.hpp>

using namespace qsd;

TEST_CASE("helstrom_bound") {
    CHECK(helstrom_bound(0.5, 0.0) == 0.0);
    CHECK(helstrom_bound(0.5, 1.0) == Catch::Approx(0.5).margin(1e-15));
    CHECK(helstrom_bound(0.5, std::sin(std::numbers::pi / 3)) ==
          Catch::Approx(0.25).margin(1e-12));
    CHECK_THROWS_AS(helstrom_bound(0.0, 0.5), OutOfRange);
    CHECK_THROWS_AS(helstrom_bound(1.0, 0.5), OutOfRange);
    CHECK_THROWS_AS(helstrom_bound(0.5, Complex(1.0, 0.1)), OutOfRange);
}

TEST_CASE("error_probability") {
    SECTION("symmetric qubits achieve 1 - 2/N") {
        for (int n = 3; n <= 8; ++n) {
            const Ensemble e = symmetric_qubits(n);
            const CondTable t = cond_table(e, square_root_measurement(e));
            CHECK(std::abs(error_probability(t) - (1.0 - 2.0 / n)) <= 1e-12);
        }
    }
    SECTION("perfect discrimination gives exactly zero") {
        const Ensemble e = two_qubit_pair(0.0, 0.5);
        CHECK(error_probability(cond_table(e, helstrom_projective(e))) == 0.0);
    }
    SECTION("diagonal-regime coherent states") {
        // closed form for N > Poisson spread: 1 - (sum_n sqrt(P))^2 / (mass N)
        const int n = 16;
        const double mu = 0.2;
        const Ensemble e = symmetric_coherent(n, mu);
        const CondTable t = cond_table(e, square_root_measurement(e));
        double sum_sqrt = 0.0, mass = 0.0;
        for (Eigen::Index m = 0; m < e.dim(); ++m) {
            const double p = poisson_pmf(mu, static_cast<int>(m));
            sum_sqrt += std::sqrt(p);
            mass += p;
        }
        const double expect = 1.0 - sum_sqrt * sum_sqrt / (mass * n);
        CHECK(error_probability(t) == Catch::Approx(expect).margin(1e-9));
        CHECK(error_probability(t) == Catch::Approx(0.863158166435).margin(1e-9));
    }
    SECTION("non-square tables rejected") {
        CondTable t;
        t.p_given = Eigen::MatrixXd::Constant(2, 3, 1.0 / 3);
        t.priors = {0.5, 0.5};
        t.outcome_marginals = {1.0 / 3, 1.0 / 3, 1.0 / 3};
        CHECK_THROWS_AS(error_probability(t), ShapeMismatch);
    }
}

TEST_CASE("fano_lower_root") {
    SECTION("rhs at or below zero") {
        for (double rhs : {0.0, -1e-12, -0.5}) {
            const FanoSolution s = fano_lower_root(rhs, 4);
            CHECK(s.feasible);
            CHECK(s.lower_root == 0.0);
        }
    }
    SECTION("n = 2 recovers sin^2(theta) from its own binary entropy") {
        for (double theta : {std::numbers::pi / 6, 0.2, 0.5}) {
            const double s2 = std::sin(theta) * std::sin(theta);
            const FanoSolution s = fano_lower_root(binary_entropy(s2), 2);
            CHECK(std::abs(s.lower_root - s2) <= 1e-9);
        }
    }
    SECTION("n = 3 equality case") {
        const FanoSolution s = fano_lower_root(binary_entropy(1.0 / 3) + 1.0 / 3, 3);
        CHECK(std::abs(s.lower_root - 1.0 / 3) <= 1e-9);
    }
    SECTION("rhs above log2(n) is infeasible") {
        const FanoSolution s = fano_lower_root(std::log2(4.0) + 0.1, 4);
        CHECK_FALSE(s.feasible);
        CHECK(std::isnan(s.lower_root));
    }
    SECTION("rhs at the maximum pinches both roots at (n-1)/n") {
        // dp/drhs diverges at the tangency point, so the roots carry an
        // O(sqrt(eps)) plateau; only f-space accuracy is tight here
        const FanoSolution s = fano_lower_root(std::log2(4.0), 4);
        CHECK(s.feasible);
        CHECK(std::abs(s.lower_root - 0.75) <= 1e-6);
        REQUIRE(s.upper_root.has_value());
        CHECK(std::abs(*s.upper_root - 0.75) <= 1e-6);
        CHECK(std::abs(fano_lhs(s.lower_root, 4) - s.rhs) <= 1e-10);
    }
    SECTION("upper root on the falling branch") {
        const FanoSolution s = fano_lower_root(binary_entropy(0.25), 2);
        REQUIRE(s.upper_root.has_value());
        CHECK(std::abs(*s.upper_root - 0.75) <= 1e-9);
        const FanoSolution s5 = fano_lower_root(std::log2(5.0) - 0.01, 5);
        REQUIRE(s5.upper_root.has_value());
        CHECK(std::abs(fano_lhs(*s5.upper_root, 5) - s5.rhs) <= 1e-10);
    }
    SECTION("no upper root once the interval reaches p = 1") {
        // for n > 2, f(1) = log2(n-1); anything below keeps the bound open
        const FanoSolution s = fano_lower_root(std::log2(4.0) - 1e-4, 5);
        CHECK_FALSE(s.upper_root.has_value());
    }
    SECTION("root verification: f(root) reproduces rhs") {
        for (int n : {2, 3, 5, 9}) {
            const double log_n = std::log2(static_cast<double>(n));
            for (double frac : {1e-6, 0.01, 0.2, 0.5, 0.9, 0.999}) {
                const double rhs = frac * log_n;
                const FanoSolution s = fano_lower_root(rhs, n);
                REQUIRE(s.feasible);
                CHECK(std::abs(fano_lhs(s.lower_root, n) - rhs) <= 1e-10);
                if (s.upper_root)
                    CHECK(std::abs(fano_lhs(*s.upper_root, n) - rhs) <= 1e-10);
            }
        }
    }
    SECTION("bad arguments") {
        CHECK_THROWS_AS(fano_lower_root(0.5, 1), OutOfRange);
        CHECK_THROWS_AS(fano_lower_root(std::nan(""), 3), OutOfRange);
    }
}

TEST_CASE("fano_bound_from_measurement") {
    SECTION("two qubit states: the bound is tight for every theta") {
        for (int k = 1; k <= 10; ++k) {
            const double theta = k * std::numbers::pi / 45;
            const Ensemble e = two_qubit_pair(theta, 0.5);
            const FanoSolution s = fano_bound_from_measurement(e, helstrom_projective(e));
            CHECK(std::abs(s.lower_root - std::sin(theta) * std::sin(theta)) <= 1e-9);
        }
    }
    SECTION("three symmetric qubits: tight again") {
        const Ensemble e = symmetric_qubits(3);
        const FanoSolution s = fano_bound_from_measurement(e, square_root_measurement(e));
        CHECK(std::abs(s.lower_root - 1.0 / 3) <= 1e-9);
    }
    SECTION("eight symmetric qubits: strictly below the minimum error") {
        const Ensemble e = symmetric_qubits(8);
        const FanoSolution s = fano_bound_from_measurement(e, square_root_measurement(e));
        CHECK(s.lower_root == Catch::Approx(0.555443048571).margin(1e-9));
        CHECK(s.lower_root < 0.75);
    }
}

TEST_CASE("fano_holevo_bound") {
    SECTION("symmetric qubits solve H_bin(p) + p log2(N-1) = log2(N) - 1") {
        for (int n : {3, 4, 8}) {
            const FanoSolution s = fano_holevo_bound(symmetric_qubits(n));
            CHECK(std::abs(fano_lhs(s.lower_root, n) - (std::log2(n) - 1.0)) <= 1e-9);
        }
        CHECK(fano_holevo_bound(symmetric_qubits(4)).lower_root ==
              Catch::Approx(0.189289624915).margin(1e-9));
        CHECK(fano_holevo_bound(symmetric_qubits(8)).lower_root ==
              Catch::Approx(0.372974375894).margin(1e-9));
    }
    SECTION("orthogonal pair: rhs collapses to zero") {
        CHECK(fano_holevo_bound(two_qubit_pair(0.0, 0.5)).lower_root == 0.0);
    }
    SECTION("two qubit states at theta = pi/6: below the Helstrom value") {
        const FanoSolution s = fano_holevo_bound(two_qubit_pair(std::numbers::pi / 6, 0.5));
        CHECK(s.lower_root == Catch::Approx(0.164693718626).margin(1e-9));
        CHECK(s.lower_root < 0.25);
    }
}

TEST_CASE("weak_fano_bounds") {
    SECTION("rhs at or below one bit clamps to zero") {
        const auto [w1, w2] = weak_fano_bounds(0.9, 1.0, 5);
        CHECK(w1 == 0.0);
        CHECK(w2 == 0.0);
    }
    SECTION("eight symmetric qubits") {
        const Ensemble e = symmetric_qubits(8);
        const double h = conditional_entropy(cond_table(e, square_root_measurement(e)));
        const auto [w1, w2] = weak_fano_bounds(h, std::log2(8.0) - 1.0, 8);
        CHECK(w1 == Catch::Approx(0.552277165301).margin(1e-9));
        CHECK(w2 == Catch::Approx(1.0 / std::log2(7.0)).margin(1e-12));
    }
    SECTION("dominated by the bisection roots") {
        for (int n = 5; n <= 10; ++n) {
            const Ensemble e = symmetric_qubits(n);
            const double h =
                conditional_entropy(cond_table(e, square_root_measurement(e)));
            const double rhs2 = std::log2(n) - holevo_chi(e);
            const auto [w1, w2] = weak_fano_bounds(h, rhs2, n);
            CHECK(w1 <= fano_lower_root(h, n).lower_root + 1e-9);
            CHECK(w2 <= fano_lower_root(rhs2, n).lower_root + 1e-9);
        }
    }
    SECTION("undefined for two states") {
        CHECK_THROWS_AS(weak_fano_bounds(0.5, 0.5, 2), OutOfRange);
    }
}

TEST_CASE("scenario reports") {
    SECTION("two-qubit at theta = pi/6") {
        const BoundReport r = two_qubit_report(std::numbers::pi / 6);
        CHECK(std::abs(r.p_err_min - 0.25) <= 1e-12);
        CHECK(std::abs(r.p_fano1 - 0.25) <= 1e-9);
        CHECK(r.p_fano2 < 0.25);
        REQUIRE(r.d1.has_value());
        CHECK(*r.d1 <= 1e-8);
        CHECK_FALSE(r.p_weak1.has_value());
        CHECK(r.theta.has_value());
        check_report_ordering(r);
    }
    SECTION("three symmetric qubits") {
        const BoundReport r = sym_qubit_report(3);
        CHECK(std::abs(r.p_err_min - 1.0 / 3) <= 1e-12);
        CHECK(std::abs(r.p_fano1 - 1.0 / 3) <= 1e-9);
        REQUIRE(r.d1.has_value());
        CHECK(*r.d1 <= 1e-8);
        check_report_ordering(r);
    }
    SECTION("two coherent states at mu = 0.5") {
        const BoundReport r = sym_coherent_report(2, 0.5);
        CHECK(r.p_err_min == Catch::Approx(0.035063252484).margin(1e-9));
        REQUIRE(r.fock_levels.has_value());
        CHECK(*r.fock_levels == 11);
        REQUIRE(r.d2.has_value());
        CHECK(*r.d2 >= *r.d1 - 1e-9);
        check_report_ordering(r);
    }
}

TEST_CASE("Fano bounds never exceed the achieved minimum error") {
    std::vector<BoundReport> reports;
    for (int k = 0; k < 8; ++k)
        reports.push_back(two_qubit_report(k * std::numbers::pi / 32));
    for (int n = 3; n <= 10; ++n)
        reports.push_back(sym_qubit_report(n));
    for (int n = 2; n <= 6; ++n)
        reports.push_back(sym_coherent_report(n, 0.3));
    for (const BoundReport& r : reports) {
        CHECK(r.p_fano1 <= r.p_err_min + 1e-9);
        CHECK(r.p_fano2 <= r.p_err_min + 1e-9);
        CHECK(r.p_fano2 <= r.p_fano1 + 1e-9);
        if (r.p_weak1)
            CHECK(*r.p_weak1 <= r.p_fano1 + 1e-9);
        if (r.p_weak2)
            CHECK(*r.p_weak2 <= r.p_fano2 + 1e-9);
        if (r.d1 && r.d2)
            CHECK(*r.d2 >= *r.d1 - 1e-9);
    }
}

TEST_CASE("projective measurement achieves the Helstrom bound") {
    for (int k = 0; k < 50; ++k) {
        const double theta = k * (std::numbers::pi / 4) / 50;
        const Ensemble e = two_qubit_pair(theta, 0.5);
        const double achieved = error_probability(cond_table(e, helstrom_projective(e)));
        CHECK(std::abs(achieved - helstrom_bound(0.5, std::sin(2 * theta))) <= 1e-10);
    }
}

TEST_CASE("square-root measurement is optimal for two coherent states") {
    for (double mu : {0.1, 0.5, 1.0, 2.0}) {
        const Ensemble e = symmetric_coherent(2, mu);
        const double achieved =
            error_probability(cond_table(e, square_root_measurement(e)));
        CHECK(std::abs(achieved - helstrom_bound(0.5, std::exp(-2.0 * mu))) <= 1e-6);
    }
}

TEST_CASE("check_report_ordering flags corrupted reports") {
    BoundReport r = sym_qubit_report(5);
    CHECK_NOTHROW(check_report_ordering(r));
    r.p_fano1 = r.p_err_min + 0.1;
    CHECK_THROWS_AS(check_report_ordering(r), Error);
}
