#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "frogbounds/analytic.hpp"
#include "frogbounds/phi.hpp"

using namespace frogbounds;

namespace {
const Degree d2(2);

double phi3_reference(double b) {
    return b * b * b * (4.0 - 3.0 * b - b * b + b * b * b);
}
}  // namespace

TEST_CASE("phi low orders match their explicit polynomials") {
    for (int i = 0; i <= 50; ++i) {
        const double b = 0.5 * static_cast<double>(i) / 50.0;
        const BranchRatio br(b, d2);
        CHECK_EQ(phi_direct(1, br), b);
        CHECK(std::abs(phi_direct(2, br) - b * b * (2.0 - b)) < 1e-16);
        CHECK(std::abs(phi_direct(3, br) - phi3_reference(b)) < 1e-15);
    }
}

TEST_CASE("phi rational spot values") {
    const BranchRatio b03(0.3, d2);
    CHECK(std::abs(phi_direct(2, b03) - 0.153) < 1e-15);
    CHECK(std::abs(phi_direct(3, b03) - 0.081999) < 1e-15);
}

TEST_CASE("phi at the d=2, p=0.7 decay base matches the reference chain") {
    const BranchRatio b = beta(d2, Probability(0.7));
    CHECK(std::abs(phi_recurrence(1, b) - 0.26646945217252537) < 2e-16);
    CHECK(std::abs(phi_recurrence(2, b) - 0.12309101623753043) < 1e-15);
    CHECK(std::abs(phi_recurrence(3, b) - 0.059572646604323329) < 1e-15);
    CHECK(std::abs(phi_recurrence(4, b) - 0.028913022306183539) < 1e-15);
}

TEST_CASE("the three phi evaluations agree") {
    for (const int dv : {2, 5}) {
        const Degree d(dv);
        for (int i = 0; i <= 40; ++i) {
            const double b = (1.0 / dv) * (static_cast<double>(i) / 40.0);
            const BranchRatio br(b, d);
            for (int n = 1; n <= 10; ++n) {
                const double via_sum = phi_direct(n, br);
                const double via_rec = phi_recurrence(n, br);
                const double via_closed = phi_closed(n, br);
                CHECK(std::abs(via_sum - via_rec) < 1e-12);
                CHECK(std::abs(via_rec - via_closed) < 1e-12);
            }
        }
    }
}

TEST_CASE("phi dispatcher and domain guards") {
    const BranchRatio b(0.4, d2);
    CHECK_EQ(phi(PhiForm::Direct, 3, b), phi_direct(3, b));
    CHECK_EQ(phi(PhiForm::Recurrence, 3, b), phi_recurrence(3, b));
    CHECK_EQ(phi(PhiForm::Closed, 3, b), phi_closed(3, b));

    CHECK_THROWS_AS(phi_direct(0, b), std::domain_error);
    CHECK_THROWS_AS(phi_direct(2001, b), std::domain_error);
    CHECK_THROWS_AS(phi_recurrence(-1, b), std::domain_error);
    CHECK_THROWS_AS(phi_closed(-1, b), std::domain_error);
    CHECK_EQ(phi_recurrence(0, b), 1.0);
    CHECK_EQ(phi_closed(0, b), 1.0);
}

TEST_CASE("characteristic roots satisfy the recurrence algebra") {
    for (int i = 1; i <= 40; ++i) {
        const double b = 0.5 * static_cast<double>(i) / 40.0;
        const CharRoots cr = char_roots(BranchRatio(b, d2));
        CHECK(std::abs(cr.lambda_plus + cr.lambda_minus - b * (2.0 - b * b)) < 1e-15);
        CHECK(std::abs(cr.lambda_plus * cr.lambda_minus - b * b * b * (1.0 - b)) < 1e-15);
        CHECK(std::abs(cr.c1 + cr.c2 - 1.0) < 1e-15);
        // phi_1 reconstructed from the mixture
        CHECK(std::abs(cr.c1 * cr.lambda_minus + cr.c2 * cr.lambda_plus - b) < 1e-15);
        CHECK(cr.lambda_plus > cr.lambda_minus);
    }
    CHECK_THROWS_AS(char_roots(BranchRatio(0.0, d2)), std::domain_error);
}

TEST_CASE("lambda_growth is the dominant characteristic root") {
    const BranchRatio b(0.5, d2);
    CHECK_EQ(char_roots(b).lambda_plus, lambda_growth(b));
}

TEST_CASE("log_phi_scaled tracks the direct evaluation while it is representable") {
    for (const double b : {0.1, 0.3, 0.5}) {
        const BranchRatio br(b, d2);
        for (const int n : {1, 5, 20, 45}) {
            const double direct = std::log(phi_recurrence(n, br)) / n;
            CHECK(std::abs(log_phi_scaled(n, br) - direct) < 1e-13);
        }
    }
}

TEST_CASE("log_phi_scaled survives far beyond underflow of phi itself") {
    const BranchRatio b(0.3, d2);
    CHECK(phi_recurrence(2000, b) < 1e-300);  // direct value underflows
    const double scaled = log_phi_scaled(100000, b);
    CHECK(std::isfinite(scaled));
    CHECK(std::abs(std::exp(scaled) - lambda_growth(b)) < 1e-3);
    CHECK_THROWS_AS(log_phi_scaled(0, b), std::domain_error);
    CHECK_THROWS_AS(log_phi_scaled(10, BranchRatio(0.0, d2)), std::domain_error);
}

TEST_CASE("f_n endpoints and the path switch") {
    CHECK_EQ(f_n(d2, 1, Probability(0.0)), -0.5);
    CHECK_EQ(f_n(d2, 7, Probability(0.0)), -0.5);
    CHECK_EQ(f_n(d2, 1, Probability(1.0)), 0.0);  // phi_1 = beta and beta(1) = 1/d

    // the n > 50 path must agree with the small-n path at the boundary
    const BranchRatio b = beta(d2, Probability(0.8));
    const double via_pow = std::pow(phi_recurrence(51, b), 1.0 / 51.0);
    const double via_log = std::exp(log_phi_scaled(51, b));
    CHECK(std::abs(via_pow - via_log) < 1e-13);

    CHECK_THROWS_AS(f_n(d2, 0, Probability(0.5)), std::domain_error);
}

TEST_CASE("f_limit changes sign across the closed-form bound region") {
    CHECK(f_limit(d2, Probability(0.6)) < 0.0);
    CHECK(f_limit(d2, Probability(0.8)) > 0.0);
    // at the bound itself the limit criterion nearly vanishes
    CHECK(std::abs(f_limit(d2, Probability(0.71784337457346211))) < 1e-12);
}
