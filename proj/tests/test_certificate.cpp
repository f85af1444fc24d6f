#include "resint/certificate.hpp"
#include "test_helpers.hpp"

using namespace rt;

TEST_CASE("linkage fixture earns a certificate with tau = J") {
    auto R = QQ({"x", "y"});
    ResidualInput in =
        make_residual_input(Ambient(R), Ps(R, {"x", "y"}), Ps(R, {"x^2", "y^2"}));
    FreeApproachCertificate cert = free_approach_certificate(in);
    CHECK(cert.issued);
    for (const auto& h : cert.hypotheses) CHECK(h.pass);
    for (const auto& c : cert.checks) CHECK(c.pass);
    CHECK(ideal_equal(cert.tau, cert.J));
}

TEST_CASE("denied certificates name the failed hypothesis") {
    auto R = QQ({"x", "y", "z"});
    // s = 1 < r = 2: the s >= r hypothesis fails but diagnostics continue
    ResidualInput in = make_residual_input(Ambient(R), Ps(R, {"x", "y"}), Ps(R, {"x^2"}));
    FreeApproachCertificate cert = free_approach_certificate(in);
    CHECK_FALSE(cert.issued);
    CHECK(cert.failure_summary.find("s >= r") != std::string::npos);
    CHECK_FALSE(cert.checks.empty());  // diagnostic mode still ran the checks
}

TEST_CASE("regularity bound with equality on the linkage fixture") {
    auto R = QQ({"x", "y"});
    ResidualInput in =
        make_residual_input(Ambient(R), Ps(R, {"x", "y"}), Ps(R, {"x^2", "y^2"}));
    Ideal tau = tau_ideal(in);
    RegularityBound rb = regularity_bound_check(in, tau);
    CHECK(rb.hypotheses_ok);
    CHECK(rb.lhs == 1);
    CHECK(rb.rhs == 1);  // 0 + 0 + 4 - (2-2+1)*1 - 2
    CHECK(rb.holds);
}

TEST_CASE("regularity bound formula with s < r is evaluated as written") {
    auto R = QQ({"x", "y", "z"});
    ResidualInput in =
        make_residual_input(Ambient(R), Ps(R, {"x", "y", "z"}), Ps(R, {"x^2", "y^2"}));
    Ideal tau = tau_ideal(in);
    RegularityBound rb = regularity_bound_check(in, tau);
    // (s - r + 1) = 0 kills the beg term; the report carries the raw numbers
    CHECK(rb.rhs == 0 + 0 + 4 - 0 - 2);
}
