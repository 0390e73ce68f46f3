#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "singosc/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

using namespace singosc;
using cplx = std::complex<double>;

namespace {

const CheckEntry* find(const VerificationReport& rep, const std::string& name) {
    for (const auto& e : rep.entries)
        if (e.name == name) return &e;
    return nullptr;
}

const VerificationReport& default_report() {
    static VerificationReport rep = run_suite(SuiteConfig{});
    return rep;
}

} // namespace

TEST_CASE("inner product: norms, orthogonality, conjugate symmetry") {
    ErmakovParams erm{2.0, 1.0, 0.0};
    auto s0 = base_state(0, 1.0, erm);
    auto s1 = base_state(1, 1.0, erm);
    for (double t : {0.0, 0.55}) {
        CHECK(std::abs(inner_product(s0, s0, t) - 1.0) < 1e-9);
        CHECK(std::abs(inner_product(s0, s1, t)) < 1e-9);
        cplx a = inner_product(s0, s1, t);
        cplx b = inner_product(s1, s0, t);
        CHECK(std::abs(a - std::conj(b)) < 1e-12);
    }
}

TEST_CASE("default suite: every check passes in the declared order") {
    const auto& rep = default_report();
    CHECK(rep.all_passed());
    CHECK(rep.failed() == 0);
    std::vector<std::string> expected = {
        "ermakov residual",       "invariant-1 eigenproblem",
        "seed admissibility",     "factorization product",
        "reversed product",       "riccati residual",
        "intertwining",           "missing-state annihilation",
        "orthonormality base",    "orthonormality deformed",
        "missing-norm cross-check", "schroedinger base",
        "schroedinger deformed",  "stationary limit",
        "barrier weakening",      "equidistant closed form",
        "deformation tail",       "wronskian constancy",
        "hermiticity invariant-1", "hermiticity invariant-2",
    };
    REQUIRE(rep.total() == static_cast<int>(expected.size()));
    for (int i = 0; i < rep.total(); ++i)
        CHECK(rep.entries[i].name == expected[i]);
    for (const auto& e : rep.entries) {
        CHECK(!e.name.empty());
        CHECK(e.tolerance > 0.0);
        CHECK(e.residual < e.tolerance);
    }
    // width-equation evidence names the adopted variant and the rejected one
    const auto* erm = find(rep, "ermakov residual");
    REQUIRE(erm != nullptr);
    CHECK(erm->details.find("4/sigma^3") != std::string::npos);
    CHECK(erm->details.find("variant") != std::string::npos);
    // the dual reading of the closed-form norm is reported
    const auto* norm = find(rep, "missing-norm cross-check");
    REQUIRE(norm != nullptr);
    CHECK(norm->details.find("bare argument") != std::string::npos);
}

TEST_CASE("suite payload is deterministic across runs") {
    auto a = to_json(default_report()).dump(2);
    auto b = to_json(run_suite(SuiteConfig{})).dump(2);
    CHECK(a == b);
    // runtimes stay out of the payload
    CHECK(a.find("runtime") == std::string::npos);
}

TEST_CASE("violated seed constraint: recorded, rest of the suite still runs") {
    SuiteConfig cfg;
    cfg.seed.kb = 0.0;
    auto rep = run_suite(cfg);
    CHECK(!rep.all_passed());
    const auto* adm = find(rep, "seed admissibility");
    REQUIRE(adm != nullptr);
    CHECK(!adm->passed);
    CHECK(adm->details.find("kb") != std::string::npos);
    CHECK(adm->details.find("skipped") != std::string::npos);
    // seed-independent checks are still present and pass
    for (const char* name : {"ermakov residual", "invariant-1 eigenproblem",
                             "orthonormality base", "schroedinger base",
                             "wronskian constancy", "hermiticity invariant-1",
                             "barrier weakening"}) {
        const auto* e = find(rep, name);
        REQUIRE(e != nullptr);
        CHECK(e->passed);
    }
    // seed-dependent ones are absent rather than fabricated
    CHECK(find(rep, "riccati residual") == nullptr);
    CHECK(find(rep, "intertwining") == nullptr);
    CHECK(rep.failed() == 1);
}

TEST_CASE("stationary configuration passes the limit checks") {
    SuiteConfig cfg;
    cfg.erm = ErmakovParams{1.0, 1.0, 0.0};
    auto rep = run_suite(cfg);
    CHECK(rep.all_passed());
    const auto* stat = find(rep, "stationary limit");
    REQUIRE(stat != nullptr);
    CHECK(stat->passed);
}

TEST_CASE("report serialization: summary, keys, text rendering") {
    const auto& rep = default_report();
    auto j = to_json(rep);
    CHECK(j["summary"]["total"] == rep.total());
    CHECK(j["summary"]["passed"] == rep.passed());
    CHECK(j["summary"]["failed"] == 0);
    REQUIRE(j["checks"].is_array());
    CHECK(static_cast<int>(j["checks"].size()) == rep.total());
    for (const auto& c : j["checks"]) {
        CHECK(c.contains("name"));
        CHECK(c.contains("params"));
        CHECK(c.contains("residual"));
        CHECK(c.contains("tolerance"));
        CHECK(c.contains("passed"));
    }
    auto text = to_text(rep);
    CHECK(text.find("ermakov residual") != std::string::npos);
    CHECK(text.find("pass") != std::string::npos);
    CHECK(text.find("summary:") != std::string::npos);
    CHECK(text.find("ms") != std::string::npos);
}
