#include <doctest.h>

#include <cmath>
#include <set>

#include "harnack/linalg.hpp"
#include "harnack/random_matrix.hpp"

using namespace harnack;

TEST_CASE("rng determinism and stream separation") {
    RngState a(42, 0), b(42, 0), c(42, 1);
    bool all_equal = true;
    bool any_diff_stream = false;
    for (int i = 0; i < 64; ++i) {
        const std::uint64_t va = a.next_u64();
        if (va != b.next_u64()) all_equal = false;
        if (va != c.next_u64()) any_diff_stream = true;
    }
    CHECK(all_equal);
    CHECK(any_diff_stream);
}

TEST_CASE("rng first draws collide for no stream in 0..1000") {
    std::set<std::uint64_t> seen;
    for (std::uint64_t k = 0; k <= 1000; ++k) {
        RngState r(42, k);
        CHECK(seen.insert(r.next_u64()).second);
    }
}

TEST_CASE("haar_unitary contracts") {
    RngState rng(7, 0);
    const ComplexMatrix u1 = haar_unitary(1, rng);
    CHECK(std::abs(std::abs(u1(0, 0)) - 1.0) <= 1e-12);

    RngState r1(9, 3), r2(9, 3);
    const ComplexMatrix a = haar_unitary(4, r1);
    const ComplexMatrix b = haar_unitary(4, r2);
    CHECK(max_abs_diff(a, b) == 0.0);  // bitwise identical

    CHECK(a.unitary_defect() <= 1e-12);
    CHECK(std::abs(std::abs(det_lu(a)) - 1.0) <= 1e-10);
}

TEST_CASE("haar_unitary column-norm statistic at n=4") {
    RngState rng(2024, 0);
    double sum = 0.0;
    const int samples = 10000;
    for (int s = 0; s < samples; ++s) {
        const ComplexMatrix u = haar_unitary(4, rng);
        sum += std::norm(u(0, 0));
    }
    CHECK(std::abs(sum / samples - 0.25) <= 0.02);
}

TEST_CASE("random_psd_contraction degenerate and scalar ranges") {
    RngState rng(5, 0);
    const ComplexMatrix zero = random_psd_contraction(3, rng, 0.0, 0.0);
    CHECK(zero.max_abs() <= 1e-14);

    const ComplexMatrix scal = random_psd_contraction(3, rng, 0.4, 0.4);
    CHECK(max_abs_diff(scal, 0.4 * ComplexMatrix::identity(3)) <= 1e-12);

    CHECK_THROWS_AS(random_psd_contraction(3, rng, 0.5, 0.2), Error);
    CHECK_THROWS_AS(random_psd_contraction(3, rng, 0.0, 1.0), Error);
}

TEST_CASE("random_psd_contraction self-consistency") {
    RngState rng(6, 0);
    for (int trial = 0; trial < 20; ++trial) {
        const ComplexMatrix z = random_psd_contraction(4, rng, 0.1, 0.8);
        CHECK(z.hermitian_defect() <= 1e-12);
        const auto ev = eig_hermitian(z).values;
        CHECK(ev.front() <= 0.8 + 1e-10);
        CHECK(ev.back() >= 0.1 - 1e-10);
        const auto sv = svd_values(z);
        for (std::size_t k = 0; k < 4; ++k) CHECK(std::abs(ev[k] - sv[k]) <= 1e-10);
    }
}

TEST_CASE("random_with_singular_values hits the requested range") {
    RngState rng(8, 0);
    const ComplexMatrix a = random_with_singular_values(4, rng, 0.2, 3.0);
    const auto sv = svd_values(a);
    CHECK(sv.front() <= 3.0 + 1e-9);
    CHECK(sv.back() >= 0.2 - 1e-9);
}
