#include "test_helpers.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

using namespace spincorr;
using test_helpers::make_rng;
using test_helpers::random_hermitian;

namespace {

ComplexMatrix diag(std::initializer_list<double> values) {
    ComplexMatrix m(values.size(), values.size());
    std::size_t i = 0;
    for (double v : values) m(i, i) = v, ++i;
    return m;
}

ComplexMatrix reassemble(const Spectrum& s) {
    const std::size_t n = s.eigenvalues.size();
    ComplexMatrix d(n, n);
    for (std::size_t i = 0; i < n; ++i) d(i, i) = s.eigenvalues[i];
    return s.eigenvectors * d * s.eigenvectors.adjoint();
}

} // namespace

TEST_CASE("diagonal matrix is sorted ascending", "[eigensolver]") {
    const Spectrum s = eig_hermitian(diag({3.0, 1.0, 2.0}));
    REQUIRE(s.eigenvalues.size() == 3);
    CHECK(s.eigenvalues[0] == Catch::Approx(1.0));
    CHECK(s.eigenvalues[1] == Catch::Approx(2.0));
    CHECK(s.eigenvalues[2] == Catch::Approx(3.0));
}

TEST_CASE("identity matrix", "[eigensolver]") {
    const Spectrum s = eig_hermitian(ComplexMatrix::identity(5));
    for (double e : s.eigenvalues) CHECK(e == Catch::Approx(1.0));
    CHECK(max_abs_diff(s.eigenvectors.adjoint() * s.eigenvectors, ComplexMatrix::identity(5)) <
          1e-10);
}

TEST_CASE("two-site model ground energy at omega=tau=gamma=1", "[eigensolver]") {
    // closed form: the j=1, M=-1 level sits at -omega
    const Spectrum s = eig_hermitian(build_hamiltonian_2(ModelParams(1.0, 1.0, 1.0)));
    CHECK(s.eigenvalues.front() == Catch::Approx(-1.0).margin(1e-10));
}

TEST_CASE("spectrum invariants on random Hermitian inputs", "[eigensolver]") {
    auto rng = make_rng(21);
    std::uniform_int_distribution<std::size_t> dim_dist(2, 32);
    for (int rep = 0; rep < 100; ++rep) {
        const std::size_t n = dim_dist(rng);
        const ComplexMatrix h = random_hermitian(rng, n);
        const Spectrum s = eig_hermitian(h);

        double trace_diff = h.trace().real();
        for (double e : s.eigenvalues) trace_diff -= e;
        CHECK(std::abs(trace_diff) < 1e-9);

        CHECK(std::is_sorted(s.eigenvalues.begin(), s.eigenvalues.end()));
        CHECK(max_abs_diff(s.eigenvectors.adjoint() * s.eigenvectors,
                           ComplexMatrix::identity(n)) < 1e-10);
        CHECK(max_abs_diff(reassemble(s), h) < 1e-10);
    }
}

TEST_CASE("re-diagonalizing the reconstruction returns the same eigenvalues", "[eigensolver]") {
    auto rng = make_rng(22);
    for (int rep = 0; rep < 10; ++rep) {
        const ComplexMatrix h = random_hermitian(rng, 9);
        const Spectrum first = eig_hermitian(h);
        const Spectrum second = eig_hermitian(reassemble(first));
        for (std::size_t i = 0; i < first.eigenvalues.size(); ++i)
            CHECK(std::abs(first.eigenvalues[i] - second.eigenvalues[i]) < 1e-9);
    }
}

TEST_CASE("deterministic output for identical input", "[eigensolver]") {
    auto rng = make_rng(23);
    const ComplexMatrix h = random_hermitian(rng, 12);
    const Spectrum a = eig_hermitian(h);
    const Spectrum b = eig_hermitian(h);
    CHECK(a.eigenvalues == b.eigenvalues);
    CHECK(max_abs_diff(a.eigenvectors, b.eigenvectors) == 0.0);
}

TEST_CASE("non-Hermitian input is rejected", "[eigensolver]") {
    ComplexMatrix a(3, 3);
    a(0, 1) = Complex{1.0, 0.5};
    a(1, 0) = Complex{1.0, 0.5}; // not the conjugate
    CHECK_THROWS_AS(eig_hermitian(a), NonHermitianInput);
    CHECK_THROWS_AS(eig_hermitian_values(ComplexMatrix(2, 3)), NonHermitianInput);
}

TEST_CASE("matrix_function basics", "[eigensolver]") {
    auto rng = make_rng(24);
    const ComplexMatrix h = random_hermitian(rng, 6);
    CHECK(max_abs_diff(matrix_function(h, [](double x) { return x; }), h) < 1e-10);
    CHECK(max_abs_diff(matrix_function(ComplexMatrix(4, 4), [](double x) { return std::exp(x); }),
                       ComplexMatrix::identity(4)) < 1e-12);
    CHECK(max_abs_diff(matrix_function(diag({1.0, -2.0}), [](double x) { return x * x; }),
                       diag({1.0, 4.0})) < 1e-12);
}
