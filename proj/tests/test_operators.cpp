#include "test_helpers.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <vector>

using namespace spincorr;
using test_helpers::make_rng;

TEST_CASE("spin-1 matrices in the m = +1, 0, -1 basis", "[operators]") {
    const SpinOperators s = spin1_operators();

    ComplexMatrix sz_expected(3, 3);
    sz_expected(0, 0) = 1.0;
    sz_expected(2, 2) = -1.0;
    CHECK(max_abs_diff(s.sz, sz_expected) == 0.0);

    const std::vector<double> sx_eigs = eig_hermitian_values(s.sx);
    CHECK(sx_eigs[0] == Catch::Approx(-1.0).margin(1e-12));
    CHECK(sx_eigs[1] == Catch::Approx(0.0).margin(1e-12));
    CHECK(sx_eigs[2] == Catch::Approx(1.0).margin(1e-12));
}

TEST_CASE("spin-1 commutation relations and Casimir", "[operators]") {
    const SpinOperators s = spin1_operators();
    const Complex i{0.0, 1.0};
    CHECK(max_abs_diff(commutator(s.sx, s.sy), i * s.sz) < 1e-12);
    CHECK(max_abs_diff(commutator(s.sy, s.sz), i * s.sx) < 1e-12);
    CHECK(max_abs_diff(commutator(s.sz, s.sx), i * s.sy) < 1e-12);
    CHECK(max_abs_diff(s.sx * s.sx + s.sy * s.sy + s.sz * s.sz,
                       2.0 * ComplexMatrix::identity(3)) < 1e-12);
}

TEST_CASE("d=2 basis reduces to the Pauli matrices", "[operators]") {
    const OperatorBasis basis = gell_mann_basis(2);
    REQUIRE(basis.elements.size() == 3);

    ComplexMatrix sigma_x(2, 2), sigma_y(2, 2), sigma_z(2, 2);
    sigma_x(0, 1) = 1.0;
    sigma_x(1, 0) = 1.0;
    sigma_y(0, 1) = Complex{0.0, -1.0};
    sigma_y(1, 0) = Complex{0.0, 1.0};
    sigma_z(0, 0) = 1.0;
    sigma_z(1, 1) = -1.0;
    CHECK(max_abs_diff(basis.elements[0], sigma_x) == 0.0);
    CHECK(max_abs_diff(basis.elements[1], sigma_y) == 0.0);
    CHECK(max_abs_diff(basis.elements[2], sigma_z) < 1e-15);
}

TEST_CASE("d=3 basis is orthonormal under the trace pairing", "[operators]") {
    const OperatorBasis basis = gell_mann_basis(3);
    REQUIRE(basis.elements.size() == 8);
    for (std::size_t k = 0; k < 8; ++k)
        for (std::size_t l = 0; l < 8; ++l) {
            const Complex overlap = (basis.elements[k] * basis.elements[l]).trace();
            CHECK(std::abs(overlap - ((k == l) ? Complex{2.0, 0.0} : Complex{0.0, 0.0})) < 1e-12);
        }
}

TEST_CASE("d=9 basis has 80 traceless Hermitian elements", "[operators]") {
    const OperatorBasis basis = gell_mann_basis(9);
    REQUIRE(basis.elements.size() == 80);
    for (const auto& x : basis.elements) {
        CHECK(std::abs(x.trace()) < 1e-12);
        CHECK(x.is_hermitian(1e-12));
    }
}

TEST_CASE("basis dimension below 2 is rejected", "[operators]") {
    CHECK_THROWS_AS(gell_mann_basis(1), InvalidDimension);
    CHECK_THROWS_AS(gell_mann_basis(0), InvalidDimension);
}

TEST_CASE("basis completeness reconstructs random Hermitian matrices", "[operators]") {
    auto rng = make_rng(31);
    for (std::size_t d : {std::size_t{3}, std::size_t{4}}) {
        const OperatorBasis basis = gell_mann_basis(d);
        for (int rep = 0; rep < 5; ++rep) {
            const ComplexMatrix m = test_helpers::random_hermitian(rng, d);
            ComplexMatrix rebuilt =
                (m.trace() / static_cast<double>(d)) * ComplexMatrix::identity(d);
            for (const auto& x : basis.elements) rebuilt += (0.5 * (m * x).trace()) * x;
            CHECK(max_abs_diff(rebuilt, m) < 1e-10);
        }
    }
}

TEST_CASE("embed places the operator on the requested site", "[operators]") {
    const SpinOperators s = spin1_operators();
    const std::vector<std::size_t> dims{3, 3};
    CHECK(max_abs_diff(embed(s.sz, 0, dims), kron(s.sz, ComplexMatrix::identity(3))) == 0.0);
    CHECK(max_abs_diff(embed(s.sz, 1, dims), kron(ComplexMatrix::identity(3), s.sz)) == 0.0);
    CHECK(std::abs(embed(s.sx, 2, {3, 3, 3}).trace()) < 1e-12);
    CHECK_THROWS_AS(embed(s.sz, 2, dims), IndexOutOfRange);
    CHECK_THROWS_AS(embed(s.sz, 0, {2, 3}), DimensionMismatch);
}

TEST_CASE("two-site Heisenberg spectrum splits by total spin", "[operators]") {
    const ComplexMatrix h = heisenberg_term(0, 1, two_site_dims());
    const std::vector<double> eigs = eig_hermitian_values(h);

    // (j(j+1) - 4)/2 over the j = 0, 1, 2 multiplets
    std::vector<double> expected;
    for (int j = 0; j <= 2; ++j)
        for (int m = -j; m <= j; ++m) expected.push_back((j * (j + 1) - 4) / 2.0);
    std::sort(expected.begin(), expected.end());
    REQUIRE(eigs.size() == expected.size());
    for (std::size_t i = 0; i < eigs.size(); ++i)
        CHECK(eigs[i] == Catch::Approx(expected[i]).margin(1e-10));
}

TEST_CASE("Heisenberg term is symmetric in its sites and traceless", "[operators]") {
    const auto& dims = two_site_dims();
    CHECK(max_abs_diff(heisenberg_term(0, 1, dims), heisenberg_term(1, 0, dims)) < 1e-14);
    CHECK(std::abs(heisenberg_term(0, 1, dims).trace()) < 1e-12);
    CHECK_THROWS_AS(heisenberg_term(0, 0, dims), IndexOutOfRange);
    CHECK_THROWS_AS(heisenberg_term(0, 2, dims), IndexOutOfRange);
}

TEST_CASE("Heisenberg term commutes with total J_z", "[operators]") {
    const SpinOperators s = spin1_operators();
    const auto& dims = two_site_dims();
    const ComplexMatrix jz = embed(s.sz, 0, dims) + embed(s.sz, 1, dims);
    CHECK(commutator(heisenberg_term(0, 1, dims), jz).max_abs() < 1e-12);
}

TEST_CASE("squared Heisenberg term has eigenvalues 4 and 1", "[operators]") {
    const ComplexMatrix h = heisenberg_term(0, 1, two_site_dims());
    const std::vector<double> eigs = eig_hermitian_values(h * h);
    // square of {-2, -1, 1} on the j = {0, 1, 2} multiplets
    CHECK(eigs.front() == Catch::Approx(1.0).margin(1e-10));
    CHECK(eigs.back() == Catch::Approx(4.0).margin(1e-10));
    CHECK(std::count_if(eigs.begin(), eigs.end(),
                        [](double e) { return std::abs(e - 4.0) < 1e-8; }) == 1);
    CHECK(std::count_if(eigs.begin(), eigs.end(),
                        [](double e) { return std::abs(e - 1.0) < 1e-8; }) == 8);
}

TEST_CASE("site permutation relocates embedded operators", "[operators]") {
    auto rng = make_rng(32);
    const std::vector<std::size_t> dims{3, 3, 3};
    const std::vector<std::size_t> perm{1, 2, 0};
    const ComplexMatrix p = site_permutation(perm, dims);

    CHECK(max_abs_diff(p * p.adjoint(), ComplexMatrix::identity(27)) < 1e-14);

    const ComplexMatrix op = test_helpers::random_hermitian(rng, 3);
    for (std::size_t new_site = 0; new_site < 3; ++new_site) {
        const ComplexMatrix lhs = p * embed(op, perm[new_site], dims) * p.adjoint();
        CHECK(max_abs_diff(lhs, embed(op, new_site, dims)) < 1e-12);
    }
    CHECK_THROWS_AS(site_permutation({0, 0, 1}, dims), IndexOutOfRange);
    CHECK_THROWS_AS(site_permutation({0, 1}, dims), DimensionMismatch);
}
