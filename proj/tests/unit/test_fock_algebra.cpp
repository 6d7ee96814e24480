// Copyright 2026 The omheat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "omheat/errors.hpp"
#include "omheat/fock_algebra.hpp"
#include "support.hpp"

using namespace omheat;

TEST_CASE("annihilation on two levels") {
  const ComplexMatrix a = annihilation(2);
  ComplexMatrix expected(2, 2);
  expected << 0, 1, 0, 0;
  CHECK(a == expected);
}

TEST_CASE("annihilation rejects fewer than two levels") {
  CHECK_THROWS_AS(annihilation(1), InvalidDimension);
  CHECK_THROWS_AS(annihilation(0), InvalidDimension);
  CHECK_THROWS_AS(number_operator(1), InvalidDimension);
}

TEST_CASE("number operator is diag(0, 1, ..., d-1)") {
  const ComplexMatrix a = annihilation(3);
  const ComplexMatrix n = a.adjoint() * a;
  ComplexMatrix expected = ComplexMatrix::Zero(3, 3);
  expected.diagonal() << 0, 1, 2;
  CHECK(max_abs(n - expected) < 1e-15);
  CHECK(number_operator(3) == expected);
  for (int d : {2, 5, 17}) {
    const ComplexMatrix nn = number_operator(d);
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) CHECK(nn(i, j) == Complex(i == j ? i : 0.0));
    }
  }
}

TEST_CASE("truncated commutator on eight levels") {
  const ComplexMatrix a = annihilation(8);
  const ComplexMatrix c = commutator(a, creation(8));
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      Complex expected = i == j ? 1.0 : 0.0;
      if (i == 7 && j == 7) expected = -7.0;
      CHECK(std::abs(c(i, j) - expected) < 1e-14);
    }
  }
}

TEST_CASE("annihilation is strictly upper bidiagonal with sqrt(n) entries") {
  const int d = 9;
  const ComplexMatrix a = annihilation(d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      if (j == i + 1) {
        CHECK(a(i, j).real() == doctest::Approx(std::sqrt(static_cast<double>(j))).epsilon(1e-15));
      } else {
        CHECK(a(i, j) == Complex(0.0));
      }
    }
  }
  CHECK(creation(d) == a.adjoint());
}

TEST_CASE("tensor products") {
  CHECK(tensor(identity(2), identity(3)) == identity(6));

  const ComplexMatrix t = tensor(annihilation(2), identity(2));
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected.block(0, 2, 2, 2) = identity(2);
  CHECK(t == expected);

  std::mt19937 rng(7);
  for (int trial = 0; trial < 5; ++trial) {
    const ComplexMatrix a = testing::random_matrix(3, rng);
    const ComplexMatrix b = testing::random_matrix(3, rng);
    const ComplexMatrix c = testing::random_matrix(2, rng);
    CHECK(std::abs(tensor(a, b).trace() - a.trace() * b.trace()) < 1e-12);
    CHECK(max_abs(tensor(tensor(a, b), c) - tensor(a, tensor(b, c))) < 1e-12);
    CHECK(max_abs(tensor(a + c.cwiseAbs().sum() * b, c) -
                  (tensor(a, c) + c.cwiseAbs().sum() * tensor(b, c))) < 1e-11);
  }
}

TEST_CASE("joint ordering is optical first") {
  const SystemDims dims{3, 4};
  CHECK(dims.joint() == 12);
  CHECK(dims.photon_of(7) == 1);
  CHECK(dims.phonon_of(7) == 3);
  const ComplexMatrix n = optical(number_operator(3), dims);
  for (int k = 0; k < dims.joint(); ++k) CHECK(n(k, k) == Complex(dims.photon_of(k)));
  const ComplexMatrix m = mechanical(number_operator(4), dims);
  for (int k = 0; k < dims.joint(); ++k) CHECK(m(k, k) == Complex(dims.phonon_of(k)));
  CHECK_THROWS_AS((SystemDims{1, 4}.validate()), InvalidDimension);
  CHECK_THROWS_AS((SystemDims{3, 1}.validate()), InvalidDimension);
}

TEST_CASE("matrix exponential") {
  CHECK(max_abs(matrix_exp(ComplexMatrix::Zero(4, 4)) - identity(4)) < 1e-15);

  const ComplexMatrix ipi = Complex(0.0, std::numbers::pi) * identity(2);
  CHECK(max_abs(matrix_exp(ipi) + identity(2)) < 1e-14);

  std::mt19937 rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    const ComplexMatrix g = testing::random_matrix(6, rng);
    const ComplexMatrix anti = 0.5 * (g - g.adjoint());
    const ComplexMatrix u = matrix_exp(anti);
    CHECK(max_abs(u * u.adjoint() - identity(6)) < 1e-10);
    // exp(A) exp(-A) = I
    CHECK(max_abs(u * matrix_exp(-anti) - identity(6)) < 1e-10);
  }

  // Diagonal input: scalar exponential per entry.
  ComplexMatrix d = ComplexMatrix::Zero(3, 3);
  d.diagonal() << Complex(0.3, 0.1), Complex(-1.2, 2.0), Complex(0.0, -0.7);
  const ComplexMatrix e = matrix_exp(d);
  for (int i = 0; i < 3; ++i) CHECK(std::abs(e(i, i) - std::exp(d(i, i))) < 1e-14);
}

TEST_CASE("matrix exponential rejects non-finite input") {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 1) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(matrix_exp(m), NumericError);
  m(0, 1) = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(matrix_exp(m), NumericError);
}

TEST_CASE("to_sparse drops exact zeros only") {
  ComplexMatrix m = ComplexMatrix::Zero(3, 3);
  m(0, 1) = 1e-300;
  m(2, 2) = Complex(0.0, 2.0);
  const SparseOperator s = to_sparse(m);
  CHECK(s.nonZeros() == 2);
  CHECK(max_abs(ComplexMatrix(s) - m) == 0.0);
}
