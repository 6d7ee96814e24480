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
#include <map>
#include <random>
#include <string>
#include <vector>

#include "omheat/errors.hpp"
#include "omheat/generators.hpp"
#include "support.hpp"

using namespace omheat;

namespace {

ComplexMatrix lindblad(const ComplexMatrix& o, const ComplexMatrix& rho) {
  const ComplexMatrix od = o.adjoint();
  return o * rho * od - 0.5 * (od * o * rho + rho * od * o);
}

double max_abs_sparse(const Superoperator& s) {
  return s.nonZeros() == 0 ? 0.0 : s.coeffs().cwiseAbs().maxCoeff();
}

// Column-major trace functional: Σ_i vec(ρ)[i + D i].
Eigen::RowVectorXcd trace_functional(int d) {
  Eigen::RowVectorXcd t = Eigen::RowVectorXcd::Zero(d * d);
  for (int i = 0; i < d; ++i) t[i + d * i] = 1.0;
  return t;
}

PhysicalParams fig2(double g) {
  PhysicalParams p;
  p.g = g;
  return p;
}

std::vector<Generator> all_models(const PhysicalParams& p, const SystemDims& dims) {
  std::vector<Generator> out{build_sme(p, dims), build_dsme(p, dims)};
  for (int s : {2, 4, 6, 8}) out.push_back(build_gme(p, dims, s));
  return out;
}

}  // namespace

TEST_CASE("dissipator superoperator examples") {
  CHECK(dissipator_super(ComplexMatrix::Zero(3, 3)).nonZeros() == 0);

  const ComplexMatrix a = annihilation(2);
  ComplexMatrix one = ComplexMatrix::Zero(2, 2);
  one(1, 1) = 1.0;
  const ComplexMatrix out = unvec(dissipator_super(a) * vec(one), 2);
  ComplexMatrix expected = ComplexMatrix::Zero(2, 2);
  expected(0, 0) = 1.0;
  expected(1, 1) = -1.0;
  CHECK(max_abs(out - expected) < 1e-15);
}

TEST_CASE("dissipator superoperator against the operator definition") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix o = testing::random_matrix(5, rng);
    const ComplexMatrix rho = testing::random_density(5, rng);
    const ComplexMatrix out = unvec(dissipator_super(o) * vec(rho), 5);
    CHECK(max_abs(out - lindblad(o, rho)) < 1e-12);
    CHECK(std::abs(out.trace()) < 1e-12);
  }
}

TEST_CASE("sector assembler matches the Kronecker construction") {
  const SystemDims dims{3, 4};
  const Generator gen = build_dsme(fig2(0.04), dims);
  Superoperator reference = commutator_super(gen.hamiltonian());
  for (Part part : {Part::optical_bath, Part::mechanical_bath, Part::dephasing}) {
    for (const auto& ch : gen.channels(part)) {
      reference += ch.rate * dissipator_super(ComplexMatrix(ch.op));
    }
  }
  CHECK(max_abs_sparse(gen.total() - reference) < 1e-15);

  // Photon-order blocks are the corresponding rows and columns of the full map.
  const Superoperator full = gen.total();
  for (int order : {-2, 0, 1}) {
    const CoherenceSector sector = CoherenceSector::photon_order(dims, order);
    const Superoperator block = gen.total(sector);
    const ComplexMatrix dense_full(full);
    double worst = 0.0;
    for (int r = 0; r < sector.size(); ++r) {
      for (int c = 0; c < sector.size(); ++c) {
        const int fr = sector.row_of(r) + dims.joint() * sector.col_of(r);
        const int fc = sector.row_of(c) + dims.joint() * sector.col_of(c);
        worst = std::max(worst, std::abs(ComplexMatrix(block)(r, c) - dense_full(fr, fc)));
      }
    }
    CHECK(worst == 0.0);
  }
}

TEST_CASE("every model conserves photon-coherence order") {
  const SystemDims dims{3, 4};
  for (const Generator& gen : all_models(fig2(0.05), dims)) {
    const ComplexMatrix full(gen.total());
    const int d = dims.joint();
    double leak = 0.0;
    for (int c = 0; c < d * d; ++c) {
      for (int r = 0; r < d * d; ++r) {
        const int order_c = dims.photon_of(c % d) - dims.photon_of(c / d);
        const int order_r = dims.photon_of(r % d) - dims.photon_of(r / d);
        if (order_c != order_r) leak = std::max(leak, std::abs(full(r, c)));
      }
    }
    CHECK(leak == 0.0);
  }
}

TEST_CASE("trace and Hermiticity preservation on random states") {
  const SystemDims dims{3, 5};
  std::mt19937 rng(5);
  for (const Generator& gen : all_models(fig2(0.05), dims)) {
    const Superoperator total = gen.total();
    const double scale = ComplexMatrix(total).cwiseAbs().rowwise().sum().maxCoeff();
    const Eigen::RowVectorXcd tr = trace_functional(dims.joint());
    CHECK((tr * total).cwiseAbs().maxCoeff() <= 1e-10 * scale);
    for (int trial = 0; trial < 10; ++trial) {
      const ComplexMatrix rho = testing::random_density(dims.joint(), rng);
      const ComplexMatrix out = unvec(total * vec(rho), dims.joint());
      CHECK(std::abs(out.trace()) < 1e-12);
      CHECK(max_abs(out - out.adjoint()) < 1e-12);
      CHECK(max_abs(out - gen.apply_total(rho)) < 1e-12);
    }
  }
}

TEST_CASE("all channel rates are non-negative") {
  const SystemDims dims{3, 4};
  for (double g : {0.0, 0.01, 0.1}) {
    for (const Generator& gen : all_models(fig2(g), dims)) {
      for (Part part : {Part::optical_bath, Part::mechanical_bath, Part::dephasing}) {
        for (const auto& ch : gen.channels(part)) {
          CHECK(ch.rate >= 0.0);
          CHECK(std::isfinite(ch.rate));
        }
      }
    }
  }
}

TEST_CASE("SME structure") {
  const SystemDims dims{3, 4};
  const PhysicalParams p = fig2(0.02);
  const Generator sme = build_sme(p, dims);
  CHECK(sme.frame() == Frame::lab);
  CHECK(sme.model() == Model::sme);
  CHECK(sme.channels(Part::optical_bath).size() == 2);
  CHECK(sme.channels(Part::mechanical_bath).size() == 2);
  CHECK(sme.channels(Part::dephasing).empty());
  CHECK(sme.channels(Part::optical_bath)[0].rate ==
        doctest::Approx(0.02 * (1.0 + bose_einstein(1.0, p.T_c, p.omega_c_phys))));
  CHECK(sme.channels(Part::mechanical_bath)[1].rate ==
        doctest::Approx(0.005 * bose_einstein(0.06, p.T_m, p.omega_c_phys)));

  // Parts add up to the total.
  Superoperator sum = sme.superoperator(Part::hamiltonian);
  for (Part part : {Part::optical_bath, Part::mechanical_bath, Part::dephasing}) {
    sum += sme.superoperator(part);
  }
  CHECK(max_abs_sparse(sum - sme.total()) < 1e-15);
}

TEST_CASE("g = 0 limits coincide with the SME entrywise") {
  const SystemDims dims{3, 5};
  const PhysicalParams p = fig2(0.0);
  const Superoperator sme = build_sme(p, dims).total();
  CHECK(max_abs_sparse(build_dsme(p, dims).total() - sme) == 0.0);
  for (int s : {2, 4, 6, 8}) CHECK(max_abs_sparse(build_gme(p, dims, s).total() - sme) == 0.0);
}

TEST_CASE("DSME structure") {
  const SystemDims dims{3, 5};
  const PhysicalParams p = fig2(0.03);
  const Generator dsme = build_dsme(p, dims);
  REQUIRE(dsme.channels(Part::dephasing).size() == 1);
  const double expected =
      4.0 * 0.005 * reduced_temperature(p.T_m, p.omega_c_phys) / 0.06 * 0.5 * 0.5;
  CHECK(dsme.channels(Part::dephasing)[0].rate == doctest::Approx(expected).epsilon(1e-14));

  // The optical part is the SME's.
  CHECK(max_abs_sparse(dsme.superoperator(Part::optical_bath) -
                       build_sme(p, dims).superoperator(Part::optical_bath)) == 0.0);

  // Dephasing annihilates states diagonal in photon number.
  std::mt19937 rng(9);
  ComplexMatrix rho = testing::random_density(dims.joint(), rng);
  for (int i = 0; i < dims.joint(); ++i) {
    for (int j = 0; j < dims.joint(); ++j) {
      if (dims.photon_of(i) != dims.photon_of(j)) rho(i, j) = 0.0;
    }
  }
  CHECK(max_abs(dsme.apply(Part::dephasing, rho)) < 1e-15);

  // Mechanical jump operators are b - α n_c and b† - α n_c.
  const ComplexMatrix b = mechanical(annihilation(5), dims);
  const ComplexMatrix n = optical(number_operator(3), dims);
  CHECK(max_abs(ComplexMatrix(dsme.channels(Part::mechanical_bath)[0].op) - (b - 0.5 * n)) < 1e-15);
  CHECK(max_abs(ComplexMatrix(dsme.channels(Part::mechanical_bath)[1].op) -
                (b.adjoint() - 0.5 * n)) < 1e-15);
}

TEST_CASE("sideband channels at first order") {
  const SystemDims dims{3, 5};
  const PhysicalParams p = fig2(0.03);
  const auto channels = sideband_channels(p, dims, 1);
  REQUIRE(channels.size() == 4);
  const ComplexMatrix a = optical(annihilation(3), dims);
  const ComplexMatrix b = mechanical(annihilation(5), dims);
  const double alpha = 0.5;
  auto g = [&](double w) { return spectral_g(p.kappa_c, w, p.T_c, p.omega_c_phys); };
  struct Expected {
    ComplexMatrix op;
    double rate;
  };
  const std::vector<Expected> expected = {
      {a * b, alpha * g(1.06)},
      {(a * b).adjoint(), alpha * g(-1.06)},
      {a * b.adjoint(), alpha * g(0.94)},
      {(a * b.adjoint()).adjoint(), alpha * g(-0.94)},
  };
  for (const auto& e : expected) {
    int matches = 0;
    for (const auto& ch : channels) {
      if (max_abs(ComplexMatrix(ch.op) - e.op) < 1e-14 &&
          std::abs(ch.rate - e.rate) <= 1e-15 * e.rate) {
        ++matches;
      }
    }
    CHECK(matches == 1);
  }
}

TEST_CASE("sideband channels at second order") {
  const SystemDims dims{3, 6};
  const PhysicalParams p = fig2(0.03);
  const auto first = sideband_channels(p, dims, 1);
  const auto second = sideband_channels(p, dims, 2);
  REQUIRE(second.size() == 12);
  const ComplexMatrix a = optical(annihilation(3), dims);
  const ComplexMatrix b = mechanical(annihilation(6), dims);
  const ComplexMatrix bd = b.adjoint();
  auto g = [&](double w) { return spectral_g(p.kappa_c, w, p.T_c, p.omega_c_phys); };
  const double a2 = 0.25;
  const std::vector<std::pair<ComplexMatrix, double>> emissions = {
      {a * b * b, a2 * g(1.12)},
      {a * bd * bd, a2 * g(0.88)},
      {a * b * bd, a2 * g(1.0)},
      {a * bd * b, a2 * g(1.0)},
  };
  for (const auto& [op, rate] : emissions) {
    int found = 0;
    for (std::size_t k = first.size(); k < second.size(); ++k) {
      if (max_abs(ComplexMatrix(second[k].op) - op) < 1e-13 &&
          std::abs(second[k].rate - rate) <= 1e-15 * rate) {
        ++found;
      }
    }
    CHECK(found == 1);
  }
  // The first-order set is a prefix of the second-order set.
  for (std::size_t k = 0; k < first.size(); ++k) {
    CHECK(max_abs(ComplexMatrix(first[k].op - second[k].op)) == 0.0);
    CHECK(first[k].rate == second[k].rate);
  }
}

TEST_CASE("third-order words by brute-force expansion") {
  // Expand (x - y)^3 over non-commuting letters and group words by the net
  // number of annihilators minus creators.
  std::map<int, std::vector<std::string>> by_shift;
  for (int mask = 0; mask < 8; ++mask) {
    std::string word;
    int net = 0;
    for (int pos = 2; pos >= 0; --pos) {
      const bool y = (mask >> pos) & 1;
      word += y ? 'y' : 'x';
      net += y ? -1 : 1;
    }
    by_shift[net].push_back(word);
  }
  REQUIRE(by_shift[1].size() == 3);

  const SystemDims dims{2, 7};
  const PhysicalParams p = fig2(0.03);
  const auto channels = sideband_channels(p, dims, 3);
  CHECK(channels.size() == 2 * (2 + 4 + 8));
  const ComplexMatrix a = optical(annihilation(2), dims);
  const ComplexMatrix b = mechanical(annihilation(7), dims);
  const double rate = 0.125 * spectral_g(p.kappa_c, 1.06, p.T_c, p.omega_c_phys);
  for (const std::string& word : by_shift[1]) {
    ComplexMatrix op = a;
    for (char letter : word) op = op * (letter == 'x' ? b : ComplexMatrix(b.adjoint()));
    int found = 0;
    for (const auto& ch : channels) {
      if (max_abs(ComplexMatrix(ch.op) - op) < 1e-12 && std::abs(ch.rate - rate) <= 1e-15 * rate) {
        ++found;
      }
    }
    CHECK_MESSAGE(found == 1, word);
  }
}

TEST_CASE("GME structure") {
  const SystemDims dims{3, 5};
  const PhysicalParams p = fig2(0.03);
  const Generator gme2 = build_gme(p, dims, 2);
  const Generator gme4 = build_gme(p, dims, 4);
  CHECK(gme2.frame() == Frame::polaron);
  CHECK(gme2.channels(Part::optical_bath).size() == 2 + 4);
  CHECK(gme4.channels(Part::optical_bath).size() == 2 + 4 + 8);
  CHECK(build_gme(p, dims, 8).channels(Part::optical_bath).size() == 2 + 4 + 8 + 16 + 32);

  // GME4 differs from GME2 only by the second-order channels.
  const auto second_only = sideband_channels(p, dims, 2);
  Superoperator extra(gme4.total().rows(), gme4.total().cols());
  for (std::size_t k = 4; k < second_only.size(); ++k) {
    extra += second_only[k].rate * dissipator_super(ComplexMatrix(second_only[k].op));
  }
  CHECK(max_abs_sparse(gme4.total() - gme2.total() - extra) < 1e-15);

  REQUIRE(gme4.channels(Part::dephasing).size() == 1);
  const double gm0 = spectral_density_zero(p);
  CHECK(gme4.channels(Part::dephasing)[0].rate == doctest::Approx(gm0 * 0.25).epsilon(1e-14));
  CHECK(gme4.hamiltonian() == polaron_hamiltonian(p, dims));

  PhysicalParams q = p;
  q.g_m_zero_override = 0.5;
  CHECK(build_gme(q, dims, 4).channels(Part::dephasing)[0].rate == doctest::Approx(0.125));
}

TEST_CASE("builder errors") {
  const SystemDims dims{3, 4};
  PhysicalParams p = fig2(0.03);
  CHECK_THROWS_AS(sideband_channels(p, dims, 0), UnsupportedOrder);
  CHECK_THROWS_AS(sideband_channels(p, dims, 5), UnsupportedOrder);
  CHECK_THROWS_AS(build_gme(p, dims, 3), UnsupportedOrder);
  CHECK_THROWS_AS(build_gme(p, dims, 10), UnsupportedOrder);
  p.omega_m = 0.3;
  p.g = 0.01;
  CHECK_NOTHROW(build_gme(p, dims, 6));
  CHECK_THROWS_AS(build_gme(p, dims, 8), SidebandFrequencyError);
  p.omega_m = 0.25;
  CHECK_THROWS_AS(sideband_channels(p, dims, 4), SidebandFrequencyError);

  const Generator sme = build_sme(fig2(0.01), dims);
  CHECK_THROWS_AS(Generator(dims, Model::gme, Frame::lab, 4, sme.hamiltonian(), {}, {}, {}),
                  FrameError);
  CHECK_THROWS_AS(Generator(dims, Model::sme, Frame::polaron, 0, sme.hamiltonian(), {}, {}, {}),
                  FrameError);
  JumpChannel bad = sme.channels(Part::optical_bath)[0];
  bad.rate = -1.0;
  CHECK_THROWS_AS(Generator(dims, Model::sme, Frame::lab, 0, sme.hamiltonian(), {bad}, {}, {}),
                  InvalidParameters);
  CHECK_THROWS_AS(Generator(dims, Model::sme, Frame::lab, 0, identity(3), {}, {}, {}),
                  InvalidDimension);
}

TEST_CASE("adjoint action is the dual of the forward action") {
  const SystemDims dims{3, 4};
  std::mt19937 rng(17);
  for (const Generator& gen : all_models(fig2(0.06), dims)) {
    const ComplexMatrix rho = testing::random_density(dims.joint(), rng);
    const ComplexMatrix x = testing::random_matrix(dims.joint(), rng);
    for (Part part : {Part::hamiltonian, Part::optical_bath, Part::mechanical_bath, Part::dephasing}) {
      const Complex lhs = (gen.apply(part, rho) * x).trace();
      const Complex rhs = (rho * ComplexMatrix(gen.adjoint_apply(part, to_sparse(x)))).trace();
      CHECK(std::abs(lhs - rhs) < 1e-11);
      const ExtendedOperator xe = to_sparse(x).cast<LongComplex>();
      const ComplexMatrix ext = ComplexMatrix(gen.adjoint_apply_extended(part, xe).cast<Complex>());
      CHECK(max_abs(ext - ComplexMatrix(gen.adjoint_apply(part, to_sparse(x)))) < 1e-12);
    }
  }
}

TEST_CASE("extended assembly rounds to the double assembly") {
  const SystemDims dims{3, 5};
  for (const Generator& gen : all_models(fig2(0.07), dims)) {
    const CoherenceSector sector = CoherenceSector::photon_order(dims, 0);
    const Superoperator rounded = gen.total_extended(sector).cast<Complex>();
    const Superoperator plain = gen.total(sector);
    CHECK(max_abs_sparse(rounded - plain) <= 1e-15 * max_abs_sparse(plain));
  }
}

TEST_CASE("untracked channel hook") {
  const SystemDims dims{3, 4};
  const Generator sme = build_sme(fig2(0.02), dims);
  JumpChannel extra = sme.channels(Part::optical_bath)[0];
  extra.origin = "planted";
  const Generator bad = sme.with_untracked_channel(extra);
  CHECK(bad.untracked_channels().size() == 1);
  CHECK(max_abs_sparse(bad.superoperator(Part::optical_bath) - sme.superoperator(Part::optical_bath)) ==
        0.0);
  CHECK(max_abs_sparse(bad.total() - sme.total()) > 0.0);
}
