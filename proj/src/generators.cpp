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

#include "omheat/generators.hpp"

#include <cmath>
#include <type_traits>
#include <utility>

#include "omheat/errors.hpp"

namespace omheat {

const std::vector<JumpChannel> Generator::kNoChannels{};

std::string_view to_string(Model model) {
  switch (model) {
    case Model::sme: return "sme";
    case Model::dsme: return "dsme";
    case Model::gme: return "gme";
  }
  return "?";
}

std::string_view to_string(Frame frame) { return frame == Frame::lab ? "lab" : "polaron"; }

std::string_view to_string(Part part) {
  switch (part) {
    case Part::hamiltonian: return "hamiltonian";
    case Part::optical_bath: return "optical_bath";
    case Part::mechanical_bath: return "mechanical_bath";
    case Part::dephasing: return "dephasing";
  }
  return "?";
}

namespace {

void check_channels(const std::vector<JumpChannel>& channels, int dim) {
  for (const auto& ch : channels) {
    if (!std::isfinite(ch.rate) || ch.rate < 0.0) {
      throw InvalidParameters("channel '" + ch.origin + "' has a negative or non-finite rate");
    }
    if (ch.op.rows() != dim || ch.op.cols() != dim) {
      throw InvalidDimension("channel '" + ch.origin + "' does not act on the joint space");
    }
  }
}

SparseOperator pruned(const SparseOperator& m) {
  SparseOperator s = m.pruned();
  s.makeCompressed();
  return s;
}

// D†[o](X) = o† X o - ½{o†o, X}
template <typename Op>
Op dissipator_adjoint(const Op& o, const Op& x) {
  using Real = typename Op::Scalar::value_type;
  const Op od = o.adjoint();
  const Op odo = od * o;
  return Op(od * x * o) - Real(0.5) * Op(odo * x + x * odo);
}

template <typename Scalar>
typename BasicAssembler<Scalar>::Operator as_scalar(const SparseOperator& op) {
  if constexpr (std::is_same_v<Scalar, Complex>) {
    return op;
  } else {
    return op.cast<Scalar>();
  }
}

}  // namespace

Generator::Generator(const SystemDims& dims, Model model, Frame frame, int sidebands,
                     const ComplexMatrix& hamiltonian, std::vector<JumpChannel> optical,
                     std::vector<JumpChannel> mechanical, std::vector<JumpChannel> dephasing)
    : dims_(dims),
      model_(model),
      frame_(frame),
      sidebands_(sidebands),
      hamiltonian_(hamiltonian),
      hamiltonian_sparse_(to_sparse(hamiltonian)),
      optical_(std::move(optical)),
      mechanical_(std::move(mechanical)),
      dephasing_(std::move(dephasing)) {
  dims_.validate();
  const int d = dims_.joint();
  if (hamiltonian_.rows() != d || hamiltonian_.cols() != d) {
    throw InvalidDimension("hamiltonian does not act on the joint space");
  }
  if (model_ == Model::gme && frame_ != Frame::polaron) {
    throw FrameError("the global master equation lives in the polaron frame");
  }
  if (model_ != Model::gme && frame_ != Frame::lab) {
    throw FrameError("SME and DSME live in the lab frame");
  }
  check_channels(optical_, d);
  check_channels(mechanical_, d);
  check_channels(dephasing_, d);
}

const std::vector<JumpChannel>& Generator::channels(Part part) const {
  switch (part) {
    case Part::optical_bath: return optical_;
    case Part::mechanical_bath: return mechanical_;
    case Part::dephasing: return dephasing_;
    case Part::hamiltonian: break;
  }
  return kNoChannels;
}

template <typename Scalar>
void Generator::add_part(BasicAssembler<Scalar>& assembler, Part part) const {
  if (part == Part::hamiltonian) {
    assembler.add_commutator(as_scalar<Scalar>(hamiltonian_sparse_));
    return;
  }
  for (const auto& ch : channels(part)) assembler.add_dissipator(as_scalar<Scalar>(ch.op), ch.rate);
}

Superoperator Generator::superoperator(Part part) const {
  return superoperator(part, CoherenceSector::full(dims_));
}

Superoperator Generator::superoperator(Part part, const CoherenceSector& sector) const {
  SuperoperatorAssembler assembler(sector);
  add_part(assembler, part);
  return assembler.finish();
}

Superoperator Generator::total() const { return total(CoherenceSector::full(dims_)); }

Superoperator Generator::total(const CoherenceSector& sector) const {
  SuperoperatorAssembler assembler(sector);
  for (Part part : {Part::hamiltonian, Part::optical_bath, Part::mechanical_bath, Part::dephasing}) {
    add_part(assembler, part);
  }
  for (const auto& ch : untracked_) assembler.add_dissipator(ch.op, ch.rate);
  return assembler.finish();
}

ExtendedSuperoperator Generator::total_extended(const CoherenceSector& sector) const {
  ExtendedAssembler assembler(sector);
  for (Part part : {Part::hamiltonian, Part::optical_bath, Part::mechanical_bath, Part::dephasing}) {
    add_part(assembler, part);
  }
  for (const auto& ch : untracked_) assembler.add_dissipator(ch.op.cast<LongComplex>(), ch.rate);
  return assembler.finish();
}

ComplexMatrix Generator::apply(Part part, const ComplexMatrix& rho) const {
  if (part == Part::hamiltonian) {
    return Complex(0.0, -1.0) * (hamiltonian_sparse_ * rho - rho * hamiltonian_sparse_);
  }
  ComplexMatrix out = ComplexMatrix::Zero(rho.rows(), rho.cols());
  for (const auto& ch : channels(part)) {
    if (ch.rate == 0.0) continue;
    const SparseOperator od = ch.op.adjoint();
    const SparseOperator odo = od * ch.op;
    const ComplexMatrix o_rho = ch.op * rho;
    out += ch.rate * (ComplexMatrix(o_rho * od) - 0.5 * (odo * rho) - 0.5 * (rho * odo));
  }
  return out;
}

ComplexMatrix Generator::apply_total(const ComplexMatrix& rho) const {
  ComplexMatrix out = apply(Part::hamiltonian, rho) + apply(Part::optical_bath, rho) +
                      apply(Part::mechanical_bath, rho) + apply(Part::dephasing, rho);
  for (const auto& ch : untracked_) {
    const SparseOperator od = ch.op.adjoint();
    const SparseOperator odo = od * ch.op;
    const ComplexMatrix o_rho = ch.op * rho;
    out += ch.rate * (ComplexMatrix(o_rho * od) - 0.5 * (odo * rho) - 0.5 * (rho * odo));
  }
  return out;
}

SparseOperator Generator::adjoint_apply(Part part, const SparseOperator& x) const {
  if (part == Part::hamiltonian) {
    return Complex(0.0, 1.0) * SparseOperator(hamiltonian_sparse_ * x - x * hamiltonian_sparse_);
  }
  SparseOperator out(x.rows(), x.cols());
  for (const auto& ch : channels(part)) {
    if (ch.rate == 0.0) continue;
    out += ch.rate * dissipator_adjoint(ch.op, x);
  }
  return out;
}

ExtendedOperator Generator::adjoint_apply_extended(Part part, const ExtendedOperator& x) const {
  if (part == Part::hamiltonian) {
    const ExtendedOperator h = hamiltonian_sparse_.cast<LongComplex>();
    return LongComplex(0, 1) * ExtendedOperator(h * x - x * h);
  }
  ExtendedOperator out(x.rows(), x.cols());
  for (const auto& ch : channels(part)) {
    if (ch.rate == 0.0) continue;
    out += static_cast<long double>(ch.rate) *
           dissipator_adjoint(ExtendedOperator(ch.op.cast<LongComplex>()), x);
  }
  return out;
}

Generator Generator::with_untracked_channel(JumpChannel channel) const {
  check_channels({channel}, dims_.joint());
  Generator copy = *this;
  copy.untracked_.push_back(std::move(channel));
  return copy;
}

std::vector<JumpChannel> sideband_channels(const PhysicalParams& params, const SystemDims& dims,
                                           int order_max) {
  if (order_max < 1 || order_max > 4) {
    throw UnsupportedOrder("sideband order must be in 1..4, got " + std::to_string(order_max));
  }
  if (1.0 - order_max * params.omega_m <= 0.0) {
    throw SidebandFrequencyError("red sideband at omega_c - " + std::to_string(order_max) +
                                 " omega_m is not a positive frequency");
  }
  dims.validate();
  const SparseOperator a = to_sparse(optical(annihilation(dims.n_c), dims));
  const SparseOperator b = to_sparse(mechanical(annihilation(dims.n_m), dims));
  const SparseOperator bd = b.adjoint();
  const double alpha = params.alpha();

  std::vector<JumpChannel> out;
  for (int order = 1; order <= order_max; ++order) {
    const double weight = std::pow(alpha, order);
    for (unsigned mask = 0; mask < (1u << order); ++mask) {
      SparseOperator word = to_sparse(identity(dims.joint()));
      std::string letters;
      int annihilators = 0;
      for (int pos = order - 1; pos >= 0; --pos) {
        const bool create = (mask >> pos) & 1u;
        word = SparseOperator(word * (create ? bd : b));
        letters += create ? " b+" : " b";
        annihilators += create ? 0 : 1;
      }
      const int creators = order - annihilators;
      const double shift = 1.0 + (annihilators - creators) * params.omega_m;
      const std::string tag = "optical order " + std::to_string(order) + " word" + letters;
      out.push_back({pruned(a * word),
                     weight * spectral_g(params.kappa_c, shift, params.T_c, params.omega_c_phys),
                     shift, tag + " emission"});
      out.push_back({pruned(SparseOperator(a * word).adjoint()),
                     weight * spectral_g(params.kappa_c, -shift, params.T_c, params.omega_c_phys),
                     -shift, tag + " absorption"});
    }
  }
  return out;
}

namespace {

std::vector<JumpChannel> local_optical(const PhysicalParams& p, const SystemDims& dims) {
  const SparseOperator a = to_sparse(optical(annihilation(dims.n_c), dims));
  return {
      {a, spectral_g(p.kappa_c, 1.0, p.T_c, p.omega_c_phys), 1.0, "optical emission a"},
      {pruned(a.adjoint()), spectral_g(p.kappa_c, -1.0, p.T_c, p.omega_c_phys), -1.0,
       "optical absorption a+"},
  };
}

// G_m(±ω_m) D[b - α n_c], D[b† - α n_c]; α = 0 gives the local SME channels.
std::vector<JumpChannel> mechanical_channels(const PhysicalParams& p, const SystemDims& dims,
                                             double alpha) {
  const SparseOperator b = to_sparse(mechanical(annihilation(dims.n_m), dims));
  const SparseOperator n_c = to_sparse(optical(number_operator(dims.n_c), dims));
  const SparseOperator shift = alpha * n_c;
  return {
      {pruned(b - shift), spectral_g(p.kappa_m, p.omega_m, p.T_m, p.omega_c_phys), p.omega_m,
       alpha == 0.0 ? "mechanical emission b" : "mechanical emission b - alpha n_c"},
      {pruned(SparseOperator(b.adjoint()) - shift),
       spectral_g(p.kappa_m, -p.omega_m, p.T_m, p.omega_c_phys), -p.omega_m,
       alpha == 0.0 ? "mechanical absorption b+" : "mechanical absorption b+ - alpha n_c"},
  };
}

std::vector<JumpChannel> dephasing_channel(const SystemDims& dims, double rate) {
  return {{to_sparse(optical(number_operator(dims.n_c), dims)), rate, 0.0, "photon dephasing n_c"}};
}

}  // namespace

Generator build_sme(const PhysicalParams& params, const SystemDims& dims) {
  params.validate();
  dims.validate();
  return Generator(dims, Model::sme, Frame::lab, 0, hamiltonian(params, dims),
                   local_optical(params, dims), mechanical_channels(params, dims, 0.0), {});
}

Generator build_dsme(const PhysicalParams& params, const SystemDims& dims) {
  params.validate();
  dims.validate();
  const double alpha = params.alpha();
  const double dephasing = 4.0 * params.kappa_m *
                           reduced_temperature(params.T_m, params.omega_c_phys) / params.omega_m *
                           alpha * alpha;
  return Generator(dims, Model::dsme, Frame::lab, 0, hamiltonian(params, dims),
                   local_optical(params, dims), mechanical_channels(params, dims, alpha),
                   dephasing_channel(dims, dephasing));
}

Generator build_gme(const PhysicalParams& params, const SystemDims& dims, int sidebands) {
  params.validate();
  dims.validate();
  if (sidebands < 2 || sidebands > 8 || sidebands % 2 != 0) {
    throw UnsupportedOrder("GME sidebands must be one of 2, 4, 6, 8; got " +
                           std::to_string(sidebands));
  }
  const double alpha = params.alpha();
  std::vector<JumpChannel> optical_part = local_optical(params, dims);
  for (auto& ch : sideband_channels(params, dims, sidebands / 2)) {
    optical_part.push_back(std::move(ch));
  }
  return Generator(dims, Model::gme, Frame::polaron, sidebands, polaron_hamiltonian(params, dims),
                   std::move(optical_part), mechanical_channels(params, dims, alpha),
                   dephasing_channel(dims, spectral_density_zero(params) * alpha * alpha));
}

Generator build_generator(const PhysicalParams& params, const SystemDims& dims, Model model,
                          int sidebands) {
  switch (model) {
    case Model::sme: return build_sme(params, dims);
    case Model::dsme: return build_dsme(params, dims);
    case Model::gme: return build_gme(params, dims, sidebands);
  }
  throw InvalidParameters("unknown model");
}

}  // namespace omheat
