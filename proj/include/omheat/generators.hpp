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

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "omheat/fock_algebra.hpp"
#include "omheat/model_params.hpp"
#include "omheat/superoperator.hpp"

namespace omheat {

enum class Model { sme, dsme, gme };
enum class Frame { lab, polaron };
enum class Part { hamiltonian, optical_bath, mechanical_bath, dephasing };

std::string_view to_string(Model model);
std::string_view to_string(Frame frame);
std::string_view to_string(Part part);

/// One Lindblad channel rate · D[op].
struct JumpChannel {
  SparseOperator op;
  double rate = 0.0;
  /// Bohr frequency whose bath spectrum sets the rate (0 for dephasing).
  double frequency_label = 0.0;
  std::string origin;
};

/// A master-equation generator split into the Hamiltonian part and one labeled
/// dissipator per bath, so each bath's heat current can be evaluated on its own.
/// Immutable once built.
class Generator {
 public:
  Generator(const SystemDims& dims, Model model, Frame frame, int sidebands,
            const ComplexMatrix& hamiltonian, std::vector<JumpChannel> optical,
            std::vector<JumpChannel> mechanical, std::vector<JumpChannel> dephasing);

  const SystemDims& dims() const { return dims_; }
  Model model() const { return model_; }
  Frame frame() const { return frame_; }
  int sidebands() const { return sidebands_; }
  /// H for the lab frame, H̃ for the polaron frame.
  const ComplexMatrix& hamiltonian() const { return hamiltonian_; }
  const SparseOperator& hamiltonian_sparse() const { return hamiltonian_sparse_; }

  /// Channels of a dissipative part; empty for Part::hamiltonian.
  const std::vector<JumpChannel>& channels(Part part) const;
  /// Channels that enter the total but belong to no labeled part. Only the
  /// corruption hook below creates these.
  const std::vector<JumpChannel>& untracked_channels() const { return untracked_; }

  Superoperator superoperator(Part part) const;
  Superoperator superoperator(Part part, const CoherenceSector& sector) const;
  Superoperator total() const;
  Superoperator total(const CoherenceSector& sector) const;
  /// The same generator assembled in long double arithmetic.
  ExtendedSuperoperator total_extended(const CoherenceSector& sector) const;

  /// Operator-level action of one part, or of the total, on ρ.
  ComplexMatrix apply(Part part, const ComplexMatrix& rho) const;
  ComplexMatrix apply_total(const ComplexMatrix& rho) const;

  /// Heisenberg-picture action L†(X) of one part.
  SparseOperator adjoint_apply(Part part, const SparseOperator& x) const;
  ExtendedOperator adjoint_apply_extended(Part part, const ExtendedOperator& x) const;

  /// Test hook: a copy whose total carries an extra channel that no labeled
  /// part accounts for. Heat bookkeeping then misses an energy flow.
  Generator with_untracked_channel(JumpChannel channel) const;

 private:
  template <typename Scalar>
  void add_part(BasicAssembler<Scalar>& assembler, Part part) const;

  SystemDims dims_;
  Model model_;
  Frame frame_;
  int sidebands_;
  ComplexMatrix hamiltonian_;
  SparseOperator hamiltonian_sparse_;
  std::vector<JumpChannel> optical_;
  std::vector<JumpChannel> mechanical_;
  std::vector<JumpChannel> dephasing_;
  std::vector<JumpChannel> untracked_;
  static const std::vector<JumpChannel> kNoChannels;
};

/// Optical sideband channels of orders 1..order_max. Each ordered word w over
/// {b̃, b̃†} with j annihilators and k creators yields α^(j+k) G_c(ω_c + (j-k)ω_m) D[ã w]
/// and α^(j+k) G_c(-ω_c - (j-k)ω_m) D[ã† w†]. Words are enumerated with b̃
/// before b̃† at each letter, lowest order first.
std::vector<JumpChannel> sideband_channels(const PhysicalParams& params, const SystemDims& dims,
                                           int order_max);

Generator build_sme(const PhysicalParams& params, const SystemDims& dims);
Generator build_dsme(const PhysicalParams& params, const SystemDims& dims);
/// sidebands ∈ {2, 4, 6, 8}; order_max = sidebands / 2.
Generator build_gme(const PhysicalParams& params, const SystemDims& dims, int sidebands);

/// Dispatches on `model`; `sidebands` is ignored unless model == gme.
Generator build_generator(const PhysicalParams& params, const SystemDims& dims, Model model,
                          int sidebands);

}  // namespace omheat
