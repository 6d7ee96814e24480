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

#include <algorithm>
#include <cmath>
#include <deque>
#include <memory>
#include <sstream>


#include "omheat/errors.hpp"
#include "omheat/steady_state.hpp"
#include "sparse_lu.hpp"

namespace omheat {

namespace {


// TR-BDF2 with γ = 2 - √2. Both stages share the matrix I - d h L, d = γ/2.
constexpr double kGamma = 2.0 - 1.41421356237309504880;
constexpr double kD = 0.5 * kGamma;
constexpr double kW1 = 1.0 / (kGamma * (2.0 - kGamma));
constexpr double kW0 = (1.0 - kGamma) * (1.0 - kGamma) / (kGamma * (2.0 - kGamma));

class SectorStepper {
 public:
  explicit SectorStepper(Superoperator liouvillian) : l_(std::move(liouvillian)) {
    identity_.resize(l_.rows(), l_.cols());
    identity_.setIdentity();
  }

  ComplexVector step(const ComplexVector& y, double h) {
    detail::SparseLu& lu = factor(h);
    const ComplexVector y_g = lu.solve(ComplexVector(y + kD * h * (l_ * y)));
    return lu.solve(ComplexVector(kW1 * y_g - kW0 * y));
  }

  const Superoperator& liouvillian() const { return l_; }

 private:
  // The factorization may refer back to the matrix it was computed from, so
  // both live in the cache entry.
  struct Factor {
    double h = 0.0;
    Superoperator matrix;
    detail::SparseLu lu;
  };

  detail::SparseLu& factor(double h) {
    for (auto& entry : cache_) {
      if (entry->h == h) return entry->lu;
    }
    if (cache_.size() >= 8) cache_.pop_front();
    auto f = std::make_unique<Factor>();
    f->h = h;
    f->matrix = identity_ - Complex(kD * h) * l_;
    f->matrix.makeCompressed();
    f->lu.compute(f->matrix);
    if (f->lu.info() != Eigen::Success) {
      throw NumericError("evolve: implicit stage matrix is singular");
    }
    cache_.push_back(std::move(f));
    return cache_.back()->lu;
  }

  Superoperator l_;
  Superoperator identity_;
  std::deque<std::unique_ptr<Factor>> cache_;
};

double error_norm(const ComplexVector& err, const ComplexVector& a, const ComplexVector& b,
                  const IntegratorOptions& opt) {
  double worst = 0.0;
  for (int i = 0; i < err.size(); ++i) {
    const double scale = opt.atol + opt.rtol * std::max(std::abs(a[i]), std::abs(b[i]));
    worst = std::max(worst, std::abs(err[i]) / scale);
  }
  return worst;
}

struct SectorRun {
  std::vector<ComplexVector> samples;
  double max_trace_drift = 0.0;
  std::size_t accepted = 0;
  std::size_t rejected = 0;
};

SectorRun integrate_sector(const CoherenceSector& sector, SectorStepper& stepper, ComplexVector y,
                           std::span<const double> t_grid, const IntegratorOptions& opt) {
  SectorRun run;
  run.samples.push_back(y);

  std::vector<int> diagonal;
  for (int i = 0; i < sector.dims().joint(); ++i) {
    const int k = sector.index_of(i, i);
    if (k >= 0) diagonal.push_back(k);
  }
  auto trace = [&](const ComplexVector& v) {
    Complex s = 0.0;
    for (int k : diagonal) s += v[k];
    return s;
  };

  double l_norm = 0.0;
  {
    Eigen::VectorXd sums = Eigen::VectorXd::Zero(stepper.liouvillian().rows());
    const auto& l = stepper.liouvillian();
    for (int c = 0; c < l.outerSize(); ++c) {
      for (Superoperator::InnerIterator it(l, c); it; ++it) sums[it.row()] += std::abs(it.value());
    }
    l_norm = sums.size() ? sums.maxCoeff() : 0.0;
  }
  // Power-of-two base step so repeated sizes reuse their factorizations.
  double h = std::exp2(std::floor(std::log2(0.05 / std::max(l_norm, 1e-300))));
  int easy_steps = 0;
  double t = 0.0;

  for (std::size_t g = 1; g < t_grid.size(); ++g) {
    const double target = t_grid[g];
    while (t < target) {
      if (run.accepted + run.rejected > opt.max_steps) {
        throw StiffnessError("evolve: step budget exhausted at t = " + std::to_string(t));
      }
      const bool last = t + h >= target;
      const double step = last ? target - t : h;
      const ComplexVector full = stepper.step(y, step);
      const ComplexVector half = stepper.step(stepper.step(y, 0.5 * step), 0.5 * step);
      const ComplexVector diff = (half - full) / 3.0;
      const double err = error_norm(diff, y, half, opt);
      if (!(err <= 1.0)) {
        ++run.rejected;
        easy_steps = 0;
        h = (last ? std::exp2(std::floor(std::log2(step))) : h) * 0.5;
        if (h < opt.h_min * std::max(1.0, std::abs(t))) {
          std::ostringstream msg;
          msg << "evolve: step size underflow at t = " << t << " (h = " << h
              << ", scaled error " << err << ")";
          throw StiffnessError(msg.str());
        }
        continue;
      }
      const ComplexVector next = half + diff;
      run.max_trace_drift = std::max(run.max_trace_drift, std::abs(trace(next) - trace(y)));
      y = next;
      t = last ? target : t + step;
      ++run.accepted;
      if (!last) {
        easy_steps = err < 0.1 ? easy_steps + 1 : 0;
        if (easy_steps >= 2) {
          h *= 2.0;
          easy_steps = 0;
        }
      }
    }
    run.samples.push_back(y);
  }
  return run;
}

}  // namespace

EvolveResult evolve(const Generator& gen, const DensityMatrix& rho0, std::span<const double> t_grid,
                    const IntegratorOptions& options) {
  const SystemDims& dims = gen.dims();
  if (rho0.dim() != dims.joint()) throw InvalidDimension("evolve: initial state has wrong dimension");
  if (rho0.frame != gen.frame()) throw FrameError("evolve: state and generator frames differ");
  if (t_grid.empty() || t_grid.front() != 0.0) throw DomainError("evolve: time grid must start at 0");
  for (std::size_t i = 1; i < t_grid.size(); ++i) {
    if (!(t_grid[i] > t_grid[i - 1])) throw DomainError("evolve: time grid must increase strictly");
  }

  EvolveResult result;
  std::vector<ComplexMatrix> states(t_grid.size(), ComplexMatrix::Zero(dims.joint(), dims.joint()));
  for (int order = -(dims.n_c - 1); order <= dims.n_c - 1; ++order) {
    const CoherenceSector sector = CoherenceSector::photon_order(dims, order);
    const ComplexVector y0 = sector.gather(rho0.rho);
    if (y0.cwiseAbs().maxCoeff() == 0.0) continue;
    SectorStepper stepper(gen.total(sector));
    const SectorRun run = integrate_sector(sector, stepper, y0, t_grid, options);
    for (std::size_t g = 0; g < t_grid.size(); ++g) sector.scatter(run.samples[g], states[g]);
    result.max_trace_drift = std::max(result.max_trace_drift, run.max_trace_drift);
    result.accepted_steps += run.accepted;
    result.rejected_steps += run.rejected;
  }
  result.states.reserve(states.size());
  for (auto& rho : states) result.states.push_back({std::move(rho), gen.frame(), {}});
  return result;
}

}  // namespace omheat
