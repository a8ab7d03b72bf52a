// Copyright 2026 The oamic Authors
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

#include "oamic/channels.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace oamic {

void validate_spec(const SpilloverSpec& spec) {
  if (spec.probs.empty()) throw Error(ErrorKind::ChannelSpecError, "no probabilities given");
  double total = spec.probs[0];
  for (std::size_t k = 0; k < spec.probs.size(); ++k) {
    const double p = spec.probs[k];
    if (!std::isfinite(p) || p < 0.0) {
      throw Error(ErrorKind::ChannelSpecError, "p_" + std::to_string(k) + " must be >= 0", p);
    }
    if (k > 0) total += 2.0 * p;
  }
  if (std::abs(total - 1.0) > kSpecSumTolerance) {
    throw Error(ErrorKind::ChannelSpecError, "p_0 + 2 sum p_k must equal 1",
                std::abs(total - 1.0));
  }
}

double KrausChannel::completeness_defect() const {
  const Index n = input_support.size();
  ComplexMatrix sum = ComplexMatrix::Zero(n, n);
  for (const auto& k : operators) sum += k.adjoint() * k;
  return max_abs(sum - ComplexMatrix::Identity(n, n));
}

ComplexMatrix spillover_operator(const ModeBasis& in, const ModeBasis& out, int shift) {
  ComplexMatrix op = ComplexMatrix::Zero(out.size(), in.size());
  for (Index j = 0; j < in.size(); ++j) {
    if (auto i = out.position(in[j] + shift)) op(*i, j) = 1.0;
  }
  return op;
}

namespace {

void check_complete(const KrausChannel& ch) {
  const double defect = ch.completeness_defect();
  if (defect > kCompletenessTolerance) {
    throw Error(ErrorKind::ChannelSpecError, "Kraus operators are not complete", defect);
  }
}

}  // namespace

KrausChannel build_ic_channel(int l_min, int l_max, const SpilloverSpec& spec) {
  validate_spec(spec);
  if (l_max < l_min) throw Error(ErrorKind::ChannelSpecError, "l_max must be >= l_min");
  const int l = spec.max_spill();

  KrausChannel ch;
  ch.input_support = ModeBasis::range(l_min, l_max);
  ch.output_basis = ModeBasis::range(l_min - l, l_max + l);
  for (int shift = -l; shift <= l; ++shift) {
    const double p = spec.prob(shift);
    if (p == 0.0) continue;
    ch.operators.push_back(std::sqrt(p) *
                           spillover_operator(ch.input_support, ch.output_basis, shift));
    ch.shifts.push_back(shift);
  }
  check_complete(ch);
  return ch;
}

KrausChannel build_flip_channel(Index dim, const SpilloverSpec& spec) {
  validate_spec(spec);
  if (dim < 2) throw Error(ErrorKind::InvalidDimension, "flip channel needs dimension >= 2");

  // weight per shift residue; +r and -r (or r and 0) may coincide mod N
  std::vector<double> weight(std::size_t(dim), 0.0);
  const int l = spec.max_spill();
  for (int shift = -l; shift <= l; ++shift) {
    Index r = Index(shift) % dim;
    if (r < 0) r += dim;
    weight[std::size_t(r)] += spec.prob(shift);
  }

  KrausChannel ch;
  ch.input_support = ModeBasis::indices(dim);
  ch.output_basis = ch.input_support;
  for (Index r = 0; r < dim; ++r) {
    const double w = weight[std::size_t(r)];
    if (w == 0.0) continue;
    ch.operators.push_back(std::sqrt(w) * shift_matrix(dim, r));
    ch.shifts.push_back(int(r));
  }
  check_complete(ch);
  return ch;
}

DensityMatrix apply_channel(const KrausChannel& channel, const DensityMatrix& rho) {
  const Index n_in = channel.input_support.size();
  const ComplexMatrix& src = rho.matrix();

  // scatter rho onto the input support; any weight elsewhere is a shape error
  std::vector<Index> target(std::size_t(rho.dim()), -1);
  for (Index i = 0; i < rho.dim(); ++i) {
    if (auto pos = channel.input_support.position(rho.basis()[i])) {
      target[std::size_t(i)] = *pos;
    } else {
      const double stray = std::max(max_abs(src.row(i)), max_abs(src.col(i)));
      if (stray > 1e-12) {
        throw Error(ErrorKind::ShapeError,
                    "state has weight on mode " + std::to_string(rho.basis()[i]) +
                        " outside the channel input support",
                    stray);
      }
    }
  }
  ComplexMatrix in = ComplexMatrix::Zero(n_in, n_in);
  for (Index i = 0; i < rho.dim(); ++i) {
    if (target[std::size_t(i)] < 0) continue;
    for (Index j = 0; j < rho.dim(); ++j) {
      if (target[std::size_t(j)] < 0) continue;
      in(target[std::size_t(i)], target[std::size_t(j)]) = src(i, j);
    }
  }

  const Index n_out = channel.output_dim();
  ComplexMatrix out = ComplexMatrix::Zero(n_out, n_out);
  for (const auto& k : channel.operators) out.noalias() += k * in * k.adjoint();
  return validate_density(std::move(out), channel.output_basis);
}

DensityMatrix embed_state(const DensityMatrix& rho, Index dim, Index offset) {
  if (offset < 0 || dim < rho.dim() + offset) {
    throw Error(ErrorKind::ShapeError, "embedding does not fit in target dimension");
  }
  ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
  out.block(offset, offset, rho.dim(), rho.dim()) = rho.matrix();
  return validate_density(std::move(out), ModeBasis::indices(dim));
}

DensityMatrix restrict_state(const DensityMatrix& rho, Index offset, Index size,
                             ModeBasis basis) {
  if (offset < 0 || size < 1 || offset + size > rho.dim()) {
    throw Error(ErrorKind::ShapeError, "block lies outside the state");
  }
  return validate_density(rho.matrix().block(offset, offset, size, size), std::move(basis));
}

DensityMatrix restrict_state(const DensityMatrix& rho, Index offset, Index size) {
  return restrict_state(rho, offset, size, ModeBasis::indices(size));
}

Index retrieval_dimension(Index modes, Index spill) {
  return std::max(2 * modes - 1, modes + 2 * spill);
}

Complex flip_phase_factor(const SpilloverSpec& spec, Index dim, Index s) {
  Complex f = spec.probs.at(0);
  for (int r = 1; r <= spec.max_spill(); ++r) {
    f += spec.prob(r) * (root_of_unity(dim, r * s) + root_of_unity(dim, -r * s));
  }
  return f;
}

}  // namespace oamic
