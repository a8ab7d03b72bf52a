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

#ifndef OAMIC_CHANNELS_HPP
#define OAMIC_CHANNELS_HPP

#include <vector>

#include "oamic/linalg.hpp"

namespace oamic {

/// Crossover probabilities p_0..p_l; p_k applies to both +k and -k.
struct SpilloverSpec {
  std::vector<double> probs;

  int max_spill() const noexcept { return int(probs.size()) - 1; }
  double prob(int k) const { return probs.at(std::size_t(k < 0 ? -k : k)); }
};

inline constexpr double kSpecSumTolerance = 1e-12;
inline constexpr double kCompletenessTolerance = 1e-10;

/// Throws ChannelSpecError unless every p_k >= 0 and p_0 + 2 sum p_k = 1.
void validate_spec(const SpilloverSpec& spec);

/// A set of Kraus operators mapping `input_support` into `output_basis`.
/// `shifts[i]` is the signed mode shift applied by `operators[i]` (for flip
/// channels, the shift residue mod N).
struct KrausChannel {
  std::vector<ComplexMatrix> operators;
  std::vector<int> shifts;
  ModeBasis input_support;
  ModeBasis output_basis;

  Index output_dim() const noexcept { return output_basis.size(); }
  /// max-norm of sum K^dag K - 1 on the input support.
  double completeness_defect() const;
};

/// The unweighted spillover map sum_n |n + shift><n| from `in` into `out`.
/// Labels that land outside `out` are dropped.
ComplexMatrix spillover_operator(const ModeBasis& in, const ModeBasis& out, int shift);

/// Idealised crosstalk channel on modes l_min..l_max: E_0 = sqrt(p_0) 1 and
/// E_{+-k} = sqrt(p_k) sum_n |n +- k><n|, output modes l_min-l..l_max+l.
KrausChannel build_ic_channel(int l_min, int l_max, const SpilloverSpec& spec);

/// Generalised flip channel sqrt(p_0) 1, sqrt(p_r) X^r, sqrt(p_r) X^{-r} in
/// dimension N (indices 0..N-1). Operators with the same shift mod N are
/// merged so completeness survives wraparound (e.g. N = 2).
KrausChannel build_flip_channel(Index dim, const SpilloverSpec& spec);

/// sum_K K rho K^dag. Basis labels of `rho` outside the channel's input
/// support must carry no weight.
DensityMatrix apply_channel(const KrausChannel& channel, const DensityMatrix& rho);

/// Places rho as a block at `offset` inside an N-dimensional zero matrix.
DensityMatrix embed_state(const DensityMatrix& rho, Index dim, Index offset);

/// Inverse of `embed_state`: the size x size block at `offset`, relabelled
/// with `basis`. Fails with TraceNotOne if weight lies outside the block.
DensityMatrix restrict_state(const DensityMatrix& rho, Index offset, Index size,
                             ModeBasis basis);
DensityMatrix restrict_state(const DensityMatrix& rho, Index offset, Index size);

/// Smallest flip-channel dimension that both holds the output of an M-mode
/// state with spill l and keeps X^{M-1} from being its own inverse.
Index retrieval_dimension(Index modes, Index spill);

/// p_0 + sum_r p_r (omega^{r s} + omega^{-r s}): the factor a flip channel
/// multiplies <Z^s> and <X^m Z^s> by.
Complex flip_phase_factor(const SpilloverSpec& spec, Index dim, Index s);

}  // namespace oamic

#endif  // OAMIC_CHANNELS_HPP
