// Copyright 2026 The sscaug Authors
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

// Numerical cross-check of the graph-theoretic bounds: for any positive edge
// weighting w, the rank of [B, (-L_w)B, ..., (-L_w)^{n-1}B] is at least the
// dimension of the strong structurally controllable subspace, which in turn
// is at least both the zero-forcing and the PMI bound.

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sscaug/errors.hpp"
#include "sscaug/graph.hpp"
#include "sscaug/leaders.hpp"
#include "sscaug/rng.hpp"

namespace sscaug {

/// L_w = Deg - A_w with A_w(u, v) = w(u, v) for each edge (u, v).
class WeightedLaplacian {
 public:
  /// `weights[i]` belongs to g.edges()[i] and must be positive.
  WeightedLaplacian(const DiGraph& g, std::span<const double> weights)
      : matrix_(Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(g.num_nodes()),
                                      static_cast<Eigen::Index>(g.num_nodes()))) {
    if (weights.size() != g.num_edges()) throw std::invalid_argument("WeightedLaplacian: one weight per edge required");
    for (std::size_t i = 0; i < weights.size(); ++i) {
      if (!(weights[i] > 0.0)) throw std::invalid_argument("WeightedLaplacian: weights must be positive");
      const auto [u, v] = g.edges()[i];
      matrix_(u, v) -= weights[i];
      matrix_(u, u) += weights[i];
    }
  }

  static WeightedLaplacian unit(const DiGraph& g) {
    const std::vector<double> ones(g.num_edges(), 1.0);
    return WeightedLaplacian(g, ones);
  }

  std::size_t size() const { return static_cast<std::size_t>(matrix_.rows()); }
  const Eigen::MatrixXd& matrix() const { return matrix_; }

 private:
  Eigen::MatrixXd matrix_;
};

/// n x m selector: column j has a single 1 at row leaders[j].
class InputMatrix {
 public:
  InputMatrix(std::size_t n, const LeaderSet& leaders)
      : matrix_(Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(leaders.size()))) {
    for (std::size_t j = 0; j < leaders.size(); ++j) {
      if (leaders[j] >= n) throw std::invalid_argument("InputMatrix: leader out of range");
      matrix_(leaders[j], static_cast<Eigen::Index>(j)) = 1.0;
    }
  }

  const Eigen::MatrixXd& matrix() const { return matrix_; }

 private:
  Eigen::MatrixXd matrix_;
};

inline constexpr double kDefaultRankTolerance = 1e-8;

/// dim span{B, (-L)B, ..., (-L)^{n-1}B} for raw matrices.
///
/// Block Krylov with Gram-Schmidt (two passes per vector): each new block is
/// -L applied to the directions admitted by the previous block. A direction
/// is admitted when its residual after projection exceeds `tol` times the
/// largest column norm of its block.
inline std::size_t controllability_dimension(const Eigen::MatrixXd& laplacian, const Eigen::MatrixXd& input,
                                             double tol = kDefaultRankTolerance) {
  if (!(tol > 0.0)) throw std::invalid_argument("controllability_dimension: tolerance must be positive");
  if (laplacian.rows() != laplacian.cols() || input.rows() != laplacian.rows()) {
    throw std::invalid_argument("controllability_dimension: dimension mismatch");
  }
  const Eigen::Index n = laplacian.rows();
  Eigen::MatrixXd basis(n, n);
  Eigen::Index rank = 0;
  Eigen::MatrixXd block = input;
  while (block.cols() > 0 && rank < n) {
    double block_norm = 0.0;
    for (Eigen::Index c = 0; c < block.cols(); ++c) block_norm = std::max(block_norm, block.col(c).norm());
    if (block_norm == 0.0) break;
    const Eigen::Index first_new = rank;
    for (Eigen::Index c = 0; c < block.cols() && rank < n; ++c) {
      Eigen::VectorXd r = block.col(c);
      for (int pass = 0; pass < 2; ++pass) {
        const auto q = basis.leftCols(rank);
        r -= q * (q.transpose() * r);
      }
      const double norm = r.norm();
      if (norm > tol * block_norm) basis.col(rank++) = r / norm;
    }
    block = -laplacian * basis.middleCols(first_new, rank - first_new);
  }
  return static_cast<std::size_t>(rank);
}

inline std::size_t controllability_dimension(const WeightedLaplacian& laplacian, const InputMatrix& input,
                                             double tol = kDefaultRankTolerance) {
  return controllability_dimension(laplacian.matrix(), input.matrix(), tol);
}

struct RankViolation {
  std::size_t sample = 0;
  std::size_t rank = 0;
  std::size_t bound = 0;
};

struct RankReport {
  std::vector<std::size_t> sampled_ranks;
  std::size_t zf_bound = 0;
  std::size_t pmi_bound = 0;
  double tolerance = kDefaultRankTolerance;
  std::vector<RankViolation> violations;

  bool ok() const { return violations.empty(); }
};

inline constexpr std::size_t kDefaultOracleNodeCap = 30;

/// Edge weights for sample `index`: i.i.d. uniform on [0.5, 1.5] in edge order.
inline std::vector<double> sample_weights(const DiGraph& g, std::uint64_t seed, std::size_t index) {
  Rng rng(derive_seed(seed, index));
  std::vector<double> w(g.num_edges());
  for (double& x : w) x = rng.uniform(0.5, 1.5);
  return w;
}

/// Draws `samples` random weightings and checks that every controllability
/// rank dominates both bounds. A violation means one of the bound
/// computations is wrong.
inline RankReport sample_and_validate(const DiGraph& g, const LeaderSet& leaders, std::size_t zf, std::size_t pmi,
                                      std::size_t samples, std::uint64_t seed, double tol = kDefaultRankTolerance,
                                      std::size_t node_cap = kDefaultOracleNodeCap) {
  if (samples == 0) throw std::invalid_argument("sample_and_validate: need at least one sample");
  if (g.num_nodes() > node_cap) {
    throw SizeError("sample_and_validate: " + std::to_string(g.num_nodes()) + " nodes exceed the cap of " +
                    std::to_string(node_cap));
  }
  leaders.check_against(g);
  RankReport report;
  report.zf_bound = zf;
  report.pmi_bound = pmi;
  report.tolerance = tol;
  const InputMatrix input(g.num_nodes(), leaders);
  const std::size_t bound = std::max(zf, pmi);
  for (std::size_t s = 0; s < samples; ++s) {
    const auto w = sample_weights(g, seed, s);
    const std::size_t rank = controllability_dimension(WeightedLaplacian(g, w), input, tol);
    report.sampled_ranks.push_back(rank);
    if (rank < bound) report.violations.push_back({s, rank, bound});
  }
  return report;
}

}  // namespace sscaug
