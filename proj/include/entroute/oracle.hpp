#pragma once

#include <span>

#include <Eigen/Dense>

namespace entroute::oracle {

using DensityMatrix = Eigen::MatrixXcd;

/// Hard cap on simulated qubits; the simulator exists for verification,
/// not scale.
inline constexpr int kMaxQubits = 6;

DensityMatrix ghz_state(int qubits);

/// Per-qubit depolarizing channel with survival parameter p.
DensityMatrix depolarize(const DensityMatrix& rho, int qubit, double p);

/// The same channel written through a partial transposition; used as a
/// cross-check of the direct form.
DensityMatrix depolarize_alt(const DensityMatrix& rho, int qubit, double p);

DensityMatrix partial_transpose(const DensityMatrix& rho, int qubit);

/// Overlap of rho with a pure target state (rank-1 projector).
double fidelity(const DensityMatrix& rho, const DensityMatrix& pure_target);

/// GHZ fidelity after one depolarizing channel per branch.
double star_oracle(std::span<const double> branch_fidelities);

/// GHZ fidelity for the tree scheme: one channel per non-initial terminal
/// with that branch's fidelity, plus one channel on the initial terminal's
/// qubit per expansion branch. `initial_qubit` selects which qubit hosts
/// the initial terminal.
double tree_oracle(std::span<const double> terminal_fidelities,
                   std::span<const double> steiner_fidelities, int initial_qubit = 0);

} // namespace entroute::oracle
