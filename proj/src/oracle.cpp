#include "entroute/oracle.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace entroute::oracle {
namespace {

using Complex = std::complex<double>;

int qubit_count(const DensityMatrix& rho) {
  const Eigen::Index dim = rho.rows();
  if (dim < 2 || rho.cols() != dim || (dim & (dim - 1)) != 0) {
    throw std::invalid_argument("density matrix dimension must be a power of two");
  }
  int qubits = 0;
  for (Eigen::Index d = dim; d > 1; d >>= 1) {
    ++qubits;
  }
  if (qubits > kMaxQubits) {
    throw std::invalid_argument("density matrix exceeds the qubit cap");
  }
  return qubits;
}

Eigen::Matrix2cd pauli_x() {
  Eigen::Matrix2cd m;
  m << 0, 1, 1, 0;
  return m;
}

Eigen::Matrix2cd pauli_y() {
  Eigen::Matrix2cd m;
  m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  return m;
}

Eigen::Matrix2cd pauli_z() {
  Eigen::Matrix2cd m;
  m << 1, 0, 0, -1;
  return m;
}

// Single-qubit operator embedded at `qubit` (qubit 0 is the most
// significant bit of the basis index).
DensityMatrix embed(int qubits, int qubit, const Eigen::Matrix2cd& op) {
  const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
  DensityMatrix out = DensityMatrix::Identity(1, 1);
  for (int q = 0; q < qubits; ++q) {
    const Eigen::Matrix2cd& factor = q == qubit ? op : id;
    DensityMatrix next(out.rows() * 2, out.cols() * 2);
    for (Eigen::Index r = 0; r < out.rows(); ++r) {
      for (Eigen::Index c = 0; c < out.cols(); ++c) {
        next.block(r * 2, c * 2, 2, 2) = out(r, c) * factor;
      }
    }
    out = std::move(next);
  }
  return out;
}

void check_qubit(int qubits, int qubit) {
  if (qubit < 0 || qubit >= qubits) {
    throw std::invalid_argument("qubit index out of range");
  }
}

void check_parameter(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("channel parameter must lie in [0, 1]");
  }
}

} // namespace

DensityMatrix ghz_state(int qubits) {
  if (qubits < 2 || qubits > kMaxQubits) {
    throw std::invalid_argument("GHZ size must lie in [2, 6]");
  }
  const Eigen::Index dim = Eigen::Index(1) << qubits;
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(dim);
  psi(0) = 1.0 / std::sqrt(2.0);
  psi(dim - 1) = 1.0 / std::sqrt(2.0);
  return psi * psi.adjoint();
}

DensityMatrix depolarize(const DensityMatrix& rho, int qubit, double p) {
  const int qubits = qubit_count(rho);
  check_qubit(qubits, qubit);
  check_parameter(p);
  const DensityMatrix x = embed(qubits, qubit, pauli_x());
  const DensityMatrix y = embed(qubits, qubit, pauli_y());
  const DensityMatrix z = embed(qubits, qubit, pauli_z());
  return p * rho +
         (1.0 - p) / 3.0 * (x * rho * x + y * rho * y + z * rho * z);
}

DensityMatrix partial_transpose(const DensityMatrix& rho, int qubit) {
  const int qubits = qubit_count(rho);
  check_qubit(qubits, qubit);
  const Eigen::Index mask = Eigen::Index(1) << (qubits - 1 - qubit);
  DensityMatrix out(rho.rows(), rho.cols());
  for (Eigen::Index r = 0; r < rho.rows(); ++r) {
    for (Eigen::Index c = 0; c < rho.cols(); ++c) {
      const Eigen::Index rs = (r & ~mask) | (c & mask);
      const Eigen::Index cs = (c & ~mask) | (r & mask);
      out(r, c) = rho(rs, cs);
    }
  }
  return out;
}

DensityMatrix depolarize_alt(const DensityMatrix& rho, int qubit, double p) {
  const int qubits = qubit_count(rho);
  check_qubit(qubits, qubit);
  check_parameter(p);
  const DensityMatrix y = embed(qubits, qubit, pauli_y());
  return (1.0 + 2.0 * p) / 3.0 * rho +
         2.0 * (1.0 - p) / 3.0 * partial_transpose(y * rho * y, qubit);
}

double fidelity(const DensityMatrix& rho, const DensityMatrix& pure_target) {
  if (rho.rows() != pure_target.rows() || rho.cols() != pure_target.cols()) {
    throw std::invalid_argument("state and target dimensions differ");
  }
  qubit_count(pure_target);
  if (std::abs(pure_target.trace().real() - 1.0) > 1e-10 ||
      std::abs(pure_target.trace().imag()) > 1e-10 ||
      (pure_target * pure_target - pure_target).norm() > 1e-10) {
    throw std::invalid_argument("target is not a rank-1 projector");
  }
  return (rho * pure_target).trace().real();
}

double star_oracle(std::span<const double> branch_fidelities) {
  const int qubits = static_cast<int>(branch_fidelities.size());
  DensityMatrix rho = ghz_state(qubits);
  for (int q = 0; q < qubits; ++q) {
    rho = depolarize(rho, q, branch_fidelities[q]);
  }
  return fidelity(rho, ghz_state(qubits));
}

double tree_oracle(std::span<const double> terminal_fidelities,
                   std::span<const double> steiner_fidelities, int initial_qubit) {
  const int qubits = static_cast<int>(terminal_fidelities.size()) + 1;
  if (qubits < 2) {
    throw std::invalid_argument("tree oracle needs at least one non-initial terminal");
  }
  check_qubit(qubits, initial_qubit);
  DensityMatrix rho = ghz_state(qubits);
  int q = 0;
  for (double F : terminal_fidelities) {
    if (q == initial_qubit) {
      ++q; // the initial terminal has no branch of its own
    }
    rho = depolarize(rho, q, F);
    ++q;
  }
  for (double F : steiner_fidelities) {
    rho = depolarize(rho, initial_qubit, F);
  }
  return fidelity(rho, ghz_state(qubits));
}

} // namespace entroute::oracle
