#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "vqge/density.hpp"
#include "vqge/statevector.hpp"

namespace vqge {

/// Counts keyed by basis-state index. Keys render as bitstrings with qubit
/// n-1 first (most significant digit leftmost).
using IndexCounts = std::unordered_map<std::uint64_t, std::uint64_t>;
using Counts = std::map<std::string, std::uint64_t>;

std::string format_bitstring(std::uint64_t index, std::size_t n_qubits);

/// Born-rule probabilities (renormalized |amp|^2, resp. clipped diagonal).
std::vector<double> probabilities(const StateVector& s);
std::vector<double> probabilities(const DensityMatrix& rho);

/// shots i.i.d. draws from a distribution; identical (seed, stream) pairs
/// reproduce identical counts.
IndexCounts sample_distribution(const std::vector<double>& probs, std::uint64_t shots,
                                std::uint64_t seed, std::uint64_t stream = 0);

Counts sample(const StateVector& s, std::uint64_t shots, std::uint64_t seed,
              std::uint64_t stream = 0);
Counts sample(const DensityMatrix& rho, std::uint64_t shots, std::uint64_t seed,
              std::uint64_t stream = 0);

/// Register value carried by a global basis index.
std::uint64_t register_value(std::uint64_t index, const Register& reg);

struct Postselection {
  bool defined = false;   // false when the outcome has zero probability
  double probability = 0.0;
  StateVector state;      // renormalized conditional state on all qubits
};

Postselection postselect_probability(const StateVector& s, const Register& reg,
                                     std::uint64_t value);
/// Bitstring overload; value_bits is MSB-first and must match reg.size.
Postselection postselect_probability(const StateVector& s, const Register& reg,
                                     const std::string& value_bits);

}  // namespace vqge
