#include "vqge/sampling.hpp"

#include <algorithm>
#include <cmath>

#include "vqge/rng.hpp"

namespace vqge {

std::string format_bitstring(std::uint64_t index, std::size_t n_qubits) {
  std::string out(n_qubits, '0');
  for (std::size_t q = 0; q < n_qubits; ++q)
    if (index & (std::uint64_t{1} << q)) out[n_qubits - 1 - q] = '1';
  return out;
}

std::vector<double> probabilities(const StateVector& s) {
  std::vector<double> p(s.amplitudes.size());
  double total = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    p[i] = std::norm(s.amplitudes[i]);
    total += p[i];
  }
  if (total <= 0.0) throw DomainError("probabilities: zero-norm state");
  for (double& v : p) v /= total;
  return p;
}

std::vector<double> probabilities(const DensityMatrix& rho) {
  std::vector<double> p(rho.dim());
  double total = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    p[i] = std::max(0.0, rho(i, i).real());  // clip round-off negatives
    total += p[i];
  }
  if (total <= 0.0) throw DomainError("probabilities: zero-trace density matrix");
  for (double& v : p) v /= total;
  return p;
}

IndexCounts sample_distribution(const std::vector<double>& probs, std::uint64_t shots,
                                std::uint64_t seed, std::uint64_t stream) {
  if (shots < 1) throw DomainError("sample: shots must be >= 1");
  std::vector<double> cdf(probs.size());
  double running = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    running += probs[i];
    cdf[i] = running;
  }
  cdf.back() = 1.0;

  Philox rng(seed, stream);
  IndexCounts counts;
  for (std::uint64_t shot = 0; shot < shots; ++shot) {
    const double u = rng.next_double();
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    const std::size_t idx = static_cast<std::size_t>(it - cdf.begin());
    ++counts[std::min(idx, probs.size() - 1)];
  }
  return counts;
}

namespace {

Counts to_bitstring_counts(const IndexCounts& counts, std::size_t n_qubits) {
  Counts out;
  for (const auto& [index, n] : counts) out[format_bitstring(index, n_qubits)] = n;
  return out;
}

}  // namespace

Counts sample(const StateVector& s, std::uint64_t shots, std::uint64_t seed,
              std::uint64_t stream) {
  return to_bitstring_counts(sample_distribution(probabilities(s), shots, seed, stream),
                             s.n_qubits);
}

Counts sample(const DensityMatrix& rho, std::uint64_t shots, std::uint64_t seed,
              std::uint64_t stream) {
  return to_bitstring_counts(
      sample_distribution(probabilities(rho), shots, seed, stream), rho.n_qubits);
}

std::uint64_t register_value(std::uint64_t index, const Register& reg) {
  return (index >> reg.offset) & ((std::uint64_t{1} << reg.size) - 1);
}

Postselection postselect_probability(const StateVector& s, const Register& reg,
                                     std::uint64_t value) {
  if (value >= (std::uint64_t{1} << reg.size))
    throw ShapeError("postselect: value does not fit the register");
  Postselection out;
  out.state.n_qubits = s.n_qubits;
  out.state.amplitudes.assign(s.amplitudes.size(), cplx(0.0, 0.0));
  double prob = 0.0;
  for (std::size_t i = 0; i < s.amplitudes.size(); ++i) {
    if (register_value(i, reg) == value) {
      prob += std::norm(s.amplitudes[i]);
      out.state.amplitudes[i] = s.amplitudes[i];
    }
  }
  out.probability = prob;
  if (prob <= 0.0) {
    out.defined = false;  // zero-probability branch: no conditional state
    return out;
  }
  const double scale = 1.0 / std::sqrt(prob);
  for (cplx& a : out.state.amplitudes) a *= scale;
  out.defined = true;
  return out;
}

Postselection postselect_probability(const StateVector& s, const Register& reg,
                                     const std::string& value_bits) {
  if (value_bits.size() != reg.size)
    throw ShapeError("postselect: bitstring length must equal register size");
  std::uint64_t value = 0;
  for (std::size_t i = 0; i < value_bits.size(); ++i) {
    const char c = value_bits[i];
    if (c != '0' && c != '1') throw ShapeError("postselect: bitstring must be binary");
    if (c == '1') value |= std::uint64_t{1} << (reg.size - 1 - i);
  }
  return postselect_probability(s, reg, value);
}

}  // namespace vqge

