#pragma once

// Seeded random packets for property checks and the verification suite.

#include <algorithm>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "rigidpack/fock.hpp"
#include "rigidpack/packet.hpp"
#include "rigidpack/rigidity.hpp"

namespace rigidpack {

using Rng = std::mt19937_64;

/// Complex gaussian amplitudes on levels 0..nmax with the top level nonzero.
inline FockState random_fock_state(Rng& rng, int nmax) {
  std::normal_distribution<double> g;
  std::vector<Complex> c(static_cast<std::size_t>(nmax) + 1);
  for (auto& v : c) v = {g(rng), g(rng)};
  if (std::abs(c.back()) < 0.2) c.back() += 0.5;
  return FockState(std::move(c));
}

/// Definite-parity phi with top level <= max_level, displaced by up to
/// max_shift oscillator units in x and p.
inline PacketSpec random_parity_packet(Rng& rng, const Units& u, int max_level = 12,
                                       double max_shift = 1.0) {
  std::uniform_int_distribution<int> level(0, max_level);
  std::uniform_real_distribution<double> shift(-max_shift, max_shift);
  std::normal_distribution<double> g;
  const int top = std::max(1, level(rng));
  std::vector<Complex> c(static_cast<std::size_t>(top) + 1, 0.0);
  for (int n = top % 2; n <= top; n += 2) c[n] = {g(rng), g(rng)};
  if (std::abs(c[top]) < 0.2) c[top] += 0.5;
  const double x0 = shift(rng) * u.length_scale();
  const double p0 = shift(rng) * u.momentum_scale();
  return PacketSpec(x0, p0, FockState(std::move(c)));
}

/// phi without definite parity (both parities populated).
inline PacketSpec random_mixed_packet(Rng& rng, const Units& u, int max_level = 12,
                                      double max_shift = 1.0) {
  std::uniform_int_distribution<int> level(1, max_level);
  std::uniform_real_distribution<double> shift(-max_shift, max_shift);
  auto phi = random_fock_state(rng, level(rng));
  return PacketSpec(shift(rng) * u.length_scale(), shift(rng) * u.momentum_scale(),
                    std::move(phi));
}

/// Random spec for degree N with 2..max_terms terms. With exact_spacing
/// all gaps equal N + 1, otherwise each gap is drawn from [N+1, N+3].
inline RigiditySpec random_rigidity_spec(Rng& rng, int N, bool exact_spacing,
                                         int max_terms = 3) {
  std::uniform_int_distribution<int> terms(2, std::max(2, max_terms));
  std::uniform_int_distribution<int> start(0, 3);
  std::uniform_int_distribution<int> extra(0, 2);
  std::bernoulli_distribution odd(0.5);
  std::uniform_int_distribution<std::uint64_t> seeds;
  RigiditySpec spec;
  spec.target_N = N;
  spec.parity = odd(rng) ? Parity::odd : Parity::even;
  const int count = terms(rng);
  int n = start(rng);
  for (int i = 0; i < count; ++i) {
    spec.indices.push_back(n);
    n += N + 1 + (exact_spacing ? 0 : extra(rng));
  }
  spec.seed = seeds(rng);
  std::uniform_real_distribution<double> shift(-1.0, 1.0);
  spec.x0 = shift(rng);
  spec.p0 = shift(rng);
  return spec;
}

}  // namespace rigidpack
