#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "pangular/norm.hpp"
#include "pangular/vector.hpp"

namespace pangular {

using Rng = std::mt19937_64;

std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Independent generator for sample `index` of a run seeded with `seed`.
/// Sample i draws the same numbers whatever thread evaluates it.
Rng sample_rng(std::uint64_t seed, std::uint64_t index) noexcept;

/// i.i.d. standard normal coordinates.
Vector gaussian_vector(Rng& rng, std::size_t n);

/// Gaussian vector redrawn until its norm is at least min_norm.
Vector nonzero_gaussian_vector(const NormSpec& spec, Rng& rng, std::size_t n,
                               double min_norm = 1e-6);

/// Gaussian direction scaled to unit norm under spec.
Vector unit_sphere_sample(const NormSpec& spec, Rng& rng, std::size_t n);

double uniform(Rng& rng, double lo, double hi);
double log_uniform(Rng& rng, double lo, double hi);

/// G = A A^T + I/2 with A Gaussian / sqrt(n): well conditioned but far from
/// the identity.
NormSpec random_gram(Rng& rng, std::size_t n);

/// One of l1, l2, linf, l^r (r in [1, 6]), weighted l^r or a random Gram
/// norm, all on R^n.
NormSpec random_norm(Rng& rng, std::size_t n);

/// Dimension to use for spec when the caller did not fix one.
std::size_t resolve_dimension(const NormSpec& spec, std::size_t requested);

}  // namespace pangular
