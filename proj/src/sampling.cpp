#include "pangular/sampling.hpp"

#include <cmath>

#include "pangular/error.hpp"
#include "pangular/parallel.hpp"

#if defined(PANGULAR_HAVE_OPENMP)
#include <omp.h>
#endif

namespace pangular {

std::string to_string(Execution e) { return e == Execution::serial ? "serial" : "parallel"; }

Execution execution_from_string(const std::string& s) {
  if (s == "serial") return Execution::serial;
  if (s == "parallel") return Execution::parallel;
  throw Error(ErrorCode::invalid_argument, "execution must be serial or parallel, got " + s);
}

int max_threads() noexcept {
#if defined(PANGULAR_HAVE_OPENMP)
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng sample_rng(std::uint64_t seed, std::uint64_t index) noexcept {
  return Rng(splitmix64(splitmix64(seed) ^ index));
}

Vector gaussian_vector(Rng& rng, std::size_t n) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Vector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = normal(rng);
  return v;
}

Vector nonzero_gaussian_vector(const NormSpec& spec, Rng& rng, std::size_t n, double min_norm) {
  for (;;) {
    Vector v = gaussian_vector(rng, n);
    if (norm_eval(spec, v) >= min_norm) return v;
  }
}

Vector unit_sphere_sample(const NormSpec& spec, Rng& rng, std::size_t n) {
  Vector v = nonzero_gaussian_vector(spec, rng, n);
  const double len = norm_eval(spec, v);
  return (1.0 / len) * std::move(v);
}

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

double log_uniform(Rng& rng, double lo, double hi) {
  return std::exp(uniform(rng, std::log(lo), std::log(hi)));
}

NormSpec random_gram(Rng& rng, std::size_t n) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> a(n * n);
  for (double& v : a) v = normal(rng) / std::sqrt(static_cast<double>(n));
  std::vector<double> g(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      double s = i == j ? 0.5 : 0.0;
      for (std::size_t k = 0; k < n; ++k) s += a[i * n + k] * a[j * n + k];
      g[i * n + j] = s;
      g[j * n + i] = s;
    }
  }
  return NormSpec::gram(n, std::move(g));
}

NormSpec random_norm(Rng& rng, std::size_t n) {
  switch (std::uniform_int_distribution<int>(0, 5)(rng)) {
    case 0: return NormSpec::l1();
    case 1: return NormSpec::l2();
    case 2: return NormSpec::linf();
    case 3: return NormSpec::lp(uniform(rng, 1.0, 6.0));
    case 4: {
      std::vector<double> w(n);
      for (double& v : w) v = log_uniform(rng, 0.2, 5.0);
      const double r = std::uniform_int_distribution<int>(0, 1)(rng) ? kInfinityExponent
                                                                      : uniform(rng, 1.0, 6.0);
      return NormSpec::weighted_lp(std::move(w), r);
    }
    default: return random_gram(rng, n);
  }
}

std::size_t resolve_dimension(const NormSpec& spec, std::size_t requested) {
  if (auto d = spec.dimension()) {
    if (requested != 0 && requested != *d) {
      throw Error(ErrorCode::dimension_mismatch,
                  "requested dimension " + std::to_string(requested) + " but " + spec.name() +
                      " lives in dimension " + std::to_string(*d));
    }
    return *d;
  }
  return requested == 0 ? 2 : requested;
}

}  // namespace pangular
