#include "ecfs/synthetic.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace ecfs {

SyntheticData generate_synthetic(const SyntheticSpec& spec) {
  if (spec.n_samples < 2) throw std::invalid_argument("n_samples must be at least 2");
  if (spec.n_features < 1) throw std::invalid_argument("n_features must be positive");
  if (spec.n_informative < 1) throw std::invalid_argument("n_informative must be at least 1");
  if (spec.n_informative > spec.n_features)
    throw std::invalid_argument("n_informative exceeds n_features");
  if (!(spec.class_separation > 0.0)) throw std::invalid_argument("class_separation must be positive");
  if (!(spec.noise_sd > 0.0)) throw std::invalid_argument("noise_sd must be positive");

  std::mt19937_64 rng(spec.seed);

  std::vector<std::size_t> columns(spec.n_features);
  std::iota(columns.begin(), columns.end(), std::size_t{0});
  std::shuffle(columns.begin(), columns.end(), rng);
  std::vector<std::size_t> informative(columns.begin(),
                                       columns.begin() + static_cast<std::ptrdiff_t>(spec.n_informative));
  std::sort(informative.begin(), informative.end());
  std::vector<bool> is_informative(spec.n_features, false);
  for (auto c : informative) is_informative[c] = true;

  std::vector<int> y(spec.n_samples);
  for (std::size_t r = 0; r < spec.n_samples; ++r) y[r] = static_cast<int>(r % 2);

  Matrix x(spec.n_samples, spec.n_features);
  std::normal_distribution<double> noise(0.0, spec.noise_sd);
  for (std::size_t r = 0; r < spec.n_samples; ++r)
    for (std::size_t c = 0; c < spec.n_features; ++c) {
      const double mean = is_informative[c] && y[r] == 1 ? spec.class_separation : 0.0;
      x(r, c) = mean + noise(rng);
    }

  return {Dataset(std::move(x), std::move(y)), std::move(informative)};
}

}  // namespace ecfs
