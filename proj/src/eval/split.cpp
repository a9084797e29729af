#include "ecfs/eval/split.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace ecfs::eval {
namespace {

void validate(const SplitPlan& plan) {
  if (!(plan.train_fraction > 0.0 && plan.train_fraction < 1.0))
    throw std::invalid_argument("train_fraction must lie in (0, 1)");
  if (plan.n_repeats < 1) throw std::invalid_argument("n_repeats must be positive");
}

std::vector<std::vector<std::size_t>> indices_by_class(const Dataset& d) {
  std::vector<std::vector<std::size_t>> by_class(d.num_classes());
  for (std::size_t r = 0; r < d.samples(); ++r) by_class[d.y()[r]].push_back(r);
  return by_class;
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

SplitIndices repeat_split(const Dataset& d, const SplitPlan& plan, int repeat) {
  validate(plan);
  std::mt19937_64 rng(derive_seed(plan.seed, static_cast<std::uint64_t>(repeat)));
  SplitIndices out;

  if (plan.stratified) {
    for (auto& members : indices_by_class(d)) {
      if (members.size() < 2)
        throw std::invalid_argument("class too small to stratify: " + std::to_string(members.size()) +
                                    " sample(s)");
      std::shuffle(members.begin(), members.end(), rng);
      auto n_train = static_cast<std::size_t>(
          std::llround(plan.train_fraction * static_cast<double>(members.size())));
      n_train = std::clamp<std::size_t>(n_train, 1, members.size() - 1);
      out.train.insert(out.train.end(), members.begin(), members.begin() + n_train);
      out.test.insert(out.test.end(), members.begin() + n_train, members.end());
    }
  } else {
    std::vector<std::size_t> all(d.samples());
    std::iota(all.begin(), all.end(), std::size_t{0});
    std::shuffle(all.begin(), all.end(), rng);
    auto n_train = static_cast<std::size_t>(
        std::llround(plan.train_fraction * static_cast<double>(all.size())));
    n_train = std::clamp<std::size_t>(n_train, 1, all.size() - 1);
    out.train.assign(all.begin(), all.begin() + n_train);
    out.test.assign(all.begin() + n_train, all.end());
  }
  std::sort(out.train.begin(), out.train.end());
  std::sort(out.test.begin(), out.test.end());
  return out;
}

std::vector<SplitIndices> make_split_indices(const Dataset& d, const SplitPlan& plan) {
  validate(plan);
  std::vector<SplitIndices> out;
  out.reserve(plan.n_repeats);
  for (int r = 0; r < plan.n_repeats; ++r) out.push_back(repeat_split(d, plan, r));
  return out;
}

std::vector<std::pair<Dataset, Dataset>> make_splits(const Dataset& d, const SplitPlan& plan) {
  std::vector<std::pair<Dataset, Dataset>> out;
  for (const auto& s : make_split_indices(d, plan)) out.emplace_back(d.subset(s.train), d.subset(s.test));
  return out;
}

std::vector<SplitIndices> stratified_folds(const Dataset& d, int folds, std::uint64_t seed) {
  if (folds < 2) throw std::invalid_argument("need at least 2 folds");
  std::mt19937_64 rng(seed);
  std::vector<std::vector<std::size_t>> members_of_fold(folds);
  std::size_t next = 0;
  for (auto& members : indices_by_class(d)) {
    if (members.size() < static_cast<std::size_t>(folds))
      throw std::invalid_argument("fold with single class: a class has " + std::to_string(members.size()) +
                                  " sample(s) for " + std::to_string(folds) + " folds");
    std::shuffle(members.begin(), members.end(), rng);
    for (auto idx : members) members_of_fold[next++ % folds].push_back(idx);
  }

  std::vector<SplitIndices> out(folds);
  for (int f = 0; f < folds; ++f) {
    for (int g = 0; g < folds; ++g) {
      auto& dst = g == f ? out[f].test : out[f].train;
      dst.insert(dst.end(), members_of_fold[g].begin(), members_of_fold[g].end());
    }
    std::sort(out[f].train.begin(), out[f].train.end());
    std::sort(out[f].test.begin(), out[f].test.end());
  }
  return out;
}

}  // namespace ecfs::eval
