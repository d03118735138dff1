#include "canderson/disorder.hpp"

#include <random>
#include <string>

#include "canderson/errors.hpp"

namespace canderson {

DisorderRealization::DisorderRealization(DisorderKind kind, std::array<IndexRange, 2> ranges,
                                         std::uint64_t seed, double strength,
                                         std::vector<double> values)
    : kind_(kind), ranges_(ranges), seed_(seed), strength_(strength), values_(std::move(values)) {
  const auto expected = kind == DisorderKind::line
                            ? ranges_[0].size()
                            : ranges_[0].size() * ranges_[1].size();
  if (expected <= 0 || static_cast<std::size_t>(expected) != values_.size())
    throw InvalidParameter("disorder realization: value count does not match index ranges");
}

double DisorderRealization::at(std::int64_t l) const {
  if (kind_ != DisorderKind::line)
    throw InvalidInput("single-index lookup on a grid realization");
  if (!ranges_[0].contains(l))
    throw CoverageError("impurity index " + std::to_string(l) + " outside realization range [" +
                        std::to_string(ranges_[0].lo) + ", " + std::to_string(ranges_[0].hi) +
                        "]");
  return values_[static_cast<std::size_t>(l - ranges_[0].lo)];
}

double DisorderRealization::at(std::int64_t l, std::int64_t lp) const {
  if (kind_ != DisorderKind::grid)
    throw InvalidInput("two-index lookup on a line realization");
  if (!ranges_[0].contains(l) || !ranges_[1].contains(lp))
    throw CoverageError("impurity index (" + std::to_string(l) + ", " + std::to_string(lp) +
                        ") outside realization range");
  const auto row = l - ranges_[0].lo;
  const auto col = lp - ranges_[1].lo;
  return values_[static_cast<std::size_t>(row * ranges_[1].size() + col)];
}

namespace {

std::uint64_t splitmix_finalize(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t realization_index) {
  constexpr std::uint64_t golden = 0x9e3779b97f4a7c15ULL;
  return splitmix_finalize(splitmix_finalize(master_seed) + (realization_index + 1) * golden);
}

std::vector<double> unit_draws(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 engine(seed);
  std::vector<double> out(count);
  for (auto& u : out) u = static_cast<double>(engine() >> 11) * 0x1.0p-53;
  return out;
}

DisorderRealization sample_disorder(std::uint64_t seed, DisorderKind kind,
                                    std::array<IndexRange, 2> ranges, double strength) {
  if (!(strength >= 0.0))
    throw InvalidParameter("disorder strength lambda must be >= 0, got " +
                           std::to_string(strength));
  if (ranges[0].size() <= 0 || (kind == DisorderKind::grid && ranges[1].size() <= 0))
    throw InvalidParameter("disorder index range is empty");
  if (kind == DisorderKind::line) ranges[1] = IndexRange{0, 0};

  const auto count = static_cast<std::size_t>(
      kind == DisorderKind::line ? ranges[0].size() : ranges[0].size() * ranges[1].size());
  auto values = unit_draws(seed, count);
  for (auto& v : values) v = strength * (2.0 * v - 1.0);
  return DisorderRealization(kind, ranges, seed, strength, std::move(values));
}

}  // namespace canderson
