#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace canderson {

enum class DisorderKind { line, grid };

/// Inclusive integer bounds of impurity indices along one axis.
struct IndexRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  std::int64_t size() const { return hi - lo + 1; }
  bool contains(std::int64_t i) const { return i >= lo && i <= hi; }
  bool operator==(const IndexRange&) const = default;
};

/// Uniform impurity strengths in [-strength, strength] on a line (index l)
/// or a grid (index pair l, l'). Immutable once sampled.
class DisorderRealization {
 public:
  DisorderRealization(DisorderKind kind, std::array<IndexRange, 2> ranges, std::uint64_t seed,
                      double strength, std::vector<double> values);

  DisorderKind kind() const { return kind_; }
  std::uint64_t seed() const { return seed_; }
  double strength() const { return strength_; }
  const IndexRange& range(int axis = 0) const { return ranges_.at(axis); }

  /// Line realization lookup; throws CoverageError outside the sampled range.
  double at(std::int64_t l) const;
  /// Grid realization lookup; throws CoverageError outside the sampled range.
  double at(std::int64_t l, std::int64_t lp) const;

  /// Values in traversal order (row-major, first index outermost).
  std::span<const double> values() const { return values_; }

 private:
  DisorderKind kind_;
  std::array<IndexRange, 2> ranges_;
  std::uint64_t seed_;
  double strength_;
  std::vector<double> values_;
};

/// Element `realization_index` of a splitmix64 stream keyed by the mixed
/// master seed. The increment is odd and the finalizer a bijection, so distinct
/// indices under one master seed always give distinct seeds, and neighbouring
/// master seeds do not share realizations.
std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t realization_index);

/// Unit draws in [0, 1) used by sample_disorder: mt19937_64 seeded with `seed`,
/// top 53 bits of each output scaled by 2^-53.
std::vector<double> unit_draws(std::uint64_t seed, std::size_t count);

/// One i.i.d. draw per impurity index, mapped unit -> strength * (2 unit - 1).
/// Grid realizations use `ranges[1]` for the second index; line ones ignore it.
DisorderRealization sample_disorder(std::uint64_t seed, DisorderKind kind,
                                    std::array<IndexRange, 2> ranges, double strength);

inline DisorderRealization sample_line_disorder(std::uint64_t seed, IndexRange range,
                                                double strength) {
  return sample_disorder(seed, DisorderKind::line, {range, IndexRange{0, 0}}, strength);
}

}  // namespace canderson
