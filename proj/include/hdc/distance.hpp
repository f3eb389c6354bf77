#pragma once

// Exhaustive ground truth: minimum distance and weight distribution of linear
// codes by Gray-code enumeration, and exact A(n, d) for tiny n by clique search.

#include "hdc/cyclic_code.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace hdc {

/// k x n binary generator matrix with rows packed into 64-bit words.
class GeneratorMatrix {
 public:
  GeneratorMatrix(std::size_t n, const std::vector<BitPolynomial>& rows);

  /// Rows x^i g(x), i < k.
  static GeneratorMatrix from_spec(const ConstructionSpec& spec);

  std::size_t length() const { return n_; }
  std::size_t dimension() const { return k_; }
  std::size_t words_per_row() const { return words_; }
  std::span<const std::uint64_t> row(std::size_t i) const {
    return {data_.data() + i * words_, words_};
  }

  /// The same code with rows reordered: row i of the result is row perm[i].
  GeneratorMatrix permuted(const std::vector<std::size_t>& perm) const;

 private:
  GeneratorMatrix() = default;

  std::size_t n_ = 0;
  std::size_t k_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> data_;
};

struct EnumerationOptions {
  /// Largest dimension enumerated without an explicit override.
  std::size_t max_dimension = 24;
  unsigned workers = 1;
};

struct WeightDistribution {
  std::vector<std::uint64_t> counts;  // counts[w], w = 0..n

  std::uint64_t total() const;
  /// Smallest positive weight with a nonzero count (0 if none).
  std::size_t min_positive_weight() const;
};

std::size_t min_distance(const GeneratorMatrix& generator, EnumerationOptions options = {});
std::size_t min_distance(const ConstructionSpec& spec, EnumerationOptions options = {});

WeightDistribution weight_distribution(const GeneratorMatrix& generator,
                                       EnumerationOptions options = {.max_dimension = 20});
WeightDistribution weight_distribution(const ConstructionSpec& spec,
                                       EnumerationOptions options = {.max_dimension = 20});

struct CliqueOptions {
  int max_length = 8;
};

/// Exact A(n, d): maximum clique in the graph of n-bit words joined when
/// their distance is >= d, with the zero word fixed in the code.
std::uint64_t exact_A_search(int n, int d, CliqueOptions options = {});

/// Same search, returning one optimal code (sorted, contains 0).
std::vector<std::uint32_t> exact_A_code(int n, int d, CliqueOptions options = {});

}  // namespace hdc
