#include "hdc/distance.hpp"

#include "hdc/error.hpp"

#include <algorithm>
#include <numeric>
#include <atomic>
#include <bit>
#include <limits>
#include <string>
#include <thread>

namespace hdc {

namespace {

constexpr std::size_t kWordBits = 64;

void check_budget(std::size_t k, std::size_t max_dimension) {
  require(k >= 1, ErrorKind::InvalidParameters, "code dimension must be positive");
  require(k <= max_dimension, ErrorKind::BudgetExceeded,
          "dimension " + std::to_string(k) + " exceeds enumeration budget " + std::to_string(max_dimension));
  require(k < 63, ErrorKind::BudgetExceeded, "dimension too large to enumerate");
}

// Runs fn(chunk) for chunk in [0, chunks) on `workers` threads.
template <typename Fn>
void for_each_chunk(std::size_t chunks, unsigned workers, Fn&& fn) {
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(chunks)));
  if (workers == 1) {
    for (std::size_t c = 0; c < chunks; ++c) fn(c);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t c = next++; c < chunks; c = next++) fn(c);
    });
}

// Visits every codeword weight for Gray indices [begin, end).
template <typename Visit>
void enumerate_range(const GeneratorMatrix& g, std::uint64_t begin, std::uint64_t end, Visit&& visit) {
  const std::size_t words = g.words_per_row();
  std::vector<std::uint64_t> current(words, 0);
  const std::uint64_t gray = begin ^ (begin >> 1);
  for (std::size_t r = 0; r < g.dimension(); ++r)
    if (gray >> r & 1u) {
      auto row = g.row(r);
      for (std::size_t w = 0; w < words; ++w) current[w] ^= row[w];
    }
  auto weight = [&] {
    std::size_t total = 0;
    for (auto w : current) total += std::popcount(w);
    return total;
  };
  visit(begin, weight());
  for (std::uint64_t idx = begin + 1; idx < end; ++idx) {
    auto row = g.row(static_cast<std::size_t>(std::countr_zero(idx)));
    for (std::size_t w = 0; w < words; ++w) current[w] ^= row[w];
    visit(idx, weight());
  }
}

std::size_t chunk_count(std::size_t k) { return std::size_t{1} << std::min<std::size_t>(k, 6); }

}  // namespace

GeneratorMatrix::GeneratorMatrix(std::size_t n, const std::vector<BitPolynomial>& rows)
    : n_(n), k_(rows.size()), words_((n + kWordBits - 1) / kWordBits) {
  require(n >= 1, ErrorKind::InvalidParameters, "code length must be positive");
  data_.assign(k_ * words_, 0);
  for (std::size_t r = 0; r < k_; ++r) {
    require(rows[r].degree() < static_cast<long>(n), ErrorKind::LengthMismatch,
            "generator row longer than the code length");
    auto src = rows[r].words();
    std::copy(src.begin(), src.end(), data_.begin() + static_cast<std::ptrdiff_t>(r * words_));
  }
}

GeneratorMatrix GeneratorMatrix::from_spec(const ConstructionSpec& spec) {
  std::vector<BitPolynomial> rows;
  rows.reserve(spec.k);
  for (std::uint32_t i = 0; i < spec.k; ++i) {
    BitPolynomial row;
    row.add_shifted(spec.generator, i);
    rows.push_back(std::move(row));
  }
  return GeneratorMatrix(spec.n, rows);
}

GeneratorMatrix GeneratorMatrix::permuted(const std::vector<std::size_t>& perm) const {
  require(perm.size() == k_, ErrorKind::LengthMismatch, "row permutation has wrong size");
  GeneratorMatrix out;
  out.n_ = n_;
  out.k_ = k_;
  out.words_ = words_;
  out.data_.resize(data_.size());
  for (std::size_t r = 0; r < k_; ++r) {
    auto src = row(perm[r]);
    std::copy(src.begin(), src.end(), out.data_.begin() + static_cast<std::ptrdiff_t>(r * words_));
  }
  return out;
}

std::uint64_t WeightDistribution::total() const {
  std::uint64_t sum = 0;
  for (auto c : counts) sum += c;
  return sum;
}

std::size_t WeightDistribution::min_positive_weight() const {
  for (std::size_t w = 1; w < counts.size(); ++w)
    if (counts[w] != 0) return w;
  return 0;
}

std::size_t min_distance(const GeneratorMatrix& generator, EnumerationOptions options) {
  const std::size_t k = generator.dimension();
  check_budget(k, options.max_dimension);
  const std::uint64_t total = std::uint64_t{1} << k;
  const std::size_t chunks = chunk_count(k);
  const std::uint64_t span = total / chunks;
  std::vector<std::size_t> best(chunks, std::numeric_limits<std::size_t>::max());
  for_each_chunk(chunks, options.workers, [&](std::size_t c) {
    std::size_t local = std::numeric_limits<std::size_t>::max();
    enumerate_range(generator, c * span, (c + 1) * span, [&](std::uint64_t idx, std::size_t w) {
      if (idx != 0) local = std::min(local, w);
    });
    best[c] = local;
  });
  const std::size_t d = *std::min_element(best.begin(), best.end());
  require(d != 0, ErrorKind::InvalidParameters, "generator rows are linearly dependent");
  return d;
}

std::size_t min_distance(const ConstructionSpec& spec, EnumerationOptions options) {
  return min_distance(GeneratorMatrix::from_spec(spec), options);
}

WeightDistribution weight_distribution(const GeneratorMatrix& generator, EnumerationOptions options) {
  const std::size_t k = generator.dimension();
  check_budget(k, options.max_dimension);
  const std::size_t n = generator.length();
  const std::uint64_t total = std::uint64_t{1} << k;
  const std::size_t chunks = chunk_count(k);
  const std::uint64_t span = total / chunks;
  std::vector<std::vector<std::uint64_t>> partial(chunks, std::vector<std::uint64_t>(n + 1, 0));
  for_each_chunk(chunks, options.workers, [&](std::size_t c) {
    auto& hist = partial[c];
    enumerate_range(generator, c * span, (c + 1) * span,
                    [&](std::uint64_t, std::size_t w) { ++hist[w]; });
  });
  WeightDistribution out{std::vector<std::uint64_t>(n + 1, 0)};
  for (const auto& hist : partial)
    for (std::size_t w = 0; w <= n; ++w) out.counts[w] += hist[w];
  return out;
}

WeightDistribution weight_distribution(const ConstructionSpec& spec, EnumerationOptions options) {
  return weight_distribution(GeneratorMatrix::from_spec(spec), options);
}

namespace {

// Bitset branch-and-bound maximum clique with greedy colouring bounds.
class CliqueSearch {
 public:
  /// Only cliques larger than `floor` are reported.
  CliqueSearch(std::vector<std::uint32_t> vertices, int d, std::size_t floor = 0)
      : vertices_(std::move(vertices)), words_((vertices_.size() + 63) / 64), floor_(floor) {
    const std::size_t count = vertices_.size();
    // High-degree vertices first: colouring then packs them into early classes.
    std::vector<std::size_t> degree(count, 0);
    for (std::size_t a = 0; a < count; ++a)
      for (std::size_t b = 0; b < count; ++b)
        if (a != b && std::popcount(vertices_[a] ^ vertices_[b]) >= d) ++degree[a];
    std::vector<std::size_t> order(count);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return degree[a] > degree[b]; });
    std::vector<std::uint32_t> sorted(count);
    for (std::size_t i = 0; i < count; ++i) sorted[i] = vertices_[order[i]];
    vertices_ = std::move(sorted);
    adjacency_.assign(count * words_, 0);
    for (std::size_t a = 0; a < count; ++a)
      for (std::size_t b = 0; b < count; ++b)
        if (a != b && std::popcount(vertices_[a] ^ vertices_[b]) >= d)
          adjacency_[a * words_ + b / 64] |= std::uint64_t{1} << (b % 64);
  }

  std::vector<std::uint32_t> run() {
    Bits all(words_, 0);
    for (std::size_t v = 0; v < vertices_.size(); ++v) all[v / 64] |= std::uint64_t{1} << (v % 64);
    std::vector<std::size_t> current;
    expand(all, current);
    std::vector<std::uint32_t> out;
    for (auto v : best_) out.push_back(vertices_[v]);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  using Bits = std::vector<std::uint64_t>;

  const std::uint64_t* adj(std::size_t v) const { return adjacency_.data() + v * words_; }

  static bool empty(const Bits& b) {
    return std::all_of(b.begin(), b.end(), [](std::uint64_t w) { return w == 0; });
  }

  void expand(Bits candidates, std::vector<std::size_t>& current) {
    // Greedy colouring in ascending (lexicographic) vertex order.
    std::vector<std::size_t> order;
    std::vector<std::size_t> colour;
    Bits uncoloured = candidates;
    std::size_t k = 0;
    while (!empty(uncoloured)) {
      ++k;
      Bits q = uncoloured;
      for (std::size_t w = 0; w < words_; ++w) {
        while (q[w] != 0) {
          const std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(q[w]));
          const std::uint64_t* a = adj(v);
          for (std::size_t x = w; x < words_; ++x) q[x] &= ~a[x];
          q[w] &= ~(std::uint64_t{1} << (v % 64));
          uncoloured[w] &= ~(std::uint64_t{1} << (v % 64));
          order.push_back(v);
          colour.push_back(k);
        }
      }
    }
    for (std::size_t i = order.size(); i-- > 0;) {
      if (current.size() + colour[i] <= std::max(best_.size(), floor_)) return;
      const std::size_t v = order[i];
      current.push_back(v);
      Bits next(words_);
      const std::uint64_t* a = adj(v);
      for (std::size_t w = 0; w < words_; ++w) next[w] = candidates[w] & a[w];
      if (empty(next)) {
        if (current.size() > std::max(best_.size(), floor_)) best_ = current;
      } else {
        expand(std::move(next), current);
      }
      current.pop_back();
      candidates[v / 64] &= ~(std::uint64_t{1} << (v % 64));
    }
  }

  std::vector<std::uint32_t> vertices_;
  std::size_t words_;
  std::vector<std::uint64_t> adjacency_;
  std::size_t floor_;
  std::vector<std::size_t> best_;
};

}  // namespace

std::vector<std::uint32_t> exact_A_code(int n, int d, CliqueOptions options) {
  require(n >= 1 && d >= 1 && d <= n, ErrorKind::InvalidParameters, "need 1 <= d <= n");
  require(n <= options.max_length, ErrorKind::BudgetExceeded,
          "exact search for n = " + std::to_string(n) + " exceeds budget n <= " +
              std::to_string(options.max_length));
  require(n <= 20, ErrorKind::BudgetExceeded, "exact search limited to n <= 20");
  // Zero is forced into the code. Up to a coordinate permutation, a word of
  // least nonzero weight w is 1^w 0^(n-w) and every other word has weight >= w,
  // so each w is searched separately, seeded with the best size so far.
  std::vector<std::uint32_t> code{0};
  for (int w = d; w <= n; ++w) {
    const std::uint32_t anchor = (1u << w) - 1;
    std::vector<std::uint32_t> vertices;
    for (std::uint32_t x = 1; x < (1u << n); ++x)
      if (x != anchor && std::popcount(x) >= w && std::popcount(x ^ anchor) >= d) vertices.push_back(x);
    const std::size_t floor = code.size() >= 2 ? code.size() - 2 : 0;
    auto rest = vertices.empty() ? std::vector<std::uint32_t>{} : CliqueSearch(std::move(vertices), d, floor).run();
    if (rest.size() + 2 > code.size()) {
      code = {0, anchor};
      code.insert(code.end(), rest.begin(), rest.end());
      std::sort(code.begin(), code.end());
    }
  }
  return code;
}

std::uint64_t exact_A_search(int n, int d, CliqueOptions options) {
  return exact_A_code(n, d, options).size();
}

}  // namespace hdc
