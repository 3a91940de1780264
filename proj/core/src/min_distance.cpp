#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <limits>
#include <thread>

#include "gcodes/linear_code.hpp"

namespace gcodes {

namespace {

constexpr std::uint64_t kExhaustiveCap = std::uint64_t(1) << 22;

// q^k, saturating above the cap so the guard never overflows.
std::uint64_t message_space_size(std::uint64_t q, std::size_t k) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (total > kExhaustiveCap / q + 1) return std::numeric_limits<std::uint64_t>::max();
    total *= q;
  }
  return total;
}

unsigned popcount_words(std::span<const std::uint64_t> words) {
  unsigned w = 0;
  for (std::uint64_t x : words) w += unsigned(std::popcount(x));
  return w;
}

unsigned exhaustive_gf2(const GFMatrix& generator) {
  const std::size_t k = generator.rows();
  const std::size_t words = generator.words_per_row();
  std::vector<std::uint64_t> acc(words, 0);
  unsigned best = std::numeric_limits<unsigned>::max();
  // Gray-code walk: step g flips message bit countr_zero(g).
  const std::uint64_t total = std::uint64_t(1) << k;
  for (std::uint64_t g = 1; g < total; ++g) {
    const auto bit = std::size_t(std::countr_zero(g));
    auto row = generator.packed_row(bit);
    for (std::size_t w = 0; w < words; ++w) acc[w] ^= row[w];
    best = std::min(best, popcount_words(acc));
  }
  return best;
}

unsigned exhaustive_generic(const GFMatrix& generator) {
  const FieldSpec& f = *generator.field();
  const std::size_t k = generator.rows(), n = generator.cols();
  const std::uint32_t q = f.order();
  std::vector<std::uint16_t> digits(k, 0);
  std::vector<std::uint16_t> cw(n, 0);
  unsigned best = std::numeric_limits<unsigned>::max();
  for (;;) {
    // Odometer step with incremental codeword updates.
    std::size_t i = 0;
    for (; i < k; ++i) {
      const std::uint16_t old = digits[i];
      const std::uint16_t next = std::uint32_t(old) + 1 == q ? 0 : old + 1;
      digits[i] = next;
      const std::uint16_t delta = f.sub(next, old);
      for (std::size_t j = 0; j < n; ++j)
        cw[j] = f.add(cw[j], f.mul(delta, generator.get(i, j)));
      if (next != 0) break;
    }
    if (i == k) break;  // wrapped around to the zero message
    unsigned w = 0;
    for (std::uint16_t s : cw) w += s != 0;
    best = std::min(best, w);
  }
  return best;
}

struct InformationSet {
  GFMatrix generator;     // RREF, identity on its pivot columns
  unsigned deficiency;    // k minus the number of previously unused pivots
};

// Repeated Gaussian elimination, each pass preferring columns no earlier
// pass has used as pivots, so the information sets are as disjoint as the
// code allows.
std::vector<InformationSet> build_information_sets(const GFMatrix& generator) {
  const std::size_t k = generator.rows(), n = generator.cols();
  std::vector<bool> used(n, false);
  std::vector<InformationSet> sets;
  for (;;) {
    std::vector<std::size_t> order;
    order.reserve(n);
    for (std::size_t c = 0; c < n; ++c)
      if (!used[c]) order.push_back(c);
    if (order.empty()) break;
    for (std::size_t c = 0; c < n; ++c)
      if (used[c]) order.push_back(c);

    GFMatrix a = generator;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t pos = 0; pos < n && r < k; ++pos) {
      const std::size_t c = order[pos];
      std::size_t p = r;
      while (p < k && a.get(p, c) == 0) ++p;
      if (p == k) continue;
      a.swap_rows(p, r);
      for (std::size_t i = 0; i < k; ++i) {
        if (i != r && a.get(i, c)) a.add_scaled_row(i, r, 1);
      }
      pivots.push_back(c);
      ++r;
    }
    unsigned fresh = 0;
    for (std::size_t c : pivots)
      if (!used[c]) {
        used[c] = true;
        ++fresh;
      }
    if (fresh == 0) break;  // leftover columns are zero in every codeword
    sets.push_back({std::move(a), unsigned(k - fresh)});
  }
  return sets;
}

// XOR combinations of exactly `weight` generator rows, colexicographic
// order (largest row index outermost), one row XOR per visited node.
void enumerate_weight_class(const GFMatrix& gen, unsigned weight, std::atomic<unsigned>& best) {
  const std::size_t k = gen.rows();
  const std::size_t words = gen.words_per_row();
  std::vector<std::uint64_t> levels((weight + 1) * words, 0);

  auto update_best = [&](unsigned w) {
    unsigned cur = best.load(std::memory_order_relaxed);
    while (w < cur && !best.compare_exchange_weak(cur, w, std::memory_order_relaxed)) {
    }
  };

  auto recurse = [&](auto&& self, unsigned remaining, std::size_t limit) -> void {
    const std::uint64_t* parent = levels.data() + remaining * words;
    std::uint64_t* acc = levels.data() + (remaining - 1) * words;
    for (std::size_t i = remaining - 1; i < limit; ++i) {
      auto row = gen.packed_row(i);
      for (std::size_t w = 0; w < words; ++w) acc[w] = parent[w] ^ row[w];
      if (remaining == 1) {
        update_best(popcount_words({acc, words}));
      } else {
        self(self, remaining - 1, i);
      }
    }
  };
  if (weight > k) return;
  recurse(recurse, weight, k);
}

}  // namespace

unsigned min_distance_exhaustive(const LinearCode& code) {
  const std::uint64_t total = message_space_size(code.field()->order(), code.dimension());
  if (total > kExhaustiveCap)
    throw CapacityError("message space exceeds 2^22; exhaustive enumeration refused");
  if (code.generator().gf2_packed()) return exhaustive_gf2(code.generator());
  return exhaustive_generic(code.generator());
}

unsigned min_distance_bz(const LinearCode& code, const DistanceOptions& options) {
  if (code.field()->order() != 2)
    throw UsageError("information-set distance search supports GF(2) only");
  const auto sets = build_information_sets(code.generator());
  const std::size_t k = code.dimension();

  std::atomic<unsigned> best{unsigned(code.length()) + 1};
  unsigned lower = 0;
  for (unsigned w = 1; w <= k; ++w) {
    const unsigned workers = std::max(1u, options.workers);
    if (workers == 1 || sets.size() == 1) {
      for (const auto& set : sets) enumerate_weight_class(set.generator, w, best);
    } else {
      std::atomic<std::size_t> next{0};
      std::vector<std::thread> pool;
      const unsigned count = unsigned(std::min<std::size_t>(workers, sets.size()));
      pool.reserve(count);
      for (unsigned t = 0; t < count; ++t)
        pool.emplace_back([&] {
          for (std::size_t h = next.fetch_add(1); h < sets.size(); h = next.fetch_add(1))
            enumerate_weight_class(sets[h].generator, w, best);
        });
      for (auto& th : pool) th.join();
    }
    unsigned bound = 0;
    for (const auto& set : sets)
      if (w + 1 > set.deficiency) bound += w + 1 - set.deficiency;
    lower = std::max(lower, bound);
    const unsigned found = best.load();
    if (options.progress) options.progress(std::min(lower, found), found);
    if (lower >= found) break;
  }
  return best.load();
}

unsigned compute_min_distance(const LinearCode& code, const DistanceOptions& options) {
  switch (options.engine) {
    case DistanceEngine::Exhaustive:
      return min_distance_exhaustive(code);
    case DistanceEngine::BrouwerZimmermann:
      return min_distance_bz(code, options);
    case DistanceEngine::Auto:
      break;
  }
  if (message_space_size(code.field()->order(), code.dimension()) <= kExhaustiveCap)
    return min_distance_exhaustive(code);
  if (code.field()->order() == 2) return min_distance_bz(code, options);
  throw CapacityError("no exact engine available: non-binary code with q^k > 2^22");
}

}  // namespace gcodes
