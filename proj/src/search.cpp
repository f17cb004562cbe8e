#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <thread>

#include "gcz/error.hpp"
#include "gcz/seeds.hpp"

// The search deliberately avoids the optimized correlation kernels: its
// complementarity test is a direct evaluation of the defining sums, so it
// can serve as an independent oracle for them.

namespace gcz {
namespace {

bool exact_alphabet(std::int64_t q) { return q == 1 || q == 2 || q == 4; }

// Aperiodic autocorrelation of an exponent vector at shifts 1..N-1, as
// Gaussian integers (exact alphabets) or quantized complex values. Shift 0
// and negative shifts carry no extra information for the pairing test.
using Signature = std::vector<std::pair<std::int64_t, std::int64_t>>;

Signature signature_exact(const std::vector<std::int32_t>& e, std::int64_t q) {
  const int n = static_cast<int>(e.size());
  const int unit = static_cast<int>(4 / q);  // exponent scale onto i^k
  static constexpr std::int64_t re4[4] = {1, 0, -1, 0};
  static constexpr std::int64_t im4[4] = {0, 1, 0, -1};
  Signature sig(static_cast<std::size_t>(n > 0 ? n - 1 : 0));
  for (int t = 1; t < n; ++t) {
    std::int64_t re = 0, im = 0;
    for (int j = 0; j + t < n; ++j) {
      int d = ((e[j] - e[j + t]) % static_cast<int>(q) + static_cast<int>(q)) %
              static_cast<int>(q);
      re += re4[(d * unit) & 3];
      im += im4[(d * unit) & 3];
    }
    sig[t - 1] = {re, im};
  }
  return sig;
}

Signature signature_quantized(const std::vector<std::int32_t>& e,
                              std::int64_t q) {
  const int n = static_cast<int>(e.size());
  std::vector<std::complex<double>> rt(static_cast<std::size_t>(q));
  for (std::int64_t k = 0; k < q; ++k) {
    double ang = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(q);
    rt[k] = {std::cos(ang), std::sin(ang)};
  }
  Signature sig(static_cast<std::size_t>(n > 0 ? n - 1 : 0));
  for (int t = 1; t < n; ++t) {
    std::complex<double> acc(0.0, 0.0);
    for (int j = 0; j + t < n; ++j) {
      int d = ((e[j] - e[j + t]) % static_cast<int>(q) + static_cast<int>(q)) %
              static_cast<int>(q);
      acc += rt[d];
    }
    sig[t - 1] = {std::llround(acc.real() * 1e6), std::llround(acc.imag() * 1e6)};
  }
  return sig;
}

Signature negated(Signature s) {
  for (auto& [re, im] : s) {
    re = -re;
    im = -im;
  }
  return s;
}

std::vector<std::int32_t> unrank(std::uint64_t idx, int length, std::int64_t q) {
  std::vector<std::int32_t> e(static_cast<std::size_t>(length));
  for (int j = length - 1; j >= 0; --j) {
    e[j] = static_cast<std::int32_t>(idx % static_cast<std::uint64_t>(q));
    idx /= static_cast<std::uint64_t>(q);
  }
  return e;
}

// Final independent complementarity check on a candidate pair.
bool complementary_direct(const std::vector<std::int32_t>& a,
                          const std::vector<std::int32_t>& b, std::int64_t q) {
  const int n = static_cast<int>(a.size());
  std::vector<std::complex<double>> rt(static_cast<std::size_t>(q));
  for (std::int64_t k = 0; k < q; ++k) {
    double ang = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(q);
    rt[k] = {std::cos(ang), std::sin(ang)};
  }
  auto mod = [&](int d) { return ((d % static_cast<int>(q)) + static_cast<int>(q)) % static_cast<int>(q); };
  for (int t = 1; t < n; ++t) {
    std::complex<double> acc(0.0, 0.0);
    for (int j = 0; j + t < n; ++j) {
      acc += rt[mod(a[j] - a[j + t])];
      acc += rt[mod(b[j] - b[j + t])];
    }
    if (std::abs(acc) > 1e-9 * n) return false;
  }
  return true;
}

}  // namespace

std::vector<ArrayPair> brute_force_search(int length, std::int64_t q,
                                          const SearchOptions& options) {
  if (length < 1) throw Error(ErrorCode::bad_input, "length must be >= 1");
  if (q < 1) throw Error(ErrorCode::bad_input, "alphabet order must be >= 1");

  // Guard on q^(2N), the candidate-pair count.
  std::uint64_t pairs = 1;
  bool overflow = false;
  for (int i = 0; i < 2 * length; ++i) {
    if (pairs > options.max_candidates / static_cast<std::uint64_t>(q)) {
      overflow = true;
      break;
    }
    pairs *= static_cast<std::uint64_t>(q);
  }
  if (overflow || pairs > options.max_candidates)
    throw Error(ErrorCode::guard_exceeded,
                "candidate-pair count exceeds the search guard of " +
                    std::to_string(options.max_candidates));

  std::uint64_t count = 1;
  for (int i = 0; i < length; ++i) count *= static_cast<std::uint64_t>(q);

  const bool exact = exact_alphabet(q);
  auto signature = [&](const std::vector<std::int32_t>& e) {
    return exact ? signature_exact(e, q) : signature_quantized(e, q);
  };

  // Bucket every sequence by its signature; matching pairs are exactly
  // (a, b) with sig(b) = -sig(a). Buckets keep ascending order.
  std::map<Signature, std::vector<std::uint64_t>> buckets;
  for (std::uint64_t i = 0; i < count; ++i)
    buckets[signature(unrank(i, length, q))].push_back(i);

  unsigned workers = options.workers ? options.workers
                                     : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(
      std::min<std::uint64_t>(workers, count));

  std::vector<std::vector<std::pair<std::uint64_t, std::uint64_t>>> found(workers);
  auto run = [&](unsigned w) {
    std::uint64_t lo = count * w / workers, hi = count * (w + 1) / workers;
    for (std::uint64_t i = lo; i < hi; ++i) {
      auto a = unrank(i, length, q);
      auto it = buckets.find(negated(signature(a)));
      if (it == buckets.end()) continue;
      for (std::uint64_t j : it->second) {
        auto b = unrank(j, length, q);
        if (complementary_direct(a, b, q)) found[w].emplace_back(i, j);
      }
    }
  };
  std::vector<std::thread> threads;
  for (unsigned w = 1; w < workers; ++w) threads.emplace_back(run, w);
  run(0);
  for (auto& t : threads) t.join();

  std::vector<ArrayPair> out;
  for (unsigned w = 0; w < workers; ++w)
    for (auto [i, j] : found[w]) {
      if (options.limit && out.size() >= *options.limit) return out;
      out.emplace_back(UnimodularArray::sequence(q, unrank(i, length, q)),
                       UnimodularArray::sequence(q, unrank(j, length, q)));
    }
  return out;
}

}  // namespace gcz
