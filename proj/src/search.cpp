#include <algorithm>
#include <bit>
#include <cmath>
#include <random>

#include "moduli/classify.hpp"
#include "moduli/error.hpp"

namespace moduli {

namespace {

constexpr int kScaleBits = 16;
constexpr std::int64_t kScale = std::int64_t{1} << kScaleBits;

/// Signs of the expansion of prod (y - r_i), leading term excluded, from
/// y^{d-1} down to y^0. Zero coefficients show up as 0.
template <typename Int>
std::vector<int> expansion_signs(const std::vector<std::int64_t>& roots) {
  std::vector<Int> c{Int(1)};  // low to high
  for (std::int64_t r : roots) {
    std::vector<Int> next(c.size() + 1, Int(0));
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= Int(r) * c[i];
    }
    c = std::move(next);
  }
  std::vector<int> out;
  for (std::size_t k = c.size() - 1; k-- > 0;) out.push_back(c[k] > 0 ? 1 : (c[k] < 0 ? -1 : 0));
  return out;
}

template <>
std::vector<int> expansion_signs<mpz_class>(const std::vector<std::int64_t>& roots) {
  std::vector<mpz_class> c{mpz_class(1)};
  for (std::int64_t r : roots) {
    std::vector<mpz_class> next(c.size() + 1, mpz_class(0));
    const mpz_class rr(static_cast<long>(r));
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= rr * c[i];
    }
    c = std::move(next);
  }
  std::vector<int> out;
  for (std::size_t k = c.size() - 1; k-- > 0;) out.push_back(sgn(c[k]));
  return out;
}

/// True when every elementary symmetric sum of d values below 2^bits fits
/// a signed 128-bit integer.
bool fits_int128(int bits, int d) {
  const double binom_bits = std::log2(std::tgamma(d + 1.0) / std::pow(std::tgamma(d / 2 + 1.0), 2));
  return bits * d + binom_bits <= 126.0;
}

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  // Log mode: exponent e in [8, 23], then N uniform in [2^e, 2^{e+1}), so
  // N / 2^16 spans [2^-8, 2^8). Cluster mode: N / 2^16 in [7/8, 9/8].
  std::int64_t draw(bool cluster) {
    if (cluster) {
      std::uniform_int_distribution<std::int64_t> k(-(kScale >> 3), kScale >> 3);
      return kScale + k(rng_);
    }
    std::uniform_int_distribution<int> e(kScaleBits - 8, kScaleBits + 7);
    const int ex = e(rng_);
    std::uniform_int_distribution<std::int64_t> n(std::int64_t{1} << ex, (std::int64_t{2} << ex) - 1);
    return n(rng_);
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace

std::optional<SignedRootMultiset> search_witness(const SignPattern& pattern, const ModulusOrdering& word,
                                                 long budget, std::uint64_t seed) {
  if (budget < 1) throw Error(ErrorKind::InvalidArgument, "search budget must be >= 1");
  const int d = pattern.degree();
  if (!word.is_generic() || word.degree() != d || word.positive_count() != pattern.changes()) return std::nullopt;
  const std::string letters = word.to_string();
  std::vector<int> target;
  for (std::size_t k = 1; k < pattern.signs().size(); ++k) target.push_back(static_cast<int>(pattern[k]));

  Sampler sampler(seed);
  std::vector<std::int64_t> moduli(static_cast<std::size_t>(d));
  std::vector<std::int64_t> roots(static_cast<std::size_t>(d));
  for (long t = 0; t < budget; ++t) {
    const bool cluster = t % 2 == 1;
    for (auto& v : moduli) v = sampler.draw(cluster);
    std::sort(moduli.begin(), moduli.end());
    if (std::adjacent_find(moduli.begin(), moduli.end()) != moduli.end()) continue;
    for (std::size_t i = 0; i < moduli.size(); ++i) roots[i] = letters[i] == 'P' ? moduli[i] : -moduli[i];
    const int bits = std::bit_width(static_cast<std::uint64_t>(moduli.back()));
    const auto signs = fits_int128(bits, d) ? expansion_signs<__int128>(roots) : expansion_signs<mpz_class>(roots);
    if (signs != target) continue;
    std::vector<Rational> exact;
    for (std::int64_t r : roots) exact.emplace_back(static_cast<long>(r), static_cast<long>(kScale));
    SignedRootMultiset witness = SignedRootMultiset::from_roots(exact);
    if (realizes(witness, pattern, word)) return witness;
  }
  return std::nullopt;
}

std::optional<SignedRootMultiset> search_witness(const SigmaShape& shape, const ModulusOrdering& word, long budget,
                                                 std::uint64_t seed) {
  return search_witness(make_pattern(shape), word, budget, seed);
}

}  // namespace moduli
