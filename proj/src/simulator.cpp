#include "crowdest/simulator.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <vector>

#include "crowdest/errors.hpp"

namespace crowdest {

namespace {

// Uniform integer in [0, bound) from 64-bit draws; rejection on the masked
// top word keeps the distribution exact.
BigInt uniform_below(std::mt19937_64& eng, const BigInt& bound) {
  size_t bits = mpz_sizeinbase(BigInt(bound - 1).get_mpz_t(), 2);
  if (bound == 1) return 0;
  size_t words = (bits + 63) / 64;
  size_t top_bits = bits - 64 * (words - 1);
  std::uint64_t top_mask =
      top_bits >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << top_bits) - 1);
  while (true) {
    BigInt v = 0;
    for (size_t w = 0; w < words; ++w) {
      std::uint64_t draw = eng();
      if (w + 1 == words) draw &= top_mask;
      BigInt part(static_cast<unsigned long>(draw));
      mpz_mul_2exp(part.get_mpz_t(), part.get_mpz_t(), 64 * w);
      v += part;
    }
    if (v < bound) return v;
  }
}

}  // namespace

std::string EmpiricalDistribution::to_json() const {
  std::ostringstream os;
  os << "{\"scenario\":{\"s1\":" << scenario.s1 << ",\"s2\":" << scenario.s2
     << ",\"s3\":" << scenario.s3 << "},\"trials\":" << trials << ",\"seed\":" << seed
     << ",\"counts\":{";
  bool first = true;
  for (const auto& [n, c] : counts) {
    if (!first) os << ",";
    first = false;
    os << "\"" << n << "\":" << c;
  }
  os << "},\"mode\":" << mode << ",\"exact_mode\":" << exact_mode << ",\"tv_distance\":\""
     << dec_fixed_trunc(tv_distance, 10) << "\"}";
  return os.str();
}

EmpiricalDistribution sample_distribution(const SampleConfig& config) {
  if (config.trials < 1) throw DomainError("sample_distribution requires trials >= 1");
  const Scenario& sc = config.scenario;

  // Cumulative weights over (i, j) classes in (i, then j) order.
  std::vector<long> class_n;
  std::vector<BigInt> cumulative;
  BigInt total = 0;
  for (long i = 0; i <= std::min(sc.s1, sc.s2); ++i)
    for (long j = 0; j <= std::min(sc.s2 - i, sc.s3); ++j) {
      total += event_count(sc, i, j);
      class_n.push_back(i + j);
      cumulative.push_back(total);
    }
  if (total == 0) throw InternalError("degenerate sample space");  // E_{0,0} = 1

  std::mt19937_64 eng(config.seed);
  EmpiricalDistribution emp;
  emp.scenario = sc;
  emp.trials = config.trials;
  emp.seed = config.seed;
  for (std::uint64_t t = 0; t < config.trials; ++t) {
    BigInt u = uniform_below(eng, total);
    size_t idx = static_cast<size_t>(
        std::upper_bound(cumulative.begin(), cumulative.end(), u) - cumulative.begin());
    emp.counts[class_n[idx]] += 1;
  }

  std::uint64_t best = 0;
  for (const auto& [n, c] : emp.counts)
    if (c > best) {
      best = c;
      emp.mode = n;
    }

  DistributionTable exact = distribution(sc);
  emp.exact_mode = argmax_of(exact).n_star;
  Rat tv(0);
  Rat trials_r(static_cast<unsigned long>(config.trials));
  Rat total_r(total);
  for (long n = 0; n <= sc.n_max(); ++n) {
    auto it = emp.counts.find(n);
    Rat e = it == emp.counts.end() ? Rat(0)
                                   : Rat(static_cast<unsigned long>(it->second)) / trials_r;
    Rat x = Rat(exact.weight(n)) / total_r;
    Rat diff = e - x;
    if (sign(diff) < 0) diff = -diff;
    tv += diff;
  }
  emp.tv_distance = tv / 2;
  return emp;
}

}  // namespace crowdest
