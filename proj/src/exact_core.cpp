#include "crowdest/exact_core.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "crowdest/errors.hpp"

namespace crowdest {

Scenario::Scenario(long a, long b, long c) : s1(a), s2(b), s3(c) {
  if (a < 0 || b < 0 || c < 0) throw DomainError("scenario coordinates must be >= 0");
}

long Scenario::n_max() const { return std::min(s2, s1 + s3); }

BigInt event_count(const Scenario& sc, long i, long j) {
  return binom(sc.s1, i) * binom(sc.s2, i) * binom(sc.s2 - i, j) * binom(sc.s3, j);
}

BigInt f_value(const Scenario& sc, long N) {
  if (N < 0 || N > sc.n_max()) return 0;
  BigInt inner = 0;
  long lo = std::max(0L, N - sc.s3);
  long hi = std::min(sc.s1, N);
  for (long i = lo; i <= hi; ++i) inner += binom(sc.s1, i) * binom(sc.s3, N - i) * binom(N, i);
  return binom(sc.s2, N) * inner;
}

const BigInt& DistributionTable::weight(long N) const {
  static const BigInt zero(0);
  if (N < 0 || N >= static_cast<long>(weights.size())) return zero;
  return weights[static_cast<size_t>(N)];
}

BigInt DistributionTable::total() const {
  BigInt t = 0;
  for (const auto& w : weights) t += w;
  return t;
}

void DistributionTable::write_csv(std::ostream& out, char sep) const {
  out << "N" << sep << "weight" << "\n";
  for (size_t n = 0; n < weights.size(); ++n) out << n << sep << weights[n].get_str() << "\n";
}

std::string DistributionTable::to_json() const {
  std::ostringstream os;
  os << "{\"scenario\":{\"s1\":" << scenario.s1 << ",\"s2\":" << scenario.s2
     << ",\"s3\":" << scenario.s3 << "},\"weights\":{";
  for (size_t n = 0; n < weights.size(); ++n) {
    if (n) os << ",";
    os << "\"" << n << "\":\"" << weights[n].get_str() << "\"";
  }
  os << "}}";
  return os.str();
}

DistributionTable distribution(const Scenario& sc) {
  DistributionTable t;
  t.scenario = sc;
  long hi = sc.n_max();
  t.weights.reserve(static_cast<size_t>(hi) + 1);
  // C(s2, N) maintained incrementally across the scan.
  BigInt cs2 = 1;
  for (long N = 0; N <= hi; ++N) {
    BigInt inner = 0;
    long lo = std::max(0L, N - sc.s3);
    long ihi = std::min(sc.s1, N);
    for (long i = lo; i <= ihi; ++i) inner += binom(sc.s1, i) * binom(sc.s3, N - i) * binom(N, i);
    t.weights.push_back(cs2 * inner);
    cs2 *= sc.s2 - N;
    mpz_divexact_ui(cs2.get_mpz_t(), cs2.get_mpz_t(), static_cast<unsigned long>(N + 1));
  }
  return t;
}

BigInt sample_space_size(const Scenario& sc) {
  BigInt total = 0;
  for (long i = 0; i <= std::min(sc.s1, sc.s2); ++i)
    for (long j = 0; j <= std::min(sc.s2 - i, sc.s3); ++j) total += event_count(sc, i, j);
  return total;
}

ArgmaxReport argmax_of(const DistributionTable& table) {
  ArgmaxReport r;
  const auto& w = table.weights;
  size_t best = 0;
  for (size_t n = 1; n < w.size(); ++n)
    if (w[n] > w[best]) best = n;
  r.n_star = static_cast<long>(best);
  r.tied = best + 1 < w.size() && w[best + 1] == w[best];
  size_t i = 0;
  while (i + 1 < w.size() && w[i] <= w[i + 1]) ++i;
  r.unimodal = true;
  for (size_t j = i; j + 1 < w.size(); ++j)
    if (w[j] < w[j + 1]) {
      r.unimodal = false;
      break;
    }
  const Scenario& sc = table.scenario;
  r.union_mode = sc.s1 + sc.s2 + sc.s3 - r.n_star;
  return r;
}

ArgmaxReport argmax_scan(const Scenario& sc) { return argmax_of(distribution(sc)); }

}  // namespace crowdest
