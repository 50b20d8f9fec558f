#include <doctest.h>

#include <map>
#include <random>
#include <sstream>

#include "crowdest/exact_core.hpp"

using namespace crowdest;

namespace {

int popcount(unsigned v) { return __builtin_popcount(v); }

// Brute-force oracle: enumerate every 4-tuple (A1, B1, B2, C2) of subsets
// with |A1| = |B1|, |B2| = |C2|, B1 and B2 disjoint, and histogram
// N = |B1| + |B2|. Feasible for coordinates up to ~4.
std::map<long, long> enumerate_sample_space(long s1, long s2, long s3) {
  std::map<long, long> hist;
  for (unsigned a = 0; a < (1u << s1); ++a)
    for (unsigned b1 = 0; b1 < (1u << s2); ++b1) {
      if (popcount(a) != popcount(b1)) continue;
      for (unsigned b2 = 0; b2 < (1u << s2); ++b2) {
        if (b1 & b2) continue;
        for (unsigned c = 0; c < (1u << s3); ++c) {
          if (popcount(b2) != popcount(c)) continue;
          hist[popcount(b1) + popcount(b2)] += 1;
        }
      }
    }
  return hist;
}

}  // namespace

TEST_CASE("scenario validation") {
  CHECK_THROWS(Scenario(-1, 0, 0));
  CHECK(Scenario(2, 3, 4).n_max() == 3);
  CHECK(Scenario(2, 30, 4).n_max() == 6);
}

TEST_CASE("event_count hand cases") {
  CHECK(event_count(Scenario(7, 9, 3), 0, 0) == 1);
  CHECK(event_count(Scenario(2, 2, 2), 1, 1) == 8);
  CHECK(event_count(Scenario(2, 2, 2), 2, 1) == 0);
  CHECK(event_count(Scenario(2, 2, 2), -1, 0) == 0);
}

TEST_CASE("distribution matches the brute-force sample space") {
  for (auto [s1, s2, s3] : {std::tuple<long, long, long>{2, 2, 2},
                            {1, 1, 1},
                            {2, 3, 2},
                            {3, 4, 2},
                            {0, 3, 2},
                            {2, 4, 0},
                            {4, 4, 4}}) {
    auto oracle = enumerate_sample_space(s1, s2, s3);
    DistributionTable t = distribution(Scenario(s1, s2, s3));
    for (long n = 0; n <= Scenario(s1, s2, s3).n_max(); ++n) {
      BigInt expect(oracle.count(n) ? oracle[n] : 0);
      CHECK(t.weight(n) == expect);
    }
  }
}

TEST_CASE("f_value hand cases") {
  CHECK(f_value(Scenario(3, 5, 4), 6) == 0);  // N > s2
  CHECK(f_value(Scenario(1, 1, 1), 1) == 2);
  CHECK(f_value(Scenario(4, 9, 4), -2) == 0);
  // Support is exactly [0, min(s2, s1+s3)].
  Scenario sc(3, 9, 2);
  for (long n = 0; n <= 5; ++n) CHECK(f_value(sc, n) > 0);
  CHECK(f_value(sc, 6) == 0);
}

TEST_CASE("f_value equals the event-count row sums") {
  std::mt19937 eng(5);
  std::uniform_int_distribution<long> pick(0, 60);
  for (int it = 0; it < 25; ++it) {
    Scenario sc(pick(eng), pick(eng), pick(eng));
    for (long n = 0; n <= sc.n_max(); n += 3) {
      BigInt total = 0;
      for (long i = 0; i <= n; ++i) total += event_count(sc, i, n - i);
      CHECK(f_value(sc, n) == total);
    }
  }
}

TEST_CASE("distribution total equals the sample-space size") {
  std::mt19937 eng(9);
  std::uniform_int_distribution<long> pick(0, 60);
  for (int it = 0; it < 15; ++it) {
    Scenario sc(pick(eng), pick(eng), pick(eng));
    CHECK(distribution(sc).total() == sample_space_size(sc));
  }
}

TEST_CASE("f_value is symmetric in s1 and s3") {
  std::mt19937 eng(13);
  std::uniform_int_distribution<long> pick(0, 40);
  for (int it = 0; it < 40; ++it) {
    long s1 = pick(eng), s2 = pick(eng), s3 = pick(eng);
    long n = pick(eng) % (s1 + s3 + 1);
    CHECK(f_value(Scenario(s1, s2, s3), n) == f_value(Scenario(s3, s2, s1), n));
  }
}

TEST_CASE("empty scenario") {
  DistributionTable t = distribution(Scenario(0, 0, 0));
  REQUIRE(t.weights.size() == 1);
  CHECK(t.weights[0] == 1);
  ArgmaxReport r = argmax_of(t);
  CHECK(r.n_star == 0);
  CHECK(!r.tied);
  CHECK(r.unimodal);
  CHECK(r.union_mode == 0);
}

TEST_CASE("argmax paper rows") {
  CHECK(argmax_scan(Scenario(15, 479, 15)).n_star == 29);  // tied with 30
  CHECK(argmax_scan(Scenario(15, 479, 15)).tied);
  CHECK(argmax_scan(Scenario(15, 480, 15)).n_star == 30);
  CHECK(argmax_scan(Scenario(15, 6, 15)).n_star == 6);
  CHECK(argmax_scan(Scenario(0, 17, 0)).n_star == 0);
  CHECK(argmax_scan(Scenario(15, 18, 15)).n_star == 13);
  CHECK(argmax_scan(Scenario(4, 10, 12)).n_star == 7);  // general-case row
}

TEST_CASE("peak dominates every other weight") {
  Scenario sc(15, 18, 15);
  DistributionTable t = distribution(sc);
  ArgmaxReport r = argmax_of(t);
  for (long n = 0; n <= sc.n_max(); ++n)
    if (n != r.n_star) CHECK(t.weight(r.n_star) >= t.weight(n));
  CHECK(t.weight(13) > t.weight(12));
  CHECK(t.weight(13) > t.weight(14));
}

TEST_CASE("unimodality flag on a scanned band") {
  for (long s1 : {1L, 7L, 13L})
    for (long s2 = 1; s2 <= 120; s2 += 7) CHECK(argmax_scan(Scenario(s1, s2, s1)).unimodal);
}

TEST_CASE("serialization") {
  DistributionTable t = distribution(Scenario(1, 2, 1));
  std::ostringstream os;
  t.write_csv(os);
  CHECK(os.str() == "N,weight\n0,1\n1,4\n2,2\n");
  CHECK(t.to_json() ==
        "{\"scenario\":{\"s1\":1,\"s2\":2,\"s3\":1},"
        "\"weights\":{\"0\":\"1\",\"1\":\"4\",\"2\":\"2\"}}");
}
