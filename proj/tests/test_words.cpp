#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "gdbw/word.hpp"
#include "helpers.hpp"

using namespace gdbw;

namespace {
CircularWord w2(const std::string& s) { return parse_word(s, 2); }
}  // namespace

TEST_CASE("integer power helpers", "[words]") {
  CHECK(ipow(2, 10) == 1024);
  CHECK(ipow(7, 0) == 1);
  CHECK(floor_log(2, 1) == 0);
  CHECK(floor_log(2, 11) == 3);
  CHECK(floor_log(2, 16) == 4);  // exact powers must not round down
  CHECK(floor_log(3, 8) == 1);
  CHECK(floor_log(3, 9) == 2);
  CHECK(pow_capped(2, 40, 100) == 100);
  CHECK(pow_capped(2, 3, 100) == 8);
  CHECK(pow_at_most(10, 18, INT64_MAX));
  CHECK_FALSE(pow_at_most(10, 19, INT64_MAX));
}

TEST_CASE("alphabet and word validation", "[words]") {
  CHECK_THROWS_AS(Alphabet(1), std::invalid_argument);
  CHECK_THROWS_AS(CircularWord({}, 2), std::invalid_argument);
  CHECK_THROWS_AS(CircularWord({0, 2}, 2), std::invalid_argument);
  CHECK_NOTHROW(CircularWord({0, 1}, 2));
}

TEST_CASE("conjugates", "[words]") {
  auto names = [](const std::vector<CircularWord>& ws) {
    std::vector<std::string> out;
    for (const auto& w : ws) out.push_back(to_string(w));
    return out;
  };
  CHECK(names(conjugates(w2("001"))) ==
        std::vector<std::string>{"001", "010", "100"});
  CHECK(names(conjugates(w2("0101"))) == std::vector<std::string>{"0101", "1010"});
  CHECK(names(conjugates(parse_word("012", 3))) ==
        std::vector<std::string>{"012", "120", "201"});
  CHECK(conjugates(w2("0000")).size() == 1);
}

TEST_CASE("canonical rotation", "[words]") {
  CHECK(to_string(canonical_rotation(w2("110"))) == "011");
  CHECK(to_string(canonical_rotation(w2("0000"))) == "0000");
  CHECK(to_string(canonical_rotation(w2("1001"))) == "0011");
  CHECK(canonical_rotation(canonical_rotation(w2("10110"))) ==
        canonical_rotation(w2("10110")));
}

TEST_CASE("canonical rotation matches the all-rotations minimum", "[words]") {
  // exhaustive over short binary words
  for (i64 n = 1; n <= 10; ++n) {
    for (i64 bits = 0; bits < (i64{1} << n); ++bits) {
      const CircularWord w = unpack_bits(static_cast<std::uint64_t>(bits), n);
      REQUIRE(canonical_rotation(w) == testing::naive_least_rotation(w));
    }
  }
  // randomized over larger alphabets and lengths
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const i64 k = 2 + rng() % 5;
    const i64 n = 1 + rng() % 40;
    const CircularWord w = testing::random_word(rng, n, k);
    REQUIRE(canonical_rotation(w) == testing::naive_least_rotation(w));
  }
}

TEST_CASE("canonical rotation is rotation-invariant", "[words]") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const CircularWord w = testing::random_word(rng, 1 + rng() % 24, 2 + rng() % 3);
    const CircularWord canon = canonical_rotation(w);
    for (i64 j = 0; j < w.size(); ++j)
      REQUIRE(canonical_rotation(w.rotated(j)) == canon);
  }
}

TEST_CASE("circular factors", "[words]") {
  const CircularWord w = w2("10011110000");
  const auto f3 = circular_factors(w, 3);
  CHECK(f3.size() == 7);
  CHECK(f3.count({1, 0, 1}) == 0);  // the one missing window of length 3
  CHECK(circular_factors(w, 4).size() == 11);
  CHECK(circular_factors(w2("0011"), 2) ==
        std::set<std::vector<int>>{{0, 0}, {0, 1}, {1, 1}, {1, 0}});
  CHECK(circular_factors(w, 0) == std::set<std::vector<int>>{{}});
  CHECK_THROWS_AS(circular_factors(w, 12), std::out_of_range);
  CHECK_THROWS_AS(circular_factors(w, -1), std::out_of_range);
}

TEST_CASE("gamma values", "[words]") {
  CHECK(gamma(w2("0001011"), 3) == 7);
  CHECK(gamma(w2("10011110000"), 0) == 1);
  CHECK(gamma(w2("0000"), 2) == 1);
  CHECK_THROWS_AS(gamma(w2("01"), 3), std::out_of_range);
}

TEST_CASE("gamma agrees with materialized windows", "[words]") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 120; ++trial) {
    const i64 k = 2 + rng() % 4;
    const i64 n = 1 + rng() % 30;
    const CircularWord w = testing::random_word(rng, n, k);
    for (i64 i = 0; i <= n; ++i) REQUIRE(gamma(w, i) == testing::naive_gamma(w, i));
  }
  // long ternary word: k^i overflows the direct table, exercising the
  // hashed-window path
  const CircularWord longw = testing::random_word(rng, 40, 3);
  for (i64 i = 14; i <= 40; i += 5)
    REQUIRE(gamma(longw, i) == testing::naive_gamma(longw, i));
}

TEST_CASE("gamma profile bounds and monotonicity", "[words]") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 150; ++trial) {
    const i64 k = 2 + rng() % 3;
    const i64 n = 1 + rng() % 24;
    const CircularWord w = testing::random_word(rng, n, k);
    const GammaProfile p = gamma_profile(w);
    REQUIRE(static_cast<i64>(p.values.size()) == n + 1);
    REQUIRE(p.values[0] == 1);
    for (i64 i = 0; i <= n; ++i) REQUIRE(p.values[i] <= pow_capped(k, i, n));
    for (i64 i = 0; i < n; ++i) REQUIRE(p.values[i] <= p.values[i + 1]);
    REQUIRE(static_cast<i64>(conjugates(w).size()) == p.values[n]);
  }
}

TEST_CASE("generalized de Bruijn predicate", "[words]") {
  CHECK_FALSE(is_generalized_de_bruijn(w2("10011110000")));
  CHECK(is_generalized_de_bruijn(w2("00001011101")));
  CHECK(is_generalized_de_bruijn(w2("0")));
  CHECK(is_generalized_de_bruijn(w2("1")));
  CHECK(is_generalized_de_bruijn(w2("0011")));
  CHECK_FALSE(is_generalized_de_bruijn(w2("0101")));
  CHECK(is_generalized_de_bruijn(parse_word("012", 3)));
}

TEST_CASE("two-condition predicate equals the definition, exhaustively", "[words]") {
  for (i64 n = 1; n <= 14; ++n) {
    for (i64 bits = 0; bits < (i64{1} << n); ++bits) {
      const CircularWord w = unpack_bits(static_cast<std::uint64_t>(bits), n);
      const bool expected = testing::naive_is_gdb(w);
      REQUIRE(is_generalized_de_bruijn(w) == expected);
      if (n <= 10) REQUIRE(is_generalized_de_bruijn_by_definition(w) == expected);
    }
  }
}

TEST_CASE("factor sums", "[words]") {
  CHECK(factor_sum(w2("0011")) == 15);
  CHECK(expected_factor_sum(4, 2) == 15);
  CHECK(expected_factor_sum(16, 2) == 223);
  CHECK(expected_factor_sum(1, 2) == 2);
  CHECK_THROWS_AS(expected_factor_sum(0, 2), std::invalid_argument);
}

TEST_CASE("word parsing and formatting", "[words]") {
  CHECK(to_string(parse_word("0011")) == "0011");
  CHECK(parse_word("0011").alphabet_size() == 2);
  CHECK(parse_word("0011", 3).alphabet_size() == 3);
  CHECK(parse_word("0000").alphabet_size() == 2);  // all-equal still needs k >= 2
  CHECK(parse_word("0,1,11", 12).alphabet_size() == 12);
  CHECK(to_string(parse_word("0,1,11", 12)) == "0,1,11");
  CHECK(parse_word("012\n").size() == 3);
  CHECK_THROWS_AS(parse_word("012", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("01a"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("0,,1", 3), std::invalid_argument);
}

TEST_CASE("packed binary representation round-trips", "[words]") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const i64 n = 1 + rng() % 64;
    const CircularWord w = testing::random_word(rng, n, 2);
    REQUIRE(unpack_bits(pack_bits(w), n) == w);
  }
  CHECK_THROWS_AS(pack_bits(parse_word("012", 3)), std::invalid_argument);
}
