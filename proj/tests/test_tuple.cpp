#include <doctest.h>

#include <algorithm>
#include <compare>
#include <vector>

#include "cyc/error.hpp"
#include "cyc/tuple.hpp"

using namespace cyc;

namespace {

// A tuple (k_1..k_m) : [m] -> [n] read as the monotone surjection-like map
// [n] -> [m] sending each output to the input block that produced it.
std::vector<std::size_t> block_map(const Tuple& k) {
  std::vector<std::size_t> f;
  for (std::size_t i = 0; i < k.size(); ++i)
    for (unsigned j = 0; j < k[i]; ++j) f.push_back(i);
  return f;
}

Tuple from_block_map(const std::vector<std::size_t>& f, std::size_t m) {
  std::vector<unsigned> counts(m, 0);
  for (auto i : f) ++counts[i];
  return Tuple(counts);
}

// r o k by composing the block maps the other way round.
Tuple compose_oracle(const Tuple& r, const Tuple& k) {
  const auto fk = block_map(k);
  const auto fr = block_map(r);
  std::vector<std::size_t> f;
  for (auto j : fr) f.push_back(fk[j]);
  return from_block_map(f, k.size());
}

void all_tuples(std::size_t len, std::size_t sum, std::vector<unsigned>& cur, std::vector<Tuple>& out) {
  if (cur.size() == len) {
    if (sum == 0) out.emplace_back(cur);
    return;
  }
  for (unsigned v = 0; v <= sum; ++v) {
    cur.push_back(v);
    all_tuples(len, sum - v, cur, out);
    cur.pop_back();
  }
}

// Every tuple with domain + codomain <= bound.
std::vector<Tuple> tuples_up_to(std::size_t bound) {
  std::vector<Tuple> out;
  for (std::size_t m = 0; m <= bound; ++m)
    for (std::size_t n = 0; m + n <= bound; ++n) {
      std::vector<unsigned> cur;
      all_tuples(m, n, cur, out);
    }
  return out;
}

}  // namespace

TEST_CASE("worked composition example") {
  CHECK(compose(Tuple{2, 0, 3, 1, 0, 4, 1}, Tuple{0, 2, 1, 2, 0, 2}) == Tuple{0, 2, 3, 1, 0, 5});
  CHECK(compose_oracle(Tuple{2, 0, 3, 1, 0, 4, 1}, Tuple{0, 2, 1, 2, 0, 2}) == Tuple{0, 2, 3, 1, 0, 5});
}

TEST_CASE("small compositions") {
  CHECK(compose(Tuple{0, 1}, Tuple{2}) == Tuple{1});
  CHECK(compose(Tuple{1, 0}, Tuple{2}) == Tuple{1});
  const Tuple r{2, 0, 3};
  CHECK(compose(r, Tuple::identity(3)) == r);
  CHECK(compose(Tuple::identity(5), r) == r);
}

TEST_CASE("k' applied to one factor of k gives k + k' - 1") {
  for (unsigned k = 1; k <= 5; ++k)
    for (unsigned kp = 0; kp <= 4; ++kp)
      for (unsigned pos = 0; pos < k; ++pos) {
        std::vector<unsigned> r(k, 1);
        r[pos] = kp;
        CHECK(compose(Tuple(r), Tuple{k}) == Tuple{k + kp - 1});
      }
}

TEST_CASE("compose rejects a shape mismatch") {
  CHECK_THROWS_AS(compose(Tuple{1, 1}, Tuple{3}), ShapeError);
  CHECK_THROWS_AS(compose(Tuple{2}, Tuple{0}), ShapeError);
}

TEST_CASE("composition agrees with the block-map oracle, is associative and interchanges with tensor") {
  const auto all = tuples_up_to(8);
  std::size_t pairs = 0, triples = 0, interchanges = 0;
  for (const auto& k : all)
    for (const auto& r : all) {
      if (k.codomain() != r.domain()) continue;
      ++pairs;
      const Tuple rk = compose(r, k);
      REQUIRE(rk == compose_oracle(r, k));
      CHECK(rk.domain() == k.domain());
      CHECK(rk.codomain() == r.codomain());
      for (const auto& s : all) {
        if (r.codomain() != s.domain()) continue;
        ++triples;
        REQUIRE(compose(s, rk) == compose(compose(s, r), k));
      }
    }
  // Interchange on a smaller window to keep the quadruple loop cheap.
  const auto small = tuples_up_to(5);
  for (const auto& k : small)
    for (const auto& r : small) {
      if (k.codomain() != r.domain()) continue;
      for (const auto& k2 : small)
        for (const auto& r2 : small) {
          if (k2.codomain() != r2.domain()) continue;
          ++interchanges;
          REQUIRE(tensor(compose(r, k), compose(r2, k2)) == compose(tensor(r, r2), tensor(k, k2)));
        }
    }
  CHECK(pairs > 1000);
  CHECK(triples > pairs);
  CHECK(interchanges > 1000);
}

TEST_CASE("tensor is concatenation") {
  CHECK(tensor(Tuple{0, 2}, Tuple{1}) == Tuple{0, 2, 1});
  CHECK(tensor(Tuple{}, Tuple{3, 0}) == Tuple{3, 0});
  CHECK(tensor(tensor(Tuple{2}, Tuple{0}), Tuple{1}) == Tuple{2, 0, 1});
  CHECK(tensor(Tuple{2}, tensor(Tuple{0}, Tuple{1})) == Tuple{2, 0, 1});
}

TEST_CASE("parse and print") {
  CHECK(Tuple::parse("0004") == Tuple{0, 0, 0, 4});
  CHECK(Tuple::parse("1,12,0") == Tuple{1, 12, 0});
  CHECK(Tuple{1, 12, 0}.str() == "1,12,0");
  CHECK(Tuple{2, 1, 0}.str() == "210");
  CHECK_THROWS_AS(Tuple::parse("0x"), ShapeError);
}

TEST_CASE("lexicographic order") {
  CHECK(lex_cmp(Tuple::parse("0004"), Tuple::parse("0040")) == std::strong_ordering::less);
  CHECK(lex_cmp(Tuple::parse("11"), Tuple::parse("11")) == std::strong_ordering::equal);
  std::vector<Tuple> v{Tuple::parse("20"), Tuple::parse("02"), Tuple::parse("11")};
  std::sort(v.begin(), v.end());
  CHECK(v == std::vector<Tuple>{Tuple::parse("02"), Tuple::parse("11"), Tuple::parse("20")});
  CHECK_THROWS_AS(lex_cmp(Tuple{1}, Tuple{1, 0}), ShapeError);
}

TEST_CASE("twins") {
  CHECK(twin_key(Tuple::parse("0030")) == Tuple::parse("0020"));
  CHECK(twin_key(Tuple::parse("1020")) == Tuple::parse("0020"));
  CHECK(are_twins(Tuple::parse("0030"), Tuple::parse("1020")));
  CHECK(twin_key(Tuple::parse("1111")) == Tuple::parse("0111"));
  CHECK(twin_key(Tuple::parse("0004")) == twin_key(Tuple::parse("1003")));
  CHECK_FALSE(are_twins(Tuple::parse("02"), Tuple::parse("20")));
  CHECK_THROWS_AS(twin_key(Tuple::parse("000")), DomainError);
}

TEST_CASE("abc encoding") {
  CHECK(abc_encode(Tuple::parse("02")) == "a");
  CHECK(abc_encode(Tuple::parse("11")) == "b");
  CHECK(abc_encode(Tuple::parse("20")) == "c");
  CHECK(abc_encode(Tuple::parse("2110")) == "ccc");
  CHECK(abc_encode(Tuple::parse("111")) == "bb");
  CHECK(abc_encode(Tuple::parse("021")) == "ab");
  CHECK(abc_encode(Tuple::parse("030")) == "ac");
  CHECK_FALSE(abc_encode(Tuple::parse("003")));
  CHECK_FALSE(abc_encode(Tuple::parse("300")));
  CHECK_FALSE(abc_encode(Tuple::parse("2")));
}

TEST_CASE("no a or b follows a c in any encodable endomorphism") {
  for (std::size_t n = 2; n <= 8; ++n) {
    std::size_t encodable = 0;
    for (const auto& s : endomorphisms(n)) {
      const auto code = abc_encode(s);
      if (!code) continue;
      ++encodable;
      CHECK(code->size() == n - 1);
      const auto c = code->find('c');
      if (c != std::string::npos) CHECK(code->find_first_not_of('c', c) == std::string::npos);
    }
    CHECK(encodable > 0);
  }
}

TEST_CASE("endomorphisms count compositions of n into n parts") {
  // C(2n-1, n)
  const std::size_t expected[] = {1, 1, 3, 10, 35, 126};
  for (std::size_t n = 0; n <= 5; ++n) CHECK(endomorphisms(n).size() == expected[n]);
  for (const auto& s : endomorphisms(4)) {
    CHECK(s.domain() == 4);
    CHECK(s.codomain() == 4);
  }
}
