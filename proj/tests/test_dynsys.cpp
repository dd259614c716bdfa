#include <doctest.h>

#include <atomic>
#include <random>
#include <thread>

#include "orbitsep/dynsys.hpp"
#include "orbitsep/expr.hpp"

using namespace orbitsep;

namespace {

SelfMap map2(std::string_view a, std::string_view b) {
  const std::vector<std::string> vars{"x", "y"};
  return SelfMap({parse_expression(a, vars, kRationals),
                  parse_expression(b, vars, kRationals)});
}

SelfMap map1(std::string_view a) {
  const std::vector<std::string> vars{"x"};
  return SelfMap({parse_expression(a, vars, kRationals)});
}

Point qpt(std::initializer_list<long> coords) {
  Point p;
  for (long c : coords) p.push_back(FieldElem::rational(c));
  return p;
}

}  // namespace

TEST_CASE("word_map composes left to right") {
  SemigroupSpec sq({map1("x^2")}, false);
  const SelfMap& m = sq.word_map(Word{{0, 0}});
  CHECK(map_equal(m, map1("x^4")));

  SemigroupSpec add({map2("x", "x + y")}, true);
  // by hand: (x, x+y) applied twice is (x, 2x + y)
  CHECK(map_equal(add.word_map(Word{{0, 0}}), map2("x", "2*x + y")));
  CHECK(map_equal(add.word_map(Word{}), SelfMap::identity(2, kRationals)));

  CHECK_THROWS_AS(sq.word_map(Word{}), UsageError);
}

TEST_CASE("word_map concatenation is composition") {
  SemigroupSpec spec({map2("x", "x + y"), map2("x + y", "y")}, false);
  std::mt19937_64 eng(5);
  std::uniform_int_distribution<std::size_t> gen(0, 1), len(1, 3);
  for (int trial = 0; trial < 10; ++trial) {
    Word w1, w2;
    for (std::size_t i = 0, n = len(eng); i < n; ++i)
      w1.indices.push_back(gen(eng));
    for (std::size_t i = 0, n = len(eng); i < n; ++i)
      w2.indices.push_back(gen(eng));
    Word cat = w1;
    cat.indices.insert(cat.indices.end(), w2.indices.begin(),
                       w2.indices.end());
    // left-to-right: w1 ++ w2 applies w1 first
    CHECK(map_equal(spec.word_map(cat),
                    spec.word_map(w2).after(spec.word_map(w1))));
  }
}

TEST_CASE("orbit_sample on the additive analogue") {
  SemigroupSpec add({map2("x", "x + y")}, true);
  OrbitSample s = orbit_sample(add, qpt({2, 0}), 2);
  // hand iteration: (2,0) -> (2,2) -> (2,4)
  REQUIRE(s.entries.size() == 3);
  CHECK(s.entries[0].second == qpt({2, 0}));
  CHECK(s.entries[1].second == qpt({2, 2}));
  CHECK(s.entries[2].second == qpt({2, 4}));
  CHECK(s.skipped.empty());
}

TEST_CASE("orbit_sample deduplicates fixed points") {
  SemigroupSpec sq({map1("x^2")}, false);
  OrbitSample s = orbit_sample(sq, {FieldElem::rational(1)}, 5);
  REQUIRE(s.entries.size() == 1);
  CHECK(s.entries[0].second == Point{FieldElem::rational(1)});
}

TEST_CASE("orbit_sample records indeterminate words") {
  const std::vector<std::string> vars{"x", "y"};
  SelfMap m({parse_expression("x", vars, kRationals),
             parse_expression("y/x", vars, kRationals)});
  SemigroupSpec spec({m}, false);
  OrbitSample s = orbit_sample(spec, qpt({0, 1}), 3);
  CHECK(s.entries.empty());
  REQUIRE(s.skipped.size() == 1);
  CHECK(s.skipped[0] == Word{{0}});
}

TEST_CASE("orbit entries reproduce themselves through their words") {
  SemigroupSpec spec({map2("x", "x + y"), map2("y", "x")}, true);
  OrbitSample s = orbit_sample(spec, qpt({3, 5}), 3);
  for (const auto& [w, p] : s.entries) {
    auto img = spec.word_map(w).eval(qpt({3, 5}));
    REQUIRE(img.has_value());
    CHECK(*img == p);
  }
}

TEST_CASE("orbit samples grow monotonically with max_len") {
  SemigroupSpec spec({map2("x", "x + y"), map2("y", "x")}, false);
  auto s2 = orbit_sample(spec, qpt({1, 2}), 2);
  auto s3 = orbit_sample(spec, qpt({1, 2}), 3);
  for (const auto& [w, p] : s2.entries) {
    bool found = false;
    for (const auto& [w3, p3] : s3.entries) found |= p3 == p;
    CHECK(found);
  }
}

TEST_CASE("polynomial generators never skip") {
  SemigroupSpec spec({map2("x^2 - y", "x + y"), map2("y", "x")}, true);
  auto s = orbit_sample(spec, qpt({2, 3}), 4);
  CHECK(s.skipped.empty());
}

TEST_CASE("orbit cap stops early") {
  SemigroupSpec dbl({map1("2*x")}, false);
  auto s = orbit_sample(dbl, {FieldElem::rational(1)}, 50, 10);
  CHECK(s.entries.size() == 10);
}

TEST_CASE("symbolic_iterates on worked examples") {
  SemigroupSpec add({map2("x", "x + y")}, true);
  auto it = symbolic_iterates(add, 2);
  REQUIRE(it.size() == 3);  // identity, (x, x+y), (x, 2x+y)
  CHECK(map_equal(it[0].second, SelfMap::identity(2, kRationals)));
  CHECK(map_equal(it[1].second, map2("x", "x + y")));
  CHECK(map_equal(it[2].second, map2("x", "2*x + y")));

  SemigroupSpec sq({map1("x^2")}, false);
  auto sqit = symbolic_iterates(sq, 3);
  REQUIRE(sqit.size() == 3);
  CHECK(map_equal(sqit[0].second, map1("x^2")));
  CHECK(map_equal(sqit[1].second, map1("x^4")));
  CHECK(map_equal(sqit[2].second, map1("x^8")));

  // commuting scalings: 2x, 3x give maps 2x,3x,4x,6x,9x with 6x merged
  SemigroupSpec comm({map1("2*x"), map1("3*x")}, false);
  auto cit = symbolic_iterates(comm, 2);
  CHECK(cit.size() == 5);
}

TEST_CASE("jacobian lint accepts dominant maps") {
  Rng rng(1);
  SemigroupSpec add({map2("x", "x + y")}, true);
  CHECK(add.jacobian_lint(rng));
  // constant second component: nowhere full rank
  SemigroupSpec degen({map2("x", "1")}, true);
  CHECK_FALSE(degen.jacobian_lint(rng));
}

TEST_CASE("word map memo is consistent under concurrent access") {
  SemigroupSpec spec({map2("x", "x + y"), map2("y", "x")}, true);
  std::vector<std::thread> workers;
  std::atomic<bool> ok{true};
  for (int t = 0; t < 4; ++t)
    workers.emplace_back([&spec, &ok, t] {
      for (std::size_t len = 1; len <= 5; ++len) {
        Word w;
        for (std::size_t i = 0; i < len; ++i)
          w.indices.push_back((t + i) % 2);
        const SelfMap& m = spec.word_map(w);
        if (m.nvars() != 2) ok = false;
      }
    });
  for (auto& th : workers) th.join();
  CHECK(ok);
}
