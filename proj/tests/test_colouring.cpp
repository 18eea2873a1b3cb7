#include <doctest.h>

#include <random>
#include <sstream>

#include "egc/colouring.hpp"
#include "egc/errors.hpp"
#include "egc/io.hpp"
#include "test_support.hpp"

using namespace egc;
using egc::testing::random_colouring;
using egc::testing::random_subset;
using egc::testing::uniform;

namespace {
std::vector<ColourId> ids(const Colouring& c) { return {c.colours().begin(), c.colours().end()}; }
}  // namespace

TEST_CASE("edge index follows lexicographic order") {
  const std::size_t n = 7;
  EdgeIndex e = 0;
  for (std::uint64_t i = 0; i < n; ++i)
    for (std::uint64_t j = i + 1; j < n; ++j) CHECK(edge_index(n, i, j) == e++);
  CHECK(e == edge_count(n));
}

TEST_CASE("rainbow") {
  CHECK(rainbow(1).palette_size() == 0);
  CHECK(rainbow(1).edges() == 0);
  CHECK(ids(rainbow(2)) == std::vector<ColourId>{0});
  CHECK(rainbow(2).palette_size() == 1);
  CHECK(ids(rainbow(4)) == std::vector<ColourId>{0, 1, 2, 3, 4, 5});
  CHECK(rainbow(4).palette_size() == 6);
  CHECK(colour_count(rainbow(5)) == 10);
}

TEST_CASE("trivial") {
  CHECK(ids(trivial(2)) == std::vector<ColourId>{0});
  CHECK(ids(trivial(3)) == std::vector<ColourId>{0, 0, 0});
  CHECK(trivial(1).palette_size() == 0);
  CHECK(colour_count(trivial(9)) == 1);
}

TEST_CASE("constructor rejects bad input") {
  CHECK_THROWS_AS(Colouring(0, 0, {}), InvalidArgument);
  CHECK_THROWS_AS(Colouring(3, 2, {0, 1}), InvalidArgument);
  CHECK_THROWS_AS(Colouring(3, 2, {0, 1, 2}), InvalidArgument);
  CHECK_THROWS_AS(rainbow(0), InvalidArgument);
}

TEST_CASE("canonicalize") {
  const Colouring raw(3, 6, {5, 5, 2});
  CHECK_FALSE(raw.is_canonical());
  const Colouring c = canonicalize(raw);
  CHECK(ids(c) == std::vector<ColourId>{0, 0, 1});
  CHECK(c.palette_size() == 2);
  CHECK(canonicalize(rainbow(3)) == rainbow(3));
  CHECK(canonicalize(Colouring(3, 8, {7, 7, 7})) == trivial(3));
}

TEST_CASE("restrict") {
  const std::vector<Vertex> pair{0, 1};
  CHECK(restrict(rainbow(4), pair) == rainbow(2));
  const std::vector<Vertex> triple{1, 3, 4};
  CHECK(restrict(trivial(5), triple) == trivial(3));
  const Colouring c = Colouring(4, 9, {8, 3, 8, 1, 1, 3});
  const std::vector<Vertex> all{0, 1, 2, 3};
  CHECK(restrict(c, all) == canonicalize(c));

  const std::vector<Vertex> dup{1, 1};
  const std::vector<Vertex> out_of_range{0, 4};
  CHECK_THROWS_AS(restrict(c, dup), InvalidArgument);
  CHECK_THROWS_AS(restrict(c, out_of_range), InvalidArgument);
  CHECK_THROWS_AS(restrict(c, std::vector<Vertex>{}), InvalidArgument);
}

TEST_CASE("restriction composes and never adds colours") {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 300; ++iter) {
    const std::size_t n = uniform(rng, 2, 14);
    const Colouring c = random_colouring(rng, n, uniform(rng, 1, 12));
    const auto s1 = random_subset(rng, n, uniform(rng, 1, n));
    const auto pos = random_subset(rng, s1.size(), uniform(rng, 1, s1.size()));
    std::vector<Vertex> s2;
    for (Vertex p : pos) s2.push_back(s1[p]);
    CHECK(restrict(restrict(c, s1), pos) == restrict(c, s2));
    CHECK(colour_count(restrict(c, s1)) <= colour_count(c));
  }
}

TEST_CASE("canonicalize is idempotent and preserves colour equality") {
  std::mt19937_64 rng(12);
  for (int iter = 0; iter < 100; ++iter) {
    const std::size_t n = uniform(rng, 1, 10);
    const std::size_t k = uniform(rng, 1, 30);
    std::vector<ColourId> raw(edge_count(n));
    for (auto& x : raw) x = static_cast<ColourId>(uniform(rng, 0, k - 1));
    const Colouring c(n, k, raw);
    const Colouring d = canonicalize(c);
    CHECK(d.is_canonical());
    CHECK(canonicalize(d) == d);
    CHECK(d.palette_size() == colour_count(c));
    for (EdgeIndex e = 0; e < c.edges(); ++e)
      for (EdgeIndex f = 0; f < c.edges(); ++f)
        CHECK((c.at_edge(e) == c.at_edge(f)) == (d.at_edge(e) == d.at_edge(f)));
  }
}

TEST_CASE("EGC round trip") {
  std::mt19937_64 rng(13);
  for (int iter = 0; iter < 50; ++iter) {
    const Colouring c = random_colouring(rng, uniform(rng, 1, 20), uniform(rng, 1, 40));
    std::stringstream buf;
    write_colouring(buf, c);
    const std::string first = buf.str();
    const Colouring back = read_colouring(buf);
    CHECK(back == c);
    std::ostringstream again;
    write_colouring(again, back);
    CHECK(again.str() == first);
  }
}

TEST_CASE("EGC layout") {
  std::ostringstream out;
  write_colouring(out, rainbow(3));
  CHECK(out.str() == "egc 1\nn 3\ncolours 3\n0 1\n2\n");
  std::ostringstream one;
  write_colouring(one, rainbow(1));
  CHECK(one.str() == "egc 1\nn 1\ncolours 0\n");
}

TEST_CASE("EGC parse errors") {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return read_colouring(in);
  };
  CHECK_THROWS_AS(parse("egc 2\nn 2\ncolours 1\n0\n"), ParseError);
  CHECK_THROWS_AS(parse("egc 1\nn 3\ncolours 1\n0 0\n"), ParseError);
  CHECK_THROWS_AS(parse("egc 1\nn 2\ncolours 1\n1\n"), ParseError);
  CHECK_THROWS_AS(parse("egc 1\nn 2\ncolours 1\nx\n"), ParseError);
  CHECK_THROWS_AS(parse("egc 1\nn 2\ncolours 1\n0 0\n"), ParseError);
  CHECK_THROWS_AS(parse("egc 1\nn 0\ncolours 0\n"), ParseError);
  CHECK(parse("egc 1 n 2 colours 1 0 meta 1 2 1 0 * * 0 *") == trivial(2));
}
