#include <random>

#include "doctest.h"
#include "wang/color.hpp"

using namespace wang;

TEST_CASE("canonical encodings") {
  CHECK(Color::atom("H").encode() == "atom:H");
  CHECK(Color::seq({0, 1, 1}).encode() == "seq:0.1.1");
  CHECK(Color::seq({}).encode() == "seq:");
  CHECK(Color::indexed("c", {1, 3}).encode() == "idx:c.1.3");
  CHECK(Color::seq_ext({0, 1}, 3).encode() == "seqx:3:0.1");
  CHECK(Color::atom("B").tinted(2).encode() == "tint:2:(atom:B)");
  CHECK(Color::atom("B").tinted(1).tinted(2).encode() == "tint:2:(tint:1:(atom:B))");
}

TEST_CASE("equality is structural") {
  CHECK(Color::atom("0") == Color::atom("0"));
  CHECK(Color::atom("0") != Color::seq({0}));
  CHECK(Color::seq({0, 1}) != Color::seq_ext({0}, 1));
  CHECK(Color::indexed("c", {1, 2}) != Color::indexed("c", {2, 1}));
  CHECK(Color::atom("x").tinted(1) != Color::atom("x").tinted(2));
}

TEST_CASE("decode inverts encode on random structured labels") {
  std::mt19937 gen(42);
  auto rnd_seq = [&](int max_len) {
    std::vector<int> s(gen() % static_cast<unsigned>(max_len + 1));
    for (auto& v : s) v = static_cast<int>(gen() % 7);
    return s;
  };
  for (int i = 0; i < 500; ++i) {
    Color c;
    switch (gen() % 4) {
      case 0: c = Color::atom("a" + std::to_string(gen() % 40)); break;
      case 1: c = Color::seq(rnd_seq(6)); break;
      case 2: c = Color::seq_ext(rnd_seq(5), static_cast<int>(gen() % 5)); break;
      default: c = Color::indexed(gen() % 2 ? "c" : "M", rnd_seq(3)); break;
    }
    if (gen() % 3 == 0) c = c.tinted(static_cast<int>(gen() % 4) + 1);
    if (gen() % 7 == 0) c = c.tinted(static_cast<int>(gen() % 4) + 1);
    CAPTURE(c.encode());
    CHECK(Color::decode(c.encode()) == c);
  }
}

TEST_CASE("negative numbers and punctuation in atoms survive round-trips") {
  for (const char* label : {"-2", "-1", "0'", "1/2"}) {
    Color c = Color::atom(label);
    CHECK(Color::decode(c.encode()) == c);
  }
}

TEST_CASE("malformed encodings are rejected") {
  CHECK_THROWS_AS(Color::decode("nonsense"), std::invalid_argument);
  CHECK_THROWS_AS(Color::decode("atom:"), std::invalid_argument);
  CHECK_THROWS_AS(Color::decode("tint:1:(atom:B"), std::invalid_argument);
  CHECK_THROWS_AS(Color::decode("seq:0.1junk"), std::invalid_argument);
  CHECK_THROWS_AS(Color::atom("a:b"), std::invalid_argument);
}
