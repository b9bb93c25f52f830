#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "shomfly/catalog.hpp"
#include "shomfly/sha256.hpp"
#include "shomfly/traces.hpp"

using namespace shomfly;

TEST_CASE("sha256 known vectors") {
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  CHECK(sha256_hex(std::string(64, 'a')) ==
        "ffe054fe7ae0cb6dc65c3af9b61d5209f439851db43d0ba5997337df154668eb");
}

TEST_CASE("catalog parsing and validation") {
  auto entries = parse_catalog(
      "# comment\n"
      "unknot\t1\tn=1\t1\n"
      "hopf\t2\ts1 s1\t2\t-1*t^3*x^-1 + 1*t*x + 1*t*x^-1\n");
  REQUIRE(entries.size() == 2);
  CHECK(entries[0].name == "unknot");
  CHECK(entries[1].expected_invariant.substr(0, 9) == "-1*t^3*x^");
  CHECK(format_braid(entries[1].word) == "s1^2");

  CHECK_THROWS_AS(parse_catalog("bad\t2\ts1\n"), CatalogError);          // missing field
  CHECK_THROWS_AS(parse_catalog("bad\t2\tzz\t1\n"), CatalogError);       // word
  CHECK_THROWS_AS(parse_catalog("bad\t2\ts1\t2\n"), CatalogError);       // components
  try {
    parse_catalog("ok\t1\tn=1\t1\nbad\tx\tn=1\t1\n");
    CHECK(false);
  } catch (const CatalogError& e) {
    CHECK(e.line_number == 2);
  }
}

TEST_CASE("builtin catalog entries are consistent") {
  for (const CatalogEntry& e : builtin_catalog()) {
    BraidWord back = parse_braid(format_braid(e.word));
    CHECK(back == e.word);
    CHECK(closure_components(e.word) == e.components);
  }
  CHECK(find_builtin("trefoil").has_value());
  CHECK(!find_builtin("nonexistent").has_value());
}

TEST_CASE("cache file round-trip feeds the trace store") {
  std::string path = "test_cache_tmp.tsv";
  std::remove(path.c_str());
  {
    CacheFile cache(path);
    cache.record(sha256_hex("k1"), RationalFn::variable(Var::q) + RationalFn(1));
    cache.record(sha256_hex("k1"), RationalFn(7));  // duplicate keys keep the first value
    CHECK(cache.size() == 1);
  }
  {
    CacheFile reloaded(path);
    REQUIRE(reloaded.size() == 1);
    RationalFn v;
    REQUIRE(reloaded.lookup(sha256_hex("k1"), v));
    CHECK(v == RationalFn::variable(Var::q) + RationalFn(1));
  }

  // cached trace values must be bit-identical to uncached ones
  BraidWord w = parse_braid("t1 s1 s2 t2");
  clear_word_trace_memo();
  clear_trace_store();
  auto plain = trace_vector(w);

  std::remove(path.c_str());
  install_cache_file(path);
  clear_word_trace_memo();
  auto first = trace_vector(w);   // populates the file
  clear_word_trace_memo();
  auto second = trace_vector(w);  // reads it back
  clear_trace_store();
  REQUIRE(plain.size() == first.size());
  for (size_t i = 0; i < plain.size(); ++i) {
    CHECK(to_text(plain[i]) == to_text(first[i]));
    CHECK(to_text(plain[i]) == to_text(second[i]));
  }
  std::remove(path.c_str());
}
