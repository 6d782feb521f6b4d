#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include <json.hpp>

#include "tribospin/families.hpp"

using namespace tribospin;

TEST_CASE("registry shape") {
  const auto& reg = family_registry();
  CHECK(reg.size() == 47);
  CHECK(concrete_families().size() == 38);

  std::set<std::string> names;
  int generic_count = 0;
  for (const auto& f : reg) {
    CHECK(names.insert(f.name).second);  // unique
    if (f.generic) ++generic_count;
  }
  CHECK(generic_count == 9);

  // every concrete family's group is one of the generic rows with identical (r,s,t)
  for (const FamilyDescriptor* f : concrete_families()) {
    const FamilyDescriptor& g = family_lookup(f->group);
    CHECK(g.generic);
    CHECK(g.params.r == f->params.r);
    CHECK(g.params.s == f->params.s);
    CHECK(g.params.t == f->params.t);
  }
}

TEST_CASE("lookup folds case, hyphens and spaces") {
  auto expect_params = [](const FamilyDescriptor& f, long a, long b, long c, long r, long s,
                          long t) {
    CHECK(f.params.a == Rational(a));
    CHECK(f.params.b == Rational(b));
    CHECK(f.params.c == Rational(c));
    CHECK(f.params.r == Rational(r));
    CHECK(f.params.s == Rational(s));
    CHECK(f.params.t == Rational(t));
  };

  expect_params(family_lookup("tribonacci"), 0, 1, 1, 1, 1, 1);
  expect_params(family_lookup("Tribonacci"), 0, 1, 1, 1, 1, 1);
  expect_params(family_lookup("perrin"), 3, 0, 2, 0, 1, 1);
  expect_params(family_lookup("Padovan-Lucas"), 3, 0, 2, 0, 1, 1);  // alias
  expect_params(family_lookup("3-primes"), 0, 1, 2, 2, 3, 5);
  expect_params(family_lookup("3 primes"), 0, 1, 2, 2, 3, 5);
  expect_params(family_lookup("THIRD ORDER PELL"), 0, 1, 2, 2, 1, 1);
  expect_params(family_lookup("van der laan"), 1, 0, 1, 0, 1, 1);

  CHECK(family_lookup("generalized-narayana").generic);
}

TEST_CASE("lookup failure lists nearest names") {
  try {
    family_lookup("tribonaci");
    FAIL("expected NotFoundError");
  } catch (const NotFoundError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("tribonacci") != std::string::npos);
    CHECK(msg.find("nearest") != std::string::npos);
  }
}

TEST_CASE("registry json round-trips through the documented schema") {
  const auto doc = nlohmann::json::parse(family_registry_json());
  CHECK(doc.is_array());
  CHECK(doc.size() == 47);
  for (const auto& row : doc) {
    for (const char* key : {"name", "group", "a", "b", "c", "r", "s", "t"}) CHECK(row.contains(key));
    if (!row["generic"].get<bool>()) {
      const FamilyDescriptor& f = family_lookup(row["name"].get<std::string>());
      CHECK(Rational::parse(row["a"].get<std::string>()) == f.params.a);
      CHECK(Rational::parse(row["r"].get<std::string>()) == f.params.r);
    }
  }

  // one spot row in full
  const auto it = std::find_if(doc.begin(), doc.end(), [](const nlohmann::json& row) {
    return row["name"] == "jacobsthal-padovan";
  });
  REQUIRE(it != doc.end());
  CHECK((*it)["a"] == "1");
  CHECK((*it)["b"] == "1");
  CHECK((*it)["c"] == "1");
  CHECK((*it)["r"] == "0");
  CHECK((*it)["s"] == "1");
  CHECK((*it)["t"] == "2");
  CHECK((*it)["group"] == "generalized-jacobsthal-padovan");
}
