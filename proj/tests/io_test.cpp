#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <vector>

#include "tribrace/catalog.hpp"
#include "tribrace/errors.hpp"
#include "tribrace/io.hpp"

using namespace tribrace;
using nlohmann::json;

namespace {

using Table = std::vector<std::vector<Elem>>;

Table nested(const FiniteGroup& G) {
  const int n = G.order();
  Table t(static_cast<size_t>(n), std::vector<Elem>(static_cast<size_t>(n)));
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) t[static_cast<size_t>(a)][static_cast<size_t>(b)] = G.mul(a, b);
  return t;
}

SkewBrace c4_klein_brace() {
  for (const SkewBrace& B : enumerate_braces(catalog::cyclic(4)))
    if (!B.is_trivial()) return B;
  throw std::logic_error("missing brace");
}

std::filesystem::path temp_file(const char* stem) {
  return std::filesystem::temp_directory_path() / stem;
}

}  // namespace

TEST_CASE("dense group files round trip") {
  FiniteGroup S3 = catalog::symmetric3();
  json j = io::group_to_json(S3);
  CHECK(j["order"] == 6);
  CHECK(j["table"].size() == 6);
  CHECK_FALSE(j.contains("semidirect"));
  FiniteGroup back = io::group_from_json(j);
  CHECK(back.table_equal(S3));
}

TEST_CASE("semidirect group files keep the factored form") {
  FiniteGroup D8 = catalog::dihedral(4);
  REQUIRE(D8.is_semidirect());
  json j = io::group_to_json(D8);
  REQUIRE(j.contains("semidirect"));
  CHECK(j["semidirect"]["base"]["order"] == 4);
  CHECK(j["semidirect"]["actor"]["order"] == 2);
  CHECK(j["semidirect"]["action"].size() == 2);
  FiniteGroup back = io::group_from_json(j);
  CHECK(back.is_semidirect());
  CHECK(back.table_equal(D8));
}

TEST_CASE("brace files round trip") {
  SkewBrace B = c4_klein_brace();
  json j = io::brace_to_json(B);
  CHECK(j["order"] == 4);
  SkewBrace back = io::brace_from_json(j);
  CHECK(back.add().table_equal(B.add()));
  CHECK(back.mul().table_equal(B.mul()));
}

TEST_CASE("tuple files round trip, with and without provenance") {
  SkewBrace B = trivial_brace(catalog::klein4());
  TrifactorisedGroup T = generalised_trifact(B, {0, 1});
  json j = io::trifact_to_json(T);
  REQUIRE(j.contains("provenance"));
  CHECK(j["provenance"]["N"] == std::vector<Elem>{0, 1});

  TrifactorisedGroup back = io::trifact_from_json(j);
  CHECK(back.tuple_equal(T));
  REQUIRE(back.provenance().has_value());
  CHECK(back.provenance()->kernel == std::vector<Elem>{0, 1});
  CHECK(back.provenance()->brace.add().table_equal(B.add()));

  json bare = j;
  bare.erase("provenance");
  TrifactorisedGroup plain = io::trifact_from_json(bare);
  CHECK(plain.tuple_equal(T));
  CHECK_FALSE(plain.provenance().has_value());
}

TEST_CASE("tampered provenance is rejected") {
  SkewBrace B = trivial_brace(catalog::klein4());
  json j = io::trifact_to_json(generalised_trifact(B, {0, 1}));
  json wrong_kernel = j;
  wrong_kernel["provenance"]["N"] = std::vector<Elem>{0, 2};
  CHECK_THROWS_AS((void)io::trifact_from_json(wrong_kernel), DomainError);
  json bad_kernel = j;
  bad_kernel["provenance"]["N"] = std::vector<Elem>{0, 7};
  CHECK_THROWS_AS((void)io::trifact_from_json(bad_kernel), DomainError);
}

TEST_CASE("the opposite A5 small tuple serializes in factored form") {
  SkewBrace B = opposite_brace(catalog::alternating5());
  TrifactorisedGroup T = small_trifact(B);
  REQUIRE(T.group().order() == 3600);
  json j = io::trifact_to_json(T);
  REQUIRE(j["group"].contains("semidirect"));
  // the file stores two order-60 factors, never the 3600x3600 table
  std::string text = io::dump_canonical(j);
  CHECK(text.size() < 200000);
  TrifactorisedGroup back = io::trifact_from_json(j);
  CHECK(back.tuple_equal(T));
}

TEST_CASE("canonical dump is byte identical across key insertion orders") {
  json a;
  a["order"] = 2;
  a["add"] = Table{{0, 1}, {1, 0}};
  a["mul"] = Table{{0, 1}, {1, 0}};
  json b;
  b["mul"] = Table{{0, 1}, {1, 0}};
  b["add"] = Table{{0, 1}, {1, 0}};
  b["order"] = 2;
  CHECK(io::dump_canonical(a) == io::dump_canonical(b));
  CHECK(io::dump_canonical(a).back() == '\n');
}

TEST_CASE("save and load through a real file") {
  const std::filesystem::path p = temp_file("tribrace_io_test_group.json");
  FiniteGroup G = catalog::cyclic(6);
  io::save_json(p.string(), io::group_to_json(G));
  CHECK(io::group_from_json(io::load_json(p.string())).table_equal(G));
  // overwriting replaces the content and leaves no temporary behind
  io::save_json(p.string(), io::group_to_json(catalog::cyclic(2)));
  CHECK(io::group_from_json(io::load_json(p.string())).order() == 2);
  CHECK_FALSE(std::filesystem::exists(p.string() + ".tmp"));
  std::filesystem::remove(p);
}

TEST_CASE("shape problems raise IoError, axiom failures DomainError") {
  CHECK_THROWS_AS((void)io::load_json("/nonexistent/file.json"), IoError);

  const std::filesystem::path p = temp_file("tribrace_io_test_bad.json");
  {
    std::ofstream out(p);
    out << "{ not json";
  }
  CHECK_THROWS_AS((void)io::load_json(p.string()), IoError);
  std::filesystem::remove(p);

  CHECK_THROWS_AS((void)io::group_from_json(json{{"order", 2}}), IoError);
  CHECK_THROWS_AS((void)io::group_from_json(json::array()), IoError);
  CHECK_THROWS_AS((void)io::group_from_json(json{{"order", 3}, {"table", Table{{0, 1}, {1, 0}}}}),
                  IoError);
  CHECK_THROWS_AS((void)io::group_from_json(json{{"order", 2}, {"table", "xx"}}), IoError);

  // valid shape, broken axiom: constant rows are not a group
  CHECK_THROWS_AS((void)io::group_from_json(json{{"order", 2}, {"table", Table{{0, 0}, {0, 0}}}}),
                  DomainError);
  SkewBrace K = c4_klein_brace();
  json good{{"order", 4}, {"add", nested(K.add())}, {"mul", nested(K.mul())}};
  CHECK_NOTHROW((void)io::brace_from_json(good));
  // two intact C4 tables whose lambda maps are not additive: brace law fails
  json law{{"order", 4},
           {"add", nested(catalog::cyclic(4))},
           {"mul", Table{{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 1, 0}, {3, 2, 0, 1}}}};
  CHECK_THROWS_AS((void)io::brace_from_json(law), DomainError);

  json tuple{{"group", io::group_to_json(catalog::klein4())},
             {"K", std::vector<Elem>{0, 1}},
             {"H", std::vector<Elem>{0, 1}},
             {"E", std::vector<Elem>{0, 1}}};
  // K∩E nontrivial: rejected as mathematics, not as shape
  CHECK_THROWS_AS((void)io::trifact_from_json(tuple), DomainError);
  tuple.erase("E");
  CHECK_THROWS_AS((void)io::trifact_from_json(tuple), IoError);
}

TEST_CASE("rejection messages carry the defect and witness") {
  json broken{{"order", 3},
              {"table", Table{{0, 1, 2}, {1, 2, 0}, {2, 0, 2}}}};
  try {
    (void)io::group_from_json(broken);
    FAIL("expected DomainError");
  } catch (const DomainError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("group rejected") != std::string::npos);
    CHECK(msg.find("(") != std::string::npos);
  }
}

TEST_CASE("map files hold a single image array") {
  json j{{"images", std::vector<Elem>{0, 2, 1}}};
  CHECK(io::images_from_json(j) == std::vector<Elem>{0, 2, 1});
  CHECK_THROWS_AS((void)io::images_from_json(json{{"image", 1}}), IoError);
}
