#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>

#include "hlat/io.hpp"

using namespace hlat;
using io::Json;

TEST(IoLaurent, Schema) {
  const auto p = parse_laurent("3 + x + x^-1");
  const Json j = io::to_json(p);
  EXPECT_EQ(j, Json::parse(R"({"0":3,"1":1,"-1":1})"));
  EXPECT_EQ(io::laurent_from_json(j), p);
  EXPECT_EQ(io::laurent_from_json(Json("x^2 + x^-2")), LaurentPoly::symmetric_power(2));
  EXPECT_EQ(io::laurent_from_json(Json::object()), LaurentPoly());
  EXPECT_EQ(io::laurent_from_json(Json::parse(R"({"2":0})")), LaurentPoly());
}

TEST(IoLaurent, Rejections) {
  for (const char* bad : {R"({"a":1})", R"({"1":1.5})", R"({"1x":1})", R"([1,2])", R"({"1":"1"})", R"({"":1})",
                          R"({"1":99999999999999999999})"})
    EXPECT_THROW(io::laurent_from_json(Json::parse(bad)), InputError) << bad;
}

TEST(IoCyclic, Schema) {
  const CyclicElement c(3, {2, 2, 2});
  EXPECT_EQ(io::to_json(c), Json::parse(R"({"n":3,"coeffs":[2,2,2]})"));
  EXPECT_EQ(io::cyclic_from_json(io::to_json(c)), c);
  EXPECT_THROW(io::cyclic_from_json(Json::parse(R"({"n":3,"coeffs":[1,2]})")), InputError);
  EXPECT_THROW(io::cyclic_from_json(Json::parse(R"({"n":0,"coeffs":[]})")), InputError);
}

TEST(IoForms, RoundTrip) {
  for (Int k = 1; k <= 3; ++k) {
    const auto f = build_L_k(k);
    const Json j = io::to_json(f);
    EXPECT_EQ(j["size"], 4);
    EXPECT_EQ(io::hermitian_from_json(j), f);
    EXPECT_EQ(io::hermitian_from_json(Json::parse(j.dump())), f);
  }
  const auto c = reduce_form(build_L(), 3);
  const Json cj = io::to_json(c);
  EXPECT_EQ(cj["n"], 3);
  EXPECT_EQ(io::cyclic_form_from_json(cj), c);
}

TEST(IoForms, CyclicEntriesInAnySpelling) {
  const Json j = Json::parse(R"({"n":2,"size":2,"entries":[[[1,0],{"n":2,"coeffs":[0,1]}],["x",{"0":1}]]})");
  const auto f = io::cyclic_form_from_json(j);
  EXPECT_EQ(f(0, 1), CyclicElement::x_power(2, 1));
  EXPECT_EQ(f(1, 0), CyclicElement::x_power(2, 1));
  EXPECT_EQ(f(1, 1), CyclicElement::constant(2, 1));
}

TEST(IoForms, Rejections) {
  EXPECT_THROW(io::hermitian_from_json(Json::parse(R"({"size":2,"entries":[[{"0":1}]]})")), InputError);
  EXPECT_THROW(io::hermitian_from_json(Json::parse(R"({"entries":[]})")), InputError);
  EXPECT_THROW(io::hermitian_from_json(Json::parse(R"({"size":1,"entries":[[{"1":1}]]})")), DomainError);
  EXPECT_THROW(io::cyclic_form_from_json(Json::parse(R"({"n":2,"size":1,"entries":[[{"n":3,"coeffs":[1,0,0]}]]})")),
               InputError);
}

TEST(IoGram, RoundTrip) {
  const auto g = transfer_gram(build_L(), 2);
  const Json j = io::to_json(g);
  EXPECT_EQ(j["rank"], 8);
  EXPECT_EQ(io::gram_from_json(j), g);
  EXPECT_EQ(io::to_json(GramMatrix{{2, 1}, {1, 1}}).dump(), R"({"gram":[[2,1],[1,1]],"rank":2})");
}

TEST(IoGram, Rejections) {
  for (const char* bad : {R"({"rank":2,"gram":[[1,0],[1,1]]})", R"({"rank":2,"gram":[[1,0]]})",
                          R"({"rank":2,"gram":[[1,0],[0]]})", R"({"rank":-1,"gram":[]})", R"({"gram":[[1]]})",
                          R"({"rank":1,"gram":[[true]]})", R"({"rank":1,"gram":[[1.0]]})", R"([])"})
    EXPECT_THROW(io::gram_from_json(Json::parse(bad)), InputError) << bad;
}

TEST(IoReports, Schemas) {
  EnumerationResult r;
  r.bound = 2;
  r.vectors = {{0, 1}, {1, -1}};
  EXPECT_EQ(io::to_json(r), Json::parse(R"({"bound":2,"pairs":[[0,1],[1,-1]]})"));
  EXPECT_EQ(io::enumeration_from_json(io::to_json(r)).vectors, r.vectors);

  const auto cr = min_characteristic(identity_gram(2));
  const Json cj = io::to_json(cr);
  for (const char* key : {"min_norm", "defect", "mu", "is_standard", "minimizers"}) EXPECT_TRUE(cj.contains(key)) << key;
  EXPECT_EQ(cj["mu"], 4);

  const auto rs = root_system(catalog_gram("D8"));
  const Json rj = io::to_json(rs);
  EXPECT_EQ(rj["components"], Json::parse(R"([{"type":"D","rank":8,"roots":112}])"));
  EXPECT_EQ(io::root_system_from_json(rj), rs);
}

TEST(IoFiles, WriteReadIdentical) {
  const auto dir = std::filesystem::temp_directory_path() / "hlat_io_test";
  std::filesystem::create_directories(dir);
  const std::string path = (dir / "v3.json").string();
  const auto g = transfer_gram(build_L(), 3);
  io::write_json(path, io::to_json(g));
  const std::string first = io::read_text(path);
  io::write_json(path, io::to_json(io::gram_from_json(io::read_json(path))));
  EXPECT_EQ(io::read_text(path), first);
  EXPECT_EQ(first.back(), '\n');
  EXPECT_EQ(std::count(first.begin(), first.end(), '\n'), 1);
  EXPECT_THROW(io::read_json((dir / "missing.json").string()), InputError);
  {
    std::FILE* f = std::fopen((dir / "bad.json").c_str(), "w");
    std::fputs("{\"rank\": 1, ", f);
    std::fclose(f);
  }
  EXPECT_THROW(io::read_json((dir / "bad.json").string()), InputError);
  std::filesystem::remove_all(dir);
}
