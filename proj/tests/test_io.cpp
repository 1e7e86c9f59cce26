/*
   Copyright 2026 The bivar authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "bivar/constructors.hpp"
#include "bivar/io.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace bivar;

namespace {

std::string temp_path(const std::string& name) { return (std::filesystem::temp_directory_path() / ("bivar_io_" + name)).string(); }

bool gzipped(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    const int a = in.get(), b = in.get();
    return a == 0x1f && b == 0x8b;
}

}  // namespace

TEST_CASE("vertex scheme round trip") {
    const VertexScheme s = nonbinary_johnson(3, 4, 2);
    const json j = scheme_to_json(s);
    CHECK(j["schema_version"] == 1);
    CHECK(j["kind"] == "vertex");
    CHECK(j["vertex_count"] == 24);
    CHECK(j["matrices"]["0,0"][3][3] == 1);
    CHECK(scheme_from_json(j) == s);
    const std::string path = temp_path("nbj.json");
    write_scheme_file(path, s);
    CHECK_FALSE(gzipped(path));
    const SchemeFile back = read_scheme_file(path);
    REQUIRE(std::holds_alternative<VertexScheme>(back));
    CHECK(std::get<VertexScheme>(back) == s);
    // Canonical form: writing again gives the same bytes.
    const std::string path2 = temp_path("nbj2.json");
    write_scheme_file(path2, back);
    std::ifstream a(path), b(path2);
    CHECK(std::string(std::istreambuf_iterator<char>(a), {}) == std::string(std::istreambuf_iterator<char>(b), {}));
}

TEST_CASE("large files are gzipped") {
    Config cfg;
    cfg.gzip_threshold_entries = 100;
    const VertexScheme s = ordered_hamming(2, 2);
    const std::string path = temp_path("oh.json.gz");
    write_scheme_file(path, s, cfg);
    CHECK(gzipped(path));
    CHECK(std::get<VertexScheme>(read_scheme_file(path)) == s);
}

TEST_CASE("algebra scheme round trip") {
    const IntersectionTensor t = cell24(Rational(1, 2), 2);
    const json j = tensor_to_json(t);
    CHECK(j["kind"] == "algebra");
    CHECK(j["vertex_count"] == "24");
    CHECK(j["rows"]["1,0"]["1,0"]["0,0"] == "6");
    CHECK(tensor_from_json(j) == t);
    const IntersectionTensor sp = symplectic_d2(3, 4);
    CHECK(tensor_from_json(tensor_to_json(sp)) == sp);
    const IntersectionTensor att = attenuated_rows({2, 2, 5, 2});
    const std::string path = temp_path("att.json");
    write_scheme_file(path, att);
    CHECK(std::get<IntersectionTensor>(read_scheme_file(path)) == att);
    const IntersectionTensor c4 = intersection_numbers(cycle4());
    CHECK(tensor_to_json(c4)["rows"]["0,1"]["0,1"]["0,0"] == "1");
}

TEST_CASE("schema errors") {
    json j = scheme_to_json(cycle4());
    json bad = j;
    bad["schema_version"] = 2;
    CHECK_THROWS_AS(scheme_from_json(bad), SchemaError);
    bad = j;
    bad["matrices"]["1,0"][0][0] = 2;
    CHECK_THROWS_AS(scheme_from_json(bad), SchemaError);
    bad = j;
    bad["matrices"].erase("0,1");
    CHECK_THROWS_AS(scheme_from_json(bad), SchemaError);
    bad = j;
    bad["domain"] = json::array({json::array({1, 0})});
    CHECK_THROWS_AS(scheme_from_json(bad), SchemaError);
    CHECK_THROWS_AS(tensor_from_json(j), SchemaError);
    json t = tensor_to_json(intersection_numbers(cycle4()));
    t["rows"]["1,0"]["1,0"]["0,0"] = "x";
    CHECK_THROWS_AS(tensor_from_json(t), SchemaError);
    t = tensor_to_json(intersection_numbers(cycle4()));
    t["rows"]["1,0"]["1,0"]["5,5"] = "1";
    CHECK_THROWS_AS(tensor_from_json(t), SchemaError);
    t = tensor_to_json(intersection_numbers(cycle4()));
    t["rows"]["1,0"]["0,0"]["0,0"] = "1";
    CHECK_THROWS_AS(tensor_from_json(t), SchemaError);

    const std::string path = temp_path("garbage.json");
    std::ofstream(path) << "{not json";
    CHECK_THROWS_AS(read_scheme_file(path), SchemaError);
    CHECK_THROWS_AS(read_scheme_file(temp_path("missing.json")), SchemaError);
    std::ofstream(path) << R"({"schema_version":1,"kind":"other"})";
    CHECK_THROWS_AS(read_scheme_file(path), SchemaError);
}

TEST_CASE("config") {
    const Config c = config_from_json(json::parse(R"({"max_vertices": 50, "strict_intersection": true})"));
    CHECK(c.max_vertices == 50);
    CHECK(c.strict_intersection);
    CHECK(c.max_search_classes == Config{}.max_search_classes);
    CHECK_THROWS_AS(config_from_json(json::parse(R"({"max_vertex": 50})")), SchemaError);
    CHECK_THROWS_AS(config_from_json(json::parse(R"({"max_vertices": "many"})")), SchemaError);
}

TEST_CASE("report serializers") {
    const MinimalType m = minimal_type(attenuated_rows({2, 2, 4, 1}));
    const json j = minimal_type_to_json(m);
    CHECK(j["canonical"]["alpha"] == "1");
    CHECK(j["domain_check"]["witness"] == json::parse("[[0,2],[2,0]]"));
    CHECK(j["bivariate_p"] == false);
    const MetricVerdict v = metric_test(cell24(Rational(1, 2), 2), TypeParams(0, 0));
    const json vj = verdict_to_json(v);
    CHECK(vj["passed"] == false);
    CHECK(!vj["violations"].empty());
    const PolyFamily p = construct_vij(cell24(Rational(1, 2), 2), TypeParams(Rational(1, 2), 0));
    const json pj = polys_to_json(p);
    CHECK(pj["1,1"]["terms"]["1,1"] == "1/3");
    CHECK(pj["1,1"]["text"] == "1/3*x*y - y");
    const Spectrum sp = first_eigenmatrix(intersection_numbers(cycle4()));
    const json sj = spectrum_to_json(sp);
    CHECK(sj["P"]["1,0"]["0,1"] == "-1");
    CHECK(sj["multiplicities"]["1,0"] == "2");
}
