#include <doctest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fourgen/cli.hpp"
#include "fourgen/constructions.hpp"
#include "fourgen/io.hpp"

using namespace fourgen;
using nlohmann::json;

namespace {

int run_cli(const std::vector<std::string>& args, std::string* out_text = nullptr,
            std::string* err_text = nullptr) {
  std::ostringstream out, err;
  int rc = cli::run(args, out, err);
  if (out_text) *out_text = out.str();
  if (err_text) *err_text = err.str();
  return rc;
}

// minimal structural validation against the draft-07 subset used by the
// shipped schema: type / required / properties / items / enum
bool validate(const json& schema, const json& value);

bool type_matches(const std::string& t, const json& v) {
  if (t == "object") return v.is_object();
  if (t == "array") return v.is_array();
  if (t == "integer") return v.is_number_integer() || v.is_number_unsigned();
  if (t == "number") return v.is_number();
  if (t == "boolean") return v.is_boolean();
  if (t == "string") return v.is_string();
  if (t == "null") return v.is_null();
  return false;
}

bool validate(const json& schema, const json& value) {
  if (schema.contains("type")) {
    const auto& t = schema["type"];
    bool ok = false;
    if (t.is_string()) ok = type_matches(t.get<std::string>(), value);
    else
      for (const auto& alt : t) ok = ok || type_matches(alt.get<std::string>(), value);
    if (!ok) return false;
  }
  if (schema.contains("enum")) {
    bool ok = false;
    for (const auto& e : schema["enum"]) ok = ok || e == value;
    if (!ok) return false;
  }
  if (value.is_object()) {
    if (schema.contains("required"))
      for (const auto& key : schema["required"])
        if (!value.contains(key.get<std::string>())) return false;
    if (schema.contains("properties"))
      for (auto it = schema["properties"].begin(); it != schema["properties"].end(); ++it)
        if (value.contains(it.key()) && !validate(it.value(), value[it.key()])) return false;
  }
  if (value.is_array() && schema.contains("items"))
    for (const auto& item : value)
      if (!validate(schema["items"], item)) return false;
  return true;
}

json load_schema() {
  std::ifstream in("schemas/report.schema.json");
  if (!in) in.open("../schemas/report.schema.json");
  REQUIRE(in);
  json j;
  in >> j;
  return j;
}

}  // namespace

TEST_CASE("point-set files round-trip bit-exactly") {
  auto b = named_example("pg516");
  std::stringstream ss;
  save_pointset(b, ss);
  auto b2 = load_pointset(ss);
  REQUIRE(b2.size() == b.size());
  CHECK(b2.space.field->modulus() == b.space.field->modulus());
  for (size_t i = 0; i < b.size(); ++i) CHECK(b2.points[i].index == b.points[i].index);
}

TEST_CASE("loader rejects malformed input with distinct codes") {
  auto expect_code = [&](const std::string& text, PointSetError code) {
    std::istringstream in(text);
    try {
      load_pointset(in);
      FAIL("expected a parse error");
    } catch (const PointSetParseError& e) {
      CHECK(e.code() == code);
    }
  };
  expect_code("not a pointset\n", PointSetError::MalformedHeader);
  expect_code("# fourgen pointset v1\nfield p=2 k=2 modulus=5\nn=2\n1 0 0\n",
              PointSetError::MalformedHeader);  // reducible modulus
  expect_code("# fourgen pointset v1\nfield p=2 k=1 modulus=3\nn=2\n1 0 2\n",
              PointSetError::OutOfRangeElement);
  expect_code("# fourgen pointset v1\nfield p=2 k=1 modulus=3\nn=2\n1 0 1\n1 0 1\n",
              PointSetError::DuplicatePoint);
  expect_code("# fourgen pointset v1\nfield p=2 k=1 modulus=3\nn=2\n1 0\n",
              PointSetError::BadPoint);
  // unnormalized representatives are accepted and normalized
  std::istringstream ok("# fourgen pointset v1\nfield p=3 k=1 modulus=4\nn=2\n0 2 1\n");
  auto x = load_pointset(ok);
  CHECK(x.points[0].coords == std::vector<Elem>{0, 1, 2});
}

TEST_CASE("cli: verify exit statuses and reports") {
  auto eq = elliptic_quadric(2);
  save_pointset_file(eq, "/tmp/fourgen_eq.pts");
  std::string out;
  CHECK(run_cli({"verify", "/tmp/fourgen_eq.pts", "--complete"}, &out) == 0);
  CHECK(out.find("complete yes") != std::string::npos);

  // a coplanar quadruple gives status 1 with a witness
  std::ofstream bad("/tmp/fourgen_bad.pts");
  bad << "# fourgen pointset v1\nfield p=2 k=1 modulus=3\nn=3\n"
         "1 0 0 0\n0 1 0 0\n0 0 1 0\n1 1 1 0\n0 0 0 1\n";
  bad.close();
  CHECK(run_cli({"verify", "/tmp/fourgen_bad.pts"}, &out) == 1);
  CHECK(out.find("coplanar") != std::string::npos);

  std::string err;
  CHECK(run_cli({"verify", "/tmp/missing_file.pts"}, &out, &err) == 2);
  CHECK(run_cli({"frobnicate"}, &out, &err) == 2);

  // the bare completeness verb
  CHECK(run_cli({"complete", "/tmp/fourgen_eq.pts"}, &out) == 0);
  CHECK(out.find("complete yes") != std::string::npos);
}

TEST_CASE("cli: json reports match the shipped schema") {
  json schema = load_schema();
  std::string out;

  REQUIRE(run_cli({"verify", "/tmp/fourgen_eq.pts", "--complete", "--json"}, &out) == 0);
  CHECK(validate(schema["definitions"]["verify_report"], json::parse(out)));

  REQUIRE(run_cli({"verify", "/tmp/fourgen_bad.pts", "--json"}, &out) == 1);
  auto rep = json::parse(out);
  CHECK(validate(schema["definitions"]["verify_report"], rep));
  CHECK(rep["violations"].size() >= 1);

  REQUIRE(run_cli({"code", "/tmp/fourgen_eq.pts", "--json"}, &out) == 0);
  CHECK(validate(schema["definitions"]["code_report"], json::parse(out)));

  REQUIRE(run_cli({"bounds", "--n", "5", "--q", "5", "--json"}, &out) == 0);
  auto bj = json::parse(out);
  CHECK(validate(schema["definitions"]["bounds_report"], bj));
  CHECK(bj["m3_upper"] == 44);
}

TEST_CASE("cli: construct, greedy completion and aut round trip") {
  std::string out;
  REQUIRE(run_cli({"construct", "htw_y", "--d", "2", "--out", "/tmp/fourgen_y2.pts"}, &out) == 0);
  REQUIRE(run_cli({"search", "complete", "/tmp/fourgen_y2.pts", "--out", "/tmp/fourgen_y2c.pts"},
                  &out) == 0);
  auto done = load_pointset_file("/tmp/fourgen_y2c.pts");
  CHECK(done.size() == 11);
  REQUIRE(run_cli({"aut", "/tmp/fourgen_y2c.pts"}, &out) == 0);
  CHECK(out == "7920\n");
  // randomized order demands a seed
  std::string err;
  CHECK(run_cli({"search", "complete", "/tmp/fourgen_y2.pts", "--order", "random"}, &out, &err) == 2);
  CHECK(run_cli({"search", "complete", "/tmp/fourgen_y2.pts", "--order", "random", "--seed", "7"},
                &out) == 0);
}

TEST_CASE("cli: curves and classify subcommands") {
  std::string out;
  REQUIRE(run_cli({"curves", "cubic1", "--q", "16"}, &out) == 0);
  CHECK(out == "13\n");
  REQUIRE(run_cli({"curves", "net", "--q", "3", "--trials", "5", "--seed", "1"}, &out) == 0);
  auto j = json::parse(out);
  CHECK(j["empty_base_loci"] == 0);
  REQUIRE(run_cli({"search", "classify", "--n", "3", "--q", "2", "--json"}, &out) == 0);
  auto cj = json::parse(out);
  CHECK(cj["classes"].size() == 1);
  CHECK(cj["classes"][0]["aut"] == 120);
  std::string err;
  CHECK(run_cli({"search", "classify", "--n", "6", "--q", "2"}, &out, &err) == 2);  // out of scope
}
