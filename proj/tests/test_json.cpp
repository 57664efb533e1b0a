#include <catch2/catch_amalgamated.hpp>

#include <branchlaw/json_io.hpp>

using namespace branchlaw::jsonio;

TEST_CASE("values of every type round-trip through text", "[json]") {
    const char* samples[] = {
        "null",
        "true",
        "false",
        "0",
        "-17",
        "2.5",
        "\"hello\"",
        "[]",
        "[1,2,3]",
        "{}",
        "{\"a\":1,\"b\":[true,null],\"c\":{\"d\":\"x\"}}",
    };
    for (const char* s : samples) {
        const Json v = parse(s);
        CHECK(parse(v.dump()) == v);
        CHECK(v.dump() == s);
    }
}

TEST_CASE("strings escape control and quote characters", "[json]") {
    const Json v = parse("\"a\\\"b\\\\c\\n\\t\\u0041\\u00e9\"");
    CHECK(v.as_string() == "a\"b\\c\n\tA\xc3\xa9");
    CHECK(parse(v.dump()) == v);

    Json raw(std::string("\x01"));
    CHECK(raw.dump() == "\"\\u0001\"");
}

TEST_CASE("numbers keep their integer or floating nature", "[json]") {
    CHECK(parse("7").is_int());
    CHECK(parse("7.0").is_number());
    CHECK_FALSE(parse("7.5").is_int());
    CHECK(parse("1e3").as_number() == 1000.0);
    CHECK(Json(2.0).dump() == "2.0");
    // Comparisons bridge the two numeric kinds.
    CHECK(Json(2) == Json(2.0));
}

TEST_CASE("object keys print sorted so output is deterministic", "[json]") {
    JsonObject o;
    o["zebra"] = 1;
    o["alpha"] = 2;
    CHECK(Json(std::move(o)).dump() == "{\"alpha\":2,\"zebra\":1}");
}

TEST_CASE("pretty printing indents nested structures", "[json]") {
    const Json v = parse("{\"a\":[1]}");
    const std::string pretty = v.dump(true);
    CHECK(pretty.find('\n') != std::string::npos);
    CHECK(parse(pretty) == v);
}

TEST_CASE("malformed documents report the failing offset", "[json]") {
    for (const char* bad : {"", "{", "[1,", "{\"a\"}", "tru", "\"\\x\"", "[1] x"}) {
        CHECK_THROWS_AS(parse(bad), std::runtime_error);
    }
    try {
        parse("[1, )");
        FAIL("expected a parse failure");
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()).find("offset") != std::string::npos);
    }
}

TEST_CASE("lookups check the type and key", "[json]") {
    const Json v = parse("{\"a\":[10]}");
    CHECK(v.contains("a"));
    CHECK_FALSE(v.contains("b"));
    CHECK(v.at("a").as_array().size() == 1);
    CHECK(v.at("a").as_array()[0].as_int() == 10);
    CHECK_THROWS_AS(v.at("missing"), std::runtime_error);
    CHECK_THROWS_AS(v.as_string(), std::runtime_error);
}

TEST_CASE("the validator enforces the supported keywords", "[json]") {
    const Json schema = parse(R"({
        "type": "object",
        "properties": {
            "name": {"type": "string"},
            "kind": {"enum": ["a", "b"]},
            "tag": {"const": 3},
            "items": {"type": "array", "items": {"type": "integer"}},
            "child": {"$ref": "#/$defs/child"}
        },
        "required": ["name"],
        "additionalProperties": false,
        "$defs": {
            "child": {"type": ["integer", "null"]}
        }
    })");

    CHECK(validate(parse(R"({"name":"x"})"), schema).empty());
    CHECK(validate(parse(R"({"name":"x","kind":"a","tag":3,"items":[1,2],"child":null})"),
                   schema)
              .empty());

    CHECK_FALSE(validate(parse(R"({})"), schema).empty());                    // missing
    CHECK_FALSE(validate(parse(R"({"name":1})"), schema).empty());            // type
    CHECK_FALSE(validate(parse(R"({"name":"x","kind":"c"})"), schema).empty());  // enum
    CHECK_FALSE(validate(parse(R"({"name":"x","tag":4})"), schema).empty());  // const
    CHECK_FALSE(validate(parse(R"({"name":"x","items":[1,"y"]})"), schema).empty());
    CHECK_FALSE(validate(parse(R"({"name":"x","child":1.5})"), schema).empty());
    CHECK_FALSE(validate(parse(R"({"name":"x","extra":1})"), schema).empty());
}

TEST_CASE("alternation requires exactly one branch to hold", "[json]") {
    const Json schema = parse(R"({
        "oneOf": [
            {"type": "integer"},
            {"type": "number"}
        ]
    })");
    // An integer is also a number, so it matches both branches and fails.
    CHECK_FALSE(validate(parse("3"), schema).empty());
    CHECK(validate(parse("3.5"), schema).empty());
    CHECK_FALSE(validate(parse("\"s\""), schema).empty());
}

TEST_CASE("boolean schemas accept or reject everything", "[json]") {
    CHECK(validate(parse("42"), parse("true")).empty());
    CHECK_FALSE(validate(parse("42"), parse("false")).empty());
}
