#include "doctest.h"

#include "hopfd2/io.hpp"

using namespace hopfd2;

namespace {

std::string qc2_text() { return emit_document(catalog_document("qc2")); }

std::string replace_once(std::string s, const std::string& from, const std::string& to) {
    auto pos = s.find(from);
    REQUIRE(pos != std::string::npos);
    return s.replace(pos, from.size(), to);
}

std::string where_of(const std::string& text) {
    try {
        parse_document(text);
    } catch (const ParseError& e) {
        return e.where();
    }
    return "<parsed>";
}

}  // namespace

TEST_CASE("catalog documents survive emit and parse") {
    for (std::uint64_t p : {0ULL, 7ULL})
        for (auto& name : catalog_names()) {
            CAPTURE(name);
            CAPTURE(p);
            Document d = catalog_document(name, Field{p});
            std::string text = emit_document(d);
            Document back = parse_document(text);
            CHECK(back.name == name);
            CHECK(back.field.p == p);
            CHECK(back.is_extension() == d.is_extension());
            CHECK(emit_document(back) == text);
            if (back.is_extension()) CHECK_FALSE(back.extension->validate());
        }
}

TEST_CASE("catalog dimensions") {
    auto dims = [](const std::string& n) {
        auto d = catalog_document(n);
        return std::pair{d.extension->N.dim, d.extension->M.dim};
    };
    CHECK(dims("trivial") == std::pair{1, 1});
    CHECK(dims("qc2") == std::pair{1, 2});
    CHECK(dims("qc2-in-qc4") == std::pair{2, 4});
    CHECK(dims("mat2") == std::pair{1, 4});
    CHECK(dims("qs3") == std::pair{1, 6});
    CHECK_THROWS_AS(catalog_document("nope"), InputError);
}

TEST_CASE("scalar encodings") {
    std::string q = qc2_text();
    CHECK(q.find("\"modulus\": 0") != std::string::npos);
    CHECK(q.find("[\"1\",\"0\"]") != std::string::npos);
    std::string f5 = emit_document(catalog_document("qc2", Field{5}));
    CHECK(f5.find("[1,0]") != std::string::npos);

    Document d = parse_document(replace_once(q, "\"phi\": [\n  [\"1\",\"0\"]", "\"phi\": [\n  [\"3/4\",0]"));
    CHECK(d.extension->phi.at(0, 0) == Scalar(3, 4));
    CHECK(d.extension->phi.at(0, 1) == Scalar(0));

    Document g = parse_document(replace_once(f5, "\"unit\": [1,0]", "\"unit\": [6,0]"));
    CHECK(g.extension->M.unit == sv::unit(0));
}

TEST_CASE("parse errors carry their location") {
    std::string q = qc2_text();
    CHECK(where_of("{\"format\": \"hopfd2\",\n \"kind\": }").find("line 2") != std::string::npos);
    CHECK(where_of("[1, 2]") == "/");
    CHECK(where_of(replace_once(q, "\"hopfd2\"", "\"other\"")) == "/format");
    CHECK(where_of(replace_once(q, "\"extension\"", "\"module\"")) == "/kind");
    CHECK(where_of(replace_once(q, "\"modulus\": 0", "\"modulus\": 4")) == "/modulus");
    CHECK(where_of(replace_once(q, "\"unit\": [\"1\",\"0\"]", "\"unit\": [\"1\"]")) == "/M/unit");
    CHECK(where_of(replace_once(q, "[\"0\",\"1\",\"1\",\"0\"]", "[\"0\",\"1\",\"x\",\"0\"]")) == "/M/mul/1/2");
    CHECK(where_of(replace_once(q, "[\"0\",\"1\",\"1\",\"0\"]", "[\"0\",\"1\",\"1/0\",\"0\"]")) == "/M/mul/1/2");
    CHECK(where_of(replace_once(q, "\"incl\"", "\"inclusion\"")) == "/incl");
    CHECK(where_of(replace_once(q, "\"dim\": 2", "\"dim\": 0")) == "/M/dim");
    CHECK_THROWS_AS(read_document("/nonexistent/doc.json"), ParseError);
}
