#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "mui/cli.hpp"
#include "mui/interval.hpp"

using namespace mui;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    int code = run_cli(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
    auto p = std::filesystem::temp_directory_path() / ("mui_test_" + name);
    std::ofstream(p) << content;
    return p.string();
}

}  // namespace

TEST_CASE("classify") {
    auto r = run({"classify"}, "a b\nb c\nc d\n");
    CHECK(r.code == 0);
    CHECK(r.out == "class=Unit\n");

    r = run({"classify", "--format", "graph6"}, "Cl\n");
    CHECK(r.code == 0);
    CHECK(r.out.rfind("class=NotInterval", 0) == 0);
    CHECK(r.out.find("obstruction=not_chordal") != std::string::npos);

    auto claw = run({"family", "k13"}).out;
    r = run({"classify", "--json"}, claw);
    CHECK(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["class"] == "UPM");
    CHECK(j["witnesses"][0]["family"] == "K13");
}

TEST_CASE("classify rejects malformed input") {
    auto r = run({"classify", "--format", "graph6"}, "C");
    CHECK(r.code == 2);
    CHECK(r.err.find("parse error") != std::string::npos);
    CHECK(run({"classify", "/nonexistent/graph.txt"}).code == 2);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"represent", "--target", "banana"}, "a b\n").code == 2);
    CHECK(run({"family"}).code == 2);
    CHECK(run({"family", "nope"}).code == 2);
    CHECK(run({"family", "a"}).code == 2);
    CHECK(run({"family", "a", "-1"}).code == 2);
    CHECK(run({"family", "k13", "1"}).code == 2);
    auto help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("classify") != std::string::npos);
}

TEST_CASE("represent emits representations that check out") {
    auto fig3 = run({"family", "fig3"}).out;
    for (std::string target : {"almost-mixed", "mixed"}) {
        CAPTURE(target);
        auto r = run({"represent", "--target", target}, fig3);
        REQUIRE(r.code == 0);
        auto g = temp_file("fig3.txt", fig3);
        auto rep = temp_file("fig3.json", r.out);
        auto c = run({"check", g, rep});
        CHECK(c.code == 0);
        CHECK(c.out == "ok\n");
    }
    auto r = run({"represent", "--target", "upm"}, fig3);
    CHECK(r.code == 1);
    CHECK(Json::parse(r.out)["witness"]["family"] == "K14star");

    auto path = run({"represent", "--target", "unit"}, "a b\nb c\nb d\nd e\n");
    CHECK(path.code == 1);
    auto p4 = run({"represent", "--target", "unit"}, "a b\nb c\nc d\n");
    REQUIRE(p4.code == 0);
    auto rep = representation_from_json(Json::parse(p4.out));
    CHECK(type_census(rep).closed == 4);
}

TEST_CASE("represent writes output and trace files") {
    auto out = std::filesystem::temp_directory_path() / "mui_test_out.json";
    auto trace = std::filesystem::temp_directory_path() / "mui_test_trace.json";
    auto r = run({"represent", "--out", out.string(), "--trace", trace.string()}, run({"family", "fig3"}).out);
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream f(out), t(trace);
    Json rep = Json::parse(f);
    Json tr = Json::parse(t);
    CHECK(rep["vertices"].size() == 6);
    CHECK(tr.contains("steps"));
}

TEST_CASE("represent reports blocking patterns for Fig9") {
    auto r = run({"represent", "--target", "almost-mixed"}, run({"family", "fig9"}).out);
    CHECK(r.code == 1);
    Json j = Json::parse(r.out);
    CHECK(j["member"] == false);
    REQUIRE(j["witness"].is_array());
    CHECK(j["witness"][0]["kind"] == "open_closed");
    CHECK(j["witness"][1]["kind"] == "closed_open");

    r = run({"represent", "--target", "mixed"}, run({"family", "fig9"}).out);
    CHECK(r.code == 0);
}

TEST_CASE("family output") {
    auto r = run({"family", "c", "-1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("u v") != std::string::npos);

    auto g6 = run({"family", "k14", "--format", "graph6"});
    CHECK(g6.out == "DXG\n");

    auto doc = run({"family", "a", "0", "--rep"});
    REQUIRE(doc.code == 0);
    Json j = Json::parse(doc.out);
    CHECK(j["family"] == "A_0");
    auto g = temp_file("a0.txt", j["graph"].get<std::string>());
    auto rep = temp_file("a0.json", doc.out);
    CHECK(run({"check", g, rep}).code == 0);

    auto none = run({"family", "k23star", "--rep"});
    CHECK(none.code == 1);
    CHECK(none.err.find("no canonical representation") != std::string::npos);
}

TEST_CASE("check reports the violated pair") {
    auto g = temp_file("p3.txt", "a b\nb c\n");
    auto rep = temp_file("p3.json", R"({"vertices":[
        {"id":0,"label":"a","left":{"num":0,"den":1},"left_closed":true,"right_closed":true},
        {"id":1,"label":"b","left":{"num":1,"den":1},"left_closed":true,"right_closed":true},
        {"id":2,"label":"c","left":{"num":1,"den":2},"left_closed":true,"right_closed":true}]})");
    auto r = run({"check", g, rep});
    CHECK(r.code == 1);
    CHECK(r.out == "extra edge (a, c)\n");

    // Matching is by label, so the order of entries does not matter.
    auto shuffled = temp_file("p3s.json", R"({"vertices":[
        {"id":0,"label":"c","left":{"num":2,"den":1},"left_closed":true,"right_closed":true},
        {"id":1,"label":"a","left":{"num":0,"den":1},"left_closed":true,"right_closed":true},
        {"id":2,"label":"b","left":{"num":1,"den":1},"left_closed":true,"right_closed":true}]})");
    CHECK(run({"check", g, shuffled}).code == 0);

    auto short_rep = temp_file("p3short.json", R"({"vertices":[
        {"id":0,"left":{"num":0,"den":1},"left_closed":true,"right_closed":true}]})");
    CHECK(run({"check", g, short_rep}).code == 2);
    CHECK(run({"check", g, temp_file("junk.json", "{")}).code == 2);
}

TEST_CASE("crosscheck") {
    auto r = run({"crosscheck"}, "");
    CHECK(r.code == 0);
    CHECK(r.out.find("disagreements 0") != std::string::npos);

    r = run({"crosscheck", "--json"}, "A_\nBw\nC~\nDXG\nEhEG\n");
    CHECK(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["rows"].size() == 5);
    CHECK(j["disagreements"].empty());

    r = run({"crosscheck", "--max-n", "3", "--json"}, "A_\nC~\n");
    j = Json::parse(r.out);
    CHECK(j["skipped"] == 1);

    r = run({"crosscheck"}, "A_\nC!\n");
    CHECK(r.code == 2);
    CHECK(r.err.find("line 2") != std::string::npos);
}
