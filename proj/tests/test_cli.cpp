#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "activity_forge/cli.hpp"
#include "activity_forge/graph_io.hpp"
#include "support/corpus.hpp"

using namespace forge;
using Json = nlohmann::ordered_json;

namespace {

class TempGraph {
public:
    explicit TempGraph(const std::string& text) {
        static int counter = 0;
        path_ = std::filesystem::temp_directory_path() /
                ("activity_forge_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + ".txt");
        std::ofstream(path_) << text;
    }
    ~TempGraph() { std::filesystem::remove(path_); }
    [[nodiscard]] std::string path() const { return path_.string(); }

private:
    std::filesystem::path path_;
};

struct Outcome {
    int code;
    std::string out;
    Json doc;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    int code = cli::run(args, out, err);
    Json doc;
    try {
        doc = Json::parse(out.str());
    } catch (...) {
    }
    return {code, out.str(), doc};
}

const char* kTriangle = "3\n0 1\n1 2\n0 2\n";

}  // namespace

TEST(ParseGraph, Examples) {
    auto k3 = parse_graph(kTriangle);
    EXPECT_EQ(k3.vertex_count, 3u);
    ASSERT_EQ(k3.edges.size(), 3u);
    EXPECT_EQ(k3.edges[2], (std::pair<Vertex, Vertex>{0, 2}));
    EXPECT_EQ(k3.edge_order(), EdgeOrder::identity(3));

    auto loop = parse_graph("1\n0 0\n").graph();
    EXPECT_TRUE(loop.edge(0).is_loop());

    auto doubled = parse_graph("2\n0 1\n0 1\n").graph();
    EXPECT_EQ(doubled.edge_count(), 2u);
    EXPECT_EQ(doubled.edge(0).u, doubled.edge(1).u);
}

TEST(ParseGraph, CommentsNameAndOrder) {
    auto doc = parse_graph("# a triangle\nname: tri\n\n3   # vertices\n0 1\n1 2\n0 2\norder: 2 0 1\n");
    EXPECT_EQ(doc.name, "tri");
    EXPECT_EQ(doc.edge_order().sequence()[0], 2u);
    EXPECT_EQ(parse_graph(format_graph(doc)).edge_order(), doc.edge_order());
}

TEST(ParseGraph, Errors) {
    auto line_of = [](const std::string& text) -> std::size_t {
        try {
            (void)parse_graph(text);
        } catch (const ParseError& e) {
            return e.line;
        }
        return 0;
    };
    EXPECT_EQ(line_of("3\n0 1\n1 x\n"), 3u);
    EXPECT_EQ(line_of("3\n0 1\n0 3\n"), 3u);
    EXPECT_EQ(line_of("3\n0 1 2\n"), 2u);
    EXPECT_EQ(line_of("-3\n"), 1u);
    EXPECT_EQ(line_of("3\n0 1\n1 2\norder: 0 0\n"), 4u);
    EXPECT_EQ(line_of("3\n0 1\n1 2\norder: 0\n"), 4u);
    EXPECT_NE(line_of("# only a comment\n"), 0u);
}

TEST(Cli, TutteAllOnTriangle) {
    TempGraph file(kTriangle);
    auto r = run({"tutte", file.path(), "--rep", "all"});
    ASSERT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(r.doc["schema"], "activity-forge/1");
    EXPECT_EQ(r.doc["match"], true);
    EXPECT_EQ(r.doc["text"], "x^2 + x + y");
    EXPECT_EQ(r.doc["representations"]["subset"], r.doc["representations"]["forest"]);
    EXPECT_EQ(poly_from_json(r.doc["poly"]), forge::testing::deletion_contraction_tutte(parse_graph(kTriangle).graph()));
}

TEST(Cli, VerifyOnTriangle) {
    TempGraph file(kTriangle);
    auto r = run({"verify", file.path()});
    ASSERT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(r.doc["partition"], "ok");
    EXPECT_EQ(r.doc["covered"], 8);
    EXPECT_EQ(r.doc["identity_2E"], true);
    EXPECT_EQ(r.doc["independence"], "ok");
}

TEST(Cli, ClassifyOnTriangle) {
    TempGraph file(kTriangle);
    auto r = run({"classify", file.path(), "--subset", "2"});
    ASSERT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(r.doc["forest"], Json({1, 2}));
    EXPECT_EQ(r.doc["deletions"], Json({1}));
    EXPECT_EQ(r.doc["additions"], Json::array());
    EXPECT_EQ(r.doc["roundtrip"], "ok");

    auto empty = run({"classify", file.path(), "--subset", ""});
    EXPECT_EQ(empty.code, 0);
    EXPECT_EQ(empty.doc["forest"], Json({1, 2}));
    EXPECT_EQ(empty.doc["deletions"], Json({1, 2}));
}

TEST(Cli, ActivitiesListsEveryForest) {
    TempGraph file(kTriangle);
    auto r = run({"activities", file.path()});
    ASSERT_EQ(r.code, 0);
    ASSERT_EQ(r.doc["count"], 3);
    EXPECT_EQ(r.doc["forests"][0]["forest"], Json({0, 1}));
    EXPECT_EQ(r.doc["forests"][0]["external"], Json({2}));
    EXPECT_EQ(r.doc["forests"][2]["internal"], Json({1, 2}));
}

TEST(Cli, EveryPolynomialCommandMatchesAcrossRepresentations) {
    TempGraph file("4\n0 1\n1 2\n2 3\n3 0\n0 2\n1 1\n0 1\n");
    for (std::string cmd : {"tutte", "chromatic", "reliability", "sgf", "uprime"}) {
        auto r = run({cmd, file.path(), "--rep", "all"});
        EXPECT_EQ(r.code, 0) << cmd << r.out;
        EXPECT_EQ(r.doc["match"], true) << cmd;
    }
}

TEST(Cli, RandomOrderNeverChangesPolynomials) {
    TempGraph file("5\n0 1\n1 2\n2 3\n3 4\n4 0\n0 2\n1 3\n");
    for (std::string cmd : {"tutte", "chromatic", "reliability", "sgf", "uprime"}) {
        auto base = run({cmd, file.path()});
        for (int seed = 0; seed < 5; ++seed) {
            auto shuffled = run({cmd, file.path(), "--order", "random:" + std::to_string(seed)});
            EXPECT_EQ(shuffled.doc["poly"], base.doc["poly"]) << cmd;
        }
    }
}

TEST(Cli, DeterministicOutput) {
    TempGraph file(kTriangle);
    auto a = run({"activities", file.path(), "--order", "random:42"});
    auto b = run({"activities", file.path(), "--order", "random:42"});
    EXPECT_EQ(a.out, b.out);
}

TEST(Cli, ExplicitOrderChangesActivities) {
    TempGraph file(kTriangle);
    auto r = run({"activities", file.path(), "--order", "2,1,0"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.doc["order"], Json({2, 1, 0}));
    // Edge 0 is now the largest: forest {0,1} has it internally active.
    EXPECT_EQ(r.doc["forests"][0]["internal"], Json({0, 1}));
}

TEST(Cli, Eval) {
    TempGraph file(kTriangle);
    auto r = run({"reliability", file.path(), "--eval", "p=1/2"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.doc["value"], "1/2");
    auto chi = run({"chromatic", file.path(), "--eval", "x=3"});
    EXPECT_EQ(chi.doc["value"], "6");
    EXPECT_EQ(run({"reliability", file.path(), "--eval", "q=1"}).code, 2);
    EXPECT_EQ(run({"reliability", file.path(), "--eval", "p=1/0"}).code, 2);
}

TEST(Cli, ExitCodes) {
    TempGraph bad("3\n0 1\n1 9\n");
    auto parse = run({"tutte", bad.path()});
    EXPECT_EQ(parse.code, 2);
    EXPECT_EQ(parse.doc["error"]["kind"], "parse");

    // 5x5 grid, 40 edges.
    std::string grid = "25\n";
    for (int r = 0; r < 5; ++r)
        for (int c = 0; c < 5; ++c) {
            if (c + 1 < 5) grid += std::to_string(r * 5 + c) + " " + std::to_string(r * 5 + c + 1) + "\n";
            if (r + 1 < 5) grid += std::to_string(r * 5 + c) + " " + std::to_string(r * 5 + c + 5) + "\n";
        }
    TempGraph big(grid);
    EXPECT_EQ(run({"tutte", big.path(), "--rep", "subset"}).code, 3);
    EXPECT_EQ(run({"verify", big.path()}).code, 3);

    TempGraph file(kTriangle);
    EXPECT_EQ(run({"tutte", file.path(), "--rep", "subset", "--max-exhaustive", "2"}).code, 3);
    EXPECT_EQ(run({"tutte", file.path(), "--rep", "broken-cycle"}).code, 2);
    EXPECT_EQ(run({"classify", file.path()}).code, 2);
    EXPECT_EQ(run({"classify", file.path(), "--subset", "7"}).code, 2);
    EXPECT_EQ(run({"nonsense", file.path()}).code, 2);
    EXPECT_EQ(run({"tutte", file.path(), "--order", "0,0,1"}).code, 2);
    EXPECT_EQ(run({"tutte", "/nonexistent/graph.txt"}).code, 2);
}

TEST(Cli, MismatchReportsDifference) {
    const auto x = SparsePoly::variable("x");
    const auto y = SparsePoly::variable("y");
    Json doc;
    const int code = cli::detail::compare_representations({{"forest", x + y}, {"subset", x}}, doc);
    EXPECT_EQ(code, 4);
    EXPECT_EQ(doc["match"], false);
    ASSERT_EQ(doc["mismatches"].size(), 1u);
    EXPECT_EQ(doc["mismatches"][0]["b"], "subset");
    EXPECT_EQ(poly_from_json(doc["mismatches"][0]["difference"]), y);

    Json same;
    EXPECT_EQ(cli::detail::compare_representations({{"forest", x}, {"subset", x}}, same), 0);
    EXPECT_EQ(same["match"], true);
    EXPECT_FALSE(same.contains("mismatches"));
}
