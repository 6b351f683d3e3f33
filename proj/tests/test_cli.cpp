#include "cli/cache.hpp"
#include "cli/commands.hpp"

#include "flc/labeling.hpp"
#include "flc/serialize.hpp"

#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

namespace fs = std::filesystem;

namespace {

struct Result {
    int status;
    std::string out;
    std::string err;
};

Result flc_run(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int status = flc::cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

class TempDir {
public:
    TempDir()
    {
        static int counter = 0;
        path_ = fs::temp_directory_path() / ("flc-cli-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    fs::path operator/(const std::string& name) const { return path_ / name; }

private:
    fs::path path_;
};

std::string slurp(const fs::path& file)
{
    std::ifstream in(file);
    return {std::istreambuf_iterator<char>(in), {}};
}

} // namespace

TEST_CASE("pisano")
{
    CHECK(flc_run({"pisano", "--a", "0", "--b", "1", "--m", "3"}).out == "8\n");
    CHECK(flc_run({"pisano", "--a", "7", "--b", "4", "--m", "5"}).out == "20\n");
    const Result bad = flc_run({"pisano", "--m", "1"});
    CHECK(bad.status != 0);
    CHECK(bad.err.find("error:") == 0);
    CHECK(flc_run({"pisano", "--m", "11", "--format", "csv"}).out == "a,b,m,period\n0,1,11,10\n");
}

TEST_CASE("classify")
{
    const Result three = flc_run({"classify", "--a", "0", "--b", "1", "--p", "3", "--lambda-members"});
    CHECK(three.status == 0);
    CHECK(three.out.find("L_-1     {3 5 6}") != std::string::npos);
    CHECK(three.out.find("3 is a (-2)-PL prime") != std::string::npos);
    CHECK(flc_run({"classify", "--p", "11", "--format", "csv"}).out ==
          "a,b,p,period,l_minus,l_zero,l_plus,k\n0,1,11,10,4,1,5,0\n");
    CHECK(flc_run({"classify", "--a", "-9", "--b", "-21", "--p", "13", "--format", "csv"}).out ==
          "a,b,p,period,l_minus,l_zero,l_plus,k\n-9,-21,13,28,14,0,14,0\n");
    const Result nine = flc_run({"classify", "--p", "9"});
    CHECK(nine.status != 0);
    CHECK(nine.err.find("not an odd prime") != std::string::npos);
}

TEST_CASE("zeta, theta, omega, curve")
{
    CHECK(flc_run({"zeta", "--k", "42", "--bound", "20000", "--no-cache"}).out == "14969\n");
    const Result missing = flc_run({"zeta", "--k", "30", "--bound", "2000", "--no-cache"});
    CHECK(missing.status == 0);
    CHECK(missing.out.find("no 30-PL prime") != std::string::npos);
    CHECK(flc_run({"zeta", "--k-min", "8", "--k-max", "12", "--format", "csv", "--no-cache"}).out ==
          "k,prime,bound\n8,41,20000\n10,331,20000\n12,17,20000\n");
    CHECK(flc_run({"zeta", "--no-cache"}).status != 0);
    CHECK(flc_run({"theta", "--a", "0", "--b", "1", "--k", "0", "--count", "10", "--no-cache"}).out ==
          "11, 29, 31, 71, 131, 191, 229, 251, 271, 281\n");
    CHECK(flc_run({"omega", "--a", "0", "--b", "1", "--k", "0", "--nmax", "10", "--no-cache"}).out == "0\n");
    CHECK(flc_run({"omega", "--nmax", "100", "--step", "50", "--format", "csv", "--no-cache"}).out ==
          "n,count\n50,3\n100,4\n");
    CHECK(flc_run({"curve", "--c", "0.055", "--k-min", "-42", "--k-max", "-42"}).out == "k,g\n-42,97.02\n");
    CHECK(flc_run({"curve", "--c", "1.5"}).status != 0);
}

TEST_CASE("label and verify")
{
    TempDir dir;
    const std::string file = (dir / "path.json").string();
    const Result path = flc_run({"label", "--theorem", "path", "--p", "11", "--a", "0", "--b", "1", "--q", "1",
                                 "--out", file, "--format", "csv"});
    CHECK(path.status == 0);
    CHECK(path.out.find("path,11,0,1,11,10,5,5,true,5,5,0,true") != std::string::npos);
    const Result verified = flc_run({"verify", "--labeling-file", file});
    CHECK(verified.status == 0);
    CHECK(verified.out == "cordial: e0 = 5, e1 = 5\n");

    const Result tensor = flc_run({"label", "--theorem", "product", "--op", "tensor", "--p", "11", "--g", "path:2"});
    CHECK(tensor.status == 0);
    CHECK(tensor.out.find("cordial: e0 = 10, e1 = 10") != std::string::npos);

    const Result three = flc_run({"label", "--theorem", "path", "--p", "3"});
    CHECK(three.status != 0);
    CHECK(three.err.find("is (-2)-PL") != std::string::npos);
    CHECK(three.err.find("requires 0-PL") != std::string::npos);

    const Result join = flc_run({"label", "--theorem", "join", "--p", "11", "--g", "complete:9", "--hs", "empty:9"});
    CHECK(join.status != 0);
    CHECK(join.err.find("size window infeasible") != std::string::npos);

    const std::string graph_file = (dir / "g.json").string();
    CHECK(flc_run({"graph", "--spec", "cycle:9", "--out", graph_file}).status == 0);
    const Result corona = flc_run({"label", "--theorem", "corona", "--p", "11", "--graph-file", graph_file, "--h",
                                   "empty:9", "--format", "json"});
    CHECK(corona.status == 0);
    const auto doc = flc::Json::parse(corona.out);
    CHECK(doc[0]["e0"] == 45);
    CHECK(doc[0]["matches_prediction"] == true);
}

TEST_CASE("verify the worked example and reject tampering")
{
    TempDir dir;
    const flc::InitialPair pair(7, 4);
    flc::Json doc = flc::labeling_to_json(flc::VertexLabeling::identity(flc::cycle(3)), 5, pair);
    std::ofstream(dir / "c3.json") << doc.dump();
    CHECK(flc_run({"verify", "--labeling-file", (dir / "c3.json").string()}).out == "cordial: e0 = 2, e1 = 1\n");

    flc::Json duplicate = doc;
    duplicate["assignment"] = {0, 0, 2};
    std::ofstream(dir / "dup.json") << duplicate.dump();
    const Result dup = flc_run({"verify", "--labeling-file", (dir / "dup.json").string()});
    CHECK(dup.status != 0);

    flc::Json lying = doc;
    lying["e0"] = 1;
    lying["e1"] = 2;
    std::ofstream(dir / "lie.json") << lying.dump();
    CHECK(flc_run({"verify", "--labeling-file", (dir / "lie.json").string()}).status != 0);
    CHECK(flc_run({"verify", "--labeling-file", (dir / "missing.json").string()}).status != 0);
}

TEST_CASE("tables and plot data")
{
    const Result one = flc_run({"tables", "--which", "1", "--format", "csv"});
    CHECK(one.out ==
          "i,F_i,F_i_mod_p,legendre\n0,0,0,0\n1,1,1,1\n2,1,1,1\n3,2,2,-1\n4,3,0,0\n5,5,2,-1\n6,8,2,-1\n7,13,1,1\n");
    const Result three = flc_run({"tables", "--which", "3", "--bound", "300", "--format", "json", "--no-cache"});
    const auto rows = flc::Json::parse(three.out);
    REQUIRE(rows.size() == 10);
    for (const auto& row : rows) {
        CHECK(row["matches"] == true);
        CHECK((row["flag"] != "") == (row["a"] == -3));
    }
    CHECK(flc_run({"tables", "--which", "4"}).status != 0);
    CHECK(flc_run({"plotdata", "--figure", "7"}).status != 0);
    const Result fig6 = flc_run({"plotdata", "--figure", "6", "--bound", "100", "--step", "100", "--format", "csv",
                                 "--no-cache"});
    // Table 3: (0,1) has 11, 29, 31, 71 below 100; (2,1) has 5, 13, 37, 53, 61
    CHECK(fig6.out.rfind("a,b,n,count\n0,1,100,4\n2,1,100,5\n7,6,100,", 0) == 0);
    CHECK(std::count(fig6.out.begin(), fig6.out.end(), '\n') == 6);
}

TEST_CASE("graph specs")
{
    CHECK(flc::cli::parse_graph_spec("connected:32:480:7") == flc::connected_graph(32, 480, 7));
    CHECK(flc::cli::parse_graph_spec("connected:9:9") == flc::connected_graph(9, 9, 1));
    CHECK(flc::cli::parse_graph_spec("wheel:11") == flc::wheel(11));
    CHECK_THROWS(flc::cli::parse_graph_spec("torus:3"));
    CHECK_THROWS(flc::cli::parse_graph_spec("path:3x"));
    CHECK_THROWS(flc::cli::parse_graph_spec("path"));
    const Result product = flc_run({"graph", "--spec", "cycle:3", "--op", "strong", "--with", "path:3"});
    const auto g = flc::graph_from_json(flc::Json::parse(product.out));
    CHECK(g == flc::strong(flc::cycle(3), flc::path(3)));
}

TEST_CASE("cache file is a pure memo")
{
    TempDir dir;
    const std::string cache = (dir / "cache.jsonl").string();
    const std::vector<std::string> args{"zeta", "--k-min", "-10", "--k-max", "10", "--bound", "3000", "--format", "csv"};
    auto with = [&](std::vector<std::string> extra) {
        std::vector<std::string> all = args;
        all.insert(all.end(), extra.begin(), extra.end());
        return flc_run(all).out;
    };
    const std::string plain = with({"--no-cache"});
    CHECK(with({"--cache", cache}) == plain);
    const std::string first_fill = slurp(cache);
    CHECK_FALSE(first_fill.empty());
    CHECK(with({"--cache", cache, "--workers", "3"}) == plain);
    CHECK(slurp(cache) == first_fill); // all hits, nothing appended

    // corrupt and inconsistent lines are skipped and recomputed
    std::ofstream(cache, std::ios::app) << "not json\n"
                                        << R"({"a":0,"b":1,"p":3,"period":8,"l_minus":3,"l_zero":2,"l_plus":9,"k":4})"
                                        << "\n";
    flc::cli::JsonLinesCache reloaded(cache);
    CHECK(reloaded.skipped_lines() == 2);
    CHECK(reloaded.find(flc::InitialPair(0, 1), 3)->k == -2);
    CHECK(with({"--cache", cache}) == plain);
}
