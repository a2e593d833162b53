#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "srw/cli.hpp"
#include "srw/io.hpp"

using namespace srw;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code = 0;
    std::string out, err;
};

Run cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    Run r;
    r.code = run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

fs::path temp_file(const std::string& name) {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "srw-cli-tests";
        fs::create_directories(d);
        return d;
    }();
    return dir / name;
}

Mat from_rows(const std::vector<std::vector<Elem>>& rows) {
    Mat m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < rows[r].size(); ++c)
            m.at(static_cast<int>(r), static_cast<int>(c)) = rows[r][c];
    return m;
}

std::string write_paper_code() {
    Code C = Code::make(Field::of_order(3), Shape::hamming(6),
                        from_rows({{1, 1, 0, 0, 0, 0},
                                   {0, 0, 1, 1, 1, 0},
                                   {0, 0, 0, 2, 1, 1}}));
    const fs::path p = temp_file("paper.json");
    write_json_file(p.string(), code_to_json(C));
    return p.string();
}

}  // namespace

TEST_CASE("weights subcommand") {
    const std::string file = write_paper_code();
    Run r = cli({"weights", file});
    CHECK(r.code == 0);
    json report = json::parse(r.out);
    CHECK(report["d"] == json::array({2, 4, 6}));
    CHECK(r.out == dump_json(report));  // canonical formatting

    Run g = cli({"weights", file, "--greedy"});
    CHECK(g.code == 0);
    json greport = json::parse(g.out);
    CHECK(greport["d"] == json::array({2, 4, 6}));
    CHECK(greport["g"] == json::array({2, 5, 6}));
    CHECK(greport["chain_condition"] == false);

    Run o = cli({"weights", file, "--oracle"});
    CHECK(o.code == 0);
    CHECK(json::parse(o.out)["d"] == json::array({2, 4, 6}));

    // byte-identical across repeat runs
    CHECK(cli({"weights", file, "--greedy"}).out == g.out);
}

TEST_CASE("weights failure modes") {
    const fs::path bad = temp_file("bad.json");
    std::ofstream(bad) << "{not json";
    Run r = cli({"weights", bad.string()});
    CHECK(r.code == 2);
    CHECK_FALSE(r.err.empty());

    Run missing = cli({"weights", temp_file("does-not-exist.json").string()});
    CHECK(missing.code == 2);

    // a zero code has no weights
    Code zero = Code::make(Field::of_order(2), Shape::hamming(3), Mat(0, 3));
    const fs::path zf = temp_file("zero.json");
    write_json_file(zf.string(), code_to_json(zero));
    Run z = cli({"weights", zf.string()});
    CHECK(z.code == 1);
    CHECK_FALSE(z.err.empty());
}

TEST_CASE("relative weights through the CLI") {
    const fs::path c1 = temp_file("rel1.json"), c2 = temp_file("rel2.json");
    Run made = cli({"realize", "--metric", "hamming", "--relative", "--seq", "1,3",
                    "--q", "5", "--n", "5", "--k1", "4", "--k2", "2",
                    "--out", c1.string(), "--out2", c2.string()});
    REQUIRE(made.code == 0);
    CHECK(json::parse(made.out)["d"] == json::array({1, 3}));

    Run rel = cli({"weights", c1.string(), "--relative", c2.string(), "--greedy"});
    CHECK(rel.code == 0);
    json report = json::parse(rel.out);
    CHECK(report["d"] == json::array({1, 3}));
    CHECK(report["chain_condition"] == true);
}

TEST_CASE("check-seq subcommand") {
    Run ok = cli({"check-seq", "--shape", "2x2,2x2", "--seq", "2,2,3,3"});
    CHECK(ok.code == 0);
    CHECK(json::parse(ok.out) == json{{"valid", true}});

    Run bad = cli({"check-seq", "--shape", "2x3", "--seq", "1,1,1"});
    CHECK(bad.code == 0);
    json v = json::parse(bad.out);
    CHECK(v["valid"] == false);
    CHECK(v["reason"] == "multiplicity of value 1 exceeds m=2 (index r=3, block j=1)");

    Run ham = cli({"check-seq", "--shape", "1x1:7", "--seq", "2,4,7"});
    CHECK(ham.code == 0);
    CHECK(json::parse(ham.out)["valid"] == true);

    CHECK(cli({"check-seq", "--shape", "2y2", "--seq", "1"}).code == 2);
    CHECK(cli({"check-seq", "--shape", "2x2", "--seq", "1,x"}).code == 2);
    CHECK(cli({"check-seq", "--shape", "", "--seq", "1"}).code == 2);
}

TEST_CASE("realize round-trips through weights") {
    const fs::path out = temp_file("realized.json");
    Run r = cli({"realize", "--metric", "hamming", "--seq", "2,4,6", "--q", "7",
                 "--out", out.string()});
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["d"] == json::array({2, 4, 6}));
    Run w = cli({"weights", out.string()});
    CHECK(w.code == 0);
    CHECK(json::parse(w.out)["d"] == json::array({2, 4, 6}));
    // provenance is carried in the file
    CHECK(read_json(out.string())["provenance"]["family"] == "realize-hamming");

    const fs::path rout = temp_file("realized-rank.json");
    Run rank = cli({"realize", "--metric", "rank", "--seq", "1,2,2", "--q", "2",
                    "--out", rout.string()});
    CHECK(rank.code == 0);
    CHECK(json::parse(rank.out)["d"] == json::array({1, 2, 2}));

    CHECK(cli({"realize", "--metric", "hamming", "--seq", "2,4,6",
               "--out", out.string()}).code == 2);  // missing --q
    CHECK(cli({"realize", "--metric", "hamming", "--seq", "2,2", "--q", "7",
               "--out", out.string()}).code == 1);  // not strictly increasing
}

TEST_CASE("construct, verify and realize over a chain file") {
    const fs::path chain = temp_file("chain.json");
    Run made = cli({"construct", "--family", "lrs", "--q", "3", "--t", "2",
                    "--m", "2", "--n", "2,2", "--out", chain.string()});
    REQUIRE(made.code == 0);
    json report = json::parse(made.out);
    CHECK(report["family"] == "linearized-reed-solomon");
    CHECK(report["members"] == 4);
    CHECK(report["d_head"] == 1);

    Run ver = cli({"verify", chain.string()});
    CHECK(ver.code == 0);
    CHECK(json::parse(ver.out)["all_pass"] == true);

    const fs::path realized = temp_file("sumrank.json");
    Run r = cli({"realize", "--metric", "sumrank", "--seq", "2,2,3,3",
                 "--chain", chain.string(), "--out", realized.string()});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["d"] == json::array({2, 2, 3, 3}));

    // swapping two members breaks nesting and the distance ladder
    json broken = read_json(chain.string());
    std::swap(broken["codes"][0], broken["codes"][1]);
    const fs::path bad = temp_file("chain-broken.json");
    write_json_file(bad.string(), broken);
    Run bv = cli({"verify", bad.string()});
    CHECK(bv.code == 1);
    CHECK(json::parse(bv.out)["all_pass"] == false);

    // q <= t is rejected by the construction
    CHECK(cli({"construct", "--family", "lrs", "--q", "2", "--t", "2",
               "--m", "2", "--n", "2,2", "--out", chain.string()}).code == 1);
}

TEST_CASE("verify on a single code file") {
    const std::string file = write_paper_code();
    Run r = cli({"verify", file, "--bounds"});
    CHECK(r.code == 0);
    json report = json::parse(r.out);
    CHECK(report["all_pass"] == true);
    CHECK_FALSE(report["checks"].empty());

    // the paper code is not MSRD, so asking for that check fails
    Run m = cli({"verify", file, "--msrd"});
    CHECK(m.code == 1);
    CHECK(json::parse(m.out)["all_pass"] == false);
}

TEST_CASE("budget exhaustion maps to exit 3") {
    // the full 5x5 binary matrix space has 2^25 codewords, past the
    // codeword enumeration budget of 2^24
    Mat id(25, 25);
    for (int i = 0; i < 25; ++i) id.at(i, i) = 1;
    Code full = Code::make(Field::of_order(2), Shape({Block{5, 5}}), id);
    const fs::path f = temp_file("full25.json");
    write_json_file(f.string(), code_to_json(full));
    Run r = cli({"verify", f.string(), "--msrd"});
    CHECK(r.code == 3);
    CHECK_FALSE(r.err.empty());
}

TEST_CASE("serialization round trips") {
    // a code over an extension field with a rank-metric shape
    Code C = Code::make(Field::of_order(4), Shape({Block{2, 2}, Block{1, 1}}),
                        from_rows({{1, 2, 0, 3, 1}, {0, 1, 1, 0, 2}}));
    json j = code_to_json(C, provenance_json("test", {{"k", "2"}}, *C.F));
    Code back = code_from_json(j);
    CHECK(back.F->q() == 4);
    CHECK(back.shape == C.shape);
    CHECK(back.space() == C.space());
    CHECK(j["field"]["p"] == 2);
    CHECK(j["field"]["e"] == 2);
    CHECK(j["provenance"]["family"] == "test");

    // dump is canonical: two-space indent, newline-terminated, stable
    const std::string s = dump_json(j);
    CHECK(s.back() == '\n');
    CHECK(s == dump_json(json::parse(s)));

    CodeChain chain = lrs_chain(3, 2, 2, {2, 2});
    CodeChain cback = chain_from_json(chain_to_json(chain));
    CHECK(cback.d_head == chain.d_head);
    CHECK(cback.members.size() == chain.members.size());
    for (size_t i = 0; i < chain.members.size(); ++i)
        CHECK(cback.members[i].space() == chain.members[i].space());
    CHECK(cback.family == chain.family);

    // structural errors are parse errors, not crashes
    CHECK_THROWS_AS(code_from_json(json::parse(R"({"shape": [[1,1]]})")), ParseError);
    CHECK_THROWS_AS(code_from_json(json::parse(
                        R"({"field":{"p":2,"e":1,"modulus":[0,1]},
                            "shape":[[1,1]],"generators":[[[[2]]]]})")),
                    ParseError);
    CHECK_THROWS_AS(chain_from_json(json::parse(R"({"codes": []})")), ParseError);
}

TEST_CASE("usage errors and help") {
    CHECK(cli({}).code == 2);
    CHECK(cli({"frobnicate"}).code == 2);
    CHECK(cli({"weights"}).code == 2);  // missing file argument
    Run help = cli({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("weights") != std::string::npos);
    CHECK(cli({"realize", "--metric", "nosuch", "--seq", "1", "--q", "2",
               "--out", temp_file("x.json").string()}).code == 2);
}
