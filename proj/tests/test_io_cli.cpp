#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "jscheme/construct.hpp"
#include "jscheme/io.hpp"

using namespace jscheme;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct TempDir {
    std::string path;
    TempDir() {
        char tmpl[] = "/tmp/jscheme_test_XXXXXX";
        path = mkdtemp(tmpl);
    }
    std::string file(const std::string& name) const { return path + "/" + name; }
};

int run_cli(const std::string& args) {
    std::string cmd = std::string(JSCHEME_CLI_PATH) + " " + args + " 2>/dev/null >/dev/null";
    int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("rainbow JSON round trip is byte stable") {
    Rainbow x = fixtures::four_point_example();
    std::string a = rainbow_json(x);
    CHECK(a == "{\"order\": 4, \"rank\": 4, \"colors\": "
               "[[0,1,2,2], [1,0,2,2], [3,3,0,1], [3,3,1,0]]}\n");
    std::istringstream in(a);
    std::ostringstream warn;
    Rainbow back = read_rainbow(in, warn);
    CHECK(back == x);
    CHECK(warn.str().empty());
    CHECK(rainbow_json(back) == a);
}

TEST_CASE("non-canonical or invalid files") {
    // non-canonical numbering: renumbered with a warning
    std::istringstream in("{\"order\": 2, \"rank\": 2, \"colors\": [[5,7],[7,5]]}");
    std::ostringstream warn;
    Rainbow x = read_rainbow(in, warn);
    CHECK(x.color(0, 0) == 0);
    CHECK(!warn.str().empty());

    std::istringstream bad_rank("{\"order\": 2, \"rank\": 3, \"colors\": [[0,1],[1,0]]}");
    std::ostringstream sink;
    CHECK_THROWS_AS(read_rainbow(bad_rank, sink), NotARainbow);

    std::istringstream not_rainbow("{\"order\": 2, \"rank\": 2, \"colors\": [[0,0],[1,0]]}");
    CHECK_THROWS_AS(read_rainbow(not_rainbow, sink), NotARainbow);

    std::istringstream garbage("{\"order\": 2");
    CHECK_THROWS_AS(read_rainbow(garbage, sink), ParseError);
}

TEST_CASE("text format round trip") {
    Rainbow x = thin_cyclic_scheme(4);
    std::ostringstream os;
    write_rainbow_text(os, x);
    CHECK(os.str() == "4 4\n0 1 2 3\n3 0 1 2\n2 3 0 1\n1 2 3 0\n");
    std::istringstream in(os.str());
    std::ostringstream warn;
    CHECK(read_rainbow(in, warn) == x);

    std::istringstream truncated("3 2\n0 1 1\n1 0");
    CHECK_THROWS_AS(read_rainbow(truncated, warn), ParseError);
}

TEST_CASE("tensor dump format") {
    Rainbow x = Rainbow::trivial(3);
    auto res = is_jordan_configuration(x);
    REQUIRE(res.ok);
    std::ostringstream os;
    write_tensor(os, *res.tensor);
    std::string dump = os.str();
    CHECK(dump.substr(0, 13) == "doubled=true\n");
    // 1_Omega * 1_Omega doubled on the diagonal class: first line
    CHECK(dump.find("0 0 0 2\n") != std::string::npos);
}

TEST_CASE("wfdf spec JSON round trip") {
    WfdfSpec spec = WfdfSpec::make(2, WfdfSpec::DiamondKind::Random, WfdfSpec::SigmaKind::Random,
                                   WfdfSpec::ThetaKind::Random, 7);
    std::ostringstream os;
    write_wfdf_spec(os, spec);
    std::istringstream in(os.str());
    WfdfSpec back = read_wfdf_spec(in);
    CHECK(back.d == spec.d);
    CHECK(back.sigma == spec.sigma);
    CHECK(back.theta_plus == spec.theta_plus);
    CHECK(build_wfdf(back) == build_wfdf(spec));
}

TEST_CASE("cli: build / verify / proper pipeline with exit codes") {
    TempDir tmp;
    std::string w45 = tmp.file("w45.json");
    CHECK(run_cli("build wfdf --d 2 --diamond cyclic --sigma identity --theta plus --out " + w45) == 0);

    // identical invocations produce byte-identical outputs
    std::string w45b = tmp.file("w45b.json");
    CHECK(run_cli("build wfdf --d 2 --diamond cyclic --sigma identity --theta plus --out " + w45b) == 0);
    CHECK(slurp(w45) == slurp(w45b));
    CHECK(!slurp(w45).empty());

    CHECK(run_cli("verify --kind jc " + w45) == 0);
    CHECK(run_cli("verify --kind cc " + w45) == 1);
    CHECK(run_cli("proper " + w45) == 0);

    std::string pentagon = tmp.file("pentagon.json");
    {
        std::ofstream os(pentagon);
        write_rainbow_json(os, thin_cyclic_scheme(5).symmetrized());
    }
    CHECK(run_cli("proper " + pentagon) == 1);
    CHECK(run_cli("verify --kind cc " + pentagon) == 0);
    CHECK(run_cli("srg " + pentagon + " --color 1") == 0);
    CHECK(run_cli("srg " + pentagon + " --color 0") == 1);
    CHECK(run_cli("srg " + pentagon + " --color 9") == 2);
    CHECK(run_cli("params " + pentagon) == 0);

    // closure and symmetrize write loadable rainbows
    std::string closed = tmp.file("closed.json");
    CHECK(run_cli("closure --kind wl " + pentagon + " --out " + closed) == 0);
    std::ostringstream warn;
    CHECK(read_rainbow_file(closed, warn).rank() == 3);

    std::string sym = tmp.file("sym.json");
    CHECK(run_cli("symmetrize " + w45 + " --out " + sym) == 0);
    CHECK(slurp(sym) == slurp(w45));  // already symmetric

    // bad inputs
    CHECK(run_cli("verify --kind jc " + tmp.file("missing.json")) == 2);
    CHECK(run_cli("verify --kind zz " + w45) == 2);
    CHECK(run_cli("frobnicate") == 2);
    CHECK(run_cli("build cover --q 4 --m 2") == 2);
}

TEST_CASE("cli: switch pipeline") {
    TempDir tmp;
    std::string j15 = tmp.file("j15.json");
    CHECK(run_cli("build switch --q 4 --m 3 --fiber 0 --out " + j15) == 0);
    CHECK(run_cli("verify --kind jc " + j15) == 0);
    CHECK(run_cli("proper " + j15) == 0);
    std::ostringstream warn;
    Rainbow x = read_rainbow_file(j15, warn);
    CHECK(x.order() == 15);
    CHECK(x.rank() == 5);

    std::string base = tmp.file("base.json");
    CHECK(run_cli("build cover --q 4 --m 3 --out " + base) == 0);
    CHECK(run_cli("verify --kind cc " + base) == 0);
}
