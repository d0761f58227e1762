#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "kf/commands.hpp"
#include "kf/matrix_market.hpp"
#include "test_support.hpp"

using namespace kf;
using nlohmann::json;

namespace {

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("kf_test_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter()++));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
    static int& counter() {
        static int c = 0;
        return c;
    }
};

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult invoke(const RunConfig& cfg) {
    std::ostringstream out, err;
    int code = run(cfg, out, err);
    return {code, out.str(), err.str()};
}

json parse_report(const std::string& text) { return json::parse(text); }

void write_identity_rows(const std::string& path, std::size_t d) {
    Matrix m = Matrix::identity(d);
    write_matrix_market_file(path, m);
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("generate then analyze an orthonormal basis") {
    TempDir tmp;
    RunConfig gen;
    gen.command = RunConfig::Command::generate;
    gen.kind = "onb";
    gen.dim = 4;
    gen.count = 4;
    gen.seed = 3;
    gen.out_path = tmp.file("onb.mtx");
    RunResult gr = invoke(gen);
    REQUIRE(gr.code == 0);
    json greport = parse_report(gr.out);
    CHECK(greport["kind"] == "onb");
    CHECK(greport["out"] == gen.out_path);

    RunConfig an;
    an.command = RunConfig::Command::analyze;
    an.matrix_path = gen.out_path;
    RunResult ar = invoke(an);
    REQUIRE(ar.code == 0);
    json rep = parse_report(ar.out);
    CHECK(rep["command"] == "analyze");
    CHECK(rep["system_frame"]["is_onb"] == true);
    CHECK(rep["effectiveness"]["effective"] == true);
    CHECK(rep["effectiveness"]["methods_agree"] == true);
    CHECK(rep["solvability"] == "always_converges");
    CHECK(rep["scales"].is_null());
    double defect = rep["duality_defect"].get<double>();
    CHECK(defect < 1e-10);
}

TEST_CASE("analyze the 60-degree system: golden report numbers") {
    TempDir tmp;
    RunConfig gen;
    gen.command = RunConfig::Command::generate;
    gen.kind = "remark";
    gen.dim = 3;
    gen.count = 3;
    gen.out_path = tmp.file("remark.mtx");
    REQUIRE(invoke(gen).code == 0);

    RunConfig an;
    an.command = RunConfig::Command::analyze;
    an.matrix_path = gen.out_path;
    RunResult ar = invoke(an);
    REQUIRE(ar.code == 0);
    json rep = parse_report(ar.out);
    CHECK(rep["system_frame"]["lower"].get<double>() == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(rep["system_frame"]["upper"].get<double>() == doctest::Approx(1.5).epsilon(1e-10));
    CHECK(rep["auxiliary_frame"]["lower"].get<double>() == doctest::Approx(0.75).epsilon(1e-10));
    CHECK(rep["effectiveness"]["effective"] == false);
    CHECK(rep["effectiveness"]["tight_defect"].get<double>() ==
          doctest::Approx(0.25).epsilon(1e-10));
    CHECK(rep["effectiveness"]["almost_effective_bound"].get<double>() ==
          doctest::Approx(0.25).epsilon(1e-10));
    CHECK(rep["convergence_bound"]["bound"].get<double>() ==
          doctest::Approx(1.875).epsilon(1e-10));
    CHECK(rep["duality_defect"].get<double>() == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(rep["solvability"] == "not_orthogonal_rows");
}

TEST_CASE("analyze output is byte-deterministic") {
    TempDir tmp;
    RunConfig gen;
    gen.command = RunConfig::Command::generate;
    gen.kind = "random_unit";
    gen.dim = 5;
    gen.count = 9;
    gen.seed = 14;
    gen.out_path = tmp.file("sys.mtx");
    REQUIRE(invoke(gen).code == 0);
    RunConfig an;
    an.command = RunConfig::Command::analyze;
    an.matrix_path = gen.out_path;
    RunResult r1 = invoke(an);
    RunResult r2 = invoke(an);
    REQUIRE(r1.code == 0);
    CHECK(r1.out == r2.out);
}

TEST_CASE("analyze rejects non-unit rows unless asked to normalize") {
    TempDir tmp;
    Matrix m(2, 2);
    m(0, 0) = 2.0;
    m(1, 1) = 1.0;
    std::string path = tmp.file("scaled.mtx");
    write_matrix_market_file(path, m);

    RunConfig an;
    an.command = RunConfig::Command::analyze;
    an.matrix_path = path;
    RunResult refuse = invoke(an);
    CHECK(refuse.code == 1);
    CHECK(refuse.err.find("normalize") != std::string::npos);

    an.normalize = true;
    RunResult ok = invoke(an);
    REQUIRE(ok.code == 0);
    json rep = parse_report(ok.out);
    CHECK(rep["normalized"] == true);
    CHECK(rep["scales"][0].get<double>() == doctest::Approx(2.0));
    CHECK(rep["scales"][1].get<double>() == doctest::Approx(1.0));
}

TEST_CASE("analyze a non-spanning system reports reasons instead of values") {
    TempDir tmp;
    Matrix m(2, 3);  // two rows in C^3
    m(0, 0) = 1.0;
    m(1, 1) = 1.0;
    std::string path = tmp.file("plane.mtx");
    write_matrix_market_file(path, m);
    RunConfig an;
    an.command = RunConfig::Command::analyze;
    an.matrix_path = path;
    RunResult r = invoke(an);
    REQUIRE(r.code == 0);
    json rep = parse_report(r.out);
    CHECK(rep["system_frame"]["is_frame"] == false);
    CHECK(rep["effectiveness"].is_null());
    CHECK(rep["effectiveness_reason"].is_string());
    CHECK(rep["convergence_bound"].is_null());
    CHECK(rep["solvability"].is_null());
    CHECK(rep["solvability_reason"] == "matrix is not square");
    CHECK(rep["duality_defect"].is_null());
}

TEST_CASE("solve: cyclic mode on a diagonal system") {
    TempDir tmp;
    Matrix a(3, 3);
    a(0, 0) = 2.0;
    a(1, 1) = 3.0;
    a(2, 2) = 5.0;
    std::string mpath = tmp.file("a.mtx"), bpath = tmp.file("b.txt");
    write_matrix_market_file(mpath, a);
    write_vector_file(bpath, Vector{2.0, 6.0, 15.0});

    RunConfig cfg;
    cfg.command = RunConfig::Command::solve;
    cfg.matrix_path = mpath;
    cfg.rhs_path = bpath;
    cfg.trace_path = tmp.file("trace.csv");
    RunResult r = invoke(cfg);
    REQUIRE(r.code == 0);
    json rep = parse_report(r.out);
    CHECK(rep["converged"] == true);
    CHECK(rep["mode"] == "cyclic");
    CHECK(rep["solution"][0][0].get<double>() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rep["solution"][1][0].get<double>() == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(rep["solution"][2][0].get<double>() == doctest::Approx(3.0).epsilon(1e-12));

    std::ifstream trace(cfg.trace_path);
    std::string header;
    std::getline(trace, header);
    CHECK(header == "iter,residual,error");
    std::size_t rows = 0;
    for (std::string line; std::getline(trace, line);) ++rows;
    CHECK(rows == rep["sweeps_executed"].get<std::size_t>() + 1);
}

TEST_CASE("solve: budget exhaustion exits 2") {
    TempDir tmp;
    Matrix a = testsup::conditioned_matrix(8, 1e5, 44);
    Vector x = testsup::random_unit_vector(8, 45);
    std::string mpath = tmp.file("a.mtx"), bpath = tmp.file("b.txt");
    write_matrix_market_file(mpath, a);
    write_vector_file(bpath, kf::apply(a, x));
    RunConfig cfg;
    cfg.command = RunConfig::Command::solve;
    cfg.matrix_path = mpath;
    cfg.rhs_path = bpath;
    cfg.sweeps = 3;
    cfg.tol = 1e-12;
    RunResult r = invoke(cfg);
    CHECK(r.code == 2);
    json rep = parse_report(r.out);
    CHECK(rep["converged"] == false);
    CHECK(rep["sweeps_executed"] == 3);
}

TEST_CASE("solve: pass mode on unit rows") {
    TempDir tmp;
    UnitVectorSystem sys = generate_system(SystemKind::onb, 4, 4, 5);
    Vector x_true = testsup::random_unit_vector(4, 6);
    LinearSystem s = testsup::system_for(sys, x_true);
    std::string mpath = tmp.file("a.mtx"), bpath = tmp.file("b.txt");
    write_matrix_market_file(mpath, s.a);
    write_vector_file(bpath, s.b);
    RunConfig cfg;
    cfg.command = RunConfig::Command::solve;
    cfg.matrix_path = mpath;
    cfg.rhs_path = bpath;
    cfg.mode = "pass";
    cfg.sweeps = 4;
    cfg.tol = 1e-10;
    RunResult r = invoke(cfg);
    REQUIRE(r.code == 0);
    json rep = parse_report(r.out);
    CHECK(rep["converged"] == true);
    // solution matches the planted target
    Vector sol;
    for (const auto& pair : rep["solution"])
        sol.push_back(Complex{pair[0].get<double>(), pair[1].get<double>()});
    CHECK(dist(sol, x_true) < 1e-9);
}

TEST_CASE("solve: missing file and bad rhs exit 1") {
    TempDir tmp;
    RunConfig cfg;
    cfg.command = RunConfig::Command::solve;
    cfg.matrix_path = tmp.file("missing.mtx");
    cfg.rhs_path = tmp.file("missing.txt");
    CHECK(invoke(cfg).code == 1);

    write_identity_rows(tmp.file("i.mtx"), 2);
    std::ofstream(tmp.file("b.txt")) << "1\n2\n3\n";  // wrong length
    cfg.matrix_path = tmp.file("i.mtx");
    cfg.rhs_path = tmp.file("b.txt");
    CHECK(invoke(cfg).code == 1);
}

TEST_CASE("gseq writes the auxiliary files for the 60-degree system") {
    TempDir tmp;
    RunConfig gen;
    gen.command = RunConfig::Command::generate;
    gen.kind = "remark";
    gen.dim = 4;
    gen.count = 4;
    gen.out_path = tmp.file("remark.mtx");
    REQUIRE(invoke(gen).code == 0);

    RunConfig gs;
    gs.command = RunConfig::Command::gseq;
    gs.matrix_path = gen.out_path;
    gs.out_prefix = tmp.file("out");
    RunResult r = invoke(gs);
    REQUIRE(r.code == 0);
    json rep = parse_report(r.out);
    CHECK(rep["files"]["c"] == tmp.file("out_C.mtx"));

    // C file: coordinate format with exactly one strict-lower entry, -1/2
    // (loading re-normalizes rows, so allow last-bit dirt)
    Matrix c = parse_matrix_market_file(tmp.file("out_C.mtx"));
    CHECK(std::abs(c(1, 0) - Complex{-0.5, 0.0}) < 1e-15);
    std::size_t off_diag = 0;
    for (std::size_t i = 0; i < c.rows; ++i)
        for (std::size_t j = 0; j < c.cols; ++j)
            if (i != j && c(i, j) != Complex{}) ++off_diag;
    CHECK(off_diag == 1);

    // M file holds the 1/2 correlation
    Matrix m = parse_matrix_market_file(tmp.file("out_M.mtx"));
    CHECK(std::abs(m(1, 0) - Complex{0.5, 0.0}) < 1e-15);

    // g file rows are the conjugated auxiliary vectors
    Matrix g = parse_matrix_market_file(tmp.file("out_g.mtx"));
    REQUIRE(g.rows == 4);
    CHECK(std::abs(g(1, 0)) == 0.0);
    CHECK(std::abs(g(1, 1) - Complex{std::sqrt(3.0) / 2.0, 0.0}) < 1e-15);
}

TEST_CASE("bound command reports the golden factor") {
    TempDir tmp;
    RunConfig gen;
    gen.command = RunConfig::Command::generate;
    gen.kind = "remark";
    gen.dim = 3;
    gen.count = 3;
    gen.out_path = tmp.file("remark.mtx");
    REQUIRE(invoke(gen).code == 0);
    RunConfig b;
    b.command = RunConfig::Command::bound;
    b.matrix_path = gen.out_path;
    RunResult r = invoke(b);
    REQUIRE(r.code == 0);
    json rep = parse_report(r.out);
    CHECK(rep["a1"].get<double>() == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(rep["c1"].get<double>() == doctest::Approx(0.75).epsilon(1e-10));
    CHECK(rep["bound"].get<double>() == doctest::Approx(1.875).epsilon(1e-10));
    CHECK(rep["reason"].is_null());
}

TEST_CASE("generate validates shapes through the CLI layer") {
    TempDir tmp;
    RunConfig gen;
    gen.command = RunConfig::Command::generate;
    gen.kind = "onb";
    gen.dim = 3;
    gen.count = 4;  // invalid for onb
    gen.out_path = tmp.file("bad.mtx");
    RunResult r = invoke(gen);
    CHECK(r.code == 1);
    CHECK_FALSE(r.err.empty());
    gen.kind = "nonsense";
    gen.count = 3;
    CHECK(invoke(gen).code == 1);
}

}  // TEST_SUITE
