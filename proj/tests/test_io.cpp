#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <doctest.h>

#include "lpproj/io.hpp"

using namespace lpproj;

namespace {

struct TempCsv {
    std::filesystem::path path;
    explicit TempCsv(const std::string& contents) {
        static int counter = 0;
        path = std::filesystem::temp_directory_path() /
               ("lpproj_io_test_" + std::to_string(counter++) + ".csv");
        std::ofstream out(path);
        out << contents;
    }
    ~TempCsv() { std::filesystem::remove(path); }
    MatrixFile file(bool header = false, char delim = ',') const {
        return MatrixFile{path.string(), header, delim};
    }
};

}  // namespace

TEST_CASE("read_matrix examples") {
    {
        const TempCsv f("6,8\n");
        const RealMatrix X = read_matrix(f.file());
        CHECK(X.rows() == 1);
        CHECK(X.cols() == 2);
        CHECK(X(0, 0) == 6.0);
        CHECK(X(0, 1) == 8.0);
    }
    {
        const TempCsv f("3,0\n0,1\n");
        const RealMatrix X = read_matrix(f.file());
        CHECK(X.rows() == 2);
        CHECK(X(1, 1) == 1.0);
    }
    {
        const TempCsv f("a,b\n1.5,-2\n");
        const RealMatrix X = read_matrix(f.file(/*header=*/true));
        CHECK(X.rows() == 1);
        CHECK(X(0, 0) == 1.5);
        CHECK(X(0, 1) == -2.0);
    }
    {
        const TempCsv f("1;2\n3;4\n");
        const RealMatrix X = read_matrix(f.file(false, ';'));
        CHECK(X(1, 0) == 3.0);
    }
}

TEST_CASE("read_matrix error positions") {
    {
        const TempCsv f("1,x\n");
        try {
            read_matrix(f.file());
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.row() == 1);
            CHECK(e.col() == 2);
        }
    }
    {
        const TempCsv f("1,2\n3\n");
        CHECK_THROWS_AS(read_matrix(f.file()), RaggedRows);
    }
    {
        const TempCsv f("");
        CHECK_THROWS_AS(read_matrix(f.file()), IoError);
    }
    CHECK_THROWS_AS(read_matrix(MatrixFile{"/nonexistent/lpproj.csv"}), IoError);
    {
        const TempCsv f("1,inf\n");
        CHECK_THROWS_AS(read_matrix(f.file()), ParseError);
    }
}

TEST_CASE("read_vector accepts a row or a column") {
    {
        const TempCsv f("6,8\n");
        const RealVector v = read_vector(f.file());
        CHECK(v.size() == 2);
        CHECK(v[1] == 8.0);
    }
    {
        const TempCsv f("4\n-2\n");
        const RealVector v = read_vector(f.file());
        CHECK(v.size() == 2);
        CHECK(v[1] == -2.0);
    }
    {
        const TempCsv f("1,2\n3,4\n");
        CHECK_THROWS_AS(read_vector(f.file()), IoError);
    }
}

TEST_CASE("json serialization round-trips bit-exactly") {
    const RealVector v{1.0 / 3.0, -2.718281828459045, 5e-300};
    const nlohmann::json j = to_json(v);
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double back = j[i].get<double>();
        CHECK(back == v[i]);
    }
    // dump/parse cycle preserves the values too
    const nlohmann::json rt = nlohmann::json::parse(j.dump());
    for (std::size_t i = 0; i < v.size(); ++i) {
        CHECK(rt[i].get<double>() == v[i]);
    }
}

TEST_CASE("reports carry the expected fields") {
    const RealVector x{6, 8};
    const RealVector y{4, 2};
    const ProjectionResult r = project_euclidean(y, x);
    const nlohmann::json pj = projection_report(y, x, r, 0.001);
    CHECK(pj.contains("input"));
    CHECK(pj["projection"]["method"] == "euclidean");
    CHECK(pj["projection"].contains("verdict"));
    CHECK(pj.contains("wall_seconds"));
    CHECK(pj["projection"]["alpha"].get<double>() == r.alpha);

    const RealMatrix X{{3, 0}, {0, 1}};
    const Decomposition d = decompose(X, FactorMethod::SvdL2, 2);
    const NormAccounting acc = norm_accounting(X, d);
    const nlohmann::json dj = decompose_report(X, d, acc, 0.002);
    CHECK(dj["decomposition"]["method"] == "svd");
    CHECK(dj["decomposition"]["steps"].size() == 2);
    CHECK(dj["decomposition"].contains("residual_trace"));
    CHECK(dj.contains("norm_accounting"));

    // identical input, identical report text
    const nlohmann::json dj2 = decompose_report(X, d, acc, 0.002);
    CHECK(dj.dump() == dj2.dump());
}

TEST_CASE("write_report produces parseable output") {
    const auto path = std::filesystem::temp_directory_path() / "lpproj_report.json";
    const nlohmann::json j = to_json(RealVector{1, 2, 3});
    write_report(path.string(), j);
    std::ifstream in(path);
    const nlohmann::json back = nlohmann::json::parse(in);
    CHECK(back == j);
    std::filesystem::remove(path);

    CHECK_THROWS_AS(write_report("/nonexistent/dir/r.json", j), IoError);
}

TEST_CASE("method_name strings") {
    CHECK(method_name(ProjectionMethod::Euclidean) == "euclidean");
    CHECK(method_name(ProjectionMethod::L1Operator) == "l1_operator");
    CHECK(method_name(ProjectionMethod::L1Min) == "l1_min");
    CHECK(method_name(FactorMethod::SvdL2) == "svd");
    CHECK(method_name(FactorMethod::TaxicabSvd) == "tsvd");
    CHECK(method_name(FactorMethod::L1MinSvd) == "l1min");
}
