#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "hff/io.hpp"

namespace {

namespace fs = std::filesystem;

struct temp_dir {
    fs::path path;
    temp_dir() {
        path = fs::temp_directory_path() /
               ("hff_io_test_" + std::to_string(std::random_device{}()));
        fs::create_directories(path);
    }
    ~temp_dir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

void put(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
}

}  // namespace

TEST_CASE("values survive a write-read round trip exactly", "[io]") {
    temp_dir dir;
    std::mt19937_64 gen(1);
    std::normal_distribution<double> nd;
    std::vector<double> y(500);
    for (auto& v : y) v = nd(gen) * std::pow(10.0, static_cast<int>(gen() % 7) - 3);

    const std::string one_col = dir.file("plain.csv");
    hff::write_csv(one_col, y);
    const hff::series a = hff::read_csv(one_col);
    REQUIRE_FALSE(a.has_dt);
    REQUIRE(a.y == y);

    const std::string two_col = dir.file("timed.csv");
    hff::write_csv(two_col, y, 0.125, true);
    const hff::series b = hff::read_csv(two_col);
    REQUIRE(b.has_dt);
    REQUIRE(b.dt == Catch::Approx(0.125).epsilon(1e-12));
    REQUIRE(b.y == y);
}

TEST_CASE("header and comment lines are tolerated", "[io]") {
    temp_dir dir;
    const std::string p = dir.file("headed.csv");
    put(p, "# generated record\ntime,value\n0.0,1.5\n1.0,2.5\n2.0,3.5\n");
    const hff::series s = hff::read_csv(p);
    REQUIRE(s.y == std::vector<double>{1.5, 2.5, 3.5});
    REQUIRE(s.has_dt);
    REQUIRE(s.dt == Catch::Approx(1.0));
}

TEST_CASE("malformed input is rejected", "[io]") {
    temp_dir dir;
    const std::string ragged = dir.file("ragged.csv");
    put(ragged, "1.0,2.0\n3.0\n");
    REQUIRE_THROWS_AS(hff::read_csv(ragged), hff::error);

    const std::string midway = dir.file("midway.csv");
    put(midway, "1.0\n2.0\noops\n");
    REQUIRE_THROWS_AS(hff::read_csv(midway), hff::error);

    const std::string empty = dir.file("empty.csv");
    put(empty, "# nothing here\n");
    REQUIRE_THROWS_AS(hff::read_csv(empty), hff::error);

    REQUIRE_THROWS_AS(hff::read_csv(dir.file("missing.csv")), hff::error);

    const std::string wide = dir.file("wide.csv");
    put(wide, "1.0,2.0,3.0\n");
    REQUIRE_THROWS_AS(hff::read_csv(wide), hff::error);
}

TEST_CASE("time jitter beyond a tenth of a percent is fatal", "[io]") {
    temp_dir dir;
    const std::string ok = dir.file("ok.csv");
    // 0.05% wobble on one gap: acceptable
    put(ok, "0.0,1\n1.0,2\n2.0005,3\n3.0005,4\n");
    REQUIRE_NOTHROW(hff::read_csv(ok));

    const std::string bad = dir.file("bad.csv");
    // 2% wobble: rejected
    put(bad, "0.0,1\n1.0,2\n2.02,3\n3.02,4\n");
    REQUIRE_THROWS_AS(hff::read_csv(bad), hff::error);

    const std::string backwards = dir.file("back.csv");
    put(backwards, "3.0,1\n2.0,2\n1.0,3\n");
    REQUIRE_THROWS_AS(hff::read_csv(backwards), hff::error);
}

TEST_CASE("atomic writes leave no temp debris", "[io]") {
    temp_dir dir;
    const std::string p = dir.file("out.csv");
    hff::write_csv(p, {1.0, 2.0});
    hff::write_csv(p, {3.0, 4.0});  // overwrite through the same rename path
    REQUIRE(hff::read_csv(p).y == std::vector<double>{3.0, 4.0});
    std::size_t entries = 0;
    for (const auto& e : fs::directory_iterator(dir.path)) {
        (void)e;
        ++entries;
    }
    REQUIRE(entries == 1);
}

TEST_CASE("semicolon and tab separators parse too", "[io]") {
    temp_dir dir;
    const std::string p = dir.file("semi.csv");
    put(p, "0.0;1.5\n0.5;2.5\n1.0;3.5\n");
    const hff::series s = hff::read_csv(p);
    REQUIRE(s.y.size() == 3);
    REQUIRE(s.dt == Catch::Approx(0.5));
}
