#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "spochar/charformulas.hpp"
#include "spochar/cli.hpp"
#include "spochar/json_io.hpp"

using namespace spochar;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args)
{
  std::ostringstream out, err;
  int code = run_main(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path fresh_dir(const std::string &name)
{
  fs::path d = fs::temp_directory_path() / ("spochar-test-" + name + "-" + std::to_string(::getpid()));
  fs::remove_all(d);
  return d;
}

} // namespace

TEST_CASE("kac character with vdim 4")
{
  Run r = cli({"kac", "--algebra", "2|3", "--weight", "1d1", "--format", "json", "--no-cache"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["kind"] == "kac");
  CHECK(j["vdim"] == 4);
  Algebra a(1, 3);
  CHECK(laurent_from_json(j["character"]) == kac_character(a, Weight::parse(a, "1d1")));
}

TEST_CASE("decompose K(2|1) into three factors")
{
  Run r = cli({"decompose", "--algebra", "2|3", "--kac", "2d1+1e1", "--basis", "irr", "--format", "json", "--no-cache"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["factors"].size() == 3);
  CHECK(j["remainder_zero"] == true);
  CHECK(j["blocks_consistent"] == true);
}

TEST_CASE("dim L(3|2) is 70")
{
  Run r = cli({"dim", "--algebra", "2|3", "--irr", "3d1+2e1", "--no-cache"});
  CHECK(r.code == 0);
  CHECK(r.out == "70\n");
}

TEST_CASE("latex output uses bracket notation")
{
  Run r = cli({"decompose", "--kac", "1d1", "--format", "latex", "--no-cache"});
  CHECK(r.code == 0);
  CHECK(r.out.find("[L(1|0)] - [L(0|0)]") != std::string::npos);
}

TEST_CASE("exit codes")
{
  CHECK(cli({"kac", "--weight", "zz", "--no-cache"}).code == kExitParse);
  CHECK(cli({"kac", "--no-cache"}).code == kExitParse);
  CHECK(cli({"frobnicate"}).code == kExitParse);
  CHECK(cli({"kac", "--weight", "1d1", "--format", "yaml", "--no-cache"}).code == kExitParse);
  CHECK(cli({"kac", "--algebra", "3|3", "--weight", "1d1", "--no-cache"}).code == kExitParse);
  CHECK(cli({"--version"}).code == kExitOk);
}

TEST_CASE("cache hits are byte identical")
{
  fs::path dir = fresh_dir("cache");
  std::vector<std::string> args{"euler", "--algebra", "4|3", "--parabolic", "retain=d1-d2", "--levi-module", "irr:2d1",
                                "--format", "json", "--cache-dir", dir.string()};
  Run first = cli(args);
  REQUIRE(first.code == 0);
  std::size_t files = 0;
  for (const auto &e : fs::directory_iterator(dir)) {
    ++files;
    CHECK(e.path().extension() == ".json");
    CHECK(e.path().stem().string() == cache_key(parse_command(args)));
  }
  CHECK(files == 1);
  Run second = cli(args);
  CHECK(second.out == first.out);
  std::vector<std::string> uncached = args;
  uncached.push_back("--no-cache");
  CHECK(cli(uncached).out == first.out);
  fs::remove_all(dir);
}

TEST_CASE("cache key ignores cache options")
{
  Command a = parse_command({"kac", "--weight", "1d1", "--cache-dir", "/x"});
  Command b = parse_command({"kac", "--weight", "1d1", "--no-cache"});
  CHECK(cache_key(a) == cache_key(b));
  Command c = parse_command({"kac", "--weight", "2d1"});
  CHECK(cache_key(a) != cache_key(c));
  CHECK(cache_key(a).size() == 16);
}

TEST_CASE("failed commands are not cached")
{
  fs::path dir = fresh_dir("fail");
  CHECK(cli({"kac", "--weight", "zz", "--cache-dir", dir.string()}).code == kExitParse);
  CHECK((!fs::exists(dir) || fs::is_empty(dir)));
  fs::remove_all(dir);
}

TEST_CASE("batch keeps input order")
{
  fs::path dir = fresh_dir("batch");
  fs::create_directories(dir);
  fs::path file = dir / "jobs.txt";
  {
    std::ofstream f(file);
    f << "# comment\n";
    f << "dim --irr 3d1+2e1\n";
    f << "dim --kac 1d1\n";
    f << "dim --partition 2,1\n";
    f << "kac --weight zz\n";
    f << "dim --algebra '4|3' --partition 1\n";
  }
  Run r = cli({"batch", "--file", file.string(), "--jobs", "3", "--format", "json", "--cache-dir", (dir / "c").string()});
  CHECK(r.code == kExitParse);
  json j = json::parse(r.out);
  REQUIRE(j.size() == 5);
  CHECK(j[0]["result"]["dim"] == 70);
  CHECK(j[1]["result"]["dim"] == 4);
  CHECK(j[2]["result"]["dim"] == 35);
  CHECK(j[3]["exit"] == kExitParse);
  CHECK(j[4]["result"]["dim"] == 7);
  fs::remove_all(dir);
}

TEST_CASE("other subcommands succeed")
{
  for (std::vector<std::string> args : {
           std::vector<std::string>{"jt", "--partition", "2,1"},
           {"jt", "--partition", "1,1", "--form", "e"},
           {"irr", "--weight", "2d1"},
           {"euler", "--algebra", "2|4", "--parabolic", "remove=e1+e2", "--levi-module", "natural"},
           {"block", "--weight", "1d1", "--with", "0"},
           {"tensor-table", "--lmax", "2"},
           {"laplacian", "--algebra", "2|5", "--degree", "2", "--report"},
           {"identities", "--n", "1"},
           {"conjecture-check", "--bound", "3"},
           {"reproduce-paper", "--criterion", "6"},
       }) {
    for (const char *fmt : {"text", "json", "latex"}) {
      std::vector<std::string> full = args;
      full.insert(full.end(), {"--format", fmt, "--no-cache"});
      Run r = cli(full);
      INFO(args[0] << " " << fmt << ": " << r.err);
      CHECK(r.code == 0);
      CHECK_FALSE(r.out.empty());
      if (std::string(fmt) == "json")
        CHECK(json::accept(r.out));
    }
  }
}

TEST_CASE("json round trip of euler output")
{
  Run r = cli({"euler", "--algebra", "2|4", "--parabolic", "remove=e1+e2", "--levi-module", "trivial", "--format", "json", "--no-cache"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(laurent_from_json(j["character"]) == LaurentPoly::constant(Lattice{1, 2}, 2));
  CHECK(json::parse(j.dump(2)) == j);
}
