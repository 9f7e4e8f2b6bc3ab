#include <doctest.h>

#include <sstream>

#include "cli.hpp"
#include "oracles.hpp"
#include "tmpdir.hpp"
#include "xscale/xscale.hpp"

using namespace xscale;
using xscale::testing::scratch;
using xscale::testing::slurp;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run xsr(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string path(const std::string& name) { return scratch(name).string(); }

int count_lines(const std::string& s) {
  return static_cast<int>(std::count(s.begin(), s.end(), '\n'));
}

// Writes a small synthetic pair once.
void ensure_pair() {
  static bool done = false;
  if (done) return;
  REQUIRE(xsr({"gen", "--seed", "5", "--size", "64", "--hr", path("cli_hr.png"),
               "--lr", path("cli_lr.png")})
              .code == 0);
  done = true;
}

}  // namespace

TEST_CASE("sr with default settings writes image and manifest") {
  ensure_pair();
  const Run r = xsr({"sr", path("cli_lr.png"), path("cli_sr.png"), "--scale", "2",
                     "--k", "5", "--d", "30", "--l", "3"});
  CHECK(r.code == 0);
  const Image out = load_image(path("cli_sr.png"));
  CHECK(out.width() == 64);
  const std::string manifest = slurp(path("cli_sr.png.manifest.json"));
  CHECK(manifest.find("\"command\": \"sr\"") != std::string::npos);
  CHECK(manifest.find("\"k\": 5") != std::string::npos);
  CHECK(manifest.find("\"wall_time_s\"") != std::string::npos);
}

TEST_CASE("x4 runs as two chained x2 stages") {
  ensure_pair();
  REQUIRE(xsr({"sr", path("cli_lr.png"), path("cli_x4.png"), "--scale", "4",
               "--search-scale", "2"})
              .code == 0);
  const Image lr = load_image(path("cli_lr.png"));
  AggregationConfig cfg;
  const Image expect = super_resolve(super_resolve(lr, cfg), cfg);
  const Image got = load_image(path("cli_x4.png"));
  REQUIRE(got.width() == 128);
  for (std::size_t i = 0; i < got.pixels().size(); ++i)
    CHECK(std::fabs(got.pixels()[i] - expect.pixels()[i]) <= 0.5 / 255.0 + 1e-12);
  REQUIRE(xsr({"sr", path("cli_lr.png"), path("cli_x4s.png"), "--scale", "4",
               "--search-scale", "4", "--d", "12"})
              .code == 0);
  CHECK(load_image(path("cli_x4s.png")).width() == 128);
  CHECK(slurp(path("cli_x4s.png")) != slurp(path("cli_x4.png")));
}

TEST_CASE("sr graph dump") {
  ensure_pair();
  REQUIRE(xsr({"sr", path("cli_lr.png"), path("cli_g.png"), "--k", "2",
               "--dump-graph", path("cli_graph.txt")})
              .code == 0);
  const std::string dump = slurp(path("cli_graph.txt"));
  CHECK(count_lines(dump) == 30 * 30);
  CHECK(dump.rfind("0 0 | ", 0) == 0);
}

TEST_CASE("sr error classes map to exit codes") {
  ensure_pair();
  const Run missing = xsr({"sr", path("nope.png"), path("x.png")});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("i/o error") != std::string::npos);
  CHECK(xsr({"sr", path("cli_lr.png"), path("x.png"), "--l", "1"}).code == 1);
  CHECK(xsr({"sr", path("cli_lr.png"), path("x.png"), "--weighting", "max"}).code == 1);
  CHECK(xsr({"sr", path("cli_lr.png"), path("x.png"), "--k", "99", "--d", "4"}).code == 3);
  CHECK(xsr({"sr"}).code == 1);
  CHECK(xsr({"frobnicate"}).code == 1);
  CHECK(xsr({"--help"}).code == 0);
}

TEST_CASE("eval reports") {
  ensure_pair();
  const Run same = xsr({"eval", path("cli_hr.png"), path("cli_hr.png")});
  CHECK(same.code == 0);
  CHECK(same.out == "{\"psnr_db\":\"inf\",\"ssim\":1.0,\"crop_border\":2}\n");

  // 8-bit pair whose Y MSE is exactly 0.01: offsets of 25 and 26 levels
  // in a 103:101 ratio, since (103*25^2 + 101*26^2) / 204 = 0.01 * 255^2.
  Image lo(204, 12, 1), hi(204, 12, 1);
  for (int r = 0; r < 12; ++r)
    for (int c = 0; c < 204; ++c) {
      const int base = (r * 37 + c * 11) % 200;
      lo.at(r, c, 0) = base / 255.0;
      hi.at(r, c, 0) = (base + (c < 103 ? 25 : 26)) / 255.0;
    }
  save_image(lo, path("off_a.pgm"));
  save_image(hi, path("off_b.pgm"));
  const Run off = xsr({"eval", path("off_a.pgm"), path("off_b.pgm"), "--crop", "0"});
  CHECK(off.code == 0);
  const auto key = off.out.find("\"psnr_db\":");
  REQUIRE(key != std::string::npos);
  CHECK(std::fabs(std::stod(off.out.substr(key + 10)) - 20.0) < 1e-6);
  CHECK(std::fabs(psnr_y(load_image(path("off_a.pgm")), load_image(path("off_b.pgm")), 0) -
                  20.0) < 1e-6);

  const Run mism = xsr({"eval", path("cli_hr.png"), path("cli_lr.png")});
  CHECK(mism.code != 0);
}

TEST_CASE("ablation sweeps") {
  ensure_pair();
  const Run k = xsr({"ablate", path("cli_lr.png"), path("cli_hr.png"), "--axis", "k"});
  REQUIRE(k.code == 0);
  CHECK(count_lines(k.out) == 7);
  CHECK(k.out.rfind("axis\tvalue\tpsnr_db\tssim\tcrop_border\n", 0) == 0);
  CHECK(k.out.find("k\t11\t") != std::string::npos);

  const Run d = xsr({"ablate", path("cli_lr.png"), path("cli_hr.png"), "--axis", "d",
                     "--out", path("abl_d.tsv")});
  REQUIRE(d.code == 0);
  CHECK(count_lines(d.out) == 5);
  CHECK(d.out.find("d\twhole\t") != std::string::npos);
  CHECK(slurp(path("abl_d.tsv")) == d.out);
  CHECK(slurp(path("abl_d.tsv.manifest.json")).find("\"rows\"") != std::string::npos);

  const Run b = xsr({"ablate", path("cli_lr.png"), path("cli_hr.png"), "--axis",
                     "baseline"});
  REQUIRE(b.code == 0);
  CHECK(b.out.find("baseline\tbicubic\t") != std::string::npos);
  CHECK(b.out.find("baseline\tsame-scale-knn\t") != std::string::npos);

  const Run w = xsr({"ablate", path("cli_lr.png"), path("cli_hr.png"), "--axis",
                     "adapn", "--values", "on,off"});
  CHECK(w.code == 0);
  CHECK(count_lines(w.out) == 3);

  CHECK(xsr({"ablate", path("cli_lr.png"), path("cli_hr.png"), "--axis", "sigma"})
            .code == 1);
  CHECK(xsr({"ablate", path("cli_lr.png"), path("cli_lr.png"), "--axis", "k"}).code != 0);
}

TEST_CASE("gen is deterministic and validates size") {
  REQUIRE(xsr({"gen", "--seed", "9", "--size", "64", "--hr", path("g1_hr.png"),
               "--lr", path("g1_lr.png")})
              .code == 0);
  REQUIRE(xsr({"gen", "--seed", "9", "--size", "64", "--hr", path("g2_hr.png"),
               "--lr", path("g2_lr.png")})
              .code == 0);
  CHECK(slurp(path("g1_hr.png")) == slurp(path("g2_hr.png")));
  CHECK(slurp(path("g1_lr.png")) == slurp(path("g2_lr.png")));
  CHECK(slurp(path("g1_hr.png.manifest.json")).find("\"seed\": 9") != std::string::npos);
  const Run bad = xsr({"gen", "--size", "127", "--hr", path("b_hr.png"), "--lr",
                       path("b_lr.png")});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("invalid size") != std::string::npos);
}
