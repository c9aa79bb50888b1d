#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "support.hpp"

using namespace actlab;
namespace fs = std::filesystem;

namespace {

  // Line and column of a parse failure, or {0, 0} when it parses.
  std::pair<std::size_t, std::size_t> error_at(std::string const& text) {
    try {
      parse_monoid(text);
    } catch (TextParseError const& e) {
      return {e.line, e.col};
    }
    return {0, 0};
  }

  fs::path scratch_dir() {
    auto d = fs::temp_directory_path() / ("actlab_io_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()));
    fs::create_directories(d);
    return d;
  }

}  // namespace

TEST(MonoidText, ParsesCommentsNamesAndIdentity) {
  auto mf = parse_monoid("# rz2\n3\n0 1 2\n1 1 2\n2 1 2\nidentity=0\nname 1 x\nname 2 y\n");
  EXPECT_EQ(mf.monoid.order(), 3u);
  EXPECT_EQ(mf.monoid.identity(), 0u);
  EXPECT_EQ(mf.names, (std::vector<std::string>{"0", "x", "y"}));
  // the identity is found without the trailer
  EXPECT_EQ(parse_monoid("2\n0 1\n1 1\n").monoid.identity(), 0u);
}

TEST(MonoidText, RoundTripsEveryFixture) {
  for (auto& [name, nm] : support::fixture_monoids()) {
    auto text = write_monoid(*nm.monoid, nm.names);
    auto back = parse_monoid(text);
    EXPECT_EQ(back.monoid.fingerprint(), nm.monoid->fingerprint()) << name;
    EXPECT_EQ(back.names, nm.names) << name;
    EXPECT_EQ(write_monoid(back.monoid, back.names), text) << name;
  }
}

TEST(MonoidText, ErrorsCarryLineAndColumn) {
  EXPECT_EQ(error_at(""), (std::pair<std::size_t, std::size_t>{1, 1}));
  EXPECT_EQ(error_at("2 2\n0 1\n1 1\n").first, 1u);
  EXPECT_EQ(error_at("2\n0 1\n1 x\n"), (std::pair<std::size_t, std::size_t>{3, 3}));
  EXPECT_EQ(error_at("2\n0 1\n1 5\n"), (std::pair<std::size_t, std::size_t>{3, 3}));
  EXPECT_EQ(error_at("2\n0 1 1\n1 1\n"), (std::pair<std::size_t, std::size_t>{2, 5}));
  EXPECT_EQ(error_at("2\n0 1\n").first, 3u);
  EXPECT_EQ(error_at("2\n0 1\n1 1\nbogus\n"), (std::pair<std::size_t, std::size_t>{4, 1}));
  // (1·1)·1 = 2·1 = 1 while 1·(1·1) = 1·2 = 2
  EXPECT_EQ(error_at("3\n0 1 2\n1 2 2\n2 1 1\n").first, 1u);
  EXPECT_EQ(error_at("2\n1 1\n1 1\n").first, 1u);
}

TEST(ActText, ReadsSamplesAndRoundTrips) {
  auto dir = fs::path(ACTLAB_SOURCE_DIR) / "samples";
  for (auto const* file : {"rz2_rep.act", "cg21_rep.act", "b22_rep.act", "cg21_collapse.act"}) {
    auto af   = read_act(dir / file);
    auto text = write_act(af.act, "m.mon");
    auto tmp  = scratch_dir();
    fs::copy_file(af.monoid_path, tmp / "m.mon", fs::copy_options::overwrite_existing);
    std::ofstream(tmp / "a.act") << text;
    auto back = read_act(tmp / "a.act");
    EXPECT_EQ(back.act.table(), af.act.table()) << file;
    EXPECT_EQ(back.act.size(), af.act.size());
  }
  auto rep = read_act(dir / "rz2_rep.act");
  EXPECT_EQ(rep.act.table(), regular_representation(fixtures::rz2_plus1().monoid).table());
  EXPECT_EQ(rep.monoid_names, (std::vector<std::string>{"1", "x", "y"}));
}

TEST(ActText, RejectsBadActs) {
  auto tmp = scratch_dir();
  std::ofstream(tmp / "rz.mon") << write_monoid(*fixtures::rz2_plus1().monoid);
  auto err = [&](std::string const& text) -> std::size_t {
    try {
      parse_act(text, tmp);
    } catch (TextParseError const& e) {
      return e.line;
    }
    return 0;
  };
  EXPECT_EQ(err("monoid rz.mon\n2\n0 1\n0 0\n0 0\n"), 0u);
  EXPECT_EQ(err("monad rz.mon\n"), 1u);
  EXPECT_EQ(err("monoid rz.mon\n2\n0 1\n0 0\n"), 5u);
  EXPECT_EQ(err("monoid rz.mon\n2\n0 1\n0 0\n1 9\n"), 5u);
  // identity row moves a point
  EXPECT_EQ(err("monoid rz.mon\n2\n1 1\n0 0\n1 1\n"), 2u);
  // y·(x·p) = 1 but (y·x)·p = x·p = 0
  EXPECT_EQ(err("monoid rz.mon\n2\n0 1\n0 0\n1 1\n"), 2u);
  EXPECT_EQ(err("monoid rz.mon\n2\n0 1\n0 0\n0 0\nlabel 0 p\nfoo\n"), 7u);
  EXPECT_THROW(parse_act("monoid missing.mon\n1\n0\n", tmp), Error);
  auto labelled = parse_act("monoid rz.mon\n2\n0 1\n0 0\n0 0\nlabel 0 p\n", tmp);
  EXPECT_EQ(labelled.act.label(0), "p");
  EXPECT_EQ(labelled.act.label(1), "1");
}

TEST(Dot, DrawsNonIdentityEdges) {
  auto rz  = fixtures::rz2_plus1();
  auto rep = regular_representation(rz.monoid);
  auto dot = act_dot(rep, rz.names);
  EXPECT_EQ(dot.rfind("digraph act {", 0), 0u);
  std::size_t edges = 0;
  for (std::size_t p = dot.find("->"); p != std::string::npos; p = dot.find("->", p + 2)) ++edges;
  EXPECT_EQ(edges, 6u);
  EXPECT_NE(dot.find("[label=\"x\"]"), std::string::npos);
  EXPECT_EQ(dot.find("[label=\"1\"];\n  p0 ->"), std::string::npos);
}

TEST(Generate, CountsMatchExhaustiveEnumeration) {
  for (std::size_t n = 1; n <= 4; ++n) {
    auto ms = generate_monoids(n);
    EXPECT_EQ(ms.size(), oracle::monoid_count(n)) << n;
    std::set<std::string> prints;
    for (auto const& m : ms) {
      EXPECT_TRUE(oracle::associative(support::table_of(m)));
      prints.insert(m.fingerprint());
    }
    EXPECT_EQ(prints.size(), ms.size());
  }
  EXPECT_EQ(generate_monoids(4).size(), 35u);
}
