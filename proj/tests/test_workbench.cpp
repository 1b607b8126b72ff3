// Generators, file formats, configuration, and the report suite plumbing.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>

#include "addcomb/generators.hpp"
#include "addcomb/io.hpp"
#include "addcomb/suite.hpp"

using namespace addcomb;

namespace {

IntSet ints(std::initializer_list<long> xs) {
  std::vector<Int> v;
  for (long x : xs) v.emplace_back(x);
  return IntSet(std::move(v));
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name, const std::string& content)
      : path("/tmp/addcomb_test_" + name) {
    std::ofstream f(path);
    f << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("random source is deterministic and in range") {
  Rng a(123);
  Rng b(123);
  for (int i = 0; i < 5; ++i) CHECK(a.raw() == b.raw());

  Rng r(7);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 100; ++i) {
    const std::uint64_t v = r.below(3);
    CHECK(v < 3);
    seen.insert(v);
  }
  CHECK(seen.size() == 3);
  for (int i = 0; i < 100; ++i) {
    const long long v = r.range(-5, 5);
    CHECK(v >= -5);
    CHECK(v <= 5);
  }
}

TEST_CASE("generator specs parse, validate, and round-trip") {
  const GeneratorSpec gp = GeneratorSpec::parse("gp:start=1,ratio=2,len=8");
  CHECK(gp.kind == "gp");
  CHECK(gp.params.at("ratio") == 2);
  CHECK(GeneratorSpec::parse(gp.str()).str() == gp.str());

  const GeneratorSpec seeded = GeneratorSpec::parse("random_int:count=5,bound=100,seed=42");
  CHECK(seeded.seed == 42);

  CHECK_THROWS_AS(GeneratorSpec::parse("gp:start=1,ratio=2"), std::invalid_argument);
  CHECK_THROWS_AS(GeneratorSpec::parse("gp:start=1,ratio=2,len=8,extra=1"),
                  std::invalid_argument);
  CHECK_THROWS_AS(GeneratorSpec::parse("martian:x=1"), std::invalid_argument);
}

TEST_CASE("generators produce the documented sets") {
  CHECK(ap_set(5, 7, 4) == ints({5, 12, 19, 26}));
  CHECK(gp_set(1, 2, 4) == ints({1, 2, 4, 8}));

  const GeneratedSet cube = generate(GeneratorSpec::parse("cube:d=2,side=3"));
  REQUIRE(cube.is_lattice());
  CHECK(cube.lattice().size() == 9);

  const GeneratedSet dil = generate(GeneratorSpec::parse("dilate_union:len=3,q1=2,q2=5"));
  REQUIRE_FALSE(dil.is_lattice());
  CHECK(dil.ints() == ints({0, 2, 4, 5, 10}));

  const GeneratedSet box = generate(GeneratorSpec::parse("smooth_box:p=3,e=1"));
  CHECK(box.ints() == ints({1, 2, 3, 6}));

  GeneratorSpec ri = GeneratorSpec::parse("random_int:count=12,bound=50");
  ri.seed = 9;
  const GeneratedSet r1 = generate(ri);
  const GeneratedSet r2 = generate(ri);
  CHECK(r1.ints() == r2.ints());
  CHECK(r1.ints().size() == 12);
  for (const Int& x : r1.ints()) {
    CHECK(x >= 1);
    CHECK(x <= 50);
  }

  GeneratorSpec rl = GeneratorSpec::parse("random_lattice:d=3,count=20,bound=4");
  rl.seed = 9;
  const GeneratedSet l1 = generate(rl);
  CHECK(l1.lattice().size() == 20);
  CHECK(l1.lattice().dimension() == 3);
}

TEST_CASE("set files parse comments, directives, and malformed input") {
  const SetFile f = parse_set_text("# a comment\n\n3\n1\n2\n");
  REQUIRE_FALSE(f.is_lattice());
  CHECK(f.ints() == ints({1, 2, 3}));

  const SetFile lat = parse_set_text("0,1\n1,5\n0,0\n");
  REQUIRE(lat.is_lattice());
  CHECK(lat.lattice().dimension() == 2);
  CHECK(lat.lattice().size() == 3);

  const SetFile line = parse_set_text("# dim=1\n4\n7\n");
  REQUIRE(line.is_lattice());
  CHECK(line.lattice().dimension() == 1);

  CHECK_THROWS_AS(parse_set_text(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_set_text("# only comments\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_set_text("1,2\n3\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_set_text("1,2\n3,4,5\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_set_text("abc\n"), std::invalid_argument);
}

TEST_CASE("serialization round-trips both set kinds") {
  SetFile f;
  f.value = ints({-3, 0, 11});
  const SetFile f2 = parse_set_text(serialize_set(f));
  CHECK(f2.ints() == f.ints());

  SetFile lat;
  lat.value = lattice_cube(1, 3);  // one-dimensional: needs the dim directive
  const SetFile lat2 = parse_set_text(serialize_set(lat));
  REQUIRE(lat2.is_lattice());
  CHECK(lat2.lattice().dimension() == 1);
  CHECK(lat2.lattice().size() == 3);

  Rng rng(31);
  for (int i = 0; i < 50; ++i) {
    SetFile g;
    if (i % 2 == 0) {
      g.value = random_int_set(rng, 1 + rng.below(20), 1000);
      const SetFile back = parse_set_text(serialize_set(g));
      CHECK(back.ints() == g.ints());
    } else {
      const int d = 1 + static_cast<int>(rng.below(4));
      std::size_t cap = 1;  // coords lie in [0,6], so 7^d distinct points exist
      for (int j = 0; j < d; ++j) cap *= 7;
      g.value = random_lattice_set(rng, d, 1 + rng.below(std::min<std::size_t>(20, cap)), 6);
      const SetFile back = parse_set_text(serialize_set(g));
      REQUIRE(back.is_lattice());
      CHECK(back.lattice().dimension() == d);
      CHECK(serialize_set(back) == serialize_set(g));
    }
  }
}

TEST_CASE("weighted files round-trip and reject duplicates") {
  const WeightedSet w = parse_weighted_text("2,1/2\n# note\n5,3\n");
  CHECK(w.entries().at(2) == Rat(1, 2));
  CHECK(w.entries().at(5) == Rat(3));
  const WeightedSet w2 = parse_weighted_text(serialize_weighted(w));
  CHECK(w2 == w);

  CHECK_THROWS_AS(parse_weighted_text("2,1\n2,3\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_weighted_text("2,0\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_weighted_text("2\n"), std::invalid_argument);
}

TEST_CASE("ledger JSON uses exact rational strings") {
  Ledger led;
  led.push_back(make_check("a third", Rat(1, 3), "<=", Rat(2)));
  led.push_back(make_informational("context", Rat(5), "==", Rat(5)));
  const nlohmann::ordered_json rows = ledger_to_json(led);
  CHECK(rows[0]["lhs"] == "1/3");
  CHECK(rows[0]["rhs"] == "2");
  CHECK(rows[0]["pass"] == true);
  CHECK(rows[0].contains("informational") == false);
  CHECK(rows[1]["informational"] == true);

  const Ledger back = ledger_from_json(rows);
  CHECK(ledger_to_json(back).dump() == rows.dump());

  const std::string table = render_ledger_table(led);
  CHECK(table.find("a third") != std::string::npos);
  CHECK(table.find("info") != std::string::npos);
}

TEST_CASE("run configuration parses, validates, and round-trips") {
  const RunConfig cfg = RunConfig::parse("epsilon=1/4\nk_list=2,3\nseed=11\n# note\n");
  CHECK(cfg.epsilon.num == 1);
  CHECK(cfg.epsilon.den == 4);
  CHECK(cfg.k_list == std::vector<unsigned long>{2, 3});
  CHECK(cfg.seed == 11);
  CHECK(RunConfig::parse(cfg.str()).str() == cfg.str());

  CHECK_THROWS_AS(RunConfig::parse("mystery=1\n"), std::invalid_argument);
  CHECK_THROWS_AS(RunConfig::parse("epsilon=0/2\n"), std::invalid_argument);
  CHECK_THROWS_AS(RunConfig::parse("k_list=9\n"), std::invalid_argument);
  CHECK_THROWS_AS(RunConfig::parse("oracle_max_leaves=15\n"), std::invalid_argument);
  CHECK_THROWS_AS(RunConfig::parse("max_points=0\n"), std::invalid_argument);

  const TempFile file("config.txt", "seed=21\nepsilon=1/2\n");
  CHECK(RunConfig::from_file(file.path).seed == 21);
}

TEST_CASE("golden values: defaults, overrides, and unknown keys") {
  const GoldenValues g = GoldenValues::defaults();
  CHECK(g.at("chang_worked_lhs") == 6);
  CHECK(g.at("chang_worked_rhs") == 12);
  CHECK(g.at("smooth_box_size") == 64);
  CHECK(g.at("smooth_box_product3") == 1000);
  CHECK(g.at("gp8_product3") == 22);
  CHECK(g.at("gp8_product7") == 50);
  CHECK_THROWS_AS(g.at("nonsense"), std::invalid_argument);

  const TempFile override_file("golden.txt", "smooth_box_size=63\n");
  const GoldenValues o = GoldenValues::from_file(override_file.path);
  CHECK(o.at("smooth_box_size") == 63);
  CHECK(o.at("gp8_product3") == 22);  // untouched defaults survive

  const TempFile bad("golden_bad.txt", "who_knows=1\n");
  CHECK_THROWS_AS(GoldenValues::from_file(bad.path), std::invalid_argument);
}

TEST_CASE("suite items are canonical and selectable") {
  const auto& ids = suite_item_ids();
  CHECK(ids.size() == 11);
  CHECK(std::is_sorted(ids.begin(), ids.end()));
  CHECK(std::set<std::string>(ids.begin(), ids.end()).size() == ids.size());

  RunConfig cfg;
  cfg.items = {"moment_oracle"};
  const SuiteReport rep = run_suite(cfg);
  REQUIRE(rep.items.size() == 1);
  CHECK(rep.items[0].id == "moment_oracle");
  CHECK(rep.items[0].pass);
  CHECK(rep.all_pass);

  RunConfig bad;
  bad.items = {"not_an_item"};
  CHECK_THROWS_AS(run_suite(bad), std::invalid_argument);
}

TEST_CASE("reports are byte-identical across runs") {
  RunConfig cfg;
  cfg.items = {"smooth_audit", "moment_oracle"};
  const SuiteReport a = run_suite(cfg);
  const SuiteReport b = run_suite(cfg);
  CHECK(report_to_json(a).dump(2) == report_to_json(b).dump(2));

  const nlohmann::ordered_json j = report_to_json(a);
  CHECK(j["suite"] == "addcomb-acceptance");
  CHECK(j["rng"] == "mt19937_64+rejection");
  CHECK(j["seed"] == 7);
  CHECK(j["items"].size() == 2);
  CHECK(j["all_pass"] == true);

  const std::string table = report_to_table(a);
  CHECK(table.find("moment_oracle") != std::string::npos);
  CHECK(table.find("overall: pass") != std::string::npos);
}

TEST_CASE("a corrupted golden file turns the matching check red") {
  const TempFile bad_golden("golden_corrupt.txt", "smooth_box_size=63\n");
  RunConfig cfg;
  cfg.items = {"smooth_audit"};
  cfg.golden = bad_golden.path;
  const SuiteReport rep = run_suite(cfg);
  REQUIRE(rep.items.size() == 1);
  CHECK_FALSE(rep.items[0].pass);
  CHECK_FALSE(rep.all_pass);
  bool found = false;
  for (const CheckResult& row : rep.items[0].ledger) {
    if (!row.pass && !row.informational &&
        row.claim.find("frozen") != std::string::npos) {
      found = true;
      CHECK(row.lhs == Rat(64));
      CHECK(row.rhs == Rat(63));
    }
  }
  CHECK(found);
}

TEST_CASE("report files are written where the config points") {
  RunConfig cfg;
  cfg.items = {"moment_oracle"};
  cfg.out_json = "/tmp/addcomb_test_report.json";
  cfg.out_table = "/tmp/addcomb_test_report.txt";
  const SuiteReport rep = run_suite(cfg);
  CHECK(emit_report(rep) == 0);

  std::ifstream jf(cfg.out_json);
  REQUIRE(jf.good());
  nlohmann::ordered_json parsed;
  jf >> parsed;
  CHECK(parsed["all_pass"] == true);
  std::remove(cfg.out_json.c_str());
  std::remove(cfg.out_table.c_str());
}
