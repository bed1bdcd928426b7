#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "support.hpp"
#include "tatek/io.hpp"
#include "tatek/powerops.hpp"
#include "tatek/verify.hpp"

using namespace tatek;
using testing::q;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "tatek");
  std::vector<const char *> argv;
  for (const auto &a : args)
    argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
public:
  TempDir() {
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() / ("tatek-test-" + std::to_string(rd()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string write(const std::string &name, const std::string &text) const {
    const auto p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

private:
  std::filesystem::path path_;
};

DevotoElement sample_element() {
  std::mt19937_64 rng(41);
  return random_devoto(FiniteGroup::cyclic(3), rng);
}

} // namespace

TEST_CASE("JSON records round-trip") {
  const Cyclotomic c = testing::zeta(12, 5) + Cyclotomic(make_rational(-7, 3));
  CHECK(cyclotomic_from_json(to_json(c)) == c);
  CHECK(cyclotomic_from_json(json("5/10")) == Cyclotomic(make_rational(1, 2)));

  const Series s = (q(-1) + q(2, 3).scaled(c)).truncated(Fraction(5, 2));
  CHECK(series_from_json(to_json(s)) == s);
  CHECK(series_from_json(to_json(q(1))) == q(1));
  CHECK(series_from_json(to_json(q(1))).is_exact());

  for (const auto &g : {FiniteGroup::symmetric(3), FiniteGroup::wreath(FiniteGroup::cyclic(2), 2),
                        FiniteGroup::product(FiniteGroup::cyclic(2), FiniteGroup::symmetric(3))}) {
    const auto back = group_from_json(group_to_json(*g));
    CHECK(back->equals(*g));
    for (int e = 0; e < static_cast<int>(g->size()); ++e)
      CHECK(element_from_json(*back, element_to_json(*g, e)) == e);
  }

  const auto x = sample_element();
  CHECK(devoto_from_json(to_json(x)) == x);
  const auto chi = testing::faithful_linear(FiniteGroup::cyclic(3));
  CHECK(character_from_json(to_json(chi)) == chi);
  const CoeffMap cm{{0, 2}, {3, -1}};
  CHECK(coeffmap_from_json(to_json(cm)) == cm);
}

TEST_CASE("malformed JSON records are rejected") {
  CHECK_THROWS_AS(series_from_json(json::parse(R"({"terms": [{"num": 1, "den": 0, "coeff": 1}]})")), FormatError);
  CHECK_THROWS_AS(series_from_json(json::parse(
                      R"({"terms": [{"num": 1, "den": 2, "coeff": 1}, {"num": 2, "den": 4, "coeff": 1}]})")),
                  FormatError);
  CHECK_THROWS_AS(cyclotomic_from_json(json::parse(R"({"order": 0, "terms": []})")), FormatError);
  CHECK_THROWS_AS(group_from_json(json::parse(R"({"degree": 3, "generators": [[1, 1, 2]]})")), FormatError);

  const auto s3 = group_to_json(*FiniteGroup::symmetric(3));
  const json series = to_json(Series(1));
  json noncommuting = {{"group", s3},
                       {"entries", json::array({{{"g", {2, 1, 3}}, {"h", {1, 3, 2}}, {"series", series}}})}};
  CHECK_THROWS_AS(devoto_from_json(noncommuting), FormatError);
  json duplicate = {{"group", s3},
                    {"entries", json::array({{{"g", {2, 1, 3}}, {"h", {1, 2, 3}}, {"series", series}},
                                             {{"g", {3, 2, 1}}, {"h", {1, 2, 3}}, {"series", series}}})}};
  CHECK_THROWS_AS(devoto_from_json(duplicate), FormatError);
  CHECK_THROWS_AS(coeffmap_from_json(json::parse(R"({"coeffs": [{"i": 1, "c": 1}, {"i": 1, "c": 2}]})")),
                  FormatError);
  json missing = {{"group", s3}, {"values", json::array()}};
  CHECK_THROWS_AS(character_from_json(missing), FormatError);
}

TEST_CASE("cli: jseries") {
  const auto r = run({"jseries", "--order", "2"});
  REQUIRE(r.code == 0);
  const Series j = series_from_json(json::parse(r.out));
  CHECK(j == jseries(2));
  CHECK(j.coefficient(Fraction(1)) == Cyclotomic(196884));
  const auto t = run({"--format", "text", "jseries", "--order", "1"});
  CHECK(t.out == "1*q^(-1) + 196884*q^(1) + O(q^>1)\n");
}

TEST_CASE("cli: hecke with n = 1 echoes its input") {
  TempDir dir;
  const std::string text = to_json(sample_element()).dump(2) + "\n";
  const auto path = dir.write("x.json", text);
  const auto r = run({"hecke", "--n", "1", "--input", path});
  REQUIRE(r.code == 0);
  CHECK(r.out == text);

  const std::string series_text = to_json((q(-1) + q(2)).truncated(Fraction(3))).dump(2) + "\n";
  const auto r2 = run({"hecke", "--n", "1", "--input", dir.write("s.json", series_text)});
  CHECK(r2.out == series_text);
  const auto r3 = run({"hecke", "--n", "2", "--input", dir.write("q.json", to_json(q(1)).dump())});
  CHECK(series_from_json(json::parse(r3.out)) == hecke_T(q(1), 2));
}

TEST_CASE("cli: element operations re-parse to the library values") {
  TempDir dir;
  const auto x = sample_element();
  const auto input = dir.write("x.json", to_json(x).dump());
  const auto group = dir.write("g.json", group_to_json(*x.group()).dump());

  const auto sym = run({"sym", "--n", "2", "--method", "brute", "--input", input, "--group", group});
  REQUIRE(sym.code == 0);
  CHECK(devoto_from_json(json::parse(sym.out)) == sym_str(x, 2, SymMethod::Brute));

  const auto pw = run({"powerop", "--n", "2", "--input", input, "--group", group});
  REQUIRE(pw.code == 0);
  CHECK(devoto_from_json(json::parse(pw.out)) == p_str(x, 2));

  const auto eps = run({"epsilon", "--input", input, "--group", group});
  REQUIRE(eps.code == 0);
  CHECK(series_from_json(json::parse(eps.out)) == epsilon(x));

  const auto capped = run({"--size-cap", "10", "powerop", "--n", "3", "--input", input, "--group", group});
  CHECK(capped.code == 2);
}

TEST_CASE("cli: moonshine commands") {
  TempDir dir;
  const auto fab = run({"faber", "--n", "2", "--j"});
  REQUIRE(fab.code == 0);
  CHECK(json::parse(fab.out).at("text") == "w^2 - 393768");

  CHECK(run({"replicable", "--nmax", "3", "--order", "5", "--j"}).code == 0);
  const auto bad = dir.write("f.json", to_json((q(-1) + q(3)).truncated(Fraction(20))).dump());
  const auto rep = run({"replicable", "--nmax", "2", "--order", "4", "--input", bad});
  CHECK(rep.code == 1);
  CHECK(json::parse(rep.out).at("entries").at(1).at("witness") == "2");

  const auto coeffs = dir.write("c.json", R"({"coeffs": [{"i": 0, "c": 1}, {"i": 1, "c": -2}, {"i": 2, "c": 1}]})");
  CHECK(run({"dmvv", "--coeffs", coeffs, "--t-order", "3", "--q-order", "4"}).code == 0);
  CHECK(run({"denominator", "--order", "2"}).code == 0);
}

TEST_CASE("cli: verify is deterministic") {
  const auto a = run({"verify", "--suite", "all", "--seed", "7"});
  const auto b = run({"verify", "--suite", "all", "--seed", "7"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(json::parse(a.out).at("suites").size() == suite_names().size());
  const auto t = run({"--format", "text", "verify", "--suite", "arith", "--seed", "3"});
  CHECK(t.code == 0);
  CHECK(t.out.rfind("PASS arith:", 0) == 0);
}

TEST_CASE("cli: usage and format errors exit with 2") {
  TempDir dir;
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"jseries"}).code == 2);
  CHECK(run({"jseries", "--order", "zero"}).code == 2);
  CHECK(run({"--format", "yaml", "jseries", "--order", "2"}).code == 2);
  CHECK(run({"verify", "--suite", "nope"}).code == 2);
  CHECK(run({"epsilon", "--input", dir.write("bad.json", "{not json")}).code == 2);
  CHECK(run({"epsilon", "--input", "/nonexistent/file.json"}).code == 2);
  CHECK(run({"faber", "--n", "2"}).code == 2);
  // A Devoto-invalid element is refused rather than silently processed.
  const json invalid = {{"group", group_to_json(*FiniteGroup::cyclic(2))},
                        {"entries", json::array({{{"g", {2, 1}}, {"h", {1, 2}}, {"series", to_json(q(1, 2))}}})}};
  CHECK(run({"hecke", "--n", "2", "--input", dir.write("inv.json", invalid.dump())}).code == 2);
  CHECK(run({"--help"}).code == 0);
}
