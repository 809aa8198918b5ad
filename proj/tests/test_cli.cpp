#include <doctest.h>

#include "novikov/constructions.hpp"
#include "novikov/dsl.hpp"
#include "novikov/report.hpp"
#include "support/corpus.hpp"
#include "support/util.hpp"

using namespace novikov;
using novikov::test::vq;

namespace {

const FieldSpec Q = FieldSpec::rational();

SourcePos parse_failure(std::string_view text) {
  try {
    parse_algebra_file(text);
  } catch (const ParseError& e) {
    return e.pos();
  }
  FAIL("expected a parse error for: " << text);
  return {};
}

std::string error_code(const AlgebraDoc& doc, ReportOptions o) {
  try {
    run_report(doc, o);
  } catch (const Error& e) {
    return std::string(error_code_name(e.code()));
  }
  return "";
}

ReportOptions cmd(std::string c) {
  ReportOptions o;
  o.command = std::move(c);
  return o;
}

AlgebraDoc random_doc(FieldSpec f, Rng& rng) {
  std::uniform_int_distribution<std::size_t> dim(1, 4);
  const std::size_t n = dim(rng);
  AlgebraTable a(f, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (rng() % 2) a.set_product(i, j, random_vector(f, n, rng, 4));
  std::vector<std::pair<std::string, LinearMap>> maps;
  if (rng() % 2) maps.emplace_back("d", LinearMap(novikov::test::random_matrix(f, n, n, rng)));
  if (rng() % 3 == 0) maps.emplace_back("z", LinearMap::zero(f, n));
  return make_doc(a, maps);
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("parse examples") {
  const AlgebraDoc a2 = parse_algebra_file("field rational\nbasis e1 e2\nmul e1 e1 = e2");
  CHECK(a2.table() == running_example());
  CHECK(a2.basis == std::vector<std::string>{"e1", "e2"});

  const AlgebraDoc g = parse_algebra_file("field gf 3\nbasis a\nmul a a = 2*a");
  CHECK(g.field == FieldSpec::prime(3));
  CHECK(g.table().product(0, 0) == novikov::test::vec(g.field, {2}));

  const SourcePos pos = parse_failure("field rational\nbasis e1 e2\nmul e1 e9 = e1");
  CHECK(pos.line == 3);
  CHECK(pos.column == 8);
}

TEST_CASE("combos, comments and maps") {
  const AlgebraDoc d = parse_algebra_file(
      "# header\n"
      "field rational   # inline\n"
      "\n"
      "basis x y z\n"
      "mul x x = -y + 1/2*z\n"
      "mul x y=3*z-y\n"
      "mul y y = 0\n"
      "map d x = x\n"
      "map d y = 2*y\n");
  const AlgebraTable t = d.table();
  CHECK(t.product(0, 0) == Vector{Scalar(Q, 0L), Scalar(Q, -1L), Scalar(Q, mpq_class(1, 2))});
  CHECK(t.product(0, 1) == vq({0, -1, 3}));
  CHECK(t.product(1, 1) == vq({0, 0, 0}));
  CHECK(d.linear_map("d")(vq({1, 1, 1})) == vq({1, 2, 0}));
  CHECK(parse_combo(d, "x - x") == vq({0, 0, 0}));
  CHECK(format_combo(d.basis, Vector{Scalar(Q, -1L), Scalar(Q, mpq_class(1, 2)), Scalar(Q, 0L)}) ==
        "-x + 1/2*y");
  CHECK(format_combo(d.basis, vq({0, 0, 0})) == "0");
}

TEST_CASE("diagnostics") {
  CHECK(parse_failure("field gf 4\n").column == 10);
  CHECK(parse_failure("field gf 3\nbasis a\nmul a a = 1/3*a\n").line == 3);
  CHECK(parse_failure("field rational\nbasis a\nmul a a = a\nmul a a = 2*a\n").line == 4);
  CHECK(parse_failure("field rational\nbasis a\nmap d a = a\nmap d a = a\n").line == 4);
  CHECK(parse_failure("field rational\nbasis a a\n").column == 9);
  CHECK(parse_failure("field rational\nbasis a\nmul a a = 2a\n").column == 12);
  CHECK(parse_failure("field rational\nbasis a\nmul a a = a +\n").line == 3);
  CHECK(parse_failure("field rational\nbasis a\nmul a a a\n").column == 9);
  CHECK(parse_failure("field rational\nbasis a\nmul a a = a $\n").column == 13);
  CHECK(parse_failure("field rational\nbasis a\nproduct a a = a\n").column == 1);
  CHECK(parse_failure("basis a\n").line == 1);
  CHECK_THROWS_AS(parse_algebra_file("field rational\n"), ParseError);
  CHECK(parse_failure("field rational\nbasis a\nmul a a = 1/0*a\n").line == 3);
}

TEST_CASE("parse and serialize round-trip") {
  Rng rng(101);
  for (FieldSpec f : {Q, FieldSpec::prime(3), FieldSpec::prime(7)}) {
    for (int t = 0; t < 40; ++t) {
      const AlgebraDoc d = random_doc(f, rng);
      const std::string text = serialize(d);
      const AlgebraDoc back = parse_algebra_file(text);
      CHECK(back == d);
      CHECK(serialize(back) == text);
    }
  }
  const auto [b, d] = example1_algebra(3);
  const AlgebraDoc e = make_doc(b, {{"d", d}});
  CHECK(parse_algebra_file(serialize(e)) == e);
  const AlgebraDoc u = make_doc(adjoin_unit(truncated_poly(3, false)));
  CHECK(u.basis.front() == "u1");
  CHECK(parse_algebra_file(serialize(u)) == u);
}

TEST_CASE("report examples") {
  const AlgebraDoc a2 = make_doc(running_example());
  ReportOptions r = cmd("radical");
  r.kind = "baer";
  const Json rad = run_report(a2, r);
  CHECK(rad["result"]["radical"]["dim"] == 2);
  CHECK(rad["route"].get<std::string>().find("A/[A,A] nilradical preimage") != std::string::npos);
  CHECK(rad["version"] == std::string(kVersion));
  CHECK(rad["field"] == "rational");

  const Json chk = run_report(a2, cmd("check"));
  for (const auto& [k, v] : chk["result"]["identities"].items()) CHECK(v["holds"] == true);

  const Json fld = run_report(make_doc(field_algebra(Q)), r);
  CHECK(fld["result"]["radical"]["dim"] == 0);
  CHECK(render_json(run_report(a2, r)) == render_json(rad));
}

TEST_CASE("report commands") {
  const auto [b, d] = novikov::test::truncated_euler(4);
  const AlgebraDoc doc = make_doc(b, {{"d", d}});
  ReportOptions g = cmd("gd");
  g.derivation = "d";
  const Json gd = run_report(doc, g);
  CHECK(gd["result"]["novikov"] == true);
  const AlgebraDoc gdoc = parse_algebra_file(gd["result"]["dsl"].get<std::string>());
  CHECK(gdoc.table() == gd_construct(b, d));

  ReportOptions s = cmd("series");
  s.kind = "right";
  CHECK(run_report(gdoc, s)["result"]["index"] == 4);

  ReportOptions q = cmd("quasi-inverse");
  q.element = "t";
  q.lift = true;
  const Json qi = run_report(gdoc, q);
  CHECK(qi["result"]["y"] == "-t - t2 - t3");
  CHECK(qi["result"]["lift"]["agrees_with_solve"] == true);

  ReportOptions c = cmd("certify");
  c.claim = "theorem1";
  c.element = "t";
  c.ideal = {"t2", "t3"};
  c.n = 2;
  const Json cert = run_report(gdoc, c);
  CHECK(cert["result"]["holds"] == true);
  CHECK(cert["result"]["rechecked"] == true);
  CHECK(cert["result"]["s_sequence"][0] == 2);
}

TEST_CASE("report error codes") {
  const AlgebraDoc a2 = make_doc(running_example());
  ReportOptions c = cmd("certify");
  c.claim = "theorem1";
  c.element = "e1";
  c.ideal = {"e1"};
  c.n = 1;
  CHECK(error_code(a2, c) == "NOT_AN_IDEAL");

  ReportOptions r = cmd("radical");
  r.kind = "baer";
  CHECK(error_code(make_doc(running_example(FieldSpec::prime(2))), r) == "CHAR_TWO_UNSUPPORTED");

  const AlgebraDoc witt = parse_algebra_file(
      "field gf 3\nbasis u t s\n"
      "mul u t = u\nmul u s = 2*t\nmul t t = t\nmul t s = 2*s\nmul s t = s\n");
  REQUIRE(is_novikov(witt.table()));
  CHECK(error_code(witt, r) == "NOT_LIE_SOLVABLE");

  ReportOptions o = cmd("oracle");
  o.task = "tower";
  CHECK(error_code(make_doc(zero_algebra(FieldSpec::prime(3), 5)), o) == "BUDGET_EXCEEDED");
  CHECK(error_code(a2, cmd("frobnicate")) == "INVALID_ARGUMENT");

  const Json e = error_report("radical", ErrorCode::NotLieSolvable, "nope");
  CHECK(e["error"]["code"] == "NOT_LIE_SOLVABLE");
}

}
