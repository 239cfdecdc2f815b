#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "srw/harness.hpp"

using namespace srw;

namespace {

TheoremReport run(const FiniteSemiring& S, const char* id) {
  const VerificationContext ctx("test", default_view(S));
  const auto ids = parse_theorem_ids(id);
  REQUIRE(ids.size() == 1);
  return verify(ctx, ids[0]);
}

// B2 x B2 with the pseudocomplements of (0,1) and (1,0) exchanged.
VerificationContext swapped_b2xb2() {
  const auto P = testing::b2xb2();
  VerificationContext ctx("b2xb2-swapped", default_view(P));
  ctx.override_pc_analysis(PcAnalysis::from_pseudocomplements(P, {Element{3}, Element{1}, Element{2}, Element{0}}));
  return ctx;
}

std::vector<CorpusMember> small_corpus() {
  return build_corpus({parse_generator_spec("exhaustive(3)"), parse_generator_spec("chain(4)"),
                       parse_generator_spec("ideal_semiring_of_Zm(8)"), parse_generator_spec("powerset(2)"),
                       parse_generator_spec("stacked_diamond()")});
}

}  // namespace

TEST_CASE("theorem catalog") {
  const auto& cat = theorem_catalog();
  std::vector<std::string> names;
  for (const auto& id : cat) names.push_back(id.to_string());
  const std::vector<std::string> expected = {
      "PSEUDO1.1", "PSEUDO1.2", "PSEUDO1.3", "PSEUDO1.4", "PSEUDO1.5", "PSEUDO1.6", "PSEUDO1.7",
      "PSEUDO1.8", "PCFN-MIN",  "PCFN-MIN2", "MINPRIME-PC", "STONE1.1", "STONE1.2", "STONE1.3",
      "SIMPLE",    "BDL",       "PBDL",      "STONE2",    "SKEL1",     "SKEL-BOOL", "MI.1",
      "MI.2",      "MI.3",      "MI.4",      "DENSE1.1",  "DENSE1.2",  "DENSE1.a",  "DENSE1.b",
      "DENSE1.c",  "MAX-PRIME", "KRULL-RAD", "KRULL-MIN", "HUCKABA",   "HUCKABA2",  "HUCKABA3",
      "ZDIV",      "MIN-PBDL",  "IDSEMIRING"};
  CHECK(names == expected);
}

TEST_CASE("theorem id parsing") {
  CHECK(parse_theorem_ids("PSEUDO1").size() == 8);
  CHECK(parse_theorem_ids("PSEUDO1.4")[0].clause == "4");
  CHECK(parse_theorem_ids("HUCKABA").size() == 1);
  CHECK(parse_theorem_ids("DENSE1").size() == 5);
  CHECK_THROWS_AS(parse_theorem_ids("PSEUDO1.9"), ParseError);
  CHECK_THROWS_AS(parse_theorem_ids("FERMAT"), ParseError);
  CHECK(parse_theorem_list("all").size() == theorem_catalog().size());
  CHECK(parse_theorem_list("").size() == theorem_catalog().size());
  const auto l = parse_theorem_list("STONE2, MI.3,ZDIV");
  REQUIRE(l.size() == 3);
  CHECK(l[1].to_string() == "MI.3");
  CHECK_THROWS_AS(parse_theorem_list("STONE2,,ZDIV"), ParseError);
}

TEST_CASE("worked examples") {
  const TheoremReport c = run(testing::c3(), "PSEUDO1.5");
  CHECK(c.result == Result::kPass);
  CHECK(c.hypotheses_met);
  CHECK(c.instances == 3);
  CHECK(run(testing::d5(), "STONE2").result == Result::kPass);
  CHECK(run(testing::z8(), "HUCKABA").result == Result::kPass);
  const TheoremReport s = run(testing::d5(), "SKEL1");
  CHECK(s.result == Result::kSkipped);
  CHECK_FALSE(s.hypotheses_met);
  CHECK(s.instances == 0);
  CHECK_FALSE(s.skip_reason.empty());
  // Rings have no positive order, so nothing about pseudocomplements applies.
  CHECK(run(residue_ring(3), "PSEUDO1.2").result == Result::kSkipped);
}

TEST_CASE("negative control: swapped pseudocomplements are caught and replay") {
  const VerificationContext ctx = swapped_b2xb2();
  const auto reports = verify(ctx, parse_theorem_ids("PSEUDO1"));
  bool failed = false;
  for (const auto& r : reports) {
    if (r.result != Result::kFail) continue;
    failed = true;
    REQUIRE(r.witness.has_value());
    CHECK_FALSE(r.witness->detail.empty());
    CHECK(replay(ctx, r));
    // The honest analysis does not reproduce the failure.
    CHECK_FALSE(replay(VerificationContext("b2xb2", default_view(testing::b2xb2())), r));
  }
  CHECK(failed);
  CHECK(reports[1].result == Result::kFail);
}

TEST_CASE("replay of a passing report is false") {
  const VerificationContext ctx("c3", default_view(testing::c3()));
  const TheoremReport r = verify(ctx, parse_theorem_ids("PSEUDO1.5")[0]);
  CHECK_FALSE(replay(ctx, r));
}

TEST_CASE("property: report fields are consistent on every statement") {
  for (const auto& S : testing::small_pool()) {
    const VerificationContext ctx("pool", default_view(S));
    for (const auto& r : verify(ctx, theorem_catalog())) {
      CHECK(r.hypotheses_met == (r.instances > 0));
      CHECK((r.result == Result::kSkipped) == (r.instances == 0));
      CHECK(r.witness.has_value() == (r.result == Result::kFail));
      CHECK(r.result != Result::kFail);
    }
  }
}

TEST_CASE("property: MC-set enumeration matches brute force") {
  for (const auto& S : testing::small_pool()) {
    const oracle::Tab T = oracle::from(S);
    std::vector<oracle::Mask> ref;
    for (oracle::Mask W = 0; W <= oracle::full(T.n); ++W)
      if (oracle::is_mc(T, W)) ref.push_back(W);
    const McSetList got = enumerate_mc_sets(S, 1u << 20);
    CHECK(got.complete);
    std::vector<oracle::Mask> masks;
    for (const auto& W : got.sets) {
      oracle::Mask m = 0;
      W.for_each([&](Element e) { m |= oracle::bit(e); });
      masks.push_back(m);
    }
    std::sort(masks.begin(), masks.end());
    CHECK(masks == ref);
    const McSetList capped = enumerate_mc_sets(S, 1);
    CHECK(capped.sets.size() <= 1);
    CHECK(capped.complete == (ref.size() <= 1));
  }
}

TEST_CASE("pc-function family") {
  const VerificationContext c("c3", default_view(testing::c3()));
  CHECK(c.pc_functions_exhaustive());
  // Ann sizes 3, 1, 1: three maps 0 -> {0, a, 1}.
  CHECK(c.pc_functions().size() == 3);
  const VerificationContext big("p4", default_view(powerset_lattice(4)), VerifyOptions{24, 4096, 8});
  CHECK_FALSE(big.pc_functions_exhaustive());
  CHECK_FALSE(big.pc_functions().empty());
}

TEST_CASE("corpus output is deterministic and independent of thread count") {
  const auto members = small_corpus();
  const auto& all = theorem_catalog();
  const CorpusReport a = corpus_run(members, all, {}, 1);
  const CorpusReport b = corpus_run(members, all, {}, 1);
  const CorpusReport c = corpus_run(members, all, {}, 3);
  CHECK(a.members == members.size());
  CHECK(a.reports.size() == members.size() * all.size());
  CHECK(to_json(a).dump() == to_json(b).dump());
  CHECK(to_json(a).dump() == to_json(c).dump());
  CHECK(summary_table(a) == summary_table(c));
  CHECK_FALSE(a.any_failure());
  const CorpusCounts t = a.totals();
  CHECK(t.pass + t.fail + t.skipped == a.reports.size());
  std::size_t sum = 0;
  for (const auto& [name, counts] : a.by_theorem()) sum += counts.pass + counts.fail + counts.skipped;
  CHECK(sum == a.reports.size());
}

TEST_CASE("report JSON shape") {
  const TheoremReport r = run(testing::c3(), "PSEUDO1.5");
  const auto j = to_json(r);
  for (const char* key : {"semiring", "theorem", "clause", "hypotheses_met", "instances", "result", "witness"})
    CHECK(j.contains(key));
  CHECK(j["theorem"] == "PSEUDO1");
  CHECK(j["clause"] == "5");
  CHECK(j["result"] == "pass");
  CHECK(j["witness"].is_null());

  const VerificationContext ctx = swapped_b2xb2();
  const TheoremReport f = verify(ctx, parse_theorem_ids("PSEUDO1.2")[0]);
  const auto jf = to_json(f);
  CHECK(jf["result"] == "fail");
  CHECK(jf["witness"].contains("elements"));
  CHECK(jf["witness"].contains("detail"));
  CHECK(report_line(f).find("fail") != std::string::npos);
}

TEST_CASE("empty corpus") {
  const CorpusReport r = corpus_run({}, theorem_catalog());
  CHECK(r.members == 0);
  CHECK(r.reports.empty());
  CHECK_FALSE(r.any_failure());
  CHECK(summary_table(r).find("0 semirings") != std::string::npos);
}

TEST_CASE("default corpus specs cover the families") {
  const auto specs = default_corpus_specs();
  std::vector<std::string> names;
  for (const auto& s : specs) names.push_back(to_string(s));
  for (const char* want : {"exhaustive(2)", "exhaustive(4)", "chain(6)", "powerset(4)", "divisor_lattice(30)",
                           "ideal_semiring_of_Zm(16)", "truncated_min_plus(6)", "stacked_diamond()"})
    CHECK(std::find(names.begin(), names.end(), want) != names.end());
  for (const auto& s : specs)
    if (s.family == Family::kProduct)
      for (const auto& g : generate(s)) CHECK(g.semiring.order() <= 16);
}
