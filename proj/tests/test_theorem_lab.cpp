#include "catch_amalgamated.hpp"
#include "helpers.hpp"

using namespace semiperm;
using test::G;

namespace {
  NamedGroup ng(std::string const& name) { return named_group(name); }

  VerificationRecord const& find(std::vector<VerificationRecord> const& rs,
                                 std::string const& id) {
    for (auto const& r : rs) {
      if (r.check == id) {
        return r;
      }
    }
    throw std::runtime_error("no record " + id);
  }

  // Number of d-subsets of the maximal subgroups, saturating at `cap`.
  std::uint64_t subsets(std::uint64_t n, std::size_t d, std::uint64_t cap) {
    std::uint64_t c = 1;
    for (std::size_t i = 0; i < d; ++i) {
      c = c * (n - i) / (i + 1);
      if (c > cap) {
        return cap + 1;
      }
    }
    return c;
  }

  // Hypothesis by walking every family explicitly.
  bool hypothesis_by_families(Group const& g, std::uint64_t p, bool all) {
    auto P = sylow_subgroup(g, p);
    PGroupStructure s(P);
    bool any = false;
    bool every = true;
    for_each_md_index_set(s, 0, [&](std::vector<std::uint64_t> const& idx) {
      bool ok = true;
      for (auto k : idx) {
        ok = ok && is_s_semipermutable(g, as_subgroup(g, s.maximal_subgroup(k)));
      }
      any = any || ok;
      every = every && ok;
      return true;
    });
    return all ? every : any;
  }
}  // namespace

TEST_CASE("main_hypothesis examples", "[main]") {
  CHECK_FALSE(main_hypothesis(symmetric(4), 2, HypothesisMode::exists).holds);
  CHECK(main_hypothesis(ng("S3xS3").group, 2, HypothesisMode::exists).holds);
  for (auto m : {HypothesisMode::exists, HypothesisMode::forall, HypothesisMode::canonical}) {
    CHECK(main_hypothesis(quaternion8(), 2, m).holds);
  }
  CHECK_THROWS_AS(main_hypothesis(symmetric(3), 5, HypothesisMode::exists), InvalidArgument);
}

TEST_CASE("witness families are genuine families", "[main]") {
  auto g = ng("S3xS3").group;
  auto h = main_hypothesis(g, 2, HypothesisMode::exists);
  REQUIRE(h.holds);
  REQUIRE(h.family.size() == h.d);
  Bitset meet = members(g, h.sylow);
  for (auto const& m : h.family) {
    CHECK(is_s_semipermutable(g, m));
    CHECK(m.order() * 2 == h.sylow.order());
    meet &= members(g, m);
  }
  CHECK(meet == members(g, frattini_p_group(Group(g.degree(), h.sylow.generators()))));
  auto bad = main_hypothesis(symmetric(4), 2, HypothesisMode::exists);
  REQUIRE(bad.failing_member.has_value());
  REQUIRE(bad.failing_sylow.has_value());
  CHECK_FALSE(product_set(symmetric(4), *bad.failing_member, *bad.failing_sylow).equal);
}

TEST_CASE("main_conclusion examples", "[main]") {
  CHECK(main_conclusion(symmetric(3), 3));
  CHECK_FALSE(main_conclusion(symmetric(4), 2));
  CHECK(main_conclusion(ng("S3xS3").group, 2));
}

TEST_CASE("verify_main examples", "[main]") {
  auto s4 = verify_main(ng("S4"), 2, HypothesisMode::exists);
  CHECK_FALSE(s4.hypothesis);
  CHECK_FALSE(s4.conclusion);
  CHECK_FALSE(s4.violated);
  CHECK_FALSE(s4.witness.empty());
  auto a4 = verify_main(ng("A4"), 2, HypothesisMode::exists);
  CHECK_FALSE(a4.hypothesis);
  CHECK_FALSE(a4.violated);
  auto q8 = verify_main(ng("Q8"), 2, HypothesisMode::exists);
  CHECK(q8.hypothesis);
  CHECK(q8.conclusion);
  CHECK_FALSE(q8.violated);
  auto s3 = verify_main(ng("S3"), 3, HypothesisMode::exists);
  CHECK(s3.conclusion);
  CHECK(s3.witness.find("|P|=p") != std::string::npos);
}

TEST_CASE("modes agree with explicit family enumeration", "[main][property]") {
  constexpr std::uint64_t cap = 100000;
  std::size_t checked = 0;
  for (auto const& g : builtin_corpus(96)) {
    for (auto p : prime_divisors(g.group.order())) {
      PGroupStructure s(sylow_subgroup(g.group, p));
      if (subsets(s.hyperplane_count(), s.rank(), cap) > cap) {
        continue;
      }
      ++checked;
      bool const ex = main_hypothesis(g.group, p, HypothesisMode::exists).holds;
      bool const fa = main_hypothesis(g.group, p, HypothesisMode::forall).holds;
      bool const ca = main_hypothesis(g.group, p, HypothesisMode::canonical).holds;
      CHECK(ex == hypothesis_by_families(g.group, p, false));
      CHECK(fa == hypothesis_by_families(g.group, p, true));
      if (fa) {
        CHECK(ca);
      }
      if (ca) {
        CHECK(ex);
      }
    }
  }
  CHECK(checked >= 500);
}

TEST_CASE("main hypothesis agrees with the naive oracle", "[main][oracle]") {
  for (auto const& name : {"S4", "A4", "Q8", "S3xS3", "S3", "D12", "A4xC2", "C3xS3", "S3xC2^2"}) {
    auto g = named_group(name).group;
    oracle::Lab lab(test::elems(g));
    for (auto p : prime_divisors(g.order())) {
      CHECK(main_hypothesis(g, p, HypothesisMode::exists).holds == lab.main_hypothesis_exists(p));
      CHECK(main_conclusion(g, p) == lab.main_conclusion(p));
    }
  }
}

TEST_CASE("s-permutable subgroup suite examples", "[lemmas]") {
  auto s3 = verify_lemma_2_1(ng("S3"));
  REQUIRE(s3.size() == 6);
  auto const& hall = find(s3, "lemma-2.1(3)");
  CHECK(hall.hypothesis);
  CHECK_FALSE(hall.violated);
  auto s4 = verify_lemma_2_1(ng("S4"));
  for (auto const& r : s4) {
    CHECK(r.status() == "ok");
    CHECK_FALSE(r.sampled);
  }
  CHECK(find(s4, "lemma-2.1(1)").instances >= 4);
}

TEST_CASE("s-semipermutable subgroup suite examples", "[lemmas]") {
  for (auto const& name : {"S3", "S4", "A4"}) {
    for (auto const& r : verify_lemma_2_2(ng(name))) {
      CHECK(r.status() == "ok");
    }
  }
  // s-semipermutable p-subgroups inside the intersection of the Sylow p-subgroups
  for (auto const& name : {"S4", "D8", "S3xC3", "A4xC2"}) {
    oracle::Lab lab(test::elems(named_group(name).group));
    std::uint64_t expect = 0;
    for (auto const& h : lab.subgroups_list()) {
      std::uint64_t const p = prime_of_power(h.size());
      if (p == 0) {
        continue;
      }
      oracle::Elems op = lab.group();
      for (auto const& s : lab.sylow(p)) {
        op = oracle::meet(op, s);
      }
      expect += oracle::subset(h, op) && lab.s_semipermutable(h);
    }
    CHECK(find(verify_lemma_2_2(ng(name)), "lemma-2.2(3)").hypothesis_instances == expect);
  }
  CHECK(find(verify_lemma_2_2(ng("S4")), "lemma-2.2(3)").hypothesis_instances == 1);
  CHECK(find(verify_lemma_2_2(ng("A4")), "lemma-2.2(2)").hypothesis);
}

TEST_CASE("normal closure solubility suite examples", "[lemmas]") {
  auto r = verify_lemma_2_3(ng("S3"));
  REQUIRE(r.size() == 1);
  CHECK(r[0].hypothesis);
  CHECK_FALSE(r[0].violated);
  auto big = verify_lemma_2_3(ng("S3xA5"));
  REQUIRE(big.size() == 1);
  CHECK(big[0].status() == "ok");
  CHECK(big[0].hypothesis);
}

TEST_CASE("normal closure suite falls back to Sylow subgroups above the lattice cap", "[lemmas]") {
  set_lattice_cap(200);
  auto r = verify_lemma_2_3(ng("S3xA5"));
  set_lattice_cap(400);
  REQUIRE(r.size() == 1);
  CHECK(r[0].sampled);
  CHECK(r[0].status() == "ok");
  CHECK(r[0].hypothesis);
}

TEST_CASE("complemented subgroup suite examples", "[lemmas]") {
  for (auto const& name : {"A4", "C6", "S4", "Q8"}) {
    auto r = verify_lemma_2_4(ng(name));
    REQUIRE(r.size() == 1);
    CHECK(r[0].status() == "ok");
    CHECK(r[0].hypothesis);
  }
}

TEST_CASE("lemma records respect the budget", "[lemmas]") {
  auto r = verify_lemma_2_1(ng("C2^5"), LemmaOptions{50});
  auto const& two = find(r, "lemma-2.1(2)");
  CHECK(two.sampled);
  CHECK(two.instances == 50);
  CHECK(two.status() == "ok");
}

TEST_CASE("separation witness", "[separation]") {
  auto r = verify_separation(ng("S3"));
  CHECK(r.hypothesis);
  CHECK(r.witness.find("(1 2)") != std::string::npos);
  auto s3 = symmetric(3);
  auto h = G(3, {"(1 2)"});
  CHECK(is_s_semipermutable(s3, h));
  CHECK_FALSE(is_s_permutable(s3, h));
  CHECK_FALSE(verify_separation(ng("C6")).hypothesis);
}

TEST_CASE("srinivasan examples", "[srinivasan]") {
  auto c12 = verify_srinivasan(ng("C12"));
  CHECK(c12.hypothesis);
  CHECK(c12.conclusion);
  auto s4 = verify_srinivasan(ng("S4"));
  CHECK_FALSE(s4.hypothesis);
  CHECK_FALSE(s4.violated);
  auto q8 = verify_srinivasan(ng("Q8"));
  CHECK(q8.hypothesis);
  CHECK(q8.conclusion);
}

TEST_CASE("corollary examples", "[corollaries]") {
  auto c6 = verify_corollary_4_1(ng("C6"));
  REQUIRE(c6.size() == 2);
  CHECK(c6[0].hypothesis);
  CHECK(c6[0].conclusion);
  CHECK(c6[1].hypothesis);
  CHECK(c6[1].conclusion);
  auto s4 = verify_corollary_4_1(ng("S4"));
  CHECK_FALSE(s4[0].hypothesis);
  CHECK_FALSE(s4[0].conclusion);
  CHECK_FALSE(s4[1].hypothesis);
  CHECK_FALSE(s4[1].violated);
  auto s3 = verify_corollary_4_3(ng("S3"), 3);
  CHECK_FALSE(s3.violated);
  CHECK(verify_corollary_4_2(ng("S4"), 2).status() == "ok");
}

TEST_CASE("records keep their invariants", "[records][property]") {
  RunOptions opt;
  auto rep = run_corpus(builtin_corpus(30), {"all"}, opt);
  CHECK(rep.count("violated") == 0);
  CHECK(rep.records.size() == rep.count("ok") + rep.count("violated") + rep.count("skipped"));
  for (auto const& r : rep.records) {
    CHECK(r.violated == (r.hypothesis && !r.conclusion));
    if (!r.hypothesis || !r.conclusion) {
      CHECK_FALSE(r.witness.empty());
    }
  }
}

TEST_CASE("run_corpus examples", "[run]") {
  auto rep = run_corpus(builtin_corpus(60), {"main"});
  CHECK(rep.count("violated") == 0);
  CHECK(rep.count("skipped") == 0);
  CHECK(rep.exit_status() == 0);
  auto empty = run_corpus({}, {"main"});
  CHECK(empty.records.empty());
  CHECK(empty.exit_status() == 0);

  set_lattice_cap(100);
  auto capped = run_corpus({ng("S5")}, {"lemma-2.4"});
  set_lattice_cap(400);
  REQUIRE(capped.records.size() == 1);
  CHECK(capped.records[0].skipped);
  CHECK(capped.records[0].witness.rfind("skipped: ", 0) == 0);
  CHECK_THROWS_AS(run_corpus({}, {"nonsense"}), InvalidArgument);
}

TEST_CASE("check groups expand in canonical order", "[run]") {
  CHECK(expand_checks({"srinivasan", "main", "main"})
        == std::vector<std::string>{"main", "srinivasan"});
  CHECK(expand_checks({"corollaries"})
        == std::vector<std::string>{"cor-4.1", "cor-4.2", "cor-4.3"});
  CHECK(expand_checks({"all"}).size() == known_checks().size());
}

TEST_CASE("reports do not depend on the number of jobs", "[run][threads]") {
  auto corpus = builtin_corpus(48);
  RunOptions one;
  RunOptions many;
  many.jobs = 4;
  auto a = run_corpus(corpus, {"main", "lemmas", "corollaries", "srinivasan"}, one);
  auto b = run_corpus(corpus, {"main", "lemmas", "corollaries", "srinivasan"}, many);
  CHECK(format_text(a) == format_text(b));
  CHECK(format_json(a) == format_json(b));
}

TEST_CASE("json report shape", "[run]") {
  auto rep = run_corpus(builtin_corpus(6), {"main"});
  auto j = nlohmann::json::parse(format_json(rep));
  CHECK(j["records"].size() == rep.records.size());
  CHECK(j["summary"]["violated"] == 0);
  CHECK(j["records"][0].contains("witness"));
  auto text = format_text(rep);
  CHECK(text.rfind("# check\tgroup\tprime", 0) == 0);
}
