#include "catch_amalgamated.hpp"
#include "helpers.hpp"

using namespace semiperm;
using test::G;

TEST_CASE("product_set examples", "[product]") {
  auto s3 = symmetric(3);
  auto r = product_set(s3, G(3, {"(1 2)"}), G(3, {"(1 2 3)"}));
  CHECK(r.cardinality == 6);
  CHECK(r.equal);
  CHECK(r.is_subgroup);
  auto bad = product_set(s3, G(3, {"(1 2)"}), G(3, {"(1 3)"}));
  CHECK(bad.cardinality == 4);
  CHECK_FALSE(bad.equal);
  CHECK_FALSE(bad.is_subgroup);
  for (auto const& h : all_subgroups(s3)) {
    CHECK(product_set(s3, h, s3).equal);
  }
  CHECK_THROWS_AS(product_set(s3, G(4, {"(1 2)"}), s3), NotSubgroup);
}

TEST_CASE("product sets match the naive product", "[product][property]") {
  for (auto const& name : {"S4", "A4", "D12", "Q8xC3", "S3xC3"}) {
    auto g = named_group(name).group;
    auto subs = all_subgroups(g);
    for (std::size_t i = 0; i < subs.size(); i += 2) {
      for (std::size_t j = 0; j < subs.size(); j += 3) {
        auto he = test::elems(subs[i]);
        auto ke = test::elems(subs[j]);
        auto r = product_set(g, subs[i], subs[j]);
        auto hk = oracle::product(he, ke);
        auto kh = oracle::product(ke, he);
        CHECK(r.cardinality == hk.size());
        CHECK(r.cardinality * oracle::meet(he, ke).size() == he.size() * ke.size());
        CHECK(r.kh.size() == kh.size());
        CHECK(r.equal == (hk == kh));
        CHECK(r.hk.is_subgroup() == r.equal);
        CHECK(product_set(g, subs[j], subs[i]).equal == r.equal);
      }
    }
  }
}

TEST_CASE("is_s_permutable examples", "[predicates]") {
  auto s3 = symmetric(3);
  CHECK(is_s_permutable(s3, G(3, {"(1 2 3)"})));
  CHECK_FALSE(is_s_permutable(s3, G(3, {"(1 2)"})));
  auto w = s_permutability_failure(s3, G(3, {"(1 2)"}));
  REQUIRE(w.has_value());
  CHECK(w->order() == 2);
  CHECK(is_s_permutable(symmetric(4), G(4, {"(1 2)(3 4)", "(1 3)(2 4)"})));
}

TEST_CASE("is_s_semipermutable examples", "[predicates]") {
  auto s3 = symmetric(3);
  CHECK(is_s_semipermutable(s3, G(3, {"(1 2)"})));
  auto a4 = alternating(4);
  for (auto const& h : all_subgroups(a4)) {
    if (h.order() == 2) {
      CHECK_FALSE(is_s_semipermutable(a4, h));
      auto q = s_semipermutability_failure(a4, h);
      REQUIRE(q.has_value());
      CHECK(q->order() == 3);
      CHECK(product_set(a4, h, *q).cardinality == 6);
    }
  }
  auto q8 = quaternion8();
  CHECK(is_s_semipermutable(q8, q8));
  auto d8 = named_group("D8").group;
  for (auto const& h : all_subgroups(d8)) {
    CHECK(is_s_semipermutable(d8, h));
  }
}

TEST_CASE("is_semipermutable examples", "[predicates]") {
  auto s3 = symmetric(3);
  CHECK(is_semipermutable(s3, G(3, {"(1 2)"})));
  auto g = named_group("C2xS3").group;
  CHECK(is_semipermutable(g, g));
  auto s4 = symmetric(4);
  CHECK(is_semipermutable(s4, sylow_subgroup(s4, 2)));
  auto a4 = alternating(4);
  CHECK_FALSE(is_semipermutable(a4, G(4, {"(1 2)(3 4)"})));
  set_lattice_cap(10);
  CHECK_THROWS_AS(is_semipermutable(named_group("C3xS3").group,
                                    G(6, {"(4 5)"})),
                  CapExceeded);
  set_lattice_cap(400);
}

TEST_CASE("implication chain between the predicates", "[predicates][property]") {
  for (auto const& ng : builtin_corpus(72)) {
    auto const& g = ng.group;
    for (auto const& h : all_subgroups(g)) {
      bool const sp = is_s_permutable(g, h);
      bool const ssp = is_s_semipermutable(g, h);
      bool const semi = is_semipermutable(g, h);
      if (sp) {
        CHECK(ssp);
      }
      if (semi) {
        CHECK(ssp);
      }
      if (is_normal(g, h)) {
        CHECK(sp);
      }
    }
  }
}

TEST_CASE("intersections of s-permutable subgroups", "[predicates][property]") {
  for (auto const& ng : builtin_corpus(60)) {
    auto const& g = ng.group;
    std::vector<Group> sp;
    for (auto const& h : all_subgroups(g)) {
      if (is_s_permutable(g, h)) {
        sp.push_back(h);
      }
    }
    for (std::size_t i = 0; i < sp.size(); ++i) {
      for (std::size_t j = i + 1; j < sp.size(); ++j) {
        auto m = Group::make_subgroup(g, members(g, sp[i]) & members(g, sp[j]));
        CHECK(is_s_permutable(g, m));
      }
    }
  }
}

TEST_CASE("p-subgroup normalizer criterion", "[predicates][property]") {
  std::size_t instances = 0;
  for (auto const& ng : builtin_corpus(72)) {
    auto const& g = ng.group;
    for (auto const& h : all_subgroups(g)) {
      std::uint64_t p = prime_of_power(h.order());
      if (p == 0) {
        continue;
      }
      ++instances;
      bool crit = members(g, p_residual(g, p)).is_subset_of(members(g, normalizer(g, h)));
      CHECK(is_s_permutable(g, h) == crit);
    }
  }
  CHECK(instances >= 100);
}

TEST_CASE("s-semipermutable subgroups of O_p are s-permutable", "[predicates][property]") {
  std::size_t instances = 0;
  for (auto const& ng : builtin_corpus(72)) {
    auto const& g = ng.group;
    for (auto p : prime_divisors(g.order())) {
      Bitset op = members(g, o_p(g, p));
      for (auto const& h : all_subgroups(g)) {
        if (h.order() > 1 && members(g, h).is_subset_of(op) && is_s_semipermutable(g, h)) {
          ++instances;
          CHECK(is_s_permutable(g, h));
        }
      }
    }
  }
  CHECK(instances >= 100);
}

TEST_CASE("predicates agree with the naive oracle", "[predicates][oracle]") {
  for (auto const& name : {"S3", "S4", "A4", "D8", "Q8", "D12", "C2xS3", "S3xC3", "A4xC2", "D20"}) {
    auto g = named_group(name).group;
    oracle::Lab lab(test::elems(g));
    for (auto const& he : lab.subgroups_list()) {
      auto h = test::from_elems(g, he);
      CHECK(is_s_permutable(g, h) == lab.s_permutable(he));
      CHECK(is_s_semipermutable(g, h) == lab.s_semipermutable(he));
      CHECK(is_semipermutable(g, h) == lab.semipermutable(he));
    }
  }
}

TEST_CASE("memoization is transparent", "[predicates][memo]") {
  auto run = [] {
    std::vector<int> out;
    for (auto const& name : {"S4", "A4xC2", "D12", "S3xS3"}) {
      auto g = named_group(name).group;
      for (auto const& h : all_subgroups(g)) {
        out.push_back(is_s_permutable(g, h));
        out.push_back(is_s_semipermutable(g, h));
        out.push_back(is_semipermutable(g, h));
      }
      for (auto p : prime_divisors(g.order())) {
        out.push_back(static_cast<int>(all_sylow_subgroups(g, p).count()));
      }
    }
    return out;
  };
  auto cached = run();
  set_memoization(false);
  auto uncached = run();
  set_memoization(true);
  CHECK(cached == uncached);
}

TEST_CASE("concurrent evaluation equals sequential", "[predicates][threads]") {
  auto g = named_group("S4xC3").group;
  auto subs = all_subgroups(g);
  std::vector<int> seq;
  for (auto const& h : subs) {
    seq.push_back(is_s_semipermutable(Group(g.degree(), g.generators()), h));
  }
  std::vector<int> par(subs.size());
  std::vector<std::thread> pool;
  for (int t = 0; t < 4; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < subs.size(); i += 4) {
        par[i] = is_s_semipermutable(g, subs[i]);
      }
    });
  }
  for (auto& th : pool) {
    th.join();
  }
  CHECK(seq == par);
}
