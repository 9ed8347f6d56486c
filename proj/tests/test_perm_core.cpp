#include "catch_amalgamated.hpp"
#include "helpers.hpp"

using namespace semiperm;
using test::G;
using test::P;

TEST_CASE("composition applies the left factor first", "[perm]") {
  CHECK((P("(1 2)", 3) * P("(1 2)", 3)).is_identity());
  CHECK(P("(1 2 3)", 3) * P("(1 2 3)", 3) == P("(1 3 2)", 3));
  Perm a = P("(1 2)", 3);
  Perm b = P("(2 3)", 3);
  Perm ab = compose(a, b);
  for (point_type x = 0; x < 3; ++x) {
    CHECK(ab[x] == b[a[x]]);
  }
  CHECK(ab == P("(1 3 2)", 3));
  CHECK(ab != b * a);
}

TEST_CASE("composition rejects mismatched degrees", "[perm]") {
  CHECK_THROWS_AS(P("(1 2)", 2) * P("(1 2)", 3), InvalidArgument);
}

TEST_CASE("permutation construction validates input", "[perm]") {
  CHECK_THROWS_AS(Perm(std::vector<point_type>{0, 0, 1}), InvalidArgument);
  CHECK_THROWS_AS(P("(1 2)(2 3)", 3), InvalidArgument);
  CHECK_THROWS_AS(P("(1 1)", 3), InvalidArgument);
  CHECK_THROWS_AS(P("(1 4)", 3), InvalidArgument);
  CHECK_THROWS_AS(P("(0 1)", 3), InvalidArgument);
  CHECK_THROWS_AS(P("(1 2", 3), InvalidArgument);
  CHECK_THROWS_AS(P("1 2)", 3), InvalidArgument);
  CHECK_THROWS_AS(P("(a b)", 3), InvalidArgument);
  CHECK(P("()", 4).is_identity());
  CHECK(P(" (1 2) (3 4) ", 4) == P("(3 4)(1 2)", 4));
  std::vector<std::int64_t> img{2, 3, 1};
  CHECK(Perm::from_one_based(img) == P("(1 2 3)", 3));
  std::vector<std::int64_t> bad{1, 1, 2};
  CHECK_THROWS_AS(Perm::from_one_based(bad), InvalidArgument);
}

TEST_CASE("permutation helpers", "[perm]") {
  Perm x = P("(1 2 3)(4 5)", 5);
  CHECK(x.order() == 6);
  CHECK((x * x.inverse()).is_identity());
  CHECK(x.pow(6).is_identity());
  CHECK(x.pow(-1) == x.inverse());
  CHECK(x.to_cycles() == "(1 2 3)(4 5)");
  CHECK(Perm::identity(3).to_cycles() == "()");
  CHECK(P(x.to_cycles(), 5) == x);
  Perm g = P("(1 4)", 5);
  CHECK(conjugate(x, g) == g.inverse() * x * g);
  CHECK(commutator(x, g) == x.inverse() * g.inverse() * x * g);
}

TEST_CASE("group_from_generators examples", "[group]") {
  CHECK(group_from_generators(3, {P("(1 2)", 3), P("(1 2 3)", 3)}).order() == 6);
  CHECK(group_from_generators(4, {}).order() == 1);
  auto big = elementary_abelian(7, 7);
  CHECK(big.degree() == 49);
  CHECK(big.order() == 823543);
  CHECK_THROWS_AS(Group(3, {P("(1 2)", 2)}), InvalidArgument);
}

TEST_CASE("order, membership and element lists", "[group]") {
  auto s4 = G(4, {"(1 2)", "(1 2 3 4)"});
  CHECK(order(s4) == 24);
  CHECK_FALSE(contains(alternating(4), P("(1 2)", 4)));
  CHECK(contains(alternating(4), P("(1 2 3)", 4)));
  auto triv = Group(5, {});
  REQUIRE(elements(triv).size() == 1);
  CHECK(elements(triv)[0].is_identity());

  auto const& e = elements(s4);
  CHECK(e.size() == 24);
  CHECK(std::is_sorted(e.begin(), e.end()));
  CHECK(std::adjacent_find(e.begin(), e.end()) == e.end());
  CHECK(test::table_elems(s4) == test::elems(s4));
}

TEST_CASE("enumeration cap is reported", "[group]") {
  auto g = symmetric(8);
  CHECK(g.order() == 40320);
  try {
    g.elements();
    FAIL("expected CapExceeded");
  } catch (CapExceeded const& err) {
    CHECK(std::string(err.what()).find("10000") != std::string::npos);
    CHECK(std::string(err.what()).find("enumerate") != std::string::npos);
  }
  set_enumeration_cap(50000);
  CHECK(g.elements().size() == 40320);
  set_enumeration_cap(10000);
}

TEST_CASE("membership agrees with element lists on random permutations", "[group][property]") {
  std::mt19937_64 rng(7);
  for (auto const& name : {"S4", "A5", "D12", "Q8", "C2xS3", "C3^2"}) {
    auto g = named_group(name).group;
    auto e = test::table_elems(g);
    for (int i = 0; i < 1000; ++i) {
      Perm x = i % 2 ? test::random_perm(g.degree(), rng) : test::random_element(g, rng);
      CHECK(g.contains(x) == (e.count(x) == 1));
    }
  }
}

TEST_CASE("subgroup_generated examples", "[group]") {
  auto s3 = symmetric(3);
  CHECK(subgroup_generated(s3, {P("(1 2 3)", 3)}).order() == 3);
  CHECK(subgroup_generated(s3, {}).order() == 1);
  auto s4 = symmetric(4);
  auto v = subgroup_generated(s4, {P("(1 2)(3 4)", 4), P("(1 3)(2 4)", 4)});
  CHECK(v.order() == 4);
  CHECK(v.has_parent());
  CHECK_THROWS_AS(subgroup_generated(alternating(4), {P("(1 2)", 4)}), NotSubgroup);
}

TEST_CASE("equality compares element sets", "[group]") {
  auto s4 = symmetric(4);
  auto a = subgroup_generated(s4, {P("(1 2)(3 4)", 4), P("(1 3)(2 4)", 4)});
  auto b = subgroup_generated(s4, {P("(1 4)(2 3)", 4), P("(1 2)(3 4)", 4)});
  auto c = G(4, {"(1 3)(2 4)", "(1 4)(2 3)"});
  CHECK(a == b);
  CHECK(a == c);
  CHECK_FALSE(a == subgroup_generated(s4, {P("(1 2 3 4)", 4)}));
}

TEST_CASE("ElementSet tracks members and closure", "[group]") {
  auto s3 = symmetric(3);
  auto es = element_set(s3, subgroup_generated(s3, {P("(1 2)", 3)}));
  CHECK(es.size() == 2);
  CHECK(es.is_subgroup());
  CHECK(es.contains(P("(1 2)", 3)));
  CHECK_FALSE(es.contains(P("(1 3)", 3)));
  auto r = product_set(s3, subgroup_generated(s3, {P("(1 2)", 3)}),
                       subgroup_generated(s3, {P("(1 3)", 3)}));
  CHECK_FALSE(r.hk.is_subgroup());
}

TEST_CASE("conjugation, normality and normal closure", "[group]") {
  auto s3 = symmetric(3);
  auto t = subgroup_generated(s3, {P("(1 2)", 3)});
  CHECK(normal_closure(s3, t).order() == 6);
  auto c3 = subgroup_generated(s3, {P("(1 2 3)", 3)});
  CHECK(normal_closure(s3, c3) == c3);
  auto s4 = symmetric(4);
  auto v = G(4, {"(1 2)(3 4)", "(1 3)(2 4)"});
  CHECK(is_normal(s4, v));
  CHECK_FALSE(is_normal(s3, t));
  auto tc = conjugate_subgroup(s3, t, P("(1 3)", 3));
  CHECK(tc == subgroup_generated(s3, {P("(2 3)", 3)}));
  CHECK_THROWS_AS(is_normal(alternating(4), G(4, {"(1 2)"})), NotSubgroup);
  CHECK_THROWS_AS(normal_closure(s3, G(4, {"(1 2)"})), NotSubgroup);
}

TEST_CASE("centralizer, normalizer and center", "[group]") {
  auto q8 = quaternion8();
  auto z = center(q8);
  CHECK(z.order() == 2);
  std::size_t involutions = 0;
  for (auto const& x : q8.elements()) {
    involutions += x.order() == 2;
  }
  CHECK(involutions == 1);
  auto s4 = symmetric(4);
  CHECK(normalizer(s4, G(4, {"(1 2 3)"})).order() == 6);
  CHECK(centralizer(s4, trivial_subgroup(s4)) == s4);
  CHECK(center(s4).order() == 1);
  CHECK(center(cyclic(6)).order() == 6);
}

TEST_CASE("normalizer and centralizer match element scans", "[group][property]") {
  for (auto const& ng : builtin_corpus(48)) {
    auto const& g = ng.group;
    auto e = test::table_elems(g);
    std::size_t step = 0;
    for (auto const& h : all_subgroups(g)) {
      if (step++ % 3 != 0) {
        continue;
      }
      auto he = test::table_elems(Group(g.degree(), h.generators()));
      oracle::Elems n, c;
      for (auto const& x : e) {
        bool norm = true, cent = true;
        for (auto const& y : he) {
          norm = norm && he.count(x.inverse() * y * x);
          cent = cent && x * y == y * x;
        }
        if (norm) {
          n.insert(x);
        }
        if (cent) {
          c.insert(x);
        }
      }
      auto nh = normalizer(g, h);
      auto ch = centralizer(g, h);
      CHECK(nh.order() == n.size());
      CHECK(ch.order() == c.size());
      CHECK(test::elems(nh) == n);
      CHECK(test::elems(ch) == c);
      CHECK(members(g, h).is_subset_of(members(g, nh)));
      CHECK(members(g, ch).is_subset_of(members(g, nh)));
    }
    auto z = center(g);
    CHECK(is_normal(g, z));
    CHECK(detail::is_abelian(z));
  }
}

TEST_CASE("normal closure matches conjugate-and-close", "[group][property]") {
  auto corpus = builtin_corpus(200);
  for (std::size_t i = 0; i < corpus.size(); i += 7) {
    auto const& g = corpus[i].group;
    auto const& e = g.elements();
    for (std::size_t j = 0; j < e.size(); j += std::max<std::size_t>(1, e.size() / 5)) {
      oracle::Elems seed;
      for (auto const& x : e) {
        seed.insert(x.inverse() * e[j] * x);
      }
      auto expect = oracle::closure(seed);
      auto got = normal_closure(g, Group(g.degree(), {e[j]}));
      CHECK(test::elems(got) == expect);
      CHECK(is_normal(g, got));
    }
  }
}

TEST_CASE("Lagrange and degree bounds across the corpus", "[group][property]") {
  for (auto const& ng : builtin_corpus(120)) {
    auto const& g = ng.group;
    // |G| divides degree! (Legendre valuations)
    for (auto p : oracle::primes_of(g.order())) {
      order_type v = 0;
      for (order_type q = p; q <= g.degree(); q *= p) {
        v += g.degree() / q;
      }
      order_type a = 0;
      for (order_type n = g.order(); n % p == 0; n /= p) {
        ++a;
      }
      CHECK(a <= v);
    }
    for (auto const& h : all_subgroups(g)) {
      CHECK(g.order() % h.order() == 0);
    }
  }
}

TEST_CASE("quotient examples", "[quotient]") {
  auto s4 = symmetric(4);
  auto v = G(4, {"(1 2)(3 4)", "(1 3)(2 4)"});
  auto q = quotient(s4, v);
  CHECK(q.quotient().order() == 6);
  CHECK(q.index() == 6);
  CHECK_FALSE(detail::is_abelian(q.quotient()));

  auto a4 = alternating(4);
  auto qa = quotient(a4, v);
  CHECK(qa.quotient().order() == 3);
  bool cyclic = false;
  for (auto const& x : qa.quotient().elements()) {
    cyclic = cyclic || x.order() == 3;
  }
  CHECK(cyclic);

  auto g = named_group("D8").group;
  auto reg = quotient(g, trivial_subgroup(g));
  CHECK(reg.quotient().order() == 8);
  CHECK(reg.quotient().degree() == 8);

  CHECK_THROWS_AS(quotient(symmetric(3), G(3, {"(1 2)"})), NotNormal);
}

TEST_CASE("quotient projection is a homomorphism", "[quotient][property]") {
  std::mt19937_64 rng(11);
  for (auto const& name : {"S4", "D12", "C2xQ8", "A4xC3", "S3xS3"}) {
    auto g = named_group(name).group;
    for (auto const& n : normal_subgroups(g)) {
      auto cm = quotient(g, n);
      CHECK(cm.quotient().order() * n.order() == g.order());
      for (int i = 0; i < 200; ++i) {
        Perm a = test::random_element(g, rng);
        Perm b = test::random_element(g, rng);
        CHECK(cm.project(a * b) == cm.project(a) * cm.project(b));
      }
      CHECK(cm.preimage(cm.image(g)) == g);
      CHECK(cm.preimage(trivial_subgroup(cm.quotient())) == n);
    }
  }
}

TEST_CASE("subnormality", "[subnormal]") {
  auto s3 = symmetric(3);
  CHECK(is_subnormal(s3, G(3, {"(1 2 3)"})));
  CHECK_FALSE(is_subnormal(s3, G(3, {"(1 2)"})));
  auto s4 = symmetric(4);
  // <(1 3)(2 4)> < V < S4 with each normal in the next
  CHECK(is_subnormal(s4, G(4, {"(1 3)(2 4)"})));
  CHECK_FALSE(is_subnormal(s4, G(4, {"(1 2)"})));
  CHECK(is_subnormal(s4, trivial_subgroup(s4)));
  CHECK(is_subnormal(s4, s4));
}

TEST_CASE("subnormality agrees with a search for normal chains", "[subnormal][property]") {
  for (auto const& name : {"S4", "D16", "A4xC2", "S3xC2^2", "Q8xS3"}) {
    auto g = named_group(name).group;
    oracle::Lab lab(test::elems(g));
    auto const& subs = lab.subgroups_list();
    // chains H = K_0 < K_1 < ... < G with K_i normal in K_{i+1}
    std::map<oracle::Elems, bool> reach;
    auto sn = [&](auto&& self, oracle::Elems const& h) -> bool {
      if (h.size() == g.order()) {
        return true;
      }
      auto it = reach.find(h);
      if (it != reach.end()) {
        return it->second;
      }
      bool r = false;
      for (auto const& k : subs) {
        if (k.size() > h.size() && oracle::subset(h, k) && oracle::normal(k, h) && self(self, k)) {
          r = true;
          break;
        }
      }
      reach[h] = r;
      return r;
    };
    for (auto const& h : subs) {
      CHECK(is_subnormal(g, test::from_elems(g, h)) == sn(sn, h));
    }
  }
}

TEST_CASE("arithmetic helpers", "[arith]") {
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK(prime_divisors(360) == std::vector<std::uint64_t>{2, 3, 5});
  CHECK(prime_divisors(1).empty());
  CHECK(p_part(360, 2) == 8);
  CHECK(prime_of_power(49) == 7);
  CHECK(prime_of_power(12) == 0);
  CHECK(prime_of_power(1) == 0);
}
