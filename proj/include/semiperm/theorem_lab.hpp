#pragma once

#include <algorithm>      // for all_of, find
#include <chrono>         // for steady_clock
#include <cstdint>        // for uint64_t
#include <map>            // for map
#include <numeric>        // for gcd
#include <optional>       // for optional
#include <string>         // for string
#include <unordered_map>  // for unordered_map
#include <vector>         // for vector

#include "classes.hpp"
#include "corpus.hpp"
#include "group.hpp"
#include "p_groups.hpp"
#include "permutability.hpp"
#include "quotient.hpp"
#include "subgroups.hpp"

namespace semiperm {

  // How "every member of a family of d maximal subgroups meeting in Phi(P)
  // is s-semipermutable" is quantified over the possible families.
  enum class HypothesisMode { exists, forall, canonical };

  inline std::string to_string(HypothesisMode m) {
    switch (m) {
      case HypothesisMode::exists:
        return "exists";
      case HypothesisMode::forall:
        return "forall";
      default:
        return "canonical";
    }
  }

  inline HypothesisMode parse_mode(std::string const& s) {
    if (s == "exists") {
      return HypothesisMode::exists;
    }
    if (s == "forall") {
      return HypothesisMode::forall;
    }
    if (s == "canonical") {
      return HypothesisMode::canonical;
    }
    throw InvalidArgument("unknown hypothesis mode \"" + s + "\" (exists|forall|canonical)");
  }

  struct VerificationRecord {
    std::string group;
    std::uint64_t prime = 0;  // 0 when the check is not tied to one prime
    std::string check;
    bool hypothesis = false;
    bool conclusion = false;
    bool violated = false;
    bool skipped = false;
    bool sampled = false;
    std::uint64_t instances = 0;             // quantified instances evaluated
    std::uint64_t hypothesis_instances = 0;  // ... of which met the hypothesis
    std::string witness;
    std::chrono::nanoseconds elapsed{0};

    std::string status() const {
      return skipped ? "skipped" : violated ? "violated" : "ok";
    }
  };

  // "order N <gen, gen, ...>"
  inline std::string describe(Group const& h) {
    std::string s = "order " + std::to_string(h.order()) + " <";
    for (std::size_t i = 0; i < h.generators().size(); ++i) {
      s += (i ? ", " : "") + h.generators()[i].to_cycles();
    }
    return s + ">";
  }

  inline std::string describe_orders(std::vector<order_type> const& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
      s += (i ? "," : "") + std::to_string(v[i]);
    }
    return s + "]";
  }

  ////////////////////////////////////////////////////////////////////////
  // Main Result: hypothesis and conclusion
  ////////////////////////////////////////////////////////////////////////

  struct HypothesisResult {
    bool holds = false;
    Group sylow;
    std::size_t d = 0;
    std::uint64_t maximal_count = 0;
    std::uint64_t qualifying_count = 0;  // s-semipermutable maximals seen
    std::vector<Group> family;           // witness family when holds
    std::optional<Group> failing_member;
    std::optional<Group> failing_sylow;

    std::string summary() const {
      std::string s = "P=" + describe(sylow) + " d=" + std::to_string(d);
      if (holds) {
        s += " family=[";
        for (std::size_t i = 0; i < family.size(); ++i) {
          s += (i ? "; " : "") + describe(family[i]);
        }
        s += "]";
      } else {
        s += " s-semipermutable maximals " + std::to_string(qualifying_count) + "/"
             + std::to_string(maximal_count);
        if (failing_member) {
          s += " e.g. M=" + describe(*failing_member);
        }
        if (failing_sylow) {
          s += " fails with Sylow " + describe(*failing_sylow);
        }
      }
      return s;
    }
  };

  // Evaluates the hypothesis for P = sylow_subgroup(g, p). The families of
  // d maximal subgroups meeting in Phi(P) are exactly the sets of d
  // hyperplanes with independent functionals, so:
  //   exists    <=> the s-semipermutable maximals' functionals have rank d
  //   forall    <=> every maximal subgroup is s-semipermutable
  //   canonical <=> the d coordinate hyperplanes are s-semipermutable
  inline HypothesisResult main_hypothesis(Group const& g, std::uint64_t p, HypothesisMode mode) {
    if (g.order() % p != 0) {
      throw InvalidArgument("prime " + std::to_string(p) + " does not divide |G|");
    }
    HypothesisResult r;
    r.sylow = sylow_subgroup(g, p);
    PGroupStructure s(r.sylow);
    r.d = s.rank();
    r.maximal_count = s.hyperplane_count();

    auto evaluate = [&](std::uint64_t k, Group& m) {
      m = as_subgroup(g, s.maximal_subgroup(k));
      if (is_s_semipermutable(g, m)) {
        ++r.qualifying_count;
        return true;
      }
      if (!r.failing_member) {
        r.failing_member = m;
        r.failing_sylow = s_semipermutability_failure(g, m);
      }
      return false;
    };

    if (mode == HypothesisMode::canonical) {
      r.holds = true;
      for (std::size_t i = 0; i < r.d; ++i) {
        Group m;
        bool ok = evaluate(s.coordinate_index(i), m);
        r.family.push_back(m);
        r.holds = r.holds && ok;
      }
      if (!r.holds) {
        r.family.clear();
      }
      return r;
    }

    std::vector<Functional> basis;
    std::vector<Group> chosen;
    bool all = true;
    for (std::uint64_t k = 0; k < r.maximal_count; ++k) {
      Group m;
      if (!evaluate(k, m)) {
        all = false;
        if (mode == HypothesisMode::forall) {
          break;
        }
        continue;
      }
      if (basis.size() < r.d) {
        auto trial = basis;
        trial.push_back(s.functional(k));
        if (rank_mod_p(trial, p) == trial.size()) {
          basis = std::move(trial);
          chosen.push_back(m);
        }
      }
      if (mode == HypothesisMode::exists && basis.size() == r.d) {
        break;
      }
    }
    r.holds = mode == HypothesisMode::forall ? all : basis.size() == r.d;
    if (r.holds) {
      if (mode == HypothesisMode::forall) {
        // report the canonical family
        chosen.clear();
        for (std::size_t i = 0; i < r.d; ++i) {
          chosen.push_back(as_subgroup(g, s.maximal_subgroup(s.coordinate_index(i))));
        }
      }
      r.family = std::move(chosen);
    }
    return r;
  }

  // Either |P| = p or G is p-supersoluble.
  inline bool main_conclusion(Group const& g, std::uint64_t p) {
    return p_part(g.order(), p) == p || is_p_supersoluble(g, p);
  }

  namespace detail {
    inline std::string conclusion_summary(Group const& g, std::uint64_t p) {
      if (p_part(g.order(), p) == p) {
        return "|P|=p";
      }
      if (g.order() % p == 0 && is_p_power(g.order(), p)) {
        return "p-group";
      }
      return "chief factors " + describe_orders(chief_series(g).factor_orders);
    }

    template <typename F>
    VerificationRecord timed(std::string name, std::uint64_t p, std::string check, F&& body) {
      VerificationRecord rec;
      rec.group = std::move(name);
      rec.prime = p;
      rec.check = std::move(check);
      auto t0 = std::chrono::steady_clock::now();
      body(rec);
      rec.elapsed = std::chrono::steady_clock::now() - t0;
      rec.violated = rec.hypothesis && !rec.conclusion;
      return rec;
    }
  }  // namespace detail

  inline VerificationRecord verify_main(NamedGroup const& ng, std::uint64_t p, HypothesisMode mode) {
    return detail::timed(ng.name, p, "main", [&](VerificationRecord& rec) {
      auto h = main_hypothesis(ng.group, p, mode);
      rec.hypothesis = h.holds;
      rec.conclusion = main_conclusion(ng.group, p);
      rec.instances = 1;
      rec.hypothesis_instances = h.holds ? 1 : 0;
      rec.witness = h.summary() + "; " + detail::conclusion_summary(ng.group, p);
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // Lemma suites
  ////////////////////////////////////////////////////////////////////////

  struct LemmaOptions {
    // Instances evaluated per lemma part and group; larger instance sets are
    // sampled evenly and the record is marked sampled.
    std::uint64_t budget = 2000;
  };

  namespace detail {
    struct Outcome {
      bool hypothesis = true;
      bool violated = false;
      std::string witness;
    };

    // Two passes over an instance enumeration: count, then evaluate an
    // evenly spaced selection of at most `budget` instances.
    template <typename Enumerate, typename Eval>
    VerificationRecord run_part(std::string const& group, std::string const& id,
                                std::uint64_t budget, Enumerate&& enumerate, Eval&& eval) {
      return timed(group, 0, id, [&](VerificationRecord& rec) {
        std::uint64_t total = 0;
        enumerate([&](auto const&...) { ++total; });
        std::uint64_t i = 0;
        std::uint64_t violations = 0;
        std::string first_violation;
        rec.sampled = total > budget;
        enumerate([&](auto const&... args) {
          std::uint64_t k = i++;
          if (rec.sampled && (k * budget) / total == ((k + 1) * budget) / total) {
            return;
          }
          Outcome o = eval(args...);
          ++rec.instances;
          if (o.hypothesis) {
            ++rec.hypothesis_instances;
          }
          if (o.violated) {
            if (violations++ == 0) {
              first_violation = o.witness;
            }
          }
        });
        rec.hypothesis = rec.hypothesis_instances > 0;
        rec.conclusion = violations == 0;
        rec.witness = "instances=" + std::to_string(rec.instances) + "/" + std::to_string(total)
                      + " hypothesis=" + std::to_string(rec.hypothesis_instances);
        if (violations > 0) {
          rec.witness += " violations=" + std::to_string(violations) + " first: " + first_violation;
        }
      });
    }

    inline VerificationRecord skipped_record(std::string const& group, std::uint64_t p,
                                             std::string const& id, std::string const& reason) {
      VerificationRecord rec;
      rec.group = group;
      rec.prime = p;
      rec.check = id;
      rec.skipped = true;
      rec.witness = "skipped: " + reason;
      return rec;
    }

    inline bool is_abelian(Group const& h) {
      auto const& gens = h.generators();
      for (std::size_t i = 0; i < gens.size(); ++i) {
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
          if (gens[i] * gens[j] != gens[j] * gens[i]) {
            return false;
          }
        }
      }
      return true;
    }

    inline bool is_prime_power_order(Group const& h) { return prime_of_power(h.order()) != 0; }

    // Quotients G/N keyed by N's element set, built on first use.
    class QuotientCache {
     public:
      explicit QuotientCache(Group g) : g_(std::move(g)) {}

      CosetMap const& get(Group const& n) {
        auto it = map_.find(n.parent_members());
        if (it == map_.end()) {
          it = map_.emplace(n.parent_members(), std::make_unique<CosetMap>(g_, n)).first;
        }
        return *it->second;
      }

     private:
      Group g_;
      std::unordered_map<Bitset, std::unique_ptr<CosetMap>, BitsetHash> map_;
    };

    // Subgroup of g with the given element set, looked up in the lattice.
    inline Group lattice_member(Group const& g, std::vector<Group> const& subs,
                                std::unordered_map<Bitset, std::size_t, BitsetHash> const& where,
                                Bitset const& m) {
      auto it = where.find(m);
      if (it != where.end()) {
        return subs[it->second];
      }
      return Group::make_subgroup(g, m);
    }

    inline std::unordered_map<Bitset, std::size_t, BitsetHash> index_lattice(
        std::vector<Group> const& subs) {
      std::unordered_map<Bitset, std::size_t, BitsetHash> where;
      for (std::size_t i = 0; i < subs.size(); ++i) {
        where.emplace(subs[i].parent_members(), i);
      }
      return where;
    }
  }  // namespace detail

  // Parts (1)-(6) for every s-permutable subgroup of the lattice.
  inline std::vector<VerificationRecord> verify_lemma_2_1(NamedGroup const& ng,
                                                          LemmaOptions opt = {}) {
    static char const* const ids[] = {"lemma-2.1(1)", "lemma-2.1(2)", "lemma-2.1(3)",
                                      "lemma-2.1(4)", "lemma-2.1(5)", "lemma-2.1(6)"};
    Group const& g = ng.group;
    std::vector<VerificationRecord> out;
    std::vector<Group> subs;
    try {
      subs = all_subgroups(g);
    } catch (CapExceeded const& e) {
      for (auto id : ids) {
        out.push_back(detail::skipped_record(ng.name, 0, id, e.what()));
      }
      return out;
    }
    auto const where = detail::index_lattice(subs);
    std::vector<std::size_t> sperm;
    for (std::size_t i = 0; i < subs.size(); ++i) {
      if (is_s_permutable(g, subs[i])) {
        sperm.push_back(i);
      }
    }
    auto const normals = normal_subgroups(g);

    // (1) s-permutable => subnormal
    out.push_back(detail::run_part(
        ng.name, ids[0], opt.budget,
        [&](auto&& emit) {
          for (auto i : sperm) {
            emit(i);
          }
        },
        [&](std::size_t i) {
          detail::Outcome o;
          o.violated = !is_subnormal(g, subs[i]);
          o.witness = "H=" + describe(subs[i]) + " not subnormal";
          return o;
        }));

    // (2) H <= K, H s-permutable in G => H s-permutable in K
    out.push_back(detail::run_part(
        ng.name, ids[1], opt.budget,
        [&](auto&& emit) {
          for (auto i : sperm) {
            for (std::size_t k = 0; k < subs.size(); ++k) {
              if (k != i && subs[i].parent_members().is_subset_of(subs[k].parent_members())) {
                emit(i, k);
              }
            }
          }
        },
        [&](std::size_t i, std::size_t k) {
          detail::Outcome o;
          o.violated = !is_s_permutable(subs[k], subs[i]);
          o.witness = "H=" + describe(subs[i]) + " K=" + describe(subs[k]);
          return o;
        }));

    // (3) s-permutable Hall subgroup => normal
    out.push_back(detail::run_part(
        ng.name, ids[2], opt.budget,
        [&](auto&& emit) {
          for (auto i : sperm) {
            if (is_hall(g, subs[i])) {
              emit(i);
            }
          }
        },
        [&](std::size_t i) {
          detail::Outcome o;
          o.violated = !is_normal(g, subs[i]);
          o.witness = "H=" + describe(subs[i]) + " is Hall but not normal";
          return o;
        }));

    // (4) K normal, K <= H: H s-permutable in G <=> H/K s-permutable in G/K
    detail::QuotientCache quotients(g);
    out.push_back(detail::run_part(
        ng.name, ids[3], opt.budget,
        [&](auto&& emit) {
          for (std::size_t n = 0; n < normals.size(); ++n) {
            if (normals[n].order() == 1) {
              continue;
            }
            for (std::size_t i = 0; i < subs.size(); ++i) {
              if (normals[n].parent_members().is_subset_of(subs[i].parent_members())) {
                emit(n, i);
              }
            }
          }
        },
        [&](std::size_t n, std::size_t i) {
          CosetMap const& cm = quotients.get(normals[n]);
          bool upstairs = is_s_permutable(g, subs[i]);
          bool downstairs = is_s_permutable(cm.quotient(), cm.image(subs[i]));
          detail::Outcome o;
          o.violated = upstairs != downstairs;
          o.witness = "K=" + describe(normals[n]) + " H=" + describe(subs[i]) + " in G: "
                      + (upstairs ? "yes" : "no") + " in G/K: " + (downstairs ? "yes" : "no");
          return o;
        }));

    // (5) intersections of s-permutable subgroups
    out.push_back(detail::run_part(
        ng.name, ids[4], opt.budget,
        [&](auto&& emit) {
          for (std::size_t a = 0; a < sperm.size(); ++a) {
            for (std::size_t b = a + 1; b < sperm.size(); ++b) {
              emit(sperm[a], sperm[b]);
            }
          }
        },
        [&](std::size_t i, std::size_t j) {
          Bitset m = subs[i].parent_members() & subs[j].parent_members();
          Group meet = detail::lattice_member(g, subs, where, m);
          detail::Outcome o;
          o.violated = !is_s_permutable(g, meet);
          o.witness = "H=" + describe(subs[i]) + " K=" + describe(subs[j]);
          return o;
        }));

    // (6) p-subgroup P0: s-permutable <=> N_G(P0) >= O^p(G)
    auto const primes = prime_divisors(g.order());
    std::map<std::uint64_t, Bitset> residual;
    for (auto p : primes) {
      residual.emplace(p, members(g, p_residual(g, p)));
    }
    out.push_back(detail::run_part(
        ng.name, ids[5], opt.budget,
        [&](auto&& emit) {
          for (std::size_t i = 0; i < subs.size(); ++i) {
            std::uint64_t p = prime_of_power(subs[i].order());
            if (p != 0) {
              emit(i, p);
            }
          }
        },
        [&](std::size_t i, std::uint64_t p) {
          bool sp = is_s_permutable(g, subs[i]);
          bool crit = residual.at(p).is_subset_of(members(g, normalizer(g, subs[i])));
          detail::Outcome o;
          o.violated = sp != crit;
          o.witness = "P0=" + describe(subs[i]) + " p=" + std::to_string(p)
                      + " s-permutable=" + (sp ? "yes" : "no")
                      + " N_G(P0)>=O^p(G)=" + (crit ? "yes" : "no");
          return o;
        }));
    return out;
  }

  // Parts (1)-(4) for the s-semipermutable subgroups of the lattice.
  inline std::vector<VerificationRecord> verify_lemma_2_2(NamedGroup const& ng,
                                                          LemmaOptions opt = {}) {
    static char const* const ids[] = {"lemma-2.2(1)", "lemma-2.2(2)", "lemma-2.2(3)",
                                      "lemma-2.2(4)"};
    Group const& g = ng.group;
    std::vector<VerificationRecord> out;
    std::vector<Group> subs;
    try {
      subs = all_subgroups(g);
    } catch (CapExceeded const& e) {
      for (auto id : ids) {
        out.push_back(detail::skipped_record(ng.name, 0, id, e.what()));
      }
      return out;
    }
    auto const where = detail::index_lattice(subs);
    std::vector<std::size_t> ssemi;
    for (std::size_t i = 0; i < subs.size(); ++i) {
      if (is_s_semipermutable(g, subs[i])) {
        ssemi.push_back(i);
      }
    }
    auto const normals = normal_subgroups(g);

    // (1) restriction to K >= H
    out.push_back(detail::run_part(
        ng.name, ids[0], opt.budget,
        [&](auto&& emit) {
          for (auto i : ssemi) {
            for (std::size_t k = 0; k < subs.size(); ++k) {
              if (k != i && subs[i].parent_members().is_subset_of(subs[k].parent_members())) {
                emit(i, k);
              }
            }
          }
        },
        [&](std::size_t i, std::size_t k) {
          detail::Outcome o;
          o.violated = !is_s_semipermutable(subs[k], subs[i]);
          o.witness = "H=" + describe(subs[i]) + " K=" + describe(subs[k]);
          return o;
        }));

    // (2) H a p-group, N normal: HN/N s-semipermutable in G/N
    detail::QuotientCache quotients(g);
    out.push_back(detail::run_part(
        ng.name, ids[1], opt.budget,
        [&](auto&& emit) {
          for (auto i : ssemi) {
            if (!detail::is_prime_power_order(subs[i])) {
              continue;
            }
            for (std::size_t n = 0; n < normals.size(); ++n) {
              if (normals[n].order() > 1 && normals[n].order() < g.order()) {
                emit(i, n);
              }
            }
          }
        },
        [&](std::size_t i, std::size_t n) {
          CosetMap const& cm = quotients.get(normals[n]);
          detail::Outcome o;
          o.violated = !is_s_semipermutable(cm.quotient(), cm.image(subs[i]));
          o.witness = "H=" + describe(subs[i]) + " N=" + describe(normals[n]);
          return o;
        }));

    // (3) H <= O_p(G) => s-permutable
    std::map<std::uint64_t, Bitset> op;
    for (auto p : prime_divisors(g.order())) {
      op.emplace(p, members(g, o_p(g, p)));
    }
    out.push_back(detail::run_part(
        ng.name, ids[2], opt.budget,
        [&](auto&& emit) {
          for (auto i : ssemi) {
            std::uint64_t p = prime_of_power(subs[i].order());
            if (p != 0 && subs[i].parent_members().is_subset_of(op.at(p))) {
              emit(i);
            }
          }
        },
        [&](std::size_t i) {
          detail::Outcome o;
          o.violated = !is_s_permutable(g, subs[i]);
          o.witness = "H=" + describe(subs[i]) + " <= O_p(G) is not s-permutable";
          return o;
        }));

    // (4) H a p-group, N normal: H ∩ N s-semipermutable
    out.push_back(detail::run_part(
        ng.name, ids[3], opt.budget,
        [&](auto&& emit) {
          for (auto i : ssemi) {
            if (!detail::is_prime_power_order(subs[i])) {
              continue;
            }
            for (std::size_t n = 0; n < normals.size(); ++n) {
              emit(i, n);
            }
          }
        },
        [&](std::size_t i, std::size_t n) {
          Bitset m = subs[i].parent_members() & normals[n].parent_members();
          Group meet = detail::lattice_member(g, subs, where, m);
          detail::Outcome o;
          o.violated = !is_s_semipermutable(g, meet);
          o.witness = "H=" + describe(subs[i]) + " N=" + describe(normals[n]);
          return o;
        }));
    return out;
  }

  // Normal closure of every s-semipermutable p-subgroup is soluble.
  inline std::vector<VerificationRecord> verify_lemma_2_3(NamedGroup const& ng,
                                                          LemmaOptions opt = {}) {
    Group const& g = ng.group;
    std::vector<Group> candidates;
    bool from_lattice = true;
    try {
      candidates = all_subgroups(g);
    } catch (CapExceeded const&) {
      // subgroups of the Sylow subgroups instead
      from_lattice = false;
      std::unordered_map<Bitset, std::size_t, BitsetHash> seen;
      try {
        for (auto p : prime_divisors(g.order())) {
          for (auto const& s : all_sylow_subgroups(g, p).all) {
            Group local = Group(g.degree(), s.generators());
            for (auto const& h : all_subgroups(local)) {
              Group hg = as_subgroup(g, h);
              if (seen.emplace(hg.parent_members(), candidates.size()).second) {
                candidates.push_back(hg);
              }
            }
          }
        }
      } catch (CapExceeded const& e) {
        return {detail::skipped_record(ng.name, 0, "lemma-2.3", e.what())};
      }
    }
    auto rec = detail::run_part(
        ng.name, "lemma-2.3", opt.budget,
        [&](auto&& emit) {
          for (std::size_t i = 0; i < candidates.size(); ++i) {
            if (detail::is_prime_power_order(candidates[i])) {
              emit(i);
            }
          }
        },
        [&](std::size_t i) {
          detail::Outcome o;
          o.hypothesis = is_s_semipermutable(g, candidates[i]);
          if (o.hypothesis) {
            Group closure = normal_closure(g, candidates[i]);
            o.violated = !is_soluble(closure);
            o.witness = "H=" + describe(candidates[i]) + " H^G=" + describe(closure)
                        + " is not soluble";
          }
          return o;
        });
    rec.sampled = rec.sampled || !from_lattice;
    return {rec};
  }

  // N abelian normal, N <= M, gcd(|N|, [G:M]) = 1, N complemented in M =>
  // N complemented in G.
  inline std::vector<VerificationRecord> verify_lemma_2_4(NamedGroup const& ng,
                                                          LemmaOptions opt = {}) {
    Group const& g = ng.group;
    std::vector<Group> subs;
    try {
      subs = all_subgroups(g);
    } catch (CapExceeded const& e) {
      return {detail::skipped_record(ng.name, 0, "lemma-2.4", e.what())};
    }
    std::vector<Group> abelian_normals;
    for (auto const& n : normal_subgroups(g)) {
      if (detail::is_abelian(n)) {
        abelian_normals.push_back(n);
      }
    }
    Bitset const all = g.table().full_set();
    return {detail::run_part(
        ng.name, "lemma-2.4", opt.budget,
        [&](auto&& emit) {
          for (std::size_t n = 0; n < abelian_normals.size(); ++n) {
            for (std::size_t m = 0; m < subs.size(); ++m) {
              if (abelian_normals[n].parent_members().is_subset_of(subs[m].parent_members())
                  && std::gcd(abelian_normals[n].order(), g.order() / subs[m].order()) == 1) {
                emit(n, m);
              }
            }
          }
        },
        [&](std::size_t n, std::size_t m) {
          auto const& nm = abelian_normals[n].parent_members();
          auto in_m = detail::complement_among(subs, subs[m].parent_members(), subs[m].order(),
                                               nm, abelian_normals[n].order());
          detail::Outcome o;
          o.hypothesis = in_m.has_value();
          if (o.hypothesis) {
            auto in_g = detail::complement_among(subs, all, g.order(), nm,
                                                 abelian_normals[n].order());
            o.violated = !in_g.has_value();
            o.witness = "N=" + describe(abelian_normals[n]) + " M=" + describe(subs[m])
                        + " complement in M " + describe(*in_m) + " but none in G";
          }
          return o;
        })};
  }

  // Records whether some subgroup is s-semipermutable but not s-permutable,
  // i.e. whether this group separates the two predicates.
  inline VerificationRecord verify_separation(NamedGroup const& ng) {
    Group const& g = ng.group;
    std::vector<Group> subs;
    try {
      subs = all_subgroups(g);
    } catch (CapExceeded const& e) {
      return detail::skipped_record(ng.name, 0, "separation", e.what());
    }
    return detail::timed(ng.name, 0, "separation", [&](VerificationRecord& rec) {
      rec.conclusion = true;
      for (auto const& h : subs) {
        ++rec.instances;
        if (is_s_semipermutable(g, h) && !is_s_permutable(g, h)) {
          ++rec.hypothesis_instances;
          if (!rec.hypothesis) {
            auto q = s_permutability_failure(g, h);
            rec.witness = "H=" + describe(h) + " s-semipermutable, not s-permutable (Sylow "
                          + describe(*q) + ")";
          }
          rec.hypothesis = true;
        }
      }
      rec.witness = "separating=" + std::to_string(rec.hypothesis_instances) + "/"
                    + std::to_string(rec.instances)
                    + (rec.hypothesis ? " first: " + rec.witness : "");
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // Srinivasan and the corollaries
  ////////////////////////////////////////////////////////////////////////

  // Every maximal subgroup of every Sylow subgroup s-permutable =>
  // supersoluble.
  inline VerificationRecord verify_srinivasan(NamedGroup const& ng) {
    Group const& g = ng.group;
    return detail::timed(ng.name, 0, "srinivasan", [&](VerificationRecord& rec) {
      rec.hypothesis = true;
      for (auto p : prime_divisors(g.order())) {
        for (auto const& s : all_sylow_subgroups(g, p).all) {
          PGroupStructure ps(s);
          for (std::uint64_t k = 0; k < ps.hyperplane_count() && rec.hypothesis; ++k) {
            Group m = as_subgroup(g, ps.maximal_subgroup(k));
            ++rec.instances;
            if (!is_s_permutable(g, m)) {
              rec.hypothesis = false;
              rec.witness = "M=" + describe(m) + " of Sylow " + describe(s)
                            + " is not s-permutable";
            }
          }
        }
      }
      rec.hypothesis_instances = rec.hypothesis ? 1 : 0;
      rec.conclusion = is_supersoluble(g);
      if (rec.hypothesis) {
        rec.witness = "all " + std::to_string(rec.instances) + " maximal subgroups s-permutable";
      }
      if (g.order() > 1 && prime_of_power(g.order()) == 0) {
        rec.witness += "; chief factors " + describe_orders(chief_series(g).factor_orders);
      }
    });
  }

  // p = smallest prime of |G|: G p-nilpotent <=> hypothesis (exists mode).
  // Returned as two implications, "cor-4.1-if" and "cor-4.1-only-if".
  inline std::vector<VerificationRecord> verify_corollary_4_1(NamedGroup const& ng) {
    Group const& g = ng.group;
    if (g.order() == 1) {
      return {};
    }
    std::uint64_t const p = prime_divisors(g.order()).front();
    auto h = main_hypothesis(g, p, HypothesisMode::exists);
    bool const nilp = is_p_nilpotent(g, p);
    std::string const detail = h.summary() + "; p-nilpotent=" + (nilp ? "yes" : "no");
    VerificationRecord if_dir = detail::timed(ng.name, p, "cor-4.1-if", [&](VerificationRecord& r) {
      r.hypothesis = h.holds;
      r.conclusion = nilp;
      r.instances = 1;
      r.hypothesis_instances = h.holds ? 1 : 0;
      r.witness = detail;
    });
    VerificationRecord only_if =
        detail::timed(ng.name, p, "cor-4.1-only-if", [&](VerificationRecord& r) {
          r.hypothesis = nilp;
          r.conclusion = h.holds;
          r.instances = 1;
          r.hypothesis_instances = nilp ? 1 : 0;
          r.witness = detail;
        });
    return {if_dir, only_if};
  }

  // G p-soluble and hypothesis => G p-supersoluble.
  inline VerificationRecord verify_corollary_4_2(NamedGroup const& ng, std::uint64_t p,
                                                 HypothesisMode mode = HypothesisMode::exists) {
    Group const& g = ng.group;
    return detail::timed(ng.name, p, "cor-4.2", [&](VerificationRecord& rec) {
      bool const solp = is_p_soluble(g, p);
      auto h = main_hypothesis(g, p, mode);
      rec.hypothesis = solp && h.holds;
      rec.conclusion = is_p_supersoluble(g, p);
      rec.instances = 1;
      rec.hypothesis_instances = rec.hypothesis ? 1 : 0;
      rec.witness = std::string("p-soluble=") + (solp ? "yes" : "no") + "; " + h.summary() + "; "
                    + detail::conclusion_summary(g, p);
    });
  }

  // N_G(P) p-nilpotent and hypothesis => G p-nilpotent.
  inline VerificationRecord verify_corollary_4_3(NamedGroup const& ng, std::uint64_t p,
                                                 HypothesisMode mode = HypothesisMode::exists) {
    Group const& g = ng.group;
    return detail::timed(ng.name, p, "cor-4.3", [&](VerificationRecord& rec) {
      auto h = main_hypothesis(g, p, mode);
      Group n = normalizer(g, h.sylow);
      bool const nnilp = is_p_nilpotent(Group(g.degree(), n.generators()), p);
      rec.hypothesis = nnilp && h.holds;
      rec.conclusion = is_p_nilpotent(g, p);
      rec.instances = 1;
      rec.hypothesis_instances = rec.hypothesis ? 1 : 0;
      rec.witness = "N_G(P)=" + describe(n) + " p-nilpotent=" + (nnilp ? "yes" : "no") + "; "
                    + h.summary();
    });
  }

}  // namespace semiperm
