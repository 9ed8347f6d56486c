#pragma once

#include <algorithm>      // for sort
#include <numeric>        // for gcd
#include <optional>       // for optional
#include <string>         // for to_string
#include <unordered_map>  // for unordered_map
#include <vector>         // for vector

#include "group.hpp"

namespace semiperm {

  // Orders subgroups of one enumerated parent by (order, sorted element
  // indices). This is the canonical order of every list returned here.
  inline bool canonical_less(Group const& a, Group const& b) {
    if (a.order() != b.order()) {
      return a.order() < b.order();
    }
    return lex_less(a.parent_members(), b.parent_members());
  }

  inline void canonical_sort(std::vector<Group>& groups) {
    std::sort(groups.begin(), groups.end(), canonical_less);
  }

  ////////////////////////////////////////////////////////////////////////
  // Sylow subgroups
  ////////////////////////////////////////////////////////////////////////

  struct SylowSystem {
    Group parent;
    std::uint64_t prime = 0;
    Group representative;
    std::vector<Group> all;

    std::size_t count() const { return all.size(); }
  };

  namespace detail {
    inline Group compute_sylow(Group const& g, std::uint64_t p) {
      order_type const n = g.order();
      if (n % p != 0) {
        return trivial_subgroup(g);
      }
      if (is_p_power(n, p)) {
        return g;
      }
      auto const& t = g.table();
      order_type const target = p_part(n, p);
      // start from a cyclic p-subgroup
      index_type x = 0;
      for (index_type i = 1; i < t.size(); ++i) {
        if (is_p_power(t.element_order(i), p)) {
          x = i;
          break;
        }
      }
      std::vector<index_type> gens{x};
      Bitset sylow = t.closure(gens);
      while (sylow.count() < target) {
        Bitset norm = t.normalizer_set(sylow, gens);
        bool found = false;
        norm.for_each([&](std::size_t i) {
          auto y = static_cast<index_type>(i);
          if (!found && !sylow.test(y) && sylow.test(t.pow(y, p))) {
            t.extend(sylow, gens, y);
            found = true;
          }
        });
        if (!found) {
          throw std::logic_error("Sylow ascent: no p-element in N_G(P) \\ P");
        }
      }
      return Group::make_subgroup(g, std::move(sylow), &gens);
    }
  }  // namespace detail

  // One Sylow p-subgroup (trivial if p does not divide |G|), found by
  // repeatedly adjoining p-elements of the normalizer.
  inline Group sylow_subgroup(Group const& g, std::uint64_t p) {
    if (g.order() % p != 0 || is_p_power(g.order(), p)) {
      return detail::compute_sylow(g, p);
    }
    return *g.memo().get<Group>("sylow:" + std::to_string(p),
                                [&] { return detail::compute_sylow(g, p); });
  }

  // Every Sylow p-subgroup, as the conjugation orbit of sylow_subgroup(g, p).
  inline SylowSystem all_sylow_subgroups(Group const& g, std::uint64_t p) {
    if (g.order() % p != 0 || is_p_power(g.order(), p)) {
      Group rep = sylow_subgroup(g, p);
      return SylowSystem{g, p, rep, {rep}};
    }
    // cached without the parent, which would otherwise own itself
    auto sys = g.memo().get<SylowSystem>("sylows:" + std::to_string(p), [&] {
      SylowSystem s;
      s.prime = p;
      s.representative = sylow_subgroup(g, p);
      auto const& t = g.table();
      Bitset rep = members(g, s.representative);
      std::unordered_map<Bitset, std::size_t, BitsetHash> seen;
      std::vector<Bitset> orbit{rep};
      seen.emplace(rep, 0);
      for (std::size_t k = 0; k < orbit.size(); ++k) {
        for (index_type x : t.generator_indices()) {
          Bitset c = t.conjugate_set(orbit[k], x);
          if (seen.emplace(c, orbit.size()).second) {
            orbit.push_back(std::move(c));
          }
        }
      }
      for (auto& b : orbit) {
        s.all.push_back(Group::make_subgroup(g, std::move(b)));
      }
      canonical_sort(s.all);
      return s;
    });
    SylowSystem out = *sys;
    out.parent = g;
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Subgroup lattice and normal subgroups
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    struct MemberList {
      std::vector<Bitset> sets;
      std::vector<std::vector<index_type>> gens;
      std::unordered_map<Bitset, std::size_t, BitsetHash> index;

      bool add(Bitset b, std::vector<index_type> g) {
        if (!index.emplace(b, sets.size()).second) {
          return false;
        }
        sets.push_back(std::move(b));
        gens.push_back(std::move(g));
        return true;
      }

      std::vector<Group> to_groups(Group const& parent) const {
        std::vector<Group> out;
        out.reserve(sets.size());
        for (std::size_t i = 0; i < sets.size(); ++i) {
          out.push_back(Group::make_subgroup(parent, sets[i], &gens[i]));
        }
        canonical_sort(out);
        return out;
      }
    };
  }  // namespace detail

  // Every subgroup of g, via layered joins of cyclic subgroups of prime power
  // order (every subgroup is generated by such).
  inline std::vector<Group> all_subgroups(Group const& g) {
    if (g.order() > lattice_cap()) {
      throw CapExceeded("compute the subgroup lattice", g.order(), lattice_cap());
    }
    auto v = g.memo().get<std::vector<Group>>("lattice", [&] {
      auto const& t = g.table();
      detail::MemberList list;
      list.add(t.trivial_set(), {});
      std::vector<index_type> cyclic_gens;
      for (index_type x = 1; x < t.size(); ++x) {
        if (prime_of_power(t.element_order(x)) == 0) {
          continue;
        }
        std::vector<index_type> gx{x};
        if (list.add(t.closure(gx), gx)) {
          cyclic_gens.push_back(x);
        }
      }
      for (std::size_t k = 0; k < list.sets.size(); ++k) {
        for (index_type c : cyclic_gens) {
          if (list.sets[k].test(c)) {
            continue;
          }
          Bitset j = list.sets[k];
          auto gens = list.gens[k];
          t.extend(j, gens, c);
          list.add(std::move(j), std::move(gens));
        }
      }
      return list.to_groups(g);
    });
    return *v;
  }

  namespace detail {
    // Normal closure of each conjugacy class, deduplicated.
    struct ClassClosures {
      std::vector<Bitset> classes;        // one per conjugacy class
      std::vector<Bitset> closures;       // normal closure of each class
      std::vector<std::vector<index_type>> closure_gens;
    };

    inline std::shared_ptr<ClassClosures const> class_closures(Group const& g) {
      auto v = g.memo().get<ClassClosures>("class-closures", [&] {
        auto const& t = g.table();
        ClassClosures cc;
        Bitset seen = t.empty_set();
        for (index_type x = 0; x < t.size(); ++x) {
          if (seen.test(x)) {
            continue;
          }
          Bitset cls = t.conjugacy_class(x);
          seen |= cls;
          Bitset closure = t.trivial_set();
          std::vector<index_type> gens;
          cls.for_each([&](std::size_t i) { t.extend(closure, gens, static_cast<index_type>(i)); });
          cc.classes.push_back(std::move(cls));
          cc.closures.push_back(std::move(closure));
          cc.closure_gens.push_back(std::move(gens));
        }
        return cc;
      });
      return v;
    }
  }  // namespace detail

  // All normal subgroups, as the join-closure of normal closures of
  // conjugacy classes. Independent of all_subgroups, so not lattice-capped.
  inline std::vector<Group> normal_subgroups(Group const& g) {
    auto v = g.memo().get<std::vector<Group>>("normals", [&] {
      auto const& t = g.table();
      auto ccp = detail::class_closures(g);
    auto const& cc = *ccp;
      detail::MemberList list;
      list.add(t.trivial_set(), {});
      for (std::size_t i = 0; i < cc.closures.size(); ++i) {
        list.add(cc.closures[i], cc.closure_gens[i]);
      }
      for (std::size_t k = 0; k < list.sets.size(); ++k) {
        for (std::size_t i = 0; i < cc.closures.size(); ++i) {
          if (cc.closures[i].is_subset_of(list.sets[k])) {
            continue;
          }
          Bitset j = list.sets[k];
          auto gens = list.gens[k];
          for (index_type c : cc.closure_gens[i]) {
            t.extend(j, gens, c);
          }
          list.add(std::move(j), std::move(gens));
        }
      }
      return list.to_groups(g);
    });
    return *v;
  }

  // Minimal normal subgroups are exactly the inclusion-minimal normal
  // closures of single nontrivial elements.
  inline std::vector<Group> minimal_normal_subgroups(Group const& g) {
    auto ccp = detail::class_closures(g);
    auto const& cc = *ccp;
    std::vector<Bitset> candidates;
    for (std::size_t i = 0; i < cc.closures.size(); ++i) {
      if (cc.closures[i].count() > 1) {
        candidates.push_back(cc.closures[i]);
      }
    }
    std::vector<Group> out;
    std::vector<Bitset> kept;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      bool minimal = true;
      for (std::size_t j = 0; j < candidates.size() && minimal; ++j) {
        if (candidates[j] != candidates[i] && candidates[j].is_subset_of(candidates[i])) {
          minimal = false;
        }
      }
      if (minimal && std::find(kept.begin(), kept.end(), candidates[i]) == kept.end()) {
        kept.push_back(candidates[i]);
        out.push_back(Group::make_subgroup(g, candidates[i]));
      }
    }
    canonical_sort(out);
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // O_p, O_p', O^p
  ////////////////////////////////////////////////////////////////////////

  // Largest normal p-subgroup: the intersection of all Sylow p-subgroups.
  inline Group o_p(Group const& g, std::uint64_t p) {
    if (is_p_power(g.order(), p)) {
      return g;
    }
    if (g.order() % p != 0) {
      return trivial_subgroup(g);
    }
    auto const& sys = all_sylow_subgroups(g, p);
    Bitset m = g.table().full_set();
    for (auto const& s : sys.all) {
      m &= s.parent_members();
    }
    return Group::make_subgroup(g, std::move(m));
  }

  // Largest normal p'-subgroup: x lies in it iff its normal closure is a
  // p'-group.
  inline Group o_p_prime(Group const& g, std::uint64_t p) {
    if (g.order() % p != 0) {
      return g;
    }
    if (is_p_power(g.order(), p)) {
      return trivial_subgroup(g);
    }
    auto const& t = g.table();
    auto ccp = detail::class_closures(g);
    auto const& cc = *ccp;
    Bitset m = t.empty_set();
    for (std::size_t i = 0; i < cc.closures.size(); ++i) {
      if (cc.closures[i].count() % p != 0) {
        m |= cc.classes[i];
      }
    }
    return Group::make_subgroup(g, t.generated_by_set(m));
  }

  // O^p(G): generated by all elements of order prime to p.
  inline Group p_residual(Group const& g, std::uint64_t p) {
    if (g.order() % p != 0) {
      return g;
    }
    if (is_p_power(g.order(), p)) {
      return trivial_subgroup(g);
    }
    auto const& t = g.table();
    Bitset m = t.empty_set();
    for (index_type x = 0; x < t.size(); ++x) {
      if (t.element_order(x) % p != 0) {
        m.set(x);
      }
    }
    return Group::make_subgroup(g, t.generated_by_set(m));
  }

  ////////////////////////////////////////////////////////////////////////
  // Hall subgroups and complements
  ////////////////////////////////////////////////////////////////////////

  inline bool is_hall(Group const& g, Group const& h) {
    detail::require_subgroup(g, h);
    return std::gcd(h.order(), g.order() / h.order()) == 1;
  }

  namespace detail {
    // A subgroup among `candidates` (subgroups of the parent of n) contained
    // in `within`, of order |within|/|n|, meeting n trivially.
    inline std::optional<Group> complement_among(std::vector<Group> const& candidates,
                                                 Bitset const& within, order_type within_order,
                                                 Bitset const& n, order_type n_order) {
      order_type const target = within_order / n_order;
      Bitset n_nontrivial = n;
      n_nontrivial.reset(0);
      for (auto const& k : candidates) {
        if (k.order() != target) {
          continue;
        }
        auto const& km = k.parent_members();
        if (!km.intersects(n_nontrivial) && km.is_subset_of(within)) {
          return k;
        }
      }
      return std::nullopt;
    }
  }  // namespace detail

  // A subgroup K with NK = G and N ∩ K = 1, searched over all_subgroups(g).
  inline std::optional<Group> find_complement(Group const& g, Group const& n) {
    detail::require_subgroup(g, n);
    auto const& subs = all_subgroups(g);
    return detail::complement_among(subs, g.table().full_set(), g.order(), members(g, n),
                                    n.order());
  }

  inline bool is_complemented(Group const& g, Group const& n) {
    return find_complement(g, n).has_value();
  }

}  // namespace semiperm
