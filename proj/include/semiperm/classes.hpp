#pragma once

#include <algorithm>  // for reverse, all_of
#include <vector>     // for vector

#include "group.hpp"
#include "quotient.hpp"
#include "subgroups.hpp"

namespace semiperm {

  // G = chain[0] > chain[1] > ... > chain.back() = 1, every term normal in G
  // and every factor a chief factor. factor_orders[i] = |chain[i]/chain[i+1]|.
  struct ChiefSeries {
    Group group;
    std::vector<Group> chain;
    std::vector<order_type> factor_orders;
  };

  enum class MinimalNormalPick { first, last };

  namespace detail {
    inline ChiefSeries compute_chief_series(Group const& g, MinimalNormalPick pick) {
      ChiefSeries cs;
      Group n = trivial_subgroup(g);
      std::vector<Group> up{n};
      while (n.order() < g.order()) {
        CosetMap cm = quotient(g, n);
        auto mins = minimal_normal_subgroups(cm.quotient());
        Group const& m = pick == MinimalNormalPick::first ? mins.front() : mins.back();
        n = cm.preimage(m);
        up.push_back(n);
      }
      std::reverse(up.begin(), up.end());
      for (std::size_t i = 0; i + 1 < up.size(); ++i) {
        cs.factor_orders.push_back(up[i].order() / up[i + 1].order());
      }
      cs.chain = std::move(up);
      return cs;
    }
  }  // namespace detail

  // Built from the bottom: repeatedly pull back a minimal normal subgroup of
  // the current quotient G/N. `pick` selects the first or last minimal
  // normal subgroup in canonical order.
  inline ChiefSeries chief_series(Group const& g,
                                  MinimalNormalPick pick = MinimalNormalPick::first) {
    auto key = pick == MinimalNormalPick::first ? "chief:first" : "chief:last";
    auto cached = g.memo().get<ChiefSeries>(key, [&] { return detail::compute_chief_series(g, pick); });
    ChiefSeries out = *cached;
    out.group = g;
    return out;
  }

  // G, G', G'', ... down to the first repeated term.
  inline std::vector<Group> derived_series(Group const& g) {
    std::vector<Group> series{g};
    while (!series.back().is_trivial()) {
      Group const& d = series.back();
      auto const& gens = d.generators();
      std::vector<Perm> comms;
      for (std::size_t i = 0; i < gens.size(); ++i) {
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
          Perm c = commutator(gens[i], gens[j]);
          if (!c.is_identity()) {
            comms.push_back(std::move(c));
          }
        }
      }
      Group next = normal_closure_of(d, comms);
      if (next.order() == d.order()) {
        break;
      }
      series.push_back(std::move(next));
    }
    return series;
  }

  inline bool is_soluble(Group const& g) { return derived_series(g).back().is_trivial(); }

  inline bool is_soluble_by_chief_factors(Group const& g) {
    auto cs = chief_series(g);
    return std::all_of(cs.factor_orders.begin(), cs.factor_orders.end(),
                       [](order_type f) { return prime_of_power(f) != 0; });
  }

  // Every Sylow subgroup is normal.
  inline bool is_nilpotent(Group const& g) {
    if (g.order() == 1 || prime_of_power(g.order()) != 0) {
      return true;
    }
    for (auto p : prime_divisors(g.order())) {
      if (!is_normal(g, sylow_subgroup(g, p))) {
        return false;
      }
    }
    return true;
  }

  // Every chief factor has prime order.
  inline bool is_supersoluble(Group const& g) {
    if (g.order() == 1 || prime_of_power(g.order()) != 0) {
      return true;
    }
    auto cs = chief_series(g);
    return std::all_of(cs.factor_orders.begin(), cs.factor_orders.end(),
                       [](order_type f) { return is_prime(f); });
  }

  // Every chief factor is a p-group or a p'-group.
  inline bool is_p_soluble(Group const& g, std::uint64_t p) {
    if (g.order() % p != 0 || is_p_power(g.order(), p)) {
      return true;
    }
    auto cs = chief_series(g);
    return std::all_of(cs.factor_orders.begin(), cs.factor_orders.end(),
                       [p](order_type f) { return f % p != 0 || is_p_power(f, p); });
  }

  // p-soluble, and every chief factor of order divisible by p has order p.
  inline bool is_p_supersoluble(Group const& g, std::uint64_t p) {
    if (g.order() % p != 0 || is_p_power(g.order(), p)) {
      return true;
    }
    auto cs = chief_series(g);
    return std::all_of(cs.factor_orders.begin(), cs.factor_orders.end(),
                       [p](order_type f) { return f % p != 0 || f == p; });
  }

  // G has a normal p-complement: |O_p'(G)| is the p'-part of |G|.
  inline bool is_p_nilpotent(Group const& g, std::uint64_t p) {
    return o_p_prime(g, p).order() == g.order() / p_part(g.order(), p);
  }

}  // namespace semiperm
