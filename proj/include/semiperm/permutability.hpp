#pragma once

#include <cstdint>        // for uint8_t
#include <mutex>          // for mutex
#include <optional>       // for optional
#include <stdexcept>      // for logic_error
#include <unordered_map>  // for unordered_map
#include <vector>         // for vector

#include "group.hpp"
#include "subgroups.hpp"

namespace semiperm {

  struct ProductSetResult {
    ElementSet hk;
    ElementSet kh;
    bool equal = false;
    bool is_subgroup = false;
    std::size_t cardinality = 0;
  };

  namespace detail {
    struct Operand {
      Bitset members;
      std::vector<index_type> gens;
    };

    inline Operand operand(Group const& g, Group const& h) {
      auto const& t = g.table();
      Operand op{members(g, h), {}};
      for (auto const& x : h.generators()) {
        op.gens.push_back(t.index_of(x));
      }
      return op;
    }

    // S is a subgroup iff it contains 1 and is closed under right
    // multiplication by generators of <H, K>.
    inline bool closed_under(ElementTable const& t, Bitset const& s, Operand const& h,
                             Operand const& k) {
      if (!s.test(0)) {
        return false;
      }
      bool closed = true;
      s.for_each([&](std::size_t i) {
        if (!closed) {
          return;
        }
        for (auto const* op : {&h, &k}) {
          for (index_type x : op->gens) {
            if (!s.test(t.mul(static_cast<index_type>(i), x))) {
              closed = false;
              return;
            }
          }
        }
      });
      return closed;
    }

    inline bool permutes(ElementTable const& t, Operand const& h, Operand const& k,
                         Bitset* hk_out = nullptr, Bitset* kh_out = nullptr) {
      Bitset hk = t.product(h.members, k.members);
      Bitset kh = t.product(k.members, h.members);
      bool equal = hk == kh;
      if (equal != closed_under(t, hk, h, k)) {
        throw std::logic_error("product set: HK = KH disagrees with HK being a subgroup");
      }
      if (hk_out) {
        *hk_out = std::move(hk);
      }
      if (kh_out) {
        *kh_out = std::move(kh);
      }
      return equal;
    }

    // Per-group cache of predicate results keyed by the subgroup's element
    // set; stored in the group's memo.
    class PredicateCache {
     public:
      std::optional<bool> find(int kind, Bitset const& h) const {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = map_[kind].find(h);
        if (it == map_[kind].end()) {
          return std::nullopt;
        }
        return it->second;
      }

      void store(int kind, Bitset const& h, bool value) const {
        std::lock_guard<std::mutex> lock(mutex_);
        map_[kind].emplace(h, value);
      }

     private:
      mutable std::mutex mutex_;
      mutable std::unordered_map<Bitset, bool, BitsetHash> map_[3];
    };

    enum PredicateKind { kSPermutable = 0, kSSemipermutable = 1, kSemipermutable = 2 };

    template <typename F>
    bool cached_predicate(Group const& g, int kind, Bitset const& h, F&& compute) {
      if (!memoization_enabled()) {
        return compute();
      }
      auto cache = g.memo().get_default<PredicateCache>("predicates");
      if (auto hit = cache->find(kind, h)) {
        return *hit;
      }
      bool value = compute();
      cache->store(kind, h, value);
      return value;
    }

    // First Sylow q-subgroup (q ranging over primes of |G| accepted by
    // `use_prime`) that does not permute with h.
    template <typename P>
    std::optional<Group> first_nonpermuting_sylow(Group const& g, Operand const& h, P&& use_prime) {
      auto const& t = g.table();
      for (auto q : prime_divisors(g.order())) {
        if (!use_prime(q)) {
          continue;
        }
        for (auto const& s : all_sylow_subgroups(g, q).all) {
          if (!permutes(t, h, operand(g, s))) {
            return s;
          }
        }
      }
      return std::nullopt;
    }
  }  // namespace detail

  // Exact product sets HK and KH, with HK = KH cross-checked against HK
  // being closed under multiplication.
  inline ProductSetResult product_set(Group const& g, Group const& h, Group const& k) {
    auto const& t = g.table();
    auto ho = detail::operand(g, h);
    auto ko = detail::operand(g, k);
    Bitset hk, kh;
    bool equal = detail::permutes(t, ho, ko, &hk, &kh);
    ProductSetResult r;
    r.cardinality = hk.count();
    r.equal = equal;
    r.is_subgroup = equal;
    r.hk = ElementSet{g, std::move(hk)};
    r.kh = ElementSet{g, std::move(kh)};
    return r;
  }

  // A Sylow subgroup h fails to permute with, for q ranging over all primes.
  inline std::optional<Group> s_permutability_failure(Group const& g, Group const& h) {
    return detail::first_nonpermuting_sylow(g, detail::operand(g, h),
                                            [](std::uint64_t) { return true; });
  }

  // ... for q ranging over primes not dividing |h|.
  inline std::optional<Group> s_semipermutability_failure(Group const& g, Group const& h) {
    order_type const n = h.order();
    return detail::first_nonpermuting_sylow(g, detail::operand(g, h),
                                            [n](std::uint64_t q) { return n % q != 0; });
  }

  // H permutes with every Sylow subgroup of G (every prime, every conjugate).
  inline bool is_s_permutable(Group const& g, Group const& h) {
    Bitset m = members(g, h);
    return detail::cached_predicate(g, detail::kSPermutable, m, [&] {
      return !s_permutability_failure(g, h).has_value();
    });
  }

  // H permutes with every Sylow q-subgroup of G for every prime q not
  // dividing |H|.
  inline bool is_s_semipermutable(Group const& g, Group const& h) {
    Bitset m = members(g, h);
    return detail::cached_predicate(g, detail::kSSemipermutable, m, [&] {
      return !s_semipermutability_failure(g, h).has_value();
    });
  }

  // H permutes with every subgroup K of G with gcd(|H|, |K|) = 1.
  inline bool is_semipermutable(Group const& g, Group const& h) {
    Bitset m = members(g, h);
    return detail::cached_predicate(g, detail::kSemipermutable, m, [&] {
      auto const& t = g.table();
      auto ho = detail::operand(g, h);
      for (auto const& k : all_subgroups(g)) {
        if (std::gcd(h.order(), k.order()) != 1 || k.order() == 1) {
          continue;
        }
        if (!detail::permutes(t, ho, detail::operand(g, k))) {
          return false;
        }
      }
      return true;
    });
  }

}  // namespace semiperm
