#pragma once

#include <algorithm>  // for find
#include <atomic>   // for atomic
#include <memory>   // for shared_ptr, make_shared
#include <mutex>    // for once_flag, call_once
#include <numeric>  // for gcd
#include <string>   // for string
#include <vector>   // for vector

#include "bitset.hpp"
#include "detail/memo.hpp"
#include "detail/stab_chain.hpp"
#include "element_table.hpp"
#include "errors.hpp"
#include "perm.hpp"

namespace semiperm {

  ////////////////////////////////////////////////////////////////////////
  // Limits
  ////////////////////////////////////////////////////////////////////////

  inline std::atomic<std::uint64_t>& enumeration_cap_ref() {
    static std::atomic<std::uint64_t> cap{10000};
    return cap;
  }

  inline std::atomic<std::uint64_t>& lattice_cap_ref() {
    static std::atomic<std::uint64_t> cap{400};
    return cap;
  }

  // Largest order for which elements are materialized.
  inline std::uint64_t enumeration_cap() { return enumeration_cap_ref().load(); }
  inline void set_enumeration_cap(std::uint64_t cap) { enumeration_cap_ref().store(cap); }

  // Largest order for which the full subgroup lattice is computed.
  inline std::uint64_t lattice_cap() { return lattice_cap_ref().load(); }
  inline void set_lattice_cap(std::uint64_t cap) { lattice_cap_ref().store(cap); }

  ////////////////////////////////////////////////////////////////////////
  // Group
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    struct GroupData {
      std::size_t degree = 1;
      std::vector<Perm> gens;
      StabChain chain;

      mutable std::once_flag table_once;
      mutable std::shared_ptr<ElementTable const> table;

      // Set when the group was produced inside an enumerated parent.
      std::shared_ptr<ElementTable const> parent_table;
      Bitset parent_members;

      mutable Memo memo;
    };
  }  // namespace detail

  // An immutable permutation group given by generators. Copies share state.
  class Group {
   public:
    Group() : Group(1, {}) {}

    Group(std::size_t degree, std::vector<Perm> gens, order_type known_order = 0)
        : d_(std::make_shared<detail::GroupData>()) {
      if (degree == 0) {
        throw InvalidArgument("degree must be positive");
      }
      for (auto const& g : gens) {
        if (g.degree() != degree) {
          throw InvalidArgument("generator " + g.to_cycles() + " has degree "
                                + std::to_string(g.degree()) + ", expected "
                                + std::to_string(degree));
        }
      }
      std::vector<Perm> kept;
      for (auto& g : gens) {
        if (!g.is_identity() && std::find(kept.begin(), kept.end(), g) == kept.end()) {
          kept.push_back(std::move(g));
        }
      }
      gens = std::move(kept);
      d_->degree = degree;
      d_->gens = std::move(gens);
      d_->chain = detail::StabChain(degree, d_->gens, known_order);
    }

    std::size_t degree() const noexcept { return d_->degree; }
    std::vector<Perm> const& generators() const noexcept { return d_->gens; }
    order_type order() const { return d_->chain.order(); }
    bool is_trivial() const { return d_->gens.empty(); }
    std::vector<point_type> base() const { return d_->chain.base(); }

    bool contains(Perm const& g) const { return d_->chain.contains(g); }

    bool is_enumerable() const { return order() <= enumeration_cap(); }

    ElementTable const& table() const {
      if (order() > enumeration_cap()) {
        throw CapExceeded("enumerate", order(), enumeration_cap());
      }
      std::call_once(d_->table_once, [this] {
        d_->table = std::make_shared<ElementTable const>(d_->chain.enumerate(), d_->gens);
      });
      return *d_->table;
    }

    std::shared_ptr<ElementTable const> shared_table() const {
      table();
      return d_->table;
    }

    // Elements in lexicographic order of their image arrays.
    std::vector<Perm> const& elements() const { return table().elements(); }

    bool has_parent() const noexcept { return d_->parent_table != nullptr; }
    std::shared_ptr<ElementTable const> const& parent_table() const noexcept {
      return d_->parent_table;
    }
    Bitset const& parent_members() const noexcept { return d_->parent_members; }

    bool same_object(Group const& other) const noexcept { return d_ == other.d_; }

    detail::Memo& memo() const { return d_->memo; }

    // Same degree and same element set.
    friend bool operator==(Group const& a, Group const& b) {
      if (a.d_ == b.d_) {
        return true;
      }
      if (a.degree() != b.degree() || a.order() != b.order()) {
        return false;
      }
      if (a.has_parent() && a.parent_table() == b.parent_table()) {
        return a.parent_members() == b.parent_members();
      }
      for (auto const& g : a.generators()) {
        if (!b.contains(g)) {
          return false;
        }
      }
      return true;
    }

    // Subgroup of an enumerated parent with a known member set.
    static Group make_subgroup(Group const& parent, Bitset members,
                               std::vector<index_type> const* gen_indices = nullptr) {
      auto const& t = parent.table();
      std::vector<Perm> gens;
      for (index_type i : gen_indices ? *gen_indices : t.generators_of(members)) {
        gens.push_back(t.element(i));
      }
      Group h(parent.degree(), std::move(gens), members.count());
      h.d_->parent_table = parent.shared_table();
      h.d_->parent_members = std::move(members);
      return h;
    }

   private:
    std::shared_ptr<detail::GroupData> d_;
  };

  ////////////////////////////////////////////////////////////////////////
  // ElementSet
  ////////////////////////////////////////////////////////////////////////

  // A set of elements of an enumerated parent group.
  struct ElementSet {
    Group parent;
    Bitset members;

    std::size_t size() const { return members.count(); }

    bool contains(Perm const& g) const {
      auto i = parent.table().find(g);
      return i && members.test(*i);
    }

    // Exhaustive closure check over all pairs.
    bool is_subgroup() const {
      auto const& t = parent.table();
      if (!members.test(0)) {
        return false;
      }
      auto idx = members.indices();
      for (index_type a : idx) {
        if (!members.test(t.inv(a))) {
          return false;
        }
        for (index_type b : idx) {
          if (!members.test(t.mul(a, b))) {
            return false;
          }
        }
      }
      return true;
    }
  };

  ////////////////////////////////////////////////////////////////////////
  // Basic operations
  ////////////////////////////////////////////////////////////////////////

  inline Group group_from_generators(std::size_t degree, std::vector<Perm> gens) {
    return Group(degree, std::move(gens));
  }

  inline order_type order(Group const& g) { return g.order(); }
  inline bool contains(Group const& g, Perm const& x) { return g.contains(x); }
  inline std::vector<Perm> const& elements(Group const& g) { return g.elements(); }

  inline Group trivial_subgroup(Group const& g) {
    if (g.is_enumerable()) {
      return Group::make_subgroup(g, g.table().trivial_set());
    }
    return Group(g.degree(), {});
  }

  inline bool is_subgroup(Group const& g, Group const& h) {
    if (g.degree() != h.degree()) {
      return false;
    }
    for (auto const& x : h.generators()) {
      if (!g.contains(x)) {
        return false;
      }
    }
    return true;
  }

  namespace detail {
    inline void require_subgroup(Group const& g, Group const& h) {
      if (!is_subgroup(g, h)) {
        throw NotSubgroup("H is not a subgroup of G");
      }
    }
  }  // namespace detail

  // Element set of h (h <= g) in g's element index.
  inline Bitset members(Group const& g, Group const& h) {
    auto const& t = g.table();
    if (h.same_object(g)) {
      return t.full_set();
    }
    if (h.has_parent() && h.parent_table().get() == &t) {
      return h.parent_members();
    }
    detail::require_subgroup(g, h);
    std::vector<index_type> gens;
    for (auto const& x : h.generators()) {
      gens.push_back(t.index_of(x));
    }
    return t.closure(gens);
  }

  inline ElementSet element_set(Group const& g, Group const& h) {
    return ElementSet{g, members(g, h)};
  }

  // Re-expresses h as a subgroup of the enumerated group g, so that later
  // queries relative to g reuse its element index.
  inline Group as_subgroup(Group const& g, Group const& h) {
    if (h.same_object(g) || (h.has_parent() && h.parent_table() == g.shared_table())) {
      return h;
    }
    return Group::make_subgroup(g, members(g, h));
  }

  inline Group subgroup_generated(Group const& parent, std::vector<Perm> const& elems) {
    for (auto const& x : elems) {
      if (x.degree() != parent.degree() || !parent.contains(x)) {
        throw NotSubgroup("element " + x.to_cycles() + " lies outside the parent group");
      }
    }
    if (parent.is_enumerable()) {
      auto const& t = parent.table();
      std::vector<index_type> gens;
      for (auto const& x : elems) {
        gens.push_back(t.index_of(x));
      }
      return Group::make_subgroup(parent, t.closure(gens));
    }
    return Group(parent.degree(), elems);
  }

  inline Group conjugate_subgroup(Group const& g, Group const& h, Perm const& x) {
    detail::require_subgroup(g, h);
    if (!g.contains(x)) {
      throw NotSubgroup("conjugating element lies outside G");
    }
    std::vector<Perm> gens;
    for (auto const& y : h.generators()) {
      gens.push_back(conjugate(y, x));
    }
    return subgroup_generated(g, gens);
  }

  inline bool is_normal(Group const& g, Group const& h) {
    detail::require_subgroup(g, h);
    for (auto const& x : g.generators()) {
      for (auto const& y : h.generators()) {
        if (!h.contains(conjugate(y, x))) {
          return false;
        }
      }
    }
    return true;
  }

  // Smallest normal subgroup of g containing the given elements. Works from
  // generators and membership tests only, so g need not be enumerable.
  inline Group normal_closure_of(Group const& g, std::vector<Perm> gens) {
    Group n(g.degree(), gens);
    bool grew = true;
    while (grew) {
      grew = false;
      for (std::size_t i = 0; i < n.generators().size() && !grew; ++i) {
        for (auto const& x : g.generators()) {
          Perm c = conjugate(n.generators()[i], x);
          if (!n.contains(c)) {
            gens = n.generators();
            gens.push_back(std::move(c));
            n = Group(g.degree(), gens);
            grew = true;
            break;
          }
        }
      }
    }
    if (g.is_enumerable()) {
      return as_subgroup(g, n);
    }
    return n;
  }

  inline Group normal_closure(Group const& g, Group const& h) {
    detail::require_subgroup(g, h);
    return normal_closure_of(g, h.generators());
  }

  inline Group centralizer(Group const& g, Group const& h) {
    auto const& t = g.table();
    detail::require_subgroup(g, h);
    std::vector<index_type> gens;
    for (auto const& y : h.generators()) {
      gens.push_back(t.index_of(y));
    }
    return Group::make_subgroup(g, t.centralizer_set(gens));
  }

  inline Group normalizer(Group const& g, Group const& h) {
    auto const& t = g.table();
    Bitset m = members(g, h);
    std::vector<index_type> gens;
    for (auto const& y : h.generators()) {
      gens.push_back(t.index_of(y));
    }
    return Group::make_subgroup(g, t.normalizer_set(m, gens));
  }

  inline Group center(Group const& g) { return centralizer(g, g); }

  // Wielandt's criterion: h is subnormal iff the series g = K_0, K_{i+1} =
  // normal closure of h in K_i descends to h.
  inline bool is_subnormal(Group const& g, Group const& h) {
    detail::require_subgroup(g, h);
    Group k = g;
    while (true) {
      if (k.order() == h.order()) {
        return true;
      }
      Group next = normal_closure(k, h);
      if (next.order() == k.order()) {
        return false;
      }
      k = next;
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Arithmetic helpers
  ////////////////////////////////////////////////////////////////////////

  inline bool is_prime(std::uint64_t n) {
    if (n < 2) {
      return false;
    }
    for (std::uint64_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) {
        return false;
      }
    }
    return true;
  }

  // Distinct prime divisors in increasing order.
  inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) {
        out.push_back(d);
        while (n % d == 0) {
          n /= d;
        }
      }
    }
    if (n > 1) {
      out.push_back(n);
    }
    return out;
  }

  // Largest power of p dividing n.
  inline std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
    std::uint64_t r = 1;
    while (n % p == 0) {
      n /= p;
      r *= p;
    }
    return r;
  }

  inline bool is_p_power(std::uint64_t n, std::uint64_t p) { return p_part(n, p) == n; }

  // The prime p if n is a power of p > 1, otherwise 0.
  inline std::uint64_t prime_of_power(std::uint64_t n) {
    if (n < 2) {
      return 0;
    }
    auto ps = prime_divisors(n);
    return ps.size() == 1 ? ps[0] : 0;
  }

}  // namespace semiperm
