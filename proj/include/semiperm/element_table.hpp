#pragma once

#include <algorithm>      // for sort
#include <cstdint>        // for uint32_t
#include <optional>       // for optional
#include <span>           // for span
#include <unordered_map>  // for unordered_map
#include <vector>         // for vector

#include "bitset.hpp"
#include "errors.hpp"
#include "perm.hpp"

namespace semiperm {

  using index_type = std::uint32_t;

  // Groups up to this order get a full multiplication table.
  inline constexpr std::size_t cayley_table_cap = 2048;

  // Bijection between the elements of an enumerated group and 0..order-1.
  // Elements are sorted lexicographically by image array, so the identity is
  // always index 0.
  class ElementTable {
   public:
    ElementTable(std::vector<Perm> elements, std::vector<Perm> const& gens)
        : elements_(std::move(elements)) {
      std::sort(elements_.begin(), elements_.end());
      index_.reserve(elements_.size() * 2);
      for (std::size_t i = 0; i < elements_.size(); ++i) {
        index_.emplace(elements_[i], static_cast<index_type>(i));
      }
      for (auto const& g : gens) {
        gen_indices_.push_back(index_of(g));
      }
      inverse_.resize(elements_.size());
      for (std::size_t i = 0; i < elements_.size(); ++i) {
        inverse_[i] = index_of(elements_[i].inverse());
      }
      if (elements_.size() <= cayley_table_cap) {
        build_cayley_table();
      }
    }

    std::size_t size() const noexcept { return elements_.size(); }
    std::vector<Perm> const& elements() const noexcept { return elements_; }
    Perm const& element(index_type i) const noexcept { return elements_[i]; }
    std::vector<index_type> const& generator_indices() const noexcept { return gen_indices_; }

    std::optional<index_type> find(Perm const& g) const {
      auto it = index_.find(g);
      if (it == index_.end()) {
        return std::nullopt;
      }
      return it->second;
    }

    index_type index_of(Perm const& g) const {
      auto it = index_.find(g);
      if (it == index_.end()) {
        throw NotSubgroup("element " + g.to_cycles() + " is not in the group");
      }
      return it->second;
    }

    index_type mul(index_type a, index_type b) const {
      if (!table_.empty()) {
        return table_[static_cast<std::size_t>(a) * elements_.size() + b];
      }
      return index_.find(elements_[a] * elements_[b])->second;
    }

    index_type inv(index_type a) const noexcept { return inverse_[a]; }

    index_type pow(index_type a, std::uint64_t k) const {
      index_type result = 0;
      index_type base = a;
      while (k > 0) {
        if (k & 1) {
          result = mul(result, base);
        }
        base = mul(base, base);
        k >>= 1;
      }
      return result;
    }

    // g^-1 x g
    index_type conj(index_type x, index_type g) const { return mul(mul(inverse_[g], x), g); }

    std::uint64_t element_order(index_type a) const {
      std::uint64_t n = 1;
      for (index_type x = a; x != 0; x = mul(x, a)) {
        ++n;
      }
      return n;
    }

    Bitset empty_set() const { return Bitset(elements_.size()); }

    Bitset full_set() const {
      Bitset b(elements_.size());
      for (std::size_t i = 0; i < elements_.size(); ++i) {
        b.set(i);
      }
      return b;
    }

    Bitset trivial_set() const {
      Bitset b(elements_.size());
      b.set(0);
      return b;
    }

    // Subgroup generated by gens.
    Bitset closure(std::span<index_type const> gens) const {
      Bitset members = trivial_set();
      std::vector<index_type> queue{0};
      grow(members, queue, gens);
      return members;
    }

    // Extends the subgroup `members` (generated by `gens`) by x, in place.
    void extend(Bitset& members, std::vector<index_type>& gens, index_type x) const {
      if (members.test(x)) {
        return;
      }
      gens.push_back(x);
      std::vector<index_type> queue = members.indices();
      grow(members, queue, gens);
    }

    Bitset generated_by_set(Bitset const& set) const {
      Bitset members = trivial_set();
      std::vector<index_type> gens;
      set.for_each([&](std::size_t i) { extend(members, gens, static_cast<index_type>(i)); });
      return members;
    }

    // Greedy generating set of the subgroup `members`.
    std::vector<index_type> generators_of(Bitset const& members) const {
      Bitset current = trivial_set();
      std::vector<index_type> gens;
      members.for_each([&](std::size_t i) {
        extend(current, gens, static_cast<index_type>(i));
      });
      return gens;
    }

    Bitset conjugate_set(Bitset const& members, index_type g) const {
      Bitset out(elements_.size());
      members.for_each([&](std::size_t i) { out.set(conj(static_cast<index_type>(i), g)); });
      return out;
    }

    // {g : gens^g ⊆ members}; `members` must be the subgroup generated by gens.
    Bitset normalizer_set(Bitset const& members, std::span<index_type const> gens) const {
      Bitset out(elements_.size());
      for (index_type g = 0; g < elements_.size(); ++g) {
        bool ok = true;
        for (index_type h : gens) {
          if (!members.test(conj(h, g))) {
            ok = false;
            break;
          }
        }
        if (ok) {
          out.set(g);
        }
      }
      return out;
    }

    Bitset centralizer_set(std::span<index_type const> gens) const {
      Bitset out(elements_.size());
      for (index_type g = 0; g < elements_.size(); ++g) {
        bool ok = true;
        for (index_type h : gens) {
          if (mul(g, h) != mul(h, g)) {
            ok = false;
            break;
          }
        }
        if (ok) {
          out.set(g);
        }
      }
      return out;
    }

    // Set product {a b : a in A, b in B}.
    Bitset product(Bitset const& a, Bitset const& b) const {
      Bitset out(elements_.size());
      auto bi = b.indices();
      a.for_each([&](std::size_t x) {
        for (index_type y : bi) {
          out.set(mul(static_cast<index_type>(x), y));
        }
      });
      return out;
    }

    // Conjugacy class of x.
    Bitset conjugacy_class(index_type x) const {
      Bitset cls(elements_.size());
      std::vector<index_type> queue{x};
      cls.set(x);
      for (std::size_t k = 0; k < queue.size(); ++k) {
        for (index_type g : gen_indices_) {
          index_type y = conj(queue[k], g);
          if (cls.insert(y)) {
            queue.push_back(y);
          }
        }
      }
      return cls;
    }

   private:
    void grow(Bitset& members, std::vector<index_type>& queue,
              std::span<index_type const> gens) const {
      for (std::size_t k = 0; k < queue.size(); ++k) {
        for (index_type s : gens) {
          index_type y = mul(queue[k], s);
          if (members.insert(y)) {
            queue.push_back(y);
          }
        }
      }
    }

    void build_cayley_table() {
      std::size_t const n = elements_.size();
      // right multiplication by each generator
      std::vector<std::vector<index_type>> right(gen_indices_.size(),
                                                 std::vector<index_type>(n));
      for (std::size_t s = 0; s < gen_indices_.size(); ++s) {
        Perm const& g = elements_[gen_indices_[s]];
        for (std::size_t i = 0; i < n; ++i) {
          right[s][i] = index_of(elements_[i] * g);
        }
      }
      // spanning tree: each element b = parent[b] * gen[via[b]]
      std::vector<index_type> order{0}, parent(n, 0), via(n, 0);
      std::vector<bool> seen(n, false);
      seen[0] = true;
      for (std::size_t k = 0; k < order.size(); ++k) {
        for (std::size_t s = 0; s < gen_indices_.size(); ++s) {
          index_type y = right[s][order[k]];
          if (!seen[y]) {
            seen[y] = true;
            parent[y] = order[k];
            via[y] = static_cast<index_type>(s);
            order.push_back(y);
          }
        }
      }
      if (order.size() != n) {
        throw std::logic_error("element table: generators do not generate the group");
      }
      table_.assign(n * n, 0);
      for (std::size_t a = 0; a < n; ++a) {
        index_type* row = table_.data() + a * n;
        row[0] = static_cast<index_type>(a);
        for (std::size_t k = 1; k < n; ++k) {
          index_type b = order[k];
          row[b] = right[via[b]][row[parent[b]]];
        }
      }
    }

    std::vector<Perm> elements_;
    std::unordered_map<Perm, index_type, PermHash> index_;
    std::vector<index_type> gen_indices_;
    std::vector<index_type> inverse_;
    std::vector<index_type> table_;
  };

}  // namespace semiperm
