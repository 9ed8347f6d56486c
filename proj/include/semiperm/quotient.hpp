#pragma once

#include <vector>  // for vector

#include "group.hpp"

namespace semiperm {

  // G/N realised as a permutation group acting on the right cosets of N.
  // Coset 0 is N itself; the quotient acts regularly, so each quotient
  // element is determined by the image of point 0.
  class CosetMap {
   public:
    CosetMap(Group source, Group kernel) : source_(std::move(source)), kernel_(as_subgroup(source_, kernel)) {
      if (!is_normal(source_, kernel_)) {
        throw NotNormal("cannot form quotient: N is not normal in G");
      }
      auto const& t = source_.table();
      Bitset const nmem = members(source_, kernel_);
      auto const kernel_idx = nmem.indices();
      std::size_t const n = t.size();
      constexpr index_type unset = ~index_type(0);
      coset_of_.assign(n, unset);
      for (index_type g = 0; g < n; ++g) {
        if (coset_of_[g] != unset) {
          continue;
        }
        auto c = static_cast<index_type>(coset_rep_.size());
        coset_rep_.push_back(g);
        for (index_type k : kernel_idx) {
          coset_of_[t.mul(k, g)] = c;
        }
      }
      std::size_t const index = coset_rep_.size();
      std::vector<Perm> gens;
      for (index_type s : t.generator_indices()) {
        std::vector<point_type> img(index);
        for (std::size_t c = 0; c < index; ++c) {
          img[c] = coset_of_[t.mul(coset_rep_[c], s)];
        }
        gens.emplace_back(std::move(img));
      }
      quotient_ = Group(index, std::move(gens), index);
      auto const& q = quotient_.table();
      by_image_of_zero_.assign(index, 0);
      for (index_type i = 0; i < q.size(); ++i) {
        by_image_of_zero_[q.element(i)[0]] = i;
      }
    }

    Group const& source() const noexcept { return source_; }
    Group const& kernel() const noexcept { return kernel_; }
    Group const& quotient() const noexcept { return quotient_; }
    std::size_t index() const noexcept { return coset_rep_.size(); }

    index_type coset_of(index_type source_index) const { return coset_of_[source_index]; }

    // Quotient element index of the image of a source element index.
    index_type project_index(index_type source_index) const {
      return by_image_of_zero_[coset_of_[source_index]];
    }

    Perm project(Perm const& g) const {
      return quotient_.table().element(project_index(source_.table().index_of(g)));
    }

    // HN/N as a subgroup of the quotient.
    Group image(Group const& h) const {
      std::vector<Perm> gens;
      for (auto const& x : h.generators()) {
        gens.push_back(project(x));
      }
      return subgroup_generated(quotient_, gens);
    }

    // Full preimage of a subgroup of the quotient.
    Group preimage(Group const& qsub) const {
      Bitset qm = members(quotient_, qsub);
      auto const& t = source_.table();
      Bitset out = t.empty_set();
      for (index_type g = 0; g < t.size(); ++g) {
        if (qm.test(project_index(g))) {
          out.set(g);
        }
      }
      return Group::make_subgroup(source_, std::move(out));
    }

   private:
    Group source_;
    Group kernel_;
    Group quotient_;
    std::vector<index_type> coset_of_;
    std::vector<index_type> coset_rep_;
    std::vector<index_type> by_image_of_zero_;
  };

  inline CosetMap quotient(Group const& g, Group const& n) {
    detail::require_subgroup(g, n);
    return CosetMap(g, n);
  }

}  // namespace semiperm
