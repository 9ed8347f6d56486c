#pragma once

#include <cstdint>     // for uint32_t, uint64_t
#include <functional>  // for function
#include <vector>      // for vector

#include "group.hpp"

namespace semiperm {

  using Functional = std::vector<std::uint32_t>;

  namespace detail {
    inline std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
      std::uint64_t r = 1;
      a %= p;
      while (e) {
        if (e & 1) {
          r = r * a % p;
        }
        a = a * a % p;
        e >>= 1;
      }
      return r;
    }

    inline std::uint64_t ipow(std::uint64_t b, std::size_t e) {
      std::uint64_t r = 1;
      while (e--) {
        r = checked_mul(r, b);
      }
      return r;
    }

    inline std::uint64_t require_p_group(Group const& p_group) {
      if (p_group.order() == 1) {
        return 0;
      }
      std::uint64_t p = prime_of_power(p_group.order());
      if (p == 0) {
        throw InvalidArgument("not a p-group: order " + std::to_string(p_group.order()));
      }
      return p;
    }
  }  // namespace detail

  // Rank of a list of vectors over GF(p).
  inline std::size_t rank_mod_p(std::vector<Functional> rows, std::uint64_t p) {
    std::size_t rank = 0;
    std::size_t const cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
      std::size_t pivot = rank;
      while (pivot < rows.size() && rows[pivot][c] == 0) {
        ++pivot;
      }
      if (pivot == rows.size()) {
        continue;
      }
      std::swap(rows[rank], rows[pivot]);
      std::uint64_t inv = detail::pow_mod(rows[rank][c], p - 2, p);
      for (auto& x : rows[rank]) {
        x = static_cast<std::uint32_t>(x * inv % p);
      }
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r == rank || rows[r][c] == 0) {
          continue;
        }
        std::uint64_t f = rows[r][c];
        for (std::size_t k = 0; k < cols; ++k) {
          rows[r][k] = static_cast<std::uint32_t>((rows[r][k] + (p - f) * rows[rank][k]) % p);
        }
      }
      ++rank;
    }
    return rank;
  }

  // Phi(P) for a p-group P: the normal closure of the p-th powers and the
  // pairwise commutators of the generators (Burnside basis theorem).
  inline Group frattini_p_group(Group const& p_group) {
    std::uint64_t p = detail::require_p_group(p_group);
    if (p == 0) {
      return p_group;
    }
    auto const& gens = p_group.generators();
    std::vector<Perm> seeds;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      seeds.push_back(gens[i].pow(static_cast<std::int64_t>(p)));
      for (std::size_t j = i + 1; j < gens.size(); ++j) {
        seeds.push_back(commutator(gens[i], gens[j]));
      }
    }
    std::erase_if(seeds, [](Perm const& x) { return x.is_identity(); });
    return normal_closure_of(p_group, seeds);
  }

  // Coordinates for P/Phi(P) = GF(p)^d: a lifted basis b_1..b_d. Index-p
  // subgroups correspond to nonzero linear functionals up to scalars; the
  // functional f (normalized so its first nonzero entry is 1) gives the
  // preimage of ker f.
  class PGroupStructure {
   public:
    explicit PGroupStructure(Group p_group)
        : p_group_(std::move(p_group)),
          prime_(detail::require_p_group(p_group_)),
          frattini_(frattini_p_group(p_group_)) {
      if (prime_ == 0) {
        return;
      }
      std::vector<Perm> span = frattini_.generators();
      Group current = frattini_;
      for (auto const& g : p_group_.generators()) {
        if (!current.contains(g)) {
          basis_.push_back(g);
          span.push_back(g);
          current = Group(p_group_.degree(), span);
        }
      }
      if (detail::ipow(prime_, basis_.size()) * frattini_.order() != p_group_.order()) {
        throw std::logic_error("Burnside basis: p^d != |P/Phi(P)|");
      }
    }

    Group const& p_group() const noexcept { return p_group_; }
    std::uint64_t prime() const noexcept { return prime_; }
    Group const& frattini() const noexcept { return frattini_; }
    std::vector<Perm> const& basis() const noexcept { return basis_; }
    std::size_t rank() const noexcept { return basis_.size(); }

    // (p^d - 1)/(p - 1)
    std::uint64_t hyperplane_count() const {
      if (prime_ == 0) {
        return 0;
      }
      return (detail::ipow(prime_, rank()) - 1) / (prime_ - 1);
    }

    // The k-th normalized functional: blocks by leading position, then the
    // trailing coordinates counted in base p.
    Functional functional(std::uint64_t k) const {
      std::size_t const d = rank();
      Functional f(d, 0);
      for (std::size_t lead = 0; lead < d; ++lead) {
        std::uint64_t block = detail::ipow(prime_, d - 1 - lead);
        if (k < block) {
          f[lead] = 1;
          for (std::size_t j = d; j-- > lead + 1;) {
            f[j] = static_cast<std::uint32_t>(k % prime_);
            k /= prime_;
          }
          return f;
        }
        k -= block;
      }
      throw InvalidArgument("hyperplane index out of range");
    }

    // Index of the coordinate functional e_i.
    std::uint64_t coordinate_index(std::size_t i) const {
      std::uint64_t k = 0;
      for (std::size_t lead = 0; lead < i; ++lead) {
        k += detail::ipow(prime_, rank() - 1 - lead);
      }
      return k;
    }

    // Preimage of ker f, of index p in P.
    Group maximal_subgroup(Functional const& f) const {
      std::size_t lead = 0;
      while (lead < f.size() && f[lead] == 0) {
        ++lead;
      }
      std::vector<Perm> gens = frattini_.generators();
      for (std::size_t j = 0; j < lead; ++j) {
        gens.push_back(basis_[j]);
      }
      for (std::size_t j = lead + 1; j < f.size(); ++j) {
        std::int64_t e = static_cast<std::int64_t>((prime_ - f[j]) % prime_);
        gens.push_back(basis_[j] * basis_[lead].pow(e));
      }
      return Group(p_group_.degree(), std::move(gens), p_group_.order() / prime_);
    }

    Group maximal_subgroup(std::uint64_t k) const { return maximal_subgroup(functional(k)); }

   private:
    Group p_group_;
    std::uint64_t prime_;
    Group frattini_;
    std::vector<Perm> basis_;
  };

  inline std::size_t smallest_generator_number(Group const& p_group) {
    return PGroupStructure(p_group).rank();
  }

  // Visits every maximal subgroup of the p-group P, in hyperplane order.
  template <typename F>
  void for_each_maximal_subgroup(Group const& p_group, F&& visit) {
    PGroupStructure s(p_group);
    std::uint64_t const n = s.hyperplane_count();
    for (std::uint64_t k = 0; k < n; ++k) {
      visit(s.maximal_subgroup(k));
    }
  }

  inline std::vector<Group> maximal_subgroups_of_p_group(Group const& p_group) {
    std::vector<Group> out;
    for_each_maximal_subgroup(p_group, [&](Group m) { out.push_back(std::move(m)); });
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Families of d maximal subgroups meeting in Phi(P)
  ////////////////////////////////////////////////////////////////////////

  struct MdFamily {
    Group p_group;
    std::size_t d = 0;
    std::vector<Group> members;
    Group frattini;
    std::vector<std::uint64_t> hyperplanes;  // indices into PGroupStructure
  };

  namespace detail {
    inline bool next_combination(std::vector<std::uint64_t>& c, std::uint64_t n) {
      std::size_t const k = c.size();
      for (std::size_t i = k; i-- > 0;) {
        if (c[i] < n - k + i) {
          ++c[i];
          for (std::size_t j = i + 1; j < k; ++j) {
            c[j] = c[j - 1] + 1;
          }
          return true;
        }
      }
      return false;
    }
  }  // namespace detail

  // Visits index sets of d hyperplanes whose functionals are independent,
  // i.e. whose maximal subgroups intersect exactly in Phi(P). The canonical
  // family (coordinate hyperplanes) comes first, then lexicographic order.
  // Stops after `limit` families (0 = no limit) or when visit returns false.
  template <typename F>
  void for_each_md_index_set(PGroupStructure const& s, std::uint64_t limit, F&& visit) {
    std::size_t const d = s.rank();
    std::vector<std::uint64_t> canonical;
    for (std::size_t i = 0; i < d; ++i) {
      canonical.push_back(s.coordinate_index(i));
    }
    std::uint64_t emitted = 0;
    auto emit = [&](std::vector<std::uint64_t> const& c) {
      ++emitted;
      return visit(c) && (limit == 0 || emitted < limit);
    };
    if (!emit(canonical) || d == 0) {
      return;
    }
    std::uint64_t const n = s.hyperplane_count();
    std::vector<std::uint64_t> c(d);
    for (std::size_t i = 0; i < d; ++i) {
      c[i] = i;
    }
    do {
      if (c == canonical) {
        continue;
      }
      std::vector<Functional> rows;
      for (auto k : c) {
        rows.push_back(s.functional(k));
      }
      if (rank_mod_p(rows, s.prime()) == d && !emit(c)) {
        return;
      }
    } while (detail::next_combination(c, n));
  }

  inline MdFamily make_md_family(PGroupStructure const& s, std::vector<std::uint64_t> const& idx) {
    MdFamily fam{s.p_group(), s.rank(), {}, s.frattini(), idx};
    for (auto k : idx) {
      fam.members.push_back(s.maximal_subgroup(k));
    }
    return fam;
  }

  inline std::vector<MdFamily> md_families(Group const& p_group, std::uint64_t limit) {
    PGroupStructure s(p_group);
    std::vector<MdFamily> out;
    for_each_md_index_set(s, limit, [&](std::vector<std::uint64_t> const& idx) {
      out.push_back(make_md_family(s, idx));
      return true;
    });
    return out;
  }

}  // namespace semiperm
