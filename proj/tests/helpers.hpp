#pragma once

#include <random>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "semiperm.hpp"

namespace test {

  using semiperm::Group;
  using semiperm::Perm;

  inline Perm P(std::string const& cycles, std::size_t degree) {
    return Perm::from_cycles(cycles, degree);
  }

  inline Group G(std::size_t degree, std::vector<std::string> const& gens) {
    std::vector<Perm> ps;
    for (auto const& s : gens) {
      ps.push_back(P(s, degree));
    }
    return Group(degree, std::move(ps));
  }

  inline oracle::Elems elems(Group const& g) {
    return oracle::closure(g.degree(), g.generators());
  }

  inline oracle::Elems table_elems(Group const& g) {
    return {g.elements().begin(), g.elements().end()};
  }

  // The subgroup of g with exactly the elements e.
  inline Group from_elems(Group const& g, oracle::Elems const& e) {
    return semiperm::subgroup_generated(g, std::vector<Perm>(e.begin(), e.end()));
  }

  inline Perm random_perm(std::size_t degree, std::mt19937_64& rng) {
    std::vector<semiperm::point_type> img(degree);
    for (std::size_t i = 0; i < degree; ++i) {
      img[i] = static_cast<semiperm::point_type>(i);
    }
    std::shuffle(img.begin(), img.end(), rng);
    return Perm(std::move(img));
  }

  inline Perm random_element(Group const& g, std::mt19937_64& rng) {
    auto const& e = g.elements();
    return e[std::uniform_int_distribution<std::size_t>(0, e.size() - 1)(rng)];
  }

}  // namespace test
