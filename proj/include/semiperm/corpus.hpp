#pragma once

#include <algorithm>  // for sort, unique
#include <string>     // for string
#include <vector>     // for vector

#include "group.hpp"

namespace semiperm {

  ////////////////////////////////////////////////////////////////////////
  // Standard constructions
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    inline Perm cycle_on(std::size_t degree, std::size_t first, std::size_t len) {
      std::vector<point_type> img(degree);
      for (std::size_t i = 0; i < degree; ++i) {
        img[i] = static_cast<point_type>(i);
      }
      for (std::size_t i = 0; i < len; ++i) {
        img[first + i] = static_cast<point_type>(first + (i + 1) % len);
      }
      return Perm(std::move(img));
    }
  }  // namespace detail

  // Generated by an n-cycle.
  inline Group cyclic(std::size_t n) {
    if (n == 0) {
      throw InvalidArgument("cyclic: n must be positive");
    }
    if (n == 1) {
      return Group(1, {});
    }
    return Group(n, {detail::cycle_on(n, 0, n)});
  }

  // Dihedral group of the given order 2n, acting on the n-gon for n >= 3.
  inline Group dihedral(std::size_t order) {
    if (order < 2 || order % 2 != 0) {
      throw InvalidArgument("dihedral: order must be even and at least 2");
    }
    std::size_t const n = order / 2;
    if (n == 1) {
      return cyclic(2);
    }
    if (n == 2) {
      return Group(4, {Perm::from_cycles("(1 2)(3 4)", 4), Perm::from_cycles("(1 3)(2 4)", 4)});
    }
    std::vector<point_type> refl(n);
    for (std::size_t i = 0; i < n; ++i) {
      refl[i] = static_cast<point_type>((n - i) % n);
    }
    return Group(n, {detail::cycle_on(n, 0, n), Perm(std::move(refl))});
  }

  inline Group symmetric(std::size_t n) {
    if (n == 0) {
      throw InvalidArgument("symmetric: n must be positive");
    }
    if (n == 1) {
      return Group(1, {});
    }
    return Group(n, {detail::cycle_on(n, 0, 2), detail::cycle_on(n, 0, n)});
  }

  // Generated by the 3-cycles (1 2 i).
  inline Group alternating(std::size_t n) {
    if (n == 0) {
      throw InvalidArgument("alternating: n must be positive");
    }
    if (n < 3) {
      return Group(n, {});
    }
    std::vector<Perm> gens;
    for (std::size_t i = 2; i < n; ++i) {
      std::vector<point_type> img(n);
      for (std::size_t k = 0; k < n; ++k) {
        img[k] = static_cast<point_type>(k);
      }
      img[0] = 1;
      img[1] = static_cast<point_type>(i);
      img[i] = 0;
      gens.emplace_back(std::move(img));
    }
    return Group(n, std::move(gens));
  }

  // Right regular representation of {±1, ±i, ±j, ±k}; point 2u + s stands
  // for (-1)^s times unit u, units ordered 1, i, j, k.
  inline Group quaternion8() {
    // unit products: kUnit[a][b] and sign kNeg[a][b] of unit a times unit b
    static constexpr int kUnit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static constexpr int kNeg[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    auto right_mul = [](int unit) {
      std::vector<point_type> img(8);
      for (int u = 0; u < 4; ++u) {
        for (int s = 0; s < 2; ++s) {
          int v = kUnit[u][unit];
          int t = s ^ kNeg[u][unit];
          img[static_cast<std::size_t>(2 * u + s)] = static_cast<point_type>(2 * v + t);
        }
      }
      return Perm(std::move(img));
    };
    return Group(8, {right_mul(1), right_mul(2)});
  }

  // k disjoint p-cycles on p*k points.
  inline Group elementary_abelian(std::size_t p, std::size_t k) {
    if (!is_prime(p)) {
      throw InvalidArgument("elementary_abelian: " + std::to_string(p) + " is not prime");
    }
    if (k == 0) {
      return Group(1, {});
    }
    std::vector<Perm> gens;
    for (std::size_t b = 0; b < k; ++b) {
      gens.push_back(detail::cycle_on(p * k, b * p, p));
    }
    return Group(p * k, std::move(gens));
  }

  // A x B acting on disjoint point sets: A on the first deg(A) points.
  inline Group direct_product(Group const& a, Group const& b) {
    std::size_t const da = a.degree();
    std::size_t const db = b.degree();
    std::vector<Perm> gens;
    for (auto const& g : a.generators()) {
      std::vector<point_type> img(da + db);
      for (std::size_t i = 0; i < da + db; ++i) {
        img[i] = i < da ? g[static_cast<point_type>(i)] : static_cast<point_type>(i);
      }
      gens.emplace_back(std::move(img));
    }
    for (auto const& g : b.generators()) {
      std::vector<point_type> img(da + db);
      for (std::size_t i = 0; i < da + db; ++i) {
        img[i] = i < da ? static_cast<point_type>(i)
                        : static_cast<point_type>(da + g[static_cast<point_type>(i - da)]);
      }
      gens.emplace_back(std::move(img));
    }
    return Group(da + db, std::move(gens));
  }

  ////////////////////////////////////////////////////////////////////////
  // Named groups and the built-in corpus
  ////////////////////////////////////////////////////////////////////////

  struct NamedGroup {
    std::string name;
    Group group;
    std::string provenance = "builtin";  // "builtin" or "file:<path>"
    order_type declared_order = 0;       // 0 if the name encodes none
  };

  namespace detail {
    struct Factor {
      Group group;
      order_type order;
    };

    inline std::size_t parse_number(std::string const& s, std::string const& whole) {
      if (s.empty() || s.size() > 9
          || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw InvalidArgument("unknown group name \"" + whole + "\"");
      }
      return std::stoul(s);
    }

    inline Factor parse_factor(std::string const& f, std::string const& whole) {
      if (f == "Q8") {
        return {quaternion8(), 8};
      }
      if (f.size() < 2) {
        throw InvalidArgument("unknown group name \"" + whole + "\"");
      }
      char const kind = f[0];
      std::string rest = f.substr(1);
      auto caret = rest.find('^');
      if (kind == 'C' && caret != std::string::npos) {
        std::size_t p = parse_number(rest.substr(0, caret), whole);
        std::size_t k = parse_number(rest.substr(caret + 1), whole);
        Group g = elementary_abelian(p, k);
        return {g, g.order()};
      }
      std::size_t n = parse_number(rest, whole);
      switch (kind) {
        case 'C':
          return {cyclic(n), n};
        case 'D':
          return {dihedral(n), n};
        case 'S': {
          Group g = symmetric(n);
          return {g, g.order()};
        }
        case 'A': {
          Group g = alternating(n);
          return {g, g.order()};
        }
        default:
          throw InvalidArgument("unknown group name \"" + whole + "\"");
      }
    }
  }  // namespace detail

  // Builds a group from its corpus name: Cn, Dn (order n), Q8, Sn, An, Cp^k,
  // and direct products joined by 'x', e.g. "S3xS3".
  inline NamedGroup named_group(std::string const& name) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
      auto pos = name.find('x', start);
      parts.push_back(name.substr(start, pos - start));
      if (pos == std::string::npos) {
        break;
      }
      start = pos + 1;
    }
    auto first = detail::parse_factor(parts[0], name);
    Group g = first.group;
    order_type declared = first.order;
    for (std::size_t i = 1; i < parts.size(); ++i) {
      auto f = detail::parse_factor(parts[i], name);
      g = direct_product(g, f.group);
      declared *= f.order;
    }
    return NamedGroup{name, g, "builtin", declared};
  }

  // Names of the base families: C1..C32, D4..D32, Q8, S2..S5, A3..A5 and
  // Cp^k for p <= 7, k >= 2, each with its order.
  inline std::vector<std::pair<std::string, order_type>> builtin_base_names(order_type max_order) {
    std::vector<std::pair<std::string, order_type>> base;
    auto add = [&](std::string n, order_type o) {
      if (o <= max_order) {
        base.emplace_back(std::move(n), o);
      }
    };
    for (order_type n = 1; n <= 32; ++n) {
      add("C" + std::to_string(n), n);
    }
    for (order_type n = 2; n <= 16; ++n) {
      add("D" + std::to_string(2 * n), 2 * n);
    }
    add("Q8", 8);
    order_type fact = 1;
    for (order_type n = 2; n <= 5; ++n) {
      fact *= n;
      add("S" + std::to_string(n), fact);
      if (n >= 3) {
        add("A" + std::to_string(n), fact / 2);
      }
    }
    for (order_type p : {2, 3, 5, 7}) {
      order_type q = p * p;
      for (std::size_t k = 2; q <= max_order; ++k, q *= p) {
        add("C" + std::to_string(p) + "^" + std::to_string(k), q);
      }
    }
    return base;
  }

  // The base families plus all pairwise direct products of nontrivial base
  // groups, restricted to order <= max_order, sorted by (order, name).
  inline std::vector<NamedGroup> builtin_corpus(order_type max_order) {
    auto base = builtin_base_names(max_order);
    std::vector<std::pair<order_type, std::string>> names;
    for (auto const& [n, o] : base) {
      names.emplace_back(o, n);
    }
    for (std::size_t i = 0; i < base.size(); ++i) {
      for (std::size_t j = i; j < base.size(); ++j) {
        order_type const a = base[i].second;
        order_type const b = base[j].second;
        if (a > 1 && b > 1 && a * b <= max_order) {
          names.emplace_back(a * b, base[i].first + "x" + base[j].first);
        }
      }
    }
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
    std::vector<NamedGroup> out;
    out.reserve(names.size());
    for (auto const& [o, n] : names) {
      out.push_back(named_group(n));
    }
    return out;
  }

  // One line per group: name, order, degree.
  inline std::string corpus_manifest(std::vector<NamedGroup> const& corpus) {
    std::string out = "# name order degree\n";
    for (auto const& ng : corpus) {
      out += ng.name + " " + std::to_string(ng.group.order()) + " "
             + std::to_string(ng.group.degree()) + "\n";
    }
    return out;
  }

}  // namespace semiperm
