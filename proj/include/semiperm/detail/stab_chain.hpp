#pragma once

#include <cstddef>  // for size_t
#include <cstdint>  // for int32_t
#include <utility>  // for pair
#include <vector>   // for vector

#include "../errors.hpp"
#include "../perm.hpp"

namespace semiperm::detail {

  inline order_type checked_mul(order_type a, order_type b) {
    order_type r;
    if (__builtin_mul_overflow(a, b, &r)) {
      throw Error("group order overflows 64 bits");
    }
    return r;
  }

  // Base and strong generating set built by the deterministic Schreier-Sims
  // algorithm. Level l holds the strong generators fixing base[0..l-1], the
  // orbit of base[l] under them, and explicit transversal elements.
  class StabChain {
   public:
    StabChain() = default;

    // If known_order is non-zero the construction stops as soon as the
    // product of basic orbit lengths reaches it; the caller vouches for it.
    StabChain(std::size_t degree, std::vector<Perm> const& gens, order_type known_order = 0)
        : degree_(degree) {
      for (auto const& g : gens) {
        if (g.is_identity()) {
          continue;
        }
        bool fixes_base = true;
        for (auto const& lv : levels_) {
          if (g[lv.base] != lv.base) {
            fixes_base = false;
            break;
          }
        }
        if (fixes_base) {
          push_level(g.first_moved_point());
        }
        for (std::size_t l = 0; l < levels_.size(); ++l) {
          levels_[l].gens.push_back(g);
          if (g[levels_[l].base] != levels_[l].base) {
            break;
          }
        }
      }
      for (auto& lv : levels_) {
        rebuild_orbit(lv);
      }
      if (known_order != 0 && order() == known_order) {
        return;
      }
      run(known_order);
    }

    std::size_t degree() const noexcept { return degree_; }

    order_type order() const {
      order_type r = 1;
      for (auto const& lv : levels_) {
        r = checked_mul(r, lv.orbit.size());
      }
      return r;
    }

    std::vector<point_type> base() const {
      std::vector<point_type> b;
      for (auto const& lv : levels_) {
        b.push_back(lv.base);
      }
      return b;
    }

    bool contains(Perm const& g) const {
      if (g.degree() != degree_) {
        return false;
      }
      auto [r, lvl] = sift(g, 0);
      return lvl == levels_.size() && r.is_identity();
    }

    // All elements, in no particular order.
    std::vector<Perm> enumerate() const {
      std::vector<Perm> current{Perm(degree_)};
      for (std::size_t l = levels_.size(); l-- > 0;) {
        std::vector<Perm> next;
        next.reserve(current.size() * levels_[l].orbit.size());
        for (auto const& x : current) {
          for (auto const& u : levels_[l].transversal) {
            next.push_back(x * u);
          }
        }
        current = std::move(next);
      }
      return current;
    }

   private:
    struct Level {
      point_type base;
      std::vector<Perm> gens;
      std::vector<std::int32_t> pos;
      std::vector<point_type> orbit;
      std::vector<Perm> transversal;  // base -> orbit[k]
      std::vector<Perm> inverse;
    };

    void push_level(point_type b) {
      Level lv;
      lv.base = b;
      levels_.push_back(std::move(lv));
    }

    void rebuild_orbit(Level& lv) const {
      lv.pos.assign(degree_, -1);
      lv.orbit.clear();
      lv.transversal.clear();
      lv.inverse.clear();
      lv.pos[lv.base] = 0;
      lv.orbit.push_back(lv.base);
      lv.transversal.emplace_back(degree_);
      lv.inverse.emplace_back(degree_);
      for (std::size_t k = 0; k < lv.orbit.size(); ++k) {
        point_type x = lv.orbit[k];
        for (auto const& s : lv.gens) {
          point_type y = s[x];
          if (lv.pos[y] < 0) {
            lv.pos[y] = static_cast<std::int32_t>(lv.orbit.size());
            lv.orbit.push_back(y);
            lv.transversal.push_back(lv.transversal[k] * s);
            lv.inverse.push_back(lv.transversal.back().inverse());
          }
        }
      }
    }

    // Strips g through levels from..end. Returns the residue and the level at
    // which stripping stopped (levels_.size() if it passed every level).
    std::pair<Perm, std::size_t> sift(Perm g, std::size_t from) const {
      for (std::size_t l = from; l < levels_.size(); ++l) {
        auto const& lv = levels_[l];
        std::int32_t p = lv.pos[g[lv.base]];
        if (p < 0) {
          return {std::move(g), l};
        }
        if (p != 0) {
          g = g * lv.inverse[static_cast<std::size_t>(p)];
        }
      }
      return {std::move(g), levels_.size()};
    }

    void run(order_type known_order) {
      std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
      while (i >= 0) {
        auto const li = static_cast<std::size_t>(i);
        bool extended = false;
        for (std::size_t j = 0; j < levels_[li].orbit.size() && !extended; ++j) {
          for (std::size_t s = 0; s < levels_[li].gens.size(); ++s) {
            Level const& lv = levels_[li];
            Perm us = lv.transversal[j] * lv.gens[s];
            std::int32_t p = lv.pos[us[lv.base]];
            if (us == lv.transversal[static_cast<std::size_t>(p)]) {
              continue;
            }
            Perm h = us * lv.inverse[static_cast<std::size_t>(p)];
            auto [r, lvl] = sift(std::move(h), li + 1);
            if (lvl == levels_.size() && r.is_identity()) {
              continue;
            }
            if (lvl == levels_.size()) {
              push_level(r.first_moved_point());
            }
            for (std::size_t l = li + 1; l <= lvl; ++l) {
              levels_[l].gens.push_back(r);
              rebuild_orbit(levels_[l]);
            }
            if (known_order != 0 && order() == known_order) {
              return;
            }
            i = static_cast<std::ptrdiff_t>(lvl);
            extended = true;
            break;
          }
        }
        if (!extended) {
          --i;
        }
      }
    }

    std::size_t degree_ = 0;
    std::vector<Level> levels_;
  };

}  // namespace semiperm::detail
