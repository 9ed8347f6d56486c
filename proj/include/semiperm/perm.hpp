#pragma once

#include <algorithm>    // for find_if
#include <cctype>       // for isdigit, isspace
#include <compare>      // for strong_ordering
#include <cstddef>      // for size_t
#include <cstdint>      // for uint32_t, uint64_t
#include <numeric>      // for lcm
#include <span>         // for span
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "errors.hpp"

namespace semiperm {

  using point_type = std::uint32_t;
  using order_type = std::uint64_t;

  // A permutation of the points {0, ..., degree - 1}. Text I/O (cycle
  // notation) is 1-based, everything else is 0-based.
  //
  // Composition is left to right: (a * b)(x) = b(a(x)), i.e. a * b applies a
  // first. Conjugation follows: x^g = g^-1 * x * g.
  class Perm {
   public:
    Perm() = default;

    explicit Perm(std::size_t degree) : images_(degree) {
      for (std::size_t i = 0; i < degree; ++i) {
        images_[i] = static_cast<point_type>(i);
      }
    }

    explicit Perm(std::vector<point_type> images) : images_(std::move(images)) {
      std::vector<bool> seen(images_.size(), false);
      for (point_type x : images_) {
        if (x >= images_.size() || seen[x]) {
          throw InvalidArgument("images do not form a bijection of 0.."
                                + std::to_string(images_.size()));
        }
        seen[x] = true;
      }
    }

    static Perm identity(std::size_t degree) { return Perm(degree); }

    // 1-based image list, as written in group files.
    static Perm from_one_based(std::span<std::int64_t const> images) {
      std::vector<point_type> img;
      img.reserve(images.size());
      for (auto x : images) {
        if (x < 1 || static_cast<std::size_t>(x) > images.size()) {
          throw InvalidArgument("image " + std::to_string(x) + " out of range 1.."
                                + std::to_string(images.size()));
        }
        img.push_back(static_cast<point_type>(x - 1));
      }
      return Perm(std::move(img));
    }

    static Perm from_cycles(std::string_view text, std::size_t degree);

    std::size_t degree() const noexcept { return images_.size(); }

    point_type operator[](point_type x) const noexcept { return images_[x]; }

    std::vector<point_type> const& images() const noexcept { return images_; }

    bool is_identity() const noexcept {
      for (std::size_t i = 0; i < images_.size(); ++i) {
        if (images_[i] != i) {
          return false;
        }
      }
      return true;
    }

    // Smallest moved point, or degree() for the identity.
    point_type first_moved_point() const noexcept {
      for (std::size_t i = 0; i < images_.size(); ++i) {
        if (images_[i] != i) {
          return static_cast<point_type>(i);
        }
      }
      return static_cast<point_type>(images_.size());
    }

    Perm inverse() const {
      Perm result;
      result.images_.resize(images_.size());
      for (std::size_t i = 0; i < images_.size(); ++i) {
        result.images_[images_[i]] = static_cast<point_type>(i);
      }
      return result;
    }

    order_type order() const {
      order_type result = 1;
      std::vector<bool> seen(images_.size(), false);
      for (std::size_t i = 0; i < images_.size(); ++i) {
        if (seen[i]) {
          continue;
        }
        order_type len = 0;
        for (std::size_t j = i; !seen[j]; j = images_[j]) {
          seen[j] = true;
          ++len;
        }
        result = std::lcm(result, len);
      }
      return result;
    }

    Perm pow(std::int64_t k) const {
      Perm base = k < 0 ? inverse() : *this;
      std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-k) : static_cast<std::uint64_t>(k);
      Perm result(degree());
      while (e > 0) {
        if (e & 1) {
          result = result * base;
        }
        base = base * base;
        e >>= 1;
      }
      return result;
    }

    // 1-based disjoint cycle notation, "()" for the identity.
    std::string to_cycles() const {
      std::string out;
      std::vector<bool> seen(images_.size(), false);
      for (std::size_t i = 0; i < images_.size(); ++i) {
        if (seen[i] || images_[i] == i) {
          continue;
        }
        out += '(';
        for (std::size_t j = i; !seen[j]; j = images_[j]) {
          seen[j] = true;
          if (j != i) {
            out += ' ';
          }
          out += std::to_string(j + 1);
        }
        out += ')';
      }
      return out.empty() ? "()" : out;
    }

    std::size_t hash() const noexcept {
      std::uint64_t h = 0xcbf29ce484222325ULL;
      for (point_type x : images_) {
        h ^= x;
        h *= 0x100000001b3ULL;
      }
      return static_cast<std::size_t>(h);
    }

    friend Perm operator*(Perm const& a, Perm const& b) {
      if (a.degree() != b.degree()) {
        throw InvalidArgument("cannot compose permutations of degree "
                              + std::to_string(a.degree()) + " and "
                              + std::to_string(b.degree()));
      }
      Perm result;
      result.images_.resize(a.images_.size());
      for (std::size_t i = 0; i < a.images_.size(); ++i) {
        result.images_[i] = b.images_[a.images_[i]];
      }
      return result;
    }

    friend bool operator==(Perm const&, Perm const&) = default;

    // Lexicographic on image arrays; shorter degree first.
    friend std::strong_ordering operator<=>(Perm const& a, Perm const& b) {
      if (a.degree() != b.degree()) {
        return a.degree() <=> b.degree();
      }
      return a.images_ <=> b.images_;
    }

   private:
    std::vector<point_type> images_;
  };

  struct PermHash {
    std::size_t operator()(Perm const& p) const noexcept { return p.hash(); }
  };

  inline Perm compose(Perm const& a, Perm const& b) { return a * b; }

  // g^-1 * x * g
  inline Perm conjugate(Perm const& x, Perm const& g) { return g.inverse() * x * g; }

  // a^-1 * b^-1 * a * b
  inline Perm commutator(Perm const& a, Perm const& b) {
    return a.inverse() * b.inverse() * a * b;
  }

  inline Perm Perm::from_cycles(std::string_view text, std::size_t degree) {
    std::vector<point_type> img(degree);
    for (std::size_t i = 0; i < degree; ++i) {
      img[i] = static_cast<point_type>(i);
    }
    std::vector<bool> used(degree, false);
    auto fail = [&](std::string const& why) {
      throw InvalidArgument("malformed cycle notation \"" + std::string(text) + "\": " + why);
    };
    std::size_t pos = 0;
    auto skip_ws = [&] {
      while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
        ++pos;
      }
    };
    skip_ws();
    if (pos == text.size()) {
      fail("empty string (write \"()\" for the identity)");
    }
    while (pos < text.size()) {
      if (text[pos] != '(') {
        fail("expected '('");
      }
      ++pos;
      std::vector<point_type> cycle;
      skip_ws();
      while (pos < text.size() && text[pos] != ')') {
        if (!std::isdigit(static_cast<unsigned char>(text[pos]))) {
          fail(std::string("unexpected character '") + text[pos] + "'");
        }
        std::uint64_t x = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
          x = x * 10 + static_cast<std::uint64_t>(text[pos] - '0');
          if (x > degree) {
            break;
          }
          ++pos;
        }
        if (x < 1 || x > degree) {
          fail("point out of range 1.." + std::to_string(degree));
        }
        if (used[x - 1]) {
          fail("repeated point " + std::to_string(x));
        }
        used[x - 1] = true;
        cycle.push_back(static_cast<point_type>(x - 1));
        std::size_t before = pos;
        skip_ws();
        if (pos == before && pos < text.size() && text[pos] != ')') {
          fail("points must be separated by whitespace");
        }
      }
      if (pos == text.size()) {
        fail("unterminated cycle");
      }
      ++pos;  // ')'
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        img[cycle[i]] = cycle[(i + 1) % cycle.size()];
      }
      skip_ws();
    }
    return Perm(std::move(img));
  }

}  // namespace semiperm
