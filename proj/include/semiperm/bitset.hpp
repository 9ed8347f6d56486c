#pragma once

#include <bit>      // for popcount, countr_zero
#include <cstddef>  // for size_t
#include <cstdint>  // for uint64_t
#include <vector>   // for vector

namespace semiperm {

  // Fixed-size dynamic bitset over element indices of a parent group.
  class Bitset {
   public:
    Bitset() = default;
    explicit Bitset(std::size_t n) : size_(n), words_((n + 63) / 64, 0) {}

    std::size_t size() const noexcept { return size_; }

    bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }

    // Sets bit i and reports whether it was previously clear.
    bool insert(std::size_t i) noexcept {
      std::uint64_t mask = std::uint64_t(1) << (i & 63);
      bool fresh = !(words_[i >> 6] & mask);
      words_[i >> 6] |= mask;
      return fresh;
    }

    std::size_t count() const noexcept {
      std::size_t c = 0;
      for (auto w : words_) {
        c += static_cast<std::size_t>(std::popcount(w));
      }
      return c;
    }

    bool none() const noexcept {
      for (auto w : words_) {
        if (w) {
          return false;
        }
      }
      return true;
    }

    bool is_subset_of(Bitset const& other) const noexcept {
      for (std::size_t i = 0; i < words_.size(); ++i) {
        if (words_[i] & ~other.words_[i]) {
          return false;
        }
      }
      return true;
    }

    bool intersects(Bitset const& other) const noexcept {
      for (std::size_t i = 0; i < words_.size(); ++i) {
        if (words_[i] & other.words_[i]) {
          return true;
        }
      }
      return false;
    }

    Bitset& operator&=(Bitset const& other) noexcept {
      for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] &= other.words_[i];
      }
      return *this;
    }

    Bitset& operator|=(Bitset const& other) noexcept {
      for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] |= other.words_[i];
      }
      return *this;
    }

    friend Bitset operator&(Bitset a, Bitset const& b) noexcept { return a &= b; }
    friend Bitset operator|(Bitset a, Bitset const& b) noexcept { return a |= b; }

    template <typename F>
    void for_each(F&& f) const {
      for (std::size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t bits = words_[w];
        while (bits) {
          std::size_t i = (w << 6) + static_cast<std::size_t>(std::countr_zero(bits));
          f(i);
          bits &= bits - 1;
        }
      }
    }

    std::vector<std::uint32_t> indices() const {
      std::vector<std::uint32_t> out;
      out.reserve(count());
      for_each([&](std::size_t i) { out.push_back(static_cast<std::uint32_t>(i)); });
      return out;
    }

    std::size_t hash() const noexcept {
      std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ size_;
      for (auto w : words_) {
        h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      }
      return static_cast<std::size_t>(h);
    }

    friend bool operator==(Bitset const&, Bitset const&) = default;

    // Lexicographic order of the sorted index lists (for sets of equal size).
    friend bool lex_less(Bitset const& a, Bitset const& b) noexcept {
      for (std::size_t i = 0; i < a.words_.size(); ++i) {
        std::uint64_t diff = a.words_[i] ^ b.words_[i];
        if (diff) {
          std::uint64_t low = diff & (~diff + 1);
          return (a.words_[i] & low) != 0;
        }
      }
      return false;
    }

   private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
  };

  struct BitsetHash {
    std::size_t operator()(Bitset const& b) const noexcept { return b.hash(); }
  };

}  // namespace semiperm
