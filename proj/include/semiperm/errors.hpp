#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace semiperm {

  // Base class of everything the library throws on bad input or exceeded
  // limits. Internal consistency failures use std::logic_error instead.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class InvalidArgument : public Error {
   public:
    using Error::Error;
  };

  class NotSubgroup : public Error {
   public:
    using Error::Error;
  };

  class NotNormal : public Error {
   public:
    using Error::Error;
  };

  class CapExceeded : public Error {
   public:
    CapExceeded(std::string const& what_cap, std::uint64_t order, std::uint64_t cap)
        : Error("group too large to " + what_cap + ": order " + std::to_string(order)
                + " exceeds cap " + std::to_string(cap)),
          order_(order),
          cap_(cap) {}

    std::uint64_t order() const noexcept { return order_; }
    std::uint64_t cap() const noexcept { return cap_; }

   private:
    std::uint64_t order_;
    std::uint64_t cap_;
  };

}  // namespace semiperm
