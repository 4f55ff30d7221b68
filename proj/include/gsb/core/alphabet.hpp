#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "gsb/core/errors.hpp"

namespace gsb {

  using Letter = std::uint32_t;

  // A finite linearly ordered set of generators. Names are listed
  // smallest-first, so the rank of a generator is its position.
  class Alphabet {
   public:
    Alphabet() = default;

    explicit Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
      for (Letter i = 0; i < names_.size(); ++i) {
        if (names_[i].empty()) {
          throw std::invalid_argument("empty generator name");
        }
        if (!rank_.emplace(names_[i], i).second) {
          throw std::invalid_argument("duplicate generator name: " + names_[i]);
        }
      }
    }

    // prefix1 < prefix2 < ... < prefixN
    static Alphabet indexed(std::string const& prefix, std::size_t n) {
      std::vector<std::string> names;
      names.reserve(n);
      for (std::size_t i = 1; i <= n; ++i) {
        names.push_back(prefix + std::to_string(i));
      }
      return Alphabet(std::move(names));
    }

    std::size_t size() const noexcept { return names_.size(); }
    bool empty() const noexcept { return names_.empty(); }

    std::string const& name(Letter x) const {
      if (x >= names_.size()) {
        throw InvalidWord("letter index " + std::to_string(x) + " outside alphabet of size "
                          + std::to_string(names_.size()));
      }
      return names_[x];
    }

    std::optional<Letter> find(std::string_view name) const {
      auto it = rank_.find(std::string(name));
      if (it == rank_.end()) {
        return std::nullopt;
      }
      return it->second;
    }

    Letter rank(std::string_view name) const {
      if (auto r = find(name)) {
        return *r;
      }
      throw std::invalid_argument("unknown generator: " + std::string(name));
    }

    std::vector<std::string> const& names() const noexcept { return names_; }

    friend bool operator==(Alphabet const& a, Alphabet const& b) { return a.names_ == b.names_; }

   private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, Letter> rank_;
  };

}  // namespace gsb
