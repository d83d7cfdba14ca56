#pragma once

// Finite sets {1..m}, injections and bijections between them.
//
// Elements are 1-based. Tables are stored inline; sets are limited to
// kMaxSetSize elements, which is far beyond anything enumerable.

#include <boost/container/small_vector.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace glj {

inline constexpr std::size_t kMaxSetSize = 255;

class Injection {
 public:
  using Table = boost::container::small_vector<std::uint8_t, 12>;

  Injection() = default;
  // values[i] is the image of i+1; must be distinct and lie in 1..codomain.
  Injection(std::size_t codomain, std::span<const unsigned> values);

  static Injection identity(std::size_t n);
  static Injection empty(std::size_t codomain);

  std::size_t domain_size() const { return table_.size(); }
  std::size_t codomain_size() const { return codomain_; }
  bool is_bijection() const { return table_.size() == codomain_; }

  // 1-based evaluation.
  unsigned operator()(std::size_t i) const { return table_[i - 1]; }
  std::span<const std::uint8_t> table() const { return {table_.data(), table_.size()}; }
  std::vector<unsigned> values() const { return {table_.begin(), table_.end()}; }

  std::string to_string() const;

  friend bool operator==(const Injection&, const Injection&) = default;
  friend std::strong_ordering operator<=>(const Injection& a, const Injection& b);

 private:
  friend Injection compose(const Injection&, const Injection&);
  friend Injection block_sum(const Injection&, const Injection&);
  friend Injection inverse(const Injection&);
  friend Injection injection_unrank(std::size_t, std::size_t, std::uint64_t);

  std::uint8_t codomain_ = 0;
  Table table_;
};

// Bijections are injections with equal domain and codomain sizes.
using Bijection = Injection;

// g after f; requires f.codomain_size() == g.domain_size().
Injection compose(const Injection& g, const Injection& f);

// f on the first block, g shifted by f's codomain on the second.
Injection block_sum(const Injection& f, const Injection& g);

// The symmetry of I: i -> i+n for i <= m, m+j -> j.
Bijection shuffle(std::size_t m, std::size_t n);

// Elements of 1..codomain not hit by f, ascending.
std::vector<unsigned> complement(const Injection& f);

Bijection inverse(const Bijection& f);

// n!/(n-m)!, the number of injections m -> n (0 when m > n).
std::uint64_t injection_count(std::size_t m, std::size_t n);
std::uint64_t factorial(std::size_t n);

// Position of f in the lexicographic order of all tables m -> n.
std::uint64_t injection_rank(const Injection& f);
Injection injection_unrank(std::size_t m, std::size_t n, std::uint64_t rank);

// All injections m -> n in lexicographic table order.
std::vector<Injection> enumerate_injections(std::size_t m, std::size_t n);

}  // namespace glj
