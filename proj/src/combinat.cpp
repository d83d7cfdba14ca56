#include "glj/combinat.hpp"

#include "glj/errors.hpp"

#include <algorithm>
#include <array>
#include <bitset>
#include <sstream>

namespace glj {

Injection::Injection(std::size_t codomain, std::span<const unsigned> values) {
  require_input(codomain <= kMaxSetSize && values.size() <= codomain,
                "injection: domain larger than codomain or set too large");
  codomain_ = static_cast<std::uint8_t>(codomain);
  std::bitset<kMaxSetSize + 1> seen;
  table_.reserve(values.size());
  for (unsigned v : values) {
    require_input(v >= 1 && v <= codomain, "injection: value out of range");
    require_input(!seen[v], "injection: repeated value");
    seen[v] = true;
    table_.push_back(static_cast<std::uint8_t>(v));
  }
}

Injection Injection::identity(std::size_t n) {
  require_input(n <= kMaxSetSize, "set too large");
  Injection f;
  f.codomain_ = static_cast<std::uint8_t>(n);
  f.table_.resize(n);
  for (std::size_t i = 0; i < n; ++i) f.table_[i] = static_cast<std::uint8_t>(i + 1);
  return f;
}

Injection Injection::empty(std::size_t codomain) {
  require_input(codomain <= kMaxSetSize, "set too large");
  Injection f;
  f.codomain_ = static_cast<std::uint8_t>(codomain);
  return f;
}

std::string Injection::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < table_.size(); ++i) os << (i ? "," : "") << unsigned(table_[i]);
  os << "]->" << unsigned(codomain_);
  return os.str();
}

std::strong_ordering operator<=>(const Injection& a, const Injection& b) {
  if (auto c = a.table_.size() <=> b.table_.size(); c != 0) return c;
  if (auto c = a.codomain_ <=> b.codomain_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.table_.begin(), a.table_.end(),
                                                b.table_.begin(), b.table_.end());
}

Injection compose(const Injection& g, const Injection& f) {
  require_input(f.codomain_size() == g.domain_size(), "compose: size mismatch");
  Injection r;
  r.codomain_ = g.codomain_;
  r.table_.resize(f.table_.size());
  for (std::size_t i = 0; i < f.table_.size(); ++i) r.table_[i] = g.table_[f.table_[i] - 1];
  return r;
}

Injection block_sum(const Injection& f, const Injection& g) {
  require_input(std::size_t(f.codomain_) + g.codomain_ <= kMaxSetSize, "block_sum: set too large");
  Injection r;
  r.codomain_ = static_cast<std::uint8_t>(f.codomain_ + g.codomain_);
  r.table_ = f.table_;
  for (auto v : g.table_) r.table_.push_back(static_cast<std::uint8_t>(v + f.codomain_));
  return r;
}

Bijection shuffle(std::size_t m, std::size_t n) {
  require_input(m + n <= kMaxSetSize, "shuffle: set too large");
  std::vector<unsigned> v(m + n);
  for (std::size_t i = 1; i <= m; ++i) v[i - 1] = static_cast<unsigned>(i + n);
  for (std::size_t j = 1; j <= n; ++j) v[m + j - 1] = static_cast<unsigned>(j);
  return Injection(m + n, v);
}

std::vector<unsigned> complement(const Injection& f) {
  std::bitset<kMaxSetSize + 1> hit;
  for (auto v : f.table()) hit[v] = true;
  std::vector<unsigned> out;
  out.reserve(f.codomain_size() - f.domain_size());
  for (unsigned x = 1; x <= f.codomain_size(); ++x)
    if (!hit[x]) out.push_back(x);
  return out;
}

Bijection inverse(const Bijection& f) {
  require_input(f.is_bijection(), "inverse: not a bijection");
  Injection r;
  r.codomain_ = f.codomain_;
  r.table_.resize(f.table_.size());
  for (std::size_t i = 0; i < f.table_.size(); ++i)
    r.table_[f.table_[i] - 1] = static_cast<std::uint8_t>(i + 1);
  return r;
}

std::uint64_t factorial(std::size_t n) {
  require_input(n <= 20, "factorial: overflow");
  std::uint64_t r = 1;
  for (std::size_t i = 2; i <= n; ++i) r *= i;
  return r;
}

std::uint64_t injection_count(std::size_t m, std::size_t n) {
  if (m > n) return 0;
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < m; ++i) {
    std::uint64_t f = n - i;
    require_input(r <= UINT64_MAX / f, "injection_count: overflow");
    r *= f;
  }
  return r;
}

std::uint64_t injection_rank(const Injection& f) {
  const std::size_t m = f.domain_size(), n = f.codomain_size();
  std::bitset<kMaxSetSize + 1> used;
  std::uint64_t rank = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const unsigned v = f.table()[i];
    unsigned smaller = 0;
    for (unsigned x = 1; x < v; ++x)
      if (!used[x]) ++smaller;
    rank += smaller * injection_count(m - i - 1, n - i - 1);
    used[v] = true;
  }
  return rank;
}

Injection injection_unrank(std::size_t m, std::size_t n, std::uint64_t rank) {
  require_input(m <= n && n <= kMaxSetSize, "injection_unrank: bad sizes");
  require_input(rank < injection_count(m, n), "injection_unrank: rank out of range");
  Injection f;
  f.codomain_ = static_cast<std::uint8_t>(n);
  f.table_.resize(m);
  std::bitset<kMaxSetSize + 1> used;
  for (std::size_t i = 0; i < m; ++i) {
    const std::uint64_t block = injection_count(m - i - 1, n - i - 1);
    std::uint64_t skip = rank / block;
    rank %= block;
    for (unsigned x = 1; x <= n; ++x) {
      if (used[x]) continue;
      if (skip == 0) {
        f.table_[i] = static_cast<std::uint8_t>(x);
        used[x] = true;
        break;
      }
      --skip;
    }
  }
  return f;
}

std::vector<Injection> enumerate_injections(std::size_t m, std::size_t n) {
  std::vector<Injection> out;
  if (m > n) return out;
  const auto count = injection_count(m, n);
  out.reserve(count);
  // Odometer over tables in lexicographic order.
  std::vector<unsigned> cur(m);
  std::vector<bool> used(n + 1, false);
  std::size_t depth = 0;
  std::vector<unsigned> next(m + 1, 1);
  while (true) {
    if (depth == m) {
      out.emplace_back(n, cur);
      if (m == 0) break;
      --depth;
      used[cur[depth]] = false;
      next[depth] = cur[depth] + 1;
      continue;
    }
    unsigned x = next[depth];
    while (x <= n && used[x]) ++x;
    if (x > n) {
      if (depth == 0) break;
      next[depth] = 1;
      --depth;
      used[cur[depth]] = false;
      next[depth] = cur[depth] + 1;
      continue;
    }
    cur[depth] = x;
    used[x] = true;
    ++depth;
    next[depth] = 1;
  }
  return out;
}

}  // namespace glj
