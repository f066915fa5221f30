#include "cyclekit/permcore.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cyclekit {

Permutation::Permutation(int n) {
  if (n < 1) throw std::invalid_argument("permutation: size must be >= 1");
  image_.resize(static_cast<size_t>(n));
  std::iota(image_.begin(), image_.end(), 1);
}

Permutation Permutation::from_one_line(std::vector<int> image) {
  const int n = static_cast<int>(image.size());
  if (n < 1) throw std::invalid_argument("permutation: empty one-line form");
  std::vector<bool> seen(static_cast<size_t>(n), false);
  for (int v : image) {
    if (v < 1 || v > n || seen[static_cast<size_t>(v - 1)])
      throw std::invalid_argument("permutation: not a bijection on [1..n]");
    seen[static_cast<size_t>(v - 1)] = true;
  }
  return Permutation(std::move(image), Unchecked{});
}

std::vector<int> CycleType::parts() const {
  std::vector<int> out;
  for (int r = n; r >= 1; --r)
    for (int c = 0; c < nu[static_cast<size_t>(r)]; ++c) out.push_back(r);
  return out;
}

int CycleType::total_cycles() const {
  int total = 0;
  for (int r = 1; r <= n; ++r) total += nu[static_cast<size_t>(r)];
  return total;
}

int CycleType::odd_cycles() const {
  int total = 0;
  for (int r = 1; r <= n; r += 2) total += nu[static_cast<size_t>(r)];
  return total;
}

CycleType cycle_type_from_parts(const std::vector<int>& parts) {
  CycleType t;
  t.n = std::accumulate(parts.begin(), parts.end(), 0);
  t.nu.assign(static_cast<size_t>(t.n) + 1, 0);
  for (int p : parts) {
    if (p < 1 || p > t.n)
      throw std::invalid_argument("cycle type: bad part");
    ++t.nu[static_cast<size_t>(p)];
  }
  return t;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size())
    throw std::invalid_argument("compose: size mismatch");
  const int n = p.size();
  std::vector<int> image(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) image[static_cast<size_t>(i - 1)] = p(q(i));
  return Permutation(std::move(image), Permutation::Unchecked{});
}

CycleType cycle_type(const Permutation& p) {
  const int n = p.size();
  CycleType t;
  t.n = n;
  t.nu.assign(static_cast<size_t>(n) + 1, 0);
  std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
  for (int i = 1; i <= n; ++i) {
    if (seen[static_cast<size_t>(i)]) continue;
    int len = 0;
    int j = i;
    while (!seen[static_cast<size_t>(j)]) {
      seen[static_cast<size_t>(j)] = true;
      j = p(j);
      ++len;
    }
    ++t.nu[static_cast<size_t>(len)];
  }
  return t;
}

Permutation canonical_cycle(int n) {
  Permutation id(n);
  std::vector<int> image(static_cast<size_t>(n));
  for (int i = 1; i < n; ++i) image[static_cast<size_t>(i - 1)] = i + 1;
  image[static_cast<size_t>(n - 1)] = 1;
  return Permutation::from_one_line(std::move(image));
}

NCycleStream::NCycleStream(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("cycle stream: n must be >= 1");
  if (n > 21)
    throw std::invalid_argument("cycle stream: (n-1)! exceeds 64-bit range");
  size_ = 1;
  for (int i = 2; i < n; ++i) size_ *= static_cast<std::uint64_t>(i);
}

std::vector<int> NCycleStream::arrangement_at(std::uint64_t index) const {
  // Factorial-number-system unranking of the index-th arrangement of [2..n].
  const int m = n_ - 1;
  std::vector<int> pool(static_cast<size_t>(m));
  std::iota(pool.begin(), pool.end(), 2);
  std::vector<std::uint64_t> fact(static_cast<size_t>(m) + 1, 1);
  for (int i = 1; i <= m; ++i)
    fact[static_cast<size_t>(i)] = fact[static_cast<size_t>(i - 1)] * i;
  std::vector<int> out;
  out.reserve(static_cast<size_t>(m));
  std::uint64_t rem = index;
  for (int i = m; i >= 1; --i) {
    const std::uint64_t digit = rem / fact[static_cast<size_t>(i - 1)];
    rem %= fact[static_cast<size_t>(i - 1)];
    out.push_back(pool[static_cast<size_t>(digit)]);
    pool.erase(pool.begin() + static_cast<long>(digit));
  }
  return out;
}

void NCycleStream::cycle_image(const std::vector<int>& arrangement,
                               std::vector<int>& image) const {
  int prev = 1;
  for (int v : arrangement) {
    image[static_cast<size_t>(prev - 1)] = v;
    prev = v;
  }
  image[static_cast<size_t>(prev - 1)] = 1;
}

void NCycleStream::next_arrangement(std::vector<int>& arrangement) {
  std::next_permutation(arrangement.begin(), arrangement.end());
}

Permutation NCycleStream::at(std::uint64_t index) const {
  if (index >= size_) throw std::out_of_range("cycle stream: index");
  std::vector<int> image(static_cast<size_t>(n_));
  cycle_image(arrangement_at(index), image);
  return Permutation::from_one_line(std::move(image));
}

Permutation random_ncycle(int n, SplitMix64& rng) {
  if (n < 1) throw std::invalid_argument("random_ncycle: n must be >= 1");
  std::vector<int> arrangement(static_cast<size_t>(n - 1));
  std::iota(arrangement.begin(), arrangement.end(), 2);
  for (size_t i = arrangement.size(); i > 1; --i) {
    const size_t j = static_cast<size_t>(rng.below(i));
    std::swap(arrangement[i - 1], arrangement[j]);
  }
  std::vector<int> image(static_cast<size_t>(n));
  int prev = 1;
  for (int v : arrangement) {
    image[static_cast<size_t>(prev - 1)] = v;
    prev = v;
  }
  image[static_cast<size_t>(prev - 1)] = 1;
  return Permutation(std::move(image), Permutation::Unchecked{});
}

Permutation random_ncycle(int n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  return random_ncycle(n, rng);
}

BigInt class_size(const CycleType& t) {
  BigInt denom = 1;
  for (int r = 1; r <= t.n; ++r) {
    const int m = t.nu[static_cast<size_t>(r)];
    if (m == 0) continue;
    for (int c = 0; c < m; ++c) denom *= r;
    denom *= factorial(m);
  }
  return factorial(t.n) / denom;
}

std::string format_cycles(const Permutation& p) {
  const int n = p.size();
  std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
  std::string out;
  for (int i = 1; i <= n; ++i) {
    if (seen[static_cast<size_t>(i)]) continue;
    out += '(';
    int j = i;
    bool first = true;
    while (!seen[static_cast<size_t>(j)]) {
      seen[static_cast<size_t>(j)] = true;
      if (!first) out += ' ';
      out += std::to_string(j);
      first = false;
      j = p(j);
    }
    out += ')';
  }
  return out;
}

Permutation parse_cycles(std::string_view text, int n) {
  if (n < 1) throw std::invalid_argument("parse_cycles: n must be >= 1");
  std::vector<int> image(static_cast<size_t>(n));
  std::iota(image.begin(), image.end(), 1);
  std::vector<bool> used(static_cast<size_t>(n) + 1, false);
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(')
      throw std::invalid_argument("parse_cycles: expected '('");
    ++pos;
    std::vector<int> cyc;
    while (true) {
      skip_ws();
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      int v = 0;
      bool any = false;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + (text[pos] - '0');
        ++pos;
        any = true;
      }
      if (!any) throw std::invalid_argument("parse_cycles: expected integer");
      if (v < 1 || v > n || used[static_cast<size_t>(v)])
        throw std::invalid_argument("parse_cycles: bad or repeated element");
      used[static_cast<size_t>(v)] = true;
      cyc.push_back(v);
      skip_ws();
      if (pos < text.size() && text[pos] == ',') ++pos;
    }
    for (size_t i = 0; i < cyc.size(); ++i)
      image[static_cast<size_t>(cyc[i] - 1)] = cyc[(i + 1) % cyc.size()];
    skip_ws();
  }
  return Permutation::from_one_line(std::move(image));
}

std::string format_one_line(const Permutation& p) {
  std::string out;
  for (int i = 1; i <= p.size(); ++i) {
    if (i > 1) out += ',';
    out += std::to_string(p(i));
  }
  return out;
}

Permutation parse_one_line(std::string_view text) {
  std::vector<int> image;
  std::string item;
  std::stringstream ss{std::string(text)};
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    image.push_back(std::stoi(item));
  }
  if (image.empty())
    throw std::invalid_argument("parse_one_line: empty permutation");
  return Permutation::from_one_line(std::move(image));
}

}  // namespace cyclekit
