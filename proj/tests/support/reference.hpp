#pragma once

// Slow reference constructions over std::string / std::vector<int>, written
// straight from the list definitions and sharing no code with the library.

#include <algorithm>
#include <string>
#include <vector>

namespace ref {

inline std::vector<std::string> reversed(std::vector<std::string> v) {
  std::reverse(v.begin(), v.end());
  return v;
}

// C_0 = (ε), C_m = 0·rev(C_{m-1}) ∘ 1·C_{m-1}
inline std::vector<std::string> brgc(int m) {
  if (m == 0) return {""};
  const auto prev = brgc(m - 1);
  std::vector<std::string> out;
  for (const auto& s : reversed(prev)) out.push_back("0" + s);
  for (const auto& s : prev) out.push_back("1" + s);
  return out;
}

inline std::vector<std::string> gray(int k, int m) {
  if (m < k) return brgc(m);
  std::vector<std::string> out;
  for (int j = 1; j <= k; ++j) {
    const std::string prefix = std::string(j - 1, '1') + "0";
    for (const auto& s : reversed(gray(k, m - j))) out.push_back(prefix + s);
  }
  return out;
}

inline std::vector<long long> kbonacci(int k, int n) {
  std::vector<long long> f;
  for (int l = 0; l <= n; ++l) {
    if (l < k) {
      f.push_back(1LL << l);
    } else {
      long long s = 0;
      for (int j = 1; j <= k; ++j) s += f[l - j];
      f.push_back(s);
    }
  }
  return f;
}

using Perm = std::vector<int>;

inline std::vector<Perm> gray_perms(int k, int m) {
  if (m == 0) return {Perm{}};
  std::vector<Perm> out;
  for (int j = 1; j <= std::min(k, m); ++j) {
    Perm prefix;
    for (int i = 2; i <= j; ++i) prefix.push_back(i);
    prefix.push_back(1);
    auto sub = gray_perms(k, m - j);
    std::reverse(sub.begin(), sub.end());
    for (const auto& p : sub) {
      Perm q = prefix;
      for (int e : p) q.push_back(e + j);
      out.push_back(q);
    }
  }
  return out;
}

inline std::string inversion_string(const Perm& p) {
  std::string v;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    int c = 0;
    for (std::size_t j = i + 1; j < p.size(); ++j) c += p[j] < p[i];
    v += std::to_string(c);
  }
  return v;
}

}  // namespace ref
