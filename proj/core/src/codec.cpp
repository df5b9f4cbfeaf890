#include "fibgray/codec.hpp"

#include "fibgray/errors.hpp"

namespace fibgray {

DigitString encode(const NumerationBasis& basis, const Natural& value) {
  if (value < 0) throw DomainError("cannot encode a negative value");
  if (value == 0) return DigitString(std::vector<Digit>{0}, basis.tag());

  const std::size_t n = basis.index_of_largest_leq(value);
  std::vector<Digit> digits;
  digits.reserve(n + 1);
  Natural remainder = value;
  for (std::size_t i = n + 1; i-- > 0;) {
    const Natural& weight = basis.term(i);
    Natural q;
    Natural r;
    boost::multiprecision::divide_qr(remainder, weight, q, r);
    digits.push_back(static_cast<Digit>(q));
    remainder = std::move(r);
  }
  return DigitString(std::move(digits), basis.tag());
}

Natural decode(const NumerationBasis& basis, const DigitString& s) {
  Natural total = 0;
  const std::size_t m = s.size();
  for (std::size_t j = 0; j < m; ++j) {
    const std::size_t i = m - 1 - j;
    const Digit d = s[j];
    if (d == 0) continue;
    const std::uint64_t bound = basis.digit_bound(i);
    if (d > bound) throw DigitOutOfRange(i, j, d, bound);
    total += basis.term(i) * d;
  }
  return total;
}

bool is_valid(const NumerationBasis& basis, const DigitString& s) {
  Natural prefix = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const Digit d = s.at_weight(i);
    if (d != 0) prefix += basis.term(i) * d;
    if (prefix >= basis.term(i + 1)) return false;
  }
  return true;
}

DigitString canonical(const DigitString& s) {
  std::size_t lead = 0;
  while (lead < s.size() && s[lead] == 0) ++lead;
  if (lead == s.size()) return DigitString(std::vector<Digit>{0}, s.basis_tag());
  std::vector<Digit> rest(s.begin() + static_cast<std::ptrdiff_t>(lead), s.end());
  return DigitString(std::move(rest), s.basis_tag());
}

DigitString pad(const DigitString& s, std::size_t m) {
  DigitString c = canonical(s);
  const bool zero = c.size() == 1 && c[0] == 0;
  const std::size_t significant = zero ? 0 : c.size();
  if (significant > m) throw TooLong(significant, m);
  std::vector<Digit> out(m - significant, 0);
  if (!zero) out.insert(out.end(), c.begin(), c.end());
  return DigitString(std::move(out), s.basis_tag());
}

}  // namespace fibgray
