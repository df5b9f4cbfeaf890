#include "fibgray/basis.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <numeric>
#include <type_traits>

#include "fibgray/errors.hpp"

namespace fibgray {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

void validate(const SequenceSpec& spec) {
  std::visit(Overloaded{
                 [](const KBonacci& s) {
                   if (s.k < 2) throw InvalidSpec("kbonacci requires k >= 2");
                 },
                 [](const Pell&) {},
                 [](const PowersOfTwo&) {},
                 [](const LinearPlus& s) {
                   if (!(s.k >= s.h && s.h > 0))
                     throw InvalidSpec("linplus requires k >= h > 0");
                 },
                 [](const LinearMinus& s) {
                   if (!(s.k > s.h && s.h > 0))
                     throw InvalidSpec("linminus requires k > h > 0");
                 },
             },
             spec);
}

std::string describe(const SequenceSpec& spec) {
  return std::visit(
      Overloaded{
          [](const KBonacci& s) { return "kbonacci(" + std::to_string(s.k) + ")"; },
          [](const Pell&) { return std::string("pell"); },
          [](const PowersOfTwo&) { return std::string("pow2"); },
          [](const LinearPlus& s) {
            return "linplus(" + std::to_string(s.k) + "," + std::to_string(s.h) + ")";
          },
          [](const LinearMinus& s) {
            return "linminus(" + std::to_string(s.k) + "," + std::to_string(s.h) + ")";
          },
      },
      spec);
}

NumerationBasis::NumerationBasis(SequenceSpec spec) : spec_(std::move(spec)) {
  validate(spec_);
  // a_0 and a_1 up front so degenerate parameter choices fail at construction.
  extend_to(1);
}

NumerationBasis::NumerationBasis(const NumerationBasis& other)
    : spec_(other.spec_) {
  std::shared_lock lock(other.mutex_);
  terms_ = other.terms_;
}

NumerationBasis& NumerationBasis::operator=(const NumerationBasis& other) {
  if (this == &other) return *this;
  std::deque<Natural> copy;
  {
    std::shared_lock lock(other.mutex_);
    copy = other.terms_;
  }
  std::unique_lock lock(mutex_);
  spec_ = other.spec_;
  terms_ = std::move(copy);
  return *this;
}

NumerationBasis::NumerationBasis(NumerationBasis&& other) noexcept
    : spec_(std::move(other.spec_)), terms_(std::move(other.terms_)) {}

NumerationBasis& NumerationBasis::operator=(NumerationBasis&& other) noexcept {
  spec_ = std::move(other.spec_);
  terms_ = std::move(other.terms_);
  return *this;
}

const Natural& NumerationBasis::term(std::size_t i) const {
  {
    std::shared_lock lock(mutex_);
    if (i < terms_.size()) return terms_[i];
  }
  extend_to(i);
  std::shared_lock lock(mutex_);
  return terms_[i];
}

std::size_t NumerationBasis::cached_terms() const {
  std::shared_lock lock(mutex_);
  return terms_.size();
}

void NumerationBasis::extend_to(std::size_t i) const {
  std::unique_lock lock(mutex_);
  while (terms_.size() <= i) {
    Natural next = next_term();
    const std::size_t idx = terms_.size();
    if (idx == 0 && next != 1) {
      throw NonMonotonicSequence(0, "a_0 must be 1");
    }
    if (idx > 0 && !(terms_.back() < next)) {
      throw NonMonotonicSequence(
          idx, "a_" + std::to_string(idx) + " = " + next.str() + " <= a_" +
                   std::to_string(idx - 1) + " = " + terms_.back().str());
    }
    terms_.push_back(std::move(next));
  }
}

// Caller holds the writer lock.
Natural NumerationBasis::next_term() const {
  const std::size_t m = terms_.size();
  return std::visit(
      Overloaded{
          [&](const KBonacci& s) -> Natural {
            if (m < s.k) return Natural(1) << m;
            Natural sum = 0;
            for (std::size_t j = m - s.k; j < m; ++j) sum += terms_[j];
            return sum;
          },
          [&](const Pell&) -> Natural {
            if (m == 0) return 1;
            if (m == 1) return 2;
            return 2 * terms_[m - 1] + terms_[m - 2];
          },
          [&](const PowersOfTwo&) -> Natural { return Natural(1) << m; },
          [&](const LinearPlus& s) -> Natural {
            if (m == 0) return 1;
            if (m == 1) return s.k;
            return Natural(s.k) * terms_[m - 1] + Natural(s.h) * terms_[m - 2];
          },
          [&](const LinearMinus& s) -> Natural {
            if (m == 0) return 1;
            if (m == 1) return s.k;
            Natural plus = Natural(s.k) * terms_[m - 1];
            Natural minus = Natural(s.h) * terms_[m - 2];
            // cpp_int is signed; a negative value would surface as a
            // monotonicity failure in extend_to.
            return plus - minus;
          },
      },
      spec_);
}

std::size_t NumerationBasis::index_of_largest_leq(const Natural& value) const {
  if (value <= 0) {
    throw DomainError("index_of_largest_leq requires N >= 1");
  }
  std::size_t hi = 1;
  while (term(hi) <= value) hi *= 2;
  std::shared_lock lock(mutex_);
  auto first_above = std::upper_bound(terms_.begin(), terms_.begin() + hi + 1, value);
  return static_cast<std::size_t>(first_above - terms_.begin()) - 1;
}

std::uint64_t NumerationBasis::digit_bound(std::size_t i) const {
  const Natural q = (term(i + 1) - 1) / term(i);
  if (q > std::numeric_limits<std::uint32_t>::max()) {
    throw DomainError("digit bound at index " + std::to_string(i) +
                      " does not fit a digit");
  }
  return static_cast<std::uint64_t>(q);
}

std::uint64_t NumerationBasis::alphabet_for_length(std::size_t m) const {
  std::uint64_t best = 0;
  for (std::size_t i = 0; i < m; ++i) best = std::max(best, digit_bound(i));
  return best;
}

std::uint64_t saturating_u64(const Natural& n) noexcept {
  if (n < 0) return 0;
  if (n > std::numeric_limits<std::uint64_t>::max())
    return std::numeric_limits<std::uint64_t>::max();
  return static_cast<std::uint64_t>(n);
}

}  // namespace fibgray
