#pragma once

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace fibgray::detail {

/// Lazily walks a list defined by a reversal-carrying recursion
///
///   L(level) = p_0·X_0(child_0) ∘ p_1·X_1(child_1) ∘ ... ,
///
/// where each X_b is either L(child_b) or its reverse. Level 0 is the
/// one-element list holding the fully written buffer.
///
/// A Grammar supplies:
///   using value_type;
///   std::size_t block_count(std::size_t level) const;       // 0 only at level 0
///   Block block(std::size_t level, std::size_t b) const;     // prefix_len >= 1
///   void write_prefix(std::span<value_type> out, std::size_t offset,
///                     std::size_t level, std::size_t b) const;
///
/// Reversal is a direction flag on each frame: a reversed frame visits its
/// blocks last to first and toggles every child's flag. State is one frame
/// per recursion level plus the output buffer.
struct Block {
  std::size_t prefix_len;
  std::size_t child_level;
  bool child_reversed;
};

template <class Grammar>
class BlockWalker {
 public:
  using value_type = typename Grammar::value_type;

  BlockWalker(Grammar grammar, std::size_t length, bool reversed = false)
      : grammar_(std::move(grammar)), buffer_(length) {
    stack_.reserve(length + 1);
    push(length, 0, reversed);
    descend();
  }

  bool done() const noexcept { return done_; }
  std::span<const value_type> current() const noexcept { return buffer_; }
  std::uint64_t emitted() const noexcept { return emitted_; }
  std::size_t depth() const noexcept { return stack_.size(); }

  void advance() {
    assert(!done_);
    ++emitted_;
    stack_.pop_back();  // leaf
    while (!stack_.empty()) {
      Frame& top = stack_.back();
      if (++top.ordinal < top.blocks) {
        enter_current_block();
        descend();
        return;
      }
      stack_.pop_back();
    }
    done_ = true;
  }

 private:
  struct Frame {
    std::size_t level;
    std::size_t offset;
    bool reversed;
    std::size_t ordinal;
    std::size_t blocks;
  };

  void push(std::size_t level, std::size_t offset, bool reversed) {
    stack_.push_back(
        Frame{level, offset, reversed, 0, grammar_.block_count(level)});
    assert(level == 0 || stack_.back().blocks > 0);
  }

  void enter_current_block() {
    const Frame f = stack_.back();
    const std::size_t b = f.reversed ? f.blocks - 1 - f.ordinal : f.ordinal;
    const Block blk = grammar_.block(f.level, b);
    grammar_.write_prefix(
        std::span<value_type>(buffer_).subspan(f.offset, blk.prefix_len),
        f.offset, f.level, b);
    push(blk.child_level, f.offset + blk.prefix_len,
         f.reversed != blk.child_reversed);
  }

  void descend() {
    while (stack_.back().level != 0) enter_current_block();
  }

  Grammar grammar_;
  std::vector<value_type> buffer_;
  std::vector<Frame> stack_;
  std::uint64_t emitted_ = 0;
  bool done_ = false;
};

}  // namespace fibgray::detail
