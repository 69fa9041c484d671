#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace brt {

/// Half-edge labels are 1-based throughout the public API.
using Label = int;
using Cycle = std::vector<Label>;

/// A bijection on {1, ..., size}.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<Label> images);

  static Perm identity(std::size_t size);
  /// Labels not mentioned in any cycle are fixed points.
  static Perm from_cycles(std::span<const Cycle> cycles, std::size_t size);

  std::size_t size() const { return images_.size(); }
  Label operator()(Label i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<Label>& images() const { return images_; }

  Perm inverse() const;
  /// (a * b)(i) = a(b(i)): the right factor is applied first.
  friend Perm operator*(const Perm& a, const Perm& b);
  friend bool operator==(const Perm&, const Perm&) = default;

  /// Cycles, each rotated to start at its minimum label, ordered by that minimum.
  std::vector<Cycle> cycles() const;
  std::size_t cycle_count() const;

 private:
  std::vector<Label> images_;
};

/// Rotates a cycle so that it starts at `first` (which must occur in it).
Cycle rotate_to(const Cycle& cycle, Label first);
/// Rotates a cycle so that it starts at its minimum label.
Cycle canonical_cycle(const Cycle& cycle);

}  // namespace brt
