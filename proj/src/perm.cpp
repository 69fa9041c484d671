#include "brt/perm.hpp"

#include <algorithm>
#include <string>

#include "brt/error.hpp"

namespace brt {

Perm::Perm(std::vector<Label> images) : images_(std::move(images)) {
  const auto n = static_cast<Label>(images_.size());
  std::vector<bool> hit(images_.size(), false);
  for (Label image : images_) {
    if (image < 1 || image > n || hit[static_cast<std::size_t>(image - 1)]) {
      throw Error(ErrorCode::NotBijection, "image " + std::to_string(image) + " repeated or out of range");
    }
    hit[static_cast<std::size_t>(image - 1)] = true;
  }
}

Perm Perm::identity(std::size_t size) {
  std::vector<Label> images(size);
  for (std::size_t i = 0; i < size; ++i) images[i] = static_cast<Label>(i + 1);
  return Perm(std::move(images));
}

Perm Perm::from_cycles(std::span<const Cycle> cycles, std::size_t size) {
  std::vector<Label> images(size, 0);
  for (std::size_t i = 0; i < size; ++i) images[i] = static_cast<Label>(i + 1);
  std::vector<bool> seen(size, false);
  for (const auto& cycle : cycles) {
    for (std::size_t j = 0; j < cycle.size(); ++j) {
      const Label from = cycle[j];
      if (from < 1 || static_cast<std::size_t>(from) > size || seen[static_cast<std::size_t>(from - 1)]) {
        throw Error(ErrorCode::NotPartition, "label " + std::to_string(from) + " repeated or out of range");
      }
      seen[static_cast<std::size_t>(from - 1)] = true;
      images[static_cast<std::size_t>(from - 1)] = cycle[(j + 1) % cycle.size()];
    }
  }
  return Perm(std::move(images));
}

Perm Perm::inverse() const {
  std::vector<Label> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    inv[static_cast<std::size_t>(images_[i] - 1)] = static_cast<Label>(i + 1);
  }
  return Perm(std::move(inv));
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::InvalidArgument, "composing permutations of different sizes");
  std::vector<Label> images(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) images[i] = a(b(static_cast<Label>(i + 1)));
  return Perm(std::move(images));
}

std::vector<Cycle> Perm::cycles() const {
  std::vector<Cycle> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    Cycle cycle;
    for (Label i = static_cast<Label>(start + 1); !seen[static_cast<std::size_t>(i - 1)]; i = (*this)(i)) {
      seen[static_cast<std::size_t>(i - 1)] = true;
      cycle.push_back(i);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::size_t Perm::cycle_count() const {
  std::size_t count = 0;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    ++count;
    for (Label i = static_cast<Label>(start + 1); !seen[static_cast<std::size_t>(i - 1)]; i = (*this)(i)) {
      seen[static_cast<std::size_t>(i - 1)] = true;
    }
  }
  return count;
}

Cycle rotate_to(const Cycle& cycle, Label first) {
  auto it = std::find(cycle.begin(), cycle.end(), first);
  if (it == cycle.end()) throw Error(ErrorCode::InvalidArgument, "label " + std::to_string(first) + " not in cycle");
  Cycle out(it, cycle.end());
  out.insert(out.end(), cycle.begin(), it);
  return out;
}

Cycle canonical_cycle(const Cycle& cycle) {
  if (cycle.empty()) return cycle;
  return rotate_to(cycle, *std::min_element(cycle.begin(), cycle.end()));
}

}  // namespace brt
