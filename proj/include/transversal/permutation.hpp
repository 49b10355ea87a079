#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace transversal {

/// Element of Sym(r) acting on the right on {1..r}.
///
/// Composition is written left to right: i^(st) = (i^s)^t, so `compose(s, t)`
/// applies s first. All points are 1-indexed at the API; storage is 0-indexed.
class Perm {
 public:
  Perm() = default;

  static Perm identity(std::uint32_t degree);
  /// One-line form, 1-indexed: images[i-1] = i^s. Throws std::invalid_argument
  /// if the sequence is not a bijection of {1..r}.
  static Perm from_images(std::span<const std::uint32_t> images);
  static Perm from_images(std::initializer_list<std::uint32_t> images);
  /// Product of disjoint or overlapping cycles, applied left to right.
  static Perm from_cycles(std::uint32_t degree,
                          std::initializer_list<std::initializer_list<std::uint32_t>> cycles);
  /// Uniform random element; Fisher-Yates with an explicit bounded draw so the
  /// result depends only on the engine state, not on the standard library.
  static Perm random(std::uint32_t degree, std::mt19937_64& rng);

  std::uint32_t degree() const { return static_cast<std::uint32_t>(images_.size()); }

  /// i^s for 1 <= i <= r; throws std::out_of_range otherwise.
  std::uint32_t apply(std::uint32_t i) const;
  /// 0-indexed image without checks, for inner loops.
  std::uint32_t image0(std::uint32_t i) const { return images_[i]; }

  std::vector<std::uint32_t> fixed_points() const;
  bool is_identity() const;

  /// One-line form `[2,1,3]`.
  std::string to_string() const;
  /// 1-indexed images.
  std::vector<std::uint32_t> images() const;

  bool operator==(const Perm&) const = default;
  auto operator<=>(const Perm&) const = default;

 private:
  std::vector<std::uint32_t> images_;
};

/// Left factor applied first. Throws std::invalid_argument on degree mismatch.
Perm compose(const Perm& first, const Perm& second);
Perm inverse(const Perm& s);

/// Uniform integer in [0, bound) by rejection; bound > 0.
std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t bound);

}  // namespace transversal
