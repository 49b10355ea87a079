#include "transversal/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace transversal {

Perm Perm::identity(std::uint32_t degree) {
  Perm p;
  p.images_.resize(degree);
  std::iota(p.images_.begin(), p.images_.end(), std::uint32_t{0});
  return p;
}

Perm Perm::from_images(std::span<const std::uint32_t> images) {
  const auto r = static_cast<std::uint32_t>(images.size());
  std::vector<bool> seen(r, false);
  Perm p;
  p.images_.reserve(r);
  for (std::uint32_t img : images) {
    if (img < 1 || img > r) {
      throw std::invalid_argument("image " + std::to_string(img) + " outside {1.." +
                                  std::to_string(r) + "}");
    }
    if (seen[img - 1]) throw std::invalid_argument("not a bijection");
    seen[img - 1] = true;
    p.images_.push_back(img - 1);
  }
  return p;
}

Perm Perm::from_images(std::initializer_list<std::uint32_t> images) {
  return from_images(std::span<const std::uint32_t>(images.begin(), images.size()));
}

Perm Perm::from_cycles(std::uint32_t degree,
                       std::initializer_list<std::initializer_list<std::uint32_t>> cycles) {
  Perm result = identity(degree);
  for (const auto& cycle : cycles) {
    Perm c = identity(degree);
    std::vector<std::uint32_t> pts(cycle);
    for (std::size_t k = 0; k < pts.size(); ++k) {
      const std::uint32_t from = pts[k];
      const std::uint32_t to = pts[(k + 1) % pts.size()];
      if (from < 1 || from > degree) throw std::invalid_argument("cycle point out of range");
      c.images_[from - 1] = to - 1;
    }
    // Validates that the cycle had no repeated point.
    c = from_images(c.images());
    result = compose(result, c);
  }
  return result;
}

std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("bounded_draw: empty range");
  const std::uint64_t limit = std::mt19937_64::max() - (std::mt19937_64::max() % bound);
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

Perm Perm::random(std::uint32_t degree, std::mt19937_64& rng) {
  Perm p = identity(degree);
  for (std::uint32_t i = degree; i > 1; --i) {
    const auto j = static_cast<std::uint32_t>(bounded_draw(rng, i));
    std::swap(p.images_[i - 1], p.images_[j]);
  }
  return p;
}

std::uint32_t Perm::apply(std::uint32_t i) const {
  if (i < 1 || i > degree()) throw std::out_of_range("point outside {1..r}");
  return images_[i - 1] + 1;
}

std::vector<std::uint32_t> Perm::fixed_points() const {
  std::vector<std::uint32_t> fixed;
  for (std::uint32_t i = 0; i < degree(); ++i) {
    if (images_[i] == i) fixed.push_back(i + 1);
  }
  return fixed;
}

bool Perm::is_identity() const {
  for (std::uint32_t i = 0; i < degree(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

std::string Perm::to_string() const {
  std::string s = "[";
  for (std::uint32_t i = 0; i < degree(); ++i) {
    if (i) s += ',';
    s += std::to_string(images_[i] + 1);
  }
  return s + "]";
}

std::vector<std::uint32_t> Perm::images() const {
  std::vector<std::uint32_t> out(images_);
  for (auto& x : out) ++x;
  return out;
}

Perm compose(const Perm& first, const Perm& second) {
  if (first.degree() != second.degree()) {
    throw std::invalid_argument("compose: permutations of different degree");
  }
  std::vector<std::uint32_t> images(first.degree());
  for (std::uint32_t i = 0; i < first.degree(); ++i) {
    images[i] = second.image0(first.image0(i)) + 1;
  }
  return Perm::from_images(images);
}

Perm inverse(const Perm& s) {
  std::vector<std::uint32_t> images(s.degree());
  for (std::uint32_t i = 0; i < s.degree(); ++i) images[s.image0(i)] = i + 1;
  return Perm::from_images(images);
}

}  // namespace transversal
