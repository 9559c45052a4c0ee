#include "permbase/permutation.hpp"

#include <sstream>

#include "permbase/errors.hpp"

namespace permbase {

Permutation Permutation::identity(std::size_t degree) {
  if (degree == 0 || degree > kMaxDegree)
    throw InvalidArgument("permutation degree must be in [1, " + std::to_string(kMaxDegree) +
                          "], got " + std::to_string(degree));
  std::vector<Point> images(degree);
  for (std::size_t i = 0; i < degree; ++i)
    images[i] = static_cast<Point>(i);
  return Permutation(std::move(images));
}

Permutation Permutation::from_images(std::span<const unsigned> images) {
  const std::size_t n = images.size();
  if (n == 0 || n > kMaxDegree)
    throw InvalidArgument("permutation degree must be in [1, " + std::to_string(kMaxDegree) +
                          "], got " + std::to_string(n));
  std::vector<bool> seen(n, false);
  std::vector<Point> packed(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (images[i] >= n || seen[images[i]])
      throw InvalidArgument("image array is not a bijection of {0.." + std::to_string(n - 1) +
                            "}");
    seen[images[i]] = true;
    packed[i] = static_cast<Point>(images[i]);
  }
  return Permutation(std::move(packed));
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<unsigned>>& cycles) {
  Permutation result = identity(degree);
  for (const auto& cycle : cycles) {
    std::vector<unsigned> images(degree);
    for (std::size_t i = 0; i < degree; ++i)
      images[i] = static_cast<unsigned>(i);
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (cycle[i] >= degree)
        throw InvalidArgument("cycle point out of range");
      images[cycle[i]] = cycle[(i + 1) % cycle.size()];
    }
    result = result * from_images(images);
  }
  return result;
}

Permutation Permutation::operator*(const Permutation& other) const {
  if (other.degree() != degree())
    throw InvalidArgument("cannot compose permutations of different degree");
  std::vector<Point> out(degree());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = other.images_[images_[i]];
  return Permutation(std::move(out));
}

Permutation Permutation::inverse() const {
  std::vector<Point> out(degree());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[images_[i]] = static_cast<Point>(i);
  return Permutation(std::move(out));
}

bool Permutation::is_identity() const { return support_size(*this) == 0; }

Permutation Permutation::relabelled(const Permutation& sigma) const {
  return sigma.inverse() * *this * sigma;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  std::vector<bool> done(degree(), false);
  bool any = false;
  for (std::size_t start = 0; start < degree(); ++start) {
    if (done[start] || images_[start] == start)
      continue;
    any = true;
    os << "(";
    std::size_t x = start;
    bool first = true;
    while (!done[x]) {
      done[x] = true;
      if (!first)
        os << ",";
      first = false;
      os << x;
      x = images_[x];
    }
    os << ")";
  }
  return any ? os.str() : "()";
}

std::size_t support_size(const Permutation& g) {
  std::size_t moved = 0;
  const auto images = g.images();
  for (std::size_t i = 0; i < images.size(); ++i)
    moved += images[i] != i;
  return moved;
}

} // namespace permbase
