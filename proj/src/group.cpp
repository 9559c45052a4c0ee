#include "permbase/group.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string_view>

#include "permbase/errors.hpp"

namespace permbase {

namespace {

std::string_view as_bytes(std::span<const Point> images) {
  return {reinterpret_cast<const char*>(images.data()), images.size()};
}

// Open-addressing set of element indices into a flat image array. A slot
// holds the upper 32 hash bits beside index + 1 (0 marks an empty slot), so
// probes that land on a different element rarely touch the image data.
class ClosureTable {
public:
  ClosureTable(const std::vector<Point>& data, std::size_t degree, std::size_t expected = 0)
      : data_(data), degree_(degree),
        slots_(std::bit_ceil(std::max<std::size_t>(1024, 2 * expected + 2)), 0) {}

  static std::uint64_t hash(std::span<const Point> images) {
    return std::hash<std::string_view>{}(as_bytes(images));
  }

  void prefetch(std::uint64_t h) const { __builtin_prefetch(&slots_[h & (slots_.size() - 1)]); }

  // Returns true if found; otherwise reports the empty slot to insert into.
  bool find(std::span<const Point> images, std::uint64_t h, std::size_t& slot) const {
    const std::size_t mask = slots_.size() - 1;
    const std::uint64_t tag = h >> 32;
    slot = h & mask;
    while (slots_[slot] != 0) {
      const std::uint64_t entry = slots_[slot];
      if (entry >> 32 == tag) {
        const std::size_t idx = (entry & 0xffffffffu) - 1;
        if (std::memcmp(data_.data() + idx * degree_, images.data(), degree_) == 0)
          return true;
      }
      slot = (slot + 1) & mask;
    }
    return false;
  }

  void insert_at(std::size_t slot, std::uint32_t index, std::uint64_t h) {
    slots_[slot] = (h >> 32 << 32) | (std::uint64_t{index} + 1);
    if (++count_ * 2 > slots_.size())
      grow();
  }

private:
  void grow() {
    std::vector<std::uint64_t> old;
    old.swap(slots_);
    slots_.assign(old.size() * 2, 0);
    const std::size_t mask = slots_.size() - 1;
    for (auto entry : old) {
      if (entry == 0)
        continue;
      const std::size_t idx = (entry & 0xffffffffu) - 1;
      std::size_t slot = hash({data_.data() + idx * degree_, degree_}) & mask;
      while (slots_[slot] != 0)
        slot = (slot + 1) & mask;
      slots_[slot] = entry;
    }
  }

  const std::vector<Point>& data_;
  std::size_t degree_;
  std::vector<std::uint64_t> slots_;
  std::size_t count_ = 0;
};

std::vector<std::uint32_t> filter_fixing(const ElementSet& elements,
                                         const std::vector<std::uint32_t>& subset,
                                         unsigned point) {
  std::vector<std::uint32_t> out;
  for (auto idx : subset)
    if (elements[idx][point] == point)
      out.push_back(idx);
  return out;
}

struct OrbitInfo {
  std::vector<unsigned> representatives; // smallest point of each nontrivial orbit
  std::vector<std::uint64_t> point_orbit_lengths; // one entry per moved point
};

OrbitInfo orbit_info(const ElementSet& elements, const std::vector<std::uint32_t>& subset) {
  const std::size_t n = elements.degree();
  std::vector<int> orbit_of(n, -1);
  std::vector<std::uint64_t> lengths;
  OrbitInfo info;
  for (unsigned pt = 0; pt < n; ++pt) {
    if (orbit_of[pt] >= 0)
      continue;
    const int id = static_cast<int>(lengths.size());
    std::uint64_t length = 0;
    for (auto idx : subset) {
      const unsigned q = elements[idx][pt];
      if (orbit_of[q] < 0) {
        orbit_of[q] = id;
        ++length;
      }
    }
    lengths.push_back(length);
    if (length > 1)
      info.representatives.push_back(pt);
  }
  for (unsigned pt = 0; pt < n; ++pt) {
    const auto length = lengths[static_cast<std::size_t>(orbit_of[pt])];
    if (length > 1)
      info.point_orbit_lengths.push_back(length);
  }
  std::sort(info.point_orbit_lengths.begin(), info.point_orbit_lengths.end(),
            std::greater<>());
  return info;
}

class BaseSearch {
public:
  BaseSearch(const ElementSet& elements, std::uint64_t node_cap)
      : elements_(elements), node_cap_(node_cap) {}

  // Looks for a base of size <= budget extending the current prefix, where
  // stabilizer is the pointwise stabilizer of that prefix.
  bool extend(const std::vector<std::uint32_t>& stabilizer, std::size_t budget) {
    if (stabilizer.size() == 1) {
      witness_ = prefix_;
      return true;
    }
    if (budget == 0)
      return false;
    if (++nodes_ > node_cap_)
      throw CapExceeded("base search exceeded node cap " + std::to_string(node_cap_));

    const OrbitInfo info = orbit_info(elements_, stabilizer);
    // Each further point shrinks the stabilizer by at most its current orbit length.
    std::uint64_t reach = 1;
    const std::uint64_t order = stabilizer.size();
    for (std::size_t i = 0; i < budget && i < info.point_orbit_lengths.size() && reach < order;
         ++i)
      reach = reach > order / info.point_orbit_lengths[i] ? order
                                                          : reach * info.point_orbit_lengths[i];
    if (reach < order)
      return false;

    // Points in one orbit of the stabilizer lead to conjugate subproblems.
    for (unsigned rep : info.representatives) {
      prefix_.push_back(rep);
      const bool found = extend(filter_fixing(elements_, stabilizer, rep), budget - 1);
      prefix_.pop_back();
      if (found)
        return true;
    }
    return false;
  }

  const std::vector<unsigned>& witness() const { return witness_; }
  std::uint64_t nodes() const { return nodes_; }

private:
  const ElementSet& elements_;
  std::uint64_t node_cap_;
  std::uint64_t nodes_ = 0;
  std::vector<unsigned> prefix_;
  std::vector<unsigned> witness_;
};

std::vector<unsigned> greedy_base(const ElementSet& elements,
                                  std::vector<std::uint32_t> stabilizer) {
  const std::size_t n = elements.degree();
  std::vector<unsigned> base;
  while (stabilizer.size() > 1) {
    std::vector<std::size_t> moved(n, 0);
    for (auto idx : stabilizer) {
      const auto g = elements[idx];
      for (std::size_t pt = 0; pt < n; ++pt)
        moved[pt] += g[pt] != pt;
    }
    const auto best = static_cast<unsigned>(std::max_element(moved.begin(), moved.end()) -
                                            moved.begin());
    base.push_back(best);
    stabilizer = filter_fixing(elements, stabilizer, best);
  }
  return base;
}

} // namespace

// ------------------------------------------------------------- ElementSet

ElementSet::ElementSet(std::size_t degree, std::vector<Point> packed) : degree_(degree) {
  if (degree == 0 || packed.size() % degree != 0)
    throw InvalidArgument("ElementSet: packed data does not match degree");
  const std::size_t count = packed.size() / degree;
  auto row = [&](std::uint32_t i) { return packed.data() + std::size_t{i} * degree; };

  // Sort on the first 16 image bytes packed big-endian, which agrees with
  // memcmp order, and fall back to memcmp only on ties.
  struct Key {
    std::uint64_t hi = 0;
    std::uint64_t lo = 0;
    std::uint32_t index = 0;
  };
  const std::size_t prefix = std::min<std::size_t>(degree, 16);
  std::vector<Key> keys(count);
  for (std::uint32_t i = 0; i < count; ++i) {
    const Point* r = row(i);
    Key& k = keys[i];
    for (std::size_t b = 0; b < 16; ++b) {
      const std::uint64_t byte = b < prefix ? r[b] : 0;
      (b < 8 ? k.hi : k.lo) |= byte << (8 * (7 - b % 8));
    }
    k.index = i;
  }
  std::sort(keys.begin(), keys.end(), [&](const Key& x, const Key& y) {
    if (x.hi != y.hi)
      return x.hi < y.hi;
    if (x.lo != y.lo)
      return x.lo < y.lo;
    return degree > 16 && std::memcmp(row(x.index) + 16, row(y.index) + 16, degree - 16) < 0;
  });
  std::vector<std::uint32_t> order(count);
  for (std::size_t i = 0; i < count; ++i)
    order[i] = keys[i].index;
  keys = {};
  order.erase(std::unique(order.begin(), order.end(),
                          [&](std::uint32_t x, std::uint32_t y) {
                            return std::memcmp(row(x), row(y), degree) == 0;
                          }),
              order.end());
  data_.resize(order.size() * degree);
  for (std::size_t i = 0; i < order.size(); ++i)
    std::memcpy(data_.data() + i * degree, row(order[i]), degree);
}

Permutation ElementSet::permutation(std::size_t i) const {
  const auto images = (*this)[i];
  std::vector<unsigned> unpacked(images.begin(), images.end());
  return Permutation::from_images(unpacked);
}

std::optional<std::size_t> ElementSet::index_of(std::span<const Point> images) const {
  if (images.size() != degree_)
    return std::nullopt;
  std::size_t lo = 0;
  std::size_t hi = size();
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    const int cmp = std::memcmp((*this)[mid].data(), images.data(), degree_);
    if (cmp == 0)
      return mid;
    if (cmp < 0)
      lo = mid + 1;
    else
      hi = mid;
  }
  return std::nullopt;
}

// --------------------------------------------------------- GeneratedGroup

GeneratedGroup::GeneratedGroup(std::size_t degree, std::vector<Permutation> generators,
                               std::optional<BigInt> known_order, std::string label)
    : degree_(degree), generators_(std::move(generators)),
      known_order_(std::move(known_order)), label_(std::move(label)) {
  if (degree == 0 || degree > kMaxDegree)
    throw InvalidArgument("group degree must be in [1, " + std::to_string(kMaxDegree) + "]");
  for (const auto& g : generators_)
    if (g.degree() != degree)
      throw InvalidArgument("generator " + g.to_string() + " has degree " +
                            std::to_string(g.degree()) + ", expected " + std::to_string(degree));
}

const ElementSet& GeneratedGroup::elements() const {
  if (!elements_)
    throw std::logic_error("GeneratedGroup::elements called before enumeration");
  return *elements_;
}

const ElementSet& enumerate_elements(GeneratedGroup& group, const EngineLimits& limits) {
  if (group.elements_)
    return *group.elements_;
  const std::size_t n = group.degree();
  if (group.known_order_ && *group.known_order_ > limits.element_cap)
    throw CapExceeded("group order " + to_string(*group.known_order_) +
                      " exceeds element cap " + std::to_string(limits.element_cap));

  const std::size_t expected =
      group.known_order_ ? static_cast<std::size_t>(*group.known_order_) : 0;
  std::vector<Point> data;
  data.reserve(expected * n);
  const Permutation id = Permutation::identity(n);
  data.insert(data.end(), id.images().begin(), id.images().end());
  ClosureTable table(data, n, expected);
  std::size_t slot = 0;
  const std::uint64_t id_hash = ClosureTable::hash(id.images());
  table.find(id.images(), id_hash, slot);
  table.insert_at(slot, 0, id_hash);

  // Elements are expanded in batches: all products of a batch are formed and
  // their slots prefetched before any lookup, which hides most of the memory
  // latency of the table. Insertion order stays that of plain BFS.
  constexpr std::size_t kBatch = 64;
  const std::size_t gens = group.generators_.size();
  std::vector<Point> candidates(kBatch * gens * n);
  std::vector<std::uint64_t> hashes(kBatch * gens);
  std::uint64_t count = 1;
  for (std::uint64_t i = 0; i < count;) {
    const std::uint64_t end = std::min<std::uint64_t>(count, i + kBatch);
    std::size_t k = 0;
    for (std::uint64_t e = i; e < end; ++e) {
      const Point* elem = data.data() + e * n;
      for (const auto& gen : group.generators_) {
        const auto gimg = gen.images();
        Point* out = candidates.data() + k * n;
        for (std::size_t x = 0; x < n; ++x)
          out[x] = gimg[elem[x]];
        hashes[k] = ClosureTable::hash({out, n});
        table.prefetch(hashes[k]);
        ++k;
      }
    }
    for (std::size_t j = 0; j < k; ++j) {
      const std::span<const Point> cand(candidates.data() + j * n, n);
      if (table.find(cand, hashes[j], slot))
        continue;
      if (count + 1 > limits.element_cap)
        throw CapExceeded("element cap " + std::to_string(limits.element_cap) +
                          " exceeded during closure (" + std::to_string(count) +
                          " elements found so far, " + std::to_string(i) + " expanded)");
      data.insert(data.end(), cand.begin(), cand.end());
      table.insert_at(slot, static_cast<std::uint32_t>(count), hashes[j]);
      ++count;
    }
    i = end;
  }

  auto set = std::make_shared<const ElementSet>(n, std::move(data));
  if (group.known_order_ && BigInt(set->size()) != *group.known_order_)
    throw VerificationFailure("closure of " + group.label_ + " has " +
                              std::to_string(set->size()) + " elements, expected " +
                              to_string(*group.known_order_));
  group.elements_ = std::move(set);
  return *group.elements_;
}

BigInt group_order(GeneratedGroup& group, const EngineLimits& limits) {
  if (group.is_enumerated())
    return BigInt(group.elements().size());
  if (group.known_order())
    return *group.known_order();
  return BigInt(enumerate_elements(group, limits).size());
}

std::vector<std::vector<unsigned>> orbits(const GeneratedGroup& group) {
  const std::size_t n = group.degree();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<unsigned>> out;
  for (unsigned start = 0; start < n; ++start) {
    if (seen[start])
      continue;
    std::vector<unsigned> orbit{start};
    seen[start] = true;
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (const auto& g : group.generators()) {
        const unsigned q = g(orbit[i]);
        if (!seen[q]) {
          seen[q] = true;
          orbit.push_back(q);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

bool is_transitive(const GeneratedGroup& group) { return orbits(group).size() == 1; }

std::vector<std::uint32_t> pointwise_stabilizer(const ElementSet& elements,
                                                std::span<const unsigned> points) {
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const auto g = elements[i];
    if (std::all_of(points.begin(), points.end(), [&](unsigned pt) { return g[pt] == pt; }))
      out.push_back(static_cast<std::uint32_t>(i));
  }
  return out;
}

bool is_base(const ElementSet& elements, std::span<const unsigned> points) {
  return pointwise_stabilizer(elements, points).size() == 1;
}

std::size_t minimal_degree_oracle(GeneratedGroup& group, const EngineLimits& limits) {
  const ElementSet& elements = enumerate_elements(group, limits);
  const std::size_t n = elements.degree();
  std::size_t best = n + 1;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const auto g = elements[i];
    std::size_t moved = 0;
    for (std::size_t pt = 0; pt < n; ++pt)
      moved += g[pt] != pt;
    if (moved > 0)
      best = std::min(best, moved);
  }
  if (best > n)
    throw InvalidArgument("minimal degree is undefined for the trivial group");
  return best;
}

BaseSearchResult minimum_base(GeneratedGroup& group, const EngineLimits& limits) {
  const ElementSet& elements = enumerate_elements(group, limits);
  std::vector<std::uint32_t> all(elements.size());
  std::iota(all.begin(), all.end(), 0u);

  BaseSearchResult result;
  result.greedy = greedy_base(elements, all);
  result.base = result.greedy;
  BaseSearch search(elements, limits.node_cap);
  while (!result.base.empty() && search.extend(all, result.base.size() - 1))
    result.base = search.witness();
  result.nodes = search.nodes();
  return result;
}

std::size_t base_size_oracle(GeneratedGroup& group, const EngineLimits& limits) {
  return minimum_base(group, limits).base.size();
}

std::vector<GeneratedGroup> orbit_factors(const GeneratedGroup& group) {
  const std::size_t n = group.degree();
  std::vector<std::size_t> orbit_of(n);
  const auto all = orbits(group);
  for (std::size_t o = 0; o < all.size(); ++o)
    for (auto pt : all[o])
      orbit_of[pt] = o;

  std::vector<std::vector<Permutation>> gens_of(all.size());
  for (const auto& g : group.generators()) {
    std::optional<std::size_t> home;
    for (unsigned pt = 0; pt < n; ++pt) {
      if (g(pt) == pt)
        continue;
      if (home && *home != orbit_of[pt])
        return {};
      home = orbit_of[pt];
    }
    if (!home)
      continue;
    std::vector<unsigned> images(all[*home].size());
    for (std::size_t i = 0; i < images.size(); ++i) {
      const auto& orbit = all[*home];
      images[i] = static_cast<unsigned>(
          std::lower_bound(orbit.begin(), orbit.end(), g(orbit[i])) - orbit.begin());
    }
    gens_of[*home].push_back(Permutation::from_images(images));
  }

  std::vector<GeneratedGroup> factors;
  for (std::size_t o = 0; o < all.size(); ++o)
    if (!gens_of[o].empty())
      factors.emplace_back(all[o].size(), std::move(gens_of[o]), std::nullopt,
                           group.label() + " on orbit of " + std::to_string(all[o].front()));
  if (factors.size() < 2)
    return {};
  return factors;
}

InvariantReport invariant_report(GeneratedGroup& group, const EngineLimits& limits) {
  InvariantReport report;
  report.n = group.degree();
  bool split = false;
  if (!group.is_enumerated()) {
    if (auto factors = orbit_factors(group); !factors.empty()) {
      split = true;
      // Direct product on disjoint supports: mu is the smallest factor mu,
      // a base is a union of factor bases, orders multiply.
      report.order = 1;
      report.mu = std::numeric_limits<std::uint64_t>::max();
      for (auto& factor : factors) {
        const InvariantReport part = invariant_report(factor, limits);
        report.order *= part.order;
        report.mu = std::min(report.mu, part.mu);
        report.base_size += part.base_size;
      }
      if (group.known_order() && *group.known_order() != report.order)
        throw VerificationFailure("orbit factors of " + group.label() + " have order " +
                                  to_string(report.order) + ", expected " +
                                  to_string(*group.known_order()));
    }
  }
  if (!split) {
    report.order = BigInt(enumerate_elements(group, limits).size());
    report.mu = minimal_degree_oracle(group, limits);
    report.base_size = base_size_oracle(group, limits);
  }
  report.product = report.mu * report.base_size;
  report.exponent = report.n > 1 ? std::log(static_cast<double>(report.product)) /
                                       std::log(static_cast<double>(report.n))
                                 : 0.0;
  report.transitive = is_transitive(group);
  return report;
}

} // namespace permbase
