#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "cotree.hpp"
#include "matching.hpp"
#include "ratio.hpp"

namespace capri {

/// Table l(k) = minimum |N(I)| over independent sets I of size k, for
/// 0 <= k <= alpha(G).  l(0) = 0; the table is nondecreasing and
/// l(k) <= n - k throughout.
struct NeighborhoodProfile {
  std::vector<std::int64_t> table;
  int vertex_count = 0;

  std::int64_t alpha() const { return static_cast<std::int64_t>(table.size()) - 1; }
};

namespace detail {

inline constexpr std::int64_t kNoSet = std::numeric_limits<std::int64_t>::max() / 4;

/// Union node: independent sets split across the parts, neighborhoods add.
inline std::vector<std::int64_t> union_fold(const std::vector<std::int64_t>& a,
                                            const std::vector<std::int64_t>& b) {
  std::vector<std::int64_t> out(a.size() + b.size() - 1, kNoSet);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = std::min(out[i + j], a[i] + b[j]);
  return out;
}

/// Join node: a nonempty independent set sits inside one side and sees the
/// whole other side.  k beyond a side's own alpha contributes nothing.
inline std::vector<std::int64_t> join_fold(const std::vector<std::int64_t>& a, std::int64_t na,
                                           const std::vector<std::int64_t>& b, std::int64_t nb) {
  std::vector<std::int64_t> out(std::max(a.size(), b.size()), kNoSet);
  out[0] = 0;
  for (std::size_t k = 1; k < out.size(); ++k) {
    if (k < a.size()) out[k] = std::min(out[k], a[k] + nb);
    if (k < b.size()) out[k] = std::min(out[k], b[k] + na);
  }
  return out;
}

}  // namespace detail

/// Neighborhood profile of a cograph, computed on its cotree in one
/// bottom-up pass.  Folding children left to right is associative, so child
/// order does not matter.
inline NeighborhoodProfile neighborhood_profile(const Cotree& t) {
  const int nn = t.node_count();
  std::vector<std::vector<std::int64_t>> tab(static_cast<std::size_t>(nn));
  for (int id = 0; id < nn; ++id) {
    const auto& nd = t.node(id);
    if (nd.label == Cotree::Label::Leaf) {
      tab[id] = {0, 0};
    } else if (nd.label == Cotree::Label::Union) {
      tab[id] = tab[nd.children[0]];
      for (std::size_t i = 1; i < nd.children.size(); ++i)
        tab[id] = detail::union_fold(tab[id], tab[nd.children[i]]);
    } else {
      tab[id] = tab[nd.children[0]];
      std::int64_t acc = t.node(nd.children[0]).subtree_size;
      for (std::size_t i = 1; i < nd.children.size(); ++i) {
        const std::int64_t nb = t.node(nd.children[i]).subtree_size;
        tab[id] = detail::join_fold(tab[id], acc, tab[nd.children[i]], nb);
        acc += nb;
      }
    }
  }
  return NeighborhoodProfile{tab[static_cast<std::size_t>(t.root())], t.vertex_count()};
}

struct ARatioResult {
  Ratio value;
  std::int64_t argmax_k = 0;  // smallest k attaining the maximum
};

/// a(G) = max over nonempty independent sets of |I| / (|I| + |N(I)|),
/// evaluated on the profile table with exact rational comparisons.
inline ARatioResult a_ratio(const NeighborhoodProfile& p) {
  if (p.table.size() < 2 || p.table[0] != 0)
    throw std::invalid_argument("profile must start with l(0)=0 and cover k=1");
  ARatioResult best{Ratio(1, 1 + p.table[1]), 1};
  for (std::int64_t k = 2; k <= p.alpha(); ++k) {
    const Ratio r(k, k + p.table[static_cast<std::size_t>(k)]);
    if (r > best.value) best = {r, k};
  }
  return best;
}

/// Tensor capacity value: exactly 1, or a ratio that is at most 1/2.
class CapacityValue {
public:
  static CapacityValue one() {
    CapacityValue v;
    v.is_one_ = true;
    return v;
  }

  static CapacityValue from_ratio(const Ratio& r) {
    if (r > half()) throw std::invalid_argument("capacity ratio must be at most 1/2");
    CapacityValue v;
    v.ratio_ = r;
    return v;
  }

  bool is_one() const { return is_one_; }

  const Ratio& ratio() const {
    if (is_one_) throw std::logic_error("capacity is 1, not a ratio");
    return ratio_;
  }

  std::string str() const { return is_one_ ? "1" : ratio_.str(); }

  friend bool operator==(const CapacityValue&, const CapacityValue&) = default;

  friend bool operator<(const CapacityValue& a, const CapacityValue& b) {
    if (a.is_one_) return false;
    if (b.is_one_) return true;
    return a.ratio_ < b.ratio_;
  }

private:
  bool is_one_ = false;
  Ratio ratio_;
};

/// Dichotomy for a*(G): above 1/2 the capacity snaps to 1, otherwise it
/// equals a(G) itself.
inline CapacityValue a_star(const Ratio& a) {
  if (a.num() == 0 || a > Ratio(1, 1))
    throw std::invalid_argument("a(G) must lie in (0, 1]");
  return a > half() ? CapacityValue::one() : CapacityValue::from_ratio(a);
}

inline CapacityValue tensor_capacity_cograph(const Cotree& t) {
  return a_star(a_ratio(neighborhood_profile(t)).value);
}

enum class CapacityClass { One, AtMostHalf };

inline const char* capacity_class_name(CapacityClass c) {
  return c == CapacityClass::One ? "ONE" : "AT_MOST_HALF";
}

/// Capacity dichotomy for an arbitrary graph: the capacity is 1 exactly when
/// G has no fractional perfect matching, and at most 1/2 otherwise.
inline CapacityClass capacity_trichotomy(const Graph& g) {
  return has_fractional_perfect_matching(g) ? CapacityClass::AtMostHalf : CapacityClass::One;
}

struct OutOfRegimeError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Binding number from a(G) via b = (1 - a)/a; meaningful only when
/// a(G) > 1/2.
inline Ratio binding_from_a(const Ratio& a) {
  if (!(a > half())) throw OutOfRegimeError("binding identity needs a(G) > 1/2");
  return Ratio(a.den() - a.num(), a.num());
}

}  // namespace capri
