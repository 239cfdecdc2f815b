#ifndef SRW_ELEMENT_SET_HPP
#define SRW_ELEMENT_SET_HPP

#include <bitset>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace srw {

/// Index of a carrier element. Carriers are always {0, ..., n-1} with n <= 255.
using Element = std::uint8_t;

inline constexpr std::size_t kMaxOrder = 255;

/// Subset of a carrier, stored as a fixed 256-bit mask.
class ElementSet {
 public:
  ElementSet() = default;
  ElementSet(std::initializer_list<Element> elems) {
    for (Element e : elems) bits_.set(e);
  }

  static ElementSet all(std::size_t n) {
    ElementSet s;
    for (std::size_t i = 0; i < n; ++i) s.bits_.set(i);
    return s;
  }

  template <typename Range>
  static ElementSet from_range(const Range& r) {
    ElementSet s;
    for (auto e : r) s.insert(static_cast<Element>(e));
    return s;
  }

  bool contains(Element e) const { return bits_.test(e); }
  void insert(Element e) { bits_.set(e); }
  void erase(Element e) { bits_.reset(e); }

  std::size_t size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }

  bool subset_of(const ElementSet& other) const { return (bits_ & ~other.bits_).none(); }
  bool proper_subset_of(const ElementSet& other) const {
    return subset_of(other) && bits_ != other.bits_;
  }
  bool intersects(const ElementSet& other) const { return (bits_ & other.bits_).any(); }

  /// Members, ascending.
  std::vector<Element> elements() const {
    std::vector<Element> out;
    out.reserve(size());
    for_each([&](Element e) { out.push_back(e); });
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = bits_._Find_first(); i < bits_.size(); i = bits_._Find_next(i))
      f(static_cast<Element>(i));
  }

  /// Smallest member; undefined on the empty set.
  Element first() const { return static_cast<Element>(bits_._Find_first()); }

  ElementSet complement_in(std::size_t n) const {
    ElementSet s = all(n);
    s.bits_ &= ~bits_;
    return s;
  }

  ElementSet& operator|=(const ElementSet& o) { bits_ |= o.bits_; return *this; }
  ElementSet& operator&=(const ElementSet& o) { bits_ &= o.bits_; return *this; }
  ElementSet& operator-=(const ElementSet& o) { bits_ &= ~o.bits_; return *this; }

  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }
  friend bool operator==(const ElementSet& a, const ElementSet& b) = default;

  /// Ascending by cardinality, then by the mask read as an unsigned integer
  /// with element 0 as the least significant bit.
  friend bool canonical_less(const ElementSet& a, const ElementSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 256; i-- > 0;) {
      if (a.bits_.test(i) != b.bits_.test(i)) return b.bits_.test(i);
    }
    return false;
  }

  struct Hash {
    std::size_t operator()(const ElementSet& s) const noexcept {
      return std::hash<std::bitset<256>>{}(s.bits_);
    }
  };

 private:
  std::bitset<256> bits_;
};

}  // namespace srw

#endif  // SRW_ELEMENT_SET_HPP
