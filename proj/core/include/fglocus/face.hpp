#ifndef FGLOCUS_FACE_HPP
#define FGLOCUS_FACE_HPP

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace fglocus {

/// A subset of the vertex set {0, ..., n-1}, stored as a bitmask (n <= 30).
///
/// Faces double as variable sets: supports of monomials and ideals, the
/// inverted variables of a monomial localization, ground sets of complexes.
/// Vertices are 0-based here; text I/O is 1-based.
class Face {
public:
  using Bits = std::uint32_t;

  constexpr Face() = default;
  constexpr explicit Face(Bits bits) : bits_(bits) {}
  Face(std::initializer_list<std::size_t> vertices);

  static Face from_vertices(const std::vector<std::size_t>& vertices);
  static constexpr Face full(std::size_t n) {
    return Face(n >= 32 ? ~Bits{0} : ((Bits{1} << n) - 1));
  }

  constexpr Bits bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(std::size_t v) const { return (bits_ >> v) & 1U; }
  constexpr bool is_subset_of(Face other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(Face other) const { return (bits_ & other.bits_) != 0; }

  constexpr Face operator|(Face o) const { return Face(bits_ | o.bits_); }
  constexpr Face operator&(Face o) const { return Face(bits_ & o.bits_); }
  /// Set difference.
  constexpr Face operator-(Face o) const { return Face(bits_ & ~o.bits_); }
  constexpr Face with(std::size_t v) const { return Face(bits_ | (Bits{1} << v)); }
  constexpr Face without(std::size_t v) const { return Face(bits_ & ~(Bits{1} << v)); }

  /// Sorted 0-based vertex list.
  std::vector<std::size_t> vertices() const;

  /// "{1,3}" with 1-based labels; "{}" for the empty face.
  std::string to_string() const;

  constexpr bool operator==(const Face&) const = default;

  /// Canonical order: by cardinality, then lexicographic on sorted vertex lists.
  constexpr std::strong_ordering operator<=>(const Face& o) const {
    if (auto c = size() <=> o.size(); c != 0)
      return c;
    Bits diff = bits_ ^ o.bits_;
    if (diff == 0)
      return std::strong_ordering::equal;
    // The face owning the smallest differing vertex lists it earlier.
    Bits lowest = diff & (~diff + 1);
    return (bits_ & lowest) ? std::strong_ordering::less : std::strong_ordering::greater;
  }

private:
  Bits bits_ = 0;
};

} // namespace fglocus

#endif
