#include "fglocus/face.hpp"

#include "fglocus/error.hpp"

namespace fglocus {

namespace {
constexpr std::size_t kBitCapacity = 32;
}

Face::Face(std::initializer_list<std::size_t> vertices) {
  for (auto v : vertices) {
    if (v >= kBitCapacity)
      throw InvalidArgument("vertex index out of range");
    bits_ |= Bits{1} << v;
  }
}

Face Face::from_vertices(const std::vector<std::size_t>& vertices) {
  Face f;
  for (auto v : vertices) {
    if (v >= kBitCapacity)
      throw InvalidArgument("vertex index out of range");
    f = f.with(v);
  }
  return f;
}

std::vector<std::size_t> Face::vertices() const {
  std::vector<std::size_t> out;
  out.reserve(size());
  for (Bits rest = bits_; rest != 0; rest &= rest - 1)
    out.push_back(static_cast<std::size_t>(std::countr_zero(rest)));
  return out;
}

std::string Face::to_string() const {
  std::string s = "{";
  bool first = true;
  for (auto v : vertices()) {
    if (!first)
      s += ',';
    s += std::to_string(v + 1);
    first = false;
  }
  return s + "}";
}

} // namespace fglocus
