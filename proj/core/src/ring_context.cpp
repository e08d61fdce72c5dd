#include "fglocus/ring_context.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

#include "fglocus/error.hpp"

namespace fglocus {

bool RingContext::is_valid_name(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front())))
    return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

RingPtr RingContext::make(std::vector<std::string> names) {
  if (names.empty())
    throw InvalidArgument("a ring needs at least one variable");
  if (names.size() > kMaxVariables)
    throw InvalidArgument("at most " + std::to_string(kMaxVariables) + " variables are supported");
  std::unordered_set<std::string> seen;
  for (const auto& name : names) {
    if (!is_valid_name(name))
      throw InvalidArgument("invalid variable name '" + name + "'");
    if (!seen.insert(name).second)
      throw InvalidArgument("duplicate variable name '" + name + "'");
  }
  return RingPtr(new RingContext(std::move(names)));
}

RingPtr RingContext::indexed(std::size_t n, std::string_view stem) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 1; i <= n; ++i)
    names.push_back(std::string(stem) + "_" + std::to_string(i));
  return make(std::move(names));
}

std::optional<std::size_t> RingContext::index_of(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end())
    return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

void require_same_ring(const RingContext& a, const RingContext& b) {
  if (&a != &b && !(a == b))
    throw ContextMismatch();
}

} // namespace fglocus
