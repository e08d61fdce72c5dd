#ifndef FGLOCUS_RING_CONTEXT_HPP
#define FGLOCUS_RING_CONTEXT_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fglocus {

class RingContext;
using RingPtr = std::shared_ptr<const RingContext>;

/// The polynomial ring k[x_1, ..., x_n]: a variable count and display names.
///
/// Contexts are shared by pointer; two contexts are compatible when they have
/// the same variable names in the same order.
class RingContext {
public:
  static constexpr std::size_t kMaxVariables = 30;

  /// Throws InvalidArgument on a bad name list (empty, duplicates, too long).
  static RingPtr make(std::vector<std::string> names);

  /// x_1, ..., x_n.
  static RingPtr indexed(std::size_t n, std::string_view stem = "x");

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  bool operator==(const RingContext& other) const { return names_ == other.names_; }

  static bool is_valid_name(std::string_view name);

private:
  explicit RingContext(std::vector<std::string> names) : names_(std::move(names)) {}

  std::vector<std::string> names_;
};

/// Throws ContextMismatch unless both contexts describe the same ring.
void require_same_ring(const RingContext& a, const RingContext& b);

} // namespace fglocus

#endif
