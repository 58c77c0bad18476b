#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace varembed {

// Ordered list of variable names defining a polynomial ring Q[v0, v1, ...].
// Immutable; shared between polynomials via shared_ptr.
class VarContext {
public:
  explicit VarContext(std::vector<std::string> names);

  static std::shared_ptr<const VarContext> make(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::uint32_t> index_of(std::string_view name) const;

  bool same_names(const VarContext& other) const { return names_ == other.names_; }
  // True if this context's variables form an initial segment of `other`.
  bool prefix_of(const VarContext& other) const;

private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::uint32_t> index_;
};

using VarContextPtr = std::shared_ptr<const VarContext>;

}  // namespace varembed
