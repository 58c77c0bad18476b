#include "var_context.hpp"

#include "errors.hpp"

namespace varembed {

VarContext::VarContext(std::vector<std::string> names) : names_(std::move(names)) {
  index_.reserve(names_.size());
  for (std::uint32_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty())
      throw Error(Errc::InvalidArgument, "empty variable name");
    if (!index_.emplace(names_[i], i).second)
      throw Error(Errc::InvalidArgument, "duplicate variable name '" + names_[i] + "'");
  }
}

std::shared_ptr<const VarContext> VarContext::make(std::vector<std::string> names) {
  return std::make_shared<const VarContext>(std::move(names));
}

std::optional<std::uint32_t> VarContext::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool VarContext::prefix_of(const VarContext& other) const {
  if (size() > other.size()) return false;
  for (std::size_t i = 0; i < size(); ++i)
    if (names_[i] != other.names_[i]) return false;
  return true;
}

}  // namespace varembed
