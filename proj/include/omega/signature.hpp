#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace omega {

using VarId = std::uint32_t;
using OpId = std::uint32_t;

struct OperatorDecl {
  std::string name;
  std::uint32_t arity = 1;

  friend bool operator==(const OperatorDecl&, const OperatorDecl&) = default;
};

// Variables and operators in declaration order. Earlier declarations are
// greater: with variables "x,y,z" we have x > y > z, and the same for
// operators.
class Signature {
 public:
  Signature() = default;
  Signature(std::vector<std::string> variables, std::vector<OperatorDecl> operators);

  // Parses "x,y,z" and "P:1,D:1" style lists.
  static Signature from_lists(std::string_view variables, std::string_view operators);

  const std::vector<std::string>& variables() const { return variables_; }
  const std::vector<OperatorDecl>& operators() const { return operators_; }
  std::size_t variable_count() const { return variables_.size(); }
  std::size_t operator_count() const { return operators_.size(); }

  std::optional<VarId> find_variable(std::string_view name) const;
  std::optional<OpId> find_operator(std::string_view name) const;
  const std::string& variable_name(VarId id) const { return variables_.at(id); }
  const OperatorDecl& op(OpId id) const { return operators_.at(id); }

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::vector<std::string> variables_;
  std::vector<OperatorDecl> operators_;
};

}  // namespace omega
