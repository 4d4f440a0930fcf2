#include "omega/signature.hpp"

#include <cctype>
#include <set>

#include "omega/error.hpp"

namespace omega {

namespace {

bool valid_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

std::vector<std::string> split_list(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur.push_back(c);
    }
  }
  if (!cur.empty() || !out.empty()) out.push_back(cur);
  return out;
}

}  // namespace

Signature::Signature(std::vector<std::string> variables, std::vector<OperatorDecl> operators)
    : variables_(std::move(variables)), operators_(std::move(operators)) {
  std::set<std::string> seen;
  for (const auto& v : variables_) {
    if (!valid_identifier(v)) throw SignatureError("invalid variable name '" + v + "'");
    if (v == "lam") throw SignatureError("'lam' is reserved for the weight");
    if (!seen.insert(v).second) throw SignatureError("duplicate name '" + v + "'");
  }
  for (const auto& o : operators_) {
    if (!valid_identifier(o.name)) throw SignatureError("invalid operator name '" + o.name + "'");
    if (o.name == "lam") throw SignatureError("'lam' is reserved for the weight");
    if (o.arity < 1) throw SignatureError("operator '" + o.name + "' must have positive arity");
    if (!seen.insert(o.name).second) throw SignatureError("duplicate name '" + o.name + "'");
  }
}

Signature Signature::from_lists(std::string_view variables, std::string_view operators) {
  std::vector<OperatorDecl> ops;
  for (const auto& item : split_list(operators)) {
    auto colon = item.find(':');
    OperatorDecl decl;
    decl.name = item.substr(0, colon);
    if (colon != std::string::npos) {
      const std::string arity = item.substr(colon + 1);
      if (arity.empty() || arity.find_first_not_of("0123456789") != std::string::npos)
        throw SignatureError("bad arity in '" + item + "'");
      decl.arity = static_cast<std::uint32_t>(std::stoul(arity));
    }
    ops.push_back(std::move(decl));
  }
  return Signature(split_list(variables), std::move(ops));
}

std::optional<VarId> Signature::find_variable(std::string_view name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i)
    if (variables_[i] == name) return static_cast<VarId>(i);
  return std::nullopt;
}

std::optional<OpId> Signature::find_operator(std::string_view name) const {
  for (std::size_t i = 0; i < operators_.size(); ++i)
    if (operators_[i].name == name) return static_cast<OpId>(i);
  return std::nullopt;
}

}  // namespace omega
