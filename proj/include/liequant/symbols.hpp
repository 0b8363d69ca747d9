#ifndef LIEQUANT_SYMBOLS_HPP
#define LIEQUANT_SYMBOLS_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace liequant {

enum class SymbolKind {
    Coordinate, ///< group coordinate
    Parameter,  ///< formal parameter (m, hbar, omega, ...)
    Aux,        ///< adjoined square root: s with s^2 = defining polynomial
    Phase       ///< additive phase exponent of the U(1) fiber
};

struct SymbolInfo {
    std::string name;
    SymbolKind kind = SymbolKind::Coordinate;
    bool positive = false;
    bool nonzero = false;
};

/// Ordered symbol universe shared by all expressions that interoperate.
/// Aux symbols carry a defining square stored by the owning Expr context
/// (see ExprContext in expr.hpp); the table itself only orders names.
class SymbolTable {
public:
    int add(SymbolInfo info);
    int add_coordinate(const std::string& name) { return add({name, SymbolKind::Coordinate}); }
    int add_parameter(const std::string& name, bool positive = false) {
        return add({name, SymbolKind::Parameter, positive, positive});
    }

    int size() const { return static_cast<int>(infos_.size()); }
    const SymbolInfo& info(int idx) const { return infos_.at(idx); }
    const std::string& name(int idx) const { return infos_.at(idx).name; }

    std::optional<int> find(const std::string& name) const;
    int require(const std::string& name) const;

    std::vector<int> indices_of(SymbolKind kind) const;

private:
    std::vector<SymbolInfo> infos_;
    std::map<std::string, int> by_name_;
};

using SymbolTablePtr = std::shared_ptr<const SymbolTable>;

} // namespace liequant

#endif
