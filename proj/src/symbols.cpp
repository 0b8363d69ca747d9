#include "liequant/symbols.hpp"

#include "liequant/rational.hpp"

namespace liequant {

int SymbolTable::add(SymbolInfo info) {
    if (by_name_.count(info.name)) throw error("duplicate symbol: " + info.name);
    if (info.name.empty()) throw error("empty symbol name");
    int idx = static_cast<int>(infos_.size());
    by_name_[info.name] = idx;
    infos_.push_back(std::move(info));
    return idx;
}

std::optional<int> SymbolTable::find(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) return std::nullopt;
    return it->second;
}

int SymbolTable::require(const std::string& name) const {
    auto idx = find(name);
    if (!idx) throw error("undeclared symbol: " + name);
    return *idx;
}

std::vector<int> SymbolTable::indices_of(SymbolKind kind) const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if (infos_[i].kind == kind) out.push_back(i);
    return out;
}

} // namespace liequant
