#include "sbx/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace sbx {

std::map<Label, int> BlockPartition::class_of() const {
    std::map<Label, int> r;
    for (size_t i = 0; i < classes.size(); ++i)
        for (auto& l : classes[i]) r[l] = static_cast<int>(i);
    return r;
}

bool BlockPartition::same_block(const Label& a, const Label& b) const {
    auto c = class_of();
    auto ia = c.find(a), ib = c.find(b);
    return ia != c.end() && ib != c.end() && ia->second == ib->second;
}

std::vector<std::vector<Label>> BlockPartition::nontrivial() const {
    std::vector<std::vector<Label>> r;
    for (auto& c : classes)
        if (c.size() > 1) r.push_back(c);
    return r;
}

std::string BlockPartition::str() const {
    std::ostringstream os;
    for (auto& c : classes) {
        os << "{";
        for (size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i].str();
        os << "}\n";
    }
    return os.str();
}

std::string BlockPartition::json() const {
    nlohmann::ordered_json j;
    j["n"] = n;
    j["params"] = params;
    j["classes"] = nlohmann::ordered_json::array();
    for (auto& c : classes) {
        auto a = nlohmann::ordered_json::array();
        for (auto& l : c) a.push_back(l.str());
        j["classes"].push_back(a);
    }
    j["provenance"] = nlohmann::ordered_json::array();
    for (auto& p : provenance) j["provenance"].push_back({{"pair", {p.a.str(), p.b.str()}}, {"rule", p.rule}});
    return j.dump(2);
}

LabelUnion::LabelUnion(std::vector<Label> labels) : labels_(std::move(labels)) {
    std::sort(labels_.begin(), labels_.end());
    parent_.resize(labels_.size());
    std::iota(parent_.begin(), parent_.end(), 0);
    for (size_t i = 0; i < labels_.size(); ++i) idx_[labels_[i]] = static_cast<int>(i);
}

int LabelUnion::find(int i) {
    while (parent_[i] != i) i = parent_[i] = parent_[parent_[i]];
    return i;
}

bool LabelUnion::unite(const Label& a, const Label& b, const std::string& rule) {
    auto ia = idx_.find(a), ib = idx_.find(b);
    if (ia == idx_.end() || ib == idx_.end()) return false;
    int x = find(ia->second), y = find(ib->second);
    if (x == y) return false;
    parent_[std::max(x, y)] = std::min(x, y);
    prov_.push_back({a, b, rule});
    return true;
}

bool LabelUnion::same(const Label& a, const Label& b) { return find(idx_.at(a)) == find(idx_.at(b)); }

BlockPartition LabelUnion::partition(int n, const std::string& params) {
    BlockPartition P;
    P.n = n;
    P.params = params;
    std::map<int, std::vector<Label>> g;
    for (size_t i = 0; i < labels_.size(); ++i) g[find(static_cast<int>(i))].push_back(labels_[i]);
    for (auto& [r, c] : g) P.classes.push_back(c);
    std::sort(P.classes.begin(), P.classes.end());
    P.provenance = prov_;
    return P;
}

}  // namespace sbx
