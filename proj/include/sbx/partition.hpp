// Block partitions of cell labels with per-pair provenance.
#pragma once

#include "sbx/params.hpp"

#include <map>
#include <string>
#include <vector>

namespace sbx {

struct Provenance {
    Label a, b;
    std::string rule;
};

struct BlockPartition {
    int n = 0;
    std::string params;
    std::vector<std::vector<Label>> classes;  // sorted, classes ordered by first label
    std::vector<Provenance> provenance;

    // class index per label
    std::map<Label, int> class_of() const;
    bool same_block(const Label& a, const Label& b) const;
    std::vector<std::vector<Label>> nontrivial() const;
    std::string str() const;
    std::string json() const;
    // partitions are equal as set partitions
    friend bool operator==(const BlockPartition& x, const BlockPartition& y) { return x.classes == y.classes; }
};

// Union-find over a fixed label list.
class LabelUnion {
public:
    explicit LabelUnion(std::vector<Label> labels);
    bool unite(const Label& a, const Label& b, const std::string& rule);
    bool same(const Label& a, const Label& b);
    bool has(const Label& a) const { return idx_.count(a) != 0; }
    BlockPartition partition(int n, const std::string& params) ;

private:
    int find(int i);
    std::vector<Label> labels_;
    std::map<Label, int> idx_;
    std::vector<int> parent_;
    std::vector<Provenance> prov_;
};

}  // namespace sbx
