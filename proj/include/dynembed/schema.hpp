#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace dynembed {

// Named discrete attribute dimensions (e.g. "day", "city"), each with an
// ordered value set. (dimension, value) pairs map bijectively onto a dense
// flat index used to address the per-value offset tables.
class AttributeSchema {
public:
    AttributeSchema() = default;

    // Dimension names must be unique and nonempty; values unique within the
    // dimension. Returns the new dimension index.
    int add_dimension(std::string name, std::vector<std::string> values);

    int n_dimensions() const { return static_cast<int>(dims_.size()); }
    bool empty() const { return dims_.empty(); }

    const std::string& dimension_name(int d) const { return dims_[d].name; }
    const std::vector<std::string>& values(int d) const { return dims_[d].values; }

    int dimension_index(std::string_view name) const;  // -1 if unknown
    int value_index(int d, std::string_view value) const;  // -1 if unknown

    // Dense index of (dimension, value) across all dimensions, in schema order.
    int flat_index(int d, int v) const { return dims_[d].flat_base + v; }
    int total_values() const { return total_values_; }

    bool operator==(const AttributeSchema& other) const;

private:
    struct Dimension {
        std::string name;
        std::vector<std::string> values;
        std::unordered_map<std::string, int> value_index;
        int flat_base = 0;
    };
    std::vector<Dimension> dims_;
    std::unordered_map<std::string, int> dim_index_;
    int total_values_ = 0;
};

// A concrete attribute assignment: at most one value per dimension, entries
// kept sorted by dimension index.
class AttributeSet {
public:
    struct Entry {
        int dim;
        int value;
        bool operator==(const Entry&) const = default;
    };

    AttributeSet() = default;
    explicit AttributeSet(std::vector<Entry> entries);  // sorts; rejects dup dims

    static AttributeSet empty() { return AttributeSet(); }

    const std::vector<Entry>& entries() const { return entries_; }
    bool is_empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }

    // Throws std::invalid_argument if any index is out of range for schema.
    void validate(const AttributeSchema& schema) const;

    bool operator==(const AttributeSet&) const = default;

private:
    std::vector<Entry> entries_;
};

}  // namespace dynembed
