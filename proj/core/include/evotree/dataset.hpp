#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace evotree {

struct NominalKind {
  std::vector<std::string> values;  // distinct, first-appearance order
};

struct ContinuousKind {
  std::int32_t min = 0;
  std::int32_t max = 0;  // inclusive; integer-valued by design
};

struct AttributeSchema {
  std::string name;
  std::variant<NominalKind, ContinuousKind> kind;

  bool is_nominal() const { return std::holds_alternative<NominalKind>(kind); }
  const NominalKind& nominal() const { return std::get<NominalKind>(kind); }
  const ContinuousKind& continuous() const { return std::get<ContinuousKind>(kind); }
};

/// One training row. Nominal values are stored as indices into the
/// attribute's value list, continuous values as the raw integer. The
/// instance id is its position in the dataset.
struct Instance {
  std::vector<std::int32_t> values;
  std::int32_t label = 0;  // index into class_values
};

/// Immutable after construction; safe to share across threads.
class Dataset {
 public:
  Dataset(std::vector<AttributeSchema> attributes,
          std::vector<std::string> class_values,
          std::vector<Instance> instances);

  std::int32_t size() const { return static_cast<std::int32_t>(instances_.size()); }
  std::int32_t attribute_count() const { return static_cast<std::int32_t>(attributes_.size()); }
  std::int32_t class_count() const { return static_cast<std::int32_t>(class_values_.size()); }

  const std::vector<AttributeSchema>& attributes() const { return attributes_; }
  const AttributeSchema& attribute(std::int32_t i) const { return attributes_.at(static_cast<std::size_t>(i)); }
  const std::vector<std::string>& class_values() const { return class_values_; }
  const Instance& instance(std::int32_t id) const { return instances_.at(static_cast<std::size_t>(id)); }
  const std::vector<Instance>& instances() const { return instances_; }

  std::int32_t attribute_index(const std::string& name) const;
  std::int32_t nominal_value_index(std::int32_t attr, const std::string& value) const;
  std::int32_t class_index(const std::string& value) const;

  std::string value_symbol(std::int32_t attr, std::int32_t value) const;
  const std::string& class_symbol(std::int32_t label) const { return class_values_.at(static_cast<std::size_t>(label)); }

 private:
  void validate() const;

  std::vector<AttributeSchema> attributes_;
  std::vector<std::string> class_values_;
  std::vector<Instance> instances_;
};

enum class ColumnKind { Nominal, Continuous };
using ColumnOverrides = std::map<std::string, ColumnKind>;

/// CSV contract: UTF-8, comma-separated, first row is the header, no
/// quoting or escaping. Schema inference per column: every cell parses as
/// an integer -> continuous with observed [min..max]; otherwise nominal in
/// first-appearance order. Real-valued columns are rejected, not
/// discretized. Blank cells are errors. An empty class_column selects the
/// last column.
Dataset load_csv(const std::filesystem::path& path,
                 const std::string& class_column = "",
                 const ColumnOverrides& overrides = {});
Dataset load_csv_text(const std::string& text,
                      const std::string& class_column = "",
                      const ColumnOverrides& overrides = {});
std::string to_csv(const Dataset& dataset);

/// Full truth table of the a-address-bit multiplexor: a + 2^a binary
/// attributes, 2^(a+2^a) rows, class = data bit selected by the address.
Dataset generate_multiplexor(std::int32_t address_bits);

/// 2^bits rows over binary attributes; class = XOR of all bits. The
/// smallest consistent binary tree is complete of depth `bits`.
Dataset generate_parity(std::int32_t bits);

struct Fold {
  std::vector<std::int32_t> train_ids;
  std::vector<std::int32_t> test_ids;
};

/// Seeded shuffle, then round-robin deal into k disjoint test sets that
/// cover 0..n-1. Deterministic for a given seed.
std::vector<Fold> split_folds(const Dataset& dataset, std::int32_t k, std::uint64_t seed);

}  // namespace evotree
