#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

namespace upsc {

enum class Split { train, test };

struct DatasetRecord {
    double r_ext = 0.0; ///< external load, ohm
    double v_exp = 0.0; ///< measured voltage, V
    double i_exp = 0.0; ///< measured current, A
    Split split = Split::train;
};

/// Ordered polarization measurements with a train/test split label per row.
struct ExperimentalDataset {
    std::vector<DatasetRecord> records;

    std::vector<std::size_t> train_indices() const;
    std::vector<std::size_t> test_indices() const;

    /// r_ext strictly positive, strictly monotone; v/i non-negative.
    void validate() const;
};

/// True when 1-based index i is a training row under the default scheme
/// (row 1, even rows, and the last two rows).
bool default_split_is_train(std::size_t index_1based, std::size_t n_records);

/// Reads CSV with header `r_ext_ohm,v_volt,i_amp[,split]`. When the split
/// column is absent every row gets the default scheme label.
ExperimentalDataset load_dataset(const std::filesystem::path& path);

ExperimentalDataset parse_dataset(const std::string& text, const std::string& origin);

void save_dataset(const ExperimentalDataset& data, const std::filesystem::path& path);

} // namespace upsc
