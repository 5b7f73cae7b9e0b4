#include "upsc/dataset.hpp"

#include "upsc/errors.hpp"
#include "upsc/textio.hpp"

#include <sstream>

namespace upsc {
namespace {

std::string strip_cr(std::string line) {
    if (!line.empty() && line.back() == '\r')
        line.pop_back();
    return line;
}

} // namespace

std::vector<std::size_t> ExperimentalDataset::train_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < records.size(); ++i)
        if (records[i].split == Split::train)
            out.push_back(i);
    return out;
}

std::vector<std::size_t> ExperimentalDataset::test_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < records.size(); ++i)
        if (records[i].split == Split::test)
            out.push_back(i);
    return out;
}

void ExperimentalDataset::validate() const {
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& r = records[i];
        const std::string row = "dataset row " + std::to_string(i + 1);
        if (!(r.r_ext > 0.0))
            throw ValidationError(row + ": r_ext must be strictly positive");
        if (r.v_exp < 0.0)
            throw ValidationError(row + ": v_exp must be non-negative");
        if (r.i_exp < 0.0)
            throw ValidationError(row + ": i_exp must be non-negative");
    }
    if (records.size() >= 2) {
        const bool ascending = records[1].r_ext > records[0].r_ext;
        for (std::size_t i = 1; i < records.size(); ++i) {
            const double prev = records[i - 1].r_ext;
            const double cur = records[i].r_ext;
            const bool ok = ascending ? cur > prev : cur < prev;
            if (!ok)
                throw ValidationError("dataset row " + std::to_string(i + 1) +
                                      ": r_ext must be strictly monotone");
        }
    }
}

bool default_split_is_train(std::size_t i, std::size_t n) {
    if (i == 1 || i == n || (n >= 2 && i == n - 1))
        return true;
    return i % 2 == 0 && i + 2 <= n;
}

ExperimentalDataset parse_dataset(const std::string& text, const std::string& origin) {
    std::istringstream stream(text);
    std::string line;
    if (!std::getline(stream, line))
        throw ParseError(origin + ": empty dataset file");
    line = strip_cr(line);

    bool has_split = false;
    if (line == "r_ext_ohm,v_volt,i_amp")
        has_split = false;
    else if (line == "r_ext_ohm,v_volt,i_amp,split")
        has_split = true;
    else
        throw ParseError(origin + ": bad header '" + line +
                         "' (expected r_ext_ohm,v_volt,i_amp[,split])");

    ExperimentalDataset data;
    int line_no = 1;
    while (std::getline(stream, line)) {
        ++line_no;
        line = strip_cr(line);
        if (line.empty())
            continue;
        const std::string where = origin + ":" + std::to_string(line_no);
        const auto fields = split_csv_line(line);
        const std::size_t expected = has_split ? 4 : 3;
        if (fields.size() != expected)
            throw ParseError(where + ": expected " + std::to_string(expected) + " fields");

        DatasetRecord rec;
        rec.r_ext = parse_double(fields[0], where + " (r_ext_ohm)");
        rec.v_exp = parse_double(fields[1], where + " (v_volt)");
        rec.i_exp = parse_double(fields[2], where + " (i_amp)");
        if (has_split) {
            if (fields[3] == "train")
                rec.split = Split::train;
            else if (fields[3] == "test")
                rec.split = Split::test;
            else
                throw ParseError(where + ": split must be 'train' or 'test', got '" +
                                 fields[3] + "'");
        }
        data.records.push_back(rec);
    }

    if (!has_split) {
        const std::size_t n = data.records.size();
        for (std::size_t i = 0; i < n; ++i)
            data.records[i].split =
                default_split_is_train(i + 1, n) ? Split::train : Split::test;
    }

    data.validate();
    return data;
}

ExperimentalDataset load_dataset(const std::filesystem::path& path) {
    return parse_dataset(read_text_file(path), path.string());
}

void save_dataset(const ExperimentalDataset& data, const std::filesystem::path& path) {
    std::ostringstream out;
    out << "r_ext_ohm,v_volt,i_amp,split\n";
    for (const auto& r : data.records)
        out << sci12(r.r_ext) << ',' << sci12(r.v_exp) << ',' << sci12(r.i_exp) << ','
            << (r.split == Split::train ? "train" : "test") << '\n';
    write_text_file(path, out.str());
}

} // namespace upsc
