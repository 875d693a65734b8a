#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace prbh {

// 17 significant digits: doubles round-trip bit-exactly through this.
std::string format_double(double v);

// Minimal CSV assembler: one header row, comma separation, no quoting
// (cell content here is numeric or a plain tag).
class CsvWriter {
public:
    explicit CsvWriter(std::vector<std::string> header);
    void add_row(std::vector<std::string> cells);
    const std::string& str() const { return body_; }

private:
    std::string body_;
    std::size_t columns_;
};

// Write-temp-then-rename in the target directory, so a reader never sees a
// partially written file.
void write_text_atomic(const std::filesystem::path& path, std::string_view contents);

// $PRBH_OUTPUT_DIR if set, otherwise the current directory.
std::filesystem::path default_output_dir();

}  // namespace prbh
