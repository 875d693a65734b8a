#include "prbh/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <stdexcept>
#include <system_error>

namespace prbh {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

CsvWriter::CsvWriter(std::vector<std::string> header) : columns_(header.size()) {
    if (header.empty()) {
        throw std::invalid_argument("CSV header must not be empty");
    }
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i > 0) body_ += ',';
        body_ += header[i];
    }
    body_ += '\n';
}

void CsvWriter::add_row(std::vector<std::string> cells) {
    if (cells.size() != columns_) {
        throw std::invalid_argument("CSV row width does not match header");
    }
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i > 0) body_ += ',';
        body_ += cells[i];
    }
    body_ += '\n';
}

void write_text_atomic(const std::filesystem::path& path, std::string_view contents) {
    const std::filesystem::path dir =
        path.has_parent_path() ? path.parent_path() : std::filesystem::path(".");
    std::filesystem::create_directories(dir);
    // temp file in the same directory so the rename stays on one filesystem
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        }
        out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
        out.flush();
        if (!out) {
            throw std::runtime_error("short write to " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, path);
}

std::filesystem::path default_output_dir() {
    if (const char* dir = std::getenv("PRBH_OUTPUT_DIR"); dir != nullptr && *dir != '\0') {
        return std::filesystem::path(dir);
    }
    return std::filesystem::path(".");
}

}  // namespace prbh
