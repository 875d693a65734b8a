#pragma once

#include <filesystem>
#include <iosfwd>

#include "run_config.hpp"

namespace prbh::cli {

std::filesystem::path resolve_output(const RunConfig& cfg, const std::string& command);

int cmd_pn(const RunConfig& cfg, std::ostream& out);
int cmd_capacity(const RunConfig& cfg, std::ostream& out);
int cmd_evolve(const RunConfig& cfg, std::ostream& out);
int cmd_density(const RunConfig& cfg, std::ostream& out);
int cmd_sample(const RunConfig& cfg, std::ostream& out);
int cmd_verify(const RunConfig& cfg, std::ostream& out);

}  // namespace prbh::cli
