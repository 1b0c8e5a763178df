#ifndef HRLB_IO_HPP
#define HRLB_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>

#include "hrlb/kgraph.hpp"

namespace hrlb {

// Canonical text form: "k v" on the first line, then one sorted edge per
// line in lexicographic order, every line newline-terminated.
std::string to_text(const KGraph& f);
KGraph kgraph_from_text(std::string_view text);

// {"k":int,"v":int,"edges":[[int,...],...]} with keys in that order.
std::string to_json(const KGraph& f);
KGraph kgraph_from_json(std::string_view json);

// Dispatches on the first non-blank character ('{' means JSON).
KGraph parse_kgraph(std::string_view content);
KGraph read_kgraph_file(const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);

}  // namespace hrlb

#endif  // HRLB_IO_HPP
