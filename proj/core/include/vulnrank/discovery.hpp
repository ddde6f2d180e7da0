#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace vulnrank {

// Minimal glob: `*` matches any run of characters (including '/'), `?`
// matches exactly one. Everything else is literal.
bool glob_match(std::string_view pattern, std::string_view text);

// Recursively collects *.c and *.h files under root, returned as sorted
// relative generic paths. When include globs are given, a path must match at
// least one; a path matching any exclude glob is dropped. Filesystem errors
// propagate as std::filesystem::filesystem_error.
std::vector<std::string> discover_sources(const std::filesystem::path& root,
                                          const std::vector<std::string>& include = {},
                                          const std::vector<std::string>& exclude = {});

} // namespace vulnrank
