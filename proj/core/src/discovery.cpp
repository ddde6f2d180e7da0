#include "vulnrank/discovery.hpp"

#include <algorithm>

namespace vulnrank {

namespace fs = std::filesystem;

bool glob_match(std::string_view pattern, std::string_view text) {
    size_t pi = 0, ti = 0;
    size_t star = std::string_view::npos, star_t = 0;
    while (ti < text.size()) {
        if (pi < pattern.size() && (pattern[pi] == '?' || pattern[pi] == text[ti])) {
            ++pi;
            ++ti;
        } else if (pi < pattern.size() && pattern[pi] == '*') {
            star = pi++;
            star_t = ti;
        } else if (star != std::string_view::npos) {
            pi = star + 1;  // retry the '*' against one more character
            ti = ++star_t;
        } else {
            return false;
        }
    }
    while (pi < pattern.size() && pattern[pi] == '*') ++pi;
    return pi == pattern.size();
}

std::vector<std::string> discover_sources(const fs::path& root,
                                          const std::vector<std::string>& include,
                                          const std::vector<std::string>& exclude) {
    std::vector<std::string> out;
    for (const auto& entry : fs::recursive_directory_iterator(root)) {
        if (!entry.is_regular_file()) continue;
        std::string ext = entry.path().extension().string();
        if (ext != ".c" && ext != ".h") continue;
        std::string rel = fs::relative(entry.path(), root).generic_string();
        if (!include.empty() &&
            std::none_of(include.begin(), include.end(),
                         [&](const std::string& g) { return glob_match(g, rel); }))
            continue;
        if (std::any_of(exclude.begin(), exclude.end(),
                        [&](const std::string& g) { return glob_match(g, rel); }))
            continue;
        out.push_back(std::move(rel));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace vulnrank
