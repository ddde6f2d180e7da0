#ifndef VULNRANK_PARSER_HPP
#define VULNRANK_PARSER_HPP

#include <string>
#include <string_view>
#include <vector>

#include "vulnrank/model.hpp"

namespace vulnrank {

struct ParseResult {
    std::vector<FunctionModel> functions;   // in definition order
    std::vector<Diagnostic> diagnostics;
};

/// Parses a self-contained C file into one FunctionModel per function
/// definition with a body. Declarations without bodies produce nothing. A
/// function whose body cannot be parsed is skipped with a RecoverySkipped
/// diagnostic; the remaining functions are still returned. Throws ParseError
/// only for unrecoverable lexical damage.
///
/// Supported language: C function definitions with prototype-style parameter
/// lists, the standard control statements, expressions and declarations.
/// A variable counts as pointer-typed when its declaration carries `*` or an
/// empty `[]` declarator; everything unresolved defaults to non-pointer.
ParseResult parse_translation_unit(std::string_view source, const std::string& file_path);

} // namespace vulnrank

#endif
