#ifndef VULNRANK_LEXER_HPP
#define VULNRANK_LEXER_HPP

#include <string>
#include <string_view>
#include <vector>

namespace vulnrank {

enum class TokenKind {
    Identifier,  // includes keywords; the parser tells them apart
    Number,
    String,
    CharLiteral,
    Punct,
    End,
};

struct Token {
    TokenKind kind = TokenKind::End;
    std::string text;
    int line = 1;

    bool is(std::string_view s) const { return text == s; }
    bool is_punct(std::string_view s) const { return kind == TokenKind::Punct && text == s; }
    bool is_word(std::string_view s) const { return kind == TokenKind::Identifier && text == s; }
};

/// Token stream for one file plus a per-line "has code" flag used for SLOC.
struct LexedFile {
    std::vector<Token> tokens;        // terminated by one End token
    std::vector<bool> line_has_code;  // index 0 unused; true if the line has
                                      // anything beyond whitespace/comments
};

/// Tokenizes a self-contained C file. Preprocessor handling: #include and
/// #define lines are dropped; #if/#ifdef/#ifndef keep their first branch and
/// skip #elif/#else branches; other directives are dropped. Throws ParseError
/// on unterminated comments or literals.
LexedFile lex(std::string_view source, const std::string& file_path);

} // namespace vulnrank

#endif
