#include "vulnrank/lexer.hpp"

#include <array>
#include <cctype>

#include "vulnrank/errors.hpp"

namespace vulnrank {
namespace {

bool is_ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

// Multi-character operators, longest first within each length bucket.
constexpr std::array<std::string_view, 3> kPunct3 = {"<<=", ">>=", "..."};
constexpr std::array<std::string_view, 19> kPunct2 = {
    "->", "++", "--", "<<", ">>", "<=", ">=", "==", "!=", "&&",
    "||", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=",
};

class Cursor {
public:
    Cursor(std::string_view src, const std::string& file) : src_(src), file_(file) {
        if (src_.size() >= 3 && src_.substr(0, 3) == "\xEF\xBB\xBF") pos_ = 3;  // BOM
    }

    bool eof() const { return pos_ >= src_.size(); }
    char peek(size_t ahead = 0) const {
        return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
    }
    char get() {
        char c = src_[pos_++];
        if (c == '\n') {
            ++line_;
            at_line_start_ = true;
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            at_line_start_ = false;
        }
        return c;
    }
    bool starts_with(std::string_view s) const { return src_.substr(pos_, s.size()) == s; }
    void skip(size_t n) {
        for (size_t i = 0; i < n && !eof(); ++i) get();
    }
    int line() const { return line_; }
    bool at_line_start() const { return at_line_start_; }
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(file_, line_, what); }

private:
    std::string_view src_;
    const std::string& file_;
    size_t pos_ = 0;
    int line_ = 1;
    bool at_line_start_ = true;
};

class Lexer {
public:
    Lexer(std::string_view src, const std::string& file) : file_(file), cur_(src, file_) {}

    std::vector<Token> run() {
        while (!cur_.eof()) {
            char c = cur_.peek();
            if (c == '\n' || std::isspace(static_cast<unsigned char>(c))) {
                cur_.get();
                continue;
            }
            if (cur_.starts_with("//")) {
                skip_line_comment();
                continue;
            }
            if (cur_.starts_with("/*")) {
                skip_block_comment();
                continue;
            }
            if (c == '#' && cur_.at_line_start()) {
                handle_directive();
                continue;
            }
            if (skipping()) {
                // Excluded conditional branch: consume without emitting.
                skip_excluded_char();
                continue;
            }
            lex_token();
        }
        tokens_.push_back({TokenKind::End, "", cur_.line()});
        return std::move(tokens_);
    }

private:
    struct CondLevel {
        bool taken;     // some branch of this conditional has been kept
        bool skipping;  // currently inside an excluded branch
    };

    bool skipping() const {
        for (const auto& l : cond_stack_)
            if (l.skipping) return true;
        return false;
    }

    void skip_line_comment() {
        while (!cur_.eof() && cur_.peek() != '\n') cur_.get();
    }

    void skip_block_comment() {
        int start = cur_.line();
        cur_.skip(2);
        while (!cur_.eof()) {
            if (cur_.starts_with("*/")) {
                cur_.skip(2);
                return;
            }
            cur_.get();
        }
        throw ParseError(file_of(), start, "unterminated block comment");
    }

    // In a skipped branch only directives, comments and string boundaries
    // matter; everything else is raw text.
    void skip_excluded_char() {
        char c = cur_.peek();
        if (c == '"' || c == '\'') {
            consume_quoted(c, /*emit=*/false);
        } else {
            cur_.get();
        }
    }

    void handle_directive() {
        cur_.get();  // '#'
        while (!cur_.eof() && (cur_.peek() == ' ' || cur_.peek() == '\t')) cur_.get();
        std::string name;
        while (!cur_.eof() && is_ident_char(cur_.peek())) name.push_back(cur_.get());

        if (name == "if" || name == "ifdef" || name == "ifndef") {
            bool parent_skipping = skipping();
            // First branch is always the one kept.
            cond_stack_.push_back({!parent_skipping, parent_skipping});
        } else if (name == "elif" || name == "else") {
            if (!cond_stack_.empty()) {
                auto& top = cond_stack_.back();
                top.skipping = top.taken || top.skipping;
            }
        } else if (name == "endif") {
            if (!cond_stack_.empty()) cond_stack_.pop_back();
        }
        // #include, #define, #pragma, ... and the directive tail: drop the
        // rest of the (possibly continued) line.
        skip_directive_tail();
    }

    void skip_directive_tail() {
        while (!cur_.eof()) {
            char c = cur_.peek();
            if (c == '\\' && cur_.peek(1) == '\n') {
                cur_.skip(2);
                continue;
            }
            if (c == '\\' && cur_.peek(1) == '\r' && cur_.peek(2) == '\n') {
                cur_.skip(3);
                continue;
            }
            if (c == '\n') return;  // newline itself consumed by main loop
            if (cur_.starts_with("/*")) {
                skip_block_comment();
                continue;
            }
            if (cur_.starts_with("//")) {
                skip_line_comment();
                return;
            }
            cur_.get();
        }
    }

    void consume_quoted(char quote, bool emit) {
        int start = cur_.line();
        std::string text;
        cur_.get();
        while (!cur_.eof()) {
            char c = cur_.get();
            if (c == '\\') {
                if (!cur_.eof()) text.push_back(cur_.get());
                continue;
            }
            if (c == quote) {
                if (emit)
                    tokens_.push_back({quote == '"' ? TokenKind::String : TokenKind::CharLiteral,
                                       std::move(text), start});
                return;
            }
            if (c == '\n') break;  // literals do not span lines
            text.push_back(c);
        }
        if (emit) cur_.fail(quote == '"' ? "unterminated string literal"
                                         : "unterminated character literal");
        // In skipped text a stray quote is tolerated up to end of line.
    }

    void lex_token() {
        int line = cur_.line();
        char c = cur_.peek();

        if (is_ident_start(c)) {
            std::string text;
            while (!cur_.eof() && is_ident_char(cur_.peek())) text.push_back(cur_.get());
            tokens_.push_back({TokenKind::Identifier, std::move(text), line});
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) ||
            (c == '.' && std::isdigit(static_cast<unsigned char>(cur_.peek(1))))) {
            std::string text;
            // Good enough for C numeric literals including hex, suffixes and
            // signed exponents.
            while (!cur_.eof()) {
                char d = cur_.peek();
                if (!is_ident_char(d) && d != '.') break;
                text.push_back(cur_.get());
                bool hex = text.size() > 1 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X');
                bool exp = hex ? (d == 'p' || d == 'P') : (d == 'e' || d == 'E');
                if (exp && (cur_.peek() == '+' || cur_.peek() == '-')) text.push_back(cur_.get());
            }
            tokens_.push_back({TokenKind::Number, std::move(text), line});
            return;
        }
        if (c == '"' || c == '\'') {
            consume_quoted(c, /*emit=*/true);
            return;
        }
        for (auto p : kPunct3) {
            if (cur_.starts_with(p)) {
                cur_.skip(p.size());
                tokens_.push_back({TokenKind::Punct, std::string(p), line});
                return;
            }
        }
        for (auto p : kPunct2) {
            if (cur_.starts_with(p)) {
                cur_.skip(p.size());
                tokens_.push_back({TokenKind::Punct, std::string(p), line});
                return;
            }
        }
        tokens_.push_back({TokenKind::Punct, std::string(1, cur_.get()), line});
    }

    const std::string& file_of() const { return file_; }

    std::string file_;
    Cursor cur_;
    std::vector<Token> tokens_;
    std::vector<CondLevel> cond_stack_;
};

// Per-line "contains code" scan, independent of preprocessing: a line counts
// unless it is blank or holds nothing but comments.
std::vector<bool> scan_code_lines(std::string_view src) {
    std::vector<bool> lines;
    lines.push_back(false);  // index 0 unused
    bool in_block_comment = false;
    bool has_code = false;
    for (size_t i = 0; i < src.size(); ++i) {
        char c = src[i];
        if (c == '\n') {
            lines.push_back(has_code);
            has_code = false;
            continue;
        }
        if (in_block_comment) {
            if (c == '*' && i + 1 < src.size() && src[i + 1] == '/') {
                in_block_comment = false;
                ++i;
            }
            continue;
        }
        if (c == '/' && i + 1 < src.size() && src[i + 1] == '/') {
            while (i + 1 < src.size() && src[i + 1] != '\n') ++i;
            continue;
        }
        if (c == '/' && i + 1 < src.size() && src[i + 1] == '*') {
            in_block_comment = true;
            ++i;
            continue;
        }
        if (c == '"' || c == '\'') {
            has_code = true;
            char quote = c;
            for (++i; i < src.size() && src[i] != quote && src[i] != '\n'; ++i)
                if (src[i] == '\\') ++i;
            continue;
        }
        if (!std::isspace(static_cast<unsigned char>(c))) has_code = true;
    }
    lines.push_back(has_code);
    return lines;
}

} // namespace

LexedFile lex(std::string_view source, const std::string& file_path) {
    Lexer lexer(source, file_path);
    LexedFile out;
    out.tokens = lexer.run();
    out.line_has_code = scan_code_lines(source);
    return out;
}

} // namespace vulnrank
