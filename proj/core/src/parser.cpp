#include "vulnrank/parser.hpp"

#include <map>
#include <optional>
#include <set>
#include <string_view>

#include "vulnrank/errors.hpp"
#include "vulnrank/lexer.hpp"

namespace vulnrank {
namespace {

const std::set<std::string_view> kControlKeywords = {
    "if", "else", "for", "while", "do", "switch", "case", "default",
    "return", "break", "continue", "goto", "sizeof",
};

const std::set<std::string_view> kDeclKeywords = {
    "void", "char", "short", "int", "long", "float", "double", "signed",
    "unsigned", "struct", "union", "enum", "const", "volatile", "static",
    "register", "auto", "extern", "inline", "restrict", "typedef",
    "_Bool", "_Complex", "_Atomic", "_Thread_local", "_Alignas", "_Noreturn",
};

bool is_keyword(std::string_view s) {
    return kControlKeywords.count(s) > 0 || kDeclKeywords.count(s) > 0;
}

bool is_plain_identifier(const Token& t) {
    return t.kind == TokenKind::Identifier && !is_keyword(t.text);
}

// Thrown while parsing one function body; the driver converts it into a
// RecoverySkipped diagnostic and resumes after the body.
struct BodyParseError {
    int line;
    std::string what;
};

// Two-level symbol table: function-local names shadow file-scope ones. The
// value records pointer-typedness.
struct Symbols {
    const std::map<std::string, bool>* globals = nullptr;
    std::map<std::string, bool> locals;

    bool visible(const std::string& name) const {
        return locals.count(name) > 0 || (globals && globals->count(name) > 0);
    }
    bool is_pointer(const std::string& name) const {
        if (auto it = locals.find(name); it != locals.end()) return it->second;
        if (globals) {
            if (auto it = globals->find(name); it != globals->end()) return it->second;
        }
        return false;
    }
};

// Splits [begin, end) at commas that sit at nesting depth zero.
std::vector<std::pair<size_t, size_t>> split_at_commas(const std::vector<Token>& toks,
                                                       size_t begin, size_t end) {
    std::vector<std::pair<size_t, size_t>> parts;
    int depth = 0;
    size_t start = begin;
    for (size_t i = begin; i < end; ++i) {
        const Token& t = toks[i];
        if (t.kind != TokenKind::Punct) continue;
        if (t.text == "(" || t.text == "[" || t.text == "{") ++depth;
        else if (t.text == ")" || t.text == "]" || t.text == "}") --depth;
        else if (t.text == "," && depth == 0) {
            parts.emplace_back(start, i);
            start = i + 1;
        }
    }
    parts.emplace_back(start, end);
    return parts;
}

// Declarator name within one declaration segment: the last non-keyword
// identifier outside any nesting, else the first nested one (covers function
// pointers like `int (*cmp)(...)`). Tokens after a top-level `=` are ignored.
std::optional<size_t> declarator_name(const std::vector<Token>& toks, size_t begin, size_t end) {
    int depth = 0;
    std::optional<size_t> flat;
    std::optional<size_t> nested;
    for (size_t i = begin; i < end; ++i) {
        const Token& t = toks[i];
        if (t.kind == TokenKind::Punct) {
            if (t.text == "=" && depth == 0) break;
            if (t.text == "(" || t.text == "[" || t.text == "{") ++depth;
            else if (t.text == ")" || t.text == "]" || t.text == "}") --depth;
            continue;
        }
        if (!is_plain_identifier(t)) continue;
        if (depth == 0)
            flat = i;
        else if (!nested)
            nested = i;
    }
    if (flat) return flat;
    return nested;
}

// Pointer-typedness of one declarator segment: a `*` anywhere, or an empty
// `[]` pair. Sized arrays deliberately do not qualify.
bool segment_is_pointer(const std::vector<Token>& toks, size_t begin, size_t end) {
    int brace_depth = 0;  // stars inside an inline struct body don't count
    for (size_t i = begin; i < end; ++i) {
        const Token& t = toks[i];
        if (t.kind != TokenKind::Punct) continue;
        if (t.text == "{") ++brace_depth;
        else if (t.text == "}") --brace_depth;
        if (brace_depth > 0) continue;
        if (t.text == "=") break;
        if (t.text == "*") return true;
        if (t.text == "[" && i + 1 < end && toks[i + 1].is_punct("]")) return true;
    }
    return false;
}

class FunctionParser {
public:
    FunctionParser(const std::vector<Token>& toks, Symbols& syms, FunctionModel& fm)
        : toks_(toks), syms_(syms), fm_(fm) {}

    // pos must point at the opening '{'. Returns the index just past the
    // matching '}'.
    size_t parse_body(size_t pos) {
        pos_ = pos;
        fm_.control_roots = parse_block();
        return pos_;
    }

private:
    const Token& tok(size_t i) const {
        return i < toks_.size() ? toks_[i] : toks_.back();  // back() is End
    }
    const Token& peek(size_t ahead = 0) const { return tok(pos_ + ahead); }
    bool at_end() const { return peek().kind == TokenKind::End; }

    [[noreturn]] void fail(const std::string& what) const {
        throw BodyParseError{peek().line, what};
    }

    void expect_punct(std::string_view s) {
        if (!peek().is_punct(s)) fail("expected '" + std::string(s) + "'");
        ++pos_;
    }

    size_t matching_paren(size_t open) const {
        int depth = 0;
        for (size_t i = open; i < toks_.size(); ++i) {
            const Token& t = toks_[i];
            if (t.is_punct("(")) ++depth;
            else if (t.is_punct(")")) {
                if (--depth == 0) return i;
            } else if (t.kind == TokenKind::End) {
                break;
            }
        }
        throw BodyParseError{tok(open).line, "unmatched '('"};
    }

    // Index of the ';' terminating the statement starting at `start`.
    size_t statement_end(size_t start) const {
        int depth = 0;
        for (size_t i = start; i < toks_.size(); ++i) {
            const Token& t = toks_[i];
            if (t.kind == TokenKind::End) break;
            if (t.kind != TokenKind::Punct) continue;
            if (t.text == "(" || t.text == "[" || t.text == "{") ++depth;
            else if (t.text == ")" || t.text == "]") --depth;
            else if (t.text == "}") {
                if (depth == 0) throw BodyParseError{t.line, "expected ';'"};
                --depth;
            } else if (t.text == ";" && depth == 0) {
                return i;
            }
        }
        throw BodyParseError{tok(start).line, "unterminated statement"};
    }

    // --- expression scanning -------------------------------------------

    bool token_ends_operand(const Token& t) const {
        switch (t.kind) {
        case TokenKind::Identifier: return !is_keyword(t.text);
        case TokenKind::Number:
        case TokenKind::String:
        case TokenKind::CharLiteral: return true;
        case TokenKind::Punct: return t.text == ")" || t.text == "]";
        default: return false;
        }
    }

    bool star_is_unary(size_t star_idx) const {
        if (star_idx == 0) return true;
        return !token_ends_operand(toks_[star_idx - 1]);
    }

    void record_op(const std::string& var, PointerOpKind kind, int line) {
        fm_.pointer_ops.push_back({var, kind, line});
    }

    // Walks [begin, end) as expression material: counts decision points for
    // `?`, `&&` and `||`, records pointer operations on pointer-typed
    // variables, collects call sites, and optionally gathers identifiers for
    // a control predicate. sizeof operands are skipped wholesale.
    void scan_expression(size_t begin, size_t end, std::set<std::string>* predicates) {
        struct CallCtx {
            CallSite site;
            int depth;
        };
        std::vector<CallCtx> calls;
        int paren_depth = 0;

        for (size_t i = begin; i < end; ++i) {
            const Token& t = toks_[i];
            if (t.kind == TokenKind::Punct) {
                if (t.text == "(") {
                    ++paren_depth;
                } else if (t.text == ")") {
                    if (!calls.empty() && calls.back().depth == paren_depth) {
                        fm_.call_sites.push_back(std::move(calls.back().site));
                        calls.pop_back();
                    }
                    --paren_depth;
                } else if (t.text == "?" || t.text == "&&" || t.text == "||") {
                    ++fm_.decision_points;
                }
                continue;
            }
            if (t.kind != TokenKind::Identifier) continue;

            if (t.text == "sizeof") {
                // sizeof's operand is a constant expression; nothing inside
                // it is a variable use.
                if (i + 1 < end && toks_[i + 1].is_punct("(")) {
                    size_t close = matching_paren(i + 1);
                    i = close < end ? close : end - 1;
                } else if (i + 1 < end && toks_[i + 1].kind == TokenKind::Identifier) {
                    ++i;
                }
                continue;
            }
            if (is_keyword(t.text)) continue;

            const Token& prev = i > 0 ? toks_[i - 1] : toks_[0];
            bool has_prev = i > 0;
            if (has_prev && (prev.is_punct(".") || prev.is_punct("->"))) continue;  // member name

            if (i + 1 < toks_.size() && toks_[i + 1].is_punct("(")) {
                // Call site; arguments are attributed to the innermost call.
                calls.push_back({CallSite{t.text, {}, t.line}, paren_depth + 1});
                continue;
            }

            // Plain variable use.
            if (predicates) predicates->insert(t.text);
            if (!calls.empty() && syms_.visible(t.text))
                calls.back().site.argument_variables.insert(t.text);

            if (!syms_.is_pointer(t.text)) continue;
            const Token& next = tok(i + 1);
            bool deref_prefix = has_prev && prev.is_punct("*") && star_is_unary(i - 1);
            if (next.is_punct("->")) {
                record_op(t.text, PointerOpKind::MemberAccess, t.line);
            } else if (next.is_punct("[")) {
                record_op(t.text, PointerOpKind::Subscript, t.line);
            } else if (next.is_punct("++")) {
                record_op(t.text, PointerOpKind::Increment, t.line);
            } else if (next.is_punct("--")) {
                record_op(t.text, PointerOpKind::Decrement, t.line);
            } else if (!deref_prefix && (next.is_punct("+") || next.is_punct("-") ||
                                         next.is_punct("+=") || next.is_punct("-="))) {
                record_op(t.text, PointerOpKind::OffsetArith, t.line);
            }
            if (has_prev) {
                if (prev.is_punct("++")) {
                    record_op(t.text, PointerOpKind::Increment, t.line);
                } else if (prev.is_punct("--")) {
                    record_op(t.text, PointerOpKind::Decrement, t.line);
                } else if (deref_prefix && !next.is_punct("->") && !next.is_punct("[")) {
                    record_op(t.text, PointerOpKind::Dereference, t.line);
                }
            }
        }
        // Unbalanced argument lists still contribute what was seen.
        for (auto& c : calls) fm_.call_sites.push_back(std::move(c.site));
    }

    // --- declarations ---------------------------------------------------

    bool at_declaration() const {
        const Token& t = peek();
        if (t.kind != TokenKind::Identifier) return false;
        if (kDeclKeywords.count(t.text) > 0) return true;
        if (is_keyword(t.text)) return false;
        // `name name` or `name * name` followed by a declarator-ish token.
        size_t j = pos_ + 1;
        if (is_plain_identifier(tok(j))) return true;
        size_t stars = 0;
        while (tok(j).is_punct("*")) {
            ++j;
            ++stars;
        }
        if (stars > 0 && is_plain_identifier(tok(j))) {
            const Token& after = tok(j + 1);
            return after.is_punct(";") || after.is_punct("=") || after.is_punct(",") ||
                   after.is_punct("[");
        }
        return false;
    }

    // Registers declarators and scans initializers of the declaration in
    // [begin, end). Declared names can optionally feed a predicate set (used
    // by for-init declarations).
    void process_declaration(size_t begin, size_t end, std::set<std::string>* predicates) {
        for (auto [s, e] : split_at_commas(toks_, begin, end)) {
            if (s >= e) continue;
            auto name_idx = declarator_name(toks_, s, e);
            if (name_idx) {
                const std::string& name = toks_[*name_idx].text;
                bool is_fn_decl = tok(*name_idx + 1).is_punct("(");
                if (!is_fn_decl) {
                    syms_.locals[name] = segment_is_pointer(toks_, s, e);
                    if (predicates) predicates->insert(name);
                }
            }
            // Initializer expressions still count toward decision points,
            // pointer use and call sites.
            int depth = 0;
            for (size_t i = s; i < e; ++i) {
                const Token& t = toks_[i];
                if (t.kind != TokenKind::Punct) continue;
                if (t.text == "(" || t.text == "[" || t.text == "{") ++depth;
                else if (t.text == ")" || t.text == "]" || t.text == "}") --depth;
                else if (t.text == "=" && depth == 0) {
                    scan_expression(i + 1, e, predicates);
                    break;
                }
            }
        }
    }

    // --- statements -----------------------------------------------------

    std::vector<ControlStructure> parse_block() {
        expect_punct("{");
        std::vector<ControlStructure> out;
        while (!peek().is_punct("}")) {
            if (at_end()) fail("unexpected end of file in block");
            auto stmts = parse_statement();
            out.insert(out.end(), std::make_move_iterator(stmts.begin()),
                       std::make_move_iterator(stmts.end()));
        }
        ++pos_;  // '}'
        return out;
    }

    std::vector<ControlStructure> parse_statement() {
        const Token& t = peek();
        if (t.is_punct("{")) return parse_block();
        if (t.is_punct(";")) {
            ++pos_;
            return {};
        }
        if (t.kind == TokenKind::Identifier) {
            if (t.text == "if") return parse_if();
            if (t.text == "while") return parse_while();
            if (t.text == "do") return parse_do();
            if (t.text == "for") return parse_for();
            if (t.text == "switch") return parse_switch();
            if (t.text == "case") return parse_case();
            if (t.text == "default") {
                ++pos_;
                expect_punct(":");
                if (peek().is_punct("}")) return {};
                return parse_statement();
            }
            if (t.text == "return") {
                ++pos_;
                if (!peek().is_punct(";")) {
                    size_t end = statement_end(pos_);
                    scan_expression(pos_, end, nullptr);
                    pos_ = end;
                }
                expect_punct(";");
                return {};
            }
            if (t.text == "break" || t.text == "continue") {
                ++pos_;
                expect_punct(";");
                return {};
            }
            if (t.text == "goto") {
                pos_ += 2;  // label
                expect_punct(";");
                return {};
            }
            if (t.text == "else") fail("'else' without matching 'if'");
            if (is_plain_identifier(t) && peek(1).is_punct(":")) {
                pos_ += 2;  // label
                if (peek().is_punct("}")) return {};
                return parse_statement();
            }
        }
        if (at_declaration()) {
            size_t end = statement_end(pos_);
            process_declaration(pos_, end, nullptr);
            pos_ = end + 1;
            return {};
        }
        // Expression statement.
        size_t end = statement_end(pos_);
        scan_expression(pos_, end, nullptr);
        pos_ = end + 1;
        return {};
    }

    std::vector<ControlStructure> parse_if() {
        ControlStructure cs;
        cs.kind = ControlKind::If;
        cs.line = peek().line;
        ++pos_;  // 'if'
        ++fm_.decision_points;
        if (!peek().is_punct("(")) fail("expected '(' after if");
        size_t close = matching_paren(pos_);
        scan_expression(pos_ + 1, close, &cs.predicate_variables);
        pos_ = close + 1;

        cs.children = parse_statement();

        std::vector<ControlStructure> result;
        if (peek().is_word("else")) {
            cs.has_else = true;
            ++pos_;
            if (peek().is_word("if")) {
                // `else if` stays a sibling of this if, not a child.
                auto chain = parse_if();
                result.push_back(std::move(cs));
                result.insert(result.end(), std::make_move_iterator(chain.begin()),
                              std::make_move_iterator(chain.end()));
                return result;
            }
            auto else_structs = parse_statement();
            cs.children.insert(cs.children.end(),
                               std::make_move_iterator(else_structs.begin()),
                               std::make_move_iterator(else_structs.end()));
        }
        result.push_back(std::move(cs));
        return result;
    }

    std::vector<ControlStructure> parse_while() {
        ControlStructure cs;
        cs.kind = ControlKind::While;
        cs.line = peek().line;
        ++pos_;
        ++fm_.decision_points;
        if (!peek().is_punct("(")) fail("expected '(' after while");
        size_t close = matching_paren(pos_);
        scan_expression(pos_ + 1, close, &cs.predicate_variables);
        pos_ = close + 1;
        cs.children = parse_statement();
        std::vector<ControlStructure> out;
        out.push_back(std::move(cs));
        return out;
    }

    std::vector<ControlStructure> parse_do() {
        ControlStructure cs;
        cs.kind = ControlKind::DoWhile;
        cs.line = peek().line;
        ++pos_;  // 'do'
        ++fm_.decision_points;
        cs.children = parse_statement();
        if (!peek().is_word("while")) fail("expected 'while' after do body");
        ++pos_;
        if (!peek().is_punct("(")) fail("expected '(' after do-while");
        size_t close = matching_paren(pos_);
        scan_expression(pos_ + 1, close, &cs.predicate_variables);
        pos_ = close + 1;
        expect_punct(";");
        std::vector<ControlStructure> out;
        out.push_back(std::move(cs));
        return out;
    }

    std::vector<ControlStructure> parse_for() {
        ControlStructure cs;
        cs.kind = ControlKind::For;
        cs.line = peek().line;
        ++pos_;
        ++fm_.decision_points;
        if (!peek().is_punct("(")) fail("expected '(' after for");
        size_t close = matching_paren(pos_);

        // init; cond; step — all three feed the predicate set.
        size_t clause_begin = pos_ + 1;
        std::vector<std::pair<size_t, size_t>> clauses;
        int depth = 0;
        for (size_t i = pos_ + 1; i < close; ++i) {
            const Token& t = toks_[i];
            if (t.kind != TokenKind::Punct) continue;
            if (t.text == "(" || t.text == "[" || t.text == "{") ++depth;
            else if (t.text == ")" || t.text == "]" || t.text == "}") --depth;
            else if (t.text == ";" && depth == 0) {
                clauses.emplace_back(clause_begin, i);
                clause_begin = i + 1;
            }
        }
        clauses.emplace_back(clause_begin, close);
        if (clauses.size() != 3) fail("malformed for clauses");

        auto [init_b, init_e] = clauses[0];
        if (init_b < init_e) {
            const Token& first = toks_[init_b];
            bool decl = first.kind == TokenKind::Identifier &&
                        (kDeclKeywords.count(first.text) > 0 ||
                         (is_plain_identifier(first) && init_b + 1 < init_e &&
                          (is_plain_identifier(toks_[init_b + 1]) ||
                           toks_[init_b + 1].is_punct("*"))));
            if (decl)
                process_declaration(init_b, init_e, &cs.predicate_variables);
            else
                scan_expression(init_b, init_e, &cs.predicate_variables);
        }
        scan_expression(clauses[1].first, clauses[1].second, &cs.predicate_variables);
        scan_expression(clauses[2].first, clauses[2].second, &cs.predicate_variables);

        pos_ = close + 1;
        cs.children = parse_statement();
        std::vector<ControlStructure> out;
        out.push_back(std::move(cs));
        return out;
    }

    std::vector<ControlStructure> parse_switch() {
        ControlStructure cs;
        cs.kind = ControlKind::Switch;
        cs.line = peek().line;
        ++pos_;
        if (!peek().is_punct("(")) fail("expected '(' after switch");
        size_t close = matching_paren(pos_);
        scan_expression(pos_ + 1, close, &cs.predicate_variables);
        pos_ = close + 1;
        cs.children = parse_statement();
        std::vector<ControlStructure> out;
        out.push_back(std::move(cs));
        return out;
    }

    std::vector<ControlStructure> parse_case() {
        ++pos_;  // 'case'
        ++fm_.decision_points;
        // Constant expression up to ':'; a ternary inside needs its ':' paired.
        int depth = 0;
        int pending_ternary = 0;
        size_t begin = pos_;
        while (true) {
            const Token& t = peek();
            if (t.kind == TokenKind::End) fail("unterminated case label");
            if (t.kind == TokenKind::Punct) {
                if (t.text == "(" || t.text == "[") ++depth;
                else if (t.text == ")" || t.text == "]") --depth;
                else if (t.text == "?") ++pending_ternary;
                else if (t.text == ":" && depth == 0) {
                    if (pending_ternary == 0) break;
                    --pending_ternary;
                }
            }
            ++pos_;
        }
        scan_expression(begin, pos_, nullptr);
        ++pos_;  // ':'
        if (peek().is_punct("}")) return {};
        return parse_statement();
    }

    const std::vector<Token>& toks_;
    Symbols& syms_;
    FunctionModel& fm_;
    size_t pos_ = 0;
};

class UnitParser {
public:
    UnitParser(const LexedFile& lexed, std::string file_path)
        : lexed_(lexed), file_(std::move(file_path)) {}

    ParseResult run() {
        const auto& toks = lexed_.tokens;
        std::vector<size_t> buf;  // header/declaration tokens since last boundary
        size_t pos = 0;
        while (toks[pos].kind != TokenKind::End) {
            const Token& t = toks[pos];
            if (t.is_punct(";")) {
                record_toplevel_declaration(buf);
                buf.clear();
                ++pos;
            } else if (t.is_punct("{")) {
                size_t name_idx = 0, params_open = 0;
                if (looks_like_function_header(buf, name_idx, params_open)) {
                    pos = parse_function(buf, name_idx, params_open, pos);
                    buf.clear();
                } else {
                    // struct/enum/union body or an initializer list; the
                    // declaration continues after the braces.
                    pos = skip_braces(pos);
                }
            } else if (t.is_punct("}")) {
                buf.clear();
                ++pos;
            } else {
                buf.push_back(pos);
                ++pos;
            }
        }
        return {std::move(functions_), std::move(diagnostics_)};
    }

private:
    const Token& tok(size_t i) const { return lexed_.tokens[i]; }

    size_t skip_braces(size_t open_pos) {
        int depth = 0;
        size_t i = open_pos;
        for (; tok(i).kind != TokenKind::End; ++i) {
            if (tok(i).is_punct("{")) ++depth;
            else if (tok(i).is_punct("}")) {
                if (--depth == 0) return i + 1;
            }
        }
        return i;  // EOF: unbalanced, stop here
    }

    // A function header is a buffered token run ending in ')' that contains a
    // parameter list opened right after a plain identifier. Attribute-style
    // wrappers are ignored when hunting for that identifier.
    bool looks_like_function_header(const std::vector<size_t>& buf, size_t& name_idx,
                                    size_t& params_open) const {
        if (buf.empty()) return false;
        if (tok(buf.front()).is_word("typedef")) return false;
        if (!tok(buf.back()).is_punct(")")) return false;
        for (size_t b = 1; b < buf.size(); ++b) {
            if (!tok(buf[b]).is_punct("(")) continue;
            const Token& before = tok(buf[b - 1]);
            if (!is_plain_identifier(before)) continue;
            if (before.text == "__attribute__" || before.text == "__declspec") continue;
            name_idx = buf[b - 1];
            params_open = buf[b];
            return true;
        }
        return false;
    }

    void record_toplevel_declaration(const std::vector<size_t>& buf) {
        if (buf.empty()) return;
        if (tok(buf.front()).is_word("typedef")) return;
        // Buffered indices skip any brace groups, so rebuild a contiguous
        // view before slicing into declarators. Top-level runs are short.
        std::vector<Token> decl;
        decl.reserve(buf.size());
        for (size_t idx : buf) decl.push_back(tok(idx));
        for (auto [s, e] : split_at_commas(decl, 0, decl.size())) {
            if (s >= e) continue;
            auto name_idx = declarator_name(decl, s, e);
            if (!name_idx) continue;
            if (*name_idx + 1 < decl.size() && decl[*name_idx + 1].is_punct("("))
                continue;  // function declaration
            globals_[decl[*name_idx].text] = segment_is_pointer(decl, s, e);
        }
    }

    size_t parse_function(const std::vector<size_t>& buf, size_t name_idx, size_t params_open,
                          size_t body_open) {
        FunctionModel fm;
        fm.id.file_path = file_;
        fm.id.function_name = tok(name_idx).text;
        fm.id.start_line = tok(buf.front()).line;

        Symbols syms;
        syms.globals = &globals_;

        // Parameter list: the group opened at params_open.
        size_t params_close = params_open;
        {
            int depth = 0;
            for (size_t i = params_open; tok(i).kind != TokenKind::End; ++i) {
                if (tok(i).is_punct("(")) ++depth;
                else if (tok(i).is_punct(")") && --depth == 0) {
                    params_close = i;
                    break;
                }
            }
        }
        for (auto [s, e] : split_at_commas(lexed_.tokens, params_open + 1, params_close)) {
            if (s >= e) continue;
            if (e == s + 1 && (tok(s).is_word("void") || tok(s).is_punct("..."))) continue;
            auto p_name = declarator_name(lexed_.tokens, s, e);
            if (!p_name) continue;
            const std::string& name = tok(*p_name).text;
            bool ptr = segment_is_pointer(lexed_.tokens, s, e);
            fm.parameters.push_back(name);
            if (ptr) fm.pointer_parameters.push_back(name);
            syms.locals[name] = ptr;
        }

        FunctionParser body(lexed_.tokens, syms, fm);
        try {
            size_t after = body.parse_body(body_open);
            fm.end_line = tok(after - 1).line;
            fm.sloc = count_sloc(fm.id.start_line, fm.end_line);
            functions_.push_back(std::move(fm));
            return after;
        } catch (const BodyParseError& e) {
            diagnostics_.push_back({DiagnosticKind::RecoverySkipped, file_, e.line,
                                    "skipping function '" + fm.id.function_name +
                                        "': " + e.what});
            return skip_braces(body_open);
        }
    }

    int count_sloc(int first, int last) const {
        const auto& lines = lexed_.line_has_code;
        int n = 0;
        for (int l = first; l <= last && l < static_cast<int>(lines.size()); ++l)
            if (lines[l]) ++n;
        return n;
    }

    const LexedFile& lexed_;
    std::string file_;
    std::map<std::string, bool> globals_;
    std::vector<FunctionModel> functions_;
    std::vector<Diagnostic> diagnostics_;
};

} // namespace

ParseResult parse_translation_unit(std::string_view source, const std::string& file_path) {
    LexedFile lexed = lex(source, file_path);
    UnitParser parser(lexed, file_path);
    return parser.run();
}

} // namespace vulnrank
