#ifndef VULNRANK_MODEL_HPP
#define VULNRANK_MODEL_HPP

#include <compare>
#include <set>
#include <string>
#include <vector>

namespace vulnrank {

/// Identity of one analyzed function. (file_path, function_name, start_line)
/// is unique within a run and is the tiebreak key for all deterministic
/// orderings.
struct FunctionId {
    std::string file_path;     // relative, '/'-separated
    std::string function_name;
    int start_line = 1;        // 1-based line of the first signature token

    auto operator<=>(const FunctionId&) const = default;
};

enum class ControlKind { If, For, While, DoWhile, Switch };

inline const char* to_string(ControlKind k) {
    switch (k) {
    case ControlKind::If: return "if";
    case ControlKind::For: return "for";
    case ControlKind::While: return "while";
    case ControlKind::DoWhile: return "do-while";
    case ControlKind::Switch: return "switch";
    }
    return "?";
}

inline bool is_loop(ControlKind k) {
    return k == ControlKind::For || k == ControlKind::While || k == ControlKind::DoWhile;
}

/// One control statement and the structures syntactically nested inside its
/// body. For an if, `children` covers both branches; an `else if` is hoisted
/// to a sibling of the if that carries has_else.
struct ControlStructure {
    ControlKind kind = ControlKind::If;
    bool has_else = false;                      // meaningful for kind == If
    std::set<std::string> predicate_variables;  // for `for`: init, cond and step
    std::vector<ControlStructure> children;
    int line = 0;

    bool is_loop() const { return vulnrank::is_loop(kind); }

    bool operator==(const ControlStructure&) const = default;
};

enum class PointerOpKind {
    MemberAccess,  // p->m
    Dereference,   // *p
    Increment,     // p++ / ++p
    Decrement,     // p-- / --p
    Subscript,     // p[i]
    OffsetArith,   // p + n, p - n, p += n, p -= n
};

inline const char* to_string(PointerOpKind k) {
    switch (k) {
    case PointerOpKind::MemberAccess: return "member_access";
    case PointerOpKind::Dereference: return "dereference";
    case PointerOpKind::Increment: return "increment";
    case PointerOpKind::Decrement: return "decrement";
    case PointerOpKind::Subscript: return "subscript";
    case PointerOpKind::OffsetArith: return "offset_arith";
    }
    return "?";
}

/// One pointer-arithmetic use of a pointer-typed variable.
struct PointerOperation {
    std::string variable;
    PointerOpKind op_kind = PointerOpKind::Dereference;
    int line = 0;

    bool operator==(const PointerOperation&) const = default;
};

/// One call expression. argument_variables holds the variables passed in the
/// argument list that are declared or visible in the enclosing function;
/// literals, member names and nested call names are excluded.
struct CallSite {
    std::string callee_name;
    std::set<std::string> argument_variables;
    int line = 0;

    bool operator==(const CallSite&) const = default;
};

/// Parsed representation of one function definition; immutable once built.
struct FunctionModel {
    FunctionId id;
    std::vector<std::string> parameters;          // declaration order
    std::vector<std::string> pointer_parameters;  // subset of parameters
    std::vector<ControlStructure> control_roots;
    std::vector<PointerOperation> pointer_ops;
    std::vector<CallSite> call_sites;
    int decision_points = 0;  // if/while/for/do-while/case plus ?: and && / ||
    int sloc = 0;             // signature line..closing brace, sans blank/comment lines
    int end_line = 0;

    bool operator==(const FunctionModel&) const = default;
};

enum class DiagnosticKind {
    RecoverySkipped,   // one function body could not be parsed; rest of file kept
    FileSkipped,       // whole file failed to lex/parse
    DuplicateEntry,    // repeated ground-truth row, deduplicated
};

struct Diagnostic {
    DiagnosticKind kind = DiagnosticKind::RecoverySkipped;
    std::string file;
    int line = 0;
    std::string message;
};

} // namespace vulnrank

#endif
