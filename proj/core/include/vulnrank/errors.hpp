#ifndef VULNRANK_ERRORS_HPP
#define VULNRANK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace vulnrank {

/// Unrecoverable syntax error while lexing/parsing one translation unit.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string file, int line, const std::string& what)
        : std::runtime_error(file + ":" + std::to_string(line) + ": " + what),
          file_(std::move(file)),
          line_(line) {}

    const std::string& file() const { return file_; }
    int line() const { return line_; }

private:
    std::string file_;
    int line_;
};

/// A ranking operation was given an empty function table.
class EmptyInput : public std::invalid_argument {
public:
    EmptyInput() : std::invalid_argument("function table is empty") {}
    explicit EmptyInput(const std::string& what) : std::invalid_argument(what) {}
};

/// A selection fraction outside (0, 1].
class InvalidFraction : public std::invalid_argument {
public:
    explicit InvalidFraction(double value)
        : std::invalid_argument("selection fraction must be in (0,1], got " +
                                std::to_string(value)) {}
};

/// Malformed ground-truth file.
class FormatError : public std::runtime_error {
public:
    FormatError(std::string file, int line, const std::string& what)
        : std::runtime_error(file + ":" + std::to_string(line) + ": " + what),
          file_(std::move(file)),
          line_(line) {}

    const std::string& file() const { return file_; }
    int line() const { return line_; }

private:
    std::string file_;
    int line_;
};

/// No ground-truth entry could be matched against the analyzed codebase.
class NoMatchedGroundTruth : public std::runtime_error {
public:
    NoMatchedGroundTruth()
        : std::runtime_error("no ground-truth entry matches any analyzed function") {}
};

} // namespace vulnrank

#endif
