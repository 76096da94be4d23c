#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace gsym {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
public:
    SyntaxError(std::size_t offset, std::vector<std::string> expected, const std::string& found);

    std::size_t offset() const { return offset_; }
    const std::vector<std::string>& expected() const { return expected_; }

private:
    std::size_t offset_;
    std::vector<std::string> expected_;
};

class UnknownSymbol : public Error {
public:
    explicit UnknownSymbol(const std::string& name)
        : Error("unknown symbol '" + name + "'"), name_(name) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

class DivisionByZeroSymbolic : public Error {
public:
    DivisionByZeroSymbolic() : Error("denominator normalizes to zero") {}
};

class UnboundSymbol : public Error {
public:
    explicit UnboundSymbol(const std::string& name) : Error("unbound symbol '" + name + "'") {}
};

/// Argument outside a function's real domain (ln at <= 0, bessely1 at <= 0, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

class NonConvergence : public Error {
public:
    using Error::Error;
};

class UnresolvedFuncSym : public Error {
public:
    explicit UnresolvedFuncSym(const std::string& name)
        : Error("no numeric callback for function symbol '" + name + "'") {}
};

}  // namespace gsym
